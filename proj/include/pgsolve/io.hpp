/*
 * Copyright 2026 The pgsolve authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>

#include "pgsolve/game.hpp"

namespace pg {

/// Parse failure with a 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    int line() const noexcept { return line_; }

private:
    int line_ = 0;
};

struct ParseResult {
    ParityGame game;
    std::vector<int> original_ids;     // dense id -> id as written in the file
    std::vector<std::string> warnings; // duplicate edges, header mismatches
};

namespace detail {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;

    void skip_ws()
    {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r'
                                     || text[pos] == '\n')) {
            if (text[pos] == '\n') ++line;
            ++pos;
        }
    }

    bool done()
    {
        skip_ws();
        return pos >= text.size();
    }

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
};

inline long long parse_int(Cursor& c, const char* what)
{
    c.skip_ws();
    long long value = 0;
    auto [end, ec] = std::from_chars(c.text.data() + c.pos, c.text.data() + c.text.size(), value);
    if (ec != std::errc{} || end == c.text.data() + c.pos)
        throw ParseError(c.line, std::string("expected ") + what);
    c.pos = static_cast<std::size_t>(end - c.text.data());
    return value;
}

inline bool try_word(Cursor& c, std::string_view word)
{
    c.skip_ws();
    if (c.text.substr(c.pos, word.size()) != word) return false;
    const std::size_t after = c.pos + word.size();
    if (after < c.text.size()) {
        const char ch = c.text[after];
        if (ch != ' ' && ch != '\t' && ch != '\r' && ch != '\n') return false;
    }
    c.pos = after;
    return true;
}

} // namespace detail

/**
 * Parses the game file format: an optional "parity <max-id>;" header
 * followed by one record per vertex,
 *
 *   <id> <color> <owner 0|1> <successor,successor,...> ["name"];
 *
 * The successor list may be empty (the vertex is then a sink). Parsing is
 * whitespace tolerant; ids may be sparse and are remapped to dense ids in
 * record order (the mapping is returned). Duplicate edges are dropped with
 * a warning; duplicate ids and malformed records are errors carrying the
 * line number.
 */
inline ParseResult parse_game(std::string_view text)
{
    ParseResult res;
    detail::Cursor c{text};

    struct Record {
        long long id;
        int color;
        Player owner;
        std::vector<long long> succ;
        std::string name;
        int line;
    };
    std::vector<Record> records;
    std::unordered_map<long long, int> dense;

    if (detail::try_word(c, "parity")) {
        const long long max_id = detail::parse_int(c, "max vertex id after 'parity'");
        c.skip_ws();
        if (c.peek() != ';') throw ParseError(c.line, "expected ';' after header");
        ++c.pos;
        (void)max_id;
    }

    while (!c.done()) {
        Record rec;
        rec.line = c.line;
        rec.id = detail::parse_int(c, "vertex id");
        if (rec.id < 0) throw ParseError(rec.line, "vertex id must be non-negative");
        const long long color = detail::parse_int(c, "color");
        if (color < 0) throw ParseError(c.line, "color must be non-negative");
        rec.color = static_cast<int>(color);
        const long long owner = detail::parse_int(c, "owner (0 or 1)");
        if (owner != 0 && owner != 1) throw ParseError(c.line, "owner must be 0 or 1");
        rec.owner = owner == 0 ? Player::Even : Player::Odd;

        c.skip_ws();
        if (c.peek() != ';' && c.peek() != '"') {
            rec.succ.push_back(detail::parse_int(c, "successor id"));
            for (;;) {
                c.skip_ws();
                if (c.peek() != ',') break;
                ++c.pos;
                rec.succ.push_back(detail::parse_int(c, "successor id after ','"));
            }
        }
        c.skip_ws();
        if (c.peek() == '"') {
            ++c.pos;
            const std::size_t start = c.pos;
            while (c.pos < text.size() && text[c.pos] != '"' && text[c.pos] != '\n') ++c.pos;
            if (c.peek() != '"') throw ParseError(c.line, "unterminated vertex name");
            rec.name = std::string(text.substr(start, c.pos - start));
            ++c.pos;
        }
        c.skip_ws();
        if (c.peek() != ';') throw ParseError(c.line, "expected ';' at end of record");
        ++c.pos;

        if (!dense.emplace(rec.id, static_cast<int>(records.size())).second)
            throw ParseError(rec.line, "duplicate vertex id " + std::to_string(rec.id));
        records.push_back(std::move(rec));
    }

    auto& g = res.game;
    bool any_name = false;
    for (const auto& rec : records) {
        g.add_vertex(rec.color, rec.owner, rec.name);
        res.original_ids.push_back(static_cast<int>(rec.id));
        any_name |= !rec.name.empty();
    }
    if (any_name) g.names.resize(static_cast<std::size_t>(g.size()));

    for (std::size_t i = 0; i < records.size(); ++i) {
        for (long long target : records[i].succ) {
            auto it = dense.find(target);
            if (it == dense.end())
                throw ParseError(records[i].line,
                                 "successor " + std::to_string(target) + " is not a vertex");
            if (g.has_edge(static_cast<int>(i), it->second)) {
                res.warnings.push_back("line " + std::to_string(records[i].line)
                                       + ": duplicate edge " + std::to_string(records[i].id)
                                       + " -> " + std::to_string(target) + " ignored");
                continue;
            }
            g.add_edge(static_cast<int>(i), it->second);
        }
    }
    return res;
}

/**
 * Emits the normalized game file: header, then one record per vertex in id
 * order with sorted successor lists. Inverse of parse_game up to
 * normalization and byte-deterministic.
 */
inline std::string emit_game(const ParityGame& g)
{
    std::ostringstream out;
    const int n = g.size();
    if (n == 0) return "";
    out << "parity " << n - 1 << ";\n";
    for (int v = 0; v < n; ++v) {
        const auto sv = static_cast<std::size_t>(v);
        out << v << ' ' << g.color[sv] << ' ' << player_index(g.owner[sv]) << ' ';
        for (std::size_t i = 0; i < g.succ[sv].size(); ++i) {
            if (i > 0) out << ',';
            out << g.succ[sv][i];
        }
        if (sv < g.names.size() && !g.names[sv].empty()) out << " \"" << g.names[sv] << '"';
        out << ";\n";
    }
    return out.str();
}

/**
 * Graphviz rendering: Even vertices are drawn round, Odd vertices square.
 * With a solve outcome the regions become clusters and both winning
 * strategies' moves are drawn bold. Output is deterministic.
 */
inline std::string emit_dot(const ParityGame& g, const SolveOutcome* outcome = nullptr)
{
    std::ostringstream out;
    out << "digraph game {\n";
    auto node = [&](int v) {
        const auto sv = static_cast<std::size_t>(v);
        out << "  v" << v << " [label=\"" << g.label(v) << ":" << g.color[sv] << "\", shape="
            << (g.owner[sv] == Player::Even ? "ellipse" : "box") << "];\n";
    };
    if (outcome) {
        out << "  subgraph cluster_even {\n    label=\"won by Even\";\n";
        for (int v : outcome->region_even) node(v);
        out << "  }\n";
        out << "  subgraph cluster_odd {\n    label=\"won by Odd\";\n";
        for (int v : outcome->region_odd) node(v);
        out << "  }\n";
    } else {
        for (int v = 0; v < g.size(); ++v) node(v);
    }
    for (int v = 0; v < g.size(); ++v) {
        for (int w : g.succ[static_cast<std::size_t>(v)]) {
            const bool bold = outcome
                              && (outcome->strategy_even.move(v) == w
                                  || outcome->strategy_odd.move(v) == w);
            out << "  v" << v << " -> v" << w;
            if (bold) out << " [style=bold]";
            out << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

/**
 * Strategy file: a player line, a support line, and one "u -> v" line per
 * move, all using vertex ids.
 */
inline std::string emit_strategy(const PositionalStrategy& s)
{
    std::ostringstream out;
    out << "player " << player_name(s.player) << "\n";
    out << "support";
    for (int v : s.support) out << ' ' << v;
    out << "\n";
    for (int v : s.support)
        if (s.move(v) >= 0) out << v << " -> " << s.move(v) << "\n";
    return out.str();
}

/// Parses the strategy format back; n is the vertex count of the game the
/// strategy belongs to.
inline PositionalStrategy parse_strategy(std::string_view text, int n)
{
    PositionalStrategy s;
    s.moves.assign(static_cast<std::size_t>(n), -1);
    detail::Cursor c{text};

    if (!detail::try_word(c, "player")) throw ParseError(c.line, "expected 'player even|odd'");
    if (detail::try_word(c, "even"))
        s.player = Player::Even;
    else if (detail::try_word(c, "odd"))
        s.player = Player::Odd;
    else
        throw ParseError(c.line, "player must be 'even' or 'odd'");

    if (!detail::try_word(c, "support")) throw ParseError(c.line, "expected 'support' line");
    const int support_line = c.line;
    while (!c.done() && c.line == support_line)
        s.support.push_back(static_cast<int>(detail::parse_int(c, "support vertex id")));

    while (!c.done()) {
        const int from = static_cast<int>(detail::parse_int(c, "move source vertex"));
        c.skip_ws();
        if (c.text.substr(c.pos, 2) != "->") throw ParseError(c.line, "expected '->'");
        c.pos += 2;
        const int to = static_cast<int>(detail::parse_int(c, "move target vertex"));
        if (from < 0 || from >= n || to < 0 || to >= n)
            throw ParseError(c.line, "move vertex out of range");
        s.moves[static_cast<std::size_t>(from)] = to;
    }

    std::sort(s.support.begin(), s.support.end());
    s.support.erase(std::unique(s.support.begin(), s.support.end()), s.support.end());
    if (!s.support.empty() && (s.support.front() < 0 || s.support.back() >= n))
        throw ParseError(1, "support vertex out of range");
    return s;
}

} // namespace pg
