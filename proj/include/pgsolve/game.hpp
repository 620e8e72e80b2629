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

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pg {

/**
 * The two players. Even (player 0) wins an infinite play if the largest
 * color seen infinitely often is even; Odd (player 1) wins if it is odd.
 * A player who cannot move loses immediately.
 */
enum class Player : std::uint8_t { Even = 0, Odd = 1 };

constexpr Player opponent(Player p) noexcept
{
    return p == Player::Even ? Player::Odd : Player::Even;
}

constexpr int player_index(Player p) noexcept
{
    return p == Player::Even ? 0 : 1;
}

/// Player winning on the parity of a non-negative color.
constexpr Player parity_winner(int color) noexcept
{
    return (color & 1) == 0 ? Player::Even : Player::Odd;
}

inline const char* player_name(Player p) noexcept
{
    return p == Player::Even ? "even" : "odd";
}

/// Thrown when an operation would exceed its configured size budget
/// (register-game state cap, oracle strategy-space budget).
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * A finite two-player game graph with a vertex coloring.
 *
 * Vertices are dense ids 0..n-1. Successor lists are kept sorted and
 * duplicate-free when built through add_vertex/add_edge; the fields are
 * public so that files and tests can also assemble games directly and
 * run validate() on the result. Sinks (empty successor list) are allowed.
 *
 * Games are treated as immutable once built: every operation in this
 * library takes the game by const reference and returns fresh values,
 * so sharing a game between threads is safe.
 */
struct ParityGame {
    std::vector<Player> owner;
    std::vector<int> color;
    std::vector<std::vector<int>> succ;
    std::vector<std::string> names; // empty, or one entry per vertex ("" = unnamed)

    int size() const noexcept { return static_cast<int>(owner.size()); }

    bool has_vertex(int v) const noexcept { return v >= 0 && v < size(); }

    bool is_sink(int v) const { return succ[static_cast<std::size_t>(v)].empty(); }

    std::size_t edge_count() const noexcept
    {
        std::size_t m = 0;
        for (const auto& s : succ) m += s.size();
        return m;
    }

    int add_vertex(int vertex_color, Player vertex_owner, std::string name = {})
    {
        owner.push_back(vertex_owner);
        color.push_back(vertex_color);
        succ.emplace_back();
        if (!name.empty() || !names.empty()) {
            names.resize(owner.size());
            names.back() = std::move(name);
        }
        return size() - 1;
    }

    /// Inserts (u,v) keeping the successor list sorted; duplicate edges are ignored.
    void add_edge(int u, int v)
    {
        if (!has_vertex(u) || !has_vertex(v))
            throw std::invalid_argument("add_edge: vertex id out of range");
        auto& s = succ[static_cast<std::size_t>(u)];
        auto it = std::lower_bound(s.begin(), s.end(), v);
        if (it == s.end() || *it != v) s.insert(it, v);
    }

    bool has_edge(int u, int v) const
    {
        if (!has_vertex(u) || !has_vertex(v)) return false;
        const auto& s = succ[static_cast<std::size_t>(u)];
        return std::binary_search(s.begin(), s.end(), v);
    }

    /// Vertex name if present, otherwise the decimal id.
    std::string label(int v) const
    {
        if (static_cast<std::size_t>(v) < names.size() && !names[static_cast<std::size_t>(v)].empty())
            return names[static_cast<std::size_t>(v)];
        return std::to_string(v);
    }
};

/**
 * Game graph variant with colors on edges instead of vertices. The winner
 * of an infinite play is decided by the largest edge color seen infinitely
 * often; sinks lose for their owner as usual. Every edge carries exactly
 * one color.
 */
struct EdgeColoredGame {
    std::vector<Player> owner;
    // per vertex: (target, color) pairs sorted by target
    std::vector<std::vector<std::pair<int, int>>> succ;
    std::vector<std::string> names;

    int size() const noexcept { return static_cast<int>(owner.size()); }

    bool has_vertex(int v) const noexcept { return v >= 0 && v < size(); }

    bool is_sink(int v) const { return succ[static_cast<std::size_t>(v)].empty(); }

    std::size_t edge_count() const noexcept
    {
        std::size_t m = 0;
        for (const auto& s : succ) m += s.size();
        return m;
    }

    int add_vertex(Player vertex_owner, std::string name = {})
    {
        owner.push_back(vertex_owner);
        succ.emplace_back();
        if (!name.empty() || !names.empty()) {
            names.resize(owner.size());
            names.back() = std::move(name);
        }
        return size() - 1;
    }

    /// Inserts (u,v) with the given color; re-adding an existing edge replaces its color.
    void add_edge(int u, int v, int edge_color)
    {
        if (!has_vertex(u) || !has_vertex(v))
            throw std::invalid_argument("add_edge: vertex id out of range");
        auto& s = succ[static_cast<std::size_t>(u)];
        auto it = std::lower_bound(s.begin(), s.end(), std::pair<int, int>{v, INT32_MIN});
        if (it != s.end() && it->first == v)
            it->second = edge_color;
        else
            s.insert(it, {v, edge_color});
    }

    std::string label(int v) const
    {
        if (static_cast<std::size_t>(v) < names.size() && !names[static_cast<std::size_t>(v)].empty())
            return names[static_cast<std::size_t>(v)];
        return std::to_string(v);
    }
};

/**
 * A positional strategy for one player: a partial map from owned vertices
 * of the support to successors. moves has one entry per game vertex and
 * holds -1 where the strategy is undefined.
 */
struct PositionalStrategy {
    Player player = Player::Even;
    std::vector<int> support; // sorted vertex ids
    std::vector<int> moves;   // size n, -1 = undefined

    bool in_support(int v) const
    {
        return std::binary_search(support.begin(), support.end(), v);
    }

    int move(int v) const
    {
        return static_cast<std::size_t>(v) < moves.size() ? moves[static_cast<std::size_t>(v)] : -1;
    }
};

/**
 * Result of solving a parity game: the two winning regions (a partition of
 * the vertices) and a winning strategy for each player on their own region.
 */
struct SolveOutcome {
    std::vector<int> region_even; // sorted
    std::vector<int> region_odd;  // sorted
    PositionalStrategy strategy_even;
    PositionalStrategy strategy_odd;

    Player winner_of(int v) const
    {
        return std::binary_search(region_even.begin(), region_even.end(), v)
                   ? Player::Even
                   : Player::Odd;
    }
};

enum class ViolationKind { DanglingEdge, DuplicateEdge, NegativeColor };

struct Violation {
    ViolationKind kind;
    int vertex = -1;
    int target = -1;
    std::string message;
};

/**
 * Diagnostic check of the ParityGame invariants. Reports dangling edge
 * endpoints, duplicate edges (once per repeated pair), and negative colors.
 * An empty result means the game is well-formed.
 */
inline std::vector<Violation> validate(const ParityGame& g)
{
    std::vector<Violation> out;
    const int n = g.size();
    for (int v = 0; v < n; ++v) {
        if (g.color[static_cast<std::size_t>(v)] < 0) {
            out.push_back({ViolationKind::NegativeColor, v, -1,
                           "vertex " + g.label(v) + " has negative color "
                               + std::to_string(g.color[static_cast<std::size_t>(v)])});
        }
        std::vector<int> targets = g.succ[static_cast<std::size_t>(v)];
        std::sort(targets.begin(), targets.end());
        for (std::size_t i = 0; i < targets.size(); ++i) {
            const int w = targets[i];
            if (w < 0 || w >= n) {
                out.push_back({ViolationKind::DanglingEdge, v, w,
                               "edge (" + std::to_string(v) + "," + std::to_string(w)
                                   + ") leaves the vertex range"});
                continue;
            }
            if (i > 0 && targets[i - 1] == w) {
                if (i > 1 && targets[i - 2] == w) continue; // already reported
                out.push_back({ViolationKind::DuplicateEdge, v, w,
                               "duplicate edge (" + std::to_string(v) + ","
                                   + std::to_string(w) + ")"});
            }
        }
    }
    return out;
}

namespace detail {

/// Sorted list of the vertex ids for which flag != 0.
inline std::vector<int> mask_to_list(const std::vector<std::uint8_t>& mask)
{
    std::vector<int> out;
    for (std::size_t v = 0; v < mask.size(); ++v)
        if (mask[v]) out.push_back(static_cast<int>(v));
    return out;
}

inline void check_vertex_list(const ParityGame& g, const std::vector<int>& vs, const char* what)
{
    for (int v : vs)
        if (!g.has_vertex(v))
            throw std::invalid_argument(std::string(what) + ": vertex id " + std::to_string(v)
                                        + " out of range");
}

} // namespace detail

} // namespace pg
