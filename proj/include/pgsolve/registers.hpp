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

#include <bit>
#include <optional>
#include <unordered_map>

#include "pgsolve/game.hpp"
#include "pgsolve/transforms.hpp"
#include "pgsolve/zielonka.hpp"

namespace pg {

/// A state of the register game: a game vertex, the sorted register
/// contents, and the phase (reset states belong to Even, transition states
/// to the owner of the vertex).
struct RegisterState {
    enum class Phase : std::uint8_t { Reset, Transition };

    int vertex = 0;
    std::vector<int> registers; // non-decreasing
    Phase phase = Phase::Reset;

    friend bool operator==(const RegisterState& a, const RegisterState& b) = default;
};

inline constexpr std::size_t kDefaultStateCap = 5'000'000;

/**
 * The reachable part of the r-register game, interned into a dense
 * edge-colored game so the ordinary solvers apply unchanged. Edges
 * alternate between Even's resets (color 2j when register j held an even
 * value, 2j+1 when odd) and transitions (color 0); reset labels are kept
 * per edge for inspection only.
 */
struct RegisterGame {
    EdgeColoredGame graph;
    std::vector<RegisterState> states; // id -> state
    std::vector<std::vector<int>> edge_label; // aligned with graph.succ; 0 = transition, j = reset(j)
    int initial = 0;
    int register_count = 0;

    /// Dense id of a state, or -1 when it is not reachable.
    int state_id(const RegisterState& s) const
    {
        auto it = index_.find(s);
        return it == index_.end() ? -1 : it->second;
    }

    struct StateHash {
        std::size_t operator()(const RegisterState& s) const noexcept
        {
            std::size_t h = static_cast<std::size_t>(s.vertex) * 2
                            + (s.phase == RegisterState::Phase::Reset ? 0 : 1);
            for (int x : s.registers)
                h = h * 1000003u + static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            return h;
        }
    };

    std::unordered_map<RegisterState, int, StateHash> index_;
};

/// Human-readable state name, e.g. "(a|0,2|s)". Used when exporting
/// register games through the game file formats.
inline std::string register_state_name(const ParityGame& g, const RegisterState& s)
{
    std::string out = "(" + g.label(s.vertex) + "|";
    for (std::size_t i = 0; i < s.registers.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(s.registers[i]);
    }
    out += s.phase == RegisterState::Phase::Reset ? "|s)" : "|t)";
    return out;
}

/// Fills the underlying graph's vertex names with state tuples.
inline void annotate_state_names(RegisterGame& rg, const ParityGame& g)
{
    rg.graph.names.resize(rg.states.size());
    for (std::size_t i = 0; i < rg.states.size(); ++i)
        rg.graph.names[i] = register_state_name(g, rg.states[i]);
}

/**
 * Breadth-first expansion of the register game from (start, x, reset),
 * producing exactly the reachable states. A reset state (v,x,s) has one
 * edge per register j to (v, (0,x_1,..,x_{j-1},x_{j+1},..,x_r), t); a
 * transition state (v,x,t) has one edge per game edge (v,w) to (w,y,s)
 * with y_j = max(color(w), x_j). Both steps preserve sortedness.
 *
 * When two resets j < j' coincide on the same target (possible when
 * x_j = x_{j'}, which forces equal parities and hence colors of the same
 * parity), the edges collapse to one and the color kept is the one Even
 * prefers: the larger even color, or the smaller odd one. Either choice of
 * play was available to Even only, so the winner is unchanged.
 *
 * Throws CapacityError when the expansion would exceed state_cap states.
 */
inline RegisterGame expand_register_game(const ParityGame& g, int start, std::vector<int> x,
                                         int r, std::size_t state_cap = kDefaultStateCap)
{
    if (!g.has_vertex(start))
        throw std::invalid_argument("expand_register_game: start vertex out of range");
    if (r < 1) throw std::invalid_argument("expand_register_game: need at least one register");
    if (static_cast<int>(x.size()) != r)
        throw std::invalid_argument("expand_register_game: initial vector must have length r");
    if (!std::is_sorted(x.begin(), x.end()) || (!x.empty() && x.front() < 0))
        throw std::invalid_argument(
            "expand_register_game: initial vector must be sorted and non-negative");

    RegisterGame rg;
    rg.register_count = r;

    auto intern = [&](RegisterState&& s) {
        auto [it, fresh] = rg.index_.try_emplace(std::move(s), static_cast<int>(rg.states.size()));
        if (fresh) {
            if (rg.states.size() >= state_cap)
                throw CapacityError("expand_register_game: state cap of "
                                    + std::to_string(state_cap) + " states exceeded");
            rg.states.push_back(it->first);
            const auto& st = rg.states.back();
            rg.graph.add_vertex(st.phase == RegisterState::Phase::Reset
                                    ? Player::Even
                                    : g.owner[static_cast<std::size_t>(st.vertex)]);
            rg.edge_label.emplace_back();
        }
        return it->second;
    };

    rg.initial = intern(RegisterState{start, std::move(x), RegisterState::Phase::Reset});

    auto add_edge = [&](int from, int to, int edge_color, int label) {
        auto& adj = rg.graph.succ[static_cast<std::size_t>(from)];
        auto& labels = rg.edge_label[static_cast<std::size_t>(from)];
        auto it = std::lower_bound(adj.begin(), adj.end(), std::pair<int, int>{to, INT32_MIN});
        if (it != adj.end() && it->first == to) {
            // collapsed parallel resets; keep Even's preferred color
            assert(((it->second ^ edge_color) & 1) == 0);
            const bool is_even = (edge_color & 1) == 0;
            if ((is_even && edge_color > it->second) || (!is_even && edge_color < it->second)) {
                it->second = edge_color;
                labels[static_cast<std::size_t>(it - adj.begin())] = label;
            }
            return;
        }
        labels.insert(labels.begin() + (it - adj.begin()), label);
        adj.insert(it, {to, edge_color});
    };

    for (std::size_t head = 0; head < rg.states.size(); ++head) {
        // states may reallocate while we append; copy the current one
        const RegisterState s = rg.states[head];
        const int id = static_cast<int>(head);
        if (s.phase == RegisterState::Phase::Reset) {
            for (int j = 1; j <= r; ++j) {
                const int old = s.registers[static_cast<std::size_t>(j - 1)];
                RegisterState t;
                t.vertex = s.vertex;
                t.phase = RegisterState::Phase::Transition;
                t.registers.reserve(static_cast<std::size_t>(r));
                t.registers.push_back(0);
                for (int k = 0; k < r; ++k)
                    if (k != j - 1) t.registers.push_back(s.registers[static_cast<std::size_t>(k)]);
                const int tid = intern(std::move(t));
                add_edge(id, tid, (old & 1) == 0 ? 2 * j : 2 * j + 1, j);
            }
        } else {
            for (int w : g.succ[static_cast<std::size_t>(s.vertex)]) {
                RegisterState t;
                t.vertex = w;
                t.phase = RegisterState::Phase::Reset;
                t.registers.resize(s.registers.size());
                const int cw = g.color[static_cast<std::size_t>(w)];
                for (std::size_t k = 0; k < s.registers.size(); ++k)
                    t.registers[k] = std::max(cw, s.registers[k]);
                const int tid = intern(std::move(t));
                add_edge(id, tid, 0, 0);
            }
        }
    }
    return rg;
}

/// Smallest register count r with n < 2^r.
inline int default_register_count(int n)
{
    assert(n >= 1);
    return std::bit_width(static_cast<unsigned>(n));
}

struct RegisterSolveResult {
    Player winner = Player::Even;
    int registers = 0;
    std::vector<int> initial_registers;
    std::size_t states = 0;
    std::size_t edges = 0;
    ZielonkaStats zielonka;
};

/**
 * Quasi-polynomial solving pipeline: expand the register game, re-express
 * the edge colors as subdivision vertices, solve with Zielonka's algorithm,
 * and report the winner at the initial state. With r registers such that
 * n < 2^r this is the winner of the original game at the start vertex;
 * r defaults to the smallest such count and the initial vector to zeros.
 */
inline RegisterSolveResult solve_via_registers(const ParityGame& g, int start,
                                               std::optional<int> r = {},
                                               std::optional<std::vector<int>> x = {},
                                               std::size_t state_cap = kDefaultStateCap)
{
    if (!g.has_vertex(start))
        throw std::invalid_argument("solve_via_registers: start vertex out of range");
    RegisterSolveResult res;
    res.registers = r.value_or(default_register_count(g.size()));
    res.initial_registers =
        x.value_or(std::vector<int>(static_cast<std::size_t>(res.registers), 0));

    RegisterGame rg =
        expand_register_game(g, start, res.initial_registers, res.registers, state_cap);
    res.states = rg.states.size();
    res.edges = rg.graph.edge_count();

    const ParityGame expanded = edge_to_vertex_colored(rg.graph, /*name_subdivisions=*/false);
    ZielonkaSolver solver;
    const SolveOutcome outcome = solver.solve(expanded);
    res.zielonka = solver.stats();
    res.winner = outcome.winner_of(rg.initial);
    return res;
}

/**
 * The register lower-bound family: G_1 is a 2-cycle with colors {1,2}; G_r
 * glues two copies of G_{r-1} with two fresh vertices of colors 2r-1 and
 * 2r, wired so the whole graph stays strongly connected (left top vertex ->
 * color 2r-1 -> right top vertex, right top vertex -> color 2r -> left top
 * vertex). Every vertex belongs to Odd; the graph has 2^{r+1} - 2 vertices
 * and exactly one vertex each of colors 2r and 2r-1. Even wins everywhere,
 * but needs more than r registers to win the register game.
 */
inline ParityGame generate_lehtinen_family(int r)
{
    if (r < 1) throw std::invalid_argument("generate_lehtinen_family: need r >= 1");
    ParityGame g;
    g.add_vertex(1, Player::Odd);
    g.add_vertex(2, Player::Odd);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    int top = 1; // vertex with the current maximal color 2k
    for (int k = 2; k <= r; ++k) {
        const int n = g.size();
        // append a second copy of the current graph
        for (int v = 0; v < n; ++v) g.add_vertex(g.color[static_cast<std::size_t>(v)], Player::Odd);
        for (int v = 0; v < n; ++v)
            for (int w : g.succ[static_cast<std::size_t>(v)]) g.add_edge(v + n, w + n);
        const int odd_hub = g.add_vertex(2 * k - 1, Player::Odd);
        const int even_hub = g.add_vertex(2 * k, Player::Odd);
        const int left_top = top;
        const int right_top = top + n;
        g.add_edge(left_top, odd_hub);
        g.add_edge(odd_hub, right_top);
        g.add_edge(right_top, even_hub);
        g.add_edge(even_hub, left_top);
        top = even_hub;
    }
    return g;
}

} // namespace pg
