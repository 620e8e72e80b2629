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

#include "pgsolve/game.hpp"

namespace pg {

/// How a single play was decided: it either ran into a sink (the sink's
/// owner loses, witness = sink vertex) or entered a cycle (winner by the
/// parity of the cycle's maximal color, witness = that color).
struct PlayVerdict {
    enum class Kind { SinkLoss, CycleParity };
    Player winner = Player::Even;
    Kind kind = Kind::SinkLoss;
    int witness = -1;
};

/**
 * Follows the unique play induced by two total move choices from the given
 * start. Each strategy vector must assign a legal successor to every
 * reachable non-sink vertex of its player; a missing or illegal move is
 * rejected. The play reaches a sink or closes a lasso within n steps of
 * entering the cycle, 2n steps overall.
 */
inline PlayVerdict evaluate_play(const ParityGame& g, const std::vector<int>& even_moves,
                                 const std::vector<int>& odd_moves, int start)
{
    if (!g.has_vertex(start)) throw std::invalid_argument("evaluate_play: bad start vertex");
    const int n = g.size();
    std::vector<int> seen_at(static_cast<std::size_t>(n), -1);
    std::vector<int> path;
    path.reserve(static_cast<std::size_t>(n) + 1);

    int v = start;
    for (;;) {
        const auto sv = static_cast<std::size_t>(v);
        if (seen_at[sv] >= 0) {
            int top = -1;
            for (std::size_t i = static_cast<std::size_t>(seen_at[sv]); i < path.size(); ++i)
                top = std::max(top, g.color[static_cast<std::size_t>(path[i])]);
            return {parity_winner(top), PlayVerdict::Kind::CycleParity, top};
        }
        if (g.is_sink(v))
            return {opponent(g.owner[sv]), PlayVerdict::Kind::SinkLoss, v};
        seen_at[sv] = static_cast<int>(path.size());
        path.push_back(v);
        const auto& moves = g.owner[sv] == Player::Even ? even_moves : odd_moves;
        const int next = static_cast<std::size_t>(v) < moves.size() ? moves[sv] : -1;
        if (next < 0 || !g.has_edge(v, next))
            throw std::invalid_argument("evaluate_play: strategy has no legal move at vertex "
                                        + g.label(v));
        v = next;
    }
}

struct BruteForceOptions {
    // Upper bound on the positional strategy space of each player (product
    // of out-degrees over owned non-sink vertices).
    std::uint64_t budget = std::uint64_t{1} << 20;
};

/**
 * Ground-truth solver by exhaustive positional-strategy enumeration. A
 * vertex is in Even's region iff some positional Even strategy wins the
 * induced play against every positional Odd strategy from it; positional
 * determinacy makes this the true winning region. The returned strategies
 * are enumerated witnesses that win on the whole region.
 *
 * Throws CapacityError when a player's strategy space exceeds the budget.
 */
class BruteForceSolver {
public:
    explicit BruteForceSolver(BruteForceOptions options = {}) : options_(options) {}

    SolveOutcome solve(const ParityGame& g)
    {
        const int n = g.size();
        SolveOutcome out;
        out.strategy_even.player = Player::Even;
        out.strategy_odd.player = Player::Odd;
        out.strategy_even.moves.assign(static_cast<std::size_t>(n), -1);
        out.strategy_odd.moves.assign(static_cast<std::size_t>(n), -1);
        if (n == 0) return out;

        collect_choices(g, Player::Even, even_vertices_, even_space_);
        collect_choices(g, Player::Odd, odd_vertices_, odd_space_);

        // winner-per-vertex for all strategy pairs, grouped by Even strategy
        std::vector<std::uint8_t> best(static_cast<std::size_t>(n)); // 1 = Even wins v
        std::vector<std::uint8_t> region_even(static_cast<std::size_t>(n), 0);
        std::vector<std::uint8_t> region_odd(static_cast<std::size_t>(n), 0);

        for_each_strategy(g, Player::Even, [&](const std::vector<int>& se) {
            std::fill(best.begin(), best.end(), 1);
            for_each_strategy(g, Player::Odd, [&](const std::vector<int>& so) {
                eval_pair(g, se, so);
                for (int v = 0; v < n; ++v)
                    if (pair_winner_[static_cast<std::size_t>(v)] != Player::Even)
                        best[static_cast<std::size_t>(v)] = 0;
            });
            for (int v = 0; v < n; ++v)
                region_even[static_cast<std::size_t>(v)] |= best[static_cast<std::size_t>(v)];
        });
        for_each_strategy(g, Player::Odd, [&](const std::vector<int>& so) {
            std::fill(best.begin(), best.end(), 1);
            for_each_strategy(g, Player::Even, [&](const std::vector<int>& se) {
                eval_pair(g, se, so);
                for (int v = 0; v < n; ++v)
                    if (pair_winner_[static_cast<std::size_t>(v)] != Player::Odd)
                        best[static_cast<std::size_t>(v)] = 0;
            });
            for (int v = 0; v < n; ++v)
                region_odd[static_cast<std::size_t>(v)] |= best[static_cast<std::size_t>(v)];
        });

        out.region_even = detail::mask_to_list(region_even);
        out.region_odd = detail::mask_to_list(region_odd);
        out.strategy_even.support = out.region_even;
        out.strategy_odd.support = out.region_odd;

        // A maximal winning strategy covers the whole region; find one such
        // witness per player by rescanning the enumeration.
        find_witness(g, Player::Even, region_even, out.strategy_even);
        find_witness(g, Player::Odd, region_odd, out.strategy_odd);
        return out;
    }

private:
    template <typename F>
    void for_each_strategy(const ParityGame& g, Player p, F&& f)
    {
        const auto& verts = p == Player::Even ? even_vertices_ : odd_vertices_;
        std::vector<int> pick(verts.size(), 0);
        std::vector<int> moves(static_cast<std::size_t>(g.size()), -1);
        for (;;) {
            for (std::size_t i = 0; i < verts.size(); ++i)
                moves[static_cast<std::size_t>(verts[i])] =
                    g.succ[static_cast<std::size_t>(verts[i])][static_cast<std::size_t>(pick[i])];
            f(moves);
            std::size_t i = 0;
            for (; i < verts.size(); ++i) {
                if (++pick[i] < static_cast<int>(g.succ[static_cast<std::size_t>(verts[i])].size()))
                    break;
                pick[i] = 0;
            }
            if (i == verts.size()) return; // odometer wrapped: all combinations done
        }
    }

    // Winner of the unique play from every vertex under the combined
    // (functional) move map, by walking with an explicit stack.
    void eval_pair(const ParityGame& g, const std::vector<int>& se, const std::vector<int>& so)
    {
        const int n = g.size();
        pair_winner_.resize(static_cast<std::size_t>(n));
        state_.assign(static_cast<std::size_t>(n), 0); // 0 unknown, 1 on stack, 2 done
        stack_.clear();
        for (int s = 0; s < n; ++s) {
            if (state_[static_cast<std::size_t>(s)] == 2) continue;
            int v = s;
            while (state_[static_cast<std::size_t>(v)] == 0) {
                state_[static_cast<std::size_t>(v)] = 1;
                stack_.push_back(v);
                if (g.is_sink(v)) break;
                v = (g.owner[static_cast<std::size_t>(v)] == Player::Even ? se : so)
                        [static_cast<std::size_t>(v)];
            }
            Player w;
            const auto sv = static_cast<std::size_t>(v);
            if (state_[sv] == 2) {
                w = pair_winner_[sv]; // ran into an already solved tail
            } else if (g.is_sink(v)) {
                w = opponent(g.owner[sv]);
            } else {
                // v closes a cycle inside the current stack; every stacked
                // vertex funnels into that cycle and shares its winner
                std::size_t at = stack_.size();
                int top = -1;
                do {
                    --at;
                    top = std::max(top, g.color[static_cast<std::size_t>(stack_[at])]);
                } while (stack_[at] != v);
                w = parity_winner(top);
            }
            for (int u : stack_) {
                pair_winner_[static_cast<std::size_t>(u)] = w;
                state_[static_cast<std::size_t>(u)] = 2;
            }
            stack_.clear();
        }
    }

    void collect_choices(const ParityGame& g, Player p, std::vector<int>& verts,
                         std::uint64_t& space)
    {
        verts.clear();
        space = 1;
        for (int v = 0; v < g.size(); ++v) {
            const auto sv = static_cast<std::size_t>(v);
            if (g.owner[sv] != p || g.succ[sv].empty()) continue;
            verts.push_back(v);
            const auto deg = static_cast<std::uint64_t>(g.succ[sv].size());
            if (space > options_.budget / deg)
                throw CapacityError("brute_force_solve: strategy space of player "
                                    + std::string(player_name(p)) + " exceeds budget "
                                    + std::to_string(options_.budget));
            space *= deg;
        }
    }

    void find_witness(const ParityGame& g, Player p, const std::vector<std::uint8_t>& region,
                      PositionalStrategy& strategy)
    {
        const int n = g.size();
        std::vector<std::uint8_t> best(static_cast<std::size_t>(n));
        bool found = false;
        for_each_strategy(g, p, [&](const std::vector<int>& mine) {
            if (found) return;
            std::fill(best.begin(), best.end(), 1);
            for_each_strategy(g, opponent(p), [&](const std::vector<int>& theirs) {
                const auto& se = p == Player::Even ? mine : theirs;
                const auto& so = p == Player::Even ? theirs : mine;
                eval_pair(g, se, so);
                for (int v = 0; v < n; ++v)
                    if (pair_winner_[static_cast<std::size_t>(v)] != p)
                        best[static_cast<std::size_t>(v)] = 0;
            });
            for (int v = 0; v < n; ++v)
                if (region[static_cast<std::size_t>(v)] && !best[static_cast<std::size_t>(v)])
                    return; // does not cover the whole region
            found = true;
            for (int v = 0; v < n; ++v) {
                const auto sv = static_cast<std::size_t>(v);
                strategy.moves[sv] =
                    region[sv] && g.owner[sv] == p && !g.succ[sv].empty() ? mine[sv] : -1;
            }
        });
        assert(found || std::all_of(region.begin(), region.end(),
                                    [](std::uint8_t b) { return !b; }));
    }

    BruteForceOptions options_;
    std::vector<int> even_vertices_, odd_vertices_;
    std::uint64_t even_space_ = 1, odd_space_ = 1;
    std::vector<Player> pair_winner_;
    std::vector<std::uint8_t> state_;
    std::vector<int> stack_;
};

inline SolveOutcome brute_force_solve(const ParityGame& g, BruteForceOptions options = {})
{
    BruteForceSolver solver(options);
    return solver.solve(g);
}

/// Outcome of verify_strategy: ok, or a concrete counterexample (an edge
/// that leaves the support, a support sink owned by the player, or a cycle
/// whose maximal color has the opponent's parity).
struct VerifyResult {
    enum class Kind { Ok, EscapingEdge, LosingSink, LosingCycle };
    Kind kind = Kind::Ok;
    int from = -1;
    int to = -1;
    std::vector<int> cycle;

    bool ok() const { return kind == Kind::Ok; }

    std::string describe(const ParityGame& g) const
    {
        switch (kind) {
        case Kind::Ok: return "ok";
        case Kind::EscapingEdge:
            return "edge " + g.label(from) + " -> " + g.label(to) + " leaves the support";
        case Kind::LosingSink:
            return "sink " + g.label(from) + " in the support is owned by the player";
        case Kind::LosingCycle: {
            std::string s = "losing cycle:";
            for (int v : cycle) s += " " + g.label(v);
            return s;
        }
        }
        return "ok";
    }
};

namespace detail {

/// Iterative Tarjan SCC over a restricted successor view. next(v) yields
/// successors of v; include(v) selects the subgraph. comp[v] = component id
/// or -1 outside the subgraph. Components are numbered in reverse
/// topological order of discovery.
class SccDecomposition {
public:
    template <typename Include, typename Successors>
    void run(int n, Include include, Successors successors)
    {
        comp.assign(static_cast<std::size_t>(n), -1);
        index_.assign(static_cast<std::size_t>(n), -1);
        low_.assign(static_cast<std::size_t>(n), 0);
        on_stack_.assign(static_cast<std::size_t>(n), 0);
        stack_.clear();
        count = 0;
        int next_index = 0;
        struct Frame {
            int v;
            std::size_t edge;
        };
        std::vector<Frame> call;
        for (int root = 0; root < n; ++root) {
            if (!include(root) || index_[static_cast<std::size_t>(root)] >= 0) continue;
            call.push_back({root, 0});
            while (!call.empty()) {
                auto& [v, edge] = call.back();
                const auto sv = static_cast<std::size_t>(v);
                if (edge == 0) {
                    index_[sv] = low_[sv] = next_index++;
                    stack_.push_back(v);
                    on_stack_[sv] = 1;
                }
                const auto& sadj = successors(v);
                bool descended = false;
                while (edge < sadj.size()) {
                    const int w = sadj[edge++];
                    const auto sw = static_cast<std::size_t>(w);
                    if (!include(w)) continue;
                    if (index_[sw] < 0) {
                        call.push_back({w, 0});
                        descended = true;
                        break;
                    }
                    if (on_stack_[sw]) low_[sv] = std::min(low_[sv], index_[sw]);
                }
                if (descended) continue;
                if (low_[sv] == index_[sv]) {
                    int w;
                    do {
                        w = stack_.back();
                        stack_.pop_back();
                        on_stack_[static_cast<std::size_t>(w)] = 0;
                        comp[static_cast<std::size_t>(w)] = count;
                    } while (w != v);
                    ++count;
                }
                const int finished = v;
                call.pop_back();
                if (!call.empty()) {
                    const auto sp = static_cast<std::size_t>(call.back().v);
                    low_[sp] = std::min(low_[sp], low_[static_cast<std::size_t>(finished)]);
                }
            }
        }
    }

    std::vector<int> comp;
    int count = 0;

private:
    std::vector<int> index_, low_;
    std::vector<std::uint8_t> on_stack_;
    std::vector<int> stack_;
};

} // namespace detail

/**
 * Checks that a positional strategy is winning on its support. The player's
 * owned edges inside the support are restricted to the strategy's moves
 * (vertices with an undefined move keep all their edges) and the verifier
 * requires:
 *   (a) every restricted edge from a support vertex stays in the support,
 *   (b) every sink in the support is owned by the opponent,
 *   (c) no cycle inside the support has a maximal color of the opponent's
 *       parity, checked per color threshold via strongly-connected-component
 *       decomposition.
 * The support-closure requirement (a) is slightly stricter than play-based
 * winning, which tolerates leaving and re-entering the support; every
 * solver in this library emits closed strategies.
 *
 * Malformed strategies (moves at unowned or unsupported vertices, moves
 * along non-edges) are rejected with std::invalid_argument.
 */
inline VerifyResult verify_strategy(const ParityGame& g, const PositionalStrategy& s)
{
    const int n = g.size();
    if (!std::is_sorted(s.support.begin(), s.support.end())
        || std::adjacent_find(s.support.begin(), s.support.end()) != s.support.end())
        throw std::invalid_argument("verify_strategy: support must be sorted and duplicate-free");
    detail::check_vertex_list(g, s.support, "verify_strategy");
    if (s.moves.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("verify_strategy: moves must have one entry per vertex");

    std::vector<std::uint8_t> in_support(static_cast<std::size_t>(n), 0);
    for (int v : s.support) in_support[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < n; ++v) {
        const int m = s.moves[static_cast<std::size_t>(v)];
        if (m < 0) continue;
        if (!in_support[static_cast<std::size_t>(v)] || g.owner[static_cast<std::size_t>(v)] != s.player)
            throw std::invalid_argument("verify_strategy: move at vertex " + g.label(v)
                                        + " outside the owned support");
        if (!g.has_edge(v, m))
            throw std::invalid_argument("verify_strategy: move " + g.label(v) + " -> "
                                        + g.label(m) + " is not an edge");
    }

    // Restricted successor view inside the support.
    std::vector<std::vector<int>> radj(static_cast<std::size_t>(n));
    for (int v : s.support) {
        const auto sv = static_cast<std::size_t>(v);
        const int m = g.owner[sv] == s.player ? s.moves[sv] : -1;
        if (m >= 0) {
            if (!in_support[static_cast<std::size_t>(m)])
                return {VerifyResult::Kind::EscapingEdge, v, m, {}};
            radj[sv].push_back(m);
        } else {
            for (int w : g.succ[sv]) {
                if (!in_support[static_cast<std::size_t>(w)])
                    return {VerifyResult::Kind::EscapingEdge, v, w, {}};
                radj[sv].push_back(w);
            }
        }
        if (g.succ[sv].empty() && g.owner[sv] == s.player)
            return {VerifyResult::Kind::LosingSink, v, -1, {}};
    }

    // Cycle parities: for every opponent-parity color c present, no cycle of
    // colors <= c may pass through a color-c vertex.
    std::vector<int> colors;
    for (int v : s.support)
        if (parity_winner(g.color[static_cast<std::size_t>(v)]) == opponent(s.player))
            colors.push_back(g.color[static_cast<std::size_t>(v)]);
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());

    detail::SccDecomposition scc;
    for (int c : colors) {
        auto include = [&](int v) {
            return in_support[static_cast<std::size_t>(v)]
                   && g.color[static_cast<std::size_t>(v)] <= c;
        };
        scc.run(n, include, [&](int v) -> const std::vector<int>& {
            return radj[static_cast<std::size_t>(v)];
        });
        for (int v : s.support) {
            const auto sv = static_cast<std::size_t>(v);
            if (g.color[sv] != c) continue;
            const int k = scc.comp[sv];
            if (k < 0) continue;
            bool cyclic = std::find(radj[sv].begin(), radj[sv].end(), v) != radj[sv].end();
            if (!cyclic)
                for (int u : s.support)
                    if (u != v && scc.comp[static_cast<std::size_t>(u)] == k) {
                        cyclic = true;
                        break;
                    }
            if (!cyclic) continue;
            // Recover a witness cycle through v inside the component.
            VerifyResult res{VerifyResult::Kind::LosingCycle, v, -1, {}};
            std::vector<int> parent(static_cast<std::size_t>(n), -1);
            std::vector<int> bfs{v};
            for (std::size_t head = 0; head < bfs.size(); ++head) {
                for (int w : radj[static_cast<std::size_t>(bfs[head])]) {
                    const auto swi = static_cast<std::size_t>(w);
                    if (scc.comp[swi] != k || parent[swi] >= 0) continue;
                    parent[swi] = bfs[head];
                    bfs.push_back(w);
                }
            }
            int cur = v;
            do {
                res.cycle.push_back(cur);
                cur = parent[static_cast<std::size_t>(cur)];
            } while (cur >= 0 && cur != v);
            std::reverse(res.cycle.begin(), res.cycle.end());
            return res;
        }
    }
    return {};
}

} // namespace pg
