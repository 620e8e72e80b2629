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

#include <deque>

#include "pgsolve/game.hpp"
#include "pgsolve/transforms.hpp"

namespace pg {

struct ZielonkaStats {
    std::uint64_t recursive_calls = 0;   // calls on nonempty subgames G'
    std::uint64_t outer_iterations = 0;  // loop iterations that grew the losing region
    std::uint64_t attractor_calls = 0;
    std::uint64_t attractor_edge_work = 0; // edges scanned by attractor passes
};

/**
 * Zielonka's recursive algorithm. Per recursion level on a subgame with
 * maximal present color d and favored player i = parity(d):
 *
 *   initialize W_loser = attr_{1-i}(G, sinks of player i), then repeat
 *     1. W_i   = subgame minus W_loser, H = G[W_i]
 *     2. U_d   = color-d vertices of W_i
 *     3. A     = attr_i(H, U_d)
 *     4. G'    = G[W_i - A]
 *     5. solve G' recursively (skipped when empty)
 *     6. W_loser += losing part of G'
 *     7. W_loser = attr_{1-i}(G, W_loser)
 *   until step 5 yields nothing new, then W_i is winning for player i.
 *
 * Winning strategies come out of the same run: the loser side keeps the
 * attractor moves towards sinks resp. the previously lost region plus the
 * recursive strategies; the winner side combines, from the final iteration,
 * an arbitrary move into W_i at U_d vertices (smallest successor id, for
 * determinism), the attractor moves towards U_d on A, and the recursive
 * strategy on G'.
 *
 * Recursion works on index subsets of the one input graph through reusable
 * membership masks; edge data is never copied. Colors are compacted up
 * front so the dimension equals the number of distinct colors. A solver
 * instance keeps its scratch buffers between solves; independent instances
 * can run concurrently.
 */
class ZielonkaSolver {
public:
    SolveOutcome solve(const ParityGame& g)
    {
        stats_ = {};
        g_ = &g;
        const int n = g.size();

        color_.assign(g.color.begin(), g.color.end());
        if (n > 0) {
            const auto cmap = detail::compact_color_map(color_);
            for (auto& c : color_) c = cmap.at(c);
        }
        build_preds(g);

        winner_.assign(static_cast<std::size_t>(n), Player::Even);
        move_.assign(static_cast<std::size_t>(n), -1);

        all_.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) all_[static_cast<std::size_t>(v)] = v;
        if (n > 0) solve_rec(all_, 0);

        SolveOutcome out;
        out.strategy_even.player = Player::Even;
        out.strategy_odd.player = Player::Odd;
        out.strategy_even.moves.assign(static_cast<std::size_t>(n), -1);
        out.strategy_odd.moves.assign(static_cast<std::size_t>(n), -1);
        for (int v = 0; v < n; ++v) {
            const auto sv = static_cast<std::size_t>(v);
            if (winner_[sv] == Player::Even) {
                out.region_even.push_back(v);
                if (g.owner[sv] == Player::Even) out.strategy_even.moves[sv] = move_[sv];
            } else {
                out.region_odd.push_back(v);
                if (g.owner[sv] == Player::Odd) out.strategy_odd.moves[sv] = move_[sv];
            }
        }
        out.strategy_even.support = out.region_even;
        out.strategy_odd.support = out.region_odd;
        return out;
    }

    const ZielonkaStats& stats() const noexcept { return stats_; }

    /// Optional: record the vertices every top-level growing iteration adds
    /// to the losing region (one entry per iteration, in growth order).
    void set_growth_log(std::vector<std::vector<int>>* log) noexcept { growth_log_ = log; }

private:
    struct Level {
        std::vector<std::uint8_t> in_level; // level domain
        std::vector<std::uint8_t> lost;     // loser region within the level
        std::vector<std::uint8_t> in_set;   // attractor scratch
        std::vector<int> wi;                // current W_i list
        std::vector<int> set;               // attractor seed/result list
        std::vector<int> gp;                // subgame G' list
        std::vector<int> lose_list;
    };

    Level& level(std::size_t depth)
    {
        while (levels_.size() <= depth) levels_.emplace_back();
        Level& L = levels_[depth];
        const auto n = static_cast<std::size_t>(g_->size());
        if (L.in_level.size() != n) {
            L.in_level.assign(n, 0);
            L.lost.assign(n, 0);
            L.in_set.assign(n, 0);
        }
        return L;
    }

    void build_preds(const ParityGame& g)
    {
        const int n = g.size();
        pred_off_.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int u = 0; u < n; ++u)
            for (int v : g.succ[static_cast<std::size_t>(u)])
                ++pred_off_[static_cast<std::size_t>(v) + 1];
        for (int v = 0; v < n; ++v)
            pred_off_[static_cast<std::size_t>(v) + 1] += pred_off_[static_cast<std::size_t>(v)];
        pred_.resize(g.edge_count());
        fill_pos_.assign(pred_off_.begin(), pred_off_.end() - 1);
        for (int u = 0; u < n; ++u)
            for (int v : g.succ[static_cast<std::size_t>(u)])
                pred_[static_cast<std::size_t>(fill_pos_[static_cast<std::size_t>(v)]++)] = u;
    }

    /**
     * Grows L.set (with membership mask L.in_set) to the p-attractor of its
     * current contents within the domain {v : in_level[v] && !(respect_lost
     * && lost[v])}. Counter-based: an opponent vertex is attracted once all
     * of its in-domain successors are in the set; a p-owned vertex as soon
     * as one is. Newly attracted p-owned vertices receive the attracting
     * edge as their move; newly attracted opponent vertices get move -1.
     */
    void attract(Player p, Level& L, bool respect_lost, const std::vector<int>& domain)
    {
        ++stats_.attractor_calls;
        const auto& g = *g_;
        auto in_domain = [&](int v) {
            const auto sv = static_cast<std::size_t>(v);
            return L.in_level[sv] && !(respect_lost && L.lost[sv]);
        };

        succ_count_.resize(static_cast<std::size_t>(g.size()));
        for (int u : domain) {
            const auto su = static_cast<std::size_t>(u);
            if (g.owner[su] == p) continue;
            int k = 0;
            for (int w : g.succ[su]) {
                ++stats_.attractor_edge_work;
                if (in_domain(w)) ++k;
            }
            succ_count_[su] = k;
        }

        for (std::size_t head = 0; head < L.set.size(); ++head) {
            const int v = L.set[head];
            const auto sv = static_cast<std::size_t>(v);
            for (int e = pred_off_[sv]; e < pred_off_[sv + 1]; ++e) {
                const int u = pred_[static_cast<std::size_t>(e)];
                const auto su = static_cast<std::size_t>(u);
                ++stats_.attractor_edge_work;
                if (!in_domain(u) || L.in_set[su]) continue;
                if (g.owner[su] == p) {
                    L.in_set[su] = 1;
                    move_[su] = v;
                    L.set.push_back(u);
                } else if (--succ_count_[su] == 0) {
                    L.in_set[su] = 1;
                    move_[su] = -1;
                    L.set.push_back(u);
                }
            }
        }
    }

    void solve_rec(const std::vector<int>& verts, std::size_t depth)
    {
        const auto& g = *g_;
        Level& L0 = level(depth);
        for (int v : verts) {
            const auto sv = static_cast<std::size_t>(v);
            L0.in_level[sv] = 1;
            L0.lost[sv] = 0;
            move_[sv] = -1;
        }

        int d = -1;
        for (int v : verts) d = std::max(d, color_[static_cast<std::size_t>(v)]);
        const Player favored = parity_winner(d);
        const Player loser = opponent(favored);

        // Seed the losing region with the favored player's subgame sinks.
        L0.set.clear();
        L0.lose_list.clear();
        for (int v : verts) {
            const auto sv = static_cast<std::size_t>(v);
            if (g.owner[sv] != favored) continue;
            bool sink = true;
            for (int w : g.succ[sv]) {
                ++stats_.attractor_edge_work;
                if (L0.in_level[static_cast<std::size_t>(w)]) {
                    sink = false;
                    break;
                }
            }
            if (sink) {
                L0.set.push_back(v);
                L0.in_set[sv] = 1;
            }
        }
        if (!L0.set.empty()) {
            attract(loser, L0, /*respect_lost=*/false, verts);
            absorb_lost(L0, loser);
        }

        for (;;) {
            // levels_ may grow during recursion; re-fetch our scratch.
            Level& L = levels_[depth];
            L.wi.clear();
            for (int v : verts)
                if (!L.lost[static_cast<std::size_t>(v)]) L.wi.push_back(v);
            if (L.wi.empty()) break;

            L.set.clear();
            for (int v : L.wi) {
                const auto sv = static_cast<std::size_t>(v);
                if (color_[sv] == d) {
                    L.set.push_back(v);
                    L.in_set[sv] = 1;
                }
            }
            attract(favored, L, /*respect_lost=*/true, L.wi);

            L.gp.clear();
            for (int v : L.wi)
                if (!L.in_set[static_cast<std::size_t>(v)]) L.gp.push_back(v);
            for (int v : L.set) L.in_set[static_cast<std::size_t>(v)] = 0;

            bool grown = false;
            if (!L.gp.empty()) {
                ++stats_.recursive_calls;
                solve_rec(L.gp, depth + 1);
                Level& LL = levels_[depth]; // re-fetch after recursion
                LL.set.clear();
                for (int v : LL.gp)
                    if (winner_[static_cast<std::size_t>(v)] == loser) {
                        LL.set.push_back(v);
                        LL.in_set[static_cast<std::size_t>(v)] = 1;
                    }
                if (!LL.set.empty()) {
                    grown = true;
                    // Re-attract the grown losing region over the whole level.
                    for (int v : LL.lose_list) {
                        LL.set.push_back(v);
                        LL.in_set[static_cast<std::size_t>(v)] = 1;
                    }
                    const std::size_t before = LL.lose_list.size();
                    attract(loser, LL, /*respect_lost=*/false, verts);
                    absorb_lost(LL, loser);
                    ++stats_.outer_iterations;
                    if (growth_log_ && depth == 0)
                        growth_log_->emplace_back(LL.lose_list.begin()
                                                      + static_cast<std::ptrdiff_t>(before),
                                                  LL.lose_list.end());
                }
            }
            if (!grown) {
                // Fixpoint: W_i is favored-winning. Complete the strategy.
                Level& LL = levels_[depth];
                for (int v : LL.wi) {
                    const auto sv = static_cast<std::size_t>(v);
                    winner_[sv] = favored;
                    if (color_[sv] == d && g.owner[sv] == favored) {
                        int pick = -1;
                        for (int w : g.succ[sv]) {
                            const auto sw = static_cast<std::size_t>(w);
                            if (LL.in_level[sw] && !LL.lost[sw] && (pick < 0 || w < pick))
                                pick = w;
                        }
                        // a favored top-color vertex at the fixpoint always
                        // keeps an edge into W_i; sinks were seeded as lost
                        assert(pick >= 0);
                        move_[sv] = pick;
                    }
                }
                break;
            }
        }

        Level& L = levels_[depth];
        for (int v : verts) L.in_level[static_cast<std::size_t>(v)] = 0;
    }

    /// Moves the attractor scratch set into the level's losing region.
    void absorb_lost(Level& L, Player loser)
    {
        for (int v : L.set) {
            const auto sv = static_cast<std::size_t>(v);
            L.in_set[sv] = 0;
            if (!L.lost[sv]) {
                L.lost[sv] = 1;
                L.lose_list.push_back(v);
                winner_[sv] = loser;
            }
        }
        L.set.clear();
    }

    const ParityGame* g_ = nullptr;
    ZielonkaStats stats_;
    std::vector<std::vector<int>>* growth_log_ = nullptr;
    std::vector<int> color_; // compacted
    std::vector<int> pred_off_, pred_, fill_pos_;
    std::vector<int> succ_count_;
    std::vector<Player> winner_;
    std::vector<int> move_;
    std::vector<int> all_;
    std::deque<Level> levels_;
};

inline SolveOutcome solve_parity(const ParityGame& g, ZielonkaStats* stats = nullptr)
{
    ZielonkaSolver solver;
    SolveOutcome out = solver.solve(g);
    if (stats) *stats = solver.stats();
    return out;
}

} // namespace pg
