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

#include <limits>

#include "pgsolve/game.hpp"

namespace pg {

/**
 * A winning distance: a natural number or infinity. Infinity is a
 * distinguished value, not a large number: value() asserts finiteness and
 * succ() keeps infinity fixed. Orders with infinity greater than every
 * finite distance.
 */
class WinDistance {
public:
    constexpr WinDistance() noexcept = default; // infinite

    static constexpr WinDistance infinite() noexcept { return WinDistance(); }

    static constexpr WinDistance steps(std::uint32_t k) noexcept
    {
        WinDistance d;
        d.raw_ = k;
        return d;
    }

    constexpr bool is_infinite() const noexcept { return raw_ == kInf; }
    constexpr bool is_finite() const noexcept { return raw_ != kInf; }

    constexpr std::uint32_t value() const noexcept
    {
        assert(is_finite());
        return raw_;
    }

    /// 1 + d, with 1 + infinity = infinity.
    constexpr WinDistance succ() const noexcept
    {
        return is_infinite() ? infinite() : steps(raw_ + 1);
    }

    friend constexpr bool operator==(WinDistance a, WinDistance b) noexcept = default;

    friend constexpr bool operator<(WinDistance a, WinDistance b) noexcept
    {
        // kInf is the numeric maximum, so raw comparison gives the right order.
        return a.raw_ < b.raw_;
    }
    friend constexpr bool operator<=(WinDistance a, WinDistance b) noexcept { return !(b < a); }
    friend constexpr bool operator>(WinDistance a, WinDistance b) noexcept { return b < a; }
    friend constexpr bool operator>=(WinDistance a, WinDistance b) noexcept { return !(a < b); }

private:
    static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t raw_ = kInf;
};

/// Counters for the propagation loop: every vertex enters the queue at most
/// once and every edge is inspected at most once per solve.
struct ReachStats {
    std::uint64_t queue_insertions = 0;
    std::uint64_t edge_inspections = 0;
};

/// A reachability game: the attacker tries to reach the target set on the
/// game graph's skeleton (colors are ignored).
struct ReachabilityProblem {
    ParityGame graph;
    Player attacker = Player::Even;
    std::vector<int> target;
};

struct AttractorResult {
    std::vector<int> attractor;        // sorted; exactly the finite-distance vertices
    std::vector<WinDistance> distance; // per vertex
    PositionalStrategy attacker_strategy; // support = attractor, optimal moves
    PositionalStrategy defender_strategy; // support = complement, stays outside
    // Maximally delaying defender moves inside the attractor (-1 where
    // undefined): at a defender vertex of finite distance this is a
    // successor of maximal distance, so following it stretches the loss to
    // exactly distance(v) moves.
    std::vector<int> delaying_move;
    ReachStats stats;
};

/**
 * Optimal attractor computation: a backward breadth-first pass over the
 * predecessor lists with a successor counter per defender vertex and a FIFO
 * queue, running in O(n + m).
 *
 * The produced distance map satisfies the defining equations
 *   d(u) = 0 for targets,
 *   d(u) = min { 1 + d(v) : (u,v) in E } on attacker vertices,
 *   d(u) = max { 1 + d(v) : (u,v) in E } on defender vertices
 * (min/max of the empty set = infinity). The attacker strategy decreases the
 * distance by one on every move, breaking ties towards the smallest vertex
 * id; the defender strategy keeps the play inside the complement.
 *
 * The solver object owns reusable scratch buffers, so one instance can be
 * used for many solves without reallocation. Each solve is a pure function
 * of its input; distinct instances can run concurrently.
 */
class ReachabilitySolver {
public:
    AttractorResult solve(const ParityGame& g, Player attacker, const std::vector<int>& target)
    {
        const int n = g.size();
        for (int v : target)
            if (!g.has_vertex(v))
                throw std::invalid_argument("solve_reachability: target vertex "
                                            + std::to_string(v) + " out of range");

        AttractorResult res;
        res.distance.assign(static_cast<std::size_t>(n), WinDistance::infinite());
        res.delaying_move.assign(static_cast<std::size_t>(n), -1);
        res.attacker_strategy.player = attacker;
        res.attacker_strategy.moves.assign(static_cast<std::size_t>(n), -1);
        res.defender_strategy.player = opponent(attacker);
        res.defender_strategy.moves.assign(static_cast<std::size_t>(n), -1);
        if (n == 0) return res;

        build_preds(g);
        auto& d = res.distance;
        auto& attacker_move = res.attacker_strategy.moves;

        in_target_.assign(static_cast<std::size_t>(n), 0);
        succ_left_.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            succ_left_[static_cast<std::size_t>(v)] =
                static_cast<int>(g.succ[static_cast<std::size_t>(v)].size());

        queue_.clear();
        queue_.reserve(static_cast<std::size_t>(n));
        for (int v : target) {
            const auto sv = static_cast<std::size_t>(v);
            if (in_target_[sv]) continue; // duplicate target entries
            in_target_[sv] = 1;
            d[sv] = WinDistance::steps(0);
            queue_.push_back(v);
            ++res.stats.queue_insertions;
        }

        std::size_t head = 0;
        while (head < queue_.size()) {
            const int v = queue_[head++];
            const auto sv = static_cast<std::size_t>(v);
            for (int e = pred_off_[sv]; e < pred_off_[sv + 1]; ++e) {
                const int u = pred_[static_cast<std::size_t>(e)];
                const auto su = static_cast<std::size_t>(u);
                ++res.stats.edge_inspections;
                if (d[su].is_finite()) {
                    // Already settled. Keep the smallest-id optimal move.
                    if (g.owner[su] == attacker && !in_target_[su]
                        && d[su] == d[sv].succ()
                        && (attacker_move[su] < 0 || v < attacker_move[su]))
                        attacker_move[su] = v;
                    continue;
                }
                if (g.owner[su] == attacker) {
                    d[su] = d[sv].succ();
                    attacker_move[su] = v;
                    queue_.push_back(u);
                    ++res.stats.queue_insertions;
                } else if (--succ_left_[su] == 0) {
                    // Last escape gone; v is a maximal-distance successor.
                    d[su] = d[sv].succ();
                    res.delaying_move[su] = v;
                    queue_.push_back(u);
                    ++res.stats.queue_insertions;
                }
            }
        }

        for (int v = 0; v < n; ++v) {
            const auto sv = static_cast<std::size_t>(v);
            if (d[sv].is_finite()) {
                res.attractor.push_back(v);
                res.attacker_strategy.support.push_back(v);
            } else {
                res.defender_strategy.support.push_back(v);
                if (g.owner[sv] != attacker && !g.succ[sv].empty()) {
                    int pick = -1;
                    for (int w : g.succ[sv])
                        if (d[static_cast<std::size_t>(w)].is_infinite() && (pick < 0 || w < pick))
                            pick = w;
                    assert(pick >= 0); // some escape survived, or v would be attracted
                    res.defender_strategy.moves[sv] = pick;
                }
            }
        }
        return res;
    }

private:
    void build_preds(const ParityGame& g)
    {
        const int n = g.size();
        pred_off_.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int u = 0; u < n; ++u)
            for (int v : g.succ[static_cast<std::size_t>(u)])
                ++pred_off_[static_cast<std::size_t>(v) + 1];
        for (int v = 0; v < n; ++v)
            pred_off_[static_cast<std::size_t>(v) + 1] += pred_off_[static_cast<std::size_t>(v)];
        pred_.resize(static_cast<std::size_t>(g.edge_count()));
        fill_pos_.assign(pred_off_.begin(), pred_off_.end() - 1);
        for (int u = 0; u < n; ++u)
            for (int v : g.succ[static_cast<std::size_t>(u)])
                pred_[static_cast<std::size_t>(fill_pos_[static_cast<std::size_t>(v)]++)] = u;
    }

    std::vector<int> pred_off_;
    std::vector<int> pred_;
    std::vector<int> fill_pos_;
    std::vector<int> succ_left_;
    std::vector<std::uint8_t> in_target_;
    std::vector<int> queue_;
};

inline AttractorResult solve_reachability(const ParityGame& g, Player attacker,
                                          const std::vector<int>& target)
{
    ReachabilitySolver solver;
    return solver.solve(g, attacker, target);
}

inline AttractorResult solve_reachability(const ReachabilityProblem& p)
{
    return solve_reachability(p.graph, p.attacker, p.target);
}

/// The attractor of the target set for the given player: the smallest set
/// containing the target that the player can force the play into.
inline std::vector<int> attractor(const ParityGame& g, Player attacker,
                                  const std::vector<int>& target)
{
    return solve_reachability(g, attacker, target).attractor;
}

} // namespace pg
