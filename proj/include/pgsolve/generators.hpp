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

#include <random>

#include "pgsolve/game.hpp"
#include "pgsolve/registers.hpp"

namespace pg {

struct RandomGameOptions {
    int vertices = 8;
    int max_color = 3;    // colors drawn uniformly from 0..max_color
    int min_outdeg = 1;
    int max_outdeg = 3;
    double sink_prob = 0; // chance of a vertex having no successors at all
    std::uint64_t seed = 1;
};

/// Seed-deterministic random game: same options give the identical game.
inline ParityGame random_game(const RandomGameOptions& opt)
{
    if (opt.vertices < 0 || opt.max_color < 0 || opt.min_outdeg < 0
        || opt.max_outdeg < opt.min_outdeg || opt.sink_prob < 0 || opt.sink_prob > 1)
        throw std::invalid_argument("random_game: invalid parameters");

    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> color_dist(0, opt.max_color);
    std::uniform_int_distribution<int> owner_dist(0, 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    ParityGame g;
    const int n = opt.vertices;
    for (int v = 0; v < n; ++v)
        g.add_vertex(color_dist(rng), owner_dist(rng) == 0 ? Player::Even : Player::Odd);

    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) pool[static_cast<std::size_t>(v)] = v;
    std::uniform_int_distribution<int> deg_dist(opt.min_outdeg, opt.max_outdeg);
    for (int v = 0; v < n; ++v) {
        if (n == 0 || unit(rng) < opt.sink_prob) continue;
        const int deg = std::min(deg_dist(rng), n);
        // partial Fisher-Yates draw of deg distinct targets
        for (int i = 0; i < deg; ++i) {
            std::uniform_int_distribution<int> pick(i, n - 1);
            std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(pick(rng))]);
            g.add_edge(v, pool[static_cast<std::size_t>(i)]);
        }
    }
    return g;
}

/**
 * The cubic worst case for the recursive solver: n Even vertices a_i with
 * color 1 and self-loops, n Odd vertices b_i with color 2 and edges
 * (b_i, a_i), plus (a_i, b_j) for i < j. Every vertex is winning for Odd,
 * and the solver peels exactly one (a_i, b_i) pair per outer iteration.
 * Ids: a_i = i-1, b_i = n+i-1, names a1..an, b1..bn.
 */
inline ParityGame worstcase_game(int n)
{
    if (n < 1) throw std::invalid_argument("worstcase_game: need n >= 1");
    ParityGame g;
    for (int i = 1; i <= n; ++i) g.add_vertex(1, Player::Even, "a" + std::to_string(i));
    for (int i = 1; i <= n; ++i) g.add_vertex(2, Player::Odd, "b" + std::to_string(i));
    for (int i = 1; i <= n; ++i) {
        g.add_edge(i - 1, i - 1);     // (a_i, a_i)
        g.add_edge(n + i - 1, i - 1); // (b_i, a_i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(i - 1, n + j - 1); // (a_i, b_j)
    }
    return g;
}

} // namespace pg
