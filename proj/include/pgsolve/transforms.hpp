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
#include <map>

#include "pgsolve/game.hpp"

namespace pg {

namespace detail {

/**
 * Minimal parity-preserving recoloring. For the sorted distinct colors
 * c_1 < c_2 < ... the image is m(c_1) = parity(c_1) and
 * m(c_k) = m(c_{k-1}) + (0 if same parity else 1). This is the fixpoint of
 * repeatedly shifting a color q down to q-2 while no vertex has color q-1,
 * merging same-parity neighbors on the way.
 */
inline std::map<int, int> compact_color_map(const std::vector<int>& colors)
{
    std::map<int, int> m;
    for (int c : colors) {
        assert(c >= 0);
        m[c] = 0;
    }
    int prev_old = -1;
    int prev_new = 0;
    for (auto& [c, image] : m) {
        if (prev_old < 0)
            image = c & 1;
        else
            image = prev_new + (((c ^ prev_old) & 1) ? 1 : 0);
        prev_old = c;
        prev_new = image;
    }
    return m;
}

} // namespace detail

/**
 * Compresses the color range without changing any vertex's parity or the
 * winner at any start position: whenever colors q and q+2 are in use and no
 * vertex has color q+1, all q+2 vertices can be recolored to q. The result
 * is the fixpoint of that rewrite; applying compact_colors twice gives the
 * same game as applying it once.
 */
inline ParityGame compact_colors(const ParityGame& g)
{
    ParityGame out = g;
    if (g.size() == 0) return out;
    const auto m = detail::compact_color_map(g.color);
    for (auto& c : out.color) c = m.at(c);
    return out;
}

/**
 * Encodes a reachability game as a two-color parity game: outgoing edges of
 * target vertices are removed, every sink (which now includes all targets)
 * gets a self-loop, and vertices are colored so that looping inside the
 * target has the attacker's parity while every other infinite play has the
 * defender's parity. For attacker Even this is target 2, rest 1. The
 * attacker wins the parity encoding at v iff they win the reachability game
 * at v; the output has no sinks. Input colors are ignored.
 */
inline ParityGame encode_reachability_as_parity(const ParityGame& g,
                                                const std::vector<int>& target,
                                                Player attacker)
{
    detail::check_vertex_list(g, target, "encode_reachability_as_parity");
    const int n = g.size();
    std::vector<std::uint8_t> in_target(static_cast<std::size_t>(n), 0);
    for (int v : target) in_target[static_cast<std::size_t>(v)] = 1;

    const int target_color = attacker == Player::Even ? 2 : 1;
    const int other_color = attacker == Player::Even ? 1 : 2;

    ParityGame out;
    out.owner = g.owner;
    out.names = g.names;
    out.color.resize(static_cast<std::size_t>(n));
    out.succ.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const auto sv = static_cast<std::size_t>(v);
        if (in_target[sv]) {
            out.color[sv] = target_color;
            out.succ[sv] = {v};
        } else {
            out.color[sv] = other_color;
            out.succ[sv] = g.succ[sv].empty() ? std::vector<int>{v} : g.succ[sv];
        }
    }
    return out;
}

/**
 * Removes all sinks by giving each sink owned by player i a self-loop with
 * color i+1, so the resulting forced loop is losing for the sink's owner.
 * All other vertices are untouched; the winner at every start position is
 * unchanged.
 */
inline ParityGame eliminate_sinks(const ParityGame& g)
{
    ParityGame out = g;
    for (int v = 0; v < g.size(); ++v) {
        const auto sv = static_cast<std::size_t>(v);
        if (!g.succ[sv].empty()) continue;
        out.succ[sv] = {v};
        out.color[sv] = g.owner[sv] == Player::Even ? 1 : 2;
    }
    return out;
}

/**
 * Turns an edge-colored game into an ordinary vertex-colored one by
 * subdividing every edge (u,v) into u -> w -> v where the fresh vertex w
 * carries the edge's color. Original vertices keep their ids and get color
 * 0; subdivision vertices are appended in (source, target) order and are
 * owned by the source's owner (they have out-degree 1, so ownership cannot
 * affect the winner). Output size is n + m vertices. The winner at every
 * original vertex is unchanged.
 */
inline ParityGame edge_to_vertex_colored(const EdgeColoredGame& ec, bool name_subdivisions = true)
{
    const int n = ec.size();
    ParityGame out;
    out.owner = ec.owner;
    out.color.assign(static_cast<std::size_t>(n), 0);
    out.succ.resize(static_cast<std::size_t>(n));
    const bool with_names = name_subdivisions && !ec.names.empty();
    if (with_names) {
        out.names = ec.names;
        out.names.resize(static_cast<std::size_t>(n) + ec.edge_count());
    }

    int next = n;
    for (int u = 0; u < n; ++u) {
        const auto su = static_cast<std::size_t>(u);
        out.succ[su].reserve(ec.succ[su].size());
        for (const auto& [v, c] : ec.succ[su]) {
            const int w = next++;
            out.owner.push_back(ec.owner[su]);
            out.color.push_back(c);
            out.succ.push_back({v});
            out.succ[su].push_back(w);
            if (with_names)
                out.names[static_cast<std::size_t>(w)] = ec.label(u) + ">" + ec.label(v);
        }
    }
    return out;
}

/**
 * Moves the coloring from vertices to edges: every edge inherits the color
 * of its source vertex. The graph is otherwise unchanged and so is the
 * winner at every vertex.
 */
inline EdgeColoredGame vertex_to_edge_colored(const ParityGame& g)
{
    EdgeColoredGame out;
    out.owner = g.owner;
    out.names = g.names;
    out.succ.resize(static_cast<std::size_t>(g.size()));
    for (int u = 0; u < g.size(); ++u) {
        const auto su = static_cast<std::size_t>(u);
        out.succ[su].reserve(g.succ[su].size());
        for (int v : g.succ[su]) out.succ[su].push_back({v, g.color[su]});
    }
    return out;
}

} // namespace pg
