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

#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace pg;
using pgtest::for_each_game;
using pgtest::random_corpus;

namespace {

std::vector<int> used_colors(const ParityGame& g)
{
    std::vector<int> c = g.color;
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

std::vector<Player> winners_of(const ParityGame& g)
{
    const SolveOutcome out = solve_parity(g);
    std::vector<Player> w(static_cast<std::size_t>(g.size()), Player::Odd);
    for (int v : out.region_even) w[static_cast<std::size_t>(v)] = Player::Even;
    return w;
}

} // namespace

TEST_CASE("player basics")
{
    REQUIRE(opponent(opponent(Player::Even)) == Player::Even);
    REQUIRE(opponent(opponent(Player::Odd)) == Player::Odd);
    REQUIRE(opponent(Player::Even) == Player::Odd);
    REQUIRE(parity_winner(0) == Player::Even);
    REQUIRE(parity_winner(7) == Player::Odd);
}

TEST_CASE("validate reports nothing on a well-formed game")
{
    ParityGame g;
    g.add_vertex(2, Player::Even);
    g.add_vertex(1, Player::Odd);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    REQUIRE(validate(g).empty());
}

TEST_CASE("validate finds dangling endpoints, duplicates and negative colors")
{
    ParityGame g;
    g.add_vertex(1, Player::Even);
    g.add_vertex(1, Player::Odd);

    SECTION("dangling endpoint")
    {
        g.succ[0] = {5};
        const auto violations = validate(g);
        REQUIRE(violations.size() == 1);
        REQUIRE(violations[0].kind == ViolationKind::DanglingEdge);
    }
    SECTION("duplicate edge listed twice gives one violation")
    {
        g.succ[0] = {1, 1};
        const auto violations = validate(g);
        REQUIRE(violations.size() == 1);
        REQUIRE(violations[0].kind == ViolationKind::DuplicateEdge);
    }
    SECTION("triplicate edge still gives one violation")
    {
        g.succ[0] = {1, 1, 1};
        REQUIRE(validate(g).size() == 1);
    }
    SECTION("negative color")
    {
        g.color[1] = -2;
        const auto violations = validate(g);
        REQUIRE(violations.size() == 1);
        REQUIRE(violations[0].kind == ViolationKind::NegativeColor);
    }
}

TEST_CASE("compact_colors closes gaps")
{
    ParityGame g;
    g.add_vertex(1, Player::Even);
    g.add_vertex(3, Player::Odd);
    g.add_vertex(4, Player::Even);
    for (int v = 0; v < 3; ++v) g.add_edge(v, (v + 1) % 3);

    const ParityGame c = compact_colors(g);
    REQUIRE(used_colors(c) == std::vector<int>{1, 2});
    REQUIRE(c.color == std::vector<int>{1, 1, 2});
}

TEST_CASE("compact_colors leaves gapless colorings alone")
{
    ParityGame g;
    g.add_vertex(1, Player::Even);
    g.add_vertex(2, Player::Odd);
    g.add_vertex(3, Player::Even);
    const ParityGame c = compact_colors(g);
    REQUIRE(c.color == g.color);
}

TEST_CASE("compact_colors matches the one-step rewrite fixpoint, keeps parity, is idempotent")
{
    std::mt19937_64 rng(7);
    for (int round = 0; round < 300; ++round) {
        ParityGame g;
        const int n = 1 + static_cast<int>(rng() % 6);
        for (int v = 0; v < n; ++v)
            g.add_vertex(static_cast<int>(rng() % 9), rng() % 2 ? Player::Odd : Player::Even);

        const ParityGame c = compact_colors(g);
        const ParityGame fix = pgtest::rewrite_colors_to_fixpoint(g);
        REQUIRE(c.color == fix.color);
        for (int v = 0; v < n; ++v)
            REQUIRE((c.color[static_cast<std::size_t>(v)] & 1)
                    == (g.color[static_cast<std::size_t>(v)] & 1));
        REQUIRE(compact_colors(c).color == c.color);
    }
}

TEST_CASE("compact_colors preserves winners")
{
    for (const auto& g : random_corpus(60, 6, 8, 3, 1234)) {
        const auto before = winners_of(g);
        const auto after = winners_of(compact_colors(g));
        REQUIRE(before == after);
    }
}

TEST_CASE("reachability encoding of the six-vertex fixture")
{
    const ParityGame g = pgtest::sample_reach_game();
    const std::vector<int> target = pgtest::ids(g, {"c", "f"});
    const ParityGame enc = encode_reachability_as_parity(g, target, Player::Even);

    // target vertices keep only a self-loop and get color 2
    for (int v : target) {
        REQUIRE(enc.succ[static_cast<std::size_t>(v)] == std::vector<int>{v});
        REQUIRE(enc.color[static_cast<std::size_t>(v)] == 2);
    }
    // non-target vertices have color 1 and their original edges
    REQUIRE(enc.color[0] == 1);
    REQUIRE(enc.succ[0] == g.succ[0]);

    const SolveOutcome out = solve_parity(enc);
    REQUIRE(out.region_even == pgtest::ids(g, {"b", "c", "e", "f"}));
    REQUIRE(out.region_odd == pgtest::ids(g, {"a", "d"}));
}

TEST_CASE("reachability encoding handles pre-existing sinks and leaves no sinks")
{
    ParityGame g;
    g.add_vertex(1, Player::Even); // sink, not target
    g.add_vertex(1, Player::Odd);
    g.add_edge(1, 0);
    const ParityGame enc = encode_reachability_as_parity(g, {1}, Player::Even);
    REQUIRE(enc.succ[0] == std::vector<int>{0});
    REQUIRE(enc.color[0] == 1);
    for (int v = 0; v < enc.size(); ++v) REQUIRE_FALSE(enc.is_sink(v));
}

TEST_CASE("reachability encoding agrees with the reachability solver for both attackers")
{
    for (const auto& g : random_corpus(40, 6, 3, 3, 99)) {
        if (g.size() < 2) continue;
        const std::vector<int> target{0, g.size() - 1};
        for (Player attacker : {Player::Even, Player::Odd}) {
            const auto reach = solve_reachability(g, attacker, target);
            const auto parity = winners_of(encode_reachability_as_parity(g, target, attacker));
            for (int v = 0; v < g.size(); ++v) {
                const bool attacker_wins =
                    reach.distance[static_cast<std::size_t>(v)].is_finite();
                REQUIRE((parity[static_cast<std::size_t>(v)] == attacker) == attacker_wins);
            }
        }
    }
}

TEST_CASE("eliminate_sinks gives sinks a losing self-loop")
{
    ParityGame g;
    g.add_vertex(5, Player::Odd);  // sink
    g.add_vertex(3, Player::Even); // sink
    g.add_vertex(1, Player::Even);
    g.add_edge(2, 0);

    const ParityGame ns = eliminate_sinks(g);
    REQUIRE(ns.succ[0] == std::vector<int>{0});
    REQUIRE(ns.color[0] == 2); // Odd-owned sink loops with even top color
    REQUIRE(ns.succ[1] == std::vector<int>{1});
    REQUIRE(ns.color[1] == 1);
    REQUIRE(ns.succ[2] == g.succ[2]);
    REQUIRE(ns.color[2] == g.color[2]);

    const ParityGame sink_free = eliminate_sinks(ns);
    REQUIRE(sink_free.color == ns.color);
    REQUIRE(sink_free.succ == ns.succ);
}

TEST_CASE("eliminate_sinks preserves winners")
{
    const ParityGame g = pgtest::sample_reach_game();
    const ParityGame enc =
        encode_reachability_as_parity(g, pgtest::ids(g, {"c", "f"}), Player::Even);
    REQUIRE(winners_of(enc) == winners_of(eliminate_sinks(enc)));

    for (const auto& rg : random_corpus(60, 6, 3, 2, 4321, 0.4))
        REQUIRE(winners_of(rg) == winners_of(eliminate_sinks(rg)));
}

TEST_CASE("edge subdivision counts vertices and colors")
{
    EdgeColoredGame ec;
    ec.add_vertex(Player::Even);
    ec.add_vertex(Player::Odd);
    ec.add_edge(0, 1, 3);
    ec.add_edge(1, 0, 2);

    const ParityGame g = edge_to_vertex_colored(ec);
    REQUIRE(g.size() == 4);
    REQUIRE(used_colors(g) == std::vector<int>{0, 2, 3});
    // originals keep their ids and get color 0
    REQUIRE(g.color[0] == 0);
    REQUIRE(g.color[1] == 0);
}

TEST_CASE("single odd self-loop wins for Odd before and after subdivision")
{
    EdgeColoredGame ec;
    ec.add_vertex(Player::Odd);
    ec.add_edge(0, 0, 1);
    REQUIRE(pgtest::brute_force_edge_colored(ec)[0] == Player::Odd);

    const ParityGame g = edge_to_vertex_colored(ec);
    REQUIRE(winners_of(g)[0] == Player::Odd);
}

TEST_CASE("edge subdivision preserves winners against the edge-colored oracle")
{
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 120; ++round) {
        const int n = 1 + static_cast<int>(rng() % 4);
        EdgeColoredGame ec;
        for (int v = 0; v < n; ++v)
            ec.add_vertex(rng() % 2 ? Player::Odd : Player::Even);
        for (int v = 0; v < n; ++v) {
            const int deg = static_cast<int>(rng() % 3);
            for (int k = 0; k < deg; ++k)
                ec.add_edge(v, static_cast<int>(rng() % static_cast<std::uint64_t>(n)),
                            static_cast<int>(rng() % 4));
        }
        const auto direct = pgtest::brute_force_edge_colored(ec);
        const auto via_subdivision = winners_of(edge_to_vertex_colored(ec));
        for (int v = 0; v < n; ++v)
            REQUIRE(direct[static_cast<std::size_t>(v)]
                    == via_subdivision[static_cast<std::size_t>(v)]);
    }
}

TEST_CASE("subdivision vertex ownership cannot change the winner")
{
    std::mt19937_64 rng(5);
    for (int round = 0; round < 60; ++round) {
        const int n = 1 + static_cast<int>(rng() % 4);
        EdgeColoredGame ec;
        for (int v = 0; v < n; ++v) ec.add_vertex(rng() % 2 ? Player::Odd : Player::Even);
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < 2; ++k)
                ec.add_edge(v, static_cast<int>(rng() % static_cast<std::uint64_t>(n)),
                            static_cast<int>(rng() % 4));

        ParityGame sub = edge_to_vertex_colored(ec);
        const auto base = winners_of(sub);
        for (int v = n; v < sub.size(); ++v)
            sub.owner[static_cast<std::size_t>(v)] =
                opponent(sub.owner[static_cast<std::size_t>(v)]);
        REQUIRE(winners_of(sub) == base);
    }
}

TEST_CASE("vertex_to_edge_colored copies the source color onto edges")
{
    ParityGame g;
    g.add_vertex(3, Player::Even);
    g.add_vertex(1, Player::Odd);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    const EdgeColoredGame ec = vertex_to_edge_colored(g);
    REQUIRE(ec.succ[0] == std::vector<std::pair<int, int>>{{1, 3}});
    REQUIRE(ec.succ[1] == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("vertex to edge and back preserves winners at original vertices")
{
    for (const auto& g : random_corpus(80, 5, 3, 2, 31415, 0.2)) {
        const auto base = winners_of(g);
        const ParityGame round_trip = edge_to_vertex_colored(vertex_to_edge_colored(g));
        const auto rt = winners_of(round_trip);
        for (int v = 0; v < g.size(); ++v)
            REQUIRE(base[static_cast<std::size_t>(v)] == rt[static_cast<std::size_t>(v)]);
    }
}
