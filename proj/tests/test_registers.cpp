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

#include <cmath>

#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace pg;
using pgtest::random_corpus;

namespace {

std::vector<Player> zielonka_winners(const ParityGame& g)
{
    const SolveOutcome out = solve_parity(g);
    std::vector<Player> w(static_cast<std::size_t>(g.size()), Player::Odd);
    for (int v : out.region_even) w[static_cast<std::size_t>(v)] = Player::Even;
    return w;
}

} // namespace

TEST_CASE("expansion of a single even self-loop")
{
    ParityGame g;
    g.add_vertex(2, Player::Even);
    g.add_edge(0, 0);

    const RegisterGame rg = expand_register_game(g, 0, {0}, 1);
    REQUIRE(rg.states.size() == 3);
    REQUIRE(rg.state_id({0, {0}, RegisterState::Phase::Reset}) == rg.initial);
    REQUIRE(rg.state_id({0, {0}, RegisterState::Phase::Transition}) >= 0);
    REQUIRE(rg.state_id({0, {2}, RegisterState::Phase::Reset}) >= 0);
    REQUIRE(rg.state_id({0, {1}, RegisterState::Phase::Reset}) == -1);

    // both reset edges carry color 2
    for (std::size_t s = 0; s < rg.states.size(); ++s) {
        if (rg.states[s].phase != RegisterState::Phase::Reset) continue;
        for (const auto& [to, color] : rg.graph.succ[s]) REQUIRE(color == 2);
    }

    const auto res = solve_via_registers(g, 0, 1);
    REQUIRE(res.winner == Player::Even);
    REQUIRE(res.states == 3);
}

TEST_CASE("expansion structure: phases, owners, colors, sorted registers")
{
    for (const auto& g : random_corpus(30, 5, 3, 3, 90210, 0.2)) {
        const int r = 2;
        const RegisterGame rg = expand_register_game(g, 0, {0, 0}, r);
        for (std::size_t s = 0; s < rg.states.size(); ++s) {
            const RegisterState& st = rg.states[s];
            REQUIRE(std::is_sorted(st.registers.begin(), st.registers.end()));
            REQUIRE(static_cast<int>(st.registers.size()) == r);

            if (st.phase == RegisterState::Phase::Reset) {
                REQUIRE(rg.graph.owner[s] == Player::Even);
                REQUIRE(rg.graph.succ[s].size() >= 1); // resets always exist
            } else {
                REQUIRE(rg.graph.owner[s]
                        == g.owner[static_cast<std::size_t>(st.vertex)]);
            }
            for (std::size_t e = 0; e < rg.graph.succ[s].size(); ++e) {
                const auto [to, color] = rg.graph.succ[s][e];
                const RegisterState& target = rg.states[static_cast<std::size_t>(to)];
                const int label = rg.edge_label[s][e];
                if (st.phase == RegisterState::Phase::Reset) {
                    REQUIRE(target.phase == RegisterState::Phase::Transition);
                    REQUIRE(target.vertex == st.vertex);
                    REQUIRE(label >= 1);
                    REQUIRE(label <= r);
                    REQUIRE(color >= 2 * 1);
                    REQUIRE(color <= 2 * r + 1);
                    // parity matches the pre-reset register content
                    REQUIRE((color & 1)
                            == (st.registers[static_cast<std::size_t>(label - 1)] & 1));
                } else {
                    REQUIRE(target.phase == RegisterState::Phase::Reset);
                    REQUIRE(color == 0);
                    REQUIRE(label == 0);
                    REQUIRE(g.has_edge(st.vertex, target.vertex));
                }
            }
        }
    }
}

TEST_CASE("state count respects the 2n(d+1)^r bound for bounded initial vectors")
{
    for (const auto& g : random_corpus(25, 5, 3, 3, 777, 0.1)) {
        int d = 0;
        for (int c : g.color) d = std::max(d, c);
        for (int r : {1, 2, 3}) {
            const RegisterGame rg =
                expand_register_game(g, 0, std::vector<int>(static_cast<std::size_t>(r), 0), r);
            const std::size_t bound = 2 * static_cast<std::size_t>(g.size())
                                      * static_cast<std::size_t>(std::pow(d + 1, r));
            REQUIRE(rg.states.size() <= bound);
            // register values never exceed the maximal color
            for (const auto& st : rg.states)
                for (int x : st.registers) REQUIRE(x <= d);
        }
    }
}

TEST_CASE("expansion argument checks")
{
    ParityGame g;
    g.add_vertex(1, Player::Even);
    g.add_edge(0, 0);
    REQUIRE_THROWS_AS(expand_register_game(g, 0, {}, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(expand_register_game(g, 0, {1, 0}, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(expand_register_game(g, 0, {0}, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(expand_register_game(g, 5, {0}, 1), std::invalid_argument);
}

TEST_CASE("state cap failure is explicit")
{
    const ParityGame g = pgtest::sample_parity_game();
    REQUIRE_THROWS_AS(expand_register_game(g, 0, {0, 0}, 2, 10), CapacityError);
    REQUIRE_THROWS_AS(solve_via_registers(g, 0, 2, std::vector<int>{0, 0}, 10), CapacityError);
}

TEST_CASE("default register count is the smallest r with n < 2^r")
{
    REQUIRE(default_register_count(1) == 1);
    REQUIRE(default_register_count(2) == 2);
    REQUIRE(default_register_count(3) == 2);
    REQUIRE(default_register_count(4) == 3);
    REQUIRE(default_register_count(7) == 3);
    REQUIRE(default_register_count(8) == 4);
    REQUIRE(default_register_count(12) == 4);
}

TEST_CASE("forced odd self-loop loses for every register count")
{
    ParityGame g;
    g.add_vertex(1, Player::Odd);
    g.add_edge(0, 0);
    for (int r : {1, 2, 3})
        REQUIRE(solve_via_registers(g, 0, r).winner == Player::Odd);
}

TEST_CASE("lehtinen family shape")
{
    const ParityGame g1 = generate_lehtinen_family(1);
    REQUIRE(g1.size() == 2);
    REQUIRE(g1.color == std::vector<int>{1, 2});

    const ParityGame g2 = generate_lehtinen_family(2);
    REQUIRE(g2.size() == 6);
    REQUIRE(std::count(g2.color.begin(), g2.color.end(), 3) == 1);
    REQUIRE(std::count(g2.color.begin(), g2.color.end(), 4) == 1);

    for (int r : {1, 2, 3}) {
        const ParityGame g = generate_lehtinen_family(r);
        REQUIRE(g.size() == (1 << (r + 1)) - 2);
        REQUIRE(std::count(g.color.begin(), g.color.end(), 2 * r) == 1);
        REQUIRE(std::count(g.color.begin(), g.color.end(), 2 * r - 1) == 1);
        for (Player p : g.owner) REQUIRE(p == Player::Odd);
        // Even wins everywhere on the plain game
        REQUIRE(solve_parity(g).region_even.size() == static_cast<std::size_t>(g.size()));
    }
}

TEST_CASE("register lower bound on the first family member")
{
    const ParityGame g1 = generate_lehtinen_family(1);
    for (int v = 0; v < g1.size(); ++v) {
        REQUIRE(solve_via_registers(g1, v, 1).winner == Player::Odd);
        REQUIRE(solve_via_registers(g1, v, 2).winner == Player::Even);
    }
}

TEST_CASE("register pipeline agrees with zielonka on random games")
{
    for (const auto& g : random_corpus(40, 6, 3, 3, 20202, 0.15)) {
        const auto winners = zielonka_winners(g);
        for (int v = 0; v < g.size(); ++v)
            REQUIRE(solve_via_registers(g, v, 3).winner
                    == winners[static_cast<std::size_t>(v)]);
    }
}

TEST_CASE("odd wins transfer to every register count")
{
    for (const auto& g : random_corpus(25, 5, 3, 2, 40404, 0.25)) {
        const auto winners = zielonka_winners(g);
        for (int v = 0; v < g.size(); ++v) {
            if (winners[static_cast<std::size_t>(v)] != Player::Odd) continue;
            for (int r : {1, 2})
                REQUIRE(solve_via_registers(g, v, r).winner == Player::Odd);
        }
    }
}

TEST_CASE("register wins are monotone in the register count")
{
    for (const auto& g : random_corpus(25, 5, 2, 2, 50505, 0.2)) {
        for (int v = 0; v < g.size(); ++v) {
            for (int q : {1, 2}) {
                if (solve_via_registers(g, v, q).winner != Player::Even) continue;
                for (int r = q + 1; r <= 3; ++r) {
                    std::vector<int> padded(static_cast<std::size_t>(r), 0);
                    REQUIRE(solve_via_registers(g, v, r, padded).winner == Player::Even);
                }
            }
        }
    }
}

TEST_CASE("winner does not depend on the initial vector when n < 2^r")
{
    std::mt19937_64 rng(66);
    for (const auto& g : random_corpus(20, 5, 3, 2, 60606, 0.15)) {
        int d = 0;
        for (int c : g.color) d = std::max(d, c);
        const int r = default_register_count(g.size());
        for (int v = 0; v < g.size(); ++v) {
            const Player base = solve_via_registers(g, v, r).winner;
            for (int round = 0; round < 3; ++round) {
                std::vector<int> x(static_cast<std::size_t>(r));
                for (auto& e : x) e = static_cast<int>(rng() % static_cast<std::uint64_t>(d + 1));
                std::sort(x.begin(), x.end());
                REQUIRE(solve_via_registers(g, v, r, x).winner == base);
            }
        }
    }
}

TEST_CASE("state names for export")
{
    ParityGame g;
    g.add_vertex(2, Player::Even, "a");
    g.add_edge(0, 0);
    RegisterGame rg = expand_register_game(g, 0, {0}, 1);
    annotate_state_names(rg, g);
    REQUIRE(rg.graph.names[static_cast<std::size_t>(rg.initial)] == "(a|0|s)");
}
