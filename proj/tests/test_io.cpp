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
using pgtest::random_corpus;

TEST_CASE("parse a two-vertex file")
{
    const auto res = parse_game("parity 1;\n0 2 0 1;\n1 1 1 0;");
    const ParityGame& g = res.game;
    REQUIRE(g.size() == 2);
    REQUIRE(g.color == std::vector<int>{2, 1});
    REQUIRE(g.owner[0] == Player::Even);
    REQUIRE(g.owner[1] == Player::Odd);
    REQUIRE(g.succ[0] == std::vector<int>{1});
    REQUIRE(g.succ[1] == std::vector<int>{0});
    REQUIRE(res.warnings.empty());
}

TEST_CASE("empty successor list gives a sink")
{
    const auto res = parse_game("0 2 0 ;");
    REQUIRE(res.game.size() == 1);
    REQUIRE(res.game.is_sink(0));
    // also without the space
    REQUIRE(parse_game("0 2 0;").game.is_sink(0));
}

TEST_CASE("names, sparse ids and whitespace tolerance")
{
    const auto res = parse_game("parity 10;\n  10 3 1 2 , 10 \"ten\" ;\n\n 2 0 0 10;");
    const ParityGame& g = res.game;
    REQUIRE(g.size() == 2);
    REQUIRE(res.original_ids == std::vector<int>{10, 2});
    REQUIRE(g.label(0) == "ten");
    REQUIRE(g.succ[0] == std::vector<int>{0, 1}); // remapped dense ids
    REQUIRE(g.succ[1] == std::vector<int>{0});
}

TEST_CASE("duplicate edges are dropped with a warning")
{
    const auto res = parse_game("0 1 0 0,0;");
    REQUIRE(res.game.succ[0] == std::vector<int>{0});
    REQUIRE(res.warnings.size() == 1);
    REQUIRE(res.warnings[0].find("duplicate edge") != std::string::npos);
}

TEST_CASE("parse errors carry line numbers")
{
    try {
        parse_game("0 1 0 0;\n1 2 1 junk;");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        REQUIRE(e.line() == 2);
    }

    REQUIRE_THROWS_AS(parse_game("0 1 0 0;\n0 2 1 0;"), ParseError); // duplicate id
    REQUIRE_THROWS_AS(parse_game("0 1 0 7;"), ParseError);           // unknown successor
    REQUIRE_THROWS_AS(parse_game("0 1 2 0;"), ParseError);           // bad owner
    REQUIRE_THROWS_AS(parse_game("0 1 0 0"), ParseError);            // missing ';'
}

TEST_CASE("emit is deterministic and round-trips")
{
    const ParityGame g = pgtest::sample_parity_game();
    const std::string text = emit_game(g);
    REQUIRE(text == emit_game(g));

    const auto back = parse_game(text);
    REQUIRE(back.game.color == g.color);
    REQUIRE(back.game.owner == g.owner);
    REQUIRE(back.game.succ == g.succ);
    REQUIRE(back.game.names == g.names);
    REQUIRE(emit_game(back.game) == text);
}

TEST_CASE("emit of a single-vertex game")
{
    ParityGame g;
    g.add_vertex(3, Player::Odd);
    REQUIRE(emit_game(g) == "parity 0;\n0 3 1 ;\n");
}

TEST_CASE("parse-emit round trip on random games")
{
    for (const auto& g : random_corpus(60, 9, 4, 3, 515, 0.2)) {
        const std::string text = emit_game(g);
        const auto back = parse_game(text);
        REQUIRE(emit_game(back.game) == text);
        REQUIRE(back.game.succ == g.succ);
    }
}

TEST_CASE("dot output shows shapes, clusters and bold strategy edges")
{
    const ParityGame g = pgtest::sample_parity_game();
    const SolveOutcome out = solve_parity(g);

    const std::string plain = emit_dot(g);
    REQUIRE(plain.find("shape=ellipse") != std::string::npos);
    REQUIRE(plain.find("shape=box") != std::string::npos);
    REQUIRE(plain.find("cluster") == std::string::npos);

    const std::string solved = emit_dot(g, &out);
    REQUIRE(solved.find("subgraph cluster_even") != std::string::npos);
    REQUIRE(solved.find("subgraph cluster_odd") != std::string::npos);
    REQUIRE(solved.find("style=bold") != std::string::npos);
    REQUIRE(solved == emit_dot(g, &out));
}

TEST_CASE("strategy files round trip and feed the verifier")
{
    const ParityGame g = pgtest::sample_parity_game();
    const SolveOutcome out = solve_parity(g);

    const std::string text = emit_strategy(out.strategy_even);
    const PositionalStrategy back = parse_strategy(text, g.size());
    REQUIRE(back.player == out.strategy_even.player);
    REQUIRE(back.support == out.strategy_even.support);
    REQUIRE(back.moves == out.strategy_even.moves);
    REQUIRE(verify_strategy(g, back).ok());
}

TEST_CASE("empty-support strategies round trip")
{
    const ParityGame g = worstcase_game(2); // Even's region is empty
    const SolveOutcome out = solve_parity(g);
    REQUIRE(out.strategy_even.support.empty());
    const PositionalStrategy back =
        parse_strategy(emit_strategy(out.strategy_even), g.size());
    REQUIRE(back.support.empty());
    REQUIRE(verify_strategy(g, back).ok());
}

TEST_CASE("strategy parse errors")
{
    REQUIRE_THROWS_AS(parse_strategy("support 0\n", 2), ParseError);
    REQUIRE_THROWS_AS(parse_strategy("player even\nsupport 0\n0 - 1\n", 2), ParseError);
    REQUIRE_THROWS_AS(parse_strategy("player even\nsupport 9\n", 2), ParseError);
}
