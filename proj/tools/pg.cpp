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

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pgsolve/pgsolve.hpp"

namespace {

using namespace pg;

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

ParseResult load_game(const std::string& path)
{
    ParseResult res = parse_game(read_input(path));
    for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
    return res;
}

Player parse_player(const std::string& s)
{
    if (s == "even" || s == "0") return Player::Even;
    if (s == "odd" || s == "1") return Player::Odd;
    throw std::runtime_error("player must be even, odd, 0 or 1 (got '" + s + "')");
}

int resolve_vertex(const ParityGame& g, const std::string& token)
{
    if (!g.names.empty())
        for (int v = 0; v < g.size(); ++v)
            if (g.names[static_cast<std::size_t>(v)] == token) return v;
    try {
        std::size_t used = 0;
        const int v = std::stoi(token, &used);
        if (used == token.size() && g.has_vertex(v)) return v;
    } catch (const std::exception&) {
    }
    throw std::runtime_error("unknown vertex '" + token + "'");
}

std::vector<int> resolve_vertex_list(const ParityGame& g, const std::string& csv)
{
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ','))
        if (!token.empty()) out.push_back(resolve_vertex(g, token));
    return out;
}

std::vector<int> parse_int_list(const std::string& csv, const char* what)
{
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        try {
            out.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw std::runtime_error(std::string("bad ") + what + " entry '" + token + "'");
        }
    }
    return out;
}

std::string label_list(const ParityGame& g, const std::vector<int>& vs)
{
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i > 0) out += ' ';
        out += g.label(vs[i]);
    }
    return out;
}

void print_zielonka_stats(const ZielonkaStats& st)
{
    std::cout << "recursiveCalls: " << st.recursive_calls << "\n";
    std::cout << "outerIterations: " << st.outer_iterations << "\n";
    std::cout << "attractorCalls: " << st.attractor_calls << "\n";
    std::cout << "attractorEdgeWork: " << st.attractor_edge_work << "\n";
}

void print_outcome(const ParityGame& g, const SolveOutcome& outcome)
{
    std::cout << "regionEven: " << label_list(g, outcome.region_even) << "\n";
    std::cout << "regionOdd: " << label_list(g, outcome.region_odd) << "\n";
}

int run_solve(const std::string& file, const std::string& algo, const std::string& start_token,
              std::optional<int> registers, const std::string& initial_csv, std::size_t cap,
              std::uint64_t budget, const std::string& strategy_even_path,
              const std::string& strategy_odd_path, const std::string& dump_register_path,
              const std::string& dot_path)
{
    const ParityGame g = load_game(file).game;
    std::cout << "algo: " << algo << "\n";
    std::cout << "vertices: " << g.size() << "\n";
    std::cout << "edges: " << g.edge_count() << "\n";

    if (algo == "registers") {
        std::optional<std::vector<int>> initial;
        if (!initial_csv.empty()) initial = parse_int_list(initial_csv, "initial register");
        std::vector<int> starts;
        if (!start_token.empty())
            starts.push_back(resolve_vertex(g, start_token));
        else
            for (int v = 0; v < g.size(); ++v) starts.push_back(v);

        if (!dump_register_path.empty()) {
            const int r = registers.value_or(default_register_count(g.size()));
            const auto x = initial.value_or(std::vector<int>(static_cast<std::size_t>(r), 0));
            RegisterGame rg = expand_register_game(g, starts.front(), x, r, cap);
            annotate_state_names(rg, g);
            write_output(dump_register_path, emit_game(edge_to_vertex_colored(rg.graph)));
        }

        for (int start : starts) {
            const auto res = solve_via_registers(g, start, registers, initial, cap);
            if (starts.size() == 1) {
                std::cout << "registers: " << res.registers << "\n";
                std::cout << "states: " << res.states << "\n";
                std::cout << "registerEdges: " << res.edges << "\n";
                std::cout << "winner: " << player_name(res.winner) << "\n";
            } else {
                std::cout << "winnerAt: " << g.label(start) << " " << player_name(res.winner)
                          << " states: " << res.states << "\n";
            }
        }
        return 0;
    }

    SolveOutcome outcome;
    if (algo == "zielonka") {
        ZielonkaSolver solver;
        outcome = solver.solve(g);
        print_outcome(g, outcome);
        print_zielonka_stats(solver.stats());
    } else if (algo == "oracle") {
        outcome = brute_force_solve(g, {budget});
        print_outcome(g, outcome);
    } else {
        throw std::runtime_error("unknown algorithm '" + algo + "'");
    }
    if (!start_token.empty())
        std::cout << "winner: " << player_name(outcome.winner_of(resolve_vertex(g, start_token)))
                  << "\n";
    if (!strategy_even_path.empty())
        write_output(strategy_even_path, emit_strategy(outcome.strategy_even));
    if (!strategy_odd_path.empty())
        write_output(strategy_odd_path, emit_strategy(outcome.strategy_odd));
    if (!dot_path.empty()) write_output(dot_path, emit_dot(g, &outcome));
    return 0;
}

int run_attractor(const std::string& file, const std::string& player_str,
                  const std::string& target_csv)
{
    const ParityGame g = load_game(file).game;
    const Player attacker = parse_player(player_str);
    const std::vector<int> target = resolve_vertex_list(g, target_csv);
    const AttractorResult res = solve_reachability(g, attacker, target);

    std::vector<int> complement = res.defender_strategy.support;
    std::cout << "player: " << player_name(attacker) << "\n";
    std::cout << "target: " << label_list(g, target) << "\n";
    std::cout << "attractor: " << label_list(g, res.attractor) << "\n";
    std::cout << "complement: " << label_list(g, complement) << "\n";
    std::cout << "distance:";
    for (int v = 0; v < g.size(); ++v) {
        const auto d = res.distance[static_cast<std::size_t>(v)];
        std::cout << ' ' << g.label(v) << ':';
        if (d.is_infinite())
            std::cout << "inf";
        else
            std::cout << d.value();
    }
    std::cout << "\n";
    std::cout << "queueInsertions: " << res.stats.queue_insertions << "\n";
    std::cout << "edgeInspections: " << res.stats.edge_inspections << "\n";
    return 0;
}

int run_verify(const std::string& file, const std::string& strategy_path)
{
    const ParityGame g = load_game(file).game;
    const PositionalStrategy s = parse_strategy(read_input(strategy_path), g.size());
    const VerifyResult res = verify_strategy(g, s);
    std::cout << res.describe(g) << "\n";
    return res.ok() ? 0 : 1;
}

int run_convert(const std::string& file, const std::string& to, const std::string& target_csv,
                const std::string& player_str, const std::string& out_path)
{
    const ParityGame g = load_game(file).game;
    std::string text;
    if (to == "novsinks") {
        text = emit_game(eliminate_sinks(g));
    } else if (to == "parity") {
        if (target_csv.empty())
            throw std::runtime_error("convert --to parity needs --target (reachability encoding)");
        text = emit_game(encode_reachability_as_parity(g, resolve_vertex_list(g, target_csv),
                                                       parse_player(player_str)));
    } else if (to == "edge") {
        // re-express vertex colors as edge colors, then subdivide back
        text = emit_game(edge_to_vertex_colored(vertex_to_edge_colored(g)));
    } else if (to == "dot") {
        text = emit_dot(g);
    } else {
        throw std::runtime_error("unknown conversion target '" + to + "'");
    }
    write_output(out_path, text);
    return 0;
}

int run_gen(const std::string& family, int n, int colors, const std::string& outdeg,
            double sink_prob, std::uint64_t seed, int r, const std::string& out_path)
{
    ParityGame g;
    if (family == "random") {
        RandomGameOptions opt;
        opt.vertices = n;
        opt.max_color = colors;
        opt.sink_prob = sink_prob;
        opt.seed = seed;
        const auto sep = outdeg.find(':');
        if (sep == std::string::npos)
            throw std::runtime_error("--outdeg must look like LO:HI");
        opt.min_outdeg = std::stoi(outdeg.substr(0, sep));
        opt.max_outdeg = std::stoi(outdeg.substr(sep + 1));
        g = random_game(opt);
    } else if (family == "worstcase") {
        g = worstcase_game(n);
    } else if (family == "lehtinen") {
        g = generate_lehtinen_family(r);
    } else {
        throw std::runtime_error("unknown family '" + family + "'");
    }
    write_output(out_path, emit_game(g));
    return 0;
}

int run_bench(const std::string& family, const std::string& sizes_csv, int repeat, int colors,
              std::uint64_t seed)
{
    const std::vector<int> sizes = parse_int_list(sizes_csv, "size");
    ZielonkaSolver solver;
    for (int size : sizes) {
        for (int rep = 0; rep < repeat; ++rep) {
            ParityGame g;
            if (family == "worstcase")
                g = worstcase_game(size);
            else if (family == "lehtinen")
                g = generate_lehtinen_family(size);
            else if (family == "random") {
                RandomGameOptions opt;
                opt.vertices = size;
                opt.max_color = colors;
                opt.seed = seed + static_cast<std::uint64_t>(rep);
                g = random_game(opt);
            } else {
                throw std::runtime_error("unknown family '" + family + "'");
            }
            const auto t0 = std::chrono::steady_clock::now();
            solver.solve(g);
            const auto t1 = std::chrono::steady_clock::now();
            const auto& st = solver.stats();
            std::cout << "family: " << family << " size: " << size << " rep: " << rep
                      << " vertices: " << g.size() << " edges: " << g.edge_count()
                      << " recursiveCalls: " << st.recursive_calls
                      << " outerIterations: " << st.outer_iterations
                      << " attractorCalls: " << st.attractor_calls
                      << " attractorEdgeWork: " << st.attractor_edge_work << " wallMs: "
                      << std::chrono::duration<double, std::milli>(t1 - t0).count() << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"parity and reachability game solver toolkit"};
    app.require_subcommand(1);

    std::string file = "-";
    std::string algo = "zielonka";
    std::string start_token;
    std::optional<int> registers;
    std::string initial_csv;
    std::size_t cap = pg::kDefaultStateCap;
    std::uint64_t budget = std::uint64_t{1} << 20;
    std::string strategy_even_path, strategy_odd_path, dump_register_path, dot_path;

    auto* solve = app.add_subcommand("solve", "solve a game and print regions or winner");
    solve->add_option("file", file, "game file ('-' for stdin)");
    solve->add_option("--algo", algo, "zielonka, oracle or registers")->capture_default_str();
    solve->add_option("--start", start_token, "start vertex (name or id)");
    solve->add_option("--registers", registers, "register count for --algo registers");
    solve->add_option("--initial", initial_csv, "initial register vector, e.g. 0,0,1");
    solve->add_option("--cap", cap, "register expansion state cap")->capture_default_str();
    solve->add_option("--budget", budget, "oracle strategy-space budget")->capture_default_str();
    solve->add_option("--strategy-even", strategy_even_path, "write Even's strategy here");
    solve->add_option("--strategy-odd", strategy_odd_path, "write Odd's strategy here");
    solve->add_option("--dump-register-game", dump_register_path,
                      "write the expanded register game (vertex-colored) here");
    solve->add_option("--dot", dot_path, "write a solved graphviz rendering here");

    std::string player_str = "even";
    std::string target_csv;
    auto* attractor_cmd = app.add_subcommand("attractor", "attractor and winning distances");
    attractor_cmd->add_option("file", file, "game file ('-' for stdin)");
    attractor_cmd->add_option("--player", player_str, "attacking player")->capture_default_str();
    attractor_cmd->add_option("--target", target_csv, "target vertices, comma separated")
        ->required();

    std::string strategy_path;
    auto* verify = app.add_subcommand("verify", "verify a strategy file against a game");
    verify->add_option("file", file, "game file ('-' for stdin)");
    verify->add_option("--strategy", strategy_path, "strategy file")->required();

    std::string to, out_path;
    auto* convert = app.add_subcommand("convert", "game-to-game conversions");
    convert->add_option("file", file, "game file ('-' for stdin)");
    convert->add_option("--to", to, "parity (reachability encoding), edge, novsinks or dot")
        ->required();
    convert->add_option("--target", target_csv, "target vertices for --to parity");
    convert->add_option("--player", player_str, "attacker for --to parity")
        ->capture_default_str();
    convert->add_option("-o,--output", out_path, "output file (default stdout)");

    std::string family = "random";
    int n = 8, colors = 3, r = 1, repeat = 1;
    std::string outdeg = "1:3";
    double sink_prob = 0;
    std::uint64_t seed = 1;
    auto* gen = app.add_subcommand("gen", "generate games");
    gen->add_option("--family", family, "random, worstcase or lehtinen")->capture_default_str();
    gen->add_option("-n,--vertices", n, "vertex count (worstcase: pair count)")
        ->capture_default_str();
    gen->add_option("--colors", colors, "maximal color for random games")->capture_default_str();
    gen->add_option("--outdeg", outdeg, "out-degree range LO:HI for random games")
        ->capture_default_str();
    gen->add_option("--sink-prob", sink_prob, "sink probability for random games")
        ->capture_default_str();
    gen->add_option("--seed", seed, "random seed")->capture_default_str();
    gen->add_option("--r", r, "index of the lehtinen family")->capture_default_str();
    gen->add_option("-o,--output", out_path, "output file (default stdout)");

    std::string sizes_csv = "4,8,16";
    auto* bench = app.add_subcommand("bench", "solve generated games and report stats rows");
    bench->add_option("--family", family, "random, worstcase or lehtinen")
        ->capture_default_str();
    bench->add_option("--sizes", sizes_csv, "sizes, comma separated")->capture_default_str();
    bench->add_option("--repeat", repeat, "repetitions per size")->capture_default_str();
    bench->add_option("--colors", colors, "maximal color for random games")
        ->capture_default_str();
    bench->add_option("--seed", seed, "random seed")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return run_solve(file, algo, start_token, registers, initial_csv, cap, budget,
                             strategy_even_path, strategy_odd_path, dump_register_path, dot_path);
        if (attractor_cmd->parsed()) return run_attractor(file, player_str, target_csv);
        if (verify->parsed()) return run_verify(file, strategy_path);
        if (convert->parsed()) return run_convert(file, to, target_csv, player_str, out_path);
        if (gen->parsed())
            return run_gen(family, n, colors, outdeg, sink_prob, seed, r, out_path);
        if (bench->parsed()) return run_bench(family, sizes_csv, repeat, colors, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
