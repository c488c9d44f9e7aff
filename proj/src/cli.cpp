// Copyright 2026 permq contributors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "permq/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "permq/encodings.hpp"
#include "permq/errors.hpp"
#include "permq/io.hpp"
#include "permq/kernels.hpp"
#include "permq/ppp.hpp"
#include "permq/reductions.hpp"
#include "permq/solvers.hpp"

namespace permq::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& bytes, std::ostream& out) {
    if (path == "-" || path.empty()) {
        out << bytes;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << bytes;
}

std::int64_t parse_auto_int(const std::string& s, std::int64_t auto_value) {
    if (s == "AUTO" || s == "auto") return auto_value;
    return std::stoll(s);
}

void print_stats(const ModelStats& st, std::ostream& out) {
    auto join = [](const std::vector<std::int64_t>& xs) {
        std::ostringstream s;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) s << ",";
            s << xs[i];
        }
        return s.str();
    };
    out << "vars " << st.num_vars << "\n"
        << "linear_count " << st.linear_term_count << "\n"
        << "linear_coeffs {" << join(st.linear_coeff_set) << "}\n"
        << "quad_count " << st.quadratic_term_count << "\n"
        << "quad_coeffs {" << join(st.quadratic_coeff_set) << "}\n"
        << "diameter " << st.diameter_str() << "\n"
        << "offset " << st.offset.str() << "\n";
}

json encoded_to_json(const EncodedProblem& enc) {
    json j;
    j["technique"] = technique_name(enc.kernel.technique);
    j["m"] = enc.kernel.m;
    j["n"] = enc.kernel.n;
    j["kind"] = kind_name(enc.kernel.kind);
    j["lambda"] = enc.lambda;
    j["c"] = {{"num", enc.c.num()}, {"den", enc.c.den()}};
    j["d"] = {{"num", enc.d.num()}, {"den", enc.d.den()}};
    j["objective_offset"] = {{"num", enc.objective_offset.num()},
                             {"den", enc.objective_offset.den()}};
    j["model"] = json::parse(export_model(enc.model, enc.kernel.layout, Format::JSON));
    return j;
}

EncodedProblem encoded_from_json(const json& j) {
    EncodedProblem enc;
    enc.kernel = build_kernel(technique_from_name(j.at("technique").get<std::string>()),
                              j.at("m").get<int>(), j.at("n").get<int>(),
                              kind_from_name(j.at("kind").get<std::string>()));
    enc.lambda = j.at("lambda").get<std::int64_t>();
    enc.c = Rational(j.at("c").at("num").get<std::int64_t>(), j.at("c").at("den").get<std::int64_t>());
    enc.d = Rational(j.at("d").at("num").get<std::int64_t>(), j.at("d").at("den").get<std::int64_t>());
    enc.objective_offset = Rational(j.at("objective_offset").at("num").get<std::int64_t>(),
                                    j.at("objective_offset").at("den").get<std::int64_t>());
    auto [model, layout] = import_model(j.at("model").dump());
    if (!(layout == enc.kernel.layout)) throw std::runtime_error("layout does not match kernel");
    enc.model = std::move(model);
    return enc;
}

PPPInstance reduce_from_flags(const std::string& problem, const std::string& input,
                              std::int64_t big, std::int64_t* shift_out, std::ostream& out) {
    std::istringstream in(read_file(input));
    if (problem == "qap") {
        auto [f, d] = parse_qap(in);
        return qap_to_ppp(f, d);
    }
    if (problem == "tsp") return tsp_to_ppp(parse_tsp(in));
    if (problem == "tsp-graph") {
        GraphTspResult r = tsp_graph_to_ppp(parse_graph(in), big);
        if (shift_out) *shift_out = r.shift;
        out << "big " << r.big << " shift " << r.shift << "\n";
        return std::move(r.instance);
    }
    if (problem == "subiso") {
        auto [guest, host] = parse_two_graphs(in);
        return subgraph_iso_to_ppp(guest, host);
    }
    if (problem == "matching") return matching_to_ppp(parse_graph(in));
    if (problem == "bimatching") {
        BipartiteInput b = parse_bipartite(in);
        return bipartite_matching_to_ppp(b.left, b.right, b.edges);
    }
    throw CLI::ValidationError("--problem", "unknown problem: " + problem);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"integer QUBO/Ising models for permutation problems"};
    app.require_subcommand(1);

    std::string technique = "one-hot", kind = "qubo", format = "json", out_path = "-";
    int n = 0, m = -1;
    bool want_stats = false;

    auto* kernel_cmd = app.add_subcommand("kernel", "build a permutation kernel");
    kernel_cmd->add_option("--technique", technique, "one-hot|all-different|dual-matrix|extended");
    kernel_cmd->add_option("--kind", kind, "qubo|ising");
    kernel_cmd->add_option("-n", n, "universe size")->required();
    kernel_cmd->add_option("-m", m, "selected count (default n)");
    kernel_cmd->add_option("--format", format, "json|qubo");
    kernel_cmd->add_option("--out", out_path, "output path or -");
    kernel_cmd->add_flag("--stats", want_stats, "print model statistics");

    std::string problem, input_path, big_str = "AUTO", lambda_str = "AUTO", ppp_path, model_path;
    auto* reduce_cmd = app.add_subcommand("reduce", "translate a problem into a PPP instance");
    reduce_cmd->add_option("--problem", problem, "qap|tsp|tsp-graph|subiso|matching|bimatching")
        ->required();
    reduce_cmd->add_option("--input", input_path, "input file")->required();
    reduce_cmd->add_option("--big", big_str, "AUTO or an integer bias");
    reduce_cmd->add_option("--out", out_path, "output path or -");

    auto* compose_cmd = app.add_subcommand("compose", "compose a PPP instance with a kernel");
    compose_cmd->add_option("--ppp", ppp_path, "PPP instance JSON")->required();
    compose_cmd->add_option("--technique", technique, "one-hot|dual-matrix|extended");
    compose_cmd->add_option("--kind", kind, "qubo|ising");
    compose_cmd->add_option("--lambda", lambda_str, "AUTO or a positive integer");
    compose_cmd->add_option("--out", out_path, "output path or -");

    std::string solver = "brute";
    std::uint64_t seed = 0;
    int sweeps = 1000, restarts = 1;
    auto* solve_cmd = app.add_subcommand("solve", "minimize a model");
    solve_cmd->add_option("--solver", solver, "brute|oracle|sa");
    solve_cmd->add_option("--model", model_path, "model, composed-problem or PPP JSON")->required();
    solve_cmd->add_option("--seed", seed, "random seed");
    solve_cmd->add_option("--sweeps", sweeps, "sweeps per restart");
    solve_cmd->add_option("--restarts", restarts, "independent restarts");

    auto* stats_cmd = app.add_subcommand("stats", "print model statistics");
    stats_cmd->add_option("--model", model_path, "model file")->required();

    auto* verify_cmd = app.add_subcommand("verify", "brute-force check of a kernel");
    verify_cmd->add_option("--technique", technique, "kernel technique");
    verify_cmd->add_option("--kind", kind, "qubo|ising");
    verify_cmd->add_option("-n", n, "universe size")->required();
    verify_cmd->add_option("-m", m, "selected count (default n)");

    int nodes = 0, edges = 0, size_n = 0;
    std::uint64_t gen_seed = 1;
    auto* counts_cmd = app.add_subcommand("counts", "quadratic term counts of a composed model");
    counts_cmd->add_option("--problem", problem, "qap|tsp|tsp-graph|bimatching")->required();
    counts_cmd->add_option("--technique", technique, "one-hot|dual-matrix|extended");
    counts_cmd->add_option("--kind", kind, "qubo|ising");
    counts_cmd->add_option("--input", input_path, "concrete instance file");
    counts_cmd->add_option("--nodes", nodes, "generated graph nodes");
    counts_cmd->add_option("--edges", edges, "generated graph edges");
    counts_cmd->add_option("--n", size_n, "generated dense instance size");
    counts_cmd->add_option("--seed", gen_seed, "generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*kernel_cmd) {
            if (m < 0) m = n;
            KernelHandle h = build_kernel(technique_from_name(technique), m, n,
                                          kind_from_name(kind));
            if (want_stats) print_stats(stats(h.model), out);
            Format f = format == "qubo" ? Format::QUBO_TEXT : Format::JSON;
            if (!want_stats || out_path != "-")
                write_output(out_path, export_model(h.model, h.layout, f), out);
        } else if (*reduce_cmd) {
            PPPInstance inst =
                reduce_from_flags(problem, input_path, parse_auto_int(big_str, AUTO_BIG),
                                  nullptr, out);
            write_output(out_path, ppp_to_json(inst), out);
        } else if (*compose_cmd) {
            PPPInstance inst = ppp_from_json(read_file(ppp_path));
            EncodedProblem enc = compose(inst, technique_from_name(technique),
                                         kind_from_name(kind),
                                         parse_auto_int(lambda_str, AUTO_LAMBDA));
            write_output(out_path, encoded_to_json(enc).dump(2) + "\n", out);
        } else if (*solve_cmd) {
            std::string bytes = read_file(model_path);
            if (solver == "oracle") {
                PPPInstance inst = ppp_from_json(bytes);
                OracleResult r = permutation_oracle(inst);
                json j;
                j["value"] = r.best_value;
                j["permutation"] = r.argmin.values;
                j["argmin_count"] = r.argmin_count;
                out << j.dump(2) << "\n";
                return 0;
            }
            json j = json::parse(bytes, nullptr, true);
            Solution sol;
            if (j.is_object() && j.contains("model")) {
                EncodedProblem enc = encoded_from_json(j);
                if (solver == "sa") {
                    sol = simulated_annealing(enc.model, SAParams{seed, sweeps, restarts, 0, 0, 0});
                    Solution dec = decode_solution(enc, sol.assignment);
                    sol.feasible = dec.feasible;
                    sol.permutation = dec.permutation;
                    sol.objective_value = dec.objective_value;
                } else if (enc.kernel.technique == Technique::DUAL_MATRIX &&
                           enc.model.num_vars > 26) {
                    ConditionedResult r = solve_dual_matrix_exact(enc);
                    sol = decode_solution(enc, r.assignment);
                    sol.solver = "brute-conditioned";
                } else {
                    BruteForceResult r = brute_force(enc.model);
                    sol = decode_solution(enc, r.minimizers.front());
                    sol.solver = "brute";
                }
            } else {
                auto [model, layout] = import_model(bytes);
                if (solver == "sa") {
                    sol = simulated_annealing(model, SAParams{seed, sweeps, restarts, 0, 0, 0});
                } else {
                    BruteForceResult r = brute_force(model);
                    sol.assignment = r.minimizers.front();
                    sol.energy = r.min_energy;
                    sol.solver = "brute";
                }
            }
            out << solution_to_json(sol);
        } else if (*stats_cmd) {
            auto [model, layout] = import_model(read_file(model_path));
            print_stats(stats(model), out);
        } else if (*verify_cmd) {
            if (m < 0) m = n;
            VerifyReport rep =
                verify_kernel(technique_from_name(technique), m, n, kind_from_name(kind));
            out << rep.summary() << "\n";
            if (!(rep.minimum_matches && rep.all_minimizers_decode &&
                  rep.all_permutations_covered && rep.stats_match))
                return 1;
        } else if (*counts_cmd) {
            PPPInstance inst(1, 1);
            if (!input_path.empty()) {
                inst = reduce_from_flags(problem, input_path, AUTO_BIG, nullptr, out);
            } else if (problem == "tsp-graph") {
                inst = tsp_graph_to_ppp(random_graph(nodes, edges, gen_seed)).instance;
            } else if (problem == "qap") {
                inst = qap_to_ppp(random_dense_matrix(size_n, gen_seed, false),
                                  random_dense_matrix(size_n, gen_seed + 1, false));
            } else if (problem == "tsp") {
                inst = tsp_to_ppp(random_dense_matrix(size_n, gen_seed, true));
            } else if (problem == "bimatching") {
                PPPInstance bm(size_n, size_n);
                std::int64_t w = 1;
                for (int i = 0; i < size_n; ++i)
                    for (int j = 0; j < size_n; ++j) bm.add_potential(i, j, w++);
                inst = std::move(bm);
            } else {
                throw CLI::ValidationError("--problem", "unsupported for counts: " + problem);
            }
            out << "interactions " << inst.interactions().size() << " density "
                << density(inst).to_double() << "\n";
            EncodedProblem enc = compose(inst, technique_from_name(technique),
                                         kind_from_name(kind), AUTO_LAMBDA);
            out << "total " << enc.model.quadratic.size() << ", kernel "
                << enc.kernel.model.quadratic.size() << "\n";
        }
        return 0;
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace permq::cli
