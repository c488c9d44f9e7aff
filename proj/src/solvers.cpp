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

#include "permq/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "permq/errors.hpp"

namespace permq {

namespace {

constexpr std::size_t kMinimizerCap = 1000000;

struct Adjacency {
    std::vector<std::vector<std::pair<std::int32_t, std::int64_t>>> nbr;
    std::vector<std::int64_t> lin;

    explicit Adjacency(const QuadraticModel& model)
        : nbr(static_cast<std::size_t>(model.num_vars)),
          lin(static_cast<std::size_t>(model.num_vars), 0) {
        for (const auto& t : model.linear) lin[static_cast<std::size_t>(t.var)] = t.coef;
        for (const auto& t : model.quadratic) {
            nbr[static_cast<std::size_t>(t.i)].emplace_back(t.j, t.coef);
            nbr[static_cast<std::size_t>(t.j)].emplace_back(t.i, t.coef);
        }
    }

    // Energy change of flipping variable v in place.
    std::int64_t flip_delta(const std::vector<std::int8_t>& vals, Kind kind, std::int32_t v) const {
        std::int64_t field = lin[static_cast<std::size_t>(v)];
        for (const auto& [w, c] : nbr[static_cast<std::size_t>(v)])
            field += c * vals[static_cast<std::size_t>(w)];
        if (kind == Kind::QUBO) return (1 - 2 * vals[static_cast<std::size_t>(v)]) * field;
        return -2 * vals[static_cast<std::size_t>(v)] * field;
    }
};

std::int64_t term_energy(const QuadraticModel& model, const std::vector<std::int8_t>& vals) {
    std::int64_t e = 0;
    for (const auto& t : model.linear) e += t.coef * vals[static_cast<std::size_t>(t.var)];
    for (const auto& t : model.quadratic)
        e += t.coef * vals[static_cast<std::size_t>(t.i)] * vals[static_cast<std::size_t>(t.j)];
    return e;
}

void flip(std::vector<std::int8_t>& vals, Kind kind, std::int32_t v) {
    auto& x = vals[static_cast<std::size_t>(v)];
    x = kind == Kind::QUBO ? static_cast<std::int8_t>(1 - x) : static_cast<std::int8_t>(-x);
}

}  // namespace

BruteForceResult brute_force(const QuadraticModel& model, int cap) {
    if (model.num_vars > cap)
        throw TooLarge("brute force limited to " + std::to_string(cap) + " variables, got " +
                       std::to_string(model.num_vars));
    const int V = model.num_vars;
    std::vector<std::int8_t> vals(static_cast<std::size_t>(V),
                                  model.kind == Kind::QUBO ? 0 : -1);
    Adjacency adj(model);
    std::int64_t energy = term_energy(model, vals);

    BruteForceResult res;
    std::int64_t best = energy;
    res.minimizers.push_back(vals);

    const std::uint64_t total = V == 0 ? 1 : (1ull << V);
    for (std::uint64_t k = 1; k < total; ++k) {
        auto v = static_cast<std::int32_t>(std::countr_zero(k));
        energy += adj.flip_delta(vals, model.kind, v);
        flip(vals, model.kind, v);
        if (energy < best) {
            best = energy;
            res.minimizers.clear();
            res.truncated = false;
            res.minimizers.push_back(vals);
        } else if (energy == best) {
            if (res.minimizers.size() < kMinimizerCap)
                res.minimizers.push_back(vals);
            else
                res.truncated = true;
        }
    }
    res.min_energy = Rational(best) + model.offset;
    return res;
}

ConditionedResult brute_force_conditioned(const QuadraticModel& model,
                                          const std::vector<std::int32_t>& core,
                                          const std::vector<std::vector<std::int32_t>>& blocks,
                                          int core_cap) {
    const int V = model.num_vars;
    if (static_cast<int>(core.size()) > core_cap)
        throw TooLarge("conditioned core limited to " + std::to_string(core_cap) + " variables");
    std::vector<int> owner(static_cast<std::size_t>(V), -2);  // -1 core, >= 0 block id
    for (std::int32_t v : core) {
        if (v < 0 || v >= V || owner[static_cast<std::size_t>(v)] != -2)
            throw std::invalid_argument("core/block sets must partition the variables");
        owner[static_cast<std::size_t>(v)] = -1;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].size() > 20) throw TooLarge("conditioned block too large");
        for (std::int32_t v : blocks[b]) {
            if (v < 0 || v >= V || owner[static_cast<std::size_t>(v)] != -2)
                throw std::invalid_argument("core/block sets must partition the variables");
            owner[static_cast<std::size_t>(v)] = static_cast<int>(b);
        }
    }
    for (int o : owner)
        if (o == -2) throw std::invalid_argument("core/block sets must partition the variables");

    std::vector<std::size_t> local(static_cast<std::size_t>(V));
    for (std::size_t i = 0; i < core.size(); ++i) local[static_cast<std::size_t>(core[i])] = i;
    for (const auto& blk : blocks)
        for (std::size_t i = 0; i < blk.size(); ++i) local[static_cast<std::size_t>(blk[i])] = i;

    struct Block {
        std::vector<std::int32_t> vars;
        std::vector<std::int64_t> lin;                                   // local base biases
        std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> pairs;  // local internal
        std::vector<std::int64_t> bias;  // base + current core contribution
        std::int64_t g = 0;              // current conditional minimum
        std::uint32_t argmin = 0;        // bits of the minimizing local assignment
    };
    std::vector<Block> blk(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        blk[b].vars = blocks[b];
        blk[b].lin.assign(blocks[b].size(), 0);
        blk[b].bias.assign(blocks[b].size(), 0);
    }

    // Core-local structures.
    std::vector<std::int64_t> core_lin(core.size(), 0);
    std::vector<std::vector<std::pair<std::int32_t, std::int64_t>>> core_adj(core.size());
    // Cross terms grouped by core variable: (block, local block var, coef).
    std::vector<std::vector<std::tuple<int, std::size_t, std::int64_t>>> cross(core.size());

    for (const auto& t : model.linear) {
        int o = owner[static_cast<std::size_t>(t.var)];
        if (o == -1)
            core_lin[local[static_cast<std::size_t>(t.var)]] = t.coef;
        else
            blk[static_cast<std::size_t>(o)].lin[local[static_cast<std::size_t>(t.var)]] = t.coef;
    }
    for (const auto& t : model.quadratic) {
        int oi = owner[static_cast<std::size_t>(t.i)];
        int oj = owner[static_cast<std::size_t>(t.j)];
        if (oi == -1 && oj == -1) {
            core_adj[local[static_cast<std::size_t>(t.i)]].emplace_back(
                static_cast<std::int32_t>(local[static_cast<std::size_t>(t.j)]), t.coef);
            core_adj[local[static_cast<std::size_t>(t.j)]].emplace_back(
                static_cast<std::int32_t>(local[static_cast<std::size_t>(t.i)]), t.coef);
        } else if (oi == oj) {
            blk[static_cast<std::size_t>(oi)].pairs.emplace_back(
                local[static_cast<std::size_t>(t.i)], local[static_cast<std::size_t>(t.j)], t.coef);
        } else if (oi == -1) {
            cross[local[static_cast<std::size_t>(t.i)]].emplace_back(
                oj, local[static_cast<std::size_t>(t.j)], t.coef);
        } else if (oj == -1) {
            cross[local[static_cast<std::size_t>(t.j)]].emplace_back(
                oi, local[static_cast<std::size_t>(t.i)], t.coef);
        } else {
            throw std::invalid_argument("blocks are not conditionally independent");
        }
    }

    const std::int8_t cold = model.kind == Kind::QUBO ? 0 : -1;
    auto value_of = [&](int bit) {
        return model.kind == Kind::QUBO ? static_cast<std::int64_t>(bit)
                                        : static_cast<std::int64_t>(2 * bit - 1);
    };

    std::vector<std::int8_t> core_vals(core.size(), cold);
    auto minimize_block = [&](Block& bk) {
        const std::size_t k = bk.vars.size();
        std::int64_t best = 0;
        std::uint32_t best_bits = 0;
        const std::uint32_t states = 1u << k;
        for (std::uint32_t bits = 0; bits < states; ++bits) {
            std::int64_t e = 0;
            for (std::size_t u = 0; u < k; ++u) e += bk.bias[u] * value_of((bits >> u) & 1u);
            for (const auto& [u, w, c] : bk.pairs)
                e += c * value_of((bits >> u) & 1u) * value_of((bits >> w) & 1u);
            if (bits == 0 || e < best) {
                best = e;
                best_bits = bits;
            }
        }
        bk.g = best;
        bk.argmin = best_bits;
    };

    // Initial state: core all cold.
    std::int64_t e_core = 0;
    for (std::size_t i = 0; i < core.size(); ++i) e_core += core_lin[i] * core_vals[i];
    for (std::size_t i = 0; i < core.size(); ++i)
        for (const auto& [j2, c] : core_adj[i])
            if (static_cast<std::size_t>(j2) > i)
                e_core += c * core_vals[i] * core_vals[static_cast<std::size_t>(j2)];
    for (std::size_t b = 0; b < blk.size(); ++b) {
        for (std::size_t u = 0; u < blk[b].vars.size(); ++u) blk[b].bias[u] = blk[b].lin[u];
    }
    for (std::size_t i = 0; i < core.size(); ++i)
        for (const auto& [b, u, c] : cross[i])
            blk[static_cast<std::size_t>(b)].bias[u] += c * core_vals[i];
    std::int64_t g_total = 0;
    for (auto& bk : blk) {
        minimize_block(bk);
        g_total += bk.g;
    }

    std::int64_t best = e_core + g_total;
    std::vector<std::int8_t> best_assign(static_cast<std::size_t>(V), cold);
    auto record = [&]() {
        for (std::size_t i = 0; i < core.size(); ++i)
            best_assign[static_cast<std::size_t>(core[i])] = core_vals[i];
        for (const auto& bk : blk)
            for (std::size_t u = 0; u < bk.vars.size(); ++u)
                best_assign[static_cast<std::size_t>(bk.vars[u])] =
                    ((bk.argmin >> u) & 1u) ? std::int8_t(1) : cold;
    };
    record();

    std::vector<char> dirty(blk.size(), 0);
    std::vector<int> dirty_list;
    const std::uint64_t total = core.empty() ? 1 : (1ull << core.size());
    for (std::uint64_t k = 1; k < total; ++k) {
        auto v = static_cast<std::size_t>(std::countr_zero(k));
        std::int8_t oldv = core_vals[v];
        std::int64_t field = core_lin[v];
        for (const auto& [w, c] : core_adj[v]) field += c * core_vals[static_cast<std::size_t>(w)];
        e_core += model.kind == Kind::QUBO ? (1 - 2 * oldv) * field : -2 * oldv * field;
        std::int8_t newv = model.kind == Kind::QUBO ? static_cast<std::int8_t>(1 - oldv)
                                                    : static_cast<std::int8_t>(-oldv);
        core_vals[v] = newv;
        std::int64_t dv = newv - oldv;
        dirty_list.clear();
        for (const auto& [b, u, c] : cross[v]) {
            blk[static_cast<std::size_t>(b)].bias[u] += c * dv;
            if (!dirty[static_cast<std::size_t>(b)]) {
                dirty[static_cast<std::size_t>(b)] = 1;
                dirty_list.push_back(b);
            }
        }
        for (int b : dirty_list) {
            dirty[static_cast<std::size_t>(b)] = 0;
            g_total -= blk[static_cast<std::size_t>(b)].g;
            minimize_block(blk[static_cast<std::size_t>(b)]);
            g_total += blk[static_cast<std::size_t>(b)].g;
        }
        if (e_core + g_total < best) {
            best = e_core + g_total;
            record();
        }
    }
    return ConditionedResult{Rational(best) + model.offset, std::move(best_assign)};
}

ConditionedResult solve_dual_matrix_exact(const EncodedProblem& enc) {
    if (enc.kernel.technique != Technique::DUAL_MATRIX)
        throw std::invalid_argument("exact decomposition applies to dual-matrix problems");
    std::vector<std::int32_t> core;
    std::vector<std::vector<std::int32_t>> blocks(static_cast<std::size_t>(enc.kernel.n));
    for (int v = 0; v < enc.model.num_vars; ++v) {
        const VarLabel& l = enc.kernel.layout.label(v);
        if (l.matrix == Matrix::A)
            core.push_back(v);
        else
            blocks[static_cast<std::size_t>(l.col)].push_back(v);
    }
    return brute_force_conditioned(enc.model, core, blocks);
}

namespace {

void oracle_rec(const PPPInstance& inst, std::vector<int>& vals, std::vector<char>& used,
                std::int64_t acc, OracleResult& res) {
    const int i = static_cast<int>(vals.size());
    if (i == inst.m()) {
        if (res.argmin_count == 0 || acc < res.best_value) {
            res.best_value = acc;
            res.argmin.values = vals;
            res.argmin_count = 1;
        } else if (acc == res.best_value) {
            ++res.argmin_count;
        }
        return;
    }
    for (int j = 0; j < inst.n(); ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        std::int64_t add = 0;
        auto pt = inst.potentials().find({i, j});
        if (pt != inst.potentials().end()) add += pt->second;
        for (int i2 = 0; i2 < i; ++i2) {
            auto it = inst.interactions().find({i2, vals[static_cast<std::size_t>(i2)], i, j});
            if (it != inst.interactions().end()) add += it->second;
        }
        used[static_cast<std::size_t>(j)] = 1;
        vals.push_back(j);
        oracle_rec(inst, vals, used, acc + add, res);
        vals.pop_back();
        used[static_cast<std::size_t>(j)] = 0;
    }
}

}  // namespace

OracleResult permutation_oracle(const PPPInstance& inst) {
    double count = 1;
    for (int t = 0; t < inst.m(); ++t) count *= inst.n() - t;
    if (count > 1e7) throw TooLarge("too many injections to enumerate");

    OracleResult res;
    res.best_value = 0;
    res.argmin = PartialPermutation{inst.m(), inst.n(), {}};
    res.argmin_count = 0;
    std::vector<int> vals;
    std::vector<char> used(static_cast<std::size_t>(inst.n()), 0);
    oracle_rec(inst, vals, used, 0, res);
    return res;
}

Solution simulated_annealing(const QuadraticModel& model, const SAParams& params) {
    if (model.num_vars < 1) throw std::invalid_argument("model must have at least one variable");
    if (params.sweeps < 1) throw std::invalid_argument("sweeps must be at least 1");
    if (params.restarts < 1) throw std::invalid_argument("restarts must be at least 1");

    double t0 = params.t_initial;
    if (t0 <= 0) {
        std::int64_t mx = 1;
        for (const auto& t : model.linear) mx = std::max(mx, std::abs(t.coef));
        for (const auto& t : model.quadratic) mx = std::max(mx, std::abs(t.coef));
        t0 = static_cast<double>(mx);
    }
    double tf = params.t_final > 0 ? params.t_final : 0.1;
    double ratio = params.ratio;
    if (ratio <= 0 || ratio >= 1)
        ratio = params.sweeps > 1 ? std::pow(tf / t0, 1.0 / (params.sweeps - 1)) : 1.0;

    const int V = model.num_vars;
    Adjacency adj(model);

    Solution best;
    best.solver = "sa";
    best.seed = params.seed;
    best.sweeps = params.sweeps;
    bool have_best = false;
    std::int64_t best_terms = 0;

    for (int r = 0; r < params.restarts; ++r) {
        std::mt19937_64 rng(params.seed + static_cast<std::uint64_t>(r) * 0x9e3779b97f4a7c15ull);
        std::vector<std::int8_t> vals(static_cast<std::size_t>(V));
        for (auto& v : vals) {
            bool hot = (rng() >> 40) & 1;
            v = hot ? 1 : (model.kind == Kind::QUBO ? 0 : -1);
        }
        std::int64_t energy = term_energy(model, vals);
        std::int64_t run_best = energy;
        std::vector<std::int8_t> run_best_vals = vals;
        std::uniform_int_distribution<std::int32_t> pick(0, V - 1);
        std::uniform_real_distribution<double> unit(0.0, 1.0);

        double temp = t0;
        for (int sweep = 0; sweep < params.sweeps; ++sweep) {
            for (int step = 0; step < V; ++step) {
                std::int32_t v = pick(rng);
                std::int64_t delta = adj.flip_delta(vals, model.kind, v);
                if (delta <= 0 || unit(rng) < std::exp(-static_cast<double>(delta) / temp)) {
                    energy += delta;
                    flip(vals, model.kind, v);
                    if (energy < run_best) {
                        run_best = energy;
                        run_best_vals = vals;
                    }
                }
            }
            temp *= ratio;
        }
        best.restart_energies.push_back(Rational(run_best) + model.offset);
        if (!have_best || run_best < best_terms ||
            (run_best == best_terms &&
             std::lexicographical_compare(run_best_vals.begin(), run_best_vals.end(),
                                          best.assignment.begin(), best.assignment.end()))) {
            have_best = true;
            best_terms = run_best;
            best.assignment = std::move(run_best_vals);
        }
    }
    best.energy = Rational(best_terms) + model.offset;
    return best;
}

std::string VerifyReport::summary() const {
    std::ostringstream out;
    out << "minimum " << measured_minimum.str() << " (expected " << expected_optimum.str()
        << "), minimizers " << minimizer_count << ", decode "
        << (all_minimizers_decode ? "100%" : "INCOMPLETE") << ", coverage "
        << (all_permutations_covered ? "complete" : "INCOMPLETE") << ", stats "
        << (stats_match ? "match" : "MISMATCH");
    return out.str();
}

namespace {

void each_injection(int m, int n, std::vector<int>& vals, std::vector<char>& used,
                    const std::function<void(const std::vector<int>&)>& fn) {
    if (static_cast<int>(vals.size()) == m) {
        fn(vals);
        return;
    }
    for (int j = 0; j < n; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        used[static_cast<std::size_t>(j)] = 1;
        vals.push_back(j);
        each_injection(m, n, vals, used, fn);
        vals.pop_back();
        used[static_cast<std::size_t>(j)] = 0;
    }
}

}  // namespace

VerifyReport verify_kernel(Technique technique, int m, int n, Kind kind) {
    KernelHandle handle = build_kernel(technique, m, n, kind);
    BruteForceResult bf = brute_force(handle.model);

    VerifyReport rep;
    rep.measured_minimum = bf.min_energy;
    rep.expected_optimum = handle.optimal_value;
    rep.minimizer_count = bf.minimizers.size();
    rep.minimum_matches = bf.min_energy == handle.optimal_value;

    rep.all_minimizers_decode = true;
    for (const auto& a : bf.minimizers)
        if (!decode_permutation(handle, a).feasible) {
            rep.all_minimizers_decode = false;
            break;
        }

    rep.all_permutations_covered = true;
    std::vector<int> vals;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    each_injection(m, n, vals, used, [&](const std::vector<int>& v) {
        PartialPermutation p{m, n, v};
        auto enc = encode_permutation(handle, p);
        if (evaluate(handle.model, enc) != bf.min_energy) rep.all_permutations_covered = false;
        DecodeResult dec = decode_permutation(handle, enc);
        if (!dec.feasible || dec.permutation.values != v) rep.all_permutations_covered = false;
    });

    rep.stats_match = static_cast<std::int64_t>(handle.model.quadratic.size()) ==
                      predicted_quadratic_count(technique, m, n);
    return rep;
}

std::string solution_to_json(const Solution& sol) {
    nlohmann::json j;
    j["energy"] = {{"num", sol.energy.num()}, {"den", sol.energy.den()}};
    j["assignment"] = sol.assignment;
    j["feasible"] = sol.feasible;
    if (sol.permutation)
        j["permutation"] = sol.permutation->values;
    else
        j["permutation"] = nullptr;
    if (sol.objective_value)
        j["objective"] = {{"num", sol.objective_value->num()}, {"den", sol.objective_value->den()}};
    j["solver"] = sol.solver;
    j["seed"] = sol.seed;
    if (sol.sweeps > 0) j["sweeps"] = sol.sweeps;
    return j.dump(2) + "\n";
}

}  // namespace permq
