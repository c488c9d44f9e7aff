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

#include "permq/ppp.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "permq/builder.hpp"
#include "permq/errors.hpp"
#include "permq/solvers.hpp"

namespace permq {

PPPInstance::PPPInstance(int m, int n) : m_(m), n_(n) {
    if (m < 1 || n < 1 || m > n) throw std::invalid_argument("need 1 <= m <= n");
}

void PPPInstance::add_potential(int i, int j, std::int64_t value) {
    if (i < 0 || i >= m_ || j < 0 || j >= n_)
        throw std::invalid_argument("potential index out of range");
    if (value == 0) return;
    auto [it, inserted] = potentials_.emplace(std::make_pair(i, j), value);
    if (!inserted) {
        it->second = detail::checked(static_cast<__int128>(it->second) + value, "potential");
        if (it->second == 0) potentials_.erase(it);
    }
}

void PPPInstance::add_interaction(int i, int j, int i2, int j2, std::int64_t value) {
    if (i > i2) {
        std::swap(i, i2);
        std::swap(j, j2);
    }
    if (i < 0 || i2 >= m_ || j < 0 || j >= n_ || j2 < 0 || j2 >= n_)
        throw std::invalid_argument("interaction index out of range");
    if (i == i2 || j == j2) throw std::invalid_argument("interaction quartet must be consistent");
    if (value == 0) return;
    std::array<int, 4> key{i, j, i2, j2};
    auto [it, inserted] = interactions_.emplace(key, value);
    if (!inserted) {
        it->second = detail::checked(static_cast<__int128>(it->second) + value, "interaction");
        if (it->second == 0) interactions_.erase(it);
    }
}

std::int64_t PPPInstance::max_interactions() const {
    const std::int64_t M = m_, N = n_;
    return M * (M - 1) / 2 * N * (N - 1);
}

std::int64_t ppp_value(const PPPInstance& inst, const PartialPermutation& p) {
    p.validate();
    if (p.m != inst.m() || p.n != inst.n())
        throw std::invalid_argument("permutation dimensions do not match instance");
    __int128 acc = 0;
    for (int i = 0; i < inst.m(); ++i) {
        auto it = inst.potentials().find({i, p.values[static_cast<std::size_t>(i)]});
        if (it != inst.potentials().end()) acc += it->second;
        for (int i2 = i + 1; i2 < inst.m(); ++i2) {
            auto jt = inst.interactions().find({i, p.values[static_cast<std::size_t>(i)], i2,
                                                p.values[static_cast<std::size_t>(i2)]});
            if (jt != inst.interactions().end()) acc += jt->second;
        }
    }
    return detail::checked(acc, "objective value");
}

namespace {

LinExpr cell_expr(Target target, Kind kind, const VariableLayout& layout, int i, int j, int n) {
    if (target == Target::ONE_HOT_MATRIX) {
        LinExpr e = LinExpr::var(layout.index_of({Matrix::X, i, j}));
        if (kind == Kind::ISING) e += LinExpr::con(1);
        return e;
    }
    // Row difference of A with guard constants folded.
    int lo = kind == Kind::QUBO ? 0 : -1;
    LinExpr left =
        j - 1 < 0 ? LinExpr::con(1) : LinExpr::var(layout.index_of({Matrix::A, i, j - 1}));
    LinExpr right =
        j >= n - 1 ? LinExpr::con(lo) : LinExpr::var(layout.index_of({Matrix::A, i, j}));
    return left - right;
}

void add_objective(ExpressionBuilder& b, const PPPInstance& inst, Target target, Kind kind,
                   const VariableLayout& layout) {
    // Ising potentials are doubled: the (s+1) / delta-a factor contributes 2
    // at a selected cell, so 2P keeps the overall scale at 4 PPP(pi).
    const Rational pscale = kind == Kind::QUBO ? Rational(1) : Rational(2);
    for (const auto& [key, v] : inst.potentials()) {
        auto [i, j] = key;
        b.add_linear(cell_expr(target, kind, layout, i, j, inst.n()), pscale * Rational(v));
    }
    for (const auto& [key, v] : inst.interactions()) {
        b.add_product(cell_expr(target, kind, layout, key[0], key[1], inst.n()),
                      cell_expr(target, kind, layout, key[2], key[3], inst.n()), Rational(v));
    }
}

/// target + scale * source over the same variable set; term lists stay sorted.
QuadraticModel merge_scaled(const QuadraticModel& kernel, std::int64_t scale,
                            const QuadraticModel& objective) {
    QuadraticModel out;
    out.kind = kernel.kind;
    out.num_vars = kernel.num_vars;
    out.offset = Rational(scale) * kernel.offset + objective.offset;

    auto mul = [&](std::int64_t c) {
        return detail::checked(static_cast<__int128>(scale) * c, "scaled coefficient");
    };
    auto add = [&](std::int64_t a, std::int64_t b2) {
        return detail::checked(static_cast<__int128>(a) + b2, "merged coefficient");
    };

    std::size_t i = 0, j = 0;
    while (i < kernel.linear.size() || j < objective.linear.size()) {
        if (j == objective.linear.size() ||
            (i < kernel.linear.size() && kernel.linear[i].var < objective.linear[j].var)) {
            out.linear.push_back({kernel.linear[i].var, mul(kernel.linear[i].coef)});
            ++i;
        } else if (i == kernel.linear.size() || objective.linear[j].var < kernel.linear[i].var) {
            out.linear.push_back(objective.linear[j]);
            ++j;
        } else {
            std::int64_t c = add(mul(kernel.linear[i].coef), objective.linear[j].coef);
            if (c != 0) out.linear.push_back({kernel.linear[i].var, c});
            ++i;
            ++j;
        }
    }
    auto qkey = [](const QuadraticTerm& t) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(t.i)) << 32) |
               static_cast<std::uint32_t>(t.j);
    };
    i = j = 0;
    out.quadratic.reserve(kernel.quadratic.size() + objective.quadratic.size());
    while (i < kernel.quadratic.size() || j < objective.quadratic.size()) {
        if (j == objective.quadratic.size() ||
            (i < kernel.quadratic.size() && qkey(kernel.quadratic[i]) < qkey(objective.quadratic[j]))) {
            out.quadratic.push_back(
                {kernel.quadratic[i].i, kernel.quadratic[i].j, mul(kernel.quadratic[i].coef)});
            ++i;
        } else if (i == kernel.quadratic.size() ||
                   qkey(objective.quadratic[j]) < qkey(kernel.quadratic[i])) {
            out.quadratic.push_back(objective.quadratic[j]);
            ++j;
        } else {
            std::int64_t c = add(mul(kernel.quadratic[i].coef), objective.quadratic[j].coef);
            if (c != 0) out.quadratic.push_back({kernel.quadratic[i].i, kernel.quadratic[i].j, c});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

QuadraticModel objective_terms(const PPPInstance& inst, Target target, Kind kind,
                               const VariableLayout& layout) {
    ExpressionBuilder b(kind, layout.num_vars());
    add_objective(b, inst, target, kind, layout);
    return b.finalize();
}

std::int64_t default_lambda(const PPPInstance& inst) {
    __int128 total = 0;
    for (const auto& [k, v] : inst.potentials()) total += v < 0 ? -v : v;
    for (const auto& [k, v] : inst.interactions()) total += v < 0 ? -v : v;
    return detail::checked(2 * total + 1, "lambda");
}

EncodedProblem compose(const PPPInstance& inst, Technique technique, Kind kind,
                       std::int64_t lambda) {
    if (technique == Technique::ALL_DIFFERENT)
        throw std::invalid_argument("all-different kernels expose no objective target");
    if (lambda == AUTO_LAMBDA) lambda = default_lambda(inst);
    if (lambda <= 0) throw std::invalid_argument("lambda must be positive");

    KernelHandle kernel = build_kernel(technique, inst.m(), inst.n(), kind);
    Target target =
        technique == Technique::DUAL_MATRIX ? Target::DELTA_A : Target::ONE_HOT_MATRIX;
    QuadraticModel objective = objective_terms(inst, target, kind, kernel.layout);

    EncodedProblem enc;
    enc.lambda = lambda;
    enc.model = merge_scaled(kernel.model, lambda, objective);
    enc.c = kind == Kind::QUBO ? Rational(1) : Rational(4);
    enc.d = Rational(0);
    enc.objective_offset = objective.offset;
    enc.kernel = std::move(kernel);
    return enc;
}

Solution decode_solution(const EncodedProblem& enc, const std::vector<std::int8_t>& assignment) {
    Solution sol;
    sol.assignment = assignment;
    sol.energy = evaluate(enc.model, assignment);
    DecodeResult dec = decode_permutation(enc.kernel, assignment);
    sol.feasible = dec.feasible;
    if (dec.feasible) {
        sol.permutation = dec.permutation;
        sol.objective_value =
            (sol.energy - Rational(enc.lambda) * enc.kernel.optimal_value - enc.d) / enc.c;
    }
    return sol;
}

std::string ppp_to_json(const PPPInstance& inst) {
    nlohmann::json j;
    j["m"] = inst.m();
    j["n"] = inst.n();
    nlohmann::json pots = nlohmann::json::array();
    for (const auto& [k, v] : inst.potentials()) pots.push_back({k.first, k.second, v});
    j["potentials"] = std::move(pots);
    nlohmann::json ints = nlohmann::json::array();
    for (const auto& [k, v] : inst.interactions()) ints.push_back({k[0], k[1], k[2], k[3], v});
    j["interactions"] = std::move(ints);
    return j.dump(2) + "\n";
}

PPPInstance ppp_from_json(const std::string& bytes) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1);
    }
    try {
        PPPInstance inst(j.at("m").get<int>(), j.at("n").get<int>());
        for (const auto& p : j.at("potentials"))
            inst.add_potential(p.at(0).get<int>(), p.at(1).get<int>(), p.at(2).get<std::int64_t>());
        for (const auto& t : j.at("interactions"))
            inst.add_interaction(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>(),
                                 t.at(3).get<int>(), t.at(4).get<std::int64_t>());
        return inst;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid PPP JSON: ") + e.what(), 1);
    }
}

}  // namespace permq
