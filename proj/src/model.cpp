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

#include "permq/model.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "permq/builder.hpp"
#include "permq/errors.hpp"
#include "permq/layout.hpp"

namespace permq {

std::string kind_name(Kind k) { return k == Kind::QUBO ? "qubo" : "ising"; }

Kind kind_from_name(const std::string& name) {
    if (name == "qubo") return Kind::QUBO;
    if (name == "ising") return Kind::ISING;
    throw std::invalid_argument("unknown model kind: " + name);
}

std::string matrix_name(Matrix m) {
    switch (m) {
        case Matrix::A: return "A";
        case Matrix::B: return "B";
        case Matrix::X: return "X";
        default: return "FLAT";
    }
}

Matrix matrix_from_name(const std::string& name) {
    if (name == "A") return Matrix::A;
    if (name == "B") return Matrix::B;
    if (name == "X") return Matrix::X;
    if (name == "FLAT") return Matrix::FLAT;
    throw std::invalid_argument("unknown matrix id: " + name);
}

std::string VarLabel::str() const {
    return matrix_name(matrix) + "[" + std::to_string(row) + "," + std::to_string(col) + "]";
}

VariableLayout VariableLayout::flat(int k) {
    VariableLayout layout;
    for (int i = 0; i < k; ++i) layout.add({Matrix::FLAT, 0, i});
    return layout;
}

Rational evaluate(const QuadraticModel& model, const std::vector<std::int8_t>& assignment) {
    if (static_cast<int>(assignment.size()) != model.num_vars)
        throw std::invalid_argument("assignment length does not match num_vars");
    for (std::int8_t v : assignment) {
        if (model.kind == Kind::QUBO) {
            if (v != 0 && v != 1) throw std::invalid_argument("QUBO assignment values must be 0 or 1");
        } else {
            if (v != -1 && v != 1)
                throw std::invalid_argument("Ising assignment values must be -1 or +1");
        }
    }
    __int128 acc = 0;
    for (const auto& t : model.linear)
        acc += static_cast<__int128>(t.coef) * assignment[static_cast<std::size_t>(t.var)];
    for (const auto& t : model.quadratic)
        acc += static_cast<__int128>(t.coef) * assignment[static_cast<std::size_t>(t.i)] *
               assignment[static_cast<std::size_t>(t.j)];
    return Rational(detail::checked(acc, "energy")) + model.offset;
}

ConvertResult convert(const QuadraticModel& model) {
    Kind target = model.kind == Kind::QUBO ? Kind::ISING : Kind::QUBO;

    // QUBO -> Ising substitutes x = (s+1)/2; Ising -> QUBO substitutes s = 2x-1.
    auto subst = [&](std::int32_t v) {
        if (model.kind == Kind::QUBO)
            return LinExpr{Rational(1, 2), {{v, Rational(1, 2)}}};
        return LinExpr{Rational(-1), {{v, Rational(2)}}};
    };
    // Accumulate with rational coefficients, then rescale before finalize.
    struct Acc {
        std::vector<Rational> lin;
        std::vector<std::pair<std::uint64_t, Rational>> quad;
        Rational off;
    };
    Acc acc;
    acc.lin.assign(static_cast<std::size_t>(model.num_vars), Rational(0));
    auto add_term = [&](const LinExpr& e1, const LinExpr& e2, Rational w) {
        acc.off += w * e1.constant * e2.constant;
        for (const auto& [v, c] : e1.terms) acc.lin[static_cast<std::size_t>(v)] += w * c * e2.constant;
        for (const auto& [v, c] : e2.terms) acc.lin[static_cast<std::size_t>(v)] += w * c * e1.constant;
        for (const auto& [v1, c1] : e1.terms)
            for (const auto& [v2, c2] : e2.terms) {
                Rational c = w * c1 * c2;
                if (v1 == v2) {
                    if (target == Kind::QUBO)
                        acc.lin[static_cast<std::size_t>(v1)] += c;
                    else
                        acc.off += c;
                } else {
                    std::int32_t i = std::min(v1, v2), j = std::max(v1, v2);
                    acc.quad.emplace_back(
                        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32) |
                            static_cast<std::uint32_t>(j),
                        c);
                }
            }
    };
    acc.off = model.offset;
    for (const auto& t : model.linear) add_term(subst(t.var), LinExpr::con(Rational(1)), Rational(t.coef));
    for (const auto& t : model.quadratic) add_term(subst(t.i), subst(t.j), Rational(t.coef));

    std::sort(acc.quad.begin(), acc.quad.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<std::uint64_t, Rational>> merged;
    std::size_t idx = 0;
    while (idx < acc.quad.size()) {
        std::uint64_t key = acc.quad[idx].first;
        Rational c = acc.quad[idx].second;
        ++idx;
        while (idx < acc.quad.size() && acc.quad[idx].first == key) c += acc.quad[idx++].second;
        if (c.num() != 0) merged.emplace_back(key, c);
    }

    // Minimal positive multiplier making every term coefficient an integer:
    // lcm of denominators over gcd of numerators.
    std::int64_t lcm_den = 1;
    std::int64_t gcd_num = 0;
    auto fold = [&](const Rational& c) {
        if (c.num() == 0) return;
        lcm_den = checked_lcm(lcm_den, c.den());
        gcd_num = std::gcd(gcd_num, c.num() < 0 ? -c.num() : c.num());
    };
    for (const auto& c : acc.lin) fold(c);
    for (const auto& [k, c] : merged) fold(c);
    Rational scale = gcd_num == 0 ? Rational(1) : Rational(lcm_den, gcd_num);

    ConvertResult out;
    out.scale = scale;
    out.shift = scale * acc.off;
    out.model.kind = target;
    out.model.num_vars = model.num_vars;
    out.model.offset = Rational(0);
    for (std::int32_t v = 0; v < model.num_vars; ++v) {
        Rational c = scale * acc.lin[static_cast<std::size_t>(v)];
        if (c.num() == 0) continue;
        if (!c.is_integer()) throw NonIntegerCoefficient("conversion left fractional coefficient");
        out.model.linear.push_back({v, c.num()});
    }
    for (const auto& [key, raw] : merged) {
        Rational c = scale * raw;
        if (c.num() == 0) continue;
        if (!c.is_integer()) throw NonIntegerCoefficient("conversion left fractional coefficient");
        out.model.quadratic.push_back({static_cast<std::int32_t>(key >> 32),
                                       static_cast<std::int32_t>(key & 0xffffffffu), c.num()});
    }
    return out;
}

ModelStats stats(const QuadraticModel& model) {
    ModelStats st;
    st.num_vars = model.num_vars;
    st.offset = model.offset;
    st.linear_term_count = model.linear.size();
    st.quadratic_term_count = model.quadratic.size();

    std::set<std::int64_t> lset, qset;
    for (const auto& t : model.linear) lset.insert(t.coef);
    for (const auto& t : model.quadratic) qset.insert(t.coef);
    st.linear_coeff_set.assign(lset.begin(), lset.end());
    st.quadratic_coeff_set.assign(qset.begin(), qset.end());

    if (model.num_vars <= 1) {
        st.diameter = 0;
        return st;
    }
    std::vector<std::vector<std::int32_t>> adj(static_cast<std::size_t>(model.num_vars));
    for (const auto& t : model.quadratic) {
        adj[static_cast<std::size_t>(t.i)].push_back(t.j);
        adj[static_cast<std::size_t>(t.j)].push_back(t.i);
    }
    int diam = 0;
    std::vector<int> dist(static_cast<std::size_t>(model.num_vars));
    for (std::int32_t s = 0; s < model.num_vars; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(s)] = 0;
        std::queue<std::int32_t> q;
        q.push(s);
        int reached = 1;
        int ecc = 0;
        while (!q.empty()) {
            std::int32_t u = q.front();
            q.pop();
            for (std::int32_t w : adj[static_cast<std::size_t>(u)]) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    ecc = std::max(ecc, dist[static_cast<std::size_t>(w)]);
                    ++reached;
                    q.push(w);
                }
            }
        }
        if (reached < model.num_vars) {
            st.diameter.reset();
            return st;
        }
        diam = std::max(diam, ecc);
    }
    st.diameter = diam;
    return st;
}

}  // namespace permq
