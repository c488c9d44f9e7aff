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

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "permq/model.hpp"
#include "permq/rational.hpp"

namespace permq {

/// Affine form c + sum coef*var over dense variable indices.
struct LinExpr {
    Rational constant;
    std::vector<std::pair<std::int32_t, Rational>> terms;

    static LinExpr var(std::int32_t index) { return LinExpr{Rational(0), {{index, Rational(1)}}}; }
    static LinExpr con(Rational c) { return LinExpr{c, {}}; }

    LinExpr& operator+=(const LinExpr& o) {
        constant += o.constant;
        terms.insert(terms.end(), o.terms.begin(), o.terms.end());
        return *this;
    }
    LinExpr& operator-=(const LinExpr& o) {
        constant -= o.constant;
        for (const auto& [v, c] : o.terms) terms.emplace_back(v, -c);
        return *this;
    }
    friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
    friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
};

/// Accumulates rational coefficients per variable / variable pair while
/// expanding products and squares of affine forms, reducing x*x to x in QUBO
/// mode and s*s to 1 in Ising mode. finalize drops zero terms and requires
/// every surviving term coefficient to be an integer.
class ExpressionBuilder {
  public:
    ExpressionBuilder(Kind kind, int num_vars)
        : kind_(kind), num_vars_(num_vars), linear_(static_cast<std::size_t>(num_vars)) {}

    Kind kind() const { return kind_; }
    int num_vars() const { return num_vars_; }

    void add_constant(const Rational& c) { offset_ += c; }

    /// Adds w * expr.
    void add_linear(const LinExpr& e, const Rational& w = Rational(1));

    /// Adds w * e1 * e2 after expansion.
    void add_product(const LinExpr& e1, const LinExpr& e2, const Rational& w = Rational(1));

    /// Adds w * e^2; cheaper than add_product(e, e, w).
    void add_square(const LinExpr& e, const Rational& w = Rational(1));

    /// Merges accumulated terms into an immutable model.
    QuadraticModel finalize();

  private:
    void add_pair(std::int32_t i, std::int32_t j, const Rational& c);

    Kind kind_;
    int num_vars_;
    std::vector<Rational> linear_;
    struct RawQuad {
        std::uint64_t key;  // (i << 32) | j with i < j
        Rational coef;
    };
    std::vector<RawQuad> quad_;
    Rational offset_;
};

}  // namespace permq
