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

#include "permq/builder.hpp"

#include <algorithm>
#include <stdexcept>

#include "permq/errors.hpp"

namespace permq {

void ExpressionBuilder::add_pair(std::int32_t i, std::int32_t j, const Rational& c) {
    if (i > j) std::swap(i, j);
    quad_.push_back({(static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32) |
                         static_cast<std::uint32_t>(j),
                     c});
}

void ExpressionBuilder::add_linear(const LinExpr& e, const Rational& w) {
    offset_ += w * e.constant;
    for (const auto& [v, c] : e.terms) {
        if (v < 0 || v >= num_vars_) throw std::invalid_argument("variable index out of range");
        linear_[static_cast<std::size_t>(v)] += w * c;
    }
}

void ExpressionBuilder::add_product(const LinExpr& e1, const LinExpr& e2, const Rational& w) {
    offset_ += w * e1.constant * e2.constant;
    for (const auto& [v, c] : e1.terms) {
        if (v < 0 || v >= num_vars_) throw std::invalid_argument("variable index out of range");
        linear_[static_cast<std::size_t>(v)] += w * c * e2.constant;
    }
    for (const auto& [v, c] : e2.terms) {
        if (v < 0 || v >= num_vars_) throw std::invalid_argument("variable index out of range");
        linear_[static_cast<std::size_t>(v)] += w * c * e1.constant;
    }
    for (const auto& [v1, c1] : e1.terms) {
        for (const auto& [v2, c2] : e2.terms) {
            Rational c = w * c1 * c2;
            if (v1 == v2) {
                if (kind_ == Kind::QUBO)
                    linear_[static_cast<std::size_t>(v1)] += c;
                else
                    offset_ += c;
            } else {
                add_pair(v1, v2, c);
            }
        }
    }
}

void ExpressionBuilder::add_square(const LinExpr& e, const Rational& w) {
    offset_ += w * e.constant * e.constant;
    Rational two_const = Rational(2) * e.constant;
    for (const auto& [v, c] : e.terms) {
        if (v < 0 || v >= num_vars_) throw std::invalid_argument("variable index out of range");
        linear_[static_cast<std::size_t>(v)] += w * c * two_const;
        Rational sq = w * c * c;
        if (kind_ == Kind::QUBO)
            linear_[static_cast<std::size_t>(v)] += sq;
        else
            offset_ += sq;
    }
    const std::size_t t = e.terms.size();
    for (std::size_t a = 0; a < t; ++a) {
        for (std::size_t b = a + 1; b < t; ++b) {
            const auto& [v1, c1] = e.terms[a];
            const auto& [v2, c2] = e.terms[b];
            if (v1 == v2) {
                Rational c = Rational(2) * w * c1 * c2;
                if (kind_ == Kind::QUBO)
                    linear_[static_cast<std::size_t>(v1)] += c;
                else
                    offset_ += c;
            } else {
                add_pair(v1, v2, Rational(2) * w * c1 * c2);
            }
        }
    }
}

QuadraticModel ExpressionBuilder::finalize() {
    QuadraticModel model;
    model.kind = kind_;
    model.num_vars = num_vars_;
    model.offset = offset_;

    for (std::int32_t v = 0; v < num_vars_; ++v) {
        const Rational& c = linear_[static_cast<std::size_t>(v)];
        if (c.num() == 0) continue;
        if (!c.is_integer())
            throw NonIntegerCoefficient("linear coefficient " + c.str() + " on variable " +
                                        std::to_string(v));
        model.linear.push_back({v, c.num()});
    }

    std::sort(quad_.begin(), quad_.end(),
              [](const RawQuad& a, const RawQuad& b) { return a.key < b.key; });
    std::size_t idx = 0;
    while (idx < quad_.size()) {
        std::uint64_t key = quad_[idx].key;
        Rational c = quad_[idx].coef;
        ++idx;
        while (idx < quad_.size() && quad_[idx].key == key) {
            c += quad_[idx].coef;
            ++idx;
        }
        if (c.num() == 0) continue;
        auto i = static_cast<std::int32_t>(key >> 32);
        auto j = static_cast<std::int32_t>(key & 0xffffffffu);
        if (!c.is_integer())
            throw NonIntegerCoefficient("quadratic coefficient " + c.str() + " on pair (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
        model.quadratic.push_back({i, j, c.num()});
    }
    quad_.clear();
    quad_.shrink_to_fit();
    return model;
}

}  // namespace permq
