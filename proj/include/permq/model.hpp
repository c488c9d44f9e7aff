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
#include <optional>
#include <string>
#include <vector>

#include "permq/rational.hpp"

namespace permq {

enum class Kind : std::uint8_t { QUBO, ISING };

std::string kind_name(Kind k);
Kind kind_from_name(const std::string& name);

struct LinearTerm {
    std::int32_t var;
    std::int64_t coef;
    friend bool operator==(const LinearTerm& a, const LinearTerm& b) {
        return a.var == b.var && a.coef == b.coef;
    }
};

struct QuadraticTerm {
    std::int32_t i;  // i < j always
    std::int32_t j;
    std::int64_t coef;
    friend bool operator==(const QuadraticTerm& a, const QuadraticTerm& b) {
        return a.i == b.i && a.j == b.j && a.coef == b.coef;
    }
};

/// Sparse integer-coefficient QUBO or Ising model with an exact rational
/// offset. Immutable once built: terms are sorted (linear by variable,
/// quadratic lexicographically), coefficients are nonzero integers, and
/// quadratic keys are strictly upper-triangular.
struct QuadraticModel {
    Kind kind = Kind::QUBO;
    int num_vars = 0;
    std::vector<LinearTerm> linear;
    std::vector<QuadraticTerm> quadratic;
    Rational offset;

    friend bool operator==(const QuadraticModel& a, const QuadraticModel& b) {
        return a.kind == b.kind && a.num_vars == b.num_vars && a.linear == b.linear &&
               a.quadratic == b.quadratic && a.offset == b.offset;
    }
};

/// Term counts, distinct coefficient values, quadratic-graph diameter and
/// offset of a model. diameter is empty when the term graph has two or more
/// components containing variables; models with at most one variable get
/// diameter 0.
struct ModelStats {
    int num_vars = 0;
    std::size_t linear_term_count = 0;
    std::vector<std::int64_t> linear_coeff_set;
    std::size_t quadratic_term_count = 0;
    std::vector<std::int64_t> quadratic_coeff_set;
    std::optional<int> diameter;
    Rational offset;

    std::string diameter_str() const {
        return diameter ? std::to_string(*diameter) : std::string("disconnected");
    }
};

struct ConvertResult {
    QuadraticModel model;
    Rational scale;  // a > 0 with a * E_source = E_target + shift
    Rational shift;
};

/// Exact energy of the assignment. Values must be {0,1} for QUBO and
/// {-1,+1} for Ising; length must equal num_vars.
Rational evaluate(const QuadraticModel& model, const std::vector<std::int8_t>& assignment);

/// Converts between QUBO and Ising via s = 2x - 1, clearing denominators by
/// the minimal positive rational and moving the constant into the reported
/// shift so the returned model has offset 0.
ConvertResult convert(const QuadraticModel& model);

ModelStats stats(const QuadraticModel& model);

}  // namespace permq
