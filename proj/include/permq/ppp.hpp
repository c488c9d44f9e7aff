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

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "permq/kernels.hpp"
#include "permq/model.hpp"

namespace permq {

/// Particle Placement Problem: place m particles in n positions minimizing
/// the sum of potentials P_{i,j} plus interactions I_{i,j,i',j'} over the
/// consistent quartets Q(m,n) (i < i', j != j').
class PPPInstance {
  public:
    PPPInstance(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }

    void add_potential(int i, int j, std::int64_t value);
    /// Accumulates additively; the key is canonicalized so i < i'.
    void add_interaction(int i, int j, int i2, int j2, std::int64_t value);

    const std::map<std::pair<int, int>, std::int64_t>& potentials() const { return potentials_; }
    const std::map<std::array<int, 4>, std::int64_t>& interactions() const { return interactions_; }

    /// |Q(m,n)| = C(m,2) * n * (n-1).
    std::int64_t max_interactions() const;

  private:
    int m_;
    int n_;
    std::map<std::pair<int, int>, std::int64_t> potentials_;
    std::map<std::array<int, 4>, std::int64_t> interactions_;
};

std::int64_t ppp_value(const PPPInstance& inst, const PartialPermutation& p);

enum class Target : std::uint8_t { ONE_HOT_MATRIX, DELTA_A };

/// Objective as a quadratic model over the given kernel layout.
/// ONE_HOT_MATRIX places terms on X cells (spin form uses s+1 and doubled
/// potentials so feasible energies are 4 PPP(pi)); DELTA_A expands terms over
/// row differences of A with guard constants folded.
QuadraticModel objective_terms(const PPPInstance& inst, Target target, Kind kind,
                               const VariableLayout& layout);

constexpr std::int64_t AUTO_LAMBDA = -1;

/// 2 (sum |P| + sum |I|) + 1.
std::int64_t default_lambda(const PPPInstance& inst);

/// lambda * kernel + objective, with the affine constants (c, d) such that
/// energy(encode(pi)) = lambda * optimal + c * PPP(pi) + d for feasible pi.
struct EncodedProblem {
    KernelHandle kernel;
    std::int64_t lambda;
    QuadraticModel model;
    Rational c;
    Rational d;
    Rational objective_offset;
};

EncodedProblem compose(const PPPInstance& inst, Technique technique, Kind kind,
                       std::int64_t lambda = AUTO_LAMBDA);

struct Solution;

Solution decode_solution(const EncodedProblem& enc, const std::vector<std::int8_t>& assignment);

/// PPP instance JSON round-trip.
std::string ppp_to_json(const PPPInstance& inst);
PPPInstance ppp_from_json(const std::string& bytes);

}  // namespace permq
