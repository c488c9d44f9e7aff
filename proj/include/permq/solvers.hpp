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

#include "permq/kernels.hpp"
#include "permq/model.hpp"
#include "permq/ppp.hpp"
#include "permq/rational.hpp"

namespace permq {

struct Solution {
    std::vector<std::int8_t> assignment;
    Rational energy;
    bool feasible = false;
    std::optional<PartialPermutation> permutation;
    std::optional<Rational> objective_value;
    std::string solver;
    std::uint64_t seed = 0;
    int sweeps = 0;
    std::vector<Rational> restart_energies;
};

std::string solution_to_json(const Solution& sol);

struct BruteForceResult {
    Rational min_energy;
    std::vector<std::vector<std::int8_t>> minimizers;
    bool truncated = false;  // minimizer collection hit its cap
};

/// Exhaustive Gray-code enumeration with incremental energy updates.
/// Throws TooLarge beyond the cap (default 26 variables).
BruteForceResult brute_force(const QuadraticModel& model, int cap = 26);

/// Exact minimum of a model whose variables split into a core set and
/// blocks that interact with the core but not with each other: the core is
/// enumerated exhaustively and each block is minimized conditionally.
/// Returns the global minimum and one minimizing assignment.
struct ConditionedResult {
    Rational min_energy;
    std::vector<std::int8_t> assignment;
};

ConditionedResult brute_force_conditioned(const QuadraticModel& model,
                                          const std::vector<std::int32_t>& core,
                                          const std::vector<std::vector<std::int32_t>>& blocks,
                                          int core_cap = 26);

/// Splits a dual-matrix composed problem into the A variables (core) and the
/// columns of B (blocks) and minimizes exactly.
ConditionedResult solve_dual_matrix_exact(const EncodedProblem& enc);

struct OracleResult {
    std::int64_t best_value;
    PartialPermutation argmin;  // lexicographically first
    std::uint64_t argmin_count;
};

/// Exhaustive search over all n!/(n-m)! injections.
OracleResult permutation_oracle(const PPPInstance& inst);

struct SAParams {
    std::uint64_t seed = 0;
    int sweeps = 1000;
    int restarts = 1;
    double t_initial = 0;  // 0 means AUTO: max |coefficient|
    double t_final = 0;    // 0 means AUTO: 1/10
    double ratio = 0;      // 0 means derive from t_initial/t_final/sweeps
};

/// Single-variable-flip Metropolis with geometric cooling. Deterministic
/// given (model, params); restarts are independent and the best
/// (energy, lexicographic assignment) wins.
Solution simulated_annealing(const QuadraticModel& model, const SAParams& params);

struct VerifyReport {
    Rational measured_minimum;
    Rational expected_optimum;
    std::uint64_t minimizer_count = 0;
    bool minimum_matches = false;
    bool all_minimizers_decode = false;
    bool all_permutations_covered = false;
    bool stats_match = false;
    std::string summary() const;
};

/// Brute-forces the kernel and checks the closed-form claims: minimum value,
/// decode success on every minimizer, encode coverage of every permutation,
/// and the predicted quadratic term count.
VerifyReport verify_kernel(Technique technique, int m, int n, Kind kind);

}  // namespace permq
