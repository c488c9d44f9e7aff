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
#include <string>
#include <vector>

#include "permq/layout.hpp"
#include "permq/model.hpp"
#include "permq/rational.hpp"

namespace permq {

/// Kernel construction technique. ALL_DIFFERENT is valid only for full
/// permutations (m = n).
enum class Technique : std::uint8_t { ONE_HOT, ALL_DIFFERENT, DUAL_MATRIX, EXTENDED };

std::string technique_name(Technique t);
Technique technique_from_name(const std::string& name);

/// Injection of m values into [0, n); m = n is a full permutation.
struct PartialPermutation {
    int m = 0;
    int n = 0;
    std::vector<int> values;

    void validate() const;
    friend bool operator==(const PartialPermutation& a, const PartialPermutation& b) {
        return a.m == b.m && a.n == b.n && a.values == b.values;
    }
};

/// A built kernel: model whose minimizers are exactly the encodings of the
/// (partial) permutations, the structured variable layout, and the known
/// optimal value.
struct KernelHandle {
    Technique technique;
    int m;
    int n;
    Kind kind;
    QuadraticModel model;
    VariableLayout layout;
    Rational optimal_value;
};

/// Builds the kernel with guard constants substituted before expansion.
/// Variable order is frozen: A row-major, then B row-major, then X row-major.
KernelHandle build_kernel(Technique technique, int m, int n, Kind kind);

/// Assignment at which the model attains optimal_value. For partial
/// permutations, each position j outside the image gets the canonical
/// inverse slot p(j) = m - 1 (an all-hot domain-wall column of B).
std::vector<std::int8_t> encode_permutation(const KernelHandle& handle,
                                            const PartialPermutation& p);

struct DecodeResult {
    bool feasible = false;
    PartialPermutation permutation;
    std::string reason;  // set when infeasible
};

/// Reads the permutation back when all technique conditions (row/column
/// domain walls, dual-permutation consistency, one-hot structure) hold.
DecodeResult decode_permutation(const KernelHandle& handle,
                                const std::vector<std::int8_t>& assignment);

struct KernelStatsRow {
    Technique technique;
    Kind kind;
    int m;
    int n;
    ModelStats stats;
    std::int64_t predicted_quad;
    bool match;
};

std::vector<KernelStatsRow> kernel_stats_table(const std::vector<Technique>& techniques, Kind kind,
                                               const std::vector<std::pair<int, int>>& sizes);

std::string kernel_stats_tsv(const std::vector<KernelStatsRow>& rows);

/// Closed-form quadratic term count for the technique at (m, n).
std::int64_t predicted_quadratic_count(Technique technique, int m, int n);

}  // namespace permq
