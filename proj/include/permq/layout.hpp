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
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace permq {

enum class Matrix : std::uint8_t { A, B, X, FLAT };

std::string matrix_name(Matrix m);
Matrix matrix_from_name(const std::string& name);

/// Structured variable label: a cell of matrix A, B or X, or a flat index
/// (row 0, col i) for unstructured models.
struct VarLabel {
    Matrix matrix = Matrix::FLAT;
    int row = 0;
    int col = 0;

    friend bool operator==(const VarLabel& a, const VarLabel& b) {
        return a.matrix == b.matrix && a.row == b.row && a.col == b.col;
    }
    std::string str() const;
};

/// Guard cell fixed to a constant during expansion (never a variable).
struct GuardEntry {
    VarLabel label;
    int value;
};

/// Bijection between structured labels and dense variable indices
/// [0, num_vars), plus the table of guard constants that were substituted.
class VariableLayout {
  public:
    VariableLayout() = default;

    static VariableLayout flat(int k);

    /// Appends a label; returns its index.
    int add(VarLabel label) {
        auto key = pack(label);
        if (!index_.emplace(key, static_cast<int>(labels_.size())).second)
            throw std::invalid_argument("label collision: " + label.str());
        labels_.push_back(label);
        return static_cast<int>(labels_.size()) - 1;
    }

    void add_guard(VarLabel label, int value) { guards_.push_back({label, value}); }

    int num_vars() const { return static_cast<int>(labels_.size()); }
    const VarLabel& label(int index) const { return labels_.at(index); }
    const std::vector<VarLabel>& labels() const { return labels_; }
    const std::vector<GuardEntry>& guards() const { return guards_; }

    int index_of(const VarLabel& label) const {
        auto it = index_.find(pack(label));
        if (it == index_.end()) throw std::invalid_argument("unknown label: " + label.str());
        return it->second;
    }
    bool contains(const VarLabel& label) const { return index_.count(pack(label)) != 0; }

    friend bool operator==(const VariableLayout& a, const VariableLayout& b) {
        return a.labels_ == b.labels_;
    }

  private:
    static std::uint64_t pack(const VarLabel& l) {
        return (static_cast<std::uint64_t>(l.matrix) << 60) |
               (static_cast<std::uint64_t>(static_cast<std::uint32_t>(l.row)) << 30) |
               static_cast<std::uint64_t>(static_cast<std::uint32_t>(l.col));
    }

    std::vector<VarLabel> labels_;
    std::vector<GuardEntry> guards_;
    std::unordered_map<std::uint64_t, int> index_;
};

}  // namespace permq
