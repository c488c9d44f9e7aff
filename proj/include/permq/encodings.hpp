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
#include <utility>
#include <vector>

#include "permq/layout.hpp"
#include "permq/model.hpp"

namespace permq {

/// Single-vector integer encodings. ONE_HOT and ZERO_ONE_HOT represent
/// values 0..k-1 (ZERO_ONE_HOT additionally the undefined value, all cold);
/// DOMAIN_WALL represents 0..k as the length of the leading run of hot bits.
enum class Scheme : std::uint8_t { ONE_HOT, ZERO_ONE_HOT, DOMAIN_WALL };

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

/// Model whose minimizers are exactly the valid vectors of the scheme.
/// Domain-wall guard bits are substituted as constants, so num_vars is k.
std::pair<QuadraticModel, VariableLayout> build_vector_model(Scheme scheme, int k, Kind kind);

/// Bits are {0,1} regardless of model kind (spins map via s = 2x - 1).
/// Returns the encoded value, or empty for the ZERO_ONE_HOT undefined value.
/// Throws NotAValidVector when the bits violate the scheme.
std::optional<int> decode_vector(Scheme scheme, const std::vector<std::int8_t>& bits);

std::vector<std::int8_t> encode_vector(Scheme scheme, int value, int k);

}  // namespace permq
