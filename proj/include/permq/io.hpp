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

#include <string>
#include <utility>

#include "permq/layout.hpp"
#include "permq/model.hpp"

namespace permq {

enum class Format { JSON, QUBO_TEXT };

/// Byte-stable serialization: JSON carries the layout; QUBO_TEXT (qbsolv
/// style) is QUBO-only and reconstructs a flat layout on import.
std::string export_model(const QuadraticModel& model, const VariableLayout& layout, Format format);

std::pair<QuadraticModel, VariableLayout> import_model(const std::string& bytes);

}  // namespace permq
