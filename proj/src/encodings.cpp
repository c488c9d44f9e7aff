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

#include "permq/encodings.hpp"

#include <stdexcept>

#include "permq/builder.hpp"
#include "permq/errors.hpp"

namespace permq {

std::string scheme_name(Scheme s) {
    switch (s) {
        case Scheme::ONE_HOT: return "one-hot";
        case Scheme::ZERO_ONE_HOT: return "zero-one-hot";
        default: return "domain-wall";
    }
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "one-hot") return Scheme::ONE_HOT;
    if (name == "zero-one-hot") return Scheme::ZERO_ONE_HOT;
    if (name == "domain-wall") return Scheme::DOMAIN_WALL;
    throw std::invalid_argument("unknown scheme: " + name);
}

std::pair<QuadraticModel, VariableLayout> build_vector_model(Scheme scheme, int k, Kind kind) {
    if (k < 1) throw std::invalid_argument("vector length k must be at least 1");
    VariableLayout layout = VariableLayout::flat(k);
    ExpressionBuilder b(kind, k);
    const Rational half(1, 2);

    LinExpr sum;
    for (int i = 0; i < k; ++i) sum += LinExpr::var(i);

    switch (scheme) {
        case Scheme::ONE_HOT:
            if (kind == Kind::QUBO)
                b.add_square(LinExpr::con(1) - sum);
            else
                b.add_square(LinExpr::con(k - 2) + sum, half);
            break;
        case Scheme::ZERO_ONE_HOT:
            if (kind == Kind::QUBO) {
                for (int i = 0; i < k; ++i)
                    for (int j = i + 1; j < k; ++j) b.add_product(LinExpr::var(i), LinExpr::var(j));
            } else {
                b.add_product(LinExpr::con(k) + sum, LinExpr::con(k - 2) + sum, half);
            }
            break;
        case Scheme::DOMAIN_WALL: {
            // Guard constants flank the chain: hot on the left, cold on the right.
            LinExpr lo = LinExpr::con(kind == Kind::QUBO ? 0 : -1);
            layout.add_guard({Matrix::FLAT, 0, -1}, 1);
            layout.add_guard({Matrix::FLAT, 0, k}, kind == Kind::QUBO ? 0 : -1);
            for (int i = 0; i <= k; ++i) {
                LinExpr left = i == 0 ? LinExpr::con(1) : LinExpr::var(i - 1);
                LinExpr right = i == k ? lo : LinExpr::var(i);
                b.add_square(left - right, half);
            }
            break;
        }
    }
    return {b.finalize(), std::move(layout)};
}

std::optional<int> decode_vector(Scheme scheme, const std::vector<std::int8_t>& bits) {
    const int k = static_cast<int>(bits.size());
    for (std::int8_t v : bits)
        if (v != 0 && v != 1) throw std::invalid_argument("bits must be 0 or 1");
    int hot = 0;
    for (std::int8_t v : bits) hot += v;
    switch (scheme) {
        case Scheme::ONE_HOT:
            if (hot != 1) throw NotAValidVector("one-hot vector must have exactly one hot bit");
            for (int i = 0; i < k; ++i)
                if (bits[static_cast<std::size_t>(i)]) return i;
            return std::nullopt;  // unreachable
        case Scheme::ZERO_ONE_HOT:
            if (hot == 0) return std::nullopt;
            if (hot != 1) throw NotAValidVector("zero-one-hot vector must have at most one hot bit");
            for (int i = 0; i < k; ++i)
                if (bits[static_cast<std::size_t>(i)]) return i;
            return std::nullopt;  // unreachable
        default:
            for (int i = 0; i + 1 < k; ++i)
                if (bits[static_cast<std::size_t>(i)] < bits[static_cast<std::size_t>(i + 1)])
                    throw NotAValidVector("domain-wall vector must be monotone non-increasing");
            return hot;
    }
}

std::vector<std::int8_t> encode_vector(Scheme scheme, int value, int k) {
    if (k < 1) throw std::invalid_argument("vector length k must be at least 1");
    int hi = scheme == Scheme::DOMAIN_WALL ? k : k - 1;
    if (value < 0 || value > hi) throw std::invalid_argument("value out of range for scheme");
    std::vector<std::int8_t> bits(static_cast<std::size_t>(k), 0);
    if (scheme == Scheme::DOMAIN_WALL) {
        for (int i = 0; i < value; ++i) bits[static_cast<std::size_t>(i)] = 1;
    } else {
        bits[static_cast<std::size_t>(value)] = 1;
    }
    return bits;
}

}  // namespace permq
