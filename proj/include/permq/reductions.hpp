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
#include <istream>
#include <vector>

#include "permq/ppp.hpp"
#include "permq/rational.hpp"

namespace permq {

struct Edge {
    int u;
    int v;  // u < v
    std::int64_t w;
};

struct WeightedGraph {
    int nodes = 0;
    std::vector<Edge> edges;

    void validate() const;  // no self-loops, no duplicates, endpoints in range
};

using DenseMatrix = std::vector<std::vector<std::int64_t>>;

/// QAP: I_{i,j,i',j'} = f_{i,i'} d_{j,j'} + f_{i',i} d_{j',j},
/// P_{i,j} = f_{i,i} d_{j,j}. QAP(pi) = PPP(pi) for every pi.
PPPInstance qap_to_ppp(const DenseMatrix& flows, const DenseMatrix& distances);

/// Dense TSP over tour positions: I gets d_{j,j'} for consecutive positions,
/// with the wraparound pair folded into canonical order. TSP(pi) = PPP(pi).
PPPInstance tsp_to_ppp(const DenseMatrix& distances);

constexpr std::int64_t AUTO_BIG = -1;

struct GraphTspResult {
    PPPInstance instance;
    std::int64_t big;
    std::int64_t shift;  // n * big; TSP(pi) = PPP(pi) + shift on tours that exist
};

/// Sparse-graph TSP: interactions only on graph edges, biased by -BIG so any
/// tour through a non-edge costs at least BIG after the shift.
GraphTspResult tsp_graph_to_ppp(const WeightedGraph& graph, std::int64_t big = AUTO_BIG);

/// Sub-graph isomorphism: -1 on both edge-pair orientations; the minimum over
/// injections is -|E| exactly when the guest embeds in the host.
PPPInstance subgraph_iso_to_ppp(const WeightedGraph& guest, const WeightedGraph& host);

/// Maximum-weight matching: -w_{u,v} on I_{u,v,v,u}; the optimum matching
/// weight is the negated oracle minimum.
PPPInstance matching_to_ppp(const WeightedGraph& graph);

/// Maximum-weight bipartite matching: -w on potentials only; no interactions.
PPPInstance bipartite_matching_to_ppp(int left, int right,
                                      const std::vector<Edge>& edges);

/// |interactions| / |Q(m,n)|.
Rational density(const PPPInstance& inst);

/// Input-file parsers. QAP: n, then two n x n integer matrices. TSP: n then
/// an n x n matrix. Graph: "nodes N" then "u v w" lines. Bipartite: "m n"
/// then "u v w" lines.
std::pair<DenseMatrix, DenseMatrix> parse_qap(std::istream& in);
DenseMatrix parse_tsp(std::istream& in);
WeightedGraph parse_graph(std::istream& in);
/// Two concatenated graph sections (guest, then host), each with its own
/// "nodes N" header.
std::pair<WeightedGraph, WeightedGraph> parse_two_graphs(std::istream& in);
struct BipartiteInput {
    int left;
    int right;
    std::vector<Edge> edges;
};
BipartiteInput parse_bipartite(std::istream& in);

/// Seeded generators used for reproducible term-count runs: uniform integer
/// weights in [1, 100].
WeightedGraph random_graph(int nodes, int edge_count, std::uint64_t seed);
DenseMatrix random_dense_matrix(int n, std::uint64_t seed, bool zero_diagonal);

}  // namespace permq
