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

#include "permq/reductions.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "permq/errors.hpp"

namespace permq {

void WeightedGraph::validate() const {
    if (nodes < 0) throw std::invalid_argument("negative node count");
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges) {
        if (e.u < 0 || e.v >= nodes || e.u >= e.v)
            throw std::invalid_argument("edge endpoints must satisfy 0 <= u < v < nodes");
        if (!seen.insert({e.u, e.v}).second) throw std::invalid_argument("duplicate edge");
    }
}

namespace {

void check_square(const DenseMatrix& m, const char* what) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw std::invalid_argument(std::string(what) + " must be square");
}

}  // namespace

PPPInstance qap_to_ppp(const DenseMatrix& flows, const DenseMatrix& distances) {
    check_square(flows, "flow matrix");
    check_square(distances, "distance matrix");
    if (flows.size() != distances.size())
        throw std::invalid_argument("flow and distance matrices must have the same size");
    const int n = static_cast<int>(flows.size());
    PPPInstance inst(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inst.add_potential(i, j, flows[i][i] * distances[j][j]);
    for (int i = 0; i < n; ++i)
        for (int i2 = i + 1; i2 < n; ++i2)
            for (int j = 0; j < n; ++j)
                for (int j2 = 0; j2 < n; ++j2) {
                    if (j == j2) continue;
                    std::int64_t v = flows[i][i2] * distances[j][j2] + flows[i2][i] * distances[j2][j];
                    inst.add_interaction(i, j, i2, j2, v);
                }
    return inst;
}

PPPInstance tsp_to_ppp(const DenseMatrix& distances) {
    check_square(distances, "distance matrix");
    const int n = static_cast<int>(distances.size());
    if (n < 2) throw std::invalid_argument("need at least two cities");
    for (int j = 0; j < n; ++j)
        if (distances[j][j] != 0) throw std::invalid_argument("distance diagonal must be zero");
    PPPInstance inst(n, n);
    for (int i = 0; i < n; ++i) {
        const int i2 = (i + 1) % n;
        for (int j = 0; j < n; ++j)
            for (int j2 = 0; j2 < n; ++j2) {
                if (j == j2) continue;
                // add_interaction folds the wraparound pair (i > i2) into
                // canonical order by swapping the halves.
                inst.add_interaction(i, j, i2, j2, distances[j][j2]);
            }
    }
    return inst;
}

GraphTspResult tsp_graph_to_ppp(const WeightedGraph& graph, std::int64_t big) {
    graph.validate();
    const int n = graph.nodes;
    if (n < 3) throw std::invalid_argument("graph TSP needs at least three nodes");
    if (big == AUTO_BIG) {
        std::int64_t mx = 0;
        for (const auto& e : graph.edges) mx = std::max(mx, e.w < 0 ? -e.w : e.w);
        big = static_cast<std::int64_t>(n) * mx + 1;
    }
    PPPInstance inst(n, n);
    for (int i = 0; i < n; ++i) {
        const int i2 = (i + 1) % n;
        for (const auto& e : graph.edges) {
            inst.add_interaction(i, e.u, i2, e.v, e.w - big);
            inst.add_interaction(i, e.v, i2, e.u, e.w - big);
        }
    }
    return GraphTspResult{std::move(inst), big, static_cast<std::int64_t>(n) * big};
}

PPPInstance subgraph_iso_to_ppp(const WeightedGraph& guest, const WeightedGraph& host) {
    guest.validate();
    host.validate();
    if (guest.nodes > host.nodes)
        throw std::invalid_argument("guest graph may not have more nodes than the host");
    PPPInstance inst(guest.nodes, host.nodes);
    for (const auto& ge : guest.edges)
        for (const auto& he : host.edges) {
            inst.add_interaction(ge.u, he.u, ge.v, he.v, -1);
            inst.add_interaction(ge.u, he.v, ge.v, he.u, -1);
        }
    return inst;
}

PPPInstance matching_to_ppp(const WeightedGraph& graph) {
    graph.validate();
    PPPInstance inst(graph.nodes, graph.nodes);
    for (const auto& e : graph.edges) inst.add_interaction(e.u, e.v, e.v, e.u, -e.w);
    return inst;
}

PPPInstance bipartite_matching_to_ppp(int left, int right, const std::vector<Edge>& edges) {
    if (left > right)
        throw std::invalid_argument("left side may not be larger than the right side");
    PPPInstance inst(left, right);
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges) {
        if (e.u < 0 || e.u >= left || e.v < 0 || e.v >= right)
            throw std::invalid_argument("bipartite edge endpoint out of range");
        if (!seen.insert({e.u, e.v}).second) throw std::invalid_argument("duplicate edge");
        inst.add_potential(e.u, e.v, -e.w);
    }
    return inst;
}

Rational density(const PPPInstance& inst) {
    std::int64_t q = inst.max_interactions();
    if (q == 0) throw std::invalid_argument("Q(m,n) is empty; density undefined");
    return Rational(static_cast<std::int64_t>(inst.interactions().size()), q);
}

namespace {

std::int64_t read_int(std::istream& in, int& line, const char* what) {
    std::int64_t v;
    if (!(in >> v)) throw ParseError(std::string("expected ") + what, line);
    return v;
}

DenseMatrix read_matrix(std::istream& in, int n, int& line) {
    DenseMatrix m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            read_int(in, line, "matrix entry");
    return m;
}

}  // namespace

std::pair<DenseMatrix, DenseMatrix> parse_qap(std::istream& in) {
    int line = 1;
    auto n = static_cast<int>(read_int(in, line, "matrix size"));
    if (n < 1) throw ParseError("matrix size must be positive", line);
    DenseMatrix f = read_matrix(in, n, line);
    DenseMatrix d = read_matrix(in, n, line);
    return {std::move(f), std::move(d)};
}

DenseMatrix parse_tsp(std::istream& in) {
    int line = 1;
    auto n = static_cast<int>(read_int(in, line, "matrix size"));
    if (n < 1) throw ParseError("matrix size must be positive", line);
    return read_matrix(in, n, line);
}

WeightedGraph parse_graph(std::istream& in) {
    std::string word;
    if (!(in >> word) || word != "nodes") throw ParseError("expected 'nodes N' header", 1);
    int line = 1;
    WeightedGraph g;
    g.nodes = static_cast<int>(read_int(in, line, "node count"));
    int u;
    while (in >> u) {
        ++line;
        Edge e;
        e.u = u;
        e.v = static_cast<int>(read_int(in, line, "edge endpoint"));
        e.w = read_int(in, line, "edge weight");
        if (e.u > e.v) std::swap(e.u, e.v);
        g.edges.push_back(e);
    }
    g.validate();
    return g;
}

std::pair<WeightedGraph, WeightedGraph> parse_two_graphs(std::istream& in) {
    std::vector<std::string> tokens;
    std::string t;
    while (in >> t) tokens.push_back(t);
    std::vector<std::size_t> heads;
    for (std::size_t i = 0; i < tokens.size(); ++i)
        if (tokens[i] == "nodes") heads.push_back(i);
    if (heads.size() != 2) throw ParseError("expected exactly two 'nodes N' sections", 1);

    auto build = [&](std::size_t from, std::size_t to) {
        WeightedGraph g;
        if (from + 1 >= to) throw ParseError("missing node count", 1);
        g.nodes = std::stoi(tokens[from + 1]);
        std::size_t i = from + 2;
        while (i < to) {
            if (i + 3 > to) throw ParseError("truncated edge line", 1);
            Edge e;
            e.u = std::stoi(tokens[i]);
            e.v = std::stoi(tokens[i + 1]);
            e.w = std::stoll(tokens[i + 2]);
            if (e.u > e.v) std::swap(e.u, e.v);
            g.edges.push_back(e);
            i += 3;
        }
        g.validate();
        return g;
    };
    try {
        return {build(heads[0], heads[1]), build(heads[1], tokens.size())};
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 1);
    }
}

BipartiteInput parse_bipartite(std::istream& in) {
    int line = 1;
    BipartiteInput b;
    b.left = static_cast<int>(read_int(in, line, "left size"));
    b.right = static_cast<int>(read_int(in, line, "right size"));
    int u;
    while (in >> u) {
        ++line;
        Edge e;
        e.u = u;
        e.v = static_cast<int>(read_int(in, line, "edge endpoint"));
        e.w = read_int(in, line, "edge weight");
        b.edges.push_back(e);
    }
    return b;
}

WeightedGraph random_graph(int nodes, int edge_count, std::uint64_t seed) {
    const std::int64_t max_edges = static_cast<std::int64_t>(nodes) * (nodes - 1) / 2;
    if (edge_count < 0 || edge_count > max_edges)
        throw std::invalid_argument("edge count out of range");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> node(0, nodes - 1);
    std::uniform_int_distribution<std::int64_t> weight(1, 100);
    std::set<std::pair<int, int>> seen;
    WeightedGraph g;
    g.nodes = nodes;
    while (static_cast<int>(g.edges.size()) < edge_count) {
        int u = node(rng), v = node(rng);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) continue;
        g.edges.push_back({u, v, weight(rng)});
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const Edge& a, const Edge& b) {
        return std::make_pair(a.u, a.v) < std::make_pair(b.u, b.v);
    });
    return g;
}

DenseMatrix random_dense_matrix(int n, std::uint64_t seed, bool zero_diagonal) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> weight(1, 100);
    DenseMatrix m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                zero_diagonal && i == j ? 0 : weight(rng);
    return m;
}

}  // namespace permq
