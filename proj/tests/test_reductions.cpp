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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>
#include <vector>

#include "permq/errors.hpp"
#include "permq/reductions.hpp"
#include "permq/solvers.hpp"

using namespace permq;

namespace {

void each_permutation(int n, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    do {
        fn(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

std::int64_t qap_cost(const DenseMatrix& f, const DenseMatrix& d, const std::vector<int>& p) {
    std::int64_t c = 0;
    const int n = static_cast<int>(f.size());
    for (int i = 0; i < n; ++i)
        for (int i2 = 0; i2 < n; ++i2)
            c += f[i][i2] * d[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])]
                             [static_cast<std::size_t>(p[static_cast<std::size_t>(i2)])];
    return c;
}

std::int64_t tour_cost(const DenseMatrix& d, const std::vector<int>& p) {
    std::int64_t c = 0;
    const int n = static_cast<int>(d.size());
    for (int i = 0; i < n; ++i)
        c += d[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])]
              [static_cast<std::size_t>(p[static_cast<std::size_t>((i + 1) % n)])];
    return c;
}

}  // namespace

TEST_CASE("facility assignment translates term by term") {
    DenseMatrix f = {{0, 2}, {0, 0}};
    DenseMatrix d = {{0, 5}, {7, 0}};
    PPPInstance inst = qap_to_ppp(f, d);
    CHECK(inst.potentials().empty());
    REQUIRE(inst.interactions().size() == 2);
    CHECK(inst.interactions().at({0, 0, 1, 1}) == 10);  // f01 d01
    CHECK(inst.interactions().at({0, 1, 1, 0}) == 14);  // f01 d10
}

TEST_CASE("facility assignment keeps every permutation value") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        for (int n : {2, 3, 4, 5}) {
            DenseMatrix f = random_dense_matrix(n, seed, false);
            DenseMatrix d = random_dense_matrix(n, seed + 100, false);
            PPPInstance inst = qap_to_ppp(f, d);
            each_permutation(n, [&](const std::vector<int>& p) {
                CHECK(ppp_value(inst, {n, n, p}) == qap_cost(f, d, p));
            });
        }
    }
}

TEST_CASE("facility assignment counts sparse interactions exactly") {
    // one nonzero off-diagonal flow contributes n(n-1) interactions
    DenseMatrix f = {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}};
    DenseMatrix d = random_dense_matrix(3, 9, true);
    PPPInstance inst = qap_to_ppp(f, d);
    CHECK(inst.interactions().size() == 6);
    CHECK_THROWS_AS(qap_to_ppp(f, DenseMatrix{{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(qap_to_ppp(DenseMatrix{{0, 1}}, DenseMatrix{{0}}), std::invalid_argument);
}

TEST_CASE("dense tours keep every permutation value") {
    DenseMatrix tri = {{0, 1, 2}, {1, 0, 3}, {2, 3, 0}};
    PPPInstance inst = tsp_to_ppp(tri);
    each_permutation(3, [&](const std::vector<int>& p) {
        CHECK(ppp_value(inst, {3, 3, p}) == 6);
    });

    for (int n : {4, 5}) {
        DenseMatrix d = random_dense_matrix(n, 31 + static_cast<std::uint64_t>(n), true);
        PPPInstance asym = tsp_to_ppp(d);
        each_permutation(n, [&](const std::vector<int>& p) {
            CHECK(ppp_value(asym, {n, n, p}) == tour_cost(d, p));
        });
    }

    CHECK(tsp_to_ppp(random_dense_matrix(100, 1, true)).interactions().size() == 990000);
    CHECK_THROWS_AS(tsp_to_ppp(DenseMatrix{{0, 1}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("sparse tours only touch graph edges") {
    WeightedGraph tri{3, {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}}};
    GraphTspResult r = tsp_graph_to_ppp(tri);
    CHECK(r.big == 3 * 3 + 1);
    CHECK(r.shift == 3 * r.big);
    CHECK(r.instance.interactions().size() == 18);
    each_permutation(3, [&](const std::vector<int>& p) {
        CHECK(ppp_value(r.instance, {3, 3, p}) + r.shift == 6);
    });
}

TEST_CASE("missing edges price a tour out") {
    WeightedGraph star{4, {{0, 1, 5}, {0, 2, 5}, {0, 3, 5}}};
    GraphTspResult r = tsp_graph_to_ppp(star);
    OracleResult best = permutation_oracle(r.instance);
    CHECK(best.best_value + r.shift >= r.big);
    CHECK_THROWS_AS(tsp_graph_to_ppp(WeightedGraph{2, {{0, 1, 1}}}), std::invalid_argument);
}

TEST_CASE("a midsize sparse tour instance has the expected size") {
    WeightedGraph g = random_graph(40, 104, 7);
    CHECK(g.edges.size() == 104);
    GraphTspResult r = tsp_graph_to_ppp(g);
    CHECK(r.instance.interactions().size() == 8320);  // 2 * nodes * edges
    CHECK(density(r.instance) == Rational(8320, r.instance.max_interactions()));
}

TEST_CASE("subgraph embedding bottoms out at minus the guest size") {
    WeightedGraph triangle{3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}}};
    WeightedGraph k4{4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}}};
    PPPInstance embed = subgraph_iso_to_ppp(triangle, k4);
    CHECK(embed.interactions().size() == 36);
    CHECK(permutation_oracle(embed).best_value == -3);

    WeightedGraph path{3, {{0, 1, 1}, {1, 2, 1}}};
    WeightedGraph c4{4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}}};
    CHECK(permutation_oracle(subgraph_iso_to_ppp(path, c4)).best_value == -2);

    // a triangle does not embed in a 4-cycle
    CHECK(permutation_oracle(subgraph_iso_to_ppp(triangle, c4)).best_value == -2);
    CHECK_THROWS_AS(subgraph_iso_to_ppp(k4, triangle), std::invalid_argument);
}

TEST_CASE("matching pairs nodes through mutual assignment") {
    WeightedGraph path{3, {{0, 1, 7}, {1, 2, 4}}};
    CHECK(permutation_oracle(matching_to_ppp(path)).best_value == -7);

    WeightedGraph triangle{3, {{0, 1, 5}, {0, 2, 9}, {1, 2, 6}}};
    CHECK(permutation_oracle(matching_to_ppp(triangle)).best_value == -9);

    WeightedGraph edgeless{3, {}};
    CHECK(permutation_oracle(matching_to_ppp(edgeless)).best_value == 0);
}

TEST_CASE("bipartite matching uses potentials only") {
    std::vector<Edge> edges = {{0, 0, 1}, {0, 1, 2}, {1, 0, 3}, {1, 1, 5}};
    PPPInstance inst = bipartite_matching_to_ppp(2, 2, edges);
    CHECK(inst.interactions().empty());
    CHECK(permutation_oracle(inst).best_value == -6);

    PPPInstance single = bipartite_matching_to_ppp(1, 2, {{0, 1, 4}});
    CHECK(permutation_oracle(single).best_value == -4);

    CHECK_THROWS_AS(bipartite_matching_to_ppp(3, 2, {}), std::invalid_argument);
    CHECK_THROWS_AS(bipartite_matching_to_ppp(2, 2, std::vector<Edge>{{0, 2, 1}}),
                    std::invalid_argument);
}

TEST_CASE("density is the filled fraction of consistent quartets") {
    DenseMatrix f = random_dense_matrix(4, 5, false);
    DenseMatrix d = random_dense_matrix(4, 6, false);
    PPPInstance dense = qap_to_ppp(f, d);
    CHECK(density(dense) == Rational(1));
    PPPInstance empty(2, 2);
    CHECK(density(empty) == Rational(0));
    CHECK_THROWS_AS(density(PPPInstance(1, 4)), std::invalid_argument);
}

TEST_CASE("graph validation catches malformed edges") {
    CHECK_THROWS_AS(WeightedGraph({3, {{1, 1, 5}}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(WeightedGraph({3, {{0, 3, 5}}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(WeightedGraph({3, {{0, 1, 5}, {0, 1, 2}}}).validate(), std::invalid_argument);
    CHECK_NOTHROW(WeightedGraph({3, {{0, 1, 5}, {0, 2, 2}}}).validate());
}

TEST_CASE("input parsers read the documented formats") {
    std::istringstream qap("2\n0 2\n0 0\n0 5\n7 0\n");
    auto [f, d] = parse_qap(qap);
    CHECK(f == DenseMatrix{{0, 2}, {0, 0}});
    CHECK(d == DenseMatrix{{0, 5}, {7, 0}});

    std::istringstream tsp("3\n0 1 2\n1 0 3\n2 3 0\n");
    CHECK(parse_tsp(tsp) == DenseMatrix{{0, 1, 2}, {1, 0, 3}, {2, 3, 0}});

    std::istringstream graph("nodes 3\n1 0 7\n1 2 4\n");
    WeightedGraph g = parse_graph(graph);
    CHECK(g.nodes == 3);
    REQUIRE(g.edges.size() == 2);
    CHECK(g.edges[0].u == 0);  // endpoints are normalized to u < v
    CHECK(g.edges[0].v == 1);
    CHECK(g.edges[0].w == 7);

    std::istringstream two("nodes 2\n0 1 1\nnodes 3\n0 1 1\n1 2 1\n");
    auto [guest, host] = parse_two_graphs(two);
    CHECK(guest.nodes == 2);
    CHECK(host.nodes == 3);
    CHECK(host.edges.size() == 2);

    std::istringstream bip("2 3\n0 1 4\n1 2 6\n");
    BipartiteInput b = parse_bipartite(bip);
    CHECK(b.left == 2);
    CHECK(b.right == 3);
    CHECK(b.edges.size() == 2);
}

TEST_CASE("input parsers reject malformed text") {
    std::istringstream bad_qap("2\n0 2\n0\n");
    CHECK_THROWS_AS(parse_qap(bad_qap), ParseError);
    std::istringstream bad_graph("vertices 3\n");
    CHECK_THROWS_AS(parse_graph(bad_graph), ParseError);
    std::istringstream truncated("nodes 2\n0 1 1\nnodes 3\n0 1\n");
    CHECK_THROWS_AS(parse_two_graphs(truncated), ParseError);
    std::istringstream one_section("nodes 2\n0 1 1\n");
    CHECK_THROWS_AS(parse_two_graphs(one_section), ParseError);
}

TEST_CASE("seeded generators are reproducible") {
    WeightedGraph g1 = random_graph(10, 20, 42);
    WeightedGraph g2 = random_graph(10, 20, 42);
    REQUIRE(g1.edges.size() == g2.edges.size());
    for (std::size_t i = 0; i < g1.edges.size(); ++i) {
        CHECK(g1.edges[i].u == g2.edges[i].u);
        CHECK(g1.edges[i].v == g2.edges[i].v);
        CHECK(g1.edges[i].w == g2.edges[i].w);
    }
    CHECK_NOTHROW(g1.validate());
    CHECK(random_dense_matrix(5, 3, true) == random_dense_matrix(5, 3, true));
    CHECK(random_dense_matrix(5, 3, true)[2][2] == 0);
    CHECK_THROWS_AS(random_graph(4, 7, 1), std::invalid_argument);
}
