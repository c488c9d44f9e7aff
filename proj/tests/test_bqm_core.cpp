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
#include <random>
#include <set>
#include <vector>

#include "permq/builder.hpp"
#include "permq/errors.hpp"
#include "permq/io.hpp"
#include "permq/model.hpp"

using namespace permq;

namespace {

QuadraticModel make_model(Kind kind, int num_vars,
                          std::vector<LinearTerm> linear,
                          std::vector<QuadraticTerm> quadratic,
                          Rational offset = Rational(0)) {
    QuadraticModel m;
    m.kind = kind;
    m.num_vars = num_vars;
    m.linear = std::move(linear);
    m.quadratic = std::move(quadratic);
    m.offset = offset;
    return m;
}

// The six-variable example pair used throughout: 4 * E(X) = H(S) + 4.
QuadraticModel example_qubo() {
    return make_model(Kind::QUBO, 6, {{0, -2}, {1, -1}, {2, 2}, {5, 4}},
                      {{0, 1, 2},
                       {0, 3, -1},
                       {0, 4, -2},
                       {1, 2, -1},
                       {1, 5, 1},
                       {2, 5, 3},
                       {3, 4, -2},
                       {4, 5, -2}});
}

QuadraticModel example_ising() {
    return make_model(Kind::ISING, 6, {{0, -5}, {2, 6}, {3, -3}, {4, -6}, {5, 10}},
                      {{0, 1, 2},
                       {0, 3, -1},
                       {0, 4, -2},
                       {1, 2, -1},
                       {1, 5, 1},
                       {2, 5, 3},
                       {3, 4, -2},
                       {4, 5, -2}});
}

std::vector<std::int8_t> nth_assignment(Kind kind, int num_vars, unsigned mask) {
    std::vector<std::int8_t> a(num_vars);
    for (int v = 0; v < num_vars; ++v) {
        bool hot = (mask >> v) & 1u;
        a[v] = kind == Kind::QUBO ? (hot ? 1 : 0) : (hot ? 1 : -1);
    }
    return a;
}

Rational naive_evaluate(const QuadraticModel& m, const std::vector<std::int8_t>& a) {
    Rational e = m.offset;
    for (const auto& t : m.linear) e += Rational(t.coef * a[t.var]);
    for (const auto& t : m.quadratic) e += Rational(t.coef * a[t.i] * a[t.j]);
    return e;
}

QuadraticModel random_model(Kind kind, int num_vars, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> keep(0, 2);
    std::vector<LinearTerm> lin;
    std::vector<QuadraticTerm> quad;
    for (int i = 0; i < num_vars; ++i) {
        int c = coef(rng);
        if (c != 0 && keep(rng)) lin.push_back({i, c});
    }
    for (int i = 0; i < num_vars; ++i)
        for (int j = i + 1; j < num_vars; ++j) {
            int c = coef(rng);
            if (c != 0 && keep(rng)) quad.push_back({i, j, c});
        }
    return make_model(kind, num_vars, std::move(lin), std::move(quad),
                      Rational(coef(rng), 1 + std::uniform_int_distribution<int>(0, 3)(rng)));
}

}  // namespace

TEST_CASE("expression builder expands binary squares") {
    // (1 - x0 - x1)^2 with x^2 = x
    ExpressionBuilder b(Kind::QUBO, 2);
    b.add_square(LinExpr::con(Rational(1)) - LinExpr::var(0) - LinExpr::var(1));
    QuadraticModel m = b.finalize();
    CHECK(m.linear == std::vector<LinearTerm>{{0, -1}, {1, -1}});
    CHECK(m.quadratic == std::vector<QuadraticTerm>{{0, 1, 2}});
    CHECK(m.offset == Rational(1));
}

TEST_CASE("expression builder expands spin squares") {
    // (s0 - s1)^2 / 2 with s^2 = 1
    ExpressionBuilder b(Kind::ISING, 2);
    b.add_square(LinExpr::var(0) - LinExpr::var(1), Rational(1, 2));
    QuadraticModel m = b.finalize();
    CHECK(m.linear.empty());
    CHECK(m.quadratic == std::vector<QuadraticTerm>{{0, 1, -1}});
    CHECK(m.offset == Rational(1));
}

TEST_CASE("expression builder merges and cancels terms") {
    ExpressionBuilder b(Kind::QUBO, 3);
    b.add_product(LinExpr::var(0), LinExpr::var(1), Rational(3));
    b.add_product(LinExpr::var(1), LinExpr::var(0), Rational(-3));
    b.add_linear(LinExpr::var(2), Rational(2));
    b.add_linear(LinExpr::var(2), Rational(-1));
    b.add_constant(Rational(1, 2));
    QuadraticModel m = b.finalize();
    CHECK(m.quadratic.empty());
    CHECK(m.linear == std::vector<LinearTerm>{{2, 1}});
    CHECK(m.offset == Rational(1, 2));
}

TEST_CASE("expression builder rejects fractional coefficients") {
    ExpressionBuilder b(Kind::QUBO, 1);
    b.add_linear(LinExpr::var(0), Rational(1, 2));
    CHECK_THROWS_AS(b.finalize(), NonIntegerCoefficient);
}

TEST_CASE("evaluate matches a naive evaluator") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        for (Kind kind : {Kind::QUBO, Kind::ISING}) {
            QuadraticModel m = random_model(kind, 10, rng);
            for (int rep = 0; rep < 50; ++rep) {
                unsigned mask = static_cast<unsigned>(rng() & 0x3ff);
                auto a = nth_assignment(kind, 10, mask);
                CHECK(evaluate(m, a) == naive_evaluate(m, a));
            }
        }
    }
}

TEST_CASE("evaluate validates domain and length") {
    QuadraticModel m = example_qubo();
    CHECK_THROWS_AS(evaluate(m, std::vector<std::int8_t>(5, 0)), std::invalid_argument);
    CHECK_THROWS_AS(evaluate(m, std::vector<std::int8_t>{0, 0, 0, 0, 0, -1}),
                    std::invalid_argument);
    QuadraticModel h = example_ising();
    CHECK_THROWS_AS(evaluate(h, std::vector<std::int8_t>{1, 1, 1, 1, 1, 0}),
                    std::invalid_argument);
}

TEST_CASE("example pair attains its known optima") {
    QuadraticModel q = example_qubo();
    QuadraticModel h = example_ising();
    CHECK(evaluate(q, {1, 0, 0, 1, 1, 0}) == Rational(-7));
    CHECK(evaluate(h, {1, -1, -1, 1, 1, -1}) == Rational(-32));
    Rational qmin(100), hmin(100);
    for (unsigned mask = 0; mask < 64; ++mask) {
        Rational eq = evaluate(q, nth_assignment(Kind::QUBO, 6, mask));
        Rational eh = evaluate(h, nth_assignment(Kind::ISING, 6, mask));
        qmin = std::min(qmin, eq);
        hmin = std::min(hmin, eh);
        // the affine relation holds pointwise, not just at the optimum
        CHECK(Rational(4) * eq == eh + Rational(4));
    }
    CHECK(qmin == Rational(-7));
    CHECK(hmin == Rational(-32));
}

TEST_CASE("convert reproduces the example spin model exactly") {
    ConvertResult r = convert(example_qubo());
    CHECK(r.scale == Rational(4));
    CHECK(r.shift == Rational(4));
    CHECK(r.model == example_ising());
}

TEST_CASE("convert round trip preserves the energy landscape") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Kind kind = trial % 2 ? Kind::QUBO : Kind::ISING;
        int nv = 3 + static_cast<int>(rng() % 10);
        QuadraticModel m = random_model(kind, nv, rng);
        ConvertResult once = convert(m);
        ConvertResult back = convert(once.model);
        CHECK(back.model.kind == kind);
        for (unsigned mask = 0; mask < (1u << nv); ++mask) {
            Rational e = evaluate(m, nth_assignment(kind, nv, mask));
            Rational e1 = evaluate(once.model, nth_assignment(once.model.kind, nv, mask));
            CHECK(once.scale * e == e1 + once.shift);
            Rational e2 = evaluate(back.model, nth_assignment(kind, nv, mask));
            CHECK(back.scale * e1 == e2 + back.shift);
        }
    }
}

TEST_CASE("convert maps minimizer sets bijectively") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        Kind kind = trial % 2 ? Kind::QUBO : Kind::ISING;
        int nv = 2 + static_cast<int>(rng() % 11);
        QuadraticModel m = random_model(kind, nv, rng);
        ConvertResult r = convert(m);
        std::set<unsigned> src_min, dst_min;
        Rational sbest(INT64_MAX), dbest(INT64_MAX);
        for (unsigned mask = 0; mask < (1u << nv); ++mask) {
            Rational es = evaluate(m, nth_assignment(kind, nv, mask));
            if (es < sbest) { sbest = es; src_min.clear(); }
            if (es == sbest) src_min.insert(mask);
            Rational ed = evaluate(r.model, nth_assignment(r.model.kind, nv, mask));
            if (ed < dbest) { dbest = ed; dst_min.clear(); }
            if (ed == dbest) dst_min.insert(mask);
        }
        CHECK(src_min == dst_min);
        CHECK(r.scale * sbest == dbest + r.shift);
    }
}

TEST_CASE("convert of a constant model is trivial") {
    QuadraticModel m = make_model(Kind::QUBO, 2, {}, {}, Rational(3, 2));
    ConvertResult r = convert(m);
    CHECK(r.model.linear.empty());
    CHECK(r.model.quadratic.empty());
    CHECK(r.model.offset == Rational(0));
}

TEST_CASE("stats counts terms and coefficient sets") {
    ModelStats st = stats(example_qubo());
    CHECK(st.num_vars == 6);
    CHECK(st.linear_term_count == 4);
    CHECK(st.linear_coeff_set == std::vector<std::int64_t>{-2, -1, 2, 4});
    CHECK(st.quadratic_term_count == 8);
    CHECK(st.quadratic_coeff_set == std::vector<std::int64_t>{-2, -1, 1, 2, 3});
    CHECK(st.offset == Rational(0));
    REQUIRE(st.diameter.has_value());
    CHECK(*st.diameter == 3);
}

TEST_CASE("stats diameter handles paths, singletons and disconnection") {
    // path 0-1-2-3
    QuadraticModel path =
        make_model(Kind::QUBO, 4, {}, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
    CHECK(*stats(path).diameter == 3);

    QuadraticModel lonely = make_model(Kind::ISING, 1, {{0, 2}}, {});
    CHECK(*stats(lonely).diameter == 0);

    QuadraticModel split = make_model(Kind::QUBO, 4, {}, {{0, 1, 1}, {2, 3, 1}});
    CHECK(!stats(split).diameter.has_value());
    CHECK(stats(split).diameter_str() == "disconnected");

    QuadraticModel empty = make_model(Kind::QUBO, 0, {}, {});
    CHECK(*stats(empty).diameter == 0);
}

TEST_CASE("json export imports back byte-identically") {
    VariableLayout layout;
    layout.add({Matrix::A, 0, 0});
    layout.add({Matrix::A, 0, 1});
    layout.add({Matrix::B, 0, 0});
    layout.add({Matrix::X, 1, 2});
    layout.add({Matrix::FLAT, 0, 4});
    layout.add({Matrix::FLAT, 0, 5});
    QuadraticModel m = example_ising();
    std::string bytes = export_model(m, layout, Format::JSON);
    auto [m2, layout2] = import_model(bytes);
    CHECK(m2 == m);
    CHECK(layout2 == layout);
    CHECK(export_model(m2, layout2, Format::JSON) == bytes);
}

TEST_CASE("qubo text export round trips") {
    QuadraticModel m = make_model(Kind::QUBO, 2, {{0, -1}, {1, -1}}, {{0, 1, 2}}, Rational(1));
    std::string bytes = export_model(m, VariableLayout::flat(2), Format::QUBO_TEXT);
    CHECK(bytes.find("c offset 1\n") != std::string::npos);
    CHECK(bytes.find("p qubo 0 2 2 1\n") != std::string::npos);
    auto [m2, layout2] = import_model(bytes);
    CHECK(m2 == m);
    CHECK(layout2.num_vars() == 2);
    CHECK(layout2.label(0) == VarLabel{Matrix::FLAT, 0, 0});
}

TEST_CASE("qubo text keeps fractional offsets exact") {
    QuadraticModel m = make_model(Kind::QUBO, 3, {{2, 1}}, {{0, 2, -1}}, Rational(1, 2));
    std::string bytes = export_model(m, VariableLayout::flat(3), Format::QUBO_TEXT);
    CHECK(bytes.find("c offset 1/2\n") != std::string::npos);
    auto [m2, layout2] = import_model(bytes);
    CHECK(m2 == m);
}

TEST_CASE("qubo text rejects spin models") {
    CHECK_THROWS_AS(export_model(example_ising(), VariableLayout::flat(6), Format::QUBO_TEXT),
                    KindMismatch);
}

TEST_CASE("import reports the offending line") {
    try {
        import_model("p qubo zero 2 2 1\n0 0 -1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
    }
    try {
        import_model("p qubo 0 2 2 1\n0 0 bad\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(import_model("{\"kind\": \"qubo\""), ParseError);
}
