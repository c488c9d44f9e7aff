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

#include "permq/kernels.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "permq/builder.hpp"

namespace permq {

std::string technique_name(Technique t) {
    switch (t) {
        case Technique::ONE_HOT: return "one-hot";
        case Technique::ALL_DIFFERENT: return "all-different";
        case Technique::DUAL_MATRIX: return "dual-matrix";
        default: return "extended";
    }
}

Technique technique_from_name(const std::string& name) {
    if (name == "one-hot") return Technique::ONE_HOT;
    if (name == "all-different") return Technique::ALL_DIFFERENT;
    if (name == "dual-matrix") return Technique::DUAL_MATRIX;
    if (name == "extended") return Technique::EXTENDED;
    throw std::invalid_argument("unknown technique: " + name);
}

void PartialPermutation::validate() const {
    if (m < 0 || n < 0 || m > n) throw std::invalid_argument("need 0 <= m <= n");
    if (static_cast<int>(values.size()) != m)
        throw std::invalid_argument("permutation has wrong length");
    std::set<int> seen;
    for (int v : values) {
        if (v < 0 || v >= n) throw std::invalid_argument("permutation value out of range");
        if (!seen.insert(v).second) throw std::invalid_argument("permutation values must be distinct");
    }
}

namespace {

struct KernelContext {
    Technique tech;
    int m;
    int n;
    Kind kind;
    VariableLayout layout;

    int a(int i, int j) const { return layout.index_of({Matrix::A, i, j}); }
    int b(int i, int j) const { return layout.index_of({Matrix::B, i, j}); }
    int x(int i, int j) const { return layout.index_of({Matrix::X, i, j}); }

    int lo() const { return kind == Kind::QUBO ? 0 : -1; }

    // Row difference of A with guards a_{i,-1} = hot, a_{i,n-1} = cold.
    LinExpr da(int i, int j) const {
        LinExpr left = j - 1 < 0 ? LinExpr::con(1) : LinExpr::var(a(i, j - 1));
        LinExpr right = j >= n - 1 ? LinExpr::con(lo()) : LinExpr::var(a(i, j));
        return left - right;
    }
    // Column difference of B with guards b_{-1,j} = hot, b_{m-1,j} = cold.
    LinExpr db(int i, int j) const {
        LinExpr top = i - 1 < 0 ? LinExpr::con(1) : LinExpr::var(b(i - 1, j));
        LinExpr bot = i >= m - 1 ? LinExpr::con(lo()) : LinExpr::var(b(i, j));
        return top - bot;
    }
};

VariableLayout make_layout(Technique tech, int m, int n, Kind kind) {
    VariableLayout layout;
    int lo = kind == Kind::QUBO ? 0 : -1;
    switch (tech) {
        case Technique::ONE_HOT:
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j) layout.add({Matrix::X, i, j});
            break;
        case Technique::ALL_DIFFERENT:
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n - 1; ++j) layout.add({Matrix::X, i, j});
            for (int i = 0; i < n; ++i) {
                layout.add_guard({Matrix::X, i, -1}, 1);
                layout.add_guard({Matrix::X, i, n - 1}, lo);
            }
            break;
        case Technique::DUAL_MATRIX:
        case Technique::EXTENDED:
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n - 1; ++j) layout.add({Matrix::A, i, j});
            for (int i = 0; i < m - 1; ++i)
                for (int j = 0; j < n; ++j) layout.add({Matrix::B, i, j});
            if (tech == Technique::EXTENDED)
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < n; ++j) layout.add({Matrix::X, i, j});
            for (int i = 0; i < m; ++i) {
                layout.add_guard({Matrix::A, i, -1}, 1);
                layout.add_guard({Matrix::A, i, n - 1}, lo);
            }
            for (int j = 0; j < n; ++j) {
                layout.add_guard({Matrix::B, -1, j}, 1);
                layout.add_guard({Matrix::B, m - 1, j}, lo);
            }
            break;
    }
    return layout;
}

void build_one_hot(const KernelContext& c, ExpressionBuilder& b) {
    const Rational half(1, 2);
    const bool full = c.m == c.n;
    for (int i = 0; i < c.m; ++i) {
        LinExpr row;
        for (int j = 0; j < c.n; ++j) row += LinExpr::var(c.x(i, j));
        if (c.kind == Kind::QUBO)
            b.add_square(LinExpr::con(1) - row, full ? half : Rational(1));
        else
            b.add_square(LinExpr::con(c.n - 2) + row, half);
    }
    for (int j = 0; j < c.n; ++j) {
        if (full) {
            LinExpr col;
            for (int i = 0; i < c.m; ++i) col += LinExpr::var(c.x(i, j));
            if (c.kind == Kind::QUBO)
                b.add_square(LinExpr::con(1) - col, half);
            else
                b.add_square(LinExpr::con(c.n - 2) + col, half);
        } else if (c.kind == Kind::QUBO) {
            // Columns are zero-one-hot: pairwise penalties only.
            for (int i = 0; i < c.m; ++i)
                for (int i2 = i + 1; i2 < c.m; ++i2)
                    b.add_product(LinExpr::var(c.x(i, j)), LinExpr::var(c.x(i2, j)));
        } else {
            LinExpr col;
            for (int i = 0; i < c.m; ++i) col += LinExpr::var(c.x(i, j));
            b.add_product(LinExpr::con(c.m) + col, LinExpr::con(c.m - 2) + col, half);
        }
    }
}

void build_all_different(const KernelContext& c, ExpressionBuilder& b) {
    const Rational half(1, 2);
    const int n = c.n;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= n - 1; ++j) {
            LinExpr left = j == 0 ? LinExpr::con(1) : LinExpr::var(c.x(i, j - 1));
            LinExpr right = j == n - 1 ? LinExpr::con(c.lo()) : LinExpr::var(c.x(i, j));
            b.add_square(left - right, half);
        }
    }
    for (int j = 0; j < n - 1; ++j) {
        LinExpr col;
        for (int i = 0; i < n; ++i) col += LinExpr::var(c.x(i, j));
        if (c.kind == Kind::QUBO)
            b.add_square(LinExpr::con(n - j - 1) - col);
        else
            b.add_square(LinExpr::con(n - 2 * j - 2) - col, half);
    }
}

void build_dual_matrix(const KernelContext& c, ExpressionBuilder& b) {
    const Rational half(1, 2);
    for (int i = 0; i < c.m; ++i) {
        for (int j = 0; j < c.n; ++j) {
            LinExpr da = c.da(i, j);
            LinExpr db = c.db(i, j);
            b.add_square(da, half);
            b.add_square(db, half);
            b.add_square(da - db, half);
        }
    }
}

void build_extended(const KernelContext& c, ExpressionBuilder& b) {
    const Rational half(1, 2);
    const bool full = c.m == c.n;
    for (int i = 0; i < c.m; ++i) {
        for (int j = 0; j < c.n; ++j) {
            LinExpr da = c.da(i, j);
            LinExpr db = c.db(i, j);
            b.add_square(da, half);
            b.add_square(db, half);
            LinExpr hot = LinExpr::var(c.x(i, j));
            if (c.kind == Kind::ISING) hot += LinExpr::con(1);
            if (full) {
                b.add_square(hot - da, half);
                b.add_square(hot - db, half);
            } else {
                b.add_square(hot - da);
                b.add_product(hot, LinExpr::con(c.kind == Kind::QUBO ? 1 : 2) - db);
            }
        }
    }
}

}  // namespace

KernelHandle build_kernel(Technique technique, int m, int n, Kind kind) {
    if (m < 1 || n < 1 || m > n) throw std::invalid_argument("need 1 <= m <= n");
    if (technique == Technique::ALL_DIFFERENT && m != n)
        throw std::invalid_argument("all-different supports only full permutations (m = n)");

    KernelContext c{technique, m, n, kind, make_layout(technique, m, n, kind)};
    ExpressionBuilder b(kind, c.layout.num_vars());
    switch (technique) {
        case Technique::ONE_HOT: build_one_hot(c, b); break;
        case Technique::ALL_DIFFERENT: build_all_different(c, b); break;
        case Technique::DUAL_MATRIX: build_dual_matrix(c, b); break;
        case Technique::EXTENDED: build_extended(c, b); break;
    }

    Rational opt;
    switch (technique) {
        case Technique::ONE_HOT: opt = Rational(0); break;
        case Technique::ALL_DIFFERENT: opt = kind == Kind::QUBO ? Rational(n, 2) : Rational(2 * n); break;
        case Technique::DUAL_MATRIX: opt = kind == Kind::QUBO ? Rational(n) : Rational(4 * n); break;
        case Technique::EXTENDED:
            opt = kind == Kind::QUBO ? Rational(m + n, 2) : Rational(2 * (m + n));
            break;
    }
    return KernelHandle{technique, m, n, kind, b.finalize(), std::move(c.layout), opt};
}

std::vector<std::int8_t> encode_permutation(const KernelHandle& handle,
                                            const PartialPermutation& p) {
    p.validate();
    if (p.m != handle.m || p.n != handle.n)
        throw std::invalid_argument("permutation dimensions do not match kernel");
    const std::int8_t hi = 1;
    const std::int8_t lo = handle.kind == Kind::QUBO ? 0 : -1;
    const int m = handle.m, n = handle.n;
    std::vector<std::int8_t> out(static_cast<std::size_t>(handle.model.num_vars), lo);
    auto set = [&](const VarLabel& l, bool hot) {
        out[static_cast<std::size_t>(handle.layout.index_of(l))] = hot ? hi : lo;
    };

    if (handle.technique == Technique::ONE_HOT) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) set({Matrix::X, i, j}, p.values[static_cast<std::size_t>(i)] == j);
        return out;
    }
    if (handle.technique == Technique::ALL_DIFFERENT) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n - 1; ++j) set({Matrix::X, i, j}, j < p.values[static_cast<std::size_t>(i)]);
        return out;
    }
    // Dual-matrix and extended: rows of A encode the permutation, columns of
    // B its inverse; positions outside the image take p(j) = m - 1.
    std::vector<int> inv(static_cast<std::size_t>(n), m - 1);
    for (int i = 0; i < m; ++i) inv[static_cast<std::size_t>(p.values[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n - 1; ++j) set({Matrix::A, i, j}, j < p.values[static_cast<std::size_t>(i)]);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m - 1; ++i) set({Matrix::B, i, j}, i < inv[static_cast<std::size_t>(j)]);
    if (handle.technique == Technique::EXTENDED)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) set({Matrix::X, i, j}, p.values[static_cast<std::size_t>(i)] == j);
    return out;
}

DecodeResult decode_permutation(const KernelHandle& handle,
                                const std::vector<std::int8_t>& assignment) {
    if (static_cast<int>(assignment.size()) != handle.model.num_vars)
        throw std::invalid_argument("assignment length does not match kernel");
    const std::int8_t hi = 1;
    const int m = handle.m, n = handle.n;
    auto bit = [&](const VarLabel& l) {
        return assignment[static_cast<std::size_t>(handle.layout.index_of(l))] == hi ? 1 : 0;
    };
    auto fail = [&](const std::string& why) {
        DecodeResult r;
        r.reason = why;
        return r;
    };
    auto domain_wall_value = [&](Matrix mat, int fixed, int len, bool by_row, bool* ok) {
        int prev = 1;
        int value = 0;
        *ok = true;
        for (int t = 0; t < len; ++t) {
            int cur = by_row ? bit({mat, fixed, t}) : bit({mat, t, fixed});
            if (cur > prev) {
                *ok = false;
                return 0;
            }
            value += cur;
            prev = cur;
        }
        return value;
    };

    DecodeResult res;
    res.permutation.m = m;
    res.permutation.n = n;

    if (handle.technique == Technique::ONE_HOT) {
        for (int i = 0; i < m; ++i) {
            int hot = 0, pos = -1;
            for (int j = 0; j < n; ++j)
                if (bit({Matrix::X, i, j})) {
                    ++hot;
                    pos = j;
                }
            if (hot != 1) return fail("row " + std::to_string(i) + " is not one-hot");
            res.permutation.values.push_back(pos);
        }
        for (int j = 0; j < n; ++j) {
            int hot = 0;
            for (int i = 0; i < m; ++i) hot += bit({Matrix::X, i, j});
            if (hot > 1 || (m == n && hot != 1))
                return fail("column " + std::to_string(j) + " violates the one-hot condition");
        }
        res.feasible = true;
        return res;
    }

    if (handle.technique == Technique::ALL_DIFFERENT) {
        std::set<int> seen;
        for (int i = 0; i < n; ++i) {
            bool ok = false;
            int v = domain_wall_value(Matrix::X, i, n - 1, true, &ok);
            if (!ok) return fail("row " + std::to_string(i) + " violates the domain-wall condition");
            if (!seen.insert(v).second) return fail("rows are not all different");
            res.permutation.values.push_back(v);
        }
        res.feasible = true;
        return res;
    }

    // Dual-matrix / extended.
    std::vector<int> perm, inv;
    for (int i = 0; i < m; ++i) {
        bool ok = false;
        int v = domain_wall_value(Matrix::A, i, n - 1, true, &ok);
        if (!ok) return fail("row " + std::to_string(i) + " of A violates the domain-wall condition");
        perm.push_back(v);
    }
    for (int j = 0; j < n; ++j) {
        bool ok = false;
        int v = domain_wall_value(Matrix::B, j, m - 1, false, &ok);
        if (!ok)
            return fail("column " + std::to_string(j) + " of B violates the domain-wall condition");
        inv.push_back(v);
    }
    for (int i = 0; i < m; ++i)
        if (inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] != i)
            return fail("dual-permutation condition fails at row " + std::to_string(i));
    if (handle.technique == Technique::EXTENDED) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (bit({Matrix::X, i, j}) != (perm[static_cast<std::size_t>(i)] == j ? 1 : 0))
                    return fail("one-hot matrix disagrees with A at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
    }
    res.permutation.values = std::move(perm);
    res.feasible = true;
    return res;
}

std::int64_t predicted_quadratic_count(Technique technique, int m, int n) {
    const std::int64_t M = m, N = n;
    switch (technique) {
        case Technique::ONE_HOT: return (M * M * N + M * N * N) / 2 - M * N;
        case Technique::ALL_DIFFERENT: return (N * N * N - 3 * N) / 2;
        case Technique::DUAL_MATRIX: return 6 * M * N - 6 * M - 6 * N + 4;
        default: return 6 * M * N - 4 * M - 4 * N;
    }
}

std::vector<KernelStatsRow> kernel_stats_table(const std::vector<Technique>& techniques, Kind kind,
                                               const std::vector<std::pair<int, int>>& sizes) {
    std::vector<KernelStatsRow> rows;
    for (Technique t : techniques) {
        for (auto [m, n] : sizes) {
            if (t == Technique::ALL_DIFFERENT && m != n) continue;
            KernelHandle h = build_kernel(t, m, n, kind);
            KernelStatsRow row{t, kind, m, n, stats(h.model), predicted_quadratic_count(t, m, n),
                               false};
            row.match =
                static_cast<std::int64_t>(row.stats.quadratic_term_count) == row.predicted_quad;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string kernel_stats_tsv(const std::vector<KernelStatsRow>& rows) {
    std::ostringstream out;
    out << "technique\tkind\tm\tn\tvars\tlinear_count\tlinear_coeffs\tquad_count\tquad_coeffs\t"
           "diameter\toffset\tpredicted_quad\tmatch\n";
    auto join = [](const std::vector<std::int64_t>& xs) {
        std::ostringstream s;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) s << ",";
            s << xs[i];
        }
        return s.str();
    };
    for (const auto& r : rows) {
        out << technique_name(r.technique) << "\t" << kind_name(r.kind) << "\t" << r.m << "\t"
            << r.n << "\t" << r.stats.num_vars << "\t" << r.stats.linear_term_count << "\t"
            << join(r.stats.linear_coeff_set) << "\t" << r.stats.quadratic_term_count << "\t"
            << join(r.stats.quadratic_coeff_set) << "\t" << r.stats.diameter_str() << "\t"
            << r.stats.offset.str() << "\t" << r.predicted_quad << "\t"
            << (r.match ? "true" : "false") << "\n";
    }
    return out.str();
}

}  // namespace permq
