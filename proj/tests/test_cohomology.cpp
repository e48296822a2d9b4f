#include <gtest/gtest.h>

#include "logpoisson/cohomology.hpp"
#include "logpoisson/random.hpp"
#include "logpoisson/worked_examples.hpp"

using namespace logp;

namespace {
using Dims = std::vector<long>;

Dims dims_of(const std::vector<CohomologyEntry>& row) {
    Dims out;
    for (const auto& e : row) out.push_back(e.dim);
    return out;
}

// Reorders variables by `perm` (new index i holds old variable perm[i]).
WorkedExample permuted(const WorkedExample& ex, const std::vector<std::size_t>& perm) {
    const std::size_t n = ex.P.nvars();
    std::vector<std::size_t> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = i;
    auto remap = [&](const Poly& f) {
        Poly g(n);
        for (const auto& [m, c] : f.terms()) {
            std::vector<unsigned> e(n);
            for (std::size_t j = 0; j < n; ++j) e[inv[j]] = m[j];
            g.add_term(Monomial(e), c);
        }
        return g;
    };
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = ex.P.names()[perm[i]];
    PoissonStructure Q(names);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) Q.set(inv[i], inv[j], remap(ex.P.get(i, j)));
    std::vector<Poly> gens;
    for (const auto& g : ex.S.generators) gens.push_back(remap(g));
    return {ex.name + " permuted", Q, make_divisor(gens)};
}
}  // namespace

TEST(SliceMatrix, ConstantsAreClosed) {
    auto L = example1().log_poisson();
    auto S0 = slice_matrix(L, 0, 0);
    EXPECT_EQ(S0.matrix.cols, 1u);
    EXPECT_EQ(rank(S0.matrix), 0u);
    auto S1 = slice_matrix(L, 0, 1);
    EXPECT_EQ(S1.matrix.cols - rank(S1.matrix), 1u);
}

TEST(SliceMatrix, EmptySlice) {
    auto L = example1().log_poisson();
    auto S = slice_matrix(L, 3, 2);
    EXPECT_EQ(S.matrix.rows, 0u);
    EXPECT_EQ(S.matrix.cols, 0u);
    EXPECT_EQ(rank(S.matrix), 0u);
}

TEST(Linalg, RankAndSolve) {
    SparseMatrix M{3, 3, {{{0, 1}, {1, 2}}, {{0, 2}, {1, 4}}, {{2, Rational(1, 3)}}}};
    EXPECT_EQ(rank(M), 2u);
    auto x = solve(M, {{0, 3}, {1, 6}, {2, 1}});
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ((*x)[0] + 2 * (*x)[1], 3);
    EXPECT_EQ((*x)[2], 3);
    EXPECT_FALSE(solve(M, {{0, 1}}).has_value());
}

TEST(Invariants, RankNullityAndImageInKernel) {
    for (const auto& ex : worked_examples())
        for (const auto& L : {ex.log_poisson(), ex.poisson(), ex.log_derham()})
            for (std::size_t k = 0; k <= L.rank(); ++k) {
                auto S = slice_matrix(L, k, 3);
                auto Z = filtered_kernel_dims(L, k, 3);
                EXPECT_EQ(static_cast<long>(S.matrix.cols - rank(S.matrix)), Z[3]);
                if (k == 0) continue;
                auto B = filtered_image_dims(L, k, 3, 3);
                for (unsigned d = 0; d <= 3; ++d) EXPECT_LE(B[d], Z[d]) << ex.name << " k=" << k << " d=" << d;
                // every image column is closed
                auto prev = slice_matrix(L, k - 1, 3);
                for (std::size_t i = 0; i < prev.source.size(); ++i) {
                    Cochain c(k - 1, L.nvars);
                    c.add(prev.source[i].first, Poly::term(prev.source[i].second, 1));
                    EXPECT_TRUE(differential(L, differential(L, c)).is_zero());
                }
            }
}

TEST(Cohomology, Example1LogTable) {
    auto L = example1().log_poisson();
    auto W = SliceWindow::for_complex(L, 8);
    EXPECT_EQ(dims_of(cohomology_dims(L, 0, W)), Dims({1, 0, 0, 0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(dims_of(cohomology_dims(L, 1, W)), Dims({1, 0, 0, 0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(dims_of(cohomology_dims(L, 2, W)), Dims(9, 0));
}

TEST(Cohomology, Example2H2) {
    auto L = example2().log_poisson();
    auto row = cohomology_dims(L, 2, SliceWindow::for_complex(L, 8));
    EXPECT_EQ(dims_of(row), Dims(9, 1));
    EXPECT_EQ(row.back().cumulative, 9);
}

TEST(Cohomology, Example2H1) {
    auto L = example2().log_poisson();
    EXPECT_EQ(dims_of(cohomology_dims(L, 1, SliceWindow::for_complex(L, 8))), Dims({1, 2, 1, 1, 1, 1, 1, 1, 1}));
}

TEST(Cohomology, Example3LogH3) {
    auto L = example3().log_poisson();
    auto row = cohomology_dims(L, 3, SliceWindow::for_complex(L, 6));
    EXPECT_EQ(dims_of(row), Dims({1, 3, 4, 5, 6, 7, 8}));
    EXPECT_EQ(row.back().cumulative, 34);
}

TEST(Cohomology, MonotoneInBuffer) {
    for (const auto& ex : worked_examples()) {
        auto L = ex.log_poisson();
        const unsigned D = ex.P.nvars() == 3 ? 4 : 6;
        for (std::size_t k = 1; k <= L.rank(); ++k) {
            auto prev = cumulative_cohomology(L, k, D, 0);
            for (unsigned b = 1; b <= 4; ++b) {
                auto cur = cumulative_cohomology(L, k, D, b);
                for (unsigned d = 0; d <= D; ++d) EXPECT_LE(cur[d], prev[d]) << ex.name << " k=" << k;
                prev = cur;
            }
        }
    }
}

TEST(Cohomology, StabilizedEntriesSurviveLargerBuffers) {
    for (const auto& ex : worked_examples()) {
        auto L = ex.poisson();
        const unsigned D = ex.P.nvars() == 3 ? 4 : 6;
        auto W = SliceWindow::for_complex(L, D);
        for (std::size_t k = 0; k <= L.rank(); ++k) {
            auto row = cohomology_dims(L, k, W);
            auto c2 = cumulative_cohomology(L, k, D, W.buffer + 2);
            for (unsigned d = 0; d <= D; ++d)
                if (row[d].stabilized) EXPECT_EQ(row[d].cumulative, c2[d]) << ex.name << " k=" << k << " d=" << d;
        }
    }
}

TEST(Cohomology, IndependentOfVariableOrder) {
    for (const auto& ex : worked_examples()) {
        std::vector<std::size_t> perm(ex.P.nvars());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = perm.size() - 1 - i;
        auto q = permuted(ex, perm);
        const unsigned D = ex.P.nvars() == 3 ? 4 : 6;
        for (auto kind : {0, 1, 2}) {
            auto La = kind == 0 ? ex.log_poisson() : kind == 1 ? ex.poisson() : ex.log_derham();
            auto Lb = kind == 0 ? q.log_poisson() : kind == 1 ? q.poisson() : q.log_derham();
            auto W = SliceWindow::for_complex(La, D);
            for (std::size_t k = 0; k <= La.rank(); ++k)
                EXPECT_EQ(dims_of(cohomology_dims(La, k, W)), dims_of(cohomology_dims(Lb, k, W)))
                    << ex.name << " kind " << kind << " k=" << k;
        }
    }
}

TEST(Compare, Example1AllEqual) {
    auto e1 = example1();
    auto a = e1.log_poisson(), b = e1.poisson(), c = e1.log_derham();
    auto W = SliceWindow{8, 4};
    auto ta = cohomology_table(a, "log-poisson", 0, 2, W);
    EXPECT_TRUE(compare_tables(ta, cohomology_table(b, "poisson", 0, 2, W)).equal);
    EXPECT_TRUE(compare_tables(ta, cohomology_table(c, "log-derham", 0, 2, W)).equal);
}

TEST(Compare, WindowMismatchThrows) {
    auto L = example1().log_poisson();
    auto t1 = cohomology_table(L, "a", 0, 1, {4, 2});
    auto t2 = cohomology_table(L, "b", 0, 1, {5, 2});
    EXPECT_THROW(compare_tables(t1, t2), std::invalid_argument);
    auto t3 = cohomology_table(L, "c", 0, 2, {4, 2});
    EXPECT_THROW(compare_tables(t1, t3), std::invalid_argument);
}

TEST(Compare, Example3TopDegreeDiffers) {
    auto e3 = example3();
    SliceWindow W{4, 4};
    auto cmp = compare_tables(cohomology_table(e3.log_poisson(), "log-poisson", 3, 3, W),
                              cohomology_table(e3.poisson(), "poisson", 3, 3, W));
    EXPECT_FALSE(cmp.equal);
    ASSERT_TRUE(cmp.first_difference(3).has_value());
}

TEST(Primitive, Example1Pi) {
    auto e1 = example1();
    auto L = e1.log_poisson();
    Cochain c(2, 2);
    c.add({0, 1}, Poly::constant(2, 1));
    auto r = find_primitive(L, c, SliceWindow::for_complex(L, 8));
    ASSERT_TRUE(r.found);
    EXPECT_EQ(differential(L, r.witness), c);
    Cochain expected(1, 2);
    expected.add({1}, Poly::variable(2, 1));
    EXPECT_EQ(r.witness, expected);
}

TEST(Primitive, ZeroCochain) {
    auto L = example2().log_poisson();
    auto r = find_primitive(L, Cochain(2, 2), SliceWindow{4, 2});
    EXPECT_TRUE(r.found);
    EXPECT_TRUE(r.witness.is_zero());
}

TEST(Primitive, Example2ConstantHasNone) {
    auto L = example2().log_poisson();
    Cochain c(2, 2);
    c.add({0, 1}, Poly::constant(2, 1));
    for (unsigned D : {2u, 4u, 8u}) {
        auto r = find_primitive(L, c, SliceWindow::for_complex(L, D));
        EXPECT_FALSE(r.found) << D;
        EXPECT_EQ(r.searched_degree, D + 3);
    }
}

TEST(Primitive, NotClosedThrows) {
    auto L = example1().log_poisson();
    Cochain c(1, 2);
    c.add({1}, Poly::variable(2, 1));
    EXPECT_THROW(find_primitive(L, c, SliceWindow{4, 2}), NotClosed);
}

TEST(Primitive, RandomExactCochains) {
    RandomPolys rnd(47);
    for (const auto& ex : worked_examples()) {
        auto L = ex.log_poisson();
        for (int i = 0; i < 10; ++i) {
            Cochain v = rnd.cochain(ex.P.nvars(), L.rank(), 1, 2);
            Cochain c = differential(L, v);
            auto r = find_primitive(L, c, SliceWindow{3, 2});
            ASSERT_TRUE(r.found) << ex.name;
            EXPECT_EQ(differential(L, r.witness), c);
        }
    }
}
