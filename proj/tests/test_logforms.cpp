#include <gtest/gtest.h>

#include "logpoisson/random.hpp"
#include "logpoisson/worked_examples.hpp"

using namespace logp;

namespace {
Poly P_(const PoissonStructure& P, const char* s) { return parse_poly(s, P.names()); }

OneForm form(const PoissonStructure& P, std::initializer_list<const char*> cs) {
    std::vector<Poly> v;
    for (const char* c : cs) v.push_back(P_(P, c));
    return OneForm(std::move(v));
}
}  // namespace

TEST(Htilde, BasisImages) {
    auto e1 = example1();
    Derivation h = htilde_basis(e1.P, e1.basis()[0]);
    EXPECT_TRUE(h.coeffs[0].is_zero());
    EXPECT_EQ(h.coeffs[1], Poly::constant(2, 1));

    auto e2 = example2();
    Derivation h2 = htilde_basis(e2.P, e2.basis()[1]);
    EXPECT_EQ(h2.coeffs[0], P_(e2.P, "-x^2"));
    EXPECT_TRUE(h2.coeffs[1].is_zero());

    auto e3 = example3();
    Derivation h3 = htilde_basis(e3.P, e3.basis()[1]);
    EXPECT_TRUE(h3.coeffs[0].is_zero() && h3.coeffs[1].is_zero());
    EXPECT_EQ(h3.coeffs[2], P_(e3.P, "x*z"));
}

TEST(Htilde, NotLogPrincipalThrows) {
    PoissonStructure P({"x", "y"});
    P.set(0, 1, Poly::constant(2, 1));
    LogBasis B(2, make_divisor({P.var(0)}));
    EXPECT_THROW(htilde_basis(P, B[0]), DivisionObstruction);
}

TEST(ExpressD, Examples) {
    auto e1 = example1();
    auto B = e1.basis();
    EXPECT_EQ(express_d(B, P_(e1.P, "x")), form(e1.P, {"x", "0"}));
    EXPECT_EQ(express_d(B, P_(e1.P, "x*y")), form(e1.P, {"x*y", "x"}));
    EXPECT_TRUE(express_d(B, Poly::constant(2, 4)).is_zero());
}

TEST(StructureConstants, Examples) {
    auto e1 = example1();
    EXPECT_TRUE(structure_constants(e1.P, e1.basis(), 0, 1).is_zero());
    auto e2 = example2();
    EXPECT_EQ(structure_constants(e2.P, e2.basis(), 0, 1), form(e2.P, {"x", "0"}));
    auto e3 = example3();
    EXPECT_EQ(structure_constants(e3.P, e3.basis(), 1, 2), form(e3.P, {"x", "0", "0"}));
    EXPECT_EQ(structure_constants(e3.P, e3.basis(), 2, 1), form(e3.P, {"-x", "0", "0"}));
}

TEST(BracketS, Examples) {
    auto e1 = example1();
    auto B = e1.basis();
    EXPECT_EQ(bracket_s(e1.P, B, form(e1.P, {"1", "0"}), form(e1.P, {"0", "y"})), form(e1.P, {"0", "1"}));
    RandomPolys rnd(17);
    for (const auto& ex : worked_examples())
        for (int i = 0; i < 20; ++i) {
            OneForm a = rnd.form(ex.P.nvars(), 3);
            EXPECT_TRUE(bracket_s(ex.P, ex.basis(), a, a).is_zero());
        }
}

TEST(BracketS, JacobiLeibnizAnchor) {
    RandomPolys rnd(19);
    for (const auto& ex : worked_examples()) {
        const auto& P = ex.P;
        const auto B = ex.basis();
        const std::size_t n = P.nvars();
        for (int i = 0; i < 20; ++i) {
            OneForm a = rnd.form(n, 2), b = rnd.form(n, 2), c = rnd.form(n, 2);
            EXPECT_TRUE((bracket_s(P, B, a, bracket_s(P, B, b, c)) + bracket_s(P, B, b, bracket_s(P, B, c, a)) +
                         bracket_s(P, B, c, bracket_s(P, B, a, b)))
                            .is_zero());
            Poly f = rnd.poly(n, 3);
            EXPECT_EQ(bracket_s(P, B, a, f * b), htilde(P, B, a)(f) * b + f * bracket_s(P, B, a, b));
            Derivation lhs = htilde(P, B, bracket_s(P, B, a, b));
            Derivation rhs = commutator(htilde(P, B, a), htilde(P, B, b));
            EXPECT_TRUE((lhs - rhs).is_zero()) << ex.name;
        }
    }
}

TEST(Logsymplectic, Example1) {
    auto e1 = example1();
    PolyMatrix M = htilde_matrix(e1.P, e1.basis());
    EXPECT_TRUE(M[0][0].is_zero());
    EXPECT_EQ(M[0][1], Poly::constant(2, -1));
    EXPECT_EQ(M[1][0], Poly::constant(2, 1));
    EXPECT_TRUE(M[1][1].is_zero());
    auto v = is_logsymplectic(e1.P, e1.basis());
    EXPECT_TRUE(v.logsymplectic);
    EXPECT_EQ(v.determinant, Poly::constant(2, 1));
}

TEST(Logsymplectic, Example2And3) {
    auto e2 = example2();
    auto v2 = is_logsymplectic(e2.P, e2.basis());
    EXPECT_FALSE(v2.logsymplectic);
    EXPECT_EQ(v2.determinant, P_(e2.P, "x^2"));
    auto e3 = example3();
    auto v3 = is_logsymplectic(e3.P, e3.basis());
    EXPECT_FALSE(v3.logsymplectic);
    EXPECT_TRUE(v3.determinant.is_zero());
}

TEST(Determinant, MatchesCofactorExpansion) {
    RandomPolys rnd(23);
    for (int i = 0; i < 30; ++i) {
        PolyMatrix M(3, std::vector<Poly>(3, Poly(2)));
        for (auto& row : M)
            for (auto& e : row) e = rnd.poly(2, 2, 2);
        Poly cof = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                   M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
        EXPECT_EQ(determinant(M, 2), cof);
    }
}

TEST(Extension, Examples) {
    auto e1 = example1();
    const auto& P = e1.P;
    auto B = e1.basis();
    OneForm zero(2);
    ExtensionElement a{Poly(2), form(P, {"1", "0"})}, b{Poly(2), form(P, {"0", "1"})};
    EXPECT_EQ(extension_bracket(P, B, a, b), (ExtensionElement{Poly::constant(2, 1), zero}));

    Poly f = P_(P, "x^2 + y"), g = P_(P, "x*y");
    EXPECT_EQ(extension_bracket(P, B, {f, zero}, {g, zero}), (ExtensionElement{bracket(P, f, g), zero}));

    OneForm beta = form(P, {"y", "x"});
    EXPECT_EQ(extension_bracket(P, B, {Poly::constant(2, 1), zero}, {Poly(2), beta}), (ExtensionElement{Poly(2), zero}));
}

namespace {
ExtensionElement jacobi_sum(const PoissonStructure& P, const LogBasis& B, const ExtensionElement& u,
                            const ExtensionElement& v, const ExtensionElement& w) {
    auto br = [&](const ExtensionElement& a, const ExtensionElement& b) { return extension_bracket(P, B, a, b); };
    auto add = [](ExtensionElement a, const ExtensionElement& b) {
        a.scalar += b.scalar;
        a.form += b.form;
        return a;
    };
    return add(add(br(u, br(v, w)), br(v, br(w, u))), br(w, br(u, v)));
}
}  // namespace

TEST(Extension, JacobiOnFormTriples) {
    RandomPolys rnd(29);
    for (const auto& ex : worked_examples()) {
        const std::size_t n = ex.P.nvars();
        for (int i = 0; i < 20; ++i) {
            ExtensionElement u{Poly(n), rnd.form(n, 2)}, v{Poly(n), rnd.form(n, 2)}, w{Poly(n), rnd.form(n, 2)};
            auto j = jacobi_sum(ex.P, ex.basis(), u, v, w);
            EXPECT_TRUE(j.scalar.is_zero() && j.form.is_zero()) << ex.name;
        }
    }
}

// The bracket as written mixes {a,b} on scalars with H~ on forms; on a mixed
// triple (two scalars, one form) the Jacobi sum is not zero.
TEST(Extension, JacobiFailsOnMixedTriple) {
    auto e1 = example1();
    const auto& P = e1.P;
    OneForm zero(2);
    ExtensionElement a{P_(P, "x"), zero}, b{P_(P, "y"), zero}, al{Poly(2), form(P, {"y", "0"})};
    auto j = jacobi_sum(P, e1.basis(), a, b, al);
    EXPECT_EQ(j.scalar, P_(P, "-x"));
    EXPECT_TRUE(j.form.is_zero());
}
