#include <gtest/gtest.h>

#include "logpoisson/poly_io.hpp"
#include "logpoisson/poisson.hpp"
#include "logpoisson/random.hpp"
#include "logpoisson/worked_examples.hpp"

using namespace logp;

namespace {
Poly P_(const PoissonStructure& P, const char* s) { return parse_poly(s, P.names()); }
}  // namespace

TEST(Bracket, Example1Generators) {
    auto P = example1().P;
    EXPECT_EQ(bracket(P, P.var(0), P.var(1)), P_(P, "x"));
    EXPECT_EQ(bracket(P, P.var(1), P.var(0)), P_(P, "-x"));
    EXPECT_EQ(P.get(1, 0), P_(P, "-x"));
}

TEST(Bracket, SkewOnRandom) {
    auto P = example3().P;
    RandomPolys rnd(3);
    for (int i = 0; i < 50; ++i) {
        Poly f = rnd.poly(3, 4), g = rnd.poly(3, 4);
        EXPECT_TRUE(bracket(P, f, f).is_zero());
        EXPECT_EQ(bracket(P, f, g), -bracket(P, g, f));
    }
}

TEST(Bracket, Example3Square) {
    auto P = example3().P;
    EXPECT_EQ(bracket(P, P_(P, "y^2"), P_(P, "z")), P_(P, "2*x*y^2*z"));
}

TEST(Bracket, LeibnizInEachSlot) {
    auto P = example2().P;
    RandomPolys rnd(5);
    for (int i = 0; i < 50; ++i) {
        Poly f = rnd.poly(2, 3), g = rnd.poly(2, 3), h = rnd.poly(2, 3);
        EXPECT_EQ(bracket(P, f, g * h), bracket(P, f, g) * h + g * bracket(P, f, h));
    }
}

TEST(Jacobi, VacuousInTwoVariables) {
    auto r = check_jacobi(example1().P);
    EXPECT_TRUE(r.pass);
    EXPECT_TRUE(r.vacuous);
}

TEST(Jacobi, Example3Holds) {
    auto P = example3().P;
    EXPECT_TRUE(jacobiator(P, 0, 1, 2).is_zero());
    EXPECT_TRUE(check_jacobi(P).pass);
}

TEST(Jacobi, HeisenbergLike) {
    PoissonStructure P({"x", "y", "z"});
    P.set(0, 1, P_(P, "z"));
    EXPECT_TRUE(jacobiator(P, 0, 1, 2).is_zero());
}

TEST(Jacobi, DetectsFailure) {
    PoissonStructure P({"x", "y", "z"});
    P.set(0, 1, P_(P, "z"));
    P.set(1, 2, P_(P, "x*y"));
    auto r = check_jacobi(P);
    EXPECT_FALSE(r.pass);
    ASSERT_EQ(r.failures.size(), 1u);
    EXPECT_EQ(r.failures[0].second, P_(P, "x*z"));
}

TEST(Jacobi, RandomTriplesOnValidStructures) {
    RandomPolys rnd(9);
    for (const auto& ex : worked_examples()) {
        const auto& P = ex.P;
        for (int i = 0; i < 30; ++i) {
            Poly f = rnd.poly(P.nvars(), 3), g = rnd.poly(P.nvars(), 3), h = rnd.poly(P.nvars(), 3);
            Poly j = bracket(P, f, bracket(P, g, h)) + bracket(P, g, bracket(P, h, f)) + bracket(P, h, bracket(P, f, g));
            EXPECT_TRUE(j.is_zero()) << ex.name;
        }
    }
}

TEST(Hamiltonian, Example1) {
    auto P = example1().P;
    Derivation hx = hamiltonian(P, P.var(0)), hy = hamiltonian(P, P.var(1));
    EXPECT_TRUE(hx.coeffs[0].is_zero());
    EXPECT_EQ(hx.coeffs[1], P_(P, "x"));
    EXPECT_EQ(hy.coeffs[0], P_(P, "-x"));
    EXPECT_TRUE(hy.coeffs[1].is_zero());
    EXPECT_TRUE(hamiltonian(P, Poly::constant(2, 1)).is_zero());
}

TEST(Normalize, Generators) {
    std::vector<std::string> v{"x", "y"};
    auto n = normalize_squarefree(parse_poly("x^2", v));
    EXPECT_EQ(n.variable, 0u);
    EXPECT_EQ(n.multiplicity, 2u);
    EXPECT_EQ(normalize_squarefree(parse_poly("y", v)).variable, 1u);
    EXPECT_THROW(normalize_squarefree(parse_poly("x + y", v)), Unsupported);
    EXPECT_THROW(normalize_squarefree(parse_poly("x*y", v)), Unsupported);
    EXPECT_THROW(normalize_squarefree(parse_poly("3", v)), Unsupported);
    EXPECT_THROW(make_divisor({parse_poly("x", v), parse_poly("x^2", v)}), Unsupported);
}

TEST(LogPrincipal, WorkedExamplesPass) {
    for (const auto& ex : worked_examples()) EXPECT_TRUE(is_log_principal(ex.P, ex.S).pass) << ex.name;
}

TEST(LogPrincipal, SymplecticFails) {
    PoissonStructure P({"x", "y"});
    P.set(0, 1, Poly::constant(2, 1));
    auto r = is_log_principal(P, make_divisor({P.var(0)}));
    EXPECT_FALSE(r.pass);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(*r.witness, std::make_pair(std::size_t{1}, std::size_t{0}));
    EXPECT_EQ(r.offending, Poly::constant(2, -1));
}
