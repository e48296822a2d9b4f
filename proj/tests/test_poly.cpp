#include <gtest/gtest.h>

#include "logpoisson/poly_io.hpp"
#include "logpoisson/random.hpp"

using namespace logp;

namespace {
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};
Poly p2(const char* s) { return parse_poly(s, XY); }
Poly p3(const char* s) { return parse_poly(s, XYZ); }
}  // namespace

TEST(Poly, AddCancels) {
    EXPECT_TRUE((p2("x + y") + p2("x - y") - p2("2*x")).is_zero());
    EXPECT_EQ(p2("x + y") + p2("x - y"), p2("2*x"));
}

TEST(Poly, MultiplySquare) { EXPECT_EQ(p2("x + y") * p2("x + y"), p2("x^2 + 2*x*y + y^2")); }

TEST(Poly, ZeroIsIdentity) {
    Poly z(2);
    EXPECT_EQ(p2("3*x*y - 1") + z, p2("3*x*y - 1"));
    EXPECT_TRUE((p2("3*x*y - 1") * z).is_zero());
    EXPECT_EQ(z.degree(), -1);
}

TEST(Poly, RingAxiomsRandom) {
    RandomPolys rnd(7);
    for (int i = 0; i < 100; ++i) {
        Poly f = rnd.poly(3, 4), g = rnd.poly(3, 4), h = rnd.poly(3, 4);
        EXPECT_EQ(f + g, g + f);
        EXPECT_EQ(f * g, g * f);
        EXPECT_EQ((f + g) + h, f + (g + h));
        EXPECT_EQ((f * g) * h, f * (g * h));
        EXPECT_EQ(f * (g + h), f * g + f * h);
        EXPECT_TRUE((f - f).is_zero());
    }
}

TEST(Poly, VariableMismatchThrows) { EXPECT_THROW(p2("x") + p3("x"), VariableMismatch); }

TEST(Poly, PartialDerivatives) {
    EXPECT_EQ(partial(p2("x^2*y"), 0), p2("2*x*y"));
    EXPECT_EQ(partial(p3("x*y*z"), 2), p3("x*y"));
    EXPECT_TRUE(partial(Poly::constant(2, 5), 1).is_zero());
}

TEST(Poly, LeibnizRandom) {
    RandomPolys rnd(11);
    for (int i = 0; i < 100; ++i) {
        Poly f = rnd.poly(3, 4), g = rnd.poly(3, 4);
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(partial(f * g, j), partial(f, j) * g + f * partial(g, j));
    }
}

TEST(Poly, ExactDivide) {
    EXPECT_EQ(exact_divide(p3("x*y*z"), p3("x")).value(), p3("y*z"));
    EXPECT_EQ(exact_divide(p2("x^2"), p2("x")).value(), p2("x"));
    EXPECT_FALSE(exact_divide(p2("x + 1"), p2("x")).has_value());
    EXPECT_THROW(exact_divide(p2("x"), Poly(2)), std::invalid_argument);
}

TEST(Poly, ExactDivideRoundTrip) {
    RandomPolys rnd(13);
    for (int i = 0; i < 100; ++i) {
        Poly f = rnd.poly(3, 3), g = rnd.nonzero_poly(3, 3);
        auto q = exact_divide(f * g, g);
        ASSERT_TRUE(q.has_value());
        EXPECT_EQ(*q, f);
    }
}

TEST(Poly, GrlexLeadingTerm) {
    Poly f = p2("y^3 + x^2*y + x");
    EXPECT_EQ(f.degree(), 3);
    EXPECT_EQ(f.leading().first, Monomial({2, 1}));
    EXPECT_EQ(monomials_of_degree(2, 2), (std::vector<Monomial>{Monomial({2, 0}), Monomial({1, 1}), Monomial({0, 2})}));
    EXPECT_EQ(monomials_of_degree(3, 0).size(), 1u);
    EXPECT_EQ(monomials_of_degree(3, 4).size(), 15u);
}

TEST(Parse, PrintRoundTrip) {
    for (const char* s : {"x^2*y - 3/2*z", "x*y*z", "0", "-1", "x + y + z + 1", "1/3*x^5 - y^2*z"}) {
        Poly f = p3(s);
        EXPECT_EQ(parse_poly(to_string(f, XYZ), XYZ), f) << s;
    }
    EXPECT_EQ(to_string(p3("x^2*y - 3/2*z"), XYZ), "x^2*y - 3/2*z");
}

TEST(Parse, Grouping) {
    EXPECT_EQ(p2("(x + y)^2"), p2("x^2 + 2*x*y + y^2"));
    EXPECT_EQ(p2("2*(x - 1)*y"), p2("2*x*y - 2*y"));
    EXPECT_EQ(p2("-(x)"), p2("-x"));
}

TEST(Parse, ErrorPosition) {
    try {
        parse_poly("x + * y", XY);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    EXPECT_THROW(parse_poly("x + w", XY), ParseError);
    EXPECT_THROW(parse_poly("(x + y", XY), ParseError);
    EXPECT_THROW(parse_poly("x^", XY), ParseError);
    EXPECT_THROW(parse_poly("x / 0", XY), ParseError);
}
