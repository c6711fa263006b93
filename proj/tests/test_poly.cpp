#include <gtest/gtest.h>

#include "vmp/series.hpp"

using namespace vmp;

TEST(UPoly, ArithmeticAndEvaluation) {
    const UPoly x = UPoly::monomial(1);
    const UPoly p = x * x - UPoly(3) * x + UPoly(2);  // (x-1)(x-2)
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p(Rational(1)), 0);
    EXPECT_EQ(p(Rational(2)), 0);
    EXPECT_EQ(p(Rational(1, 2)), Rational(3, 4));
    EXPECT_DOUBLE_EQ(p.eval(3.0), 2.0);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(p * UPoly(0), UPoly(0));
    EXPECT_EQ((x - UPoly(1)) * (x - UPoly(2)), p);
}

TEST(UPoly, AntiderivativeAndReflection) {
    const UPoly x = UPoly::monomial(1);
    const UPoly p = UPoly(3) * x * x + UPoly(1);
    EXPECT_EQ(p.antiderivative(), x * x * x + x);
    EXPECT_EQ(p.antiderivative()(Rational(0)), 0);
    EXPECT_EQ((x * x * x + x).reflected(), -(x * x * x + x));
    EXPECT_EQ(p.reflected(), p);
}

TEST(UPoly, TextForm) {
    const UPoly x = UPoly::monomial(1);
    EXPECT_EQ((x * x + UPoly(2)).to_string("lambda"), "lambda^2 + 2");
    EXPECT_EQ((UPoly(Rational(14, 3)) - x).to_string("N"), "-N + 14/3");
    EXPECT_EQ(UPoly(0).to_string(), "0");
}

TEST(BiPoly, SubstituteAndProduct) {
    BiPoly p;
    p.add_term(2, 0, 1).add_term(0, 0, 2).add_term(0, 1, -1);  // x^2 + 2 - y
    EXPECT_EQ(p.substitute_y(Rational(1, 2)), UPoly(std::vector<Rational>{Rational(3, 2), 0, 1}));
    EXPECT_DOUBLE_EQ(p.eval(1.0, 0.5), 2.5);
    const BiPoly q = BiPoly::monomial(1, 1, 2);
    EXPECT_EQ((p * q).coeff(3, 1), 2);
    EXPECT_EQ((p * q).coeff(1, 2), -2);
    EXPECT_TRUE((p - p).is_zero());
    p.add_term(2, 0, -1);
    EXPECT_EQ(p.coeff(2, 0), 0);
    EXPECT_EQ(p.terms().size(), 2u);
}

TEST(PowerSeries, GeometricAndFibonacci) {
    PowerSeries<Rational> d(10);
    d[0] = 1;
    d[1] = -1;
    const auto g = d.reciprocal();
    for (int i = 0; i <= 10; ++i) EXPECT_EQ(g[i], 1);

    d[2] = -1;  // 1/(1 - z - z^2)
    const auto f = d.reciprocal();
    Rational a = 1, b = 1;
    for (int i = 0; i <= 10; ++i) {
        EXPECT_EQ(f[i], a);
        const Rational c = a + b;
        a = b;
        b = c;
    }
    EXPECT_EQ(d * f, PowerSeries<Rational>(10, Rational(1)));
}

TEST(PowerSeries, ShiftAndUnits) {
    auto z = PowerSeries<Rational>::z_power(5, 1);
    EXPECT_EQ(z.shifted(2), PowerSeries<Rational>::z_power(5, 3));
    EXPECT_EQ(z.shifted(5)[5], 0);
    EXPECT_THROW(z.reciprocal(), std::domain_error);
    EXPECT_THROW(unit_inverse(UPoly::monomial(1)), std::domain_error);
    EXPECT_EQ(unit_inverse(UPoly(Rational(2))), UPoly(Rational(1, 2)));
    EXPECT_THROW(PowerSeries<Rational>(-1), std::invalid_argument);
}

TEST(Rational, Helpers) {
    EXPECT_EQ(factorial(5), 120);
    EXPECT_EQ(binomial(6, 2), 15);
    EXPECT_EQ(to_string(Rational(-3, 6)), "-1/2");
    EXPECT_DOUBLE_EQ(to_double(Rational(1, 4)), 0.25);
}
