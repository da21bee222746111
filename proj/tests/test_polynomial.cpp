#include <doctest.h>

#include "basinlab/polynomial.hpp"

using namespace basinlab;

TEST_CASE("ComplexPoint tags infinity and rejects NaN") {
    CHECK(ComplexPoint().is_finite());
    CHECK(ComplexPoint::infinity().is_infinite());
    CHECK(ComplexPoint(std::numeric_limits<double>::infinity(), 0.0).is_infinite());
    CHECK_THROWS_AS(ComplexPoint(std::nan(""), 0.0), DomainError);
    CHECK_THROWS_AS(ComplexPoint::infinity().value(), DomainError);
    CHECK(ComplexPoint::infinity() == ComplexPoint::infinity());
    CHECK_FALSE(ComplexPoint(1.0, 0.0) == ComplexPoint::infinity());
    CHECK(ComplexPoint(3.0, 4.0).modulus() == 5.0);
    CHECK(ComplexPoint::infinity().to_string() == "inf");
}

TEST_CASE("ipow matches repeated multiplication") {
    const cplx z(0.3, -1.1);
    cplx acc = 1.0;
    for (unsigned n = 0; n < 12; ++n) {
        CHECK(std::abs(ipow(z, n) - acc) <= 1e-14 * std::abs(acc));
        acc *= z;
    }
    CHECK(ipow(2.0, 10) == 1024.0);
}

TEST_CASE("family polynomial coefficients") {
    CHECK(family_poly(2) == IntPolynomial{0, -1, 0, 1});
    const IntPolynomial p5 = family_poly(5);
    CHECK(p5.degree() == 6);
    int nonzero = 0;
    for (const BigInt& c : p5.coeffs()) {
        nonzero += c != 0 ? 1 : 0;
    }
    CHECK(nonzero == 2);
    CHECK(family_poly(3).derivative() == IntPolynomial{-1, 0, 0, 4});
    CHECK_THROWS_AS(family_poly(1), DomainError);
    CHECK_THROWS_AS(family_poly(0), DomainError);
}

TEST_CASE("exact evaluation of p_2") {
    const IntPolynomial p = family_poly(2);
    CHECK(p.eval(1) == 0);
    CHECK(p.eval(0) == 0);
    CHECK(p.eval(2) == 6);
    CHECK(p.eval(-3) == -24);
}

TEST_CASE("float evaluation and infinity") {
    const FloatPolynomial p(family_poly(2));
    CHECK(p.eval(2.0) == cplx(6.0, 0.0));
    CHECK(poly_eval(p, ComplexPoint(1.0, 0.0)).value() == cplx(0.0, 0.0));
    CHECK_THROWS_WITH_AS(poly_eval(p, ComplexPoint::infinity()),
                         "evaluate-at-infinity unsupported; use leading-term analysis", DomainError);
    CHECK(p.derivative().eval(1.0) == cplx(2.0, 0.0));
}

TEST_CASE("exact ring arithmetic") {
    const IntPolynomial one_plus_x{1, 1};
    const IntPolynomial one_minus_x{1, -1};
    CHECK(one_plus_x * one_minus_x == IntPolynomial{1, 0, -1});
    CHECK(int_poly_pow(one_plus_x, 4) == IntPolynomial{1, 4, 6, 4, 1});
    CHECK(int_poly_pow(one_plus_x, 0) == IntPolynomial{1});
    // (3w - 1)^4 by repeated multiplication, ascending order
    const IntPolynomial base = IntPolynomial::linear(3, -1);
    CHECK(int_poly_pow(base, 4) == IntPolynomial{1, -12, 54, -108, 81});
    CHECK(base * base * base * base == int_poly_pow(base, 4));

    const IntPolynomial a{2, -3, 0, 5};
    const IntPolynomial b{-1, 4};
    const IntPolynomial c{7, 0, -2};
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(int_poly_add(a, -a).is_zero());
    CHECK((a - a).degree() == -1);
    CHECK(int_poly_mul(a, IntPolynomial{}).is_zero());
}

TEST_CASE("composition and big coefficients") {
    const IntPolynomial x_plus_1{1, 1};
    // (x+1)^2 composed: p(x) = x^2 -> (x+1)^2
    CHECK(IntPolynomial{0, 0, 1}.compose(x_plus_1) == IntPolynomial{1, 2, 1});
    const IntPolynomial big = int_poly_pow(IntPolynomial{1, 1}, 80);
    CHECK(big.coeff(40) == BigInt("107507208733336176461620"));
    CHECK(big.coeff(81) == 0);
    CHECK(IntPolynomial::monomial(5, 3).to_string() == "5x^3");
    CHECK(family_poly(2).to_string() == "x^3 - x");
    CHECK(IntPolynomial{}.to_string() == "0");
}

TEST_CASE("ExactFraction converts to double") {
    CHECK(ExactFraction{104, 85}.to_double() == doctest::Approx(1.2235294117647059).epsilon(1e-15));
}
