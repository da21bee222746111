#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "basinlab/family_kernels.hpp"
#include "basinlab/methods.hpp"
#include "oracles.hpp"

using namespace basinlab;

namespace {

constexpr double kPi = std::numbers::pi;

cplx val(const EvalResult& r) { return r.value.value(); }

FloatPolynomial fam(int d) { return FloatPolynomial(family_poly(d)); }

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("Newton on p_2") {
    const FloatPolynomial p = fam(2);
    CHECK(val(newton_eval(p, 1.0)) == cplx(1.0, 0.0));
    CHECK(val(newton_eval(p, 2.0)).real() == doctest::Approx(16.0 / 11.0).epsilon(1e-15));
    CHECK(oracle::newton(2, 2) == oracle::Rational(16, 11));

    const EvalResult pole = newton_eval(p, std::sqrt(1.0 / 3.0));
    CHECK(pole.value.is_infinite());
    CHECK(pole.was_pole);
    CHECK_THROWS_AS(newton_eval(p, ComplexPoint::infinity()), DomainError);
}

TEST_CASE("generic 0/0 is indeterminate") {
    // (z-1)^2 has a double root at 1: p = p' = 0 there
    const FloatPolynomial sq(std::vector<cplx>{1.0, -2.0, 1.0});
    CHECK_THROWS_WITH_AS(newton_eval(sq, 1.0), "indeterminate; perturb seed", IndeterminateError);
    CHECK_THROWS_AS(halley_eval_generic(sq, 1.0), IndeterminateError);
    CHECK_THROWS_AS(traub_eval_generic(sq, 1.0), IndeterminateError);
}

TEST_CASE("Halley generic on p_2") {
    const FloatPolynomial p = fam(2);
    CHECK(val(halley_eval_generic(p, 1.0)) == cplx(1.0, 0.0));
    CHECK(val(halley_eval_generic(p, 0.0)) == cplx(0.0, 0.0));
    CHECK(oracle::halley(2, 2) == oracle::Rational(104, 85));
    CHECK(val(halley_eval_generic(p, 2.0)).real() == doctest::Approx(104.0 / 85.0).epsilon(1e-15));
}

TEST_CASE("Halley family closed form") {
    // 2*8*13 / (2 - 24 + 192) = 104/85
    const cplx h = val(halley_eval_family(2, 2.0));
    CHECK(h.real() == doctest::Approx(104.0 / 85.0).epsilon(1e-15));
    CHECK(h.imag() == 0.0);

    const cplx a2 = std::polar(1.0, 4.0 * kPi / 5.0);
    CHECK(std::abs(val(halley_eval_family(5, a2)) - a2) < 1e-14);

    const double zeta = std::sqrt(1.0 / 3.0);
    CHECK(std::abs(val(halley_eval_family(2, zeta)) - zeta) < 1e-15);

    CHECK_THROWS_AS(halley_eval_family(3, ComplexPoint::infinity()), DomainError);
}

TEST_CASE("Halley family agrees with generic and the rational oracle") {
    for (int d = 2; d <= 8; ++d) {
        for (const int num : {-7, -3, 1, 5, 9, 13}) {
            const oracle::Rational z(num, 4);
            const double exact = oracle::to_double(oracle::halley(d, z));
            const cplx got = val(halley_eval_family(d, oracle::to_double(z)));
            CHECK(std::abs(got.real() - exact) <= 1e-13 * std::max(1.0, std::abs(exact)));
        }
    }
}

TEST_CASE("Halley derivative") {
    CHECK(std::abs(halley_deriv_family(3, 1.0).value()) < 1e-14);
    CHECK(halley_deriv_family(4, 0.0).value() == cplx(0.0, 0.0));
    const auto f = [](cplx z) { return halley_eval_family(2, z).value.value(); };
    const cplx fd = oracle::central(f, 0.5, 1e-5);
    CHECK(rel(halley_deriv_family(2, 0.5).value(), fd) < 1e-6);
    // also in the |z| > 1 branch
    const auto g = [](cplx z) { return halley_eval_family(5, z).value.value(); };
    const cplx z(1.3, 0.9);
    CHECK(rel(halley_deriv_family(5, z).value(), oracle::derivative(g, z, 1e-3)) < 1e-8);
}

TEST_CASE("Halley derivative at a pole throws") {
    // poles of H_2: 2 - 6w + 12w^2 = 0
    const cplx w = (6.0 + std::sqrt(cplx(36.0 - 96.0, 0.0))) / 24.0;
    const cplx pole = std::sqrt(w);
    CHECK(halley_eval_family(2, pole).value.is_infinite());
    CHECK_THROWS_AS(halley_deriv_family(2, pole), PoleError);
}

TEST_CASE("Traub generic on p_2") {
    const FloatPolynomial p = fam(2);
    CHECK(oracle::traub(2, 2) == oracle::Rational(19136, 14641));
    CHECK(val(traub_eval_generic(p, 2.0)).real() == doctest::Approx(19136.0 / 14641.0).epsilon(1e-15));
    CHECK(val(traub_eval_generic(p, 1.0)) == cplx(1.0, 0.0));
    const FloatPolynomial p3 = fam(3);
    const cplx a1 = std::polar(1.0, 2.0 * kPi / 3.0);
    CHECK(std::abs(val(traub_eval_generic(p3, a1)) - a1) < 1e-14);
}

TEST_CASE("Traub family closed form") {
    const cplx t = val(traub_eval_family(2, 2.0));
    CHECK(t.real() == doctest::Approx(19136.0 / 14641.0).epsilon(1e-15));
    // 9568/14641 * 2
    CHECK(t.real() == doctest::Approx(2.0 * 9568.0 / 14641.0).epsilon(1e-15));

    const EvalResult pole = traub_eval_family(2, std::sqrt(1.0 / 3.0));
    CHECK(pole.value.is_infinite());
    CHECK(pole.was_pole);
    CHECK(val(traub_eval_family(6, 0.0)) == cplx(0.0, 0.0));

    for (int d = 2; d <= 8; ++d) {
        for (const int num : {-9, -5, 3, 7, 11, 40}) {
            const oracle::Rational z(num, 4);
            const double exact = oracle::to_double(oracle::traub(d, z));
            const cplx got = val(traub_eval_family(d, oracle::to_double(z)));
            CHECK(std::abs(got.real() - exact) <= 1e-13 * std::max(1.0, std::abs(exact)));
        }
    }
}

TEST_CASE("Traub derivative") {
    CHECK(std::abs(traub_deriv_family(2, 1.0).value()) < 1e-14);
    CHECK(traub_deriv_family(3, 0.0).value() == cplx(0.0, 0.0));
    const auto f = [](cplx z) { return traub_eval_family(2, z).value.value(); };
    const cplx z(0.4, 0.3);
    CHECK(rel(traub_deriv_family(2, z).value(), oracle::central(f, z, 1e-5)) < 1e-6);
    CHECK_THROWS_AS(traub_deriv_family(2, std::sqrt(1.0 / 3.0)), PoleError);
    const auto g = [](cplx w) { return traub_eval_family(4, w).value.value(); };
    const cplx far(-1.7, 2.2);
    CHECK(rel(traub_deriv_family(4, far).value(), oracle::derivative(g, far, 1e-3)) < 1e-8);
}

TEST_CASE("multiplier at infinity") {
    const InfinityMultiplier h2 = multiplier_at_infinity(MethodMap::family(MethodKind::Halley, 2));
    CHECK(h2.closed_form == 2.0);
    CHECK(std::abs(h2.numeric - 2.0) < 1e-8);
    const InfinityMultiplier h10 = multiplier_at_infinity(MethodMap::family(MethodKind::Halley, 10));
    CHECK(h10.closed_form == doctest::Approx(1.2).epsilon(1e-15));
    CHECK(std::abs(h10.numeric - 1.2) < 1e-8);

    const InfinityMultiplier t2 = multiplier_at_infinity(MethodMap::family(MethodKind::Traub, 2));
    CHECK(t2.closed_form == doctest::Approx(81.0 / 46.0).epsilon(1e-15));
    CHECK(std::abs(t2.numeric - 81.0 / 46.0) < 1e-8);

    const ExactFraction a2 = traub_asymptotic_slope(2);
    CHECK(a2.num == 46);
    CHECK(a2.den == 81);

    CHECK_THROWS_AS(multiplier_at_infinity(MethodMap::family(MethodKind::Newton, 3)), UnsupportedError);
    CHECK_THROWS_AS(multiplier_at_infinity(MethodMap::generic(MethodKind::Halley, fam(2))), UnsupportedError);
}

TEST_CASE("MethodMap plumbing") {
    CHECK(parse_method("halley") == MethodKind::Halley);
    CHECK(parse_method("traub") == MethodKind::Traub);
    CHECK(parse_method("newton") == MethodKind::Newton);
    CHECK_THROWS_AS(parse_method("secant"), DomainError);
    CHECK(to_string(MethodKind::Traub) == "traub");

    const MethodMap m = MethodMap::family(MethodKind::Halley, 3);
    CHECK(m.is_family());
    CHECK(m.d() == 3);
    REQUIRE(m.roots().size() == 4);
    CHECK(m.roots()[0] == cplx(0.0, 0.0));
    CHECK(std::abs(m.roots()[2] - std::polar(1.0, 2.0 * kPi / 3.0)) < 1e-15);
    CHECK(m.eval(ComplexPoint::infinity()).value.is_infinite());
    CHECK_THROWS_AS(MethodMap::family(MethodKind::Halley, 1), DomainError);

    const MethodMap g = MethodMap::generic(MethodKind::Newton, fam(2));
    CHECK_FALSE(g.is_family());
    CHECK_THROWS_AS(g.d(), UnsupportedError);
    CHECK_THROWS_AS(MethodMap::generic(MethodKind::Newton, FloatPolynomial(std::vector<cplx>{1.0, 1.0})),
                    DomainError);
}

TEST_CASE("stable kernels agree with the closed forms on both branches") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int d = 2; d <= 12; ++d) {
        for (int i = 0; i < 50; ++i) {
            const cplx z(u(rng), u(rng));
            const kernels::Step h = kernels::halley_step(d, z);
            const EvalResult eh = halley_eval_family(d, z);
            REQUIRE_FALSE(h.pole);
            CHECK(h.value == eh.value.value());
            const kernels::Step t = kernels::traub_step(d, z);
            CHECK(t.value == traub_eval_family(d, z).value.value());
        }
    }
}
