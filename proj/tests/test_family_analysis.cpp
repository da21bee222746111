#include <doctest.h>

#include <cmath>
#include <numbers>

#include "basinlab/family_analysis.hpp"

using namespace basinlab;

namespace {

constexpr double kPi = std::numbers::pi;

double arg0(cplx z) {
    double a = std::arg(z);
    return a < 0.0 ? a + 2.0 * kPi : a;
}

}  // namespace

TEST_CASE("catalog moduli") {
    for (int d = 2; d <= 10; ++d) {
        const PointCatalog cat = catalog(d, MethodKind::Halley);
        REQUIRE(cat.roots.size() == static_cast<std::size_t>(d + 1));
        for (std::size_t k = 1; k < cat.roots.size(); ++k) {
            CHECK(std::abs(std::abs(cat.roots[k]) - 1.0) < 1e-12);
        }
        for (const cplx z : cat.zetas) {
            CHECK(std::abs(std::abs(z) - std::pow(1.0 / (d + 1.0), 1.0 / d)) < 1e-12);
        }
        for (const cplx c : cat.free_criticals) {
            CHECK(std::abs(std::abs(c) - std::pow(2.0 * (d - 1.0) / ((d + 1.0) * (d + 2.0)), 1.0 / d)) < 1e-12);
        }
        CHECK(cat.fixed_point_count() == 2 * d + 2);
        CHECK(cat.poles.size() == static_cast<std::size_t>(2 * d));
        CHECK(cat.max_pole_residual < 1e-12);
    }
}

TEST_CASE("Halley d=2 points") {
    const PointCatalog cat = catalog(2, MethodKind::Halley);
    CHECK(std::abs(cat.zetas[0] - std::sqrt(1.0 / 3.0)) < 1e-12);
    CHECK(std::abs(cat.free_criticals[0] - cplx(0.0, 0.4082482904638631)) < 1e-12);
    CHECK(cat.max_zeta_fixed_residual < 1e-10);
    for (const cplx m : cat.zeta_multipliers) {
        CHECK(std::abs(m - 3.0) < 1e-8);
    }
    for (const cplx m : cat.root_multipliers) {
        CHECK(std::abs(m) <= 1e-10);
    }
    CHECK(cat.max_critical_derivative < 1e-8);
    REQUIRE(cat.infinity.has_value());
    CHECK(std::abs(cat.infinity->numeric - 2.0) < 1e-8);
}

TEST_CASE("Halley d=3 free criticals on odd rays") {
    const PointCatalog cat = catalog(3, MethodKind::Halley);
    REQUIRE(cat.free_criticals.size() == 3);
    CHECK(arg0(cat.free_criticals[0]) == doctest::Approx(kPi / 3.0).epsilon(1e-12));
    CHECK(arg0(cat.free_criticals[1]) == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(arg0(cat.free_criticals[2]) == doctest::Approx(5.0 * kPi / 3.0).epsilon(1e-12));
}

TEST_CASE("Traub and Newton catalogs") {
    const PointCatalog t = catalog(2, MethodKind::Traub);
    REQUIRE(t.poles.size() == 2);
    CHECK(std::abs(t.poles[0] - std::sqrt(1.0 / 3.0)) < 1e-12);
    CHECK(std::abs(t.poles[1] + std::sqrt(1.0 / 3.0)) < 1e-12);
    CHECK(t.free_criticals.empty());
    CHECK(t.fixed_point_count() == 4);
    REQUIRE(t.infinity.has_value());
    CHECK(std::abs(t.infinity->numeric - 81.0 / 46.0) < 1e-8);
    for (const cplx m : t.root_multipliers) {
        CHECK(std::abs(m) < 1e-10);
    }
    const PointCatalog n = catalog(4, MethodKind::Newton);
    CHECK_FALSE(n.infinity.has_value());
    for (const cplx m : n.root_multipliers) {
        CHECK(std::abs(m) < 1e-10);
    }
    CHECK_THROWS_AS(catalog(1, MethodKind::Traub), DomainError);
}

TEST_CASE("critical values") {
    const CriticalValues c5 = halley_critical_values(5);
    CHECK(c5.ratio.num == -8);
    CHECK(c5.ratio.den == 7);
    CHECK(c5.exceeds_critical_modulus);
    const CriticalValues c8 = halley_critical_values(8);
    CHECK(c8.ratio.num == 49);
    CHECK(c8.ratio.den == 10);
    CHECK(c8.exceeds_critical_modulus);
    // v_k lies on the same ray as c_k when the ratio is positive
    for (std::size_t k = 0; k < c8.values.size(); ++k) {
        CHECK(std::abs(c8.values[k] - 4.9 * c8.criticals[k]) < 1e-12);
    }
    CHECK(c8.max_map_residual < 1e-10);
    CHECK_FALSE(halley_critical_values(3).exceeds_critical_modulus);
    CHECK_THROWS_WITH_AS(halley_critical_values(7), doctest::Contains("critical points are poles"),
                         DegenerateCaseError);
}

TEST_CASE("real restrictions reproduce the reference constants") {
    const auto near = [](const std::vector<double>& pts, double x) {
        for (const double p : pts) {
            if (std::fabs(p - x) <= 5e-4) {
                return true;
            }
        }
        return false;
    };
    const std::vector<double> b2 = real_restriction_b_critical_points(2);
    CHECK(near(b2, 0.3558));
    CHECK(near(b2, -0.3558));
    const std::vector<double> b3 = real_restriction_b_critical_points(3);
    CHECK(near(b3, 0.5489));
    CHECK(near(b3, -1.0420));
    const std::vector<double> b4 = real_restriction_b_critical_points(4);
    CHECK(near(b4, 0.6421));
    CHECK(near(b4, -0.6421));
    CHECK_THROWS_AS(real_restriction_b(5, 0.1), DomainError);
    CHECK(real_restriction_b(2, 0.5) == doctest::Approx(-2 * 0.25 * (1 - 0.75) / (2 + 1.5 + 0.75)));
}

TEST_CASE("the variant B_3 numerator -2t^3(2-3t^3) misses the reference constants") {
    // -2t^3(2-3t^3) over the same denominator: critical points near -0.946 and 0.5795
    const IntPolynomial num{0, 0, 0, -4, 0, 0, 6};
    const IntPolynomial den = real_restriction_b_parts(3).second;
    const IntPolynomial crit = num.derivative() * den - num * den.derivative();
    const FloatPolynomial f(crit);
    const auto sign_change = [&](double a, double b) { return f.eval(a).real() * f.eval(b).real() < 0.0; };
    CHECK(sign_change(0.57, 0.59));
    CHECK_FALSE(sign_change(0.54, 0.555));
    CHECK(sign_change(-0.95, -0.94));
    CHECK_FALSE(sign_change(-1.05, -1.035));
}

TEST_CASE("ray images") {
    const RayReport h30 = ray_image_check(3, MethodKind::Halley, 0);
    CHECK(h30.pass());
    CHECK(h30.on_opposite == 0);
    CHECK(h30.on_ray + h30.at_zero_or_infinity == h30.samples);

    const RayReport h81 = ray_image_check(8, MethodKind::Halley, 1);
    CHECK(h81.ray.opposite() == 9);
    CHECK(h81.pass());
    CHECK(h81.on_ray > 0);
    CHECK(h81.on_opposite > 0);
    CHECK(h81.pole_crossing);

    const RayReport t21 = ray_image_check(2, MethodKind::Traub, 1);
    CHECK(t21.pass());
    CHECK(t21.on_opposite == 0);
    CHECK(t21.on_ray == t21.samples);

    for (int d = 2; d <= 8; ++d) {
        for (int ell = 0; ell < 2 * d; ++ell) {
            CHECK(ray_image_check(d, MethodKind::Halley, ell, 200).pass());
            CHECK(ray_image_check(d, MethodKind::Traub, ell, 200).pass());
        }
    }
}

TEST_CASE("P_d coefficients") {
    const IntPolynomial p2 = traub_pd_polynomial(2);
    REQUIRE(p2.coeffs().size() == 5);
    for (const BigInt& c : p2.coeffs()) {
        CHECK(c < 0);
    }
    const CoeffVerdict one = verify_Pd_negative(2);
    CHECK(one.all_hold);
    CHECK(one.polynomials_checked == 1);
    const CoeffVerdict all = verify_Pd_negative(12);
    CHECK(all.all_hold);
    CHECK(all.polynomials_checked == 11);
    CHECK_FALSE(all.first_counterexample.has_value());
}

TEST_CASE("Script-G_d coefficients") {
    const IntPolynomial g2 = traub_gscript_polynomial(2);
    CHECK(g2.coeff(0) == 0);
    CHECK(g2.coeff(1) == 0);
    CHECK(traub_gscript_polynomial(3).coeff(2) > 0);
    // Script-G_d(x) = G_d(x + 1)
    for (int d = 2; d <= 6; ++d) {
        CHECK(traub_gscript_polynomial(d) == traub_gd_polynomial(d).compose(IntPolynomial{1, 1}));
    }
    const CoeffVerdict v = verify_G_script_positive(12);
    CHECK(v.all_hold);
    CHECK(v.claim_id == "traub-gscript-taylor-coefficients-nonnegative");
}

TEST_CASE("C_{d,n}(0) coefficients") {
    CHECK(cdn_polynomial(2).coeff(1) == 3);
    CHECK(cdn_polynomial(3).coeff(0) == 5);
    // n=4, ell=2: (2n-1) C(4,2) - C(4,1) = 7*6 - 4
    CHECK(cdn_polynomial(4).coeff(2) == 38);
    for (int n = 2; n <= 13; ++n) {
        const IntPolynomial c = cdn_polynomial(n);
        CHECK(c.coeff(static_cast<std::size_t>(n + 1)) == 0);
        CHECK(c.coeff(static_cast<std::size_t>(n)) == 0);
        CHECK(2 * c.coeff(static_cast<std::size_t>(n - 1)) == 3 * n * (n - 1));
    }
    const CoeffVerdict v = verify_Cdn_sweep(12);
    CHECK(v.all_hold);
    CHECK(v.polynomials_checked == 77);  // sum over d=2..12 of d
    CHECK(verify_Cdn_coeffs(5).all_hold);
}
