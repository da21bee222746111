#ifndef BASINLAB_FAMILY_ANALYSIS_HPP
#define BASINLAB_FAMILY_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "basinlab/methods.hpp"
#include "basinlab/polynomial.hpp"

namespace basinlab {

/// v_k = H_d(c_k) is undefined for d = 7 because every c_k is also a pole.
class DegenerateCaseError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Closed-form special points of one family map, plus the residuals of the
/// numeric checks run while building it.
struct PointCatalog {
    int d = 0;
    MethodKind method = MethodKind::Halley;

    /// 0 followed by alpha_k = exp(2k pi i/d).
    std::vector<cplx> roots;
    /// Zeros of p_d': zeta_k = (1/(d+1))^{1/d} exp(2k pi i/d), on even rays.
    std::vector<cplx> zetas;
    /// Halley only: c_k = (2(d-1)/((d+1)(d+2)))^{1/d} exp((2k+1) pi i/d), on odd rays.
    std::vector<cplx> free_criticals;
    /// Finite poles. Traub and Newton: zeta_k. Halley: d-th roots of the zeros of
    /// 2 + (d+1)(d-4) w + (d+1)(d+2) w^2.
    std::vector<cplx> poles;

    /// Halley: max |H_d(zeta_k) - zeta_k|.
    double max_zeta_fixed_residual = 0.0;
    /// Halley: H_d'(zeta_k), expected 3.
    std::vector<cplx> zeta_multipliers;
    /// Multipliers at the roots, expected 0.
    std::vector<cplx> root_multipliers;
    /// Halley: max |H_d'(c_k)|, skipped (0) when d = 7.
    double max_critical_derivative = 0.0;
    /// Max modulus of the defining equation at each pole.
    double max_pole_residual = 0.0;
    std::optional<InfinityMultiplier> infinity;

    /// Fixed points on the sphere accounted for by the catalog.
    int fixed_point_count() const;
};

PointCatalog catalog(int d, MethodKind method);

/// Semi-line r_ell = { t exp(ell pi i/d) : t > 0 }, 0 <= ell < 2d.
struct RaySpec {
    int d = 2;
    int ell = 0;
    double angle() const;
    bool odd() const { return ell % 2 != 0; }
    /// (ell + d) mod 2d, the opposite semi-line.
    int opposite() const { return (ell + d) % (2 * d); }
};

struct RayReport {
    RaySpec ray;
    MethodKind method = MethodKind::Halley;
    int samples = 0;
    int on_ray = 0;
    int on_opposite = 0;
    int at_zero_or_infinity = 0;
    /// Images whose argument matches neither ray.
    int off_ray = 0;
    double max_angle_error = 0.0;
    /// The real radial factor's denominator changes sign along the sample grid.
    bool pole_crossing = false;
    /// Images allowed on the opposite ray: Halley odd rays, Traub even rays.
    bool opposite_allowed = false;

    bool pass() const { return off_ray == 0 && (opposite_allowed || on_opposite == 0); }
};

/// Samples t log-uniformly in [1e-3, 1e3] and checks where F(t exp(i theta_ell)) lands.
RayReport ray_image_check(int d, MethodKind method, int ell, int samples = 1000);

/// The real map s -> F restricted to a ray: F(t e^{i theta_ell}) = e^{i theta_ell} radial_map(t),
/// where radial_map(t) = t f((-1)^ell t^d). Returns nullopt at a pole.
std::optional<double> radial_map(int d, MethodKind method, int ell, double t);

struct CriticalValues {
    int d = 0;
    /// v_k / c_k = (d-1)^2 / ((d+2)(d-7)), reduced, positive denominator.
    ExactFraction ratio;
    /// |v_k| > |c_k|, decided with integers.
    bool exceeds_critical_modulus = false;
    std::vector<cplx> criticals;
    std::vector<cplx> values;
    /// max |H_d(c_k) - v_k|.
    double max_map_residual = 0.0;
};

/// Throws DegenerateCaseError for d = 7.
CriticalValues halley_critical_values(int d);

/// Real restriction B_d of the Halley map to the odd invariant line, d in {2,3,4}:
///   B_2(t) = -2t^2(1-3t^2) / (2+6t^2+12t^4)
///   B_3(t) = -2t^3(1-2t^3) / (2+4t^2+20t^6)
///   B_4(t) = -2t^4(3-5t^4) / (2+30t^8)
/// Throws DomainError for other d.
double real_restriction_b(int d, double t);
/// Numerator and denominator of B_d as integer polynomials in t.
std::pair<IntPolynomial, IntPolynomial> real_restriction_b_parts(int d);
/// Nonzero critical points of B_d, ascending, by bisection on the numerator of B_d'
/// over [-2, -1e-4] and [1e-4, 2] to 1e-10.
std::vector<double> real_restriction_b_critical_points(int d);

struct Counterexample {
    int d = 0;
    /// Coefficient index; for C_{d,n} checks this is n * 100 + ell.
    int index = 0;
    BigInt value;
    std::string note;
};

struct CoeffVerdict {
    std::string claim_id;
    int d_from = 0;
    int d_to = 0;
    bool all_hold = true;
    std::optional<Counterexample> first_counterexample;
    /// Polynomials actually expanded, for reports.
    int polynomials_checked = 0;
};

/// P_d(w) = d(d+1) w^2 ((d+1)w+1)^d - d^{d+1} w^{d+2} - ((d+1)w+1)^{d+2}.
IntPolynomial traub_pd_polynomial(int d);
/// G_d(w) from the closed-form Traub derivative.
IntPolynomial traub_gd_polynomial(int d);
/// Script-G_d(x) = d^d (d-x)(x+1)^d + (d(x-1)+x)((d+1)x+d)^d.
IntPolynomial traub_gscript_polynomial(int d);
/// C_{d,n}(0) as an integer polynomial in the symbol d (n fixed).
IntPolynomial cdn_polynomial(int n);

/// Every coefficient of P_d is negative, d = 2..d_max.
CoeffVerdict verify_Pd_negative(int d_max);
/// Script-G_d has zero x^0, x^1 coefficients, the rest >= 0 with at least one > 0,
/// and equals G_d(x+1); d = 2..d_max.
CoeffVerdict verify_G_script_positive(int d_max);
/// For n = 2..d+1: C_{d,n}(0) has c_{n+1} = c_n = 0, c_{n-1} = 3n(n-1)/2, c_0 = 2n-1,
/// c_ell = (2n-1) C(n,ell) - C(n,ell-1) > 0 for 1 <= ell <= n-2, and
/// n! [x^n] Script-G_d = d^{d-n+1} prod_{k=0}^{n-2} (d-k) C_{d,n}(d).
CoeffVerdict verify_Cdn_coeffs(int d);
/// verify_Cdn_coeffs over d = 2..d_max, merged in d order.
CoeffVerdict verify_Cdn_sweep(int d_max);

}  // namespace basinlab

#endif  // BASINLAB_FAMILY_ANALYSIS_HPP
