#include "basinlab/family_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "basinlab/family_kernels.hpp"
#include "basinlab/parallel.hpp"

namespace basinlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleSlack = 1e-9;

void require_degree(int d) {
    if (d < 2) {
        throw DomainError("degree parameter d must be >= 2, got " + std::to_string(d));
    }
}

double eval_real(const IntPolynomial& p, double t) {
    double acc = 0.0;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * t + it->convert_to<double>();
    }
    return acc;
}

BigInt big_pow(long long base, unsigned n) { return boost::multiprecision::pow(BigInt(base), n); }

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

// Angle in [0, 2pi).
double normalized_arg(cplx z) {
    double a = std::atan2(z.imag(), z.real());
    if (a < 0.0) {
        a += 2.0 * kPi;
    }
    return a;
}

double angular_distance(double a, double b) {
    const double diff = std::fabs(a - b);
    return std::min(diff, 2.0 * kPi - diff);
}

// Runs `check(d)` for every d in [from, to] (possibly in parallel) and merges
// the per-d verdicts in ascending d.
CoeffVerdict sweep(std::string claim, int from, int to, const std::function<CoeffVerdict(int)>& check) {
    std::vector<CoeffVerdict> parts(static_cast<std::size_t>(std::max(0, to - from + 1)));
    const int n = static_cast<int>(parts.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
    for (int i = 0; i < n; ++i) {
        parts[static_cast<std::size_t>(i)] = check(from + i);
    }
    CoeffVerdict out;
    out.claim_id = std::move(claim);
    out.d_from = from;
    out.d_to = to;
    for (const CoeffVerdict& v : parts) {
        out.polynomials_checked += v.polynomials_checked;
        if (!v.all_hold && out.all_hold) {
            out.all_hold = false;
            out.first_counterexample = v.first_counterexample;
        }
    }
    return out;
}

void fail(CoeffVerdict& v, int d, int index, BigInt value, std::string note) {
    if (!v.all_hold) {
        return;
    }
    v.all_hold = false;
    v.first_counterexample = Counterexample{d, index, std::move(value), std::move(note)};
}

}  // namespace

// ---------------------------------------------------------------------------
// Catalog

int PointCatalog::fixed_point_count() const {
    // roots + infinity, plus the repelling zeta_k for Halley
    const auto base = static_cast<int>(roots.size()) + 1;
    return method == MethodKind::Halley ? base + static_cast<int>(zetas.size()) : base;
}

PointCatalog catalog(int d, MethodKind method) {
    require_degree(d);
    PointCatalog cat;
    cat.d = d;
    cat.method = method;
    cat.roots = family_roots(d);

    const double dd = d;
    const double zeta_radius = std::pow(1.0 / (dd + 1.0), 1.0 / dd);
    for (int k = 0; k < d; ++k) {
        cat.zetas.push_back(std::polar(zeta_radius, 2.0 * kPi * k / dd));
    }

    if (method == MethodKind::Halley) {
        const double crit_radius = std::pow(2.0 * (dd - 1.0) / ((dd + 1.0) * (dd + 2.0)), 1.0 / dd);
        for (int k = 0; k < d; ++k) {
            cat.free_criticals.push_back(std::polar(crit_radius, (2.0 * k + 1.0) * kPi / dd));
        }
        // zeros of 2 + a w + b w^2
        const double a = (dd + 1.0) * (dd - 4.0);
        const double b = (dd + 1.0) * (dd + 2.0);
        const cplx disc = std::sqrt(cplx(a * a - 8.0 * b, 0.0));
        for (const cplx w : {(-a + disc) / (2.0 * b), (-a - disc) / (2.0 * b)}) {
            const cplx base = std::pow(w, 1.0 / dd);
            for (int k = 0; k < d; ++k) {
                const cplx z = base * std::polar(1.0, 2.0 * kPi * k / dd);
                cat.poles.push_back(z);
                const cplx wz = ipow(z, static_cast<unsigned>(d));
                cat.max_pole_residual = std::max(cat.max_pole_residual, std::abs(2.0 + a * wz + b * wz * wz));
            }
        }

        for (const cplx zeta : cat.zetas) {
            const EvalResult r = halley_eval_family(d, zeta);
            const double residual = r.value.is_finite() ? std::abs(r.value.value() - zeta)
                                                        : std::numeric_limits<double>::infinity();
            cat.max_zeta_fixed_residual = std::max(cat.max_zeta_fixed_residual, residual);
            cat.zeta_multipliers.push_back(halley_deriv_family(d, zeta).value());
        }
        for (const cplx root : cat.roots) {
            cat.root_multipliers.push_back(halley_deriv_family(d, root).value());
        }
        if (d != 7) {
            for (const cplx c : cat.free_criticals) {
                cat.max_critical_derivative =
                    std::max(cat.max_critical_derivative, std::abs(halley_deriv_family(d, c).value()));
            }
        }
    } else {
        cat.poles = cat.zetas;
        for (const cplx z : cat.poles) {
            const cplx w = ipow(z, static_cast<unsigned>(d));
            cat.max_pole_residual = std::max(cat.max_pole_residual, std::abs((dd + 1.0) * w - 1.0));
        }
        for (const cplx root : cat.roots) {
            if (method == MethodKind::Traub) {
                cat.root_multipliers.push_back(traub_deriv_family(d, root).value());
            } else {
                // N_d'(z) = p p'' / p'^2 vanishes at simple roots
                const FloatPolynomial p(family_poly(d));
                const FloatPolynomial dp = p.derivative();
                const cplx slope = dp.eval(root);
                cat.root_multipliers.push_back(p.eval(root) * dp.derivative().eval(root) / (slope * slope));
            }
        }
    }

    if (method != MethodKind::Newton) {
        cat.infinity = multiplier_at_infinity(MethodMap::family(method, d));
    }
    return cat;
}

// ---------------------------------------------------------------------------
// Rays

double RaySpec::angle() const { return ell * kPi / d; }

std::optional<double> radial_map(int d, MethodKind method, int ell, double t) {
    require_degree(d);
    const double dd = d;
    const double s = (ell % 2 == 0 ? 1.0 : -1.0) * ipow(t, static_cast<unsigned>(d));
    const bool inner = std::fabs(s) <= 1.0;
    const cplx arg = inner ? cplx(s, 0.0) : cplx(1.0 / s, 0.0);
    kernels::Step f;
    switch (method) {
        case MethodKind::Newton:
            f = inner ? kernels::newton_factor_w(dd, arg) : kernels::newton_factor_v(dd, arg);
            break;
        case MethodKind::Halley:
            f = inner ? kernels::halley_factor_w(dd, arg) : kernels::halley_factor_v(dd, arg);
            break;
        case MethodKind::Traub:
            f = inner ? kernels::traub_factor_w(dd, arg) : kernels::traub_factor_v(dd, arg);
            break;
    }
    if (f.pole) {
        return std::nullopt;
    }
    return t * f.value.real();
}

RayReport ray_image_check(int d, MethodKind method, int ell, int samples) {
    require_degree(d);
    if (ell < 0 || ell >= 2 * d) {
        throw DomainError("ray index must lie in [0, 2d)");
    }
    if (samples < 2) {
        throw DomainError("ray_image_check needs at least two samples");
    }
    RayReport report;
    report.ray = RaySpec{d, ell};
    report.method = method;
    report.samples = samples;
    report.opposite_allowed = (method == MethodKind::Halley) == report.ray.odd();

    const MethodMap map = MethodMap::family(method, d);
    const double theta = report.ray.angle();
    const double theta_opp = RaySpec{d, report.ray.opposite()}.angle();
    const double dd = d;
    const double sign = report.ray.odd() ? -1.0 : 1.0;

    double prev_den = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = std::pow(10.0, -3.0 + 6.0 * i / (samples - 1));

        // Sign of the real radial denominator at s = (+-1) t^d.
        const double s = sign * std::pow(t, dd);
        const double den = method == MethodKind::Halley
                               ? 2.0 + (dd + 1.0) * (dd - 4.0) * s + (dd + 1.0) * (dd + 2.0) * s * s
                               : (dd + 1.0) * s - 1.0;
        if (i > 0 && (den > 0.0) != (prev_den > 0.0)) {
            report.pole_crossing = true;
        }
        prev_den = den;

        const EvalResult r = map.eval(ComplexPoint(std::polar(t, theta)));
        if (r.value.is_infinite() || r.value.value() == cplx(0.0, 0.0)) {
            ++report.at_zero_or_infinity;
            continue;
        }
        const double arg = normalized_arg(r.value.value());
        const double e_same = angular_distance(arg, theta);
        const double e_opp = angular_distance(arg, theta_opp);
        if (e_same <= kAngleSlack) {
            ++report.on_ray;
            report.max_angle_error = std::max(report.max_angle_error, e_same);
        } else if (e_opp <= kAngleSlack) {
            ++report.on_opposite;
            report.max_angle_error = std::max(report.max_angle_error, e_opp);
        } else {
            ++report.off_ray;
            report.max_angle_error = std::max(report.max_angle_error, std::min(e_same, e_opp));
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Critical values

CriticalValues halley_critical_values(int d) {
    require_degree(d);
    if (d == 7) {
        throw DegenerateCaseError("critical points are poles: for d = 7 every c_k is a pole of H_d");
    }
    CriticalValues cv;
    cv.d = d;
    BigInt num = BigInt(d - 1) * (d - 1);
    BigInt den = BigInt(d + 2) * (d - 7);
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const BigInt g = boost::multiprecision::gcd(num, den);
    cv.ratio = {num / g, den / g};
    cv.exceeds_critical_modulus = boost::multiprecision::abs(cv.ratio.num) > cv.ratio.den;

    const double factor = cv.ratio.to_double();
    cv.criticals = catalog(d, MethodKind::Halley).free_criticals;
    for (const cplx c : cv.criticals) {
        const cplx v = c * factor;
        cv.values.push_back(v);
        const EvalResult r = halley_eval_family(d, c);
        const double residual =
            r.value.is_finite() ? std::abs(r.value.value() - v) : std::numeric_limits<double>::infinity();
        cv.max_map_residual = std::max(cv.max_map_residual, residual);
    }
    return cv;
}

// ---------------------------------------------------------------------------
// Real restrictions on the odd line

std::pair<IntPolynomial, IntPolynomial> real_restriction_b_parts(int d) {
    switch (d) {
        case 2: return {IntPolynomial{0, 0, -2, 0, 6}, IntPolynomial{2, 0, 6, 0, 12}};
        case 3: return {IntPolynomial{0, 0, 0, -2, 0, 0, 4}, IntPolynomial{2, 0, 4, 0, 0, 0, 20}};
        case 4: return {IntPolynomial{0, 0, 0, 0, -6, 0, 0, 0, 10}, IntPolynomial{2, 0, 0, 0, 0, 0, 0, 0, 30}};
        default: throw DomainError("real_restriction_b: d must be 2, 3 or 4");
    }
}

double real_restriction_b(int d, double t) {
    const auto [num, den] = real_restriction_b_parts(d);
    return eval_real(num, t) / eval_real(den, t);
}

std::vector<double> real_restriction_b_critical_points(int d) {
    const auto [num, den] = real_restriction_b_parts(d);
    // numerator of B_d' by the quotient rule
    const IntPolynomial slope = num.derivative() * den - num * den.derivative();

    constexpr int kCells = 4000;
    constexpr double kTolerance = 1e-10;
    std::vector<double> found;
    for (const auto& [lo, hi] : {std::pair{-2.0, -1e-4}, std::pair{1e-4, 2.0}}) {
        const double step = (hi - lo) / kCells;
        for (int i = 0; i < kCells; ++i) {
            double a = lo + step * i;
            double b = i + 1 == kCells ? hi : lo + step * (i + 1);
            double fa = eval_real(slope, a);
            const double fb = eval_real(slope, b);
            if (fa == 0.0) {
                found.push_back(a);
                continue;
            }
            if ((fa > 0.0) == (fb > 0.0)) {
                continue;
            }
            while (b - a > kTolerance) {
                const double mid = 0.5 * (a + b);
                const double fm = eval_real(slope, mid);
                if ((fm > 0.0) == (fa > 0.0)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            found.push_back(0.5 * (a + b));
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

// ---------------------------------------------------------------------------
// Exact coefficient claims

IntPolynomial traub_pd_polynomial(int d) {
    require_degree(d);
    const auto n = static_cast<unsigned>(d);
    const IntPolynomial lin = IntPolynomial::linear(d + 1, 1);
    return IntPolynomial::monomial(BigInt(d) * (d + 1), 2) * int_poly_pow(lin, n) -
           IntPolynomial::monomial(big_pow(d, n + 1), n + 2) - int_poly_pow(lin, n + 2);
}

IntPolynomial traub_gd_polynomial(int d) {
    require_degree(d);
    const auto n = static_cast<unsigned>(d);
    const IntPolynomial u_pow = int_poly_pow(IntPolynomial::linear(d + 1, -1), n);
    const IntPolynomial w_pow = IntPolynomial::monomial(1, n);
    return IntPolynomial::constant(big_pow(d, n + 1)) * w_pow -
           IntPolynomial::constant(big_pow(d, n)) * IntPolynomial::linear(1, -1) * w_pow +
           IntPolynomial::linear(d, -2LL * d) * u_pow + IntPolynomial::linear(1, -1) * u_pow;
}

IntPolynomial traub_gscript_polynomial(int d) {
    require_degree(d);
    const auto n = static_cast<unsigned>(d);
    return IntPolynomial::constant(big_pow(d, n)) * IntPolynomial::linear(-1, d) *
               int_poly_pow(IntPolynomial::linear(1, 1), n) +
           IntPolynomial::linear(d + 1, -d) * int_poly_pow(IntPolynomial::linear(d + 1, d), n);
}

IntPolynomial cdn_polynomial(int n) {
    if (n < 2) {
        throw DomainError("cdn_polynomial: n must be >= 2");
    }
    const auto un = static_cast<unsigned>(n);
    IntPolynomial c = IntPolynomial::monomial(1, un + 1) + IntPolynomial::monomial(1 - n, un) +
                      IntPolynomial::monomial(-n, un - 1);
    for (int j = 0; j <= n; ++j) {
        const BigInt b = binomial(n, j);
        c = c + IntPolynomial::monomial(BigInt(2 * n - 1) * b, static_cast<unsigned>(j)) -
            IntPolynomial::monomial(b, static_cast<unsigned>(j + 1));
    }
    return c;
}

CoeffVerdict verify_Pd_negative(int d_max) {
    require_degree(d_max);
    return sweep("traub-pd-coefficients-negative", 2, d_max, [](int d) {
        CoeffVerdict v;
        const IntPolynomial p = traub_pd_polynomial(d);
        v.polynomials_checked = 1;
        // every power 0..d+2 must be present and negative
        for (int k = 0; k <= d + 2; ++k) {
            const BigInt c = p.coeff(static_cast<std::size_t>(k));
            if (c >= 0) {
                fail(v, d, k, c, "coefficient of w^" + std::to_string(k) + " is not negative");
            }
        }
        return v;
    });
}

CoeffVerdict verify_G_script_positive(int d_max) {
    require_degree(d_max);
    return sweep("traub-gscript-taylor-coefficients-nonnegative", 2, d_max, [](int d) {
        CoeffVerdict v;
        const IntPolynomial g = traub_gscript_polynomial(d);
        v.polynomials_checked = 1;
        for (int k = 0; k <= 1; ++k) {
            const BigInt c = g.coeff(static_cast<std::size_t>(k));
            if (c != 0) {
                fail(v, d, k, c, "coefficient of x^" + std::to_string(k) + " is not zero");
            }
        }
        bool any_positive = false;
        for (int k = 2; k <= d + 1; ++k) {
            const BigInt c = g.coeff(static_cast<std::size_t>(k));
            any_positive = any_positive || c > 0;
            if (c < 0) {
                fail(v, d, k, c, "coefficient of x^" + std::to_string(k) + " is negative");
            }
        }
        if (!any_positive) {
            fail(v, d, -1, 0, "no positive coefficient");
        }
        if (g.degree() > d + 1) {
            fail(v, d, g.degree(), g.coeffs().back(), "degree exceeds d+1");
        }
        if (g != traub_gd_polynomial(d).compose(IntPolynomial::linear(1, 1))) {
            fail(v, d, -1, 0, "Script-G_d(x) differs from G_d(x+1)");
        }
        return v;
    });
}

CoeffVerdict verify_Cdn_coeffs(int d) {
    require_degree(d);
    CoeffVerdict v;
    v.claim_id = "traub-cdn-coefficients-nonnegative";
    v.d_from = d;
    v.d_to = d;
    const IntPolynomial gscript = traub_gscript_polynomial(d);
    for (int n = 2; n <= d + 1; ++n) {
        const IntPolynomial c = cdn_polynomial(n);
        ++v.polynomials_checked;
        const auto at = [&](int ell) { return c.coeff(static_cast<std::size_t>(ell)); };
        const int tag = n * 100;

        if (c.degree() > n + 1) {
            fail(v, d, tag + c.degree(), c.coeffs().back(), "degree in d exceeds n+1");
        }
        if (at(n + 1) != 0) {
            fail(v, d, tag + n + 1, at(n + 1), "c_{n+1} is not zero");
        }
        if (at(n) != 0) {
            fail(v, d, tag + n, at(n), "c_n is not zero");
        }
        if (2 * at(n - 1) != BigInt(3) * n * (n - 1)) {
            fail(v, d, tag + n - 1, at(n - 1), "c_{n-1} differs from 3n(n-1)/2");
        }
        if (at(0) != 2 * n - 1) {
            fail(v, d, tag, at(0), "c_0 differs from 2n-1");
        }
        for (int ell = 1; ell <= n - 2; ++ell) {
            const BigInt expected = BigInt(2 * n - 1) * binomial(n, ell) - binomial(n, ell - 1);
            if (at(ell) != expected) {
                fail(v, d, tag + ell, at(ell), "c_ell differs from (2n-1)C(n,ell) - C(n,ell-1)");
            }
            if (at(ell) <= 0) {
                fail(v, d, tag + ell, at(ell), "middle coefficient is not positive");
            }
        }
        for (int ell = 0; ell <= c.degree(); ++ell) {
            if (at(ell) < 0) {
                fail(v, d, tag + ell, at(ell), "negative coefficient");
            }
        }

        // n! [x^n] Script-G_d = d^{d-n+1} prod_{k<=n-2} (d-k) C_{d,n}(d)
        BigInt falling = 1;
        for (int k = 0; k <= n - 2; ++k) {
            falling *= d - k;
        }
        const BigInt lhs = factorial(n) * gscript.coeff(static_cast<std::size_t>(n));
        const BigInt rhs = big_pow(d, static_cast<unsigned>(d - n + 1)) * falling * c.eval(d);
        if (lhs != rhs) {
            fail(v, d, tag + 99, lhs - rhs, "Taylor coefficient differs from the C_{d,n} factorization");
        }
    }
    return v;
}

CoeffVerdict verify_Cdn_sweep(int d_max) {
    require_degree(d_max);
    return sweep("traub-cdn-coefficients-nonnegative", 2, d_max, verify_Cdn_coeffs);
}

}  // namespace basinlab
