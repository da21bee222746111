#include "basinlab/methods.hpp"

#include <numbers>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "basinlab/family_kernels.hpp"

namespace basinlab {

using kernels::kPoleTolerance;
using kernels::modulus;
using kernels::vanishes;

namespace {

void require_family_degree(int d) {
    if (d < 2) {
        throw DomainError("degree parameter d must be >= 2, got " + std::to_string(d));
    }
}

cplx require_finite(const ComplexPoint& z, const char* what) {
    if (z.is_infinite()) {
        throw DomainError(std::string(what) + ": finite input required");
    }
    return z.value();
}

EvalResult from_step(kernels::Step s) {
    if (s.pole) {
        return {ComplexPoint::infinity(), std::nullopt, true};
    }
    return {ComplexPoint(s.value), std::nullopt, false};
}

// Shared 0/0 and pole policy for the generic quotient num/den.
bool generic_quotient_is_pole(cplx num, cplx den) {
    if (!vanishes(den, num)) {
        return false;
    }
    if (modulus(num) < kPoleTolerance) {
        throw IndeterminateError("indeterminate; perturb seed");
    }
    return true;
}

}  // namespace

std::string_view to_string(MethodKind kind) {
    switch (kind) {
        case MethodKind::Newton: return "newton";
        case MethodKind::Halley: return "halley";
        case MethodKind::Traub: return "traub";
    }
    return "unknown";
}

MethodKind parse_method(std::string_view name) {
    if (name == "newton") return MethodKind::Newton;
    if (name == "halley") return MethodKind::Halley;
    if (name == "traub") return MethodKind::Traub;
    throw DomainError("unknown method '" + std::string(name) + "'");
}

std::vector<cplx> family_roots(int d) {
    require_family_degree(d);
    std::vector<cplx> roots;
    roots.reserve(static_cast<std::size_t>(d) + 1);
    roots.emplace_back(0.0, 0.0);
    roots.emplace_back(1.0, 0.0);
    for (int k = 1; k < d; ++k) {
        roots.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / d));
    }
    return roots;
}

MethodMap MethodMap::family(MethodKind kind, int d) {
    require_family_degree(d);
    return MethodMap(kind, d, FloatPolynomial(family_poly(d)), family_roots(d));
}

MethodMap MethodMap::generic(MethodKind kind, FloatPolynomial p, std::vector<cplx> roots) {
    if (p.degree() < 2) {
        throw DomainError("generic method map needs a polynomial of degree >= 2");
    }
    return MethodMap(kind, 0, std::move(p), std::move(roots));
}

int MethodMap::d() const {
    if (!is_family()) {
        throw UnsupportedError("generic method map has no family degree");
    }
    return d_;
}

EvalResult MethodMap::eval(const ComplexPoint& z) const {
    if (z.is_infinite()) {
        return {ComplexPoint::infinity(), std::nullopt, false};
    }
    if (is_family()) {
        switch (kind_) {
            case MethodKind::Newton: return newton_eval_family(d_, z);
            case MethodKind::Halley: return halley_eval_family(d_, z);
            case MethodKind::Traub: return traub_eval_family(d_, z);
        }
    }
    switch (kind_) {
        case MethodKind::Newton: return newton_eval(poly_, z);
        case MethodKind::Halley: return halley_eval_generic(poly_, z);
        case MethodKind::Traub: return traub_eval_generic(poly_, z);
    }
    throw UnsupportedError("unknown method kind");
}

EvalResult newton_eval(const FloatPolynomial& p, const ComplexPoint& zp) {
    const cplx z = require_finite(zp, "newton_eval");
    const cplx f = p.eval(z);
    const cplx df = p.derivative().eval(z);
    if (generic_quotient_is_pole(f, df)) {
        return {ComplexPoint::infinity(), std::nullopt, true};
    }
    return {ComplexPoint(z - f / df), std::nullopt, false};
}

EvalResult newton_eval_family(int d, const ComplexPoint& z) {
    require_family_degree(d);
    return from_step(kernels::newton_step(d, require_finite(z, "newton_eval_family")));
}

EvalResult halley_eval_generic(const FloatPolynomial& p, const ComplexPoint& zp) {
    const cplx z = require_finite(zp, "halley_eval_generic");
    const FloatPolynomial dp = p.derivative();
    const cplx f = p.eval(z);
    const cplx df = dp.eval(z);
    const cplx ddf = dp.derivative().eval(z);
    const cplx num = f * df;
    const cplx den = df * df - 0.5 * f * ddf;
    if (generic_quotient_is_pole(num, den)) {
        return {ComplexPoint::infinity(), std::nullopt, true};
    }
    return {ComplexPoint(z - num / den), std::nullopt, false};
}

EvalResult halley_eval_family(int d, const ComplexPoint& zp) {
    require_family_degree(d);
    EvalResult r = from_step(kernels::halley_step(d, require_finite(zp, "halley_eval_family")));
    if (!r.was_pole) {
        try {
            r.derivative = halley_deriv_family(d, zp);
        } catch (const PoleError&) {
        }
    }
    return r;
}

ComplexPoint halley_deriv_family(int d, const ComplexPoint& zp) {
    require_family_degree(d);
    const cplx z = require_finite(zp, "halley_deriv_family");
    const double dd = d;
    const double lin = (dd + 1.0) * (dd - 4.0);
    const double quad = (dd + 1.0) * (dd + 2.0);
    const double scale = dd * (dd + 1.0);
    if (std::norm(z) <= 1.0) {
        const cplx w = ipow(z, static_cast<unsigned>(d));
        const cplx den = 2.0 + lin * w + quad * w * w;
        const cplx num = scale * w * (w - 1.0) * (w - 1.0) * (2.0 * (dd - 1.0) + quad * w);
        if (vanishes(den, num)) {
            throw PoleError("halley_deriv_family: point is a pole of H_d");
        }
        return ComplexPoint(num / (den * den));
    }
    const cplx v = ipow(1.0 / z, static_cast<unsigned>(d));
    const cplx den = 2.0 * v * v + lin * v + quad;
    const cplx num = scale * (1.0 - v) * (1.0 - v) * (2.0 * (dd - 1.0) * v + quad);
    return ComplexPoint(num / (den * den));
}

EvalResult traub_eval_generic(const FloatPolynomial& p, const ComplexPoint& zp) {
    const cplx z = require_finite(zp, "traub_eval_generic");
    const cplx f = p.eval(z);
    const cplx df = p.derivative().eval(z);
    if (generic_quotient_is_pole(f, df)) {
        return {ComplexPoint::infinity(), std::nullopt, true};
    }
    const cplx newton = z - f / df;
    return {ComplexPoint(newton - p.eval(newton) / df), std::nullopt, false};
}

EvalResult traub_eval_family(int d, const ComplexPoint& zp) {
    require_family_degree(d);
    EvalResult r = from_step(kernels::traub_step(d, require_finite(zp, "traub_eval_family")));
    if (!r.was_pole) {
        try {
            r.derivative = traub_deriv_family(d, zp);
        } catch (const PoleError&) {
        }
    }
    return r;
}

// T_d'(z) = d(d+1) z^{2d} G_d(z^d) / ((d+1) z^d - 1)^{d+3}, rewritten with r = w/u:
//   d(d+1) r^2 [ (d r)^d (d + 1 - w) + (d+1) w - 2d - 1 ] / u.
ComplexPoint traub_deriv_family(int d, const ComplexPoint& zp) {
    require_family_degree(d);
    const cplx z = require_finite(zp, "traub_deriv_family");
    const double dd = d;
    const auto n = static_cast<unsigned>(d);
    if (std::norm(z) <= 1.0) {
        const cplx w = ipow(z, n);
        const cplx u = (dd + 1.0) * w - 1.0;
        if (vanishes(u, w)) {
            throw PoleError("traub_deriv_family: point is a pole of T_d");
        }
        const cplx r = w / u;
        const cplx bracket = ipow(dd * r, n) * (dd + 1.0 - w) + (dd + 1.0) * w - (2.0 * dd + 1.0);
        return ComplexPoint(dd * (dd + 1.0) * r * r * bracket / u);
    }
    const cplx v = ipow(1.0 / z, n);
    const cplx s = (dd + 1.0) - v;
    const cplx r = 1.0 / s;
    const cplx bracket_over_u =
        (ipow(dd * r, n) * ((dd + 1.0) * v - 1.0) + ((dd + 1.0) - (2.0 * dd + 1.0) * v)) / s;
    return ComplexPoint(dd * (dd + 1.0) * r * r * bracket_over_u);
}

ExactFraction traub_asymptotic_slope(int d) {
    require_family_degree(d);
    const BigInt dd = d;
    const BigInt d1 = d + 1;
    const auto n = static_cast<unsigned>(d);
    BigInt num = dd * (boost::multiprecision::pow(d1, n + 1) - boost::multiprecision::pow(dd, n));
    BigInt den = boost::multiprecision::pow(d1, n + 2);
    const BigInt g = boost::multiprecision::gcd(num, den);
    return {num / g, den / g};
}

InfinityMultiplier multiplier_at_infinity(const MethodMap& m) {
    if (!m.is_family() || m.kind() == MethodKind::Newton) {
        throw UnsupportedError("multiplier_at_infinity: only Halley and Traub family maps are supported");
    }
    const int d = m.d();
    auto conjugate = [&](double w) {
        const EvalResult r = m.eval(ComplexPoint(1.0 / w, 0.0));
        return 1.0 / r.value.value();
    };
    constexpr double h = 1e-5;
    const cplx slope = (conjugate(h) - conjugate(-h)) / (2.0 * h);

    InfinityMultiplier out;
    out.numeric = slope.real();
    if (m.kind() == MethodKind::Halley) {
        out.closed_form = 1.0 + 2.0 / d;
    } else {
        const ExactFraction a = traub_asymptotic_slope(d);
        out.closed_form = ExactFraction{a.den, a.num}.to_double();
    }
    return out;
}

}  // namespace basinlab
