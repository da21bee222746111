#ifndef BASINLAB_FAMILY_KERNELS_HPP
#define BASINLAB_FAMILY_KERNELS_HPP

// Inline closed forms of the Newton, Halley and Traub maps of p_d(z) = z(z^d - 1).
//
// Every map has the shape F(z) = z * f(z^d). The factor f is evaluated in
// w = z^d when |w| <= 1 and in v = 1/w otherwise, which keeps the arithmetic
// finite all the way out to the escape radius. Only +, -, *, / and sqrt are
// used, so grids are bit-exact for a fixed floating-point environment.
//
//   Newton: f(w) = d w / ((d+1) w - 1)
//   Halley: f(w) = d w [(d-1) + (d+1) w] / (2 + (d+1)(d-4) w + (d+1)(d+2) w^2)
//   Traub:  f(w) = d r^2 [(d+1) - (d r)^d],  r = w / ((d+1) w - 1)

#include <cmath>
#include <complex>

#include "basinlab/complex_point.hpp"

namespace basinlab::kernels {

/// Relative threshold below which a denominator counts as zero.
inline constexpr double kPoleTolerance = 1e-14;

struct Step {
    cplx value;
    bool pole = false;
};

inline double modulus(cplx z) { return std::sqrt(std::norm(z)); }

inline bool vanishes(cplx denominator, cplx numerator) {
    return modulus(denominator) < kPoleTolerance * (1.0 + modulus(numerator));
}

// Poles of every family map satisfy |w| < 1, so the v-forms never divide by ~0.

inline Step newton_factor_w(double d, cplx w) {
    const cplx u = (d + 1.0) * w - 1.0;
    if (vanishes(u, w)) {
        return {{}, true};
    }
    return {d * w / u, false};
}

inline Step newton_factor_v(double d, cplx v) { return {d / ((d + 1.0) - v), false}; }

inline Step halley_factor_w(double d, cplx w) {
    const cplx num = d * w * ((d - 1.0) + (d + 1.0) * w);
    const cplx den = 2.0 + (d + 1.0) * (d - 4.0) * w + (d + 1.0) * (d + 2.0) * w * w;
    if (vanishes(den, num)) {
        return {{}, true};
    }
    return {num / den, false};
}

inline Step halley_factor_v(double d, cplx v) {
    const cplx num = d * ((d - 1.0) * v + (d + 1.0));
    const cplx den = 2.0 * v * v + (d + 1.0) * (d - 4.0) * v + (d + 1.0) * (d + 2.0);
    return {num / den, false};
}

inline cplx traub_factor_from_ratio(double d, cplx r) {
    return d * r * r * ((d + 1.0) - ipow(d * r, static_cast<unsigned>(d)));
}

inline Step traub_factor_w(double d, cplx w) {
    const cplx u = (d + 1.0) * w - 1.0;
    if (vanishes(u, w)) {
        return {{}, true};
    }
    return {traub_factor_from_ratio(d, w / u), false};
}

inline Step traub_factor_v(double d, cplx v) {
    return {traub_factor_from_ratio(d, 1.0 / ((d + 1.0) - v)), false};
}

template <Step (*FactorW)(double, cplx), Step (*FactorV)(double, cplx)>
inline Step apply(int d, cplx z) {
    const auto n = static_cast<unsigned>(d);
    const Step f = std::norm(z) <= 1.0 ? FactorW(d, ipow(z, n)) : FactorV(d, ipow(1.0 / z, n));
    if (f.pole) {
        return f;
    }
    return {z * f.value, false};
}

inline Step newton_step(int d, cplx z) { return apply<newton_factor_w, newton_factor_v>(d, z); }
inline Step halley_step(int d, cplx z) { return apply<halley_factor_w, halley_factor_v>(d, z); }
inline Step traub_step(int d, cplx z) { return apply<traub_factor_w, traub_factor_v>(d, z); }

}  // namespace basinlab::kernels

#endif  // BASINLAB_FAMILY_KERNELS_HPP
