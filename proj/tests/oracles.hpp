// Independent reference values for the tests. Nothing here calls into basinlab
// evaluation code: the rational oracles work on p(z) = z^{d+1} - z directly.
#ifndef BASINLAB_TESTS_ORACLES_HPP
#define BASINLAB_TESTS_ORACLES_HPP

#include <complex>
#include <functional>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;

inline Rational rpow(const Rational& x, unsigned n) {
    Rational r = 1;
    for (unsigned i = 0; i < n; ++i) {
        r *= x;
    }
    return r;
}

inline Rational p(int d, const Rational& z) { return rpow(z, d + 1) - z; }
inline Rational dp(int d, const Rational& z) { return Rational(d + 1) * rpow(z, d) - 1; }
inline Rational ddp(int d, const Rational& z) { return Rational((d + 1) * d) * rpow(z, d - 1); }

inline Rational newton(int d, const Rational& z) { return z - p(d, z) / dp(d, z); }

inline Rational halley(int d, const Rational& z) {
    const Rational pz = p(d, z);
    const Rational d1 = dp(d, z);
    return z - pz * d1 / (d1 * d1 - pz * ddp(d, z) / 2);
}

inline Rational traub(int d, const Rational& z) {
    const Rational n = newton(d, z);
    return n - p(d, n) / dp(d, z);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Fourth-order central difference along the real direction (f is holomorphic).
inline std::complex<double> derivative(const std::function<std::complex<double>(std::complex<double>)>& f,
                                       std::complex<double> z, double h) {
    return (-f(z + 2.0 * h) + 8.0 * f(z + h) - 8.0 * f(z - h) + f(z - 2.0 * h)) / (12.0 * h);
}

/// Second-order central difference.
inline std::complex<double> central(const std::function<std::complex<double>(std::complex<double>)>& f,
                                    std::complex<double> z, double h) {
    return (f(z + h) - f(z - h)) / (2.0 * h);
}

}  // namespace oracle

#endif
