#ifndef BASINLAB_COMPLEX_POINT_HPP
#define BASINLAB_COMPLEX_POINT_HPP

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace basinlab {

using cplx = std::complex<double>;

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (d < 2, NaN, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// 0/0 in an iteration map, e.g. a seed sitting on a multiple root.
class IndeterminateError : public Error {
public:
    using Error::Error;
};

/// Slope requested at (or numerically at) a pole.
class PoleError : public Error {
public:
    using Error::Error;
};

class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// A point of the Riemann sphere: a finite complex value or the point at infinity.
///
/// Infinity is an exact tag, never a large float. Finite parts are never NaN.
class ComplexPoint {
public:
    /// Origin.
    ComplexPoint() = default;

    ComplexPoint(double re, double im = 0.0) : ComplexPoint(cplx(re, im)) {}  // NOLINT(google-explicit-constructor)

    ComplexPoint(cplx z) : value_(z) {  // NOLINT(google-explicit-constructor)
        if (std::isnan(z.real()) || std::isnan(z.imag())) {
            throw DomainError("ComplexPoint: NaN component");
        }
        if (std::isinf(z.real()) || std::isinf(z.imag())) {
            value_.reset();
        }
    }

    static ComplexPoint infinity() {
        ComplexPoint p;
        p.value_.reset();
        return p;
    }

    bool is_infinite() const { return !value_.has_value(); }
    bool is_finite() const { return value_.has_value(); }

    /// Finite value; throws DomainError at infinity.
    cplx value() const {
        if (!value_) {
            throw DomainError("ComplexPoint: value() of the point at infinity");
        }
        return *value_;
    }

    double re() const { return value().real(); }
    double im() const { return value().imag(); }

    /// Modulus, +inf at infinity.
    double modulus() const;

    friend bool operator==(const ComplexPoint& a, const ComplexPoint& b) {
        return a.value_ == b.value_;
    }

    std::string to_string() const;

private:
    std::optional<cplx> value_ = cplx(0.0, 0.0);
};

/// z^n by binary exponentiation.
inline cplx ipow(cplx z, unsigned n) {
    cplx result(1.0, 0.0);
    while (n != 0) {
        if (n & 1u) {
            result *= z;
        }
        n >>= 1u;
        if (n != 0) {
            z *= z;
        }
    }
    return result;
}

inline double ipow(double x, unsigned n) {
    double result = 1.0;
    while (n != 0) {
        if (n & 1u) {
            result *= x;
        }
        n >>= 1u;
        if (n != 0) {
            x *= x;
        }
    }
    return result;
}

}  // namespace basinlab

#endif  // BASINLAB_COMPLEX_POINT_HPP
