#ifndef BASINLAB_POLYNOMIAL_HPP
#define BASINLAB_POLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "basinlab/complex_point.hpp"

namespace basinlab {

using BigInt = boost::multiprecision::cpp_int;

/// num/den with arbitrary-precision parts. Not normalized unless the producer says so.
struct ExactFraction {
    BigInt num;
    BigInt den = 1;
    double to_double() const;
};

/// Exact integer-coefficient polynomial, dense ascending powers.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree() == -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long long> coeffs);

    /// c * x^power.
    static IntPolynomial monomial(const BigInt& c, unsigned power);
    static IntPolynomial constant(const BigInt& c) { return monomial(c, 0); }
    /// a*x + b.
    static IntPolynomial linear(const BigInt& a, const BigInt& b);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    /// Coefficient of x^power, zero beyond the degree.
    BigInt coeff(std::size_t power) const;

    BigInt eval(const BigInt& x) const;
    IntPolynomial derivative() const;
    /// this(inner(x)).
    IntPolynomial compose(const IntPolynomial& inner) const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

    std::string to_string(char var = 'x') const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

IntPolynomial int_poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial int_poly_mul(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial int_poly_pow(const IntPolynomial& a, unsigned n);

/// p_d(z) = z^{d+1} - z. Throws DomainError for d < 2.
IntPolynomial family_poly(int d);

/// Complex-coefficient polynomial for the floating dynamics path, ascending powers.
class FloatPolynomial {
public:
    FloatPolynomial() = default;
    explicit FloatPolynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {}
    explicit FloatPolynomial(const IntPolynomial& p);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const cplx> coeffs() const { return coeffs_; }

    /// Horner evaluation at a finite point.
    cplx eval(cplx z) const;
    FloatPolynomial derivative() const;

private:
    std::vector<cplx> coeffs_;
};

/// Horner evaluation; throws DomainError at infinity.
ComplexPoint poly_eval(const FloatPolynomial& p, const ComplexPoint& z);

}  // namespace basinlab

#endif  // BASINLAB_POLYNOMIAL_HPP
