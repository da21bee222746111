#include "basinlab/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace basinlab {

double ExactFraction::to_double() const {
    const boost::multiprecision::cpp_rational q(num, den);
    return q.convert_to<double>();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) {
        coeffs_.emplace_back(c);
    }
    trim();
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, unsigned power) {
    std::vector<BigInt> v(power + 1);
    v[power] = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(const BigInt& a, const BigInt& b) {
    return IntPolynomial(std::vector<BigInt>{b, a});
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

BigInt IntPolynomial::coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
}

BigInt IntPolynomial::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<BigInt> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        out[k - 1] = coeffs_[k] * k;
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::compose(const IntPolynomial& inner) const {
    IntPolynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * inner + IntPolynomial::constant(*it);
    }
    return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = a.coeff(k) + b.coeff(k);
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a) {
    std::vector<BigInt> out = a.coeffs_;
    for (auto& c : out) {
        c = -c;
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(char var) const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (c == 0) {
            continue;
        }
        if (!first) {
            os << (c < 0 ? " - " : " + ");
        } else if (c < 0) {
            os << "-";
        }
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (mag != 1 || k == 0) {
            os << mag;
        }
        if (k >= 1) {
            os << var;
        }
        if (k >= 2) {
            os << '^' << k;
        }
        first = false;
    }
    return os.str();
}

IntPolynomial int_poly_add(const IntPolynomial& a, const IntPolynomial& b) { return a + b; }

IntPolynomial int_poly_mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

IntPolynomial int_poly_pow(const IntPolynomial& a, unsigned n) {
    IntPolynomial result = IntPolynomial::constant(1);
    IntPolynomial base = a;
    while (n != 0) {
        if (n & 1u) {
            result = result * base;
        }
        n >>= 1u;
        if (n != 0) {
            base = base * base;
        }
    }
    return result;
}

IntPolynomial family_poly(int d) {
    if (d < 2) {
        throw DomainError("family_poly: degree parameter d must be >= 2");
    }
    return IntPolynomial::monomial(1, static_cast<unsigned>(d + 1)) - IntPolynomial::monomial(1, 1);
}

FloatPolynomial::FloatPolynomial(const IntPolynomial& p) {
    coeffs_.reserve(p.coeffs().size());
    for (const BigInt& c : p.coeffs()) {
        coeffs_.emplace_back(c.convert_to<double>(), 0.0);
    }
}

cplx FloatPolynomial::eval(cplx z) const {
    cplx acc(0.0, 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

FloatPolynomial FloatPolynomial::derivative() const {
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<cplx> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        out[k - 1] = coeffs_[k] * static_cast<double>(k);
    }
    return FloatPolynomial(std::move(out));
}

ComplexPoint poly_eval(const FloatPolynomial& p, const ComplexPoint& z) {
    if (z.is_infinite()) {
        throw DomainError("evaluate-at-infinity unsupported; use leading-term analysis");
    }
    return p.eval(z.value());
}

}  // namespace basinlab
