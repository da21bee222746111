#ifndef BASINLAB_METHODS_HPP
#define BASINLAB_METHODS_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "basinlab/complex_point.hpp"
#include "basinlab/polynomial.hpp"

namespace basinlab {

enum class MethodKind { Newton, Halley, Traub };

std::string_view to_string(MethodKind kind);
/// Parses "newton" | "halley" | "traub"; throws DomainError otherwise.
MethodKind parse_method(std::string_view name);

struct EvalResult {
    ComplexPoint value;
    std::optional<ComplexPoint> derivative;
    /// Set iff a finite input was sent to infinity.
    bool was_pole = false;
};

/// A root-finding iteration bound either to the family p_d or to an arbitrary polynomial.
class MethodMap {
public:
    static MethodMap family(MethodKind kind, int d);
    /// `roots` is optional; orbit classification needs it.
    static MethodMap generic(MethodKind kind, FloatPolynomial p, std::vector<cplx> roots = {});

    MethodKind kind() const { return kind_; }
    bool is_family() const { return d_ > 0; }
    /// Family degree parameter; throws UnsupportedError for generic maps.
    int d() const;
    /// For a family map this is family_poly(d) in floating form.
    const FloatPolynomial& polynomial() const { return poly_; }

    /// Roots in label order: index 0 is the origin, k >= 1 is alpha_{k-1} = exp(2(k-1)pi i/d).
    const std::vector<cplx>& roots() const { return roots_; }

    /// One application of the map. Infinity is a fixed point.
    EvalResult eval(const ComplexPoint& z) const;

private:
    MethodMap(MethodKind kind, int d, FloatPolynomial p, std::vector<cplx> roots)
        : kind_(kind), d_(d), poly_(std::move(p)), roots_(std::move(roots)) {}

    MethodKind kind_;
    int d_ = 0;
    FloatPolynomial poly_;
    std::vector<cplx> roots_;
};

/// 0, alpha_0, ..., alpha_{d-1}.
std::vector<cplx> family_roots(int d);

EvalResult newton_eval(const FloatPolynomial& p, const ComplexPoint& z);
EvalResult newton_eval_family(int d, const ComplexPoint& z);

EvalResult halley_eval_generic(const FloatPolynomial& p, const ComplexPoint& z);
EvalResult halley_eval_family(int d, const ComplexPoint& z);
/// Closed-form H_d'. Throws PoleError at (or numerically at) a pole.
ComplexPoint halley_deriv_family(int d, const ComplexPoint& z);

EvalResult traub_eval_generic(const FloatPolynomial& p, const ComplexPoint& z);
EvalResult traub_eval_family(int d, const ComplexPoint& z);
/// Closed-form T_d'. Throws PoleError at a pole.
ComplexPoint traub_deriv_family(int d, const ComplexPoint& z);

struct InfinityMultiplier {
    /// Derivative at 0 of w -> 1/F(1/w), by central difference.
    double numeric = 0.0;
    /// 1 + 2/d for Halley, 1/a_d for Traub.
    double closed_form = 0.0;
};

/// Only Halley and Traub family maps are supported.
InfinityMultiplier multiplier_at_infinity(const MethodMap& m);

/// Asymptotic slope a_d of T_d at infinity, reduced.
ExactFraction traub_asymptotic_slope(int d);

}  // namespace basinlab

#endif  // BASINLAB_METHODS_HPP
