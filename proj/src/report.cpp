#include "basinlab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "basinlab/family_analysis.hpp"
#include "basinlab/family_kernels.hpp"

namespace basinlab {

namespace {

constexpr double kFixedTol = 1e-10;
constexpr double kMultiplierTol = 1e-8;
constexpr double kPoleTol = 1e-12;
constexpr double kConstantTol = 5e-4;
constexpr int kCriticalIterationBudget = 200;

bool wants(const VerifyOptions& o, const std::string& claim) {
    return o.claims.empty() || std::find(o.claims.begin(), o.claims.end(), claim) != o.claims.end();
}

Json points_json(const std::vector<cplx>& pts) {
    Json arr = Json::array();
    for (const cplx z : pts) {
        arr.push_back(point_json(z));
    }
    return arr;
}

Json complex_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json grid_json(const GridSpec& s, Connectivity conn) {
    return Json{{"center", complex_json(s.center.value())},
                {"half_width", s.half_width},
                {"resolution", s.resolution},
                {"max_iter", s.max_iter},
                {"conv_tol", s.conv_tol},
                {"escape_radius", s.escape_radius},
                {"connectivity", conn == Connectivity::Four ? 4 : 8}};
}

Json coeff_json(const CoeffVerdict& v) {
    Json j{{"claim_id", v.claim_id},
           {"d_range", Json::array({v.d_from, v.d_to})},
           {"all_hold", v.all_hold},
           {"polynomials_checked", v.polynomials_checked}};
    if (v.first_counterexample) {
        const Counterexample& c = *v.first_counterexample;
        j["first_counterexample"] = Json{{"d", c.d}, {"index", c.index}, {"value", c.value.str()}, {"note", c.note}};
    } else {
        j["first_counterexample"] = nullptr;
    }
    return j;
}

class Verdicts {
public:
    void add(const std::string& claim, const std::string& statement, std::optional<int> d, bool pass,
             Json evidence) {
        Json v{{"claim", claim}, {"statement", statement}};
        v["d"] = d ? Json(*d) : Json(nullptr);
        v["pass"] = pass;
        v["evidence"] = std::move(evidence);
        list_.push_back(std::move(v));
        if (!pass) {
            ++failed_;
        }
    }
    Json& list() { return list_; }
    int failed() const { return failed_; }
    int count() const { return static_cast<int>(list_.size()); }

private:
    Json list_ = Json::array();
    int failed_ = 0;
};

std::string method_prefix(MethodKind m) { return std::string(to_string(m)); }

// ---------------------------------------------------------------------------

void catalog_claims(const VerifyOptions& o, int d, Json& section, Verdicts& out) {
    const PointCatalog cat = catalog(d, o.method);
    Json j{{"roots", points_json(cat.roots)}, {"zetas", points_json(cat.zetas)}};
    if (!cat.free_criticals.empty()) {
        j["free_criticals"] = points_json(cat.free_criticals);
    }
    j["poles"] = points_json(cat.poles);
    j["fixed_point_count"] = cat.fixed_point_count();
    section["catalog"] = j;

    double max_root_mult = 0.0;
    for (const cplx m : cat.root_multipliers) {
        max_root_mult = std::max(max_root_mult, std::abs(m));
    }
    const std::string p = method_prefix(o.method);
    const int expected_fixed = o.method == MethodKind::Halley ? 2 * d + 2 : d + 2;
    out.add("catalog", p + "-roots-superattracting", d, max_root_mult <= kMultiplierTol,
            Json{{"max_root_multiplier", max_root_mult}, {"tolerance", kMultiplierTol}});
    out.add("catalog", p + "-pole-locations", d, cat.max_pole_residual <= kPoleTol,
            Json{{"max_pole_residual", cat.max_pole_residual}, {"tolerance", kPoleTol}});

    if (o.method == MethodKind::Halley) {
        double max_mult_err = 0.0;
        for (const cplx m : cat.zeta_multipliers) {
            max_mult_err = std::max(max_mult_err, std::abs(m - 3.0));
        }
        const bool pass = cat.max_zeta_fixed_residual <= kFixedTol && max_mult_err <= kMultiplierTol &&
                          cat.fixed_point_count() == expected_fixed;
        out.add("catalog", "halley-exactly-2d-plus-2-fixed-points", d, pass,
                Json{{"fixed_point_count", cat.fixed_point_count()},
                     {"expected", expected_fixed},
                     {"max_zeta_fixed_residual", cat.max_zeta_fixed_residual},
                     {"max_zeta_multiplier_error", max_mult_err}});
        if (d != 7) {
            out.add("catalog", "halley-free-critical-points", d, cat.max_critical_derivative <= kMultiplierTol,
                    Json{{"max_derivative_at_criticals", cat.max_critical_derivative}});
        }
    }
}

void multiplier_claims(const VerifyOptions& o, int d, Json& section, Verdicts& out) {
    if (o.method == MethodKind::Newton) {
        return;
    }
    const InfinityMultiplier im = multiplier_at_infinity(MethodMap::family(o.method, d));
    Json j{{"infinity_numeric", im.numeric}, {"infinity_closed_form", im.closed_form}};
    if (o.method == MethodKind::Traub) {
        const ExactFraction a = traub_asymptotic_slope(d);
        j["asymptotic_slope"] = a.num.str() + "/" + a.den.str();
    }
    section["multipliers"] = j;
    const double err = std::fabs(im.numeric - im.closed_form);
    const std::string statement =
        o.method == MethodKind::Halley ? "halley-infinity-multiplier-1-plus-2-over-d" : "traub-infinity-multiplier";
    out.add("multipliers", statement, d, err <= kMultiplierTol,
            Json{{"abs_error", err}, {"tolerance", kMultiplierTol}});
}

void ray_claims(const VerifyOptions& o, int d, Json& section, Verdicts& out) {
    Json rays = Json::array();
    bool all = true;
    for (int ell = 0; ell < 2 * d; ++ell) {
        const RayReport r = ray_image_check(d, o.method, ell);
        all = all && r.pass();
        rays.push_back(Json{{"ell", ell},
                            {"samples", r.samples},
                            {"on_ray", r.on_ray},
                            {"on_opposite", r.on_opposite},
                            {"at_zero_or_infinity", r.at_zero_or_infinity},
                            {"off_ray", r.off_ray},
                            {"max_angle_error", r.max_angle_error},
                            {"pole_crossing", r.pole_crossing},
                            {"pass", r.pass()}});
    }
    section["rays"] = rays;
    out.add("rays", method_prefix(o.method) + "-semi-lines-invariant", d, all, Json{{"rays_checked", 2 * d}});
}

void critical_value_claims(const VerifyOptions& o, int d, Json& section, Verdicts& out) {
    if (o.method != MethodKind::Halley) {
        return;
    }
    try {
        const CriticalValues cv = halley_critical_values(d);
        const bool expected = d >= 5;
        section["critical_values"] = Json{{"ratio", cv.ratio.num.str() + "/" + cv.ratio.den.str()},
                                          {"exceeds_critical_modulus", cv.exceeds_critical_modulus},
                                          {"values", points_json(cv.values)},
                                          {"max_map_residual", cv.max_map_residual}};
        out.add("critical-values", "halley-critical-values-outside-critical-modulus-for-d-ge-5", d,
                cv.exceeds_critical_modulus == expected && cv.max_map_residual <= 1e-9,
                Json{{"ratio", cv.ratio.num.str() + "/" + cv.ratio.den.str()},
                     {"exceeds", cv.exceeds_critical_modulus},
                     {"expected", expected}});
    } catch (const DegenerateCaseError& e) {
        section["critical_values"] = Json{{"degenerate", e.what()}};
        out.add("critical-values", "halley-d7-critical-points-are-poles", d, d == 7,
                Json{{"degenerate_case_handled", true}, {"message", e.what()}});
    }
}

void real_restriction_claims(const VerifyOptions& o, int d, Json& section, Verdicts& out) {
    if (o.method != MethodKind::Halley || d > 4) {
        return;
    }
    static const std::vector<std::vector<double>> kReference{{0.3558}, {-1.0420, 0.5489}, {0.6421}};
    const std::vector<double> found = real_restriction_b_critical_points(d);
    const std::vector<double>& want = kReference[static_cast<std::size_t>(d - 2)];
    bool pass = true;
    double worst = 0.0;
    for (const double w : want) {
        double best = std::numeric_limits<double>::infinity();
        for (const double f : found) {
            best = std::min(best, std::fabs(f - w));
        }
        worst = std::max(worst, best);
        pass = pass && best <= kConstantTol;
    }
    section["real_restriction_critical_points"] = found;
    out.add("real-restriction", "halley-real-restriction-critical-constants", d, pass,
            Json{{"reference", want}, {"computed", found}, {"max_abs_error", worst}, {"tolerance", kConstantTol}});
}

Json probe_json(const BoundednessVerdict& v) {
    Json j{{"root_index", v.root_index},
           {"bounded", v.bounded},
           {"evidence", std::string(to_string(v.evidence))},
           {"margin_base", v.margin_base},
           {"component_pixels", v.component_pixels},
           {"undecided_ring_fraction", v.undecided_ring_fraction}};
    j["margin_doubled"] = v.margin_doubled ? Json(*v.margin_doubled) : Json(nullptr);
    j["escape_angle"] = v.escape_angle ? Json(*v.escape_angle) : Json(nullptr);
    if (v.critical_in_component) {
        j["critical_in_component"] = *v.critical_in_component;
        j["critical_iterations"] = v.critical_iterations ? Json(*v.critical_iterations) : Json(nullptr);
    }
    return j;
}

void halley_boundedness(const VerifyOptions& o, int d, Json& section, Verdicts& out) {
    const MethodMap m = MethodMap::family(MethodKind::Halley, d);
    const std::string statement = "halley-origin-basin-bounded-iff-d-ge-5";
    try {
        const BoundednessVerdict v = boundedness_probe(m, 0, o.grid, o.connectivity);
        const bool expected = d >= 5;
        bool pass = v.bounded == expected;
        if (expected) {
            pass = pass && v.margin_base >= 5 && v.margin_doubled.value_or(0) >= 5;
        } else {
            pass = pass && v.critical_in_component.value_or(false) &&
                   v.critical_iterations.value_or(kCriticalIterationBudget + 1) <= kCriticalIterationBudget;
        }
        Json ev = probe_json(v);
        ev["expected_bounded"] = expected;
        section["boundedness"] = ev;
        out.add("boundedness", statement, d, pass, ev);
    } catch (const Error& e) {
        section["boundedness"] = Json{{"error", e.what()}};
        out.add("boundedness", statement, d, false, Json{{"error", e.what()}});
    }
}

void traub_boundedness(const VerifyOptions& o, int d, Json& section, Verdicts& out) {
    const MethodMap m = MethodMap::family(MethodKind::Traub, d);
    Json sec;
    try {
        const AccessReport acc = access_count(m, 0, o.grid, o.connectivity);
        sec["accesses"] = Json{{"count", acc.count}, {"center_angles", acc.center_angles}};
        out.add("boundedness", "traub-origin-basin-has-d-accesses-to-infinity", d, acc.count == d,
                Json{{"accesses", acc.count}, {"expected", d}, {"center_angles", acc.center_angles}});
    } catch (const Error& e) {
        sec["accesses"] = Json{{"error", e.what()}};
        out.add("boundedness", "traub-origin-basin-has-d-accesses-to-infinity", d, false,
                Json{{"error", e.what()}});
    }

    int odd_ok = 0;
    int odd_total = 0;
    for (int k = 0; k < d; ++k) {
        const double angle = (2.0 * k + 1.0) * std::numbers::pi / d;
        for (const double t : {0.1, 0.5, 1.0, 2.0, 5.0}) {
            ++odd_total;
            if (classify_orbit(m, std::polar(t, angle), o.grid).label == 0) {
                ++odd_ok;
            }
        }
    }
    out.add("boundedness", "traub-odd-rays-in-origin-basin", d, odd_ok == odd_total,
            Json{{"seeds", odd_total}, {"converged_to_origin", odd_ok}});

    int real_ok = 0;
    const std::vector<double> seeds{1.01, 2.0, 10.0, 100.0};
    for (const double t : seeds) {
        const bool converges = classify_orbit(m, cplx(t, 0.0), o.grid).label == 1;
        bool decreasing = true;
        cplx z(t, 0.0);
        for (int n = 0; n < o.grid.max_iter && z.real() - 1.0 > 1e-12; ++n) {
            const kernels::Step s = kernels::traub_step(d, z);
            if (s.pole || !(s.value.real() < z.real()) || s.value.imag() != 0.0) {
                decreasing = false;
                break;
            }
            z = s.value;
        }
        if (converges && decreasing) {
            ++real_ok;
        }
    }
    out.add("boundedness", "traub-half-line-beyond-one-in-alpha0-basin", d,
            real_ok == static_cast<int>(seeds.size()),
            Json{{"seeds", seeds}, {"monotone_and_converged", real_ok}});
    section["boundedness"] = sec;
}

void shared_boundary_claims(const VerifyOptions& o, int d, Json& section, Verdicts& out) {
    if (o.method == MethodKind::Newton) {
        return;
    }
    const MethodMap m = MethodMap::family(o.method, d);
    const PointCatalog cat = catalog(d, o.method);
    const cplx point = o.method == MethodKind::Halley ? cat.zetas[0] : cat.poles[0];
    const std::string statement = o.method == MethodKind::Halley ? "halley-zeta-on-two-basin-boundaries"
                                                                 : "traub-pole-on-two-basin-boundaries";
    try {
        const std::set<Label> seen = shared_boundary_check(m, point, 1e-2, o.grid);
        std::vector<int> labels(seen.begin(), seen.end());
        const bool pass = seen.size() >= 2 && seen.count(0) == 1 && seen.count(1) == 1;
        Json ev{{"point", point_json(point)}, {"radius", 1e-2}, {"labels", labels}};
        section["shared_boundary"] = ev;
        out.add("shared-boundary", statement, d, pass, ev);
    } catch (const Error& e) {
        out.add("shared-boundary", statement, d, false, Json{{"error", e.what()}});
    }
}

void symmetry_claims(const VerifyOptions& o, int d, Json& section, Verdicts& out) {
    const MethodMap m = MethodMap::family(o.method, d);
    const SymmetryReport r = symmetry_audit(m, o.symmetry_trials, 20240601, o.grid);
    Json ev{{"trials", r.trials},
            {"rotation_violations", r.rotation_violations},
            {"reflection_violations", r.reflection_violations}};
    section["symmetry"] = ev;
    out.add("symmetry", method_prefix(o.method) + "-rotation-and-reflection-symmetry", d,
            r.rotation_violations == 0 && r.reflection_violations == 0, ev);
}

}  // namespace

const std::vector<std::string>& known_claims() {
    static const std::vector<std::string> claims{"catalog",         "multipliers",      "rays",
                                                 "coeffs",          "critical-values",  "real-restriction",
                                                 "boundedness",     "shared-boundary",  "symmetry"};
    return claims;
}

std::string format_g(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

Json point_json(cplx z) { return Json{{"re", format_g(z.real(), 15)}, {"im", format_g(z.imag(), 15)}}; }

VerifyOutcome run_verify(const VerifyOptions& o) {
    if (o.d_from < 2 || o.d_to < o.d_from) {
        throw DomainError("degree range must satisfy 2 <= from <= to");
    }
    for (const std::string& c : o.claims) {
        if (std::find(known_claims().begin(), known_claims().end(), c) == known_claims().end()) {
            throw DomainError("unknown claim group: " + c);
        }
    }

    Verdicts verdicts;
    Json degrees = Json::array();
    for (int d = o.d_from; d <= o.d_to; ++d) {
        Json section{{"d", d}};
        if (wants(o, "catalog")) catalog_claims(o, d, section, verdicts);
        if (wants(o, "multipliers")) multiplier_claims(o, d, section, verdicts);
        if (wants(o, "rays")) ray_claims(o, d, section, verdicts);
        if (wants(o, "critical-values")) critical_value_claims(o, d, section, verdicts);
        if (wants(o, "real-restriction")) real_restriction_claims(o, d, section, verdicts);
        if (wants(o, "boundedness")) {
            if (o.method == MethodKind::Halley) {
                halley_boundedness(o, d, section, verdicts);
            } else if (o.method == MethodKind::Traub) {
                traub_boundedness(o, d, section, verdicts);
            }
        }
        if (wants(o, "shared-boundary")) shared_boundary_claims(o, d, section, verdicts);
        if (wants(o, "symmetry")) symmetry_claims(o, d, section, verdicts);
        degrees.push_back(std::move(section));
    }

    Json coefficients = Json::array();
    if (o.method == MethodKind::Traub && wants(o, "coeffs")) {
        for (const CoeffVerdict& v : {verify_Pd_negative(o.d_to), verify_G_script_positive(o.d_to),
                                      verify_Cdn_sweep(o.d_to)}) {
            coefficients.push_back(coeff_json(v));
            verdicts.add("coeffs", v.claim_id, std::nullopt, v.all_hold, coeff_json(v));
        }
    }

    VerifyOutcome outcome;
    outcome.verdicts = verdicts.count();
    outcome.failed = verdicts.failed();
    Json& r = outcome.report;
    r["schema"] = kReportSchema;
    r["tool"] = "basinlab";
    r["method"] = std::string(to_string(o.method));
    r["d_range"] = Json::array({o.d_from, o.d_to});
    r["claims"] = o.claims.empty() ? known_claims() : o.claims;
    r["grid"] = grid_json(o.grid, o.connectivity);
    r["degrees"] = std::move(degrees);
    r["coefficients"] = std::move(coefficients);
    r["verdicts"] = std::move(verdicts.list());
    r["summary"] = Json{{"verdicts", outcome.verdicts},
                        {"passed", outcome.verdicts - outcome.failed},
                        {"failed", outcome.failed},
                        {"all_pass", outcome.all_pass()}};
    return outcome;
}

}  // namespace basinlab
