#include "basinlab/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "basinlab/family_kernels.hpp"
#include "basinlab/parallel.hpp"

namespace basinlab {

namespace {

constexpr int kConfirmSteps = 5;
constexpr double kConfirmFactor = 10.0;
constexpr double kMaxUndecidedRing = 0.05;

using MaybeStep = std::optional<kernels::Step>;

// Calls fn with a stepper `cplx -> MaybeStep`; nullopt signals an indeterminate 0/0.
template <class Fn>
decltype(auto) with_stepper(const MethodMap& m, Fn&& fn) {
    if (m.is_family()) {
        const int d = m.d();
        switch (m.kind()) {
            case MethodKind::Newton:
                return fn([d](cplx z) -> MaybeStep { return kernels::newton_step(d, z); });
            case MethodKind::Halley:
                return fn([d](cplx z) -> MaybeStep { return kernels::halley_step(d, z); });
            case MethodKind::Traub:
                return fn([d](cplx z) -> MaybeStep { return kernels::traub_step(d, z); });
        }
    }
    return fn([&m](cplx z) -> MaybeStep {
        try {
            const EvalResult r = m.eval(ComplexPoint(z));
            if (r.value.is_infinite()) {
                return kernels::Step{{}, true};
            }
            return kernels::Step{r.value.value(), false};
        } catch (const IndeterminateError&) {
            return std::nullopt;
        }
    });
}

class Classifier {
public:
    Classifier(const std::vector<cplx>& roots, const GridSpec& spec)
        : roots_(roots),
          tol_(spec.conv_tol),
          tol2_(spec.conv_tol * spec.conv_tol),
          confirm2_(kConfirmFactor * kConfirmFactor * tol2_),
          escape2_(spec.escape_radius * spec.escape_radius),
          max_iter_(spec.max_iter) {
        root_mod_.reserve(roots_.size());
        for (const cplx r : roots_) {
            root_mod_.push_back(kernels::modulus(r));
        }
    }

    template <class StepFn>
    OrbitOutcome run(StepFn& step, cplx z) const {
        double m2 = -1.0;
        double m1 = -1.0;
        double m0 = std::norm(z);
        for (int n = 0;; ++n) {
            const int k = nearest_root(z);
            if (k >= 0 && confirmed(step, z, k)) {
                return {static_cast<Label>(k), n, ComplexPoint(z)};
            }
            if (n >= max_iter_) {
                return {kUndecided, n, ComplexPoint(z)};
            }
            const MaybeStep s = step(z);
            if (!s) {
                return {kUndecided, n, ComplexPoint(z)};
            }
            if (s->pole || !std::isfinite(std::norm(s->value))) {
                return {kToInfinity, n + 1, ComplexPoint::infinity()};
            }
            z = s->value;
            m2 = m1;
            m1 = m0;
            m0 = std::norm(z);
            if (m0 > escape2_ && m2 >= 0.0 && m2 < m1 && m1 < m0) {
                return {kToInfinity, n + 1, ComplexPoint(z)};
            }
        }
    }

private:
    int nearest_root(cplx z) const {
        const double mz = kernels::modulus(z);
        int best = -1;
        double best_err = tol2_;
        for (std::size_t k = 0; k < roots_.size(); ++k) {
            if (std::fabs(mz - root_mod_[k]) >= tol_) {
                continue;
            }
            const double err = std::norm(z - roots_[k]);
            if (err < best_err) {
                best_err = err;
                best = static_cast<int>(k);
            }
        }
        return best;
    }

    template <class StepFn>
    bool confirmed(StepFn& step, cplx z, int k) const {
        const cplx root = roots_[static_cast<std::size_t>(k)];
        for (int i = 0; i < kConfirmSteps; ++i) {
            const MaybeStep s = step(z);
            if (!s || s->pole) {
                return false;
            }
            z = s->value;
            if (!(std::norm(z - root) <= confirm2_)) {
                return false;
            }
        }
        return true;
    }

    const std::vector<cplx>& roots_;
    std::vector<double> root_mod_;
    double tol_;
    double tol2_;
    double confirm2_;
    double escape2_;
    int max_iter_;
};

void require_roots(const MethodMap& m) {
    if (m.roots().empty()) {
        throw DomainError("orbit classification needs the roots of the polynomial");
    }
}

BasinGrid empty_grid(const MethodMap& m, const GridSpec& spec) {
    spec.validate(m);
    BasinGrid g;
    g.spec = spec;
    g.method = m.kind();
    g.d = m.is_family() ? m.d() : 0;
    const auto n = static_cast<std::size_t>(spec.resolution) * static_cast<std::size_t>(spec.resolution);
    g.labels.assign(n, kUndecided);
    g.iterations.assign(n, 0);
    return g;
}

void store(BasinGrid& g, int row, int col, const OrbitOutcome& o) {
    const std::size_t i = g.index(row, col);
    g.labels[i] = o.label;
    g.iterations[i] = static_cast<std::uint16_t>(std::min(o.iterations, 65535));
}

double angle_about(cplx z, cplx center) {
    double a = std::arg(z - center);
    if (a < 0.0) {
        a += 2.0 * std::numbers::pi;
    }
    return a;
}

}  // namespace

// ---------------------------------------------------------------------------

void GridSpec::validate(const MethodMap& m) const {
    if (center.is_infinite()) {
        throw DomainError("grid center must be finite");
    }
    if (!(half_width > 0.0) || !std::isfinite(half_width)) {
        throw DomainError("half_width must be positive");
    }
    if (resolution < 1) {
        throw DomainError("resolution must be >= 1");
    }
    if (max_iter < 1) {
        throw DomainError("max_iter must be >= 1");
    }
    if (!(conv_tol > 0.0)) {
        throw DomainError("conv_tol must be positive");
    }
    const auto& roots = m.roots();
    double min_sep = std::numeric_limits<double>::infinity();
    double max_mod = 0.0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        max_mod = std::max(max_mod, std::abs(roots[i]));
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            min_sep = std::min(min_sep, std::abs(roots[i] - roots[j]));
        }
    }
    if (!(conv_tol < 0.5 * min_sep)) {
        throw DomainError("conv_tol must be below half the minimum root separation");
    }
    if (!(escape_radius > 2.0 * max_mod)) {
        throw DomainError("escape_radius must exceed twice the largest root modulus");
    }
}

cplx GridSpec::pixel_center(int row, int col) const {
    const double half_step = half_width / resolution;
    const cplx c = center.value();
    return {c.real() + (2.0 * col - (resolution - 1)) * half_step,
            c.imag() - (2.0 * row - (resolution - 1)) * half_step};
}

std::optional<std::pair<int, int>> GridSpec::pixel_of(cplx z) const {
    const cplx c = center.value();
    const double step = pixel_size();
    const double fx = (z.real() - (c.real() - half_width)) / step;
    const double fy = ((c.imag() + half_width) - z.imag()) / step;
    if (!(fx >= 0.0 && fy >= 0.0 && fx < resolution && fy < resolution)) {
        return std::nullopt;
    }
    return std::pair{static_cast<int>(fy), static_cast<int>(fx)};
}

GridSpec GridSpec::doubled() const {
    GridSpec g = *this;
    g.half_width *= 2.0;
    return g;
}

std::size_t BasinGrid::count(Label l) const { return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), l)); }

OrbitOutcome classify_orbit(const MethodMap& m, const ComplexPoint& z0, const GridSpec& spec) {
    require_roots(m);
    if (z0.is_infinite()) {
        throw DomainError("classify_orbit: finite seed required");
    }
    const Classifier cls(m.roots(), spec);
    return with_stepper(m, [&](auto step) { return cls.run(step, z0.value()); });
}

BasinGrid compute_grid_serial(const MethodMap& m, const GridSpec& spec) {
    require_roots(m);
    BasinGrid g = empty_grid(m, spec);
    const Classifier cls(m.roots(), spec);
    with_stepper(m, [&](auto step) {
        for (int row = 0; row < spec.resolution; ++row) {
            for (int col = 0; col < spec.resolution; ++col) {
                store(g, row, col, cls.run(step, spec.pixel_center(row, col)));
            }
        }
    });
    return g;
}

BasinGrid compute_grid(const MethodMap& m, const GridSpec& spec) {
    require_roots(m);
    BasinGrid g = empty_grid(m, spec);
    const Classifier cls(m.roots(), spec);
    const int res = spec.resolution;
    with_stepper(m, [&](auto step) {
#pragma omp parallel for schedule(dynamic, 4) num_threads(worker_count())
        for (int row = 0; row < res; ++row) {
            auto local = step;
            for (int col = 0; col < res; ++col) {
                store(g, row, col, cls.run(local, spec.pixel_center(row, col)));
            }
        }
    });
    return g;
}

// ---------------------------------------------------------------------------
// Components

namespace {

constexpr int kOffsets[8][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}, {-1, -1}, {-1, 1}, {1, -1}, {1, 1}};

int offset_count(Connectivity conn) { return conn == Connectivity::Four ? 4 : 8; }

// Flood fill over `allowed` from (row, col); returns the visited mask.
std::vector<std::uint8_t> fill(const std::vector<std::uint8_t>& allowed, int res, int row, int col,
                               Connectivity conn) {
    const int n_offsets = offset_count(conn);
    std::vector<std::uint8_t> mask(allowed.size(), 0);
    const auto at = [res](int r, int c) { return static_cast<std::size_t>(r) * static_cast<std::size_t>(res) + static_cast<std::size_t>(c); };
    std::vector<std::pair<int, int>> stack{{row, col}};
    mask[at(row, col)] = 1;
    while (!stack.empty()) {
        const auto [r, c] = stack.back();
        stack.pop_back();
        for (int k = 0; k < n_offsets; ++k) {
            const int nr = r + kOffsets[k][0];
            const int nc = c + kOffsets[k][1];
            if (nr < 0 || nc < 0 || nr >= res || nc >= res) {
                continue;
            }
            const std::size_t i = at(nr, nc);
            if (mask[i] == 0 && allowed[i] != 0) {
                mask[i] = 1;
                stack.emplace_back(nr, nc);
            }
        }
    }
    return mask;
}

// Pixels of `basin` whose in-grid neighbors all belong to `basin`.
std::vector<std::uint8_t> erode(const std::vector<std::uint8_t>& basin, int res, Connectivity conn) {
    const int n_offsets = offset_count(conn);
    std::vector<std::uint8_t> out(basin.size(), 0);
    for (int r = 0; r < res; ++r) {
        for (int c = 0; c < res; ++c) {
            const std::size_t i = static_cast<std::size_t>(r) * static_cast<std::size_t>(res) + static_cast<std::size_t>(c);
            if (basin[i] == 0) {
                continue;
            }
            bool inner = true;
            for (int k = 0; k < n_offsets && inner; ++k) {
                const int nr = r + kOffsets[k][0];
                const int nc = c + kOffsets[k][1];
                if (nr >= 0 && nc >= 0 && nr < res && nc < res) {
                    inner = basin[static_cast<std::size_t>(nr) * static_cast<std::size_t>(res) + static_cast<std::size_t>(nc)] != 0;
                }
            }
            out[i] = inner ? 1 : 0;
        }
    }
    return out;
}

// Adds basin pixels adjacent to `core`.
std::vector<std::uint8_t> grow(const std::vector<std::uint8_t>& core, const std::vector<std::uint8_t>& basin, int res,
                               Connectivity conn) {
    const int n_offsets = offset_count(conn);
    std::vector<std::uint8_t> out = core;
    for (int r = 0; r < res; ++r) {
        for (int c = 0; c < res; ++c) {
            const std::size_t i = static_cast<std::size_t>(r) * static_cast<std::size_t>(res) + static_cast<std::size_t>(c);
            if (core[i] == 0) {
                continue;
            }
            for (int k = 0; k < n_offsets; ++k) {
                const int nr = r + kOffsets[k][0];
                const int nc = c + kOffsets[k][1];
                if (nr < 0 || nc < 0 || nr >= res || nc >= res) {
                    continue;
                }
                const std::size_t j = static_cast<std::size_t>(nr) * static_cast<std::size_t>(res) + static_cast<std::size_t>(nc);
                if (basin[j] != 0) {
                    out[j] = 1;
                }
            }
        }
    }
    return out;
}

}  // namespace

Component flood_component(const BasinGrid& grid, int row, int col, Connectivity conn, bool solid) {
    const int res = grid.spec.resolution;
    if (row < 0 || col < 0 || row >= res || col >= res) {
        throw DomainError("flood_component: seed pixel outside the grid");
    }
    Component comp;
    comp.label = grid.label_at(row, col);

    std::vector<std::uint8_t> basin(grid.labels.size(), 0);
    for (std::size_t i = 0; i < basin.size(); ++i) {
        basin[i] = grid.labels[i] == comp.label ? 1 : 0;
    }
    if (solid) {
        const std::vector<std::uint8_t> core = erode(basin, res, conn);
        if (core[grid.index(row, col)] == 0) {
            throw Error("seed pixel is on a thin part of its basin; refine the grid");
        }
        comp.mask = grow(fill(core, res, row, col, conn), basin, res, conn);
    } else {
        comp.mask = fill(basin, res, row, col, conn);
    }

    // Size, margin, frame angles and the boundary ring.
    const int n_offsets = offset_count(conn);
    comp.margin = std::numeric_limits<int>::max();
    std::vector<std::uint8_t> ring(grid.labels.size(), 0);
    const cplx center = grid.spec.center.value();
    for (int r = 0; r < res; ++r) {
        for (int c = 0; c < res; ++c) {
            if (comp.mask[grid.index(r, c)] == 0) {
                continue;
            }
            ++comp.size;
            comp.margin = std::min({comp.margin, r, c, res - 1 - r, res - 1 - c});
            if (r == 0 || c == 0 || r == res - 1 || c == res - 1) {
                comp.frame_angles.push_back(angle_about(grid.spec.pixel_center(r, c), center));
            }
            for (int k = 0; k < n_offsets; ++k) {
                const int nr = r + kOffsets[k][0];
                const int nc = c + kOffsets[k][1];
                if (nr < 0 || nc < 0 || nr >= res || nc >= res) {
                    continue;
                }
                const std::size_t i = grid.index(nr, nc);
                if (comp.mask[i] == 0 && ring[i] == 0) {
                    ring[i] = 1;
                    ++comp.ring_size;
                    if (grid.labels[i] == kUndecided) {
                        ++comp.ring_undecided;
                    }
                }
            }
        }
    }
    comp.touches_frame = comp.margin == 0;
    std::sort(comp.frame_angles.begin(), comp.frame_angles.end());
    return comp;
}

Component root_component(const BasinGrid& grid, const MethodMap& m, int root_index, Connectivity conn,
                         bool solid) {
    const auto& roots = m.roots();
    if (root_index < 0 || static_cast<std::size_t>(root_index) >= roots.size()) {
        throw DomainError("root index out of range");
    }
    const auto pixel = grid.spec.pixel_of(roots[static_cast<std::size_t>(root_index)]);
    if (!pixel) {
        throw DomainError("root lies outside the grid window");
    }
    const auto label = static_cast<Label>(root_index);
    const int res = grid.spec.resolution;
    for (int dr = 0; dr <= 1; ++dr) {
        for (const int sr : {0, -dr, dr}) {
            for (const int sc : {0, -1, 1}) {
                const int r = pixel->first + sr;
                const int c = pixel->second + sc;
                if (r >= 0 && c >= 0 && r < res && c < res && grid.label_at(r, c) == label) {
                    return flood_component(grid, r, c, conn, solid);
                }
            }
        }
    }
    throw Error("root pixel is not labeled with its own basin; refine the grid");
}

std::string_view to_string(BoundednessEvidence e) {
    switch (e) {
        case BoundednessEvidence::TouchesFrame: return "component touches frame";
        case BoundednessEvidence::InteriorWithMargin: return "component interior to frame";
        case BoundednessEvidence::RayEscape: return "ray escape";
    }
    return "unknown";
}

namespace {

void check_ring(const Component& comp) {
    if (comp.undecided_fraction() > kMaxUndecidedRing) {
        throw Error("more than 5% of the basin boundary ring is undecided; raise max_iter");
    }
}

}  // namespace

BoundednessVerdict boundedness_probe(const MethodMap& m, int root_index, const GridSpec& spec, Connectivity conn) {
    BoundednessVerdict v;
    v.root_index = root_index;

    const BasinGrid base = compute_grid(m, spec);
    const Component comp = root_component(base, m, root_index, conn, true);
    check_ring(comp);
    v.margin_base = comp.margin;
    v.component_pixels = comp.size;
    v.undecided_ring_fraction = comp.undecided_fraction();

    if (comp.touches_frame) {
        v.bounded = false;
        v.evidence = BoundednessEvidence::TouchesFrame;
        v.escape_angle = comp.frame_angles.front();
    } else {
        const BasinGrid wide = compute_grid(m, spec.doubled());
        const Component comp2 = root_component(wide, m, root_index, conn, true);
        check_ring(comp2);
        v.margin_doubled = comp2.margin;
        v.undecided_ring_fraction = std::max(v.undecided_ring_fraction, comp2.undecided_fraction());
        if (comp2.touches_frame) {
            v.bounded = false;
            v.evidence = BoundednessEvidence::TouchesFrame;
            v.escape_angle = comp2.frame_angles.front();
        } else {
            v.bounded = true;
            v.evidence = BoundednessEvidence::InteriorWithMargin;
        }
    }

    if (m.is_family() && m.kind() == MethodKind::Halley && root_index == 0 && m.d() <= 4) {
        const double d = m.d();
        const double angle = std::numbers::pi / d;
        const cplx c0 = std::polar(std::pow(2.0 * (d - 1.0) / ((d + 1.0) * (d + 2.0)), 1.0 / d), angle);
        const OrbitOutcome o = classify_orbit(m, c0, spec);
        const auto pixel = spec.pixel_of(c0);
        const bool in_mask = pixel && comp.mask[base.index(pixel->first, pixel->second)] != 0;
        v.critical_in_component = in_mask && o.label == 0;
        if (o.label == 0) {
            v.critical_iterations = o.iterations;
        }
        if (!v.bounded && *v.critical_in_component) {
            v.evidence = BoundednessEvidence::RayEscape;
            v.escape_angle = angle;
        }
    }
    return v;
}

AccessReport access_count(const BasinGrid& grid, const MethodMap& m, int root_index, Connectivity conn) {
    const Component comp = root_component(grid, m, root_index, conn, true);
    if (!comp.touches_frame) {
        throw Error("basin component is bounded in this window; it has no access to the frame");
    }
    const GridSpec& spec = grid.spec;
    const int res = spec.resolution;
    const double step = spec.pixel_size();
    const cplx center = spec.center.value();

    AccessReport report;
    report.inner_radius = 0.5 * spec.half_width;
    report.outer_radius = spec.half_width * (1.0 - 0.5 / res);

    std::vector<std::uint8_t> annulus(comp.mask.size(), 0);
    std::vector<double> radius(comp.mask.size(), 0.0);
    for (int r = 0; r < res; ++r) {
        for (int c = 0; c < res; ++c) {
            const std::size_t i = grid.index(r, c);
            radius[i] = std::abs(spec.pixel_center(r, c) - center);
            annulus[i] = comp.mask[i] != 0 && radius[i] >= report.inner_radius && radius[i] <= report.outer_radius;
        }
    }

    std::vector<std::uint8_t> seen(annulus.size(), 0);
    for (int r = 0; r < res; ++r) {
        for (int c = 0; c < res; ++c) {
            const std::size_t i = grid.index(r, c);
            if (annulus[i] == 0 || seen[i] != 0) {
                continue;
            }
            const std::vector<std::uint8_t> piece = fill(annulus, res, r, c, conn);
            bool inner = false;
            double sx = 0.0;
            double sy = 0.0;
            for (std::size_t j = 0; j < piece.size(); ++j) {
                if (piece[j] == 0) {
                    continue;
                }
                seen[j] = 1;
                if (radius[j] < report.inner_radius + step) {
                    inner = true;
                }
                if (radius[j] > report.outer_radius - 1.5 * step) {
                    const int pr = static_cast<int>(j / static_cast<std::size_t>(res));
                    const int pc = static_cast<int>(j % static_cast<std::size_t>(res));
                    const cplx u = spec.pixel_center(pr, pc) - center;
                    sx += u.real() / radius[j];
                    sy += u.imag() / radius[j];
                }
            }
            if (inner && (sx != 0.0 || sy != 0.0)) {
                ++report.count;
                report.center_angles.push_back(angle_about(cplx(sx, sy), 0.0));
            }
        }
    }
    std::sort(report.center_angles.begin(), report.center_angles.end());
    return report;
}

AccessReport access_count(const MethodMap& m, int root_index, const GridSpec& spec, Connectivity conn) {
    return access_count(compute_grid(m, spec), m, root_index, conn);
}

std::set<Label> shared_boundary_check(const MethodMap& m, const ComplexPoint& point, double radius,
                                      const GridSpec& spec) {
    if (point.is_infinite() || !(radius > 0.0)) {
        throw DomainError("shared_boundary_check: finite point and positive radius required");
    }
    constexpr int kSamples = 360;
    std::set<Label> seen;
    int undecided = 0;
    for (int k = 0; k < kSamples; ++k) {
        const cplx z = point.value() + std::polar(radius, 2.0 * std::numbers::pi * k / kSamples);
        const OrbitOutcome o = classify_orbit(m, z, spec);
        if (is_root_label(o.label)) {
            seen.insert(o.label);
        } else if (o.label == kUndecided) {
            ++undecided;
        }
    }
    if (undecided == kSamples) {
        throw Error("shared_boundary_check: every sample is undecided");
    }
    return seen;
}

Label rotate_label(Label l, int d, int k) {
    if (!is_root_label(l) || l == 0) {
        return l;
    }
    const int idx = ((l - 1 + k) % d + d) % d;
    return static_cast<Label>(idx + 1);
}

Label mirror_label(Label l, int d) {
    if (!is_root_label(l) || l == 0) {
        return l;
    }
    const int idx = (d - (l - 1)) % d;
    return static_cast<Label>(idx + 1);
}

SymmetryReport symmetry_audit(const MethodMap& m, int trials, std::uint64_t seed, const GridSpec& spec) {
    const int d = m.d();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-spec.half_width, spec.half_width);
    const cplx center = spec.center.value();
    const cplx eta = std::polar(1.0, 2.0 * std::numbers::pi / d);

    SymmetryReport report;
    report.trials = trials;
    for (int i = 0; i < trials; ++i) {
        const double x = coord(rng);
        const double y = coord(rng);
        const cplx z = center + cplx(x, y);
        const Label l = classify_orbit(m, z, spec).label;
        if (classify_orbit(m, eta * z, spec).label != rotate_label(l, d)) {
            ++report.rotation_violations;
        }
        if (classify_orbit(m, std::conj(z), spec).label != mirror_label(l, d)) {
            ++report.reflection_violations;
        }
    }
    return report;
}

}  // namespace basinlab
