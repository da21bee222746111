#ifndef BASINLAB_DYNAMICS_HPP
#define BASINLAB_DYNAMICS_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "basinlab/complex_point.hpp"
#include "basinlab/methods.hpp"

namespace basinlab {

/// Orbit labels as stored in grids: 0 = origin, k in 1..d = alpha_{k-1}.
using Label = std::uint8_t;
inline constexpr Label kToInfinity = 254;
inline constexpr Label kUndecided = 255;

inline bool is_root_label(Label l) { return l < kToInfinity; }

struct OrbitOutcome {
    Label label = kUndecided;
    int iterations = 0;
    ComplexPoint final_point;
};

/// Raster window and iteration controls.
struct GridSpec {
    ComplexPoint center{0.0, 0.0};
    double half_width = 3.0;
    int resolution = 1001;
    int max_iter = 500;
    double conv_tol = 1e-9;
    double escape_radius = 1e6;

    /// Throws DomainError on a malformed spec or when conv_tol is not below half
    /// the minimum root separation of `m`, or escape_radius <= 2 max |root|.
    void validate(const MethodMap& m) const;

    double pixel_size() const { return 2.0 * half_width / resolution; }
    /// Row 0 is the top edge (largest imaginary part).
    cplx pixel_center(int row, int col) const;
    /// Pixel containing z, if inside the window.
    std::optional<std::pair<int, int>> pixel_of(cplx z) const;
    /// Same spec with half_width doubled.
    GridSpec doubled() const;
};

struct BasinGrid {
    GridSpec spec;
    MethodKind method = MethodKind::Halley;
    /// Family degree, 0 for generic maps.
    int d = 0;
    std::vector<Label> labels;
    std::vector<std::uint16_t> iterations;

    std::size_t index(int row, int col) const {
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(spec.resolution) +
               static_cast<std::size_t>(col);
    }
    Label label_at(int row, int col) const { return labels[index(row, col)]; }
    std::size_t count(Label l) const;
};

OrbitOutcome classify_orbit(const MethodMap& m, const ComplexPoint& z0, const GridSpec& spec);

/// Rows are distributed over OpenMP workers; output is bit-identical to compute_grid_serial.
BasinGrid compute_grid(const MethodMap& m, const GridSpec& spec);
/// Single-threaded reference kernel.
BasinGrid compute_grid_serial(const MethodMap& m, const GridSpec& spec);

enum class Connectivity { Four, Eight };

/// Connected set of pixels sharing a label, grown from a seed pixel.
struct Component {
    Label label = 0;
    std::vector<std::uint8_t> mask;
    std::size_t size = 0;
    bool touches_frame = false;
    /// Min pixel distance from the component to the outer pixel ring (0 when touching).
    int margin = 0;
    /// Pixels outside the component adjacent to it, and how many of them are Undecided.
    std::size_t ring_size = 0;
    std::size_t ring_undecided = 0;
    /// Angles (about the window center) of component pixels on the outer ring.
    std::vector<double> frame_angles;

    double undecided_fraction() const {
        return ring_size == 0 ? 0.0 : static_cast<double>(ring_undecided) / static_cast<double>(ring_size);
    }
};

/// Plain flood fill. With `solid`, the fill runs over pixels whose whole neighborhood
/// carries the label and the result is then grown back by one pixel inside the basin,
/// so one- and two-pixel necks do not join components. A pixel column lying exactly on an
/// invariant line otherwise bridges distinct components of the same basin.
Component flood_component(const BasinGrid& grid, int row, int col, Connectivity conn = Connectivity::Four,
                          bool solid = false);

/// Component of the basin of roots()[root_index] that contains the root's pixel.
Component root_component(const BasinGrid& grid, const MethodMap& m, int root_index,
                         Connectivity conn = Connectivity::Four, bool solid = false);

enum class BoundednessEvidence { TouchesFrame, InteriorWithMargin, RayEscape };
std::string_view to_string(BoundednessEvidence e);

struct BoundednessVerdict {
    int root_index = 0;
    bool bounded = false;
    BoundednessEvidence evidence = BoundednessEvidence::TouchesFrame;
    int margin_base = 0;
    /// Only computed when the base window is interior.
    std::optional<int> margin_doubled;
    std::size_t component_pixels = 0;
    double undecided_ring_fraction = 0.0;
    /// Angle of the escape: the free critical point's ray for RayEscape, else the
    /// first frame pixel of the component.
    std::optional<double> escape_angle;

    /// Halley root 0, d in {2,3,4}: the free critical point c_0 lies in the component
    /// and its orbit converges to 0.
    std::optional<bool> critical_in_component;
    std::optional<int> critical_iterations;
};

/// Two-scale flood-fill probe over solid components. Throws Error("... raise max_iter") when more than 5%
/// of the component's boundary ring is Undecided.
BoundednessVerdict boundedness_probe(const MethodMap& m, int root_index, const GridSpec& spec,
                                     Connectivity conn = Connectivity::Four);

struct AccessReport {
    int count = 0;
    /// Circular mean angle of each access where it meets the outer circle.
    std::vector<double> center_angles;
    double inner_radius = 0.0;
    double outer_radius = 0.0;
};

/// Accesses of the (solid) root component to the frame: pieces of the component inside
/// the annulus half_width/2 <= |z - center| <= ~half_width that join its inner circle to
/// its outer circle. Bounded fingers that only poke past one circle are not counted, and an
/// access whose edge wiggles across a circle is counted once.
/// Throws Error when the component does not reach the frame.
AccessReport access_count(const MethodMap& m, int root_index, const GridSpec& spec,
                          Connectivity conn = Connectivity::Four);
AccessReport access_count(const BasinGrid& grid, const MethodMap& m, int root_index,
                          Connectivity conn = Connectivity::Four);

/// Root labels seen on 360 points of the circle |z - point| = radius.
/// Throws Error when every sample is Undecided.
std::set<Label> shared_boundary_check(const MethodMap& m, const ComplexPoint& point, double radius = 1e-2,
                                      const GridSpec& spec = {});

struct SymmetryReport {
    int trials = 0;
    /// label(eta z) != rotate(label(z)), eta = exp(2 pi i/d).
    int rotation_violations = 0;
    /// label(conj z) != mirror(label(z)).
    int reflection_violations = 0;
};

/// Family maps only. Seeds are uniform in the spec's window, from a fixed RNG seed.
SymmetryReport symmetry_audit(const MethodMap& m, int trials, std::uint64_t seed = 20240601,
                              const GridSpec& spec = {});

/// Label of eta^k z given the label of z.
Label rotate_label(Label l, int d, int k = 1);
/// Label of conj(z) given the label of z.
Label mirror_label(Label l, int d);

}  // namespace basinlab

#endif  // BASINLAB_DYNAMICS_HPP
