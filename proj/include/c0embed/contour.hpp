#ifndef C0EMBED_CONTOUR_HPP
#define C0EMBED_CONTOUR_HPP

#include <optional>
#include <span>
#include <vector>

#include "c0embed/matrix_operator.hpp"

namespace c0embed {

inline constexpr double kPi = 3.14159265358979323846;

struct Circle {
    Complex center;
    double radius;
};

// Positively oriented union of circles with a per-contour trapezoidal node
// count and the branch cut ray carried alongside. The circles must be
// pairwise disjoint so the enclosed region is the disjoint union of discs;
// that region then cannot wind around any point outside it, and a branch
// of log is holomorphic on it whenever the discs avoid the cut ray.
struct Contour {
    std::vector<Circle> circles;
    int nodes = 256;
    double branch_cut_angle = kPi; // ray direction {r e^{i angle} : r >= 0}
};

// Distance from z to the ray {r e^{i angle} : r >= 0}.
double distance_to_ray(Complex z, double angle);

// log with the cut along the given ray: argument taken in (angle - 2pi, angle].
// angle = pi reproduces the principal branch.
Complex branch_log(Complex z, double cut_angle);

// Smallest rotation of the preferred cut ray that clears every eigenvalue
// phase with a margin of a quarter of the surrounding phase gap. Throws
// NumericalError when the spectrum leaves no usable gap (only possible for
// an eigenvalue at 0, which callers exclude).
double rotate_cut(std::span<const Complex> eigenvalues, double preferred = kPi);

// Single-linkage clustering of points in the plane; returns index groups.
std::vector<std::vector<std::size_t>> cluster_points(std::span<const Complex> pts,
                                                     double linkage_distance);

struct ContourConstraints {
    std::vector<Complex> exclude_points;   // must end up strictly outside
    std::optional<double> cut_angle;       // discs must avoid this ray (and hence 0)
    double zero_clearance = 0.0;           // extra required distance from 0
};

// Automatic design: single-linkage atoms over the enclosed points, one
// circle per atom with margins against the cut ray, excluded points, 0 and
// the other atoms; atoms merge when margins vanish. Throws NumericalError
// if no valid configuration exists.
Contour design_contour(std::span<const Complex> enclosed, const ContourConstraints& c,
                       int nodes);

// Enforce the functional-calculus preconditions numerically: enclosed
// points strictly inside exactly one circle, excluded points (and 0 / the
// cut ray when constrained) strictly outside, circles pairwise disjoint,
// all with the given clearance. Throws on violation.
void validate_contour(const Contour& contour, std::span<const Complex> enclosed,
                      const ContourConstraints& c, double clearance);

} // namespace c0embed

#endif
