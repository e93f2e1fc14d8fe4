#include "c0embed/contour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "c0embed/error.hpp"

namespace c0embed {

double distance_to_ray(Complex z, double angle) {
    const Complex d = z * std::polar(1.0, -angle); // rotate ray onto positive reals
    if (d.real() >= 0.0) return std::abs(d.imag());
    return std::abs(d);
}

Complex branch_log(Complex z, double cut_angle) {
    double a = std::arg(z) - cut_angle;
    a = std::fmod(a, 2.0 * kPi);
    if (a > 0.0) a -= 2.0 * kPi; // (-2pi, 0]
    return Complex(std::log(std::abs(z)), cut_angle + a);
}

namespace {

double wrap_angle(double a) {
    a = std::fmod(a + kPi, 2.0 * kPi);
    if (a <= 0.0) a += 2.0 * kPi;
    return a - kPi; // (-pi, pi]
}

} // namespace

std::vector<std::vector<std::size_t>> cluster_points(std::span<const Complex> pts,
                                                     double linkage_distance) {
    const std::size_t n = pts.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(pts[i] - pts[j]) <= linkage_distance) parent[find(i)] = find(j);

    std::vector<std::vector<std::size_t>> groups;
    std::vector<std::size_t> root_of(n, SIZE_MAX);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        if (root_of[r] == SIZE_MAX) {
            root_of[r] = groups.size();
            groups.emplace_back();
        }
        groups[root_of[r]].push_back(i);
    }
    return groups;
}

namespace {

struct Atom {
    Complex center;
    double spread; // max distance of members from center
    std::vector<std::size_t> members;
};

Atom make_atom(std::span<const Complex> pts, std::vector<std::size_t> members) {
    Complex c(0.0, 0.0);
    for (std::size_t i : members) c += pts[i];
    c /= static_cast<double>(members.size());
    double spread = 0.0;
    for (std::size_t i : members) spread = std::max(spread, std::abs(pts[i] - c));
    return Atom{c, spread, std::move(members)};
}

} // namespace

double rotate_cut(std::span<const Complex> eigenvalues, double preferred) {
    if (eigenvalues.empty()) return preferred;
    std::vector<double> phases;
    phases.reserve(eigenvalues.size());
    for (Complex z : eigenvalues) {
        if (z == Complex(0.0, 0.0))
            throw NumericalError("rotate_cut: eigenvalue at 0, no cut ray clears it");
        phases.push_back(std::arg(z));
    }
    std::sort(phases.begin(), phases.end());
    phases.erase(std::unique(phases.begin(), phases.end()), phases.end());

    // Gaps between consecutive phases (circularly); a cut may sit anywhere
    // in a gap with a quarter-gap margin on both sides. Pick the admissible
    // angle closest to the preferred one.
    double best_angle = 0.0;
    double best_dist = std::numeric_limits<double>::infinity();
    const std::size_t n = phases.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = phases[i];
        const double hi = (n == 1) ? lo + 2.0 * kPi : (i + 1 < n ? phases[i + 1] : phases[0] + 2.0 * kPi);
        const double gap = hi - lo;
        if (gap <= 1e-12) continue;
        const double margin = 0.25 * gap;
        const double a = lo + margin, b = hi - margin;
        // candidate = clamp of preferred into [a, b] modulo 2pi
        for (int k = -1; k <= 1; ++k) {
            const double p = preferred + 2.0 * kPi * k;
            const double cand = std::clamp(p, a, b);
            const double dist = std::abs(wrap_angle(cand - preferred));
            if (dist < best_dist) {
                best_dist = dist;
                best_angle = wrap_angle(cand);
            }
        }
    }
    if (!std::isfinite(best_dist))
        throw NumericalError("rotate_cut: spectrum leaves no usable phase gap");
    return best_angle;
}

Contour design_contour(std::span<const Complex> enclosed, const ContourConstraints& c,
                       int nodes) {
    if (enclosed.empty())
        throw std::invalid_argument("design_contour: nothing to enclose");
    if (nodes < 4) throw std::invalid_argument("design_contour: nodes must be >= 4");

    double scale = 0.0;
    for (Complex z : enclosed) scale = std::max(scale, std::abs(z));
    scale = std::max(scale, 1e-3);

    // Base clearance of the enclosed set against all constraints.
    double base = std::numeric_limits<double>::infinity();
    for (Complex z : enclosed) {
        if (c.cut_angle) base = std::min(base, distance_to_ray(z, *c.cut_angle));
        for (Complex p : c.exclude_points) base = std::min(base, std::abs(z - p));
        if (c.zero_clearance > 0.0) base = std::min(base, std::abs(z) - c.zero_clearance);
    }
    if (!std::isfinite(base)) base = 0.5 * scale; // unconstrained
    if (base <= 1e-14 * scale)
        throw NumericalError("design_contour: enclosed points touch a constraint");

    auto groups = cluster_points(enclosed, 0.25 * base);
    std::vector<Atom> atoms;
    atoms.reserve(groups.size());
    for (auto& g : groups) atoms.push_back(make_atom(enclosed, std::move(g)));

    while (true) {
        bool ok = true;
        std::vector<double> limits(atoms.size());
        for (std::size_t i = 0; i < atoms.size() && ok; ++i) {
            double lim = std::numeric_limits<double>::infinity();
            const Atom& a = atoms[i];
            if (c.cut_angle)
                lim = std::min(lim, distance_to_ray(a.center, *c.cut_angle) - a.spread);
            for (Complex p : c.exclude_points)
                lim = std::min(lim, std::abs(a.center - p) - a.spread);
            if (c.zero_clearance > 0.0)
                lim = std::min(lim, std::abs(a.center) - a.spread - c.zero_clearance);
            for (std::size_t j = 0; j < atoms.size(); ++j) {
                if (j == i) continue;
                lim = std::min(lim, std::abs(a.center - atoms[j].center) - a.spread -
                                        atoms[j].spread);
            }
            if (!std::isfinite(lim)) lim = std::max(a.spread, 0.25 * scale);
            if (lim <= 1e-12 * scale) ok = false;
            limits[i] = lim;
        }
        if (ok) {
            Contour result;
            result.nodes = nodes;
            if (c.cut_angle) result.branch_cut_angle = *c.cut_angle;
            for (std::size_t i = 0; i < atoms.size(); ++i)
                result.circles.push_back(
                    Circle{atoms[i].center, atoms[i].spread + 0.35 * limits[i]});
            return result;
        }
        if (atoms.size() == 1)
            throw NumericalError("design_contour: no valid circle configuration "
                                 "(enclosed set too close to a constraint)");
        // Merge the two closest atoms and retry.
        std::size_t bi = 0, bj = 1;
        double bd = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < atoms.size(); ++i)
            for (std::size_t j = i + 1; j < atoms.size(); ++j) {
                const double d = std::abs(atoms[i].center - atoms[j].center);
                if (d < bd) {
                    bd = d;
                    bi = i;
                    bj = j;
                }
            }
        std::vector<std::size_t> merged = atoms[bi].members;
        merged.insert(merged.end(), atoms[bj].members.begin(), atoms[bj].members.end());
        atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(bj));
        atoms[bi] = make_atom(enclosed, std::move(merged));
    }
}

void validate_contour(const Contour& contour, std::span<const Complex> enclosed,
                      const ContourConstraints& c, double clearance) {
    if (contour.circles.empty())
        throw std::invalid_argument("contour: needs at least one circle");
    if (contour.nodes < 4)
        throw std::invalid_argument("contour: nodes must be >= 4");
    for (const Circle& ci : contour.circles)
        if (!(ci.radius > 0.0))
            throw std::invalid_argument("contour: circle radius must be positive");

    for (Complex z : enclosed) {
        int inside = 0;
        for (const Circle& ci : contour.circles) {
            const double d = std::abs(z - ci.center);
            if (d <= ci.radius - clearance)
                ++inside;
            else if (d < ci.radius + clearance)
                throw NumericalError("contour: eigenvalue within clearance of a circle");
        }
        if (inside != 1)
            throw NumericalError(inside == 0
                                     ? "contour: eigenvalue not enclosed"
                                     : "contour: eigenvalue enclosed by several circles");
    }
    for (Complex p : c.exclude_points)
        for (const Circle& ci : contour.circles)
            if (std::abs(p - ci.center) < ci.radius + clearance)
                throw NumericalError("contour: excluded point not clear of a circle");
    if (c.cut_angle) {
        for (const Circle& ci : contour.circles) {
            // Avoiding the cut ray also keeps 0 outside (0 lies on the ray),
            // so the enclosed region cannot wind around 0.
            if (distance_to_ray(ci.center, *c.cut_angle) <= ci.radius + clearance)
                throw NumericalError("contour: circle crosses the branch cut ray");
        }
    }
    if (c.zero_clearance > 0.0) {
        for (const Circle& ci : contour.circles)
            if (std::abs(ci.center) < ci.radius + c.zero_clearance)
                throw NumericalError("contour: circle too close to 0");
    }
    for (std::size_t i = 0; i < contour.circles.size(); ++i)
        for (std::size_t j = i + 1; j < contour.circles.size(); ++j) {
            const Circle& a = contour.circles[i];
            const Circle& b = contour.circles[j];
            if (std::abs(a.center - b.center) <= a.radius + b.radius + clearance)
                throw NumericalError("contour: circles overlap");
        }
}

} // namespace c0embed
