#include "c0embed/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

namespace c0embed {

namespace {

double snap_to_lattice(const SemigroupRealization& s, double t) {
    if (const auto* g = std::get_if<GridTimes>(&s.admissible_times())) {
        const double k = std::round(t / g->step);
        return k * g->step;
    }
    return t;
}

} // namespace

MatrixOperator estimate_generator(const SemigroupRealization& s, double h) {
    if (!(h > 0.0) || h > 0.125 + 1e-12)
        throw std::invalid_argument("estimate_generator: h must lie in (0, 1/8]");
    if (!s.time_admissible(h))
        throw std::invalid_argument("estimate_generator: h is not admissible");
    const Matrix diff = s.evaluate(h).mat() - Matrix::Identity(s.dim(), s.dim());
    return MatrixOperator(Matrix(diff / h));
}

std::vector<Vector> default_test_vectors(Eigen::Index dim, unsigned seed) {
    std::vector<Vector> vectors;
    const Eigen::Index basis_count = std::min<Eigen::Index>(dim, 8);
    for (Eigen::Index i = 0; i < basis_count; ++i) {
        Vector v = Vector::Zero(dim);
        v(i) = 1.0;
        vectors.push_back(std::move(v));
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int k = 0; k < 4; ++k) {
        Vector v(dim);
        for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
        v /= v.norm();
        vectors.push_back(std::move(v));
    }
    return vectors;
}

std::vector<double> default_continuity_steps(const SemigroupRealization& s) {
    std::vector<double> steps;
    for (int k = 1; k <= 10; ++k) {
        double h = std::pow(2.0, -k);
        if (const auto* g = std::get_if<GridTimes>(&s.admissible_times()))
            h = std::max(g->step, std::round(h / g->step) * g->step);
        if (h <= 0.0) continue;
        if (steps.empty() || h < steps.back() - 1e-15) steps.push_back(h);
    }
    return steps;
}

std::vector<ContinuityPoint> continuity_sweep(const SemigroupRealization& s,
                                              const std::vector<Vector>& vectors,
                                              std::span<const double> h_list) {
    std::vector<ContinuityPoint> profile;
    for (double h : h_list) {
        if (!s.time_admissible(h))
            throw std::invalid_argument("continuity_sweep: inadmissible step");
        const Matrix th = s.evaluate(h).mat();
        double sup = 0.0;
        for (const Vector& x : vectors) sup = std::max(sup, (th * x - x).norm());
        profile.push_back(ContinuityPoint{h, sup});
    }
    return profile;
}

VerificationReport check_embedding(const SemigroupRealization& s, const MatrixOperator& target,
                                   const VerifyTolerances& tol,
                                   std::span<const double> time_samples, unsigned seed) {
    if (target.dim() != s.dim())
        throw std::invalid_argument("check_embedding: target dimension mismatch");

    VerificationReport report;

    // Sample times: the requested ones, or ten points spanning [0, 1],
    // snapped to the lattice for grid realizations.
    std::vector<double> samples;
    if (!time_samples.empty()) {
        for (double t : time_samples) {
            if (!s.time_admissible(t))
                throw std::invalid_argument("check_embedding: inadmissible time sample");
            samples.push_back(t);
        }
    } else {
        for (int i = 0; i < 10; ++i) {
            const double t = snap_to_lattice(s, i / 9.0);
            if (samples.empty() || t > samples.back() + 1e-15) samples.push_back(t);
        }
    }

    std::map<double, Matrix> cache;
    auto eval = [&](double t) -> const Matrix& {
        auto it = cache.find(t);
        if (it == cache.end()) it = cache.emplace(t, s.evaluate(t).mat()).first;
        return it->second;
    };

    report.identity_residual =
        spectral_norm(Matrix(eval(0.0) - Matrix::Identity(s.dim(), s.dim())));
    report.endpoint_residual = spectral_norm(Matrix(eval(1.0) - target.mat()));

    for (double a : samples)
        for (double b : samples) {
            const Matrix& ta = eval(a);
            const Matrix& tb = eval(b);
            const double r = spectral_norm(Matrix(ta * tb - eval(a + b)));
            report.cocycle_residual_max = std::max(report.cocycle_residual_max, r);
        }

    const std::vector<double> steps = default_continuity_steps(s);
    report.continuity_profile =
        continuity_sweep(s, default_test_vectors(s.dim(), seed), steps);
    for (std::size_t i = 0; i + 1 < report.continuity_profile.size(); ++i) {
        if (report.continuity_profile[i + 1].sup_residual >
            report.continuity_profile[i].sup_residual + tol.continuity_floor)
            report.continuity_nonincreasing = false;
    }

    if (s.generator()) {
        // Largest admissible halving step <= 1/8 (generator recovery is
        // first order; the budget is the analytic bound with 1.5x slack).
        double h = 1.0 / 256.0;
        if (const auto* g = std::get_if<GridTimes>(&s.admissible_times()))
            h = g->step <= 0.125 ? g->step : 0.0;
        if (h > 0.0) {
            const Matrix est = estimate_generator(s, h).mat();
            const double gen_norm = spectral_norm(*s.generator());
            report.generator_residual = spectral_norm(Matrix(est - s.generator()->mat()));
            report.generator_bound =
                1.5 * 0.5 * h * gen_norm * gen_norm * std::exp(h * gen_norm) + 1e-9;
        }
    }

    std::ostringstream samples_desc;
    samples_desc << "times{";
    for (std::size_t i = 0; i < samples.size(); ++i)
        samples_desc << (i ? "," : "") << samples[i];
    samples_desc << "} vectors{basis<=8 + 4 random, seed " << seed << "}";
    report.samples_used = samples_desc.str();

    bool pass = report.identity_residual <= tol.identity &&
                report.endpoint_residual <= tol.endpoint &&
                report.cocycle_residual_max <= tol.cocycle &&
                report.continuity_nonincreasing;
    if (report.generator_residual && report.generator_bound)
        pass = pass && *report.generator_residual <= *report.generator_bound;
    report.pass = pass;
    return report;
}

double coarse_endpoint_residual(const SemigroupRealization& s,
                                const MatrixOperator& coarse_target) {
    if (!s.coarse_embedding())
        throw std::invalid_argument(
            "coarse_endpoint_residual: realization has no coarse identification");
    const Matrix& j = *s.coarse_embedding();
    if (j.cols() != coarse_target.dim())
        throw std::invalid_argument("coarse_endpoint_residual: coarse dimension mismatch");
    Matrix diff = j.adjoint() * s.evaluate(1.0).mat() * j - coarse_target.mat();
    if (s.coarse_restriction()) diff = diff * (*s.coarse_restriction());
    return spectral_norm(diff);
}

} // namespace c0embed
