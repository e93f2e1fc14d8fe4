#include "c0embed/funcalc.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "c0embed/error.hpp"
#include "c0embed/spectrum.hpp"

namespace c0embed {

namespace {

constexpr double kContourClearance = 1e-7;
constexpr double kMaxExpNorm = 350.0;

// (1/2 pi i) \oint f(lambda) (lambda I - T)^{-1} d lambda over the contour,
// trapezoidal rule, nodes in ascending index order so the summation order
// is fixed and results are bitwise deterministic.
Matrix contour_calculus(const Matrix& t, const Contour& contour,
                        const std::function<Complex(Complex)>& f) {
    const Eigen::Index n = t.rows();
    const Matrix eye = Matrix::Identity(n, n);
    Matrix acc = Matrix::Zero(n, n);
    for (const Circle& c : contour.circles) {
        for (int k = 0; k < contour.nodes; ++k) {
            const double theta = 2.0 * kPi * k / contour.nodes;
            const Complex rot = std::polar(1.0, theta);
            const Complex lambda = c.center + c.radius * rot;
            Eigen::PartialPivLU<Matrix> lu(lambda * eye - t);
            const Matrix resolvent = lu.solve(eye);
            if (!resolvent.allFinite())
                throw NumericalError("contour calculus: resolvent solve failed at a node");
            acc += (c.radius / contour.nodes) * rot * f(lambda) * resolvent;
        }
    }
    return acc;
}

// Principal square root of an upper-triangular matrix by the substitution
// recurrence. Valid off the closed negative real axis.
Matrix triangular_sqrt(const Matrix& t) {
    const Eigen::Index n = t.rows();
    Matrix r = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) r(i, i) = std::sqrt(t(i, i));
    for (Eigen::Index d = 1; d < n; ++d) {
        for (Eigen::Index i = 0; i + d < n; ++i) {
            const Eigen::Index j = i + d;
            Complex s = t(i, j);
            for (Eigen::Index k = i + 1; k < j; ++k) s -= r(i, k) * r(k, j);
            const Complex denom = r(i, i) + r(j, j);
            if (std::abs(denom) < 1e-300)
                throw NumericalError("triangular sqrt: recurrence broke down");
            r(i, j) = s / denom;
        }
    }
    return r;
}

// log(I + X) for ||X|| < 1/2 by the alternating series.
Matrix log_near_identity(const Matrix& x) {
    const Eigen::Index n = x.rows();
    Matrix acc = Matrix::Zero(n, n);
    Matrix power = x;
    for (int k = 1; k <= 48; ++k) {
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        acc += (sign / k) * power;
        if (power.norm() / k < 1e-18 * std::max(1.0, acc.norm())) break;
        power = power * x;
    }
    return acc;
}

} // namespace

MatrixOperator matrix_exp(const MatrixOperator& m, double t) {
    const Eigen::Index n = m.dim();
    Matrix a = t * m.mat();
    const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
    if (norm1 > kMaxExpNorm)
        throw NumericalError("matrix_exp: ||t m|| too large, result would overflow");

    int squarings = 0;
    if (norm1 > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
        a /= std::pow(2.0, squarings);
    }

    // Fixed-degree Taylor core; ||a|| <= 1/2 makes 24 terms overkill.
    Matrix result = Matrix::Identity(n, n);
    Matrix term = Matrix::Identity(n, n);
    for (int k = 1; k <= 24; ++k) {
        term = term * a / static_cast<double>(k);
        result += term;
        if (term.norm() < 1e-18 * result.norm()) break;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    if (!result.allFinite())
        throw NumericalError("matrix_exp: overflow during squaring");
    return MatrixOperator(std::move(result));
}

MatrixOperator principal_log_oracle(const MatrixOperator& m) {
    const Eigen::Index n = m.dim();
    Eigen::ComplexSchur<Matrix> schur(m.mat());
    if (schur.info() != Eigen::Success)
        throw NumericalError("principal_log_oracle: Schur iteration failed");
    Matrix t = schur.matrixT();
    const Matrix q = schur.matrixU();

    double scale = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) scale = std::max(scale, std::abs(t(i, i)));
    for (Eigen::Index i = 0; i < n; ++i) {
        const Complex lambda = t(i, i);
        if (std::abs(lambda) <= 1e-14 * std::max(scale, 1.0))
            throw std::invalid_argument("principal_log_oracle: singular input");
        if (lambda.imag() == 0.0 && lambda.real() < 0.0)
            throw std::invalid_argument(
                "principal_log_oracle: eigenvalue on the negative real axis");
    }

    // Inverse scaling: triangular square roots until close to I.
    int roots = 0;
    while ((t - Matrix::Identity(n, n)).norm() > 0.25) {
        t = triangular_sqrt(t);
        if (++roots > 60)
            throw NumericalError("principal_log_oracle: square-root sequence stalled");
    }
    Matrix l = std::pow(2.0, roots) * log_near_identity(t - Matrix::Identity(n, n));
    return MatrixOperator(q * l * q.adjoint());
}

MatrixOperator dunford_log(const MatrixOperator& m, const Contour& contour) {
    const std::vector<Complex> eigs = spectrum(m);
    ContourConstraints constraints;
    constraints.cut_angle = contour.branch_cut_angle;
    validate_contour(contour, eigs, constraints, kContourClearance);
    const double cut = contour.branch_cut_angle;
    Matrix a = contour_calculus(m.mat(), contour,
                                [cut](Complex z) { return branch_log(z, cut); });
    return MatrixOperator(std::move(a));
}

MatrixOperator riesz_projection(const MatrixOperator& m, const Contour& contour) {
    const std::vector<Complex> all = spectrum(m);
    std::vector<Complex> enclosed;
    std::vector<Complex> excluded;
    for (Complex z : all) {
        bool inside = false;
        for (const Circle& c : contour.circles)
            if (std::abs(z - c.center) < c.radius) inside = true;
        (inside ? enclosed : excluded).push_back(z);
    }
    ContourConstraints constraints;
    constraints.exclude_points = excluded;
    validate_contour(contour, enclosed, constraints, kContourClearance);
    Matrix p = contour_calculus(m.mat(), contour, [](Complex) { return Complex(1.0, 0.0); });
    return MatrixOperator(std::move(p));
}

MatrixOperator fractional_power(const MatrixOperator& m, double t, const Contour& contour) {
    if (!(t > 0.0 && t <= 1.0))
        throw std::invalid_argument("fractional_power: t must lie in (0, 1]");
    const std::vector<Complex> eigs = spectrum(m);
    ContourConstraints constraints;
    constraints.cut_angle = contour.branch_cut_angle;
    validate_contour(contour, eigs, constraints, kContourClearance);
    const double cut = contour.branch_cut_angle;
    Matrix a = contour_calculus(m.mat(), contour, [cut, t](Complex z) {
        return std::exp(t * branch_log(z, cut));
    });
    return MatrixOperator(std::move(a));
}

SectorReport sectoriality_probe(const MatrixOperator& m, std::span<const double> angles,
                                std::span<const double> radii) {
    const std::vector<Complex> eigs = spectrum(m);
    const Eigen::Index n = m.dim();
    const Matrix eye = Matrix::Identity(n, n);

    std::vector<double> sorted_angles(angles.begin(), angles.end());
    std::sort(sorted_angles.begin(), sorted_angles.end());

    SectorReport report;
    for (double omega : sorted_angles) {
        if (!(omega > 0.0 && omega < kPi)) continue;
        bool contained = true;
        for (Complex z : eigs) {
            if (z == Complex(0.0, 0.0)) continue; // 0 belongs to every sector
            if (std::abs(std::arg(z)) > omega + 1e-12) contained = false;
        }
        if (!contained) continue;

        // Probe rays outside the sector, both half-planes plus the negative axis.
        std::vector<double> directions;
        for (int k = 1; k <= 3; ++k) {
            const double psi = omega + k * (kPi - omega) / 4.0;
            directions.push_back(psi);
            directions.push_back(-psi);
        }
        directions.push_back(kPi);

        std::vector<SectorSample> samples;
        double fitted = 0.0;
        for (double psi : directions) {
            for (double r : radii) {
                const Complex lambda = std::polar(r, psi);
                Eigen::PartialPivLU<Matrix> lu(lambda * eye - m.mat());
                const Matrix resolvent = lu.solve(eye);
                if (!resolvent.allFinite())
                    continue; // probe point effectively on the spectrum
                const double norm = spectral_norm(resolvent);
                samples.push_back(SectorSample{lambda, norm, 0.0});
                fitted = std::max(fitted, std::abs(lambda) * norm);
            }
        }
        for (SectorSample& s : samples) s.bound = fitted / std::abs(s.lambda);
        report.best_angle = omega;
        report.constant_estimate = fitted;
        report.samples = std::move(samples);
        return report;
    }
    return report; // best_angle = nullopt
}

} // namespace c0embed
