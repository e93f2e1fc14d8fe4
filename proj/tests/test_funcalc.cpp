#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "c0embed/error.hpp"
#include "c0embed/funcalc.hpp"
#include "c0embed/random_ops.hpp"
#include "c0embed/spectrum.hpp"

using namespace c0embed;

namespace {

Contour single_circle(Complex center, double radius, int nodes) {
    Contour c;
    c.circles.push_back(Circle{center, radius});
    c.nodes = nodes;
    return c;
}

// Random matrix with spectrum in a disc well inside the right half-plane.
Matrix right_half_plane_matrix(Eigen::Index n, std::mt19937_64& rng) {
    Matrix b = random_complex_gaussian(n, n, rng);
    b *= 0.4 / spectral_norm(b);
    return b + 1.5 * Matrix::Identity(n, n);
}

} // namespace

TEST_CASE("dunford log of the identity vanishes") {
    const MatrixOperator log =
        dunford_log(MatrixOperator::identity(2), single_circle(Complex(1.0), 0.5, 64));
    CHECK(spectral_norm(log) < 1e-10);
}

TEST_CASE("dunford log of a positive diagonal is the principal log") {
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = std::exp(1.0);
    d(1, 1) = std::exp(2.0);
    const Complex mid = 0.5 * (d(0, 0) + d(1, 1));
    const MatrixOperator log =
        dunford_log(MatrixOperator(d), single_circle(mid, 3.0, 256));
    CHECK(std::abs(log.mat()(0, 0) - Complex(1.0)) < 1e-8);
    CHECK(std::abs(log.mat()(1, 1) - Complex(2.0)) < 1e-8);
    CHECK(std::abs(log.mat()(0, 1)) < 1e-8);
}

TEST_CASE("dunford log agrees with the triangular-recurrence oracle") {
    std::mt19937_64 rng(101);
    const Matrix m = right_half_plane_matrix(6, rng);
    const std::vector<Complex> eigs = spectrum(MatrixOperator(m));
    ContourConstraints constraints;
    constraints.cut_angle = kPi;
    const Contour contour = design_contour(eigs, constraints, 256);
    const MatrixOperator a = dunford_log(MatrixOperator(m), contour);
    const MatrixOperator oracle = principal_log_oracle(MatrixOperator(m));
    CHECK((a.mat() - oracle.mat()).norm() < 1e-7);
}

TEST_CASE("dunford log preconditions are enforced") {
    // Eigenvalue within clearance of the contour.
    CHECK_THROWS_AS(
        dunford_log(MatrixOperator::identity(2), single_circle(Complex(0.5), 0.5, 64)),
        NumericalError);
    // Circle crossing the branch cut (and winding around 0).
    CHECK_THROWS_AS(
        dunford_log(MatrixOperator::identity(2), single_circle(Complex(0.0), 2.0, 64)),
        NumericalError);
    // Eigenvalue not enclosed at all.
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 5.0;
    CHECK_THROWS_AS(dunford_log(MatrixOperator(d), single_circle(Complex(1.0), 0.5, 64)),
                    NumericalError);
}

TEST_CASE("principal log oracle reference values") {
    const MatrixOperator one(Matrix::Identity(1, 1));
    CHECK(spectral_norm(principal_log_oracle(one)) < 1e-14);

    const double theta = kPi / 3.0;
    Matrix rot(2, 2);
    rot << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    const MatrixOperator log = principal_log_oracle(MatrixOperator(rot));
    Matrix expect(2, 2);
    expect << 0.0, -theta, theta, 0.0;
    CHECK((log.mat() - expect).norm() < 1e-10);
}

TEST_CASE("principal log inverts the exponential of a nilpotent") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    Matrix n = Matrix::Zero(5, 5);
    for (Eigen::Index i = 0; i < 5; ++i)
        for (Eigen::Index j = i + 1; j < 5; ++j) n(i, j) = Complex(unif(rng), unif(rng));
    const MatrixOperator e = matrix_exp(MatrixOperator(n), 1.0);
    CHECK((principal_log_oracle(e).mat() - n).norm() < 1e-8);
}

TEST_CASE("principal log rejects the closed negative axis") {
    Matrix neg = Matrix::Identity(2, 2);
    neg(0, 0) = -1.0;
    CHECK_THROWS_AS(principal_log_oracle(MatrixOperator(neg)), std::invalid_argument);
    CHECK_THROWS_AS(principal_log_oracle(MatrixOperator(Matrix::Zero(2, 2))),
                    std::invalid_argument);
}

TEST_CASE("matrix exponential reference values") {
    std::mt19937_64 rng(13);
    const MatrixOperator m(random_complex_gaussian(4, 4, rng));
    CHECK((matrix_exp(m, 0.0).mat() - Matrix::Identity(4, 4)).norm() == 0.0);

    Matrix j2 = Matrix::Zero(2, 2);
    j2(0, 1) = 1.0;
    Matrix expect = Matrix::Identity(2, 2);
    expect(0, 1) = 1.0;
    CHECK((matrix_exp(MatrixOperator(j2), 1.0).mat() - expect).norm() < 1e-15);

    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = std::log(2.0);
    d(1, 1) = std::log(3.0);
    Matrix pow = Matrix::Zero(2, 2);
    pow(0, 0) = 2.0;
    pow(1, 1) = 3.0;
    CHECK((matrix_exp(MatrixOperator(d), 1.0).mat() - pow).norm() < 1e-12);

    CHECK_THROWS_AS(matrix_exp(MatrixOperator(Matrix::Identity(2, 2) * 500.0), 1.0),
                    NumericalError);
}

TEST_CASE("riesz projection splits and reassembles the spectrum") {
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 5.0;
    const MatrixOperator m(d);

    const MatrixOperator p1 = riesz_projection(m, single_circle(Complex(1.0), 1.0, 128));
    Matrix expect = Matrix::Zero(2, 2);
    expect(0, 0) = 1.0;
    CHECK((p1.mat() - expect).norm() < 1e-10);

    const MatrixOperator pall = riesz_projection(m, single_circle(Complex(3.0), 3.5, 128));
    CHECK((pall.mat() - Matrix::Identity(2, 2)).norm() < 1e-8);

    Matrix jordan(2, 2);
    jordan << 2.0, 1.0, 0.0, 2.0;
    const MatrixOperator pj =
        riesz_projection(MatrixOperator(jordan), single_circle(Complex(2.0), 1.0, 128));
    CHECK((pj.mat() - Matrix::Identity(2, 2)).norm() < 1e-8);
    CHECK((pj.mat() * pj.mat() - pj.mat()).norm() < 1e-7);
    CHECK((pj.mat() * jordan - jordan * pj.mat()).norm() < 1e-7);
}

TEST_CASE("sectoriality probe") {
    const std::vector<double> angles{kPi / 16, kPi / 8, kPi / 4, kPi / 2, 3 * kPi / 4};
    const std::vector<double> radii{0.5, 1.0, 2.0, 4.0, 8.0};

    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 2.0;
    const SectorReport pos = sectoriality_probe(MatrixOperator(d), angles, radii);
    REQUIRE(pos.best_angle.has_value());
    CHECK(*pos.best_angle < kPi / 4);
    CHECK(pos.constant_estimate > 0.0);
    CHECK(std::isfinite(pos.constant_estimate));
    for (const SectorSample& s : pos.samples) {
        CHECK(s.resolvent_norm <= s.bound + 1e-12);
        CHECK(s.bound == doctest::Approx(pos.constant_estimate / std::abs(s.lambda)));
    }

    const SectorReport id = sectoriality_probe(MatrixOperator::identity(3), angles, radii);
    REQUIRE(id.best_angle.has_value());
    for (const SectorSample& s : id.samples) {
        const double explicit_norm = 1.0 / std::abs(s.lambda - Complex(1.0));
        CHECK(s.resolvent_norm == doctest::Approx(explicit_norm).epsilon(1e-6));
    }

    const SectorReport neg =
        sectoriality_probe(MatrixOperator(Matrix::Identity(2, 2) * Complex(-1.0)), angles,
                           radii);
    CHECK(!neg.best_angle.has_value());
}

TEST_CASE("fractional powers by contour calculus") {
    Matrix four(1, 1);
    four(0, 0) = 4.0;
    const MatrixOperator root =
        fractional_power(MatrixOperator(four), 0.5, single_circle(Complex(4.0), 1.5, 128));
    CHECK(std::abs(root.mat()(0, 0) - Complex(2.0)) < 1e-10);

    std::mt19937_64 rng(23);
    Matrix g = random_complex_gaussian(5, 5, rng);
    const Matrix spd = g * g.adjoint() / 5.0 + 0.5 * Matrix::Identity(5, 5);
    const std::vector<Complex> eigs = spectrum(MatrixOperator(spd));
    ContourConstraints constraints;
    constraints.cut_angle = kPi;
    const Contour contour = design_contour(eigs, constraints, 256);

    const MatrixOperator same = fractional_power(MatrixOperator(spd), 1.0, contour);
    CHECK((same.mat() - spd).norm() < 1e-8);

    const MatrixOperator half = fractional_power(MatrixOperator(spd), 0.5, contour);
    Eigen::SelfAdjointEigenSolver<Matrix> es(spd);
    const Matrix oracle = es.eigenvectors() *
                          es.eigenvalues().cwiseSqrt().cast<Complex>().asDiagonal() *
                          es.eigenvectors().adjoint();
    CHECK((half.mat() - oracle).norm() < 1e-8);
    CHECK((half.mat() * half.mat() - spd).norm() < 1e-7);

    CHECK_THROWS_AS(fractional_power(MatrixOperator(spd), 1.5, contour),
                    std::invalid_argument);
}

TEST_CASE("fractional powers compose additively below one") {
    std::mt19937_64 rng(29);
    Matrix g = random_complex_gaussian(4, 4, rng);
    const Matrix spd = g * g.adjoint() / 4.0 + 0.6 * Matrix::Identity(4, 4);
    const MatrixOperator m(spd);
    ContourConstraints constraints;
    constraints.cut_angle = kPi;
    const Contour contour = design_contour(spectrum(m), constraints, 256);
    for (auto [s, t] : {std::pair{0.25, 0.5}, std::pair{0.3, 0.7}, std::pair{0.5, 0.5}}) {
        const Matrix lhs =
            fractional_power(m, s, contour).mat() * fractional_power(m, t, contour).mat();
        const Matrix rhs = fractional_power(m, s + t, contour).mat();
        CHECK((lhs - rhs).norm() < 1e-6);
    }
}

TEST_CASE("exp-log roundtrip over a random corpus") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 12; ++trial) {
        const Eigen::Index n = 2 + trial % 6;
        const Matrix m = random_invertible(n, rng, 0.1, 10.0);
        const std::vector<Complex> eigs = spectrum(MatrixOperator(m));
        ContourConstraints constraints;
        constraints.cut_angle = rotate_cut(eigs, kPi);
        const Contour contour = design_contour(eigs, constraints, 256);
        const MatrixOperator log = dunford_log(MatrixOperator(m), contour);
        CHECK((matrix_exp(log, 1.0).mat() - m).norm() < 1e-6);
    }
}

TEST_CASE("quadrature converges as nodes double") {
    std::mt19937_64 rng(43);
    const Matrix m = right_half_plane_matrix(5, rng);
    const std::vector<Complex> eigs = spectrum(MatrixOperator(m));
    ContourConstraints constraints;
    constraints.cut_angle = kPi;
    double last = std::numeric_limits<double>::infinity();
    for (int nodes : {8, 16, 32, 64, 128, 256}) {
        const Contour contour = design_contour(eigs, constraints, nodes);
        const MatrixOperator log = dunford_log(MatrixOperator(m), contour);
        const double residual = (matrix_exp(log, 1.0).mat() - m).norm();
        CHECK(residual <= std::max(last * 1.0000001, 1e-12));
        last = residual;
    }
    CHECK(last < 1e-10);
}

TEST_CASE("riesz projections are idempotent across a corpus") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 8; ++trial) {
        const Matrix m = random_invertible(5, rng, 0.15, 5.0);
        const std::vector<Complex> eigs = spectrum(MatrixOperator(m));
        // Project onto the eigenvalue of largest modulus.
        ContourConstraints constraints;
        std::vector<Complex> rest(eigs.begin() + 1, eigs.end());
        constraints.exclude_points = rest;
        Contour contour;
        try {
            contour = design_contour(std::span<const Complex>(&eigs[0], 1), constraints, 128);
        } catch (const NumericalError&) {
            continue; // leading eigenvalue too close to the rest; skip draw
        }
        const MatrixOperator p = riesz_projection(MatrixOperator(m), contour);
        CHECK((p.mat() * p.mat() - p.mat()).norm() < 1e-7);
    }
}
