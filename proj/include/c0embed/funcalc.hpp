#ifndef C0EMBED_FUNCALC_HPP
#define C0EMBED_FUNCALC_HPP

#include <optional>
#include <span>
#include <vector>

#include "c0embed/contour.hpp"
#include "c0embed/matrix_operator.hpp"

namespace c0embed {

// Dunford functional-calculus logarithm
//   A = (1/2 pi i) \oint log(lambda) (lambda I - T)^{-1} d lambda
// by trapezoidal quadrature on the contour circles (spectrally accurate for
// analytic integrands). The branch of log is fixed by the contour's cut
// ray. Preconditions: all eigenvalues strictly inside, 0 strictly outside,
// discs clear of the cut ray. exp(A) reproduces T within the quadrature
// tolerance.
MatrixOperator dunford_log(const MatrixOperator& m, const Contour& contour);

// Independent principal-logarithm oracle: complex Schur triangularization,
// repeated triangular square roots (substitution recurrence) until the
// factor is close to I, then a log series, scaled back. Requires an
// invertible input with no eigenvalue on the closed negative real axis.
MatrixOperator principal_log_oracle(const MatrixOperator& m);

// exp(t m) by scaling and squaring with a fixed-degree Taylor core.
// Reports overflow for huge ||t m|| instead of saturating.
MatrixOperator matrix_exp(const MatrixOperator& m, double t);

// Riesz spectral projection P = (1/2 pi i) \oint (lambda I - T)^{-1} d lambda.
// P^2 = P within quadrature tolerance, rank(P) = number of enclosed
// eigenvalues with multiplicity, and P commutes with T.
MatrixOperator riesz_projection(const MatrixOperator& m, const Contour& contour);

// Fractional power m^t = (1/2 pi i) \oint lambda^t (lambda I - T)^{-1} d lambda,
// t in (0, 1], branch fixed by the contour's cut.
MatrixOperator fractional_power(const MatrixOperator& m, double t, const Contour& contour);

struct SectorSample {
    Complex lambda;
    double resolvent_norm;
    double bound; // constant_estimate / |lambda|
};

struct SectorReport {
    std::optional<double> best_angle;  // in (0, pi); nullopt when infeasible
    double constant_estimate = 0.0;    // fitted M = max |lambda| * ||R(lambda)||
    std::vector<SectorSample> samples;
};

// Probe the sectoriality bound ||R(lambda, T)|| <= M / |lambda|: for each
// candidate half-angle, check that the spectrum lies in the sector
// {|arg z| <= angle} (0 counts as inside) and sample the resolvent norm on
// rays outside the sector at the given radii. Reports the smallest feasible
// angle and the constant fitted over its samples.
SectorReport sectoriality_probe(const MatrixOperator& m, std::span<const double> angles,
                                std::span<const double> radii);

} // namespace c0embed

#endif
