#ifndef C0EMBED_VERIFY_HPP
#define C0EMBED_VERIFY_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "c0embed/semigroup.hpp"

namespace c0embed {

inline constexpr unsigned kDefaultVerifySeed = 20250607;

struct VerifyTolerances {
    double endpoint = 1e-6;
    double cocycle = 1e-6;
    double identity = 1e-10;
    double continuity_floor = 1e-12;

    static VerifyTolerances for_method(EmbeddingMethod m) {
        const MethodTolerances t = method_tolerances(m);
        return VerifyTolerances{t.endpoint, t.cocycle, t.identity, 1e-12};
    }
};

struct ContinuityPoint {
    double h;
    double sup_residual; // sup over test vectors of ||T(h)x - x||
};

struct VerificationReport {
    double endpoint_residual = 0.0;     // ||T(1) - target||
    double cocycle_residual_max = 0.0;  // max ||T(s)T(t) - T(s+t)|| over samples
    double identity_residual = 0.0;     // ||T(0) - I||
    std::vector<ContinuityPoint> continuity_profile;
    bool continuity_nonincreasing = true;
    std::optional<double> generator_residual;  // vs declared generator, when present
    std::optional<double> generator_bound;     // analytic first-order bound used as budget
    std::optional<double> coarse_endpoint_residual; // through the identification J
    std::string samples_used;
    bool pass = false;
};

// Full verification of a realization: endpoint identity, the semigroup
// cocycle over sampled (s, t) pairs, identity at t = 0, a strong-continuity
// profile over shrinking steps (evidence, not proof: the profile must not
// increase as h decreases, up to the declared floor), and finite-difference
// generator recovery when a bounded generator is declared. Grid realizations
// snap all samples to their lattice.
VerificationReport check_embedding(const SemigroupRealization& s, const MatrixOperator& target,
                                   const VerifyTolerances& tol,
                                   std::span<const double> time_samples = {},
                                   unsigned seed = kDefaultVerifySeed);

// First-order finite difference (T(h) - I)/h. h must be admissible and
// <= 1/8.
MatrixOperator estimate_generator(const SemigroupRealization& s, double h);

// sup over the given vectors of ||T(h)x - x|| for each step. For
// bounded-generator realizations the profile is O(h); for grid translations
// it plateaus on cell-supported vectors, which is exactly the
// non-embeddability witness for finite-defect shifts.
std::vector<ContinuityPoint> continuity_sweep(const SemigroupRealization& s,
                                              const std::vector<Vector>& vectors,
                                              std::span<const double> h_list);

// ||J* T(1) J - coarse_target|| through the realization's isometric
// identification, restricted to the declared resolved subspace when present.
// Links refined-grid realizations back to the source truncation.
double coarse_endpoint_residual(const SemigroupRealization& s,
                                const MatrixOperator& coarse_target);

// Basis vectors (up to 8) plus 4 seeded random unit vectors.
std::vector<Vector> default_test_vectors(Eigen::Index dim, unsigned seed);

// Halving steps 2^-1 .. 2^-10 snapped to the realization's lattice.
std::vector<double> default_continuity_steps(const SemigroupRealization& s);

} // namespace c0embed

#endif
