#ifndef C0EMBED_CONSTRUCTORS_HPP
#define C0EMBED_CONSTRUCTORS_HPP

#include <variant>
#include <vector>

#include "c0embed/semigroup.hpp"
#include "c0embed/structured_operator.hpp"
#include "c0embed/verdict.hpp"

namespace c0embed {

struct EmbedOptions {
    int contour_nodes = 256;
    int grid_per_block = 8;   // cells per unit interval for translation grids
    int wold_depth = 8;
    std::vector<int> branch_offsets; // per-eigenvalue 2 pi i k shifts (diagonal path)
    double cluster_radius = 0.0;     // 0 = auto (0.1 * smallest eigenvalue modulus)
};

// T = e^A with A the Dunford logarithm over an automatically designed
// contour; the branch cut rotates off the spectrum when needed. Cross-checks
// against the principal-log oracle whenever the principal branch applies.
SemigroupRealization embed_dense_invertible(const MatrixOperator& m, int nodes = 256);

// T(t) = diag(exp(t (Log lambda_j + 2 pi i k_j))). All branch choices give
// the same T(1).
SemigroupRealization embed_diagonal(const std::vector<Complex>& eigenvalues,
                                    const std::vector<int>& branch_offsets = {});

// Unitary C0-group with bounded skew-Hermitian generator via the spectral
// theorem: each unimodular eigenvalue e^{i phi}, phi in [0, 2 pi), flows as
// e^{i t phi}.
SemigroupRealization embed_unitary(const MatrixOperator& u);

// Contractive normal semigroup in spectral form:
// T(t) = diag(|z|^t e^{i t phi(z)}), phi in [0, 2 pi). Requires injectivity
// (no zero sample); zero samples are routed to the kernel-splitting path in
// construct_embedding.
SemigroupRealization embed_normal(const std::vector<Complex>& sample_points,
                                  const std::vector<double>& sample_weights);

// Right shift on l2(Y), dim Y infinite, realized as translation on a grid
// of block_truncation x grid_per_block cells carrying fiber_truncation
// slots each. evaluate(k/m) translates by k cells with zero fill;
// evaluate(1) equals the refined block shift exactly.
SemigroupRealization embed_shift_translation(int fiber_truncation, int block_truncation,
                                             int grid_per_block);

// Wold route for interior isometries: unitary part via embed_unitary,
// shift part via translation when the multiplicity is infinite; finite
// nonzero multiplicity is not embeddable.
std::variant<SemigroupRealization, EmbeddabilityVerdict>
embed_isometry(const StructuredOperator& v, int depth, int grid_per_block);

// Injective compact truncation: cluster the spectrum, split off Riesz
// projections, embed each invariant block by the dense logarithm, recombine
// through the (possibly non-orthogonal) decomposition.
SemigroupRealization embed_compact_injective(const MatrixOperator& m,
                                             double cluster_radius, int nodes = 256);

// Fractional-integration semigroup of the Volterra operator: evaluate(t) is
// the product-integration discretization of the Riemann-Liouville integral
// of order t on the midpoint grid, composed with integer powers for t > 1.
SemigroupRealization embed_volterra(int grid_size);

// Nilpotent translation semigroup on L2[0,1]: grid translation with zero
// fill, dead from t >= 1; embeds the zero operator on an
// infinite-dimensional space.
SemigroupRealization embed_zero_infinite(int truncation);

// classify + dispatch to the matching constructor (with kernel splitting
// and direct-sum recombination); returns the verdict when the operator is
// not embeddable or open.
std::variant<SemigroupRealization, EmbeddabilityVerdict>
construct_embedding(const StructuredOperator& op, const EmbedOptions& options = {});

} // namespace c0embed

#endif
