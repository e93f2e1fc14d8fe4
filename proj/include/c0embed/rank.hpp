#ifndef C0EMBED_RANK_HPP
#define C0EMBED_RANK_HPP

#include <optional>
#include <vector>

#include "c0embed/cardinal.hpp"
#include "c0embed/matrix_operator.hpp"

namespace c0embed {

struct RankReport {
    Eigen::Index rank = 0;
    CardinalDim kernel_dim = CardinalDim::finite(0);
    CardinalDim cokernel_dim = CardinalDim::finite(0);
    std::vector<double> singular_values; // descending
    double tolerance_used = 0.0;
};

// Numerical rank from the SVD. Singular values strictly above the tolerance
// count into the rank; the rest are the numerical kernel. For a square
// matrix kernel and cokernel dimensions coincide (rank-nullity).
// tol == nullopt selects auto = eps * dim * sigma_max.
RankReport rank_analysis(const MatrixOperator& m, std::optional<double> tol = std::nullopt);

} // namespace c0embed

#endif
