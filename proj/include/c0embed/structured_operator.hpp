#ifndef C0EMBED_STRUCTURED_OPERATOR_HPP
#define C0EMBED_STRUCTURED_OPERATOR_HPP

#include <string>
#include <variant>
#include <vector>

#include "c0embed/cardinal.hpp"
#include "c0embed/matrix_operator.hpp"

namespace c0embed {

class StructuredOperator;

// An explicit dense truncation.
struct Dense {
    MatrixOperator matrix;
};

// Truncation of a multiplication operator on l2: diag(eigenvalues).
// The declared cardinals carry what the truncation cannot: whether the
// kernel of the full operator is finite (= the number of zero entries in
// the truncation) or infinite. A multiplication operator is normal, so
// kernel and cokernel cardinals must agree.
struct Diagonal {
    std::vector<Complex> eigenvalues;
    CardinalDim kernel_dim = CardinalDim::finite(0);
    CardinalDim cokernel_dim = CardinalDim::finite(0);
};

// Truncation of the right shift on l2(Y): block_truncation blocks, each a
// fiber_truncation-dimensional sample of Y. dim Y is symbolic (fiber_dim);
// for a Finite(d) fiber the truncation must keep the full fiber (d).
struct BlockRightShift {
    CardinalDim fiber_dim;
    int fiber_truncation;
    int block_truncation;
};

// The adjoint left shift, same truncation conventions.
struct BlockLeftShift {
    CardinalDim fiber_dim;
    int fiber_truncation;
    int block_truncation;
};

// Truncation of a normal operator in spectral form: multiplication by the
// sample points on a weighted l2 space. Weights are the mu-sample masses;
// they do not enter the matrix action and are kept as metadata.
struct Multiplication {
    std::vector<Complex> sample_points;
    std::vector<double> sample_weights;
};

// Quadrature discretization of (Vf)(tau) = integral_0^tau f(s) ds on [0,1].
// Fixed rule: midpoint grid tau_i = (i + 1/2) h, h = 1/grid_size, with
// piecewise-constant collocation. Entries: h for j < i, h/2 for j == i.
struct Volterra {
    int grid_size;
};

// The zero operator on a space of symbolic dimension. Finite(n) requires
// truncation == n.
struct ZeroOperator {
    CardinalDim space_dim;
    int truncation;
};

// Orthogonal direct sum; materializes block-diagonally and sums cardinals.
struct DirectSum {
    std::vector<StructuredOperator> parts;
};

// Tagged operator representation: a dense matrix or a symbolic
// infinite-dimensional form with truncation parameters. Construction
// validates the per-variant invariants (declared cardinals consistent with
// the truncation, positive truncation parameters, weight/sample pairing).
class StructuredOperator {
public:
    using Node = std::variant<Dense, Diagonal, BlockRightShift, BlockLeftShift,
                              Multiplication, Volterra, ZeroOperator, DirectSum>;

    template <typename T>
        requires std::constructible_from<Node, T&&>
    StructuredOperator(T&& node) // NOLINT: implicit by design
        : node_(std::forward<T>(node)) {
        validate_node();
    }

    const Node& node() const { return node_; }

    template <typename T>
    const T* get_if() const { return std::get_if<T>(&node_); }

private:
    void validate_node() const;
    Node node_;
};

struct KernelDefect {
    CardinalDim kernel;
    CardinalDim cokernel;
};

// Dense materialization cap; beyond this a ResourceLimitError is raised.
inline constexpr Eigen::Index kMaxDenseDim = 4096;

MatrixOperator materialize(const StructuredOperator& op);

// Symbolic kernel/cokernel cardinals: Dense delegates to rank_analysis with
// auto tolerance, symbolic variants report their declared values, direct
// sums add cardinals.
KernelDefect kernel_defect(const StructuredOperator& op);

// Coordinates unaffected by the truncation boundary. A truncated right
// shift is not isometric on its last block; isometry checks and the Wold
// machinery are restricted to this mask.
std::vector<bool> interior_mask(const StructuredOperator& op);

// Spectral norm of g restricted to the rows and columns selected by the
// mask. Used for isometry checks away from the truncation boundary.
double interior_restricted_norm(const Matrix& g, const std::vector<bool>& mask);

// Adjoint at the structured level (left and right shifts swap, dense
// blocks conjugate-transpose).
StructuredOperator structured_adjoint(const StructuredOperator& op);

std::string describe(const StructuredOperator& op);

} // namespace c0embed

#endif
