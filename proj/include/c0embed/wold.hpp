#ifndef C0EMBED_WOLD_HPP
#define C0EMBED_WOLD_HPP

#include <string>
#include <vector>

#include "c0embed/cardinal.hpp"
#include "c0embed/structured_operator.hpp"

namespace c0embed {

struct WoldResiduals {
    double orthogonality_defect = 0.0; // max_{n<m} ||(V^n Y)* (V^m Y)||
    double invariance_defect = 0.0;    // ||(I - P_{H0}) V U0||
};

// Orthogonal splitting of a (truncated) isometry V into a unitary part H0
// and a shift part H1 = span{V^n Y : 0 <= n < depth} with wandering
// subspace Y = (rg V)^perp. All bases are orthonormal columns in the
// ambient truncation coordinates.
struct WoldDecomposition {
    Matrix unitary_part_basis; // n x dim(H0)
    Matrix wandering_basis;    // n x dim(Y)
    std::vector<Matrix> shift_blocks; // orthonormalized V^k Y, k = 0..depth-1
    CardinalDim multiplicity = CardinalDim::finite(0);
    int depth_used = 0;
    WoldResiduals residuals;
    std::string note; // e.g. the dense-input multiplicity convention
};

// Decompose a truncated isometry. Preconditions: the materialization is
// isometric on the interior coordinates (||(V*V - I)|interior|| <= 1e-8);
// H1 accumulation must not hit the truncation boundary within `depth`
// applications. The unitary part is the orthogonal complement of H1 inside
// the depth-stable interior {x : ||V^depth x|| ~ ||x||}; intersecting
// numerical ranges directly would be ill-conditioned.
WoldDecomposition wold_decompose(const StructuredOperator& v, int depth);

struct WoldVerification {
    double pairwise_orthogonality = 0.0; // raw powers V^n Y, no re-orthonormalization
    double h0_invariance = 0.0;          // ||(I - P0) V U0||
    double h0_unitarity_left = 0.0;      // ||c* c - I||, c = U0* V U0
    double h0_unitarity_right = 0.0;     // ||c c* - I||
};

WoldVerification wold_verify(const StructuredOperator& v, const WoldDecomposition& w);

} // namespace c0embed

#endif
