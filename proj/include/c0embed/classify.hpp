#ifndef C0EMBED_CLASSIFY_HPP
#define C0EMBED_CLASSIFY_HPP

#include "c0embed/structured_operator.hpp"
#include "c0embed/verdict.hpp"

namespace c0embed {

// Decide embeddability of the operator into a C0-semigroup.
//
// Decision order:
//   1. kernel/cokernel cardinal dichotomy (finite nonzero => NotEmbeddable);
//   2. dense numerically invertible => DunfordLog;
//   3. diagonal without zero eigenvalues => DiagonalBranch;
//   4. interior-isometric => UnitarySpectral / ShiftTranslation /
//      IsometryWold depending on the unitary-vs-shift structure;
//   5. interior-co-isometric => the adjoint mirror of 4;
//   6. multiplication/diagonal spectral forms => NormalSpectral (an
//      infinite-kernel diagonal splits off its kernel into a nilpotent part);
//   7. Volterra => VolterraFractional;
//   8. zero on an infinite-dimensional space => NilpotentShift;
//   9. direct sums recurse over parts; a part that alone violates the
//      dichotomy but is absorbed by an infinite sibling cardinal is the
//      open compact-with-infinite-kernel case;
//  10. anything else => Unknown(UnclassifiedStructure).
EmbeddabilityVerdict classify(const StructuredOperator& op);

// Numerical interior-isometry / co-isometry predicates used by rule 4/5.
bool is_interior_isometric(const StructuredOperator& op, double tol = 1e-8);
bool is_interior_coisometric(const StructuredOperator& op, double tol = 1e-8);

} // namespace c0embed

#endif
