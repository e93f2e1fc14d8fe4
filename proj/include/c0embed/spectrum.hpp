#ifndef C0EMBED_SPECTRUM_HPP
#define C0EMBED_SPECTRUM_HPP

#include <vector>

#include "c0embed/matrix_operator.hpp"

namespace c0embed {

// Eigenvalues of the truncation, with multiplicity, in a deterministic
// order: descending modulus, then ascending phase (principal argument),
// then real and imaginary parts as final tie-breakers.
std::vector<Complex> spectrum(const MatrixOperator& m);

} // namespace c0embed

#endif
