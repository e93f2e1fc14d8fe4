#ifndef C0EMBED_RANDOM_OPS_HPP
#define C0EMBED_RANDOM_OPS_HPP

#include <random>

#include "c0embed/matrix_operator.hpp"

namespace c0embed {

Matrix random_complex_gaussian(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng);

// Unitary factor of the QR decomposition of a complex Gaussian draw.
Matrix random_unitary(Eigen::Index n, std::mt19937_64& rng);

// Random matrix with spectral norm <= max_norm and every eigenvalue of
// modulus >= min_eig (rejection-sampled deterministically from the rng).
Matrix random_invertible(Eigen::Index n, std::mt19937_64& rng, double min_eig,
                         double max_norm);

// Exact-rank matrix Q1 diag(s_1..s_r, 0...) Q2* with s in [0.5, 2].
Matrix random_rank(Eigen::Index n, Eigen::Index r, std::mt19937_64& rng);

} // namespace c0embed

#endif
