#include "c0embed/random_ops.hpp"

#include <Eigen/QR>

#include "c0embed/error.hpp"
#include "c0embed/spectrum.hpp"

namespace c0embed {

Matrix random_complex_gaussian(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
    return m;
}

Matrix random_unitary(Eigen::Index n, std::mt19937_64& rng) {
    Eigen::HouseholderQR<Matrix> qr(random_complex_gaussian(n, n, rng));
    return qr.householderQ() * Matrix::Identity(n, n);
}

Matrix random_invertible(Eigen::Index n, std::mt19937_64& rng, double min_eig,
                         double max_norm) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        Matrix m = random_complex_gaussian(n, n, rng);
        m *= (0.85 * max_norm) / spectral_norm(m);
        double min_mod = std::numeric_limits<double>::infinity();
        for (Complex z : spectrum(MatrixOperator(m))) min_mod = std::min(min_mod, std::abs(z));
        if (min_mod >= min_eig) return m;
    }
    throw NumericalError("random_invertible: rejection sampling failed");
}

Matrix random_rank(Eigen::Index n, Eigen::Index r, std::mt19937_64& rng) {
    const Matrix q1 = random_unitary(n, rng);
    const Matrix q2 = random_unitary(n, rng);
    std::uniform_real_distribution<double> unif(0.5, 2.0);
    Eigen::VectorXd sigma = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i < r; ++i) sigma(i) = unif(rng);
    return q1 * sigma.asDiagonal() * q2.adjoint();
}

} // namespace c0embed
