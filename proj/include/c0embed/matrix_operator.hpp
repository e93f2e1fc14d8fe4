#ifndef C0EMBED_MATRIX_OPERATOR_HPP
#define C0EMBED_MATRIX_OPERATOR_HPP

#include <complex>

#include <Eigen/Dense>

namespace c0embed {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Dense square truncation of an operator. Entries are validated to be
// finite on construction; everything downstream may assume a well-formed
// square matrix.
class MatrixOperator {
public:
    explicit MatrixOperator(Matrix m);

    static MatrixOperator identity(Eigen::Index n);
    static MatrixOperator zero(Eigen::Index n);

    Eigen::Index dim() const { return mat_.rows(); }
    const Matrix& mat() const { return mat_; }

private:
    Matrix mat_;
};

// Largest singular value. Operator norms throughout the library are
// spectral norms.
double spectral_norm(const Matrix& m);

inline double spectral_norm(const MatrixOperator& m) { return spectral_norm(m.mat()); }

} // namespace c0embed

#endif
