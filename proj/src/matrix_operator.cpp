#include "c0embed/matrix_operator.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

namespace c0embed {

MatrixOperator::MatrixOperator(Matrix m) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols())
        throw std::invalid_argument("MatrixOperator: matrix must be square");
    if (mat_.rows() == 0)
        throw std::invalid_argument("MatrixOperator: dimension must be positive");
    if (!mat_.allFinite())
        throw std::invalid_argument("MatrixOperator: entries must be finite");
}

MatrixOperator MatrixOperator::identity(Eigen::Index n) {
    return MatrixOperator(Matrix::Identity(n, n));
}

MatrixOperator MatrixOperator::zero(Eigen::Index n) {
    return MatrixOperator(Matrix::Zero(n, n));
}

double spectral_norm(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    if (m.isZero(0.0)) return 0.0;
    if (m.rows() > 64 || m.cols() > 64) {
        Eigen::BDCSVD<Matrix> svd(m);
        return svd.singularValues()(0);
    }
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

} // namespace c0embed
