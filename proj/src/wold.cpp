#include "c0embed/wold.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "c0embed/error.hpp"

namespace c0embed {

namespace {

constexpr double kIsometryTol = 1e-8;

Matrix thin_q(const Matrix& a) {
    if (a.cols() == 0) return a;
    Eigen::HouseholderQR<Matrix> qr(a);
    Matrix q = qr.householderQ() * Matrix::Identity(a.rows(), a.cols());
    return q;
}

// Modified Gram-Schmidt. Unlike Householder QR it keeps the column
// directions (the implied triangular factor has positive diagonal), so
// re-orthonormalizing an almost-orthonormal block is a near-identity
// correction and the accumulated V^k Y blocks stay aligned with the raw
// powers.
Matrix mgs_columns(Matrix a) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index k = 0; k < j; ++k)
            a.col(j) -= a.col(k).dot(a.col(j)) * a.col(k);
        const double norm = a.col(j).norm();
        if (norm < 1e-12)
            throw NumericalError("wold_decompose: shift block lost a direction");
        a.col(j) /= norm;
    }
    return a;
}

} // namespace

WoldDecomposition wold_decompose(const StructuredOperator& op, int depth) {
    if (depth < 1) throw std::invalid_argument("wold_decompose: depth must be >= 1");
    const Matrix v = materialize(op).mat();
    const Eigen::Index n = v.rows();
    const std::vector<bool> mask = interior_mask(op);

    const double defect =
        interior_restricted_norm(v.adjoint() * v - Matrix::Identity(n, n), mask);
    if (defect > kIsometryTol)
        throw std::invalid_argument(
            "wold_decompose: input is not an interior isometry (defect " +
            std::to_string(defect) + ")");

    // Wandering subspace Y = (rg V)^perp: left singular vectors with
    // negligible singular value.
    Eigen::JacobiSVD<Matrix> svd(v, Eigen::ComputeFullU);
    const auto& sv = svd.singularValues();
    const double sigma_max = sv.size() ? sv(0) : 0.0;
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-8 * std::max(1.0, sigma_max)) ++rank;
    const Eigen::Index wander = n - rank;
    const Matrix y = svd.matrixU().rightCols(wander);

    WoldDecomposition w;
    w.wandering_basis = y;
    w.depth_used = depth;

    // Accumulate H1 = span{V^k Y} with re-orthonormalization per step to
    // control drift; abort if a column loses mass to the truncation boundary.
    Matrix block = y;
    Matrix h1(n, 0);
    for (int k = 0; k < depth && block.cols() > 0; ++k) {
        w.shift_blocks.push_back(block);
        Matrix joined(n, h1.cols() + block.cols());
        joined << h1, block;
        h1 = joined;
        if (k + 1 == depth) break;
        Matrix next = v * block;
        for (Eigen::Index c = 0; c < next.cols(); ++c) {
            if (next.col(c).norm() < 0.9)
                throw std::invalid_argument(
                    "wold_decompose: depth too large for the truncation "
                    "(H1 accumulation hit the boundary)");
        }
        block = mgs_columns(std::move(next));
    }
    if (h1.cols() > 0) h1 = thin_q(h1);

    // Depth-stable interior: eigenvectors of (V^depth)* V^depth with
    // eigenvalue ~ 1. The complement of H1 inside it is the unitary part.
    Matrix vd = Matrix::Identity(n, n);
    for (int k = 0; k < depth; ++k) vd = v * vd;
    Eigen::SelfAdjointEigenSolver<Matrix> es(vd.adjoint() * vd);
    if (es.info() != Eigen::Success)
        throw NumericalError("wold_decompose: stable-interior eigensolve failed");
    Eigen::Index stable = 0;
    for (Eigen::Index i = 0; i < n; ++i)
        if (es.eigenvalues()(i) > 1.0 - 1e-6) ++stable;
    const Matrix s = es.eigenvectors().rightCols(stable);

    Matrix m = s;
    if (h1.cols() > 0) m = s - h1 * (h1.adjoint() * s);
    Matrix h0(n, 0);
    if (m.cols() > 0) {
        Eigen::JacobiSVD<Matrix> msvd(m, Eigen::ComputeThinU);
        Eigen::Index r = 0;
        for (Eigen::Index i = 0; i < msvd.singularValues().size(); ++i)
            if (msvd.singularValues()(i) > 0.5) ++r;
        h0 = msvd.matrixU().leftCols(r);
    }
    w.unitary_part_basis = h0;

    if (op.get_if<Dense>()) {
        // A finite-dimensional isometry is unitary; the symbolic layer
        // cannot detect infinite multiplicity from dense data.
        w.multiplicity = CardinalDim::finite(static_cast<std::size_t>(wander));
        w.note = "dense isometric input: necessarily unitary at truncation level, "
                 "multiplicity reported from the numerical wandering dimension";
    } else {
        w.multiplicity = kernel_defect(op).cokernel;
    }

    // Residuals: pairwise orthogonality of the accumulated blocks and
    // V-invariance of H0.
    double orth = 0.0;
    for (std::size_t a = 0; a < w.shift_blocks.size(); ++a)
        for (std::size_t b = a + 1; b < w.shift_blocks.size(); ++b)
            orth = std::max(orth,
                            spectral_norm(Matrix(w.shift_blocks[a].adjoint() *
                                                 w.shift_blocks[b])));
    w.residuals.orthogonality_defect = orth;
    if (h0.cols() > 0) {
        const Matrix vh0 = v * h0;
        w.residuals.invariance_defect =
            spectral_norm(Matrix(vh0 - h0 * (h0.adjoint() * vh0)));
    }
    return w;
}

WoldVerification wold_verify(const StructuredOperator& op, const WoldDecomposition& w) {
    const Matrix v = materialize(op).mat();
    WoldVerification out;

    // Raw powers V^n Y without re-orthonormalization, for independence from
    // the decomposition's own accumulation.
    std::vector<Matrix> powers;
    Matrix cur = w.wandering_basis;
    for (int k = 0; k < w.depth_used; ++k) {
        powers.push_back(cur);
        cur = v * cur;
    }
    for (std::size_t a = 0; a < powers.size(); ++a)
        for (std::size_t b = a + 1; b < powers.size(); ++b)
            out.pairwise_orthogonality =
                std::max(out.pairwise_orthogonality,
                         spectral_norm(Matrix(powers[a].adjoint() * powers[b])));

    const Matrix& h0 = w.unitary_part_basis;
    if (h0.cols() > 0) {
        const Matrix vh0 = v * h0;
        out.h0_invariance = spectral_norm(Matrix(vh0 - h0 * (h0.adjoint() * vh0)));
        const Matrix c = h0.adjoint() * v * h0;
        const Matrix eye = Matrix::Identity(c.rows(), c.cols());
        out.h0_unitarity_left = spectral_norm(Matrix(c.adjoint() * c - eye));
        out.h0_unitarity_right = spectral_norm(Matrix(c * c.adjoint() - eye));
    }
    return out;
}

} // namespace c0embed
