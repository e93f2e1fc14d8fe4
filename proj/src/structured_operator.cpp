#include "c0embed/structured_operator.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "c0embed/error.hpp"
#include "c0embed/rank.hpp"

namespace c0embed {

namespace {

std::size_t zero_count(const std::vector<Complex>& values) {
    return static_cast<std::size_t>(
        std::count_if(values.begin(), values.end(),
                      [](Complex z) { return z == Complex(0.0, 0.0); }));
}

void validate(const Dense&) {}

void validate(const Diagonal& d) {
    if (d.eigenvalues.empty())
        throw std::invalid_argument("Diagonal: eigenvalue list must be nonempty");
    const std::size_t zeros = zero_count(d.eigenvalues);
    if (d.kernel_dim != d.cokernel_dim)
        throw std::invalid_argument(
            "Diagonal: a multiplication operator is normal; declared kernel and "
            "cokernel cardinals must agree");
    if (d.kernel_dim.is_finite()) {
        if (d.kernel_dim.finite_value() != zeros)
            throw std::invalid_argument(
                "Diagonal: declared finite kernel dim must equal the number of zero "
                "eigenvalues in the truncation");
    } else if (zeros == 0) {
        throw std::invalid_argument(
            "Diagonal: declared infinite kernel requires at least one zero "
            "eigenvalue in the truncation");
    }
}

void validate_shift(CardinalDim fiber_dim, int fiber_truncation, int block_truncation) {
    if (fiber_truncation < 1 || block_truncation < 2)
        throw std::invalid_argument(
            "shift: fiber_truncation must be >= 1 and block_truncation >= 2");
    if (fiber_dim.is_finite() &&
        fiber_dim.finite_value() != static_cast<std::size_t>(fiber_truncation))
        throw std::invalid_argument(
            "shift: a Finite fiber must be truncated at its full dimension");
}

void validate(const BlockRightShift& s) {
    validate_shift(s.fiber_dim, s.fiber_truncation, s.block_truncation);
}

void validate(const BlockLeftShift& s) {
    validate_shift(s.fiber_dim, s.fiber_truncation, s.block_truncation);
}

void validate(const Multiplication& m) {
    if (m.sample_points.empty())
        throw std::invalid_argument("Multiplication: sample list must be nonempty");
    if (m.sample_points.size() != m.sample_weights.size())
        throw std::invalid_argument("Multiplication: one weight per sample point");
    for (double w : m.sample_weights)
        if (!(w > 0.0))
            throw std::invalid_argument("Multiplication: weights must be positive");
}

void validate(const Volterra& v) {
    if (v.grid_size < 1)
        throw std::invalid_argument("Volterra: grid_size must be positive");
}

void validate(const ZeroOperator& z) {
    if (z.truncation < 1)
        throw std::invalid_argument("Zero: truncation must be positive");
    if (z.space_dim.is_finite()) {
        if (z.space_dim.finite_value() == 0)
            throw std::invalid_argument("Zero: space dimension must be positive");
        if (z.space_dim.finite_value() != static_cast<std::size_t>(z.truncation))
            throw std::invalid_argument(
                "Zero: a Finite space must be truncated at its full dimension");
    }
}

void validate(const DirectSum& d) {
    if (d.parts.empty())
        throw std::invalid_argument("DirectSum: needs at least one part");
}

Eigen::Index materialized_dim(const StructuredOperator& op);

Eigen::Index node_dim(const Dense& d) { return d.matrix.dim(); }
Eigen::Index node_dim(const Diagonal& d) { return static_cast<Eigen::Index>(d.eigenvalues.size()); }
Eigen::Index node_dim(const BlockRightShift& s) {
    return static_cast<Eigen::Index>(s.fiber_truncation) * s.block_truncation;
}
Eigen::Index node_dim(const BlockLeftShift& s) {
    return static_cast<Eigen::Index>(s.fiber_truncation) * s.block_truncation;
}
Eigen::Index node_dim(const Multiplication& m) {
    return static_cast<Eigen::Index>(m.sample_points.size());
}
Eigen::Index node_dim(const Volterra& v) { return v.grid_size; }
Eigen::Index node_dim(const ZeroOperator& z) { return z.truncation; }
Eigen::Index node_dim(const DirectSum& d) {
    Eigen::Index n = 0;
    for (const auto& p : d.parts) n += materialized_dim(p);
    return n;
}

Eigen::Index materialized_dim(const StructuredOperator& op) {
    return std::visit([](const auto& n) { return node_dim(n); }, op.node());
}

Matrix right_shift_matrix(int fiber, int blocks) {
    const Eigen::Index n = static_cast<Eigen::Index>(fiber) * blocks;
    Matrix m = Matrix::Zero(n, n);
    for (int b = 0; b + 1 < blocks; ++b)
        for (int i = 0; i < fiber; ++i)
            m(static_cast<Eigen::Index>(b + 1) * fiber + i,
              static_cast<Eigen::Index>(b) * fiber + i) = 1.0;
    return m;
}

} // namespace

void StructuredOperator::validate_node() const {
    std::visit([](const auto& n) { validate(n); }, node_);
}

MatrixOperator materialize(const StructuredOperator& op) {
    const Eigen::Index n = materialized_dim(op);
    if (n > kMaxDenseDim)
        throw ResourceLimitError("materialize: requested dense dimension " +
                                 std::to_string(n) + " exceeds cap " +
                                 std::to_string(kMaxDenseDim));

    struct Visitor {
        Matrix operator()(const Dense& d) const { return d.matrix.mat(); }
        Matrix operator()(const Diagonal& d) const {
            Matrix m = Matrix::Zero(node_dim(d), node_dim(d));
            for (Eigen::Index i = 0; i < m.rows(); ++i)
                m(i, i) = d.eigenvalues[static_cast<std::size_t>(i)];
            return m;
        }
        Matrix operator()(const BlockRightShift& s) const {
            return right_shift_matrix(s.fiber_truncation, s.block_truncation);
        }
        Matrix operator()(const BlockLeftShift& s) const {
            return right_shift_matrix(s.fiber_truncation, s.block_truncation)
                .transpose();
        }
        Matrix operator()(const Multiplication& m) const {
            Matrix mat = Matrix::Zero(node_dim(m), node_dim(m));
            for (Eigen::Index i = 0; i < mat.rows(); ++i)
                mat(i, i) = m.sample_points[static_cast<std::size_t>(i)];
            return mat;
        }
        Matrix operator()(const Volterra& v) const {
            const Eigen::Index n = v.grid_size;
            const double h = 1.0 / static_cast<double>(n);
            Matrix m = Matrix::Zero(n, n);
            for (Eigen::Index i = 0; i < n; ++i) {
                for (Eigen::Index j = 0; j < i; ++j) m(i, j) = h;
                m(i, i) = h / 2.0;
            }
            return m;
        }
        Matrix operator()(const ZeroOperator& z) const {
            return Matrix::Zero(z.truncation, z.truncation);
        }
        Matrix operator()(const DirectSum& d) const {
            Eigen::Index n = 0;
            std::vector<Matrix> blocks;
            blocks.reserve(d.parts.size());
            for (const auto& p : d.parts) {
                blocks.push_back(materialize(p).mat());
                n += blocks.back().rows();
            }
            Matrix m = Matrix::Zero(n, n);
            Eigen::Index off = 0;
            for (const auto& b : blocks) {
                m.block(off, off, b.rows(), b.cols()) = b;
                off += b.rows();
            }
            return m;
        }
    };
    return MatrixOperator(std::visit(Visitor{}, op.node()));
}

KernelDefect kernel_defect(const StructuredOperator& op) {
    struct Visitor {
        KernelDefect operator()(const Dense& d) const {
            RankReport r = rank_analysis(d.matrix);
            return {r.kernel_dim, r.cokernel_dim};
        }
        KernelDefect operator()(const Diagonal& d) const {
            return {d.kernel_dim, d.cokernel_dim};
        }
        KernelDefect operator()(const BlockRightShift& s) const {
            return {CardinalDim::finite(0), s.fiber_dim};
        }
        KernelDefect operator()(const BlockLeftShift& s) const {
            return {s.fiber_dim, CardinalDim::finite(0)};
        }
        KernelDefect operator()(const Multiplication& m) const {
            // Each zero sample is a one-dimensional atom of the kernel; the
            // operator is normal, so the cokernel cardinal agrees.
            const auto z = zero_count(m.sample_points);
            return {CardinalDim::finite(z), CardinalDim::finite(z)};
        }
        KernelDefect operator()(const Volterra&) const {
            // Injective with dense range.
            return {CardinalDim::finite(0), CardinalDim::finite(0)};
        }
        KernelDefect operator()(const ZeroOperator& z) const {
            return {z.space_dim, z.space_dim};
        }
        KernelDefect operator()(const DirectSum& d) const {
            KernelDefect acc{CardinalDim::finite(0), CardinalDim::finite(0)};
            for (const auto& p : d.parts) {
                KernelDefect k = kernel_defect(p);
                acc.kernel = acc.kernel + k.kernel;
                acc.cokernel = acc.cokernel + k.cokernel;
            }
            return acc;
        }
    };
    return std::visit(Visitor{}, op.node());
}

std::vector<bool> interior_mask(const StructuredOperator& op) {
    struct Visitor {
        std::vector<bool> operator()(const Dense& d) const {
            return std::vector<bool>(static_cast<std::size_t>(d.matrix.dim()), true);
        }
        std::vector<bool> operator()(const Diagonal& d) const {
            return std::vector<bool>(d.eigenvalues.size(), true);
        }
        std::vector<bool> shift_mask(int fiber, int blocks) const {
            // The final block is a truncation artifact.
            std::vector<bool> m(static_cast<std::size_t>(fiber) * blocks, true);
            for (int i = 0; i < fiber; ++i)
                m[static_cast<std::size_t>(blocks - 1) * fiber + i] = false;
            return m;
        }
        std::vector<bool> operator()(const BlockRightShift& s) const {
            return shift_mask(s.fiber_truncation, s.block_truncation);
        }
        std::vector<bool> operator()(const BlockLeftShift& s) const {
            return shift_mask(s.fiber_truncation, s.block_truncation);
        }
        std::vector<bool> operator()(const Multiplication& m) const {
            return std::vector<bool>(m.sample_points.size(), true);
        }
        std::vector<bool> operator()(const Volterra& v) const {
            return std::vector<bool>(static_cast<std::size_t>(v.grid_size), true);
        }
        std::vector<bool> operator()(const ZeroOperator& z) const {
            return std::vector<bool>(static_cast<std::size_t>(z.truncation), true);
        }
        std::vector<bool> operator()(const DirectSum& d) const {
            std::vector<bool> m;
            for (const auto& p : d.parts) {
                auto pm = interior_mask(p);
                m.insert(m.end(), pm.begin(), pm.end());
            }
            return m;
        }
    };
    return std::visit(Visitor{}, op.node());
}

double interior_restricted_norm(const Matrix& g, const std::vector<bool>& mask) {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index i = 0; i < g.rows(); ++i)
        if (mask[static_cast<std::size_t>(i)]) idx.push_back(i);
    if (idx.empty()) return 0.0;
    Matrix sub(static_cast<Eigen::Index>(idx.size()), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b)
            sub(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = g(idx[a], idx[b]);
    return spectral_norm(sub);
}

StructuredOperator structured_adjoint(const StructuredOperator& op) {
    struct Visitor {
        StructuredOperator operator()(const Dense& d) const {
            return Dense{MatrixOperator(d.matrix.mat().adjoint())};
        }
        StructuredOperator operator()(const Diagonal& d) const {
            Diagonal a = d;
            for (auto& z : a.eigenvalues) z = std::conj(z);
            return a;
        }
        StructuredOperator operator()(const BlockRightShift& s) const {
            return BlockLeftShift{s.fiber_dim, s.fiber_truncation, s.block_truncation};
        }
        StructuredOperator operator()(const BlockLeftShift& s) const {
            return BlockRightShift{s.fiber_dim, s.fiber_truncation, s.block_truncation};
        }
        StructuredOperator operator()(const Multiplication& m) const {
            Multiplication a = m;
            for (auto& z : a.sample_points) z = std::conj(z);
            return a;
        }
        StructuredOperator operator()(const Volterra& v) const {
            // V* is not a Volterra node; return its dense truncation.
            return Dense{MatrixOperator(
                materialize(StructuredOperator(v)).mat().adjoint())};
        }
        StructuredOperator operator()(const ZeroOperator& z) const { return z; }
        StructuredOperator operator()(const DirectSum& d) const {
            DirectSum a;
            a.parts.reserve(d.parts.size());
            for (const auto& p : d.parts) a.parts.push_back(structured_adjoint(p));
            return a;
        }
    };
    return std::visit(Visitor{}, op.node());
}

std::string describe(const StructuredOperator& op) {
    struct Visitor {
        std::string operator()(const Dense& d) const {
            return "dense(" + std::to_string(d.matrix.dim()) + ")";
        }
        std::string operator()(const Diagonal& d) const {
            return "diagonal(" + std::to_string(d.eigenvalues.size()) +
                   ", kernel=" + d.kernel_dim.to_string() + ")";
        }
        std::string operator()(const BlockRightShift& s) const {
            return "block_right_shift(fiber=" + s.fiber_dim.to_string() + ", " +
                   std::to_string(s.fiber_truncation) + "x" +
                   std::to_string(s.block_truncation) + ")";
        }
        std::string operator()(const BlockLeftShift& s) const {
            return "block_left_shift(fiber=" + s.fiber_dim.to_string() + ", " +
                   std::to_string(s.fiber_truncation) + "x" +
                   std::to_string(s.block_truncation) + ")";
        }
        std::string operator()(const Multiplication& m) const {
            return "multiplication(" + std::to_string(m.sample_points.size()) + ")";
        }
        std::string operator()(const Volterra& v) const {
            return "volterra(" + std::to_string(v.grid_size) + ")";
        }
        std::string operator()(const ZeroOperator& z) const {
            return "zero(" + z.space_dim.to_string() + ", " +
                   std::to_string(z.truncation) + ")";
        }
        std::string operator()(const DirectSum& d) const {
            std::ostringstream out;
            out << "direct_sum[";
            for (std::size_t i = 0; i < d.parts.size(); ++i) {
                if (i) out << ", ";
                out << describe(d.parts[i]);
            }
            out << "]";
            return out.str();
        }
    };
    return std::visit(Visitor{}, op.node());
}

} // namespace c0embed
