#include "c0embed/constructors.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "c0embed/classify.hpp"
#include "c0embed/error.hpp"
#include "c0embed/funcalc.hpp"
#include "c0embed/rank.hpp"
#include "c0embed/spectrum.hpp"
#include "c0embed/wold.hpp"

namespace c0embed {

namespace {

constexpr double kOracleAgreementTol = 1e-6;

double phase_in_0_2pi(Complex z) {
    double phi = std::arg(z); // (-pi, pi]
    if (phi < 0.0) phi += 2.0 * kPi;
    return phi;
}

// Translation-by-cells matrix with zero fill: cell c -> cell c + k, slots
// carried along, cells shifted past the end are dropped.
Matrix cell_translation(Eigen::Index cells, Eigen::Index slots, Eigen::Index k) {
    const Eigen::Index n = cells * slots;
    Matrix m = Matrix::Zero(n, n);
    for (Eigen::Index c = 0; c + k < cells; ++c)
        for (Eigen::Index i = 0; i < slots; ++i) m((c + k) * slots + i, c * slots + i) = 1.0;
    return m;
}

SemigroupRealization adjoint_realization(const SemigroupRealization& a,
                                         EmbeddingMethod method) {
    auto evaluator = [a](double t) { return Matrix(a.evaluate(t).mat().adjoint()); };
    SemigroupRealization out(method, a.dim(), a.admissible_times(), std::move(evaluator),
                             MatrixOperator(a.endpoint_target().mat().adjoint()));
    if (a.generator())
        out.set_generator(MatrixOperator(a.generator()->mat().adjoint()));
    if (a.coarse_embedding()) out.set_coarse_embedding(*a.coarse_embedding());
    if (a.coarse_restriction()) out.set_coarse_restriction(*a.coarse_restriction());
    out.set_group(a.is_group());
    out.set_notes(a.notes().empty() ? "adjoint realization"
                                    : a.notes() + "; adjoint realization");
    return out;
}

} // namespace

SemigroupRealization embed_dense_invertible(const MatrixOperator& m, int nodes) {
    const RankReport rr = rank_analysis(m);
    if (!rr.kernel_dim.is_zero())
        throw std::invalid_argument("embed_dense_invertible: input is numerically singular");

    const std::vector<Complex> eigs = spectrum(m);
    const double cut = rotate_cut(eigs, kPi);
    ContourConstraints constraints;
    constraints.cut_angle = cut;
    const Contour contour = design_contour(eigs, constraints, nodes);
    MatrixOperator generator = dunford_log(m, contour);

    // With the default cut the enclosed discs avoid the negative real axis
    // and the quadrature must agree with the principal-log oracle.
    if (cut == kPi) {
        const MatrixOperator oracle = principal_log_oracle(m);
        if ((generator.mat() - oracle.mat()).norm() > kOracleAgreementTol)
            throw NumericalError(
                "embed_dense_invertible: contour logarithm disagrees with the "
                "principal-log oracle");
    }

    auto evaluator = [g = generator](double t) { return matrix_exp(g, t).mat(); };
    SemigroupRealization out(EmbeddingMethod::DunfordLog, m.dim(), ContinuousTimes{},
                             std::move(evaluator), m);
    out.set_generator(std::move(generator));
    out.set_group(true);
    return out;
}

SemigroupRealization embed_diagonal(const std::vector<Complex>& eigenvalues,
                                    const std::vector<int>& branch_offsets) {
    if (eigenvalues.empty())
        throw std::invalid_argument("embed_diagonal: eigenvalue list must be nonempty");
    for (Complex z : eigenvalues)
        if (z == Complex(0.0, 0.0))
            throw std::invalid_argument("embed_diagonal: zero eigenvalue");
    std::vector<int> offsets = branch_offsets;
    if (offsets.empty()) offsets.assign(eigenvalues.size(), 0);
    if (offsets.size() != eigenvalues.size())
        throw std::invalid_argument("embed_diagonal: one branch offset per eigenvalue");

    const Eigen::Index n = static_cast<Eigen::Index>(eigenvalues.size());
    Matrix gen = Matrix::Zero(n, n);
    Matrix endpoint = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Complex lambda = eigenvalues[static_cast<std::size_t>(i)];
        gen(i, i) = std::log(lambda) +
                    Complex(0.0, 2.0 * kPi * offsets[static_cast<std::size_t>(i)]);
        endpoint(i, i) = lambda;
    }
    auto evaluator = [gen, n](double t) {
        Matrix m = Matrix::Zero(n, n);
        for (Eigen::Index i = 0; i < n; ++i) m(i, i) = std::exp(t * gen(i, i));
        return m;
    };
    SemigroupRealization out(EmbeddingMethod::DiagonalBranch, n, ContinuousTimes{},
                             std::move(evaluator), MatrixOperator(std::move(endpoint)));
    out.set_generator(MatrixOperator(std::move(gen)));
    out.set_branch_offsets(std::move(offsets));
    out.set_group(true);
    return out;
}

SemigroupRealization embed_unitary(const MatrixOperator& u) {
    const Eigen::Index n = u.dim();
    const double unitary_defect =
        spectral_norm(Matrix(u.mat().adjoint() * u.mat() - Matrix::Identity(n, n)));
    if (unitary_defect > 1e-8)
        throw std::invalid_argument("embed_unitary: input is not unitary (defect " +
                                    std::to_string(unitary_defect) + ")");

    // Schur form of a normal matrix is diagonal; the unitary factor is the
    // orthonormal eigenbasis.
    Eigen::ComplexSchur<Matrix> schur(u.mat());
    if (schur.info() != Eigen::Success)
        throw NumericalError("embed_unitary: Schur iteration failed");
    const Matrix q = schur.matrixU();
    Eigen::VectorXd phases(n);
    for (Eigen::Index i = 0; i < n; ++i) phases(i) = phase_in_0_2pi(schur.matrixT()(i, i));

    auto evaluator = [q, phases, n](double t) {
        Vector d(n);
        for (Eigen::Index i = 0; i < n; ++i) d(i) = std::exp(Complex(0.0, t * phases(i)));
        return Matrix(q * d.asDiagonal() * q.adjoint());
    };
    Matrix gen = Matrix::Zero(n, n);
    {
        Vector d(n);
        for (Eigen::Index i = 0; i < n; ++i) d(i) = Complex(0.0, phases(i));
        gen = q * d.asDiagonal() * q.adjoint();
    }
    SemigroupRealization out(EmbeddingMethod::UnitarySpectral, n, ContinuousTimes{},
                             std::move(evaluator), u);
    out.set_generator(MatrixOperator(std::move(gen)));
    out.set_group(true);

    const double endpoint_defect = spectral_norm(Matrix(out.evaluate(1.0).mat() - u.mat()));
    if (endpoint_defect > 1e-7)
        throw NumericalError("embed_unitary: spectral reconstruction failed");
    return out;
}

SemigroupRealization embed_normal(const std::vector<Complex>& sample_points,
                                  const std::vector<double>& sample_weights) {
    if (sample_points.empty())
        throw std::invalid_argument("embed_normal: sample list must be nonempty");
    if (sample_points.size() != sample_weights.size())
        throw std::invalid_argument("embed_normal: one weight per sample point");
    for (double w : sample_weights)
        if (!(w > 0.0)) throw std::invalid_argument("embed_normal: weights must be positive");
    for (Complex z : sample_points)
        if (z == Complex(0.0, 0.0))
            throw std::invalid_argument(
                "embed_normal: zero sample point (kernel-splitting path required)");

    const Eigen::Index n = static_cast<Eigen::Index>(sample_points.size());
    Eigen::VectorXd moduli(n), phases(n);
    Matrix endpoint = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Complex z = sample_points[static_cast<std::size_t>(i)];
        moduli(i) = std::abs(z);
        phases(i) = phase_in_0_2pi(z);
        endpoint(i, i) = z;
    }
    auto evaluator = [moduli, phases, n](double t) {
        Matrix m = Matrix::Zero(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            m(i, i) = std::pow(moduli(i), t) * std::exp(Complex(0.0, t * phases(i)));
        return m;
    };
    Matrix gen = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) gen(i, i) = Complex(std::log(moduli(i)), phases(i));

    SemigroupRealization out(EmbeddingMethod::NormalSpectral, n, ContinuousTimes{},
                             std::move(evaluator), MatrixOperator(std::move(endpoint)));
    out.set_generator(MatrixOperator(std::move(gen)));
    out.set_group(true);
    return out;
}

SemigroupRealization embed_shift_translation(int fiber_truncation, int block_truncation,
                                             int grid_per_block) {
    if (fiber_truncation < 1 || block_truncation < 2 || grid_per_block < 1)
        throw std::invalid_argument("embed_shift_translation: bad truncation parameters");
    const Eigen::Index d = fiber_truncation;
    const Eigen::Index cells = static_cast<Eigen::Index>(block_truncation) * grid_per_block;
    const Eigen::Index n = cells * d;
    if (n > kMaxDenseDim)
        throw ResourceLimitError("embed_shift_translation: refined grid exceeds dense cap");
    const double h = 1.0 / grid_per_block;

    auto evaluator = [cells, d, h](double t) {
        const Eigen::Index k = static_cast<Eigen::Index>(std::llround(t / h));
        return cell_translation(cells, d, std::min(k, cells));
    };
    // evaluate(1) is exactly the block right shift with the refined fiber.
    Matrix endpoint = cell_translation(cells, d, grid_per_block);

    SemigroupRealization out(EmbeddingMethod::ShiftTranslation, n, GridTimes{h},
                             std::move(evaluator), MatrixOperator(std::move(endpoint)));

    // Canonical identification of the coarse shift coordinates (block,
    // slot) with block-uniform cell functions of mass 1/sqrt(m).
    const Eigen::Index coarse = static_cast<Eigen::Index>(block_truncation) * d;
    Matrix j = Matrix::Zero(n, coarse);
    const double mass = 1.0 / std::sqrt(static_cast<double>(grid_per_block));
    for (int b = 0; b < block_truncation; ++b)
        for (Eigen::Index i = 0; i < d; ++i)
            for (int c = 0; c < grid_per_block; ++c)
                j((static_cast<Eigen::Index>(b) * grid_per_block + c) * d + i,
                  static_cast<Eigen::Index>(b) * d + i) = mass;
    out.set_coarse_embedding(std::move(j));
    out.set_notes(
        "translation on " + std::to_string(cells) + " cells x " + std::to_string(d) +
        " slots; cells shifted past the truncation tail are dropped (boundary loss)");
    return out;
}

SemigroupRealization embed_zero_infinite(int truncation) {
    if (truncation < 1)
        throw std::invalid_argument("embed_zero_infinite: truncation must be positive");
    const Eigen::Index cells = truncation;
    const double h = 1.0 / truncation;
    auto evaluator = [cells, h](double t) {
        const Eigen::Index k = static_cast<Eigen::Index>(std::llround(t / h));
        return cell_translation(cells, 1, std::min(k, cells));
    };
    SemigroupRealization out(EmbeddingMethod::NilpotentShift, cells, GridTimes{h},
                             std::move(evaluator), MatrixOperator::zero(cells));
    out.set_notes("nilpotent grid translation on L2[0,1]; dead from t >= 1");
    return out;
}

std::variant<SemigroupRealization, EmbeddabilityVerdict>
embed_isometry(const StructuredOperator& v, int depth, int grid_per_block) {
    if (!is_interior_isometric(v))
        throw std::invalid_argument("embed_isometry: input is not an interior isometry");
    const WoldDecomposition w = wold_decompose(v, depth);

    if (w.multiplicity.is_finite() && !w.multiplicity.is_zero()) {
        const KernelDefect kd = kernel_defect(v);
        return EmbeddabilityVerdict(NotEmbeddable{kd.kernel, kd.cokernel});
    }
    if (w.multiplicity.is_zero()) return embed_unitary(materialize(v));

    // Infinite multiplicity: unitary part via the spectral theorem, shift
    // part as a translation semigroup on the refined grid, joined on the
    // common lattice.
    const Matrix vm = materialize(v).mat();
    const Eigen::Index wander = w.wandering_basis.cols();
    SemigroupRealization shift_part = embed_shift_translation(
        static_cast<int>(wander), depth, grid_per_block);

    Matrix shift_basis(vm.rows(), static_cast<Eigen::Index>(w.shift_blocks.size()) * wander);
    for (std::size_t b = 0; b < w.shift_blocks.size(); ++b)
        shift_basis.middleCols(static_cast<Eigen::Index>(b) * wander, wander) =
            w.shift_blocks[b];

    const Eigen::Index h0 = w.unitary_part_basis.cols();
    SemigroupRealization out = [&] {
        if (h0 == 0) return shift_part;
        const Matrix compression =
            w.unitary_part_basis.adjoint() * vm * w.unitary_part_basis;
        SemigroupRealization unitary_part = embed_unitary(MatrixOperator(compression));
        return direct_sum_realizations(unitary_part, shift_part,
                                       EmbeddingMethod::IsometryWold);
    }();

    // Identification from the ambient truncation: H0 compresses through its
    // basis, the shift blocks map to their refined cell functions. The
    // comparison subspace stops one block short of the depth horizon, where
    // V necessarily leaves the resolved span.
    const Matrix j_shift = *shift_part.coarse_embedding() * shift_basis.adjoint();
    Matrix j(out.dim(), vm.rows());
    if (h0 > 0) {
        j.topRows(h0) = w.unitary_part_basis.adjoint();
        j.bottomRows(j_shift.rows()) = j_shift;
    } else {
        j = j_shift;
    }
    out.set_coarse_embedding(std::move(j));
    const Eigen::Index resolved_blocks =
        static_cast<Eigen::Index>(w.shift_blocks.size()) - 1;
    Matrix restriction(vm.rows(), h0 + resolved_blocks * wander);
    if (h0 > 0) restriction.leftCols(h0) = w.unitary_part_basis;
    restriction.rightCols(resolved_blocks * wander) =
        shift_basis.leftCols(resolved_blocks * wander);
    out.set_coarse_restriction(std::move(restriction));
    out.set_notes(out.notes() + "; wold multiplicity " + w.multiplicity.to_string() +
                  ", unitary part dim " + std::to_string(h0));
    return out;
}

SemigroupRealization embed_compact_injective(const MatrixOperator& m, double cluster_radius,
                                             int nodes) {
    const Eigen::Index n = m.dim();
    const RankReport rr = rank_analysis(m);
    if (!rr.kernel_dim.is_zero())
        throw std::invalid_argument("embed_compact_injective: input is numerically singular");

    const std::vector<Complex> eigs = spectrum(m);
    double min_mod = std::abs(eigs.front());
    for (Complex z : eigs) min_mod = std::min(min_mod, std::abs(z));
    if (cluster_radius <= 0.0) cluster_radius = 0.1 * min_mod;

    const auto clusters = cluster_points(eigs, cluster_radius);

    // One Riesz projection per spectral cluster; each circle must keep all
    // other eigenvalues outside and stay clear of 0.
    std::vector<Matrix> bases;
    std::vector<Matrix> generators;
    Eigen::Index total_rank = 0;
    for (const auto& cluster : clusters) {
        std::vector<Complex> inside;
        std::vector<Complex> outside;
        for (std::size_t i = 0; i < eigs.size(); ++i) {
            const bool member =
                std::find(cluster.begin(), cluster.end(), i) != cluster.end();
            (member ? inside : outside).push_back(eigs[i]);
        }
        ContourConstraints constraints;
        constraints.exclude_points = outside;
        constraints.zero_clearance = 0.25 * cluster_radius;
        Contour circle;
        try {
            circle = design_contour(inside, constraints, nodes);
        } catch (const NumericalError&) {
            throw NumericalError(
                "embed_compact_injective: cluster too close to 0 or to its "
                "neighbours relative to the cluster radius");
        }
        const MatrixOperator p = riesz_projection(m, circle);

        const double trace_rank = p.mat().trace().real();
        const Eigen::Index r = static_cast<Eigen::Index>(std::llround(trace_rank));
        Eigen::JacobiSVD<Matrix> svd(p.mat(), Eigen::ComputeThinU);
        Eigen::Index r_svd = 0;
        for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > 0.5) ++r_svd;
        if (r != r_svd || r < 1)
            throw NumericalError("embed_compact_injective: projector rank is ambiguous");
        const Matrix basis = svd.matrixU().leftCols(r);

        const Matrix block = basis.adjoint() * m.mat() * basis;
        SemigroupRealization block_embedding = embed_dense_invertible(MatrixOperator(block), nodes);
        bases.push_back(basis);
        generators.push_back(block_embedding.generator()->mat());
        total_rank += r;
    }
    if (total_rank != n)
        throw NumericalError("embed_compact_injective: cluster ranks do not fill the space");

    Matrix x(n, n);
    Matrix block_gen = Matrix::Zero(n, n);
    Eigen::Index off = 0;
    for (std::size_t c = 0; c < bases.size(); ++c) {
        const Eigen::Index r = bases[c].cols();
        x.middleCols(off, r) = bases[c];
        block_gen.block(off, off, r, r) = generators[c];
        off += r;
    }
    Eigen::JacobiSVD<Matrix> xsvd(x);
    const double cond = xsvd.singularValues()(0) / xsvd.singularValues()(n - 1);
    if (!(cond < 1e8))
        throw NumericalError("embed_compact_injective: projector decomposition is too "
                             "ill-conditioned (cond " + std::to_string(cond) + ")");

    Eigen::PartialPivLU<Matrix> lu(x);
    const Matrix generator = x * block_gen * lu.solve(Matrix::Identity(n, n));

    auto evaluator = [g = MatrixOperator(generator)](double t) {
        return matrix_exp(g, t).mat();
    };
    SemigroupRealization out(EmbeddingMethod::CompactRiesz, n, ContinuousTimes{},
                             std::move(evaluator), m);
    out.set_generator(MatrixOperator(generator));
    out.set_group(true);
    out.set_notes("riesz splitting into " + std::to_string(bases.size()) +
                  " spectral clusters, radius " + std::to_string(cluster_radius));
    return out;
}

SemigroupRealization embed_volterra(int grid_size) {
    if (grid_size < 16)
        throw std::invalid_argument("embed_volterra: grid size must be >= 16");
    const Eigen::Index n = grid_size;
    const double h = 1.0 / grid_size;
    const Matrix v = materialize(StructuredOperator(Volterra{grid_size})).mat();

    // Product integration of the Riemann-Liouville kernel against
    // piecewise-constant functions on the midpoint grid: the cell integrals
    // of (tau - s)^{t-1} are evaluated in closed form, so the endpoint
    // singularity costs no accuracy.
    auto fractional = [n, h](double t) {
        Matrix f = Matrix::Zero(n, n);
        const double g = std::tgamma(t + 1.0);
        for (Eigen::Index i = 0; i < n; ++i) {
            const double tau = (static_cast<double>(i) + 0.5) * h;
            for (Eigen::Index j = 0; j < i; ++j)
                f(i, j) = (std::pow(tau - j * h, t) - std::pow(tau - (j + 1) * h, t)) / g;
            f(i, i) = std::pow(h / 2.0, t) / g;
        }
        return f;
    };
    auto evaluator = [n, v, fractional](double t) {
        if (t == 0.0) return Matrix(Matrix::Identity(n, n));
        const double integral_part = std::floor(t);
        const double frac = t - integral_part;
        Matrix result =
            frac > 0.0 ? fractional(frac) : Matrix(Matrix::Identity(n, n));
        for (int k = 0; k < static_cast<int>(integral_part); ++k) result = v * result;
        return result;
    };
    SemigroupRealization out(EmbeddingMethod::VolterraFractional, n, ContinuousTimes{},
                             std::move(evaluator), MatrixOperator(v));
    out.set_notes("fractional integration of order t on the midpoint grid; the "
                  "generator (log of a quasinilpotent operator) is unbounded");
    return out;
}

namespace {

// Kernel-splitting path for a diagonal normal operator with declared
// infinite-dimensional kernel: nonzero eigenvalues flow as a normal
// semigroup, the kernel coordinates embed into the nilpotent translation.
SemigroupRealization embed_diagonal_with_kernel(const Diagonal& d,
                                                const EmbedOptions& options) {
    std::vector<Complex> nonzero;
    std::vector<Eigen::Index> nonzero_pos;
    std::vector<Eigen::Index> zero_pos;
    for (std::size_t i = 0; i < d.eigenvalues.size(); ++i) {
        if (d.eigenvalues[i] == Complex(0.0, 0.0))
            zero_pos.push_back(static_cast<Eigen::Index>(i));
        else {
            nonzero.push_back(d.eigenvalues[i]);
            nonzero_pos.push_back(static_cast<Eigen::Index>(i));
        }
    }
    const Eigen::Index n = static_cast<Eigen::Index>(d.eigenvalues.size());
    const int grid = options.grid_per_block;
    const int zero_cells = static_cast<int>(zero_pos.size()) * grid;

    SemigroupRealization zero_part = embed_zero_infinite(zero_cells);
    if (nonzero.empty()) return zero_part;

    SemigroupRealization normal_part =
        embed_normal(nonzero, std::vector<double>(nonzero.size(), 1.0));
    SemigroupRealization out = direct_sum_realizations(normal_part, zero_part,
                                                       EmbeddingMethod::NormalSpectral);

    // Identification with the original coordinate order: nonzero entries map
    // to their slot in the normal block, kernel entries to uniform cell
    // groups of the nilpotent block.
    Matrix j = Matrix::Zero(out.dim(), n);
    for (std::size_t p = 0; p < nonzero_pos.size(); ++p)
        j(static_cast<Eigen::Index>(p), nonzero_pos[p]) = 1.0;
    const Eigen::Index base = static_cast<Eigen::Index>(nonzero.size());
    const double mass = 1.0 / std::sqrt(static_cast<double>(grid));
    for (std::size_t z = 0; z < zero_pos.size(); ++z)
        for (int c = 0; c < grid; ++c)
            j(base + static_cast<Eigen::Index>(z) * grid + c, zero_pos[z]) = mass;
    out.set_coarse_embedding(std::move(j));
    out.set_notes("normal semigroup with the declared-infinite kernel split into a "
                  "nilpotent translation part");
    return out;
}

} // namespace

std::variant<SemigroupRealization, EmbeddabilityVerdict>
construct_embedding(const StructuredOperator& op, const EmbedOptions& options) {
    const EmbeddabilityVerdict verdict = classify(op);
    const auto* embeddable = verdict.as_embeddable();
    if (!embeddable) return verdict;
    const EmbeddingMethod method = embeddable->method;

    if (const auto* dense = op.get_if<Dense>())
        return embed_dense_invertible(dense->matrix, options.contour_nodes);

    if (const auto* diag = op.get_if<Diagonal>()) {
        if (method == EmbeddingMethod::DiagonalBranch)
            return embed_diagonal(diag->eigenvalues, options.branch_offsets);
        return embed_diagonal_with_kernel(*diag, options);
    }

    if (const auto* mult = op.get_if<Multiplication>())
        return embed_normal(mult->sample_points, mult->sample_weights);

    if (const auto* volterra = op.get_if<Volterra>())
        return embed_volterra(volterra->grid_size);

    if (const auto* zero = op.get_if<ZeroOperator>())
        return embed_zero_infinite(zero->truncation);

    if (const auto* shift = op.get_if<BlockRightShift>())
        return embed_shift_translation(shift->fiber_truncation, shift->block_truncation,
                                       options.grid_per_block);

    if (op.get_if<BlockLeftShift>()) {
        auto adj = construct_embedding(structured_adjoint(op), options);
        return adjoint_realization(std::get<SemigroupRealization>(adj), method);
    }

    if (op.get_if<DirectSum>()) {
        if (is_interior_isometric(op)) {
            const KernelDefect kd = kernel_defect(op);
            if (kd.cokernel.is_zero()) return embed_unitary(materialize(op));
            return embed_isometry(op, options.wold_depth, options.grid_per_block);
        }
        if (is_interior_coisometric(op)) {
            auto adj = construct_embedding(structured_adjoint(op), options);
            return adjoint_realization(std::get<SemigroupRealization>(adj), method);
        }
        const auto* ds = op.get_if<DirectSum>();
        std::vector<SemigroupRealization> parts;
        parts.reserve(ds->parts.size());
        for (const auto& part : ds->parts) {
            auto sub = construct_embedding(part, options);
            parts.push_back(std::get<SemigroupRealization>(std::move(sub)));
        }
        SemigroupRealization acc = std::move(parts.front());
        for (std::size_t i = 1; i < parts.size(); ++i)
            acc = direct_sum_realizations(acc, parts[i], method);
        return acc;
    }

    return verdict; // unreachable for embeddable verdicts
}

} // namespace c0embed
