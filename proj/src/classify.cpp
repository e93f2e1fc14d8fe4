#include "c0embed/classify.hpp"

#include <algorithm>

#include "c0embed/rank.hpp"

namespace c0embed {

namespace {

bool finite_nonzero(CardinalDim c) { return c.is_finite() && !c.is_zero(); }

// Structural detection of a pure-shift isometry (no unitary summand).
bool pure_right_shift_structure(const StructuredOperator& op) {
    if (op.get_if<BlockRightShift>()) return true;
    if (const auto* ds = op.get_if<DirectSum>())
        return std::all_of(ds->parts.begin(), ds->parts.end(),
                           pure_right_shift_structure);
    return false;
}

bool tag_in(EmbeddingMethod m, std::initializer_list<EmbeddingMethod> family) {
    return std::find(family.begin(), family.end(), m) != family.end();
}

EmbeddingMethod combine_tags(const std::vector<EmbeddingMethod>& tags) {
    if (std::all_of(tags.begin(), tags.end(),
                    [&](EmbeddingMethod m) { return m == tags.front(); }))
        return tags.front();
    const bool all_isometry = std::all_of(tags.begin(), tags.end(), [](EmbeddingMethod m) {
        return tag_in(m, {EmbeddingMethod::UnitarySpectral, EmbeddingMethod::ShiftTranslation,
                          EmbeddingMethod::IsometryWold});
    });
    if (all_isometry) return EmbeddingMethod::IsometryWold;
    const bool all_normal = std::all_of(tags.begin(), tags.end(), [](EmbeddingMethod m) {
        return tag_in(m, {EmbeddingMethod::DiagonalBranch, EmbeddingMethod::NormalSpectral,
                          EmbeddingMethod::NilpotentShift, EmbeddingMethod::UnitarySpectral});
    });
    if (all_normal) return EmbeddingMethod::NormalSpectral;
    return tags.front();
}

} // namespace

bool is_interior_isometric(const StructuredOperator& op, double tol) {
    const Matrix v = materialize(op).mat();
    const Matrix g = v.adjoint() * v - Matrix::Identity(v.rows(), v.cols());
    return interior_restricted_norm(g, interior_mask(op)) <= tol;
}

bool is_interior_coisometric(const StructuredOperator& op, double tol) {
    const Matrix v = materialize(op).mat();
    const Matrix g = v * v.adjoint() - Matrix::Identity(v.rows(), v.cols());
    return interior_restricted_norm(g, interior_mask(op)) <= tol;
}

EmbeddabilityVerdict classify(const StructuredOperator& op) {
    const KernelDefect kd = kernel_defect(op);

    // (1) the necessary condition: kernel and cokernel cardinals must each
    // be zero or infinite.
    if (finite_nonzero(kd.kernel) || finite_nonzero(kd.cokernel))
        return NotEmbeddable{kd.kernel, kd.cokernel};

    // (2) dense and numerically invertible: functional-calculus logarithm.
    if (op.get_if<Dense>()) {
        if (kd.kernel.is_zero()) return Embeddable{EmbeddingMethod::DunfordLog};
        return Unknown{OpenCase::UnclassifiedStructure}; // unreachable for dense
    }

    // (3) diagonal spectral form: per-eigenvalue logarithm branches when
    // injective; an infinite-kernel diagonal splits its kernel into a
    // nilpotent part and embeds as a normal semigroup.
    if (op.get_if<Diagonal>()) {
        if (kd.kernel.is_zero()) return Embeddable{EmbeddingMethod::DiagonalBranch};
        return Embeddable{EmbeddingMethod::NormalSpectral};
    }

    // (4) interior isometries: unitary or infinite shift multiplicity.
    if (is_interior_isometric(op)) {
        if (kd.cokernel.is_zero()) return Embeddable{EmbeddingMethod::UnitarySpectral};
        if (kd.cokernel.is_infinite())
            return Embeddable{pure_right_shift_structure(op)
                                  ? EmbeddingMethod::ShiftTranslation
                                  : EmbeddingMethod::IsometryWold};
    }

    // (5) interior co-isometries: the adjoint mirror (injective or
    // infinite-dimensional kernel), realized through the adjoint semigroup.
    if (is_interior_coisometric(op)) {
        if (kd.kernel.is_zero()) return Embeddable{EmbeddingMethod::UnitarySpectral};
        if (kd.kernel.is_infinite()) return Embeddable{EmbeddingMethod::ShiftTranslation};
    }

    // (6) spectral-form normal operator; zero samples carry a finite kernel
    // and were already rejected at (1).
    if (op.get_if<Multiplication>()) return Embeddable{EmbeddingMethod::NormalSpectral};

    // (7) the Volterra operator embeds into fractional integration.
    if (op.get_if<Volterra>()) return Embeddable{EmbeddingMethod::VolterraFractional};

    // (8) zero on an infinite-dimensional space: nilpotent translation.
    if (op.get_if<ZeroOperator>()) return Embeddable{EmbeddingMethod::NilpotentShift};

    // (9) direct sums: recurse. All parts embeddable combine block-wise.
    // Otherwise the sum passed (1) only because an infinite sibling cardinal
    // absorbed a part's finite defect; no reducing-subspace construction
    // exists and the necessary condition no longer forbids it. That is the
    // open case for compact-like operators with infinite-dimensional kernel.
    if (const auto* ds = op.get_if<DirectSum>()) {
        std::vector<EmbeddingMethod> tags;
        bool all_embeddable = true;
        for (const auto& part : ds->parts) {
            const EmbeddabilityVerdict v = classify(part);
            if (const auto* e = v.as_embeddable())
                tags.push_back(e->method);
            else
                all_embeddable = false;
        }
        if (all_embeddable) return Embeddable{combine_tags(tags)};
        if (kd.kernel.is_infinite() || kd.cokernel.is_infinite())
            return Unknown{OpenCase::CompactInfiniteKernel};
        return Unknown{OpenCase::UnclassifiedStructure};
    }

    // (10) fallback.
    return Unknown{OpenCase::UnclassifiedStructure};
}

std::string EmbeddabilityVerdict::to_string() const {
    if (const auto* e = as_embeddable()) return "embeddable(" + method_name(e->method) + ")";
    if (const auto* n = as_not_embeddable())
        return "not_embeddable(kernel=" + n->kernel_dim.to_string() +
               ", cokernel=" + n->cokernel_dim.to_string() + ")";
    const auto* u = as_unknown();
    return std::string("unknown(") +
           (u->open_case == OpenCase::CompactInfiniteKernel ? "compact_infinite_kernel"
                                                            : "unclassified_structure") +
           ")";
}

} // namespace c0embed
