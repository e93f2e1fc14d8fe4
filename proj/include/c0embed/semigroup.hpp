#ifndef C0EMBED_SEMIGROUP_HPP
#define C0EMBED_SEMIGROUP_HPP

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "c0embed/matrix_operator.hpp"

namespace c0embed {

enum class EmbeddingMethod {
    DunfordLog,
    DiagonalBranch,
    UnitarySpectral,
    NormalSpectral,
    IsometryWold,
    ShiftTranslation,
    CompactRiesz,
    VolterraFractional,
    NilpotentShift,
};

std::string method_name(EmbeddingMethod m);

struct ContinuousTimes {};
struct GridTimes {
    double step;
};
using AdmissibleTimes = std::variant<ContinuousTimes, GridTimes>;

// Declared per-method verification budgets: quadrature-based constructions
// cannot meet the spectral-path tolerances and carry their measured budget.
struct MethodTolerances {
    double endpoint;
    double cocycle;
    double identity;
};
MethodTolerances method_tolerances(EmbeddingMethod m);

// An evaluable one-parameter family t -> T(t) with admissible time set,
// optional bounded generator, and construction provenance. Evaluation is a
// pure function of t and safe to call concurrently.
//
// Grid-based constructions (translations) live on a refined state space;
// `endpoint_target` is the matrix T(1) is built to reproduce on that space,
// and `coarse_embedding`, when present, is the canonical isometric
// identification J from the source truncation into the realization space.
class SemigroupRealization {
public:
    using Evaluator = std::function<Matrix(double)>;

    SemigroupRealization(EmbeddingMethod method, Eigen::Index dim, AdmissibleTimes times,
                         Evaluator evaluator, MatrixOperator endpoint_target);

    MatrixOperator evaluate(double t) const;

    EmbeddingMethod method() const { return method_; }
    Eigen::Index dim() const { return dim_; }
    const AdmissibleTimes& admissible_times() const { return times_; }
    const std::optional<MatrixOperator>& generator() const { return generator_; }
    const std::vector<int>& branch_offsets() const { return branch_offsets_; }
    const MatrixOperator& endpoint_target() const { return endpoint_target_; }
    const std::optional<Matrix>& coarse_embedding() const { return coarse_embedding_; }
    // Columns spanning the subspace on which the coarse comparison is
    // meaningful (the depth-resolved part for Wold routes); empty optional
    // means the whole coarse space.
    const std::optional<Matrix>& coarse_restriction() const { return coarse_restriction_; }
    const std::string& notes() const { return notes_; }
    bool is_group() const { return group_; }

    bool time_admissible(double t) const;
    // Largest admissible step <= h (the grid step itself for grid families).
    double snap_time(double t) const;

    void set_generator(MatrixOperator g) { generator_ = std::move(g); }
    void set_branch_offsets(std::vector<int> offs) { branch_offsets_ = std::move(offs); }
    void set_coarse_embedding(Matrix j) { coarse_embedding_ = std::move(j); }
    void set_coarse_restriction(Matrix r) { coarse_restriction_ = std::move(r); }
    void set_notes(std::string n) { notes_ = std::move(n); }
    void set_group(bool g) { group_ = g; }

private:
    EmbeddingMethod method_;
    Eigen::Index dim_;
    AdmissibleTimes times_;
    Evaluator evaluator_;
    std::optional<MatrixOperator> generator_;
    std::vector<int> branch_offsets_;
    MatrixOperator endpoint_target_;
    std::optional<Matrix> coarse_embedding_;
    std::optional<Matrix> coarse_restriction_;
    std::string notes_;
    bool group_ = false;
};

// Orthogonal direct sum of realizations. Continuous + Grid admissible sets
// downgrade to the common lattice.
SemigroupRealization direct_sum_realizations(const SemigroupRealization& a,
                                             const SemigroupRealization& b,
                                             EmbeddingMethod combined_method);

// T_n(t) = e^{2 pi i n t} T(t): same endpoint at t = 1, shifted generator.
SemigroupRealization rescale(const SemigroupRealization& s, int n_offset);

} // namespace c0embed

#endif
