#include "c0embed/rank.hpp"

#include <limits>

#include <Eigen/SVD>

#include "c0embed/error.hpp"

namespace c0embed {

RankReport rank_analysis(const MatrixOperator& m, std::optional<double> tol) {
    const Eigen::Index n = m.dim();
    Eigen::JacobiSVD<Matrix> svd(m.mat());
    if (svd.info() != Eigen::Success)
        throw NumericalError("rank_analysis: singular value computation failed");

    RankReport report;
    report.singular_values.assign(svd.singularValues().data(),
                                  svd.singularValues().data() + n);
    const double sigma_max = report.singular_values.empty() ? 0.0 : report.singular_values[0];
    report.tolerance_used =
        tol.value_or(std::numeric_limits<double>::epsilon() * static_cast<double>(n) * sigma_max);

    Eigen::Index rank = 0;
    for (double s : report.singular_values)
        if (s > report.tolerance_used) ++rank;
    report.rank = rank;
    report.kernel_dim = CardinalDim::finite(static_cast<std::size_t>(n - rank));
    report.cokernel_dim = report.kernel_dim;
    return report;
}

} // namespace c0embed
