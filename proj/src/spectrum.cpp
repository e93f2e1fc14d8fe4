#include "c0embed/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "c0embed/error.hpp"

namespace c0embed {

std::vector<Complex> spectrum(const MatrixOperator& m) {
    Eigen::ComplexEigenSolver<Matrix> solver(m.mat(), /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw NumericalError("spectrum: eigenvalue iteration did not converge");

    std::vector<Complex> eigs(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + m.dim());
    std::sort(eigs.begin(), eigs.end(), [](Complex a, Complex b) {
        const double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) return ma > mb;
        const double pa = std::arg(a), pb = std::arg(b);
        if (pa != pb) return pa < pb;
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return eigs;
}

} // namespace c0embed
