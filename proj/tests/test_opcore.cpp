#include <doctest.h>

#include <random>

#include "c0embed/error.hpp"
#include "c0embed/random_ops.hpp"
#include "c0embed/rank.hpp"
#include "c0embed/spectrum.hpp"
#include "c0embed/structured_operator.hpp"

using namespace c0embed;

TEST_CASE("cardinal arithmetic and order") {
    const CardinalDim two = CardinalDim::finite(2);
    const CardinalDim inf = CardinalDim::infinite();
    CHECK(CardinalDim::finite(0) < two);
    CHECK(two < inf);
    CHECK(two + inf == inf);
    CHECK(two + CardinalDim::finite(3) == CardinalDim::finite(5));
    CHECK(inf + inf == inf);
    CHECK(inf.to_string() == "infinite");
    CHECK(two.to_string() == "finite(2)");
}

TEST_CASE("matrix operator validation") {
    CHECK_THROWS_AS(MatrixOperator(Matrix::Zero(2, 3)), std::invalid_argument);
    Matrix bad = Matrix::Zero(2, 2);
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(MatrixOperator(bad), std::invalid_argument);
}

TEST_CASE("materialize: zero, volterra, shift") {
    // Zero on a one-dimensional space.
    const MatrixOperator z = materialize(ZeroOperator{CardinalDim::finite(1), 1});
    CHECK(z.dim() == 1);
    CHECK(z.mat()(0, 0) == Complex(0.0));

    // Volterra(2) under the midpoint rule: h * [[1/2, 0], [1, 1/2]], h = 1/2.
    // Exact entries follow from integrating the piecewise-constant basis.
    const MatrixOperator v = materialize(Volterra{2});
    CHECK(v.mat()(0, 0) == Complex(0.25));
    CHECK(v.mat()(0, 1) == Complex(0.0));
    CHECK(v.mat()(1, 0) == Complex(0.5));
    CHECK(v.mat()(1, 1) == Complex(0.25));

    // Right shift with scalar fiber: ones on the first subdiagonal.
    const MatrixOperator s = materialize(BlockRightShift{CardinalDim::finite(1), 1, 3});
    Matrix expect = Matrix::Zero(3, 3);
    expect(1, 0) = 1.0;
    expect(2, 1) = 1.0;
    CHECK((s.mat() - expect).norm() == 0.0);
}

TEST_CASE("materialize cap reports a resource limit") {
    CHECK_THROWS_AS(materialize(ZeroOperator{CardinalDim::infinite(), 5000}),
                    ResourceLimitError);
}

TEST_CASE("structured validation rejects inconsistent declarations") {
    CHECK_THROWS_AS(StructuredOperator(Diagonal{{Complex(1.0)}, CardinalDim::finite(1),
                                                CardinalDim::finite(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(StructuredOperator(Diagonal{{Complex(0.0)}, CardinalDim::finite(1),
                                                CardinalDim::finite(0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(StructuredOperator(ZeroOperator{CardinalDim::finite(2), 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(StructuredOperator(BlockRightShift{CardinalDim::finite(2), 3, 4}),
                    std::invalid_argument);
    CHECK_THROWS_AS(StructuredOperator(Multiplication{{Complex(1.0)}, {1.0, 2.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(StructuredOperator(Multiplication{{Complex(1.0)}, {-1.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(StructuredOperator(DirectSum{{}}), std::invalid_argument);
}

TEST_CASE("rank analysis on the reference cases") {
    const RankReport id3 = rank_analysis(MatrixOperator::identity(3));
    CHECK(id3.rank == 3);
    CHECK(id3.kernel_dim == CardinalDim::finite(0));
    CHECK(id3.cokernel_dim == CardinalDim::finite(0));

    Matrix j2 = Matrix::Zero(2, 2);
    j2(0, 1) = 1.0;
    const RankReport jr = rank_analysis(MatrixOperator(j2));
    CHECK(jr.rank == 1);
    CHECK(jr.kernel_dim == CardinalDim::finite(1));
    CHECK(jr.cokernel_dim == CardinalDim::finite(1));
    CHECK(jr.singular_values[0] == doctest::Approx(1.0));

    Matrix d = Matrix::Zero(3, 3);
    d(0, 0) = 1.0;
    d(2, 2) = 2.0;
    const RankReport dr = rank_analysis(MatrixOperator(d));
    CHECK(dr.rank == 2);
    CHECK(dr.kernel_dim == CardinalDim::finite(1));
}

TEST_CASE("rank-nullity holds exactly for random matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(trial % 9);
        const Eigen::Index r = static_cast<Eigen::Index>(trial) % (n + 1);
        const RankReport report = rank_analysis(MatrixOperator(random_rank(n, r, rng)));
        CHECK(report.rank + static_cast<Eigen::Index>(report.kernel_dim.finite_value()) == n);
        CHECK(report.kernel_dim == report.cokernel_dim);
        CHECK(report.rank == r);
    }
}

TEST_CASE("tolerance monotonicity of the numerical kernel") {
    std::mt19937_64 rng(5);
    const MatrixOperator m(random_rank(6, 4, rng));
    std::size_t last = 0;
    for (double tol : {1e-12, 1e-6, 1e-2, 0.4, 1.0, 3.0}) {
        const RankReport r = rank_analysis(m, tol);
        CHECK(r.kernel_dim.finite_value() >= last);
        last = r.kernel_dim.finite_value();
    }
}

TEST_CASE("kernel defect: symbolic variants") {
    const KernelDefect shift = kernel_defect(BlockRightShift{CardinalDim::infinite(), 4, 8});
    CHECK(shift.kernel == CardinalDim::finite(0));
    CHECK(shift.cokernel == CardinalDim::infinite());

    const KernelDefect diag = kernel_defect(
        Diagonal{{Complex(1.0), Complex(0.0, 1.0), Complex(-1.0)}, CardinalDim::finite(0),
                 CardinalDim::finite(0)});
    CHECK(diag.kernel == CardinalDim::finite(0));
    CHECK(diag.cokernel == CardinalDim::finite(0));

    DirectSum both;
    both.parts.push_back(BlockRightShift{CardinalDim::infinite(), 2, 4});
    both.parts.push_back(BlockLeftShift{CardinalDim::infinite(), 2, 4});
    const KernelDefect sum = kernel_defect(both);
    CHECK(sum.kernel == CardinalDim::infinite());
    CHECK(sum.cokernel == CardinalDim::infinite());

    const KernelDefect mult = kernel_defect(
        Multiplication{{Complex(0.0), Complex(0.5)}, {1.0, 1.0}});
    CHECK(mult.kernel == CardinalDim::finite(1));
    CHECK(mult.cokernel == CardinalDim::finite(1));
}

TEST_CASE("spectrum ordering and reference cases") {
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = Complex(0.0, 3.0);
    const auto eigs = spectrum(MatrixOperator(d));
    CHECK(std::abs(eigs[0] - Complex(0.0, 3.0)) < 1e-12);
    CHECK(std::abs(eigs[1] - Complex(2.0)) < 1e-12);

    Matrix j2 = Matrix::Zero(2, 2);
    j2(0, 1) = 1.0;
    for (Complex z : spectrum(MatrixOperator(j2))) CHECK(std::abs(z) < 1e-8);

    // The Volterra truncation is triangular with constant diagonal h/2, so
    // its eigenvalues sit at 0.005; quasinilpotency shows as a collapse
    // toward 0.
    for (Complex z : spectrum(materialize(Volterra{100}))) CHECK(std::abs(z) < 0.05);
}

TEST_CASE("spectrum of a diagonal materialization is its diagonal multiset") {
    std::vector<Complex> eigs{Complex(0.3, 0.1), Complex(-2.0), Complex(0.3, 0.1),
                              Complex(1.0, -1.0)};
    auto got = spectrum(materialize(
        Diagonal{eigs, CardinalDim::finite(0), CardinalDim::finite(0)}));
    auto key = [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    };
    std::sort(eigs.begin(), eigs.end(), key);
    std::sort(got.begin(), got.end(), key);
    for (std::size_t i = 0; i < eigs.size(); ++i) CHECK(std::abs(eigs[i] - got[i]) < 1e-10);
}

TEST_CASE("declared cardinals are reproduced by large truncations") {
    // Two truncation sizes per variant with finite declared cardinals.
    for (int n : {8, 16}) {
        std::vector<Complex> eigs;
        for (int k = 0; k < n; ++k)
            eigs.push_back(k < 2 ? Complex(0.0) : Complex(1.0 + 0.1 * k));
        const StructuredOperator op(
            Diagonal{eigs, CardinalDim::finite(2), CardinalDim::finite(2)});
        const RankReport r = rank_analysis(materialize(op));
        CHECK(r.kernel_dim == kernel_defect(op).kernel);
    }
    for (int n : {16, 32}) {
        const RankReport r = rank_analysis(materialize(Volterra{n}));
        CHECK(r.kernel_dim == CardinalDim::finite(0));
    }
    // A square shift truncation cannot show (0, d): rank-nullity forces the
    // kernel to match the boundary block, so only the cokernel side is
    // reproduced numerically.
    for (int blocks : {4, 8}) {
        const StructuredOperator op(BlockRightShift{CardinalDim::finite(2), 2, blocks});
        const RankReport r = rank_analysis(materialize(op));
        CHECK(r.cokernel_dim == kernel_defect(op).cokernel);
    }
}

TEST_CASE("interior mask marks the boundary block of shifts") {
    const auto mask = interior_mask(BlockRightShift{CardinalDim::finite(2), 2, 3});
    const std::vector<bool> expect{true, true, true, true, false, false};
    CHECK(mask == expect);

    DirectSum sum;
    sum.parts.push_back(ZeroOperator{CardinalDim::finite(1), 1});
    sum.parts.push_back(BlockRightShift{CardinalDim::finite(1), 1, 2});
    const auto sum_mask = interior_mask(sum);
    CHECK(sum_mask == std::vector<bool>{true, true, false});
}

TEST_CASE("structured adjoint swaps the shifts and conjugates") {
    const StructuredOperator op(BlockRightShift{CardinalDim::infinite(), 2, 4});
    const StructuredOperator adj = structured_adjoint(op);
    CHECK(adj.get_if<BlockLeftShift>() != nullptr);
    CHECK((materialize(adj).mat() - materialize(op).mat().adjoint()).norm() == 0.0);

    DirectSum sum;
    sum.parts.push_back(Diagonal{{Complex(0.0, 1.0)}, CardinalDim::finite(0),
                                 CardinalDim::finite(0)});
    sum.parts.push_back(Volterra{4});
    const StructuredOperator sum_adj = structured_adjoint(sum);
    CHECK((materialize(sum_adj).mat() - materialize(StructuredOperator(sum)).mat().adjoint())
              .norm() == 0.0);
}
