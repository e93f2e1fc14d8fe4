#include <doctest.h>

#include <cmath>
#include <random>

#include "c0embed/constructors.hpp"
#include "c0embed/random_ops.hpp"
#include "c0embed/report.hpp"
#include "c0embed/verify.hpp"

using namespace c0embed;

namespace {

SemigroupRealization identity_family(Eigen::Index n) {
    return embed_unitary(MatrixOperator::identity(n));
}

} // namespace

TEST_CASE("check_embedding accepts the identity semigroup") {
    const SemigroupRealization s = identity_family(3);
    const VerificationReport r = check_embedding(s, MatrixOperator::identity(3),
                                                 VerifyTolerances::for_method(s.method()));
    CHECK(r.endpoint_residual <= 1e-14);
    CHECK(r.cocycle_residual_max <= 1e-14);
    CHECK(r.identity_residual <= 1e-14);
    CHECK(r.pass);
}

TEST_CASE("check_embedding accepts a unitary construction end to end") {
    std::mt19937_64 rng(61);
    const Matrix u = random_unitary(8, rng);
    const SemigroupRealization s = embed_unitary(MatrixOperator(u));
    const VerificationReport r = check_embedding(s, MatrixOperator(u),
                                                 VerifyTolerances::for_method(s.method()));
    CHECK(r.endpoint_residual <= 1e-7);
    CHECK(r.cocycle_residual_max <= 1e-7);
    CHECK(r.pass);
    REQUIRE(r.generator_residual.has_value());
    CHECK(*r.generator_residual <= *r.generator_bound);
}

TEST_CASE("a corrupted endpoint fails verification (negative control)") {
    std::mt19937_64 rng(67);
    const Matrix m = random_invertible(4, rng, 0.2, 3.0);
    const SemigroupRealization honest = embed_dense_invertible(MatrixOperator(m));

    Matrix corruption = random_complex_gaussian(4, 4, rng);
    corruption *= 0.01 / spectral_norm(corruption);
    auto broken_eval = [honest, corruption](double t) {
        Matrix v = honest.evaluate(t).mat();
        if (t == 1.0) v += corruption;
        return v;
    };
    SemigroupRealization broken(honest.method(), honest.dim(), honest.admissible_times(),
                                broken_eval, honest.endpoint_target());
    const VerificationReport r = check_embedding(broken, honest.endpoint_target(),
                                                 VerifyTolerances::for_method(broken.method()));
    CHECK(r.endpoint_residual >= 5e-3);
    CHECK_FALSE(r.pass);
}

TEST_CASE("singular target paired with an invertible realization fails") {
    std::mt19937_64 rng(71);
    const Matrix m = random_invertible(4, rng, 0.2, 3.0);
    const SemigroupRealization s = embed_dense_invertible(MatrixOperator(m));
    const VerificationReport r = check_embedding(s, MatrixOperator(random_rank(4, 2, rng)),
                                                 VerifyTolerances::for_method(s.method()));
    CHECK_FALSE(r.pass);
    CHECK(r.endpoint_residual > 1e-3);
}

TEST_CASE("estimate_generator: scalar growth family") {
    const SemigroupRealization s = embed_diagonal({Complex(2.0)}, {});
    const MatrixOperator zero_est = estimate_generator(identity_family(2), 1.0 / 16.0);
    CHECK(spectral_norm(zero_est) < 1e-12);

    const double h = std::pow(2.0, -10.0);
    const double est = estimate_generator(s, h).mat()(0, 0).real();
    CHECK(std::abs(est - std::log(2.0)) < 4e-4);

    CHECK_THROWS_AS(estimate_generator(s, 0.5), std::invalid_argument);
}

TEST_CASE("estimate_generator of a slow unitary group is nearly skew") {
    // Small positive phases keep ||G|| ~ 0.1, so the first-order defect
    // h ||G||^2 sits below 1e-4 at h = 2^-8.
    std::mt19937_64 rng(73);
    const Matrix q = random_unitary(6, rng);
    Vector d(6);
    for (int k = 0; k < 6; ++k) d(k) = std::exp(Complex(0.0, 0.01 + 0.015 * k));
    const Matrix u = q * d.asDiagonal() * q.adjoint();
    const SemigroupRealization s = embed_unitary(MatrixOperator(u));
    const Matrix est = estimate_generator(s, std::pow(2.0, -8.0)).mat();
    CHECK(spectral_norm(Matrix(est + est.adjoint())) < 1e-4);
}

TEST_CASE("generator recovery is first order under halving") {
    std::mt19937_64 rng(79);
    const SemigroupRealization s = embed_unitary(MatrixOperator(random_unitary(6, rng)));
    double last = -1.0;
    for (int k = 4; k <= 10; ++k) {
        const double h = std::pow(2.0, -k);
        const double residual =
            spectral_norm(Matrix(estimate_generator(s, h).mat() - s.generator()->mat()));
        if (last > 0.0) {
            const double ratio = last / residual;
            CHECK(ratio >= 1.4);
            CHECK(ratio <= 2.6);
        }
        last = residual;
    }
}

TEST_CASE("continuity sweep profiles") {
    // Bounded generator: profile dominated by ||G|| h e^{h||G||}.
    const SemigroupRealization d = embed_diagonal({Complex(2.0), Complex(0.5)}, {});
    const double gen_norm = spectral_norm(*d.generator());
    const auto vectors = default_test_vectors(d.dim(), 1);
    std::vector<double> steps{0.5, 0.25, 0.125};
    const auto profile = continuity_sweep(d, vectors, steps);
    for (const auto& p : profile)
        CHECK(p.sup_residual <= gen_norm * p.h * std::exp(p.h * gen_norm) + 1e-12);

    // Grid translation of a one-cell vector: sqrt(2) plateau.
    const SemigroupRealization z = embed_zero_infinite(16);
    std::vector<Vector> cell{Vector::Zero(16)};
    cell[0](0) = 1.0;
    std::vector<double> lattice{0.5, 0.25, 0.125, 1.0 / 16.0};
    const auto plateau = continuity_sweep(z, cell, lattice);
    for (const auto& p : plateau)
        CHECK(p.sup_residual == doctest::Approx(std::sqrt(2.0)));

    // Constant identity family: all zeros.
    const auto zeros = continuity_sweep(identity_family(3),
                                        default_test_vectors(3, 1), steps);
    for (const auto& p : zeros) CHECK(p.sup_residual <= 1e-14);
}

TEST_CASE("grid realizations pass verification with plateaued profiles") {
    const SemigroupRealization s = embed_shift_translation(2, 6, 4);
    const VerificationReport r = check_embedding(s, s.endpoint_target(),
                                                 VerifyTolerances::for_method(s.method()));
    CHECK(r.endpoint_residual == 0.0);
    CHECK(r.cocycle_residual_max == 0.0);
    CHECK(r.continuity_nonincreasing);
    CHECK(r.pass);
}

TEST_CASE("reports are deterministic for a fixed seed") {
    std::mt19937_64 rng(83);
    const Matrix u = random_unitary(5, rng);
    const SemigroupRealization s = embed_unitary(MatrixOperator(u));
    const VerifyTolerances tol = VerifyTolerances::for_method(s.method());
    const VerificationReport a = check_embedding(s, MatrixOperator(u), tol, {}, 99);
    const VerificationReport b = check_embedding(s, MatrixOperator(u), tol, {}, 99);
    CHECK(render_verification_report(s, a, tol) == render_verification_report(s, b, tol));

    const std::string csv = render_continuity_csv(a.continuity_profile);
    CHECK(csv.rfind("h,continuity_sup\n", 0) == 0);
}

TEST_CASE("inadmissible samples are rejected") {
    const SemigroupRealization s = embed_zero_infinite(8);
    const std::vector<double> bad{0.3};
    CHECK_THROWS_AS(check_embedding(s, s.endpoint_target(),
                                    VerifyTolerances::for_method(s.method()), bad),
                    std::invalid_argument);
}
