#include "c0embed/demo.hpp"

#include <cmath>
#include <sstream>

#include "c0embed/classify.hpp"
#include "c0embed/contour.hpp"
#include "c0embed/random_ops.hpp"
#include "c0embed/report.hpp"

namespace c0embed {

namespace {

// Construct (or take) a realization, verify it against its endpoint target
// and, when an identification is declared, against the coarse truncation.
DemoRow verified_row(std::string name, const SemigroupRealization& s,
                     const std::optional<MatrixOperator>& coarse_target, unsigned seed) {
    DemoRow row;
    row.name = std::move(name);
    row.verdict = "embeddable";
    row.method = s.method();
    VerificationReport report = check_embedding(s, s.endpoint_target(),
                                                VerifyTolerances::for_method(s.method()),
                                                {}, seed);
    if (s.coarse_embedding() && coarse_target) {
        report.coarse_endpoint_residual = coarse_endpoint_residual(s, *coarse_target);
        const double budget = std::max(method_tolerances(s.method()).endpoint, 1e-7);
        report.pass = report.pass && *report.coarse_endpoint_residual <= budget;
    }
    row.ok = report.pass;
    std::ostringstream detail;
    detail << "endpoint " << format_double(report.endpoint_residual) << ", cocycle "
           << format_double(report.cocycle_residual_max);
    row.detail = detail.str();
    row.verification = std::move(report);
    return row;
}

DemoRow constructed_row(std::string name, const StructuredOperator& op,
                        const EmbedOptions& options, unsigned seed,
                        const char* expected_verdict) {
    auto result = construct_embedding(op, options);
    if (const auto* verdict = std::get_if<EmbeddabilityVerdict>(&result)) {
        DemoRow row;
        row.name = std::move(name);
        row.verdict = verdict->is_not_embeddable() ? "not_embeddable" : "unknown";
        row.detail = verdict->to_string();
        row.ok = row.verdict == expected_verdict;
        return row;
    }
    const auto& s = std::get<SemigroupRealization>(result);
    DemoRow row = verified_row(std::move(name), s, materialize(op), seed);
    row.ok = row.ok && std::string("embeddable") == expected_verdict;
    return row;
}

} // namespace

DemoSummary run_demo(unsigned seed, const EmbedOptions& options) {
    DemoSummary summary;
    std::mt19937_64 rng(seed);

    // Thm 3.1 negative exemplar: the nilpotent Jordan block.
    {
        Matrix j2(2, 2);
        j2 << 0.0, 1.0, 0.0, 0.0;
        summary.rows.push_back(constructed_row("jordan_block_nilpotent",
                                               Dense{MatrixOperator(j2)}, options, seed,
                                               "not_embeddable"));
    }

    // Unitary group with bounded skew-Hermitian generator.
    {
        const Matrix u = random_unitary(16, rng);
        summary.rows.push_back(
            verified_row("random_unitary_16", embed_unitary(MatrixOperator(u)), {}, seed));
    }

    // Finite-multiplicity shift: isometric but not embeddable.
    summary.rows.push_back(constructed_row(
        "shift_multiplicity_2",
        BlockRightShift{CardinalDim::finite(2), 2, 8}, options, seed, "not_embeddable"));

    // Infinite-multiplicity shift: translation semigroup on the refined grid.
    summary.rows.push_back(constructed_row(
        "shift_infinite", BlockRightShift{CardinalDim::infinite(), 2, 8}, options, seed,
        "embeddable"));

    // Wold route: unitary summand plus an infinite shift.
    {
        const Matrix u = random_unitary(6, rng);
        DirectSum sum;
        sum.parts.push_back(Dense{MatrixOperator(u)});
        sum.parts.push_back(BlockRightShift{CardinalDim::infinite(), 2, 10});
        summary.rows.push_back(
            constructed_row("unitary_plus_shift_infinite", sum, options, seed, "embeddable"));
    }

    // Diagonal with spectrum filling an annulus.
    {
        std::vector<Complex> annulus;
        for (int k = 0; k < 12; ++k) {
            const double r = 0.5 + 0.1 * k;
            annulus.push_back(std::polar(r, 2.0 * kPi * k / 12.0));
        }
        summary.rows.push_back(constructed_row(
            "annulus_diagonal",
            Diagonal{annulus, CardinalDim::finite(0), CardinalDim::finite(0)}, options,
            seed, "embeddable"));
    }

    // Normal operator in spectral form, contractive (samples in the disc).
    {
        std::vector<Complex> samples;
        std::vector<double> weights;
        for (int k = 0; k < 10; ++k) {
            samples.push_back(std::polar(0.15 + 0.08 * k, 0.6 * k));
            weights.push_back(1.0 / (k + 1.0));
        }
        summary.rows.push_back(constructed_row("multiplication_disc",
                                               Multiplication{samples, weights}, options,
                                               seed, "embeddable"));
    }

    // Volterra operator: fractional integration.
    summary.rows.push_back(
        constructed_row("volterra_200", Volterra{200}, options, seed, "embeddable"));

    // Compact-style spectrum in two clusters with in-cluster Jordan coupling.
    {
        Matrix blocks = Matrix::Zero(4, 4);
        blocks << Complex(1.0), Complex(0.3), Complex(0.0), Complex(0.0),
                  Complex(0.0), Complex(1.02), Complex(0.0), Complex(0.0),
                  Complex(0.0), Complex(0.0), Complex(0.1), Complex(0.05),
                  Complex(0.0), Complex(0.0), Complex(0.0), Complex(0.11);
        const Matrix q = random_unitary(4, rng);
        const Matrix m = q * blocks * q.adjoint();
        summary.rows.push_back(verified_row(
            "compact_two_clusters",
            embed_compact_injective(MatrixOperator(m), 0.05, options.contour_nodes), {},
            seed));
    }

    // The zero operator on an infinite-dimensional space.
    summary.rows.push_back(constructed_row(
        "zero_infinite", ZeroOperator{CardinalDim::infinite(), 64}, options, seed,
        "embeddable"));

    // Random invertible dense operator through the contour logarithm.
    {
        const Matrix m = random_invertible(6, rng, 0.15, 5.0);
        summary.rows.push_back(constructed_row("random_invertible_6",
                                               Dense{MatrixOperator(m)}, options, seed,
                                               "embeddable"));
    }

    // Normal operator with a finite kernel: forbidden by the dichotomy.
    summary.rows.push_back(constructed_row(
        "diag_0_1",
        Diagonal{{Complex(0.0), Complex(1.0)}, CardinalDim::finite(1), CardinalDim::finite(1)},
        options, seed, "not_embeddable"));

    // Rescaling non-uniqueness: all offsets share T(1), interior times differ.
    {
        std::vector<Complex> eigs{Complex(1.0), Complex(0.5, 0.5), Complex(0.0, 1.0)};
        const SemigroupRealization base = embed_diagonal(eigs, {});
        double endpoint_spread = 0.0;
        double half_time_min_gap = std::numeric_limits<double>::infinity();
        for (int a = -2; a <= 2; ++a) {
            const SemigroupRealization ra = rescale(base, a);
            endpoint_spread = std::max(
                endpoint_spread,
                spectral_norm(Matrix(ra.evaluate(1.0).mat() - base.evaluate(1.0).mat())));
        }
        for (int a = -2; a <= 2; ++a)
            for (int b = a + 1; b <= 2; ++b) {
                const double gap = spectral_norm(
                    Matrix(rescale(base, a).evaluate(0.5).mat() -
                           rescale(base, b).evaluate(0.5).mat()));
                if ((a - b) % 2 != 0) half_time_min_gap = std::min(half_time_min_gap, gap);
            }
        DemoRow row;
        row.name = "rescaling_family";
        row.verdict = "embeddable";
        row.method = EmbeddingMethod::DiagonalBranch;
        row.ok = endpoint_spread <= 1e-12 && half_time_min_gap >= 0.1;
        std::ostringstream detail;
        detail << "endpoint spread " << format_double(endpoint_spread)
               << ", odd-offset half-time gap " << format_double(half_time_min_gap);
        row.detail = detail.str();
        summary.rows.push_back(std::move(row));
    }

    for (const DemoRow& row : summary.rows) summary.all_ok = summary.all_ok && row.ok;
    return summary;
}

std::string render_demo_summary(const DemoSummary& summary) {
    std::ostringstream out;
    out << "== demo corpus summary ==\n";
    for (const DemoRow& row : summary.rows) {
        out << (row.ok ? "[ ok ] " : "[FAIL] ") << row.name << ": " << row.verdict;
        if (row.method) out << " via " << method_name(*row.method);
        if (!row.detail.empty()) out << " (" << row.detail << ")";
        out << "\n";
    }
    out << "all ok: " << (summary.all_ok ? "true" : "false") << "\n";
    return out.str();
}

} // namespace c0embed
