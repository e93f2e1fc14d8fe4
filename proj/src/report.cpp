#include "c0embed/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace c0embed {

namespace {

using Json = nlohmann::ordered_json;

std::string footer(const Json& j) {
    return "-- machine-readable footer --\n" + j.dump() + "\n";
}

} // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

std::string render_verdict_report(const StructuredOperator& op,
                                  const EmbeddabilityVerdict& verdict) {
    std::ostringstream out;
    out << "== embeddability verdict ==\n";
    out << "operator: " << describe(op) << "\n";
    const KernelDefect kd = kernel_defect(op);
    out << "kernel dim: " << kd.kernel.to_string()
        << ", cokernel dim: " << kd.cokernel.to_string() << "\n";
    out << "verdict: " << verdict.to_string() << "\n";

    Json j;
    j["operator"] = describe(op);
    j["kernel_dim"] = kd.kernel.to_string();
    j["cokernel_dim"] = kd.cokernel.to_string();
    if (const auto* e = verdict.as_embeddable()) {
        j["verdict"] = "embeddable";
        j["method"] = method_name(e->method);
    } else if (const auto* n = verdict.as_not_embeddable()) {
        j["verdict"] = "not_embeddable";
        j["reason"] = "necessary condition violated";
        j["reason_kernel_dim"] = n->kernel_dim.to_string();
        j["reason_cokernel_dim"] = n->cokernel_dim.to_string();
    } else {
        j["verdict"] = "unknown";
        j["open_case"] = verdict.as_unknown()->open_case == OpenCase::CompactInfiniteKernel
                             ? "compact_infinite_kernel"
                             : "unclassified_structure";
    }
    out << footer(j);
    return out.str();
}

std::string render_realization_report(const SemigroupRealization& s) {
    std::ostringstream out;
    out << "== semigroup realization ==\n";
    out << "method: " << method_name(s.method()) << "\n";
    out << "state dimension: " << s.dim() << "\n";
    if (const auto* g = std::get_if<GridTimes>(&s.admissible_times()))
        out << "admissible times: grid, step " << format_double(g->step) << "\n";
    else
        out << "admissible times: continuous\n";
    out << "bounded generator: " << (s.generator() ? "yes" : "no") << "\n";
    if (!s.branch_offsets().empty()) {
        out << "branch offsets:";
        for (int k : s.branch_offsets()) out << " " << k;
        out << "\n";
    }
    if (!s.notes().empty()) out << "notes: " << s.notes() << "\n";

    Json j;
    j["method"] = method_name(s.method());
    j["dim"] = s.dim();
    if (const auto* g = std::get_if<GridTimes>(&s.admissible_times())) {
        j["times"] = "grid";
        j["grid_step"] = format_double(g->step);
    } else {
        j["times"] = "continuous";
    }
    j["has_generator"] = static_cast<bool>(s.generator());
    if (!s.branch_offsets().empty()) j["branch_offsets"] = s.branch_offsets();
    if (!s.notes().empty()) j["notes"] = s.notes();
    out << footer(j);
    return out.str();
}

std::string render_verification_report(const SemigroupRealization& s,
                                       const VerificationReport& report,
                                       const VerifyTolerances& tol) {
    std::ostringstream out;
    out << "== verification report ==\n";
    out << "method: " << method_name(s.method()) << "\n";
    out << "endpoint residual ||T(1) - target||: " << format_double(report.endpoint_residual)
        << " (tol " << format_double(tol.endpoint) << ")\n";
    out << "cocycle residual max: " << format_double(report.cocycle_residual_max) << " (tol "
        << format_double(tol.cocycle) << ")\n";
    out << "identity residual ||T(0) - I||: " << format_double(report.identity_residual)
        << " (tol " << format_double(tol.identity) << ")\n";
    out << "continuity profile (h -> sup ||T(h)x - x||):\n";
    for (const auto& p : report.continuity_profile)
        out << "  " << format_double(p.h) << " -> " << format_double(p.sup_residual) << "\n";
    out << "continuity non-increasing: " << (report.continuity_nonincreasing ? "yes" : "no")
        << " (floor " << format_double(tol.continuity_floor)
        << "; decreasing profiles are evidence of strong continuity, not proof; a "
           "plateau on a grid family is the finite-defect shift witness)\n";
    if (report.generator_residual)
        out << "generator recovery residual: " << format_double(*report.generator_residual)
            << " (first-order budget " << format_double(*report.generator_bound) << ")\n";
    if (report.coarse_endpoint_residual)
        out << "coarse endpoint residual (through identification): "
            << format_double(*report.coarse_endpoint_residual) << "\n";
    out << "samples: " << report.samples_used << "\n";
    out << "pass: " << (report.pass ? "true" : "false") << "\n";

    Json j;
    j["method"] = method_name(s.method());
    j["endpoint_residual"] = format_double(report.endpoint_residual);
    j["cocycle_residual_max"] = format_double(report.cocycle_residual_max);
    j["identity_residual"] = format_double(report.identity_residual);
    j["continuity_nonincreasing"] = report.continuity_nonincreasing;
    if (report.generator_residual) {
        j["generator_residual"] = format_double(*report.generator_residual);
        j["generator_bound"] = format_double(*report.generator_bound);
    }
    if (report.coarse_endpoint_residual)
        j["coarse_endpoint_residual"] = format_double(*report.coarse_endpoint_residual);
    j["tolerances"] = Json{{"endpoint", format_double(tol.endpoint)},
                           {"cocycle", format_double(tol.cocycle)},
                           {"identity", format_double(tol.identity)}};
    j["pass"] = report.pass;
    out << footer(j);
    return out.str();
}

std::string render_continuity_csv(const std::vector<ContinuityPoint>& profile) {
    std::ostringstream out;
    out << "h,continuity_sup\n";
    for (const auto& p : profile)
        out << format_double(p.h) << "," << format_double(p.sup_residual) << "\n";
    return out.str();
}

} // namespace c0embed
