#ifndef C0EMBED_REPORT_HPP
#define C0EMBED_REPORT_HPP

#include <optional>
#include <string>

#include "c0embed/semigroup.hpp"
#include "c0embed/structured_operator.hpp"
#include "c0embed/verdict.hpp"
#include "c0embed/verify.hpp"

namespace c0embed {

// Reports are structured text followed by a machine-readable JSON footer.
// Rendering is deterministic: fixed key order, fixed float formatting, no
// timestamps, so equal inputs give byte-identical reports.

std::string format_double(double v);

std::string render_verdict_report(const StructuredOperator& op,
                                  const EmbeddabilityVerdict& verdict);

std::string render_realization_report(const SemigroupRealization& s);

std::string render_verification_report(const SemigroupRealization& s,
                                       const VerificationReport& report,
                                       const VerifyTolerances& tol);

// CSV table of the continuity profile, columns `h,continuity_sup`.
std::string render_continuity_csv(const std::vector<ContinuityPoint>& profile);

} // namespace c0embed

#endif
