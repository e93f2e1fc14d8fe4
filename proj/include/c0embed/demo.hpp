#ifndef C0EMBED_DEMO_HPP
#define C0EMBED_DEMO_HPP

#include <optional>
#include <string>
#include <vector>

#include "c0embed/constructors.hpp"
#include "c0embed/verify.hpp"

namespace c0embed {

// Built-in corpus covering every constructor method tag at least once, plus
// the negative exemplars and the rescaling non-uniqueness demonstration.
struct DemoRow {
    std::string name;
    std::string verdict;
    std::optional<EmbeddingMethod> method;
    std::optional<VerificationReport> verification;
    std::string detail;
    bool ok = true; // verdict as expected and, when verified, pass == true
};

struct DemoSummary {
    std::vector<DemoRow> rows;
    bool all_ok = true;
};

DemoSummary run_demo(unsigned seed, const EmbedOptions& options);

std::string render_demo_summary(const DemoSummary& summary);

} // namespace c0embed

#endif
