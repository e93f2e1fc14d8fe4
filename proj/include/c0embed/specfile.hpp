#ifndef C0EMBED_SPECFILE_HPP
#define C0EMBED_SPECFILE_HPP

#include <optional>
#include <string>
#include <vector>

#include "c0embed/contour.hpp"
#include "c0embed/structured_operator.hpp"

namespace c0embed {

// Per-file option overrides; CLI flags take precedence over these.
struct SpecOptions {
    std::optional<int> nodes;
    std::optional<int> grid;
    std::optional<int> depth;
    std::vector<int> branch;
    std::optional<double> tol;
    std::optional<unsigned> seed;
};

struct OperatorSpec {
    StructuredOperator op;
    std::optional<Contour> contour;
    SpecOptions options;
};

// Parse an operator spec document (JSON key-value tree; complex scalars as
// [re, im] pairs). Parsing is strict: unknown keys are rejected with a
// field-path diagnostic. Throws ParseError.
OperatorSpec parse_operator_spec(const std::string& text);
OperatorSpec load_operator_spec(const std::string& path);

// Inverse of parsing, used by tests and the demo corpus writer.
std::string serialize_operator_spec(const StructuredOperator& op);

} // namespace c0embed

#endif
