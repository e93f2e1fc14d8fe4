#ifndef C0EMBED_ERROR_HPP
#define C0EMBED_ERROR_HPP

#include <stdexcept>
#include <string>

namespace c0embed {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numerical procedure failed at runtime (non-convergence, conditioning
// guard tripped, quadrature self-check violated, ...). Distinct from a
// precondition violation, which is reported as std::invalid_argument.
class NumericalError : public Error {
public:
    using Error::Error;
};

// A requested dense materialization exceeds the configured size cap.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

// Operator spec file could not be parsed or contains unknown keys.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace c0embed

#endif
