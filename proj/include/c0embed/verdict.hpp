#ifndef C0EMBED_VERDICT_HPP
#define C0EMBED_VERDICT_HPP

#include <stdexcept>
#include <string>
#include <variant>

#include "c0embed/cardinal.hpp"
#include "c0embed/semigroup.hpp"

namespace c0embed {

struct Embeddable {
    EmbeddingMethod method;
};

// The exact negation of the necessary condition: a kernel or cokernel
// cardinal strictly between zero and infinity.
struct NotEmbeddable {
    CardinalDim kernel_dim;
    CardinalDim cokernel_dim;
};

enum class OpenCase {
    CompactInfiniteKernel, // compact-like, infinite kernel, non-cofinite range
    UnclassifiedStructure,
};

struct Unknown {
    OpenCase open_case;
};

class EmbeddabilityVerdict {
public:
    EmbeddabilityVerdict(Embeddable e) : v_(e) {} // NOLINT
    EmbeddabilityVerdict(NotEmbeddable n) : v_(n) { // NOLINT
        const bool kernel_bad = !n.kernel_dim.is_zero() && n.kernel_dim.is_finite();
        const bool cokernel_bad = !n.cokernel_dim.is_zero() && n.cokernel_dim.is_finite();
        if (!kernel_bad && !cokernel_bad)
            throw std::logic_error(
                "NotEmbeddable requires a finite nonzero kernel or cokernel cardinal");
    }
    EmbeddabilityVerdict(Unknown u) : v_(u) {} // NOLINT

    bool is_embeddable() const { return std::holds_alternative<Embeddable>(v_); }
    bool is_not_embeddable() const { return std::holds_alternative<NotEmbeddable>(v_); }
    bool is_unknown() const { return std::holds_alternative<Unknown>(v_); }

    const Embeddable* as_embeddable() const { return std::get_if<Embeddable>(&v_); }
    const NotEmbeddable* as_not_embeddable() const { return std::get_if<NotEmbeddable>(&v_); }
    const Unknown* as_unknown() const { return std::get_if<Unknown>(&v_); }

    std::string to_string() const;

private:
    std::variant<Embeddable, NotEmbeddable, Unknown> v_;
};

} // namespace c0embed

#endif
