#ifndef C0EMBED_CARDINAL_HPP
#define C0EMBED_CARDINAL_HPP

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace c0embed {

// Kernel/cokernel dimension as a cardinal: a nonnegative integer or
// "infinite". The embeddability dichotomy only distinguishes zero, finite
// nonzero, and infinite, so this is the whole arithmetic we need.
// Total order: Finite(n) < Finite(m) iff n < m, and Finite(n) < Infinite.
class CardinalDim {
public:
    static CardinalDim finite(std::size_t n) { return CardinalDim(false, n); }
    static CardinalDim infinite() { return CardinalDim(true, 0); }

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }
    bool is_zero() const { return !infinite_ && value_ == 0; }

    // Finite value; throws on Infinite.
    std::size_t finite_value() const {
        if (infinite_) throw std::logic_error("CardinalDim: finite_value() of Infinite");
        return value_;
    }

    friend CardinalDim operator+(CardinalDim a, CardinalDim b) {
        if (a.infinite_ || b.infinite_) return infinite();
        return finite(a.value_ + b.value_);
    }

    friend bool operator==(CardinalDim a, CardinalDim b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }

    friend std::strong_ordering operator<=>(CardinalDim a, CardinalDim b) {
        if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
        if (a.infinite_) return std::strong_ordering::greater;
        if (b.infinite_) return std::strong_ordering::less;
        return a.value_ <=> b.value_;
    }

    std::string to_string() const {
        return infinite_ ? "infinite" : "finite(" + std::to_string(value_) + ")";
    }

private:
    CardinalDim(bool inf, std::size_t n) : infinite_(inf), value_(n) {}
    bool infinite_;
    std::size_t value_;
};

} // namespace c0embed

#endif
