/**
 * Extended non-negative integers (finite value or infinity) used for
 * graph distances and trail lengths.
 */

#ifndef EMH_EXTENDED_INT_HPP
#define EMH_EXTENDED_INT_HPP

#include <cstdint>
#include <compare>
#include <ostream>
#include <string>

namespace emh {

// Hop counts and trail lengths. Infinity is a real sentinel, never a large
// finite value, so comparisons against a length bound cannot be fooled by
// overflow.
class ExtInt {
public:
    constexpr ExtInt() : finite_(true), value_(0) {}
    constexpr ExtInt(std::int64_t v) : finite_(true), value_(v) {}

    static constexpr ExtInt infinity() {
        ExtInt e;
        e.finite_ = false;
        e.value_ = 0;
        return e;
    }

    constexpr bool is_finite() const { return finite_; }
    constexpr std::int64_t value() const { return value_; }

    friend constexpr ExtInt operator+(ExtInt a, ExtInt b) {
        if (!a.finite_ || !b.finite_) return infinity();
        return ExtInt(a.value_ + b.value_);
    }
    ExtInt& operator+=(ExtInt o) { return *this = *this + o; }

    friend constexpr bool operator==(ExtInt a, ExtInt b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr bool operator<(ExtInt a, ExtInt b) {
        if (!a.finite_) return false;
        if (!b.finite_) return true;
        return a.value_ < b.value_;
    }
    friend constexpr bool operator<=(ExtInt a, ExtInt b) { return a < b || a == b; }
    friend constexpr bool operator>(ExtInt a, ExtInt b) { return b < a; }
    friend constexpr bool operator>=(ExtInt a, ExtInt b) { return b <= a; }

    std::string str() const { return finite_ ? std::to_string(value_) : "inf"; }

    friend std::ostream& operator<<(std::ostream& os, ExtInt e) { return os << e.str(); }

private:
    bool finite_;
    std::int64_t value_;
};

}  // namespace emh

#endif
