#pragma once

#include <string>

namespace bbc {

// Integers extended by -infinity, the codomain of the string statistics.
// Invariants: -inf < n for every finite n, -inf + n = -inf, max(-inf, n) = n.
class ExtInt {
 public:
  constexpr ExtInt() : finite_(true), v_(0) {}
  constexpr ExtInt(long long v) : finite_(true), v_(v) {}  // NOLINT: implicit on purpose
  static constexpr ExtInt neg_inf() {
    ExtInt x;
    x.finite_ = false;
    return x;
  }

  constexpr bool finite() const { return finite_; }
  // Only meaningful when finite().
  constexpr long long value() const { return v_; }

  constexpr ExtInt operator+(long long d) const { return finite_ ? ExtInt(v_ + d) : neg_inf(); }
  constexpr ExtInt operator-(long long d) const { return *this + (-d); }

  friend constexpr bool operator==(const ExtInt& a, const ExtInt& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
  }
  friend constexpr bool operator!=(const ExtInt& a, const ExtInt& b) { return !(a == b); }
  friend constexpr bool operator<(const ExtInt& a, const ExtInt& b) {
    if (!a.finite_) return b.finite_;
    if (!b.finite_) return false;
    return a.v_ < b.v_;
  }
  friend constexpr bool operator>(const ExtInt& a, const ExtInt& b) { return b < a; }
  friend constexpr bool operator<=(const ExtInt& a, const ExtInt& b) { return !(b < a); }
  friend constexpr bool operator>=(const ExtInt& a, const ExtInt& b) { return !(a < b); }

  static constexpr ExtInt max(const ExtInt& a, const ExtInt& b) { return a < b ? b : a; }

  std::string str() const { return finite_ ? std::to_string(v_) : "-inf"; }

 private:
  bool finite_;
  long long v_ = 0;
};

}  // namespace bbc
