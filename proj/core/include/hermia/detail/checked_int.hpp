#pragma once

#include <cstdint>
#include <limits>

namespace hermia::detail {

/// Thrown by CheckedInt when a result leaves the int64 range. Exact kernels
/// catch it and redo the computation over GMP integers.
struct Overflow {};

/// int64 with overflow detection on every arithmetic operation.
class CheckedInt {
 public:
  constexpr CheckedInt() = default;
  constexpr CheckedInt(std::int64_t v) : v_(v) {}  // NOLINT: implicit by intent

  constexpr std::int64_t value() const { return v_; }

  CheckedInt& operator+=(CheckedInt o) {
    if (__builtin_add_overflow(v_, o.v_, &v_)) throw Overflow{};
    return *this;
  }
  CheckedInt& operator-=(CheckedInt o) {
    if (__builtin_sub_overflow(v_, o.v_, &v_)) throw Overflow{};
    return *this;
  }
  CheckedInt& operator*=(CheckedInt o) {
    if (__builtin_mul_overflow(v_, o.v_, &v_)) throw Overflow{};
    return *this;
  }

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) { return a += b; }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) { return a -= b; }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) { return a *= b; }
  friend CheckedInt operator-(CheckedInt a) {
    if (a.v_ == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
    return CheckedInt(-a.v_);
  }

  friend bool operator==(CheckedInt a, CheckedInt b) { return a.v_ == b.v_; }
  friend bool operator!=(CheckedInt a, CheckedInt b) { return a.v_ != b.v_; }
  friend bool operator==(CheckedInt a, int b) { return a.v_ == b; }
  friend bool operator!=(CheckedInt a, int b) { return a.v_ != b; }
  friend bool operator<(CheckedInt a, CheckedInt b) { return a.v_ < b.v_; }

 private:
  std::int64_t v_ = 0;
};

}  // namespace hermia::detail
