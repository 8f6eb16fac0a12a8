#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>

namespace blockpd {

using Weight = std::uint64_t;

// A vertex-set weight that may be infeasible. Infeasible absorbs addition
// and compares greater than every finite weight.
class ExtendedWeight {
 public:
  constexpr ExtendedWeight() = default;
  constexpr explicit ExtendedWeight(Weight w) : value_(w) {}

  static constexpr ExtendedWeight infeasible() {
    ExtendedWeight e;
    e.value_ = kInfeasible;
    return e;
  }
  static constexpr ExtendedWeight zero() { return ExtendedWeight(0); }

  constexpr bool is_finite() const { return value_ != kInfeasible; }
  constexpr bool is_infeasible() const { return value_ == kInfeasible; }

  // Precondition: is_finite().
  constexpr Weight value() const { return value_; }

  friend constexpr ExtendedWeight operator+(ExtendedWeight a,
                                            ExtendedWeight b) {
    if (a.is_infeasible() || b.is_infeasible()) return infeasible();
    return ExtendedWeight(a.value_ + b.value_);
  }
  constexpr ExtendedWeight& operator+=(ExtendedWeight other) {
    return *this = *this + other;
  }

  // Removes a finite part previously added into this sum. Infeasible stays
  // infeasible.
  constexpr ExtendedWeight minus(Weight part) const {
    if (is_infeasible()) return *this;
    return ExtendedWeight(value_ - part);
  }

  friend constexpr auto operator<=>(ExtendedWeight, ExtendedWeight) = default;
  friend constexpr bool operator==(ExtendedWeight, ExtendedWeight) = default;

  friend std::ostream& operator<<(std::ostream& os, ExtendedWeight w) {
    if (w.is_infeasible()) return os << "inf";
    return os << w.value_;
  }

 private:
  // Finite sums are bounded by the graph's total weight, which is validated
  // to stay strictly below this value.
  static constexpr Weight kInfeasible = std::numeric_limits<Weight>::max();
  Weight value_ = 0;
};

inline constexpr ExtendedWeight kInfeasible = ExtendedWeight::infeasible();

}  // namespace blockpd
