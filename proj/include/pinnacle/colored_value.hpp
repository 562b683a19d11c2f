#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pinnacle {

/// Raised when an operation receives operands that break its preconditions
/// (mismatched ambient group, out-of-range color, non-bijective image, ...).
class ContractViolation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The ambient (m, n) of Z_m wr S_n: colors live in {0,...,m-1}, magnitudes in {1,...,n}.
struct Ambient {
  int modulus = 1;
  int degree = 1;

  friend bool operator==(const Ambient &, const Ambient &) = default;
};

void require_valid(const Ambient &ambient);

/// xi^color(magnitude). The color is a symbolic exponent of a primitive m-th
/// root of unity; it is never evaluated as a complex number.
class ColoredValue {
public:
  ColoredValue(Ambient ambient, int color, int magnitude);

  const Ambient &ambient() const { return ambient_; }
  int modulus() const { return ambient_.modulus; }
  int degree() const { return ambient_.degree; }
  int color() const { return color_; }
  int magnitude() const { return magnitude_; }

  /// Position of this value in the total order on I_n^m, 0 for the minimum
  /// xi^{m-1}(n) up to m*n-1 for the maximum xi^0(1).
  int rank() const { return rank_of(ambient_, color_, magnitude_); }

  static int rank_of(const Ambient &ambient, int color, int magnitude) {
    return (ambient.modulus - 1 - color) * ambient.degree + (ambient.degree - magnitude);
  }
  static ColoredValue from_rank(Ambient ambient, int rank);

  friend bool operator==(const ColoredValue &, const ColoredValue &) = default;

private:
  Ambient ambient_;
  int color_;
  int magnitude_;
};

/// Total order on I_n^m: (a,x) precedes (b,y) iff a > b, or a == b and x > y.
/// `less` means u precedes v. Throws ContractViolation if the ambients differ.
std::strong_ordering compare(const ColoredValue &u, const ColoredValue &v);

inline bool precedes(const ColoredValue &u, const ColoredValue &v) {
  return compare(u, v) == std::strong_ordering::less;
}

/// `xi^a(x)` rendering used in text output.
std::string to_display(const ColoredValue &value);

} // namespace pinnacle
