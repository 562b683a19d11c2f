#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "pinnacle/colored_value.hpp"

namespace pinnacle {

/// A finite subset of I_n^m, kept sorted by the total order. A PinSet is a
/// candidate; admissibility is decided separately (see admissibility.hpp).
class PinSet {
public:
  explicit PinSet(Ambient ambient) : ambient_(ambient) { require_valid(ambient_); }
  /// Sorts the elements; throws ContractViolation on duplicates or foreign ambients.
  PinSet(Ambient ambient, std::vector<ColoredValue> elements);

  /// Builds the set from a bitmask over ranks (bit r set <=> rank r is present).
  /// Requires m*n <= 64.
  static PinSet from_mask(Ambient ambient, std::uint64_t mask);
  std::uint64_t mask() const;

  const Ambient &ambient() const { return ambient_; }
  int modulus() const { return ambient_.modulus; }
  int degree() const { return ambient_.degree; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  std::span<const ColoredValue> elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }
  bool contains(const ColoredValue &value) const;

  friend bool operator==(const PinSet &, const PinSet &) = default;

private:
  Ambient ambient_;
  std::vector<ColoredValue> elements_;
};

/// |P|: the magnitudes occurring in P.
std::set<int> magnitude_set(const PinSet &set);

/// True iff no two elements of P share a magnitude.
bool has_distinct_magnitudes(const PinSet &set);

/// pi_i(P): the elements of P of color exactly i.
PinSet color_slice(const PinSet &set, int color);

/// floor((n-1)/2), the largest possible pinnacle-set cardinality in degree n.
constexpr int max_pinnacles(int degree) { return degree >= 1 ? (degree - 1) / 2 : 0; }

} // namespace pinnacle
