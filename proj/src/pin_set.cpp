#include "pinnacle/pin_set.hpp"

#include <algorithm>

namespace pinnacle {

PinSet::PinSet(Ambient ambient, std::vector<ColoredValue> elements)
    : ambient_(ambient), elements_(std::move(elements)) {
  require_valid(ambient_);
  for (const auto &value : elements_)
    if (value.ambient() != ambient_)
      throw ContractViolation("PinSet: element from a different ambient group");
  std::ranges::sort(elements_, [](const ColoredValue &a, const ColoredValue &b) {
    return a.rank() < b.rank();
  });
  if (std::ranges::adjacent_find(elements_) != elements_.end())
    throw ContractViolation("PinSet: duplicate element");
}

PinSet PinSet::from_mask(Ambient ambient, std::uint64_t mask) {
  require_valid(ambient);
  const int universe = ambient.modulus * ambient.degree;
  if (universe > 64)
    throw ContractViolation("PinSet::from_mask requires m*n <= 64");
  if (universe < 64 && (mask >> universe) != 0)
    throw ContractViolation("PinSet::from_mask: bit outside I_n^m");
  PinSet out(ambient);
  for (int rank = 0; rank < universe; ++rank)
    if (mask >> rank & 1U)
      out.elements_.push_back(ColoredValue::from_rank(ambient, rank));
  return out;
}

std::uint64_t PinSet::mask() const {
  if (ambient_.modulus * ambient_.degree > 64)
    throw ContractViolation("PinSet::mask requires m*n <= 64");
  std::uint64_t bits = 0;
  for (const auto &value : elements_)
    bits |= std::uint64_t{1} << value.rank();
  return bits;
}

bool PinSet::contains(const ColoredValue &value) const {
  return std::ranges::binary_search(elements_, value, [](const ColoredValue &a, const ColoredValue &b) {
    return a.rank() < b.rank();
  });
}

std::set<int> magnitude_set(const PinSet &set) {
  std::set<int> out;
  for (const auto &value : set)
    out.insert(value.magnitude());
  return out;
}

bool has_distinct_magnitudes(const PinSet &set) { return magnitude_set(set).size() == set.size(); }

PinSet color_slice(const PinSet &set, int color) {
  if (color < 0 || color >= set.modulus())
    throw ContractViolation("color_slice: color " + std::to_string(color) + " outside [0, " +
                            std::to_string(set.modulus() - 1) + "]");
  std::vector<ColoredValue> kept;
  for (const auto &value : set)
    if (value.color() == color)
      kept.push_back(value);
  return PinSet(set.ambient(), std::move(kept));
}

} // namespace pinnacle
