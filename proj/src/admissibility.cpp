#include "pinnacle/admissibility.hpp"

#include <algorithm>
#include <map>

namespace pinnacle {

std::string describe(const Verdict &verdict) {
  switch (verdict.reason) {
  case Rejection::none:
    return "admissible";
  case Rejection::repeated_magnitude:
    return "inadmissible: repeated magnitude " + std::to_string(verdict.magnitude);
  case Rejection::too_many_pinnacles:
    return "inadmissible: more than floor((n-1)/2) pinnacles";
  case Rejection::no_witness:
    return "inadmissible: no witness";
  }
  return "inadmissible";
}

Verdict structural_verdict(const PinSet &set) {
  std::map<int, int> seen;
  for (const auto &value : set)
    if (++seen[value.magnitude()] > 1)
      return {Rejection::repeated_magnitude, value.magnitude()};
  if (static_cast<int>(set.size()) > max_pinnacles(set.degree()))
    return {Rejection::too_many_pinnacles, 0};
  return {};
}

GenPerm canonical_witness(const PinSet &set) {
  const auto verdict = structural_verdict(set);
  if (verdict.reason == Rejection::repeated_magnitude)
    throw MultiplicityViolation("canonical_witness: " + describe(verdict));
  if (verdict.reason == Rejection::too_many_pinnacles)
    throw CardinalityViolation("canonical_witness: " + describe(verdict));

  const Ambient ambient = set.ambient();
  const int n = ambient.degree;
  const int top = ambient.modulus - 1;
  const auto used = magnitude_set(set);

  // Non-pinnacle magnitudes in increasing order of xi^{m-1}(.), i.e. numerically decreasing.
  std::vector<int> rest;
  for (int x = n; x >= 1; --x)
    if (!used.contains(x))
      rest.push_back(x);

  std::vector<std::pair<int, int>> word;
  word.reserve(n);
  const auto pins = set.elements();
  for (std::size_t i = 0; i < pins.size(); ++i) {
    word.emplace_back(top, rest[i]);
    word.emplace_back(pins[i].color(), pins[i].magnitude());
  }
  for (std::size_t j = pins.size(); j < rest.size(); ++j)
    word.emplace_back(top, rest[j]);
  return GenPerm::from_display(ambient, word);
}

Verdict is_admissible(const PinSet &set) {
  if (auto verdict = structural_verdict(set); !verdict)
    return verdict;
  if (pinnacle_set(canonical_witness(set)) != set)
    return {Rejection::no_witness, 0};
  return {};
}

namespace {

/// Maps the magnitudes of [n] \ excluded onto 1..n' preserving numeric order.
std::map<int, int> compress_magnitudes(int degree, const std::set<int> &excluded) {
  std::map<int, int> relabel;
  int next = 1;
  for (int x = 1; x <= degree; ++x)
    if (!excluded.contains(x))
      relabel[x] = next++;
  return relabel;
}

} // namespace

Verdict is_admissible_rec(const PinSet &set) {
  if (auto verdict = structural_verdict(set); !verdict)
    return verdict;
  if (set.modulus() == 1)
    return is_admissible(set);

  const auto zero = color_slice(set, 0);
  const auto relabel = compress_magnitudes(set.degree(), magnitude_set(zero));
  const Ambient reduced{set.modulus() - 1, set.degree() - static_cast<int>(zero.size())};

  std::vector<ColoredValue> rest;
  for (const auto &value : set)
    if (value.color() != 0)
      rest.emplace_back(reduced, value.color() - 1, relabel.at(value.magnitude()));
  if (!is_admissible_rec(PinSet(reduced, std::move(rest))))
    return {Rejection::no_witness, 0};
  return {};
}

Verdict is_admissible_top(const PinSet &set) {
  if (auto verdict = structural_verdict(set); !verdict)
    return verdict;

  const int top = set.modulus() - 1;
  std::set<int> others;
  for (const auto &value : set)
    if (value.color() != top)
      others.insert(value.magnitude());
  const auto relabel = compress_magnitudes(set.degree(), others);
  const Ambient reduced{1, set.degree() - static_cast<int>(others.size())};

  std::vector<ColoredValue> slice;
  for (const auto &value : set)
    if (value.color() == top)
      slice.emplace_back(reduced, 0, relabel.at(value.magnitude()));
  if (!is_admissible(PinSet(reduced, std::move(slice))))
    return {Rejection::no_witness, 0};
  return {};
}

ColoredDegree colored_admissible_degree(const PinSet &set) {
  if (set.empty())
    throw ContractViolation("colored_admissible_degree: empty set");
  const int color = set.elements().front().color();
  for (const auto &value : set)
    if (value.color() != color)
      throw ContractViolation("colored_admissible_degree: set has more than one color");
  if (!has_distinct_magnitudes(set))
    throw MultiplicityViolation("colored_admissible_degree: repeated magnitude");

  int largest = 0;
  for (const auto &value : set)
    largest = std::max(largest, value.magnitude());
  const int degree = 2 * largest + 1;

  const Ambient lifted{set.modulus(), degree};
  std::vector<ColoredValue> values;
  for (const auto &value : set)
    values.emplace_back(lifted, value.color(), value.magnitude());
  return {degree, canonical_witness(PinSet(lifted, std::move(values)))};
}

GenPerm max_pinnacle_witness(Ambient ambient) {
  require_valid(ambient);
  std::vector<ColoredValue> pins;
  for (int x = 1; x <= max_pinnacles(ambient.degree); ++x)
    pins.emplace_back(ambient, 0, x);
  return canonical_witness(PinSet(ambient, std::move(pins)));
}

} // namespace pinnacle
