#pragma once

// Test-only helpers: builders, exhaustive subset iteration, random elements,
// and a brute-force model of the group action used as an independent oracle.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "pinnacle/gen_perm.hpp"
#include "pinnacle/pin_set.hpp"

namespace testing_support {

using pinnacle::Ambient;
using pinnacle::ColoredValue;
using pinnacle::GenPerm;
using pinnacle::PinSet;

/// Word listed w(n) ... w(1), as (color, magnitude) pairs.
inline GenPerm word(Ambient ambient, std::vector<std::pair<int, int>> display) {
  return GenPerm::from_display(ambient, display);
}

inline PinSet set_of(Ambient ambient, std::vector<std::pair<int, int>> values) {
  std::vector<ColoredValue> elements;
  for (auto [color, magnitude] : values)
    elements.emplace_back(ambient, color, magnitude);
  return PinSet(ambient, std::move(elements));
}

/// Calls fn(mask) for every subset of I_n^m with at most `max_size` elements.
template <class Fn>
void for_each_subset(Ambient ambient, int max_size, Fn &&fn) {
  const int universe = ambient.modulus * ambient.degree;
  std::vector<int> chosen;
  auto recurse = [&](auto &&self, int start, std::uint64_t mask) -> void {
    fn(mask);
    if (static_cast<int>(chosen.size()) == max_size)
      return;
    for (int r = start; r < universe; ++r) {
      chosen.push_back(r);
      self(self, r + 1, mask | (std::uint64_t{1} << r));
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, 0);
}

inline GenPerm random_perm(Ambient ambient, std::mt19937_64 &rng) {
  std::vector<int> magnitudes(ambient.degree);
  for (int i = 0; i < ambient.degree; ++i)
    magnitudes[i] = i + 1;
  std::shuffle(magnitudes.begin(), magnitudes.end(), rng);
  std::uniform_int_distribution<int> color(0, ambient.modulus - 1);
  std::vector<ColoredValue> image;
  for (int x : magnitudes)
    image.emplace_back(ambient, color(rng), x);
  return GenPerm(ambient, std::move(image));
}

/// The element as an explicit bijection of I_n^m, built straight from
/// w(xi^i x) = xi^i w(x).
using Action = std::map<std::pair<int, int>, std::pair<int, int>>;

inline Action as_action(const GenPerm &w) {
  Action action;
  const int m = w.modulus();
  for (int x = 1; x <= w.degree(); ++x)
    for (int i = 0; i < m; ++i)
      action[{i, x}] = {(i + w.at(x).color()) % m, w.at(x).magnitude()};
  return action;
}

/// (f o g) as explicit maps, read back at color 0.
inline std::vector<std::pair<int, int>> compose_images(const GenPerm &f, const GenPerm &g) {
  const auto outer = as_action(f);
  const auto inner = as_action(g);
  std::vector<std::pair<int, int>> images;
  for (int j = 1; j <= f.degree(); ++j)
    images.push_back(outer.at(inner.at({0, j})));
  return images;
}

inline std::vector<std::pair<int, int>> images_of(const GenPerm &w) {
  std::vector<std::pair<int, int>> out;
  for (const auto &value : w.image())
    out.emplace_back(value.color(), value.magnitude());
  return out;
}

/// Calls fn(w) for every element of Z_m wr S_n, enumerated independently of
/// the oracle module.
template <class Fn>
void visit_all_elements(Ambient ambient, Fn &&fn) {
  std::vector<int> magnitudes(ambient.degree);
  for (int i = 0; i < ambient.degree; ++i)
    magnitudes[i] = i + 1;
  do {
    std::vector<int> colors(ambient.degree, 0);
    while (true) {
      std::vector<ColoredValue> image;
      for (int j = 0; j < ambient.degree; ++j)
        image.emplace_back(ambient, colors[j], magnitudes[j]);
      fn(GenPerm(ambient, std::move(image)));
      int i = 0;
      while (i < ambient.degree && ++colors[i] == ambient.modulus)
        colors[i++] = 0;
      if (i == ambient.degree)
        break;
    }
  } while (std::next_permutation(magnitudes.begin(), magnitudes.end()));
}

inline std::vector<GenPerm> all_elements(Ambient ambient) {
  std::vector<GenPerm> out;
  visit_all_elements(ambient, [&](const GenPerm &w) { out.push_back(w); });
  return out;
}

} // namespace testing_support
