#pragma once

#include <span>
#include <utility>
#include <vector>

#include "pinnacle/colored_value.hpp"
#include "pinnacle/pin_set.hpp"

namespace pinnacle {

/// An element of Z_m wr S_n, stored by position: image()[j-1] is w(j).
/// The action on I_n^m is recovered by color-equivariance,
/// w(xi^i x) = xi^i w(x).
class GenPerm {
public:
  /// `image` lists w(1), ..., w(n). Throws ContractViolation unless the
  /// magnitudes form a permutation of {1..n} within `ambient`.
  GenPerm(Ambient ambient, std::vector<ColoredValue> image);

  /// Builds from (color, magnitude) pairs in one-line order w(n) ... w(1).
  static GenPerm from_display(Ambient ambient, std::span<const std::pair<int, int>> word);
  static GenPerm identity(Ambient ambient);

  const Ambient &ambient() const { return ambient_; }
  int modulus() const { return ambient_.modulus; }
  int degree() const { return ambient_.degree; }
  /// w(position), 1-based.
  const ColoredValue &at(int position) const;
  std::span<const ColoredValue> image() const { return image_; }
  /// w(n), w(n-1), ..., w(1).
  std::vector<ColoredValue> display() const;

  friend bool operator==(const GenPerm &, const GenPerm &) = default;

private:
  Ambient ambient_;
  std::vector<ColoredValue> image_;
};

/// G(m,p,n): the subgroup of Z_m wr S_n whose color sum is divisible by p.
struct GroupParams {
  int m = 1;
  int p = 1;
  int n = 1;

  Ambient ambient() const { return {m, n}; }
  friend bool operator==(const GroupParams &, const GroupParams &) = default;
};

/// Throws ContractViolation unless m, p, n >= 1 and p divides m.
void require_valid(const GroupParams &group);

/// Composite action (w o u)(x) = w(u(x)) on I_n^m.
GenPerm multiply(const GenPerm &w, const GenPerm &u);

/// Product on Z_m^n x S_n pairs as (a, sigma).(b, omega) = (a_i + b_{sigma(i)}, sigma omega),
/// reading a pair as j -> xi^{a_j}(sigma(j)) and sigma omega as "sigma first".
/// Under that reading convolution_product(w, u) == multiply(u, w).
GenPerm convolution_product(const GenPerm &w, const GenPerm &u);

GenPerm inverse(const GenPerm &w);

/// Interior positions i with w(i-1) < w(i) > w(i+1), ascending.
std::vector<int> peaks(const GenPerm &w);

/// Pin(w) = { w(i) : i in peaks(w) }.
PinSet pinnacle_set(const GenPerm &w);

/// epsilon_w, the sum of the colors of w(1..n) as integers in [0, n(m-1)].
long color_sum(const GenPerm &w);

/// True iff w lies in G(m,p,n); w must have ambient (g.m, g.n).
bool in_subgroup(const GenPerm &w, const GroupParams &group);

} // namespace pinnacle
