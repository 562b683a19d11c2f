#pragma once

#include <string>

#include "pinnacle/gen_perm.hpp"
#include "pinnacle/pin_set.hpp"

namespace pinnacle {

class MultiplicityViolation : public ContractViolation {
public:
  using ContractViolation::ContractViolation;
};

class CardinalityViolation : public ContractViolation {
public:
  using ContractViolation::ContractViolation;
};

enum class Rejection {
  none,
  repeated_magnitude, ///< two elements share a magnitude
  too_many_pinnacles, ///< #P > floor((n-1)/2)
  no_witness,         ///< structurally fine, but no element of the group realizes P
};

/// Outcome of an admissibility decision. `magnitude` names the offending
/// magnitude for repeated_magnitude and is 0 otherwise.
struct Verdict {
  Rejection reason = Rejection::none;
  int magnitude = 0;

  bool admissible() const { return reason == Rejection::none; }
  explicit operator bool() const { return admissible(); }
  friend bool operator==(const Verdict &, const Verdict &) = default;
};

/// "admissible", "inadmissible: repeated magnitude 3", ...
std::string describe(const Verdict &verdict);

/// The canonical witness: non-pinnacles of color m-1 and pinnacles alternate,
/// both subsequences increasing left to right, followed by the remaining
/// non-pinnacles. Throws MultiplicityViolation or CardinalityViolation when
/// the layout cannot be formed.
GenPerm canonical_witness(const PinSet &set);

/// Checks the two structural conditions shared by every decider.
Verdict structural_verdict(const PinSet &set);

/// Decider A: structural checks, then Pin(canonical_witness(P)) == P.
Verdict is_admissible(const PinSet &set);

/// Decider B: peels off the color-0 slice and recurses on P \ pi_0(P) with
/// colors lowered by one and magnitudes relabeled into [n - #pi_0(P)].
Verdict is_admissible_rec(const PinSet &set);

/// Decider C: checks the color-(m-1) slice alone as a pinnacle set of S_{n'},
/// n' = n - #(P \ pi_{m-1}(P)), after relabeling.
Verdict is_admissible_top(const PinSet &set);

struct ColoredDegree {
  int degree;
  GenPerm witness;
};

/// For a nonempty single-color set with distinct magnitudes, a degree
/// N = 2 * max(magnitudes) + 1 in which the set is admissible, together with
/// the witness used. Throws ContractViolation otherwise.
ColoredDegree colored_admissible_degree(const PinSet &set);

/// A witness with floor((n-1)/2) pinnacles: alternating color-(m-1)
/// non-pinnacles and color-0 pinnacles xi^0(1), ..., xi^0(d).
GenPerm max_pinnacle_witness(Ambient ambient);

} // namespace pinnacle
