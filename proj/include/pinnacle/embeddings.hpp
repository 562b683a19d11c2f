#pragma once

#include <optional>

#include "pinnacle/gen_perm.hpp"
#include "pinnacle/pin_set.hpp"

namespace pinnacle {

/// Color shift xi^a(x) -> zeta^{a+k}(x) from Z_m wr S_n into Z_{m+k} wr S_n.
struct ShiftParams {
  int source_modulus = 1;
  int shift = 0;
  int degree = 1;

  int target_modulus() const { return source_modulus + shift; }
  Ambient source() const { return {source_modulus, degree}; }
  Ambient target() const { return {target_modulus(), degree}; }
};

/// Image of a set under the shift. Injective and size-preserving.
PinSet shift_set(const PinSet &set, const ShiftParams &params);

/// Entrywise shift of a permutation. This is a plain map of underlying sets,
/// not a group homomorphism.
GenPerm shift_perm(const GenPerm &w, const ShiftParams &params);

/// Preimage of `w` (which lives over the target modulus) under shift_perm,
/// or nullopt when some color of `w` is below the shift.
std::optional<GenPerm> unshift_perm(const GenPerm &w, const ShiftParams &params);

/// Preimage of a set under shift_set, or nullopt when some color is below the shift.
std::optional<PinSet> unshift_set(const PinSet &set, const ShiftParams &params);

} // namespace pinnacle
