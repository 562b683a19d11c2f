#include "pinnacle/embeddings.hpp"

namespace pinnacle {

namespace {

void require_valid(const ShiftParams &params) {
  if (params.shift < 0)
    throw ContractViolation("shift must be nonnegative");
  pinnacle::require_valid(params.source());
}

} // namespace

PinSet shift_set(const PinSet &set, const ShiftParams &params) {
  require_valid(params);
  if (set.ambient() != params.source())
    throw ContractViolation("shift_set: set is not over the source ambient");
  std::vector<ColoredValue> values;
  for (const auto &value : set)
    values.emplace_back(params.target(), value.color() + params.shift, value.magnitude());
  return PinSet(params.target(), std::move(values));
}

GenPerm shift_perm(const GenPerm &w, const ShiftParams &params) {
  require_valid(params);
  if (w.ambient() != params.source())
    throw ContractViolation("shift_perm: permutation is not over the source ambient");
  std::vector<ColoredValue> image;
  for (const auto &value : w.image())
    image.emplace_back(params.target(), value.color() + params.shift, value.magnitude());
  return GenPerm(params.target(), std::move(image));
}

std::optional<GenPerm> unshift_perm(const GenPerm &w, const ShiftParams &params) {
  require_valid(params);
  if (w.ambient() != params.target())
    throw ContractViolation("unshift_perm: permutation is not over the target ambient");
  std::vector<ColoredValue> image;
  for (const auto &value : w.image()) {
    if (value.color() < params.shift)
      return std::nullopt;
    image.emplace_back(params.source(), value.color() - params.shift, value.magnitude());
  }
  return GenPerm(params.source(), std::move(image));
}

std::optional<PinSet> unshift_set(const PinSet &set, const ShiftParams &params) {
  require_valid(params);
  if (set.ambient() != params.target())
    throw ContractViolation("unshift_set: set is not over the target ambient");
  std::vector<ColoredValue> values;
  for (const auto &value : set) {
    if (value.color() < params.shift)
      return std::nullopt;
    values.emplace_back(params.source(), value.color() - params.shift, value.magnitude());
  }
  return PinSet(params.source(), std::move(values));
}

} // namespace pinnacle
