#include "pinnacle/colored_value.hpp"

namespace pinnacle {

void require_valid(const Ambient &ambient) {
  if (ambient.modulus < 1 || ambient.degree < 1)
    throw ContractViolation("ambient requires m >= 1 and n >= 1, got m=" +
                            std::to_string(ambient.modulus) +
                            " n=" + std::to_string(ambient.degree));
}

ColoredValue::ColoredValue(Ambient ambient, int color, int magnitude)
    : ambient_(ambient), color_(color), magnitude_(magnitude) {
  require_valid(ambient_);
  if (color_ < 0 || color_ >= ambient_.modulus)
    throw ContractViolation("color " + std::to_string(color_) + " outside [0, " +
                            std::to_string(ambient_.modulus - 1) + "]");
  if (magnitude_ < 1 || magnitude_ > ambient_.degree)
    throw ContractViolation("magnitude " + std::to_string(magnitude_) + " outside [1, " +
                            std::to_string(ambient_.degree) + "]");
}

ColoredValue ColoredValue::from_rank(Ambient ambient, int rank) {
  require_valid(ambient);
  if (rank < 0 || rank >= ambient.modulus * ambient.degree)
    throw ContractViolation("rank " + std::to_string(rank) + " outside I_n^m");
  const int color = ambient.modulus - 1 - rank / ambient.degree;
  const int magnitude = ambient.degree - rank % ambient.degree;
  return ColoredValue(ambient, color, magnitude);
}

std::strong_ordering compare(const ColoredValue &u, const ColoredValue &v) {
  if (u.ambient() != v.ambient())
    throw ContractViolation("compare: values belong to different ambient groups");
  return u.rank() <=> v.rank();
}

std::string to_display(const ColoredValue &value) {
  return "xi^" + std::to_string(value.color()) + "(" + std::to_string(value.magnitude()) + ")";
}

} // namespace pinnacle
