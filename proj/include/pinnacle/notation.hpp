#pragma once

#include <string>
#include <string_view>

#include "pinnacle/colored_value.hpp"
#include "pinnacle/gen_perm.hpp"
#include "pinnacle/pin_set.hpp"

namespace pinnacle {

/// Malformed or out-of-range input text. `position` is the 0-based offset of
/// the offending token within the parsed string.
class ParseError : public ContractViolation {
public:
  ParseError(const std::string &message, std::size_t position);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Grammar:
//   value  := INT ":" INT              (color ":" magnitude)
//   set    := "empty" | value ("," value)*
//   perm   := value (WS value)*        (listed w(n) ... w(1))

ColoredValue parse_colored_token(std::string_view text, Ambient ambient);
PinSet parse_set(std::string_view text, Ambient ambient);
GenPerm parse_perm(std::string_view text, Ambient ambient);

std::string format_token(const ColoredValue &value);
/// "empty" or comma-separated tokens in increasing order.
std::string format_set(const PinSet &set);
/// Space-separated tokens w(n) ... w(1).
std::string format_perm(const GenPerm &w);

/// "{xi^1(3), xi^0(5)}" style, for human-readable output.
std::string display_set(const PinSet &set);
/// "xi^2(10) xi^1(3) ..." style, w(n) ... w(1).
std::string display_perm(const GenPerm &w);

} // namespace pinnacle
