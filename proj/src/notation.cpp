#include "pinnacle/notation.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace pinnacle {

ParseError::ParseError(const std::string &message, std::size_t position)
    : ContractViolation(message + " (at offset " + std::to_string(position) + ")"),
      position_(position) {}

namespace {

int parse_int(std::string_view digits, std::size_t offset, std::string_view token) {
  if (digits.empty())
    throw ParseError("malformed token '" + std::string(token) + "'", offset);
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("malformed token '" + std::string(token) + "'", offset);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw ParseError("integer out of range in '" + std::string(token) + "'", offset);
  return value;
}

ColoredValue parse_token_at(std::string_view token, Ambient ambient, std::size_t offset) {
  const auto colon = token.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("malformed token '" + std::string(token) + "', expected <color>:<magnitude>",
                     offset);
  const int color = parse_int(token.substr(0, colon), offset, token);
  const int magnitude = parse_int(token.substr(colon + 1), offset + colon + 1, token);
  if (color >= ambient.modulus)
    throw ParseError("color " + std::to_string(color) + " out of range for m = " +
                         std::to_string(ambient.modulus),
                     offset);
  if (magnitude < 1 || magnitude > ambient.degree)
    throw ParseError("magnitude " + std::to_string(magnitude) + " out of range for n = " +
                         std::to_string(ambient.degree),
                     offset + colon + 1);
  return ColoredValue(ambient, color, magnitude);
}

} // namespace

ColoredValue parse_colored_token(std::string_view text, Ambient ambient) {
  require_valid(ambient);
  return parse_token_at(text, ambient, 0);
}

PinSet parse_set(std::string_view text, Ambient ambient) {
  require_valid(ambient);
  if (text == "empty")
    return PinSet(ambient);
  if (text.empty())
    throw ParseError("empty set must be written 'empty'", 0);
  std::vector<ColoredValue> values;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    values.push_back(parse_token_at(token, ambient, start));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  try {
    return PinSet(ambient, std::move(values));
  } catch (const ContractViolation &error) {
    throw ParseError(error.what(), 0);
  }
}

GenPerm parse_perm(std::string_view text, Ambient ambient) {
  require_valid(ambient);
  std::vector<ColoredValue> display;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
      ++end;
    display.push_back(parse_token_at(text.substr(i, end - i), ambient, i));
    i = end;
  }
  if (static_cast<int>(display.size()) != ambient.degree)
    throw ParseError("expected " + std::to_string(ambient.degree) + " tokens, got " +
                         std::to_string(display.size()),
                     text.size());
  try {
    return GenPerm(ambient, {display.rbegin(), display.rend()});
  } catch (const ContractViolation &error) {
    throw ParseError(error.what(), 0);
  }
}

std::string format_token(const ColoredValue &value) {
  return std::to_string(value.color()) + ":" + std::to_string(value.magnitude());
}

std::string format_set(const PinSet &set) {
  if (set.empty())
    return "empty";
  std::string out;
  for (const auto &value : set) {
    if (!out.empty())
      out += ',';
    out += format_token(value);
  }
  return out;
}

std::string format_perm(const GenPerm &w) {
  std::string out;
  for (const auto &value : w.display()) {
    if (!out.empty())
      out += ' ';
    out += format_token(value);
  }
  return out;
}

std::string display_set(const PinSet &set) {
  std::string out = "{";
  for (const auto &value : set) {
    if (out.size() > 1)
      out += ", ";
    out += to_display(value);
  }
  return out + "}";
}

std::string display_perm(const GenPerm &w) {
  std::string out;
  for (const auto &value : w.display()) {
    if (!out.empty())
      out += ' ';
    out += to_display(value);
  }
  return out;
}

} // namespace pinnacle
