#include "pinnacle/gen_perm.hpp"

#include <algorithm>

namespace pinnacle {

GenPerm::GenPerm(Ambient ambient, std::vector<ColoredValue> image)
    : ambient_(ambient), image_(std::move(image)) {
  require_valid(ambient_);
  if (static_cast<int>(image_.size()) != ambient_.degree)
    throw ContractViolation("GenPerm: expected " + std::to_string(ambient_.degree) +
                            " images, got " + std::to_string(image_.size()));
  std::vector<bool> seen(ambient_.degree + 1, false);
  for (const auto &value : image_) {
    if (value.ambient() != ambient_)
      throw ContractViolation("GenPerm: image from a different ambient group");
    if (seen[value.magnitude()])
      throw ContractViolation("GenPerm: magnitude " + std::to_string(value.magnitude()) +
                              " appears twice");
    seen[value.magnitude()] = true;
  }
}

GenPerm GenPerm::from_display(Ambient ambient, std::span<const std::pair<int, int>> word) {
  std::vector<ColoredValue> image;
  image.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    image.emplace_back(ambient, it->first, it->second);
  return GenPerm(ambient, std::move(image));
}

GenPerm GenPerm::identity(Ambient ambient) {
  require_valid(ambient);
  std::vector<ColoredValue> image;
  image.reserve(ambient.degree);
  for (int j = 1; j <= ambient.degree; ++j)
    image.emplace_back(ambient, 0, j);
  return GenPerm(ambient, std::move(image));
}

const ColoredValue &GenPerm::at(int position) const {
  if (position < 1 || position > ambient_.degree)
    throw ContractViolation("GenPerm::at: position " + std::to_string(position) + " out of range");
  return image_[position - 1];
}

std::vector<ColoredValue> GenPerm::display() const { return {image_.rbegin(), image_.rend()}; }

void require_valid(const GroupParams &group) {
  if (group.m < 1 || group.p < 1 || group.n < 1)
    throw ContractViolation("G(m,p,n) requires positive m, p, n");
  if (group.m % group.p != 0)
    throw ContractViolation("G(m,p,n) requires p | m, got m=" + std::to_string(group.m) +
                            " p=" + std::to_string(group.p));
}

namespace {

void require_same_ambient(const GenPerm &w, const GenPerm &u, const char *what) {
  if (w.ambient() != u.ambient())
    throw ContractViolation(std::string(what) + ": operands belong to different groups");
}

} // namespace

GenPerm multiply(const GenPerm &w, const GenPerm &u) {
  require_same_ambient(w, u, "multiply");
  const int m = w.modulus();
  std::vector<ColoredValue> image;
  image.reserve(w.degree());
  for (const auto &inner : u.image()) {
    const auto &outer = w.at(inner.magnitude());
    image.emplace_back(w.ambient(), (inner.color() + outer.color()) % m, outer.magnitude());
  }
  return GenPerm(w.ambient(), std::move(image));
}

GenPerm convolution_product(const GenPerm &w, const GenPerm &u) {
  require_same_ambient(w, u, "convolution_product");
  const int m = w.modulus();
  std::vector<ColoredValue> image;
  image.reserve(w.degree());
  for (const auto &first : w.image()) {
    // a_i + b_{sigma(i)}, with the permutation part applied sigma then omega
    const auto &second = u.at(first.magnitude());
    image.emplace_back(w.ambient(), (first.color() + second.color()) % m, second.magnitude());
  }
  return GenPerm(w.ambient(), std::move(image));
}

GenPerm inverse(const GenPerm &w) {
  const int m = w.modulus();
  std::vector<std::pair<int, int>> slots(w.degree());
  for (int j = 1; j <= w.degree(); ++j) {
    const auto &value = w.at(j);
    // w(j) = xi^c(x)  =>  w^{-1}(x) = xi^{-c}(j)
    slots[value.magnitude() - 1] = {(m - value.color()) % m, j};
  }
  std::vector<ColoredValue> image;
  image.reserve(slots.size());
  for (const auto &[color, magnitude] : slots)
    image.emplace_back(w.ambient(), color, magnitude);
  return GenPerm(w.ambient(), std::move(image));
}

std::vector<int> peaks(const GenPerm &w) {
  std::vector<int> out;
  const auto image = w.image();
  for (std::size_t i = 1; i + 1 < image.size(); ++i) {
    const int here = image[i].rank();
    if (here > image[i - 1].rank() && here > image[i + 1].rank())
      out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

PinSet pinnacle_set(const GenPerm &w) {
  std::vector<ColoredValue> values;
  for (int position : peaks(w))
    values.push_back(w.at(position));
  return PinSet(w.ambient(), std::move(values));
}

long color_sum(const GenPerm &w) {
  long total = 0;
  for (const auto &value : w.image())
    total += value.color();
  return total;
}

bool in_subgroup(const GenPerm &w, const GroupParams &group) {
  require_valid(group);
  if (w.ambient() != group.ambient())
    throw ContractViolation("in_subgroup: permutation is not in Z_" + std::to_string(group.m) +
                            " wr S_" + std::to_string(group.n));
  return color_sum(w) % group.p == 0;
}

} // namespace pinnacle
