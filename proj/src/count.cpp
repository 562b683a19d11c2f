#include "pinnacle/count.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace pinnacle {

Count binomial(long n, long k) {
  if (n < 0)
    throw ContractViolation("binomial: negative n");
  if (k < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  Count out = 1;
  for (long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

namespace {

constexpr std::array<CountMethod, 4> kMethods = {CountMethod::recursion_m, CountMethod::recursion_n,
                                                 CountMethod::closed_alternating,
                                                 CountMethod::closed_positive};

/// Memo table keyed on (m, n, d); concurrent readers, one writer at a time.
class Memo {
public:
  std::optional<Count> find(int m, int n, int d) const {
    std::shared_lock lock(mutex_);
    if (auto it = table_.find({m, n, d}); it != table_.end())
      return it->second;
    return std::nullopt;
  }
  void store(int m, int n, int d, const Count &value) {
    std::unique_lock lock(mutex_);
    table_.emplace(std::tuple{m, n, d}, value);
  }

private:
  mutable std::shared_mutex mutex_;
  std::map<std::tuple<int, int, int>, Count> table_;
};

Memo &recursion_m_memo() {
  static Memo memo;
  return memo;
}

Memo &recursion_n_memo() {
  static Memo memo;
  return memo;
}

Count recursion_m_unchecked(int m, int n, int d) {
  if (d == 0)
    return 1;
  if (m == 1)
    return binomial(n - 1, d);
  auto &memo = recursion_m_memo();
  if (auto hit = memo.find(m, n, d))
    return *hit;
  Count total = 0;
  for (int i = 0; i <= d; ++i)
    total += binomial(n, i) * recursion_m_unchecked(m - 1, n - i, d - i);
  memo.store(m, n, d, total);
  return total;
}

// Defined for all n >= 0 and d >= -1; agrees with p_{m,n}(d) inside its domain.
Count recursion_n_extended(int m, int n, int d) {
  if (d < 0)
    return 0;
  if (d == 0)
    return 1;
  if (n == 0)
    return d % 2 == 0 ? 1 : -1;
  if (m == 1 && n >= 1)
    return binomial(n - 1, d);
  auto &memo = recursion_n_memo();
  if (auto hit = memo.find(m, n, d))
    return *hit;
  Count value = Count(m) * recursion_n_extended(m, n - 1, d - 1) + recursion_n_extended(m, n - 1, d);
  memo.store(m, n, d, value);
  return value;
}

Count evaluate(CountMethod method, int m, int n, int d) {
  switch (method) {
  case CountMethod::recursion_m:
    return count_recursion_m(m, n, d);
  case CountMethod::recursion_n:
    return count_recursion_n(m, n, d);
  case CountMethod::closed_alternating:
    return count_closed_alternating(m, n, d);
  case CountMethod::closed_positive:
    return count_closed_positive(m, n, d);
  case CountMethod::all:
    break;
  }
  throw ContractViolation("evaluate: 'all' is not a single method");
}

} // namespace

std::string_view to_string(CountMethod method) {
  switch (method) {
  case CountMethod::recursion_m:
    return "recursion-m";
  case CountMethod::recursion_n:
    return "recursion-n";
  case CountMethod::closed_alternating:
    return "closed-alternating";
  case CountMethod::closed_positive:
    return "closed-positive";
  case CountMethod::all:
    return "all";
  }
  return "unknown";
}

CountMethod parse_count_method(std::string_view text) {
  for (auto method : {CountMethod::recursion_m, CountMethod::recursion_n,
                      CountMethod::closed_alternating, CountMethod::closed_positive, CountMethod::all})
    if (text == to_string(method))
      return method;
  throw ContractViolation("unknown method '" + std::string(text) + "'");
}

CrossCheckMismatch::CrossCheckMismatch(int m, int n, int d, std::array<Count, 4> values)
    : std::runtime_error("cross-check mismatch for p_{" + std::to_string(m) + "," +
                         std::to_string(n) + "}(" + std::to_string(d) + "): recursion-m=" +
                         values[0].str() + " recursion-n=" + values[1].str() +
                         " closed-alternating=" + values[2].str() +
                         " closed-positive=" + values[3].str()),
      values_(std::move(values)) {}

void require_count_domain(int m, int n, int d) {
  if (m < 1 || n < 1)
    throw ContractViolation("counting requires m >= 1 and n >= 1");
  if (d < 0 || d > max_pinnacles(n))
    throw ContractViolation("d = " + std::to_string(d) + " outside [0, " +
                            std::to_string(max_pinnacles(n)) + "] for n = " + std::to_string(n));
}

Count count_recursion_m(int m, int n, int d) {
  require_count_domain(m, n, d);
  return recursion_m_unchecked(m, n, d);
}

Count count_recursion_n(int m, int n, int d) {
  require_count_domain(m, n, d);
  return recursion_n_extended(m, n, d);
}

Count count_closed_alternating(int m, int n, int d) {
  require_count_domain(m, n, d);
  Count total = 0;
  Count power = 1;
  for (int i = 0; i <= d; ++i) {
    const Count term = binomial(n, i) * power;
    if ((i + d) % 2 == 0)
      total += term;
    else
      total -= term;
    power *= m;
  }
  return total;
}

Count count_closed_positive(int m, int n, int d) {
  require_count_domain(m, n, d);
  Count total = 0;
  Count power = 1;
  for (int k = 0; k <= d; ++k) {
    total += power * binomial(n, k) * binomial(n - k - 1, d - k);
    power *= m - 1;
  }
  return total;
}

Count count_pinnacle_sets(int m, int n, int d, CountMethod method, const CountHooks &hooks) {
  require_count_domain(m, n, d);
  auto value_of = [&](CountMethod single) {
    Count value = evaluate(single, m, n, d);
    if (hooks.perturbed == single)
      value += 1;
    return value;
  };
  if (method != CountMethod::all)
    return value_of(method);

  std::array<Count, 4> values;
  for (std::size_t i = 0; i < kMethods.size(); ++i)
    values[i] = value_of(kMethods[i]);
  for (const auto &value : values)
    if (value != values[0])
      throw CrossCheckMismatch(m, n, d, values);
  return values[0];
}

Count count_total(int m, int n, CountMethod method, const CountHooks &hooks) {
  return count_pinnacle_sets(m, n, max_pinnacles(n), method, hooks);
}

Count reduction_correction(int m, int p, int r) {
  require_valid(GroupParams{m, p, 2 * r + 1});
  const int k = m / p;
  const int n = 2 * r + 1;
  Count total = 0;
  for (int i = 0; i <= r; ++i) {
    Count term = binomial(n, i) * boost::multiprecision::pow(Count(p), i) *
                 (boost::multiprecision::pow(Count(k), i) - 1);
    if ((i + r) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

ComplexCount count_complex(const GroupParams &group, std::optional<int> d,
                           const oracle::OracleBudget &budget) {
  require_valid(group);
  const int cap = max_pinnacles(group.n);
  const int size = d.value_or(cap);
  require_count_domain(group.m, group.n, size);

  const bool odd_maximal = group.n % 2 == 1 && size == cap;
  if (group.p == 1 || !odd_maximal)
  {
    ComplexCount out;
    out.value = count_closed_alternating(group.m, group.n, size);
    return out;
  }

  const int r = (group.n - 1) / 2;
  const GroupParams irreducible_group{group.p, group.p, group.n};
  const auto report = oracle::collect_pinnacle_sets(irreducible_group, budget);
  ComplexCount out;
  out.reduced = true;
  out.irreducible = Count(report.size());
  out.correction = reduction_correction(group.m, group.p, r);
  out.value = *out.irreducible + *out.correction;
  return out;
}

} // namespace pinnacle
