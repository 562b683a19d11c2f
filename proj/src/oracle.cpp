#include "pinnacle/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <utility>

namespace pinnacle::oracle {

OracleBudget OracleBudget::from_environment() {
  OracleBudget budget;
  if (const char *text = std::getenv(kBudgetEnvVar); text != nullptr && *text != '\0') {
    char *end = nullptr;
    const unsigned long long value = std::strtoull(text, &end, 10);
    if (end == nullptr || *end != '\0' || value == 0)
      throw ContractViolation(std::string(kBudgetEnvVar) + " must be a positive integer, got '" +
                              text + "'");
    budget.max_group_order = value;
  }
  return budget;
}

BudgetRefusal::BudgetRefusal(GroupParams group, Count required, std::uint64_t limit)
    : std::runtime_error("oracle budget exceeded: G(" + std::to_string(group.m) + "," +
                         std::to_string(group.p) + "," + std::to_string(group.n) + ") has " +
                         required.str() + " elements, budget is " + std::to_string(limit)),
      group_(group), required_(std::move(required)), limit_(limit) {}

Count group_order(const GroupParams &group) {
  require_valid(group);
  Count order = 1;
  for (int i = 1; i <= group.n; ++i)
    order *= Count(group.m) * i;
  return order / group.p;
}

void check_budget(const GroupParams &group, const OracleBudget &budget) {
  auto order = group_order(group);
  if (order > budget.max_group_order)
    throw BudgetRefusal(group, std::move(order), budget.max_group_order);
}

bool WitnessStats::eps_contiguous() const {
  if (witnesses == 0)
    return false;
  const int width = static_cast<int>(eps_max - eps_min + 1);
  const std::uint64_t expected = width >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
  return (eps_achieved >> eps_min) == expected;
}

void WitnessStats::record(long eps) {
  if (witnesses == 0 || eps < eps_min)
    eps_min = eps;
  if (witnesses == 0 || eps > eps_max)
    eps_max = eps;
  eps_achieved |= std::uint64_t{1} << eps;
  ++witnesses;
}

void WitnessStats::merge(const WitnessStats &other) {
  if (other.witnesses == 0)
    return;
  if (witnesses == 0) {
    *this = other;
    return;
  }
  eps_min = std::min(eps_min, other.eps_min);
  eps_max = std::max(eps_max, other.eps_max);
  eps_achieved |= other.eps_achieved;
  witnesses += other.witnesses;
}

std::size_t OracleReport::count_up_to(int d) const {
  return static_cast<std::size_t>(std::ranges::count_if(
      sets_, [d](const auto &entry) { return std::popcount(entry.first) <= d; }));
}

std::vector<PinSet> OracleReport::sets_of_size(int d) const {
  std::vector<PinSet> out;
  for (const auto &[mask, stats] : sets_)
    if (std::popcount(mask) == d)
      out.push_back(PinSet::from_mask(ambient(), mask));
  return out;
}

std::vector<PinSet> OracleReport::all_sets() const {
  std::vector<PinSet> out;
  out.reserve(sets_.size());
  for (const auto &[mask, stats] : sets_)
    out.push_back(PinSet::from_mask(ambient(), mask));
  return out;
}

bool OracleReport::contains(const PinSet &set) const {
  return set.ambient() == ambient() && sets_.contains(set.mask());
}

std::optional<WitnessStats> OracleReport::stats(const PinSet &set) const {
  if (set.ambient() != ambient())
    return std::nullopt;
  if (auto it = sets_.find(set.mask()); it != sets_.end())
    return it->second;
  return std::nullopt;
}

void OracleReport::record(std::uint64_t mask, long eps) { sets_[mask].record(eps); }

void OracleReport::merge_stats(std::uint64_t mask, const WitnessStats &stats) {
  sets_[mask].merge(stats);
}

void OracleReport::merge(const OracleReport &other) {
  if (other.group_ != group_)
    throw ContractViolation("OracleReport::merge: reports describe different groups");
  scanned_ += other.scanned_;
  for (const auto &[mask, stats] : other.sets_)
    sets_[mask].merge(stats);
}

namespace {

/// Enumerates the elements of G(m,p,n) whose display word starts with
/// magnitude `lead`, i.e. w(n) has magnitude `lead`. Words are in display
/// order (index 0 is position n). Returns the number of elements visited.
template <class Fn>
std::uint64_t scan_partition(const GroupParams &group, int lead, Fn &&fn) {
  const int n = group.n;
  const int top = group.m - 1;
  std::vector<int> magnitudes{lead};
  for (int x = 1; x <= n; ++x)
    if (x != lead)
      magnitudes.push_back(x);
  std::vector<int> colors(n, 0);

  std::uint64_t visited = 0;
  do {
    std::ranges::fill(colors, 0);
    long eps = 0;
    while (true) {
      if (eps % group.p == 0) {
        fn(std::as_const(magnitudes), std::as_const(colors), eps);
        ++visited;
      }
      int i = n - 1;
      while (i >= 0 && colors[i] == top) {
        colors[i] = 0;
        eps -= top;
        --i;
      }
      if (i < 0)
        break;
      ++colors[i];
      ++eps;
    }
  } while (std::next_permutation(magnitudes.begin() + 1, magnitudes.end()));
  return visited;
}

unsigned worker_count(const OracleBudget &budget, int partitions) {
  unsigned workers = budget.workers != 0 ? budget.workers : std::thread::hardware_concurrency();
  workers = std::max(1U, workers);
  return std::min(workers, static_cast<unsigned>(partitions));
}

/// Runs `job(lead)` for every lead in 1..n, spread over the workers.
template <class Job>
void run_partitions(int n, unsigned workers, Job &&job) {
  if (workers <= 1) {
    for (int lead = 1; lead <= n; ++lead)
      job(lead);
    return;
  }
  std::atomic<int> next{1};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (int lead = next++; lead <= n; lead = next++)
        job(lead);
    });
}

GenPerm to_perm(const Ambient &ambient, const std::vector<int> &magnitudes,
                const std::vector<int> &colors) {
  const int n = ambient.degree;
  std::vector<ColoredValue> image;
  image.reserve(n);
  for (int j = 1; j <= n; ++j)
    image.emplace_back(ambient, colors[n - j], magnitudes[n - j]);
  return GenPerm(ambient, std::move(image));
}

} // namespace

void for_each_element(const GroupParams &group, const OracleBudget &budget,
                      const ElementVisitor &visit) {
  check_budget(group, budget);
  const Ambient ambient = group.ambient();
  const unsigned workers = budget.deterministic ? 1U : worker_count(budget, group.n);
  run_partitions(group.n, workers, [&](int lead) {
    scan_partition(group, lead, [&](const auto &magnitudes, const auto &colors, long) {
      visit(to_perm(ambient, magnitudes, colors));
    });
  });
}

std::vector<GenPerm> enumerate_group(const GroupParams &group, const OracleBudget &budget) {
  std::vector<GenPerm> out;
  auto serial = budget;
  serial.deterministic = true;
  for_each_element(group, serial, [&](const GenPerm &w) { out.push_back(w); });
  return out;
}

OracleReport collect_pinnacle_sets(const GroupParams &group, const OracleBudget &budget) {
  check_budget(group, budget);
  const int n = group.n;
  if (group.m * n > 64)
    throw ContractViolation("collect_pinnacle_sets requires m*n <= 64");

  OracleReport report(group);
  std::mutex merge_lock;
  run_partitions(n, worker_count(budget, n), [&](int lead) {
    std::unordered_map<std::uint64_t, WitnessStats> partial;
    std::vector<int> ranks(n);
    const std::uint64_t visited =
        scan_partition(group, lead, [&](const auto &magnitudes, const auto &colors, long eps) {
          for (int i = 0; i < n; ++i)
            ranks[i] = (group.m - 1 - colors[i]) * n + (n - magnitudes[i]);
          std::uint64_t mask = 0;
          for (int i = 1; i + 1 < n; ++i)
            if (ranks[i] > ranks[i - 1] && ranks[i] > ranks[i + 1])
              mask |= std::uint64_t{1} << ranks[i];
          partial[mask].record(eps);
        });

    std::lock_guard lock(merge_lock);
    report.add_scanned(visited);
    for (const auto &[mask, stats] : partial)
      report.merge_stats(mask, stats);
  });
  return report;
}

std::vector<GenPerm> witnesses_of(const PinSet &set, const GroupParams &group,
                                  const OracleBudget &budget) {
  if (set.ambient() != group.ambient())
    throw ContractViolation("witnesses_of: set and group have different ambients");
  std::vector<GenPerm> out;
  // Pin(w) is a subset of w's image, whose magnitudes are distinct.
  if (!has_distinct_magnitudes(set))
    return out;
  // Pin(w) is a subset of w's image, whose magnitudes are distinct.
  if (!has_distinct_magnitudes(set))
    return out;
  auto serial = budget;
  serial.deterministic = true;
  for_each_element(group, serial, [&](const GenPerm &w) {
    if (pinnacle_set(w) == set)
      out.push_back(w);
  });
  return out;
}

} // namespace pinnacle::oracle
