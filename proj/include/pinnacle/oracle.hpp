#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pinnacle/big_count.hpp"
#include "pinnacle/gen_perm.hpp"
#include "pinnacle/pin_set.hpp"

namespace pinnacle::oracle {

/// Environment variable read by OracleBudget::from_environment().
inline constexpr const char *kBudgetEnvVar = "PINNACLE_ORACLE_BUDGET";

struct OracleBudget {
  std::uint64_t max_group_order = 10'000'000;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
  /// When set, for_each_element visits elements serially in canonical order.
  bool deterministic = true;

  /// Default budget with max_group_order taken from PINNACLE_ORACLE_BUDGET if set.
  static OracleBudget from_environment();
};

/// The requested scan would exceed the budget. Carries the group that was
/// refused and the order it would have needed.
class BudgetRefusal : public std::runtime_error {
public:
  BudgetRefusal(GroupParams group, Count required, std::uint64_t limit);

  const GroupParams &group() const { return group_; }
  const Count &required() const { return required_; }
  std::uint64_t limit() const { return limit_; }

private:
  GroupParams group_;
  Count required_;
  std::uint64_t limit_;
};

/// |G(m,p,n)| = m^n n! / p.
Count group_order(const GroupParams &group);

/// Throws BudgetRefusal if |G(m,p,n)| exceeds the budget.
void check_budget(const GroupParams &group, const OracleBudget &budget);

/// Witness statistics for one pinnacle set.
struct WitnessStats {
  std::uint64_t witnesses = 0;
  long eps_min = 0;
  long eps_max = 0;
  /// Bit e is set iff some witness has color sum e.
  std::uint64_t eps_achieved = 0;

  bool eps_contiguous() const;
  void record(long eps);
  void merge(const WitnessStats &other);
  friend bool operator==(const WitnessStats &, const WitnessStats &) = default;
};

class OracleReport {
public:
  explicit OracleReport(GroupParams group) : group_(group) {}

  const GroupParams &group() const { return group_; }
  Ambient ambient() const { return group_.ambient(); }
  std::uint64_t scanned() const { return scanned_; }

  /// Number of distinct admissible sets.
  std::size_t size() const { return sets_.size(); }
  /// #APS_d(m,p,n): admissible sets with at most `d` elements.
  std::size_t count_up_to(int d) const;
  /// Admissible sets of exactly `d` elements, in increasing mask order.
  std::vector<PinSet> sets_of_size(int d) const;
  std::vector<PinSet> all_sets() const;
  bool contains(const PinSet &set) const;
  std::optional<WitnessStats> stats(const PinSet &set) const;

  /// Raw access keyed by PinSet::mask().
  const std::map<std::uint64_t, WitnessStats> &by_mask() const { return sets_; }

  void record(std::uint64_t mask, long eps);
  void merge_stats(std::uint64_t mask, const WitnessStats &stats);
  void add_scanned(std::uint64_t elements) { scanned_ += elements; }
  /// Union of two reports over the same group.
  void merge(const OracleReport &other);

  friend bool operator==(const OracleReport &, const OracleReport &) = default;

private:
  GroupParams group_;
  std::uint64_t scanned_ = 0;
  std::map<std::uint64_t, WitnessStats> sets_;
};

using ElementVisitor = std::function<void(const GenPerm &)>;

/// Visits every element of G(m,p,n) exactly once. With budget.deterministic
/// the order is: magnitude words w(n)...w(1) in lexicographic order, and for
/// each, color words in odometer order (last position fastest). Otherwise the
/// visitor may run concurrently from several threads.
void for_each_element(const GroupParams &group, const OracleBudget &budget,
                      const ElementVisitor &visit);

/// All elements of G(m,p,n), in canonical order.
std::vector<GenPerm> enumerate_group(const GroupParams &group, const OracleBudget &budget);

/// Scans G(m,p,n) and collects every pinnacle set with witness statistics.
/// Requires m*n <= 64.
OracleReport collect_pinnacle_sets(const GroupParams &group, const OracleBudget &budget);

/// Every element of G(m,p,n) whose pinnacle set is `set`, in canonical order.
/// A set with a repeated magnitude has no witness and is answered without a scan.
std::vector<GenPerm> witnesses_of(const PinSet &set, const GroupParams &group,
                                  const OracleBudget &budget);

} // namespace pinnacle::oracle
