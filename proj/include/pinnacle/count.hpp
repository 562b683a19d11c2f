#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pinnacle/big_count.hpp"
#include "pinnacle/gen_perm.hpp"
#include "pinnacle/oracle.hpp"

namespace pinnacle {

/// Binomial coefficient C(n, k); zero when k < 0 or k > n. Requires n >= 0.
Count binomial(long n, long k);

enum class CountMethod { recursion_m, recursion_n, closed_alternating, closed_positive, all };

std::string_view to_string(CountMethod method);
/// Accepts the names printed by to_string; throws ContractViolation otherwise.
CountMethod parse_count_method(std::string_view text);

/// The four methods disagreed. Holds each method's value.
class CrossCheckMismatch : public std::runtime_error {
public:
  CrossCheckMismatch(int m, int n, int d, std::array<Count, 4> values);
  const std::array<Count, 4> &values() const { return values_; }

private:
  std::array<Count, 4> values_;
};

/// Throws ContractViolation unless m, n >= 1 and 0 <= d <= floor((n-1)/2).
void require_count_domain(int m, int n, int d);

/// p_{m,n}(d) = sum_{i=0}^{d} C(n,i) p_{m-1,n-i}(d-i), base p_{1,n}(d) = C(n-1,d).
Count count_recursion_m(int m, int n, int d);

/// p_{m,n}(d) = m p_{m,n-1}(d-1) + p_{m,n-1}(d). Intermediate terms with
/// d > floor((n-2)/2) use the signed continuation of the alternating sum.
Count count_recursion_n(int m, int n, int d);

/// p_{m,n}(d) = sum_{i=0}^{d} (-1)^{i+d} C(n,i) m^i.
Count count_closed_alternating(int m, int n, int d);

/// p_{m,n}(d) = sum_{k=0}^{d} (m-1)^k C(n,k) C(n-k-1, d-k).
Count count_closed_positive(int m, int n, int d);

/// Hooks that let tests perturb one method to exercise the mismatch path.
struct CountHooks {
  std::optional<CountMethod> perturbed;
};

/// #APS_d(m,n) by the chosen method; `all` evaluates the four methods and
/// throws CrossCheckMismatch unless they agree.
Count count_pinnacle_sets(int m, int n, int d, CountMethod method = CountMethod::closed_alternating,
                          const CountHooks &hooks = {});

/// #APS(m,n) = p_{m,n}(floor((n-1)/2)).
Count count_total(int m, int n, CountMethod method = CountMethod::closed_alternating,
                  const CountHooks &hooks = {});

struct ComplexCount {
  Count value;
  /// True when the odd-maximal reduction was used.
  bool reduced = false;
  /// #APS(p,p,2r+1) as computed by the oracle, when reduced.
  std::optional<Count> irreducible;
  /// The closed-form correction sum, when reduced.
  std::optional<Count> correction;
};

/// sum_{i=0}^{r} C(2r+1,i) p^i (k^i - 1) (-1)^{i+r}, with k = m / p.
Count reduction_correction(int m, int p, int r);

/// #APS_d(m,p,n), default d = floor((n-1)/2). Outside the odd-maximal case
/// this equals p_{m,n}(d); in it, the oracle supplies #APS(p,p,2r+1) and may
/// throw oracle::BudgetRefusal.
ComplexCount count_complex(const GroupParams &group, std::optional<int> d,
                           const oracle::OracleBudget &budget);

} // namespace pinnacle
