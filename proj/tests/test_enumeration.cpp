#include "doctest.h"

#include "pinnacle/count.hpp"
#include "pinnacle/oracle.hpp"

using namespace pinnacle;

namespace {

constexpr CountMethod kSingle[] = {CountMethod::recursion_m, CountMethod::recursion_n,
                                   CountMethod::closed_alternating, CountMethod::closed_positive};

// Hand-rolled signed sum, kept separate from the library implementation.
long long alternating_reference(int m, int n, int d) {
  long long total = 0, power = 1;
  for (int i = 0; i <= d; ++i) {
    long long c = 1;
    for (int j = 1; j <= i; ++j)
      c = c * (n - i + j) / j;
    total += ((i + d) % 2 == 0 ? 1 : -1) * c * power;
    power *= m;
  }
  return total;
}

} // namespace

TEST_CASE("binomial coefficients") {
  CHECK(binomial(9, 3) == 84);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(100, 50).str() == "100891344545564193334812497256");
  CHECK_THROWS_AS(binomial(-1, 0), ContractViolation);
}

TEST_CASE("method examples") {
  CHECK(count_recursion_m(1, 10, 3) == 84);
  CHECK(count_recursion_m(2, 5, 2) == 31);
  CHECK(count_recursion_n(2, 7, 3) == 209);
  CHECK(count_recursion_n(3, 5, 2) == 76);
  CHECK(count_closed_alternating(2, 5, 2) == 31);
  CHECK(count_closed_alternating(3, 7, 3) == 776);
  CHECK(count_closed_positive(2, 7, 3) == 209);
  CHECK(count_closed_positive(4, 6, 2) == 217);
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 10; ++n)
      for (auto method : kSingle)
        CHECK(count_pinnacle_sets(m, n, 0, method) == 1);
  for (int n = 1; n <= 15; ++n)
    for (int d = 0; d <= max_pinnacles(n); ++d) {
      CHECK(count_closed_alternating(1, n, d) == binomial(n - 1, d));
      CHECK(count_closed_positive(1, n, d) == binomial(n - 1, d));
    }
}

TEST_CASE("totals") {
  CHECK(count_total(3, 10) == 14146);
  CHECK(count_total(2, 12) == 18943);
  for (auto method : kSingle)
    CHECK(count_total(8, 3, method) == 23);
  for (int m = 1; m <= 12; ++m)
    CHECK(count_total(m, 3) == 2 + 3 * (m - 1));
  CHECK(count_total(3, 10, CountMethod::all) == 14146);
}

TEST_CASE("the four methods agree and match a machine-word reference") {
  for (int m = 1; m <= 8; ++m)
    for (int n = 1; n <= 20; ++n)
      for (int d = 0; d <= max_pinnacles(n); ++d) {
        const Count expected = alternating_reference(m, n, d);
        for (auto method : kSingle)
          REQUIRE(count_pinnacle_sets(m, n, d, method) == expected);
      }
}

TEST_CASE("filtrations are monotone and nonempty") {
  for (int m = 1; m <= 10; ++m)
    for (int n = 1; n <= 20; ++n)
      for (int d = 0; d <= max_pinnacles(n); ++d) {
        const auto here = count_closed_alternating(m, n, d);
        CHECK(here > 0);
        if (d + 1 <= max_pinnacles(n))
          CHECK(here <= count_closed_alternating(m, n, d + 1));
        if (m > 1)
          CHECK(count_closed_alternating(m - 1, n, d) <= here);
      }
}

TEST_CASE("counts match the oracle for small groups") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 6; ++n) {
      const auto report = oracle::collect_pinnacle_sets(GroupParams{m, 1, n}, {});
      for (int d = 0; d <= max_pinnacles(n); ++d)
        CHECK(Count(report.count_up_to(d)) == count_closed_alternating(m, n, d));
    }
}

TEST_CASE("large parameters stay exact") {
  const auto value = count_total(50, 100, CountMethod::all);
  CHECK(value == count_closed_positive(50, 100, 49));
  CHECK(value > Count(1) << 300);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(count_closed_alternating(0, 5, 1), ContractViolation);
  CHECK_THROWS_AS(count_recursion_m(2, 0, 0), ContractViolation);
  CHECK_THROWS_AS(count_recursion_n(2, 5, 3), ContractViolation);
  CHECK_THROWS_AS(count_closed_positive(2, 5, -1), ContractViolation);
  CHECK_THROWS_AS(parse_count_method("fastest"), ContractViolation);
  CHECK(parse_count_method("recursion-n") == CountMethod::recursion_n);
  CHECK_THROWS_AS(count_complex(GroupParams{4, 3, 5}, std::nullopt, {}), ContractViolation);
}

TEST_CASE("injected faults surface as cross-check mismatches") {
  CountHooks hooks;
  hooks.perturbed = CountMethod::recursion_n;
  CHECK(count_pinnacle_sets(2, 5, 2, CountMethod::recursion_n, hooks) == 32);
  try {
    count_pinnacle_sets(2, 5, 2, CountMethod::all, hooks);
    FAIL("expected a mismatch");
  } catch (const CrossCheckMismatch &mismatch) {
    CHECK(mismatch.values()[0] == 31);
    CHECK(mismatch.values()[1] == 32);
  }
}

TEST_CASE("complex reflection group counts") {
  const oracle::OracleBudget budget;
  auto even = count_complex(GroupParams{4, 2, 6}, std::nullopt, budget);
  CHECK(even.value == 217);
  CHECK_FALSE(even.reduced);
  CHECK(count_complex(GroupParams{4, 2, 5}, 1, budget).value == count_closed_alternating(4, 5, 1));
  CHECK(count_complex(GroupParams{6, 1, 7}, std::nullopt, budget).value == count_total(6, 7));

  // odd-maximal values established by exhaustive scans of G(2,2,3) and G(4,2,3)
  auto small = count_complex(GroupParams{2, 2, 3}, std::nullopt, budget);
  CHECK(small.reduced);
  CHECK(small.irreducible == 4);
  CHECK(small.correction == 0);
  CHECK(small.value == 4);

  auto reduced = count_complex(GroupParams{4, 2, 3}, std::nullopt, budget);
  CHECK(reduced.irreducible == 4);
  CHECK(reduced.correction == 6);
  CHECK(reduced.value == 10);
  CHECK(Count(oracle::collect_pinnacle_sets(GroupParams{4, 2, 3}, budget).size()) == reduced.value);

  auto five = count_complex(GroupParams{4, 2, 5}, std::nullopt, budget);
  CHECK(five.value == Count(oracle::collect_pinnacle_sets(GroupParams{4, 2, 5}, budget).size()));

  oracle::OracleBudget tiny;
  tiny.max_group_order = 10;
  CHECK_THROWS_AS(count_complex(GroupParams{4, 2, 5}, std::nullopt, tiny), oracle::BudgetRefusal);
  CHECK(count_complex(GroupParams{4, 2, 6}, std::nullopt, tiny).value == 217);
}
