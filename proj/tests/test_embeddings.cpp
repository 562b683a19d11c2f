#include <random>
#include <set>

#include "doctest.h"
#include "support.hpp"

#include "pinnacle/admissibility.hpp"
#include "pinnacle/embeddings.hpp"
#include "pinnacle/oracle.hpp"

using namespace pinnacle;
using namespace testing_support;

TEST_CASE("shift examples") {
  const ShiftParams s{5, 3, 5};
  CHECK(shift_set(set_of(s.source(), {{4, 3}, {3, 2}}), s) ==
        set_of(s.target(), {{7, 3}, {6, 2}}));
  CHECK(shift_set(PinSet(s.source()), s).empty());

  const auto omega = word(s.source(), {{4, 5}, {4, 3}, {4, 4}, {3, 2}, {4, 1}});
  const auto image = word(s.target(), {{7, 5}, {7, 3}, {7, 4}, {6, 2}, {7, 1}});
  CHECK(shift_perm(omega, s) == image);
  CHECK(unshift_perm(image, s) == omega);
  CHECK(shift_perm(canonical_witness(set_of(s.source(), {{4, 3}, {3, 2}})), s) ==
        canonical_witness(set_of(s.target(), {{7, 3}, {6, 2}})));

  const ShiftParams zero{3, 0, 4};
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto w = random_perm(zero.source(), rng);
    CHECK(shift_perm(w, zero) == w);
  }

  const ShiftParams two{2, 2, 4};
  const auto shifted_id = shift_perm(GenPerm::identity(two.source()), two);
  for (const auto &value : shifted_id.image())
    CHECK(value.color() == 2);
  CHECK(pinnacle_set(shifted_id).empty());
}

TEST_CASE("unshift rejects colors below the shift") {
  const ShiftParams s{2, 2, 3};
  CHECK_FALSE(unshift_perm(word(s.target(), {{3, 3}, {1, 2}, {2, 1}}), s).has_value());
  CHECK_FALSE(unshift_set(set_of(s.target(), {{0, 1}}), s).has_value());
  CHECK(unshift_set(set_of(s.target(), {{3, 1}}), s) == set_of(s.source(), {{1, 1}}));
  CHECK_THROWS_AS(shift_perm(GenPerm::identity(Ambient{3, 3}), s), ContractViolation);
}

TEST_CASE("shift_perm is a left-invertible color translation") {
  for (int m = 1; m <= 2; ++m)
    for (int k = 0; k <= 2; ++k)
      for (int n = 1; n <= 4; ++n) {
        const ShiftParams s{m, k, n};
        visit_all_elements(s.source(), [&](const GenPerm &w) {
          const auto image = shift_perm(w, s);
          REQUIRE(unshift_perm(image, s) == w);
          REQUIRE(color_sum(image) == color_sum(w) + long(k) * n);
        });
      }
}

TEST_CASE("shift_set is injective and size-preserving") {
  for (int m = 1; m <= 3; ++m)
    for (int k = 0; k <= 2; ++k) {
      const ShiftParams s{m, k, 4};
      std::set<std::uint64_t> images;
      std::size_t sources = 0;
      for_each_subset(s.source(), 4, [&](std::uint64_t mask) {
        const auto set = PinSet::from_mask(s.source(), mask);
        const auto image = shift_set(set, s);
        REQUIRE(image.size() == set.size());
        REQUIRE(unshift_set(image, s) == set);
        images.insert(image.mask());
        ++sources;
      });
      CHECK(images.size() == sources);
    }
}

TEST_CASE("shift images of admissible sets, m <= 2, k <= 2, n <= 6") {
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 6; ++n) {
      const auto source = oracle::collect_pinnacle_sets(GroupParams{m, 1, n}, {});
      for (int k = 0; k <= 2; ++k) {
        const ShiftParams s{m, k, n};
        const auto target = oracle::collect_pinnacle_sets(GroupParams{m + k, 1, n}, {});
        std::set<std::uint64_t> image, high;
        for (const auto &set : source.all_sets()) {
          const auto shifted = shift_set(set, s);
          image.insert(shifted.mask());
          CHECK(shift_perm(canonical_witness(set), s) == canonical_witness(shifted));
        }
        for (const auto &set : target.all_sets()) {
          bool all_high = true;
          for (const auto &value : set)
            all_high = all_high && value.color() >= k;
          if (all_high)
            high.insert(set.mask());
        }
        CHECK(image == high);
        if (k == 1)
          for (auto mask : image)
            CHECK(target.by_mask().contains(mask));
      }
    }
}
