#include <gtest/gtest.h>

#include <set>

#include "lrkit/error.hpp"
#include "lrkit/hive.hpp"

namespace lrkit {
namespace {

Partition P(std::vector<Int> parts) { return Partition(std::move(parts)); }

TEST(HiveBoundary, PartialSums) {
  const Hive h = hive_boundary(P({5, 3, 0}), P({6, 3, 0}), P({8, 6, 3}));
  // Left edge from the bottom corner up to the apex.
  EXPECT_EQ(h.at({3, 0}), 0);
  EXPECT_EQ(h.at({2, 0}), 5);
  EXPECT_EQ(h.at({1, 0}), 8);
  EXPECT_EQ(h.at({0, 0}), 8);
  // Right edge continues down from the apex.
  EXPECT_EQ(h.at({1, 1}), 14);
  EXPECT_EQ(h.at({2, 2}), 17);
  EXPECT_EQ(h.at({3, 3}), 17);
  // Bottom edge.
  EXPECT_EQ(h.at({3, 1}), 8);
  EXPECT_EQ(h.at({3, 2}), 14);
  EXPECT_FALSE(h.is_set({2, 1}));
}

TEST(HiveBoundary, SmallHive) {
  const Hive h = hive_boundary(P({1, 0}), P({1, 0}), P({2, 0}));
  EXPECT_EQ(h.to_text(), "1\n1 2\n0 2 2\n");
  EXPECT_THROW(hive_boundary(P({1, 0}), P({1, 0}), P({1, 0})), InvalidArgument);
}

TEST(Rhombi, Counts) {
  EXPECT_EQ(rhombus_constraints(2).size(), 3u);
  EXPECT_EQ(rhombus_constraints(3).size(), 9u);
  EXPECT_EQ(rhombus_constraints(4).size(), 18u);
}

TEST(CountHives, Examples) {
  EXPECT_EQ(count_hives(P({1, 0, 0}), P({1, 0, 0}), P({1, 1, 0})), 1);
  EXPECT_EQ(count_hives(P({5, 3, 0}), P({6, 3, 0}), P({8, 6, 3})), 3);
  EXPECT_EQ(count_hives(P({2, 1, 0}), P({2, 1, 0}), P({3, 2, 1})), 2);
  EXPECT_EQ(count_hives(P({1, 0}), P({1, 0}), P({1, 0})), 0);
}

TEST(CountHives, FrozenRankFourValues) {
  // Independent character computation (weights of semistandard tableaux).
  const Partition lambda = P({4, 2, 2, 0}), mu = P({2, 1, 1, 0});
  const std::pair<Partition, Int> expected[] = {
      {P({4, 3, 3, 2}), 1}, {P({4, 4, 3, 1}), 1}, {P({5, 3, 2, 2}), 1}, {P({5, 3, 3, 1}), 2},
      {P({5, 4, 2, 1}), 1}, {P({5, 4, 3, 0}), 1}, {P({6, 3, 2, 1}), 1}, {P({6, 3, 3, 0}), 1},
  };
  Int total = 0;
  for (const auto& nu : enumerate_nu_candidates(lambda, mu)) total += count_hives(lambda, mu, nu) > 0;
  EXPECT_EQ(total, 8);
  for (const auto& [nu, c] : expected) EXPECT_EQ(count_hives(lambda, mu, nu), c) << nu;
}

TEST(EnumerateHives, AllValidAndDistinct) {
  const Partition lambda = P({5, 3, 0}), mu = P({6, 3, 0}), nu = P({9, 6, 2});
  std::vector<Hive> seen;
  enumerate_hives(lambda, mu, nu, [&](const Hive& h) {
    EXPECT_TRUE(h.valid());
    const LRTriple t = boundary_triple(h);
    EXPECT_EQ(t.lambda, lambda);
    EXPECT_EQ(t.mu, mu);
    EXPECT_EQ(t.nu, nu);
    seen.push_back(h);
  });
  EXPECT_EQ(static_cast<Int>(seen.size()), count_hives(lambda, mu, nu));
  for (std::size_t i = 0; i < seen.size(); ++i) {
    for (std::size_t j = i + 1; j < seen.size(); ++j) EXPECT_FALSE(seen[i] == seen[j]);
  }
}

TEST(CountHives, Commutative) {
  for (Int a = 0; a <= 4; ++a) {
    for (const auto& lambda : partitions_of(a, 4, a)) {
      for (Int b = 0; b <= 4; ++b) {
        for (const auto& mu : partitions_of(b, 4, b)) {
          for (const auto& nu : enumerate_nu_candidates(lambda, mu)) {
            EXPECT_EQ(count_hives(lambda, mu, nu), count_hives(mu, lambda, nu));
          }
        }
      }
    }
  }
}

TEST(CountHives, BarReduction) {
  for (Int shift_l = 0; shift_l <= 2; ++shift_l) {
    for (Int shift_m = 0; shift_m <= 2; ++shift_m) {
      const Partition lambda = P({3 + shift_l, 1 + shift_l, shift_l}), mu = P({2 + shift_m, 2 + shift_m, shift_m});
      for (const auto& nu : enumerate_nu_candidates(lambda, mu)) {
        const Int s = shift_l + shift_m;
        if (nu.last() < s) {
          EXPECT_EQ(count_hives(lambda, mu, nu), 0) << nu;
          continue;
        }
        const Partition reduced({nu[0] - s, nu[1] - s, nu[2] - s});
        EXPECT_EQ(count_hives(lambda, mu, nu), count_hives(bar_reduce(lambda), bar_reduce(mu), reduced)) << nu;
      }
    }
  }
}

TEST(RestrictHive, IdentityAtRankFour) {
  const Partition lambda = P({4, 2, 2, 0}), mu = P({2, 1, 1, 0});
  enumerate_hives(lambda, mu, P({5, 3, 3, 1}), [&](const Hive& h) { EXPECT_EQ(restrict_hive(h), h); });
}

TEST(RestrictHive, BijectionAtRankFive) {
  const Partition lambda = near_rectangular(3, 1, 0, 5), mu = near_rectangular(2, 1, 0, 5);
  const Partition lambda4 = near_rectangular(3, 1, 0, 4), mu4 = near_rectangular(2, 1, 0, 4);
  Int checked_triples = 0;
  for (const auto& nu : enumerate_nu_candidates(lambda, mu)) {
    std::vector<Hive> images;
    enumerate_hives(lambda, mu, nu, [&](const Hive& h) { images.push_back(restrict_hive(h)); });
    if (images.empty()) continue;
    ++checked_triples;
    const Partition nu4({nu[0], nu[1], nu[3], nu[4]});
    EXPECT_EQ(static_cast<Int>(images.size()), count_hives(lambda4, mu4, nu4)) << nu;
    for (const auto& img : images) {
      EXPECT_TRUE(img.valid());
      EXPECT_EQ(boundary_triple(img).nu, nu4);
    }
    for (std::size_t i = 0; i < images.size(); ++i) {
      for (std::size_t j = i + 1; j < images.size(); ++j) EXPECT_FALSE(images[i] == images[j]);
    }
  }
  EXPECT_GT(checked_triples, 0);
}

TEST(RestrictHive, RejectsWrongShapes) {
  const Partition lambda = P({3, 2, 1, 0, 0}), mu = P({1, 0, 0, 0, 0});
  bool any = false;
  enumerate_hives(lambda, mu, P({4, 2, 1, 0, 0}), [&](const Hive& h) {
    any = true;
    EXPECT_THROW(restrict_hive(h), InvalidArgument);
  });
  EXPECT_TRUE(any);
}

}  // namespace
}  // namespace lrkit
