#include <gtest/gtest.h>

#include "lrkit/enumeration.hpp"
#include "lrkit/error.hpp"

namespace lrkit {
namespace {

Partition P(std::vector<Int> parts) { return Partition(std::move(parts)); }

MultiplicityMultiset histogram(std::map<Int, Int> counts) {
  MultiplicityMultiset m;
  for (const auto& [value, count] : counts) {
    for (Int i = 0; i < count; ++i) m.add(value);
  }
  return m;
}

TEST(CountAbove, Examples) {
  EXPECT_EQ(count_above_enum(P({1, 0, 0}), P({1, 0, 0}), 0), 2);
  EXPECT_EQ(count_above_enum(P({5, 3, 0}), P({6, 3, 0}), 0), 21);
  EXPECT_EQ(count_above_enum(P({5, 3, 0}), P({6, 3, 0}), 1), 10);
  EXPECT_EQ(count_above_enum(P({5, 3, 0}), P({6, 3, 0}), 2), 3);
  EXPECT_EQ(count_above_enum(P({4, 2, 2, 0}), P({2, 1, 1, 0}), 0, Backend::Hive), 8);
  EXPECT_THROW(count_above_enum(P({1, 0}), P({1, 0}), -1), InvalidArgument);
}

TEST(Multiset, Examples) {
  const auto expected = histogram({{1, 11}, {2, 7}, {3, 3}});
  for (Backend b : {Backend::Auto, Backend::Hive, Backend::Tableaux, Backend::Closed}) {
    EXPECT_EQ(multiplicity_multiset(P({5, 3, 0}), P({6, 3, 0}), b), expected) << backend_name(b);
    EXPECT_EQ(multiplicity_multiset(P({5, 2, 0}), P({6, 3, 0}), b), expected) << backend_name(b);
  }
  EXPECT_EQ(multiplicity_multiset(P({0, 0, 0}), P({3, 1, 0})), histogram({{1, 1}}));
  EXPECT_EQ(expected.mult_sum, 34);
  EXPECT_EQ(expected.to_string(), "{1:11, 2:7, 3:3}");
}

TEST(Multiset, FrozenRankFourAndFiveValues) {
  EXPECT_EQ(multiplicity_multiset(P({4, 2, 2, 0}), P({3, 1, 0, 0}), Backend::Hive), histogram({{1, 11}, {2, 3}}));
  const auto gl5 = multiplicity_multiset(P({3, 3, 2, 0, 0}), P({4, 4, 1, 0, 0}), Backend::Hive);
  const auto gl5_star = multiplicity_multiset(P({3, 3, 1, 0, 0}), P({4, 4, 1, 0, 0}), Backend::Hive);
  EXPECT_EQ(gl5.components, 34);
  EXPECT_EQ(gl5_star.components, 33);
  EXPECT_EQ(gl5.mult_sum, 42);
  EXPECT_EQ(gl5_star.mult_sum, 42);
}

TEST(Multiset, BackendsAgreeOnMixedShapes) {
  const std::pair<Partition, Partition> cases[] = {
      {P({3, 1, 1}), P({2, 2, 0})},
      {P({4, 2, 2, 1}), P({3, 1, 0, 0})},
      {P({2, 1, 1, 1, 0}), P({2, 2, 1, 0, 0})},
      {P({3, 2}), P({2, 1})},
  };
  for (const auto& [lambda, mu] : cases) {
    const auto hive = multiplicity_multiset(lambda, mu, Backend::Hive);
    EXPECT_EQ(multiplicity_multiset(lambda, mu, Backend::Tableaux), hive) << lambda << mu;
    EXPECT_EQ(multiplicity_multiset(lambda, mu, Backend::Auto), hive) << lambda << mu;
  }
  EXPECT_THROW(multiplicity_multiset(P({3, 2, 1, 0}), P({1, 0, 0, 0}), Backend::Closed), InvalidArgument);
}

TEST(LrCoefficient, AutoMatchesEveryBackend) {
  const Partition lambda = P({5, 3, 3, 1}), mu = P({3, 2, 2, 1});
  for (const auto& nu : enumerate_nu_candidates(lambda, mu)) {
    const Int c = lr_coefficient(lambda, mu, nu, Backend::Hive);
    EXPECT_EQ(lr_coefficient(lambda, mu, nu, Backend::Auto), c) << nu;
    EXPECT_EQ(lr_coefficient(lambda, mu, nu, Backend::Closed), c) << nu;
    EXPECT_EQ(lr_coefficient(lambda, mu, nu, Backend::Tableaux), c) << nu;
  }
}

TEST(CountAbove, Symmetries) {
  for (Int k1 = 0; k1 <= 3; ++k1) {
    for (Int k2 = 0; k2 <= 3; ++k2) {
      for (Int l1 = 0; l1 <= 3; ++l1) {
        for (Int l2 = 0; l2 <= 3; ++l2) {
          const Partition lambda = from_fundamental({k1, k2, 4}), mu = from_fundamental({l1, l2, 4});
          for (Int c = 0; c <= 2; ++c) {
            const Int v = count_above_enum(lambda, mu, c, Backend::Hive);
            EXPECT_EQ(count_above_enum(mu, lambda, c, Backend::Hive), v);
            EXPECT_EQ(count_above_enum(dual_star(lambda), dual_star(mu), c, Backend::Hive), v);
          }
        }
      }
    }
  }
}

TEST(Scan, FamiliesAgreeOnSmallRanges) {
  for (const char* family : {"gl3", "gl4nr2"}) {
    const ScanResult r = verify_family_range(family, 3, 2);
    EXPECT_TRUE(r.ok()) << family << ": " << r.mismatch.value_or("");
    EXPECT_EQ(r.points, 4u * 4 * 4 * 4 * 3);
  }
  const ScanResult samples = verify_family_range("gl4nr-samples", 4, 0);
  EXPECT_TRUE(samples.ok()) << samples.mismatch.value_or("");
  EXPECT_THROW(verify_family_range("gl7", 1, 1), InvalidArgument);
}

}  // namespace
}  // namespace lrkit
