#include <gtest/gtest.h>

#include <set>

#include "isogr/partitions.hpp"

using namespace isogr;

namespace {

using Parts = std::vector<int>;

// Every weakly decreasing sequence in the box, filtered afterwards: an oracle
// that shares nothing with the pruned generator.
std::vector<Parts> brute_force(int k, int n) {
  const int rows = n - k, cols = n + k;
  std::vector<Parts> all;
  std::vector<int> row(static_cast<std::size_t>(rows), 0);
  while (true) {
    bool decreasing = true;
    for (int i = 1; i < rows; ++i)
      if (row[i] > row[i - 1]) decreasing = false;
    if (decreasing) {
      Parts p;
      for (int x : row)
        if (x > 0) p.push_back(x);
      bool strict = true;
      for (std::size_t j = 0; j + 1 < p.size(); ++j)
        if (p[j] > k && p[j] == p[j + 1]) strict = false;
      if (strict) all.push_back(p);
    }
    int i = 0;
    while (i < rows) {
      if (row[i] < cols) {
        ++row[i];
        break;
      }
      row[i] = 0;
      ++i;
    }
    if (i == rows) break;
  }
  return all;
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Parts> parts_of(const std::vector<KStrictPartition>& v) {
  std::vector<Parts> out;
  for (const auto& p : v) out.push_back(p.parts());
  return out;
}

}  // namespace

TEST(Partitions, IsKStrictExamples) {
  EXPECT_FALSE(is_k_strict({2, 2}, 1));
  EXPECT_TRUE(is_k_strict({1, 1, 1}, 1));
  EXPECT_FALSE(is_k_strict({4, 3, 3}, 2));
  EXPECT_TRUE(is_k_strict({}, 0));
}

TEST(Partitions, IsKStrictRejectsMalformed) {
  EXPECT_THROW(is_k_strict({1, 2}, 1), StructuralError);
  EXPECT_THROW(is_k_strict({2, 0}, 1), StructuralError);
  EXPECT_THROW(is_k_strict({-1}, 1), StructuralError);
}

TEST(Partitions, EnumerateExamples) {
  EXPECT_EQ(parts_of(enumerate_partitions(0, 2)), (std::vector<Parts>{{}, {1}, {2}, {2, 1}}));
  EXPECT_EQ(parts_of(enumerate_partitions(1, 2)), (std::vector<Parts>{{}, {1}, {2}, {3}}));
  EXPECT_EQ(parts_of(enumerate_partitions(1, 3, 2)), (std::vector<Parts>{{1, 1}, {2}}));
  EXPECT_THROW(enumerate_partitions(3, 2), DomainError);
}

TEST(Partitions, MatchesBruteForce) {
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      auto got = parts_of(enumerate_partitions(k, n));
      auto want = brute_force(k, n);
      EXPECT_EQ(std::set<Parts>(got.begin(), got.end()), std::set<Parts>(want.begin(), want.end()))
          << "k=" << k << " n=" << n;
      EXPECT_EQ(got.size(), std::set<Parts>(got.begin(), got.end()).size()) << "duplicates";
    }
  }
}

TEST(Partitions, DeterministicOrder) {
  auto v = enumerate_partitions(1, 4);
  for (std::size_t i = 1; i < v.size(); ++i) {
    const auto& a = v[i - 1];
    const auto& b = v[i];
    EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && a.parts() < b.parts()));
  }
}

TEST(Partitions, BettiExamples) {
  EXPECT_EQ(betti_profile(1, 2), (std::map<int, int>{{0, 1}, {2, 1}, {4, 1}, {6, 1}}));
  EXPECT_EQ(betti_profile(1, 3),
            (std::map<int, int>{{0, 1}, {2, 1}, {4, 2}, {6, 2}, {8, 2}, {10, 2}, {12, 1}, {14, 1}}));
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(betti_profile(n, n), (std::map<int, int>{{0, 1}}));
}

TEST(Partitions, TotalCountClosedForm) {
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(static_cast<long>(enumerate_partitions(k, n).size()), (1L << (n - k)) * binomial(n, k))
          << "k=" << k << " n=" << n;
    }
  }
}

TEST(Partitions, ProfileShape) {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; k < n; ++k) {
      auto prof = betti_profile(k, n);
      EXPECT_EQ(prof.begin()->second, 1);
      EXPECT_EQ(prof.rbegin()->second, 1);
      EXPECT_EQ(prof.rbegin()->first, 2 * grassmannian_dimension(k, n));
      for (const auto& [d, c] : prof) EXPECT_GT(c, 0);
    }
  }
}

TEST(Partitions, SizeFilterMatchesPostFilter) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      auto all = enumerate_partitions(k, n);
      for (int s = 0; s <= grassmannian_dimension(k, n) + 1; ++s) {
        std::vector<Parts> post;
        for (const auto& p : all)
          if (p.size() == s) post.push_back(p.parts());
        EXPECT_EQ(parts_of(enumerate_partitions(k, n, s)), post);
      }
    }
  }
}

TEST(Partitions, RenderingAndValidation) {
  KStrictPartition p(1, {4, 2, 1});
  EXPECT_EQ(p.to_string(), "(4,2,1)");
  EXPECT_EQ(p.size(), 7);
  EXPECT_EQ(to_json(p).dump(), "[4,2,1]");
  EXPECT_EQ(KStrictPartition(0, {}).to_string(), "()");
  EXPECT_THROW(KStrictPartition(1, {3, 3}), DomainError);
  EXPECT_TRUE(rectangle_for(1, 3).fits({4, 4}));
  EXPECT_FALSE(rectangle_for(1, 3).fits({5}));
  EXPECT_FALSE(rectangle_for(1, 3).fits({1, 1, 1}));
}

TEST(Partitions, StableCountsAreUnbounded) {
  // k-strict partitions of d with no box: for k = 0 these are strict partitions.
  const std::vector<std::size_t> strict = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10};
  for (int d = 0; d <= 10; ++d) EXPECT_EQ(stable_partitions_of_size(0, d).size(), strict[d]);
  EXPECT_EQ(partitions_of(5).size(), 7u);
}
