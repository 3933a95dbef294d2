#include <gtest/gtest.h>

#include <random>

#include "flagphase/smith.hpp"

using namespace flagphase;

namespace {

Integer det(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer out = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Integer>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(row);
    }
    const Integer term = m[0][c] * det(minor);
    out += c % 2 ? Integer(-term) : term;
  }
  return out;
}

void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
            std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// gcd of all k x k minors.
Integer minor_gcd(const IntegerMatrix& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rows;
  std::vector<std::vector<std::size_t>> cols;
  std::vector<std::size_t> cur;
  choose(m.size(), k, 0, cur, rows);
  choose(m[0].size(), k, 0, cur, cols);
  Integer g = 0;
  for (const auto& r : rows)
    for (const auto& c : cols) {
      std::vector<std::vector<Integer>> sub;
      for (auto i : r) {
        std::vector<Integer> row;
        for (auto j : c) row.push_back(m[i][j]);
        sub.push_back(row);
      }
      g = gcd(g, det(sub));
    }
  return g;
}

}  // namespace

TEST(Smith, KnownMatrices) {
  EXPECT_EQ(invariant_factors({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), (std::vector<Integer>{2, 6, 12}));
  EXPECT_EQ(invariant_factors({{0, 0}, {0, 0}}), std::vector<Integer>{});
  EXPECT_EQ(determinantal_divisor({{0, 0}}), 0);
  EXPECT_EQ(determinantal_divisor({{-8, 5}}), 1);
  EXPECT_EQ(determinantal_divisor({{-3, 2, 0}, {-5, 0, 2}}), 2);
}

TEST(Smith, LargeCoprimeEntriesStayBounded) {
  const IntegerMatrix m = {{-22579, 26299, 0, 0}, {-50464, 0, 26299, 0}, {-14844, 0, 0, 26299}};
  EXPECT_EQ(invariant_factors(m), (std::vector<Integer>{1, 26299, 26299}));
}

TEST(Smith, InvariantFactorsMatchMinorGcds) {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = dim(rng);
    const int c = dim(rng) + 1;
    IntegerMatrix m(r, std::vector<Integer>(c));
    for (auto& row : m)
      for (auto& x : row) x = trial % 3 == 0 ? entry(rng) * 2 : entry(rng);
    const auto d = invariant_factors(m);
    for (std::size_t i = 1; i < d.size(); ++i) EXPECT_EQ(d[i] % d[i - 1], 0);
    Integer prefix = 1;
    for (std::size_t k = 1; k <= std::min<std::size_t>(r, c); ++k) {
      const Integer g = minor_gcd(m, k);
      if (k <= d.size()) {
        prefix *= d[k - 1];
        EXPECT_EQ(prefix, g) << "k=" << k;
      } else {
        EXPECT_EQ(g, 0);
      }
    }
  }
}
