#include <functional>
#include <gtest/gtest.h>

#include <random>

#include "flagphase/arith.hpp"
#include "flagphase/errors.hpp"
#include "flagphase/stability.hpp"
#include "support/oracle.hpp"

using namespace flagphase;

namespace {

ParabolicGeometry wallach() { return build_flag(build_root_system(Series::A, 2), {}); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

const std::vector<std::shared_ptr<const RootSystem>>& pool() {
  static const std::vector<std::shared_ptr<const RootSystem>> p = {
      oracle::system("A2"), oracle::system("A3"), oracle::system("A4"), oracle::system("B2"),
      oracle::system("B3"), oracle::system("C3"), oracle::system("D4"), oracle::system("G2")};
  return p;
}

}  // namespace

TEST(Arith, WallachHodgeRiemannMatrix) {
  const auto x = wallach();
  for (long s1 = 1; s1 <= 7; ++s1)
    for (long s2 = 1; s2 <= 7; ++s2) {
      const auto hr = hodge_riemann_matrix(x, KahlerClass(x, WeightVector{s1, s2}));
      EXPECT_EQ(hr.entries, (std::vector<std::vector<Rational>>{{s2, s1 + s2}, {s1 + s2, s1}}));
      EXPECT_TRUE(hr.integral);
    }
  const KahlerClass w21(x, WeightVector{2, 1});
  const auto hr = hodge_riemann_matrix(x, w21);
  EXPECT_EQ(hr.entries, (std::vector<std::vector<Rational>>{{1, 3}, {3, 2}}));
  EXPECT_EQ(generator_degrees(x, w21), (std::vector<Rational>{5, 8}));
}

TEST(Arith, HodgeRiemannNeedsDimensionTwo) {
  const auto x = build_flag(build_root_system(Series::A, 1), {});
  EXPECT_EQ(code_of([&] { hodge_riemann_matrix(x, KahlerClass(x, WeightVector{1})); }), ErrorCode::DimensionTooSmall);
}

TEST(Arith, HodgeRiemannProperties) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 500; ++trial) {
    const auto x = oracle::random_flag(rng, pool());
    if (x.dimension() < 2) continue;
    const bool integral = trial % 2 == 0;
    const auto w = oracle::random_kahler(rng, x, integral);
    const auto hr = hodge_riemann_matrix(x, w);
    const auto degs = generator_degrees(x, w);
    const auto coords = x.restrict_to_generators(w.weight());
    const std::size_t rho = hr.generators.size();
    for (std::size_t a = 0; a < rho; ++a) {
      Rational q = 0;
      for (std::size_t b = 0; b < rho; ++b) {
        EXPECT_EQ(hr.entries[a][b], hr.entries[b][a]);
        q += hr.entries[a][b] * coords[b];
        if (integral) EXPECT_TRUE(is_integer(hr.entries[a][b]));
      }
      EXPECT_EQ(q, degs[a]);
      EXPECT_EQ(degs[a], degree(x, w, x.schubert_divisor(hr.generators[a])));
    }
    if (integral) EXPECT_TRUE(hr.integral);
  }
}

TEST(Arith, Tau) {
  const auto x = wallach();
  EXPECT_EQ(tau(x, KahlerClass(x, WeightVector{2, 2})), 12);
  EXPECT_EQ(tau(x, KahlerClass(x, WeightVector{2, 1})), 1);
  const auto p1 = build_flag(build_root_system(Series::A, 1), {});
  for (long t = 1; t <= 5; ++t) EXPECT_EQ(tau(p1, KahlerClass(p1, WeightVector{t})), 1);
  const auto p2 = build_flag(build_root_system(Series::A, 2), {1});
  EXPECT_EQ(tau(p2, KahlerClass(p2, WeightVector{2, 0})), 2);
  EXPECT_EQ(code_of([&] { tau(x, KahlerClass(x, WeightVector{ratio(1, 2), 1})); }), ErrorCode::NotIntegral);
}

TEST(Arith, TauDividesEveryLineBundleSlope) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = oracle::random_flag(rng, pool());
    const auto w = oracle::random_kahler(rng, x, true);
    const Integer t = tau(x, w);
    const auto mu = slope(x, w, SplitBundle::line(x, oracle::random_line(rng, x, 9)));
    ASSERT_TRUE(is_integer(mu));
    EXPECT_EQ(mu.get_num() % t, 0);
  }
}

TEST(Arith, SolveSlope) {
  const auto x = wallach();
  const KahlerClass w(x, WeightVector{2, 2});
  const auto s = solve_slope(x, w, 24);
  ASSERT_TRUE(s.solution);
  EXPECT_EQ((*s.solution)[0] + (*s.solution)[1], 2);
  const auto none = solve_slope(x, w, 5);
  EXPECT_FALSE(none.solution);
  EXPECT_EQ(none.tau, 12);
  const auto zero = solve_slope(x, w, 0);
  ASSERT_TRUE(zero.solution);
  EXPECT_TRUE(zero.solution->is_zero());
}

TEST(Arith, SolveSlopeSucceedsExactlyOnMultiplesOfTau) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = oracle::random_flag(rng, pool());
    const auto w = oracle::random_kahler(rng, x, true);
    const Integer t = tau(x, w);
    for (long m0 = -100; m0 <= 100; ++m0) {
      const auto s = solve_slope(x, w, m0);
      EXPECT_EQ(s.solution.has_value(), m0 % t == 0);
      if (s.solution) {
        EXPECT_TRUE(s.solution->is_integral());
        EXPECT_EQ(slope(x, w, SplitBundle::line(x, *s.solution)), m0);
      }
    }
  }
}

TEST(Arith, Pic0Examples) {
  const auto x = wallach();
  EXPECT_EQ(pic0_generators(x, KahlerClass(x, WeightVector{2, 2}), 0), (std::vector<WeightVector>{{-1, 1}}));
  EXPECT_EQ(pic0_generators(x, KahlerClass(x, WeightVector{2, 1}), 0), (std::vector<WeightVector>{{-8, 5}}));
  EXPECT_EQ(pic0_index(x, KahlerClass(x, WeightVector{2, 1}), 0), 1);
  const auto p2 = build_flag(build_root_system(Series::A, 2), {1});
  EXPECT_TRUE(pic0_generators(p2, KahlerClass(p2, WeightVector{2, 0}), 0).empty());
  EXPECT_EQ(code_of([&] { pic0_generators(p2, KahlerClass(p2, WeightVector{2, 0}), 1); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([&] { pic0_generators(x, KahlerClass(x, WeightVector{2, 2}), 5); }), ErrorCode::IndexOutOfRange);
}

TEST(Arith, Pic0Properties) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = oracle::random_flag(rng, pool());
    const auto w = oracle::random_kahler(rng, x, true);
    const auto gens = x.generators();
    const int gamma = gens[static_cast<std::size_t>(oracle::random_int(rng, 0, static_cast<long>(gens.size()) - 1))];
    const auto basis = pic0_generators(x, w, gamma);
    ASSERT_EQ(basis.size(), gens.size() - 1);
    const auto e = SplitBundle::line(x, oracle::random_line(rng, x, 6));
    const Rational mu = slope(x, w, e);
    for (const auto& xi : basis) {
      EXPECT_EQ(degree(x, w, InvariantClass(x, xi)), 0);
      EXPECT_EQ(slope(x, w, SplitBundle::line(x, e.summands()[0] + xi)), mu);
    }
    // {omega, xi_alpha} is a rational basis of H^2: nonzero determinant.
    std::vector<std::vector<Rational>> m;
    m.push_back(x.restrict_to_generators(w.weight()));
    for (const auto& xi : basis) m.push_back(x.restrict_to_generators(xi));
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && m[p][c] == 0) ++p;
      ASSERT_LT(p, n);
      if (p != c) {
        std::swap(m[p], m[c]);
        det = -det;
      }
      det *= m[c][c];
      for (std::size_t i = c + 1; i < n; ++i) {
        const Rational f = m[i][c] / m[c][c];
        for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
      }
    }
    EXPECT_NE(det, 0);

    // The index of the span in the slope-zero lattice is q_gamma^(rho - 2).
    const auto degs = generator_degrees(x, w);
    const Integer t = tau(x, w);
    std::size_t slot = 0;
    while (gens[slot] != gamma) ++slot;
    Integer expect = 1;
    const Integer q_gamma = degs[slot].get_num() / t;
    for (std::size_t k = 2; k < gens.size(); ++k) expect *= q_gamma;
    EXPECT_EQ(pic0_index(x, w, gamma), expect);
  }
}

TEST(Arith, Density) {
  const auto x = wallach();
  const KahlerClass w(x, WeightVector{2, 2});
  const auto d = density(x, w, 120);
  EXPECT_EQ(d.count, 10);
  EXPECT_EQ(d.limit, ratio(1, 12));
  EXPECT_EQ(d.bound, ratio(1, 10));
  EXPECT_TRUE(d.bound_holds);
  const KahlerClass w1(x, WeightVector{2, 1});
  for (long n : {10L, 100L, 1000L}) {
    for (const auto* k : {&w, &w1}) {
      const auto r = density(x, *k, n);
      const Rational gap = r.limit - ratio(r.count, n);
      EXPECT_GE(gap, 0);
      EXPECT_LT(gap, r.bound);
      EXPECT_TRUE(r.bound_holds);
    }
    EXPECT_EQ(density(x, w1, n).count, n);
    EXPECT_EQ(density(x, w1, n).limit, 1);
  }
  EXPECT_EQ(code_of([&] { density(x, w, 0); }), ErrorCode::InvalidArgument);
}

TEST(Arith, NefSolve) {
  const auto x = wallach();
  const KahlerClass w(x, WeightVector{2, 1});
  const auto s = nef_solve(x, w, 32, 0);
  ASSERT_TRUE(s.guarantee_bound);
  EXPECT_EQ(*s.guarantee_bound, 32);
  EXPECT_TRUE(s.guaranteed);
  ASSERT_TRUE(s.solution);
  EXPECT_GE((*s.solution)[0], 0);
  EXPECT_GE((*s.solution)[1], 0);
  EXPECT_EQ(slope(x, w, SplitBundle::line(x, *s.solution)), 32);
  const auto zero = nef_solve(x, w, 0, 0);
  ASSERT_TRUE(zero.solution);
  EXPECT_TRUE(zero.solution->is_zero());
  const auto two = nef_solve(x, w, 2, 0);
  EXPECT_FALSE(two.solution);
  EXPECT_FALSE(two.guaranteed);
  EXPECT_FALSE(nef_solve(x, w, -5, 0).solution);
  EXPECT_FALSE(nef_solve(x, KahlerClass(x, WeightVector{2, 2}), 48, 0).guarantee_bound);
}

TEST(Arith, NefSolveAgreesWithBruteForceAndGuarantee) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = oracle::random_flag(rng, pool());
    if (x.picard_number() != 2) continue;
    const auto w = oracle::random_kahler(rng, x, true);
    const auto degs = generator_degrees(x, w);
    const Integer d0 = degs[0].get_num();
    const Integer d1 = degs[1].get_num();
    for (long m0 = 0; m0 <= 150; ++m0) {
      bool exists = false;
      for (Integer a = 0; a * d0 <= m0 && !exists; ++a) exists = (m0 - a * d0) % d1 == 0;
      const auto s = nef_solve(x, w, m0, x.generators()[0]);
      EXPECT_EQ(s.solution.has_value(), exists);
      if (s.guaranteed) EXPECT_TRUE(exists);
      if (s.solution) EXPECT_EQ(slope(x, w, SplitBundle::line(x, *s.solution)), m0);
    }
  }
}

TEST(Arith, K0Reports) {
  const auto x = wallach();
  const auto a = k0_report(x, KahlerClass(x, WeightVector{2, 2}), 0);
  EXPECT_EQ(a.tau, 12);
  EXPECT_EQ(a.pic0_basis, (std::vector<WeightVector>{{-1, 1}}));
  EXPECT_EQ(a.statement, "K0 = SK0 ⊕ <O_1(-1)⊗O_2(1)> ⊕ 12Z");
  const auto b = k0_report(x, KahlerClass(x, WeightVector{2, 1}), 0);
  EXPECT_EQ(b.tau, 1);
  EXPECT_EQ(b.pic0_basis, (std::vector<WeightVector>{{-8, 5}}));
  EXPECT_EQ(b.statement, "K0 = SK0 ⊕ <O_1(-8)⊗O_2(5)> ⊕ Z");
  const auto p2 = build_flag(build_root_system(Series::A, 2), {1});
  const auto c = k0_report(p2, KahlerClass(p2, WeightVector{2, 0}), 0);
  EXPECT_EQ(c.tau, 2);
  EXPECT_TRUE(c.pic0_basis.empty());
  EXPECT_EQ(c.statement, "K0 = SK0 ⊕ 0 ⊕ 2Z");
}
