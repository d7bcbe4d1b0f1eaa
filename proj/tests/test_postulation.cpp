#include <gtest/gtest.h>

#include "staircase/staircase.hpp"
#include "support/oracles.hpp"

using namespace staircase;

namespace {

std::int64_t ib(std::int64_t n, std::int64_t k) { return static_cast<std::int64_t>(oracle::binom(n, k)); }

// Condition matrix built from mixed partial derivatives,
// d^a x^b at q = prod b_i!/(b_i-a_i)! q_i^(b_i-a_i), reduced mod p.
std::size_t derivative_rank(const ConditionSystem& sys, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> m;
  const auto monos = oracle::regular(sys.dim, sys.degree + 1);
  for (std::size_t c = 0; c < sys.staircases.size(); ++c) {
    for (const auto& a : sys.staircases[c]) {
      std::vector<std::uint64_t> row;
      for (const auto& b : monos) {
        std::uint64_t v = 1;
        for (std::size_t i = 0; i < sys.dim; ++i) {
          if (b[i] < a[i]) {
            v = 0;
            break;
          }
          for (Coord t = b[i]; t > b[i] - a[i]; --t) v = v * static_cast<std::uint64_t>(t) % p;
          for (Coord t = 0; t < b[i] - a[i]; ++t) v = v * (sys.points[c][i] % p) % p;
        }
        row.push_back(v);
      }
      m.push_back(std::move(row));
    }
  }
  return oracle::rank_mod(std::move(m), p);
}

}  // namespace

TEST(Counting, VirtualDimension) {
  EXPECT_EQ(virtual_dimension(2, 4, 1, 16), -1);
  EXPECT_EQ(virtual_dimension(3, 4, 2, 8), 3);
  EXPECT_EQ(virtual_dimension(3, 5, std::span<const Staircase>{}), ib(8, 3));
  const std::vector<Staircase> conds{regular_staircase(2, 2), regular_staircase(2, 1)};
  EXPECT_EQ(virtual_dimension(2, 3, conds), 10 - 4);
  const std::vector<Coord> mults{2, 1};
  EXPECT_EQ(virtual_dimension(2, 3, mults), 10 - 4);
}

TEST(Counting, MonomialPostulation) {
  for (Coord mu = 1; mu <= 5; ++mu)
    for (Coord delta = 0; delta < mu; ++delta) EXPECT_EQ(monomial_postulation(3, delta, regular_staircase(3, mu)), 0);
  const auto e = delta_specialize(Direction{1, -1, -1}, dilate(2, regular_staircase(3, 2)));
  EXPECT_EQ(e.size(), 32u);
  EXPECT_EQ(monomial_postulation(3, 4, e), 3);
  EXPECT_EQ(monomial_postulation(3, 4, Staircase::empty_in(3)), ib(7, 3));
}

TEST(Oracle, Examples) {
  const auto r = oracle_fat_points(2, 4, 1, 16, kDefaultSeed);
  EXPECT_EQ(r.ell, 0);
  EXPECT_EQ(r.rank, 15);
  EXPECT_EQ(r.ambient, 15);
  EXPECT_EQ(r.virtual_dim, -1);
  EXPECT_EQ(r.modulus, kMersenne61);

  EXPECT_EQ(oracle_fat_points(3, 4, 2, 8, 5).ell, 3);

  for (std::size_t d = 2; d <= 3; ++d) {
    for (Coord mu = 1; mu <= 3; ++mu) {
      for (Coord delta = mu - 1; delta <= 5; ++delta) {
        const auto one = oracle_fat_points(d, delta, mu, 1, 17);
        EXPECT_EQ(one.ell, ib(delta + static_cast<Coord>(d), static_cast<Coord>(d)) -
                               ib(mu - 1 + static_cast<Coord>(d), static_cast<Coord>(d)));
        EXPECT_EQ(one.ell, monomial_postulation(d, delta, regular_staircase(d, mu)));
      }
    }
  }
}

TEST(Oracle, Errors) {
  OracleOptions small;
  small.modulus = 3;
  EXPECT_THROW(oracle_fat_points(2, 4, 1, 2, 1, small), FieldTooSmall);
  OracleOptions composite;
  composite.modulus = 1000001;  // 101 * 9901
  EXPECT_THROW(oracle_fat_points(2, 4, 1, 2, 1, composite), FieldTooSmall);

  ConditionSystem sys;
  sys.dim = 2;
  sys.degree = 2;
  sys.staircases = {regular_staircase(2, 1), regular_staircase(2, 1)};
  sys.points = {{1, 2}, {1, 2}};
  EXPECT_THROW(oracle_dimension(sys), DuplicatePoints);

  OracleOptions tiny;
  tiny.max_entries = 100;
  EXPECT_THROW(oracle_fat_points(2, 8, 2, 10, 1, tiny), MatrixTooLarge);
}

TEST(Oracle, DeterministicForFixedSeed) {
  const auto a = oracle_fat_points(3, 5, 2, 8, 42);
  const auto b = oracle_fat_points(3, 5, 2, 8, 42);
  EXPECT_EQ(a, b);
  const auto s1 = random_system(3, 5, std::vector<Staircase>(4, regular_staircase(3, 1)), 42);
  const auto s2 = random_system(3, 5, std::vector<Staircase>(4, regular_staircase(3, 1)), 42);
  EXPECT_EQ(s1.points, s2.points);
}

TEST(Oracle, ExactModeAgrees) {
  OracleOptions ex;
  ex.exact = true;
  for (Coord mu = 1; mu <= 2; ++mu) {
    for (Coord delta = 0; delta <= 2 * mu + 2; ++delta) {
      const auto q = oracle_fat_points(3, delta, mu, 8, 3, ex);
      EXPECT_EQ(q.modulus, 0u);
      EXPECT_EQ(q.ell, std::max<std::int64_t>(0, virtual_dimension(3, delta, mu, 8)));
    }
  }
}

TEST(OracleProperty, MatchesDerivativeMatrixAndIsMonotone) {
  oracle::Rng rng(1111);
  const std::uint64_t p = 1000003;
  OracleOptions opt;
  opt.modulus = p;
  for (int c = 0; c < 1000; ++c) {
    const auto d = static_cast<std::size_t>(rng.uniform(1, 3));
    const Coord delta = rng.uniform(0, 6);
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    std::vector<Staircase> conds;
    for (std::size_t k = 0; k < n; ++k) {
      conds.push_back(oracle::as_staircase(d, oracle::random_staircase(rng, d, 3, 2)));
    }
    // Small coordinates so that special positions occur.
    ConditionSystem sys;
    sys.dim = d;
    sys.degree = delta;
    sys.staircases = conds;
    sys.modulus = p;
    std::set<std::vector<std::uint64_t>> seen;
    while (sys.points.size() < n) {
      std::vector<std::uint64_t> q(d);
      for (auto& x : q) x = static_cast<std::uint64_t>(rng.uniform(0, 4));
      if (seen.insert(q).second) sys.points.push_back(q);
    }
    const auto res = oracle_dimension(sys, opt);
    ASSERT_EQ(static_cast<std::size_t>(res.rank), derivative_rank(sys, p));
    ASSERT_EQ(res.ell, res.ambient - res.rank);
    ASSERT_GE(res.ell, std::max<std::int64_t>(0, res.virtual_dim));

    auto next = sys;
    next.degree = delta + 1;
    ASSERT_GE(oracle_dimension(next, opt).ell, res.ell);
  }
}

TEST(Vanishing, Examples) {
  const auto a = verify_vanishing_theorem(4, 2, 2, 8);
  EXPECT_TRUE(a.passed());
  EXPECT_EQ(a.fields["ell"], 0);
  EXPECT_EQ(a.fields["oracle_ell"], 0);
  EXPECT_EQ(a.fields["r"], 16);

  const auto b = verify_vanishing_theorem(3, 3, 1, 3);
  EXPECT_TRUE(b.passed());
  EXPECT_EQ(b.witnesses.back().second.size(), 27u);

  EXPECT_THROW(verify_vanishing_theorem(2, 2, 1, 2), UnsupportedCase);
  EXPECT_THROW(verify_vanishing_theorem(3, 2, 1, 3), UnsupportedCase);
  EXPECT_THROW(verify_vanishing_theorem(2, 3, 1, 2), UnsupportedCase);
  EXPECT_THROW(verify_vanishing_theorem(4, 2, 1, 5), BadHypotheses);

  VerifyOptions quiet;
  quiet.run_oracle = false;
  const auto j = verify_vanishing_theorem(4, 3, 1, 4, quiet).to_json();
  EXPECT_FALSE(j.contains("oracle_ell"));
  EXPECT_EQ(j["claim"], "vanishing");
  EXPECT_EQ(j["pass"], true);
}

TEST(Strict, Examples) {
  EXPECT_TRUE(verify_strict_theorem(2, 2, 3, 5).passed());
  EXPECT_TRUE(verify_strict_theorem(2, 3, 2, 3).passed());
  for (Coord mu = 1; mu <= 4; ++mu) {
    for (Coord delta = 0; delta <= mu + 2; ++delta) {
      EXPECT_EQ(verify_strict_theorem(1, 3, mu, delta).passed(), delta < mu);
    }
  }
  EXPECT_FALSE(verify_strict_theorem(1, 2, 2, 2).note.empty());
}

TEST(EightPoints, Examples) {
  const auto a = verify_eight_points(1, 1);
  EXPECT_TRUE(a.passed());
  EXPECT_EQ(a.fields["ell"], 0);
  EXPECT_EQ(a.fields["v"], -4);

  const auto b = verify_eight_points(2, 4);
  EXPECT_TRUE(b.passed());
  EXPECT_EQ(b.fields["ell"], 3);
  EXPECT_EQ(b.fields["oracle_ell"], 3);

  const auto c = verify_eight_points(2, 3);
  EXPECT_TRUE(c.passed());
  EXPECT_EQ(c.fields["ell"], 0);
  EXPECT_EQ(c.fields["sandwich"], true);

  const auto j = b.to_json();
  for (const char* key : {"claim", "route", "d", "delta", "mult", "ell", "v", "rank", "modulus", "seed", "pass"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}
