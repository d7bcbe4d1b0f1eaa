#include <gtest/gtest.h>

#include "staircase/staircase.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace staircase;

namespace {

std::vector<std::vector<Coord>> vecs(const DeltaChain& c) {
  std::vector<std::vector<Coord>> out;
  for (const auto& d : c.directions()) out.emplace_back(d.coords().begin(), d.coords().end());
  return out;
}

}  // namespace

TEST(BuiltinChain, Examples) {
  EXPECT_EQ(vecs(builtin_chain(4, 2)), (std::vector<std::vector<Coord>>{{1, -3}, {-2, 1}}));
  EXPECT_EQ(vecs(builtin_chain(3, 3)),
            (std::vector<std::vector<Coord>>{{1, -2, 0}, {-3, 0, 1}, {0, 1, -2}}));
  EXPECT_THROW(builtin_chain(2, 3), UnsupportedCase);
  EXPECT_THROW(builtin_chain(2, 2), UnsupportedCase);
  EXPECT_THROW(builtin_chain(3, 2), UnsupportedCase);
  EXPECT_EQ(builtin_chain(2, 4).size(), 4u);
  EXPECT_EQ(builtin_chain(5, 4).provenance(), Provenance::builtin_remark);
}

TEST(InductionChain, Examples) {
  EXPECT_EQ(vecs(induction_chain(4, 3)),
            (std::vector<std::vector<Coord>>{{0, 1, -3}, {0, -2, 1}, {1, -1, -1}}));
  const auto c34 = vecs(induction_chain(3, 4));
  ASSERT_EQ(c34.size(), 4u);
  EXPECT_EQ(c34.back(), (std::vector<Coord>{1, -1, -1, 0}));
  const auto c25 = vecs(induction_chain(2, 5));
  ASSERT_EQ(c25.size(), 5u);
  EXPECT_EQ(c25.back(), (std::vector<Coord>{1, -1, -1, 0, 0}));
  EXPECT_THROW(induction_chain(4, 2), UnsupportedCase);
  EXPECT_THROW(induction_chain(2, 3), UnsupportedCase);
}

TEST(DeltaChain, RejectsWeakDirections) {
  EXPECT_THROW(DeltaChain(2, {Direction{2, -1}}, Provenance::search), InvalidDirection);
  EXPECT_THROW(DeltaChain(3, {Direction{1, -1}}, Provenance::search), DimensionMismatch);
}

TEST(ApplyChain, Examples) {
  const auto r3 = regular_staircase(2, 3);
  EXPECT_EQ(apply_chain(DeltaChain(2, {}, Provenance::search), r3), r3);
  for (Coord mu = 1; mu <= 5; ++mu) {
    EXPECT_EQ(apply_chain(DeltaChain(2, {Direction{1, -1}}, Provenance::search), regular_staircase(2, mu)),
              regular_staircase(2, mu));
  }
  const auto img = apply_chain(builtin_chain(3, 3), dilate(3, regular_staircase(3, 1)));
  EXPECT_EQ(img.size(), 27u);
  EXPECT_TRUE(contains(img, regular_staircase(3, 4)));
}

TEST(VerifyKeyLemma, Examples) {
  EXPECT_TRUE(verify_key_lemma(4, 2, 1).pass);
  EXPECT_TRUE(verify_key_lemma(2, 4, 1).pass);

  const auto r = verify_key_lemma(3, 3, 2);
  EXPECT_TRUE(r.pass);
  // Before the chain, 3.R_2 misses (mu+1)(mu+2)/2 = 6 points of R_7.
  const auto before = set_difference(regular_staircase(3, 7).points(),
                                     dilate(3, regular_staircase(3, 2)).points());
  EXPECT_EQ(before.size(), 6u);

  EXPECT_THROW(verify_key_lemma(2, 2, 1), UnsupportedCase);
  EXPECT_THROW(verify_key_lemma(4, 2, 0), BadHypotheses);

  const auto j = r.to_json();
  EXPECT_EQ(j["claim"], "key-lemma");
  EXPECT_EQ(j["provenance"], "builtin-remark");
  EXPECT_TRUE(j["missing"].empty());
}

TEST(VerifyKeyLemma, GridWithBothChains) {
  for (Coord s = 2; s <= 5; ++s) {
    for (std::size_t d = 2; d <= 5; ++d) {
      if (!key_lemma_admissible(s, d)) continue;
      for (Coord mu = 1; mu <= 3; ++mu) {
        const auto r = verify_key_lemma(s, d, mu);
        ASSERT_TRUE(r.pass) << s << "," << d << "," << mu;
        // Image is s^d copies of R_mu, and it is a staircase.
        std::size_t sd = 1;
        for (std::size_t i = 0; i < d; ++i) sd *= static_cast<std::size_t>(s);
        ASSERT_EQ(r.image.size(), sd * oracle::binom(mu - 1 + static_cast<Coord>(d), static_cast<Coord>(d)));
        ASSERT_TRUE(oracle::downward_closed(oracle::to_set(r.image)));
        // Pointwise inclusion, independently.
        for (const auto& p : oracle::regular(d, s * mu + 1)) ASSERT_TRUE(r.image.has(p));
        if (!is_initial_case(s, d)) {
          ASSERT_TRUE(check_chain(induction_chain(s, d), s, mu).pass) << s << "," << d << "," << mu;
        }
      }
    }
  }
}

TEST(FillHole, Examples) {
  // mu' = s*mu + 1 with s = 2, mu = 2, d = 3.
  const Coord s = 2, mu = 2, d = 3;
  const Coord big = s * mu + 1;
  const LatticePoint m{s * mu, 0, 0};
  const LatticePoint z{s * mu - 1, 1, 1};
  const Direction dir{1, -1, -1};
  EXPECT_EQ(z, shifted(m, dir, -1));
  EXPECT_TRUE(check_fill_hole(big, PointSet(d, {z}), m, dir));

  EXPECT_FALSE(check_fill_hole(big, PointSet(d, {{0, 0, 9}}), m, dir));

  EXPECT_FALSE(check_fill_hole(2, PointSet(2, {{0, 2}}), LatticePoint{1, 0}, Direction{1, -1}));

  EXPECT_THROW(check_fill_hole(2, PointSet(2, {{0, 1}}), LatticePoint{1, 0}, Direction{1, -1}),
               BadHypotheses);
  EXPECT_THROW(check_fill_hole(2, PointSet(2, {{0, 2}}), LatticePoint{2, 0}, Direction{1, -1}),
               BadHypotheses);
  EXPECT_THROW(check_fill_hole(2, PointSet(2, {{0, 2}}), LatticePoint{1, 0}, Direction{2, -1}),
               BadHypotheses);
}

TEST(FillHoleProperty, ConclusionWheneverHypothesisHolds) {
  int hits = 0;
  EXPECT_EQ(props::fill_hole(707, 1200, &hits), "");
  EXPECT_GE(hits, 300);
}

TEST(SearchChain, Examples) {
  const auto c = search_chain(4, 2, 2, 4, 2);
  EXPECT_EQ(c.provenance(), Provenance::search);
  EXPECT_LE(c.size(), 2u);
  for (Coord mu = 1; mu <= 2; ++mu) EXPECT_TRUE(check_chain(c, 4, mu).pass);
  EXPECT_TRUE(check_chain(builtin_chain(4, 2), 4, 2).pass);

  EXPECT_THROW(search_chain(2, 2, 1, 3, 3), NotFound);
  EXPECT_THROW(search_chain(4, 2, 1, 4, 0), NotFound);
  EXPECT_THROW(search_chain(4, 2, 0, 4, 2), BadHypotheses);
  // Deterministic.
  EXPECT_EQ(vecs(search_chain(4, 2, 2, 4, 2)), vecs(c));
}

TEST(StrongDirections, OrderedAndValid) {
  const auto ds = strong_directions(3, 2);
  ASSERT_FALSE(ds.empty());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    EXPECT_TRUE(ds[i].is_strong());
    if (i) {
      EXPECT_LE(ds[i - 1].max_abs(), ds[i].max_abs());
    }
  }
}
