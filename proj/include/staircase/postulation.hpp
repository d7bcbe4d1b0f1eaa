#pragma once

// Dimension counts for hypersurfaces through monomial subschemes, the
// random-point rank oracle, and the end-to-end vanishing verifiers.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "staircase/collision.hpp"
#include "staircase/errors.hpp"
#include "staircase/exact.hpp"
#include "staircase/lattice.hpp"
#include "staircase/ops.hpp"
#include "staircase/prime_field.hpp"
#include "staircase/report.hpp"

namespace staircase {

inline constexpr std::uint64_t kDefaultSeed = 20030101;

inline std::int64_t binom_i64(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// binom(delta+d, d): affine polynomials of degree <= delta in d variables.
inline std::int64_t ambient_dimension(std::size_t d, Coord delta) {
  return binom_i64(delta + static_cast<std::int64_t>(d), static_cast<std::int64_t>(d));
}

inline std::int64_t virtual_dimension(std::size_t d, Coord delta,
                                      std::span<const Staircase> conditions) {
  std::int64_t v = ambient_dimension(d, delta);
  for (const auto& e : conditions) v -= static_cast<std::int64_t>(e.size());
  return v;
}

// Fat points of the given multiplicities; |R_mu| = binom(mu-1+d, d).
inline std::int64_t virtual_dimension(std::size_t d, Coord delta,
                                      std::span<const Coord> multiplicities) {
  std::int64_t v = ambient_dimension(d, delta);
  for (Coord mu : multiplicities) {
    v -= binom_i64(mu - 1 + static_cast<std::int64_t>(d), static_cast<std::int64_t>(d));
  }
  return v;
}

inline std::int64_t virtual_dimension(std::size_t d, Coord delta, Coord mu, std::int64_t r) {
  return ambient_dimension(d, delta) -
         r * binom_i64(mu - 1 + static_cast<std::int64_t>(d), static_cast<std::int64_t>(d));
}

// #(R_{delta+1} - E): the dimension of I^E in degree <= delta.
inline std::int64_t monomial_postulation(std::size_t d, Coord delta, const Staircase& e) {
  require_same_dim(d, e.dim(), "monomial_postulation");
  const Staircase reg = regular_staircase(d, delta + 1);
  return static_cast<std::int64_t>(set_difference(reg.points(), e.points()).size());
}

// Staircase conditions at points of F_p^d (affine chart).
struct ConditionSystem {
  std::size_t dim = 0;
  Coord degree = 0;
  std::vector<Staircase> staircases;
  std::vector<std::vector<std::uint64_t>> points;
  std::uint64_t modulus = kMersenne61;
  std::uint64_t seed = 0;
};

struct PostulationResult {
  std::int64_t ell = 0;
  std::int64_t rank = 0;
  std::int64_t ambient = 0;
  std::int64_t virtual_dim = 0;
  std::string route;
  std::uint64_t seed = 0;
  std::uint64_t modulus = 0;  // 0 for exact rational rank

  friend bool operator==(const PostulationResult&, const PostulationResult&) = default;
};

struct OracleOptions {
  std::uint64_t modulus = kMersenne61;
  std::size_t max_entries = 50000;
  bool exact = false;  // rank over Q at random integer points
};

namespace detail {

inline void check_system(const ConditionSystem& sys) {
  if (sys.degree < 0) throw BadHypotheses("degree must be >= 0");
  if (sys.points.size() != sys.staircases.size()) {
    throw BadHypotheses("one point per staircase condition is required");
  }
  for (const auto& e : sys.staircases) require_same_dim(sys.dim, e.dim(), "ConditionSystem");
  for (const auto& q : sys.points) {
    if (q.size() != sys.dim) throw DimensionMismatch("ConditionSystem: point of wrong length");
  }
  std::set<std::vector<std::uint64_t>> seen(sys.points.begin(), sys.points.end());
  if (seen.size() != sys.points.size()) throw DuplicatePoints("condition points repeat");
}

inline std::size_t condition_rows(const ConditionSystem& sys) {
  std::size_t rows = 0;
  for (const auto& e : sys.staircases) rows += e.size();
  return rows;
}

inline void check_size(std::size_t rows, std::size_t cols, const OracleOptions& opt) {
  if (rows * cols > opt.max_entries) {
    throw MatrixTooLarge(std::to_string(rows) + " x " + std::to_string(cols) +
                         " condition matrix exceeds " + std::to_string(opt.max_entries) +
                         " entries");
  }
}

inline BigInt bareiss_rank_entries(std::vector<std::vector<BigInt>> m, std::size_t& rank) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  BigInt prev = 1;
  rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[rank][c] * m[i][j] - m[i][c] * m[rank][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return prev;
}

}  // namespace detail

// Rows: for each condition (E, q) and each a in E, the coefficient of x^a in
// F(x + q), i.e. sum_b c_b prod_i binom(b_i, a_i) q_i^(b_i - a_i).
// Columns: monomials x^b with |b| <= degree.
inline PostulationResult oracle_dimension(const ConditionSystem& sys,
                                          const OracleOptions& opt = {}) {
  detail::check_system(sys);
  const Staircase cols = regular_staircase(sys.dim, sys.degree + 1);
  const std::size_t rows = detail::condition_rows(sys);
  detail::check_size(rows, cols.size(), opt);

  PostulationResult res;
  res.ambient = static_cast<std::int64_t>(cols.size());
  res.virtual_dim = virtual_dimension(sys.dim, sys.degree, sys.staircases);
  res.seed = sys.seed;
  res.route = "oracle";
  res.modulus = opt.exact ? 0 : sys.modulus;

  if (opt.exact) {
    std::vector<std::vector<BigInt>> m;
    for (std::size_t c = 0; c < sys.staircases.size(); ++c) {
      const auto& q = sys.points[c];
      for (const auto& a : sys.staircases[c]) {
        std::vector<BigInt> row;
        row.reserve(cols.size());
        for (const auto& b : cols) {
          BigInt v = 1;
          for (std::size_t i = 0; i < sys.dim && v != 0; ++i) {
            v *= binomial(b[i], a[i]);
            if (b[i] >= a[i]) v *= boost::multiprecision::pow(BigInt(q[i]), static_cast<unsigned>(b[i] - a[i]));
          }
          row.push_back(std::move(v));
        }
        m.push_back(std::move(row));
      }
    }
    std::size_t rank = 0;
    detail::bareiss_rank_entries(std::move(m), rank);
    res.rank = static_cast<std::int64_t>(rank);
  } else {
    const std::uint64_t p = sys.modulus;
    if (p <= static_cast<std::uint64_t>(sys.degree)) {
      throw FieldTooSmall("modulus " + std::to_string(p) + " must exceed the degree " +
                          std::to_string(sys.degree));
    }
    if (!is_prime_u64(p)) throw FieldTooSmall("modulus " + std::to_string(p) + " is not prime");
    const PrimeField f(p);
    const auto deg = static_cast<std::size_t>(sys.degree);
    std::vector<std::vector<std::uint64_t>> binom(deg + 1, std::vector<std::uint64_t>(deg + 1, 0));
    for (std::size_t n = 0; n <= deg; ++n) {
      binom[n][0] = 1 % p;
      for (std::size_t k = 1; k <= n; ++k) binom[n][k] = f.add(binom[n - 1][k - 1], k < n ? binom[n - 1][k] : 0);
    }
    MatrixModP m;
    m.reserve(rows);
    for (std::size_t c = 0; c < sys.staircases.size(); ++c) {
      std::vector<std::vector<std::uint64_t>> powers(sys.dim, std::vector<std::uint64_t>(deg + 1));
      for (std::size_t i = 0; i < sys.dim; ++i) {
        powers[i][0] = 1 % p;
        for (std::size_t e = 1; e <= deg; ++e) powers[i][e] = f.mul(powers[i][e - 1], f.reduce(sys.points[c][i]));
      }
      for (const auto& a : sys.staircases[c]) {
        std::vector<std::uint64_t> row(cols.size(), 0);
        std::size_t j = 0;
        for (const auto& b : cols) {
          std::uint64_t v = 1 % p;
          for (std::size_t i = 0; i < sys.dim && v != 0; ++i) {
            if (b[i] < a[i]) {
              v = 0;
            } else {
              v = f.mul(v, f.mul(binom[b[i]][a[i]], powers[i][b[i] - a[i]]));
            }
          }
          row[j++] = v;
        }
        m.push_back(std::move(row));
      }
    }
    res.rank = static_cast<std::int64_t>(rank_mod_p(std::move(m), f));
  }
  res.ell = res.ambient - res.rank;
  return res;
}

// Draws distinct uniform points (in F_p^d, or in [0, 2^20)^d for exact mode)
// from a generator seeded with `seed`.
inline ConditionSystem random_system(std::size_t d, Coord degree, std::vector<Staircase> staircases,
                                     std::uint64_t seed, const OracleOptions& opt = {}) {
  ConditionSystem sys;
  sys.dim = d;
  sys.degree = degree;
  sys.staircases = std::move(staircases);
  sys.modulus = opt.modulus;
  sys.seed = seed;
  std::mt19937_64 rng(seed);
  const std::uint64_t bound = opt.exact ? (std::uint64_t{1} << 20) : opt.modulus;
  std::set<std::vector<std::uint64_t>> seen;
  while (sys.points.size() < sys.staircases.size()) {
    std::vector<std::uint64_t> q(d);
    for (auto& x : q) x = uniform_below(rng, bound);
    if (seen.insert(q).second) sys.points.push_back(std::move(q));
  }
  return sys;
}

// l(d, delta, mu^r) at random points.
inline PostulationResult oracle_fat_points(std::size_t d, Coord delta, Coord mu, std::size_t r,
                                           std::uint64_t seed, const OracleOptions& opt = {}) {
  std::vector<Staircase> conds(r, regular_staircase(d, mu));
  return oracle_dimension(random_system(d, delta, std::move(conds), seed, opt), opt);
}

struct VerifyOptions {
  bool run_oracle = true;
  std::uint64_t seed = kDefaultSeed;
  OracleOptions oracle;
};

namespace detail {

inline std::int64_t ipow(std::int64_t b, std::size_t e) {
  std::int64_t r = 1;
  while (e--) r *= b;
  return r;
}

inline void put_oracle(nlohmann::ordered_json& f, const PostulationResult& o) {
  f["oracle_ell"] = o.ell;
  f["rank"] = o.rank;
  f["modulus"] = o.modulus;
  f["seed"] = o.seed;
}

}  // namespace detail

// Large inequality: l(d, delta, mu^(s^d)) = 0 for delta <= s*mu, via
// s^d R_mu -> s.R_mu -> chain image F with F ⊇ R_{delta+1}.
inline VerificationReport verify_vanishing_theorem(Coord s, std::size_t d, Coord mu, Coord delta,
                                                   const VerifyOptions& opt = {}) {
  detail::require_admissible(s, d);
  if (mu < 1) throw BadHypotheses("mu must be >= 1");
  if (delta < 0 || delta > s * mu) throw BadHypotheses("need 0 <= delta <= s*mu");

  const Staircase start = dilate(s, regular_staircase(d, mu));
  const ChainReport chain = verify_key_lemma(s, d, mu);
  const Staircase& f = chain.image;
  const Staircase target = regular_staircase(d, delta + 1);
  const bool chain_ok = contains(f, target);
  const std::int64_t r = detail::ipow(s, d);

  VerificationReport rep;
  rep.claim = "vanishing";
  rep.route = "chain";
  auto& fl = rep.fields;
  fl["s"] = s;
  fl["d"] = d;
  fl["mu"] = mu;
  fl["delta"] = delta;
  fl["mult"] = mu;
  fl["r"] = r;
  fl["ell"] = monomial_postulation(d, delta, f);
  fl["v"] = virtual_dimension(d, delta, mu, r);
  fl["provenance"] = to_string(chain.chain.provenance());
  fl["chain"] = chain.chain.to_json();
  if (delta < s * mu) {
    fl["strict_route"] = contains(start, target);
  } else {
    fl["strict_route"] = nullptr;
  }
  rep.witnesses.emplace_back("s.R_mu", start);
  rep.witnesses.emplace_back("F", f);
  rep.status = chain_ok ? Status::pass : Status::fail;

  if (opt.run_oracle) {
    try {
      const auto o = oracle_fat_points(d, delta, mu, static_cast<std::size_t>(r), opt.seed, opt.oracle);
      detail::put_oracle(fl, o);
      if (o.ell != 0) {
        rep.note = "oracle found ell=" + std::to_string(o.ell) +
                   (o.modulus ? " over F_p (characteristic-p phenomenon or special points)"
                              : " over Q at random integer points");
      }
    } catch (const MatrixTooLarge&) {
      fl["oracle_ell"] = nullptr;
    }
  }
  return rep;
}

// Strict inequality: s.R_mu ⊇ R_{delta+1}, no chain involved.
inline VerificationReport verify_strict_theorem(Coord s, std::size_t d, Coord mu, Coord delta) {
  if (s < 1 || d < 1 || mu < 0 || delta < 0) throw BadHypotheses("need s >= 1, d >= 1, mu, delta >= 0");
  const Staircase dil = dilate(s, regular_staircase(d, mu));
  const bool ok = contains(dil, regular_staircase(d, delta + 1));
  const std::int64_t r = detail::ipow(s, d);
  VerificationReport rep;
  rep.claim = "strict";
  rep.route = "dilation";
  auto& fl = rep.fields;
  fl["s"] = s;
  fl["d"] = d;
  fl["mu"] = mu;
  fl["delta"] = delta;
  fl["mult"] = mu;
  fl["r"] = r;
  fl["ell"] = monomial_postulation(d, delta, dil);
  fl["v"] = virtual_dimension(d, delta, mu, r);
  rep.witnesses.emplace_back("s.R_mu", dil);
  rep.status = ok ? Status::pass : Status::fail;
  if (delta >= s * mu) rep.note = "delta >= s*mu: outside the strict range";
  return rep;
}

// Eight fat points in P^3: l(3, delta, mu^8) = max(0, v) via the witness
// E = Delta(2.R_mu) with Delta = (1,-1,-1), plus the rank oracle.
inline VerificationReport verify_eight_points(Coord mu, Coord delta, const VerifyOptions& opt = {}) {
  if (mu < 1 || delta < 0) throw BadHypotheses("need mu >= 1 and delta >= 0");
  constexpr std::size_t d = 3;
  const Direction dir{1, -1, -1};
  const Staircase e = delta_specialize(dir, dilate(2, regular_staircase(d, mu)));
  const bool sandwich = contains(e, regular_staircase(d, 2 * mu)) &&
                        contains(regular_staircase(d, 2 * mu + 1), e);
  const std::int64_t v = virtual_dimension(d, delta, mu, 8);
  const std::int64_t expected = std::max<std::int64_t>(0, v);
  const std::int64_t count = monomial_postulation(d, delta, e);

  VerificationReport rep;
  rep.claim = "eight-points";
  rep.route = "monomial-count";
  auto& fl = rep.fields;
  fl["d"] = d;
  fl["delta"] = delta;
  fl["mult"] = mu;
  fl["r"] = 8;
  fl["ell"] = count;
  fl["v"] = v;
  fl["sandwich"] = sandwich;
  rep.witnesses.emplace_back("E", e);
  rep.status = (sandwich && count == expected) ? Status::pass : Status::fail;

  if (opt.run_oracle) {
    rep.route = "monomial-count+oracle";
    const auto o = oracle_fat_points(d, delta, mu, 8, opt.seed, opt.oracle);
    detail::put_oracle(fl, o);
    if (rep.status == Status::pass && o.ell != expected) {
      rep.status = o.ell > expected ? Status::inconclusive : Status::fail;
      rep.note = "oracle ell=" + std::to_string(o.ell) + " differs from max(0, v)=" +
                 std::to_string(expected);
    }
  }
  return rep;
}

}  // namespace staircase
