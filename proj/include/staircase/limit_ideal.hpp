#pragma once

// Algebraic check of specialization along a direction: the flat limit of the
// ideal of E under x_i -> t*x_i + x^{-delta'} is computed line by line from
// the binomial coefficient matrix, in exact integer arithmetic, and compared
// with the combinatorial Delta(E).
//
// On a line with monomials m_1 < ... < m_k and generators n_1, ..., n_l of
// I^E (the monomials of the line not in E), row r of P is
// (binom(a_r, 0), ..., binom(a_r, k-1)) where a_r is the exponent of n_r in
// the coordinate carrying the +1 of delta; column j stands for t^j m_{k-j}.
// Row reduction with constant coefficients leaves the column weights intact,
// so after reduction the least nonzero column of each row gives the initial
// monomial of that generator of J(t), and these monomials span J(0) on the
// line.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "staircase/direction.hpp"
#include "staircase/errors.hpp"
#include "staircase/exact.hpp"
#include "staircase/lattice.hpp"
#include "staircase/ops.hpp"
#include "staircase/report.hpp"
#include "staircase/serialize.hpp"

namespace staircase {

inline GradingForms grading_forms(const Direction& delta) { return GradingForms(delta); }

struct LineLimitProblem {
  LatticePoint key;
  std::size_t pivot = 0;                  // coordinate where delta is +1
  std::vector<LatticePoint> line;         // m_1 < ... < m_k
  std::vector<std::size_t> generators;    // indices into `line` of monomials not in E
  std::vector<Coord> alpha;               // pivot exponent of each generator
  std::vector<std::vector<BigInt>> p;     // l x k

  std::size_t k() const noexcept { return line.size(); }
  std::size_t l() const noexcept { return generators.size(); }
};

// `key` must come from grading_forms(delta), whose forms for a strongly valid
// delta make the key equal to the line's point with zero pivot exponent.
inline LineLimitProblem build_line_problem(const Staircase& e, const Direction& delta,
                                           const LatticePoint& key) {
  require_same_dim(e.dim(), delta.dim(), "build_line_problem");
  const auto pivot = delta.pivot();
  if (!pivot) throw InvalidDirection(delta.to_string() + " is not strongly valid");
  require_same_dim(key.dim() + 1, delta.dim(), "build_line_problem");
  if (!key.non_negative()) {
    throw EmptyLine("line " + key.to_string() + " does not meet N^d");
  }

  LineLimitProblem out;
  out.key = key;
  out.pivot = *pivot;
  const LatticePoint bottom = key.insert(*pivot, 0);
  out.line = line_points(bottom, delta);
  for (std::size_t i = 0; i < out.line.size(); ++i) {
    if (!e.has(out.line[i])) {
      out.generators.push_back(i);
      out.alpha.push_back(out.line[i][*pivot]);
    }
  }
  const std::size_t k = out.k();
  for (Coord a : out.alpha) {
    std::vector<BigInt> row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = binomial(a, static_cast<std::int64_t>(j));
    out.p.push_back(std::move(row));
  }
  return out;
}

struct LineLimitResult {
  LatticePoint key;
  std::size_t k = 0;
  std::size_t l = 0;
  BigInt det_q = 1;
  // Initial monomials of the reduced rows; they span J(0) on the line.
  std::vector<LatticePoint> limit_span;
  // Some reduced row has a nonzero entry past the first l columns.
  bool tail_nonzero = false;
  // det Q * prod_{j<l} j! equals the Vandermonde product of the exponents.
  bool vandermonde_ok = false;
  bool pass = false;
  std::vector<int> small_prime_divisors;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["line_key"] = staircase::to_json(key);
    j["k"] = k;
    j["l"] = l;
    j["detQ"] = det_q.str();
    j["pass"] = pass;
    if (!small_prime_divisors.empty()) j["detQ_small_primes"] = small_prime_divisors;
    return j;
  }
};

inline BigInt vandermonde_over_factorials_numerator(const std::vector<Coord>& alpha) {
  BigInt v = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (std::size_t j = i + 1; j < alpha.size(); ++j) v *= BigInt(alpha[j]) - alpha[i];
  }
  return v;
}

inline BigInt factorial_product(std::size_t l) {
  BigInt out = 1;
  BigInt fact = 1;
  for (std::size_t j = 1; j < l; ++j) {
    fact *= j;
    out *= fact;
  }
  return out;
}

// Fraction-free Gauss-Jordan on the first l columns of P. Throws SingularQ
// when some leading column has no pivot.
inline LineLimitResult solve_line_limit(const LineLimitProblem& prob, bool probe_primes = false) {
  LineLimitResult res;
  res.key = prob.key;
  res.k = prob.k();
  res.l = prob.l();
  const std::size_t k = res.k;
  const std::size_t l = res.l;

  auto m = prob.p;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < l; ++c) {
    std::size_t r = c;
    while (r < l && m[r][c] == 0) ++r;
    if (r == l) {
      throw SingularQ("Q is singular on line " + prob.key.to_string() + " (k=" +
                      std::to_string(k) + ", l=" + std::to_string(l) + ")");
    }
    if (r != c) {
      std::swap(m[r], m[c]);
      sign = -sign;
    }
    for (std::size_t i = 0; i < l; ++i) {
      if (i == c) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (j == c) continue;
        m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[c][c];
  }
  // Leading block is now prev * I and prev = sign * det Q.
  res.det_q = l == 0 ? BigInt(1) : BigInt(prev * sign);

  for (std::size_t i = 0; i < l; ++i) {
    std::size_t lead = k;
    for (std::size_t j = 0; j < k; ++j) {
      if (m[i][j] != 0) {
        lead = j;
        break;
      }
    }
    res.limit_span.push_back(prob.line[k - 1 - lead]);
    for (std::size_t j = l; j < k; ++j) {
      if (m[i][j] != 0) res.tail_nonzero = true;
    }
  }
  std::sort(res.limit_span.begin(), res.limit_span.end());

  res.vandermonde_ok =
      res.det_q * factorial_product(l) == vandermonde_over_factorials_numerator(prob.alpha);

  std::vector<LatticePoint> expected(prob.line.end() - static_cast<std::ptrdiff_t>(l),
                                     prob.line.end());
  std::sort(expected.begin(), expected.end());
  res.pass = res.det_q != 0 && res.vandermonde_ok && res.limit_span == expected;

  if (probe_primes) {
    for (int q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
      if (res.det_q % q == 0) res.small_prime_divisors.push_back(q);
    }
  }
  return res;
}

inline bool verify_line_limit(const LineLimitProblem& prob) { return solve_line_limit(prob).pass; }

struct LimitIdealOptions {
  Coord box_margin = 1;
  bool probe_primes = false;
  bool keep_lines = false;  // keep per-line results in the outcome
};

struct LimitIdealOutcome {
  VerificationReport report;
  std::vector<LineLimitResult> lines;
};

// Runs every line of direction delta meeting the bounding box of E enlarged
// by the margin. Lines that miss E carry no points of E or Delta(E), so the
// box only has to cover E itself.
inline LimitIdealOutcome verify_limit_ideal(const Staircase& e, const Direction& delta,
                                            const LimitIdealOptions& opt = {}) {
  require_same_dim(e.dim(), delta.dim(), "verify_limit_ideal");
  if (!delta.is_strong()) throw InvalidDirection(delta.to_string() + " is not strongly valid");
  if (opt.box_margin < 0) throw BadHypotheses("box margin must be >= 0");
  const std::size_t d = e.dim();
  const GradingForms forms(delta);

  LatticePoint hi(d);
  for (const auto& p : e) {
    for (std::size_t i = 0; i < d; ++i) hi[i] = std::max(hi[i], p[i]);
  }
  for (std::size_t i = 0; i < d; ++i) hi[i] += opt.box_margin;

  std::map<LatticePoint, bool> keys;
  for_each_in_box(hi, [&](const LatticePoint& x) { keys.emplace(forms.key(x), true); });

  LimitIdealOutcome out;
  std::vector<LatticePoint> predicted;
  std::size_t failures = 0;
  std::size_t singular = 0;
  std::size_t tails = 0;
  std::size_t max_l = 0;
  for (const auto& [key, _] : keys) {
    const auto prob = build_line_problem(e, delta, key);
    LineLimitResult res;
    try {
      res = solve_line_limit(prob, opt.probe_primes);
    } catch (const SingularQ&) {
      ++singular;
      res.key = key;
      res.k = prob.k();
      res.l = prob.l();
      res.det_q = 0;
      res.pass = false;
    }
    if (!res.pass) ++failures;
    if (res.tail_nonzero) ++tails;
    max_l = std::max(max_l, res.l);
    for (const auto& m : prob.line) {
      if (!std::binary_search(res.limit_span.begin(), res.limit_span.end(), m)) {
        predicted.push_back(m);
      }
    }
    if (opt.keep_lines) out.lines.push_back(std::move(res));
  }

  const PointSet combinatorial = delta_specialize(delta, e.points());
  const PointSet algebraic(d, std::move(predicted));
  const bool agree = algebraic == combinatorial;

  auto& r = out.report;
  r.claim = "limit-ideal";
  r.route = "limit";
  r.fields["d"] = d;
  r.fields["dir"] = staircase::to_json(delta)["delta"];
  r.fields["size"] = e.size();
  r.fields["lines"] = keys.size();
  r.fields["max_l"] = max_l;
  r.fields["singular"] = singular;
  r.fields["tail_nonzero_lines"] = tails;
  r.fields["box_margin"] = opt.box_margin;
  r.fields["agree"] = agree;
  r.witnesses.emplace_back("E", e);
  if (auto closed = closure_violation(combinatorial); !closed) {
    r.witnesses.emplace_back("Delta(E)", Staircase::from_points(combinatorial));
  }
  r.status = (failures == 0 && agree) ? Status::pass : Status::fail;
  if (!agree) r.note = "algebraic limit differs from Delta(E)";
  else if (singular) r.note = "singular Q on " + std::to_string(singular) + " lines";
  return out;
}

}  // namespace staircase
