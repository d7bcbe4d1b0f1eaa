#pragma once

// Chains of specializations that collide s^d fat points of multiplicity mu
// into a staircase containing R_{s*mu+1}.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "staircase/direction.hpp"
#include "staircase/errors.hpp"
#include "staircase/lattice.hpp"
#include "staircase/ops.hpp"
#include "staircase/serialize.hpp"

namespace staircase {

enum class Provenance { builtin_remark, induction, search };

inline std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::builtin_remark: return "builtin-remark";
    case Provenance::induction: return "induction";
    case Provenance::search: return "search";
  }
  return "unknown";
}

// Directions applied left to right: directions[0] acts first.
class DeltaChain {
 public:
  DeltaChain(std::size_t dim, std::vector<Direction> directions, Provenance provenance)
      : dim_(dim), directions_(std::move(directions)), provenance_(provenance) {
    for (const auto& d : directions_) {
      require_same_dim(dim_, d.dim(), "DeltaChain");
      if (!d.is_strong()) {
        throw InvalidDirection("chain direction " + d.to_string() + " is not strongly valid");
      }
    }
  }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Direction>& directions() const noexcept { return directions_; }
  std::size_t size() const noexcept { return directions_.size(); }
  Provenance provenance() const noexcept { return provenance_; }

  nlohmann::json to_json() const {
    auto arr = nlohmann::json::array();
    for (const auto& d : directions_) arr.push_back(staircase::to_json(d.vec()));
    return arr;
  }

  friend bool operator==(const DeltaChain&, const DeltaChain&) = default;

 private:
  std::size_t dim_;
  std::vector<Direction> directions_;
  Provenance provenance_;
};

// Cases covered by the key lemma: s >= 2, d >= 2, (s, d) not in
// {(2,2), (2,3), (3,2)}.
inline bool key_lemma_admissible(Coord s, std::size_t d) {
  if (s < 2 || d < 2) return false;
  return !((s == 2 && d == 2) || (s == 2 && d == 3) || (s == 3 && d == 2));
}

// Cases the dimension induction starts from.
inline bool is_initial_case(Coord s, std::size_t d) {
  return (s > 3 && d == 2) || (s == 3 && d == 3) || (s == 2 && d == 4);
}

namespace detail {

inline Direction padded_front(std::initializer_list<Coord> tail, std::size_t d) {
  LatticePoint v(d);
  std::size_t i = d - tail.size();
  for (Coord x : tail) v[i++] = x;
  return Direction(v);
}

// (0,...,0,1,-1,-1,0,...,0) with the 1 at zero-based position `at`.
inline Direction closing_direction(std::size_t at, std::size_t d) {
  LatticePoint v(d);
  v[at] = 1;
  v[at + 1] = -1;
  v[at + 2] = -1;
  return Direction(v);
}

inline void require_admissible(Coord s, std::size_t d) {
  if (d > kMaxDim) throw UnsupportedCase("dimension above " + std::to_string(kMaxDim));
  if (!key_lemma_admissible(s, d)) {
    throw UnsupportedCase("(s, d) = (" + std::to_string(s) + ", " + std::to_string(d) +
                          ") is outside the key lemma");
  }
}

}  // namespace detail

// Explicit chains per regime of s. Nonzero entries of the initial-case
// vectors sit in the last coordinates; the closing vector of step i has its
// 1 at (one-based) position 1 + d - i.
inline DeltaChain builtin_chain(Coord s, std::size_t d) {
  detail::require_admissible(s, d);
  std::vector<Direction> dirs;
  if (s > 3) {
    dirs.push_back(detail::padded_front({1, -s + 1}, d));
    dirs.push_back(detail::padded_front({-s + 2, 1}, d));
  } else if (s == 3) {
    dirs.push_back(detail::padded_front({1, -2, 0}, d));
    dirs.push_back(detail::padded_front({-3, 0, 1}, d));
    dirs.push_back(detail::padded_front({0, 1, -2}, d));
  } else {
    dirs.push_back(detail::padded_front({1, -1, -1, -1}, d));
    dirs.push_back(detail::padded_front({-1, 1, -1, 0}, d));
    dirs.push_back(detail::padded_front({-1, 0, 1, -1}, d));
    dirs.push_back(detail::padded_front({-1, -1, 0, 1}, d));
  }
  for (std::size_t i = dirs.size() + 1; i <= d; ++i) {
    dirs.push_back(detail::closing_direction(d - i, d));
  }
  return DeltaChain(d, std::move(dirs), Provenance::builtin_remark);
}

// Chain for (s, d) built from the chain for (s, d-1): every direction gets a
// leading 0 (so it acts slice by slice along the first coordinate), then
// (1,-1,-1,0,...,0) fills the last hole (s*mu, 0, ..., 0).
inline DeltaChain induction_chain(Coord s, std::size_t d) {
  detail::require_admissible(s, d);
  if (d < 3 || !key_lemma_admissible(s, d - 1)) {
    throw UnsupportedCase("(s, d) = (" + std::to_string(s) + ", " + std::to_string(d) +
                          ") is an initial case of the induction");
  }
  const DeltaChain lower = is_initial_case(s, d - 1) ? builtin_chain(s, d - 1)
                                                      : induction_chain(s, d - 1);
  std::vector<Direction> dirs;
  for (const auto& g : lower.directions()) dirs.emplace_back(g.vec().insert(0, 0));
  dirs.push_back(detail::closing_direction(0, d));
  return DeltaChain(d, std::move(dirs), Provenance::induction);
}

// Applies the chain; every intermediate set is checked to be a staircase.
inline Staircase apply_chain(const DeltaChain& chain, const Staircase& e) {
  require_same_dim(chain.dim(), e.dim(), "apply_chain");
  Staircase cur = e;
  for (const auto& delta : chain.directions()) {
    Staircase next = delta_specialize(delta, cur);
    if (next.size() != cur.size()) {
      throw InternalContradiction("specialization along " + delta.to_string() +
                                  " changed the cardinality");
    }
    cur = std::move(next);
  }
  return cur;
}

struct ChainReport {
  Coord s = 0;
  std::size_t d = 0;
  Coord mu = 0;
  DeltaChain chain;
  Staircase image;
  Staircase target;
  bool pass = false;
  std::vector<LatticePoint> missing;
  std::string note;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["claim"] = "key-lemma";
    j["s"] = s;
    j["d"] = d;
    j["mu"] = mu;
    j["chain"] = chain.to_json();
    j["pass"] = pass;
    auto miss = nlohmann::json::array();
    for (const auto& p : missing) miss.push_back(staircase::to_json(p));
    j["missing"] = miss;
    j["provenance"] = staircase::to_string(chain.provenance());
    j["status"] = pass ? "pass" : "fail";
    if (!note.empty()) j["note"] = note;
    return j;
  }
};

// Runs `chain` on s.R_mu and compares with R_{s*mu+1} point by point.
inline ChainReport check_chain(const DeltaChain& chain, Coord s, Coord mu) {
  const std::size_t d = chain.dim();
  const Staircase start = dilate(s, regular_staircase(d, mu));
  Staircase image = apply_chain(chain, start);
  Staircase target = regular_staircase(d, s * mu + 1);
  const PointSet miss = set_difference(target.points(), image.points());
  return ChainReport{s,     d,     mu,          chain,
                     std::move(image), std::move(target), miss.empty(),
                     miss.points(), {}};
}

inline ChainReport verify_key_lemma(Coord s, std::size_t d, Coord mu) {
  detail::require_admissible(s, d);
  if (mu < 1) throw BadHypotheses("mu must be >= 1");
  ChainReport report = check_chain(builtin_chain(s, d), s, mu);
  if (!report.pass && !is_initial_case(s, d)) {
    ChainReport fallback = check_chain(induction_chain(s, d), s, mu);
    fallback.note = "builtin chain missed " + std::to_string(report.missing.size()) +
                    " points; using induction chain";
    return fallback;
  }
  return report;
}

// If m + i*delta lies in P for some integer i, then Delta(R_mu ∪ P - {m})
// contains R_mu. Returns whether the hypothesis holds, and when it does,
// checks the conclusion.
inline bool check_fill_hole(Coord mu, const PointSet& p, const LatticePoint& m,
                            const Direction& delta) {
  const std::size_t d = delta.dim();
  require_same_dim(d, p.dim(), "check_fill_hole");
  require_same_dim(d, m.dim(), "check_fill_hole");
  if (!delta.is_strong()) throw BadHypotheses("direction must be strongly valid");
  if (!m.non_negative() || m.sum() >= mu) {
    throw BadHypotheses(m.to_string() + " is not in R_" + std::to_string(mu));
  }
  for (const auto& x : p) {
    if (x.sum() < mu) {
      throw BadHypotheses("P meets R_" + std::to_string(mu) + " at " + x.to_string());
    }
  }
  const bool hit = std::any_of(p.begin(), p.end(),
                               [&](const LatticePoint& x) { return line_offset(x, m, delta).has_value(); });
  if (!hit) return false;

  const Staircase reg = regular_staircase(d, mu);
  const PointSet e = set_difference(set_union(reg.points(), p), PointSet(d, {m}));
  if (!includes(delta_specialize(delta, e), reg.points())) {
    throw InternalContradiction("Delta(R_mu ∪ P - {m}) does not contain R_mu for m = " +
                                m.to_string());
  }
  return true;
}

// All strongly valid directions with entries in [-bound, 1], ordered by
// largest absolute entry, then lexicographically.
inline std::vector<Direction> strong_directions(std::size_t d, Coord bound) {
  std::vector<Direction> out;
  LatticePoint v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = -bound;
  while (true) {
    if (validate_direction(v.coords(), Validity::strong)) out.emplace_back(v);
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (v[i] < 1) {
        ++v[i];
        break;
      }
      v[i] = -bound;
      if (i == 0) {
        std::stable_sort(out.begin(), out.end(), [](const Direction& a, const Direction& b) {
          return a.max_abs() < b.max_abs();
        });
        return out;
      }
    }
  }
}

// Iterative-deepening search over chains of strongly valid directions with
// entries bounded by entry_bound and length at most step_budget. A chain is
// accepted when it takes s.R_mu above R_{s*mu+1} for every mu in 1..mu_probe.
// Not finding a chain is not evidence that none exists.
inline DeltaChain search_chain(Coord s, std::size_t d, Coord mu_probe, Coord entry_bound,
                               std::size_t step_budget) {
  if (mu_probe < 1) throw BadHypotheses("mu_probe must be >= 1");
  if (s < 1 || d < 2 || d > kMaxDim) throw BadHypotheses("need s >= 1 and 2 <= d <= 8");

  std::vector<Staircase> starts;
  std::vector<Staircase> targets;
  for (Coord mu = 1; mu <= mu_probe; ++mu) {
    starts.push_back(dilate(s, regular_staircase(d, mu)));
    targets.push_back(regular_staircase(d, s * mu + 1));
    // Specialization preserves cardinality, so no chain can help.
    if (starts.back().size() < targets.back().size()) {
      throw NotFound("s.R_mu is smaller than R_{s*mu+1} at mu = " + std::to_string(mu));
    }
  }
  const auto dirs = strong_directions(d, entry_bound);

  std::vector<std::size_t> picks;
  auto accepted = [&](const std::vector<Staircase>& images) {
    for (std::size_t k = 0; k < images.size(); ++k) {
      if (!contains(images[k], targets[k])) return false;
    }
    return true;
  };
  // Depth-first with a fixed depth limit; returns true once a chain is found.
  auto dfs = [&](auto&& self, const std::vector<Staircase>& images, std::size_t depth) -> bool {
    if (depth == 0) return accepted(images);
    for (std::size_t k = 0; k < dirs.size(); ++k) {
      if (!picks.empty() && picks.back() == k) continue;  // Delta is idempotent
      std::vector<Staircase> next;
      next.reserve(images.size());
      for (const auto& img : images) next.push_back(delta_specialize(dirs[k], img));
      picks.push_back(k);
      if (self(self, next, depth - 1)) return true;
      picks.pop_back();
    }
    return false;
  };
  for (std::size_t len = 1; len <= step_budget; ++len) {
    picks.clear();
    if (dfs(dfs, starts, len)) {
      std::vector<Direction> chosen;
      for (std::size_t k : picks) chosen.push_back(dirs[k]);
      return DeltaChain(d, std::move(chosen), Provenance::search);
    }
  }
  throw NotFound("no chain of length <= " + std::to_string(step_budget) +
                 " with entries bounded by " + std::to_string(entry_bound));
}

}  // namespace staircase
