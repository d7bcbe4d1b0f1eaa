#pragma once

// Primitive directions in Z^d, the lines they cut out of N^d, and the
// integer linear forms that index those lines.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "staircase/errors.hpp"
#include "staircase/lattice.hpp"

namespace staircase {

enum class Validity {
  weak,    // primitive, with two entries of opposite sign
  strong,  // one entry equal to 1, all others <= 0, at least one of them < 0
};

inline bool is_primitive(std::span<const Coord> v) {
  Coord g = 0;
  for (Coord x : v) g = std::gcd(g, x);
  return g == 1;
}

inline bool validate_direction(std::span<const Coord> delta, Validity level) {
  if (delta.empty() || !is_primitive(delta)) return false;
  const bool has_pos = std::any_of(delta.begin(), delta.end(), [](Coord x) { return x > 0; });
  const bool has_neg = std::any_of(delta.begin(), delta.end(), [](Coord x) { return x < 0; });
  if (!(has_pos && has_neg)) return false;
  if (level == Validity::weak) return true;
  const auto positives = std::count_if(delta.begin(), delta.end(), [](Coord x) { return x > 0; });
  const auto ones = std::count(delta.begin(), delta.end(), Coord{1});
  return positives == 1 && ones == 1;
}

// A weakly valid direction. Every line of this direction meets N^d in a
// finite set.
class Direction {
 public:
  Direction(std::initializer_list<Coord> delta) : Direction(LatticePoint(delta)) {}

  explicit Direction(std::span<const Coord> delta) : Direction(LatticePoint(delta)) {}

  explicit Direction(const LatticePoint& delta) : delta_(delta) {
    if (!validate_direction(delta_.coords(), Validity::weak)) {
      throw InvalidDirection("direction " + delta_.to_string() +
                             " is not primitive with entries of both signs");
    }
  }

  std::size_t dim() const noexcept { return delta_.dim(); }
  Coord operator[](std::size_t i) const noexcept { return delta_[i]; }
  const LatticePoint& vec() const noexcept { return delta_; }
  std::span<const Coord> coords() const noexcept { return delta_.coords(); }

  bool is_strong() const { return validate_direction(coords(), Validity::strong); }

  // Coordinate holding the +1 of a strongly valid direction.
  std::optional<std::size_t> pivot() const {
    if (!is_strong()) return std::nullopt;
    return static_cast<std::size_t>(
        std::find(delta_.begin(), delta_.end(), Coord{1}) - delta_.begin());
  }

  Coord max_abs() const {
    Coord m = 0;
    for (Coord x : delta_) m = std::max(m, std::abs(x));
    return m;
  }

  std::string to_string() const { return delta_.to_string(); }

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  LatticePoint delta_;
};

inline std::int64_t dot(const LatticePoint& p, const LatticePoint& q) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < p.dim(); ++i) s += std::int64_t{p[i]} * q[i];
  return s;
}

// p + t * delta, unchecked.
inline LatticePoint shifted(const LatticePoint& p, const Direction& delta, std::int64_t t) {
  LatticePoint out = p;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    out[i] = static_cast<Coord>(p[i] + t * delta[i]);
  }
  return out;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Range [t_lo, t_hi] of t with p + t*delta in N^d.
inline std::pair<std::int64_t, std::int64_t> line_range(const LatticePoint& p,
                                                        const Direction& delta) {
  std::int64_t lo = INT64_MIN;
  std::int64_t hi = INT64_MAX;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (delta[i] > 0) lo = std::max(lo, -floor_div(p[i], delta[i]));
    if (delta[i] < 0) hi = std::min(hi, floor_div(p[i], -delta[i]));
  }
  return {lo, hi};
}

// Least element of L ∩ N^d for the order m < m' <=> m = m' + i*delta, i >= 1.
// Successive elements are top - delta, top - 2*delta, ...
inline LatticePoint line_top(const LatticePoint& p, const Direction& delta) {
  return shifted(p, delta, line_range(p, delta).second);
}

inline std::size_t line_length(const LatticePoint& p, const Direction& delta) {
  auto [lo, hi] = line_range(p, delta);
  return static_cast<std::size_t>(hi - lo + 1);
}

// L ∩ N^d listed in increasing order for (<).
inline std::vector<LatticePoint> line_points(const LatticePoint& p, const Direction& delta) {
  auto [lo, hi] = line_range(p, delta);
  std::vector<LatticePoint> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t t = hi; t >= lo; --t) out.push_back(shifted(p, delta, t));
  return out;
}

// d-1 independent integer linear forms vanishing on delta. Two lattice points
// share all form values iff they lie on one line of direction delta, so the
// tuple of values is the line key.
//
// When delta has a unit entry at position i (for strongly valid directions,
// the +1 entry), the forms are x_j - delta_j * delta_i * x_i for j != i,
// which makes the key of a line equal to the point of the line with x_i = 0.
// Otherwise a kernel basis is found by unimodular column reduction and put in
// Hermite normal form.
class GradingForms {
 public:
  explicit GradingForms(const Direction& delta) : dim_(delta.dim()) {
    const std::size_t d = dim_;
    std::optional<std::size_t> unit = delta.pivot();
    if (!unit) {
      for (std::size_t i = 0; i < d; ++i) {
        if (std::abs(delta[i]) == 1) {
          unit = i;
          break;
        }
      }
    }
    if (unit) {
      unit_ = unit;
      const std::size_t i = *unit;
      for (std::size_t j = 0; j < d; ++j) {
        if (j == i) continue;
        std::vector<std::int64_t> row(d, 0);
        row[j] = 1;
        row[i] = -std::int64_t{delta[j]} * delta[i];
        forms_.push_back(std::move(row));
      }
    } else {
      forms_ = hermite(kernel_basis(delta));
    }
  }

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::vector<std::int64_t>>& forms() const noexcept { return forms_; }

  // Unit coordinate used to build the forms, when there is one.
  std::optional<std::size_t> unit_coordinate() const noexcept { return unit_; }

  LatticePoint key(const LatticePoint& p) const {
    LatticePoint k(dim_ - 1);
    for (std::size_t r = 0; r < forms_.size(); ++r) {
      std::int64_t v = 0;
      for (std::size_t c = 0; c < dim_; ++c) v += forms_[r][c] * p[c];
      k[r] = static_cast<Coord>(v);
    }
    return k;
  }

 private:
  using Matrix = std::vector<std::vector<std::int64_t>>;

  static Matrix kernel_basis(const Direction& delta) {
    const std::size_t d = delta.dim();
    std::vector<std::int64_t> v(delta.vec().begin(), delta.vec().end());
    Matrix u(d, std::vector<std::int64_t>(d, 0));  // columns of u, stored as rows
    for (std::size_t i = 0; i < d; ++i) u[i][i] = 1;
    while (true) {
      std::size_t p = d;
      std::size_t nonzero = 0;
      for (std::size_t i = 0; i < d; ++i) {
        if (v[i] == 0) continue;
        ++nonzero;
        if (p == d || std::abs(v[i]) < std::abs(v[p])) p = i;
      }
      if (nonzero <= 1) {
        Matrix out;
        for (std::size_t j = 0; j < d; ++j) {
          if (j != p) out.push_back(u[j]);
        }
        return out;
      }
      for (std::size_t j = 0; j < d; ++j) {
        if (j == p || v[j] == 0) continue;
        const std::int64_t q = v[j] / v[p];
        v[j] -= q * v[p];
        for (std::size_t r = 0; r < d; ++r) u[j][r] -= q * u[p][r];
      }
    }
  }

  static Matrix hermite(Matrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      // Euclid on column c among rows r..end.
      while (true) {
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i) {
          if (m[i][c] != 0 && (best == rows || std::abs(m[i][c]) < std::abs(m[best][c]))) best = i;
        }
        if (best == rows) break;
        std::swap(m[r], m[best]);
        bool done = true;
        for (std::size_t i = r + 1; i < rows; ++i) {
          if (m[i][c] == 0) continue;
          const std::int64_t q = m[i][c] / m[r][c];
          for (std::size_t k = 0; k < cols; ++k) m[i][k] -= q * m[r][k];
          if (m[i][c] != 0) done = false;
        }
        if (done) break;
      }
      if (m[r][c] == 0) continue;
      if (m[r][c] < 0) {
        for (auto& x : m[r]) x = -x;
      }
      for (std::size_t i = 0; i < r; ++i) {
        const std::int64_t q = floor_div(m[i][c], m[r][c]);
        for (std::size_t k = 0; k < cols; ++k) m[i][k] -= q * m[r][k];
      }
      ++r;
    }
    return m;
  }

  std::size_t dim_;
  Matrix forms_;
  std::optional<std::size_t> unit_;
};

// The integer i with p = q + i*delta, if p and q lie on one line of
// direction delta.
inline std::optional<std::int64_t> line_offset(const LatticePoint& p, const LatticePoint& q,
                                               const Direction& delta) {
  require_same_dim(p.dim(), delta.dim(), "line_offset");
  require_same_dim(q.dim(), delta.dim(), "line_offset");
  std::size_t anchor = 0;
  while (delta[anchor] == 0) ++anchor;
  const std::int64_t diff = std::int64_t{p[anchor]} - q[anchor];
  if (diff % delta[anchor] != 0) return std::nullopt;
  const std::int64_t i = diff / delta[anchor];
  if (shifted(q, delta, i) != p) return std::nullopt;
  return i;
}

// Order relation m < m' <=> m = m' + i*delta for some integer i >= 1.
inline bool delta_order_less(const LatticePoint& p, const LatticePoint& q,
                             const Direction& delta) {
  const auto i = line_offset(p, q, delta);
  if (!i) {
    throw NotOnSameLine(p.to_string() + " and " + q.to_string() +
                        " are not on a common line of direction " + delta.to_string());
  }
  return *i >= 1;
}

}  // namespace staircase
