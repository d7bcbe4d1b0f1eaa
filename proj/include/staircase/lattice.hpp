#pragma once

// Finite staircases (order ideals) in N^d and the lattice points they hold.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "staircase/errors.hpp"

namespace staircase {

inline constexpr std::size_t kMaxDim = 8;

using Coord = std::int32_t;

// A point of Z^d with d <= kMaxDim, stored inline. Coordinates past dim()
// are kept at zero so that the defaulted comparison is lexicographic on the
// live coordinates. Members of a PointSet are always non-negative; signed
// values show up only in intermediate arithmetic.
class LatticePoint {
 public:
  LatticePoint() = default;

  explicit LatticePoint(std::size_t dim) : dim_(checked_dim(dim)) {}

  LatticePoint(std::initializer_list<Coord> coords)
      : LatticePoint(std::span<const Coord>(coords.begin(), coords.size())) {}

  explicit LatticePoint(std::span<const Coord> coords)
      : dim_(checked_dim(coords.size())) {
    std::copy(coords.begin(), coords.end(), c_.begin());
  }

  std::size_t dim() const noexcept { return dim_; }

  Coord operator[](std::size_t i) const noexcept { return c_[i]; }
  Coord& operator[](std::size_t i) noexcept { return c_[i]; }

  const Coord* begin() const noexcept { return c_.data(); }
  const Coord* end() const noexcept { return c_.data() + dim_; }

  std::span<const Coord> coords() const noexcept { return {c_.data(), dim_}; }

  std::int64_t sum() const noexcept {
    std::int64_t total = 0;
    for (Coord x : *this) total += x;
    return total;
  }

  bool non_negative() const noexcept {
    return std::all_of(begin(), end(), [](Coord x) { return x >= 0; });
  }

  // Point with `axis` removed; used for height functions and slices.
  LatticePoint drop(std::size_t axis) const {
    LatticePoint out(dim_ - 1);
    for (std::size_t i = 0, j = 0; i < dim_; ++i) {
      if (i != axis) out.c_[j++] = c_[i];
    }
    return out;
  }

  // Inverse of drop(): inserts `value` at position `axis`.
  LatticePoint insert(std::size_t axis, Coord value) const {
    LatticePoint out(dim_ + 1);
    for (std::size_t i = 0, j = 0; i < out.dim_; ++i) {
      out.c_[i] = (i == axis) ? value : c_[j++];
    }
    return out;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < dim_; ++i) {
      if (i) out += ',';
      out += std::to_string(c_[i]);
    }
    return out + ")";
  }

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;

 private:
  static std::uint8_t checked_dim(std::size_t dim) {
    if (dim > kMaxDim) {
      throw DimensionMismatch("dimension " + std::to_string(dim) +
                              " exceeds the supported maximum " +
                              std::to_string(kMaxDim));
    }
    return static_cast<std::uint8_t>(dim);
  }

  std::array<Coord, kMaxDim> c_{};
  std::uint8_t dim_ = 0;
};

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept {
    std::size_t h = p.dim();
    for (Coord x : p) {
      h ^= std::hash<Coord>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

inline void require_same_dim(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    throw DimensionMismatch(std::string(where) + ": dimensions " +
                            std::to_string(a) + " and " + std::to_string(b) +
                            " differ");
  }
}

// Finite subset of N^d in canonical (ascending lexicographic, duplicate-free)
// order.
class PointSet {
 public:
  using const_iterator = std::vector<LatticePoint>::const_iterator;

  PointSet() = default;
  explicit PointSet(std::size_t dim) : dim_(dim) { check_dim(); }

  PointSet(std::size_t dim, std::vector<LatticePoint> points)
      : dim_(dim), points_(std::move(points)) {
    check_dim();
    for (const auto& p : points_) {
      require_same_dim(dim_, p.dim(), "PointSet");
      if (!p.non_negative()) {
        throw InvalidPoint("PointSet: point " + p.to_string() +
                           " has a negative coordinate");
      }
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }

  const_iterator begin() const noexcept { return points_.begin(); }
  const_iterator end() const noexcept { return points_.end(); }
  const std::vector<LatticePoint>& points() const noexcept { return points_; }

  bool has(const LatticePoint& p) const {
    return p.dim() == dim_ && std::binary_search(points_.begin(), points_.end(), p);
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  void check_dim() const {
    if (dim_ > kMaxDim) {
      throw DimensionMismatch("dimension " + std::to_string(dim_) +
                              " is outside 0.." + std::to_string(kMaxDim));
    }
  }

  std::size_t dim_ = 0;
  std::vector<LatticePoint> points_;
};

// Set algebra on canonical point sets.
inline bool includes(const PointSet& big, const PointSet& small) {
  require_same_dim(big.dim(), small.dim(), "includes");
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline PointSet set_union(const PointSet& a, const PointSet& b) {
  require_same_dim(a.dim(), b.dim(), "set_union");
  std::vector<LatticePoint> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointSet(a.dim(), std::move(out));
}

inline PointSet set_difference(const PointSet& a, const PointSet& b) {
  require_same_dim(a.dim(), b.dim(), "set_difference");
  std::vector<LatticePoint> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointSet(a.dim(), std::move(out));
}

inline PointSet set_intersection(const PointSet& a, const PointSet& b) {
  require_same_dim(a.dim(), b.dim(), "set_intersection");
  std::vector<LatticePoint> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointSet(a.dim(), std::move(out));
}

class NotDownwardClosed : public Error {
 public:
  NotDownwardClosed(LatticePoint point, LatticePoint missing, std::size_t axis)
      : Error("NotDownwardClosed",
              "not downward closed: " + point.to_string() + " is present but " +
                  missing.to_string() + " is not"),
        point_(point),
        missing_(missing),
        axis_(axis) {}

  const LatticePoint& point() const noexcept { return point_; }
  const LatticePoint& missing() const noexcept { return missing_; }
  std::size_t axis() const noexcept { return axis_; }

 private:
  LatticePoint point_;
  LatticePoint missing_;
  std::size_t axis_;
};

// First violation of downward closure in canonical order, if any.
inline std::optional<std::pair<LatticePoint, std::size_t>> closure_violation(
    const PointSet& s) {
  for (const auto& p : s) {
    for (std::size_t i = 0; i < s.dim(); ++i) {
      if (p[i] == 0) continue;
      LatticePoint below = p;
      --below[i];
      if (!s.has(below)) return std::pair{p, i};
    }
  }
  return std::nullopt;
}

enum class Closure {
  require,  // reject input that is not already downward closed
  close,    // replace the input by its downward closure
};

// A finite downward-closed subset of N^d. The empty staircase is legal.
class Staircase {
 public:
  Staircase() = default;

  std::size_t dim() const noexcept { return set_.dim(); }
  std::size_t size() const noexcept { return set_.size(); }
  bool empty() const noexcept { return set_.empty(); }
  bool has(const LatticePoint& p) const { return set_.has(p); }

  const PointSet& points() const noexcept { return set_; }
  PointSet::const_iterator begin() const noexcept { return set_.begin(); }
  PointSet::const_iterator end() const noexcept { return set_.end(); }

  friend bool operator==(const Staircase&, const Staircase&) = default;

  // Validating constructor from an arbitrary point set.
  static Staircase from_points(PointSet s) {
    if (s.dim() == 0) throw DimensionMismatch("staircases need dim >= 1");
    if (auto bad = closure_violation(s)) {
      LatticePoint missing = bad->first;
      --missing[bad->second];
      throw NotDownwardClosed(bad->first, missing, bad->second);
    }
    return Staircase(std::move(s));
  }

  static Staircase empty_in(std::size_t dim) { return from_points(PointSet(dim)); }

 private:
  explicit Staircase(PointSet s) : set_(std::move(s)) {}

  friend Staircase make_staircase(std::size_t, std::vector<LatticePoint>, Closure);
  friend Staircase regular_staircase(std::size_t, Coord);

  PointSet set_;
};

inline Staircase make_staircase(std::size_t dim, std::vector<LatticePoint> points,
                                Closure mode = Closure::require) {
  if (dim == 0) throw DimensionMismatch("staircases need dim >= 1");
  PointSet s(dim, std::move(points));
  if (mode == Closure::require) return Staircase::from_points(std::move(s));

  std::unordered_set<LatticePoint, LatticePointHash> seen(s.begin(), s.end());
  std::vector<LatticePoint> stack(s.begin(), s.end());
  while (!stack.empty()) {
    LatticePoint p = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < dim; ++i) {
      if (p[i] == 0) continue;
      LatticePoint below = p;
      --below[i];
      if (seen.insert(below).second) stack.push_back(below);
    }
  }
  return Staircase(PointSet(dim, {seen.begin(), seen.end()}));
}

// R_m: all exponents with coordinate sum < m.
inline Staircase regular_staircase(std::size_t dim, Coord m) {
  if (dim == 0) throw DimensionMismatch("staircases need dim >= 1");
  std::vector<LatticePoint> out;
  if (m > 0) {
    LatticePoint p(dim);
    // Odometer over the simplex; emits in lexicographic order.
    while (true) {
      out.push_back(p);
      std::size_t i = dim;
      while (i > 0) {
        --i;
        ++p[i];
        if (p.sum() < m) break;
        p[i] = 0;
        if (i == 0) return Staircase(PointSet(dim, std::move(out)));
      }
    }
  }
  return Staircase(PointSet(dim, std::move(out)));
}

inline std::size_t cardinality(const Staircase& e) noexcept { return e.size(); }

// True iff f is a subset of e.
inline bool contains(const Staircase& e, const Staircase& f) {
  return includes(e.points(), f.points());
}

// h_{E,axis}: N^{d-1} -> N with (a) in E iff a[axis] < h(a without axis).
class HeightFunction {
 public:
  HeightFunction(std::size_t dim, std::map<LatticePoint, Coord> support)
      : dim_(dim), support_(std::move(support)) {}

  std::size_t dim() const noexcept { return dim_; }
  const std::map<LatticePoint, Coord>& support() const noexcept { return support_; }

  Coord operator()(const LatticePoint& base) const {
    require_same_dim(dim_, base.dim(), "HeightFunction");
    auto it = support_.find(base);
    return it == support_.end() ? 0 : it->second;
  }

  std::int64_t total() const noexcept {
    std::int64_t sum = 0;
    for (const auto& [_, h] : support_) sum += h;
    return sum;
  }

  // h(a + e_j) <= h(a) on the support; this is equivalent to h(a+b) <= h(a)
  // for all b because h vanishes off the support.
  bool is_monotone() const {
    for (const auto& [a, h] : support_) {
      for (std::size_t j = 0; j < dim_; ++j) {
        LatticePoint up = a;
        ++up[j];
        if ((*this)(up) > h) return false;
      }
    }
    return true;
  }

 private:
  std::size_t dim_;
  std::map<LatticePoint, Coord> support_;
};

inline HeightFunction height_function(const Staircase& e, std::size_t axis) {
  if (axis >= e.dim()) {
    throw DimensionMismatch("axis " + std::to_string(axis) + " out of range");
  }
  std::map<LatticePoint, Coord> h;
  for (const auto& p : e) ++h[p.drop(axis)];
  return HeightFunction(e.dim() - 1, std::move(h));
}

// Rebuilds a staircase from a height function along `axis`.
inline Staircase from_heights(const HeightFunction& h, std::size_t axis) {
  std::vector<LatticePoint> pts;
  for (const auto& [base, height] : h.support()) {
    for (Coord x = 0; x < height; ++x) pts.push_back(base.insert(axis, x));
  }
  return Staircase::from_points(PointSet(h.dim() + 1, std::move(pts)));
}

// T_i = { m in N^{d-1} : (i, m) in E }, slicing along the first coordinate.
inline Staircase slice(const Staircase& e, Coord index) {
  if (e.dim() < 2) throw DimensionMismatch("slice needs dim >= 2");
  std::vector<LatticePoint> pts;
  for (const auto& p : e) {
    if (p[0] == index) pts.push_back(p.drop(0));
  }
  return Staircase::from_points(PointSet(e.dim() - 1, std::move(pts)));
}

// Calls fn(x) for every x in N^d with x <= hi componentwise, in
// lexicographic order.
template <typename Fn>
void for_each_in_box(const LatticePoint& hi, Fn&& fn) {
  const std::size_t d = hi.dim();
  for (std::size_t i = 0; i < d; ++i) {
    if (hi[i] < 0) return;
  }
  LatticePoint x(d);
  while (true) {
    fn(std::as_const(x));
    std::size_t i = d;
    while (true) {
      if (i == 0) return;
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        break;
      }
      x[i] = 0;
    }
  }
}

// S_m = R_{m+1} - R_m, the lattice points of coordinate sum exactly m.
class Shell {
 public:
  Shell(std::size_t dim, Coord degree)
      : degree_(degree),
        points_(set_difference(regular_staircase(dim, degree + 1).points(),
                               regular_staircase(dim, degree).points())) {}

  std::size_t dim() const noexcept { return points_.dim(); }
  Coord degree() const noexcept { return degree_; }
  const PointSet& points() const noexcept { return points_; }

 private:
  Coord degree_;
  PointSet points_;
};

}  // namespace staircase
