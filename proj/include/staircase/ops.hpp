#pragma once

// Staircase operators: sum along a coordinate, anisotropic dilation, and
// specialization along a direction.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "staircase/direction.hpp"
#include "staircase/errors.hpp"
#include "staircase/lattice.hpp"

namespace staircase {

// S_axis(E_1, ..., E_j): the staircase whose height function along `axis` is
// the sum of the height functions of the E_k.
inline Staircase sum_along_axis(std::size_t axis, std::span<const Staircase> parts) {
  if (parts.empty()) throw BadHypotheses("sum_along_axis needs at least one staircase");
  const std::size_t d = parts.front().dim();
  std::map<LatticePoint, Coord> total;
  for (const auto& e : parts) {
    require_same_dim(d, e.dim(), "sum_along_axis");
    const auto hf = height_function(e, axis);
    for (const auto& [base, h] : hf.support()) total[base] += h;
  }
  return from_heights(HeightFunction(d - 1, std::move(total)), axis);
}

inline Staircase sum_along_axis(std::size_t axis, std::initializer_list<Staircase> parts) {
  return sum_along_axis(axis, std::span<const Staircase>(parts.begin(), parts.size()));
}

// (a_1, ..., a_d).E = { x : (floor(x_1/a_1), ..., floor(x_d/a_d)) in E }.
inline Staircase dilate(const LatticePoint& factors, const Staircase& e) {
  require_same_dim(factors.dim(), e.dim(), "dilate");
  const std::size_t d = e.dim();
  std::size_t block = 1;
  for (Coord a : factors) {
    if (a < 1) throw BadHypotheses("dilation factors must be >= 1, got " + factors.to_string());
    block *= static_cast<std::size_t>(a);
  }
  std::vector<LatticePoint> out;
  out.reserve(block * e.size());
  for (const auto& m : e) {
    LatticePoint offset(d);
    for (std::size_t n = 0; n < block; ++n) {
      LatticePoint x(d);
      for (std::size_t i = 0; i < d; ++i) x[i] = factors[i] * m[i] + offset[i];
      out.push_back(x);
      for (std::size_t i = d; i-- > 0;) {
        if (++offset[i] < factors[i]) break;
        offset[i] = 0;
      }
    }
  }
  return Staircase::from_points(PointSet(d, std::move(out)));
}

inline Staircase dilate(Coord s, const Staircase& e) {
  LatticePoint factors(e.dim());
  for (std::size_t i = 0; i < e.dim(); ++i) factors[i] = s;
  return dilate(factors, e);
}

// The points of a finite set lying on one line of direction delta, listed in
// increasing order for (<). `representative` is the least point of the whole
// line L ∩ N^d, which need not belong to the set.
struct LineBucket {
  LatticePoint key;
  LatticePoint representative;
  std::vector<LatticePoint> members;
};

namespace detail {

struct KeyedPoint {
  LatticePoint key;
  std::int64_t position;  // dot(p, delta); larger means smaller for (<)
  LatticePoint point;
  std::size_t label;
};

inline std::vector<KeyedPoint> keyed_sorted(const Direction& delta,
                                            std::span<const PointSet* const> parts) {
  const GradingForms forms(delta);
  std::vector<KeyedPoint> out;
  for (std::size_t label = 0; label < parts.size(); ++label) {
    require_same_dim(delta.dim(), parts[label]->dim(), "delta_specialize");
    for (const auto& p : *parts[label]) {
      out.push_back({forms.key(p), dot(p, delta.vec()), p, label});
    }
  }
  std::sort(out.begin(), out.end(), [](const KeyedPoint& a, const KeyedPoint& b) {
    return std::tie(a.key, b.position) < std::tie(b.key, a.position);
  });
  return out;
}

// Calls fn(first, last) for each run of equal keys.
template <typename Fn>
void for_each_line(const std::vector<KeyedPoint>& pts, Fn&& fn) {
  for (std::size_t i = 0; i < pts.size();) {
    std::size_t j = i + 1;
    while (j < pts.size() && pts[j].key == pts[i].key) ++j;
    fn(i, j);
    i = j;
  }
}

}  // namespace detail

inline std::vector<LineBucket> line_decompose(const PointSet& s, const Direction& delta) {
  const PointSet* parts[] = {&s};
  const auto pts = detail::keyed_sorted(delta, parts);
  std::vector<LineBucket> out;
  detail::for_each_line(pts, [&](std::size_t first, std::size_t last) {
    LineBucket b{pts[first].key, line_top(pts[first].point, delta), {}};
    for (std::size_t i = first; i < last; ++i) b.members.push_back(pts[i].point);
    out.push_back(std::move(b));
  });
  return out;
}

// Delta(S): on every line L of direction delta, the #(S ∩ L) least points of
// L ∩ N^d for (<).
inline PointSet delta_specialize(const Direction& delta, const PointSet& s) {
  const PointSet* parts[] = {&s};
  const auto pts = detail::keyed_sorted(delta, parts);
  std::vector<LatticePoint> out;
  out.reserve(s.size());
  detail::for_each_line(pts, [&](std::size_t first, std::size_t last) {
    const LatticePoint top = line_top(pts[first].point, delta);
    for (std::size_t j = 0; j < last - first; ++j) {
      out.push_back(shifted(top, delta, -static_cast<std::int64_t>(j)));
    }
  });
  return PointSet(s.dim(), std::move(out));
}

// Staircase overload. The result is checked to be downward closed, which is
// guaranteed for strongly valid directions.
inline Staircase delta_specialize(const Direction& delta, const Staircase& e) {
  return Staircase::from_points(delta_specialize(delta, e.points()));
}

// Images of disjoint parts under the increasing correspondence between
// (union ∩ L) and (Delta(union) ∩ L) on every line L.
inline std::vector<PointSet> delta_on_union(const Direction& delta,
                                            std::span<const PointSet> parts) {
  std::vector<const PointSet*> ptrs;
  std::size_t total = 0;
  PointSet all(delta.dim());
  for (const auto& p : parts) {
    ptrs.push_back(&p);
    total += p.size();
    all = set_union(all, p);
  }
  if (all.size() != total) throw NotDisjoint("delta_on_union: parts overlap");

  const auto pts = detail::keyed_sorted(delta, ptrs);
  std::vector<std::vector<LatticePoint>> images(parts.size());
  detail::for_each_line(pts, [&](std::size_t first, std::size_t last) {
    const LatticePoint top = line_top(pts[first].point, delta);
    for (std::size_t j = 0; j < last - first; ++j) {
      images[pts[first + j].label].push_back(
          shifted(top, delta, -static_cast<std::int64_t>(j)));
    }
  });
  std::vector<PointSet> out;
  for (auto& img : images) out.emplace_back(delta.dim(), std::move(img));
  return out;
}

}  // namespace staircase
