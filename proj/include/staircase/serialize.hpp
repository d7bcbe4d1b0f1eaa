#pragma once

// Canonical text forms. A staircase is written as the single line
//   {"dim":d,"points":[[...],...]}
// with points in ascending lexicographic order and no whitespace; the byte
// string is the equality key for golden files.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "staircase/direction.hpp"
#include "staircase/errors.hpp"
#include "staircase/lattice.hpp"
#include "staircase/ops.hpp"

namespace staircase {

inline nlohmann::json to_json(const LatticePoint& p) {
  return nlohmann::json(std::vector<Coord>(p.begin(), p.end()));
}

inline nlohmann::json to_json(const PointSet& s) {
  auto arr = nlohmann::json::array();
  for (const auto& p : s) arr.push_back(to_json(p));
  return arr;
}

inline std::string serialize(const Staircase& e) {
  std::string out = "{\"dim\":" + std::to_string(e.dim()) + ",\"points\":[";
  bool first = true;
  for (const auto& p : e) {
    if (!first) out += ',';
    first = false;
    out += '[';
    for (std::size_t i = 0; i < p.dim(); ++i) {
      if (i) out += ',';
      out += std::to_string(p[i]);
    }
    out += ']';
  }
  return out + "]}";
}

inline nlohmann::ordered_json to_json(const Direction& delta) {
  nlohmann::ordered_json j;
  j["delta"] = std::vector<Coord>(delta.vec().begin(), delta.vec().end());
  return j;
}

// One JSON object per bucket, one per line of output.
inline std::string dump_buckets(const std::vector<LineBucket>& buckets) {
  std::string out;
  for (const auto& b : buckets) {
    nlohmann::ordered_json j;
    j["line_key"] = to_json(b.key);
    j["representative"] = to_json(b.representative);
    auto members = nlohmann::json::array();
    for (const auto& m : b.members) members.push_back(to_json(m));
    j["members"] = members;
    out += j.dump() + '\n';
  }
  return out;
}

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                       std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

inline nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON", line, column);
  }
}

[[noreturn]] inline void schema_error(const std::string& what) {
  throw ParseError(what, 1, 1);
}

inline Coord as_coord(const nlohmann::json& v, const char* what) {
  if (!v.is_number_integer()) schema_error(std::string(what) + " must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < INT32_MIN || x > INT32_MAX) schema_error(std::string(what) + " out of range");
  return static_cast<Coord>(x);
}

}  // namespace detail

// Parses the canonical form (whitespace and point order are not enforced on
// input). The result must be downward closed.
inline Staircase parse_staircase(std::string_view text) {
  const auto j = detail::parse_json(text);
  if (!j.is_object() || !j.contains("dim") || !j.contains("points")) {
    detail::schema_error("expected an object with \"dim\" and \"points\"");
  }
  const Coord dim = detail::as_coord(j["dim"], "dim");
  if (dim < 1 || dim > static_cast<Coord>(kMaxDim)) detail::schema_error("dim out of range");
  if (!j["points"].is_array()) detail::schema_error("\"points\" must be an array");
  std::vector<LatticePoint> pts;
  for (const auto& row : j["points"]) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
      detail::schema_error("every point must be an array of length dim");
    }
    LatticePoint p(static_cast<std::size_t>(dim));
    for (std::size_t i = 0; i < row.size(); ++i) {
      p[i] = detail::as_coord(row[i], "coordinate");
      if (p[i] < 0) detail::schema_error("coordinates must be non-negative");
    }
    pts.push_back(p);
  }
  return make_staircase(static_cast<std::size_t>(dim), std::move(pts), Closure::require);
}

inline Direction parse_direction(std::string_view text) {
  const auto j = detail::parse_json(text);
  if (!j.is_object() || !j.contains("delta") || !j["delta"].is_array()) {
    detail::schema_error("expected {\"delta\":[...]}");
  }
  std::vector<Coord> v;
  for (const auto& x : j["delta"]) v.push_back(detail::as_coord(x, "delta entry"));
  return Direction(std::span<const Coord>(v));
}

}  // namespace staircase
