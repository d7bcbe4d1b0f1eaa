#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "staircase/lattice.hpp"

namespace staircase {

enum class Status { pass, fail, skipped, inconclusive };

// Outcome of one verification. `fields` holds the parameters and counts in
// the order they are written to JSONL.
struct VerificationReport {
  std::string claim;
  std::string route;
  nlohmann::ordered_json fields = nlohmann::ordered_json::object();
  std::vector<std::pair<std::string, Staircase>> witnesses;
  Status status = Status::fail;
  std::string note;

  bool passed() const noexcept { return status == Status::pass; }

  std::string status_text() const {
    switch (status) {
      case Status::pass: return "pass";
      case Status::fail: return "fail";
      case Status::inconclusive: return "inconclusive";
      case Status::skipped: return "skipped: " + note;
    }
    return "fail";
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["claim"] = claim;
    j["route"] = route;
    for (const auto& [k, v] : fields.items()) j[k] = v;
    if (status == Status::skipped) {
      j["pass"] = nullptr;
    } else {
      j["pass"] = passed();
    }
    j["status"] = status_text();
    if (!note.empty() && status != Status::skipped) j["note"] = note;
    return j;
  }
};

inline VerificationReport skipped_report(std::string claim, std::string route,
                                         nlohmann::ordered_json fields, std::string why) {
  VerificationReport r;
  r.claim = std::move(claim);
  r.route = std::move(route);
  r.fields = std::move(fields);
  r.status = Status::skipped;
  r.note = std::move(why);
  return r;
}

}  // namespace staircase
