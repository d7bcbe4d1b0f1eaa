#pragma once

// Command-line front end. `run` takes the arguments without the program
// name and writes to the given streams so tests can drive it in-process.

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "staircase/staircase.hpp"

namespace staircase::cli {

enum class ExitCode : int { pass = 0, fail = 1, usage = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Outcome { pass, fail, skipped, inconclusive };

struct Record {
  std::string line;
  Outcome outcome = Outcome::fail;
};

struct RunConfig {
  std::string command;
  std::string kind;
  std::vector<Coord> s, d, mu, delta;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t modulus = kMersenne61;
  std::string in;
  std::string out;
  unsigned jobs = 1;
  bool exact = false;
  bool oracle = true;
};

// "2..5", "3", "1,4,7" and mixtures like "1..3,6".
inline std::vector<Coord> parse_range(const std::string& text) {
  std::vector<Coord> out;
  std::stringstream ss(text);
  std::string part;
  auto num = [&](const std::string& t) -> Coord {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(t, &used);
    } catch (const std::exception&) {
      throw UsageError("bad number '" + t + "' in range '" + text + "'");
    }
    if (used != t.size() || v < -1000000 || v > 1000000) {
      throw UsageError("bad number '" + t + "' in range '" + text + "'");
    }
    return static_cast<Coord>(v);
  };
  while (std::getline(ss, part, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(num(part));
      continue;
    }
    const Coord lo = num(part.substr(0, dots));
    const Coord hi = num(part.substr(dots + 2));
    if (hi < lo) throw UsageError("empty range '" + part + "'");
    if (hi - lo > 10000) throw UsageError("range '" + part + "' is too long");
    for (Coord v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty range '" + text + "'");
  return out;
}

inline std::vector<Coord> parse_vector(const std::string& text) {
  std::vector<Coord> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(part, &used);
    } catch (const std::exception&) {
      throw UsageError("bad vector '" + text + "'");
    }
    if (used != part.size() || v < -1000000 || v > 1000000) throw UsageError("bad vector '" + text + "'");
    out.push_back(static_cast<Coord>(v));
  }
  if (out.empty() || out.size() > kMaxDim) throw UsageError("bad vector '" + text + "'");
  return out;
}

inline std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw UsageError(std::string("bad ") + what + " '" + text + "'");
  }
  if (used != text.size() || text.empty() || text[0] == '-') {
    throw UsageError(std::string("bad ") + what + " '" + text + "'");
  }
  return v;
}

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(f), {});
}

inline Staircase read_staircase(const std::string& path, std::istream& in) {
  return parse_staircase(read_input(path, in));
}

// Classifies a JSONL record by its status, falling back to its pass flag.
inline Outcome classify(const nlohmann::json& rec) {
  if (rec.contains("status") && rec["status"].is_string()) {
    const std::string st = rec["status"].get<std::string>();
    if (st == "pass") return Outcome::pass;
    if (st.rfind("skipped", 0) == 0) return Outcome::skipped;
    if (st == "inconclusive") return Outcome::inconclusive;
    return Outcome::fail;
  }
  if (rec.contains("pass")) {
    if (rec["pass"].is_null()) return Outcome::skipped;
    if (rec["pass"].is_boolean()) return rec["pass"].get<bool>() ? Outcome::pass : Outcome::fail;
  }
  return Outcome::fail;
}

inline Record make_record(const nlohmann::ordered_json& j) {
  return Record{j.dump(), classify(nlohmann::json::parse(j.dump()))};
}

// Runs task(0..n-1) on `jobs` workers and writes each record as soon as all
// earlier ones are written, so the stream is in grid order.
inline std::vector<Outcome> run_ordered(std::size_t n, unsigned jobs,
                                        const std::function<Record(std::size_t)>& task,
                                        std::ostream& os) {
  std::vector<Outcome> outcomes;
  outcomes.reserve(n);
  auto emit = [&](const Record& r) {
    os << r.line << '\n';
    os.flush();
    outcomes.push_back(r.outcome);
  };
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) emit(task(i));
    return outcomes;
  }

  std::vector<std::optional<Record>> slots(n);
  std::atomic<std::size_t> next{0};
  std::mutex m;
  std::condition_variable cv;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      Record r;
      try {
        r = task(i);
      } catch (const std::exception& e) {
        nlohmann::ordered_json j;
        j["pass"] = false;
        j["status"] = std::string("error: ") + e.what();
        r = Record{j.dump(), Outcome::fail};
      }
      {
        std::lock_guard<std::mutex> lk(m);
        slots[i] = std::move(r);
      }
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (std::size_t i = 0; i < n; ++i) {
    std::unique_lock<std::mutex> lk(m);
    cv.wait(lk, [&] { return slots[i].has_value(); });
    Record r = std::move(*slots[i]);
    slots[i].reset();
    lk.unlock();
    emit(r);
  }
  for (auto& t : pool) t.join();
  return outcomes;
}

namespace detail {

inline nlohmann::ordered_json error_record(const std::string& claim, nlohmann::ordered_json params,
                                           const Error& e) {
  nlohmann::ordered_json j;
  j["claim"] = claim;
  for (const auto& [k, v] : params.items()) j[k] = v;
  j["pass"] = false;
  j["status"] = "error: " + e.kind() + ": " + e.what();
  return j;
}

struct GridPoint {
  Coord s = 0;
  Coord d = 0;
  Coord mu = 0;
  Coord delta = 0;
};

inline std::vector<Coord> or_default(const std::vector<Coord>& v, std::vector<Coord> dflt) {
  return v.empty() ? dflt : v;
}

inline void require_dims(const std::vector<Coord>& ds) {
  for (Coord d : ds) {
    if (d < 1 || d > static_cast<Coord>(kMaxDim)) {
      throw UsageError("dimension " + std::to_string(d) + " outside 1.." + std::to_string(kMaxDim));
    }
  }
}

inline std::vector<Coord> seq(Coord lo, Coord hi) {
  std::vector<Coord> v;
  for (Coord x = lo; x <= hi; ++x) v.push_back(x);
  return v;
}

inline VerifyOptions verify_options(const RunConfig& cfg) {
  VerifyOptions opt;
  opt.run_oracle = cfg.oracle;
  opt.seed = cfg.seed;
  opt.oracle.modulus = cfg.modulus;
  opt.oracle.exact = cfg.exact;
  return opt;
}

inline std::vector<Outcome> verify_key_lemma_grid(const RunConfig& cfg, std::ostream& os) {
  std::vector<GridPoint> grid;
  const auto ss = or_default(cfg.s, seq(2, 5));
  const auto ds = or_default(cfg.d, seq(2, 5));
  const auto ms = or_default(cfg.mu, seq(1, 4));
  require_dims(ds);
  for (Coord s : ss)
    for (Coord d : ds)
      for (Coord mu : ms) grid.push_back({s, d, mu, 0});
  return run_ordered(grid.size(), cfg.jobs, [&](std::size_t i) {
    const auto g = grid[i];
    nlohmann::ordered_json params{{"s", g.s}, {"d", g.d}, {"mu", g.mu}};
    try {
      if (!key_lemma_admissible(g.s, static_cast<std::size_t>(g.d))) {
        nlohmann::ordered_json j{{"claim", "key-lemma"}};
        for (const auto& [k, v] : params.items()) j[k] = v;
        j["pass"] = nullptr;
        j["status"] = "skipped: excluded case";
        return make_record(j);
      }
      return make_record(verify_key_lemma(g.s, static_cast<std::size_t>(g.d), g.mu).to_json());
    } catch (const Error& e) {
      return make_record(error_record("key-lemma", params, e));
    }
  }, os);
}

inline std::vector<Outcome> verify_vanishing_grid(const RunConfig& cfg, std::ostream& os) {
  std::vector<GridPoint> grid;
  const auto ss = or_default(cfg.s, seq(2, 5));
  const auto ds = or_default(cfg.d, seq(2, 4));
  const auto ms = or_default(cfg.mu, seq(1, 2));
  require_dims(ds);
  for (Coord s : ss)
    for (Coord d : ds)
      for (Coord mu : ms) {
        if (cfg.delta.empty()) {
          grid.push_back({s, d, mu, s * mu});
        } else {
          for (Coord delta : cfg.delta) grid.push_back({s, d, mu, delta});
        }
      }
  const VerifyOptions opt = verify_options(cfg);
  return run_ordered(grid.size(), cfg.jobs, [&](std::size_t i) {
    const auto g = grid[i];
    nlohmann::ordered_json params{{"s", g.s}, {"d", g.d}, {"mu", g.mu}, {"delta", g.delta}};
    try {
      if (g.delta > g.s * g.mu) {
        return make_record(skipped_report("vanishing", "chain", params, "delta > s*mu").to_json());
      }
      return make_record(
          verify_vanishing_theorem(g.s, static_cast<std::size_t>(g.d), g.mu, g.delta, opt).to_json());
    } catch (const UnsupportedCase&) {
      return make_record(skipped_report("vanishing", "chain", params, "excluded case").to_json());
    } catch (const Error& e) {
      return make_record(error_record("vanishing", params, e));
    }
  }, os);
}

inline std::vector<Outcome> verify_strict_grid(const RunConfig& cfg, std::ostream& os) {
  std::vector<GridPoint> grid;
  const auto ss = or_default(cfg.s, seq(1, 5));
  const auto ds = or_default(cfg.d, seq(2, 4));
  const auto ms = or_default(cfg.mu, seq(1, 4));
  require_dims(ds);
  for (Coord s : ss)
    for (Coord d : ds)
      for (Coord mu : ms) {
        const auto deltas = cfg.delta.empty() ? seq(0, s * mu - 1) : cfg.delta;
        for (Coord delta : deltas) grid.push_back({s, d, mu, delta});
      }
  return run_ordered(grid.size(), cfg.jobs, [&](std::size_t i) {
    const auto g = grid[i];
    nlohmann::ordered_json params{{"s", g.s}, {"d", g.d}, {"mu", g.mu}, {"delta", g.delta}};
    try {
      if (g.delta >= g.s * g.mu) {
        return make_record(skipped_report("strict", "dilation", params, "delta >= s*mu").to_json());
      }
      return make_record(verify_strict_theorem(g.s, static_cast<std::size_t>(g.d), g.mu, g.delta).to_json());
    } catch (const Error& e) {
      return make_record(error_record("strict", params, e));
    }
  }, os);
}

inline std::vector<Outcome> verify_eight_points_grid(const RunConfig& cfg, std::ostream& os) {
  std::vector<GridPoint> grid;
  const auto ms = or_default(cfg.mu, seq(1, 3));
  for (Coord mu : ms) {
    const auto deltas = cfg.delta.empty() ? seq(0, 2 * mu + 3) : cfg.delta;
    for (Coord delta : deltas) grid.push_back({2, 3, mu, delta});
  }
  const VerifyOptions opt = verify_options(cfg);
  return run_ordered(grid.size(), cfg.jobs, [&](std::size_t i) {
    const auto g = grid[i];
    nlohmann::ordered_json params{{"mu", g.mu}, {"delta", g.delta}};
    try {
      return make_record(verify_eight_points(g.mu, g.delta, opt).to_json());
    } catch (const Error& e) {
      return make_record(error_record("eight-points", params, e));
    }
  }, os);
}

inline std::vector<Outcome> verify_limit_ideal_dirs(const RunConfig& cfg, const Staircase& e,
                                                    const std::vector<Direction>& dirs, bool lines,
                                                    bool probe, std::ostream& os) {
  LimitIdealOptions opt;
  opt.keep_lines = lines;
  opt.probe_primes = probe;
  return run_ordered(dirs.size(), cfg.jobs, [&](std::size_t i) {
    const auto& dir = dirs[i];
    try {
      const auto outcome = verify_limit_ideal(e, dir, opt);
      Record r = make_record(outcome.report.to_json());
      for (const auto& line : outcome.lines) {
        nlohmann::ordered_json j = line.to_json();
        r.line += '\n' + j.dump();
      }
      return r;
    } catch (const Error& err) {
      return make_record(error_record("limit-ideal", {{"dir", to_json(dir)["delta"]}}, err));
    }
  }, os);
}

inline ExitCode exit_for(const std::vector<Outcome>& outcomes) {
  for (Outcome o : outcomes) {
    if (o == Outcome::fail || o == Outcome::inconclusive) return ExitCode::fail;
  }
  return ExitCode::pass;
}

struct Tally {
  std::size_t pass = 0, fail = 0, skipped = 0, inconclusive = 0;
};

inline ExitCode report(const std::string& text, std::ostream& os) {
  std::map<std::string, Tally> tallies;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("record is not JSON: ") + e.what(), lineno, e.byte);
    }
    if (!rec.is_object()) throw ParseError("record is not a JSON object", lineno, 1);
    std::string claim = "(unlabeled)";
    if (rec.contains("claim") && rec["claim"].is_string()) {
      claim = rec["claim"].get<std::string>();
    } else if (rec.contains("line_key")) {
      claim = "limit-ideal-line";
    }
    auto& t = tallies[claim];
    switch (classify(rec)) {
      case Outcome::pass: ++t.pass; break;
      case Outcome::fail: ++t.fail; break;
      case Outcome::skipped: ++t.skipped; break;
      case Outcome::inconclusive: ++t.inconclusive; break;
    }
  }
  std::size_t width = 5;
  for (const auto& [claim, _] : tallies) width = std::max(width, claim.size());
  os << std::left << std::setw(static_cast<int>(width)) << "claim" << std::right << std::setw(8)
     << "pass" << std::setw(8) << "fail" << std::setw(8) << "skip" << std::setw(14) << "inconclusive"
     << '\n';
  bool bad = false;
  for (const auto& [claim, t] : tallies) {
    os << std::left << std::setw(static_cast<int>(width)) << claim << std::right << std::setw(8)
       << t.pass << std::setw(8) << t.fail << std::setw(8) << t.skipped << std::setw(14)
       << t.inconclusive << '\n';
    if (t.fail || t.inconclusive) bad = true;
  }
  return bad ? ExitCode::fail : ExitCode::pass;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Staircases, specializations and fat-point postulation checks", "staircase"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  RunConfig cfg;
  int dim = 0;
  Coord mu = 0;
  std::string by, dir, axis_text;
  std::vector<std::string> inputs;
  std::string s_text, d_text, mu_text, delta_text, seed_text, modulus_text;
  bool buckets = false, lines = false, probe = false, no_oracle = false;

  auto* regular = app.add_subcommand("regular", "Write the staircase R_mu");
  regular->add_option("--dim", dim, "Dimension")->required();
  regular->add_option("--mu", mu, "Coordinate sums stay below mu")->required();
  regular->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* dil = app.add_subcommand("dilate", "Dilate a staircase by factors a_1,...,a_d");
  dil->add_option("--by", by, "Comma-separated factors, or one factor for all axes")->required();
  dil->add_option("--in", cfg.in, "Input staircase (default stdin)");
  dil->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* del = app.add_subcommand("delta", "Specialize a staircase along a direction");
  del->add_option("--dir", dir, "Comma-separated direction, e.g. 1,-1,-1")->required();
  del->add_option("--in", cfg.in, "Input staircase (default stdin)");
  del->add_option("--out", cfg.out, "Output file (default stdout)");
  del->add_flag("--buckets", buckets, "Write the line decomposition as JSONL instead");

  auto* sum = app.add_subcommand("sum", "Stack staircases along an axis");
  sum->add_option("--axis", axis_text, "Axis, counted from 1")->required();
  sum->add_option("--in", inputs, "Input staircases, in stacking order")->required();
  sum->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* ver = app.add_subcommand("verify", "Run a verifier over a parameter grid, JSONL out");
  ver->add_option("kind", cfg.kind, "key-lemma | vanishing | strict | eight-points | limit-ideal")
      ->required()
      ->check(CLI::IsMember({"key-lemma", "vanishing", "strict", "eight-points", "limit-ideal"}));
  ver->add_option("--s", s_text, "Range of s, e.g. 2..5");
  ver->add_option("--d", d_text, "Range of dimensions");
  ver->add_option("--mu", mu_text, "Range of multiplicities");
  ver->add_option("--delta", delta_text, "Range of degrees");
  ver->add_option("--dir", dir, "Direction for limit-ideal (default: all strong with entries in -3..1)");
  ver->add_option("--in", cfg.in, "Staircase for limit-ideal (default stdin)");
  ver->add_option("--seed", seed_text, "Random seed (default $STAIRCASE_SEED or 20030101)");
  ver->add_option("--modulus", modulus_text, "Prime modulus of the oracle (default 2^61-1)");
  ver->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  ver->add_flag("--exact", cfg.exact, "Exact integer rank in the oracle");
  ver->add_flag("--no-oracle", no_oracle, "Skip the rank oracle");
  ver->add_flag("--lines", lines, "limit-ideal: also write one record per line");
  ver->add_flag("--probe-primes", probe, "limit-ideal: list small primes dividing det Q");
  ver->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* rep = app.add_subcommand("report", "Summarize a JSONL stream per claim");
  rep->add_option("--in", cfg.in, "JSONL input (default stdin)");

  std::vector<const char*> argv{"staircase"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return static_cast<int>(ExitCode::usage);
  }

  std::ofstream file;
  auto sink = [&]() -> std::ostream& {
    if (cfg.out.empty() || cfg.out == "-") return out;
    file.open(cfg.out, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot write '" + cfg.out + "'");
    return file;
  };

  try {
    if (*regular) {
      if (dim < 1 || dim > static_cast<int>(kMaxDim)) throw UsageError("--dim must be in 1..8");
      if (mu < 0) throw UsageError("--mu must be >= 0");
      sink() << serialize(regular_staircase(static_cast<std::size_t>(dim), mu)) << '\n';
      return 0;
    }
    if (*dil) {
      const Staircase e = read_staircase(cfg.in, in);
      const auto f = parse_vector(by);
      Staircase r = f.size() == 1 ? dilate(f[0], e) : dilate(LatticePoint(std::span<const Coord>(f)), e);
      sink() << serialize(r) << '\n';
      return 0;
    }
    if (*del) {
      const Staircase e = read_staircase(cfg.in, in);
      const auto v = parse_vector(dir);
      const Direction delta(std::span<const Coord>(v.data(), v.size()));
      if (buckets) {
        sink() << dump_buckets(line_decompose(e.points(), delta));
      } else {
        sink() << serialize(delta_specialize(delta, e)) << '\n';
      }
      return 0;
    }
    if (*sum) {
      const auto axis = parse_vector(axis_text);
      if (axis.size() != 1 || axis[0] < 1) throw UsageError("--axis must be a single index >= 1");
      std::vector<Staircase> parts;
      for (const auto& path : inputs) parts.push_back(read_staircase(path, in));
      sink() << serialize(sum_along_axis(static_cast<std::size_t>(axis[0] - 1), parts)) << '\n';
      return 0;
    }
    if (*rep) {
      return static_cast<int>(detail::report(read_input(cfg.in, in), out));
    }

    // verify
    if (!s_text.empty()) cfg.s = parse_range(s_text);
    if (!d_text.empty()) cfg.d = parse_range(d_text);
    if (!mu_text.empty()) cfg.mu = parse_range(mu_text);
    if (!delta_text.empty()) cfg.delta = parse_range(delta_text);
    if (!seed_text.empty()) {
      cfg.seed = parse_u64(seed_text, "seed");
    } else if (const char* env = std::getenv("STAIRCASE_SEED"); env && *env) {
      cfg.seed = parse_u64(env, "STAIRCASE_SEED");
    }
    if (!modulus_text.empty()) {
      cfg.modulus = parse_u64(modulus_text, "modulus");
      if (cfg.modulus >= (std::uint64_t{1} << 62) || !is_prime_u64(cfg.modulus)) {
        throw UsageError("--modulus must be a prime below 2^62");
      }
    }
    cfg.oracle = !no_oracle;
    for (Coord m : cfg.mu) {
      if (m < 1) throw UsageError("--mu values must be >= 1");
    }
    for (Coord x : cfg.delta) {
      if (x < 0) throw UsageError("--delta values must be >= 0");
    }

    std::vector<Outcome> outcomes;
    if (cfg.kind == "limit-ideal") {
      const Staircase e = read_staircase(cfg.in, in);
      std::vector<Direction> dirs;
      if (!dir.empty()) {
        const auto v = parse_vector(dir);
        dirs.emplace_back(LatticePoint(std::span<const Coord>(v)));
        if (!dirs.back().is_strong()) throw InvalidDirection(dirs.back().to_string() + " is not strongly valid");
      } else {
        for (const auto& g : strong_directions(e.dim(), 3)) {
          const auto c = g.coords();
          if (std::all_of(c.begin(), c.end(), [](Coord x) { return x >= -3 && x <= 1; })) dirs.push_back(g);
        }
      }
      std::ostream& os = sink();
      outcomes = detail::verify_limit_ideal_dirs(cfg, e, dirs, lines, probe, os);
    } else {
      std::ostream& os = sink();
      if (cfg.kind == "key-lemma") outcomes = detail::verify_key_lemma_grid(cfg, os);
      else if (cfg.kind == "vanishing") outcomes = detail::verify_vanishing_grid(cfg, os);
      else if (cfg.kind == "strict") outcomes = detail::verify_strict_grid(cfg, os);
      else outcomes = detail::verify_eight_points_grid(cfg, os);
    }
    return static_cast<int>(detail::exit_for(outcomes));
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
  }
  return static_cast<int>(ExitCode::usage);
}

}  // namespace staircase::cli
