// Runs every acceptance criterion and prints one PASS/FAIL line per
// criterion. Exit status is nonzero when any criterion fails.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli.hpp"
#include "staircase/staircase.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace staircase;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

// 1 -----------------------------------------------------------------------
Outcome key_lemma_grid() {
  Outcome out;
  const auto t0 = Clock::now();
  int n = 0;
  for (Coord s = 2; s <= 5; ++s) {
    for (std::size_t d = 2; d <= 5; ++d) {
      if (!key_lemma_admissible(s, d)) continue;
      for (Coord mu = 1; mu <= 4; ++mu) {
        const auto r = verify_key_lemma(s, d, mu);
        ++n;
        // Inclusion re-checked against the brute-force R_{s*mu+1}.
        bool ok = r.pass;
        for (const auto& p : oracle::regular(d, s * mu + 1)) ok = ok && r.image.has(p);
        if (!ok) out.fail("(" + std::to_string(s) + "," + std::to_string(d) + "," + std::to_string(mu) + ") fails");
      }
    }
  }
  const double t = seconds_since(t0);
  if (t >= 30) out.fail("took " + fmt_seconds(t));
  if (out.pass) out.detail = std::to_string(n) + " instances in " + fmt_seconds(t);
  return out;
}

// 2 -----------------------------------------------------------------------
Outcome strict_grid() {
  Outcome out;
  int n = 0;
  for (Coord s = 1; s <= 5; ++s) {
    for (std::size_t d = 2; d <= 4; ++d) {
      for (Coord mu = 1; mu <= 4; ++mu) {
        const auto dil = dilate(s, regular_staircase(d, mu));
        for (Coord delta = 0; delta < s * mu; ++delta) {
          ++n;
          const auto rep = verify_strict_theorem(s, d, mu, delta);
          // Floor criterion, point by point.
          bool ok = true;
          for (const auto& x : oracle::regular(d, delta + 1)) {
            Coord q = 0;
            for (std::size_t i = 0; i < d; ++i) q += x[i] / s;
            ok = ok && q < mu && dil.has(x);
          }
          if (!rep.passed() || !ok) {
            out.fail("s=" + std::to_string(s) + " d=" + std::to_string(d) + " mu=" + std::to_string(mu) +
                     " delta=" + std::to_string(delta));
          }
        }
      }
    }
  }
  if (out.pass) out.detail = std::to_string(n) + " instances";
  return out;
}

// 3 -----------------------------------------------------------------------
Outcome nagata_instances() {
  Outcome out;
  const auto t0 = Clock::now();
  const std::int64_t ranks[] = {15, 45, 91};
  for (Coord mu = 1; mu <= 3; ++mu) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto r = oracle_fat_points(2, 4 * mu, mu, 16, seed);
      const auto rows = 16 * oracle::binom(mu + 1, 2);
      if (r.ell != 0 || r.rank != ranks[mu - 1] || r.ambient != ranks[mu - 1] ||
          rows != static_cast<std::uint64_t>(16 * mu * (mu + 1) / 2) ||
          r.virtual_dim != -(2 * mu - 1)) {
        out.fail("mu=" + std::to_string(mu) + " seed=" + std::to_string(seed) + " ell=" + std::to_string(r.ell) +
                 " rank=" + std::to_string(r.rank));
      }
    }
  }
  const double t = seconds_since(t0);
  if (t >= 5) out.fail("took " + fmt_seconds(t));
  if (out.pass) out.detail = "15 runs, ranks 15/45/91, " + fmt_seconds(t);
  return out;
}

// 4 -----------------------------------------------------------------------
Outcome vanishing_cross_checks() {
  Outcome out;
  const auto t0 = Clock::now();
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto a = oracle_fat_points(3, 6, 2, 27, seed);
    if (a.ell != 0 || a.ambient != 84) out.fail("(3,3,2,6) seed " + std::to_string(seed) + " ell=" + std::to_string(a.ell));
    const auto b = oracle_fat_points(4, 4, 2, 16, seed);
    if (b.ell != 0 || b.ambient != 70) out.fail("(2,4,2,4) seed " + std::to_string(seed) + " ell=" + std::to_string(b.ell));
  }
  VerifyOptions no_oracle;
  no_oracle.run_oracle = false;
  if (!verify_vanishing_theorem(3, 3, 2, 6, no_oracle).passed()) out.fail("chain route (3,3,2,6)");
  if (!verify_vanishing_theorem(2, 4, 2, 4, no_oracle).passed()) out.fail("chain route (2,4,2,4)");
  const double t = seconds_since(t0);
  if (t >= 10) out.fail("took " + fmt_seconds(t));
  if (out.pass) out.detail = "10 oracle runs plus chain route, " + fmt_seconds(t);
  return out;
}

// 5 -----------------------------------------------------------------------
Outcome eight_points_grid() {
  Outcome out;
  int n = 0;
  for (Coord mu = 1; mu <= 3; ++mu) {
    const auto e = delta_specialize(Direction{1, -1, -1}, dilate(2, regular_staircase(3, mu)));
    for (Coord delta = 0; delta <= 2 * mu + 3; ++delta) {
      const std::int64_t v = static_cast<std::int64_t>(oracle::binom(delta + 3, 3)) -
                             8 * static_cast<std::int64_t>(oracle::binom(mu + 2, 3));
      const std::int64_t expected = std::max<std::int64_t>(0, v);
      std::int64_t count = 0;
      for (const auto& x : oracle::regular(3, delta + 1)) count += e.has(x) ? 0 : 1;
      if (count != expected) out.fail("count mu=" + std::to_string(mu) + " delta=" + std::to_string(delta));
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        ++n;
        VerifyOptions opt;
        opt.seed = seed;
        const auto rep = verify_eight_points(mu, delta, opt);
        if (!rep.passed() || rep.fields["ell"] != expected || rep.fields["oracle_ell"] != expected ||
            rep.fields["sandwich"] != true) {
          out.fail("mu=" + std::to_string(mu) + " delta=" + std::to_string(delta) + " seed=" + std::to_string(seed) +
                   ": " + rep.to_json().dump());
        }
      }
    }
  }
  if (out.pass) out.detail = std::to_string(n) + " runs";
  return out;
}

// 6 -----------------------------------------------------------------------
std::vector<Staircase> limit_corpus() {
  std::vector<Staircase> c;
  auto add = [&](const Staircase& e) {
    if (!e.empty() && e.size() <= 200) c.push_back(e);
  };
  for (Coord m = 1; m <= 8; ++m) add(regular_staircase(2, m));
  for (Coord m = 1; m <= 5; ++m) add(regular_staircase(3, m));
  for (Coord m = 1; m <= 4; ++m) add(regular_staircase(4, m));
  for (Coord s = 2; s <= 4; ++s)
    for (Coord mu = 1; mu <= 3; ++mu) add(dilate(s, regular_staircase(2, mu)));
  for (Coord mu = 1; mu <= 2; ++mu) {
    add(dilate(2, regular_staircase(3, mu)));
    add(delta_specialize(Direction{1, -1, -1}, dilate(2, regular_staircase(3, mu))));
    add(dilate(2, regular_staircase(4, mu)));
  }
  add(dilate(3, regular_staircase(3, 1)));
  add(dilate(LatticePoint{1, 3}, regular_staircase(2, 3)));
  add(dilate(LatticePoint{2, 1, 3}, regular_staircase(3, 2)));
  add(make_staircase(2, {{0, 0}, {0, 1}, {0, 2}}));
  oracle::Rng rng(6006);
  for (int k = 0; k < 24; ++k) {
    const auto d = static_cast<std::size_t>(2 + k % 3);
    add(oracle::as_staircase(d, oracle::random_staircase(rng, d, d == 2 ? 9 : (d == 3 ? 6 : 4), 3)));
  }
  return c;
}

Outcome limit_ideal_corpus() {
  Outcome out;
  const auto t0 = Clock::now();
  const auto corpus = limit_corpus();
  std::vector<std::vector<Direction>> dirs(5);
  for (std::size_t d = 2; d <= 4; ++d) {
    for (const auto& g : strong_directions(d, 3)) {
      const auto v = g.coords();
      if (std::all_of(v.begin(), v.end(), [](Coord x) { return x >= -3 && x <= 1; })) dirs[d].push_back(g);
    }
  }
  std::vector<Outcome> per(corpus.size());
  std::vector<std::size_t> lines(corpus.size(), 0);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < corpus.size();) {
      const auto& e = corpus[i];
      for (const auto& dir : dirs[e.dim()]) {
        LimitIdealOptions opt;
        const auto r = verify_limit_ideal(e, dir, opt);
        lines[i] += r.report.fields["lines"].get<std::size_t>();
        if (!r.report.passed() || r.report.fields["singular"] != 0) {
          per[i].fail(dir.to_string() + " on " + serialize(e) + ": " + r.report.to_json().dump());
        }
      }
    }
  };
  const unsigned hw = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < hw; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  std::size_t total_lines = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!per[i].pass) out.fail(per[i].detail);
    total_lines += lines[i];
  }
  if (corpus.size() < 50) out.fail("corpus has only " + std::to_string(corpus.size()) + " staircases");
  if (out.pass) {
    out.detail = std::to_string(corpus.size()) + " staircases, " + std::to_string(dirs[2].size()) + "/" +
                 std::to_string(dirs[3].size()) + "/" + std::to_string(dirs[4].size()) +
                 " directions in d=2/3/4, " + std::to_string(total_lines) + " lines, " +
                 fmt_seconds(seconds_since(t0));
  }
  return out;
}

// 7 -----------------------------------------------------------------------
Outcome property_suites() {
  Outcome out;
  const int n = 1000;
  const std::pair<const char*, std::function<std::string()>> suites[] = {
      {"cardinality conservation", [] { return props::delta_conservation(7001, n); }},
      {"idempotence", [] { return props::delta_idempotent(7002, n); }},
      {"union distributivity", [] { return props::delta_union(7003, n); }},
      {"monotonicity", [] { return props::delta_monotone(7004, n); }},
      {"staircase preservation", [] { return props::strong_preserves_staircases(7005, n); }},
      {"dilation and sum", [] { return props::dilation_and_sum(7006, n); }},
      {"fill hole", [] {
         int hits = 0;
         auto r = props::fill_hole(7007, n, &hits);
         if (r.empty() && hits < n / 4) r = "hypothesis held in only " + std::to_string(hits) + " cases";
         return r;
       }},
  };
  for (const auto& [name, fn] : suites) {
    const auto r = fn();
    if (!r.empty()) out.fail(std::string(name) + ": " + r);
  }
  if (out.pass) out.detail = "7 suites x 1000 cases";
  return out;
}

// 8 -----------------------------------------------------------------------
std::string cli_stream(const std::vector<std::vector<std::string>>& runs, const std::string& jobs, bool& ok) {
  std::string all;
  for (auto args : runs) {
    args.insert(args.end(), {"--jobs", jobs});
    std::istringstream in;
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    ok = ok && code == 0;
    all += out.str();
  }
  return all;
}

Outcome determinism() {
  Outcome out;
  std::vector<std::vector<std::string>> runs;
  for (int seed = 1; seed <= 5; ++seed) {
    const auto s = std::to_string(seed);
    runs.push_back({"verify", "vanishing", "--s", "4", "--d", "2", "--mu", "1..3", "--seed", s});
    runs.push_back({"verify", "vanishing", "--s", "3", "--d", "3", "--mu", "2", "--delta", "6", "--seed", s});
    runs.push_back({"verify", "vanishing", "--s", "2", "--d", "4", "--mu", "2", "--delta", "4", "--seed", s});
    if (seed <= 3) runs.push_back({"verify", "eight-points", "--mu", "1..3", "--seed", s});
  }
  bool ok = true;
  const auto a = cli_stream(runs, "1", ok);
  const auto b = cli_stream(runs, "1", ok);
  const auto c = cli_stream(runs, "4", ok);
  if (!ok) out.fail("some verify run did not exit 0");
  if (a.empty() || a != b) out.fail("repeated runs differ");
  if (a != c) out.fail("output depends on --jobs");
  if (out.pass) {
    out.detail = std::to_string(std::count(a.begin(), a.end(), '\n')) + " records, " + std::to_string(a.size()) +
                 " bytes, identical across 3 runs";
  }
  return out;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"key lemma grid", key_lemma_grid},
      {"strict theorem grid", strict_grid},
      {"l(2,4mu,mu^16)=0 via oracle", nagata_instances},
      {"oracle cross-checks (3,3,2,6) and (2,4,2,4)", vanishing_cross_checks},
      {"eight points grid", eight_points_grid},
      {"algebraic limit equals Delta(E)", limit_ideal_corpus},
      {"property suites", property_suites},
      {"deterministic JSONL", determinism},
  };
  int failed = 0;
  int k = 0;
  for (const auto& [name, fn] : criteria) {
    ++k;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << k << "  " << name << "  (" << o.detail << ")" << std::endl;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (8 - failed) << "/8" << std::endl;
  return failed ? 1 : 0;
}
