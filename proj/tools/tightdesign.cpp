// Copyright 2026 The tightdesign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// tightdesign: command-line driver for the identity checks, bounds, prime
// gap tables, the integrality search and the certificate pipeline.
//
// Exit codes: 0 success, 1 verification failure, 2 resource/config error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <regex>
#include <thread>

#include "tight/errors.hpp"
#include "tight/identity_suite.hpp"
#include "tight/pipeline.hpp"
#include "tight/prime_engine.hpp"
#include "tight/search.hpp"
#include "tight/upper_bound.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kConfigError = 2;

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

// "a:b", "a..b" or a single "a".
Range parse_range(const std::string& text) {
  static const std::regex re(R"(^\s*(\d+)\s*(?:(?::|\.\.)\s*(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw tight::FormatError("bad range '" + text + "' (expected a:b)");
  Range r;
  r.lo = std::stoll(m[1]);
  r.hi = m[2].matched ? std::stoll(m[2]) : r.lo;
  if (r.hi < r.lo) throw tight::FormatError("empty range '" + text + "'");
  return r;
}

tight::Cutoff parse_cutoff(const std::string& text) {
  static const std::regex re(R"(^\s*(\d+)\s*(?:/\s*(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw tight::FormatError("bad cutoff '" + text + "' (expected n or n/d)");
  return tight::Cutoff::ratio(std::stoll(m[1]), m[2].matched ? std::stoll(m[2]) : 1);
}

struct Options {
  std::string s_range;
  std::int64_t s_max = 12;
  std::int64_t x_max = 10'000'000;
  std::int64_t chunk_size = std::int64_t{1} << 24;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t sieve_limit = 1'300'000'000;
  int precision_bits = 128;
  std::string checkpoint;
  bool resume = false;
  std::string output;
  std::string cutoff;
  std::int64_t r = 0;
  std::int64_t i_max = 6;
  bool mutate = false;
  std::string gap_table;
};

// Stdout unless --output was given.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::trunc);
      if (!*file_) throw tight::ResourceError("cannot open output file " + path);
    }
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int cmd_identities(const Options& o) {
  if (o.s_max < 2) throw tight::FormatError("--s-max must be >= 2");
  Sink sink(o.output);
  bool ok = true;
  for (const auto& rep : tight::verify_all(o.s_max, o.workers, tight::Mutation{o.mutate})) {
    sink.out() << rep.record() << '\n';
    if (!rep.pass) {
      ok = false;
      std::cerr << "identity failure: " << rep.record() << '\n';
    }
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_witt(const Options& o) {
  Sink sink(o.output);
  const auto rep = tight::run_witt();
  for (const auto& line : rep.lines) sink.out() << line << '\n';
  return rep.ok ? kOk : kVerifyFailed;
}

int cmd_bounds_upper(const Options& o) {
  const Range s = parse_range(o.s_range.empty() ? "10:287" : o.s_range);
  Sink sink(o.output);
  for (std::int64_t v = s.lo; v <= s.hi; ++v) {
    const std::int64_t r = o.r > 0 ? o.r : tight::default_r(v);
    const auto rep = o.cutoff.empty() ? tight::best_bound(v, r, o.workers, o.precision_bits)
                                      : tight::v_upper(v, r, parse_cutoff(o.cutoff), o.precision_bits);
    sink.out() << "upper " << rep.record() << '\n';
  }
  return kOk;
}

int cmd_bounds_lower(const Options& o) {
  const Range s = parse_range(o.s_range.empty() ? "2:287" : o.s_range);
  if (s.lo < 1) throw tight::FormatError("bounds-lower needs s >= 1");
  Sink sink(o.output);
  const auto gaps = tight::maximal_gaps(o.sieve_limit, o.workers);
  for (std::int64_t v = s.lo; v <= s.hi; ++v) {
    const auto rho = tight::checked_rho(gaps, static_cast<std::uint64_t>(v + 1));
    if (!rho) {
      throw tight::NotFoundBelowLimit("no prime gap >= " + std::to_string(v + 1) + " below --sieve-limit " +
                                      std::to_string(o.sieve_limit));
    }
    sink.out() << "lower s=" << v << " rho_s_plus_1=" << *rho << " v_lower=" << (*rho + 2 * static_cast<std::uint64_t>(v))
               << '\n';
  }
  return kOk;
}

int cmd_rho(const Options& o) {
  const Range s = parse_range(o.s_range.empty() ? "2:288" : o.s_range);
  if (s.lo < 2) throw tight::FormatError("rho needs s >= 2");
  Sink sink(o.output);
  const auto gaps = tight::maximal_gaps(o.sieve_limit, o.workers);
  if (!o.gap_table.empty()) {
    std::ofstream table(o.gap_table, std::ios::trunc);
    if (!table) throw tight::ResourceError("cannot open " + o.gap_table);
    tight::write_gap_table(table, gaps);
  }
  for (std::int64_t v = s.lo; v <= s.hi; ++v) {
    const auto rho = tight::checked_rho(gaps, static_cast<std::uint64_t>(v));
    if (!rho) {
      throw tight::NotFoundBelowLimit("rho(" + std::to_string(v) + ") not found below --sieve-limit " +
                                      std::to_string(o.sieve_limit));
    }
    sink.out() << "rho s=" << v << " value=" << *rho << '\n';
  }
  return kOk;
}

int cmd_search(const Options& o) {
  const Range s = parse_range(o.s_range.empty() ? "10:287" : o.s_range);
  tight::SearchConfig cfg;
  cfg.s_lo = s.lo;
  cfg.s_hi = s.hi;
  cfg.x_max = o.x_max;
  cfg.chunk_size = o.chunk_size;
  cfg.workers = o.workers;
  cfg.i_max = o.i_max;
  cfg.checkpoint_path = o.checkpoint;
  cfg.resume = o.resume;
  if (cfg.s_lo < 1 || cfg.s_hi > tight::kMaxSearchS) {
    throw tight::FormatError("search s range must lie in [1, " + std::to_string(tight::kMaxSearchS) + "]");
  }
  if (cfg.i_max < 1 || cfg.i_max > cfg.s_lo) throw tight::FormatError("--i-max must lie in [1, s_lo]");
  if (o.resume && o.checkpoint.empty()) throw tight::FormatError("--resume needs --checkpoint");
  Sink sink(o.output);
  const auto result = tight::run_search(cfg, [](const tight::Hit& h) {
    std::cerr << "HIT " << h.s << ' ' << h.x << ' ' << h.y << '\n';
  });
  for (const auto& h : result.hits) {
    sink.out() << "hit s=" << h.s << " x=" << h.x << " y=" << h.y << " alphas=";
    for (std::size_t i = 0; i < h.alphas.size(); ++i) sink.out() << (i ? "," : "") << h.alphas[i].get_str();
    sink.out() << " phi_checked=" << (h.phi_checked ? 1 : 0)
               << " phi_integral_roots=" << (h.phi_roots ? 1 : 0) << '\n';
  }
  sink.out() << "search s=" << cfg.s_lo << ":" << cfg.s_hi << " x=1:" << cfg.x_max << " chunks=" << result.chunks.size()
             << " resumed=" << result.resumed_chunks << " hits=" << result.hits.size() << '\n';
  return result.hits.empty() ? kOk : kVerifyFailed;
}

int cmd_pipeline(const Options& o) {
  const Range s = parse_range(o.s_range.empty() ? "10:700" : o.s_range);
  tight::PipelineConfig cfg;
  cfg.s_lo = s.lo;
  cfg.s_hi = s.hi;
  cfg.sieve_limit = o.sieve_limit;
  cfg.precision = o.precision_bits;
  cfg.workers = o.workers;
  cfg.checkpoint_path = o.checkpoint;
  if (cfg.s_lo < 10) {
    throw tight::FormatError("pipeline covers s >= 10 only; s in [2, 9] is settled in the literature");
  }
  Sink sink(o.output);
  bool all = true;
  for (const auto& c : tight::run_pipeline(cfg)) {
    sink.out() << c.record() << '\n';
    all = all && c.contradiction;
  }
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tight 2s-design nonexistence toolkit"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--output", o.output, "Write records here instead of stdout");
  };

  auto* identities = app.add_subcommand("identities", "Verify every identity family for s <= s_max");
  identities->add_option("--s-max", o.s_max, "Largest s");
  identities->add_flag("--mutate", o.mutate, "Perturb every right-hand side (must fail)");
  common(identities);

  auto* witt = app.add_subcommand("witt", "Regression report for the Witt 4-designs");
  common(witt);

  auto* upper = app.add_subcommand("bounds-upper", "exp(kappa/psi) + 2s - 1 per s");
  upper->add_option("--s-range", o.s_range, "s range a:b");
  upper->add_option("--r", o.r, "Even r (default 2 floor(s/2))");
  upper->add_option("--b", o.cutoff, "Fixed cutoff n or n/d (default: best integer b)");
  upper->add_option("--precision-bits", o.precision_bits, "MPFR working precision")->check(CLI::Range(64, 4096));
  common(upper);

  auto* lower = app.add_subcommand("bounds-lower", "rho_{s+1} + 2s per s");
  lower->add_option("--s-range", o.s_range, "s range a:b");
  lower->add_option("--sieve-limit", o.sieve_limit, "Largest integer sieved");
  common(lower);

  auto* rho = app.add_subcommand("rho", "First-occurrence prime gaps rho_s");
  rho->add_option("--s-range", o.s_range, "s range a:b");
  rho->add_option("--sieve-limit", o.sieve_limit, "Largest integer sieved");
  rho->add_option("--gap-table", o.gap_table, "Also write gap<TAB>first_prime lines here");
  common(rho);

  auto* search = app.add_subcommand("search", "Integrality search over (s, x, y)");
  search->add_option("--s-range", o.s_range, "s range a:b (default 10:287)");
  search->add_option("--x-max", o.x_max, "Largest x")->check(CLI::PositiveNumber);
  search->add_option("--chunk-size", o.chunk_size, "x values per chunk")->check(CLI::PositiveNumber);
  search->add_option("--i-max", o.i_max, "Check alpha_1..alpha_imax");
  search->add_option("--checkpoint", o.checkpoint, "Checkpoint file");
  search->add_flag("--resume", o.resume, "Skip chunks already done in the checkpoint");
  common(search);

  auto* pipeline = app.add_subcommand("pipeline", "Per-s certificates over an s range");
  pipeline->add_option("--s-range", o.s_range, "s range a:b (s >= 10)");
  pipeline->add_option("--sieve-limit", o.sieve_limit, "Largest integer sieved for rho");
  pipeline->add_option("--precision-bits", o.precision_bits, "MPFR working precision")->check(CLI::Range(64, 4096));
  pipeline->add_option("--checkpoint", o.checkpoint, "Search checkpoint attesting Case 3 coverage");
  common(pipeline);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }

  try {
    if (*identities) return cmd_identities(o);
    if (*witt) return cmd_witt(o);
    if (*upper) return cmd_bounds_upper(o);
    if (*lower) return cmd_bounds_lower(o);
    if (*rho) return cmd_rho(o);
    if (*search) return cmd_search(o);
    if (*pipeline) return cmd_pipeline(o);
  } catch (const tight::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const tight::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return kConfigError;
  } catch (const tight::NotFoundBelowLimit& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return kConfigError;
  } catch (const tight::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  }
  return kConfigError;
}
