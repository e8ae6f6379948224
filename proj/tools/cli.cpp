#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "recurring/fplinalg.hpp"
#include "recurring/period.hpp"
#include "recurring/recurrence.hpp"
#include "recurring/report.hpp"
#include "recurring/semilocal.hpp"

namespace recurring::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { kTable, kJson, kCsv };

const std::map<std::string, Format> kFormats{{"table", Format::kTable}, {"json", Format::kJson}, {"csv", Format::kCsv}};

std::vector<BigInt> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (!tok.empty() && tok[0] == '+') tok.erase(0, 1);
    BigInt v;
    if (tok.empty() || v.set_str(tok, 10) != 0) throw UsageError(flag + ": '" + text + "' is not a comma-separated integer list");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(flag + ": empty list");
  return out;
}

std::vector<Prime> parse_primes(const std::string& text) {
  std::vector<Prime> ps;
  for (const BigInt& v : parse_int_list(text, "--p")) {
    if (v < 0 || !v.fits_ulong_p()) throw Error(Errc::kNotPrime, v.get_str() + " is not a prime below 2^31");
    ps.emplace_back(v.get_ui());
  }
  return ps;
}

json t_json(const std::vector<BigInt>& t) {
  json a = json::array();
  for (const auto& x : t) a.push_back(x.fits_slong_p() ? json(x.get_si()) : json(x.get_str()));
  return a;
}

template <class R>
std::vector<R> parallel_map(std::size_t n, const std::function<R(std::size_t)>& fn) {
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        slots[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), n));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

// Machine output goes to --out when given.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw UsageError("--out: cannot open '" + path + "' for writing");
    stream_ = &file_;
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void emit_reports(const std::vector<PrimeReport>& reports, const CorePoly& core, const CoreFacts& facts, Format fmt,
                  std::ostream& os) {
  switch (fmt) {
    case Format::kJson:
      for (const auto& r : reports) os << to_json(r).dump() << '\n';
      break;
    case Format::kCsv:
      os << csv_header() << '\n';
      for (const auto& r : reports) os << to_csv_row(r) << '\n';
      break;
    case Format::kTable:
      os << "core " << core.to_string() << "  C = " << core.as_poly().to_string()
         << "  discriminant " << facts.discriminant.get_str() << "  exact period "
         << (facts.exact_period ? std::to_string(*facts.exact_period) : "-") << '\n';
      os << table_header() << '\n';
      for (const auto& r : reports) os << to_table_row(r) << '\n';
      break;
  }
}

std::vector<PrimeReport> analyze_all(const CorePoly& core, const std::vector<Prime>& primes, const CoreFacts& facts,
                                     std::uint64_t check_limit) {
  const ConsistencyOptions opts{check_limit};
  return parallel_map<PrimeReport>(primes.size(),
                                   [&](std::size_t i) { return analyze_prime(core, primes[i], facts, opts); });
}

struct CommonOpts {
  std::string t;
  std::string format = "table";
  std::string out;
  std::uint64_t check_limit = 100'000;
};

void add_common(CLI::App* sub, CommonOpts& o, bool with_check_limit) {
  sub->add_option("--t", o.t, "core coefficients t1,...,tk")->required();
  sub->add_option("--format", o.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  sub->add_option("--out", o.out, "write machine output to FILE");
  if (with_check_limit)
    sub->add_option("--check-limit", o.check_limit,
                    "cross-check periods by state-space iteration when p^k is at most this");
}

int cmd_analyze(const CommonOpts& o, const std::string& primes_text, std::ostream& out) {
  const CorePoly core = new_core(parse_int_list(o.t, "--t"));
  const std::vector<Prime> primes = parse_primes(primes_text);
  const CoreFacts facts = CoreFacts::of(core);
  const auto reports = analyze_all(core, primes, facts, o.check_limit);
  Sink sink(o.out, out);
  emit_reports(reports, core, facts, kFormats.at(o.format), *sink);
  return kExitOk;
}

int cmd_sweep(const CommonOpts& o, std::uint64_t pmax, std::ostream& out, std::ostream& err) {
  const CorePoly core = new_core(parse_int_list(o.t, "--t"));
  std::vector<Prime> primes;
  for (Residue p : primes_up_to(pmax)) primes.emplace_back(p);
  const CoreFacts facts = CoreFacts::of(core);
  const auto reports = analyze_all(core, primes, facts, o.check_limit);
  const Format fmt = kFormats.at(o.format);
  Sink sink(o.out, out);
  emit_reports(reports, core, facts, fmt, *sink);

  std::size_t checked = 0, agree = 0;
  std::string ramified, singular;
  for (const auto& r : reports) {
    if (r.thm67_agree) {
      ++checked;
      agree += *r.thm67_agree;
    }
    if (r.classification == "ramified") ramified += (ramified.empty() ? "" : ",") + std::to_string(r.p);
    if (r.singular_companion) singular += (singular.empty() ? "" : ",") + std::to_string(r.p);
  }
  std::ostream& footer = fmt == Format::kTable ? *sink : err;
  footer << "summary: " << reports.size() << " primes, period/ramification agreement " << agree << "/" << checked
         << ", ramified at " << (ramified.empty() ? "none" : ramified) << ", singular at "
         << (singular.empty() ? "none" : singular) << '\n';
  return agree == checked ? kExitOk : kExitPropertyFailure;
}

struct VerifyOpts {
  std::size_t k = 2;
  long bound = 5;
  std::uint64_t pmax = 31;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::string format = "table";
  std::string out;
  std::uint64_t check_limit = 4'000'000;
};

struct TrialOutcome {
  std::size_t checks = 0;
  std::vector<json> failures;
};

TrialOutcome verify_core(const CorePoly& core, const std::vector<Residue>& primes, std::uint64_t check_limit) {
  TrialOutcome res;
  for (Residue pv : primes) {
    const Prime p(pv);
    if (reduce(core.trailing(), p) == 0) continue;
    auto fail = [&](const char* check, const std::string& detail) {
      res.failures.push_back({{"check", check}, {"t", t_json(core.t())}, {"p", pv}, {"detail", detail}});
    };
    ++res.checks;
    try {
      period_consistent(core, p, {check_limit});
    } catch (const Error& e) {
      fail("period_consistent", e.what());
    }
    ++res.checks;
    try {
      const Thm67Record r = theorem_6_7_check(core, p);
      if (!r.agree)
        fail("thm67", "period " + r.period.get_str() + (r.p_divides_period ? " divisible" : " not divisible") +
                          " by p, C mod p " + (r.ramified ? "not squarefree" : "squarefree"));
    } catch (const Error& e) {
      fail("thm67", e.what());
    }
  }
  return res;
}

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
  std::mt19937_64 gen(o.seed);
  std::uniform_int_distribution<long> coeff(-o.bound, o.bound);
  std::vector<CorePoly> cores;
  cores.reserve(o.trials);
  for (std::size_t i = 0; i < o.trials; ++i) {
    std::vector<BigInt> t(o.k);
    for (auto& x : t) x = coeff(gen);
    while (t.back() == 0) t.back() = coeff(gen);
    cores.push_back(new_core(std::move(t)));
  }
  const std::vector<Residue> primes = primes_up_to(o.pmax);
  const auto outcomes = parallel_map<TrialOutcome>(
      cores.size(), [&](std::size_t i) { return verify_core(cores[i], primes, o.check_limit); });

  Sink sink(o.out, out);
  std::size_t checks = 0, failed = 0;
  for (const auto& oc : outcomes) {
    checks += oc.checks;
    failed += oc.failures.size();
    for (const auto& f : oc.failures) *sink << f.dump() << '\n';
  }
  if (kFormats.at(o.format) == Format::kTable) {
    *sink << "verify: " << cores.size() << " cores, " << checks << " checks, " << checks - failed << " passed, "
          << failed << " failed\n";
  } else {
    *sink << json{{"cores", cores.size()}, {"checks", checks}, {"passed", checks - failed}, {"failed", failed},
                  {"seed", o.seed}}
                 .dump()
          << '\n';
  }
  return failed == 0 ? kExitOk : kExitPropertyFailure;
}

int cmd_sequence(const CommonOpts& o, std::int64_t from, std::int64_t to, std::optional<std::uint64_t> mod,
                 std::ostream& out) {
  if (from > to) throw UsageError("--from must not exceed --to");
  const CorePoly core = new_core(parse_int_list(o.t, "--t"));
  std::optional<Prime> modulus;
  if (mod) modulus = Prime(*mod);
  const auto f = gfp_range(core, from, to, modulus);
  const auto g = glp_range(core, from, to, modulus);
  Sink sink(o.out, out);
  std::ostream& os = *sink;
  const Format fmt = kFormats.at(o.format);
  if (fmt == Format::kCsv) os << "n,F,G\n";
  std::size_t wn = 1, wf = 1;
  for (std::size_t i = 0; i < f.size(); ++i) {
    wn = std::max(wn, std::to_string(from + static_cast<std::int64_t>(i)).size());
    wf = std::max(wf, f[i].get_str().size());
  }
  if (fmt == Format::kTable) os << std::left << std::setw(wn + 2) << "n" << std::setw(wf + 2) << "F" << "G\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::int64_t n = from + static_cast<std::int64_t>(i);
    switch (fmt) {
      case Format::kJson:
        os << json{{"n", n}, {"F", f[i].get_str()}, {"G", g[i].get_str()}}.dump() << '\n';
        break;
      case Format::kCsv:
        os << n << ',' << f[i].get_str() << ',' << g[i].get_str() << '\n';
        break;
      case Format::kTable:
        os << std::left << std::setw(wn + 2) << n << std::setw(wf + 2) << f[i].get_str() << g[i].get_str() << '\n';
        break;
    }
  }
  return kExitOk;
}

std::string state_text(const FpVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

int cmd_orbit(const CommonOpts& o, std::uint64_t p_value, const std::string& m_text, std::uint64_t max_states,
              std::ostream& out) {
  const CorePoly core = new_core(parse_int_list(o.t, "--t"));
  const Prime p(p_value);
  const auto m = parse_int_list(m_text, "--m");
  if (m.size() != core.degree())
    throw UsageError("--m needs " + std::to_string(core.degree()) + " entries, got " + std::to_string(m.size()));
  FpVector v;
  for (const auto& x : m) v.push_back(reduce(x, p));
  const FpMatrix a = FpMatrix::from_int(companion(core), p);
  const OrbitShape shape = orbit_shape(v, a);
  if (shape.preperiod + shape.period > max_states)
    throw Error(Errc::kHypothesisNotMet, "orbit has " + std::to_string(shape.preperiod + shape.period) +
                                             " states, more than --max-states " + std::to_string(max_states));
  const OrbitRecord orbit = vector_orbit(v, a);
  Sink sink(o.out, out);
  std::ostream& os = *sink;
  const std::uint64_t length = orbit.states.size();
  switch (kFormats.at(o.format)) {
    case Format::kJson:
      os << json{{"t", t_json(core.t())}, {"p", p.value()}, {"m", v}, {"states", orbit.states},
                 {"length", length}, {"preperiod", orbit.preperiod}, {"period", orbit.period}}
                .dump()
         << '\n';
      break;
    case Format::kCsv:
      os << "index,state\n";
      for (std::size_t i = 0; i < orbit.states.size(); ++i) os << i << ",\"" << state_text(orbit.states[i]) << "\"\n";
      break;
    case Format::kTable:
      for (const auto& s : orbit.states) os << state_text(s) << '\n';
      os << "length " << length << '\n';
      if (orbit.preperiod > 0) os << "preperiod " << orbit.preperiod << "\nperiod " << orbit.period << '\n';
      break;
  }
  return kExitOk;
}

}  // namespace

unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("RECURRING_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
  }
  return hw;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear recurrences, their periods mod p and the rings Z[X]/(C) mod p", "recurring"};
  app.require_subcommand(1);

  CommonOpts analyze_o;
  std::string primes_text;
  auto* analyze = app.add_subcommand("analyze", "report on one core at the given primes");
  add_common(analyze, analyze_o, true);
  analyze->add_option("--p", primes_text, "prime or comma-separated primes")->required();

  CommonOpts sweep_o;
  std::uint64_t pmax = 0;
  auto* sweep = app.add_subcommand("sweep", "report on one core at every prime up to --pmax");
  add_common(sweep, sweep_o, true);
  sweep->add_option("--pmax", pmax, "largest prime to include (at most 10^6)")
      ->required()
      ->check(CLI::Range(std::uint64_t{0}, std::uint64_t{1'000'000}));

  VerifyOpts verify_o;
  auto* verify = app.add_subcommand("verify", "randomized period and ramification campaign");
  verify->add_option("--k", verify_o.k, "degree of the sampled cores")->required()->check(CLI::Range(1, 64));
  verify->add_option("--coeff-bound", verify_o.bound, "sample |t_j| <= bound")->required()->check(CLI::Range(1L, 1'000'000L));
  verify->add_option("--pmax", verify_o.pmax, "largest prime")->check(CLI::Range(std::uint64_t{0}, std::uint64_t{1'000'000}));
  verify->add_option("--trials", verify_o.trials, "number of sampled cores");
  verify->add_option("--seed", verify_o.seed, "generator seed");
  verify->add_option("--format", verify_o.format, "table or json summary")->check(CLI::IsMember({"table", "json", "csv"}));
  verify->add_option("--out", verify_o.out, "write output to FILE");
  verify->add_option("--check-limit", verify_o.check_limit, "state-space cross-check limit on p^k");

  CommonOpts seq_o;
  std::int64_t from = 0, to = 0;
  std::optional<std::uint64_t> mod;
  auto* sequence = app.add_subcommand("sequence", "print n, F_n, G_n");
  add_common(sequence, seq_o, false);
  sequence->add_option("--from", from, "first index")->required();
  sequence->add_option("--to", to, "last index")->required();
  sequence->add_option("--mod", mod, "reduce modulo this prime");

  CommonOpts orbit_o;
  std::uint64_t orbit_p = 0, max_states = 1'000'000;
  std::string m_text;
  auto* orbit = app.add_subcommand("orbit", "orbit of a row vector under the companion matrix mod p");
  add_common(orbit, orbit_o, false);
  orbit->add_option("--p", orbit_p, "prime")->required();
  orbit->add_option("--m", m_text, "starting vector m0,...,m(k-1)")->required();
  orbit->add_option("--max-states", max_states, "refuse orbits longer than this");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_o, primes_text, out);
    if (*sweep) return cmd_sweep(sweep_o, pmax, out, err);
    if (*verify) return cmd_verify(verify_o, out);
    if (*sequence) return cmd_sequence(seq_o, from, to, mod, out);
    if (*orbit) return cmd_orbit(orbit_o, orbit_p, m_text, max_states, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::kInternalInconsistency ? kExitPropertyFailure : kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitPropertyFailure;
  }
  return kExitUsage;
}

}  // namespace recurring::cli
