#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dynirr/dynamics.hpp"
#include "dynirr/harness.hpp"

using namespace dynirr;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

BigRat parse_rat(const std::string& s) {
  try {
    BigRat r(s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "not a rational number: " + s);
  }
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');)
    if (!part.empty()) out.push_back(part);
  return out;
}

ScanSummary load_summary(const std::string& path) {
  std::string file = path;
  if (file.size() < 5 || file.substr(file.size() - 5) != ".json") file = summary_path(path);
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + file);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, file + ": " + e.what());
  }
  return summary_from_json(j);
}

int cmd_classify(const std::string& poly, bool as_json) {
  const IntPoly f = parse_poly(poly);
  const ClassInfo c = classify(f);
  ordered_json j = class_json(c);
  if (as_json) {
    j["poly"] = to_string(f);
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "poly   " << to_string(f) << '\n'
            << "P1     " << (c.in_P1() ? "yes" : "no") << '\n'
            << "P2     " << to_string(c.in_P2) << '\n'
            << "P3     " << to_string(c.in_P3) << '\n';
  if (c.p1) std::cout << "f'     (" << to_string(c.p1->g) << ")^2 * (" << c.p1->a << "*x + " << c.p1->b << ")\n";
  if (c.gamma) std::cout << "gamma  " << to_string(*c.gamma) << "  " << j["gamma_orbit"].dump() << '\n';
  std::cout << "zero   " << j["zero_orbit"].dump() << '\n';
  return kExitOk;
}

int cmd_orbit(const std::string& poly, const std::string& start, unsigned max_steps) {
  const IntPoly f = parse_poly(poly);
  const OrbitResult r = is_preperiodic(f, parse_rat(start), max_steps);
  std::cout << orbit_json(r).dump() << '\n';
  return kExitOk;
}

int cmd_resultants(const std::string& poly, unsigned n_from, unsigned n_to) {
  const IntPoly f = parse_poly(poly);
  if (n_from < 2 || n_to < n_from) throw Error(ErrorCode::InvalidArgument, "need 2 <= n-from <= n-to");
  for (unsigned n = n_from; n <= n_to; ++n) {
    const ResDecomp r = res_decompose(f, n);
    ordered_json j;
    j["n"] = n;
    j["nu"] = r.nu;
    j["u"] = to_string(r.u);
    std::cout << j.dump() << '\n';
  }
  return kExitOk;
}

int cmd_scan(ScanConfig cfg, const std::string& poly) {
  cfg.poly = parse_poly(poly);
  const ScanSummary s = run_scan_to_files(cfg);
  std::cout << summary_json(s).dump(2) << '\n';
  return s.conserved() ? kExitOk : kExitCheckFailed;
}

int cmd_sums(const std::string& poly, std::uint64_t q_lo, std::uint64_t q_hi, unsigned big_n, unsigned t,
             std::optional<unsigned long> z_opt, bool flipped, unsigned threads) {
  const IntPoly f = parse_poly(poly);
  if (q_lo < 3 || q_hi < q_lo) throw Error(ErrorCode::InvalidArgument, "need 3 <= q-lo <= q-hi");
  const WindowSets ws = build_window_sets(f, big_n, t);
  const SResult s = compute_S(f, q_lo, q_hi, ws, flipped ? SumMode::Flipped : SumMode::Direct, threads);
  const unsigned long z =
      z_opt.value_or(std::max(2ul, static_cast<unsigned long>(std::floor(std::pow(static_cast<double>(q_lo), 0.25)))));

  ordered_json j;
  j["poly"] = to_string(f);
  j["mode"] = flipped ? "flipped" : "direct";
  j["N_set"] = ws.N_set;
  j["M_set"] = ws.M_set;
  j["S"] = to_string(s.S);
  j["good_primes"] = s.per_prime.size();
  j["skipped"] = s.skipped;
  j["z"] = z;
  if (z <= kExactSelbergLimit) {
    const BigRat T = compute_T(ws, q_lo, q_hi, selberg_weights_exact(z));
    j["T"] = to_string(T);
    j["T_approx"] = T.get_d();
  } else {
    j["T_approx"] = compute_T(ws, q_lo, q_hi, selberg_weights_approx(z));
  }
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_sieve_check(unsigned long z, unsigned long q_max) {
  ordered_json j;
  j["z"] = z;
  j["q_max"] = q_max;
  std::uint64_t bad = 0;
  if (z <= kExactSelbergLimit) {
    const auto W = selberg_weights_exact(z);
    for (unsigned long q = 1; q <= q_max; ++q)
      if (sieve_indicator_sum(q, W) != inner_square(q, W)) ++bad;
    j["exact"] = true;
    j["support"] = W.combined.size();
    j["weight_l1"] = weight_l1(W).get_d();
  } else {
    const auto W = selberg_weights_approx(z);
    for (unsigned long q = 1; q <= q_max; ++q)
      if (std::abs(sieve_indicator_sum(q, W) - inner_square(q, W)) > 1e-9) ++bad;
    j["exact"] = false;
    j["support"] = W.combined.size();
    j["weight_l1"] = weight_l1(W);
  }
  j["mismatches"] = bad;
  std::cout << j.dump(2) << '\n';
  return bad == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_verify(std::uint64_t seed) {
  const VerifyReport r = verify_suite(seed);
  for (const auto& c : r.checks)
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << c.detail << '\n';
  return r.all_passed() ? kExitOk : kExitCheckFailed;
}

int cmd_report(const std::string& inputs, const std::string& out_path) {
  std::vector<ScanSummary> summaries;
  for (const auto& path : split_commas(inputs)) summaries.push_back(load_summary(path));
  if (summaries.empty()) throw Error(ErrorCode::InvalidArgument, "no input files");
  std::ofstream out(out_path);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + out_path);
  out << decay_report(summaries);
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + out_path);
  if (!ratio_nonincreasing(decay_rows(summaries)))
    std::cerr << "warning: survivors*log(Q)/Q is not non-increasing in Q\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamical irreducibility workbench"};
  app.require_subcommand(1);

  std::string poly, start, inputs, out_path;
  bool as_json = false, flipped = false;
  unsigned max_steps = kDefaultOrbitSteps, n_from = 2, n_to = 5, big_n = 2, t = 4;
  std::uint64_t q_lo = 0, q_hi = 0, seed = 1;
  unsigned long z = 0, q_max = 100000;
  ScanConfig cfg;
  std::string scan_out;

  auto* classify_cmd = app.add_subcommand("classify", "P1/P2/P3 membership and critical orbits");
  classify_cmd->add_option("--poly", poly)->required();
  classify_cmd->add_flag("--json", as_json);

  auto* orbit_cmd = app.add_subcommand("orbit", "pre-periodicity of a rational starting point");
  orbit_cmd->add_option("--poly", poly)->required();
  orbit_cmd->add_option("--start", start)->required();
  orbit_cmd->add_option("--max-steps", max_steps)->check(CLI::PositiveNumber);

  auto* res_cmd = app.add_subcommand("resultants", "2-adic decomposition of f_d Res(f^(n), f')");
  res_cmd->add_option("--poly", poly)->required();
  res_cmd->add_option("--n-from", n_from)->required();
  res_cmd->add_option("--n-to", n_to)->required();

  auto* scan_cmd = app.add_subcommand("scan", "stability verdicts over a prime window");
  scan_cmd->add_option("--poly", poly)->required();
  scan_cmd->add_option("--q-lo", cfg.q_lo)->required();
  scan_cmd->add_option("--q-hi", cfg.q_hi)->required();
  scan_cmd->add_option("--depth", cfg.depth);
  scan_cmd->add_option("--rabin-cap", cfg.rabin_cap);
  scan_cmd->add_option("--threads", cfg.threads)->check(CLI::PositiveNumber);
  scan_cmd->add_option("--out", scan_out);

  unsigned sum_threads = detail::default_threads();
  auto* sums_cmd = app.add_subcommand("sums", "character sums S and T on a window");
  sums_cmd->add_option("--poly", poly)->required();
  sums_cmd->add_option("--q-lo", q_lo)->required();
  sums_cmd->add_option("--q-hi", q_hi)->required();
  sums_cmd->add_option("--big-n", big_n)->required();
  sums_cmd->add_option("--t", t)->required();
  auto* z_opt = sums_cmd->add_option("--z", z);
  sums_cmd->add_flag("--flipped", flipped);
  sums_cmd->add_option("--threads", sum_threads)->check(CLI::PositiveNumber);

  auto* sieve_cmd = app.add_subcommand("sieve-check", "Selberg weight identities");
  sieve_cmd->add_option("--z", z)->required()->check(CLI::Range(2ul, 1ul << 20));
  sieve_cmd->add_option("--q-max", q_max);

  auto* verify_cmd = app.add_subcommand("verify", "cross-module oracle suite");
  verify_cmd->add_option("--seed", seed);

  auto* report_cmd = app.add_subcommand("report", "decay table from scan summaries");
  report_cmd->add_option("--in", inputs)->required();
  report_cmd->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(poly, as_json);
    if (*orbit_cmd) return cmd_orbit(poly, start, max_steps);
    if (*res_cmd) return cmd_resultants(poly, n_from, n_to);
    if (*scan_cmd) {
      if (!scan_out.empty()) cfg.out_path = scan_out;
      return cmd_scan(cfg, poly);
    }
    if (*sums_cmd)
      return cmd_sums(poly, q_lo, q_hi, big_n, t, *z_opt ? std::optional<unsigned long>(z) : std::nullopt, flipped,
                      sum_threads);
    if (*sieve_cmd) return cmd_sieve_check(z, q_max);
    if (*verify_cmd) return cmd_verify(seed);
    if (*report_cmd) return cmd_report(inputs, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    const bool usage = e.code() == ErrorCode::ParseError || e.code() == ErrorCode::InvalidArgument;
    return usage ? kExitUsage : kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
