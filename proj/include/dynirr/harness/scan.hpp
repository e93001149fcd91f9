#pragma once

#include <atomic>
#include <condition_variable>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "dynirr/detail/parallel.hpp"
#include "dynirr/dynamics/classify.hpp"
#include "dynirr/modp/stability.hpp"
#include "dynirr/sieve/primes.hpp"

namespace dynirr {

inline constexpr unsigned kDefaultScanDepth = 16;
inline constexpr std::uint64_t kScanChunk = std::uint64_t{1} << 16;

struct ScanConfig {
  IntPoly poly;
  std::uint64_t q_lo = 3;
  std::uint64_t q_hi = 3;
  unsigned depth = kDefaultScanDepth;
  std::size_t rabin_cap = modp::kDefaultRabinCap;
  unsigned threads = detail::default_threads();
  std::optional<std::string> out_path;
};

struct ScanSummary {
  std::uint64_t q_lo = 0;
  std::uint64_t q_hi = 0;
  unsigned depth = 0;
  std::uint64_t primes_tested = 0;
  std::uint64_t bad_reduction_count = 0;
  std::uint64_t survivors = 0;
  std::map<unsigned, std::uint64_t> eliminated_histogram;

  std::uint64_t eliminated() const {
    std::uint64_t s = 0;
    for (const auto& [n, c] : eliminated_histogram) s += c;
    return s;
  }
  bool conserved() const { return primes_tested == survivors + eliminated() + bad_reduction_count; }
  bool operator==(const ScanSummary&) const = default;
};

/// One JSONL line: {"p", "verdict", "n", "reason"}; survivors carry n = depth.
inline nlohmann::ordered_json record_json(const modp::StabilityVerdict& v, unsigned depth) {
  nlohmann::ordered_json j;
  j["p"] = v.p;
  if (v.bad_reduction) {
    j["verdict"] = "bad_reduction";
    j["n"] = nullptr;
    j["reason"] = nullptr;
  } else if (v.survived()) {
    j["verdict"] = "survived";
    j["n"] = depth;
    j["reason"] = nullptr;
  } else {
    j["verdict"] = "eliminated";
    j["n"] = v.elimination().at_n;
    j["reason"] = to_string(v.elimination().reason);
  }
  return j;
}

inline nlohmann::ordered_json summary_json(const ScanSummary& s) {
  nlohmann::ordered_json j;
  j["q_lo"] = s.q_lo;
  j["q_hi"] = s.q_hi;
  j["depth"] = s.depth;
  j["primes_tested"] = s.primes_tested;
  j["bad_reduction_count"] = s.bad_reduction_count;
  j["survivors"] = s.survivors;
  nlohmann::ordered_json h = nlohmann::ordered_json::object();
  for (const auto& [n, c] : s.eliminated_histogram) h[std::to_string(n)] = c;
  j["eliminated_histogram"] = h;
  return j;
}

inline ScanSummary summary_from_json(const nlohmann::json& j) {
  ScanSummary s;
  try {
    s.q_lo = j.at("q_lo").get<std::uint64_t>();
    s.q_hi = j.at("q_hi").get<std::uint64_t>();
    s.depth = j.at("depth").get<unsigned>();
    s.primes_tested = j.at("primes_tested").get<std::uint64_t>();
    s.bad_reduction_count = j.at("bad_reduction_count").get<std::uint64_t>();
    s.survivors = j.at("survivors").get<std::uint64_t>();
    for (const auto& [k, v] : j.at("eliminated_histogram").items())
      s.eliminated_histogram[static_cast<unsigned>(std::stoul(k))] = v.get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed scan summary: ") + e.what());
  }
  return s;
}

inline nlohmann::ordered_json orbit_json(const OrbitResult& r) {
  nlohmann::ordered_json j;
  if (const auto* p = std::get_if<Preperiodic>(&r.status)) {
    j["status"] = "preperiodic";
    j["tail_length"] = p->tail_length;
    j["cycle_length"] = p->cycle_length;
    auto orbit = nlohmann::ordered_json::array();
    for (const auto& x : p->orbit) orbit.push_back(to_string(x));
    j["orbit"] = orbit;
  } else if (const auto* n = std::get_if<NotPreperiodic>(&r.status)) {
    j["status"] = "not_preperiodic";
    if (const auto* e = std::get_if<RealEscape>(&n->certificate)) {
      j["certificate"] = "real_escape";
      j["step"] = e->step;
    } else {
      const auto& v = std::get<ValuationEscape>(n->certificate);
      j["certificate"] = "valuation_escape";
      j["prime"] = to_string(v.prime);
      j["step"] = v.step;
    }
  } else {
    j["status"] = "undecided";
    j["steps_taken"] = std::get<Undecided>(r.status).steps_taken;
  }
  return j;
}

/// Class information embedded in scan metadata.
inline nlohmann::ordered_json class_json(const ClassInfo& c) {
  nlohmann::ordered_json j;
  j["in_P1"] = c.in_P1();
  j["in_P2"] = to_string(c.in_P2);
  j["in_P3"] = to_string(c.in_P3);
  if (c.p1) {
    j["p1_witness"] = {{"g", to_string(c.p1->g)}, {"a", to_string(c.p1->a)}, {"b", to_string(c.p1->b)}};
  } else {
    j["p1_witness"] = nullptr;
  }
  j["gamma"] = c.gamma ? nlohmann::ordered_json(to_string(*c.gamma)) : nlohmann::ordered_json(nullptr);
  j["gamma_orbit"] = c.gamma_preperiodic ? orbit_json(*c.gamma_preperiodic) : nlohmann::ordered_json(nullptr);
  j["zero_orbit"] = orbit_json(c.zero_preperiodic);
  return j;
}

/// Applies stability_scan_single to every prime of [q_lo, q_hi]. Chunks of
/// kScanChunk integers are processed by a worker pool and handed to `sink` in
/// ascending order, so output does not depend on the thread count.
inline ScanSummary run_scan(const ScanConfig& cfg,
                            const std::function<void(const modp::StabilityVerdict&)>& sink = {}) {
  if (cfg.q_lo < 3 || cfg.q_lo > cfg.q_hi)
    throw Error(ErrorCode::InvalidArgument, "scan window must satisfy 3 <= q_lo <= q_hi");
  if (cfg.depth < 2) throw Error(ErrorCode::InvalidArgument, "scan depth must be >= 2");
  if (cfg.threads < 1) throw Error(ErrorCode::InvalidArgument, "threads must be >= 1");
  const modp::StabilityContext ctx(cfg.poly);

  const std::uint64_t span = cfg.q_hi - cfg.q_lo + 1;
  const std::size_t chunks = static_cast<std::size_t>((span + kScanChunk - 1) / kScanChunk);
  std::vector<std::vector<modp::StabilityVerdict>> results(chunks);
  std::vector<char> ready(chunks, 0);
  std::exception_ptr error;
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= chunks) return;
      const std::uint64_t lo = cfg.q_lo + i * kScanChunk;
      const std::uint64_t hi = std::min(cfg.q_hi, lo + kScanChunk - 1);
      std::vector<modp::StabilityVerdict> out;
      std::exception_ptr err;
      try {
        for_each_prime(lo, hi, [&](std::uint64_t p) {
          out.push_back(modp::stability_scan_single(ctx, p, cfg.depth, cfg.rabin_cap));
        });
      } catch (...) {
        err = std::current_exception();
        next.store(chunks);
      }
      {
        std::lock_guard lock(mu);
        results[i] = std::move(out);
        ready[i] = 1;
        if (err && !error) error = err;
      }
      cv.notify_all();
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(chunks)));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);

  ScanSummary s;
  s.q_lo = cfg.q_lo;
  s.q_hi = cfg.q_hi;
  s.depth = cfg.depth;
  for (std::size_t i = 0; i < chunks; ++i) {
    std::vector<modp::StabilityVerdict> batch;
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return ready[i] != 0 || error != nullptr; });
      if (error) break;
      batch = std::move(results[i]);
    }
    for (const auto& v : batch) {
      ++s.primes_tested;
      if (v.bad_reduction) {
        ++s.bad_reduction_count;
      } else if (v.survived()) {
        ++s.survivors;
      } else {
        ++s.eliminated_histogram[v.elimination().at_n];
      }
      if (sink) sink(v);
    }
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  if (!s.conserved()) throw std::logic_error("scan summary does not balance");
  return s;
}

/// run_scan writing JSONL records to `out`.
inline ScanSummary run_scan(const ScanConfig& cfg, std::ostream& out) {
  return run_scan(cfg, [&](const modp::StabilityVerdict& v) { out << record_json(v, cfg.depth).dump() << '\n'; });
}

/// Path of the summary written next to a JSONL scan file.
inline std::string summary_path(const std::string& jsonl_path) { return jsonl_path + ".summary.json"; }

/// Runs the scan, writing records to cfg.out_path (if set) and the summary
/// plus class metadata to the sidecar file.
inline ScanSummary run_scan_to_files(const ScanConfig& cfg) {
  if (!cfg.out_path) return run_scan(cfg);
  std::ofstream out(*cfg.out_path);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + *cfg.out_path);
  const ClassInfo info = classify(cfg.poly);
  ScanSummary s = run_scan(cfg, out);
  out.close();
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + *cfg.out_path);

  nlohmann::ordered_json meta = summary_json(s);
  meta["poly"] = to_string(cfg.poly);
  meta["rabin_cap"] = cfg.rabin_cap;
  meta["class"] = class_json(info);
  std::ofstream side(summary_path(*cfg.out_path));
  side << meta.dump(2) << '\n';
  if (!side) throw Error(ErrorCode::IoError, "write failed for " + summary_path(*cfg.out_path));
  return s;
}

}  // namespace dynirr
