#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "dynirr/harness/scan.hpp"

namespace dynirr {

struct DecayRow {
  std::uint64_t Q = 0;
  std::uint64_t survivors = 0;
  double ratio = 0;  // survivors log Q / Q
  double inv_logloglog = NAN;
  double inv_loglog = NAN;
  double inv_log = NAN;
};

inline DecayRow decay_row(const ScanSummary& s) {
  DecayRow r;
  r.Q = s.q_lo;
  r.survivors = s.survivors;
  const double Q = static_cast<double>(s.q_lo);
  const double l = std::log(Q);
  r.ratio = s.survivors == 0 ? 0.0 : static_cast<double>(s.survivors) * l / Q;
  if (l > 0) r.inv_log = 1 / l;
  if (l > 1) r.inv_loglog = 1 / std::log(l);
  if (l > 1 && std::log(l) > 1) r.inv_logloglog = 1 / std::log(std::log(l));
  return r;
}

inline std::vector<DecayRow> decay_rows(const std::vector<ScanSummary>& summaries) {
  std::vector<DecayRow> rows;
  for (const auto& s : summaries) rows.push_back(decay_row(s));
  return rows;
}

namespace detail {
inline std::string csv_number(double x) {
  if (std::isnan(x)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}
}  // namespace detail

/// CSV with columns Q, survivors, ratio, 1/logloglog Q, 1/loglog Q, 1/log Q.
/// Reference curves that are undefined at small Q are left empty.
inline std::string decay_report(const std::vector<ScanSummary>& summaries) {
  std::string out = "Q,survivors,ratio,inv_logloglog_Q,inv_loglog_Q,inv_log_Q\n";
  for (const auto& r : decay_rows(summaries)) {
    out += std::to_string(r.Q) + ',' + std::to_string(r.survivors) + ',' + detail::csv_number(r.ratio) + ',' +
           detail::csv_number(r.inv_logloglog) + ',' + detail::csv_number(r.inv_loglog) + ',' +
           detail::csv_number(r.inv_log) + '\n';
  }
  return out;
}

/// Soft check: ratio column non-increasing in Q.
inline bool ratio_nonincreasing(std::vector<DecayRow> rows) {
  std::sort(rows.begin(), rows.end(), [](const DecayRow& a, const DecayRow& b) { return a.Q < b.Q; });
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].ratio > rows[i - 1].ratio) return false;
  return true;
}

}  // namespace dynirr
