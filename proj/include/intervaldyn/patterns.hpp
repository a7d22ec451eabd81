#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "superstable.hpp"
#include "unimodal.hpp"

// Appearance-order bookkeeping for superstable orbits of odd period.  When
// the parameter descends from the top of the appearance band, the orbits
// with appearance index at most N pass by in a periodic pattern: the period
// jumps by a fixed cyclic sequence of even increments while the appearance
// index cycles through a fixed permutation of 1..N.  This header builds
// those rows, expands them into walks over (period, appearance) pairs, and
// replays a walk against scanned parameter values.

namespace intervaldyn {

// One row of the appearance pattern.
//   increments: cyclic period jumps (even, summing to +2 per full cycle:
//               each cycle shifts the walk one step down the odd sequence).
//   spans:      column widths of the row laid out over 2^ceil(log2 N)
//               columns; entries split from a coarser row take width 1,
//               not-yet-split entries width 2 (the single entry of row 1
//               takes width 1).
//   indices:    appearance index of each orbit the walk visits, a
//               permutation of 1..N.
struct PatternRow {
  int N = 0;
  std::vector<int> increments;
  std::vector<int> spans;
  std::vector<int> indices;
};

namespace detail {

// Row 1 is the single increment +2; the row after a full power row splits
// every entry; intermediate rows split only the last J entries.  A positive
// entry p splits into {p+2, -2}; a negative entry into {+2, p-2}.
inline std::vector<int> pattern_increments(int N) {
  if (N == 1) return {+2};
  int p = 1;
  while (2 * p < N) p *= 2;  // largest power of two below N
  const std::vector<int> base = pattern_increments(p);
  const int J = N - p;
  std::vector<int> out(base.begin(), base.end() - J);
  for (int i = p - J; i < p; ++i) {
    if (base[i] > 0) {
      out.push_back(base[i] + 2);
      out.push_back(-2);
    } else {
      out.push_back(+2);
      out.push_back(base[i] - 2);
    }
  }
  return out;
}

}  // namespace detail

// The N-th appearance-pattern row.  Rows 1..16 reproduce the reference
// layout exactly; the construction extends to N = 64.
inline PatternRow pattern_row(int N) {
  if (N < 1 || N > 64)
    throw domain_error("pattern_row: N must lie in 1..64");
  PatternRow row;
  row.N = N;
  row.increments = detail::pattern_increments(N);

  int p = 1;
  while (2 * p < N) p *= 2;
  const int J = N == 1 ? 1 : N - p;  // entries split from the base row
  row.spans.assign(static_cast<size_t>(N), 1);
  if (N > 1)
    for (int i = 0; i < p - J; ++i) row.spans[static_cast<size_t>(i)] = 2;

  row.indices = {1};
  for (int i = 2; i <= N; ++i) {
    const auto at = std::find(row.indices.begin(), row.indices.end(), i - 1);
    const int m = static_cast<int>(at - row.indices.begin()) + 1;
    if (m <= 2)
      row.indices.push_back(i);  // the slot before position 1 does not exist
    else
      row.indices.insert(row.indices.begin() + (m - 2), i);
  }
  return row;
}

// One stop of the descending-parameter walk: the (period, appearance) pair
// of the superstable orbit passed at this step.
struct PatternStep {
  int period = 0;
  int appearance = 0;

  friend bool operator==(const PatternStep&, const PatternStep&) = default;
};

// The first `count` stops of the walk a row generates, starting at the
// period-3 first appearance and descending in parameter.  Step t has
// appearance indices[t mod N]; the period then jumps by increments[t mod N].
inline std::vector<PatternStep> pattern_walk(const PatternRow& row,
                                             int count) {
  if (count < 1) throw domain_error("pattern_walk: count must be >= 1");
  if (row.N < 1 || row.increments.size() != static_cast<size_t>(row.N) ||
      row.indices.size() != static_cast<size_t>(row.N))
    throw domain_error("pattern_walk: malformed pattern row");
  std::vector<PatternStep> walk;
  walk.reserve(static_cast<size_t>(count));
  int q = 3;
  for (int t = 0; t < count; ++t) {
    const size_t slot = static_cast<size_t>(t % row.N);
    walk.push_back({q, row.indices[slot]});
    q += row.increments[slot];
  }
  return walk;
}

// Outcome of replaying a pattern walk against scanned parameters.
struct PatternScanReport {
  bool agrees = false;
  int steps_checked = 0;   // stops whose parameters were available
  std::string detail;      // first mismatch, empty on full agreement
};

// Replays the row-N walk against scanned superstable records: the walk's
// stops must appear at strictly descending parameters.  Stops are taken
// until a (period, appearance) pair is missing from the records; at least
// one full cycle of the row must be covered.
inline PatternScanReport verify_pattern_against_scan(
    const PatternRow& row, const std::vector<SuperstableRecord>& records) {
  std::map<std::pair<int, int>, double> lambda_of;
  for (const auto& rec : records)
    lambda_of[{rec.period, rec.appearance}] = rec.lambda;

  const std::vector<PatternStep> walk =
      pattern_walk(row, 8 * row.N + 1);  // longest replay worth attempting
  PatternScanReport report;
  double prev_lambda = 0.0;
  for (const PatternStep& stop : walk) {
    const auto found = lambda_of.find({stop.period, stop.appearance});
    if (found == lambda_of.end()) break;
    if (report.steps_checked > 0 && !(found->second < prev_lambda)) {
      report.detail = "stop " + std::to_string(report.steps_checked) + ": " +
                      std::to_string(stop.period) + "_" +
                      std::to_string(stop.appearance) +
                      " does not descend below the previous stop";
      return report;
    }
    prev_lambda = found->second;
    ++report.steps_checked;
  }
  if (report.steps_checked <= row.N)
    throw coverage_error(
        "verify_pattern_against_scan: records cover less than one full "
        "cycle of the row");
  report.agrees = true;
  return report;
}

// Scanning front end: collects every appearance of the odd periods
// 3..q_limit in the family's appearance band, then replays the row against
// them.
inline PatternScanReport verify_pattern_against_scan(UnimodalFamily fam,
                                                     int N, int q_limit) {
  if (q_limit < 3 || q_limit % 2 == 0)
    throw domain_error(
        "verify_pattern_against_scan: q_limit must be odd and >= 3");
  std::vector<SuperstableRecord> records;
  for (int q = 3; q <= q_limit; q += 2) {
    auto roots = find_superstable(fam, q, default_scan_config(fam, q));
    records.insert(records.end(), roots.begin(), roots.end());
  }
  return verify_pattern_against_scan(pattern_row(N), records);
}

}  // namespace intervaldyn
