// Command-line surface for the interval-dynamics library: forcing-order
// queries, pattern classification, superstable-parameter scans, cascade
// convergence estimates, pattern-table rows, and rescaled-iterate samples,
// all as machine-readable CSV or JSON.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "intervaldyn/intervaldyn.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

// 16 significant digits, plain notation across the tabulated range.
std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.16g", v);
  return buf;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw intervaldyn::domain_error("cannot open output file: " + output_path);
  out << text;
}

intervaldyn::UnimodalFamily family_of(const std::string& name) {
  const auto fam = intervaldyn::parse_family(name);
  if (!fam)
    throw intervaldyn::domain_error(
        "unknown family '" + name + "' (logistic, sine, cubic, quartic)");
  return *fam;
}

std::string records_csv(const std::vector<intervaldyn::SuperstableRecord>& recs) {
  std::string text = "parameter,period,appearance\n";
  for (const auto& r : recs)
    text += fmt(r.lambda) + "," + std::to_string(r.period) + "," +
            std::to_string(r.appearance) + "\n";
  return text;
}

int run_order(std::uint64_t a, std::uint64_t b, const std::string& out) {
  std::string verdict = "EQUAL";
  if (intervaldyn::sharkovskii_less(a, b))
    verdict = "LESS";
  else if (intervaldyn::sharkovskii_less(b, a))
    verdict = "GREATER";
  emit(verdict + "\n", out);
  return 0;
}

int run_classify(int period, const std::string& predicate,
                 const std::string& out) {
  intervaldyn::PatternPredicate pred;
  if (predicate == "minimal")
    pred = intervaldyn::PatternPredicate::minimal;
  else if (predicate == "second-minimal")
    pred = intervaldyn::PatternPredicate::second_minimal;
  else
    throw intervaldyn::domain_error(
        "unknown predicate '" + predicate + "' (minimal, second-minimal)");

  ordered_json list = ordered_json::array();
  for (const auto& cls : intervaldyn::enumerate_classes(period, pred)) {
    ordered_json entry;
    entry["representative"] = cls.representative.image();
    entry["inverse"] = cls.inverse_representative.image();
    entry["shape"] = cls.shape;
    if (cls.type_index)
      entry["type_index"] = *cls.type_index;
    else
      entry["type_index"] = nullptr;
    const auto digraph = intervaldyn::build_digraph(cls.representative);
    ordered_json edges = ordered_json::array();
    for (const auto& [i, s] : digraph.edges()) edges.push_back({i, s});
    ordered_json red = ordered_json::array();
    for (const auto& [i, s] : digraph.red_edges()) red.push_back({i, s});
    entry["digraph"] = {{"edges", edges}, {"red", red}};
    list.push_back(std::move(entry));
  }
  emit(list.dump(2) + "\n", out);
  return 0;
}

int run_scan(const std::string& family, int period, std::optional<double> lo,
             std::optional<double> hi, const std::string& out) {
  const auto fam = family_of(family);
  auto cfg = intervaldyn::default_scan_config(fam, period);
  if (lo) cfg.lambda_lo = *lo;
  if (hi) cfg.lambda_hi = *hi;
  emit(records_csv(intervaldyn::find_superstable(fam, period, cfg)), out);
  return 0;
}

int run_bifscan(const std::string& family, double lo, double hi, int steps,
                int transient, int samples, const std::string& out) {
  const auto fam = family_of(family);
  if (!(lo >= 0.0 && hi <= 1.0 && lo < hi))
    throw intervaldyn::domain_error(
        "bifscan: need 0 <= lo < hi <= 1 for the parameter range");
  if (steps < 2 || transient < 0 || samples < 1)
    throw intervaldyn::domain_error(
        "bifscan: need steps >= 2, transient >= 0, samples >= 1");
  std::string text = "parameter,x\n";
  const double x0 = intervaldyn::family_x_max(fam);
  for (int i = 0; i < steps; ++i) {
    const double lambda = lo + (hi - lo) * i / (steps - 1);
    double x = intervaldyn::family_iterate(fam, lambda, x0, transient);
    for (int s = 0; s < samples; ++s) {
      x = intervaldyn::family_iterate(fam, lambda, x, 1);
      text += fmt(lambda) + "," + fmt(x) + "\n";
    }
  }
  emit(text, out);
  return 0;
}

int run_feig(const std::string& family, int q, int j, int s_max,
             const std::string& out) {
  const auto est =
      intervaldyn::cascade_estimate(family_of(family), q, j, s_max);
  ordered_json doc;
  doc["ladder"] = ordered_json::array();
  for (const auto& r : est.ladder) doc["ladder"].push_back(r.lambda);
  doc["deltas"] = est.deltas;
  doc["alphas"] = est.alphas;
  doc["lambda_inf"] = est.lambda_inf;
  emit(doc.dump(2) + "\n", out);
  return 0;
}

int run_blockrate(const std::string& family, int q_max,
                  const std::string& out) {
  const auto rows = intervaldyn::first_appearances(family_of(family), q_max);
  std::vector<double> lams;
  ordered_json doc;
  doc["periods"] = ordered_json::array();
  doc["parameters"] = ordered_json::array();
  for (const auto& r : rows) {
    doc["periods"].push_back(r.period);
    doc["parameters"].push_back(r.lambda);
    lams.push_back(r.lambda);
  }
  doc["rates"] = intervaldyn::block_rate(lams);
  emit(doc.dump(2) + "\n", out);
  return 0;
}

int run_pattern(int n, const std::string& out) {
  const auto row = intervaldyn::pattern_row(n);
  ordered_json doc;
  doc["increments"] = row.increments;
  doc["spans"] = row.spans;
  doc["indices"] = row.indices;
  emit(doc.dump(2) + "\n", out);
  return 0;
}

int run_gfun(const std::string& family, int q, int j, int depth,
             double half_width, int points, const std::string& out) {
  if (points < 3 || points % 2 == 0)
    throw intervaldyn::domain_error("gfun: points must be odd and >= 3");
  if (!(half_width > 0.0))
    throw intervaldyn::domain_error("gfun: half-width must be positive");
  std::vector<double> grid(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i)
    grid[static_cast<size_t>(i)] =
        -half_width + 2.0 * half_width * i / (points - 1);
  for (int i = 0; i < points / 2; ++i)
    grid[static_cast<size_t>(points - 1 - i)] = -grid[static_cast<size_t>(i)];
  grid[static_cast<size_t>(points / 2)] = 0.0;

  const auto sample = intervaldyn::universal_function_approx(
      family_of(family), q, j, depth, grid);
  std::string text = "x,value\n";
  for (size_t i = 0; i < grid.size(); ++i)
    text += fmt(grid[i]) + "," + fmt(sample.values[i]) + "\n";
  emit(text, out);
  return 0;
}

int run_verify_pattern(const std::string& family, int n, int q_limit,
                       const std::string& out) {
  const auto report = intervaldyn::verify_pattern_against_scan(
      family_of(family), n, q_limit);
  ordered_json doc;
  doc["agrees"] = report.agrees;
  doc["steps_checked"] = report.steps_checked;
  doc["detail"] = report.detail;
  emit(doc.dump(2) + "\n", out);
  return 0;
}

int run_reproduce(const std::string& target, const std::string& family,
                  int max_period, const std::string& out) {
  if (target != "parameter-table")
    throw intervaldyn::domain_error(
        "unknown reproduce target '" + target + "' (parameter-table)");
  if (max_period < 1)
    throw intervaldyn::domain_error("reproduce: max-period must be >= 1");
  const auto fam = family_of(family);

  std::vector<intervaldyn::SuperstableRecord> rows;
  const auto powers = intervaldyn::period_doubling_ladder(
      fam, 1, 1, 4, intervaldyn::default_ladder_config(fam, 1));
  rows.insert(rows.end(), powers.begin(), powers.end());
  for (int p = 3; p <= max_period; p += 2) {
    const auto recs = intervaldyn::find_superstable(
        fam, p, intervaldyn::default_scan_config(fam, p));
    rows.insert(rows.end(), recs.begin(), recs.end());
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) {
              return a.period != b.period ? a.period < b.period
                                          : a.appearance < b.appearance;
            });
  emit(records_csv(rows), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Periodic-orbit patterns of interval maps and the universal "
      "period-doubling numerics of one-parameter unimodal families"};
  app.require_subcommand(1);

  std::string out;
  std::string family = "logistic";
  std::uint64_t order_a = 0, order_b = 0;
  int period = 7;
  std::string predicate = "second-minimal";
  std::optional<double> lo, hi;
  double blo = 0.85, bhi = 0.97;
  int steps = 200, transient = 4096, samples = 64;
  int q = 3, appearance = 1, smax = 2, depth = 1;
  double half_width = 0.35;
  int points = 201;
  int row_n = 10, q_limit = 11, max_period = 9;
  std::string target;

  const auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--output", out, "Write the result to this file instead of stdout");
  };

  auto* order = app.add_subcommand(
      "order", "Compare two periods in the forcing order of interval maps");
  order->add_option("a", order_a, "First period")->required();
  order->add_option("b", order_b, "Second period")->required();
  add_out(order);

  auto* classify = app.add_subcommand(
      "classify",
      "Enumerate pattern classes of one period, merged into reversal pairs");
  classify->add_option("--period", period, "Orbit period to enumerate")
      ->required();
  classify->add_option("--predicate", predicate,
                       "Class predicate: minimal or second-minimal");
  add_out(classify);

  auto* scan = app.add_subcommand(
      "scan", "Locate superstable orbit parameters of one period");
  scan->add_option("--family", family,
                   "Map family: logistic, sine, cubic, quartic");
  scan->add_option("--period", period, "Orbit period")->required();
  scan->add_option("--lo", lo, "Lower end of the parameter range");
  scan->add_option("--hi", hi, "Upper end of the parameter range");
  add_out(scan);

  auto* bifscan = app.add_subcommand(
      "bifscan", "Sample long-run orbits across a parameter range");
  bifscan->add_option("--family", family,
                      "Map family: logistic, sine, cubic, quartic");
  bifscan->add_option("--lo", blo, "Lower end of the parameter range");
  bifscan->add_option("--hi", bhi, "Upper end of the parameter range");
  bifscan->add_option("--steps", steps, "Number of parameter samples");
  bifscan->add_option("--transient", transient,
                      "Iterations discarded before sampling");
  bifscan->add_option("--samples", samples, "Recorded iterates per parameter");
  add_out(bifscan);

  auto* feig = app.add_subcommand(
      "feig",
      "Follow a period-doubling ladder and report its convergence ratios");
  feig->add_option("--family", family,
                   "Map family: logistic, sine, cubic, quartic");
  feig->add_option("--q", q, "Base period of the ladder (odd)");
  feig->add_option("--appearance", appearance,
                   "Which appearance of the base period to follow");
  feig->add_option("--smax", smax, "Number of doublings to follow (2..5)");
  add_out(feig);

  auto* blockrate = app.add_subcommand(
      "blockrate",
      "Gap-ratio convergence of first appearances of odd periods");
  blockrate->add_option("--family", family,
                        "Map family: logistic, sine, cubic, quartic");
  blockrate->add_option("--qmax", q_limit, "Largest odd period to include");
  add_out(blockrate);

  auto* pattern = app.add_subcommand(
      "pattern", "One row of the appearance-order table of odd orbits");
  pattern->add_option("--n", row_n, "Row number (1..64)")->required();
  add_out(pattern);

  auto* gfun = app.add_subcommand(
      "gfun", "Sample the rescaled high iterate near the critical point");
  gfun->add_option("--family", family,
                   "Map family: logistic, sine, cubic, quartic");
  gfun->add_option("--q", q, "Base period of the ladder (odd)");
  gfun->add_option("--appearance", appearance,
                   "Which appearance of the base period to follow");
  gfun->add_option("--depth", depth, "Rescaling depth (0..4)");
  gfun->add_option("--half-width", half_width,
                   "Half-width of the sampling window");
  gfun->add_option("--points", points, "Number of grid points (odd)");
  add_out(gfun);

  auto* verify = app.add_subcommand(
      "verify-pattern",
      "Replay a table row's walk against a fresh parameter scan");
  verify->add_option("--family", family,
                     "Map family: logistic, sine, cubic, quartic");
  verify->add_option("--n", row_n, "Row number of the table")->required();
  verify->add_option("--qlimit", q_limit,
                     "Largest period the scan may be asked for");
  add_out(verify);

  auto* reproduce = app.add_subcommand(
      "reproduce",
      "Rebuild a reference table from scratch with pinned scan settings");
  reproduce->add_option("target", target,
                        "Table to rebuild: parameter-table")
      ->required();
  reproduce->add_option("--family", family,
                        "Map family: logistic, sine, cubic, quartic");
  reproduce->add_option("--max-period", max_period,
                        "Largest odd period to include");
  add_out(reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (order->parsed()) return run_order(order_a, order_b, out);
    if (classify->parsed()) return run_classify(period, predicate, out);
    if (scan->parsed()) return run_scan(family, period, lo, hi, out);
    if (bifscan->parsed())
      return run_bifscan(family, blo, bhi, steps, transient, samples, out);
    if (feig->parsed()) return run_feig(family, q, appearance, smax, out);
    if (blockrate->parsed()) return run_blockrate(family, q_limit, out);
    if (pattern->parsed()) return run_pattern(row_n, out);
    if (gfun->parsed())
      return run_gfun(family, q, appearance, depth, half_width, points, out);
    if (verify->parsed())
      return run_verify_pattern(family, row_n, q_limit, out);
    if (reproduce->parsed())
      return run_reproduce(target, family, max_period, out);
  } catch (const intervaldyn::resource_error& e) {
    std::cerr << "resource refusal: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
