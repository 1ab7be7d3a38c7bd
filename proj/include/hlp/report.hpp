#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hlp/model_spec.hpp"

namespace hlp {

// Everything the CLI reports for one model. Rendering is deterministic:
// identical input gives byte-identical text and JSON.
struct RunReport {
  std::string label;
  std::size_t b1 = 0, b2 = 0;
  std::pair<Rational, Rational> moment_values{Rational(0), Rational(1)};
  Rational w0_square, w1_square;
  std::vector<long> betti;  // b_0..b_6 of the 6-manifold
  HlpReport hlp;
  std::optional<FamilyReport> family;
  std::vector<std::string> warnings;

  bool operator==(const RunReport& o) const;
};

// Full pipeline: assemble, profile, verdict, optional family check.
RunReport run_model(const ModelSpec& spec);

std::string render_text(const RunReport& report);
std::string emit_json(const RunReport& report);
RunReport parse_report_json(const std::string& text);

// One coordinate of e swept over an inclusive integer range.
struct SweepVar {
  std::size_t index = 0;
  long lo = 0, hi = 0;
};

struct SweepRow {
  std::vector<std::pair<std::size_t, long>> assignment;  // e[index] = value
  std::optional<RunReport> report;
  std::string flag;  // set instead of a report when the model was rejected
};

struct SweepReport {
  std::vector<SweepVar> vars;
  std::vector<SweepRow> rows;  // odometer order, last variable fastest
};

// Rows are independent and computed concurrently; emission order is input
// order. An empty range produces an empty table (the CLI warns).
SweepReport sweep_model(const ModelSpec& spec, const std::vector<SweepVar>& vars);

std::string render_sweep_text(const SweepReport& report);
std::string emit_sweep_json(const SweepReport& report);

}  // namespace hlp
