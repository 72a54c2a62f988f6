// sweep.hpp — JSON sweep configuration, grid evaluation over chain templates
// and deterministic CSV emission

#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "xxchain/bath.hpp"
#include "xxchain/chain.hpp"

namespace xxchain {

// A chain constructor addressed by name plus its fixed parameters.
// Recognized templates: "custom", "boundary-perturbed", "field-junction",
// "coupling-junction", "graded".
struct ChainTemplate {
  std::string name;
  int sites = 0;  // unused for "custom"
  std::map<std::string, double> scalars;
  std::vector<double> custom_field;     // "custom" only
  std::vector<double> custom_coupling;  // "custom" only
};

// Scalar parameter names of a template that a sweep may vary.
std::vector<std::string> sweepable_parameters(const std::string& template_name);

// Builds the chain, with swept parameters substituted.
ChainSpec instantiate(const ChainTemplate& tpl,
                      const std::map<std::string, double>& overrides = {});

struct SweepAxis {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  int steps = 1;
};

// Inclusive uniform grid; a single step collapses to {lo}.
std::vector<double> grid_points(const SweepAxis& axis);

// Any parsed configuration file (chain required, the rest optional so the
// same schema serves point evaluations and sweeps).
struct RunConfig {
  ChainTemplate chain;
  std::optional<BathPair> baths;
  std::optional<std::pair<SweepAxis, SweepAxis>> sweep;
  std::string output;
  int threads = 1;
};

// Strict parser for schema_version 1: unknown keys are rejected, schema
// violations name the offending field, malformed JSON is reported with line
// and column.
RunConfig parse_run_config(const std::string& text);

// A sweep-ready configuration (baths and both axes present).
struct SweepConfig {
  ChainTemplate chain;
  BathPair baths;
  SweepAxis axis1;
  SweepAxis axis2;
  std::string output;
  int threads = 1;
};

SweepConfig parse_config(const std::string& text);

// One grid point: swept values, forward/reversed heat currents, the
// rectification factor and any per-point warnings. Flags: DEGENERATE,
// R_UNDEFINED, SAME_SIGN, INVALID_CHAIN, NUMERIC_ERROR.
struct SweepRow {
  double p1 = 0.0;
  double p2 = 0.0;
  double forward = 0.0;
  double reversed = 0.0;
  double factor = 0.0;
  std::vector<std::string> flags;
};

// Evaluates the grid in row-major order (axis1 outer). Points are
// independent, so they may be evaluated by a worker pool; the output order
// and bytes are identical for any parallelism degree. Per-point failures
// are recorded in the row flags and never abort the sweep.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

// CSV with header param1,param2,J_fwd,J_rev,R,flags; floats at 17
// significant digits, flags semicolon-joined, LF line endings, trailing
// newline. Identical rows serialize to identical bytes.
void emit_csv(const std::vector<SweepRow>& rows, std::ostream& out);
void write_csv(const std::vector<SweepRow>& rows, const std::string& path);

}  // namespace xxchain
