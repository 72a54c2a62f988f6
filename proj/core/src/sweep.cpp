#include "xxchain/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "xxchain/errors.hpp"
#include "xxchain/transport.hpp"

namespace xxchain {

namespace {

using nlohmann::json;

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct TemplateSchema {
  std::vector<std::string> scalar_keys;  // required scalar parameters
  bool needs_sites;
  bool custom_arrays;
};

const std::map<std::string, TemplateSchema>& template_schemas() {
  static const std::map<std::string, TemplateSchema> schemas = {
      {"custom", {{"gamma"}, false, true}},
      {"boundary-perturbed", {{"h", "alpha", "gamma"}, true, false}},
      {"field-junction", {{"h1", "h2", "alpha", "gamma"}, true, false}},
      {"coupling-junction", {{"alpha1", "alpha2", "h", "gamma"}, true, false}},
      {"graded",
       {{"h_base", "h_slope", "alpha_base", "alpha_slope", "gamma"}, true, false}},
  };
  return schemas;
}

[[noreturn]] void fail(const std::string& message) {
  throw validation_error("config: " + message);
}

void reject_unknown_keys(const json& object, const std::string& context,
                         const std::set<std::string>& allowed) {
  for (const auto& item : object.items()) {
    if (!allowed.contains(item.key())) {
      fail("unknown key \"" + item.key() + "\" in " + context);
    }
  }
}

double number_field(const json& object, const std::string& context,
                    const std::string& key) {
  if (!object.contains(key)) fail(context + " is missing \"" + key + "\"");
  const json& v = object.at(key);
  if (!v.is_number()) fail(context + "." + key + " must be a number");
  return v.get<double>();
}

int integer_field(const json& object, const std::string& context,
                  const std::string& key) {
  if (!object.contains(key)) fail(context + " is missing \"" + key + "\"");
  const json& v = object.at(key);
  if (!v.is_number_integer()) fail(context + "." + key + " must be an integer");
  return v.get<int>();
}

std::vector<double> array_field(const json& object, const std::string& context,
                                const std::string& key) {
  if (!object.contains(key)) fail(context + " is missing \"" + key + "\"");
  const json& v = object.at(key);
  if (!v.is_array()) fail(context + "." + key + " must be an array of numbers");
  std::vector<double> out;
  for (const json& item : v) {
    if (!item.is_number()) {
      fail(context + "." + key + " must contain only numbers");
    }
    out.push_back(item.get<double>());
  }
  return out;
}

Temperature parse_temperature(const json& v, const std::string& field) {
  if (v.is_number()) {
    const double t = v.get<double>();
    if (t < 0.0) fail(field + " must be nonnegative");
    return Temperature(t);
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "zero") return Temperature::zero();
    if (s == "inf" || s == "infinite") return Temperature::infinite();
    fail(field + ": unrecognized temperature \"" + s +
         "\" (use a number, \"zero\", or \"inf\")");
  }
  fail(field + " must be a number or a temperature string");
}

ChainTemplate parse_chain(const json& object) {
  if (!object.is_object()) fail("\"chain\" must be an object");
  if (!object.contains("template")) fail("chain is missing \"template\"");
  const json& name = object.at("template");
  if (!name.is_string()) fail("chain.template must be a string");

  ChainTemplate tpl;
  tpl.name = name.get<std::string>();
  const auto schema = template_schemas().find(tpl.name);
  if (schema == template_schemas().end()) {
    fail("unknown chain template \"" + tpl.name + "\"");
  }

  std::set<std::string> allowed = {"template"};
  for (const std::string& key : schema->second.scalar_keys) allowed.insert(key);
  if (schema->second.needs_sites) allowed.insert("N");
  if (schema->second.custom_arrays) {
    allowed.insert("h");
    allowed.insert("alpha");
  }
  reject_unknown_keys(object, "chain", allowed);

  if (schema->second.needs_sites) {
    tpl.sites = integer_field(object, "chain", "N");
  }
  if (schema->second.custom_arrays) {
    tpl.custom_field = array_field(object, "chain", "h");
    tpl.custom_coupling = array_field(object, "chain", "alpha");
  }
  for (const std::string& key : schema->second.scalar_keys) {
    tpl.scalars[key] = number_field(object, "chain", key);
  }
  return tpl;
}

BathPair parse_baths(const json& object) {
  if (!object.is_object()) fail("\"baths\" must be an object");
  const bool explicit_pair = object.contains("T_L") || object.contains("T_R");
  const bool mean_gradient = object.contains("T") || object.contains("delta_T");
  if (explicit_pair && mean_gradient) {
    fail("baths: give either T_L/T_R or T/delta_T, not both");
  }
  if (explicit_pair) {
    reject_unknown_keys(object, "baths", {"T_L", "T_R"});
    if (!object.contains("T_L")) fail("baths is missing \"T_L\"");
    if (!object.contains("T_R")) fail("baths is missing \"T_R\"");
    return BathPair{parse_temperature(object.at("T_L"), "baths.T_L"),
                    parse_temperature(object.at("T_R"), "baths.T_R")};
  }
  if (mean_gradient) {
    reject_unknown_keys(object, "baths", {"T", "delta_T"});
    const double mean = number_field(object, "baths", "T");
    const double delta = number_field(object, "baths", "delta_T");
    const double left = mean + 0.5 * delta;
    const double right = mean - 0.5 * delta;
    if (left < 0.0 || right < 0.0) {
      fail("baths: T +- delta_T/2 must stay nonnegative");
    }
    return BathPair{Temperature(left), Temperature(right)};
  }
  fail("baths must define T_L/T_R or T/delta_T");
}

SweepAxis parse_axis(const json& object, const std::string& context,
                     const ChainTemplate& chain) {
  if (!object.is_object()) fail(context + " must be an object");
  reject_unknown_keys(object, context, {"name", "min", "max", "steps"});
  if (!object.contains("name")) fail(context + " is missing \"name\"");
  if (!object.at("name").is_string()) fail(context + ".name must be a string");

  SweepAxis axis;
  axis.name = object.at("name").get<std::string>();
  const auto valid = sweepable_parameters(chain.name);
  if (std::find(valid.begin(), valid.end(), axis.name) == valid.end()) {
    fail(context + ".name: \"" + axis.name +
         "\" is not a sweepable parameter of template \"" + chain.name + "\"");
  }
  axis.lo = number_field(object, context, "min");
  axis.hi = number_field(object, context, "max");
  axis.steps = integer_field(object, context, "steps");
  if (axis.steps < 1) fail(context + ".steps must be >= 1");
  if (!(axis.lo <= axis.hi)) fail(context + ": min must not exceed max");
  return axis;
}

SweepRow evaluate_point(const ChainTemplate& tpl, const BathPair& baths,
                        const std::string& name1, double v1,
                        const std::string& name2, double v2) {
  SweepRow row;
  row.p1 = v1;
  row.p2 = v2;
  try {
    const ChainSpec chain = instantiate(tpl, {{name1, v1}, {name2, v2}});
    const RectificationResult rect = rectify(chain, baths);
    row.forward = rect.forward;
    row.reversed = rect.reversed;
    row.factor = rect.factor;
    if (rect.degenerate_spectrum) row.flags.push_back("DEGENERATE");
    if (!rect.factor_defined) row.flags.push_back("R_UNDEFINED");
    if (rect.same_sign) row.flags.push_back("SAME_SIGN");
  } catch (const validation_error&) {
    row.forward = row.reversed = row.factor = kNan;
    row.flags.push_back("INVALID_CHAIN");
  } catch (const numeric_error&) {
    row.forward = row.reversed = row.factor = kNan;
    row.flags.push_back("NUMERIC_ERROR");
  }
  return row;
}

std::string format_value(double v) {
  if (std::isnan(v)) return "nan";
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

}  // namespace

std::vector<std::string> sweepable_parameters(const std::string& template_name) {
  const auto schema = template_schemas().find(template_name);
  if (schema == template_schemas().end()) {
    throw validation_error("config: unknown chain template \"" + template_name +
                           "\"");
  }
  return schema->second.scalar_keys;
}

ChainSpec instantiate(const ChainTemplate& tpl,
                      const std::map<std::string, double>& overrides) {
  std::map<std::string, double> p = tpl.scalars;
  for (const auto& [key, value] : overrides) {
    if (!p.contains(key)) {
      throw validation_error("config: \"" + key +
                             "\" is not a parameter of template \"" + tpl.name +
                             "\"");
    }
    p[key] = value;
  }
  if (tpl.name == "custom") {
    return build_custom(tpl.custom_field, tpl.custom_coupling, p.at("gamma"));
  }
  if (tpl.name == "boundary-perturbed") {
    return build_boundary_perturbed(tpl.sites, p.at("h"), p.at("alpha"),
                                    p.at("gamma"));
  }
  if (tpl.name == "field-junction") {
    return build_field_junction(tpl.sites, p.at("h1"), p.at("h2"), p.at("alpha"),
                                p.at("gamma"));
  }
  if (tpl.name == "coupling-junction") {
    return build_coupling_junction(tpl.sites, p.at("alpha1"), p.at("alpha2"),
                                   p.at("h"), p.at("gamma"));
  }
  if (tpl.name == "graded") {
    return build_graded(tpl.sites, p.at("h_base"), p.at("h_slope"),
                        p.at("alpha_base"), p.at("alpha_slope"), p.at("gamma"));
  }
  throw validation_error("config: unknown chain template \"" + tpl.name + "\"");
}

std::vector<double> grid_points(const SweepAxis& axis) {
  std::vector<double> points(static_cast<std::size_t>(axis.steps));
  if (axis.steps == 1) {
    points[0] = axis.lo;
    return points;
  }
  const double step = (axis.hi - axis.lo) / (axis.steps - 1);
  for (int i = 0; i < axis.steps; ++i) {
    points[static_cast<std::size_t>(i)] = axis.lo + i * step;
  }
  points.back() = axis.hi;
  return points;
}

RunConfig parse_run_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& error) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < error.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    fail("parse error at line " + std::to_string(line) + ", column " +
         std::to_string(column) + ": " + error.what());
  }
  if (!root.is_object()) fail("top level must be a JSON object");
  reject_unknown_keys(
      root, "config",
      {"schema_version", "chain", "baths", "sweep", "output", "threads"});
  if (integer_field(root, "config", "schema_version") != 1) {
    fail("unsupported schema_version (expected 1)");
  }
  if (!root.contains("chain")) fail("config is missing \"chain\"");

  RunConfig config;
  config.chain = parse_chain(root.at("chain"));
  if (root.contains("baths")) {
    config.baths = parse_baths(root.at("baths"));
  }
  if (root.contains("sweep")) {
    const json& sweep = root.at("sweep");
    if (!sweep.is_object()) fail("\"sweep\" must be an object");
    reject_unknown_keys(sweep, "sweep", {"param1", "param2"});
    if (!sweep.contains("param1") || !sweep.contains("param2")) {
      fail("sweep needs both \"param1\" and \"param2\"");
    }
    SweepAxis axis1 = parse_axis(sweep.at("param1"), "sweep.param1", config.chain);
    SweepAxis axis2 = parse_axis(sweep.at("param2"), "sweep.param2", config.chain);
    if (axis1.name == axis2.name) {
      fail("sweep.param1 and sweep.param2 must name different parameters");
    }
    config.sweep = {std::move(axis1), std::move(axis2)};
  }
  if (root.contains("output")) {
    if (!root.at("output").is_string()) fail("\"output\" must be a string");
    config.output = root.at("output").get<std::string>();
  }
  if (root.contains("threads")) {
    config.threads = integer_field(root, "config", "threads");
    if (config.threads < 1) fail("\"threads\" must be >= 1");
  }
  return config;
}

SweepConfig parse_config(const std::string& text) {
  RunConfig run = parse_run_config(text);
  if (!run.baths) fail("sweep configs need a \"baths\" section");
  if (!run.sweep) fail("sweep configs need a \"sweep\" section");
  return SweepConfig{std::move(run.chain),     *run.baths,
                     std::move(run.sweep->first), std::move(run.sweep->second),
                     std::move(run.output),    run.threads};
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  const std::vector<double> outer = grid_points(config.axis1);
  const std::vector<double> inner = grid_points(config.axis2);
  const std::size_t total = outer.size() * inner.size();
  std::vector<SweepRow> rows(total);

  const auto evaluate = [&](std::size_t index) {
    const double v1 = outer[index / inner.size()];
    const double v2 = inner[index % inner.size()];
    rows[index] = evaluate_point(config.chain, config.baths, config.axis1.name,
                                 v1, config.axis2.name, v2);
  };

  const int workers =
      std::max(1, std::min<int>(config.threads, static_cast<int>(total)));
  if (workers == 1) {
    for (std::size_t i = 0; i < total; ++i) evaluate(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < total;
             i = next.fetch_add(1)) {
          evaluate(i);
        }
      });
    }
    for (std::thread& worker : pool) worker.join();
  }
  return rows;
}

void emit_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "param1,param2,J_fwd,J_rev,R,flags\n";
  for (const SweepRow& row : rows) {
    out << format_value(row.p1) << ',' << format_value(row.p2) << ','
        << format_value(row.forward) << ',' << format_value(row.reversed) << ','
        << format_value(row.factor) << ',';
    for (std::size_t i = 0; i < row.flags.size(); ++i) {
      if (i > 0) out << ';';
      out << row.flags[i];
    }
    out << '\n';
  }
}

void write_csv(const std::vector<SweepRow>& rows, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw io_error("sweep: cannot open \"" + path + "\" for writing");
  }
  emit_csv(rows, out);
  out.flush();
  if (!out) {
    throw io_error("sweep: failed writing \"" + path + "\"");
  }
}

}  // namespace xxchain
