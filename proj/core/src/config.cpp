// Copyright 2026 The fuota-sim Authors
//
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fuota/config.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "fuota/benchmarks.hpp"
#include "fuota/errors.hpp"

namespace fuota {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

// Typed view of one JSON object that remembers which keys were read, so that
// leftovers can be reported as unknown fields.
class Section {
 public:
  Section(const json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) throw ConfigError("expected an object", path_);
  }

  bool has(const std::string& key) const { return node_.contains(key); }
  std::string path(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  const json& raw(const std::string& key) {
    used_.insert(key);
    return node_.at(key);
  }

  template <class T>
  void get(const std::string& key, T& out) {
    if (!has(key)) return;
    out = convert<T>(raw(key), path(key));
  }

  template <class T>
  T require(const std::string& key) {
    if (!has(key)) throw ConfigError("required field is missing", path(key));
    return convert<T>(raw(key), path(key));
  }

  Section child(const std::string& key) { return Section(raw(key), path(key)); }

  void finish() const {
    for (const auto& [key, value] : node_.items()) {
      if (!used_.count(key)) throw ConfigError("unknown field", path(key));
    }
  }

  template <class T>
  static T convert(const json& value, const std::string& where) {
    try {
      if constexpr (std::is_same_v<T, double>) {
        if (!value.is_number()) throw ConfigError("expected a number", where);
      } else if constexpr (std::is_integral_v<T> && !std::is_same_v<T, bool>) {
        if (!value.is_number_integer()) throw ConfigError("expected an integer", where);
      } else if constexpr (std::is_same_v<T, bool>) {
        if (!value.is_boolean()) throw ConfigError("expected true or false", where);
      } else if constexpr (std::is_same_v<T, std::string>) {
        if (!value.is_string()) throw ConfigError("expected a string", where);
      }
      return value.get<T>();
    } catch (const json::exception& e) {
      throw ConfigError(e.what(), where);
    }
  }

 private:
  const json& node_;
  std::string path_;
  std::set<std::string> used_;
};

template <class E>
E parse_enum(const std::string& text, std::initializer_list<std::pair<const char*, E>> names,
             const std::string& where) {
  std::string allowed;
  for (const auto& [name, value] : names) {
    if (text == name) return value;
    allowed += allowed.empty() ? name : std::string(", ") + name;
  }
  throw ConfigError("'" + text + "' is not one of: " + allowed, where);
}

const std::initializer_list<std::pair<const char*, RunMode>> kModes{
    {"analysis", RunMode::analysis}, {"simulate", RunMode::simulate}, {"both", RunMode::both}};
const std::initializer_list<std::pair<const char*, Layout>> kLayouts{
    {"uniform", Layout::uniform}, {"grid", Layout::grid}};
const std::initializer_list<std::pair<const char*, DecoderMode>> kDecoders{
    {"ideal", DecoderMode::ideal}, {"raptor", DecoderMode::raptor}};
const std::initializer_list<std::pair<const char*, EnergyFormula>> kEnergy{
    {"partitioned", EnergyFormula::partitioned}, {"as_printed", EnergyFormula::as_printed}};
const std::initializer_list<std::pair<const char*, AttemptsFormula>> kAttempts{
    {"success_probability", AttemptsFormula::success_probability},
    {"as_printed", AttemptsFormula::as_printed}};

template <class E>
std::string enum_name(E value, std::initializer_list<std::pair<const char*, E>> names) {
  for (const auto& [name, v] : names)
    if (v == value) return name;
  return "?";
}

template <class E>
void get_enum(Section& s, const std::string& key, E& out,
              std::initializer_list<std::pair<const char*, E>> names) {
  if (s.has(key)) out = parse_enum(s.require<std::string>(key), names, s.path(key));
}

SchemeConfig parse_scheme(const json& value, const std::string& where) {
  if (!value.is_string()) throw ConfigError("expected a scheme label", where);
  try {
    auto scheme = parse_scheme_label(value.get<std::string>());
    validate(scheme);
    return scheme;
  } catch (const ConfigError& e) {
    throw ConfigError(e.what(), where);
  } catch (const std::exception& e) {
    throw ConfigError(e.what(), where);
  }
}

std::vector<SchemeConfig> parse_schemes(Section& s, const std::string& key) {
  std::vector<SchemeConfig> out;
  const auto& list = s.raw(key);
  if (!list.is_array()) throw ConfigError("expected a list of scheme labels", s.path(key));
  for (std::size_t i = 0; i < list.size(); ++i)
    out.push_back(parse_scheme(list[i], s.path(key) + "[" + std::to_string(i) + "]"));
  return out;
}

template <class T>
std::vector<T> parse_list(Section& s, const std::string& key) {
  const auto& list = s.raw(key);
  if (!list.is_array()) throw ConfigError("expected a list", s.path(key));
  std::vector<T> out;
  for (std::size_t i = 0; i < list.size(); ++i)
    out.push_back(Section::convert<T>(list[i], s.path(key) + "[" + std::to_string(i) + "]"));
  return out;
}

// Either an explicit list or {"from", "to", "step"}.
std::vector<long> parse_range(Section& s, const std::string& key) {
  if (s.raw(key).is_array()) return parse_list<long>(s, key);
  Section r = s.child(key);
  const long from = r.require<long>("from");
  const long to = r.require<long>("to");
  const long step = r.require<long>("step");
  r.finish();
  if (step <= 0 || to < from) throw ConfigError("needs from <= to and step > 0", s.path(key));
  std::vector<long> out;
  for (long v = from; v <= to; v += step) out.push_back(v);
  return out;
}

template <class T>
void get_per_sf(Section& s, const std::string& key, PerSf<T>& out) {
  if (!s.has(key)) return;
  auto list = parse_list<T>(s, key);
  if (list.size() != SfIndex::kCount)
    throw ConfigError("expected one value per SF 7..12", s.path(key));
  std::copy(list.begin(), list.end(), out.begin());
}

fs::path resolve_table(const std::string& name, const fs::path& base_dir) {
  const fs::path p(name);
  std::vector<fs::path> candidates;
  if (p.is_absolute()) {
    candidates.push_back(p);
  } else {
    if (!base_dir.empty()) candidates.push_back(base_dir / p);
    candidates.push_back(fs::current_path() / p);
    if (const char* env = std::getenv("FUOTA_DATA_DIR")) candidates.push_back(fs::path(env) / p);
    candidates.push_back(fs::path(FUOTA_SOURCE_DATA_DIR) / p);
    candidates.push_back(fs::path(FUOTA_INSTALL_DATA_DIR) / p);
  }
  for (const auto& c : candidates)
    if (fs::is_regular_file(c)) return c;
  throw ConfigError("table file '" + name + "' not found", "phy.tables");
}

json read_json_file(const fs::path& path, const std::string& where) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'", where);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str(), nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what(), where);
  }
}

void parse_tables(const json& node, PhyProfile& phy, const std::string& where) {
  Section t(node, where);
  if (t.has("version")) {
    const int version = t.require<int>("version");
    if (version != 1) throw ConfigError("unsupported table version", t.path("version"));
  }
  std::string ignored;
  t.get("name", ignored);
  t.get("source", ignored);
  if (!t.has("sensitivity_dbm")) throw ConfigError("required field is missing", t.path("sensitivity_dbm"));
  get_per_sf(t, "sensitivity_dbm", phy.sensitivity_dbm);
  const auto& rows = t.raw("capture_threshold_db");
  if (!rows.is_array() || rows.size() != SfIndex::kCount)
    throw ConfigError("expected a 6x6 matrix", t.path("capture_threshold_db"));
  for (std::size_t i = 0; i < SfIndex::kCount; ++i) {
    const std::string row_path = t.path("capture_threshold_db") + "[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != SfIndex::kCount)
      throw ConfigError("expected 6 values", row_path);
    for (std::size_t j = 0; j < SfIndex::kCount; ++j)
      phy.capture_threshold_db[i][j] =
          Section::convert<double>(rows[i][j], row_path + "[" + std::to_string(j) + "]");
  }
  t.finish();
}

PhyProfile parse_phy(Section s, const fs::path& base_dir) {
  PhyProfile phy;
  phy.rx_power_w = 0.038 * 3.3;
  phy.tx_power_w = 0.083 * 3.3;
  if (!s.has("tables")) throw ConfigError("required field is missing", s.path("tables"));
  const auto& tables = s.raw("tables");
  if (tables.is_string()) {
    const auto file = resolve_table(tables.get<std::string>(), base_dir);
    parse_tables(read_json_file(file, s.path("tables")), phy, file.string());
  } else {
    parse_tables(tables, phy, s.path("tables"));
  }
  s.get("bandwidth_hz", phy.bandwidth_hz);
  s.get("preamble_symbols", phy.preamble_symbols);
  s.get("header_flag", phy.header_flag);
  get_per_sf(s, "ldro_flag", phy.ldro_flag);
  s.get("coding_rate_index", phy.coding_rate_index);
  s.get("rx_power_w", phy.rx_power_w);
  s.get("tx_power_w", phy.tx_power_w);
  s.get("tx_rf_power_dbm", phy.tx_rf_power_dbm);
  s.finish();
  phy.validate();
  return phy;
}

NetworkConfig parse_network(Section s) {
  NetworkConfig n;
  s.get("recipients", n.recipients);
  s.get("region_radius_m", n.region_radius_m);
  s.get("image_bytes", n.image_bytes);
  s.get("fragments", n.fragments);
  s.get("duty_cycle_percent", n.duty_cycle_percent);
  s.get("path_loss_exponent", n.path_loss_exponent);
  s.get("gamma0", n.gamma0);
  s.get("interferer_intensity_per_m2", n.interferer_intensity_per_m2);
  s.get("interferer_frame_interval_s", n.interferer_frame_interval_s);
  s.get("channels", n.channels);
  s.get("interferer_payload_bytes", n.interferer_payload_bytes);
  get_per_sf(s, "interferer_sf_probabilities", n.interferer_sf_probabilities);
  s.get("detection_epsilon", n.detection_epsilon);
  s.get("control_airtime_s", n.control_airtime_s);
  s.get("ack_payload_bytes", n.ack_payload_bytes);
  s.get("ack_sf", n.ack_sf);
  s.get("failure_at_k", n.failure_at_k);
  s.get("failure_beyond_k", n.failure_beyond_k);
  get_enum(s, "proposed_decoder", n.proposed_decoder, kDecoders);
  get_enum(s, "benchmark_decoder", n.benchmark_decoder, kDecoders);
  s.finish();
  n.validate();
  return n;
}

AnalysisOptions parse_analysis(Section s) {
  AnalysisOptions a;
  get_enum(s, "energy_formula", a.energy_formula, kEnergy);
  get_enum(s, "attempts_formula", a.attempts_formula, kAttempts);
  s.get("poisson_tail_mass", a.poisson_tail_mass);
  s.get("integration_tail", a.integration_tail);
  s.get("quad_rel_tol", a.quad_rel_tol);
  s.get("min_success_probability", a.min_success_probability);
  s.finish();
  auto in_unit = [](double v) { return v > 0.0 && v < 1.0; };
  if (!in_unit(a.poisson_tail_mass)) throw ConfigError("must be in (0, 1)", "analysis.poisson_tail_mass");
  if (!in_unit(a.integration_tail)) throw ConfigError("must be in (0, 1)", "analysis.integration_tail");
  if (!in_unit(a.quad_rel_tol)) throw ConfigError("must be in (0, 1)", "analysis.quad_rel_tol");
  if (!(a.min_success_probability >= 0.0 && a.min_success_probability < 1.0))
    throw ConfigError("must be in [0, 1)", "analysis.min_success_probability");
  return a;
}

DutyProfile parse_duty(Section s) {
  DutyProfile d;
  s.get("battery_mah", d.battery_mah);
  s.get("updates_per_month", d.updates_per_month);
  s.get("uplink_period_hr", d.uplink_period_hr);
  s.get("uplink_payload_bytes", d.uplink_payload_bytes);
  s.get("uplink_sf", d.uplink_sf);
  if (s.has("currents_ma")) {
    Section c = s.child("currents_ma");
    c.get("tx", d.tx_current_ma);
    c.get("rx", d.rx_current_ma);
    c.get("sleep", d.sleep_current_ma);
    c.finish();
  }
  s.finish();
  d.validate();
  return d;
}

LifetimeSpec parse_lifetime(Section s) {
  LifetimeSpec l;
  l.schemes = {ProposedScheme{}, FixedSfScheme{SfIndex(11)},
               GroupBasedScheme{GroupCriterion::energy}};
  l.points = {{1.0, 12}, {0.25, 7}};
  if (s.has("duty")) l.duty = parse_duty(s.child("duty"));
  if (s.has("schemes")) l.schemes = parse_schemes(s, "schemes");
  if (s.has("points")) {
    const auto& list = s.raw("points");
    if (!list.is_array()) throw ConfigError("expected a list", s.path("points"));
    l.points.clear();
    for (std::size_t i = 0; i < list.size(); ++i) {
      Section p(list[i], s.path("points") + "[" + std::to_string(i) + "]");
      LifetimePoint point;
      p.get("distance_fraction", point.distance_fraction);
      p.get("uplink_sf", point.uplink_sf);
      p.finish();
      if (!(point.distance_fraction > 0.0 && point.distance_fraction <= 1.0))
        throw ConfigError("must be in (0, 1]", p.path("distance_fraction"));
      if (point.uplink_sf < SfIndex::kMin || point.uplink_sf > SfIndex::kMax)
        throw ConfigError("must be in 7..12", p.path("uplink_sf"));
      l.points.push_back(point);
    }
  }
  s.finish();
  return l;
}

ExperimentSpec parse_experiment(Section s) {
  ExperimentSpec e;
  e.schemes = BenchmarkSuite::defaults().schemes;
  e.lifetime = parse_lifetime(Section(json::object(), "experiment.lifetime"));
  e.name = s.require<std::string>("name");
  if (e.name.empty()) throw ConfigError("must not be empty", "experiment.name");
  get_enum(s, "mode", e.mode, kModes);
  if (s.has("schemes")) e.schemes = parse_schemes(s, "schemes");
  get_enum(s, "layout", e.layout, kLayouts);
  s.get("grid_points", e.grid_points);
  s.get("distance_bins", e.distance_bins);
  s.get("quadrature_panels", e.quadrature_panels);
  s.get("runs", e.runs);
  s.get("seed", e.seed);
  s.get("max_frames_factor", e.max_frames_factor);
  if (s.has("sweep")) {
    Section w = s.child("sweep");
    SweepSpec sweep;
    sweep.frames_per_round = {300};
    sweep.first_sfs = {7};
    if (w.has("frames_per_round")) sweep.frames_per_round = parse_range(w, "frames_per_round");
    if (w.has("first_sfs")) sweep.first_sfs = parse_list<int>(w, "first_sfs");
    w.get("last_sf", sweep.last_sf);
    w.finish();
    for (long fpr : sweep.frames_per_round)
      if (fpr < 1) throw ConfigError("must be >= 1", "experiment.sweep.frames_per_round");
    for (int sf : sweep.first_sfs)
      if (sf < SfIndex::kMin || sf > sweep.last_sf)
        throw ConfigError("must lie in 7..last_sf", "experiment.sweep.first_sfs");
    if (sweep.last_sf < SfIndex::kMin || sweep.last_sf > SfIndex::kMax)
      throw ConfigError("must be in 7..12", "experiment.sweep.last_sf");
    e.sweep = sweep;
  }
  if (s.has("traffic_intensities")) {
    e.traffic_intensities = parse_list<double>(s, "traffic_intensities");
    for (double v : e.traffic_intensities)
      if (!(v >= 0.0)) throw ConfigError("must be >= 0", "experiment.traffic_intensities");
  }
  if (s.has("lifetime")) e.lifetime = parse_lifetime(s.child("lifetime"));
  s.get("output_dir", e.output_dir);
  s.finish();

  if (e.schemes.empty()) throw ConfigError("must list at least one scheme", "experiment.schemes");
  if (e.grid_points < 1) throw ConfigError("must be >= 1", "experiment.grid_points");
  if (e.distance_bins < 1) throw ConfigError("must be >= 1", "experiment.distance_bins");
  if (e.quadrature_panels < 1) throw ConfigError("must be >= 1", "experiment.quadrature_panels");
  if (e.runs < 1) throw ConfigError("must be >= 1", "experiment.runs");
  if (!(e.max_frames_factor >= 1.0)) throw ConfigError("must be >= 1", "experiment.max_frames_factor");
  return e;
}

json duty_to_json(const DutyProfile& d) {
  return {{"battery_mah", d.battery_mah},
          {"updates_per_month", d.updates_per_month},
          {"uplink_period_hr", d.uplink_period_hr},
          {"uplink_payload_bytes", d.uplink_payload_bytes},
          {"uplink_sf", d.uplink_sf},
          {"currents_ma",
           {{"tx", d.tx_current_ma}, {"rx", d.rx_current_ma}, {"sleep", d.sleep_current_ma}}}};
}

}  // namespace

LoadedConfig parse_config(const json& document, const fs::path& base_dir) {
  static const json kEmpty = json::object();
  Section root(document.is_null() ? kEmpty : document, "");
  std::vector<std::string> missing;
  if (!root.has("experiment") || !document["experiment"].is_object() ||
      !document["experiment"].contains("name"))
    missing.emplace_back("experiment.name");
  if (!root.has("phy") || !document["phy"].is_object() || !document["phy"].contains("tables"))
    missing.emplace_back("phy.tables");
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw ConfigError("missing required fields: " + list, missing.front());
  }

  LoadedConfig c;
  c.experiment = parse_experiment(root.child("experiment"));
  c.phy = parse_phy(root.child("phy"), base_dir);
  if (root.has("network")) c.network = parse_network(root.child("network"));
  else c.network.validate();
  if (root.has("analysis")) c.analysis = parse_analysis(root.child("analysis"));
  root.finish();
  return c;
}

LoadedConfig load_config(const fs::path& path) {
  if (!fs::exists(path)) throw ConfigError("file not found: " + path.string(), "config");
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  json doc;
  if (text.find_first_not_of(" \t\r\n") != std::string::npos) {
    try {
      doc = json::parse(text, nullptr, true, true);
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string("invalid JSON: ") + e.what(), "config");
    }
  }
  return parse_config(doc, path.parent_path());
}

json scheme_to_json(const SchemeConfig& scheme) { return scheme_label(scheme); }

json to_json(const LoadedConfig& c) {
  const auto& e = c.experiment;
  json schemes = json::array();
  for (const auto& s : e.schemes) schemes.push_back(scheme_to_json(s));
  json lifetime_schemes = json::array();
  for (const auto& s : e.lifetime.schemes) lifetime_schemes.push_back(scheme_to_json(s));
  json points = json::array();
  for (const auto& p : e.lifetime.points)
    points.push_back({{"distance_fraction", p.distance_fraction}, {"uplink_sf", p.uplink_sf}});

  json experiment = {
      {"name", e.name},
      {"mode", enum_name(e.mode, kModes)},
      {"schemes", schemes},
      {"layout", enum_name(e.layout, kLayouts)},
      {"grid_points", e.grid_points},
      {"distance_bins", e.distance_bins},
      {"quadrature_panels", e.quadrature_panels},
      {"runs", e.runs},
      {"seed", e.seed},
      {"max_frames_factor", e.max_frames_factor},
      {"traffic_intensities", e.traffic_intensities},
      {"lifetime",
       {{"duty", duty_to_json(e.lifetime.duty)}, {"schemes", lifetime_schemes}, {"points", points}}},
      {"output_dir", e.output_dir}};
  if (e.sweep) {
    experiment["sweep"] = {{"frames_per_round", e.sweep->frames_per_round},
                           {"first_sfs", e.sweep->first_sfs},
                           {"last_sf", e.sweep->last_sf}};
  }

  json capture = json::array();
  for (const auto& row : c.phy.capture_threshold_db) capture.push_back(row);
  json phy = {{"tables",
               {{"version", 1},
                {"sensitivity_dbm", c.phy.sensitivity_dbm},
                {"capture_threshold_db", capture}}},
              {"bandwidth_hz", c.phy.bandwidth_hz},
              {"preamble_symbols", c.phy.preamble_symbols},
              {"header_flag", c.phy.header_flag},
              {"ldro_flag", c.phy.ldro_flag},
              {"coding_rate_index", c.phy.coding_rate_index},
              {"rx_power_w", c.phy.rx_power_w},
              {"tx_power_w", c.phy.tx_power_w},
              {"tx_rf_power_dbm", c.phy.tx_rf_power_dbm}};

  const auto& n = c.network;
  json network = {{"recipients", n.recipients},
                  {"region_radius_m", n.region_radius_m},
                  {"image_bytes", n.image_bytes},
                  {"fragments", n.fragments},
                  {"duty_cycle_percent", n.duty_cycle_percent},
                  {"path_loss_exponent", n.path_loss_exponent},
                  {"gamma0", n.gamma0},
                  {"interferer_intensity_per_m2", n.interferer_intensity_per_m2},
                  {"interferer_frame_interval_s", n.interferer_frame_interval_s},
                  {"channels", n.channels},
                  {"interferer_payload_bytes", n.interferer_payload_bytes},
                  {"interferer_sf_probabilities", n.interferer_sf_probabilities},
                  {"detection_epsilon", n.detection_epsilon},
                  {"control_airtime_s", n.control_airtime_s},
                  {"ack_payload_bytes", n.ack_payload_bytes},
                  {"ack_sf", n.ack_sf},
                  {"failure_at_k", n.failure_at_k},
                  {"failure_beyond_k", n.failure_beyond_k},
                  {"proposed_decoder", enum_name(n.proposed_decoder, kDecoders)},
                  {"benchmark_decoder", enum_name(n.benchmark_decoder, kDecoders)}};

  const auto& a = c.analysis;
  json analysis = {{"energy_formula", enum_name(a.energy_formula, kEnergy)},
                   {"attempts_formula", enum_name(a.attempts_formula, kAttempts)},
                   {"poisson_tail_mass", a.poisson_tail_mass},
                   {"integration_tail", a.integration_tail},
                   {"quad_rel_tol", a.quad_rel_tol},
                   {"min_success_probability", a.min_success_probability}};

  return {{"experiment", experiment}, {"network", network}, {"phy", phy}, {"analysis", analysis}};
}

std::string fingerprint(const LoadedConfig& config) {
  const std::string text = to_json(config).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

ScenarioModel make_model(const LoadedConfig& config) {
  return ScenarioModel(config.phy, config.network, config.analysis);
}

SimConfig make_sim_config(const LoadedConfig& config, const SchemeConfig& scheme) {
  const auto& e = config.experiment;
  SimConfig sim;
  sim.scheme = scheme;
  sim.runs = e.runs;
  sim.seed = e.seed;
  sim.layout = e.layout;
  sim.grid_points = e.grid_points;
  sim.distance_bins = e.distance_bins;
  sim.max_frames_factor = e.max_frames_factor;
  return sim;
}

}  // namespace fuota
