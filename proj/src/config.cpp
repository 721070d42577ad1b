#include "prosody/config.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "prosody/error.hpp"

namespace prosody::config {

namespace {

using nlohmann::json;

double number(const json& v, const std::string& key) {
  if (!v.is_number()) throw Error(ErrorKind::ConfigError, "key '" + key + "' must be a number");
  return v.get<double>();
}

}  // namespace

RunConfig parse_config(std::string_view json_text, RunConfig cfg) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ConfigError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::ConfigError, "config must be a JSON object");

  auto& p = cfg.f0;
  auto& c = cfg.constraints;
  for (const auto& [key, value] : doc.items()) {
    if (key == "base_hz") p.base_hz = number(value, key);
    else if (key == "h_level_st") p.h_level_st = number(value, key);
    else if (key == "l_level_st") p.l_level_st = number(value, key);
    else if (key == "dip_per_edge_st") p.dip_per_edge_st = number(value, key);
    else if (key == "downstep_factor") p.downstep_factor = number(value, key);
    else if (key == "edge_recovery") p.edge_recovery = number(value, key);
    else if (key == "mora_duration_s") p.mora_duration_s = number(value, key);
    else if (key == "frame_rate_hz") p.frame_rate_hz = number(value, key);
    else if (key == "final_l_st") p.final_l_st = number(value, key);
    else if (key == "enable_boost_rephrasing") {
      if (!value.is_boolean()) throw Error(ErrorKind::ConfigError, "key '" + key + "' must be a boolean");
      c.enable_boost_rephrasing = value.get<bool>();
    } else if (key == "boost_min_run") {
      if (!value.is_number_integer()) throw Error(ErrorKind::ConfigError, "key '" + key + "' must be an integer");
      c.boost_min_run = value.get<int>();
    } else {
      throw Error(ErrorKind::ConfigError, "unknown config key '" + key + "'");
    }
  }
  f0::validate(cfg.f0);
  wellformedness::validate(cfg.constraints);
  return cfg;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), base);
}

std::string to_json(const RunConfig& cfg) {
  const auto& p = cfg.f0;
  json doc = {
      {"base_hz", p.base_hz},
      {"h_level_st", p.h_level_st},
      {"l_level_st", p.l_level_st},
      {"dip_per_edge_st", p.dip_per_edge_st},
      {"downstep_factor", p.downstep_factor},
      {"edge_recovery", p.edge_recovery},
      {"mora_duration_s", p.mora_duration_s},
      {"frame_rate_hz", p.frame_rate_hz},
      {"final_l_st", p.final_l_st},
      {"enable_boost_rephrasing", cfg.constraints.enable_boost_rephrasing},
      {"boost_min_run", cfg.constraints.boost_min_run},
  };
  return doc.dump(2);
}

}  // namespace prosody::config
