#include "sbrsma/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sbrsma {
namespace {

using nlohmann::json;

double take_number(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number())
    throw std::invalid_argument(std::string("config field '") + key + "' must be a number");
  return j.at(key).get<double>();
}

}  // namespace

ScenarioConfig config_from_json_text(const std::string& text) {
  json j = json::object();
  // Whitespace-only input selects the stock configuration.
  if (text.find_first_not_of(" \t\r\n") != std::string::npos) {
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config root must be a JSON object");
  }

  static const char* known[] = {"L",       "lambda0", "lambda1", "lambda2", "omega1",
                                "omega2",  "alpha_c", "alpha_1", "alpha_2", "Rc",
                                "R1",      "R2",      "Rb",      "eta",     "Psi_dB"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) throw std::invalid_argument("unknown config field '" + it.key() + "'");
  }

  ScenarioConfig cfg;
  if (j.contains("L")) {
    if (!j.at("L").is_number_integer())
      throw std::invalid_argument("config field 'L' must be an integer");
    cfg.antennas = j.at("L").get<int>();
  }
  cfg.fading.lambda0 = take_number(j, "lambda0", 0.25);
  cfg.fading.lambda1 = take_number(j, "lambda1", 0.5);
  cfg.fading.lambda2 = take_number(j, "lambda2", 0.75);
  cfg.fading.omega1 = take_number(j, "omega1", 0.5);
  cfg.fading.omega2 = take_number(j, "omega2", 0.25);
  cfg.split.alpha_c = take_number(j, "alpha_c", 0.5);
  cfg.split.alpha_1 = take_number(j, "alpha_1", 0.3);
  cfg.split.alpha_2 = take_number(j, "alpha_2", 0.2);
  cfg.rates.rc = take_number(j, "Rc", 0.5);
  cfg.rates.r1 = take_number(j, "R1", 1.0);
  cfg.rates.r2 = take_number(j, "R2", 1.5);
  cfg.rates.rb = take_number(j, "Rb", 1.0);
  cfg.rates.refresh();
  cfg.eta = take_number(j, "eta", 0.8);
  cfg.set_psi_db(take_number(j, "Psi_dB", 10.0));

  try {
    cfg.validate();
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("config validation: ") + e.what());
  }
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return config_from_json_text(buf.str());
}

std::string config_to_json_text(const ScenarioConfig& cfg) {
  json j;
  j["L"] = cfg.antennas;
  j["lambda0"] = cfg.fading.lambda0;
  j["lambda1"] = cfg.fading.lambda1;
  j["lambda2"] = cfg.fading.lambda2;
  j["omega1"] = cfg.fading.omega1;
  j["omega2"] = cfg.fading.omega2;
  j["alpha_c"] = cfg.split.alpha_c;
  j["alpha_1"] = cfg.split.alpha_1;
  j["alpha_2"] = cfg.split.alpha_2;
  j["Rc"] = cfg.rates.rc;
  j["R1"] = cfg.rates.r1;
  j["R2"] = cfg.rates.r2;
  j["Rb"] = cfg.rates.rb;
  j["eta"] = cfg.eta;
  j["Psi_dB"] = cfg.psi_db();
  return j.dump(2);
}

}  // namespace sbrsma
