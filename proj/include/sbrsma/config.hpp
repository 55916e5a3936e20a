#pragma once

#include <string>

#include "sbrsma/scenario.hpp"

namespace sbrsma {

// JSON scenario file. Recognized keys (all optional, defaults below):
//   L, lambda0, lambda1, lambda2, omega1, omega2,
//   alpha_c, alpha_1, alpha_2, Rc, R1, R2, Rb, eta, Psi_dB
// An empty file (or "{}") yields the stock configuration: L=4,
// lambda0=omega2=0.25, lambda1=omega1=0.5, lambda2=0.75, eta=0.8,
// alpha_c=0.5, alpha_1=0.3, alpha_2=0.2, Rc=0.5, R1=Rb=1, R2=1.5, Psi_dB=10.
// Violations are reported with the offending field path.
ScenarioConfig load_config(const std::string& path);

ScenarioConfig config_from_json_text(const std::string& text);
std::string config_to_json_text(const ScenarioConfig& cfg);

}  // namespace sbrsma
