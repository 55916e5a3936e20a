#pragma once

#include <cmath>

#include "sbrsma/distributions.hpp"
#include "sbrsma/linklevel.hpp"

namespace sbrsma {

// Full static description of one experiment point.
struct ScenarioConfig {
  int antennas = 4;
  FadingParams fading;
  PowerSplit split;
  RateTargets rates;
  double eta = 0.8;
  double psi = 10.0;  // average SNR, linear

  double psi_db() const { return 10.0 * std::log10(psi); }
  void set_psi_db(double db) { psi = std::pow(10.0, db / 10.0); }
  void validate() const;
};

}  // namespace sbrsma
