#pragma once

#include <string>
#include <vector>

#include "sbrsma/montecarlo.hpp"

namespace sbrsma {

enum class PresetName {
  Fig2PsiSweep,      // strategy comparison over Psi + fixed-delta benchmarks
  Fig3AntennaSweep,  // per-antenna-count curves over Psi
  Fig4RateCases,     // three documented rate-target cases over Psi
  ValidateTheorem1,  // Monte Carlo against the closed form, with flags
  ValidateFoxh       // elementary Fox-H identity table
};

PresetName preset_from_string(const std::string& name);
const char* to_string(PresetName p);
std::vector<std::string> preset_names();

struct PresetResult {
  bool ok = true;  // validate presets flip this when an agreement flag fails
  std::vector<std::string> files;
};

PresetResult run_preset(PresetName preset, const ScenarioConfig& cfg, std::uint64_t trials,
                        std::uint64_t seed, const std::string& out_dir,
                        const McOptions& opts = {});

// The three rate cases of the rate-target experiment: cases 1 and 2 trade a
// lower backscatter target for higher common/private targets relative to
// case 3.
struct RateCase {
  const char* name;
  RateTargets rates;
};
std::vector<RateCase> fig4_rate_cases();

}  // namespace sbrsma
