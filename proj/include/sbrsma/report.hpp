#pragma once

#include <map>
#include <string>
#include <vector>

#include "sbrsma/montecarlo.hpp"

namespace sbrsma {

// Sweep rows as CSV, schema:
// strategy,L,Psi_dB,Rc,R1,R2,Rb,alpha_c,alpha_1,alpha_2,eta,delta_policy,
// trials,seed,sop,std_error,ci_lo,ci_hi,rejected_blocks
// Numbers are printed with full round-trip precision so identical runs give
// identical bytes.
std::string rows_to_csv(const std::vector<SweepRow>& rows);
std::vector<SweepRow> rows_from_csv_text(const std::string& text);
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// A curve = rows sharing everything but Psi_dB.
struct Curve {
  std::string label;
  std::vector<double> psi_db;
  std::vector<double> sop;
};

std::vector<Curve> csv_to_curves(const std::vector<SweepRow>& rows);

struct GainEntry {
  std::string curve;
  bool reached = false;
  double psi_db_at_target = 0.0;
};

struct GainReport {
  double target = 0.0;
  std::vector<GainEntry> entries;
  // pairwise power saving of b over a: psi_a - psi_b at the target, in dB
  // (positive when b reaches the target at lower SNR); reached pairs only
  struct Pair {
    std::string a, b;
    double gain_db;
  };
  std::vector<Pair> pairs;
};

// Log-linear interpolation of each curve's Psi at the target outage level,
// plus all pairwise dB differences. Curves that never bracket the target are
// marked not-reached.
GainReport report_gain(const std::vector<SweepRow>& rows, double target);
std::string gain_report_to_text(const GainReport& rep);

// Minimal SVG: one polyline per curve on a log-scaled outage axis.
std::string curves_to_svg(const std::vector<Curve>& curves, const std::string& title);

}  // namespace sbrsma
