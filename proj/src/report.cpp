#include "sbrsma/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sbrsma {
namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

const char* kHeader =
    "strategy,L,Psi_dB,Rc,R1,R2,Rb,alpha_c,alpha_1,alpha_2,eta,delta_policy,"
    "trials,seed,sop,std_error,ci_lo,ci_hi,rejected_blocks";

}  // namespace

std::string rows_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << kHeader << "\n";
  for (const auto& r : rows) {
    out << r.strategy << ',' << r.antennas << ',' << fmt(r.psi_db) << ',' << fmt(r.rc) << ','
        << fmt(r.r1) << ',' << fmt(r.r2) << ',' << fmt(r.rb) << ',' << fmt(r.alpha_c) << ','
        << fmt(r.alpha_1) << ',' << fmt(r.alpha_2) << ',' << fmt(r.eta) << ','
        << r.delta_policy << ',' << r.trials << ',' << r.seed << ',' << fmt(r.est.value)
        << ',' << fmt(r.est.std_error) << ',' << fmt(r.est.ci_lo) << ',' << fmt(r.est.ci_hi)
        << ',' << r.est.rejected_blocks << "\n";
  }
  return out.str();
}

std::vector<SweepRow> rows_from_csv_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
  if (split_line(line) != split_line(kHeader))
    throw std::invalid_argument("unexpected CSV header");
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_line(line);
    if (f.size() != 19) throw std::invalid_argument("bad CSV row: " + line);
    SweepRow r;
    r.strategy = f[0];
    r.antennas = std::stoi(f[1]);
    r.psi_db = std::stod(f[2]);
    r.rc = std::stod(f[3]);
    r.r1 = std::stod(f[4]);
    r.r2 = std::stod(f[5]);
    r.rb = std::stod(f[6]);
    r.alpha_c = std::stod(f[7]);
    r.alpha_1 = std::stod(f[8]);
    r.alpha_2 = std::stod(f[9]);
    r.eta = std::stod(f[10]);
    r.delta_policy = f[11];
    r.trials = std::stoull(f[12]);
    r.seed = std::stoull(f[13]);
    r.est.value = std::stod(f[14]);
    r.est.std_error = std::stod(f[15]);
    r.est.ci_lo = std::stod(f[16]);
    r.est.ci_hi = std::stod(f[17]);
    r.est.rejected_blocks = std::stoull(f[18]);
    r.est.trials = r.trials;
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Curve> csv_to_curves(const std::vector<SweepRow>& rows) {
  std::map<std::string, Curve> by_key;
  std::vector<std::string> order;
  for (const auto& r : rows) {
    std::ostringstream key;
    key << r.strategy << "," << r.delta_policy << ",L=" << r.antennas << ",Rc=" << r.rc
        << ",R1=" << r.r1 << ",R2=" << r.r2 << ",Rb=" << r.rb;
    auto [it, inserted] = by_key.try_emplace(key.str());
    if (inserted) {
      it->second.label = key.str();
      order.push_back(key.str());
    }
    it->second.psi_db.push_back(r.psi_db);
    it->second.sop.push_back(r.est.value);
  }
  std::vector<Curve> curves;
  for (const auto& k : order) {
    Curve c = by_key[k];
    // sort by Psi
    std::vector<std::size_t> idx(c.psi_db.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return c.psi_db[a] < c.psi_db[b]; });
    Curve s;
    s.label = c.label;
    for (std::size_t i : idx) {
      s.psi_db.push_back(c.psi_db[i]);
      s.sop.push_back(c.sop[i]);
    }
    curves.push_back(std::move(s));
  }
  return curves;
}

GainReport report_gain(const std::vector<SweepRow>& rows, double target) {
  if (!(target > 0.0) || !(target < 1.0))
    throw std::invalid_argument("gain target must be a probability in (0,1)");
  GainReport rep;
  rep.target = target;
  for (const auto& c : csv_to_curves(rows)) {
    GainEntry e;
    e.curve = c.label;
    // first bracketing pair on the descending curve
    for (std::size_t i = 0; i + 1 < c.sop.size(); ++i) {
      const double hi = c.sop[i], lo = c.sop[i + 1];
      if (hi >= target && target >= lo && hi > 0.0 && lo > 0.0 && hi != lo) {
        const double f = (std::log10(hi) - std::log10(target)) /
                         (std::log10(hi) - std::log10(lo));
        e.psi_db_at_target = c.psi_db[i] + f * (c.psi_db[i + 1] - c.psi_db[i]);
        e.reached = true;
        break;
      }
    }
    rep.entries.push_back(e);
  }
  for (std::size_t a = 0; a < rep.entries.size(); ++a)
    for (std::size_t b = a + 1; b < rep.entries.size(); ++b)
      if (rep.entries[a].reached && rep.entries[b].reached)
        rep.pairs.push_back({rep.entries[a].curve, rep.entries[b].curve,
                             rep.entries[a].psi_db_at_target - rep.entries[b].psi_db_at_target});
  return rep;
}

std::string gain_report_to_text(const GainReport& rep) {
  std::ostringstream out;
  out << "target_sop=" << fmt(rep.target) << "\n";
  for (const auto& e : rep.entries) {
    out << e.curve << ": ";
    if (e.reached)
      out << "Psi_dB=" << fmt(e.psi_db_at_target) << "\n";
    else
      out << "not-reached\n";
  }
  for (const auto& p : rep.pairs)
    out << "gain[" << p.b << " over " << p.a << "] = " << fmt(p.gain_db) << " dB\n";
  return out.str();
}

std::string curves_to_svg(const std::vector<Curve>& curves, const std::string& title) {
  const double width = 760, height = 520;
  const double ml = 70, mr = 180, mt = 40, mb = 50;
  double x_lo = 1e300, x_hi = -1e300, y_lo = 0.0;
  double y_min_pos = 1.0;
  for (const auto& c : curves) {
    for (std::size_t i = 0; i < c.psi_db.size(); ++i) {
      x_lo = std::min(x_lo, c.psi_db[i]);
      x_hi = std::max(x_hi, c.psi_db[i]);
      if (c.sop[i] > 0.0) y_min_pos = std::min(y_min_pos, c.sop[i]);
    }
  }
  if (!(x_hi > x_lo)) {
    x_lo -= 1.0;
    x_hi += 1.0;
  }
  y_lo = std::floor(std::log10(std::max(y_min_pos, 1e-8)));
  const double y_hi = 0.0;  // log10(1)

  auto xpix = [&](double x) { return ml + (x - x_lo) / (x_hi - x_lo) * (width - ml - mr); };
  auto ypix = [&](double logy) {
    return mt + (y_hi - logy) / (y_hi - y_lo) * (height - mt - mb);
  };

  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  std::ostringstream svg;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << width << "' height='" << height
      << "'>\n<rect width='100%' height='100%' fill='white'/>\n";
  svg << "<text x='" << width / 2 << "' y='22' text-anchor='middle' font-size='15'>" << title
      << "</text>\n";
  // axes
  svg << "<line x1='" << ml << "' y1='" << height - mb << "' x2='" << width - mr << "' y2='"
      << height - mb << "' stroke='black'/>\n";
  svg << "<line x1='" << ml << "' y1='" << mt << "' x2='" << ml << "' y2='" << height - mb
      << "' stroke='black'/>\n";
  for (int d = static_cast<int>(y_lo); d <= 0; ++d) {
    const double y = ypix(d);
    svg << "<line x1='" << ml - 4 << "' y1='" << y << "' x2='" << width - mr << "' y2='" << y
        << "' stroke='#dddddd'/>\n";
    svg << "<text x='" << ml - 8 << "' y='" << y + 4
        << "' text-anchor='end' font-size='11'>1e" << d << "</text>\n";
  }
  const double x_step = (x_hi - x_lo) > 25 ? 5.0 : 2.5;
  for (double x = std::ceil(x_lo / x_step) * x_step; x <= x_hi + 1e-9; x += x_step) {
    svg << "<text x='" << xpix(x) << "' y='" << height - mb + 16
        << "' text-anchor='middle' font-size='11'>" << x << "</text>\n";
  }
  svg << "<text x='" << (ml + width - mr) / 2 << "' y='" << height - 10
      << "' text-anchor='middle' font-size='12'>Psi (dB)</text>\n";
  svg << "<text x='16' y='" << (mt + height - mb) / 2
      << "' text-anchor='middle' font-size='12' transform='rotate(-90 16 "
      << (mt + height - mb) / 2 << ")'>outage probability</text>\n";

  int color = 0;
  double legend_y = mt + 10;
  for (const auto& c : curves) {
    const char* col = palette[color % 8];
    std::ostringstream pts;
    for (std::size_t i = 0; i < c.psi_db.size(); ++i) {
      if (!(c.sop[i] > 0.0)) continue;  // zero estimates cannot be drawn on a log axis
      const double ly = std::max(std::log10(c.sop[i]), y_lo);
      pts << xpix(c.psi_db[i]) << ',' << ypix(ly) << ' ';
    }
    svg << "<polyline fill='none' stroke='" << col << "' stroke-width='1.6' points='"
        << pts.str() << "'/>\n";
    svg << "<rect x='" << width - mr + 8 << "' y='" << legend_y - 9
        << "' width='14' height='3' fill='" << col << "'/>\n";
    svg << "<text x='" << width - mr + 26 << "' y='" << legend_y
        << "' font-size='10'>" << c.label << "</text>\n";
    legend_y += 16;
    ++color;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace sbrsma
