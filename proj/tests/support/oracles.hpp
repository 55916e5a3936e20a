#pragma once

// Test-side reference machinery, deliberately independent of the library's
// own quadrature paths: composite Gauss-Legendre on explicit intervals and a
// plain empirical-CDF distance. Nothing here calls into sbrsma numerics.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace oracles {

// Composite 20-point Gauss-Legendre over [a, b].
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        int panels = 64) {
  static const double xs[10] = {
      0.0765265211334973, 0.2277858511416451, 0.3737060887154195, 0.5108670019508271,
      0.6360536807265150, 0.7463319064601508, 0.8391169718222188, 0.9122344282513259,
      0.9639719272779138, 0.9931285991850949};
  static const double ws[10] = {
      0.1527533871307258, 0.1491729864726037, 0.1420961093183820, 0.1316886384491766,
      0.1181945319615184, 0.1019301198172404, 0.0832767415767048, 0.0626720483341091,
      0.0406014298003869, 0.0176140071391521};
  double acc = 0.0;
  const double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    const double half = 0.5 * width;
    for (int i = 0; i < 10; ++i)
      acc += half * ws[i] * (f(mid - half * xs[i]) + f(mid + half * xs[i]));
  }
  return acc;
}

// Integral over (0, inf) of an exponentially-decaying integrand, via x = e^t.
inline double integrate_halfline(const std::function<double(double)>& f, double t_lo = -30.0,
                                 double t_hi = 30.0, int panels = 256) {
  return integrate([&](double t) { return f(std::exp(t)) * std::exp(t); }, t_lo, t_hi, panels);
}

// Kolmogorov-Smirnov distance between a sample and a CDF.
inline double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double F = cdf(sample[i]);
    d = std::max(d, std::abs((i + 1) / n - F));
    d = std::max(d, std::abs(F - i / n));
  }
  return d;
}

}  // namespace oracles
