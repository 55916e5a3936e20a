#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sbrsma {

struct FoxHContourError : std::runtime_error {
  explicit FoxHContourError(const std::string& what) : std::runtime_error(what) {}
};

struct FoxHAccuracyError : std::runtime_error {
  explicit FoxHAccuracyError(const std::string& what) : std::runtime_error(what) {}
};

// Parameters of H^{m,n}_{p,q}[z | (a_i,A_i); (b_j,B_j)] in the Mellin-Barnes
// convention
//   H(z) = (1/2 pi i) Int chi(s) z^{-s} ds,
//   chi(s) = prod_{j<=m} Gamma(b_j + B_j s) prod_{i<=n} Gamma(1 - a_i - A_i s)
//          / [prod_{i>n} Gamma(a_i + A_i s) prod_{j>m} Gamma(1 - b_j - B_j s)],
// integrated along a vertical line separating the poles of the Gamma(b+Bs)
// family (left) from those of the Gamma(1-a-As) family (right).
struct FoxHSpec {
  std::vector<std::pair<double, double>> upper;  // (a_i, A_i), i = 1..p
  std::vector<std::pair<double, double>> lower;  // (b_j, B_j), j = 1..q
  int m = 0;  // leading lower params in the numerator
  int n = 0;  // leading upper params in the numerator

  void validate() const;
  // Admissible abscissa strip (left, right); either side may be infinite.
  std::pair<double, double> contour_strip() const;
};

// Contour quadrature controls. abscissa = NaN selects the automatic choice
// (magnitude-minimizing point of the admissible strip, which tracks the
// saddle for one-sided kernels). nodes is the per-refinement starting node
// count; the evaluator doubles it until two refinements agree to rel_tol.
struct ContourSettings {
  double abscissa = std::numeric_limits<double>::quiet_NaN();
  double half_length = 60.0;
  int nodes = 512;
  double rel_tol = 1e-8;
  int max_doublings = 4;

  void validate() const;
};

struct FoxHResult {
  double value = 0.0;
  double rel_err = 0.0;  // node-doubling estimate
};

FoxHResult foxh_uni(const FoxHSpec& spec, double z, const ContourSettings& cs = {});

// Bivariate kernel of the closed-form outage expression:
//   (1/2 pi i)^2 II Gamma(1 - outer_a - s - t) chi_s(s) chi_t(t) x^{-s} y^{-t} ds dt
// with chi_s/chi_t the univariate kernels of the two inner blocks. Covers the
// H^{0,1;1,1;0,1}_{1,0;1,1;1,0} layout (outer pair (a;1,1)) and its relatives.
struct BivariateFoxHSpec {
  double outer_a = 0.0;
  FoxHSpec inner_s;
  FoxHSpec inner_t;

  void validate() const;
};

FoxHResult foxh_bivariate(const BivariateFoxHSpec& spec, double x, double y,
                          const ContourSettings& cs = {});

}  // namespace sbrsma
