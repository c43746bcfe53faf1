#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cy3/bigfloat.hpp"
#include "cy3/group.hpp"

namespace cy3 {

struct UpperHalfPoint {
  double re = 0.0;
  double im = 1.0;  // must be > 0
};

using ModuliPoint = std::array<UpperHalfPoint, 3>;

// Integer SL(2,Z) matrix acting by fractional linear transformations.
struct GammaMatrix {
  long long a = 1, b = 0, c = 0, d = 1;
  long long det() const { return a * d - b * c; }
};

struct CertifiedValue {
  Complex value;
  double bound = 0.0;  // rigorous absolute error bound
};

// Working precision for a requested tolerance: twice the tolerance digits
// plus ten guard digits, in bits.
mpfr_prec_t working_precision(double tol);

// Dedekind eta by the truncated q-product with a certified tail bound; the
// truncation index comes from the geometric bound on the log-product tail.
// Requires Im(tau) >= 1e-3.
CertifiedValue eta(const UpperHalfPoint& tau, double tol);
CertifiedValue eta(const Complex& tau, double tol);

// Discriminant Delta = eta^24.
CertifiedValue delta(const Complex& tau, double tol);

Complex moebius(const GammaMatrix& g, const Complex& tau);

// |Delta(g tau) - (c tau + d)^12 Delta(tau)| / |(c tau + d)^12 Delta(tau)|.
double delta_modularity_residual(const GammaMatrix& g,
                                 const UpperHalfPoint& tau, double tol);

// One generator of the ambient discrete group acting on the weight-12
// section prod Delta(tau_i) (dz1^dz2^dz3)^12: a quarter translation (acts
// trivially), a gamma in one slot, or a factor permutation.
struct SectionGenerator {
  enum class Kind { Translation, GammaSlot, Permutation } kind =
      Kind::Translation;
  int slot = 0;          // for GammaSlot
  GammaMatrix gamma;     // for GammaSlot
  std::uint8_t perm = 0;  // S3 index, for Permutation
};

double section_equivariance_residual(const SectionGenerator& h,
                                     const ModuliPoint& tau, double tol);

// K(tau) = -sum_i log(Im tau_i * |eta(tau_i)|^4), the global potential whose
// (i/2) d dbar is the Weil-Petersson form.
double kahler_potential(const ModuliPoint& tau, double tol);

struct KahlerMetric {
  // Hermitian 3x3, entries g[i][j] = d^2 K / (d tau_i d conj(tau_j)).
  std::array<std::array<std::array<double, 2>, 3>, 3> analytic;
  std::array<std::array<std::array<double, 2>, 3>, 3> finite_difference;
  double max_rel_error = 0.0;
  double min_eigenvalue = 0.0;
};

// Analytic metric (diagonal 1/(4 Im^2)) against central finite differences of
// the potential with step 1e-4 * Im tau_i; requires 1e-6 relative agreement
// and positive definiteness.
KahlerMetric kahler_metric(const ModuliPoint& tau, double tol);

struct MultiplierOrder {
  double modulus_deviation = 0.0;  // | |eps| - 1 |
  int order = 0;                   // least k <= 24 with eps^k = 1 within tol
  std::array<double, 2> epsilon;   // the measured multiplier
};

// eps := eta(g tau) / ((c tau + d)^(1/2) eta(tau)) with the principal square
// root; must be a root of unity of order dividing 24.
MultiplierOrder eta_multiplier_order(const GammaMatrix& g,
                                     const UpperHalfPoint& tau, double tol);

// ---------------------------------------------------------------------------
// Seeded batch certification runs.

struct ModularConfig {
  int samples = 100;
  std::uint64_t seed = 2026;
  double tol = 1e-12;
  long entry_bound = 10;
  double im_min = 0.5;
  double im_max = 3.0;
};

struct ModularReport {
  ModularConfig config;
  double max_delta_residual = 0.0;
  double max_section_residual = 0.0;
  double max_potential_invariance_residual = 0.0;
  double metric_max_rel_error = 0.0;
  double metric_min_eigenvalue = 0.0;
  double eta_i_abs_error = 0.0;     // against the doubled-precision oracle
  double min_abs_delta = 0.0;       // nonvanishing margin over all samples
  std::map<int, int> multiplier_orders;  // order -> count
  bool epsilon12_pm1 = true;        // eps^12 in {+1,-1} for all samples
};

ModularReport run_modular(const ModularConfig& cfg);

// All SL(2,Z) matrices with |entries| <= bound (used for uniform sampling).
std::vector<GammaMatrix> gamma_matrices_up_to(long bound);

}  // namespace cy3
