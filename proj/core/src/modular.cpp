#include "cy3/modular.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace cy3 {

mpfr_prec_t working_precision(double tol) {
  if (!(tol > 0)) throw Error("tolerance must be positive");
  double digits = -std::log10(tol);
  if (digits < 1) digits = 1;
  double wp_digits = 2.0 * digits + 10.0;
  return (mpfr_prec_t)std::ceil(wp_digits * 3.3219281) + 16;
}

namespace {

Complex to_complex(const UpperHalfPoint& tau, mpfr_prec_t prec) {
  return Complex(tau.re, tau.im, prec);
}

// Truncation index: smallest N with |q|^(N+1)/(1-|q|)^2 < tol/8.
long truncation_index(double abs_q, double tol) {
  if (!(abs_q < 1.0)) throw Error("nome modulus must be below 1");
  double target = std::log(tol / 8.0) + 2.0 * std::log1p(-abs_q);
  double n = target / std::log(abs_q);  // log(abs_q) < 0
  long N = (long)std::ceil(n);
  if (N < 1) N = 1;
  if (N > 2000000) throw Error("tolerance unreachable within the iteration cap");
  return N;
}

}  // namespace

CertifiedValue eta(const Complex& tau, double tol) {
  if (!(tol > 0)) throw Error("tolerance must be positive");
  mpfr_prec_t prec = std::max(tau.prec(), working_precision(tol));
  double im = tau.im.to_double();
  if (im < 1e-3) throw Error("Im(tau) below the 1e-3 evaluation guard");

  Real two_pi = Real(2.0, prec) * Real::pi(prec);
  Complex two_pi_i_tau(-(two_pi * tau.im), two_pi * tau.re);
  Complex q = exp(two_pi_i_tau);
  double abs_q = std::exp(-2.0 * M_PI * im);
  long N = truncation_index(abs_q, tol);

  Complex prod(1.0, 0.0, prec);
  Complex qn(1.0, 0.0, prec);
  for (long n = 1; n <= N; ++n) {
    qn = qn * q;
    prod = prod * (Complex(1.0, 0.0, prec) - qn);
  }
  Real t24(24.0, prec);
  Complex prefactor = exp(Complex(two_pi_i_tau.re / t24, two_pi_i_tau.im / t24));
  CertifiedValue out;
  out.value = prefactor * prod;

  // Tail of the log product is below t = |q|^(N+1)/(1-|q|)^2; the dropped
  // factor multiplies the value by e^(+-t).  Add a rounding allowance.
  double t = std::pow(abs_q, (double)(N + 1)) / ((1 - abs_q) * (1 - abs_q));
  double mag = abs(out.value).to_double();
  double rounding = std::ldexp((double)(N + 16), 4 - (int)prec);
  out.bound = mag * (std::expm1(t) + rounding) + 1e-300;
  return out;
}

CertifiedValue eta(const UpperHalfPoint& tau, double tol) {
  return eta(to_complex(tau, working_precision(tol)), tol);
}

CertifiedValue delta(const Complex& tau, double tol) {
  CertifiedValue e = eta(tau, tol);
  CertifiedValue out;
  out.value = pow_int(e.value, 24);
  double mag = abs(e.value).to_double();
  double rel = mag > 0 ? e.bound / mag : 0.0;
  out.bound = abs(out.value).to_double() * (std::pow(1.0 + rel, 24.0) - 1.0);
  return out;
}

Complex moebius(const GammaMatrix& g, const Complex& tau) {
  mpfr_prec_t prec = tau.prec();
  Complex num = Real((long)g.a, prec) * tau + Complex((double)g.b, 0.0, prec);
  Complex den = Real((long)g.c, prec) * tau + Complex((double)g.d, 0.0, prec);
  return num / den;
}

namespace {

void check_gamma(const GammaMatrix& g) {
  if (g.det() != 1) throw Error("matrix is not in SL(2,Z)");
  long long bound = 1000000;
  if (std::abs(g.a) > bound || std::abs(g.b) > bound || std::abs(g.c) > bound ||
      std::abs(g.d) > bound)
    throw Error("matrix entries exceed the conditioning guard");
}

}  // namespace

double delta_modularity_residual(const GammaMatrix& g,
                                 const UpperHalfPoint& tau, double tol) {
  check_gamma(g);
  mpfr_prec_t prec = working_precision(tol);
  Complex t = to_complex(tau, prec);
  Complex gt = moebius(g, t);
  CertifiedValue lhs = delta(gt, tol);
  CertifiedValue rhs = delta(t, tol);
  Complex den = Real((long)g.c, prec) * t + Complex((double)g.d, 0.0, prec);
  Complex scaled = pow_int(den, 12) * rhs.value;
  double residual = (abs(lhs.value - scaled) / abs(scaled)).to_double();
  return residual;
}

double section_equivariance_residual(const SectionGenerator& h,
                                     const ModuliPoint& tau, double tol) {
  mpfr_prec_t prec = working_precision(tol);
  switch (h.kind) {
    case SectionGenerator::Kind::Translation:
      // quarter translations move neither the moduli point nor the frame
      return 0.0;
    case SectionGenerator::Kind::GammaSlot: {
      check_gamma(h.gamma);
      Complex t = to_complex(tau[h.slot], prec);
      Complex gt = moebius(h.gamma, t);
      Complex den =
          Real((long)h.gamma.c, prec) * t + Complex((double)h.gamma.d, 0.0, prec);
      CertifiedValue dl = delta(gt, tol);
      CertifiedValue dr = delta(t, tol);
      // pullback/section ratio on the moved slot; other slots cancel
      Complex ratio = dl.value / (pow_int(den, 12) * dr.value);
      return (abs(ratio - Complex(1.0, 0.0, prec))).to_double();
    }
    case SectionGenerator::Kind::Permutation: {
      const auto& P = perms();
      Complex num(1.0, 0.0, prec), den(1.0, 0.0, prec);
      std::uint8_t inv = P.inv[h.perm];
      for (int i = 0; i < 3; ++i) {
        num = num * delta(to_complex(tau[P.img[inv][i]], prec), tol).value;
        den = den * delta(to_complex(tau[i], prec), tol).value;
      }
      // sign(perm)^12 = 1
      Complex ratio = num / den;
      return (abs(ratio - Complex(1.0, 0.0, prec))).to_double();
    }
  }
  throw Error("unknown section generator kind");
}

namespace {

Real log_im_eta4(const Complex& tau, double tol) {
  CertifiedValue e = eta(tau, tol);
  Real a2 = e.value.re * e.value.re + e.value.im * e.value.im;
  return log(tau.im) + log(a2) + log(a2);  // log(Im) + log|eta|^4
}

}  // namespace

double kahler_potential(const ModuliPoint& tau, double tol) {
  mpfr_prec_t prec = working_precision(tol);
  Real k(0.0, prec);
  for (int i = 0; i < 3; ++i)
    k = k - log_im_eta4(to_complex(tau[i], prec), tol);
  return k.to_double();
}

namespace {

// Hermitian 3x3 eigenvalues via the real symmetric 6x6 embedding and plain
// Jacobi sweeps.
std::array<double, 3> hermitian_eigenvalues(
    const std::array<std::array<std::array<double, 2>, 3>, 3>& h) {
  double m[6][6] = {};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      m[i][j] = h[i][j][0];
      m[i + 3][j + 3] = h[i][j][0];
      m[i][j + 3] = -h[i][j][1];
      m[i + 3][j] = h[i][j][1];
    }
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0;
    for (int p = 0; p < 6; ++p)
      for (int q = p + 1; q < 6; ++q) off += m[p][q] * m[p][q];
    if (off < 1e-30) break;
    for (int p = 0; p < 6; ++p)
      for (int q = p + 1; q < 6; ++q) {
        if (std::fabs(m[p][q]) < 1e-300) continue;
        double theta = 0.5 * std::atan2(2 * m[p][q], m[q][q] - m[p][p]);
        double c = std::cos(theta), s = std::sin(theta);
        for (int k = 0; k < 6; ++k) {
          double mp = m[k][p], mq = m[k][q];
          m[k][p] = c * mp - s * mq;
          m[k][q] = s * mp + c * mq;
        }
        for (int k = 0; k < 6; ++k) {
          double mp = m[p][k], mq = m[q][k];
          m[p][k] = c * mp - s * mq;
          m[q][k] = s * mp + c * mq;
        }
      }
  }
  std::array<double, 6> ev;
  for (int i = 0; i < 6; ++i) ev[i] = m[i][i];
  std::sort(ev.begin(), ev.end());
  // doubled spectrum: take every other
  return {ev[0], ev[2], ev[4]};
}

}  // namespace

KahlerMetric kahler_metric(const ModuliPoint& tau, double tol) {
  KahlerMetric out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      out.analytic[i][j][0] =
          (i == j) ? 1.0 / (4.0 * tau[i].im * tau[i].im) : 0.0;
      out.analytic[i][j][1] = 0.0;
    }

  // Central finite differences of K in the real coordinates (x_i, y_i).
  auto kp = [&](const std::array<double, 6>& u) {
    ModuliPoint p = tau;
    for (int i = 0; i < 3; ++i) {
      p[i].re = tau[i].re + u[2 * i];
      p[i].im = tau[i].im + u[2 * i + 1];
    }
    // finite-difference stencils need more precision than the target
    return kahler_potential(p, tol * 1e-6);
  };
  std::array<double, 6> step{};
  for (int i = 0; i < 3; ++i) {
    step[2 * i] = 1e-4 * tau[i].im;
    step[2 * i + 1] = 1e-4 * tau[i].im;
  }
  double k0 = kp({});
  auto second = [&](int a, int b) {
    std::array<double, 6> u{};
    if (a == b) {
      u[a] = step[a];
      double kp1 = kp(u);
      u[a] = -step[a];
      double km1 = kp(u);
      return (kp1 - 2 * k0 + km1) / (step[a] * step[a]);
    }
    double s = 0;
    for (int sa : {+1, -1})
      for (int sb : {+1, -1}) {
        u = {};
        u[a] = sa * step[a];
        u[b] = sb * step[b];
        s += sa * sb * kp(u);
      }
    return s / (4 * step[a] * step[b]);
  };
  double max_rel = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double xx = second(2 * i, 2 * j);
      double yy = second(2 * i + 1, 2 * j + 1);
      double xy = second(2 * i, 2 * j + 1);
      double yx = second(2 * i + 1, 2 * j);
      out.finite_difference[i][j][0] = 0.25 * (xx + yy);
      out.finite_difference[i][j][1] = 0.25 * (xy - yx);
      double scale = std::max(std::fabs(out.analytic[i][j][0]), 1e-2);
      max_rel = std::max(
          max_rel,
          std::fabs(out.finite_difference[i][j][0] - out.analytic[i][j][0]) /
              scale);
      max_rel = std::max(
          max_rel,
          std::fabs(out.finite_difference[i][j][1] - out.analytic[i][j][1]) /
              scale);
    }
  out.max_rel_error = max_rel;
  out.min_eigenvalue = hermitian_eigenvalues(out.finite_difference)[0];
  if (!(out.min_eigenvalue > 0))
    throw Error("metric is not positive definite");
  if (!(max_rel < std::max(1e-6, tol * 1e4)))
    throw Error("finite-difference metric deviates from the analytic one");
  return out;
}

MultiplierOrder eta_multiplier_order(const GammaMatrix& g,
                                     const UpperHalfPoint& tau, double tol) {
  check_gamma(g);
  mpfr_prec_t prec = working_precision(tol);
  Complex t = to_complex(tau, prec);
  Complex gt = moebius(g, t);
  CertifiedValue el = eta(gt, tol);
  CertifiedValue er = eta(t, tol);
  Complex den = Real((long)g.c, prec) * t + Complex((double)g.d, 0.0, prec);
  Complex epsv = el.value / (sqrt(den) * er.value);

  MultiplierOrder out;
  out.epsilon = {epsv.re.to_double(), epsv.im.to_double()};
  out.modulus_deviation = std::fabs(abs(epsv).to_double() - 1.0);
  if (out.modulus_deviation >= std::max(tol * 100, 1e-9))
    throw Error("eta multiplier does not have modulus 1");
  Complex p(1.0, 0.0, prec);
  for (int k = 1; k <= 24; ++k) {
    p = p * epsv;
    double dev = abs(p - Complex(1.0, 0.0, prec)).to_double();
    if (dev < std::max(tol * 100, 1e-9)) {
      out.order = k;
      return out;
    }
  }
  throw Error("eta multiplier has no order at most 24");
}

// ---------------------------------------------------------------------------

std::vector<GammaMatrix> gamma_matrices_up_to(long bound) {
  std::vector<GammaMatrix> out;
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b)
      for (long c = -bound; c <= bound; ++c) {
        // a d - b c = 1
        long long rhs = 1 + (long long)b * c;
        if (a == 0) {
          if (rhs != 0) continue;
          for (long d = -bound; d <= bound; ++d)
            out.push_back(GammaMatrix{a, b, c, d});
          continue;
        }
        if (rhs % a != 0) continue;
        long long d = rhs / a;
        if (d < -bound || d > bound) continue;
        out.push_back(GammaMatrix{a, b, c, d});
      }
  return out;
}

ModularReport run_modular(const ModularConfig& cfg) {
  ModularReport rep;
  rep.config = cfg;
  std::mt19937_64 rng(cfg.seed);
  auto mats = gamma_matrices_up_to(cfg.entry_bound);
  std::uniform_int_distribution<size_t> pick_mat(0, mats.size() - 1);
  std::uniform_real_distribution<double> pick_re(-0.5, 0.5);
  std::uniform_real_distribution<double> pick_im(cfg.im_min, cfg.im_max);

  auto random_tau = [&] {
    UpperHalfPoint t;
    t.re = pick_re(rng);
    t.im = pick_im(rng);
    return t;
  };

  // eta(i) against the doubled-precision independent oracle
  {
    UpperHalfPoint ti{0.0, 1.0};
    CertifiedValue coarse = eta(ti, cfg.tol);
    CertifiedValue fine = eta(Complex(0.0, 1.0, working_precision(1e-30)), 1e-30);
    rep.eta_i_abs_error = abs(coarse.value - fine.value).to_double();
  }

  rep.min_abs_delta = 1e300;
  for (int s = 0; s < cfg.samples; ++s) {
    GammaMatrix g = mats[pick_mat(rng)];
    UpperHalfPoint t = random_tau();
    rep.max_delta_residual =
        std::max(rep.max_delta_residual, delta_modularity_residual(g, t, cfg.tol));
    {
      mpfr_prec_t prec = working_precision(cfg.tol);
      double ad = abs(delta(to_complex(t, prec), cfg.tol).value).to_double();
      rep.min_abs_delta = std::min(rep.min_abs_delta, ad);
    }

    ModuliPoint tri = {random_tau(), random_tau(), random_tau()};
    SectionGenerator hg;
    hg.kind = SectionGenerator::Kind::GammaSlot;
    hg.slot = int(rng() % 3);
    hg.gamma = g;
    rep.max_section_residual = std::max(
        rep.max_section_residual, section_equivariance_residual(hg, tri, cfg.tol));
    SectionGenerator hp;
    hp.kind = SectionGenerator::Kind::Permutation;
    hp.perm = std::uint8_t(rng() % 6);
    rep.max_section_residual = std::max(
        rep.max_section_residual, section_equivariance_residual(hp, tri, cfg.tol));

    // potential invariance under the sampled gamma in a random slot
    {
      int slot = int(rng() % 3);
      ModuliPoint moved = tri;
      mpfr_prec_t prec = working_precision(cfg.tol);
      Complex gt = moebius(g, to_complex(tri[slot], prec));
      moved[slot].re = gt.re.to_double();
      moved[slot].im = gt.im.to_double();
      double k1 = kahler_potential(tri, cfg.tol);
      double k2 = kahler_potential(moved, cfg.tol);
      rep.max_potential_invariance_residual =
          std::max(rep.max_potential_invariance_residual, std::fabs(k1 - k2));
    }

    if (s < 50) {
      MultiplierOrder mo = eta_multiplier_order(g, t, cfg.tol);
      rep.multiplier_orders[mo.order]++;
      if (24 % mo.order != 0)
        throw Error("eta multiplier order does not divide 24");
      // eps^12 must be +-1
      double re12 = 0, im12 = 0;
      {
        mpfr_prec_t prec = working_precision(cfg.tol);
        Complex e(mo.epsilon[0], mo.epsilon[1], prec);
        Complex p = pow_int(e, 12);
        re12 = p.re.to_double();
        im12 = p.im.to_double();
      }
      if (std::fabs(im12) > 1e-6 ||
          (std::fabs(re12 - 1) > 1e-6 && std::fabs(re12 + 1) > 1e-6))
        rep.epsilon12_pm1 = false;
    }
  }

  // metric spot checks on a deterministic set of triples
  for (int s = 0; s < 50; ++s) {
    ModuliPoint tri = {random_tau(), random_tau(), random_tau()};
    KahlerMetric m = kahler_metric(tri, cfg.tol);
    rep.metric_max_rel_error = std::max(rep.metric_max_rel_error, m.max_rel_error);
    if (s == 0 || m.min_eigenvalue < rep.metric_min_eigenvalue)
      rep.metric_min_eigenvalue = m.min_eigenvalue;
  }
  return rep;
}

}  // namespace cy3
