#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "cy3/common.hpp"

namespace cy3 {

// Thin RAII value type over mpfr_t.  Precision travels with the value;
// binary operations use the larger operand precision.
class Real {
 public:
  Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
  Real(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string str(int digits = 30) const;

  static Real pi(mpfr_prec_t prec) { Real r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }

  friend Real operator+(const Real& a, const Real& b) { return binop(mpfr_add, a, b); }
  friend Real operator-(const Real& a, const Real& b) { return binop(mpfr_sub, a, b); }
  friend Real operator*(const Real& a, const Real& b) { return binop(mpfr_mul, a, b); }
  friend Real operator/(const Real& a, const Real& b) { return binop(mpfr_div, a, b); }
  Real operator-() const { Real r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

  friend Real sqrt(const Real& a) { return unop(mpfr_sqrt, a); }
  friend Real exp(const Real& a) { return unop(mpfr_exp, a); }
  friend Real expm1(const Real& a) { return unop(mpfr_expm1, a); }
  friend Real log(const Real& a) { return unop(mpfr_log, a); }
  friend Real sin(const Real& a) { return unop(mpfr_sin, a); }
  friend Real cos(const Real& a) { return unop(mpfr_cos, a); }
  friend Real abs(const Real& a) { return unop(mpfr_abs, a); }
  friend Real hypot(const Real& a, const Real& b) { return binop(mpfr_hypot, a, b); }
  friend Real atan2(const Real& y, const Real& x) { return binop(mpfr_atan2, y, x); }
  friend Real pow_si(const Real& a, long n) {
    Real r(a.prec());
    mpfr_pow_si(r.v_, a.v_, n, MPFR_RNDN);
    return r;
  }
  friend Real ldexp2(const Real& a, long k) {  // a * 2^k
    Real r(a.prec());
    mpfr_mul_2si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }

  int sign() const { return mpfr_sgn(v_); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

 private:
  using Bin = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  using Un = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
  static Real binop(Bin f, const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    f(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  static Real unop(Un f, const Real& a) {
    Real r(a.prec());
    f(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  mpfr_t v_;
};

struct Complex {
  Real re, im;

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(double r, double i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}

  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Real& s, const Complex& a) {
    return {s * a.re, s * a.im};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  Complex operator-() const { return {-re, -im}; }

  friend Real abs(const Complex& a) { return hypot(a.re, a.im); }
  friend Complex exp(const Complex& a) {
    Real m = exp(a.re);
    return {m * cos(a.im), m * sin(a.im)};
  }
  // Principal branch.
  friend Complex sqrt(const Complex& a) {
    Real r = sqrt(abs(a));
    Real half(0.5, a.prec());
    Real th = atan2(a.im, a.re) * half;
    return {r * cos(th), r * sin(th)};
  }
  friend Complex pow_int(Complex a, long n) {
    mpfr_prec_t p = a.prec();
    bool invert = n < 0;
    unsigned long k = invert ? (unsigned long)(-n) : (unsigned long)n;
    Complex r(1.0, 0.0, p);
    while (k) {
      if (k & 1) r = r * a;
      a = a * a;
      k >>= 1;
    }
    if (invert) r = Complex(1.0, 0.0, p) / r;
    return r;
  }
};

}  // namespace cy3
