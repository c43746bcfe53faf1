#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "cy3/common.hpp"

namespace cy3 {

// Exact rational on 64-bit numerator/denominator, always normalized with
// positive denominator.  Intermediate products use __int128; overflow of the
// reduced result throws rather than wrapping.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw Error("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  static Rat from_i128(__int128 n, __int128 d) {
    if (d == 0) throw Error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b) { __int128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    constexpr __int128 lim = 0x7fffffffffffffffLL;
    if (n > lim || n < -lim || d > lim) throw Error("rational overflow");
    Rat r;
    r.num = (long long)n;
    r.den = (long long)d;
    return r;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return from_i128((__int128)a.num * b.den + (__int128)b.num * a.den,
                     (__int128)a.den * b.den);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return from_i128((__int128)a.num * b.den - (__int128)b.num * a.den,
                     (__int128)a.den * b.den);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return from_i128((__int128)a.num * b.num, (__int128)a.den * b.den);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw Error("rational division by zero");
    return from_i128((__int128)a.num * b.den, (__int128)a.den * b.num);
  }
  Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }
  Rat& operator+=(const Rat& b) { *this = *this + b; return *this; }
  Rat& operator-=(const Rat& b) { *this = *this - b; return *this; }
  Rat& operator*=(const Rat& b) { *this = *this * b; return *this; }
  Rat& operator/=(const Rat& b) { *this = *this / b; return *this; }

  bool is_zero() const { return num == 0; }
  friend bool operator==(const Rat&, const Rat&) = default;

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Prime field F_p for small p.
template <int P>
struct Fp {
  int v = 0;

  Fp() = default;
  Fp(long long x) { v = int(((x % P) + P) % P); }

  friend Fp operator+(Fp a, Fp b) { return Fp(a.v + b.v); }
  friend Fp operator-(Fp a, Fp b) { return Fp(a.v - b.v); }
  friend Fp operator*(Fp a, Fp b) { return Fp((long long)a.v * b.v); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
  Fp operator-() const { return Fp(-v); }
  Fp& operator+=(Fp b) { *this = *this + b; return *this; }
  Fp& operator-=(Fp b) { *this = *this - b; return *this; }
  Fp& operator*=(Fp b) { *this = *this * b; return *this; }

  Fp inv() const {
    if (v == 0) throw Error("F_p division by zero");
    // p is tiny; brute force.
    for (int x = 1; x < P; ++x)
      if (x * v % P == 1) return Fp(x);
    throw Error("F_p inverse not found");
  }

  bool is_zero() const { return v == 0; }
  friend bool operator==(Fp, Fp) = default;
  std::string str() const { return std::to_string(v); }
};

using F5 = Fp<5>;
using F7 = Fp<7>;

enum class FieldKind { Rational, F5Field, F7Field };

inline const char* to_string(FieldKind k) {
  switch (k) {
    case FieldKind::Rational: return "Q";
    case FieldKind::F5Field: return "F5";
    case FieldKind::F7Field: return "F7";
  }
  return "?";
}

}  // namespace cy3
