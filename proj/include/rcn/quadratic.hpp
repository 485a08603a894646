#pragma once

#include "numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace rcn {

// Exact elements u + v*sqrt(m) of a real quadratic field, m a positive
// non-square integer.  Enough arithmetic for endpoint sign work and for the
// linear-programming bound sums, which live in Q(sqrt(q)).
struct Quad {
  Rat u, v;
  long m;

  Quad(Rat u_, Rat v_, long m_) : u(std::move(u_)), v(std::move(v_)), m(m_) {}
  static Quad rational(Rat x, long m_) { return Quad(std::move(x), Rat(0), m_); }
  static Quad root(long m_) { return Quad(Rat(0), Rat(1), m_); }
};

inline void check_same_field(const Quad& a, const Quad& b) {
  if (a.m != b.m) throw std::domain_error("mixed quadratic fields");
}

inline Quad operator+(const Quad& a, const Quad& b) {
  check_same_field(a, b);
  return Quad(a.u + b.u, a.v + b.v, a.m);
}
inline Quad operator-(const Quad& a, const Quad& b) {
  check_same_field(a, b);
  return Quad(a.u - b.u, a.v - b.v, a.m);
}
inline Quad operator-(const Quad& a) { return Quad(-a.u, -a.v, a.m); }
inline Quad operator*(const Quad& a, const Quad& b) {
  check_same_field(a, b);
  return Quad(a.u * b.u + a.v * b.v * Rat(a.m), a.u * b.v + a.v * b.u, a.m);
}
inline Quad operator*(const Rat& s, const Quad& a) { return Quad(s * a.u, s * a.v, a.m); }

inline Quad inverse(const Quad& a) {
  Rat n = a.u * a.u - a.v * a.v * Rat(a.m);  // field norm, nonzero unless a = 0
  if (n == 0) throw std::domain_error("inverse of zero");
  return Quad(a.u / n, -a.v / n, a.m);
}
inline Quad operator/(const Quad& a, const Quad& b) { return a * inverse(b); }

// sqrt(m) is irrational, so u + v*sqrt(m) = 0 only at u = v = 0, and for mixed
// signs the comparison reduces to u^2 against v^2 m.
inline int sign(const Quad& a) {
  int su = sign(a.u), sv = sign(a.v);
  if (sv == 0) return su;
  if (su == 0) return sv;
  if (su == sv) return su;
  Rat d = a.u * a.u - a.v * a.v * Rat(a.m);
  return sign(d) * su;
}

inline bool operator<(const Quad& a, const Quad& b) { return sign(a - b) < 0; }
inline bool operator<=(const Quad& a, const Quad& b) { return sign(a - b) <= 0; }

inline double to_double(const Rat& x) {
  return x.convert_to<double>();
}
inline double to_double(const Quad& a) {
  return to_double(a.u) + to_double(a.v) * std::sqrt(static_cast<double>(a.m));
}

}  // namespace rcn
