#pragma once

#include "numeric.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace rcn {

// Dense univariate polynomial; c[i] is the coefficient of x^i.  Trailing zeros
// are stripped, so the zero polynomial has an empty vector and degree -1.
template <typename T>
struct Poly {
  std::vector<T> c;

  Poly() = default;
  Poly(std::initializer_list<T> init) : c(init) { trim(); }
  explicit Poly(std::vector<T> v) : c(std::move(v)) { trim(); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const T& lc() const { return c.back(); }
  T coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : T(0);
  }

  bool operator==(const Poly& o) const { return c == o.c; }
  bool operator!=(const Poly& o) const { return c != o.c; }
  // Lexicographic by degree then coefficients, for deterministic ordering.
  bool operator<(const Poly& o) const {
    if (c.size() != o.c.size()) return c.size() < o.c.size();
    for (size_t i = c.size(); i-- > 0;)
      if (c[i] != o.c[i]) return c[i] < o.c[i];
    return false;
  }
};

using IPoly = Poly<Int>;
using QPoly = Poly<Rat>;

template <typename T>
Poly<T> operator+(const Poly<T>& a, const Poly<T>& b) {
  std::vector<T> r(std::max(a.c.size(), b.c.size()), T(0));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return Poly<T>(std::move(r));
}

template <typename T>
Poly<T> operator-(const Poly<T>& a, const Poly<T>& b) {
  std::vector<T> r(std::max(a.c.size(), b.c.size()), T(0));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
  return Poly<T>(std::move(r));
}

template <typename T>
Poly<T> operator-(const Poly<T>& a) {
  Poly<T> r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

template <typename T>
Poly<T> operator*(const Poly<T>& a, const Poly<T>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<T> r(a.c.size() + b.c.size() - 1, T(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return Poly<T>(std::move(r));
}

template <typename T>
Poly<T> operator*(const T& s, const Poly<T>& a) {
  Poly<T> r = a;
  for (auto& x : r.c) x *= s;
  r.trim();
  return r;
}

// x^k * a
template <typename T>
Poly<T> shift_up(const Poly<T>& a, int k) {
  if (a.is_zero()) return {};
  std::vector<T> r(a.c.size() + k, T(0));
  for (size_t i = 0; i < a.c.size(); ++i) r[i + k] = a.c[i];
  return Poly<T>(std::move(r));
}

// Horner; R is the evaluation ring (integer polynomials get evaluated at
// rational or integer points).
template <typename T, typename R>
R eval(const Poly<T>& p, const R& x) {
  R r(0);
  for (size_t i = p.c.size(); i-- > 0;) r = r * x + R(p.c[i]);
  return r;
}

template <typename T>
Poly<T> derivative(const Poly<T>& p) {
  if (p.degree() < 1) return {};
  std::vector<T> r(p.c.size() - 1);
  for (size_t i = 1; i < p.c.size(); ++i) r[i - 1] = T(i) * p.c[i];
  return Poly<T>(std::move(r));
}

// Division over Z; throws unless it is exact.
inline IPoly divide_exact(const IPoly& a, const IPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Int> rem = a.c, q(std::max<int>(a.degree() - b.degree() + 1, 0), Int(0));
  int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    if (rem[i] % b.lc() != 0) throw std::domain_error("inexact polynomial division");
    Int f = rem[i] / b.lc();
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c[j];
  }
  for (const Int& x : rem)
    if (x != 0) throw std::domain_error("inexact polynomial division");
  return IPoly(std::move(q));
}

inline bool divides(const IPoly& b, const IPoly& a) {
  if (b.is_zero()) return a.is_zero();
  if (a.is_zero()) return true;
  if (a.degree() < b.degree()) return false;
  std::vector<Int> rem = a.c;
  int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    if (rem[i] % b.lc() != 0) return false;
    Int f = rem[i] / b.lc();
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c[j];
  }
  for (const Int& x : rem)
    if (x != 0) return false;
  return true;
}

inline Int content(const IPoly& p) {
  Int g = 0;
  for (const Int& x : p.c) g = gcd(g, x);
  return g;  // >= 0
}

// Content stripped; the sign of the leading coefficient is kept.
inline IPoly primitive_part(const IPoly& p) {
  if (p.is_zero()) return {};
  Int g = content(p);
  IPoly r = p;
  for (auto& x : r.c) x /= g;
  return r;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
inline IPoly prem(IPoly a, const IPoly& b) {
  int db = b.degree();
  long e = a.degree() - db + 1;
  while (!a.is_zero() && a.degree() >= db) {
    int da = a.degree();
    std::vector<Int> r(std::max<size_t>(a.c.size(), b.c.size() + (da - db)), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = b.lc() * a.c[i];
    for (int j = 0; j <= db; ++j) r[da - db + j] -= a.lc() * b.c[j];
    a = IPoly(std::move(r));
    --e;
  }
  if (e > 0) {
    Int f = pow_int(b.lc(), static_cast<unsigned>(e));
    for (auto& x : a.c) x *= f;
  }
  return a;
}

// Primitive PRS gcd; result is primitive with positive leading coefficient.
inline IPoly gcd(IPoly a, IPoly b) {
  if (a.is_zero()) return b.lc() < 0 ? -b : b;
  if (b.is_zero()) return a.lc() < 0 ? -a : a;
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IPoly r = prem(a, b);
    a = std::move(b);
    b = r.is_zero() ? IPoly{} : primitive_part(r);
  }
  return a.lc() < 0 ? -a : a;
}

inline IPoly radical(const IPoly& p) {
  if (p.degree() < 1) return p;
  return divide_exact(p, gcd(p, derivative(p)));
}

// Sylvester resultant via fraction-free (Bareiss) elimination.
inline Int resultant(const IPoly& a, const IPoly& b) {
  int da = a.degree(), db = b.degree();
  if (da < 0 || db < 0) return 0;
  if (da == 0) return pow_int(a.c[0], db);
  if (db == 0) return pow_int(b.c[0], da);
  int n = da + db;
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < db; ++i)
    for (int j = 0; j <= da; ++j) m[i][i + j] = a.c[da - j];
  for (int i = 0; i < da; ++i)
    for (int j = 0; j <= db; ++j) m[db + i][i + j] = b.c[db - j];
  Int prev = 1;
  int sgn = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) { piv = i; break; }
      if (piv < 0) return 0;
      std::swap(m[k], m[piv]);
      sgn = -sgn;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sgn > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

}  // namespace rcn
