#pragma once

#include "poly.hpp"
#include "sturm.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace rcn {

struct WeilError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coefficient conventions.  A Weil polynomial P of an abelian variety of
// dimension g over F_q is monic of degree 2g; a_i denotes the coefficient of
// T^(2g-i), so a_0 = 1 and a_{2g-i} = q^(g-i) a_i.  The real Weil polynomial
// h is the degree-g polynomial with P(T) = T^g h(T + q/T); its roots are the
// numbers alpha + q/alpha in [-2 sqrt(q), 2 sqrt(q)].

inline Int coeff_a(const IPoly& P, int i) { return P.coeff(P.degree() - i); }

inline IPoly poly_pow(const IPoly& p, int e) {
  IPoly r{Int(1)};
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

inline int weil_genus(const IPoly& P) {
  int n = P.degree();
  if (n < 2 || n % 2 != 0) throw WeilError("degree must be even and positive");
  if (P.lc() != 1) throw WeilError("not monic");
  return n / 2;
}

inline bool functional_equation_holds(const IPoly& P, long q) {
  if (P.degree() < 2 || P.degree() % 2 != 0 || P.lc() != 1) return false;
  int g = P.degree() / 2;
  for (int i = 0; i < g; ++i)
    if (coeff_a(P, 2 * g - i) != pow_int(Int(q), static_cast<unsigned>(g - i)) * coeff_a(P, i))
      return false;
  return true;
}

// Peel b_j T^j (T^2+q)^(g-j) off the top; a nonzero residual means the
// functional equation fails.
inline IPoly weil_to_real(const IPoly& P, long q) {
  int g = weil_genus(P);
  IPoly R = P;
  IPoly tsq{Int(q), Int(0), Int(1)};
  std::vector<Int> b(g + 1);
  for (int j = 0; j <= g; ++j) {
    b[j] = R.coeff(2 * g - j);
    R = R - b[j] * shift_up(poly_pow(tsq, g - j), j);
  }
  if (!R.is_zero()) throw WeilError("functional equation violated");
  std::vector<Int> h(g + 1);
  for (int j = 0; j <= g; ++j) h[g - j] = b[j];
  return IPoly(std::move(h));
}

inline IPoly real_to_weil(const IPoly& h, long q) {
  int g = h.degree();
  if (g < 1 || h.lc() != 1) throw WeilError("real Weil polynomial must be monic of degree >= 1");
  IPoly tsq{Int(q), Int(0), Int(1)};
  IPoly P;
  for (int j = 0; j <= g; ++j) P = P + h.coeff(g - j) * shift_up(poly_pow(tsq, g - j), j);
  return P;
}

inline bool is_weil(const IPoly& P, long q) {
  if (P.degree() < 2 || P.degree() % 2 != 0 || P.lc() != 1) return false;
  try {
    IPoly h = weil_to_real(P, q);
    return all_roots_in_weil_interval(h, q);
  } catch (const WeilError&) {
    return false;
  }
}

// Power sums p_k of the roots via Newton's identities.
inline std::vector<Int> frobenius_traces(const IPoly& P, int depth) {
  int n = P.degree();
  std::vector<Int> p(depth + 1, Int(0));
  for (int k = 1; k <= depth; ++k) {
    Int s = 0;
    for (int i = 1; i < k && i <= n; ++i) s += coeff_a(P, i) * p[k - i];
    if (k <= n)
      p[k] = -Int(k) * coeff_a(P, k) - s;
    else
      p[k] = -s;
  }
  return p;  // p[0] unused
}

// Inverse direction: first g traces determine the Weil polynomial through the
// functional equation.  Throws on a non-integral coefficient.
inline IPoly poly_from_traces(long q, int g, const std::vector<Int>& T) {
  std::vector<Int> a(2 * g + 1, Int(0));
  a[0] = 1;
  for (int k = 1; k <= g; ++k) {
    Int s = T.at(k);
    for (int i = 1; i < k; ++i) s += a[i] * T.at(k - i);
    if (s % k != 0) throw WeilError("malformed trace sequence");
    a[k] = -s / k;
  }
  for (int i = g + 1; i <= 2 * g; ++i)
    a[i] = pow_int(Int(q), static_cast<unsigned>(i - g)) * a[2 * g - i];
  std::vector<Int> c(2 * g + 1);
  for (int i = 0; i <= 2 * g; ++i) c[2 * g - i] = a[i];
  return IPoly(std::move(c));
}

inline std::vector<Int> point_counts(long q, const std::vector<Int>& traces) {
  std::vector<Int> N(traces.size(), Int(0));
  for (size_t i = 1; i < traces.size(); ++i)
    N[i] = pow_int(Int(q), static_cast<unsigned>(i)) + 1 - traces[i];
  return N;
}

// Degree-d place counts by Moebius inversion; integrality is automatic for
// honest trace sequences (Gauss congruence) and asserted here.
inline std::vector<Int> place_counts(const std::vector<Int>& N) {
  std::vector<Int> a(N.size(), Int(0));
  for (size_t d = 1; d < N.size(); ++d) {
    Int s = 0;
    for (long e : divisors(static_cast<long>(d))) s += moebius(static_cast<long>(d) / e) * N[e];
    if (s % static_cast<long>(d) != 0) throw WeilError("place count not integral");
    a[d] = s / static_cast<long>(d);
  }
  return a;
}

inline bool positivity_ok(const IPoly& P, long q, int depth) {
  auto tr = frobenius_traces(P, depth);
  auto N = point_counts(q, tr);
  std::vector<Int> a = place_counts(N);
  for (int i = 1; i <= depth; ++i)
    if (N[i] < 0 || a[i] < 0) return false;
  return true;
}

// Number of p-adic unit roots: largest i with p not dividing a_i.
inline int p_rank(const IPoly& P, long q) {
  long p = char_of(q);
  int g = weil_genus(P);
  int r = 0;
  for (int i = 1; i <= g; ++i)
    if (coeff_a(P, i) % p != 0) r = i;
  return r;
}

// Quadratic twist: alpha -> -alpha.
inline IPoly twist(const IPoly& P) {
  IPoly r = P;
  for (size_t i = 0; i < r.c.size(); ++i)
    if ((r.c.size() - 1 - i) % 2 == 1) r.c[i] = -r.c[i];
  // for even degree this negates odd-degree coefficients, keeping it monic
  return r;
}

inline Int order(const IPoly& P) { return eval(P, Int(1)); }

// Characteristic polynomial of Frobenius on the part of the base change to
// F_{q^d} that is new: roots are zeta^j alpha for j = 1..d-1.  Its value at 1
// is the relative class number of the degree-d constant extension.
inline IPoly constant_relative_poly(const IPoly& P, int d) {
  int n = P.degree();
  int m = n * (d - 1);
  auto p = frobenius_traces(P, m);
  std::vector<Int> ps(m + 1, Int(0));
  for (int k = 1; k <= m; ++k) ps[k] = (k % d == 0 ? Int(d - 1) : Int(-1)) * p[k];
  std::vector<Int> a(m + 1, Int(0));
  a[0] = 1;
  for (int k = 1; k <= m; ++k) {
    Int s = ps[k];
    for (int i = 1; i < k; ++i) s += a[i] * ps[k - i];
    if (s % k != 0) throw WeilError("relative polynomial not integral");
    a[k] = -s / k;
  }
  std::vector<Int> c(m + 1);
  for (int i = 0; i <= m; ++i) c[m - i] = a[i];
  return IPoly(std::move(c));
}

}  // namespace rcn
