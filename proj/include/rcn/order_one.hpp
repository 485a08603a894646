#pragma once

#include "rcn/label.hpp"
#include "rcn/numeric.hpp"
#include "rcn/poly.hpp"
#include "rcn/weil.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

// Simple abelian varieties with exactly one rational point.  Over F_2 each
// Frobenius eigenvalue alpha satisfies alpha^2 + (eta - 1) alpha - 2 eta = 0
// for some root of unity eta; substituting eta = x(1-x)/(x-2) into the n-th
// cyclotomic polynomial and clearing denominators gives the minimal polynomial
// of alpha.  That polynomial is itself the Weil polynomial of a simple isogeny
// class except for n = 1 (square root of 2, dimension 2 with multiplicity) and
// n = 7, 30 (splits into two classes).  Over F_3 and F_4 the only simple class
// of order 1 is the elliptic one with polynomial T^2 - qT + q.

namespace rcn {

inline IPoly cyclotomic(long n) {
  if (n <= 0) throw WeilError("cyclotomic index must be positive");
  IPoly num{Int(1)}, den{Int(1)};
  for (long d : divisors(n)) {
    int mu = moebius(n / d);
    if (mu == 0) continue;
    std::vector<Int> c(static_cast<size_t>(d) + 1, Int(0));
    c[0] = -1;
    c[static_cast<size_t>(d)] = 1;
    IPoly f(std::move(c));
    (mu == 1 ? num : den) = (mu == 1 ? num : den) * f;
  }
  return divide_exact(num, den);
}

inline IPoly order_one_minpoly(long n) {
  IPoly phi = cyclotomic(n);
  long f = phi.degree();
  IPoly u{Int(0), Int(1), Int(-1)};  // x - x^2, the numerator of eta(x)
  IPoly v{Int(-2), Int(1)};          // x - 2, its denominator
  std::vector<IPoly> up(static_cast<size_t>(f) + 1), vp(up.size());
  up[0] = IPoly{Int(1)};
  vp[0] = IPoly{Int(1)};
  for (long j = 1; j <= f; ++j) {
    up[static_cast<size_t>(j)] = up[static_cast<size_t>(j - 1)] * u;
    vp[static_cast<size_t>(j)] = vp[static_cast<size_t>(j - 1)] * v;
  }
  IPoly r;
  for (long j = 0; j <= f; ++j)
    r = r + phi.coeff(j) * (up[static_cast<size_t>(j)] * vp[static_cast<size_t>(f - j)]);
  if (f % 2) r = Int(-1) * r;
  return r;
}

// 10^4 times the excess is an integer linear form in the first four traces.
inline Rat order_one_excess(int g, const std::vector<Int>& p) {
  Int num = 13366 * p[1] + 3366 * p[2] + 1137 * (p[3] - p[1]) +
            537 * (p[4] - p[2]) - 15612 * g;
  return Rat(num, Int(10000));
}

inline std::string format_excess(const Rat& e) {
  Int scaled = numerator(e) * 10000;
  if (scaled % denominator(e) != 0)
    throw WeilError("excess is not a multiple of 1/10000");
  Int v = scaled / denominator(e);
  std::string sign = v < 0 ? "-" : "";
  Int a = abs(v);
  std::string frac = Int(a % 10000).str();
  frac.insert(0, 4 - frac.size(), '0');
  return sign + Int(a / 10000).str() + "." + frac;
}

struct OrderOneClass {
  long n = 0;  // order of the root of unity eta
  int dim = 0;
  IPoly weil;
  std::string label;
  std::vector<Int> traces;  // traces[k] is the 2^k-power Frobenius trace, k = 1..4
  Int trace_sum_24;         // traces[1] + traces[2]
  Rat excess;
  bool ordinary = false;
};

inline std::vector<OrderOneClass> order_one_catalog(int max_dim) {
  std::vector<OrderOneClass> out;
  auto add = [&](long n, const IPoly& P) {
    OrderOneClass c;
    c.n = n;
    c.dim = static_cast<int>(P.degree() / 2);
    if (c.dim > max_dim) return;
    c.weil = P;
    c.label = encode_label(P, 2);
    c.traces = frobenius_traces(P, 4);
    c.trace_sum_24 = c.traces[1] + c.traces[2];
    c.excess = order_one_excess(c.dim, c.traces);
    long odd = n;
    while (odd % 2 == 0) odd /= 2;
    c.ordinary = odd != 1;
    out.push_back(std::move(c));
  };
  long bound = 2L * max_dim * max_dim + 3;
  for (long n = 1; n <= bound; ++n) {
    if (n == 1) {
      add(1, poly_pow(order_one_minpoly(1), 2));
    } else if (n == 7) {
      add(7, decode_label("3.2.ad_c_b").P);
      add(7, decode_label("3.2.ae_j_ap").P);
    } else if (n == 30) {
      add(30, decode_label("4.2.ae_e_h_av").P);
      add(30, decode_label("4.2.af_n_az_bn").P);
    } else {
      if (euler_phi(n) > max_dim) continue;
      add(n, order_one_minpoly(n));
    }
  }
  std::sort(out.begin(), out.end(), [](const OrderOneClass& a, const OrderOneClass& b) {
    return std::tie(a.dim, a.label) < std::tie(b.dim, b.label);
  });
  return out;
}

inline IPoly simple_order_one_weil(long q) {
  if (q == 3) return IPoly{Int(3), Int(-3), Int(1)};
  if (q == 4) return IPoly{Int(4), Int(-4), Int(1)};
  throw WeilError("unique simple class of order 1 exists only for q = 3, 4");
}

}  // namespace rcn
