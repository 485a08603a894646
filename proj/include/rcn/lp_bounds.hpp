#pragma once

#include "rcn/numeric.hpp"
#include "rcn/poly.hpp"
#include "rcn/quadratic.hpp"
#include "rcn/sturm.hpp"
#include "rcn/weil.hpp"

#include <vector>

// Linear upper bounds on #C(F_q) via trigonometric test functions
// f(theta) = 1 + 2 sum_n c_n cos(n theta) that are doubly positive:
// f >= 0 everywhere and every c_n >= 0.  Writing psi(t) = sum c_n t^n,
// such an f gives  #C(F_q) psi(q^{-1/2}) <= g + psi(q^{-1/2}) + psi(q^{1/2}),
// and the refinement over closed points of degree d uses the subseries
// psi_d(t) = sum_{d | n} c_n t^n.  All evaluation is exact in Q(sqrt q).

namespace rcn {

struct DoublyPositive {
  std::vector<Rat> coeffs;  // c_1..c_N
};

// (1 + 2 x_1 cos(theta) + ... + 2 x_k cos(k theta))^2, normalized to constant
// term 1.  Nonnegative x certifies double positivity by construction.
inline DoublyPositive doubly_positive_from_weights(const std::vector<Rat>& x) {
  for (const auto& xi : x)
    if (xi < 0) throw WeilError("weights must be nonnegative");
  std::vector<Rat> s(x.size() + 1);
  s[0] = 1;
  for (size_t i = 0; i < x.size(); ++i) s[i + 1] = 2 * x[i];
  size_t k = s.size();
  std::vector<Rat> raw(2 * k, Rat(0));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      Rat half = s[i] * s[j] / 2;
      raw[i >= j ? i - j : j - i] += half;
      raw[i + j] += half;
    }
  DoublyPositive dp;
  dp.coeffs.assign(raw.begin() + 1, raw.end());
  for (auto& c : dp.coeffs) c /= 2 * raw[0];
  while (!dp.coeffs.empty() && dp.coeffs.back() == 0) dp.coeffs.pop_back();
  return dp;
}

// General cosine coefficients, certified exactly: f in Chebyshev form becomes
// F(u) = 1 + 2 sum c_n T_n(u), and strict positivity of F on [-1, 1] is
// checked by a Sturm root count.  Rejects anything not strictly positive.
inline DoublyPositive doubly_positive_from_cos_coeffs(const std::vector<Rat>& c) {
  for (const auto& cn : c)
    if (cn < 0) throw WeilError("cosine coefficients must be nonnegative");
  std::vector<IPoly> T(std::max<size_t>(c.size() + 1, 2));
  T[0] = IPoly{Int(1)};
  T[1] = IPoly{Int(0), Int(1)};
  for (size_t n = 2; n <= c.size(); ++n)
    T[n] = Int(2) * shift_up(T[n - 1], 1) - T[n - 2];
  Int den = 1;
  for (const auto& cn : c) den = den / gcd(den, denominator(cn)) * denominator(cn);
  IPoly G{den};
  for (size_t n = 1; n <= c.size(); ++n)
    G = G + Int(2 * numerator(c[n - 1]) * (den / denominator(c[n - 1]))) * T[n];
  if (G.degree() > 0) {
    if (sign_at_int(G, Int(-1)) <= 0 || sign_at_int(G, Int(1)) <= 0)
      throw WeilError("cosine polynomial is not strictly positive");
    SturmChain ch = sturm_chain(radical(G));
    if (variations_at_int(ch, Int(-1)) != variations_at_int(ch, Int(1)))
      throw WeilError("cosine polynomial is not strictly positive");
  }
  DoublyPositive dp;
  dp.coeffs = c;
  while (!dp.coeffs.empty() && dp.coeffs.back() == 0) dp.coeffs.pop_back();
  return dp;
}

inline Quad sqrt_of(long q) { return Quad::root(q); }
inline Quad inv_sqrt_of(long q) { return Quad(Rat(0), Rat(1, q), q); }

inline Quad psi_eval(const DoublyPositive& dp, const Quad& t) {
  Quad acc = Quad::rational(Rat(0), t.m);
  for (size_t n = dp.coeffs.size(); n-- > 0;)
    acc = (acc + Quad::rational(dp.coeffs[n], t.m)) * t;
  return acc;
}

inline Quad psi_d_eval(const DoublyPositive& dp, int d, const Quad& t) {
  Quad td = Quad::rational(Rat(1), t.m);
  for (int i = 0; i < d; ++i) td = td * t;
  Quad acc = Quad::rational(Rat(0), t.m);
  for (size_t k = dp.coeffs.size() / static_cast<size_t>(d); k-- > 0;)
    acc = (acc + Quad::rational(dp.coeffs[(k + 1) * static_cast<size_t>(d) - 1], t.m)) * td;
  return acc;
}

struct LinearBound {
  Quad slope, intercept;  // #C(F_q) <= slope*g + intercept
};

inline LinearBound oesterle_bound(long q, const DoublyPositive& dp) {
  Quad pm = psi_eval(dp, inv_sqrt_of(q));
  if (sign(pm) == 0) throw WeilError("degenerate weight vector");
  Quad s = inverse(pm);
  Quad icpt = Quad::rational(Rat(1), q) + psi_eval(dp, sqrt_of(q)) * s;
  return {s, icpt};
}

struct RefinedBound {
  std::vector<Quad> weights;  // weights[d] = d*psi_d/psi at q^{-1/2}; [0] unused
  Quad slope, intercept;
};

// a_1*weights[1] + a_2*weights[2] + ... <= slope*g + intercept, where a_d
// counts closed points of degree d.  Truncating to d <= dmax is sound since
// every discarded term is nonnegative.
inline RefinedBound refined_weights(long q, const DoublyPositive& dp, int dmax) {
  Quad tm = inv_sqrt_of(q);
  Quad pm = psi_eval(dp, tm);
  if (sign(pm) == 0) throw WeilError("degenerate weight vector");
  Quad inv_pm = inverse(pm);
  RefinedBound r{{}, inv_pm, Quad::rational(Rat(1), q) + psi_eval(dp, sqrt_of(q)) * inv_pm};
  r.weights.assign(static_cast<size_t>(dmax) + 1, Quad::rational(Rat(0), q));
  for (int d = 1; d <= dmax; ++d)
    r.weights[static_cast<size_t>(d)] = Rat(d) * (psi_d_eval(dp, d, tm) * inv_pm);
  return r;
}

// Tabulated upper bounds on #C(F_q) for small genus.
inline long static_point_bound(long q, int g) {
  static const long table[5][10] = {
      {5, 6, 7, 8, 9, 10, 10, 11, 12, 13},       // q = 2
      {9, 10, 14, 15, 17, 20, 21, 23, 26, 27},   // q = 4
      {25, 33, 38, 45, 53, 65, 69, 75, 81, 86},  // q = 16
      {7, 8, 10, 12, 13, 14, 16, 18, 19, 21},    // q = 3
      {16, 20, 28, 30, 35, 38, 43, 46, 50, 54},  // q = 9
  };
  int row = q == 2 ? 0 : q == 4 ? 1 : q == 16 ? 2 : q == 3 ? 3 : q == 9 ? 4 : -1;
  if (row < 0 || g < 1 || g > 10)
    throw WeilError("no tabulated point bound for this field size and genus");
  return table[row][g - 1];
}

}  // namespace rcn
