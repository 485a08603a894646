#pragma once

#include "poly.hpp"

#include <optional>
#include <vector>

namespace rcn {

// Exact test that all roots of an integer polynomial lie in [-2 sqrt(q), 2 sqrt(q)].
//
// The radical is taken first, so repeated roots cost nothing.  Roots sitting
// exactly on an endpoint are divided out (x^2 - 4q for non-square q, the two
// linear factors for square q); a Sturm chain then counts roots of what is
// left on the open interval.  Chain members stay in Z[x]: each step takes the
// pseudo-remainder, corrects the sign so the chain agrees with the rational
// Sturm sequence up to positive factors, and strips the content.

struct SturmChain {
  std::vector<IPoly> p;
};

inline SturmChain sturm_chain(const IPoly& f) {
  SturmChain s;
  s.p.push_back(f);
  if (f.degree() < 1) return s;
  s.p.push_back(derivative(f));
  while (s.p.back().degree() > 0) {
    const IPoly& a = s.p[s.p.size() - 2];
    const IPoly& b = s.p.back();
    IPoly r = prem(a, b);
    if (r.is_zero()) break;
    // prem multiplies a by lc(b)^(deg a - deg b + 1); flip so the result is a
    // negative positive-multiple of the true remainder.
    long e = a.degree() - b.degree() + 1;
    int mult_sign = (b.lc() < 0 && (e & 1)) ? -1 : 1;
    r = primitive_part(r);
    s.p.push_back(mult_sign > 0 ? -r : r);
  }
  return s;
}

// Sign of p at c + s*sqrt(q) style points, here specialised to 2*sqrt(q):
// p(side * 2 sqrt(q)) = E(4q) + side * 2 O(4q) sqrt(q) with p = E(x^2) + x O(x^2).
inline int sign_at_twice_sqrt(const IPoly& p, long q, int side) {
  Int even(0), odd(0), pw(1);
  Int fourq = Int(4) * q;
  for (size_t i = 0; i < p.c.size(); i += 2) even += p.c[i] * pow_int(fourq, static_cast<unsigned>(i / 2));
  for (size_t i = 1; i < p.c.size(); i += 2) odd += p.c[i] * pow_int(fourq, static_cast<unsigned>((i - 1) / 2));
  Int u = even, v = Int(2 * side) * odd;
  // sign of u + v sqrt(q), q non-square
  int su = sign(u), sv = sign(v);
  if (sv == 0) return su;
  if (su == 0) return sv;
  if (su == sv) return su;
  Int d = u * u - v * v * q;
  return sign(d) * su;
}

inline int sign_at_int(const IPoly& p, const Int& x) { return sign(eval(p, x)); }

// Sign variations in the chain at one of the two interval endpoints.
inline int variations_at(const SturmChain& s, long q, int side) {
  bool square = is_square(q);
  Int xr = Int(side) * 2 * isqrt(Int(q));
  int var = 0, last = 0;
  for (const IPoly& p : s.p) {
    int sg = square ? sign_at_int(p, xr) : sign_at_twice_sqrt(p, q, side);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++var;
    last = sg;
  }
  return var;
}

inline int variations_at_int(const SturmChain& s, const Int& x) {
  int var = 0, last = 0;
  for (const IPoly& p : s.p) {
    int sg = sign_at_int(p, x);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++var;
    last = sg;
  }
  return var;
}

// All complex roots real and inside the closed Weil interval.
inline bool all_roots_in_weil_interval(const IPoly& h, long q) {
  if (h.is_zero()) return false;
  if (h.degree() < 1) return true;
  IPoly r = radical(h);
  if (is_square(q)) {
    Int e = 2 * isqrt(Int(q));
    for (const Int& root : {e, Int(-e)}) {
      IPoly lin{-root, Int(1)};
      if (r.degree() >= 1 && eval(r, root) == 0) r = divide_exact(r, lin);
    }
  } else {
    IPoly m{Int(-4) * q, Int(0), Int(1)};
    if (r.degree() >= 2 && divides(m, r)) r = divide_exact(r, m);
  }
  if (r.degree() < 1) return true;
  SturmChain s = sturm_chain(r);
  return variations_at(s, q, -1) - variations_at(s, q, +1) == r.degree();
}

// Number of distinct real roots in the closed interval; used by tests as an
// independent cross-check of the boolean test above.
inline int roots_in_weil_interval(const IPoly& h, long q) {
  if (h.degree() < 1) return 0;
  IPoly r = radical(h);
  int endpoint_roots = 0;
  if (is_square(q)) {
    Int e = 2 * isqrt(Int(q));
    for (const Int& root : {e, Int(-e)}) {
      IPoly lin{-root, Int(1)};
      if (r.degree() >= 1 && eval(r, root) == 0) {
        r = divide_exact(r, lin);
        ++endpoint_roots;
      }
    }
  } else {
    IPoly m{Int(-4) * q, Int(0), Int(1)};
    if (r.degree() >= 2 && divides(m, r)) {
      r = divide_exact(r, m);
      endpoint_roots += 2;
    }
  }
  if (r.degree() < 1) return endpoint_roots;
  SturmChain s = sturm_chain(r);
  return endpoint_roots + variations_at(s, q, -1) - variations_at(s, q, +1);
}

}  // namespace rcn
