#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcn/enumerate.hpp"
#include "rcn/label.hpp"
#include "rcn/lp_bounds.hpp"
#include "rcn/numeric.hpp"
#include "rcn/order_one.hpp"
#include "rcn/poly.hpp"
#include "rcn/weil.hpp"

// Arithmetic constraints on a candidate cover C' -> C of degree d over F_q.
// Writing g, g' for the genera, the Jacobian of C' decomposes up to isogeny
// as J(C) x A, so the traces satisfy T_{C',q^i} = T_{C,q^i} + T_{A,q^i} and
// the point counts N'_i = N_i(C) - T_{A,q^i}.  Riemann-Hurwitz bounds the
// genus gap: g' - g = (d-1)(g-1) + delta with delta >= 0, where 2*delta is
// the degree of the different.  The number t of geometric ramification
// points obeys t = 0 iff delta = 0, t <= 2*delta always, t <= delta when q
// is even (every ramified point is then wild or has e >= 3), and t = 2*delta
// when q is odd and d = 2 (tame, e = 2 everywhere).  Everything below is a
// necessary condition for such a cover to exist; none of it assumes the
// relative class number is 1 beyond A having order 1.

namespace rcn {

struct CoverScenario {
  long q = 2;
  int d = 2;
  int g = 0;
  int gp = 0;
  long delta = 0;
  bool cyclic = false;
};

inline std::optional<long> rh_delta(int d, int g, int gp) {
  long delta = static_cast<long>(gp - g) - static_cast<long>(d - 1) * (g - 1);
  if (delta < 0) return std::nullopt;
  return delta;
}

inline CoverScenario make_scenario(long q, int d, int g, int gp, bool cyclic = false) {
  if (d < 2 || g < 0 || gp <= g) throw WeilError("cover scenario needs d >= 2 and g' > g");
  auto delta = rh_delta(d, g, gp);
  if (!delta) throw WeilError("no degree-" + std::to_string(d) + " cover connects genus " +
                              std::to_string(g) + " to genus " + std::to_string(gp));
  // a degree-2 extension is automatically Galois, hence cyclic
  return CoverScenario{q, d, g, gp, *delta, cyclic || d == 2};
}

inline std::vector<long> feasible_t(const CoverScenario& sc) {
  if (sc.delta == 0) return {0};
  std::vector<long> out;
  if (sc.q % 2 == 0) {
    for (long t = 1; t <= sc.delta; ++t) out.push_back(t);
  } else if (sc.d == 2) {
    out.push_back(2 * sc.delta);
  } else {
    for (long t = 1; t <= 2 * sc.delta; ++t) out.push_back(t);
  }
  return out;
}

// Candidate Prym isogeny class: a product of order-one classes over F_q.
// For q > 2 the only simple class is T^2 - qT + q, so A is a power of it.
struct PrymCandidate {
  int dim = 0;
  long gamma = 0;  // p-rank
  IPoly weil;
  IPoly real_radical;
  std::vector<Int> trace;  // trace[i] = T_{A,q^i}, entry 0 unused
  std::string label;
};

inline PrymCandidate make_prym(long q, const std::vector<const OrderOneClass*>& parts,
                               int depth = 14) {
  PrymCandidate A;
  IPoly w{Int(1)};
  for (const OrderOneClass* p : parts) {
    A.dim += p->dim;
    w = w * p->weil;
  }
  if (A.dim == 0) throw WeilError("empty Prym candidate");
  A.weil = std::move(w);
  A.gamma = p_rank(A.weil, q);
  A.trace = frobenius_traces(A.weil, depth);
  A.real_radical = radical(weil_to_real(A.weil, q));
  A.label = encode_label(A.weil, q);
  return A;
}

inline PrymCandidate make_prym_power(long q, int dim, int depth = 14) {
  PrymCandidate A;
  A.dim = dim;
  A.weil = poly_pow(simple_order_one_weil(q), dim);
  A.gamma = p_rank(A.weil, q);
  A.trace = frobenius_traces(A.weil, depth);
  A.real_radical = radical(weil_to_real(A.weil, q));
  A.label = encode_label(A.weil, q);
  return A;
}

struct PairCandidate {
  CoverScenario sc;
  IPoly C;  // Weil polynomial of the base curve
  IPoly hC;
  IPoly hC_radical;
  const PrymCandidate* A = nullptr;
  long gammaC = 0;
  std::vector<Int> nC;   // N_i(C), entry 0 unused
  std::vector<Int> nCp;  // N'_i = N_i(C) - T_{A,q^i}
};

inline PairCandidate make_pair_candidate(const CoverScenario& sc, const IPoly& C,
                                         const PrymCandidate& A, int depth = 14) {
  if (A.dim != sc.gp - sc.g) throw WeilError("Prym dimension does not match the genus gap");
  if (weil_genus(C) != sc.g) throw WeilError("base curve genus does not match the scenario");
  if (static_cast<int>(A.trace.size()) <= depth)
    throw WeilError("Prym candidate traces too shallow for the requested depth");
  PairCandidate c;
  c.sc = sc;
  c.C = C;
  c.hC = weil_to_real(C, sc.q);
  c.hC_radical = radical(c.hC);
  c.A = &A;
  c.gammaC = p_rank(C, sc.q);
  c.nC = point_counts(sc.q, frobenius_traces(C, depth));
  c.nCp.assign(depth + 1, Int(0));
  for (int i = 1; i <= depth; ++i) c.nCp[i] = c.nC[i] - A.trace[i];
  return c;
}

// Static point-count cap for a genus-gen curve over the degree-i extension,
// when the table of known bounds has a row for that field size.
inline std::optional<long> tabulated_point_cap(long q, int gen, int i) {
  if (gen < 1 || gen > 10) return std::nullopt;
  Int f = pow_int(Int(q), static_cast<unsigned>(i));
  if (f > 16) return std::nullopt;
  long fs = static_cast<long>(f);
  if (fs != 2 && fs != 3 && fs != 4 && fs != 9 && fs != 16) return std::nullopt;
  return static_point_bound(fs, gen);
}

inline bool counts_within_caps(long q, int gen, const std::vector<Int>& n, int depth = 64) {
  for (int i = 1; i <= 4 && i <= depth && i < static_cast<int>(n.size()); ++i) {
    auto cap = tabulated_point_cap(q, gen, i);
    if (cap && n[i] > *cap) return false;
  }
  return true;
}

inline bool counts_positive_places(const std::vector<Int>& n, int depth = 64) {
  size_t lim = std::min(n.size(), static_cast<size_t>(depth) + 1);
  for (size_t i = 1; i < lim; ++i)
    if (n[i] < 0) return false;
  auto a = place_counts(std::vector<Int>(n.begin(), n.begin() + lim));
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] < 0) return false;
  return true;
}

inline bool cover_counts_ok(const PairCandidate& c, int depth = 64) {
  size_t lim = std::min(c.nCp.size(), static_cast<size_t>(depth) + 1);
  for (size_t i = 1; i < lim; ++i)
    if (c.nCp[i] < 0) return false;
  return true;
}

inline bool base_caps_ok(const PairCandidate& c, int depth = 64) {
  return counts_within_caps(c.sc.q, c.sc.g, c.nC, depth);
}
inline bool cover_caps_ok(const PairCandidate& c, int depth = 64) {
  return counts_within_caps(c.sc.q, c.sc.gp, c.nCp, depth);
}
inline bool base_positivity_ok(const PairCandidate& c, int depth = 64) {
  return counts_positive_places(c.nC, depth);
}
inline bool cover_positivity_ok(const PairCandidate& c, int depth = 64) {
  return counts_positive_places(c.nCp, depth);
}

// Weighted point-count bound over F_2, in units of 1/10000:
// a_1 + .3366(2 a_2) + .1137(3 a_3) + .0537(4 a_4) <= .8042 g + 5.619
// with a_i the number of degree-i places.
inline bool weighted_place_bound_ok(const std::vector<Int>& n, int gen) {
  auto a = place_counts(n);
  Int lhs = 10000 * a[1] + 6732 * a[2] + 3411 * a[3] + 2148 * a[4];
  return lhs <= 8042 * Int(gen) + 56190;
}

inline bool base_weighted_count_ok(const PairCandidate& c) {
  if (c.sc.q != 2) return true;
  return weighted_place_bound_ok(c.nC, c.sc.g);
}

// Per-factor admission tests for order-one classes entering a Prym over F_2:
// the traces are capped by the base curve's possible point counts, and the
// same weights as above bound the trace combination.
inline bool prym_trace_caps_ok(const std::vector<Int>& trace, int base_genus) {
  for (int i = 1; i <= 2; ++i) {
    auto cap = tabulated_point_cap(2, base_genus, i);
    if (cap && trace[i] > *cap) return false;
  }
  return true;
}

inline bool prym_weighted_bound_ok(const std::vector<Int>& trace, int base_genus) {
  Int lhs = 10000 * trace[1] + 3366 * (trace[2] - trace[1]) + 1137 * (trace[3] - trace[1]) +
            537 * (trace[4] - trace[2]);
  return lhs <= 8042 * Int(base_genus) + 56190;
}

inline bool prym_part_admissible(const OrderOneClass& cl, int base_genus) {
  return prym_trace_caps_ok(cl.traces, base_genus) && prym_weighted_bound_ok(cl.traces, base_genus);
}

// p-rank bookkeeping for a cyclic cover of degree equal to the characteristic:
// gamma_{C'} - 1 = d (gamma_C - 1) + t with gamma_{C'} = gamma_C + gamma_A.
inline bool ds_check(const PairCandidate& c, long t) {
  if (c.sc.d != char_of(c.sc.q))
    throw WeilError("p-rank count formula needs the degree to equal the characteristic");
  return c.gammaC + c.A->gamma - 1 == static_cast<long>(c.sc.d) * (c.gammaC - 1) + t;
}

// Rational ramification points force rational points upstairs when q is even:
// delta = 1 forces t = 1 and a rational point on C'; delta = 2 puts a point
// over F_{q^2}; two ramification points are individually quadratic.
inline bool ramification_floor(const PairCandidate& c, long t) {
  if (c.sc.q % 2 != 0) return true;
  if (c.sc.delta == 1 && c.nCp[1] < 1) return false;
  if (c.sc.delta == 2 && c.nCp[2] < 1) return false;
  if (t == 2 && c.nCp[2] < 2) return false;
  return true;
}

// An unramified cyclic cover of degree d exists only when d divides the class
// number of the base, i.e. d | P_C(1).
inline bool cyclic_divisibility(const PairCandidate& c) {
  if (c.sc.delta != 0 || !c.sc.cyclic) return true;
  return order(c.C) % c.sc.d == 0;
}

// Degree-2 transfer inequalities.  Points of C over F_{q^i} lift to points of
// C' over F_{q^{2i}} except at ramification: N'_{2i} >= 2 N_i(C) - t, and in
// trace form 2 T_{A,q^i} + T_{A,q^{2i}} - t <= N_{2i}(C).  When t <= 2 the
// odd-degree counts of C' keep the parity of N'_1.
inline bool double_cover_checks(const PairCandidate& c, long t,
                                const std::vector<int>& i_range = {1, 2, 3},
                                const std::vector<int>& j_range = {2}) {
  for (int i : i_range) {
    if (c.nCp[2 * i] < 2 * c.nC[i] - t) return false;
    if (2 * c.A->trace[i] + c.A->trace[2 * i] - t > c.nC[2 * i]) return false;
  }
  if (t <= 2)
    for (int j : j_range)
      if ((c.nCp[2 * j - 1] - c.nCp[1]) % 2 != 0) return false;
  return true;
}

inline bool triple_cover_check(const PairCandidate& c, const std::vector<int>& i_range = {1, 2}) {
  for (int i : i_range)
    if (c.nC[i] + 2 * c.A->trace[i] + c.A->trace[3 * i] > c.nC[3 * i]) return false;
  return true;
}

inline bool quadruple_cover_check(const PairCandidate& c, long t,
                                  const std::vector<int>& i_range = {1}) {
  for (int i : i_range)
    if (4 * c.A->trace[i] + c.A->trace[4 * i] - 2 * t > c.nC[4 * i]) return false;
  return true;
}

// A quadratic extension F'/F with Prym A has a companion quadratic extension
// whose Prym is the quadratic twist of A; the companion cover curve C'' must
// itself have plausible point counts.
inline bool relative_twist_ok(const PairCandidate& c) {
  if (c.sc.d != 2) return true;
  int depth = static_cast<int>(c.nC.size()) - 1;
  std::vector<Int> npp(depth + 1, Int(0));
  for (int i = 1; i <= depth; ++i) {
    Int tw = (i % 2 == 0) ? c.A->trace[i] : -c.A->trace[i];
    npp[i] = c.nC[i] - tw;
    if (npp[i] < 0) return false;
  }
  if (!counts_within_caps(c.sc.q, c.sc.gp, npp)) return false;
  return counts_positive_places(npp);
}

// Nonnegative generator of { u h1 + v h2 : u, v in Z[x] } cap Z for coprime
// monic h1, h2 (monicity lets any combination be reduced to deg u < deg h2,
// deg v < deg h1).  Computed by triangulating the lattice spanned by
// x^i h1, x^j h2 with unimodular row operations; the last pivot, sitting on
// the constant-coefficient column, generates the intersection.
inline Int reduced_resultant(const IPoly& h1, const IPoly& h2) {
  if (h1.degree() < 1 || h2.degree() < 1)
    throw WeilError("reduced resultant needs two nonconstant polynomials");
  if (h1.lc() != 1 || h2.lc() != 1) throw WeilError("reduced resultant needs monic inputs");
  if (gcd(h1, h2).degree() != 0) throw WeilError("reduced resultant of non-coprime polynomials");
  int d1 = h1.degree(), d2 = h2.degree(), n = d1 + d2;
  // column j holds the coefficient of x^{n-1-j}; the constant column is last
  std::vector<std::vector<Int>> m;
  m.reserve(n);
  auto push_rows = [&](const IPoly& h, int shifts) {
    for (int s = shifts - 1; s >= 0; --s) {
      std::vector<Int> row(n, Int(0));
      for (int k = 0; k <= h.degree(); ++k) row[n - 1 - (k + s)] = h.coeff(k);
      m.push_back(std::move(row));
    }
  };
  push_rows(h1, d2);
  push_rows(h2, d1);
  for (int col = 0; col < n; ++col) {
    for (;;) {
      int best = -1;
      for (int r = col; r < n; ++r)
        if (m[r][col] != 0 && (best < 0 || abs(m[r][col]) < abs(m[best][col]))) best = r;
      if (best < 0) throw WeilError("reduced resultant lattice is singular");
      std::swap(m[col], m[best]);
      bool done = true;
      for (int r = col + 1; r < n; ++r) {
        if (m[r][col] == 0) continue;
        Int f = m[r][col] / m[col][col];
        if (f != 0)
          for (int j = col; j < n; ++j) m[r][j] -= f * m[col][j];
        if (m[r][col] != 0) done = false;
      }
      if (done) break;
    }
  }
  return abs(m[n - 1][n - 1]);
}

// Classical Sylvester resultant via fraction-free elimination; cross-check
// oracle for the reduced resultant, which always divides it.
inline Int sylvester_resultant(const IPoly& h1, const IPoly& h2) {
  if (h1.degree() < 1 || h2.degree() < 1)
    throw WeilError("resultant needs two nonconstant polynomials");
  int d1 = h1.degree(), d2 = h2.degree(), n = d1 + d2;
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
  for (int s = 0; s < d2; ++s)
    for (int k = 0; k <= d1; ++k) m[s][n - 1 - (k + s)] = h1.coeff(k);
  for (int s = 0; s < d1; ++s)
    for (int k = 0; k <= d2; ++k) m[d2 + s][n - 1 - (k + s)] = h2.coeff(k);
  Int prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return Int(0);
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

enum class GateVerdict { accept, reject, followup };

// J(C) x A -> J(C') has a nontrivial kernel whose exponent divides both d and
// the reduced resultant of the real radicals, so gcd(d, r) = 1 is impossible.
// gcd = 2 with d > 2 leaves a loophole that forces a degree-2 quotient of C';
// shared factors between the radicals void the obstruction entirely.
inline GateVerdict resultant_gate(const PairCandidate& c) {
  if (gcd(c.hC_radical, c.A->real_radical).degree() != 0) return GateVerdict::accept;
  Int r = reduced_resultant(c.hC_radical, c.A->real_radical);
  Int shared = gcd(Int(c.sc.d), r);
  if (shared == 1) return GateVerdict::reject;
  if (shared == 2 && c.sc.d > 2) return GateVerdict::followup;
  return GateVerdict::accept;
}

// Loophole branch J(D) ~ A: the degree-2 map C' -> D needs
// g' - g_D >= g_D - 1 with g_D = g' - g, i.e. g' <= 2g + 1, and equality
// makes the cover unramified, impossible over an order-1 Jacobian.
inline bool followup_prym_branch_viable(const PairCandidate& c) {
  auto delta2 = rh_delta(2, c.sc.gp - c.sc.g, c.sc.gp);
  if (!delta2) return false;
  if (*delta2 == 0) return false;
  if (char_of(c.sc.q) == 2) {
    CoverScenario s2 = make_scenario(c.sc.q, 2, c.sc.gp - c.sc.g, c.sc.gp, true);
    long gd = c.A->gamma;
    long gcp = c.gammaC + c.A->gamma;
    bool ok = false;
    for (long t : feasible_t(s2))
      if (gcp - 1 == 2 * (gd - 1) + t) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

struct FilterProfile {
  int depth = 14;
  int count_depth = 14;  // how deep the cap and positivity filters look
  std::vector<int> dc_i = {1, 2, 3};
  std::vector<int> parity_j;  // {2} in the full profile
  std::vector<int> triple_i = {1, 2};
  std::vector<int> quad_i = {1};
  bool relative_twist = false;
  bool resultant_followups = false;
  bool resultant_gate = true;
  bool ds_on_pair = false;
  bool composite_trace_prescreen = false;
  bool serre_on_base = true;
  bool existence_on_base = true;   // consumed by the search driver
  bool existence_on_cover = true;  // likewise
  static FilterProfile baseline() { return FilterProfile{}; }
  static FilterProfile full() {
    FilterProfile p;
    p.parity_j = {2};
    p.relative_twist = true;
    p.resultant_followups = true;
    return p;
  }
};

// Existential sweep over ramification point counts: the candidate survives if
// some feasible t satisfies every t-dependent condition at once.
inline bool ramification_profile_ok(const PairCandidate& c, const FilterProfile& pr) {
  for (long t : feasible_t(c.sc)) {
    if (!ramification_floor(c, t)) continue;
    if (pr.ds_on_pair && c.sc.d == char_of(c.sc.q) && !ds_check(c, t)) continue;
    if (c.sc.d == 2 && !double_cover_checks(c, t, pr.dc_i, pr.parity_j)) continue;
    if (c.sc.d == 4 && !quadruple_cover_check(c, t, pr.quad_i)) continue;
    return true;
  }
  return false;
}

using PairPredicate = std::function<bool(const PairCandidate&)>;

// Loophole branch J(D) ~ J(C): the pair must also make sense as a plain
// degree-2 cover at (g, g'), judged by the reference battery the caller
// supplies (plus the p-rank relation in characteristic 2).
inline bool followup_base_branch_viable(const PairCandidate& c, const PairPredicate& d2_reference,
                                        int depth) {
  auto delta2 = rh_delta(2, c.sc.g, c.sc.gp);
  if (!delta2) return false;
  CoverScenario s2 = make_scenario(c.sc.q, 2, c.sc.g, c.sc.gp, true);
  PairCandidate c2 = make_pair_candidate(s2, c.C, *c.A, depth);
  if (char_of(c.sc.q) == 2) {
    bool ok = false;
    for (long t : feasible_t(s2))
      if (ds_check(c2, t)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  if (!d2_reference) return true;  // nothing to refute against
  return d2_reference(c2);
}

inline bool resultant_gate_ok(const PairCandidate& c, const FilterProfile& pr,
                              const PairPredicate& d2_reference) {
  switch (resultant_gate(c)) {
    case GateVerdict::accept:
      return true;
    case GateVerdict::reject:
      return false;
    case GateVerdict::followup:
      break;
  }
  if (!pr.resultant_followups) return true;
  if (followup_prym_branch_viable(c)) return true;
  return followup_base_branch_viable(c, d2_reference, pr.depth);
}

struct NamedFilter {
  std::string name;
  PairPredicate ok;
};

// The per-pair battery in evaluation order.  Every predicate is pure, so the
// accepted set does not depend on this order; it is chosen cheap-first.
inline std::vector<NamedFilter> pair_filters(const FilterProfile& pr,
                                             PairPredicate d2_reference = nullptr) {
  std::vector<NamedFilter> out;
  int cd = pr.count_depth;
  out.push_back({"cover-counts", [cd](const PairCandidate& c) { return cover_counts_ok(c, cd); }});
  out.push_back({"base-caps", [cd](const PairCandidate& c) { return base_caps_ok(c, cd); }});
  out.push_back({"cover-caps", [cd](const PairCandidate& c) { return cover_caps_ok(c, cd); }});
  out.push_back(
      {"base-positivity", [cd](const PairCandidate& c) { return base_positivity_ok(c, cd); }});
  out.push_back(
      {"cover-positivity", [cd](const PairCandidate& c) { return cover_positivity_ok(c, cd); }});
  out.push_back(
      {"base-weighted-counts", [](const PairCandidate& c) { return base_weighted_count_ok(c); }});
  if (pr.composite_trace_prescreen)
    out.push_back({"prym-weighted-traces", [](const PairCandidate& c) {
                     if (c.sc.q != 2) return true;
                     return prym_weighted_bound_ok(c.A->trace, c.sc.g);
                   }});
  out.push_back({"ramification-profile",
                 [pr](const PairCandidate& c) { return ramification_profile_ok(c, pr); }});
  out.push_back({"triple-transfer", [pr](const PairCandidate& c) {
                   if (c.sc.d != 3) return true;
                   return triple_cover_check(c, pr.triple_i);
                 }});
  out.push_back({"etale-class-divisibility",
                 [](const PairCandidate& c) { return cyclic_divisibility(c); }});
  if (pr.relative_twist)
    out.push_back(
        {"twist-companion", [](const PairCandidate& c) { return relative_twist_ok(c); }});
  if (pr.resultant_gate)
    out.push_back({"resultant-gate", [pr, d2_reference](const PairCandidate& c) {
                     return resultant_gate_ok(c, pr, d2_reference);
                   }});
  return out;
}

// candidate label, filter name, verdict
using TraceSink = std::function<void(const std::string&, const std::string&, bool)>;

inline bool pair_passes(const PairCandidate& c, const FilterProfile& pr,
                        PairPredicate d2_reference = nullptr, const TraceSink* sink = nullptr,
                        const std::string& tag = "") {
  for (const NamedFilter& f : pair_filters(pr, d2_reference)) {
    bool ok = f.ok(c);
    if (sink) (*sink)(tag, f.name, ok);
    if (!ok) return false;
  }
  return true;
}

// Serre's splitting tests on the base curve.  A coprime factorization
// h = h1 h2 of the real Weil polynomial with reduced resultant 1 cannot come
// from a Jacobian; reduced resultant 2 forces C to be a double cover of a
// curve D whose real Weil polynomial is h1 or h2, and D must then survive
// the same kind of scrutiny: sensible counts, table caps, and the degree-2
// transfer inequalities against C for some feasible ramification count.
inline bool double_quotient_viable(long q, const IPoly& hD, const std::vector<Int>& nC, int g) {
  int gd = hD.degree();
  auto delta = rh_delta(2, gd, g);
  if (!delta) return false;
  int depth = static_cast<int>(nC.size()) - 1;
  IPoly D = real_to_weil(hD, q);
  auto nD = point_counts(q, frobenius_traces(D, depth));
  for (int i = 1; i <= depth; ++i)
    if (nD[i] < 0) return false;
  if (!counts_within_caps(q, gd, nD)) return false;
  if (!counts_positive_places(nD)) return false;
  if (*delta == 0 && order(D) % 2 != 0) return false;
  CoverScenario s2 = make_scenario(q, 2, gd, g, true);
  for (long t : feasible_t(s2)) {
    bool ok = true;
    if (q % 2 == 0) {
      if (*delta == 1 && nC[1] < 1) ok = false;
      if (*delta == 2 && nC[2] < 1) ok = false;
      if (t == 2 && nC[2] < 2) ok = false;
    }
    for (int i = 1; ok && i <= 3 && 2 * i <= depth; ++i)
      if (nC[2 * i] < 2 * nD[i] - t) ok = false;
    if (ok) return true;
  }
  return false;
}

inline bool resultant_split_ok(long q, const IPoly& hC, const std::vector<Int>& nC,
                               const std::vector<IPoly>& factor_catalog) {
  auto fac = catalog_factor(hC, factor_catalog);
  for (const auto& split : fac.splittings) {
    Int r = reduced_resultant(split.first, split.second);
    if (r == 1) return false;
    if (r == 2) {
      if (!double_quotient_viable(q, split.first, nC, hC.degree()) &&
          !double_quotient_viable(q, split.second, nC, hC.degree()))
        return false;
    }
  }
  return true;
}

}  // namespace rcn
