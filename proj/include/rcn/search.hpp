#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rcn/cover_filters.hpp"
#include "rcn/enumerate.hpp"
#include "rcn/label.hpp"
#include "rcn/lmfdb.hpp"
#include "rcn/lp_bounds.hpp"
#include "rcn/numeric.hpp"
#include "rcn/order_one.hpp"
#include "rcn/poly.hpp"
#include "rcn/weil.hpp"

// Drivers for the two classifications of relative class number one.
//
// Geometric search: for a cover C' -> C of degree d with J(C') ~ J(C) x A and
// #A(F_q) = 1, the scenario windows over (d, g, g') come from the linear
// programming point bounds; inside each window we enumerate real Weil
// polynomials for C against a fixed Prym candidate A, pushing relaxations of
// the pair filters into the enumeration as prefix constraints and replaying
// the full battery on every complete candidate.  The prefix constraints only
// prune; acceptance is decided by the full-depth battery, so the output does
// not depend on how aggressive the pruning is.
//
// Constant search: C' = C x_{F_q} F_{q^d}, so the new part of the zeta
// function is determined by C and d.  The surviving Weil polynomials are the
// ones whose relative polynomial has value 1 at T = 1.

namespace rcn {

// ---------------------------------------------------------------------------
// scenario windows

// Cover-genus caps per base genus for degree-2 covers over F_2, indexed by
// g = 2..9.  The analytic cap for g = 4 is 10, but the search window runs to
// 11 so that the weighted-count consequence is also confirmed by exhaustion.
inline const std::map<int, int>& degree2_gprime_caps() {
  static const std::map<int, int> caps = {{2, 7},  {3, 9},  {4, 11}, {5, 11},
                                          {6, 13}, {7, 14}, {8, 15}, {9, 17}};
  return caps;
}

// Scenario windows for q = 2.  Degree 2 has its own per-genus caps; higher
// degrees are capped by g' <= 2g + 4, which empties the window once the
// unramified minimum g + (d-1)(g-1) passes it.
inline std::vector<CoverScenario> geometric_scenarios_q2(int d) {
  std::vector<CoverScenario> out;
  if (d == 2) {
    for (const auto& [g, cap] : degree2_gprime_caps())
      for (int gp = 2 * g - 1; gp <= cap; ++gp) out.push_back(make_scenario(2, 2, g, gp));
    return out;
  }
  for (int g = 2;; ++g) {
    int lo = g + (d - 1) * (g - 1);
    int hi = 2 * g + 4;
    if (lo > hi) break;
    for (int gp = lo; gp <= hi; ++gp) out.push_back(make_scenario(2, d, g, gp));
  }
  return out;
}

// Scenario windows for q in {3, 4}.  The Prym is a power of the unique
// order-one elliptic class, so T_{A,q} = q(g'-g) and T_{A,q^2} = q^2(g'-g) -
// 2q(g'-g); the transfer inequalities then force
//   q(g'-g) <= #C(F_q)  and  q^2(g'-g) - c delta <= #C(F_{q^2})
// with c = 2 for odd q and c = 1 for even q (the bound on ramification
// points), while #C(F_{q^2}) >= q^2(g-1) pins down g.  All covers here are
// cyclic.  Degrees above 2 only have to satisfy the F_q bound with
// g' - g >= (d-1)(g-1).
inline std::vector<CoverScenario> geometric_scenarios_q34(long q, int d) {
  std::vector<CoverScenario> out;
  if (q != 3 && q != 4) throw WeilError("scenario windows only cover q in {2, 3, 4}");
  for (int g = 2; g <= 6; ++g) {
    auto cap1 = tabulated_point_cap(q, g, 1);
    auto cap2 = tabulated_point_cap(q, g, 2);
    if (!cap1 || !cap2) continue;
    if (d == 2) {
      if (Int(q) * q * (g - 1) > *cap2) continue;
      long c = (q % 2 == 1) ? 2 : 1;
      for (int gp = 2 * g - 1;; ++gp) {
        if (Int(q) * (gp - g) > *cap1) break;
        if (Int(q) * q * (gp - g) - c * (gp - 2 * g + 1) > *cap2) break;
        out.push_back(make_scenario(q, 2, g, gp, true));
      }
    } else {
      if (Int(q) * (d - 1) * (g - 1) > *cap1) continue;
      for (int gp = g + (d - 1) * (g - 1);; ++gp) {
        if (Int(q) * (gp - g) > *cap1) break;
        out.push_back(make_scenario(q, d, g, gp, true));
      }
    }
  }
  return out;
}

inline std::vector<CoverScenario> geometric_scenarios(long q, int d) {
  return q == 2 ? geometric_scenarios_q2(d) : geometric_scenarios_q34(q, d);
}

// ---------------------------------------------------------------------------
// Prym candidates

// Order-one candidates of the exact dimension, assembled as multisets of
// admissible simple classes.  Admissibility is the per-factor screen: traces
// over F_q and F_{q^2} within the point caps at the base genus, plus the
// weighted trace bound.  For q > 2 the only candidate is the elliptic power.
inline std::vector<PrymCandidate> prym_candidates(long q, const CoverScenario& sc,
                                                  const std::vector<OrderOneClass>& catalog,
                                                  int depth = 14) {
  int dim = sc.gp - sc.g;
  std::vector<PrymCandidate> out;
  if (q != 2) {
    out.push_back(make_prym_power(q, dim, depth));
    return out;
  }
  std::vector<const OrderOneClass*> pool;
  for (const auto& cl : catalog)
    if (cl.dim <= dim && prym_part_admissible(cl, sc.g)) pool.push_back(&cl);

  // For double covers the count consequence at the first level folds into the
  // weighted bound, leaving an additive budget on the parts' excess:
  // 1.5612 (g'-g) + sum(excess) <= 0.8042 g + 5.619 + 0.3366 delta.
  // Every part has nonnegative excess, so the budget prunes prefixes too.
  bool budgeted = sc.d == 2;
  Rat budget(Int(8042) * sc.g + 56190 + 3366 * Int(sc.delta) - 15612 * Int(dim), Int(10000));

  std::vector<const OrderOneClass*> cur;
  Rat esum(0);
  std::function<void(int, size_t)> rec = [&](int left, size_t from) {
    if (left == 0) {
      out.push_back(make_prym(q, cur, depth));
      return;
    }
    for (size_t i = from; i < pool.size(); ++i) {
      if (pool[i]->dim > left) continue;
      if (budgeted && esum + pool[i]->excess > budget) continue;
      cur.push_back(pool[i]);
      esum += pool[i]->excess;
      rec(left - pool[i]->dim, i);
      esum -= pool[i]->excess;
      cur.pop_back();
    }
  };
  rec(dim, 0);

  // cheap global screens already implied by the pair filters
  auto dead = [&](const PrymCandidate& A) {
    for (int i : {1, 2, 4}) {
      auto cap = tabulated_point_cap(q, sc.g, i);
      if (cap && A.trace[i] > *cap) return true;
    }
    return false;
  };
  out.erase(std::remove_if(out.begin(), out.end(), dead), out.end());
  std::sort(out.begin(), out.end(),
            [](const PrymCandidate& a, const PrymCandidate& b) { return a.label < b.label; });
  return out;
}

// ---------------------------------------------------------------------------
// prefix constraints

// Relaxations of the pair battery that already make sense on a coefficient
// prefix of the base curve's real Weil polynomial.  Each one is monotone:
// deeper prefixes only see more indices and smaller surviving t-sets.
inline ConstraintSet pair_prefix_constraints(const CoverScenario& sc, const PrymCandidate& A,
                                             const FilterProfile& pr) {
  ConstraintSet cs;
  long q = sc.q;
  int g = sc.g, gp = sc.gp;

  cs.push_back({"pair-counts", 1, [q, g, gp, cd = pr.count_depth, TA = A.trace](const PrefixView& v) {
                  int k = std::min(v.depth(), cd);
                  std::vector<Int> np(k + 1, Int(0));
                  for (int i = 1; i <= k; ++i) {
                    const Int& n = v.point_count(i);
                    np[i] = n - TA[i];
                    if (np[i] < 0) return false;
                    if (v.place_count(i) < 0) return false;
                    if (i <= 4) {
                      auto capB = tabulated_point_cap(q, g, i);
                      if (capB && n > *capB) return false;
                      auto capP = tabulated_point_cap(q, gp, i);
                      if (capP && np[i] > *capP) return false;
                    }
                  }
                  auto ap = place_counts(np);
                  for (size_t i = 1; i < ap.size(); ++i)
                    if (ap[i] < 0) return false;
                  if (q == 2) {
                    Int lhs = 0;
                    const Int w[5] = {Int(0), Int(10000), Int(6732), Int(3411), Int(2148)};
                    for (int i = 1; i <= std::min(k, 4); ++i) lhs += w[i] * v.place_count(i);
                    if (lhs > 8042 * Int(g) + 56190) return false;
                  }
                  return true;
                }});

  cs.push_back({"pair-profile", 1, [sc, pr, TA = A.trace](const PrefixView& v) {
                  int k = v.depth();
                  std::vector<Int> n(k + 1, Int(0)), np(k + 1, Int(0));
                  for (int i = 1; i <= k; ++i) {
                    n[i] = v.point_count(i);
                    np[i] = n[i] - TA[i];
                  }
                  if (sc.d == 3)
                    for (int i : pr.triple_i)
                      if (3 * i <= k && n[i] + 2 * TA[i] + TA[3 * i] > n[3 * i]) return false;
                  for (long t : feasible_t(sc)) {
                    bool ok = true;
                    if (sc.q % 2 == 0) {
                      if (sc.delta == 1 && k >= 1 && np[1] < 1) ok = false;
                      if (sc.delta == 2 && k >= 2 && np[2] < 1) ok = false;
                      if (t == 2 && k >= 2 && np[2] < 2) ok = false;
                    }
                    if (ok && sc.d == 2) {
                      for (int i : pr.dc_i) {
                        if (2 * i > k) continue;
                        if (np[2 * i] < 2 * n[i] - t || 2 * TA[i] + TA[2 * i] - t > n[2 * i]) {
                          ok = false;
                          break;
                        }
                      }
                      if (ok && t <= 2)
                        for (int j : pr.parity_j)
                          if (2 * j - 1 <= k && (np[2 * j - 1] - np[1]) % 2 != 0) ok = false;
                    }
                    if (ok && sc.d == 4)
                      for (int i : pr.quad_i)
                        if (4 * i <= k && 4 * TA[i] + TA[4 * i] - 2 * t > n[4 * i]) ok = false;
                    if (ok) return true;
                  }
                  return false;
                }});

  if (pr.relative_twist && sc.d == 2)
    cs.push_back({"twist-prefix", 1, [q, gp, TA = A.trace](const PrefixView& v) {
                    int k = v.depth();
                    std::vector<Int> npp(k + 1, Int(0));
                    for (int i = 1; i <= k; ++i) {
                      npp[i] = v.point_count(i) - (i % 2 == 0 ? TA[i] : -TA[i]);
                      if (npp[i] < 0) return false;
                      if (i <= 4) {
                        auto cap = tabulated_point_cap(q, gp, i);
                        if (cap && npp[i] > *cap) return false;
                      }
                    }
                    auto app = place_counts(npp);
                    for (size_t i = 1; i < app.size(); ++i)
                      if (app[i] < 0) return false;
                    return true;
                  }});

  return cs;
}

// ---------------------------------------------------------------------------
// results

enum class PairStatus { polynomial_level, curve_verified, unverifiable };

inline const char* to_string(PairStatus s) {
  switch (s) {
    case PairStatus::curve_verified: return "curve-verified";
    case PairStatus::unverifiable: return "unverifiable-without-external-data";
    default: return "polynomial-level";
  }
}

struct GeometricPair {
  CoverScenario sc;
  std::string base_label;  // J(C)
  std::string prym_label;  // A
  IPoly base_weil;
  IPoly prym_weil;
  IPoly cover_weil;
  PairStatus status = PairStatus::polynomial_level;
};

enum class ScenarioOutcome { eliminated_by_filters, eliminated_by_curve_data, survives };

inline const char* to_string(ScenarioOutcome o) {
  switch (o) {
    case ScenarioOutcome::eliminated_by_filters: return "eliminated-by-filters";
    case ScenarioOutcome::eliminated_by_curve_data: return "eliminated-by-curve-data";
    default: return "survives";
  }
}

struct ScenarioReport {
  CoverScenario sc;
  std::vector<GeometricPair> pairs;
  long enumerated = 0;       // complete base polynomials seen across all A
  long battery_passed = 0;   // pairs surviving the filter battery
  std::map<std::string, long> kills;
  ScenarioOutcome outcome = ScenarioOutcome::eliminated_by_filters;
  bool outside_proven_range = false;
};

struct SearchOptions {
  FilterProfile profile = FilterProfile::full();
  const IsogenyStore* store = nullptr;
  int threads = 1;
  int depth = 14;
  std::ostream* audit = nullptr;  // one JSON line per scenario, plus pair lines
};

inline std::string scenario_key(const CoverScenario& sc) {
  std::ostringstream s;
  s << sc.q << "," << sc.d << "," << sc.g << "," << sc.gp;
  return s.str();
}

namespace detail {

inline void audit_scenario_line(std::ostream& out, const ScenarioReport& r) {
  out << "{\"scenario\":\"" << scenario_key(r.sc) << "\",\"enumerated\":" << r.enumerated
      << ",\"battery\":" << r.battery_passed << ",\"pairs\":" << r.pairs.size() << ",\"kills\":{";
  bool first = true;
  for (const auto& [name, n] : r.kills) {
    if (!first) out << ",";
    first = false;
    out << "\"" << name << "\":" << n;
  }
  out << "},\"outcome\":\"" << to_string(r.outcome) << "\"}\n";
}

inline void audit_pair_line(std::ostream& out, const GeometricPair& p) {
  out << "{\"scenario\":\"" << scenario_key(p.sc) << "\",\"prym\":\"" << p.prym_label
      << "\",\"base\":\"" << p.base_label << "\",\"status\":\"" << to_string(p.status) << "\"}\n";
}

}  // namespace detail

// Low-degree real Weil polynomials used to look for coprime splittings of a
// base candidate; factors up to half the degree find every two-sided split.
inline std::vector<IPoly> split_factor_catalog(long q, int g) {
  std::vector<IPoly> out;
  for (int k = 1; k <= g / 2; ++k) {
    auto polys = enumerate_real_weil_polys(q, k);
    out.insert(out.end(), polys.begin(), polys.end());
  }
  return out;
}

// The degree-2 reference set: shapes (g, g') that stayed alive in the
// degree-2 run, consulted when a residual resultant factor of 2 forces a
// would-be double cover of the same base.
using ShapeSet = std::set<std::pair<int, int>>;

inline PairPredicate shape_reference(const ShapeSet* alive) {
  if (!alive) return nullptr;
  return [alive](const PairCandidate& c) { return alive->count({c.sc.g, c.sc.gp}) > 0; };
}

inline ScenarioReport run_geometric_scenario(const CoverScenario& sc,
                                             const std::vector<OrderOneClass>& catalog,
                                             const SearchOptions& opt,
                                             const ShapeSet* d2_alive = nullptr) {
  ScenarioReport report;
  report.sc = sc;
  FilterProfile pr = opt.profile;
  if (sc.q != 2) {
    // Cyclic covers over F_3 and F_4 carry the p-rank bookkeeping, and the
    // count screens stop at the degree-2 extension; the parity, twist and
    // resultant refinements stay out of the battery there, so elimination
    // happens at the stage where the residual isogeny classes for the base
    // can be held against curve tables.  Existence checks stay on the base
    // only: the cover tables do not reach these fields.
    pr.ds_on_pair = true;
    pr.serre_on_base = false;
    pr.relative_twist = false;
    pr.parity_j.clear();
    pr.resultant_followups = false;
    pr.resultant_gate = false;
    pr.existence_on_cover = false;
    pr.count_depth = 2;
  }
  PairPredicate d2_ref = shape_reference(d2_alive);

  std::vector<IPoly> factor_catalog;
  if (pr.serre_on_base) factor_catalog = split_factor_catalog(sc.q, sc.g);
  std::map<IPoly, bool> split_cache;
  std::map<IPoly, Known> exists_cache;

  auto split_ok = [&](const IPoly& hC, const std::vector<Int>& nC) {
    auto it = split_cache.find(hC);
    if (it != split_cache.end()) return it->second;
    bool ok = resultant_split_ok(sc.q, hC, nC, factor_catalog);
    split_cache.emplace(hC, ok);
    return ok;
  };
  auto base_exists = [&](const IPoly& C) {
    auto it = exists_cache.find(C);
    if (it != exists_cache.end()) return it->second;
    Known k = opt.store->jacobian_exists(C, sc.q);
    exists_cache.emplace(C, k);
    return k;
  };

  bool any_curve_data_kill = false;
  TraceSink sink = [&](const std::string&, const std::string& name, bool ok) {
    if (!ok) ++report.kills[name];
  };

  for (const PrymCandidate& A : prym_candidates(sc.q, sc, catalog, opt.depth)) {
    ConstraintSet cs = pair_prefix_constraints(sc, A, pr);
    EnumerateOptions eopt;
    eopt.threads = opt.threads;
    enumerate_real_weil(sc.q, sc.g, cs, [&](const PrefixView& v) {
      ++report.enumerated;
      PairCandidate cand = make_pair_candidate(sc, v.weil_poly(), A, opt.depth);
      if (!pair_passes(cand, pr, d2_ref, &sink)) return true;
      if (pr.serre_on_base && !split_ok(cand.hC, cand.nC)) {
        ++report.kills["base-serre-split"];
        return true;
      }
      ++report.battery_passed;
      GeometricPair pair;
      pair.sc = sc;
      pair.base_weil = cand.C;
      pair.prym_weil = A.weil;
      pair.cover_weil = cand.C * A.weil;
      pair.base_label = encode_label(cand.C, sc.q);
      pair.prym_label = A.label;
      if (opt.store && pr.existence_on_base) {
        Known known = base_exists(cand.C);
        if (known == Known::no) {
          ++report.kills["base-existence"];
          any_curve_data_kill = true;
          return true;
        }
        pair.status = known == Known::yes ? PairStatus::curve_verified : PairStatus::unverifiable;
      }
      if (opt.store && pr.existence_on_cover &&
          opt.store->jacobian_exists(pair.cover_weil, sc.q) == Known::no) {
        ++report.kills["cover-existence"];
        any_curve_data_kill = true;
        return true;
      }
      report.pairs.push_back(std::move(pair));
      return true;
    }, eopt);
  }

  std::sort(report.pairs.begin(), report.pairs.end(),
            [](const GeometricPair& a, const GeometricPair& b) {
              return std::tie(a.prym_label, a.base_label) < std::tie(b.prym_label, b.base_label);
            });
  if (!report.pairs.empty())
    report.outcome = ScenarioOutcome::survives;
  else
    report.outcome = any_curve_data_kill ? ScenarioOutcome::eliminated_by_curve_data
                                         : ScenarioOutcome::eliminated_by_filters;
  if (opt.audit) {
    detail::audit_scenario_line(*opt.audit, report);
    for (const auto& p : report.pairs) detail::audit_pair_line(*opt.audit, p);
  }
  return report;
}

// Full sweep over the scenario windows for the given degrees.  Degree 2 runs
// first so that the surviving shapes can answer the residual-factor lookups
// of the higher-degree batteries.
inline std::vector<ScenarioReport> run_geometric_search(long q, const std::vector<int>& degrees,
                                                        const std::vector<OrderOneClass>& catalog,
                                                        const SearchOptions& opt) {
  std::vector<int> ds = degrees;
  std::sort(ds.begin(), ds.end());
  std::vector<ScenarioReport> out;
  ShapeSet d2_alive;
  bool have_d2 = false;
  for (int d : ds) {
    for (const CoverScenario& sc : geometric_scenarios(q, d)) {
      const ShapeSet* ref = (d > 2 && have_d2) ? &d2_alive : nullptr;
      ScenarioReport r = run_geometric_scenario(sc, catalog, opt, ref);
      if (d == 2) {
        have_d2 = true;
        if (!r.pairs.empty()) d2_alive.insert({sc.g, sc.gp});
      }
      out.push_back(std::move(r));
    }
  }
  return out;
}

// One scenario on demand, flagged when it falls outside the proven windows.
inline ScenarioReport run_single_scenario(long q, int d, int g, int gp,
                                          const std::vector<OrderOneClass>& catalog,
                                          const SearchOptions& opt,
                                          const ShapeSet* d2_alive = nullptr) {
  CoverScenario sc = make_scenario(q, d, g, gp, q != 2);
  bool in_range = false;
  for (const CoverScenario& s : geometric_scenarios(q, d))
    if (s.g == g && s.gp == gp) in_range = true;
  ScenarioReport r = run_geometric_scenario(sc, catalog, opt, d2_alive);
  r.outside_proven_range = !in_range;
  return r;
}

// ---------------------------------------------------------------------------
// constant extensions

struct ConstantCandidate {
  long q = 0;
  int d = 0;
  int g = 0;
  IPoly weil;
  std::string label;
  PairStatus status = PairStatus::polynomial_level;
};

// Prefix pins for the constant search.  The new part of the base change has
// traces T' over F_{q^k} equal to (d [d | k] - 1) T_k and must itself have
// order 1, which over F_2 forces T'_1 + T'_2 >= 2 and over F_3, F_4 pins the
// trace to q per dimension.
inline ConstraintSet constant_prefix_constraints(long q, int d, int g) {
  ConstraintSet cs;
  cs.push_back({"curve-sanity", 1, [q, g](const PrefixView& v) {
                  int k = v.depth();
                  for (int i = 1; i <= k; ++i) {
                    if (v.point_count(i) < 0 || v.place_count(i) < 0) return false;
                    if (i <= 4) {
                      auto cap = tabulated_point_cap(q, g, i);
                      if (cap && v.point_count(i) > *cap) return false;
                    }
                  }
                  return true;
                }});
  if (q == 2) {
    cs.push_back({"twin-order-floor", 2, [d](const PrefixView& v) {
                    Int t1p = -v.trace(1);
                    Int t2p = (d == 2 ? Int(1) : Int(-1)) * v.trace(2);
                    return t1p + t2p >= 2;
                  }});
  } else {
    cs.push_back({"twin-trace-pin", 1, [q, d, g](const PrefixView& v) {
                    if (v.trace(1) != -Int(q) * g * (d - 1)) return false;
                    if (d == 2 && v.depth() >= 2) {
                      Int s2 = Int(q) * q - 2 * q;  // trace of the elliptic class over F_{q^2}
                      if (v.trace(2) != Int(g) * s2) return false;
                    }
                    return true;
                  }});
  }
  return cs;
}

inline std::vector<ConstantCandidate> run_constant_search(const std::vector<long>& qs,
                                                          const std::vector<int>& ds, int g_max,
                                                          const SearchOptions& opt = {}) {
  std::vector<ConstantCandidate> out;
  for (long q : qs) {
    if (q != 2 && q != 3 && q != 4) continue;  // no order-one varieties beyond F_4
    for (int d : ds) {
      if (d < 2) continue;
      for (int g = 1; g <= g_max; ++g) {
        ConstraintSet cs = constant_prefix_constraints(q, d, g);
        EnumerateOptions eopt;
        eopt.threads = opt.threads;
        enumerate_real_weil(q, g, cs, [&](const PrefixView& v) {
          IPoly P = v.weil_poly();
          auto n = point_counts(q, frobenius_traces(P, opt.depth));
          if (!counts_within_caps(q, g, n) || !counts_positive_places(n)) return true;
          if (order(constant_relative_poly(P, d)) != 1) return true;
          ConstantCandidate c;
          c.q = q;
          c.d = d;
          c.g = g;
          c.weil = P;
          c.label = encode_label(P, q);
          if (opt.store) {
            Known known = opt.store->jacobian_exists(P, q);
            if (known == Known::no) return true;
            c.status =
                known == Known::yes ? PairStatus::curve_verified : PairStatus::unverifiable;
          }
          out.push_back(std::move(c));
          return true;
        }, eopt);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ConstantCandidate& a, const ConstantCandidate& b) {
    return std::tie(a.q, a.d, a.g, a.label) < std::tie(b.q, b.d, b.g, b.label);
  });
  return out;
}

// ---------------------------------------------------------------------------
// order-one enumeration at the polynomial level

// All real Weil polynomials h of degree g over F_q with h(q+1) = 1.  The
// value h(q+1) is a product of positive factors q + 1 - x over the roots, so
// a committed prefix bounds it: the unseen coefficients b_i contribute at
// most binom(g, i) (2 sqrt(q))^i (q+1)^(g-i) in absolute value.
inline std::vector<IPoly> order_one_real_polys(long q, int g, int threads = 1) {
  if (g < 1) throw WeilError("order-one enumeration needs genus at least 1");
  Rat sq2;  // upper bound for 2 sqrt(q)
  if (q == 2)
    sq2 = Rat(2828428, 1000000);
  else if (q == 3)
    sq2 = Rat(3464102, 1000000);
  else if (q == 4)
    sq2 = Rat(4, 1);
  else
    throw WeilError("order-one enumeration only tabulated for q in {2, 3, 4}");

  // tail[k] = sum_{i > k} binom(g, i) (2 sqrt q)^i (q+1)^(g-i)
  std::vector<Rat> tail(g + 1, Rat(0));
  {
    Rat binom(1);
    std::vector<Rat> term(g + 1);
    for (int i = 1; i <= g; ++i) {
      binom = binom * (g - i + 1) / i;
      Rat p = binom;
      for (int j = 0; j < i; ++j) p = p * sq2;
      for (int j = 0; j < g - i; ++j) p = p * (q + 1);
      term[i] = p;
    }
    for (int k = g - 1; k >= 0; --k) tail[k] = tail[k + 1] + term[k + 1];
  }

  ConstraintSet cs;
  cs.push_back({"class-number-window", 1, [q, g, tail](const PrefixView& v) {
                  Int partial = pow_int(Int(q + 1), static_cast<unsigned>(g));
                  Int e = pow_int(Int(q + 1), static_cast<unsigned>(g - 1));
                  for (int k = 1; k <= v.depth(); ++k) {
                    partial += v.coeff(k) * e;
                    e /= (q + 1);
                  }
                  Rat gap = Rat(partial) - 1;
                  if (gap < 0) gap = -gap;
                  return gap <= tail[v.depth()];
                }});

  EnumerateOptions eopt;
  eopt.threads = threads;
  std::vector<IPoly> out;
  enumerate_real_weil(q, g, cs, [&](const PrefixView& v) {
    IPoly h = v.real_poly();
    if (eval(h, Int(q + 1)) == 1) out.push_back(std::move(h));
    return true;
  }, eopt);
  return out;
}

// ---------------------------------------------------------------------------
// tables

inline void write_geometric_csv(const std::vector<ScenarioReport>& reports, std::ostream& out) {
  out << "d,g,g_prime,prym,base,status\n";
  std::vector<const GeometricPair*> rows;
  for (const auto& r : reports)
    for (const auto& p : r.pairs) rows.push_back(&p);
  std::sort(rows.begin(), rows.end(), [](const GeometricPair* a, const GeometricPair* b) {
    return std::tie(a->sc.d, a->sc.g, a->sc.gp, a->prym_label, a->base_label) <
           std::tie(b->sc.d, b->sc.g, b->sc.gp, b->prym_label, b->base_label);
  });
  for (const GeometricPair* p : rows)
    out << p->sc.d << "," << p->sc.g << "," << p->sc.gp << "," << p->prym_label << ","
        << p->base_label << "," << to_string(p->status) << "\n";
}

inline void write_constant_csv(const std::vector<ConstantCandidate>& rows, std::ostream& out) {
  out << "q,d,g,label,status\n";
  for (const auto& c : rows)
    out << c.q << "," << c.d << "," << c.g << "," << c.label << "," << to_string(c.status)
        << "\n";
}

inline void write_scenario_csv(const std::vector<ScenarioReport>& reports, std::ostream& out) {
  out << "q,d,g,g_prime,outcome,pairs\n";
  for (const auto& r : reports)
    out << r.sc.q << "," << r.sc.d << "," << r.sc.g << "," << r.sc.gp << ","
        << to_string(r.outcome) << "," << r.pairs.size() << "\n";
}

// Key set "d,g,gp,prym,base" for comparing a run against a stored table.
inline std::set<std::string> geometric_pair_keys(const std::vector<ScenarioReport>& reports) {
  std::set<std::string> keys;
  for (const auto& r : reports)
    for (const auto& p : r.pairs) {
      std::ostringstream s;
      s << p.sc.d << "," << p.sc.g << "," << p.sc.gp << "," << p.prym_label << ","
        << p.base_label;
      keys.insert(s.str());
    }
  return keys;
}

struct TableDiff {
  std::vector<std::string> missing;  // in the stored table, not produced
  std::vector<std::string> extra;    // produced, not in the stored table
  bool clean() const { return missing.empty() && extra.empty(); }
};

// The stored table is CSV with a header; the first five columns form the key.
inline TableDiff diff_keys(const std::set<std::string>& got, std::istream& fixture,
                           int key_fields = 5) {
  std::set<std::string> want;
  std::string line;
  bool header = true;
  while (std::getline(fixture, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    int commas = 0;
    size_t cut = line.size();
    for (size_t i = 0; i < line.size(); ++i)
      if (line[i] == ',' && ++commas == key_fields) {
        cut = i;
        break;
      }
    want.insert(line.substr(0, cut));
  }
  TableDiff diff;
  for (const auto& k : want)
    if (!got.count(k)) diff.missing.push_back(k);
  for (const auto& k : got)
    if (!want.count(k)) diff.extra.push_back(k);
  return diff;
}

}  // namespace rcn
