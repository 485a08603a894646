#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "rcn/numeric.hpp"
#include "rcn/poly.hpp"
#include "rcn/sturm.hpp"
#include "rcn/weil.hpp"

// Enumeration of monic integer h of degree g with all roots in [-2*sqrt(q), 2*sqrt(q)],
// organized coefficient by coefficient.  Write h = x^g + b_1 x^{g-1} + ... + b_g and
// H_k = h^{(g-k)}, so that H_k' = H_{k-1} and H_g = h.  Given that H_{k-1} has all its
// roots in the interval, H_k does too iff its sign alternates correctly at the roots
// of H_{k-1} and has the right sign at the two endpoints.  b_k enters H_k only through
// the constant term b_k (g-k)!, a vertical shift, and every one of those sign
// conditions is affine in b_k, so for a fixed prefix the admissible values of b_k form
// a contiguous integer interval.  The engine cuts a window with cheap necessary bounds
// (power sum caps, endpoint signs), finds one admissible value by scanning the window
// center-out, then locates the exact interval ends by bisection; the interval interior
// needs no further root-location tests.

namespace rcn {

// floor((u + v*sqrt(m)) / f) for integers u, v and f > 0.  Exact: floor(v*sqrt(m)) is
// computed by integer square root, and no integer can sit strictly between (u+w)/f and
// (u+w+1)/f.
inline Int floor_div_quad(const Int& u, const Int& v, long m, const Int& f) {
  Int d = v * v * m;
  Int r = isqrt(d);
  bool exact = (r * r == d);
  Int w = v >= 0 ? r : (exact ? Int(-r) : Int(-r - 1));
  return floor_div(u + w, f);
}

inline Int ceil_div_quad(const Int& u, const Int& v, long m, const Int& f) {
  return -floor_div_quad(-u, -v, m, f);
}

// Transient view of a committed coefficient prefix.  Valid only for the duration of
// the callback that receives it; copy out what you need.  Indices are 1-based up to
// depth(); power_sum(0) is the degree and coeff(0) is 1.
class PrefixView {
 public:
  PrefixView(long q, int g, const std::vector<Int>* b, const std::vector<Int>* s,
             const std::vector<Int>* t, const std::vector<Int>* n, const std::vector<Int>* a)
      : q_(q), g_(g), b_(b), s_(s), t_(t), n_(n), a_(a) {}

  long q() const { return q_; }
  int genus() const { return g_; }
  int depth() const { return static_cast<int>(b_->size()) - 1; }

  const Int& coeff(int i) const { return (*b_)[i]; }
  const Int& power_sum(int i) const { return (*s_)[i]; }
  const Int& trace(int i) const { return (*t_)[i]; }
  const Int& point_count(int i) const { return (*n_)[i]; }
  const Int& place_count(int i) const { return (*a_)[i]; }

  std::vector<Int> coeffs() const { return *b_; }
  std::vector<Int> traces() const { return std::vector<Int>(t_->begin() + 1, t_->end()); }
  std::vector<Int> point_counts() const { return std::vector<Int>(n_->begin() + 1, n_->end()); }
  std::vector<Int> place_counts() const { return std::vector<Int>(a_->begin() + 1, a_->end()); }

  // The full polynomial; only meaningful once every coefficient is committed.
  IPoly real_poly() const {
    if (depth() != g_) throw std::logic_error("prefix is not a full polynomial");
    std::vector<Int> c(g_ + 1);
    for (int i = 0; i <= g_; ++i) c[g_ - i] = (*b_)[i];
    return IPoly(std::move(c));
  }
  IPoly weil_poly() const { return real_to_weil(real_poly(), q_); }

 private:
  long q_;
  int g_;
  const std::vector<Int>* b_;
  const std::vector<Int>* s_;
  const std::vector<Int>* t_;
  const std::vector<Int>* n_;
  const std::vector<Int>* a_;
};

// A pruning predicate.  min_depth is the first prefix depth at which it fires; it is
// re-evaluated at every deeper prefix.  Predicates must be monotone (false on a prefix
// implies false on every extension) and pure; the engine can spot-check monotonicity
// in debug mode.
struct Constraint {
  std::string name;
  int min_depth = 1;
  std::function<bool(const PrefixView&)> ok;
};

using ConstraintSet = std::vector<Constraint>;

struct EnumerateOptions {
  int threads = 1;
  long limit = -1;  // emit at most this many results when >= 0
  bool verify_monotone = false;
};

namespace detail {

class RealWeilSearch {
 public:
  RealWeilSearch(long q, int g, const ConstraintSet& cs, bool verify_monotone)
      : q_(q), g_(g), cs_(cs), verify_(verify_monotone) {
    fact_.resize(g_ + 1);
    fact_[0] = 1;
    for (int i = 1; i <= g_; ++i) fact_[i] = fact_[i - 1] * i;
    qpow_.resize(g_ + 1);
    qpow_[0] = 1;
    for (int i = 1; i <= g_; ++i) qpow_[i] = qpow_[i - 1] * q_;
    b_.assign(1, Int(1));
    s_.assign(1, Int(g_));
    t_.assign(1, Int(0));
    n_.assign(1, Int(0));
    a_.assign(1, Int(0));
  }

  PrefixView view() const { return PrefixView(q_, g_, &b_, &s_, &t_, &n_, &a_); }

  void push(const Int& bk) {
    int k = static_cast<int>(b_.size());
    b_.push_back(bk);
    Int sk = -Int(k) * bk;
    for (int i = 1; i < k; ++i) sk -= b_[i] * s_[k - i];
    s_.push_back(sk);
    Int tk = sk;
    if (k % 2 == 0) tk -= binomial(k, k / 2) * qpow_[k / 2] * g_;
    for (int m = k / 2 + 1; m < k; ++m) tk -= binomial(k, m) * qpow_[k - m] * t_[2 * m - k];
    t_.push_back(tk);
    n_.push_back(qpow_[k] + 1 - tk);
    Int ak = 0;
    for (long e : divisors(k))
      ak += Int(moebius(k / e)) * n_[e];
    if (ak % k != 0) throw std::logic_error("place count failed to be integral");
    a_.push_back(ak / k);
  }

  void pop() {
    b_.pop_back();
    s_.pop_back();
    t_.pop_back();
    n_.pop_back();
    a_.pop_back();
  }

  // Admissible interval for b_k below the current prefix: [lo, hi] with every value
  // passing the root-location test, empty signalled by lo > hi.
  std::pair<Int, Int> level_interval(int k) {
    Int kappa = 0;
    for (int i = 1; i < k; ++i) kappa -= b_[i] * s_[k - i];

    // window on s_k, then on b_k = (kappa - s_k) / k
    Int cap = isqrt(Int(g_) * g_ * pow_int(Int(4 * q_), k));
    Int s_lo = -cap, s_hi = cap;
    if (k % 2 == 0) {
      if (s_lo < 0) s_lo = 0;
      if (k >= 4) {
        Int even_cap = Int(4 * q_) * s_[k - 2];
        if (even_cap < s_hi) s_hi = even_cap;
      }
      Int cs = ceil_div(s_[k / 2] * s_[k / 2], Int(g_));
      if (cs > s_lo) s_lo = cs;
    } else if (k >= 3) {
      Int odd_cap = isqrt(Int(4 * q_) * s_[k - 1] * s_[k - 1]);
      if (-odd_cap > s_lo) s_lo = -odd_cap;
      if (odd_cap < s_hi) s_hi = odd_cap;
    }
    Int lo = ceil_div(kappa - s_hi, Int(k));
    Int hi = floor_div(kappa - s_lo, Int(k));

    // endpoint signs: h and each derivative must be >= 0 at 2*sqrt(q) and carry the
    // sign (-1)^k at -2*sqrt(q); both are affine in b_k
    Int u(0), v(0);
    for (int i = 0; i < k; ++i) {
      int j = k - i;
      Int c = b_[i] * (fact_[g_ - i] / fact_[k - i]) * pow_int(Int(2), j);
      if (j % 2 == 0)
        u += c * pow_int(Int(q_), j / 2);
      else
        v += c * pow_int(Int(q_), (j - 1) / 2);
    }
    const Int& f = fact_[g_ - k];
    Int plus = ceil_div_quad(-u, -v, q_, f);
    if (plus > lo) lo = plus;
    if (k % 2 == 0) {
      Int minus = ceil_div_quad(-u, v, q_, f);
      if (minus > lo) lo = minus;
    } else {
      Int minus = floor_div_quad(-u, v, q_, f);
      if (minus < hi) hi = minus;
    }
    if (lo > hi) return {Int(1), Int(0)};

    // center-out scan for one admissible value
    Int mid = lo + (hi - lo) / 2;
    Int up = mid, down = mid - 1;
    Int anchor;
    bool found = false;
    while (up <= hi || down >= lo) {
      if (up <= hi) {
        if (admissible(k, up)) {
          anchor = up;
          found = true;
          break;
        }
        ++up;
      }
      if (down >= lo) {
        if (admissible(k, down)) {
          anchor = down;
          found = true;
          break;
        }
        --down;
      }
    }
    if (!found) return {Int(1), Int(0)};

    // exact interval ends by bisection, using contiguity
    Int a = anchor, bnd = hi;
    while (a < bnd) {
      Int m = a + (bnd - a + 1) / 2;
      if (admissible(k, m))
        a = m;
      else
        bnd = m - 1;
    }
    Int top = a;
    a = lo;
    bnd = anchor;
    while (a < bnd) {
      Int m = a + (bnd - a) / 2;
      if (admissible(k, m))
        bnd = m;
      else
        a = m + 1;
    }
    return {bnd, top};
  }

  // Descend from level k (prefix of depth k-1 committed).  Returns false once the
  // caller asked to stop.
  bool descend(int k, const std::function<bool(const PrefixView&)>& cb) {
    auto [lo, hi] = level_interval(k);
    for (Int bk = hi; bk >= lo; --bk) {
      push(bk);
      if (constraints_hold(k)) {
        if (k == g_) {
          if (!cb(view())) {
            pop();
            return false;
          }
        } else if (!descend(k + 1, cb)) {
          pop();
          return false;
        }
      }
      pop();
    }
    return true;
  }

  bool constraints_hold(int k) {
    for (const Constraint& c : cs_) {
      if (c.min_depth > k) continue;
      if (!c.ok(view())) {
        if (verify_ && k < g_ && has_passing_completion(k + 1))
          throw WeilError("constraint-contract violation: " + c.name);
        return false;
      }
    }
    return true;
  }

  void run(const std::function<bool(const PrefixView&)>& cb) {
    if (g_ == 0) {
      if (constraints_hold(0)) cb(view());
      return;
    }
    descend(1, cb);
  }

 private:
  bool admissible(int k, const Int& bk) {
    std::vector<Int> c(k + 1);
    for (int i = 0; i < k; ++i) c[k - i] = b_[i] * (fact_[g_ - i] / fact_[k - i]);
    c[0] = bk * fact_[g_ - k];
    return all_roots_in_weil_interval(IPoly(std::move(c)), q_);
  }

  // Debug probe behind verify_monotone: a constraint just rejected the current
  // prefix; see whether some completion would still satisfy every constraint on the
  // full polynomial, which a monotone predicate forbids.
  bool has_passing_completion(int k) {
    if (k > g_) {
      for (const Constraint& c : cs_)
        if (c.min_depth <= g_ && !c.ok(view())) return false;
      return true;
    }
    auto [lo, hi] = level_interval(k);
    for (Int bk = hi; bk >= lo; --bk) {
      push(bk);
      bool found = has_passing_completion(k + 1);
      pop();
      if (found) return true;
    }
    return false;
  }

  long q_;
  int g_;
  ConstraintSet cs_;
  bool verify_;
  std::vector<Int> fact_;
  std::vector<Int> qpow_;
  std::vector<Int> b_, s_, t_, n_, a_;
};

}  // namespace detail

// Emits every monic integer polynomial of degree g with all roots in
// [-2*sqrt(q), 2*sqrt(q)] whose prefixes satisfy every constraint, in ascending
// lexicographic order of the power sum sequence (T_1, T_2, ...).  The callback
// returns false to stop early.  Thread counts above one split the top-level branches
// across workers and merge the results back into the same deterministic order.
inline void enumerate_real_weil(long q, int g, const ConstraintSet& cs,
                                const std::function<bool(const PrefixView&)>& emit,
                                const EnumerateOptions& opt = {}) {
  if (g < 0) throw std::invalid_argument("degree must be nonnegative");
  long budget = opt.limit;
  if (budget == 0) return;
  if (opt.threads <= 1 || g == 0) {
    detail::RealWeilSearch search(q, g, cs, opt.verify_monotone);
    long seen = 0;
    search.run([&](const PrefixView& v) {
      if (!emit(v)) return false;
      ++seen;
      return budget < 0 || seen < budget;
    });
    return;
  }

  detail::RealWeilSearch probe(q, g, cs, false);
  auto [lo, hi] = probe.level_interval(1);
  std::vector<Int> branches;
  for (Int b1 = hi; b1 >= lo; --b1) branches.push_back(b1);
  std::vector<std::vector<std::vector<Int>>> collected(branches.size());
  std::exception_ptr failure;
  std::mutex fail_mu;
  std::atomic<size_t> next{0};
  int nw = static_cast<int>(
      std::min<size_t>(static_cast<size_t>(opt.threads), branches.size() ? branches.size() : 1));
  std::vector<std::thread> pool;
  for (int w = 0; w < nw; ++w) {
    pool.emplace_back([&]() {
      try {
        detail::RealWeilSearch local(q, g, cs, opt.verify_monotone);
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= branches.size()) break;
          local.push(branches[i]);
          if (local.constraints_hold(1)) {
            if (g == 1) {
              collected[i].push_back(local.view().coeffs());
            } else {
              local.descend(2, [&](const PrefixView& v) {
                collected[i].push_back(v.coeffs());
                return true;
              });
            }
          }
          local.pop();
        }
      } catch (...) {
        std::lock_guard<std::mutex> lk(fail_mu);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  detail::RealWeilSearch replay(q, g, {}, false);
  long seen = 0;
  for (const auto& branch : collected) {
    for (const auto& bvec : branch) {
      for (int i = 1; i <= g; ++i) replay.push(bvec[i]);
      bool go = emit(replay.view());
      for (int i = 1; i <= g; ++i) replay.pop();
      ++seen;
      if (!go || (budget >= 0 && seen >= budget)) return;
    }
  }
}

inline std::vector<IPoly> enumerate_real_weil_polys(long q, int g, const ConstraintSet& cs = {},
                                                    const EnumerateOptions& opt = {}) {
  std::vector<IPoly> out;
  enumerate_real_weil(q, g, cs,
                      [&](const PrefixView& v) {
                        out.push_back(v.real_poly());
                        return true;
                      },
                      opt);
  return out;
}

// Power sums of the roots of a monic integer polynomial, [0] holding the degree.
inline std::vector<Int> real_power_sums(const IPoly& h) {
  int g = h.degree();
  std::vector<Int> s(g + 1);
  s[0] = g;
  for (int k = 1; k <= g; ++k) {
    Int sk = -Int(k) * h.coeff(g - k);
    for (int i = 1; i < k; ++i) sk -= h.coeff(g - i) * s[k - i];
    s[k] = sk;
  }
  return s;
}

// Completeness oracle for small degree: scan every coefficient vector with
// |b_i| <= binomial(g, i) (2 sqrt q)^i and keep the ones with all roots in the
// interval.  Returned in the engine's order (power sum lexicographic).
inline std::vector<IPoly> brute_force_real_weil(long q, int g) {
  std::vector<IPoly> out;
  std::vector<Int> b(g + 1);
  b[0] = 1;
  std::function<void(int)> rec = [&](int i) {
    if (i > g) {
      std::vector<Int> c(g + 1);
      for (int j = 0; j <= g; ++j) c[g - j] = b[j];
      IPoly h(std::move(c));
      if (all_roots_in_weil_interval(h, q)) out.push_back(h);
      return;
    }
    Int cap = isqrt(binomial(g, i) * binomial(g, i) * pow_int(Int(4 * q), i));
    for (Int v = -cap; v <= cap; ++v) {
      b[i] = v;
      rec(i + 1);
    }
  };
  if (g == 0) return {IPoly{Int(1)}};
  rec(1);
  std::vector<std::pair<std::vector<Int>, IPoly>> keyed;
  keyed.reserve(out.size());
  for (auto& h : out) keyed.emplace_back(real_power_sums(h), std::move(h));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  out.clear();
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

struct CatalogFactorization {
  IPoly radical;
  std::vector<std::pair<IPoly, IPoly>> splittings;
};

// Coprime two-factor splittings of h found by exact division against a catalog of
// lower-degree candidates, deduplicated up to order, plus the squarefree part.
inline CatalogFactorization catalog_factor(const IPoly& h, const std::vector<IPoly>& catalog) {
  CatalogFactorization out;
  out.radical = radical(h);
  for (const IPoly& f : catalog) {
    if (f.degree() < 1 || f.degree() >= h.degree()) continue;
    if (!divides(f, h)) continue;
    IPoly rest = divide_exact(h, f);
    if (gcd(f, rest).degree() != 0) continue;
    std::pair<IPoly, IPoly> key = f < rest ? std::make_pair(f, rest) : std::make_pair(rest, f);
    bool dup = false;
    for (const auto& seen : out.splittings)
      if (seen == key) {
        dup = true;
        break;
      }
    if (!dup) out.splittings.push_back(std::move(key));
  }
  std::sort(out.splittings.begin(), out.splittings.end());
  return out;
}

}  // namespace rcn
