#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace rcn {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign(const Int& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }
inline int sign(const Rat& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

inline Int abs(const Int& x) { return x < 0 ? Int(-x) : x; }

// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  return boost::multiprecision::sqrt(n);
}

inline Int pow_int(const Int& base, unsigned e) {
  Int r = 1, b = base;
  for (; e; e >>= 1) {
    if (e & 1) r *= b;
    if (e > 1) b *= b;
  }
  return r;
}

inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step
  }
  return r;
}

inline Int gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

// Floor and ceiling division, b > 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && a < 0) --q;
  return q;
}
inline Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && a > 0) ++q;
  return q;
}

// Trial-division number theory; every n used here is tiny (catalog scans stop
// near n = 1800).
inline std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> f;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) n /= p, ++e;
      f.push_back({p, e});
    }
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

inline long euler_phi(long n) {
  long r = n;
  for (auto [p, e] : factorize(n)) r -= r / p;
  return r;
}

inline int moebius(long n) {
  int r = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    r = -r;
  }
  return r;
}

inline std::vector<long> divisors(long n) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
  return small;
}

// Characteristic of F_q for the prime powers used here.
inline long char_of(long q) {
  for (long p : {2L, 3L, 5L, 7L}) {
    long m = p;
    while (m < q) m *= p;
    if (m == q) return p;
  }
  throw std::domain_error("not a supported prime power");
}

inline bool is_square(long q) {
  long s = 0;
  while (s * s < q) ++s;
  return s * s == q;
}

}  // namespace rcn
