#include <catch2/catch_amalgamated.hpp>

#include "rcn/numeric.hpp"
#include "rcn/poly.hpp"
#include "rcn/quadratic.hpp"
#include "rcn/sturm.hpp"

#include <random>

using namespace rcn;

TEST_CASE("integer helpers") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(4, 7) == 0);
  CHECK(isqrt(Int(0)) == 0);
  CHECK(isqrt(Int(15)) == 3);
  CHECK(isqrt(Int(16)) == 4);
  CHECK(pow_int(Int(3), 5) == 243);
  CHECK(floor_div(Int(-7), Int(2)) == -4);
  CHECK(ceil_div(Int(-7), Int(2)) == -3);
  CHECK(floor_div(Int(7), Int(2)) == 3);
  CHECK(ceil_div(Int(7), Int(2)) == 4);
}

TEST_CASE("number theory by trial division") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(30) == 8);
  CHECK(euler_phi(1800) == 480);
  CHECK(moebius(1) == 1);
  CHECK(moebius(6) == 1);
  CHECK(moebius(30) == -1);
  CHECK(moebius(12) == 0);
  CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
  CHECK(char_of(2) == 2);
  CHECK(char_of(4) == 2);
  CHECK(char_of(16) == 2);
  CHECK(char_of(9) == 3);
  CHECK(is_square(4));
  CHECK(is_square(16));
  CHECK_FALSE(is_square(2));
  CHECK_FALSE(is_square(3));
}

TEST_CASE("polynomial arithmetic") {
  IPoly a{Int(-1), Int(0), Int(1)};          // x^2 - 1
  IPoly b{Int(1), Int(1)};                   // x + 1
  CHECK(a.degree() == 2);
  CHECK((b * IPoly{Int(-1), Int(1)}) == a);  // (x+1)(x-1)
  CHECK(divide_exact(a, b) == IPoly{Int(-1), Int(1)});
  CHECK(divides(b, a));
  CHECK_FALSE(divides(IPoly{Int(2), Int(1)}, a));
  CHECK(eval(a, Int(3)) == 8);
  CHECK(eval(a, Rat(1, 2)) == Rat(-3, 4));
  CHECK(derivative(a) == IPoly{Int(0), Int(2)});
  CHECK(shift_up(b, 2) == IPoly{Int(0), Int(0), Int(1), Int(1)});
}

TEST_CASE("pseudo remainder invariant") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Int> ac(5), bc(3);
    for (auto& x : ac) x = coeff(rng);
    for (auto& x : bc) x = coeff(rng);
    IPoly a(ac), b(bc);
    if (b.degree() < 1 || a.degree() < b.degree()) continue;
    IPoly r = prem(a, b);
    // lc(b)^(da-db+1) * a - r must be divisible by b
    Int f = pow_int(b.lc(), static_cast<unsigned>(a.degree() - b.degree() + 1));
    IPoly lhs = f * a - r;
    CHECK(divides(b, lhs));
    CHECK((r.is_zero() || r.degree() < b.degree()));
  }
}

TEST_CASE("gcd and radical") {
  IPoly x1{Int(-1), Int(1)}, x2{Int(-2), Int(1)};
  IPoly p = x1 * x1 * x2;
  CHECK(gcd(p, derivative(p)) == x1);
  CHECK(radical(p) == x1 * x2);
  CHECK(gcd(x1, x2).degree() == 0);
  IPoly neg = Int(-6) * x1;
  CHECK(gcd(neg, neg) == x1);  // primitive, positive leading coefficient
}

TEST_CASE("resultant") {
  IPoly f{Int(-1), Int(1)};  // x - 1
  IPoly g{Int(1), Int(1)};   // x + 1
  CHECK(resultant(f, g) == 2);
  CHECK(resultant(g, f) == -2);
  IPoly h{Int(-2), Int(0), Int(1)};  // x^2 - 2
  CHECK(resultant(f, h) == -1);      // h(1) with sign convention lc^... = -1
  // multiplicativity in the second argument
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Int> ac(4), bc(3), cc(3);
    for (auto& x : ac) x = coeff(rng);
    for (auto& x : bc) x = coeff(rng);
    for (auto& x : cc) x = coeff(rng);
    IPoly A(ac), B(bc), C(cc);
    if (A.is_zero() || B.is_zero() || C.is_zero()) continue;
    CHECK(resultant(A, B * C) == resultant(A, B) * resultant(A, C));
  }
}

TEST_CASE("quadratic field sign") {
  // 3 - 2 sqrt(2) > 0, 2 - 3/2 sqrt(2) < 0
  CHECK(sign(Quad(Rat(3), Rat(-2), 2)) == 1);
  CHECK(sign(Quad(Rat(2), Rat(-3, 2), 2)) == -1);
  CHECK(sign(Quad(Rat(-3), Rat(2), 2)) == -1);
  CHECK(sign(Quad(Rat(-2), Rat(3, 2), 2)) == 1);
  CHECK(sign(Quad(Rat(0), Rat(0), 3)) == 0);
  CHECK(sign(Quad(Rat(0), Rat(-1), 3)) == -1);
  CHECK(sign(Quad(Rat(5), Rat(0), 3)) == 1);
  // (1+sqrt(2))(1-sqrt(2)) = -1
  Quad prod = Quad(Rat(1), Rat(1), 2) * Quad(Rat(1), Rat(-1), 2);
  CHECK(prod.u == -1);
  CHECK(prod.v == 0);
  Quad inv = inverse(Quad(Rat(1), Rat(1), 2));
  Quad one = inv * Quad(Rat(1), Rat(1), 2);
  CHECK(one.u == 1);
  CHECK(one.v == 0);
}

static IPoly from_roots(const std::vector<int>& roots) {
  IPoly p{Int(1)};
  for (int r : roots) p = p * IPoly{Int(-r), Int(1)};
  return p;
}

TEST_CASE("weil interval membership, hand cases") {
  // q=2: interval is [-2.828.., 2.828..]
  CHECK(all_roots_in_weil_interval(IPoly{Int(-2), Int(0), Int(1)}, 2));   // x^2-2
  CHECK(all_roots_in_weil_interval(IPoly{Int(-8), Int(0), Int(1)}, 2));   // endpoints
  CHECK_FALSE(all_roots_in_weil_interval(IPoly{Int(-9), Int(0), Int(1)}, 2));
  CHECK_FALSE(all_roots_in_weil_interval(IPoly{Int(1), Int(0), Int(1)}, 2));  // complex
  CHECK(all_roots_in_weil_interval(from_roots({-2, 0, 1, 2}), 2));
  CHECK_FALSE(all_roots_in_weil_interval(from_roots({-2, 0, 3}), 2));
  // q=3: 2 sqrt(3) = 3.46..
  CHECK(all_roots_in_weil_interval(from_roots({-3, 3}), 3));
  CHECK_FALSE(all_roots_in_weil_interval(from_roots({4}), 3));
  CHECK(all_roots_in_weil_interval(IPoly{Int(-12), Int(0), Int(1)}, 3));
  // q=4: closed interval [-4, 4], endpoint roots included
  CHECK(all_roots_in_weil_interval(from_roots({-4, 4, 0}), 4));
  CHECK_FALSE(all_roots_in_weil_interval(from_roots({5}), 4));
  // repeated roots are fine
  CHECK(all_roots_in_weil_interval(from_roots({1, 1, 1, -2}), 2));
  // degree zero
  CHECK(all_roots_in_weil_interval(IPoly{Int(7)}, 2));
}

TEST_CASE("weil interval root counting") {
  CHECK(roots_in_weil_interval(from_roots({1, 3}), 2) == 1);
  CHECK(roots_in_weil_interval(from_roots({-5, -1, 0, 2, 4}), 2) == 3);
  CHECK(roots_in_weil_interval(IPoly{Int(-8), Int(0), Int(1)}, 2) == 2);
  CHECK(roots_in_weil_interval(from_roots({-4, 4, 5}), 4) == 2);
}

TEST_CASE("weil interval randomized against constructed truth") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> root(-4, 4);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> qpick(0, 2);
  const long qs[3] = {2, 3, 4};
  for (int trial = 0; trial < 400; ++trial) {
    long q = qs[qpick(rng)];
    int n = len(rng);
    std::vector<int> roots(n);
    bool all_in = true;
    for (auto& r : roots) {
      r = root(rng);
      if (Int(r) * r * 4 > 16 * q) all_in = false;  // |r| > 2 sqrt(q) iff 4r^2 > 16q
      if (Int(r) * r * 4 == 16 * q && !is_square(q)) all_in = false;  // cannot happen for integer r
    }
    CHECK(all_roots_in_weil_interval(from_roots(roots), q) == all_in);
  }
}
