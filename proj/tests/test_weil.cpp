#include <catch2/catch_amalgamated.hpp>

#include "rcn/label.hpp"
#include "rcn/weil.hpp"

#include <random>

using namespace rcn;

// T^4 - 3T^3 + 5T^2 - 6T + 4, the q=2 class with label 2.2.ad_f
static const IPoly kAdF{Int(4), Int(-6), Int(5), Int(-3), Int(1)};
// T^2 - 2T + 2, label 1.2.ac
static const IPoly kAc{Int(2), Int(-2), Int(1)};

TEST_CASE("coefficient indexing and functional equation") {
  CHECK(coeff_a(kAdF, 0) == 1);
  CHECK(coeff_a(kAdF, 1) == -3);
  CHECK(coeff_a(kAdF, 2) == 5);
  CHECK(coeff_a(kAdF, 3) == -6);
  CHECK(coeff_a(kAdF, 4) == 4);
  CHECK(functional_equation_holds(kAdF, 2));
  CHECK_FALSE(functional_equation_holds(kAdF, 3));
  CHECK(functional_equation_holds(kAc, 2));
  CHECK_FALSE(functional_equation_holds(IPoly{Int(-2), Int(0), Int(1)}, 2));  // T^2-2
}

TEST_CASE("real Weil polynomial round trip") {
  IPoly h = weil_to_real(kAc, 2);
  CHECK(h == IPoly{Int(-2), Int(1)});  // x - 2
  CHECK(real_to_weil(h, 2) == kAc);

  IPoly h2 = weil_to_real(kAdF, 2);
  CHECK(real_to_weil(h2, 2) == kAdF);

  // (T^2-2)^2 has real polynomial x^2 - 8, endpoint roots
  IPoly sq{Int(4), Int(0), Int(-4), Int(0), Int(1)};
  CHECK(weil_to_real(sq, 2) == IPoly{Int(-8), Int(0), Int(1)});
  CHECK(is_weil(sq, 2));

  CHECK_THROWS_AS(weil_to_real(IPoly{Int(-2), Int(0), Int(1)}, 2), WeilError);
}

TEST_CASE("is_weil") {
  CHECK(is_weil(kAc, 2));
  CHECK(is_weil(kAdF, 2));
  // functional equation holds but a root of h escapes the interval
  CHECK_FALSE(is_weil(IPoly{Int(2), Int(-5), Int(1)}, 2));
  // functional equation fails
  CHECK_FALSE(is_weil(IPoly{Int(1), Int(1), Int(1), Int(1), Int(1)}, 2));
}

TEST_CASE("traces by Newton identities") {
  auto p = frobenius_traces(kAdF, 4);
  CHECK(p[1] == 3);
  CHECK(p[2] == -1);
  CHECK(p[3] == 0);
  CHECK(p[4] == 7);
  auto pc = frobenius_traces(kAc, 4);
  CHECK(pc[1] == 2);
  CHECK(pc[2] == 0);
  CHECK(pc[3] == -4);
  CHECK(pc[4] == -8);
}

TEST_CASE("traces to polynomial and back") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coeff(-30, 30);
  std::uniform_int_distribution<int> gpick(1, 6);
  const long qs[3] = {2, 3, 4};
  std::uniform_int_distribution<int> qpick(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    int g = gpick(rng);
    long q = qs[qpick(rng)];
    std::vector<Int> a(2 * g + 1, Int(0));
    a[0] = 1;
    for (int i = 1; i <= g; ++i) a[i] = coeff(rng);
    for (int i = g + 1; i <= 2 * g; ++i)
      a[i] = pow_int(Int(q), static_cast<unsigned>(i - g)) * a[2 * g - i];
    std::vector<Int> c(2 * g + 1);
    for (int i = 0; i <= 2 * g; ++i) c[2 * g - i] = a[i];
    IPoly P(std::move(c));
    auto tr = frobenius_traces(P, g);
    CHECK(poly_from_traces(q, g, tr) == P);
  }
  // non-integral elementary symmetric -> malformed
  CHECK_THROWS_AS(poly_from_traces(2, 2, std::vector<Int>{Int(0), Int(1), Int(0)}),
                  WeilError);
}

TEST_CASE("point and place counts") {
  auto tr = frobenius_traces(kAc, 4);
  auto N = point_counts(2, tr);
  CHECK(N[1] == 1);
  CHECK(N[2] == 5);
  auto a = place_counts(N);
  CHECK(a[1] == 1);
  CHECK(a[2] == 2);
  CHECK(positivity_ok(kAc, 2, 14));

  // (T^2+3T+3)^2 over F_3 has N_1 = 10 > N_2 = 4, so a_2 < 0
  IPoly bad = poly_pow(IPoly{Int(3), Int(3), Int(1)}, 2);
  CHECK_FALSE(positivity_ok(bad, 3, 4));
}

TEST_CASE("p-rank") {
  CHECK(p_rank(kAdF, 2) == 2);   // ordinary
  CHECK(p_rank(kAc, 2) == 0);
  IPoly sq{Int(4), Int(0), Int(-4), Int(0), Int(1)};  // (T^2-2)^2
  CHECK(p_rank(sq, 2) == 0);
  IPoly q4 = poly_pow(IPoly{Int(4), Int(-4), Int(1)}, 2);  // (T^2-4T+4)^2 over F_4
  CHECK(p_rank(q4, 4) == 0);
  IPoly q3{Int(3), Int(-3), Int(1)};  // T^2-3T+3 over F_3
  CHECK(p_rank(q3, 3) == 0);
}

TEST_CASE("twist") {
  IPoly tw = twist(kAc);
  CHECK(tw == IPoly{Int(2), Int(2), Int(1)});  // T^2+2T+2
  CHECK(twist(tw) == kAc);
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Int> c(7);
    for (auto& x : c) x = coeff(rng);
    c[6] = 1;
    IPoly P(c);
    CHECK(twist(twist(P)) == P);
    auto t1 = frobenius_traces(P, 6);
    auto t2 = frobenius_traces(twist(P), 6);
    for (int k = 1; k <= 6; ++k) CHECK(t2[k] == (k % 2 ? Int(-t1[k]) : t1[k]));
  }
}

TEST_CASE("constant extension relative polynomial") {
  // d = 2 agrees with the quadratic twist
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Int> a(5);
    a[4] = 1;
    for (int i = 0; i < 4; ++i) a[i] = coeff(rng);
    IPoly P(a);
    if (eval(P, Int(0)) == 0) continue;  // keep roots nonzero
    CHECK(constant_relative_poly(P, 2) == twist(P));
  }
  // hand example: 1.2.c under d = 2 has relative polynomial 1.2.ac of order 1
  IPoly c12{Int(2), Int(2), Int(1)};
  CHECK(constant_relative_poly(c12, 2) == kAc);
  CHECK(order(constant_relative_poly(c12, 2)) == 1);
  // 1.2.b under d = 3 gives the dimension-2 class 2.2.ab_ab
  IPoly b12{Int(2), Int(1), Int(1)};
  IPoly q3 = constant_relative_poly(b12, 3);
  CHECK(q3 == IPoly{Int(4), Int(-2), Int(-1), Int(-1), Int(1)});
  CHECK(order(q3) == 1);
  // tower compatibility at 1.2.c and d = 4: relative order over F_16 is
  // #J(F_16)/#J(F_2) = 25/5, not 1
  CHECK(order(constant_relative_poly(c12, 4)) == 5);
}

TEST_CASE("base-26 codec") {
  CHECK(base26(Int(0)) == "a");
  CHECK(base26(Int(1)) == "b");
  CHECK(base26(Int(25)) == "z");
  CHECK(base26(Int(26)) == "ba");
  CHECK(base26(Int(29)) == "bd");
  CHECK(base26(Int(65)) == "cn");
  CHECK(base26(Int(-1)) == "ab");
  CHECK(base26(Int(-39)) == "abn");
  CHECK(base26_decode("bd") == 29);
  CHECK(base26_decode("abn") == -39);
  CHECK(base26_decode("a") == 0);
  CHECK_THROWS_AS(base26_decode("aa"), WeilError);
  CHECK_THROWS_AS(base26_decode("ab1"), WeilError);
  CHECK_THROWS_AS(base26_decode(""), WeilError);
  for (long v = -20000; v <= 20000; v += 7)
    CHECK(base26_decode(base26(Int(v))) == v);
}

TEST_CASE("isogeny class labels") {
  CHECK(encode_label(kAdF, 2) == "2.2.ad_f");
  CHECK(encode_label(kAc, 2) == "1.2.ac");
  auto dec = decode_label("2.2.ad_f");
  CHECK(dec.q == 2);
  CHECK(dec.g == 2);
  CHECK(dec.P == kAdF);
  auto e = decode_label("4.2.af_n_az_bn");
  CHECK(coeff_a(e.P, 1) == -5);
  CHECK(coeff_a(e.P, 2) == 13);
  CHECK(coeff_a(e.P, 3) == -25);
  CHECK(coeff_a(e.P, 4) == 39);
  CHECK(coeff_a(e.P, 5) == 2 * -25);  // functional equation fill
  CHECK_THROWS_AS(decode_label("2.2.ad"), WeilError);
  CHECK_THROWS_AS(decode_label("2.2.ad_f_b"), WeilError);
  CHECK_THROWS_AS(decode_label("2.2"), WeilError);
  CHECK_THROWS_AS(decode_label("x.2.ad_f"), WeilError);
  CHECK_THROWS_AS(decode_label("2.2.ad_aa"), WeilError);

  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> coeff(-400000, 400000);
  std::uniform_int_distribution<int> gpick(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    int g = gpick(rng);
    std::vector<Int> a(2 * g + 1, Int(0));
    a[0] = 1;
    for (int i = 1; i <= g; ++i) a[i] = coeff(rng);
    for (int i = g + 1; i <= 2 * g; ++i)
      a[i] = pow_int(Int(2), static_cast<unsigned>(i - g)) * a[2 * g - i];
    std::vector<Int> c(2 * g + 1);
    for (int i = 0; i <= 2 * g; ++i) c[2 * g - i] = a[i];
    IPoly P(std::move(c));
    auto d = decode_label(encode_label(P, 2));
    CHECK(d.P == P);
    CHECK(d.g == g);
  }
}
