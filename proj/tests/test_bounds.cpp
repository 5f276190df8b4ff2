#include <cmath>
#include <functional>

#include "doctest.h"
#include "oracles.hpp"
#include "repgrowth/bounds.hpp"
#include "repgrowth/scans.hpp"

using namespace repgrowth;

namespace {

long double ld_f(FName f, long x) {
  const long double pi = 3.141592653589793238462643383279502884L;
  const long double r = x;
  switch (f) {
    case FName::f1: return std::pow(r + 1, 4) / 8 * std::exp(2 * pi * std::sqrt(r * r / 6 + r / 3 - 0.5L));
    case FName::f2:
      if (x % 2) {
        const long double b = (r * r + 11) / 6 + r;
        return b * b / 2 * std::exp(2 * pi * std::sqrt((r * r - 1) / 18 + r / 3));
      } else {
        const long double b = r * r / 6 + 2 * r;
        return b * b / 2 * std::exp(2 * pi * std::sqrt(r * r / 18 + (2 * r - 2) / 3));
      }
    case FName::f3: return 8 * r * r * std::exp(2 * pi * std::sqrt((4 * r - 2) / 3));
    case FName::f4: return 2 * (r + 1) * (r + 1) * std::exp(2 * pi * std::sqrt(2 * r / 3));
    case FName::f5: {
      const long double l = std::log2(r);
      return 4 * l * std::exp(2 * pi * std::sqrt(l / 3));
    }
  }
  return 0;
}

long brute_g(int r, long d) {
  std::function<long(int, long)> rec = [&](int left, long budget) -> long {
    if (left == 0) return 1;
    long s = 0;
    for (long x = 1; x <= budget; ++x) s += rec(left - 1, budget / x);
    return s;
  };
  return rec(r, d);
}

mpz_class binom(long n, long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("N(lambda)") {
    const RootDatum a2 = RootDatum::make(Family::A, 2);
    CHECK(n_lambda(a2, Weight({2, 2})) == 10);
    CHECK(n_lambda(a2, Weight({0, 0})) == 1);
    for (int r = 1; r <= 4; ++r) {
      const RootDatum d = RootDatum::make(Family::A, r);
      for_each_weight_in_box(r, 5, [&](const Weight& w) {
        mpz_class prod = 1;
        for (auto a : w.coeffs) prod *= 1 + a / 2;
        CHECK(n_lambda(d, w) == 1 + (r + 1) * (prod - 1));
      });
    }
    CHECK_THROWS_AS(n_lambda(RootDatum::make(Family::C, 2), Weight({1, 1})), PreconditionError);
  }

  TEST_CASE("saturated orbit sum against oracles") {
    for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 2}, {Family::B, 2}, {Family::G, 2}, {Family::C, 3}}) {
      const RootDatum d = RootDatum::make(f, r);
      auto c = oracle::cartan(f, r);
      for_each_weight_in_box(r, 2, [&](const Weight& lam) {
        oracle::Vec l(lam.coeffs.begin(), lam.coeffs.end());
        std::int64_t side = 2;
        for (auto a : lam.coeffs) side += 2 * a;
        mpz_class total = 0;
        for_each_weight_in_box(r, static_cast<int>(side), [&](const Weight& mu) {
          oracle::Vec m(mu.coeffs.begin(), mu.coeffs.end());
          if (oracle::dominates(c, l, m)) total += static_cast<unsigned long>(oracle::orbit_size(c, m));
        });
        CHECK(premet_sum(d, lam, 100000) == total);
      });
    }
  }

  TEST_CASE("saturated orbit sum guards") {
    const Weight w({1, 1});
    CHECK(premet_lower(RootDatum::make(Family::A, 2), w, 3, 1000).valid);
    auto b2 = premet_lower(RootDatum::make(Family::B, 2), w, 2, 1000);
    CHECK_FALSE(b2.valid);
    CHECK(b2.guard_detail.find("two root lengths") != std::string::npos);
    CHECK_FALSE(premet_lower(RootDatum::make(Family::G, 2), w, 3, 1000).valid);
    CHECK_FALSE(premet_lower(RootDatum::make(Family::A, 2), Weight({3, 0}), 3, 1000).valid);
    CHECK_THROWS_AS(premet_lower(RootDatum::make(Family::A, 2), w, 4, 1000), PreconditionError);
    CHECK_THROWS_AS(premet_lower(RootDatum::make(Family::A, 4), Weight({6, 6, 6, 6}), 7, 5), CapExceeded);
  }

  TEST_CASE("bounds consistency scan") {
    auto st = scan_bounds_consistency(3, 5, 1'000'000);
    INFO(st.summary());
    CHECK(st.ok());
  }

  TEST_CASE("harmonic numbers") {
    auto h = harmonic(4);
    CHECK(h.value == mpq_class(25, 12));
    CHECK(harmonic(mpq_class(9, 2)).value == mpq_class(25, 12));
    CHECK_FALSE(harmonic(1).log_bound.has_value());
    for (int d = 2; d <= 60; ++d) CHECK(harmonic(d).log_bound->verdict == Verdict::holds);
  }

  TEST_CASE("g(r,d) against brute force") {
    for (int r = 1; r <= 4; ++r)
      for (long d = 1; d <= 60; ++d) {
        auto g = g_count(r, d);
        CHECK(g.count == brute_g(r, d));
        CHECK(g.within_analytic);
      }
    CHECK(g_count(2, mpq_class(9, 2)).count == brute_g(2, 4));
    CHECK_THROWS(g_count(6, 100000, 10));
  }

  TEST_CASE("bound2 argument and value") {
    CHECK(bound2_argument(3, 9) == 3);
    CHECK(bound2_argument(3, 10) == mpq_class(13, 4));
    Interval v = bound2_value(1, 5, 128);
    // r = 1: 2 d with d = 3
    CHECK(v.lo_double() <= 6.0);
    CHECK(v.hi_double() >= 6.0);
  }

  TEST_CASE("ratio inequality") {
    auto r10 = ratio_holds(10, mpz_class("39916800"));
    CHECK(r10.certificate.verdict == Verdict::holds);
    CHECK(r10.constant.lo_double() > 1.79885);
    CHECK(r10.constant.hi_double() < 1.79895);
    CHECK_THROWS_AS(ratio_holds(5, 100), PreconditionError);
  }

  TEST_CASE("f-functions against long double evaluation") {
    for (FName f : {FName::f1, FName::f2, FName::f3, FName::f4, FName::f5}) {
      for (long x : {1L, 2L, 7L, 20L, 33L, 100L}) {
        Interval v = f_value(f, x, 128);
        const long double ref = ld_f(f, x);
        CAPTURE(fname_str(f));
        CAPTURE(x);
        CHECK(std::fabs(v.mid_double() - static_cast<double>(ref)) <= 1e-12 * std::fabs(static_cast<double>(ref)) + 1e-300);
        CHECK(v.lo_double() <= v.hi_double());
      }
    }
    CHECK(parse_fname("f3") == FName::f3);
    CHECK_THROWS_AS(parse_fname("f9"), PreconditionError);
    CHECK_THROWS_AS(f_value(FName::f5, 0, 64), PreconditionError);
  }

  TEST_CASE("range endpoints") {
    CHECK(range_d1(5) == binom(6, 3));
    CHECK(range_d1(6) == binom(7, 3));
    CHECK(range_d2(6) == 64);
    CHECK(range_d2(12) == mpz_class(14 * 14 * 14 * 14));
    CHECK(range_d3(5) == 720);
    CHECK(range_d4(3) == 16);
    CHECK_THROWS_AS(range_d3(2), PreconditionError);
  }

  TEST_CASE("characteristic 2 counts") {
    for (int r = 0; r <= 12; ++r)
      for (int m = 0; m <= r; ++m) {
        mpz_class s = 0;
        for (int j = m; j <= r; ++j) s += binom(r, j);
        mpz_class f = 1;
        for (int i = m + 2; i <= r + 1; ++i) f *= i;
        auto [a, b] = char2_counts(r, m);
        CHECK(a == s);
        CHECK(b == f);
      }
    CHECK(scan_char2(25).ok());
  }

  TEST_CASE("zeta values") {
    Interval z2 = zeta(2, 256);
    Interval pi = Interval::pi(256);
    Interval diff = z2 - pi * pi / Interval::from_int(6, 256);
    CHECK(diff.contains_zero());
    CHECK(diff.hi_double() < 1e-60);
    CHECK(diff.lo_double() > -1e-60);
    Interval z94 = zeta(mpq_class(9, 4), 256);
    CHECK((z94 - Interval::from_string("1.460211866158648501976697546357587209545", 256))
              .hi_double() < 1e-38);
    CHECK((Interval::from_string("1.460211866158648501976697546357587209545", 256) - z94).hi_double() < 1e-38);
    Interval z52 = zeta(mpq_class(5, 2), 256);
    CHECK(std::fabs(z52.mid_double() - 1.3414872572509171798) < 1e-15);
    CHECK_THROWS_AS(zeta(1, 64), PreconditionError);
  }

  TEST_CASE("zeta tail checks") {
    CHECK(zeta_tail_check(2, ZetaForm::single, 4).verdict == Verdict::holds);
    CHECK(zeta_tail_check(2, ZetaForm::single, 25).verdict == Verdict::holds);
    CHECK(zeta_tail_check(mpq_class(9, 4), ZetaForm::product, 7).verdict == Verdict::holds);
    CHECK(zeta_tail_check(mpq_class(9, 4), ZetaForm::product, 8).verdict == Verdict::holds);
    CHECK(zeta_tail_check(mpq_class(5, 2), ZetaForm::single, 27).verdict == Verdict::holds);
    CHECK(zeta_tail_check(mpq_class(9, 4), ZetaForm::single, 56).verdict == Verdict::holds);
    CHECK(zeta_tail_check(mpq_class(9, 4), ZetaForm::single, 248).verdict == Verdict::holds);
    // C > 1 at s = 3/2, and n0 = 2 is too small at s = 2
    CHECK(zeta_tail_check(mpq_class(3, 2), ZetaForm::single, 100).verdict == Verdict::fails);
    CHECK(zeta_tail_check(2, ZetaForm::single, 2).verdict == Verdict::fails);
    // rational extra term equal to 2^-2
    CHECK(zeta_tail_check(2, mpq_class(1, 4), 4).verdict == Verdict::holds);
  }

  TEST_CASE("rn_upper branches") {
    auto a5 = rn_upper(Family::A, 5, 1000, 7);
    CHECK(a5.value.kind == QuantityKind::interval);
    CHECK(a5.value.text == "n^(5/2)");
    CHECK(std::fabs(a5.value.interval->mid_double() - std::pow(1000.0, 2.5)) < 1e-3);

    auto c2 = rn_upper(Family::C, 2, 3, 3);
    CHECK(c2.value.kind == QuantityKind::exact);
    CHECK(c2.value.exact == 9);
    CHECK(c2.guard_detail.find("n < 4") != std::string::npos);

    auto triv = rn_upper(Family::B, 3, 1, 5);
    CHECK(triv.value.exact == 1);

    auto ch2 = rn_upper(Family::E, 7, 500, 2);
    CHECK(ch2.value.exact == 500);
    CHECK_FALSE(ch2.assumptions.empty());

    auto d3 = rn_upper(Family::D, 3, 100, 5);
    CHECK(d3.valid);
    CHECK(d3.value.exact == 10000);

    auto b4 = rn_upper(Family::B, 4, 1000, 3);
    CHECK(b4.valid);
    CHECK(b4.value.text == "n^(9/4)");

    auto a3 = rn_upper(Family::A, 3, 3787, 5);
    CHECK(a3.value.text == "n^(17/5)/r^3");
    for (const auto& c : a3.checks) CHECK(c.verdict == Verdict::holds);

    CHECK_THROWS_AS(rn_upper(Family::A, 3, 0, 5), PreconditionError);
    CHECK_THROWS_AS(rn_upper(Family::A, 3, 10, 6), PreconditionError);
  }

  TEST_CASE("every rn_upper check holds on a grid") {
    for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 2},  {Family::A, 6},  {Family::A, 15},
                                                           {Family::A, 40}, {Family::B, 5},  {Family::C, 3},
                                                           {Family::D, 3},  {Family::D, 6},  {Family::E, 6},
                                                           {Family::E, 8},  {Family::F, 4},  {Family::G, 2}})
      for (long n : {2L, 10L, 57L, 1000L, 100000L}) {
        auto rep = rn_upper(f, r, n, 5);
        CAPTURE(r);
        CAPTURE(n);
        CHECK(rep.valid);
        for (const auto& c : rep.checks) CHECK(c.verdict == Verdict::holds);
      }
  }
}
