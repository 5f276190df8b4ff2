#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "repgrowth/dominance.hpp"
#include "repgrowth/scans.hpp"

using namespace repgrowth;

namespace {

oracle::Vec to_vec(const Weight& w) { return oracle::Vec(w.coeffs.begin(), w.coeffs.end()); }

mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Type A orbit length as a multinomial: the epsilon-coordinates
// (a_1 + ... + a_r, a_2 + ... + a_r, ..., a_r, 0) permuted by S_{r+1}.
mpz_class multinomial_orbit(const Weight& w) {
  const int r = w.rank();
  std::vector<std::int64_t> eps(r + 1, 0);
  for (int i = r - 1; i >= 0; --i) eps[i] = eps[i + 1] + w[i];
  std::map<std::int64_t, int> mult;
  for (auto e : eps) ++mult[e];
  mpz_class out = factorial(r + 1);
  for (auto [v, k] : mult) out /= factorial(k);
  return out;
}

}  // namespace

TEST_SUITE("dominance") {
  TEST_CASE("bracket statistic") {
    const RootDatum a5 = RootDatum::make(Family::A, 5);
    CHECK(bracket(a5, Weight({1, 1, 1, 1, 1})) == 9);
    CHECK(bracket(a5, Weight({0, 0, 1, 0, 0})) == 3);
    CHECK(bracket(RootDatum::make(Family::A, 4), Weight({1, 1, 1, 1})) == 6);
  }

  TEST_CASE("Weyl group orders") {
    CHECK(weyl_group_order(Family::A, 5) == 720);
    CHECK(weyl_group_order(Family::B, 4) == 384);
    CHECK(weyl_group_order(Family::C, 3) == 48);
    CHECK(weyl_group_order(Family::D, 5) == 1920);
    CHECK(weyl_group_order(Family::E, 6) == 51840);
    CHECK(weyl_group_order(Family::E, 7) == 2903040);
    CHECK(weyl_group_order(Family::E, 8) == mpz_class("696729600"));
    CHECK(weyl_group_order(Family::F, 4) == 1152);
    CHECK(weyl_group_order(Family::G, 2) == 12);
    // |W| is the orbit length of a regular weight
    for (auto [f, r] : std::vector<std::pair<Family, int>>{
             {Family::A, 4}, {Family::B, 3}, {Family::C, 4}, {Family::D, 4}, {Family::F, 4}, {Family::G, 2}}) {
      auto c = oracle::cartan(f, r);
      CHECK(weyl_group_order(f, r) == mpz_class(static_cast<unsigned long>(oracle::orbit_size(c, oracle::Vec(r, 1)))));
    }
  }

  TEST_CASE("orbit lengths against reflection closure") {
    std::mt19937 rng(7);
    for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 3},
                                                           {Family::B, 3},
                                                           {Family::C, 3},
                                                           {Family::D, 4},
                                                           {Family::G, 2},
                                                           {Family::F, 4},
                                                           {Family::E, 6}}) {
      const RootDatum d = RootDatum::make(f, r);
      auto c = oracle::cartan(f, r);
      for (int trial = 0; trial < 20; ++trial) {
        Weight w = Weight::zero(r);
        for (int i = 0; i < r; ++i) w[i] = rng() % 3 == 0 ? 1 + rng() % 3 : 0;
        CAPTURE(d.label());
        CAPTURE(w.str());
        const std::size_t o = oracle::orbit_size(c, to_vec(w), 200000);
        if (o == 0) continue;
        CHECK(orbit_length(d, w) == mpz_class(static_cast<unsigned long>(o)));
      }
    }
  }

  TEST_CASE("type A orbit lengths are multinomials") {
    for (int r = 1; r <= 6; ++r) {
      const RootDatum d = RootDatum::make(Family::A, r);
      for_each_weight_in_box(r, 2, [&](const Weight& w) { CHECK(orbit_length(d, w) == multinomial_orbit(w)); });
    }
    CHECK(orbit_length(RootDatum::make(Family::A, 5), Weight({0, 0, 1, 0, 0})) == 20);
  }

  TEST_CASE("saturated sets against a brute-force box scan") {
    for (auto [f, r] : std::vector<std::pair<Family, int>>{
             {Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::C, 3}, {Family::G, 2}, {Family::D, 4}}) {
      const RootDatum d = RootDatum::make(f, r);
      auto c = oracle::cartan(f, r);
      for_each_weight_in_box(r, 2, [&](const Weight& lam) {
        auto sat = saturated_dominant_set(d, lam, 100000);
        std::set<Weight> lib;
        for (const auto& e : sat) {
          CHECK(e.chain.verify(d));
          CHECK(e.chain.source == lam);
          CHECK(e.chain.target == e.weight);
          lib.insert(e.weight);
        }
        // every dominant mu <= lambda has (mu, mu) <= (lambda, lambda); a box
        // of side 2 * (sum a_i) + 2 comfortably contains them in these ranks
        std::int64_t side = 2;
        for (auto a : lam.coeffs) side += 2 * a;
        std::set<Weight> brute;
        for_each_weight_in_box(r, static_cast<int>(side), [&](const Weight& mu) {
          if (oracle::dominates(c, to_vec(lam), to_vec(mu))) brute.insert(mu);
        });
        CAPTURE(d.label());
        CAPTURE(lam.str());
        CHECK(lib == brute);
      });
    }
  }

  TEST_CASE("dominance witness matches the oracle") {
    std::mt19937 rng(11);
    for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 4}, {Family::C, 3}, {Family::F, 4}, {Family::E, 6}}) {
      const RootDatum d = RootDatum::make(f, r);
      auto c = oracle::cartan(f, r);
      for (int t = 0; t < 300; ++t) {
        Weight lam = Weight::zero(r), mu = Weight::zero(r);
        for (int i = 0; i < r; ++i) lam[i] = rng() % 4, mu[i] = rng() % 3;
        auto w = dominance_witness(d, lam, mu);
        CHECK(w.has_value() == oracle::dominates(c, to_vec(lam), to_vec(mu)));
        if (w) {
          CHECK(w->verify(d));
          CHECK(w->is_strict() == (lam != mu));
        }
      }
    }
    const RootDatum a2 = RootDatum::make(Family::A, 2);
    CHECK(dominance_witness(a2, Weight({1, 1}), Weight({1, 1})).has_value());
    CHECK_FALSE(dominance_witness(a2, Weight({1, 1}), Weight({1, 1}), true).has_value());
  }

  TEST_CASE("tampered chains fail their self-check") {
    const RootDatum a2 = RootDatum::make(Family::A, 2);
    auto w = dominance_witness(a2, Weight({2, 2}), Weight({0, 0}));
    REQUIRE(w);
    WitnessChain bad = *w;
    bad.root_coeffs[0] += 1;
    CHECK_FALSE(bad.verify(a2));
    bad = *w;
    bad.root_coeffs[0] = -1;
    CHECK_FALSE(bad.verify(a2));
  }

  TEST_CASE("cap overflow is reported, never truncated") {
    const RootDatum a4 = RootDatum::make(Family::A, 4);
    CHECK_THROWS_AS(saturated_dominant_set(a4, Weight({4, 4, 4, 4}), 10), CapExceeded);
    CHECK(saturated_dominant_set(a4, Weight::zero(4), 1).size() == 1);
  }

  TEST_CASE("orbit times stabilizer scan") {
    auto st = scan_orbit_stabilizer(5, 2);
    CHECK(st.ok());
    CHECK(st.applied > 1000);
  }

  TEST_CASE("good weights") {
    CHECK(is_good(Weight({1, 2, 3})));
    CHECK_FALSE(is_good(Weight({1, 0, 3})));
    CHECK(orbit_length(RootDatum::make(Family::A, 5), Weight({1, 1, 1, 1, 1})) == 720);
  }
}
