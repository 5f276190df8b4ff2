#include <functional>

#include "doctest.h"
#include "oracles.hpp"
#include "repgrowth/partitions.hpp"
#include "repgrowth/scans.hpp"

using namespace repgrowth;

namespace {

// Number of partitions of n with parts <= k.
mpz_class naive_p(int n, int k) {
  if (n == 0) return 1;
  if (k == 0) return 0;
  mpz_class s = 0;
  for (int part = std::min(n, k); part >= 1; --part) s += naive_p(n - part, part);
  return s;
}

long naive_k(int r, int s) {
  std::vector<int> w(r);
  for (int i = 1; i <= r; ++i) w[i - 1] = std::min(i, r + 1 - i);
  std::function<long(int, int)> rec = [&](int i, int left) -> long {
    if (i == r) return left == 0;
    long t = 0;
    for (int x = 0; x * w[i] <= left; ++x) t += rec(i + 1, left - x * w[i]);
    return t;
  };
  return rec(0, s);
}

}  // namespace

TEST_SUITE("partitions") {
  TEST_CASE("partition type") {
    Partition p = Partition::parse("3,2,2,1");
    CHECK(p.size() == 8);
    CHECK(p.length() == 4);
    CHECK(p.part(2) == 2);
    CHECK(p.part(9) == 0);
    CHECK(p.conjugate() == Partition({4, 3, 1}));
    CHECK(p.conjugate().conjugate() == p);
    CHECK(p.str() == "3,2,2,1");
    CHECK(Partition::parse("").size() == 0);
    CHECK_THROWS_AS(Partition({1, 2}), PreconditionError);
    CHECK_THROWS_AS(Partition({3, 0}), PreconditionError);
    CHECK_THROWS_AS(Partition::parse("3,x"), PreconditionError);
  }

  TEST_CASE("partition numbers") {
    CHECK(partition_count(21) == 792);
    CHECK(partition_count(39) == 31185);
    CHECK(partition_count(60) == 966467);
    CHECK(partition_count(100) == mpz_class("190569292"));
    const auto pc = partition_counts(30);
    for (int n = 0; n <= 30; ++n) CHECK(pc[n] == naive_p(n, n));
  }

  TEST_CASE("partition bound") {
    for (int n : {1, 5, 39, 100, 500}) {
      auto r = partition_bound(n);
      CHECK(r.exact == partition_count(n));
      CHECK(r.certificate.verdict == Verdict::holds);
    }
  }

  TEST_CASE("p-regular enumeration against filtering all partitions") {
    for (int p : {0, 2, 3, 5})
      for (int n = 0; n <= 14; ++n) {
        std::vector<Partition> expect;
        for (const auto& parts : oracle::all_partitions(n)) {
          std::map<int, int> mult;
          bool ok = true;
          for (int x : parts) ok = ok && (p == 0 || ++mult[x] < p);
          if (ok) expect.emplace_back(parts);
        }
        CHECK(p_regular_partitions(n, p) == expect);
      }
    CHECK(p_regular_partitions(4, 2) == std::vector<Partition>{Partition({4}), Partition({3, 1})});
    CHECK(p_regular_partitions(5, 3).size() == 5);
  }

  TEST_CASE("the stream restarts") {
    PRegularPartitions s(6, 2);
    std::vector<Partition> first;
    while (auto x = s.next()) first.push_back(*x);
    CHECK_FALSE(s.next().has_value());
    s.reset();
    CHECK(s.all() == first);
    CHECK(first.size() == 4);  // 6, 5+1, 4+2, 3+2+1
  }

  TEST_CASE("p-regularity") {
    CHECK(is_p_regular(Partition({2, 2, 1}), 3));
    CHECK_FALSE(is_p_regular(Partition({2, 2, 2}), 3));
    CHECK(repeating_part(Partition({2, 2, 2}), 3) == 2);
    CHECK(is_p_regular(Partition({1, 1, 1, 1}), 0));
  }

  TEST_CASE("k(r,s) against direct enumeration") {
    for (int r = 1; r <= 6; ++r) {
      const auto k = k_counts(r, 24);
      for (int s = 0; s <= 24; ++s) CHECK(k[s] == naive_k(r, s));
    }
    CHECK(k_count(3, 2) == 4);
    CHECK(k_sum(5, 76) == 2415231);
  }

  TEST_CASE("k-sum majorant") {
    for (int N : {1, 10, 40, 76}) {
      auto b = k_sum_bound(N);
      CHECK(b.strict);
      CHECK(b.certificate.verdict == Verdict::holds);
      for (int r = 1; r <= 8; ++r) CHECK(k_sum(r, N) <= b.majorant);
    }
    auto zero = k_sum_bound(0);
    CHECK_FALSE(zero.strict);
    CHECK(zero.majorant == 1);
    CHECK(zero.certificate.verdict == Verdict::holds);
    CHECK_FALSE(zero.note.empty());
  }

  TEST_CASE("hook length formula against tableau counting") {
    for (int n = 1; n <= 12; ++n)
      for (const auto& parts : oracle::all_partitions(n)) CHECK(hook_length_dim(Partition(parts)) == oracle::syt_count(parts));
    CHECK(hook_length_dim(Partition({3, 2})) == 5);
    CHECK(hook_length_dim(Partition({2, 2, 1})) == 5);
  }

  TEST_CASE("bound3 against hook lengths") {
    auto st = scan_bound3_hook(5, 14);
    INFO(st.summary());
    CHECK(st.ok());
    Sqrt2Power s{5};
    CHECK(s.squared() == 32);
    CHECK(s.at_most(6));
    CHECK_FALSE(s.at_most(5));
    CHECK_THROWS_AS(bound3_value(Partition({2, 2}), 3), PreconditionError);
  }

  TEST_CASE("m_p") {
    CHECK(m_p(Partition({3, 1}), 2) == 3);
    CHECK(m_p(Partition({1, 1, 1}), 0) == 3);
    CHECK(m_p(Partition({5}), 3) == 5);
  }

  TEST_CASE("symmetric counting scan") {
    auto st = scan_sym1_counting(16, {2, 3, 5});
    CHECK(st.ok());
  }

  TEST_CASE("symmetric-group bound") {
    auto big = sym_rn_bound(40, 100000, 3, SymGroup::S);
    CHECK(big.valid);
    CHECK(big.value.text.find("5/2") != std::string::npos);
    auto trivial = sym_rn_bound(20, 1, 5, SymGroup::A);
    CHECK(trivial.value.exact == 1);
    auto small = sym_rn_bound(10, 100, 3, SymGroup::S);
    CHECK_FALSE(small.assumptions.empty());
    for (auto g : {SymGroup::S, SymGroup::A, SymGroup::cover})
      for (long n : {20L, 60L, 200L, 2000L, 100000L}) {
        auto rep = sym_rn_bound(30, n, 5, g);
        for (const auto& c : rep.checks) CHECK(c.verdict == Verdict::holds);
      }
    CHECK(parse_sym_group("cover") == SymGroup::cover);
    CHECK_THROWS_AS(parse_sym_group("B"), PreconditionError);
  }
}
