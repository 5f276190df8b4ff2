#include "repgrowth/suites.hpp"

#include <algorithm>
#include <functional>

#include "repgrowth/bounds.hpp"
#include "repgrowth/partitions.hpp"
#include "repgrowth/scans.hpp"
#include "repgrowth/witness.hpp"

namespace repgrowth {

Scale parse_scale(const std::string& s) {
  if (s == "desk") return Scale::desk;
  if (s == "extended") return Scale::extended;
  throw PreconditionError("unknown scale '" + s + "' (expected desk or extended)");
}

const char* scale_name(Scale s) { return s == Scale::desk ? "desk" : "extended"; }

const char* suite_verdict_name(SuiteVerdict v) {
  switch (v) {
    case SuiteVerdict::pass: return "pass";
    case SuiteVerdict::fail: return "fail";
    case SuiteVerdict::unknown: return "unknown";
    case SuiteVerdict::external_assumption: return "external-assumption";
  }
  return "unknown";
}

SuiteVerdict parse_suite_verdict(const std::string& s) {
  if (s == "pass") return SuiteVerdict::pass;
  if (s == "fail") return SuiteVerdict::fail;
  if (s == "unknown") return SuiteVerdict::unknown;
  if (s == "external-assumption") return SuiteVerdict::external_assumption;
  throw PreconditionError("unknown verdict '" + s + "'");
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {"typeA", "char2", "nonA", "partitions", "symmetric"};
  return ids;
}

int suite_exit_code(const VerificationSuite& suite) {
  bool unknown = false;
  for (const auto& c : suite.checks) {
    if (c.verdict == SuiteVerdict::fail) return 1;
    if (c.verdict == SuiteVerdict::unknown) unknown = true;
  }
  return unknown ? 2 : 0;
}

namespace {

SuiteVerdict from_verdict(Verdict v) {
  switch (v) {
    case Verdict::holds: return SuiteVerdict::pass;
    case Verdict::fails: return SuiteVerdict::fail;
    case Verdict::unknown: return SuiteVerdict::unknown;
  }
  return SuiteVerdict::unknown;
}

std::string cert_detail(const Certificate& c) {
  return "lhs <= " + c.lhs.hi_string(10) + ", rhs >= " + c.rhs.lo_string(10) + " at " +
         std::to_string(c.precision) + " bits";
}

Interval ipow(const Interval& x, const char* exponent) {
  mpq_class q(exponent);
  q.canonicalize();
  return pow(x, q);
}

Interval Z(const mpz_class& v, mpfr_prec_t prec) { return Interval::from_mpz(v, prec); }

class Builder {
 public:
  Builder(std::string prefix, PrecisionPolicy policy) : prefix_(std::move(prefix)), policy_(policy) {}

  void add(const std::string& id, const std::string& anchor, SuiteVerdict v, const std::string& detail) {
    out_.push_back({prefix_ + "." + id, anchor, v, detail});
  }

  void exact(const std::string& id, const std::string& anchor, bool ok, const std::string& detail) {
    add(id, anchor, ok ? SuiteVerdict::pass : SuiteVerdict::fail, detail);
  }

  void cert(const std::string& id, const std::string& anchor, const Certificate& c) {
    add(id, anchor, from_verdict(c.verdict), cert_detail(c));
  }

  // lhs < rhs, certified.
  void less(const std::string& id, const std::string& anchor, const SidesAt& sides) {
    cert(id, anchor, certify(Relation::less, sides, policy_));
  }

  // lhs(x) < rhs(x) for every x in [lo, hi].
  void less_range(const std::string& id, const std::string& anchor, long lo, long hi,
                  const std::function<std::pair<Interval, Interval>(long, mpfr_prec_t)>& sides) {
    long held = 0, failed = 0, unknown = 0;
    std::string first;
    for (long x = lo; x <= hi; ++x) {
      auto c = certify(Relation::less, [&](mpfr_prec_t prec) { return sides(x, prec); }, policy_);
      if (c.verdict == Verdict::holds) {
        ++held;
      } else {
        (c.verdict == Verdict::fails ? failed : unknown)++;
        if (first.empty()) first = "; first exception at " + std::to_string(x) + " (" + verdict_name(c.verdict) + ")";
      }
    }
    SuiteVerdict v = failed ? SuiteVerdict::fail : unknown ? SuiteVerdict::unknown : SuiteVerdict::pass;
    add(id, anchor, v,
        std::to_string(held) + " of " + std::to_string(hi - lo + 1) + " certified for " + std::to_string(lo) +
            ".." + std::to_string(hi) + first);
  }

  void scan(const std::string& id, const std::string& anchor, const ScanStats& st) {
    add(id, anchor, st.ok() && st.applied > 0 ? SuiteVerdict::pass : SuiteVerdict::fail, st.summary());
  }

  void external(const std::string& id, const std::string& anchor, const std::string& detail) {
    add(id, anchor, SuiteVerdict::external_assumption, detail);
  }

  // Runs body; any exception becomes a failing check.
  void guarded(const std::string& id, const std::string& anchor, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(id, anchor, SuiteVerdict::fail, std::string("exception: ") + e.what());
    }
  }

  PrecisionPolicy policy() const { return policy_; }
  std::vector<SuiteCheck> take() { return std::move(out_); }

 private:
  std::string prefix_;
  PrecisionPolicy policy_;
  std::vector<SuiteCheck> out_;
};

mpz_class fact(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// ---------------------------------------------------------------------------

void type_a_suite(Builder& b, Scale scale, std::size_t cap) {
  const RootDatum a2 = RootDatum::make(Family::A, 2);
  const RootDatum a3 = RootDatum::make(Family::A, 3);
  const RootDatum a5 = RootDatum::make(Family::A, 5);

  b.guarded("roots.simple", "alpha_1 = 2w_1 - w_2 (A2); alpha_2 = -w_1 + 2w_2 - w_3 (A3)", [&] {
    const bool ok = simple_root_as_weight(a2, 1) == Weight({2, -1}) && simple_root_as_weight(a3, 2) == Weight({-1, 2, -1});
    b.exact("roots.simple", "alpha_1 = 2w_1 - w_2 (A2); alpha_2 = -w_1 + 2w_2 - w_3 (A3)", ok,
            simple_root_as_weight(a2, 1).str() + ", " + simple_root_as_weight(a3, 2).str());
  });
  b.guarded("bracket.r5", "[(1,1,1,1,1)] = 9", [&] {
    const auto v = bracket(a5, Weight({1, 1, 1, 1, 1}));
    b.exact("bracket.r5", "[(1,1,1,1,1)] = 9", v == 9, std::to_string(v));
  });
  b.guarded("orbit.r5_w3", "|W w_3| = 20 for A5", [&] {
    const mpz_class v = orbit_length(a5, Weight({0, 0, 1, 0, 0}));
    b.exact("orbit.r5_w3", "|W w_3| = 20 for A5", v == 20, v.get_str());
  });
  b.guarded("orbit.good", "|W mu| = (r+1)! for good mu", [&] {
    const mpz_class v = orbit_length(a5, Weight({1, 2, 1, 1, 3}));
    b.exact("orbit.good", "|W mu| = (r+1)! for good mu", v == 720, v.get_str());
  });
  b.guarded("saturated.a2", "dominant weights below w_1 + w_2 are {w_1 + w_2, 0}", [&] {
    auto sat = saturated_dominant_set(a2, Weight({1, 1}), cap);
    const bool ok = sat.size() == 2 && sat[0].weight == Weight({1, 1}) && sat[1].weight == Weight({0, 0});
    b.exact("saturated.a2", "dominant weights below w_1 + w_2 are {w_1 + w_2, 0}", ok, std::to_string(sat.size()) + " weights");
  });
  b.guarded("nlambda.r2", "N((2,2)) = 10", [&] {
    const mpz_class v = n_lambda(a2, Weight({2, 2}));
    b.exact("nlambda.r2", "N((2,2)) = 10", v == 10, v.get_str());
  });

  // counting functions
  b.guarded("harmonic.10", "h(10) < 1 + log 10", [&] {
    auto h = harmonic(10, b.policy());
    b.cert("harmonic.10", "h(10) < 1 + log 10", *h.log_bound);
  });
  b.guarded("g.examples", "g(1,d) = floor(d); g(2,4) = 8; g(3,1) = 1", [&] {
    const bool ok = g_count(1, mpq_class(15, 2)).count == 7 && g_count(2, 4).count == 8 && g_count(3, 1).count == 1;
    b.exact("g.examples", "g(1,d) = floor(d); g(2,4) = 8; g(3,1) = 1", ok, "");
  });
  b.guarded("g.analytic", "g(r,d) <= d h(d)^{r-1}, r <= 6, d <= 200", [&] {
    ScanStats st;
    for (int r = 1; r <= 6; ++r)
      for (int d = 1; d <= 200; ++d) {
        ++st.inputs;
        ++st.applied;
        if (!g_count(r, d).within_analytic) st.fail("r = " + std::to_string(r) + ", d = " + std::to_string(d));
      }
    b.scan("g.analytic", "g(r,d) <= d h(d)^{r-1}, r <= 6, d <= 200", st);
  });
  b.less("bound2.3787", "2^3 d (1 + log d)^2 < 5*10^5 at n = 3787", [](mpfr_prec_t prec) {
    return std::make_pair(bound2_value(3, 3787, prec), Interval::from_int(500000, prec));
  });

  // large range, small r
  b.less("large.r3_margin", "n^3.4/r^3 > 5000 for r = 3, 24 <= n <= 500 (worst case n = 24)", [](mpfr_prec_t prec) {
    return std::make_pair(Interval::from_int(5000, prec),
                          ipow(Interval::from_int(24, prec), "17/5") / Interval::from_int(27, prec));
  });
  b.less("large.r3_needed", "n^3.4/r^3 > 200 for r = 3, n >= 24", [](mpfr_prec_t prec) {
    return std::make_pair(Interval::from_int(200, prec),
                          ipow(Interval::from_int(24, prec), "17/5") / Interval::from_int(27, prec));
  });
  b.less("large.r3_upper", "5*10^5 < n^3.4/r^3 for r = 3, n > 500", [](mpfr_prec_t prec) {
    return std::make_pair(Interval::from_int(500000, prec),
                          ipow(Interval::from_int(500, prec), "17/5") / Interval::from_int(27, prec));
  });
  b.less("large.r4_margin", "n^3.4/r^3 > 10^5 for r = 4, n >= 120", [](mpfr_prec_t prec) {
    return std::make_pair(Interval::from_int(100000, prec),
                          ipow(Interval::from_int(120, prec), "17/5") / Interval::from_int(64, prec));
  });
  b.less_range("ratio.factorials", "r+1 < 1.8 log n / log log n at n = (r+1)!", 5, 69, [](long r, mpfr_prec_t prec) {
    Interval ln = log(Z(fact(r + 1), prec));
    return std::make_pair(Interval::from_int(r + 1, prec), Interval::from_mpq(mpq_class(9, 5), prec) * ln / log(ln));
  });
  b.guarded("ratio.r10", "11 loglog 11! / log 11! = 1.7989 (4 decimals)", [&] {
    auto res = ratio_holds(10, fact(11), b.policy());
    const mpfr_prec_t prec = res.constant.precision();
    const bool ok = res.certificate.verdict == Verdict::holds &&
                    Interval::from_mpq(mpq_class(179885, 100000), prec).certainly_less_equal(res.constant) &&
                    res.constant.certainly_less(Interval::from_mpq(mpq_class(179895, 100000), prec));
    b.exact("ratio.r10", "11 loglog 11! / log 11! = 1.7989 (4 decimals)", ok,
            "[" + res.constant.lo_string(8) + ", " + res.constant.hi_string(8) + "]");
  });

  // mid and small range thresholds
  b.less("f1.730", "f1(r) < d1^3.8 at r = 730", [](mpfr_prec_t prec) {
    return std::make_pair(f_value(FName::f1, 730, prec), ipow(Z(range_d1(730), prec), "19/5"));
  });
  b.guarded("f1.729", "f1(r) vs d1^3.8 at r = 729 (reported)", [&] {
    auto c = certify(
        Relation::less,
        [](mpfr_prec_t prec) {
          return std::make_pair(f_value(FName::f1, 729, prec), ipow(Z(range_d1(729), prec), "19/5"));
        },
        b.policy());
    b.add("f1.729", "f1(r) vs d1^3.8 at r = 729 (reported)",
          c.verdict == Verdict::unknown ? SuiteVerdict::unknown : SuiteVerdict::pass,
          std::string("f1(729) < d1(729)^3.8 ") + verdict_name(c.verdict) + "; " + cert_detail(c));
  });
  if (scale == Scale::extended) {
    b.less_range("f1.d1_range", "f1(r) < d1^3.8 for 730 <= r <= 1000", 730, 1000, [](long r, mpfr_prec_t prec) {
      return std::make_pair(f_value(FName::f1, r, prec), ipow(Z(range_d1(r), prec), "19/5"));
    });
  }
  b.less_range("f1.d2", "f1(r) < d2^3.76 for 19 <= r < 730", 19, 729, [](long r, mpfr_prec_t prec) {
    return std::make_pair(f_value(FName::f1, r, prec), ipow(Z(range_d2(r), prec), "94/25"));
  });
  b.less_range("f2.d1", "f2(r) < d1^3.76 for 19 <= r < 730", 19, 729, [](long r, mpfr_prec_t prec) {
    return std::make_pair(f_value(FName::f2, r, prec), ipow(Z(range_d1(r), prec), "94/25"));
  });
  b.less_range("f1.d3", "f1(r) < d3^2.9 for 11 <= r <= 19", 11, 19, [](long r, mpfr_prec_t prec) {
    return std::make_pair(f_value(FName::f1, r, prec), ipow(Z(range_d3(r), prec), "29/10"));
  });
  b.less_range("f3.r4", "f3(r) < ((r+1)^4)^3.29 for 11 <= r <= 18", 11, 18, [](long r, mpfr_prec_t prec) {
    mpz_class n;
    mpz_ui_pow_ui(n.get_mpz_t(), r + 1, 4);
    return std::make_pair(f_value(FName::f3, r, prec), ipow(Z(n, prec), "329/100"));
  });
  b.less_range("f4.d4", "f4(m) < d4 = 2^{m+1} for 80 <= m <= 200", 80, 200, [](long m, mpfr_prec_t prec) {
    return std::make_pair(f_value(FName::f4, m, prec), Z(range_d4(m), prec));
  });
  b.less_range("f4.d4_power", "f4(m) < d4^3.8 for 6 <= m <= 200", 6, 200, [](long m, mpfr_prec_t prec) {
    return std::make_pair(f_value(FName::f4, m, prec), ipow(Z(range_d4(m), prec), "19/5"));
  });
  b.less("f4.m5", "f4(5) < 792^2.44", [](mpfr_prec_t prec) {
    return std::make_pair(f_value(FName::f4, 5, prec), ipow(Interval::from_int(792, prec), "61/25"));
  });
  b.less_range("f4.m1_4", "f4(m) < C(12,m)^3.11 for 1 <= m <= 4", 1, 4, [](long m, mpfr_prec_t prec) {
    return std::make_pair(f_value(FName::f4, m, prec), ipow(Z(binom(12, m), prec), "311/100"));
  });

  // rank 5
  b.guarded("a5.ksum76", "#{x in N^5 : x1+2x2+3x3+2x4+x5 <= 76} = 2415231", [&] {
    const mpz_class v = k_sum(5, 76);
    b.exact("a5.ksum76", "#{x in N^5 : x1+2x2+3x3+2x4+x5 <= 76} = 2415231", v == 2415231, v.get_str());
  });
  b.less("a5.below_2500", "2415231 < 2500^2.5", [](mpfr_prec_t prec) {
    return std::make_pair(Interval::from_int(2415231, prec), ipow(Interval::from_int(2500, prec), "5/2"));
  });
  b.less("a5.bound2", "2^5 d (1 + log d)^4 < n^2.5 at n = 57750", [](mpfr_prec_t prec) {
    return std::make_pair(bound2_value(5, 57750, prec), ipow(Interval::from_int(57750, prec), "5/2"));
  });
  b.guarded("a5.family", "3^5 · 720 = 174,960", [&] {
    const Weight lam0({40, 0, 0, 0, 37});
    A5Family fam = a5_good_family(a5, lam0);
    std::vector<Weight> mus;
    bool ok = fam.orbit_total == 174960 && fam.members.size() == 243 && fam.mu[2] >= 25;
    for (const auto& m : fam.members) {
      ok = ok && is_good(m.mu) && m.chain.verify(a5) && m.chain.source == lam0;
      mus.push_back(m.mu);
    }
    std::sort(mus.begin(), mus.end());
    ok = ok && std::adjacent_find(mus.begin(), mus.end()) == mus.end();
    b.exact("a5.family", "3^5 · 720 = 174,960", ok,
            "lambda0 = " + lam0.str() + ", mu = " + fam.mu.str() + ", orbit total " + fam.orbit_total.get_str());
  });

  // property scans
  const int wr = scale == Scale::desk ? 7 : 8;
  const int ws = scale == Scale::desk ? 12 : 16;
  b.guarded("witness.scan", "witness lemmas: hypothesis => postcondition", [&] {
    b.scan("witness.scan",
           "witness lemmas: hypothesis => postcondition, rank <= " + std::to_string(wr) + ", sum a_i <= " +
               std::to_string(ws),
           scan_witness_lemmas(wr, ws));
  });
  const int cr = scale == Scale::desk ? 4 : 5;
  b.guarded("consistency.scan", "N(lambda) <= sum |W mu|", [&] {
    b.scan("consistency.scan", "N(lambda) <= sum |W mu| over dominant mu <= lambda, p = 5, rank <= " + std::to_string(cr),
           scan_bounds_consistency(cr, 5, cap));
  });
  b.guarded("rn.a3_3787", "R_n <= n^3.4/r^3 when n >= (r+1)!", [&] {
    auto rep = rn_upper(Family::A, 3, 3787, 5, b.policy());
    const bool ok = rep.valid && rep.value.kind == QuantityKind::interval && rep.value.text == "n^(17/5)/r^3";
    b.exact("rn.a3_3787", "R_n <= n^3.4/r^3 when n >= (r+1)!", ok,
            "value in [" + rep.value.interval->lo_string(8) + ", " + rep.value.interval->hi_string(8) + "]");
  });

  b.external("ext.tables_r3", "R_500(A3) < 200", "module tables (Luebeck); not reproducible here");
  b.external("ext.tables_r4", "R_719(A4) <= 170", "module tables (Luebeck); not reproducible here");
  b.external("ext.tables_a5", "R_n(A5) <= n for n <= 2500", "module tables (Luebeck); not reproducible here");
  b.external("ext.tables_small_rank", "r <= 10: tables up to B(r) >= (r+1)^4 list < (r+1)^2.7 modules",
             "module tables (Luebeck); not reproducible here");
  b.external("ext.tables_mid_rank", "11 <= r <= 20, n < (r+1)^4: R_n < d1^3.29",
             "module tables (Luebeck); not reproducible here");
  b.external("ext.true_dim", "dim L(lambda) in characteristic p",
             "no modular character engine; only the lower bounds above are computed");
}

void char2_suite(Builder& b, Scale scale) {
  b.exact("counts.boundary", "(1,1) at (r,m) = (4,4); (16,120) at (4,0)",
          char2_counts(4, 4) == std::make_pair(mpz_class(1), mpz_class(1)) &&
              char2_counts(4, 0) == std::make_pair(mpz_class(16), mpz_class(120)),
          "");
  const int maxr = scale == Scale::desk ? 25 : 60;
  b.scan("counts.range", "sum_{j=m}^r C(r,j) <= (r+1)!/(m+1)!, 0 <= m <= r <= " + std::to_string(maxr),
         scan_char2(maxr));
  {
    ScanStats st;
    for (int a = 0; a <= 30; ++a)
      for (int c = 0; c <= 30; ++c) {
        ++st.inputs;
        ++st.applied;
        if (fact(a + 1) * fact(c + 1) > fact(a + c + 1)) st.fail(std::to_string(a) + "," + std::to_string(c));
      }
    b.scan("factorial", "(a+1)!(b+1)! <= (a+b+1)!, a, b <= 30", st);
  }
  b.guarded("rn", "R_n <= n in characteristic 2", [&] {
    bool ok = true;
    for (auto [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 4}, {Family::C, 3}, {Family::E, 8}, {Family::G, 2}}) {
      auto rep = rn_upper(f, r, 100, 2, b.policy());
      ok = ok && rep.value.kind == QuantityKind::exact && rep.value.exact == 100;
    }
    b.exact("rn", "R_n <= n in characteristic 2", ok, "A4, C3, E8, G2 at n = 100");
  });
  b.external("ext.tables", "rank <= 8, non-A: R_n <= n from module tables", "module tables (Luebeck)");
  b.external("ext.smith", "C_r, D_r with r >= 9: restriction to a Levi subgroup", "Smith's theorem, consumed as stated");
}

void non_a_suite(Builder& b, Scale scale) {
  struct Det {
    Family f;
    int r;
    std::int64_t det;
  };
  {
    std::vector<Det> table = {{Family::A, 1, 2}, {Family::A, 4, 5}, {Family::B, 3, 2}, {Family::C, 4, 2},
                              {Family::D, 4, 4}, {Family::D, 5, 4}, {Family::E, 6, 3}, {Family::E, 7, 2},
                              {Family::E, 8, 1}, {Family::F, 4, 1}, {Family::G, 2, 1}};
    std::string bad;
    for (auto t : table)
      if (RootDatum::make(t.f, t.r).determinant() != t.det) bad += RootDatum::make(t.f, t.r).label() + " ";
    b.exact("cartan.det", "det of the Cartan matrix = index of the root lattice", bad.empty(),
            bad.empty() ? std::to_string(table.size()) + " types" : "mismatch: " + bad);
  }
  {
    struct Node {
      Family f;
      int r, j;
    };
    std::vector<Node> table = {{Family::C, 4, 1}, {Family::B, 4, 2}, {Family::D, 5, 2}, {Family::E, 6, 2},
                               {Family::E, 7, 1}, {Family::E, 8, 8}, {Family::F, 4, 1}};
    std::string bad;
    for (auto t : table) {
      const RootDatum d = RootDatum::make(t.f, t.r);
      auto j = d.extended_node();
      if (!j || *j != t.j || d.highest_root_coeffs()[t.j - 1] != 2) bad += d.label() + " ";
    }
    b.exact("highest_root.node", "unique j joined to alpha_0 has n_j = 2", bad.empty(), bad.empty() ? "7 types" : bad);
    const auto e8 = RootDatum::make(Family::E, 8).highest_root_coeffs();
    const auto f4 = RootDatum::make(Family::F, 4).highest_root_coeffs();
    b.exact("highest_root.e8_f4", "alpha_0 = 2,3,4,6,5,4,3,2 (E8); 2,3,4,2 (F4)",
            e8 == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2} && f4 == std::vector<int>{2, 3, 4, 2}, "");
  }
  b.scan("orbit_stabilizer", "|W mu| * |Stab mu| = |W|, all types", scan_orbit_stabilizer(scale == Scale::desk ? 5 : 6,
                                                                                          scale == Scale::desk ? 2 : 3));

  struct Z {
    const char* id;
    const char* anchor;
    mpq_class s;
    ZetaForm form;
    long n0;
  };
  const std::vector<Z> zs = {
      {"zeta.C", "1 + n^2 (zeta(2) - 1 + 1/4) < n^2, n >= 4", 2, ZetaForm::single, 4},
      {"zeta.B", "1 + n^s (zeta(s)(zeta(s) - 1) + zeta(s)/2^s) < n^s, s = 9/4, n >= 7", mpq_class(9, 4),
       ZetaForm::product, 7},
      {"zeta.B_single", "1 + n^s (zeta(s) - 1 + 2^-s) < n^s, s = 9/4, n >= 7", mpq_class(9, 4), ZetaForm::single, 7},
      {"zeta.D", "1 + n^s (zeta(s)(zeta(s) - 1) + zeta(s)/2^s) < n^s, s = 9/4, n >= 8", mpq_class(9, 4),
       ZetaForm::product, 8},
      {"zeta.E6", "1 + n^2.5 (zeta(2.5) - 1 + 2^-2.5) < n^2.5, n >= 27", mpq_class(5, 2), ZetaForm::single, 27},
      {"zeta.E7", "1 + n^s (zeta(s) - 1 + 2^-s) < n^s, s = 9/4, n >= 56", mpq_class(9, 4), ZetaForm::single, 56},
      {"zeta.E8", "1 + n^s (zeta(s) - 1 + 2^-s) < n^s, s = 9/4, n >= 248", mpq_class(9, 4), ZetaForm::single, 248},
      {"zeta.F4", "1 + n^2 (zeta(2) - 1 + 1/4) < n^2, n >= 25", 2, ZetaForm::single, 25},
  };
  for (const auto& z : zs) {
    b.guarded(z.id, z.anchor, [&] {
      auto res = zeta_tail_check(z.s, z.form, z.n0, b.policy());
      b.add(z.id, z.anchor, from_verdict(res.verdict),
            "C in [" + res.coefficient.lo_string(10) + ", " + res.coefficient.hi_string(10) + "]");
    });
  }
  b.guarded("zeta.value2", "zeta(2) = pi^2/6", [&] {
    const mpfr_prec_t prec = b.policy().start;
    Interval z = zeta(2, prec);
    Interval target = Interval::pi(prec) * Interval::pi(prec) / Interval::from_int(6, prec);
    Interval diff = z - target;
    b.exact("zeta.value2", "zeta(2) = pi^2/6", diff.contains_zero(),
            "zeta(2) in [" + z.lo_string(15) + ", " + z.hi_string(15) + "]");
  });
  b.less_range("d3.counting", "2(n+3)(1 + log((n+3)/4))^2 < n^2 for 24 <= n <= 2000", 24,
               scale == Scale::desk ? 2000 : 20000, [](long n, mpfr_prec_t prec) {
                 return std::make_pair(bound2_value(3, n, prec), Interval::from_int(n * n, prec));
               });
  b.guarded("premet.examples", "orbit sums: (A1, 4w) = 5, (A2, w_1) = 3, lambda = 0 gives 1", [&] {
    const auto a1 = RootDatum::make(Family::A, 1);
    const auto a2 = RootDatum::make(Family::A, 2);
    const auto e8 = RootDatum::make(Family::E, 8);
    const bool ok = premet_lower(a1, Weight({4}), 5, 1000).value.exact == 5 &&
                    premet_lower(a2, Weight({1, 0}), 3, 1000).value.exact == 3 &&
                    premet_lower(e8, Weight::zero(8), 7, 1000).value.exact == 1;
    b.exact("premet.examples", "orbit sums: (A1, 4w) = 5, (A2, w_1) = 3, lambda = 0 gives 1", ok, "");
  });

  b.external("ext.min_dims", "smallest nontrivial dimensions 4 (C2), 7 (B3), 8 (D4), 27 (E6), 56 (E7), 248 (E8), 25 (F4)",
             "module tables (Luebeck)");
  b.external("ext.d3_tables", "D3: R_n <= n^2 for n <= 23", "module tables (Luebeck)");
  b.external("ext.g2", "G2: R_n <= n^2", "asserted without a computation to reproduce");
  b.external("ext.premet", "weights of L(lambda) = W-orbits of dominant mu <= lambda", "Premet's theorem, consumed as stated");
  b.external("ext.maximal_subgroups", "maximal-subgroup counts",
             "rely on external classification results; out of reach of this library");
}

void partitions_suite(Builder& b, Scale scale) {
  for (auto [n, v] : std::vector<std::pair<int, long>>{{21, 792}, {39, 31185}, {60, 966467}}) {
    const mpz_class got = partition_count(n);
    b.exact("p" + std::to_string(n), "p(" + std::to_string(n) + ") = " + std::to_string(v), got == v, got.get_str());
  }
  for (int n : {1, 39, 100}) {
    auto r = partition_bound(n, b.policy());
    b.cert("pi_bound." + std::to_string(n), "p(n) < exp(pi sqrt(2n/3)) at n = " + std::to_string(n), r.certificate);
  }
  {
    ScanStats st;
    const auto pc = partition_counts(40);
    for (int n = 0; n <= 40; ++n) {
      ++st.inputs;
      ++st.applied;
      if (mpz_class(static_cast<unsigned long>(p_regular_partitions(n, 0).size())) != pc[n]) st.fail(std::to_string(n));
    }
    b.scan("p.enumeration", "pentagonal recurrence = explicit enumeration, n <= 40", st);
  }
  {
    ScanStats st;
    for (int r = 1; r <= 5; ++r) {
      const auto dp = k_counts(r, 30);
      std::vector<long> naive(31, 0);
      std::vector<int> w(r);
      for (int i = 1; i <= r; ++i) w[i - 1] = std::min(i, r + 1 - i);
      std::function<void(int, int)> rec = [&](int i, int s) {
        if (i == r) {
          ++naive[s];
          return;
        }
        for (int x = 0; s + x * w[i] <= 30; ++x) rec(i + 1, s + x * w[i]);
      };
      rec(0, 0);
      for (int s = 0; s <= 30; ++s) {
        ++st.inputs;
        ++st.applied;
        if (dp[s] != naive[s]) st.fail("r = " + std::to_string(r) + ", s = " + std::to_string(s));
      }
    }
    b.scan("k.naive", "k(r,s) by recurrence = by enumeration, r <= 5, s <= 30", st);
  }
  b.exact("k.example", "k(3,2) = 4", k_count(3, 2) == 4, k_count(3, 2).get_str());
  for (int N : {0, 10, 76}) {
    auto r = k_sum_bound(N, b.policy());
    const std::string anchor = "sum_{s<=N} k(r,s) < (N+1)(N+2)/2 exp(2 pi sqrt(N/3)), N = " + std::to_string(N);
    std::string detail = "majorant " + r.majorant.get_str() + "; " + cert_detail(r.certificate);
    if (!r.strict) detail += "; " + r.note;
    b.add("k_sum_bound." + std::to_string(N), anchor, from_verdict(r.certificate.verdict), detail);
  }
  b.exact("k_sum.r5", "sum_{s<=76} k(5,s) = 2415231 below the N = 76 majorant",
          k_sum(5, 76) == 2415231 && k_sum(5, 76) <= k_sum_bound(76, b.policy()).majorant, "");
  b.exact("p_regular.examples", "2-regular partitions of 4 are (4), (3,1); five 3-regular partitions of 5",
          p_regular_partitions(4, 2) == std::vector<Partition>{Partition({4}), Partition({3, 1})} &&
              p_regular_partitions(5, 3).size() == 5,
          "");
  const int mn = scale == Scale::desk ? 18 : 22;
  b.scan("mullineux.involution", "M(M(lambda)) = lambda, M(lambda) p-regular, p in {3,5,7}, n <= " + std::to_string(mn),
         scan_mullineux(mn, {3, 5, 7}));
  b.scan("mullineux.conjugation", "M = conjugation at p = 0 and p > n, n <= 10", scan_mullineux_conjugation(10));
  b.exact("hook.examples", "dim S^(3,2) = dim S^(2,2,1) = 5",
          hook_length_dim(Partition({3, 2})) == 5 && hook_length_dim(Partition({2, 2, 1})) == 5, "");
  const int bn = scale == Scale::desk ? 16 : 20;
  b.scan("bound3.hook", "dim S^lambda >= 2^{(r - m_0(lambda))/2}, 5 <= r <= " + std::to_string(bn),
         scan_bound3_hook(5, bn));
  b.external("ext.bound3", "dim D^lambda >= 2^{(r - m_p(lambda))/2} for p > 0",
             "needs modular dimensions; only the p = 0 case is checked above");
}

void symmetric_suite(Builder& b, Scale scale) {
  b.less("f5.1e13", "f5(n) <= n at n = 10^13", [](mpfr_prec_t prec) {
    mpz_class n("10000000000000");
    return std::make_pair(f_value(FName::f5, n, prec), Z(n, prec));
  });
  b.less("f5.1e44", "f5(n) < sqrt(n) at n = 10^44", [](mpfr_prec_t prec) {
    mpz_class n, root;
    mpz_ui_pow_ui(n.get_mpz_t(), 10, 44);
    mpz_ui_pow_ui(root.get_mpz_t(), 10, 22);
    return std::make_pair(f_value(FName::f5, n, prec), Z(root, prec));
  });
  auto bval = [](long n, mpfr_prec_t prec) {
    return ipow(Interval::from_int(n, prec), "5/2") / Interval::from_mpq(mpq_class(1232, 100), prec);
  };
  b.less("f5.b1503", "f5(n) < b(n) = n^2.5/12.32 at n = 1503", [&](mpfr_prec_t prec) {
    return std::make_pair(f_value(FName::f5, 1503, prec), bval(1503, prec));
  });
  // d/dL log(b/f5) with L = log2 n is 2.5 log 2 - 1/L - pi/sqrt(3L), increasing in L.
  b.less("f5.b_monotone", "b(n)/f5(n) increasing for n >= 1503", [](mpfr_prec_t prec) {
    Interval L = log(Interval::from_int(1503, prec)) / Interval::log2_const(prec);
    Interval deriv = Interval::from_mpq(mpq_class(5, 2), prec) * Interval::log2_const(prec) -
                     Interval::from_int(1, prec) / L - Interval::pi(prec) / sqrt(Interval::from_int(3, prec) * L);
    return std::make_pair(Interval::from_int(0, prec), deriv);
  });
  struct Step {
    int r;
    long n;
  };
  for (Step s : {Step{60, 677}, Step{39, 172}, Step{21, 53}}) {
    const mpz_class pv = partition_count(s.r);
    b.less("p" + std::to_string(s.r) + "_b" + std::to_string(s.n),
           "p(" + std::to_string(s.r) + ") < b(" + std::to_string(s.n) + ")", [&](mpfr_prec_t prec) {
             return std::make_pair(Z(pv, prec), bval(s.n, prec));
           });
  }
  b.less("alt.combination", "b(n) + 2b(2n) = (1 + 2^3.5) n^2.5/12.32 < n^2.5", [](mpfr_prec_t prec) {
    return std::make_pair(Interval::from_int(1, prec) + ipow(Interval::from_int(2, prec), "7/2"),
                          Interval::from_mpq(mpq_class(1232, 100), prec));
  });
  b.less_range("all_irr.direct", "4 p(r) < n^2.5 at n = 2^floor((r-3)/2), 13 <= r <= 18", 13, 18,
               [](long r, mpfr_prec_t prec) {
                 mpz_class n;
                 mpz_ui_pow_ui(n.get_mpz_t(), 2, (r - 3) / 2);
                 return std::make_pair(Z(4 * partition_count(r), prec), ipow(Z(n, prec), "5/2"));
               });
  b.less_range("all_irr.analytic", "4 exp(pi sqrt(2r/3)) < (2^floor((r-3)/2))^2.5, 19 <= r <= 400", 19,
               scale == Scale::desk ? 400 : 4000, [](long r, mpfr_prec_t prec) {
                 mpz_class n;
                 mpz_ui_pow_ui(n.get_mpz_t(), 2, (r - 3) / 2);
                 Interval lhs = Interval::from_int(4, prec) *
                                exp(Interval::pi(prec) * sqrt(Interval::from_mpq(mpq_class(2 * r, 3), prec)));
                 return std::make_pair(lhs, ipow(Z(n, prec), "5/2"));
               });
  const int sr = scale == Scale::desk ? 20 : 25;
  b.scan("sym1.counting", "#{lambda : r - m_p(lambda) <= n0} <= 2 sum_{j<=n0} p(j), p in {2,3,5}, r <= " + std::to_string(sr),
         scan_sym1_counting(sr, {2, 3, 5}));
  b.external("ext.small_r", "5 <= r <= 12: R_n <= n^2.5", "Brauer character tables (JLPW atlas)");
  b.external("ext.min_degree", "smallest nontrivial projective degree of A_r is >= r - 2", "published classification of small projective degrees");
  b.external("ext.james", "n < (r^2-5r+2)/2 => R_n(S_r) <= 4", "James");
  b.external("ext.bound3_base", "dim D^lambda >= 2^{(r - m_p)/2} for r = 5, 6", "Brauer character tables (JLPW atlas)");
}

}  // namespace

VerificationSuite run_suite(const std::string& id, Scale scale, PrecisionPolicy policy, std::size_t cap) {
  VerificationSuite suite;
  suite.id = id;
  suite.scale = scale;
  std::vector<std::string> ids;
  if (id == "all") {
    ids = suite_ids();
  } else if (std::find(suite_ids().begin(), suite_ids().end(), id) != suite_ids().end()) {
    ids = {id};
  } else {
    throw PreconditionError("unknown suite '" + id + "'");
  }
  for (const auto& s : ids) {
    Builder b(s, policy);
    if (s == "typeA") type_a_suite(b, scale, cap);
    else if (s == "char2") char2_suite(b, scale);
    else if (s == "nonA") non_a_suite(b, scale);
    else if (s == "partitions") partitions_suite(b, scale);
    else symmetric_suite(b, scale);
    auto checks = b.take();
    suite.checks.insert(suite.checks.end(), checks.begin(), checks.end());
  }
  std::sort(suite.checks.begin(), suite.checks.end(),
            [](const SuiteCheck& a, const SuiteCheck& b) { return a.id < b.id; });
  return suite;
}

}  // namespace repgrowth
