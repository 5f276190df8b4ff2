#include "repgrowth/bounds.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace repgrowth {

const char* quantity_kind_name(QuantityKind k) {
  switch (k) {
    case QuantityKind::exact: return "exact";
    case QuantityKind::interval: return "interval";
    case QuantityKind::external: return "external";
  }
  return "external";
}

Quantity Quantity::of(mpz_class v, std::string text) {
  Quantity q;
  q.kind = QuantityKind::exact;
  q.exact = std::move(v);
  q.text = std::move(text);
  return q;
}

Quantity Quantity::of(Interval v, std::string text) {
  Quantity q;
  q.kind = QuantityKind::interval;
  q.interval = std::move(v);
  q.text = std::move(text);
  return q;
}

Quantity Quantity::external(std::string text) {
  Quantity q;
  q.kind = QuantityKind::external;
  q.text = std::move(text);
  return q;
}

Interval Quantity::enclosure(mpfr_prec_t prec) const {
  switch (kind) {
    case QuantityKind::exact: return Interval::from_mpz(exact, prec);
    case QuantityKind::interval: return *interval;
    case QuantityKind::external: break;
  }
  throw std::logic_error("external quantity has no enclosure");
}

namespace {

mpz_class factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

mpz_class pow_ui(const mpz_class& base, unsigned long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

mpz_class floor_q(const mpq_class& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

Interval two_pi(mpfr_prec_t prec) { return Interval::from_int(2, prec) * Interval::pi(prec); }

// exp(2 pi sqrt(q)) for exact rational q >= 0.
Interval exp_two_pi_sqrt(const mpq_class& q, mpfr_prec_t prec) {
  return exp(two_pi(prec) * sqrt(Interval::from_mpq(q, prec)));
}

std::string mpz_str(const mpz_class& v) { return v.get_str(); }

}  // namespace

// ---------------------------------------------------------------------------

mpz_class n_lambda(const RootDatum& datum, const Weight& lambda) {
  if (datum.family() != Family::A) throw PreconditionError("N(lambda) is defined for type A only");
  datum.check_weight(lambda);
  if (!lambda.is_dominant()) throw PreconditionError("N(lambda): weight " + lambda.str() + " is not dominant");
  mpz_class prod = 1;
  for (auto a : lambda.coeffs) prod *= static_cast<unsigned long>(1 + a / 2);
  return 1 + (datum.rank() + 1) * (prod - 1);
}

mpz_class premet_sum(const RootDatum& datum, const Weight& lambda, std::size_t cap) {
  mpz_class total = 0;
  for (const auto& entry : saturated_dominant_set(datum, lambda, cap)) total += orbit_length(datum, entry.weight);
  return total;
}

BoundReport premet_lower(const RootDatum& datum, const Weight& lambda, int p, std::size_t cap) {
  datum.check_weight(lambda);
  if (!lambda.is_dominant()) throw PreconditionError("premet_lower: weight " + lambda.str() + " is not dominant");
  if (!is_prime(p)) throw PreconditionError("premet_lower: p = " + std::to_string(p) + " is not prime");
  BoundReport rep;
  rep.name = "saturated_orbit_sum";
  rep.inputs = {{"family", std::string(1, family_letter(datum.family()))},
                {"rank", std::to_string(datum.rank())},
                {"weight", lambda.str()},
                {"p", std::to_string(p)}};
  std::vector<std::string> failures;
  if (!is_restricted(lambda, p)) failures.push_back("weight is not p-restricted");
  if (datum.has_two_root_lengths() && p == 2) failures.push_back("p = 2 with two root lengths");
  if (datum.family() == Family::G && p == 3) failures.push_back("p = 3 for G2");
  rep.valid = failures.empty();
  if (rep.valid) {
    rep.guard_detail = "weights of L(lambda) are the W-orbits of dominant mu <= lambda; each has multiplicity >= 1";
  } else {
    std::string s;
    for (const auto& f : failures) s += (s.empty() ? "" : "; ") + f;
    rep.guard_detail = "hypotheses fail: " + s;
  }
  rep.value = Quantity::of(premet_sum(datum, lambda, cap), "sum of |W mu| over dominant mu <= lambda");
  return rep;
}

// ---------------------------------------------------------------------------

HarmonicResult harmonic(const mpq_class& d, PrecisionPolicy policy) {
  if (d < 1) throw PreconditionError("harmonic: need d >= 1");
  HarmonicResult res;
  const mpz_class top = floor_q(d);
  res.value = 0;
  for (mpz_class j = 1; j <= top; ++j) res.value += mpq_class(1, j);
  res.value.canonicalize();
  if (d >= 2) {
    const mpq_class h = res.value;
    res.log_bound = certify(
        Relation::less,
        [&](mpfr_prec_t prec) {
          return std::make_pair(Interval::from_mpq(h, prec),
                                Interval::from_int(1, prec) + log(Interval::from_mpq(d, prec)));
        },
        policy);
  }
  return res;
}

namespace {

struct GCounter {
  std::size_t budget;
  std::size_t calls = 0;
  std::map<std::pair<int, unsigned long>, mpz_class> memo;

  mpz_class count(int r, unsigned long d) {
    if (d == 0) return 0;
    if (r == 1) return d;
    auto key = std::make_pair(r, d);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    if (++calls > budget) throw std::runtime_error("g_count: enumeration budget exhausted");
    mpz_class total = 0;
    // floor(d/j) is constant on blocks of j; sum each block at once.
    for (unsigned long j = 1; j <= d;) {
      unsigned long q = d / j;
      unsigned long j_end = d / q;
      total += count(r - 1, q) * static_cast<unsigned long>(j_end - j + 1);
      j = j_end + 1;
    }
    memo.emplace(key, total);
    return total;
  }
};

}  // namespace

GCountResult g_count(int r, const mpq_class& d, std::size_t budget) {
  if (r < 1) throw PreconditionError("g_count: need r >= 1");
  if (d < 1) throw PreconditionError("g_count: need d >= 1");
  const mpz_class top = floor_q(d);
  if (!top.fits_ulong_p()) throw PreconditionError("g_count: d too large");
  GCounter counter{budget, 0, {}};
  GCountResult res;
  res.count = counter.count(r, top.get_ui());
  const mpq_class h = harmonic(d, PrecisionPolicy{64, 64}).value;
  mpq_class hp = 1;
  for (int i = 0; i < r - 1; ++i) hp *= h;
  res.analytic = d * hp;
  res.within_analytic = mpq_class(res.count) <= res.analytic;
  return res;
}

mpq_class bound2_argument(int r, const mpz_class& n) {
  mpq_class d = mpq_class(n - 1, r + 1) + 1;
  d.canonicalize();
  return d;
}

Interval bound2_value(int r, const mpz_class& n, mpfr_prec_t prec) {
  if (r < 1 || n < 1) throw PreconditionError("bound2_value: need r >= 1 and n >= 1");
  const mpq_class d = bound2_argument(r, n);
  Interval dv = Interval::from_mpq(d, prec);
  Interval base = Interval::from_int(1, prec) + log(dv);
  return Interval::from_mpz(pow_ui(2, r), prec) * dv * pow_int(base, r - 1);
}

RatioResult ratio_holds(int r, const mpz_class& n, PrecisionPolicy policy) {
  if (r < 1) throw PreconditionError("ratio_holds: need r >= 1");
  const mpz_class floor_n = std::max(mpz_class(6), factorial(r + 1));
  if (n < floor_n) {
    throw PreconditionError("ratio_holds: hypothesis \"n >= max(6,(r+1)!)\" violated (n = " + mpz_str(n) +
                            ", bound = " + mpz_str(floor_n) + ")");
  }
  RatioResult res;
  res.certificate = certify(
      Relation::less,
      [&](mpfr_prec_t prec) {
        Interval ln = log(Interval::from_mpz(n, prec));
        Interval rhs = Interval::from_mpq(mpq_class(9, 5), prec) * ln / log(ln);
        return std::make_pair(Interval::from_int(r + 1, prec), rhs);
      },
      policy);
  const mpfr_prec_t prec = res.certificate.precision;
  Interval ln = log(Interval::from_mpz(n, prec));
  res.constant = Interval::from_int(r + 1, prec) * log(ln) / ln;
  return res;
}

FName parse_fname(const std::string& s) {
  if (s == "f1") return FName::f1;
  if (s == "f2") return FName::f2;
  if (s == "f3") return FName::f3;
  if (s == "f4") return FName::f4;
  if (s == "f5") return FName::f5;
  throw PreconditionError("unknown function name '" + s + "' (expected f1..f5)");
}

const char* fname_str(FName f) {
  static const char* names[] = {"f1", "f2", "f3", "f4", "f5"};
  return names[static_cast<int>(f)];
}

Interval f_value(FName f, const mpz_class& arg, mpfr_prec_t prec) {
  switch (f) {
    case FName::f1: {
      if (arg < 1) throw PreconditionError("f1: need r >= 1");
      const mpz_class r = arg;
      // (r+1)^4/8 * exp(2 pi sqrt(r^2/6 + r/3 - 1/2))
      mpq_class inner = mpq_class(r * r, 6) + mpq_class(r, 3) - mpq_class(1, 2);
      inner.canonicalize();
      mpq_class lead(pow_ui(r + 1, 4), 8);
      lead.canonicalize();
      return Interval::from_mpq(lead, prec) * exp_two_pi_sqrt(inner, prec);
    }
    case FName::f2: {
      if (arg < 1) throw PreconditionError("f2: need r >= 1");
      const mpz_class r = arg;
      mpq_class base, inner;
      if (r % 2 != 0) {
        base = mpq_class(r * r + 11, 6) + r;
        inner = mpq_class(r * r - 1, 18) + mpq_class(r, 3);
      } else {
        base = mpq_class(r * r, 6) + 2 * r;
        inner = mpq_class(r * r, 18) + mpq_class(2 * r - 2, 3);
      }
      base.canonicalize();
      inner.canonicalize();
      mpq_class lead = base * base / 2;
      return Interval::from_mpq(lead, prec) * exp_two_pi_sqrt(inner, prec);
    }
    case FName::f3: {
      if (arg < 1) throw PreconditionError("f3: need r >= 1");
      const mpz_class r = arg;
      mpq_class inner(4 * r - 2, 3);
      inner.canonicalize();
      return Interval::from_mpz(8 * r * r, prec) * exp_two_pi_sqrt(inner, prec);
    }
    case FName::f4: {
      if (arg < 0) throw PreconditionError("f4: need m >= 0");
      const mpz_class m = arg;
      mpq_class inner(2 * m, 3);
      inner.canonicalize();
      return Interval::from_mpz(2 * (m + 1) * (m + 1), prec) * exp_two_pi_sqrt(inner, prec);
    }
    case FName::f5: {
      if (arg < 1) throw PreconditionError("f5: need n >= 1");
      // 4 log2(n) exp(2 pi sqrt(log2(n)/3))
      Interval l2 = log(Interval::from_mpz(arg, prec)) / Interval::log2_const(prec);
      if (arg == 1) l2 = Interval::from_int(0, prec);
      Interval inner = l2 / Interval::from_int(3, prec);
      return Interval::from_int(4, prec) * l2 * exp(two_pi(prec) * sqrt(inner));
    }
  }
  throw std::logic_error("unreachable");
}

mpz_class range_d1(int r) {
  if (r < 1) throw PreconditionError("d1: need r >= 1");
  const int k = (r - 1) / 2;
  return binomial(r + 1, k + 1);
}

mpz_class range_d2(int r) {
  if (r < 1) throw PreconditionError("d2: need r >= 1");
  return pow_ui(r + 2, 2 * (r / 6));
}

mpz_class range_d3(int r) {
  const int k = (r - 1) / 2;
  if (k < 1) throw PreconditionError("d3: need k = floor((r-1)/2) >= 1");
  mpz_class f = factorial(k - 1);
  return factorial(r + 1) / (f * f);
}

mpz_class range_d4(int m) {
  if (m < 0) throw PreconditionError("d4: need m >= 0");
  return pow_ui(2, m + 1);
}

std::pair<mpz_class, mpz_class> char2_counts(int r, int m) {
  if (r < 0 || m < 0 || m > r) throw PreconditionError("char2_counts: need 0 <= m <= r");
  mpz_class sum = 0;
  for (int j = m; j <= r; ++j) sum += binomial(r, j);
  return {sum, factorial(r + 1) / factorial(m + 1)};
}

// ---------------------------------------------------------------------------
// Riemann zeta

namespace {

// B_{2j} / (2j)! for j = 0..count-1, from sum_{k<=m} C(m+1,k) B_k = 0.
const std::vector<mpq_class>& bernoulli_over_factorial(std::size_t count) {
  static std::vector<mpq_class> cache;
  if (cache.size() >= count) return cache;
  const std::size_t top = 2 * count;
  std::vector<mpq_class> b(top + 1);
  b[0] = 1;
  for (std::size_t m = 1; m <= top; ++m) {
    mpq_class acc = 0;
    mpz_class binom = 1;  // C(m+1, k)
    for (std::size_t k = 0; k < m; ++k) {
      acc += binom * b[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[m] = -acc / (m + 1);
  }
  cache.assign(count, 0);
  mpz_class fact = 1;
  for (std::size_t j = 0; j < count; ++j) {
    if (j > 0) fact *= (2 * j - 1) * (2 * j);
    cache[j] = b[2 * j] / fact;
    cache[j].canonicalize();
  }
  return cache;
}

}  // namespace

Interval zeta(const mpq_class& s, mpfr_prec_t prec) {
  if (s <= 1) throw PreconditionError("zeta: need s > 1");
  const long N = std::max<long>(32, static_cast<long>(prec / 2));
  const std::size_t M = std::max<std::size_t>(8, static_cast<std::size_t>(prec / 8));
  const auto& coef = bernoulli_over_factorial(M + 2);
  Interval sv = Interval::from_mpq(s, prec);
  Interval logN = log(Interval::from_int(N, prec));
  auto inv_pow = [&](long k, const mpq_class& e) {  // k^{-e}
    return exp(-(Interval::from_mpq(e, prec) * log(Interval::from_int(k, prec))));
  };
  Interval sum = Interval::from_int(0, prec);
  for (long k = 1; k < N; ++k) sum = sum + inv_pow(k, s);
  // Euler-Maclaurin from N with M Bernoulli terms. For real s the remainder
  // is at most the first omitted term; twice that is used as the radius.
  Interval n_s = exp(-(sv * logN));  // N^{-s}
  Interval inv_n2 = Interval::from_mpq(mpq_class(1, N * N), prec);
  sum = sum + n_s * Interval::from_int(N, prec) / Interval::from_mpq(s - 1, prec) + n_s / Interval::from_int(2, prec);
  Interval rising = sv;                                      // s (s+1) ... (s+2j-2)
  Interval power = n_s / Interval::from_int(N, prec);        // N^{-s-2j+1}
  Interval term = Interval::from_int(0, prec);
  for (std::size_t j = 1; j <= M + 1; ++j) {
    term = Interval::from_mpq(coef[j], prec) * rising * power;
    if (j <= M) sum = sum + term;
    rising = rising * (sv + Interval::from_int(2 * j - 1, prec)) * (sv + Interval::from_int(2 * j, prec));
    power = power * inv_n2;
  }
  Interval r = Interval::from_int(2, prec) * Interval::span(Interval::from_int(0, prec), term.hi_double() >= 0 ? term : -term);
  return Interval::span(sum - r, sum + r);
}

namespace {

ZetaTailResult zeta_tail_impl(const mpq_class& s, long n0, PrecisionPolicy policy,
                              const std::function<Interval(const Interval& z, mpfr_prec_t)>& coeff) {
  if (s <= 1) throw PreconditionError("zeta_tail_check: need s > 1");
  if (n0 < 1) throw PreconditionError("zeta_tail_check: need n0 >= 1");
  ZetaTailResult res;
  res.coefficient_below_one = certify(
      Relation::less,
      [&](mpfr_prec_t prec) { return std::make_pair(coeff(zeta(s, prec), prec), Interval::from_int(1, prec)); },
      policy);
  res.at_threshold = certify(
      Relation::less,
      [&](mpfr_prec_t prec) {
        Interval ns = pow(Interval::from_int(n0, prec), s);
        return std::make_pair(Interval::from_int(1, prec) + ns * coeff(zeta(s, prec), prec), ns);
      },
      policy);
  res.coefficient = coeff(zeta(s, res.at_threshold.precision), res.at_threshold.precision);
  const Verdict a = res.coefficient_below_one.verdict;
  const Verdict b = res.at_threshold.verdict;
  if (a == Verdict::holds && b == Verdict::holds) {
    res.verdict = Verdict::holds;
  } else if (b == Verdict::fails) {
    res.verdict = Verdict::fails;  // n0 itself is a counterexample
  } else {
    res.verdict = Verdict::unknown;
  }
  return res;
}

Interval two_pow_neg(const mpq_class& s, mpfr_prec_t prec) { return pow(Interval::from_int(2, prec), -s); }

}  // namespace

ZetaTailResult zeta_tail_check(const mpq_class& s, ZetaForm form, long n0, PrecisionPolicy policy) {
  return zeta_tail_impl(s, n0, policy, [&](const Interval& z, mpfr_prec_t prec) {
    Interval one = Interval::from_int(1, prec);
    Interval extra = two_pow_neg(s, prec);
    if (form == ZetaForm::single) return z - one + extra;
    return z * (z - one) + z * extra;
  });
}

ZetaTailResult zeta_tail_check(const mpq_class& s, const mpq_class& extra, long n0, PrecisionPolicy policy) {
  return zeta_tail_impl(s, n0, policy, [&](const Interval& z, mpfr_prec_t prec) {
    return z - Interval::from_int(1, prec) + Interval::from_mpq(extra, prec);
  });
}

// ---------------------------------------------------------------------------
// R_n dispatch

namespace {

std::string q_str(const mpq_class& q) { return q.get_str(); }

// n^s as exact integer when s is integral, else an interval.
Quantity power_quantity(const mpz_class& n, const mpq_class& s, mpfr_prec_t prec, const std::string& text) {
  if (s.get_den() == 1) return Quantity::of(pow_ui(n, s.get_num().get_ui()), text);
  return Quantity::of(pow(Interval::from_mpz(n, prec), s), text);
}

CheckResult zeta_check(const std::string& id, const mpq_class& s, ZetaForm form, long n0, PrecisionPolicy policy) {
  auto z = zeta_tail_check(s, form, n0, policy);
  CheckResult c;
  c.id = id;
  c.statement = std::string("1 + n^s C < n^s for n >= ") + std::to_string(n0) + ", s = " + q_str(s) +
                (form == ZetaForm::single ? ", C = zeta(s) - 1 + 2^-s" : ", C = zeta(s)(zeta(s) - 1) + zeta(s) 2^-s");
  c.verdict = z.verdict;
  c.detail = "C in [" + z.coefficient.lo_string(12) + ", " + z.coefficient.hi_string(12) + "] at " +
             std::to_string(z.at_threshold.precision) + " bits";
  return c;
}

std::string range_label(int r, const mpz_class& n) {
  if (n >= factorial(r + 1)) return "large";
  if (r >= 3 && n >= range_d1(r)) return "mid";
  return "small";
}

}  // namespace

BoundReport rn_upper(Family family, int rank, const mpz_class& n, int p, PrecisionPolicy policy) {
  validate_family_rank(family, rank);
  if (n < 1) throw PreconditionError("rn_upper: need n >= 1");
  if (!is_prime(p)) throw PreconditionError("rn_upper: p = " + std::to_string(p) + " is not prime");
  const mpfr_prec_t prec = policy.start;
  const std::string label = std::string(1, family_letter(family)) + std::to_string(rank);
  BoundReport rep;
  rep.name = "rn_upper";
  rep.inputs = {{"family", std::string(1, family_letter(family))},
                {"rank", std::to_string(rank)},
                {"n", mpz_str(n)},
                {"p", std::to_string(p)}};

  if (n == 1) {
    rep.value = Quantity::of(mpz_class(1), "only the trivial module has dimension 1");
    rep.guard_detail = "n = 1";
    return rep;
  }
  if (p == 2) {
    rep.value = Quantity::of(n, "n (characteristic 2)");
    rep.guard_detail = "characteristic 2";
    if (family == Family::A) {
      auto [binsum, ratio] = char2_counts(rank, 0);
      rep.checks.push_back({"char2.counts", "sum_{j=m}^r C(r,j) <= (r+1)!/(m+1)! at m = 0",
                            binsum <= ratio ? Verdict::holds : Verdict::fails,
                            mpz_str(binsum) + " <= " + mpz_str(ratio)});
    } else if (rank <= 8) {
      rep.assumptions.push_back("characteristic 2, rank <= 8: small-dimension module tables (Luebeck)");
    } else {
      rep.assumptions.push_back("characteristic 2, types C/D of rank >= 9: Smith's restriction theorem");
    }
    return rep;
  }

  switch (family) {
    case Family::A: {
      const int r = rank;
      const std::string range = range_label(r, n);
      rep.inputs.emplace_back("range", range);
      const bool large = n >= factorial(r + 1);
      if (r == 5) {
        rep.value = power_quantity(n, mpq_class(5, 2), prec, "n^(5/2)");
        rep.guard_detail = "rank 5 bound, all n";
        rep.assumptions.push_back("A5: R_n <= n for n <= 2500 (module tables, Luebeck)");
      } else if (large) {
        Interval v = pow(Interval::from_mpz(n, prec), mpq_class(17, 5)) / Interval::from_int(long(r) * r * r, prec);
        rep.value = Quantity::of(v, "n^(17/5)/r^3");
        rep.guard_detail = "n >= (r+1)! = " + mpz_str(factorial(r + 1));
      } else {
        rep.value = power_quantity(n, mpq_class(19, 5), prec, "n^(19/5)");
        rep.guard_detail = "n < (r+1)! = " + mpz_str(factorial(r + 1)) + "; general bound";
      }
      if (!(r == 5) && large) rep.alternatives.emplace_back("general", power_quantity(n, mpq_class(19, 5), prec, "n^(19/5)"));
      rep.alternatives.emplace_back("counting", Quantity::of(bound2_value(r, n, prec), "2^r d (1 + log d)^(r-1)"));
      if (large) {
        if (r == 3 && n >= 24 && n <= 500) rep.assumptions.push_back("A3: R_500 < 200 (module tables, Luebeck)");
        if (r == 4 && n >= 120 && n < 720) rep.assumptions.push_back("A4: R_719 <= 170 (module tables, Luebeck)");
        if (r >= 1 && n >= std::max(mpz_class(6), factorial(r + 1))) {
          auto ratio = ratio_holds(r, n, policy);
          rep.checks.push_back({"ratio", "r+1 < 1.8 log n / log log n", ratio.certificate.verdict,
                                "(r+1) loglog n / log n in [" + ratio.constant.lo_string(10) + ", " +
                                    ratio.constant.hi_string(10) + "]"});
        }
      } else if (r != 5) {
        if (r <= 10) rep.assumptions.push_back("rank <= 10 below (r+1)!: module tables (Luebeck)");
        else if (r <= 18 && range == "mid" && n < pow_ui(r + 1, 4))
          rep.assumptions.push_back("rank 11..18, n < (r+1)^4: module tables (Luebeck)");
      }
      break;
    }
    case Family::C:
      rep.value = Quantity::of(n * n, "n^2");
      rep.guard_detail = n < 4 ? "n < 4: only the trivial module qualifies (smallest nontrivial dimension 4)" : "n >= 4";
      rep.assumptions.push_back("smallest nontrivial dimension for C2 is 4 (Luebeck)");
      rep.checks.push_back(zeta_check("zeta.C", 2, ZetaForm::single, 4, policy));
      break;
    case Family::B:
      if (rank == 2) {
        rep.value = Quantity::of(n * n, "n^2");
        rep.guard_detail = "B2 = C2";
        rep.checks.push_back(zeta_check("zeta.C", 2, ZetaForm::single, 4, policy));
      } else {
        rep.value = power_quantity(n, mpq_class(9, 4), prec, "n^(9/4)");
        rep.guard_detail = n < 7 ? "n < 7: only the trivial module qualifies (smallest nontrivial dimension 7)" : "n >= 7";
        rep.assumptions.push_back("smallest nontrivial dimension for B3 is 7 (Luebeck)");
        rep.checks.push_back(zeta_check("zeta.B", mpq_class(9, 4), ZetaForm::product, 7, policy));
      }
      break;
    case Family::D:
      if (rank == 3) {
        rep.value = Quantity::of(n * n, "n^2");
        rep.guard_detail = "D3 = A3";
        if (n <= 23) {
          rep.assumptions.push_back("D3, n <= 23: module tables (Luebeck)");
        } else {
          auto cert = certify(
              Relation::less,
              [&](mpfr_prec_t pr) {
                return std::make_pair(bound2_value(3, n, pr), Interval::from_mpz(n * n, pr));
              },
              policy);
          rep.checks.push_back({"d3.counting", "2(n+3)(1 + log((n+3)/4))^2 < n^2", cert.verdict,
                                "at " + std::to_string(cert.precision) + " bits"});
        }
      } else {
        rep.value = power_quantity(n, mpq_class(9, 4), prec, "n^(9/4)");
        rep.guard_detail = n < 8 ? "n < 8: only the trivial module qualifies (smallest nontrivial dimension 8)" : "n >= 8";
        rep.assumptions.push_back("smallest nontrivial dimension for D4 is 8 (Luebeck)");
        rep.checks.push_back(zeta_check("zeta.D", mpq_class(9, 4), ZetaForm::product, 8, policy));
      }
      break;
    case Family::E: {
      const long mind = rank == 6 ? 27 : rank == 7 ? 56 : 248;
      const mpq_class s = rank == 6 ? mpq_class(5, 2) : mpq_class(9, 4);
      rep.value = power_quantity(n, s, prec, rank == 6 ? "n^(5/2)" : "n^(9/4)");
      rep.guard_detail = n < mind ? "n < " + std::to_string(mind) + ": only the trivial module qualifies"
                                  : "n >= " + std::to_string(mind);
      rep.assumptions.push_back("smallest nontrivial dimension for " + label + " is " + std::to_string(mind) +
                                " (Luebeck)");
      rep.checks.push_back(zeta_check("zeta." + label, s, ZetaForm::single, mind, policy));
      break;
    }
    case Family::F:
      rep.value = Quantity::of(n * n, "n^2");
      rep.guard_detail = n < 25 ? "n < 25: only the trivial module qualifies" : "n >= 25";
      rep.assumptions.push_back("smallest nontrivial dimension for F4 is 25 (Luebeck)");
      rep.checks.push_back(zeta_check("zeta.F4", 2, ZetaForm::single, 25, policy));
      break;
    case Family::G:
      rep.value = Quantity::of(n * n, "n^2");
      rep.guard_detail = "G2";
      rep.assumptions.push_back("G2: R_n <= n^2 (stated without a computation here)");
      break;
  }
  for (const auto& c : rep.checks)
    if (c.verdict == Verdict::fails) rep.valid = false;
  return rep;
}

}  // namespace repgrowth
