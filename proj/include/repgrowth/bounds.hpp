#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "repgrowth/dominance.hpp"
#include "repgrowth/interval.hpp"

namespace repgrowth {

enum class QuantityKind { exact, interval, external };

const char* quantity_kind_name(QuantityKind k);

/// A numeric value tagged with how far it can be trusted.
struct Quantity {
  QuantityKind kind = QuantityKind::exact;
  mpz_class exact;
  std::optional<Interval> interval;
  std::string text;  // formula or source note

  static Quantity of(mpz_class v, std::string text = {});
  static Quantity of(Interval v, std::string text = {});
  static Quantity external(std::string text);
  /// Enclosure of the value at the given precision (exact values are point
  /// intervals). Not defined for external quantities.
  Interval enclosure(mpfr_prec_t prec) const;
};

struct CheckResult {
  std::string id;
  std::string statement;
  Verdict verdict = Verdict::unknown;
  std::string detail;
};

struct BoundReport {
  std::string name;
  Quantity value;
  bool valid = true;
  std::string guard_detail;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, Quantity>> alternatives;
  std::vector<CheckResult> checks;
  std::vector<std::string> assumptions;  // facts taken from outside sources, not checked here
};

// ---------------------------------------------------------------------------
// Lower bounds on dim L(lambda)

/// N(lambda) = 1 + (r+1)(prod (1 + floor(a_i/2)) - 1), type A.
mpz_class n_lambda(const RootDatum& datum, const Weight& lambda);

/// Sum of W-orbit lengths over the saturated set below lambda.
mpz_class premet_sum(const RootDatum& datum, const Weight& lambda, std::size_t cap);

/// premet_sum wrapped with the hypotheses on p (restricted lambda; p != 2 for
/// two root lengths; p != 3 for G2). Cap overflow propagates as CapExceeded.
BoundReport premet_lower(const RootDatum& datum, const Weight& lambda, int p, std::size_t cap);

// ---------------------------------------------------------------------------
// Counting functions

struct HarmonicResult {
  mpq_class value;                          // 1 + 1/2 + ... + 1/floor(d)
  std::optional<Certificate> log_bound;     // h(d) < 1 + log d, for d >= 2
};

HarmonicResult harmonic(const mpq_class& d, PrecisionPolicy policy = {});

struct GCountResult {
  mpz_class count;         // r-tuples of positive integers with product <= d
  mpq_class analytic;      // d * h(d)^{r-1}
  bool within_analytic;    // count <= analytic, exact comparison
};

/// Throws std::runtime_error when the recursion needs more than `budget` calls.
GCountResult g_count(int r, const mpq_class& d, std::size_t budget = 10'000'000);

/// d = 1 + (n-1)/(r+1).
mpq_class bound2_argument(int r, const mpz_class& n);
/// 2^r d (1 + log d)^{r-1}.
Interval bound2_value(int r, const mpz_class& n, mpfr_prec_t prec);

struct RatioResult {
  Certificate certificate;  // r+1 < 1.8 log n / log log n
  Interval constant{64};    // (r+1) log log n / log n
};

/// Requires n >= max(6, (r+1)!).
RatioResult ratio_holds(int r, const mpz_class& n, PrecisionPolicy policy = {});

enum class FName { f1, f2, f3, f4, f5 };
FName parse_fname(const std::string& s);
const char* fname_str(FName f);

/// Interval value of f1..f5 at an integer argument (r for f1-f3, m for f4,
/// n for f5). Throws PreconditionError outside the domain.
Interval f_value(FName f, const mpz_class& arg, mpfr_prec_t prec);

/// d1 = binom(r+1, k+1) with k = floor((r-1)/2).
mpz_class range_d1(int r);
/// d2 = (r+2)^{2 floor(r/6)}.
mpz_class range_d2(int r);
/// d3 = (r+1)!/((k-1)!)^2, needs k >= 1.
mpz_class range_d3(int r);
/// d4 = 2^{m+1}.
mpz_class range_d4(int m);

/// (sum_{j=m}^{r} binom(r,j), (r+1)!/(m+1)!).
std::pair<mpz_class, mpz_class> char2_counts(int r, int m);

/// R_n upper bound for the given family, rank and characteristic.
BoundReport rn_upper(Family family, int rank, const mpz_class& n, int p, PrecisionPolicy policy = {});

// ---------------------------------------------------------------------------
// Zeta tails

/// Riemann zeta at rational s > 1, enclosed via Euler-Maclaurin with a
/// rigorous remainder bound.
Interval zeta(const mpq_class& s, mpfr_prec_t prec);

enum class ZetaForm {
  single,   // zeta(s) - 1 + 2^{-s}
  product,  // zeta(s)(zeta(s) - 1) + zeta(s) 2^{-s}
};

struct ZetaTailResult {
  Certificate coefficient_below_one;  // C < 1
  Certificate at_threshold;           // 1 + n0^s C < n0^s
  Interval coefficient{64};
  Verdict verdict = Verdict::unknown;  // holds for every n >= n0
};

/// Certifies 1 + n^s C < n^s for all integers n >= n0. The gap n^s(1-C) - 1
/// grows with n once C < 1, so checking C < 1 and n = n0 suffices.
ZetaTailResult zeta_tail_check(const mpq_class& s, ZetaForm form, long n0, PrecisionPolicy policy = {});

/// Rational form: C = zeta(s) - 1 + extra.
ZetaTailResult zeta_tail_check(const mpq_class& s, const mpq_class& extra, long n0, PrecisionPolicy policy = {});

}  // namespace repgrowth
