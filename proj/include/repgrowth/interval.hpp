#pragma once

#include <cstdio>
#include <functional>
#include <string>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

namespace repgrowth {

/// Closed real interval [lo, hi] with MPFR endpoints. Every operation rounds
/// the lower endpoint down and the upper endpoint up, so the true value of
/// any expression built from exact inputs stays enclosed.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval from_int(long v, mpfr_prec_t prec);
  static Interval from_mpz(const mpz_class& v, mpfr_prec_t prec);
  static Interval from_mpq(const mpq_class& v, mpfr_prec_t prec);
  /// Encloses a decimal literal such as "12.32" or "1e13".
  static Interval from_string(const std::string& s, mpfr_prec_t prec);
  static Interval pi(mpfr_prec_t prec);
  static Interval log2_const(mpfr_prec_t prec);
  /// [a.lo, b.hi]; requires a.lo <= b.hi.
  static Interval span(const Interval& a, const Interval& b);

  mpfr_prec_t precision() const { return prec_; }
  const __mpfr_struct* lower() const { return lo_; }
  const __mpfr_struct* upper() const { return hi_; }
  double lo_double() const;
  double hi_double() const;
  double mid_double() const;
  /// Decimal endpoint strings (lower rounded down, upper rounded up).
  std::string lo_string(int digits = 20) const;
  std::string hi_string(int digits = 20) const;
  /// Exact endpoints in C99 hex-float form; from_hex inverts them.
  std::string lo_hex() const;
  std::string hi_hex() const;
  static Interval from_hex(const std::string& lo, const std::string& hi, mpfr_prec_t prec);

  bool contains_zero() const;
  bool is_positive() const;

  /// hi < other.lo
  bool certainly_less(const Interval& other) const;
  /// hi <= other.lo
  bool certainly_less_equal(const Interval& other) const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const;

  friend Interval exp(const Interval& x);
  friend Interval log(const Interval& x);
  friend Interval sqrt(const Interval& x);
  /// x^q for x > 0, rational q.
  friend Interval pow(const Interval& x, const mpq_class& q);
  /// x^n by repeated squaring; x may have any sign.
  friend Interval pow_int(const Interval& x, unsigned long n);

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

enum class Verdict { holds, fails, unknown };

const char* verdict_name(Verdict v);

enum class Relation { less, less_equal };

struct PrecisionPolicy {
  mpfr_prec_t start = 256;
  mpfr_prec_t ceiling = 1024;
};

/// Outcome of checking lhs (rel) rhs with adaptive precision.
struct Certificate {
  Verdict verdict = Verdict::unknown;
  Relation relation = Relation::less;
  mpfr_prec_t precision = 0;
  Interval lhs{64};
  Interval rhs{64};
};

using SidesAt = std::function<std::pair<Interval, Interval>(mpfr_prec_t)>;

/// Evaluates both sides at policy.start bits, doubling until the enclosures
/// separate or the ceiling is passed. At the ceiling the verdict is unknown.
Certificate certify(Relation rel, const SidesAt& sides, PrecisionPolicy policy = {});

}  // namespace repgrowth
