#include "repgrowth/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace repgrowth {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other) {}

Interval& Interval::operator=(const Interval& other) {
  if (this == &other) return *this;
  prec_ = other.prec_;
  mpfr_set_prec(lo_, prec_);
  mpfr_set_prec(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  if (this != &other) {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    std::swap(prec_, other.prec_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_int(long v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::from_mpz(const mpz_class& v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_mpq(const mpq_class& v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_string(const std::string& s, mpfr_prec_t prec) {
  Interval r(prec);
  if (mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0 && mpfr_nan_p(r.lo_))
    throw std::invalid_argument("bad decimal literal " + s);
  mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::log2_const(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_log2(r.lo_, MPFR_RNDD);
  mpfr_const_log2(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::span(const Interval& a, const Interval& b) {
  if (mpfr_greater_p(a.lo_, b.hi_)) throw std::invalid_argument("Interval::span: empty span");
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_set(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_set(r.hi_, b.hi_, MPFR_RNDU);
  return r;
}

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double Interval::mid_double() const { return 0.5 * (lo_double() + hi_double()); }

namespace {

std::string endpoint_string(const __mpfr_struct* x, mpfr_rnd_t rnd, int digits) {
  if (mpfr_zero_p(x)) return "0";
  if (mpfr_inf_p(x)) return mpfr_sgn(x) > 0 ? "inf" : "-inf";
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, x, rnd);
  std::string digits_str(s);
  mpfr_free_str(s);
  std::string sign;
  if (!digits_str.empty() && digits_str[0] == '-') {
    sign = "-";
    digits_str.erase(0, 1);
  }
  // d.ddddde(E-1)
  std::string out = sign + digits_str.substr(0, 1);
  if (digits_str.size() > 1) out += "." + digits_str.substr(1);
  out += "e" + std::to_string(static_cast<long>(e) - 1);
  return out;
}

}  // namespace

std::string Interval::lo_string(int digits) const { return endpoint_string(lo_, MPFR_RNDD, digits); }
std::string Interval::hi_string(int digits) const { return endpoint_string(hi_, MPFR_RNDU, digits); }

namespace {

std::string hex_of(const __mpfr_struct* x) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%Ra", x);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

void set_hex(__mpfr_struct* x, const std::string& s, mpfr_rnd_t rnd) {
  char* end = nullptr;
  mpfr_strtofr(x, s.c_str(), &end, 0, rnd);
  if (end == s.c_str() || *end != '\0') throw std::invalid_argument("bad hex-float endpoint " + s);
}

}  // namespace

std::string Interval::lo_hex() const { return hex_of(lo_); }
std::string Interval::hi_hex() const { return hex_of(hi_); }

Interval Interval::from_hex(const std::string& lo, const std::string& hi, mpfr_prec_t prec) {
  Interval r(prec);
  set_hex(r.lo_, lo, MPFR_RNDD);
  set_hex(r.hi_, hi, MPFR_RNDU);
  if (mpfr_greater_p(r.lo_, r.hi_)) throw std::invalid_argument("interval endpoints out of order");
  return r;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
bool Interval::is_positive() const { return mpfr_sgn(lo_) > 0; }

bool Interval::certainly_less(const Interval& other) const { return mpfr_less_p(hi_, other.lo_) != 0; }
bool Interval::certainly_less_equal(const Interval& other) const { return mpfr_lessequal_p(hi_, other.lo_) != 0; }

namespace {
mpfr_prec_t join_prec(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }
}  // namespace

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(join_prec(a, b));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(join_prec(a, b));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-() const {
  Interval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const mpfr_prec_t prec = join_prec(a, b);
  Interval r(prec);
  const __mpfr_struct* xs[2] = {a.lo_, a.hi_};
  const __mpfr_struct* ys[2] = {b.lo_, b.hi_};
  mpfr_t down, up;
  mpfr_init2(down, prec);
  mpfr_init2(up, prec);
  bool first = true;
  for (auto x : xs) {
    for (auto y : ys) {
      mpfr_mul(down, x, y, MPFR_RNDD);
      mpfr_mul(up, x, y, MPFR_RNDU);
      if (first || mpfr_less_p(down, r.lo_)) mpfr_set(r.lo_, down, MPFR_RNDD);
      if (first || mpfr_greater_p(up, r.hi_)) mpfr_set(r.hi_, up, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(down);
  mpfr_clear(up);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by an enclosure of zero");
  const mpfr_prec_t prec = join_prec(a, b);
  Interval inv(prec);
  // 1/[lo,hi] = [1/hi, 1/lo] for intervals of one sign.
  mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
  return a * inv;
}

Interval exp(const Interval& x) {
  Interval r(x.prec_);
  mpfr_exp(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval log(const Interval& x) {
  if (!x.is_positive()) throw std::domain_error("log of an interval not bounded away from zero");
  Interval r(x.prec_);
  mpfr_log(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.lo_) < 0) throw std::domain_error("sqrt of an interval reaching below zero");
  Interval r(x.prec_);
  mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval pow(const Interval& x, const mpq_class& q) {
  if (q == 0) return Interval::from_int(1, x.prec_);
  return exp(Interval::from_mpq(q, x.prec_) * log(x));
}

Interval pow_int(const Interval& x, unsigned long n) {
  Interval result = Interval::from_int(1, x.prec_);
  Interval base = x;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

Certificate certify(Relation rel, const SidesAt& sides, PrecisionPolicy policy) {
  if (policy.start < MPFR_PREC_MIN || policy.ceiling < policy.start)
    throw std::invalid_argument("bad precision policy");
  Certificate cert;
  cert.relation = rel;
  for (mpfr_prec_t prec = policy.start; prec <= policy.ceiling; prec *= 2) {
    auto [lhs, rhs] = sides(prec);
    cert.precision = prec;
    const bool holds = rel == Relation::less ? lhs.certainly_less(rhs) : lhs.certainly_less_equal(rhs);
    // Negation of lhs < rhs is rhs <= lhs; of lhs <= rhs is rhs < lhs.
    const bool fails = rel == Relation::less ? rhs.certainly_less_equal(lhs) : rhs.certainly_less(lhs);
    cert.lhs = std::move(lhs);
    cert.rhs = std::move(rhs);
    if (holds) {
      cert.verdict = Verdict::holds;
      return cert;
    }
    if (fails) {
      cert.verdict = Verdict::fails;
      return cert;
    }
  }
  cert.verdict = Verdict::unknown;
  return cert;
}

}  // namespace repgrowth
