#include <cmath>

#include "doctest.h"
#include "repgrowth/bounds.hpp"

using namespace repgrowth;

namespace {

bool contains(const Interval& x, const std::string& decimal) {
  Interval d = Interval::from_string(decimal, x.precision());
  // the decimal literal is itself rounded to 40 digits
  Interval slack = Interval::from_string("1e-35", x.precision());
  return (x - d - slack).lo_double() <= 0 && (x - d + slack).hi_double() >= 0;
}

}  // namespace

TEST_SUITE("interval") {
  TEST_CASE("constants are enclosed") {
    Interval pi = Interval::pi(256);
    CHECK(contains(pi, "3.141592653589793238462643383279502884197"));
    CHECK(contains(Interval::log2_const(256), "0.6931471805599453094172321214581765680755"));
    CHECK(Interval::from_mpq(mpq_class(1, 3), 128).contains_zero() == false);
    CHECK(Interval::from_int(0, 64).contains_zero());
  }

  TEST_CASE("arithmetic keeps the true value inside") {
    const mpfr_prec_t p = 200;
    Interval third = Interval::from_mpq(mpq_class(1, 3), p);
    Interval one = third * Interval::from_int(3, p);
    CHECK(one.lo_double() <= 1.0);
    CHECK(one.hi_double() >= 1.0);
    Interval e = exp(Interval::from_int(1, p));
    CHECK(contains(log(e), "1"));
    CHECK(contains(sqrt(Interval::from_int(2, p)) * sqrt(Interval::from_int(2, p)), "2"));
    CHECK(contains(pow(Interval::from_int(8, p), mpq_class(2, 3)), "4"));
    CHECK(contains(pow_int(Interval::from_int(-3, p), 3), "-27"));
    CHECK(contains(-Interval::from_int(5, p) / Interval::from_int(2, p), "-2.5"));
  }

  TEST_CASE("decimal literals") {
    Interval x = Interval::from_string("12.32", 128);
    CHECK(x.lo_double() <= 12.32);
    CHECK(x.hi_double() >= 12.32);
    CHECK(contains(Interval::from_string("1e13", 128), "10000000000000"));
  }

  TEST_CASE("hex endpoints round-trip exactly") {
    Interval z = zeta(mpq_class(9, 4), 256);
    Interval back = Interval::from_hex(z.lo_hex(), z.hi_hex(), z.precision());
    CHECK(back.lo_hex() == z.lo_hex());
    CHECK(back.hi_hex() == z.hi_hex());
    CHECK_THROWS(Interval::from_hex("nonsense", "0x1p0", 64));
  }

  TEST_CASE("span") {
    Interval a = Interval::from_int(1, 64), b = Interval::from_int(2, 64);
    Interval s = Interval::span(a, b);
    CHECK(s.lo_double() == 1.0);
    CHECK(s.hi_double() == 2.0);
    CHECK_THROWS(Interval::span(b, a));
  }

  TEST_CASE("certify decides strict inequalities") {
    auto c = certify(Relation::less, [](mpfr_prec_t p) {
      return std::make_pair(Interval::from_int(1, p), sqrt(Interval::from_int(2, p)));
    });
    CHECK(c.verdict == Verdict::holds);
    CHECK(c.precision == 256);
    auto f = certify(Relation::less, [](mpfr_prec_t p) {
      return std::make_pair(Interval::from_int(2, p), sqrt(Interval::from_int(2, p)));
    });
    CHECK(f.verdict == Verdict::fails);
  }

  TEST_CASE("certify reports unknown at the ceiling") {
    // equal sides never separate
    auto c = certify(Relation::less, [](mpfr_prec_t p) {
      return std::make_pair(sqrt(Interval::from_int(2, p)), sqrt(Interval::from_int(2, p)));
    });
    CHECK(c.verdict == Verdict::unknown);
    CHECK(c.precision == 1024);
    auto le = certify(Relation::less_equal, [](mpfr_prec_t p) {
      return std::make_pair(Interval::from_int(3, p), Interval::from_int(3, p));
    });
    CHECK(le.verdict == Verdict::holds);
  }

  TEST_CASE("precision escalates when needed") {
    // 1 + 2^-300 vs 1: separable only above 300 bits
    auto c = certify(Relation::less, [](mpfr_prec_t p) {
      Interval tiny = pow_int(Interval::from_mpq(mpq_class(1, 2), p), 300);
      return std::make_pair(Interval::from_int(1, p), Interval::from_int(1, p) + tiny);
    });
    CHECK(c.verdict == Verdict::holds);
    CHECK(c.precision == 512);
  }

  TEST_CASE("bad precision policies are rejected") {
    CHECK_THROWS(certify(Relation::less, [](mpfr_prec_t p) {
      return std::make_pair(Interval::from_int(1, p), Interval::from_int(2, p));
    }, PrecisionPolicy{512, 256}));
  }
}
