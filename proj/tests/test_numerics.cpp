#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "xns/complex_interval.hpp"
#include "xns/errors.hpp"
#include "xns/interval_matrix.hpp"
#include "xns/precision.hpp"

using namespace xns;
using xns::testing::NearDecimal;

TEST(RealInterval, ExactIntegersAndRationals) {
  RealInterval three(3, 128);
  EXPECT_TRUE(three.contains(3));
  EXPECT_EQ(three.width_double(), 0.0);
  RealInterval third = RealInterval::from_rational(make_rational(1, 3), 128);
  EXPECT_TRUE(third.contains(make_rational(1, 3)));
  EXPECT_FALSE(third.contains(0L));
  EXPECT_LT(third.width_double(), 1e-37);
}

TEST(RealInterval, PiEnclosure) {
  RealInterval pi = RealInterval::pi(128);
  EXPECT_TRUE(NearDecimal(pi, "3.14159265358979323846264338327950288", 1e-30));
  EXPECT_TRUE(RealInterval::from_strings("3.14159265358979323846", "3.14159265358979323847", 64).contains(pi));
  EXPECT_LT(pi.width_double(), 1e-37);
}

TEST(RealInterval, ElementaryFunctions) {
  const mpfr_prec_t prec = 200;
  RealInterval two(2, prec);
  EXPECT_TRUE(NearDecimal(log(two), "0.693147180559945309417232121458176568", 1e-30));
  EXPECT_TRUE(NearDecimal(exp(RealInterval(1, prec)), "2.71828182845904523536028747135266250", 1e-30));
  EXPECT_TRUE(NearDecimal(sqrt(two), "1.41421356237309504880168872420969808", 1e-30));
  RealInterval x = RealInterval::from_rational(make_rational(1, 7), prec) * RealInterval::pi(prec);
  EXPECT_TRUE(NearDecimal(sin(x), "0.433883739117558120475768332848358754", 1e-30));
  EXPECT_TRUE(NearDecimal(cos(x), "0.900968867902419126236102319507445051", 1e-30));
  EXPECT_TRUE(NearDecimal(pow(two, 100), "1267650600228229401496703205376", 1e-30));
}

TEST(RealInterval, DomainErrors) {
  EXPECT_THROW(log(RealInterval(0, 64)), DomainError);
  EXPECT_THROW(log(RealInterval::from_strings("-1", "1", 64)), DomainError);
  EXPECT_THROW(sqrt(RealInterval(-1, 64)), DomainError);
  EXPECT_THROW(RealInterval::from_strings("2", "1", 64), DomainError);
}

TEST(RealInterval, CertifiedComparisons) {
  RealInterval a(1, 64), b(2, 64);
  EXPECT_TRUE(certify_less(a, b));
  EXPECT_FALSE(certify_less(b, a));
  EXPECT_TRUE(certify_leq(a, a));
  RealInterval wide = RealInterval::from_strings("0", "3", 64);
  EXPECT_THROW(certify_less(wide, b), PrecisionExhausted);
  EXPECT_FALSE(certainly_less(wide, b));
}

TEST(RealInterval, DecimalRenderingIsDirected) {
  RealInterval third = RealInterval::from_rational(make_rational(1, 3), 128);
  EXPECT_EQ(certified_upper(third, 5), "3.3334e-1");
  EXPECT_EQ(certified_lower(third, 5), "3.3333e-1");
}

TEST(RealInterval, HexRoundTrip) {
  RealInterval x = log(RealInterval(10, 160));
  EXPECT_EQ(BigFloat::from_hex(x.lo().hex()), x.lo());
  EXPECT_EQ(BigFloat::from_hex(x.hi().hex()), x.hi());
}

// Interval evaluation must enclose the double-precision value of random expressions.
TEST(RealInterval, PropertyEnclosesPointEvaluation) {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> dist(0.1, 10.0);
  for (int i = 0; i < 200; ++i) {
    double u = dist(rng), v = dist(rng);
    RealInterval U = RealInterval::from_strings(std::to_string(u), std::to_string(u), 128);
    RealInterval V = RealInterval::from_strings(std::to_string(v), std::to_string(v), 128);
    RealInterval e = log(U * V) - log(U) - log(V);
    EXPECT_TRUE(e.contains_zero());
    EXPECT_LT(e.width_double(), 1e-30);
    RealInterval s = square(sin(U)) + square(cos(U));
    EXPECT_TRUE(s.contains(1));
  }
}

TEST(ComplexInterval, RootsOfUnity) {
  const mpfr_prec_t prec = 128;
  ComplexInterval prod = ComplexInterval::unit_root(1, 0 + 7, prec);
  ComplexInterval acc = prod;
  for (int k = 1; k < 7; ++k) acc *= prod;
  EXPECT_TRUE(acc.re().contains(1));
  EXPECT_TRUE(acc.im().contains(0L));
  ComplexInterval sum(prec);
  for (int k = 0; k < 7; ++k) sum += ComplexInterval::unit_root(k, 7, prec);
  EXPECT_TRUE(sum.contains_zero());
  EXPECT_TRUE(abs(ComplexInterval::unit_root(3, 7, prec)).contains(1));
}

TEST(ComplexInterval, LogAbsAndDivision) {
  const mpfr_prec_t prec = 128;
  ComplexInterval z(RealInterval(3, prec), RealInterval(4, prec));
  EXPECT_TRUE(abs(z).contains(5));
  EXPECT_TRUE(NearDecimal(log_abs(z), "1.60943791243410037460075933322618764", 1e-30));
  ComplexInterval w = z / z;
  EXPECT_TRUE(w.re().contains(1));
  EXPECT_TRUE(w.im().contains(0L));
}

TEST(IntervalMatrix, InverseOfKnownMatrix) {
  IntervalMatrix m(2, 2, 128);
  m(0, 0) = RealInterval(2, 128);
  m(0, 1) = RealInterval(1, 128);
  m(1, 0) = RealInterval(1, 128);
  m(1, 1) = RealInterval(1, 128);
  InverseResult inv = invert(m);
  EXPECT_TRUE(inv.determinant.contains(1));
  EXPECT_TRUE(inv.inverse(0, 0).contains(1));
  EXPECT_TRUE(inv.inverse(0, 1).contains(-1));
  EXPECT_TRUE(inv.inverse(1, 1).contains(2));
  IntervalMatrix id = m * inv.inverse;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) EXPECT_TRUE(id(r, c).contains(r == c ? 1 : 0));
}

TEST(IntervalMatrix, SingularMatrix) {
  IntervalMatrix m(2, 2, 128);
  m(0, 0) = RealInterval(1, 128);
  m(0, 1) = RealInterval(2, 128);
  m(1, 0) = RealInterval(2, 128);
  m(1, 1) = RealInterval(4, 128);
  EXPECT_THROW(invert(m), PrecisionExhausted);
  EXPECT_FALSE(try_determinant(m).has_value() && !try_determinant(m)->contains_zero());
}

TEST(IntervalMatrix, PropertyRandomInverse) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int trial = 0; trial < 25; ++trial) {
    IntervalMatrix m(4, 4, 128);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = RealInterval(dist(rng) + (r == c ? 40 : 0), 128);
    InverseResult inv = invert(m);
    IntervalMatrix id = inv.inverse * m;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) EXPECT_TRUE(id(r, c).contains(r == c ? 1 : 0));
    EXPECT_FALSE(inv.determinant.contains_zero());
  }
}

TEST(Precision, WithPrecisionDoublesUntilSuccess) {
  std::vector<mpfr_prec_t> seen;
  mpfr_prec_t got = with_precision(PrecisionPolicy{64, 1024}, [&](mpfr_prec_t bits) {
    seen.push_back(bits);
    if (bits < 256) throw PrecisionExhausted("not yet");
    return bits;
  });
  EXPECT_EQ(got, 256);
  EXPECT_EQ(seen, (std::vector<mpfr_prec_t>{64, 128, 256}));
  EXPECT_THROW(with_precision(PrecisionPolicy{64, 128},
                              [](mpfr_prec_t) -> int { throw PrecisionExhausted("never"); }),
               PrecisionExhausted);
}

TEST(Precision, IntervalEvalReachesTarget) {
  RealInterval v = interval_eval([](mpfr_prec_t bits) { return log(RealInterval(3, bits)); }, 1e-60);
  EXPECT_LE(v.relative_width(), 1e-60);
  EXPECT_THROW(interval_eval([](mpfr_prec_t bits) { return log(RealInterval(3, bits)); }, 1e-300,
                             PrecisionPolicy{64, 256}),
               PrecisionExhausted);
}
