#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "xns/cyclotomic.hpp"
#include "xns/errors.hpp"
#include "xns/units.hpp"

using namespace xns;
using xns::testing::NearDecimal;

namespace {

CycloNumber random_element(int p, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  std::vector<Rational> full(p);
  for (auto& c : full) c = make_rational(num(rng), den(rng));
  return CycloNumber::from_exponents(p, full);
}

CycloNumber norm_K_to_Q(const CycloNumber& x, const CartanContext& ctx) {
  CycloNumber acc = CycloNumber::one(ctx.p);
  for (int rep : ctx.coset_reps) acc *= x.galois(rep);
  return acc;
}

}  // namespace

TEST(CycloNumber, ZeroSumRelation) {
  CycloNumber sum(7);
  for (int k = 0; k < 7; ++k) sum += CycloNumber::zeta_power(7, k);
  EXPECT_TRUE(sum.is_zero());
  EXPECT_EQ(CycloNumber::zeta_power(7, 7), CycloNumber::one(7));
  EXPECT_EQ(CycloNumber::zeta_power(7, -1), CycloNumber::zeta_power(7, 6));
  EXPECT_EQ(CycloNumber::one(7).as_rational(), Rational(1));
}

TEST(CycloNumber, GaloisExamples) {
  const int p = 11;
  CycloNumber z = CycloNumber::zeta_power(p, 1);
  for (int a = 1; a < p; ++a) EXPECT_EQ(z.galois(a), CycloNumber::zeta_power(p, a));
  std::mt19937 rng(1);
  CycloNumber x = random_element(p, rng);
  EXPECT_EQ(x.galois(1), x);
  EXPECT_EQ(x.galois(2).galois(4), x.galois(8));
}

TEST(CycloNumber, PropertyRingAxiomsAndGaloisHomomorphism) {
  std::mt19937 rng(2024);
  for (int p : {7, 11, 13}) {
    for (int trial = 0; trial < 20; ++trial) {
      CycloNumber x = random_element(p, rng), y = random_element(p, rng), z = random_element(p, rng);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ(x * y, y * x);
      int a = 2 + trial % (p - 2), b = 1 + (3 * trial) % (p - 1);
      EXPECT_EQ((x * y).galois(a), x.galois(a) * y.galois(a));
      EXPECT_EQ(x.galois(a).galois(b), x.galois(1L * a * b));
      EXPECT_EQ(x.times_zeta(trial), x * CycloNumber::zeta_power(p, trial));
      EXPECT_EQ(x.pow(3), x * x * x);
    }
  }
}

TEST(CycloNumber, PropertyEmbeddingIsMultiplicative) {
  std::mt19937 rng(99);
  const mpfr_prec_t prec = 128;
  for (int trial = 0; trial < 20; ++trial) {
    CycloNumber x = random_element(7, rng), y = random_element(7, rng);
    for (int a = 1; a < 7; ++a) {
      ComplexInterval lhs = embed(x * y, a, prec);
      ComplexInterval rhs = embed(x, a, prec) * embed(y, a, prec);
      ComplexInterval diff = lhs - rhs;
      EXPECT_TRUE(diff.contains_zero());
      ComplexInterval conj = embed(x, 7 - a, prec).conj() - embed(x, a, prec);
      EXPECT_TRUE(conj.contains_zero());
    }
  }
}

TEST(CycloNumber, IntegralityAndDenominators) {
  CycloNumber x = CycloNumber::one_minus_zeta(7, 3) * make_rational(5, 6);
  EXPECT_FALSE(x.is_integral());
  EXPECT_EQ(x.denominator(), Integer(6));
  EXPECT_TRUE(CycloNumber::one_minus_zeta(7, 3).is_integral());
}

TEST(NormToK, Examples) {
  CartanContext ctx = build_context(7, 3);
  CycloNumber x = CycloNumber::zeta_power(7, 2) + CycloNumber::zeta_power(7, 5);  // real
  EXPECT_EQ(norm_to_K(x, ctx, NormSource::Plus), x);
  EXPECT_EQ(norm_to_K(CycloNumber::one(7), ctx, NormSource::Full), CycloNumber::one(7));

  CycloNumber mu = norm_to_K(CycloNumber::one_minus_zeta(7, 1), ctx, NormSource::Full);
  EXPECT_EQ(mu, CycloNumber::one_minus_zeta(7, 1) * CycloNumber::one_minus_zeta(7, 6));
  EXPECT_TRUE(mu.is_real());
  EXPECT_EQ(norm_K_to_Q(mu, ctx).as_rational(), Rational(7));
}

TEST(NormToK, PropertyFixedByH) {
  std::mt19937 rng(5);
  for (auto [p, d] : std::vector<std::pair<int, int>>{{13, 3}, {13, 6}, {19, 3}, {19, 9}}) {
    CartanContext ctx = build_context(p, d);
    CycloNumber x = random_element(p, rng);
    CycloNumber n = norm_to_K(x, ctx, NormSource::Full);
    for (int h : ctx.H) EXPECT_EQ(n.galois(h), n);
    Rational expected = 1;
    for (size_t i = 0; i < ctx.H.size(); ++i) expected *= norm_to_Q(x);
    EXPECT_EQ(norm_to_Q(n), expected);
  }
}

TEST(NormToQ, OneMinusZetaHasNormP) {
  for (int p : {7, 11, 13, 17}) EXPECT_EQ(norm_to_Q(CycloNumber::one_minus_zeta(p, 1)), Rational(p));
}

TEST(Height, RootOfUnityIsZero) {
  RealInterval h = height(CycloNumber::zeta_power(7, 1), 128);
  EXPECT_TRUE(h.contains_zero());
}

TEST(Height, XiOne) {
  RealInterval h = height(cyclotomic_xi(7, 1), 128);
  EXPECT_TRUE(NearDecimal(h, "0.2698623053482375708529605"));
  EXPECT_TRUE(certify_leq(h, 2 * log(RealInterval(2, 128))));
}

TEST(Height, OneMinusZeta) {
  RealInterval h = height(CycloNumber::one_minus_zeta(7, 1), 128);
  EXPECT_TRUE(NearDecimal(h, "0.3715955189846339721664529"));
  EXPECT_TRUE(certify_leq(h, log(RealInterval(2, 128))));
}

TEST(Height, PropertyPowerScaling) {
  CycloNumber x = cyclotomic_xi(11, 2);
  RealInterval h1 = height(x, 192);
  for (unsigned n : {2u, 3u, 5u}) {
    RealInterval hn = height(x.pow(n), 192);
    EXPECT_TRUE((hn - h1 * static_cast<long>(n)).contains_zero()) << n;
    PowerProduct pp(x, Integer(n));
    EXPECT_TRUE((height(pp, 192) - hn).contains_zero());
  }
}

TEST(LogAbs, ZeroAndOne) {
  CartanContext ctx = build_context(7, 3);
  for (const auto& v : log_abs_embeddings(CycloNumber::one(7), ctx, 128)) EXPECT_TRUE(v.contains_zero());
  EXPECT_THROW(log_abs_at(CycloNumber::zero(7), 1, 128), ZeroElement);
}

TEST(LogAbs, EtaWithinCeilingAndUnitNormVanishes) {
  CartanContext ctx = build_context(7, 3);
  RealInterval ceiling = log(RealInterval::from_rational(make_rational(7, 2), 128));
  for (int j = 1; j <= 2; ++j) {
    CycloNumber eta = norm_to_K(cyclotomic_xi(7, j), ctx, NormSource::Plus);
    RealInterval sum(128);
    for (const auto& v : log_abs_embeddings(eta, ctx, 128)) {
      EXPECT_TRUE(certify_less(abs(v), ceiling));
      sum += v;
    }
    EXPECT_TRUE(sum.contains_zero());
    EXPECT_LT(sum.width_double(), 1e-30);
  }
}

TEST(PowerProduct, LogsScaleWithExponent) {
  CycloNumber base = CycloNumber::one_minus_zeta(13, 2);
  PowerProduct pp(base, Integer("1000000000000000000000"));
  RealInterval expected = log_abs_at(base, 3, 256) * RealInterval::from_integer(Integer("1000000000000000000000"), 256);
  EXPECT_TRUE((log_abs_at(pp, 3, 256) - expected).contains_zero());
  PowerProduct prod = pp;
  prod *= pp.inverse();
  for (const auto& v : log_abs_all(prod, 128)) EXPECT_TRUE(v.contains_zero());
  EXPECT_EQ(PowerProduct(base, Integer(3)).expand(), base.pow(3));
  EXPECT_EQ(PowerProduct(base, Integer(3)).galois(5).expand(), base.galois(5).pow(3));
}
