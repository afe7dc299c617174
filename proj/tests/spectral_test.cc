#include "gauss/spectral.h"

#include "gtest/gtest.h"

#include "oracle.h"
#include "properties.h"

namespace gauss {
namespace {

constexpr std::int64_t kPrimesTo31[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31};

UnitFunction Trivial(std::int64_t p, std::int64_t n = 2) {
  return UnitFunction(PrimeModulus(p), UnityOrder(n), std::vector<std::int64_t>(p - 1, 0));
}

UnitFunction Remark() { return UnitFunction(PrimeModulus(3), UnityOrder(6), {0, 5}); }

std::optional<Integer> NormOf(const SpectralValue& v) { return as_integer(norm_squared(v.value)); }

TEST(GaussSumTest, Examples) {
  for (std::int64_t p : {3, 5, 7, 13}) {
    EXPECT_EQ(as_integer(gauss_sum(Trivial(p)).value), Integer(-1)) << p;
    const UnitFunction minus_one(PrimeModulus(p), UnityOrder(2), std::vector<std::int64_t>(p - 1, 1));
    EXPECT_EQ(as_integer(gauss_sum(minus_one).value), Integer(1)) << p;
  }
  EXPECT_EQ(NormOf(gauss_sum(Remark())), Integer(3));
  EXPECT_EQ(gauss_sum(Remark()).value.context().order, 6);
}

TEST(GaussSumTest, MatchesDirectSummation) {
  for (auto [p, n] : {std::pair{5, 4}, {7, 3}, {3, 6}}) {
    UnitFunctionStream stream(PrimeModulus(p), UnityOrder(n), false, {});
    while (auto f = stream.next()) {
      EXPECT_TRUE(testing::near(testing::numeric(gauss_sum(*f).value), testing::numeric_sum(*f, 1)))
          << f->to_string();
    }
  }
}

TEST(GaussSumTest, NontrivialCharactersHaveNormP) {
  for (std::int64_t q : kPrimesTo31) {
    const PrimeModulus p(q);
    for (const Character& chi : enumerate_characters(p, UnityOrder(q - 1))) {
      const auto norm = NormOf(gauss_sum(character_function(chi)));
      if (chi.is_trivial()) {
        EXPECT_EQ(norm, Integer(1)) << q;
      } else {
        EXPECT_EQ(norm, Integer(q)) << q << " j=" << chi.index;
      }
    }
  }
}

TEST(TwistedGaussSumTest, Examples) {
  const UnitFunction f(PrimeModulus(7), UnityOrder(3), {0, 2, 1, 1, 0, 2});
  EXPECT_EQ(twisted_gauss_sum(f, 1).value, gauss_sum(f).value);
  EXPECT_EQ(twisted_gauss_sum(f, 8).value, gauss_sum(f).value);
  for (std::int64_t a = 1; a < 7; ++a) {
    EXPECT_EQ(as_integer(twisted_gauss_sum(Trivial(7), a).value), Integer(-1));
  }
  EXPECT_THROW(twisted_gauss_sum(f, 0), ZeroDivisor);
  EXPECT_THROW(twisted_gauss_sum(f, 14), ZeroDivisor);
}

TEST(TwistedGaussSumTest, ChangeOfVariables) {
  for (std::int64_t q : {5, 7, 11, 13}) {
    const PrimeModulus p(q);
    for (const Character& chi : enumerate_characters(p, UnityOrder(q - 1))) {
      if (chi.is_trivial()) continue;
      const UnitFunction f = character_function(chi);
      const UnityOrder l = spectral_order(f);
      const CyclotomicElement tau = gauss_sum(f).value;
      for (std::int64_t a = 1; a < q; ++a) {
        // x = a^-1 m: sum_x f(x) e(a x / p) = tau of m -> f(a^-1 m).
        const std::int64_t inv = mod_inverse(a, p);
        std::vector<std::int64_t> exps(q - 1);
        for (std::int64_t m = 1; m < q; ++m) exps[m - 1] = f.exp_at(inv * m);
        const UnitFunction substituted(p, f.order(), std::move(exps));
        const CyclotomicElement twisted = twisted_gauss_sum(f, a).value;
        EXPECT_EQ(twisted, gauss_sum(substituted).value);
        const CyclotomicElement chi_a = embed(zeta_pow(f.order(), f.exp_at(a)), l);
        EXPECT_EQ(twisted, conjugate(chi_a) * tau) << q << " j=" << chi.index << " a=" << a;
      }
    }
  }
}

TEST(FourierSumTest, Examples) {
  const UnitFunction leg3 = legendre_function(PrimeModulus(3));
  const UnityOrder six(6);
  // zeta_3^2 - zeta_3 inside Z[zeta_6].
  const CyclotomicElement expected = zeta_pow(six, 4) - zeta_pow(six, 2);
  EXPECT_EQ(fourier_sum(leg3, 1).value, expected);
  EXPECT_EQ(NormOf(fourier_sum(leg3, 1)), Integer(3));

  for (std::int64_t xi = 1; xi < 7; ++xi) EXPECT_EQ(as_integer(fourier_sum(Trivial(7), xi).value), Integer(-1));

  const UnitFunction f(PrimeModulus(5), UnityOrder(4), {0, 3, 1, 1});
  const UnityOrder l = spectral_order(f);
  CyclotomicElement total = CyclotomicElement::zero(l);
  for (std::int64_t x = 1; x < 5; ++x) total = total + embed(zeta_pow(f.order(), f.exp_at(x)), l);
  EXPECT_EQ(fourier_sum(f, 0).value, total);
  EXPECT_EQ(fourier_sum(f, 5).value, total);
  for (std::int64_t xi = 1; xi < 5; ++xi) EXPECT_EQ(fourier_sum(f, xi).value, twisted_gauss_sum(f, -xi).value);
}

TEST(FourierSumTest, MatchesDirectSummation) {
  UnitFunctionStream stream(PrimeModulus(7), UnityOrder(3), false, {});
  while (auto f = stream.next()) {
    for (std::int64_t xi = 0; xi < 7; ++xi) {
      EXPECT_TRUE(testing::near(testing::numeric(fourier_sum(*f, xi).value), testing::numeric_sum(*f, -xi)));
    }
  }
}

TEST(UnitMagnitudeTest, Examples) {
  EXPECT_TRUE(has_unit_fourier_magnitude(legendre_function(PrimeModulus(3)), 1));
  for (std::int64_t a = 1; a < 7; ++a) EXPECT_FALSE(has_unit_fourier_magnitude(Trivial(7), a));
  EXPECT_TRUE(has_unit_fourier_magnitude(Remark(), 2));
  EXPECT_THROW(has_unit_fourier_magnitude(Remark(), 0), ZeroDivisor);
}

TEST(SpectralCharacterTest, Examples) {
  const SpectralVerdict leg = spectral_character_test(legendre_function(PrimeModulus(7)));
  EXPECT_TRUE(leg.is_character);
  EXPECT_EQ(leg.witness, 1);
  const SpectralVerdict triv = spectral_character_test(Trivial(7));
  EXPECT_FALSE(triv.is_character);
  EXPECT_FALSE(triv.witness.has_value());

  const UnitFunction f(PrimeModulus(5), UnityOrder(2), {0, 0, 0, 1});
  EXPECT_FALSE(spectral_character_test(f).is_character);
  for (std::int64_t xi = 1; xi < 5; ++xi) {
    EXPECT_GT(std::abs(std::norm(testing::numeric_sum(f, -xi)) - 5.0), 0.5) << xi;
  }
}

TEST(SpectralCharacterTest, WitnessesMatchNumericMagnitudes) {
  UnitFunctionStream stream(PrimeModulus(5), UnityOrder(4), false, {});
  while (auto f = stream.next()) {
    std::vector<std::int64_t> numeric;
    for (std::int64_t a = 1; a < 5; ++a) {
      if (std::abs(std::norm(testing::numeric_sum(*f, -a)) - 5.0) < 1e-8) numeric.push_back(a);
    }
    EXPECT_EQ(unit_fourier_witnesses(*f), numeric) << f->to_string();
  }
}

TEST(AutocorrelationTest, Examples) {
  UnitFunctionStream stream(PrimeModulus(5), UnityOrder(4), false, {});
  while (auto f = stream.next()) EXPECT_EQ(as_integer(autocorrelation(*f, 0)), Integer(4));
  const UnitFunction leg5 = legendre_function(PrimeModulus(5));
  EXPECT_EQ(as_integer(autocorrelation(leg5, 1)), Integer(-1));
  EXPECT_EQ(as_integer(autocorrelation(Trivial(5), 1)), Integer(3));
  EXPECT_EQ(autocorrelation(leg5, 1).context().order, 2);
}

TEST(AutocorrelationTest, MatchesDirectSummation) {
  UnitFunctionStream stream(PrimeModulus(7), UnityOrder(3), false, {});
  while (auto f = stream.next()) {
    for (std::int64_t h = 0; h < 7; ++h) {
      EXPECT_TRUE(testing::near(testing::numeric(autocorrelation(*f, h)),
                                testing::numeric_autocorrelation(*f, h)));
    }
  }
}

TEST(KurlbergTest, Examples) {
  EXPECT_TRUE(kurlberg_test(legendre_function(PrimeModulus(7))));
  EXPECT_FALSE(kurlberg_test(Trivial(7)));
  EXPECT_EQ(as_integer(autocorrelation(Trivial(7), 1)), Integer(5));
  EXPECT_FALSE(kurlberg_test(Remark()));
}

TEST(KurlbergTest, RequiresFOfOneEqualOne) {
  // -Legendre has the same autocorrelations but f(1) = -1.
  const UnitFunction neg(PrimeModulus(7), UnityOrder(2), {1, 1, 0, 1, 0, 0});
  for (std::int64_t h = 1; h < 7; ++h) EXPECT_EQ(as_integer(autocorrelation(neg, h)), Integer(-1));
  EXPECT_FALSE(kurlberg_test(neg));
}

TEST(ParsevalTest, Examples) {
  UnitFunctionStream stream(PrimeModulus(5), UnityOrder(2), false, {});
  while (auto f = stream.next()) EXPECT_EQ(parseval_sum(*f), 20);
  EXPECT_EQ(parseval_sum(Trivial(3)), 6);
  EXPECT_EQ(parseval_sum(legendre_function(PrimeModulus(3))), 6);
}

TEST(SpectralPropertyTest, AutocorrelationIdentity) {
  for (auto [p, n] : {std::pair{5, 4}, {7, 3}, {3, 6}, {5, 2}}) {
    UnitFunctionStream stream(PrimeModulus(p), UnityOrder(n), false, {});
    while (auto f = stream.next()) EXPECT_EQ(testing::check_autocorrelation_identity(*f), std::nullopt);
  }
}

TEST(SpectralPropertyTest, UnflippedShiftGivesFourierCoefficientAtOne) {
  // sum_k autocorrelation(f, k) e(k/p) is |S_1|^2, not |tau|^2.
  const UnitFunction f(PrimeModulus(7), UnityOrder(6), {0, 3, 1, 4, 2, 5});
  const UnityOrder l = spectral_order(f);
  CyclotomicElement lhs = CyclotomicElement::zero(l);
  for (std::int64_t k = 0; k < 7; ++k) lhs = lhs + embed(autocorrelation(f, k), l) * zeta_pow(l, 6 * k);
  EXPECT_EQ(lhs, norm_squared(fourier_sum(f, 1).value));
  EXPECT_NE(lhs, norm_squared(gauss_sum(f).value));
}

}  // namespace
}  // namespace gauss
