#include "gauss/spectral.h"

namespace gauss {

UnityOrder spectral_order(const UnitFunction& f) {
  return UnityOrder(lcm(f.order().value(), f.prime().value()));
}

namespace {

// sum_x f(x) zeta_p^(c x) as an element of order lcm(n, p).
CyclotomicElement character_sum(const UnitFunction& f, std::int64_t c) {
  const UnityOrder order = spectral_order(f);
  const std::int64_t l = order.value();
  const std::int64_t q = f.prime().value();
  const std::int64_t n_step = l / f.order().value();
  const std::int64_t p_step = l / q;
  std::vector<std::int64_t> counts(l);
  for (std::int64_t x = 1; x < q; ++x) {
    counts[mod(n_step * f.exp_at(x) + p_step * mod(c * x, q), l)] += 1;
  }
  return CyclotomicElement::from_power_counts(order, counts);
}

}  // namespace

SpectralValue gauss_sum(const UnitFunction& f) {
  return {character_sum(f, 1), f.prime(), f.order()};
}

SpectralValue twisted_gauss_sum(const UnitFunction& f, std::int64_t a) {
  if (mod(a, f.prime().value()) == 0) throw ZeroDivisor("twist must be a unit mod p");
  return {character_sum(f, a), f.prime(), f.order()};
}

SpectralValue fourier_sum(const UnitFunction& f, std::int64_t xi) {
  return {character_sum(f, -xi), f.prime(), f.order()};
}

bool has_unit_fourier_magnitude(const UnitFunction& f, std::int64_t a) {
  if (mod(a, f.prime().value()) == 0) throw ZeroDivisor("Fourier index must be a unit mod p");
  auto norm = as_integer(norm_squared(fourier_sum(f, a).value));
  return norm && *norm == f.prime().value();
}

std::vector<std::int64_t> unit_fourier_witnesses(const UnitFunction& f) {
  std::vector<std::int64_t> out;
  for (std::int64_t a = 1; a < f.prime().value(); ++a) {
    if (has_unit_fourier_magnitude(f, a)) out.push_back(a);
  }
  return out;
}

SpectralVerdict spectral_character_test(const UnitFunction& f) {
  for (std::int64_t a = 1; a < f.prime().value(); ++a) {
    if (has_unit_fourier_magnitude(f, a)) return {true, a};
  }
  return {false, std::nullopt};
}

CyclotomicElement autocorrelation(const UnitFunction& f, std::int64_t h) {
  const std::int64_t q = f.prime().value();
  const std::int64_t n = f.order().value();
  std::vector<std::int64_t> counts(n);
  for (std::int64_t x = 1; x < q; ++x) {
    const std::int64_t y = mod(x + h, q);
    if (y == 0) continue;
    counts[mod(f.exp_at(x) - f.exp_at(y), n)] += 1;
  }
  return CyclotomicElement::from_power_counts(f.order(), counts);
}

bool kurlberg_test(const UnitFunction& f) {
  if (f.exp_at(1) != 0) return false;
  for (std::int64_t h = 1; h < f.prime().value(); ++h) {
    auto v = as_integer(autocorrelation(f, h));
    if (!v || *v != -1) return false;
  }
  return true;
}

Integer parseval_sum(const UnitFunction& f) {
  const UnityOrder order = spectral_order(f);
  CyclotomicElement total = CyclotomicElement::zero(order);
  for (std::int64_t xi = 0; xi < f.prime().value(); ++xi) {
    total = total + norm_squared(fourier_sum(f, xi).value);
  }
  auto v = as_integer(total);
  if (!v) throw InternalInconsistency("Parseval sum is not a rational integer: " + total.to_string());
  return *v;
}

}  // namespace gauss
