// Gauss sums, finite Fourier coefficients and autocorrelations of unit
// functions, computed exactly in Z[zeta_L] with L = lcm(n, p).
//
// The Fourier normalization 1/sqrt(p) is never formed: |f^(xi)| = 1 is
// decided as norm_squared(S_xi) == p, where S_xi = sqrt(p) * f^(xi).

#ifndef GAUSS_SPECTRAL_H_
#define GAUSS_SPECTRAL_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "gauss/cyclo.h"
#include "gauss/modp.h"

namespace gauss {

struct SpectralValue {
  CyclotomicElement value;  // order lcm(n, p)
  PrimeModulus p;
  UnityOrder n;
};

UnityOrder spectral_order(const UnitFunction& f);

/// tau(f) = sum_{x in F_p^x} f(x) e(x/p).
SpectralValue gauss_sum(const UnitFunction& f);

/// sum_x f(x) e(a x / p); a must be a unit mod p.
SpectralValue twisted_gauss_sum(const UnitFunction& f, std::int64_t a);

/// S_xi = sum_x f(x) e(-x xi / p). xi = 0 gives sum_x f(x).
SpectralValue fourier_sum(const UnitFunction& f, std::int64_t xi);

bool has_unit_fourier_magnitude(const UnitFunction& f, std::int64_t a);

/// All a in F_p^x with |f^(a)| = 1, increasing.
std::vector<std::int64_t> unit_fourier_witnesses(const UnitFunction& f);

struct SpectralVerdict {
  bool is_character;
  std::optional<std::int64_t> witness;  // smallest a with |f^(a)| = 1
};

/// Character test by exhibiting a with |f^(a)| = 1. Stops at the first hit.
SpectralVerdict spectral_character_test(const UnitFunction& f);

/// sum_x f(x) conj(f(x + h)), an element of order n.
CyclotomicElement autocorrelation(const UnitFunction& f, std::int64_t h);

/// f(1) = 1 and autocorrelation(f, h) = -1 for every h != 0.
bool kurlberg_test(const UnitFunction& f);

/// sum over all xi of norm_squared(S_xi); always p(p-1).
Integer parseval_sum(const UnitFunction& f);

}  // namespace gauss

#endif  // GAUSS_SPECTRAL_H_
