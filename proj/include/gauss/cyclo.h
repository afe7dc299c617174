// Exact arithmetic in the cyclotomic ring Z[zeta_N].
//
// Elements are stored in the power basis {1, zeta, ..., zeta^(phi(N)-1)}
// modulo the N-th cyclotomic polynomial, so two elements of the same order
// are equal iff their coefficient vectors are equal.

#ifndef GAUSS_CYCLO_H_
#define GAUSS_CYCLO_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gauss/errors.h"

namespace gauss {

using Integer = mpz_class;

inline constexpr std::int64_t kDefaultOrderCeiling = 10000;

/// Order N of a root of unity zeta_N. Always 1 <= N <= ceiling.
class UnityOrder {
 public:
  explicit UnityOrder(std::int64_t n, std::int64_t ceiling = kDefaultOrderCeiling);

  std::int64_t value() const { return n_; }
  friend bool operator==(UnityOrder, UnityOrder) = default;

 private:
  std::int64_t n_;
};

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);
std::int64_t euler_phi(std::int64_t n);
// Least non-negative residue.
std::int64_t mod(std::int64_t a, std::int64_t m);

/// Dense integer polynomial, lowest degree first, no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);

  static IntPolynomial monomial(std::size_t degree, const Integer& c = 1);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

struct PolyDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};
// Division by a monic polynomial; stays in Z[x].
PolyDivision divide_monic(const IntPolynomial& a, const IntPolynomial& monic);

/// Phi_N, computed as (x^N - 1) / prod_{d | N, d < N} Phi_d.
IntPolynomial cyclotomic_polynomial(UnityOrder n);

/// Shared per-order data: Phi_N and its nonzero lower terms for reduction.
struct CyclotomicContext {
  std::int64_t order;
  std::int64_t phi;
  IntPolynomial modulus;
  std::vector<std::pair<std::int64_t, Integer>> lower_terms;
};

std::shared_ptr<const CyclotomicContext> cyclotomic_context(UnityOrder n);

class CyclotomicElement {
 public:
  CyclotomicElement(UnityOrder n, std::vector<Integer> coeffs);

  static CyclotomicElement zero(UnityOrder n);
  static CyclotomicElement from_integer(UnityOrder n, const Integer& c);

  // Reduces sum_k coeffs[k] * zeta^k (any length) modulo Phi_N.
  static CyclotomicElement reduce(UnityOrder n, std::vector<Integer> coeffs);

  // Reduces sum_{k<N} counts[k] * zeta^k; counts.size() must equal N.
  static CyclotomicElement from_power_counts(UnityOrder n,
                                             std::span<const std::int64_t> counts);

  UnityOrder order() const { return UnityOrder(ctx_->order, ctx_->order); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const CyclotomicContext& context() const { return *ctx_; }
  bool is_zero() const;

  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
    return a.ctx_->order == b.ctx_->order && a.coeffs_ == b.coeffs_;
  }

  // "order=N [c0, c1, ...]"
  std::string to_string() const;

 private:
  CyclotomicElement(std::shared_ptr<const CyclotomicContext> ctx, std::vector<Integer> coeffs)
      : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {}

  std::shared_ptr<const CyclotomicContext> ctx_;
  std::vector<Integer> coeffs_;
};

CyclotomicElement zeta_pow(UnityOrder n, std::int64_t k);

CyclotomicElement add(const CyclotomicElement& a, const CyclotomicElement& b);
CyclotomicElement sub(const CyclotomicElement& a, const CyclotomicElement& b);
CyclotomicElement negate(const CyclotomicElement& a);
CyclotomicElement mul(const CyclotomicElement& a, const CyclotomicElement& b);
CyclotomicElement scale(const CyclotomicElement& a, const Integer& c);

inline CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b) {
  return add(a, b);
}
inline CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b) {
  return sub(a, b);
}
inline CyclotomicElement operator-(const CyclotomicElement& a) { return negate(a); }
inline CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
  return mul(a, b);
}

// zeta_N -> zeta_N^(N-1).
CyclotomicElement conjugate(const CyclotomicElement& z);

// z * conj(z). Equal to |z|^2 under every embedding whenever it is rational.
CyclotomicElement norm_squared(const CyclotomicElement& z);

// Inclusion Q(zeta_N) -> Q(zeta_M), zeta_N -> zeta_M^(M/N). Requires N | M.
CyclotomicElement embed(const CyclotomicElement& z, UnityOrder m);

// Inverse of embed: the preimage of z in Z[zeta_d] if z lies in Q(zeta_d).
// Requires d | N.
std::optional<CyclotomicElement> project(const CyclotomicElement& z, UnityOrder d);

// sigma_k: zeta_N -> zeta_N^k. Requires gcd(k, N) = 1.
CyclotomicElement galois_apply(const CyclotomicElement& z, std::int64_t k);

// True iff z is fixed by every sigma_k with k = 1 (mod d). Requires d | N.
bool in_subfield(const CyclotomicElement& z, UnityOrder d);

std::optional<Integer> as_integer(const CyclotomicElement& z);

// Horner evaluation of an integer polynomial at z.
CyclotomicElement evaluate(const IntPolynomial& poly, const CyclotomicElement& z);

}  // namespace gauss

#endif  // GAUSS_CYCLO_H_
