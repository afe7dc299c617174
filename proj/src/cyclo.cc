#include "gauss/cyclo.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace gauss {

UnityOrder::UnityOrder(std::int64_t n, std::int64_t ceiling) : n_(n) {
  if (n < 1) throw InvalidArgument("root-of-unity order must be >= 1, got " + std::to_string(n));
  if (n > ceiling) {
    throw InvalidArgument("root-of-unity order " + std::to_string(n) + " exceeds ceiling " +
                          std::to_string(ceiling));
  }
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) { return a / gcd(a, b) * b; }

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(std::size_t degree, const Integer& c) {
  std::vector<Integer> coeffs(degree + 1);
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Integer> out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return IntPolynomial(std::move(out));
}

PolyDivision divide_monic(const IntPolynomial& a, const IntPolynomial& monic) {
  if (monic.is_zero() || monic.coeffs().back() != 1) {
    throw InvalidArgument("divisor must be monic");
  }
  const std::int64_t dm = monic.degree();
  std::vector<Integer> rem = a.coeffs();
  if (a.degree() < dm) return {IntPolynomial(), a};
  std::vector<Integer> quot(a.degree() - dm + 1);
  for (std::int64_t i = a.degree(); i >= dm; --i) {
    Integer c = rem[i];
    if (c == 0) continue;
    quot[i - dm] = c;
    for (std::int64_t j = 0; j <= dm; ++j) rem[i - dm + j] -= c * monic.coeffs()[j];
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

// ---------------------------------------------------------------------------
// Contexts

namespace {

std::mutex& context_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::int64_t, std::shared_ptr<const CyclotomicContext>>& context_cache() {
  static std::map<std::int64_t, std::shared_ptr<const CyclotomicContext>> cache;
  return cache;
}

std::shared_ptr<const CyclotomicContext> build_context(std::int64_t n) {
  // x^n - 1 divided by Phi_d over proper divisors d.
  std::vector<Integer> xn(n + 1);
  xn[0] = -1;
  xn[n] = 1;
  IntPolynomial poly(std::move(xn));
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    PolyDivision div = divide_monic(poly, cyclotomic_context(UnityOrder(d, d))->modulus);
    if (!div.remainder.is_zero()) {
      throw InternalInconsistency("Phi_" + std::to_string(d) + " does not divide x^" +
                                  std::to_string(n) + " - 1");
    }
    poly = std::move(div.quotient);
  }
  auto ctx = std::make_shared<CyclotomicContext>();
  ctx->order = n;
  ctx->phi = poly.degree();
  if (ctx->phi != euler_phi(n)) {
    throw InternalInconsistency("deg Phi_" + std::to_string(n) + " != phi(" +
                                std::to_string(n) + ")");
  }
  for (std::int64_t j = 0; j < ctx->phi; ++j) {
    if (poly.coeffs()[j] != 0) ctx->lower_terms.emplace_back(j, poly.coeffs()[j]);
  }
  ctx->modulus = std::move(poly);
  return ctx;
}

void require_same_order(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.context().order != b.context().order) {
    throw OrderMismatch("cyclotomic orders differ: " + std::to_string(a.context().order) +
                        " vs " + std::to_string(b.context().order));
  }
}

// Reduces coeffs in place modulo the monic Phi_N and truncates to phi(N).
void reduce_in_place(const CyclotomicContext& ctx, std::vector<Integer>& coeffs) {
  const auto phi = static_cast<std::size_t>(ctx.phi);
  for (std::size_t i = coeffs.size(); i-- > phi;) {
    if (coeffs[i] == 0) continue;
    const Integer c = coeffs[i];
    for (const auto& [j, a] : ctx.lower_terms) coeffs[i - phi + j] -= c * a;
    coeffs[i] = 0;
  }
  coeffs.resize(phi);
}

}  // namespace

std::shared_ptr<const CyclotomicContext> cyclotomic_context(UnityOrder n) {
  {
    std::lock_guard lock(context_mutex());
    auto it = context_cache().find(n.value());
    if (it != context_cache().end()) return it->second;
  }
  auto ctx = build_context(n.value());
  std::lock_guard lock(context_mutex());
  return context_cache().try_emplace(n.value(), std::move(ctx)).first->second;
}

IntPolynomial cyclotomic_polynomial(UnityOrder n) { return cyclotomic_context(n)->modulus; }

// ---------------------------------------------------------------------------
// CyclotomicElement

CyclotomicElement::CyclotomicElement(UnityOrder n, std::vector<Integer> coeffs)
    : ctx_(cyclotomic_context(n)), coeffs_(std::move(coeffs)) {
  if (static_cast<std::int64_t>(coeffs_.size()) != ctx_->phi) {
    throw InvalidArgument("coefficient vector of length " + std::to_string(coeffs_.size()) +
                          " but phi(" + std::to_string(ctx_->order) +
                          ") = " + std::to_string(ctx_->phi));
  }
}

CyclotomicElement CyclotomicElement::zero(UnityOrder n) {
  auto ctx = cyclotomic_context(n);
  std::vector<Integer> coeffs(ctx->phi);
  return CyclotomicElement(std::move(ctx), std::move(coeffs));
}

CyclotomicElement CyclotomicElement::from_integer(UnityOrder n, const Integer& c) {
  CyclotomicElement z = zero(n);
  z.coeffs_[0] = c;
  return z;
}

CyclotomicElement CyclotomicElement::reduce(UnityOrder n, std::vector<Integer> coeffs) {
  auto ctx = cyclotomic_context(n);
  if (coeffs.size() < static_cast<std::size_t>(ctx->phi)) coeffs.resize(ctx->phi);
  reduce_in_place(*ctx, coeffs);
  return CyclotomicElement(std::move(ctx), std::move(coeffs));
}

CyclotomicElement CyclotomicElement::from_power_counts(UnityOrder n,
                                                       std::span<const std::int64_t> counts) {
  if (static_cast<std::int64_t>(counts.size()) != n.value()) {
    throw InvalidArgument("power counts must have length equal to the order");
  }
  std::vector<Integer> coeffs(counts.size());
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] != 0) coeffs[k] = static_cast<long>(counts[k]);
  }
  return reduce(n, std::move(coeffs));
}

bool CyclotomicElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

std::string CyclotomicElement::to_string() const {
  std::ostringstream os;
  os << "order=" << ctx_->order << " [";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) os << ", ";
    os << coeffs_[i].get_str();
  }
  os << "]";
  return os.str();
}

CyclotomicElement zeta_pow(UnityOrder n, std::int64_t k) {
  std::vector<Integer> coeffs(n.value());
  coeffs[mod(k, n.value())] = 1;
  return CyclotomicElement::reduce(n, std::move(coeffs));
}

CyclotomicElement add(const CyclotomicElement& a, const CyclotomicElement& b) {
  require_same_order(a, b);
  std::vector<Integer> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeffs()[i] + b.coeffs()[i];
  return CyclotomicElement(a.order(), std::move(out));
}

CyclotomicElement sub(const CyclotomicElement& a, const CyclotomicElement& b) {
  require_same_order(a, b);
  std::vector<Integer> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeffs()[i] - b.coeffs()[i];
  return CyclotomicElement(a.order(), std::move(out));
}

CyclotomicElement negate(const CyclotomicElement& a) {
  std::vector<Integer> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -a.coeffs()[i];
  return CyclotomicElement(a.order(), std::move(out));
}

CyclotomicElement scale(const CyclotomicElement& a, const Integer& c) {
  std::vector<Integer> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeffs()[i] * c;
  return CyclotomicElement(a.order(), std::move(out));
}

CyclotomicElement mul(const CyclotomicElement& a, const CyclotomicElement& b) {
  require_same_order(a, b);
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Integer> out(x.size() + y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] != 0) out[i + j] += x[i] * y[j];
    }
  }
  return CyclotomicElement::reduce(a.order(), std::move(out));
}

CyclotomicElement galois_apply(const CyclotomicElement& z, std::int64_t k) {
  const std::int64_t n = z.context().order;
  if (gcd(k, n) != 1) {
    throw InvalidArgument("galois_apply: k=" + std::to_string(k) + " is not coprime to " +
                          std::to_string(n));
  }
  const std::int64_t kk = mod(k, n);
  std::vector<Integer> out(n);
  for (std::size_t i = 0; i < z.coeffs().size(); ++i) {
    if (z.coeffs()[i] != 0) out[(static_cast<std::int64_t>(i) * kk) % n] += z.coeffs()[i];
  }
  return CyclotomicElement::reduce(z.order(), std::move(out));
}

CyclotomicElement conjugate(const CyclotomicElement& z) {
  return galois_apply(z, z.context().order - 1);
}

CyclotomicElement norm_squared(const CyclotomicElement& z) { return mul(z, conjugate(z)); }

CyclotomicElement embed(const CyclotomicElement& z, UnityOrder m) {
  const std::int64_t n = z.context().order;
  if (m.value() % n != 0) {
    throw DivisibilityError("embed: order " + std::to_string(n) + " does not divide " +
                            std::to_string(m.value()));
  }
  const std::int64_t step = m.value() / n;
  std::vector<Integer> out(m.value());
  for (std::size_t i = 0; i < z.coeffs().size(); ++i) out[i * step] = z.coeffs()[i];
  return CyclotomicElement::reduce(m, std::move(out));
}

std::optional<CyclotomicElement> project(const CyclotomicElement& z, UnityOrder d) {
  const std::int64_t n = z.context().order;
  if (n % d.value() != 0) {
    throw DivisibilityError("project: " + std::to_string(d.value()) + " does not divide " +
                            std::to_string(n));
  }
  // Solve sum_i w_i * embed(zeta_d^i) = z over Q by Gaussian elimination on
  // the phi(N) x (phi(d) + 1) augmented system.
  const auto rows = static_cast<std::size_t>(z.context().phi);
  const auto cols = static_cast<std::size_t>(euler_phi(d.value()));
  std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols + 1));
  for (std::size_t j = 0; j < cols; ++j) {
    CyclotomicElement basis = embed(zeta_pow(d, static_cast<std::int64_t>(j)), z.order());
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = basis.coeffs()[i];
  }
  for (std::size_t i = 0; i < rows; ++i) m[i][cols] = z.coeffs()[i];

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[r][c];
      for (std::size_t k = c; k <= cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (m[i][cols] != 0) return std::nullopt;
  }
  std::vector<Integer> w(cols);
  for (std::size_t i = 0; i < r; ++i) {
    mpq_class v = m[i][cols] / m[i][pivot_col[i]];
    v.canonicalize();
    if (v.get_den() != 1) {
      throw InternalInconsistency("non-integral preimage of a cyclotomic integer");
    }
    w[pivot_col[i]] = v.get_num();
  }
  return CyclotomicElement(d, std::move(w));
}

bool in_subfield(const CyclotomicElement& z, UnityOrder d) {
  const std::int64_t n = z.context().order;
  if (n % d.value() != 0) {
    throw DivisibilityError("in_subfield: " + std::to_string(d.value()) + " does not divide " +
                            std::to_string(n));
  }
  for (std::int64_t k = 2; k < n; ++k) {
    if (gcd(k, n) != 1 || mod(k, d.value()) != mod(1, d.value())) continue;
    if (!(galois_apply(z, k) == z)) return false;
  }
  return true;
}

std::optional<Integer> as_integer(const CyclotomicElement& z) {
  for (std::size_t i = 1; i < z.coeffs().size(); ++i) {
    if (z.coeffs()[i] != 0) return std::nullopt;
  }
  return z.coeffs()[0];
}

CyclotomicElement evaluate(const IntPolynomial& poly, const CyclotomicElement& z) {
  CyclotomicElement acc = CyclotomicElement::zero(z.order());
  for (std::size_t i = poly.coeffs().size(); i-- > 0;) {
    acc = add(mul(acc, z), CyclotomicElement::from_integer(z.order(), poly.coeffs()[i]));
  }
  return acc;
}

}  // namespace gauss
