#include "gauss/modp.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <sstream>

namespace gauss {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::int64_t p) : p_(p) {
  if (p < 3 || !is_prime(p)) {
    throw InvalidArgument("modulus must be an odd prime, got " + std::to_string(p));
  }
}

// ---------------------------------------------------------------------------
// UnitFunction

UnitFunction::UnitFunction(PrimeModulus p, UnityOrder n, std::vector<std::int64_t> exps)
    : p_(p), n_(n), exps_(std::move(exps)) {
  if (static_cast<std::int64_t>(exps_.size()) != p.value() - 1) {
    throw InvalidArgument("expected " + std::to_string(p.value() - 1) + " exponents, got " +
                          std::to_string(exps_.size()));
  }
  for (std::int64_t k : exps_) {
    if (k < 0 || k >= n.value()) {
      throw InvalidArgument("exponent " + std::to_string(k) + " outside [0, " +
                            std::to_string(n.value()) + ")");
    }
  }
}

std::int64_t UnitFunction::exp_at(std::int64_t x) const {
  const std::int64_t r = mod(x, p_.value());
  if (r == 0) throw InvalidArgument("f(0) is not a unit value");
  return exps_[r - 1];
}

bool UnitFunction::is_constant() const {
  return std::adjacent_find(exps_.begin(), exps_.end(), std::not_equal_to<>()) == exps_.end();
}

bool UnitFunction::is_trivial() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::int64_t k) { return k == 0; });
}

std::string UnitFunction::to_string() const {
  std::ostringstream os;
  os << "p=" << p_.value() << " n=" << n_.value() << " exps=";
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i > 0) os << ",";
    os << exps_[i];
  }
  return os.str();
}

namespace {

std::int64_t parse_int(std::string_view s, const std::string& what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("invalid integer for " + what + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

UnitFunction parse_unit_function(const std::string& text) {
  // Drop whitespace around '=' and ','; keep spaces as field separators.
  std::string norm;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      const bool glue = (!norm.empty() && (norm.back() == '=' || norm.back() == ',')) ||
                        (j < text.size() && (text[j] == '=' || text[j] == ','));
      if (!glue && !norm.empty() && j < text.size()) norm += ' ';
      i = j - 1;
      continue;
    }
    norm += c;
  }

  std::optional<std::int64_t> p, n;
  std::optional<std::vector<std::int64_t>> exps;
  std::istringstream fields(norm);
  std::string field;
  while (fields >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value, got '" + field + "'");
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "p") {
      p = parse_int(value, "p");
    } else if (key == "n") {
      n = parse_int(value, "n");
    } else if (key == "exps") {
      std::vector<std::int64_t> ks;
      std::size_t start = 0;
      while (true) {
        const auto comma = value.find(',', start);
        ks.push_back(parse_int(std::string_view(value).substr(start, comma - start), "exps"));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      exps = std::move(ks);
    } else {
      throw ParseError("unknown key '" + key + "'");
    }
  }
  if (!p || !n || !exps) throw ParseError("function text needs p=, n= and exps=");
  try {
    return UnitFunction(PrimeModulus(*p), UnityOrder(*n), std::move(*exps));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::optional<UnitFunction> with_order(const UnitFunction& f, UnityOrder new_n) {
  const std::int64_t n = f.order().value();
  const std::int64_t m = new_n.value();
  std::vector<std::int64_t> out;
  out.reserve(f.exps().size());
  for (std::int64_t k : f.exps()) {
    // e(k/n) = e(k'/m) iff k*m divisible by n.
    if ((k * m) % n != 0) return std::nullopt;
    out.push_back((k * m / n) % m);
  }
  return UnitFunction(f.prime(), new_n, std::move(out));
}

std::int64_t minimal_order(const UnitFunction& f) {
  std::int64_t g = f.order().value();
  for (std::int64_t k : f.exps()) g = gcd(g, k);
  return f.order().value() / g;
}

// ---------------------------------------------------------------------------
// Group structure

std::int64_t power_mod(std::int64_t base, std::int64_t e, std::int64_t m) {
  std::int64_t result = 1 % m;
  base = mod(base, m);
  while (e > 0) {
    if (e & 1) result = result * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return result;
}

std::int64_t find_primitive_root(PrimeModulus p) {
  const std::int64_t q = p.value();
  for (std::int64_t g = 2; g < q; ++g) {
    std::int64_t x = g;
    std::int64_t ord = 1;
    while (x != 1) {
      x = x * g % q;
      ++ord;
    }
    if (ord == q - 1) return g;
  }
  throw InternalInconsistency("no primitive root mod " + std::to_string(q));
}

std::int64_t mod_inverse(std::int64_t a, PrimeModulus p) {
  const std::int64_t r = mod(a, p.value());
  if (r == 0) throw ZeroDivisor("0 has no inverse mod " + std::to_string(p.value()));
  return power_mod(r, p.value() - 2, p.value());
}

int legendre_symbol(std::int64_t a, PrimeModulus p) {
  const std::int64_t q = p.value();
  const std::int64_t r = mod(a, q);
  if (r == 0) return 0;
  for (std::int64_t x = 1; x <= q / 2; ++x) {
    if (x * x % q == r) return 1;
  }
  return -1;
}

UnitFunction legendre_function(PrimeModulus p) {
  std::vector<std::int64_t> exps(p.value() - 1);
  for (std::int64_t x = 1; x < p.value(); ++x) exps[x - 1] = legendre_symbol(x, p) == 1 ? 0 : 1;
  return UnitFunction(p, UnityOrder(2), std::move(exps));
}

UnitFunction character_function(const Character& chi) {
  const std::int64_t q = chi.p.value();
  std::vector<std::int64_t> exps(q - 1);
  std::int64_t x = 1;
  for (std::int64_t t = 0; t < q - 1; ++t) {
    exps[x - 1] = chi.index * t % (q - 1);
    x = x * chi.generator % q;
  }
  return UnitFunction(chi.p, UnityOrder(q - 1), std::move(exps));
}

std::vector<Character> enumerate_characters(PrimeModulus p, UnityOrder n) {
  const std::int64_t m = p.value() - 1;
  const std::int64_t g = find_primitive_root(p);
  std::vector<Character> out;
  for (std::int64_t j = 0; j < m; ++j) {
    if (n.value() % (m / gcd(j, m)) == 0) out.push_back({p, g, j});
  }
  return out;
}

bool is_character_oracle(const UnitFunction& f) {
  const std::int64_t q = f.prime().value();
  const std::int64_t n = f.order().value();
  if (f.exp_at(1) != 0) return false;
  for (std::int64_t a = 1; a < q; ++a) {
    for (std::int64_t b = a; b < q; ++b) {
      if (f.exp_at(a * b) != (f.exp_at(a) + f.exp_at(b)) % n) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration

Integer enumeration_count(PrimeModulus p, UnityOrder n, bool fix_f1) {
  Integer count;
  mpz_ui_pow_ui(count.get_mpz_t(), static_cast<unsigned long>(n.value()),
                static_cast<unsigned long>(p.value() - (fix_f1 ? 2 : 1)));
  return count;
}

UnitFunctionStream::UnitFunctionStream(PrimeModulus p, UnityOrder n, bool fix_f1,
                                       EnumerationBudget budget)
    : p_(p), n_(n), fix_f1_(fix_f1) {
  const Integer count = enumeration_count(p, n, fix_f1);
  if (count > Integer(std::to_string(budget.max_functions))) {
    throw BudgetExceeded(count.get_str(), std::to_string(budget.max_functions));
  }
  size_ = std::stoull(count.get_str());
  end_ = size_;
}

void UnitFunctionStream::restrict_to(std::uint64_t begin, std::uint64_t end) {
  if (begin > end || end > size_) throw InvalidArgument("stream range out of bounds");
  cursor_ = begin;
  end_ = end;
}

UnitFunction UnitFunctionStream::at(std::uint64_t index) const {
  if (index >= size_) throw InvalidArgument("stream index out of bounds");
  const auto n = static_cast<std::uint64_t>(n_.value());
  std::vector<std::int64_t> exps(p_.value() - 1);
  // Last position varies fastest; exps[0] is pinned to 0 when f(1) is fixed.
  const std::size_t first = fix_f1_ ? 1 : 0;
  for (std::size_t i = exps.size(); i-- > first;) {
    exps[i] = static_cast<std::int64_t>(index % n);
    index /= n;
  }
  return UnitFunction(p_, n_, std::move(exps));
}

bool UnitFunctionStream::next(UnitFunction& out) {
  if (cursor_ >= end_) return false;
  out = at(cursor_++);
  return true;
}

std::optional<UnitFunction> UnitFunctionStream::next() {
  if (cursor_ >= end_) return std::nullopt;
  return at(cursor_++);
}

}  // namespace gauss
