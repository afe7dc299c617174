// The prime field F_p, its unit group, and functions F_p^x -> mu_n.

#ifndef GAUSS_MODP_H_
#define GAUSS_MODP_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gauss/cyclo.h"

namespace gauss {

/// An odd prime p, checked by trial division.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::int64_t p);

  std::int64_t value() const { return p_; }
  friend bool operator==(PrimeModulus, PrimeModulus) = default;

 private:
  std::int64_t p_;
};

bool is_prime(std::int64_t n);

/// f : F_p^x -> mu_n with f(x) = e(exps[x-1] / n). f(0) = 0 is implicit.
class UnitFunction {
 public:
  UnitFunction(PrimeModulus p, UnityOrder n, std::vector<std::int64_t> exps);

  PrimeModulus prime() const { return p_; }
  UnityOrder order() const { return n_; }
  const std::vector<std::int64_t>& exps() const { return exps_; }

  // Exponent of f(x) for x in F_p^x (x is reduced mod p; x = 0 is rejected).
  std::int64_t exp_at(std::int64_t x) const;

  bool is_constant() const;
  bool is_trivial() const;  // identically 1

  friend bool operator==(const UnitFunction&, const UnitFunction&) = default;

  // "p=<p> n=<n> exps=<k_1>,...,<k_{p-1}>"
  std::string to_string() const;

 private:
  PrimeModulus p_;
  UnityOrder n_;
  std::vector<std::int64_t> exps_;
};

/// Parses the textual function format. Whitespace-tolerant.
UnitFunction parse_unit_function(const std::string& text);

/// Rewrites f over a different n, when all its values lie in mu_{new_n}.
std::optional<UnitFunction> with_order(const UnitFunction& f, UnityOrder new_n);

/// Order of the subgroup of mu_n generated by the values of f.
std::int64_t minimal_order(const UnitFunction& f);

/// chi_j(g^t) = e(j t / (p-1)).
struct Character {
  PrimeModulus p;
  std::int64_t generator;
  std::int64_t index;

  bool is_trivial() const { return index == 0; }
};

std::int64_t find_primitive_root(PrimeModulus p);
std::int64_t mod_inverse(std::int64_t a, PrimeModulus p);
std::int64_t power_mod(std::int64_t base, std::int64_t e, std::int64_t m);
int legendre_symbol(std::int64_t a, PrimeModulus p);

/// The Legendre symbol as a {+-1} function with n = 2.
UnitFunction legendre_function(PrimeModulus p);

/// Character table with n = p - 1.
UnitFunction character_function(const Character& chi);

/// Characters with values in mu_n, ordered by index; gcd(n, p-1) of them.
std::vector<Character> enumerate_characters(PrimeModulus p, UnityOrder n);

/// Brute-force homomorphism check: f(1) = 1 and f(ab) = f(a) f(b).
bool is_character_oracle(const UnitFunction& f);

struct EnumerationBudget {
  std::uint64_t max_functions = 10'000'000;
};

/// n^(p-2) when f(1) is fixed, else n^(p-1).
Integer enumeration_count(PrimeModulus p, UnityOrder n, bool fix_f1);

/// Lexicographic stream over every UnitFunction (optionally with f(1) = 1).
/// A stream can be restricted to an index range for partitioned workers.
class UnitFunctionStream {
 public:
  UnitFunctionStream(PrimeModulus p, UnityOrder n, bool fix_f1, EnumerationBudget budget);

  std::uint64_t size() const { return size_; }

  // Restricts the stream to indices [begin, end).
  void restrict_to(std::uint64_t begin, std::uint64_t end);

  // The function at a given lexicographic index.
  UnitFunction at(std::uint64_t index) const;

  // Writes the next function into out; false once exhausted.
  bool next(UnitFunction& out);
  std::optional<UnitFunction> next();

 private:
  PrimeModulus p_;
  UnityOrder n_;
  bool fix_f1_;
  std::uint64_t size_;
  std::uint64_t cursor_ = 0;
  std::uint64_t end_;
};

}  // namespace gauss

#endif  // GAUSS_MODP_H_
