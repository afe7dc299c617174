// Exhaustive small-(p, n) verification of the character characterizations.
//
// Each check enumerates every unit function in its hypothesis class, runs the
// spectral (or autocorrelation) criterion and the brute-force homomorphism
// oracle side by side, and lists every function on which they disagree.

#ifndef GAUSS_VERIFY_H_
#define GAUSS_VERIFY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gauss/modp.h"

namespace gauss {

enum class Statement {
  kLegendreGaussSum,      // +-1 functions: |tau(f)| = sqrt(p) iff f is the Legendre symbol
  kFourierCharacterization,  // nontrivial character iff some |f^(a)| = 1
  kWitnessDichotomy,      // |f^(a)| = 1 for all a or for none
  kRationalGaussSum,      // tau(g) in Q(zeta_n) forces g = -tau(g) constant
  kGaussConverse,         // nontrivial character iff |tau(f)| = sqrt(p)
  kTwistedFactorization,  // |tau(f)| = sqrt(p) iff f = eps * chi
  kAutocorrelation,       // character iff flat autocorrelation profile
  kRemarkCounterexample,  // p | n admits a non-character with |tau| = sqrt(p)
  kDivisibleSearch,       // search all p | n functions for such non-characters
};

// Wire identifiers, e.g. "thm_1_2".
std::string statement_id(Statement s);
std::optional<Statement> parse_statement(const std::string& id);
std::vector<Statement> all_statements();

struct Witness {
  std::vector<std::int64_t> exps;
  std::optional<std::int64_t> a;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct VerificationReport {
  std::string statement;
  std::int64_t p = 0;
  std::int64_t n = 0;
  std::uint64_t budget = 0;
  std::uint64_t total_functions = 0;
  std::uint64_t passing_spectral = 0;
  std::uint64_t passing_oracle = 0;
  std::vector<std::vector<std::int64_t>> mismatches;
  std::vector<Witness> witnesses;
  std::map<std::string, std::int64_t> details;
  std::optional<std::string> error;
  std::int64_t elapsed_ms = 0;
  bool success = false;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

VerificationReport verify_prop_1_1(PrimeModulus p, EnumerationBudget budget = {});
VerificationReport verify_thm_1_2(PrimeModulus p, UnityOrder n, EnumerationBudget budget = {});
VerificationReport verify_cor_1_3(PrimeModulus p, UnityOrder n, EnumerationBudget budget = {});
VerificationReport verify_lemma_2_1(PrimeModulus p, UnityOrder n, EnumerationBudget budget = {});
VerificationReport verify_prop_2_2(PrimeModulus p, UnityOrder n, EnumerationBudget budget = {});
VerificationReport verify_cor_2_3(PrimeModulus p, UnityOrder n, EnumerationBudget budget = {});
VerificationReport verify_thm_1_7(PrimeModulus p, UnityOrder n, EnumerationBudget budget = {});
VerificationReport remark_counterexample();
VerificationReport search_p_divides_n(PrimeModulus p, UnityOrder n, EnumerationBudget budget = {});

struct GridCell {
  Statement statement;
  std::int64_t p;
  std::int64_t n;
};

/// Runs one cell; throws on invalid parameters or violated hypotheses.
VerificationReport run_cell(const GridCell& cell, EnumerationBudget budget = {});

/// Runs every cell. Per-cell errors become failed reports with `error` set.
std::vector<VerificationReport> verify_grid(std::span<const GridCell> cells,
                                            EnumerationBudget budget = {});

std::vector<GridCell> default_grid();

bool all_succeeded(std::span<const VerificationReport> reports);

}  // namespace gauss

#endif  // GAUSS_VERIFY_H_
