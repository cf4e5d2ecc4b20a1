#pragma once

#include <string>
#include <vector>

namespace chromsym {

// Outcome of one executable theorem suite. A suite passes iff no failures;
// failures carry per-instance witnesses and are data, not errors.
struct VerifyReport {
  std::string suite;
  std::string bounds;
  long long instances = 0;
  long long passes = 0;
  std::vector<std::string> failures;
  long long wall_time_ms = 0;

  bool passed() const { return failures.empty(); }
  std::string to_json() const;
  std::string pretty() const;
};

// Shape-count identity f_lambda = #P-tableaux over all (3+1)-free labeled
// posets with <= max_n elements.
VerifyReport verify_gasharov(int max_n, int jobs = 1);

// Signed special-rim-hook-P-tableau count vs the algebraic e-coefficients,
// same instance family.
VerifyReport verify_theorem1(int max_n, int jobs = 1);

// pi_k = sum_l C(l-1,k-1) kappa_l over ALL labeled posets (no freeness
// filter), plus the two constructive refinements: each acyclic orientation
// with l sinks is induced by exactly C(l-1,k-1) hook tableaux, the round
// trip is exact, and the union over orientations tiles the hook tableaux.
VerifyReport verify_lemma1(int max_n, int jobs = 1);

// c_l = kappa_l over (a) incomparability graphs of (3+1)-free posets and
// (b) all labeled graphs.
VerifyReport verify_sink_theorem(int max_n_posets, int max_n_graphs, int jobs = 1);

// The sign-reversing involution: involutive, sign-reversing, P-tableau- and
// hook-count-fixing on every non-hook special rim hook P-tableau, and the
// per-hook-count non-hook signed contributions cancel.
VerifyReport verify_sigma(int max_n, int jobs = 1);

// f_mu = nu_1! ... nu_m! K_{mu,nu} for ordinal sums of antichains, over all
// compositions nu with total <= max_total.
VerifyReport verify_ordinal_sum_identity(int max_total, int jobs = 1);

// Conjecture scan: a_lambda >= 0 for every (3+1)-free labeled poset. Any
// violator is reported with its full machine-readable CsfReport.
struct EPositivityScan {
  VerifyReport report;
  std::vector<std::string> witness_json;  // one CsfReport JSON per violator
};
EPositivityScan scan_e_positivity(int max_n, int jobs = 1);

// Exit codes for the CLI: 0 pass, 2 identity failure, 3 conjecture violation.
inline constexpr int kExitPass = 0;
inline constexpr int kExitIdentityFailure = 2;
inline constexpr int kExitConjectureViolation = 3;

}  // namespace chromsym
