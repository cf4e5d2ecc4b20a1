#pragma once

#include <string>
#include <vector>

#include "chromsym/orderstruct.hpp"
#include "chromsym/partition.hpp"
#include "chromsym/symfunc.hpp"

namespace chromsym {

// Raised when an operation's combinatorial hypothesis fails, e.g. a
// non-(3+1)-free poset fed to the signed-tableau coefficient formula.
struct HypothesisViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Chromatic symmetric function in the m basis, computed over stable
// partitions of the vertex set rather than colorings. Guarded at |V| <= 9.
SymFunc chromatic_symmetric_function(const Graph& g);

// e-expansion coefficients of X_G, indexed by partitions of |V| in
// canonical order. Integer-valued; integrality is asserted.
std::vector<Integer> a_coefficients(const Graph& g);

// Schur-side coefficients: f_lambda = coefficient of s_{lambda'} in the
// s-expansion of X_G, i.e. the s_lambda coefficient of omega X_G.
std::vector<Integer> f_coefficients(const Graph& g);

// c[l-1] = sum of a_lambda over partitions of length l, for l = 1..|V|.
std::vector<Integer> c_by_length(const Graph& g);

// Signed special-rim-hook-P-tableau count; requires P (3+1)-free and
// refuses otherwise, naming the obstruction.
Integer a_coefficient_via_theorem1(const Poset& p, const Partition& lambda);

// Direct finite-palette count of proper colorings (test oracle scale only).
Integer count_proper_colorings(const Graph& g, int palette);

// Everything the paper attaches to one instance, bundled for reporting.
struct CsfReport {
  std::string id;
  int degree = 0;
  SymFunc x_in_m;
  std::vector<Integer> a;      // canonical partition order
  std::vector<Integer> f;      // canonical partition order
  std::vector<Integer> c;      // index l-1 for l = 1..degree
  std::vector<Integer> kappa;  // index l-1 for l = 1..degree

  std::string to_json() const;
  std::string to_tsv() const;   // one row per partition
  std::string pretty() const;
};

CsfReport csf_report(const Graph& g, const std::string& id);
CsfReport csf_report(const Poset& p, const std::string& id);

}  // namespace chromsym
