#pragma once

#include <string>
#include <vector>

#include "chromsym/numeric.hpp"
#include "chromsym/partition.hpp"

namespace chromsym {

enum class Basis { Monomial, Elementary, Homogeneous, Schur };

char basis_letter(Basis b);
Basis parse_basis(const std::string& s);  // "m" | "e" | "h" | "s"

// Homogeneous symmetric function of degree d as an exact coefficient vector
// over partitions of d in canonical (reverse-lex) order, tagged with the
// basis it is expressed in. Mixed-basis arithmetic is forbidden; convert first.
struct SymFunc {
  int degree = 0;
  Basis basis = Basis::Monomial;
  RationalVector coeffs;

  static SymFunc zero(int degree, Basis basis);
  static SymFunc unit(Basis basis, const Partition& p);  // 1 * b_p

  const Rational& at(const Partition& p) const;
  Rational& at(const Partition& p);

  std::string pretty() const;  // "3·e_{3} + 1·e_{2,1}", zeros skipped
  std::string to_json() const;

  friend bool operator==(const SymFunc&, const SymFunc&) = default;
};

// m-expansion of e_lambda / h_lambda / s_lambda, built by expanding the
// defining polynomial in exactly d variables (e, h) or by semistandard
// filling counts (s).
SymFunc basis_vector_in_m(Basis b, const Partition& p);

// Exact change of basis; round-trips exactly. The monomial basis is the hub:
// every conversion runs through an exact rational linear solve against the
// target basis's m-expansion matrix.
SymFunc convert(const SymFunc& f, Basis target);

// Number of semistandard fillings of `shape` with content `content`
// (weakly increasing rows, strictly increasing columns). The content may be
// any composition; the count only depends on its multiset of parts.
long long kostka(const Partition& shape, const std::vector<int>& content);
long long kostka(const Partition& shape, const Partition& content);

// Signed special-rim-hook-tabloid count: the combinatorial inverse Kostka
// entry. As a matrix over partitions of d this is the exact inverse of the
// Kostka matrix.
long long inverse_kostka(const Partition& lambda, const Partition& mu);

// Matrices over partitions of d in canonical order: K[i][j] = kostka(p_i, p_j).
IntegerMatrix kostka_matrix(int d);
IntegerMatrix inverse_kostka_matrix(int d);            // combinatorial (rim hook) route
RationalMatrix inverse_kostka_matrix_algebraic(int d);  // Eigen inverse of K; the oracle route

// The omega involution: swaps the e and h labels, conjugates Schur indices.
SymFunc omega(const SymFunc& f);

// Value of f with n variables set to 1 and the rest to 0.
Rational specialize_ones(const SymFunc& f, int n);

}  // namespace chromsym
