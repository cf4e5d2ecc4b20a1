#include "chromsym/symfunc.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "chromsym/tableaux.hpp"

namespace chromsym {

char basis_letter(Basis b) {
  switch (b) {
    case Basis::Monomial: return 'm';
    case Basis::Elementary: return 'e';
    case Basis::Homogeneous: return 'h';
    case Basis::Schur: return 's';
  }
  throw std::logic_error("bad basis tag");
}

Basis parse_basis(const std::string& s) {
  if (s == "m") return Basis::Monomial;
  if (s == "e") return Basis::Elementary;
  if (s == "h") return Basis::Homogeneous;
  if (s == "s") return Basis::Schur;
  throw std::invalid_argument("unknown basis '" + s + "' (expected m|e|h|s)");
}

Integer as_integer(const Rational& q) {
  if (boost::multiprecision::denominator(q) != 1)
    throw std::logic_error("expected an integer, got " + q.str());
  return Integer(boost::multiprecision::numerator(q));
}

SymFunc SymFunc::zero(int degree, Basis basis) {
  SymFunc f;
  f.degree = degree;
  f.basis = basis;
  f.coeffs = RationalVector::Zero((Eigen::Index)partitions_of(degree).size());
  return f;
}

SymFunc SymFunc::unit(Basis basis, const Partition& p) {
  SymFunc f = zero(p.size(), basis);
  f.coeffs[canonical_index(p)] = 1;
  return f;
}

const Rational& SymFunc::at(const Partition& p) const {
  if (p.size() != degree) throw std::invalid_argument("SymFunc::at: degree mismatch");
  return coeffs[canonical_index(p)];
}

Rational& SymFunc::at(const Partition& p) {
  if (p.size() != degree) throw std::invalid_argument("SymFunc::at: degree mismatch");
  return coeffs[canonical_index(p)];
}

std::string SymFunc::pretty() const {
  const auto& parts = partitions_of(degree);
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += coeffs[i].str();
    out += "·";
    out += basis_letter(basis);
    out += "_{" + to_string(parts[i]) + "}";
  }
  return out.empty() ? "0" : out;
}

std::string SymFunc::to_json() const {
  nlohmann::json j;
  j["degree"] = degree;
  j["basis"] = std::string(1, basis_letter(basis));
  j["coeffs"] = nlohmann::json::array();
  const auto& parts = partitions_of(degree);
  for (size_t i = 0; i < parts.size(); ++i) {
    nlohmann::json term;
    term["partition"] = to_string(parts[i]);
    term["num"] = boost::multiprecision::numerator(coeffs[i]).str();
    term["den"] = boost::multiprecision::denominator(coeffs[i]).str();
    j["coeffs"].push_back(term);
  }
  return j.dump();
}

namespace {

// Sparse polynomial in exactly d variables, keyed by exponent vectors.
using Poly = std::map<std::vector<int>, Rational>;

Poly poly_one(int d) { return {{std::vector<int>(d, 0), Rational(1)}}; }

Poly poly_mul(const Poly& a, const Poly& b, int d) {
  Poly out;
  std::vector<int> e(d);
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      for (int i = 0; i < d; ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  return out;
}

// e_k in d variables: all squarefree monomials of degree k.
Poly elementary_poly(int k, int d) {
  Poly out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  auto emit = [&] {
    std::vector<int> e(d, 0);
    for (int i : idx) e[i] = 1;
    out[e] = 1;
  };
  if (k == 0) return poly_one(d);
  if (k > d) return {};
  while (true) {
    emit();
    int i = k - 1;
    while (i >= 0 && idx[i] == d - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// h_k in d variables: all monomials of degree k.
void homog_rec(int var, int left, int d, std::vector<int>& e, Poly& out) {
  if (var == d - 1) {
    e[var] = left;
    out[e] = 1;
    return;
  }
  for (int take = 0; take <= left; ++take) {
    e[var] = take;
    homog_rec(var + 1, left - take, d, e, out);
  }
}

Poly homogeneous_poly(int k, int d) {
  if (k == 0 || d == 0) return poly_one(d);
  Poly out;
  std::vector<int> e(d, 0);
  homog_rec(0, k, d, e, out);
  return out;
}

// Coefficient of m_mu = coefficient of the single monomial x^mu.
Rational m_coefficient(const Poly& poly, const Partition& mu, int d) {
  std::vector<int> key(d, 0);
  for (int i = 0; i < mu.length(); ++i) key[i] = mu.parts()[i];
  auto it = poly.find(key);
  return it == poly.end() ? Rational(0) : it->second;
}

long long kostka_count(const Partition& shape, const std::vector<int>& content);

}  // namespace

SymFunc basis_vector_in_m(Basis b, const Partition& p) {
  int d = p.size();
  SymFunc f = SymFunc::zero(d, Basis::Monomial);
  const auto& all = partitions_of(d);
  if (b == Basis::Monomial) {
    f.coeffs[canonical_index(p)] = 1;
    return f;
  }
  if (b == Basis::Schur) {
    for (size_t i = 0; i < all.size(); ++i)
      f.coeffs[i] = kostka_count(p, all[i].parts());
    return f;
  }
  Poly poly = poly_one(d);
  for (int part : p.parts()) {
    Poly factor = (b == Basis::Elementary) ? elementary_poly(part, d) : homogeneous_poly(part, d);
    poly = poly_mul(poly, factor, d);
  }
  for (size_t i = 0; i < all.size(); ++i) f.coeffs[i] = m_coefficient(poly, all[i], d);
  return f;
}

namespace {

// Per-degree transition tables: the m-expansion matrix of each basis
// (columns indexed by partitions in canonical order) and its LU.
struct TransitionTables {
  RationalMatrix to_m[4];
  std::unique_ptr<Eigen::FullPivLU<RationalMatrix>> lu[4];
};

const TransitionTables& tables_for(int d) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<TransitionTables>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(d);
  if (it != cache.end()) return *it->second;

  auto t = std::make_unique<TransitionTables>();
  const auto& parts = partitions_of(d);
  Eigen::Index n = (Eigen::Index)parts.size();
  for (Basis b : {Basis::Monomial, Basis::Elementary, Basis::Homogeneous, Basis::Schur}) {
    RationalMatrix m(n, n);
    for (Eigen::Index col = 0; col < n; ++col)
      m.col(col) = basis_vector_in_m(b, parts[col]).coeffs;
    int bi = (int)b;
    t->to_m[bi] = std::move(m);
    t->lu[bi] = std::make_unique<Eigen::FullPivLU<RationalMatrix>>(t->to_m[bi]);
    if (!t->lu[bi]->isInvertible())
      throw std::logic_error("basis matrix is singular; this cannot happen");
  }
  return *cache.emplace(d, std::move(t)).first->second;
}

}  // namespace

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis == target) return f;
  const TransitionTables& t = tables_for(f.degree);
  RationalVector in_m = t.to_m[(int)f.basis] * f.coeffs;
  SymFunc out = SymFunc::zero(f.degree, target);
  out.coeffs = (target == Basis::Monomial) ? in_m : t.lu[(int)target]->solve(in_m);
  return out;
}

namespace {

// Semistandard fillings by row-major backtracking: weakly increasing rows,
// strictly increasing columns, entry multiplicities fixed by the content.
long long kostka_rec(const Partition& shape, std::vector<int>& remaining,
                     std::vector<std::vector<int>>& rows, int i, int j) {
  if (i > shape.length()) return 1;
  int ni = i, nj = j + 1;
  if (nj > shape.part(i)) {
    ni = i + 1;
    nj = 1;
  }
  long long total = 0;
  int lo = (j > 1) ? rows[i - 1][j - 2] : 1;                 // >= left
  int above = (i > 1) ? rows[i - 2][j - 1] : 0;              // > above
  lo = std::max(lo, above + 1);
  for (int v = lo; v <= (int)remaining.size(); ++v) {
    if (remaining[v - 1] == 0) continue;
    --remaining[v - 1];
    rows[i - 1][j - 1] = v;
    total += kostka_rec(shape, remaining, rows, ni, nj);
    ++remaining[v - 1];
  }
  return total;
}

long long kostka_count(const Partition& shape, const std::vector<int>& content) {
  int total = 0;
  for (int c : content) {
    if (c < 0) throw std::invalid_argument("kostka: content parts must be nonnegative");
    total += c;
  }
  if (total != shape.size())
    throw std::invalid_argument("kostka: |shape| and |content| must agree");
  if (shape.empty()) return 1;
  std::vector<int> remaining = content;
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= shape.length(); ++i) rows.emplace_back(shape.part(i), 0);
  return kostka_rec(shape, remaining, rows, 1, 1);
}

}  // namespace

long long kostka(const Partition& shape, const std::vector<int>& content) {
  return kostka_count(shape, content);
}

long long kostka(const Partition& shape, const Partition& content) {
  return kostka_count(shape, content.parts());
}

long long inverse_kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("inverse_kostka: |lambda| and |mu| must agree");
  return count_srht_signed(mu, lambda);
}

IntegerMatrix kostka_matrix(int d) {
  const auto& parts = partitions_of(d);
  Eigen::Index n = (Eigen::Index)parts.size();
  IntegerMatrix k(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) k(i, j) = kostka(parts[i], parts[j]);
  return k;
}

IntegerMatrix inverse_kostka_matrix(int d) {
  const auto& parts = partitions_of(d);
  Eigen::Index n = (Eigen::Index)parts.size();
  IntegerMatrix k(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) k(i, j) = inverse_kostka(parts[i], parts[j]);
  return k;
}

RationalMatrix inverse_kostka_matrix_algebraic(int d) {
  RationalMatrix k = kostka_matrix(d).cast<Rational>();
  Eigen::FullPivLU<RationalMatrix> lu(k);
  if (!lu.isInvertible()) throw std::logic_error("Kostka matrix is singular; this cannot happen");
  return lu.inverse();
}

SymFunc omega(const SymFunc& f) {
  switch (f.basis) {
    case Basis::Elementary: {
      SymFunc out = f;
      out.basis = Basis::Homogeneous;
      return out;
    }
    case Basis::Homogeneous: {
      SymFunc out = f;
      out.basis = Basis::Elementary;
      return out;
    }
    case Basis::Schur: {
      SymFunc out = SymFunc::zero(f.degree, Basis::Schur);
      const auto& parts = partitions_of(f.degree);
      for (size_t i = 0; i < parts.size(); ++i)
        out.coeffs[canonical_index(conjugate(parts[i]))] = f.coeffs[i];
      return out;
    }
    case Basis::Monomial:
      return convert(omega(convert(f, Basis::Schur)), Basis::Monomial);
  }
  throw std::logic_error("bad basis tag");
}

Rational specialize_ones(const SymFunc& f, int n) {
  if (n < 0) throw std::invalid_argument("specialize_ones: n must be nonnegative");
  SymFunc m = convert(f, Basis::Monomial);
  const auto& parts = partitions_of(f.degree);
  Rational total = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    const Partition& p = parts[i];
    if (p.length() > n) continue;
    // m_p(1^n) = n! / ((n - ell)! * prod_k mult_k!)
    Integer ways = 1;
    for (int j = 0; j < p.length(); ++j) ways *= n - j;
    Integer dup = 1;
    for (int k = 1; k <= p.part(1); ++k) dup *= factorial(p.multiplicity(k));
    total += f.coeffs[i] * Rational(ways) / Rational(dup);
  }
  return total;
}

}  // namespace chromsym
