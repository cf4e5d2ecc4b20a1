#include "chromsym/csf.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "chromsym/tableaux.hpp"

namespace chromsym {

namespace {

constexpr int kVertexGuard = 9;

// Walks every set partition of the vertices into independent sets
// (restricted-growth assignment with an independence prune).
void stable_partitions_rec(const Graph& g, int v, std::vector<std::vector<int>>& blocks,
                           const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  if (v == g.n()) {
    visit(blocks);
    return;
  }
  size_t existing = blocks.size();  // deeper calls grow the vector
  for (size_t b = 0; b < existing; ++b) {
    bool clash = false;
    for (int u : blocks[b])
      if (g.adjacent(u, v)) {
        clash = true;
        break;
      }
    if (clash) continue;
    blocks[b].push_back(v);
    stable_partitions_rec(g, v + 1, blocks, visit);
    blocks[b].pop_back();
  }
  blocks.push_back({v});
  stable_partitions_rec(g, v + 1, blocks, visit);
  blocks.pop_back();
}

}  // namespace

SymFunc chromatic_symmetric_function(const Graph& g) {
  if (g.n() > kVertexGuard)
    throw GuardExceeded("chromatic_symmetric_function refused: |V| = " + std::to_string(g.n()) +
                        " exceeds the guard of " + std::to_string(kVertexGuard));
  SymFunc x = SymFunc::zero(g.n(), Basis::Monomial);
  std::vector<std::vector<int>> blocks;
  stable_partitions_rec(g, 0, blocks, [&](const std::vector<std::vector<int>>& bs) {
    std::vector<int> sizes;
    for (const auto& b : bs) sizes.push_back((int)b.size());
    std::sort(sizes.rbegin(), sizes.rend());
    Partition type(sizes);
    // a stable partition of type lambda contributes the augmented monomial:
    // coefficient prod_k (multiplicity of part k)!
    Integer weight = 1;
    for (int k = 1; k <= (type.empty() ? 0 : type.part(1)); ++k)
      weight *= factorial(type.multiplicity(k));
    x.at(type) += Rational(weight);
  });
  return x;
}

namespace {

std::vector<Integer> integer_vector(const RationalVector& v) {
  std::vector<Integer> out;
  out.reserve((size_t)v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(as_integer(v[i]));
  return out;
}

}  // namespace

std::vector<Integer> a_coefficients(const Graph& g) {
  return integer_vector(convert(chromatic_symmetric_function(g), Basis::Elementary).coeffs);
}

std::vector<Integer> f_coefficients(const Graph& g) {
  SymFunc s = convert(chromatic_symmetric_function(g), Basis::Schur);
  const auto& parts = partitions_of(g.n());
  std::vector<Integer> out;
  out.reserve(parts.size());
  for (const Partition& lambda : parts)
    out.push_back(as_integer(s.coeffs[canonical_index(conjugate(lambda))]));
  return out;
}

std::vector<Integer> c_by_length(const Graph& g) {
  std::vector<Integer> a = a_coefficients(g);
  const auto& parts = partitions_of(g.n());
  std::vector<Integer> c(std::max(g.n(), 0), 0);
  for (size_t i = 0; i < parts.size(); ++i)
    if (parts[i].length() >= 1) c[parts[i].length() - 1] += a[i];
  return c;
}

Integer a_coefficient_via_theorem1(const Poset& p, const Partition& lambda) {
  if (lambda.size() != p.n())
    throw std::invalid_argument("a_coefficient_via_theorem1: |lambda| must equal |P|");
  if (auto witness = find_three_plus_one(p)) {
    auto [a, b, c, d] = *witness;
    throw HypothesisViolation(
        "poset is not (3+1)-free: elements {" + std::to_string(a) + " < " + std::to_string(b) +
        " < " + std::to_string(c) + "} form a chain with " + std::to_string(d) +
        " incomparable to all three; the signed-tableau formula is not asserted here");
  }
  // Same signed sum as enumerate_srhpt, factored by shape.
  Integer total = 0;
  for (const Partition& shape : partitions_of(p.n())) {
    long long signed_tabloids = count_srht_signed(shape, lambda);
    if (signed_tabloids == 0) continue;
    total += Integer(signed_tabloids) * count_p_tableaux(p, shape);
  }
  return total;
}

Integer count_proper_colorings(const Graph& g, int palette) {
  if (palette < 0) throw std::invalid_argument("palette must be nonnegative");
  Integer count = 0;
  std::vector<int> color(g.n(), 0);
  std::function<void(int)> rec = [&](int v) {
    if (v == g.n()) {
      ++count;
      return;
    }
    for (int c = 0; c < palette; ++c) {
      bool ok = true;
      for (int u = 0; u < v; ++u)
        if (g.adjacent(u, v) && color[u] == c) {
          ok = false;
          break;
        }
      if (ok) {
        color[v] = c;
        rec(v + 1);
      }
    }
  };
  rec(0);
  return count;
}

CsfReport csf_report(const Graph& g, const std::string& id) {
  CsfReport r;
  r.id = id;
  r.degree = g.n();
  r.x_in_m = chromatic_symmetric_function(g);
  r.a = a_coefficients(g);
  r.f = f_coefficients(g);
  r.c = c_by_length(g);
  r.kappa.assign(std::max(g.n(), 0), 0);
  for (auto [sinks, count] : acyclic_orientation_sink_counts(g))
    if (sinks >= 1) r.kappa[sinks - 1] = count;
  return r;
}

CsfReport csf_report(const Poset& p, const std::string& id) {
  return csf_report(incomparability_graph(p), id);
}

std::string CsfReport::to_json() const {
  nlohmann::json j;
  j["id"] = id;
  j["degree"] = degree;
  j["x"] = nlohmann::json::parse(x_in_m.to_json());
  const auto& parts = partitions_of(degree);
  auto vec = [&](const std::vector<Integer>& v, bool by_partition) {
    nlohmann::json arr = nlohmann::json::array();
    for (size_t i = 0; i < v.size(); ++i) {
      nlohmann::json item;
      item[by_partition ? "partition" : "length"] =
          by_partition ? nlohmann::json(to_string(parts[i])) : nlohmann::json((int)i + 1);
      item["value"] = v[i].str();
      arr.push_back(item);
    }
    return arr;
  };
  j["a"] = vec(a, true);
  j["f"] = vec(f, true);
  j["c"] = vec(c, false);
  j["kappa"] = vec(kappa, false);
  return j.dump();
}

std::string CsfReport::to_tsv() const {
  const auto& parts = partitions_of(degree);
  std::ostringstream out;
  out << "partition\tX_m\ta\tf\n";
  for (size_t i = 0; i < parts.size(); ++i)
    out << to_string(parts[i]) << '\t' << x_in_m.coeffs[i] << '\t' << a[i] << '\t' << f[i] << '\n';
  out << "\nlength\tc\tkappa\n";
  for (size_t l = 0; l < c.size(); ++l) out << l + 1 << '\t' << c[l] << '\t' << kappa[l] << '\n';
  return out.str();
}

std::string CsfReport::pretty() const {
  const auto& parts = partitions_of(degree);
  std::ostringstream out;
  out << "graph: " << id << '\n';
  out << "degree: " << degree << '\n';
  out << "X = " << x_in_m.pretty() << '\n';
  for (size_t i = 0; i < parts.size(); ++i)
    out << "a[" << to_string(parts[i]) << "] = " << a[i] << '\n';
  for (size_t i = 0; i < parts.size(); ++i)
    out << "f[" << to_string(parts[i]) << "] = " << f[i] << '\n';
  for (size_t l = 0; l < c.size(); ++l) out << "c[" << l + 1 << "] = " << c[l] << '\n';
  for (size_t l = 0; l < kappa.size(); ++l)
    out << "kappa[" << l + 1 << "] = " << kappa[l] << '\n';
  return out.str();
}

}  // namespace chromsym
