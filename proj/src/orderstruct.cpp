#include "chromsym/orderstruct.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <sstream>

namespace chromsym {

namespace {
constexpr int kMaxElements = 16;
constexpr int kPosetGuard = 7;
constexpr int kGraphGuard = 6;
constexpr int kEdgeGuard = 24;
}  // namespace

Poset::Poset(int n) : n_(n), up_(n, 0) {
  if (n < 0 || n > kMaxElements) throw std::invalid_argument("Poset: bad element count");
}

void Poset::add_less(int a, int b) {
  if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b)
    throw std::invalid_argument("Poset::add_less: bad pair");
  up_[a] |= uint16_t(1u << b);
}

void Poset::close_transitively() {
  for (int k = 0; k < n_; ++k)
    for (int a = 0; a < n_; ++a)
      if (less(a, k)) up_[a] |= up_[k];
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (less(a, b) && less(b, a)) throw std::invalid_argument("Poset: relation is cyclic");
  for (int a = 0; a < n_; ++a) up_[a] &= uint16_t(~(1u << a));
}

bool Poset::is_valid() const {
  for (int a = 0; a < n_; ++a) {
    if (less(a, a)) return false;
    for (int b = 0; b < n_; ++b) {
      if (less(a, b) && less(b, a)) return false;
      for (int c = 0; c < n_; ++c)
        if (less(a, b) && less(b, c) && !less(a, c)) return false;
    }
  }
  return true;
}

std::vector<int> Poset::minimal_elements(uint32_t subset) const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v) {
    if (!((subset >> v) & 1)) continue;
    bool minimal = true;
    for (int u = 0; u < n_; ++u)
      if (((subset >> u) & 1) && less(u, v)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(v);
  }
  return out;
}

Graph::Graph(int n) : n_(n), adj_(n, 0) {
  if (n < 0 || n > kMaxElements) throw std::invalid_argument("Graph: bad vertex count");
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
    throw std::invalid_argument("Graph::add_edge: bad edge");
  if (adjacent(u, v)) throw std::invalid_argument("Graph::add_edge: duplicate edge");
  adj_[u] |= uint16_t(1u << v);
  adj_[v] |= uint16_t(1u << u);
  edges_.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(edges_.begin(), edges_.end());
}

uint64_t Graph::edge_key() const {
  uint64_t key = 0;
  int bit = 0;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v, ++bit)
      if (adjacent(u, v)) key |= uint64_t(1) << bit;
  return (key << 5) | uint64_t(n_);
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  uint32_t seen = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n_; ++u)
      if (adjacent(v, u) && !((seen >> u) & 1)) {
        seen |= 1u << u;
        stack.push_back(u);
      }
  }
  return seen == (1u << n_) - 1;
}

Orientation::Orientation(const Graph& g, std::vector<bool> towards_lower)
    : graph_(&g), flip_(std::move(towards_lower)) {
  if (flip_.size() != g.edges().size())
    throw std::invalid_argument("Orientation: one direction bit per edge required");
}

std::pair<int, int> Orientation::directed_edge(size_t i) const {
  auto [u, v] = graph_->edges()[i];
  return flip_[i] ? std::pair{v, u} : std::pair{u, v};
}

std::vector<int> Orientation::sinks() const {
  std::vector<bool> has_out(graph_->n(), false);
  for (size_t i = 0; i < flip_.size(); ++i) has_out[directed_edge(i).first] = true;
  std::vector<int> out;
  for (int v = 0; v < graph_->n(); ++v)
    if (!has_out[v]) out.push_back(v);
  return out;
}

bool Orientation::is_acyclic() const {
  // Kahn peeling on the directed edges.
  int n = graph_->n();
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> succ(n);
  for (size_t i = 0; i < flip_.size(); ++i) {
    auto [a, b] = directed_edge(i);
    succ[a].push_back(b);
    ++indeg[b];
  }
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  int removed = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++removed;
    for (int w : succ[v])
      if (--indeg[w] == 0) queue.push_back(w);
  }
  return removed == n;
}

Graph incomparability_graph(const Poset& p) {
  Graph g(p.n());
  for (int u = 0; u < p.n(); ++u)
    for (int v = u + 1; v < p.n(); ++v)
      if (!p.comparable(u, v)) g.add_edge(u, v);
  return g;
}

std::optional<std::array<int, 4>> find_three_plus_one(const Poset& p) {
  int n = p.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (a == b || b == c || a == c) continue;
        if (!(p.less(a, b) && p.less(b, c))) continue;
        for (int d = 0; d < n; ++d) {
          if (d == a || d == b || d == c) continue;
          if (!p.comparable(d, a) && !p.comparable(d, b) && !p.comparable(d, c))
            return std::array<int, 4>{a, b, c, d};
        }
      }
  return std::nullopt;
}

bool is_three_plus_one_free(const Poset& p) { return !find_three_plus_one(p).has_value(); }

bool is_clawfree(const Graph& g) {
  int n = g.n();
  for (int v = 0; v < n; ++v)
    for (int a = 0; a < n; ++a) {
      if (!g.adjacent(v, a)) continue;
      for (int b = a + 1; b < n; ++b) {
        if (!g.adjacent(v, b) || g.adjacent(a, b)) continue;
        for (int c = b + 1; c < n; ++c)
          if (g.adjacent(v, c) && !g.adjacent(a, c) && !g.adjacent(b, c)) return false;
      }
    }
  return true;
}

namespace {

// Backtracking over edge directions with incremental reachability; a choice
// creating a directed cycle is pruned immediately.
void orient_rec(const Graph& g, size_t i, std::vector<bool>& flip,
                std::vector<uint16_t>& reach,
                const std::function<void(const std::vector<bool>&)>& leaf) {
  if (i == g.edges().size()) {
    leaf(flip);
    return;
  }
  auto [u, v] = g.edges()[i];
  for (int dir = 0; dir < 2; ++dir) {
    int from = dir ? v : u;
    int to = dir ? u : v;
    if ((reach[to] >> from) & 1) continue;  // would close a cycle
    auto saved = reach;
    for (int a = 0; a < g.n(); ++a)
      if (a == from || ((reach[a] >> from) & 1))
        reach[a] |= uint16_t((1u << to) | reach[to]);
    flip[i] = dir;
    orient_rec(g, i + 1, flip, reach, leaf);
    reach = saved;
  }
}

void for_each_acyclic_orientation(const Graph& g,
                                  const std::function<void(const std::vector<bool>&)>& leaf) {
  if ((int)g.edges().size() > kEdgeGuard)
    throw GuardExceeded("acyclic orientation enumeration refused: |E| = " +
                        std::to_string(g.edges().size()) + " exceeds the guard of " +
                        std::to_string(kEdgeGuard));
  std::vector<bool> flip(g.edges().size(), false);
  std::vector<uint16_t> reach(g.n(), 0);
  orient_rec(g, 0, flip, reach, leaf);
}

}  // namespace

std::map<int, long long> acyclic_orientation_sink_counts(const Graph& g) {
  std::map<int, long long> counts;
  for_each_acyclic_orientation(g, [&](const std::vector<bool>& flip) {
    Orientation o(g, flip);
    counts[(int)o.sinks().size()] += 1;
  });
  return counts;
}

std::vector<Orientation> acyclic_orientations(const Graph& g) {
  std::vector<Orientation> out;
  for_each_acyclic_orientation(g, [&](const std::vector<bool>& flip) { out.emplace_back(g, flip); });
  return out;
}

Poset orientation_induced_order(const Orientation& o) {
  if (!o.is_acyclic())
    throw std::invalid_argument("orientation_induced_order: orientation is cyclic");
  const Graph& g = o.graph();
  Poset p(g.n());
  // u < v iff directed path v -> u, so insert the reversed edges and close.
  for (size_t i = 0; i < g.edges().size(); ++i) {
    auto [from, to] = o.directed_edge(i);
    p.add_less(to, from);
  }
  p.close_transitively();
  // The paper uses "sink" and "minimal element" interchangeably; keep the
  // two views provably in sync.
  uint32_t all = g.n() ? (1u << g.n()) - 1 : 0;
  assert(p.minimal_elements(all) == o.sinks());
  return p;
}

namespace {

// Pairs (a,b), a<b, in lexicographic order; when pair (a,b) is assigned, every
// triple {i,a,b} with i<a is fully decided, so transitivity is checked there.
void poset_rec(int n, size_t pi, const std::vector<std::pair<int, int>>& pairs, Poset& p,
               const EnumerationFilter& filter, const std::function<void(const Poset&)>& visit) {
  if (pi == pairs.size()) {
    if (filter.three_plus_one_free && !is_three_plus_one_free(p)) return;
    visit(p);
    return;
  }
  auto [a, b] = pairs[pi];
  auto consistent = [&](int x, int y, int z) {
    // transitivity inside the triple
    int e[3] = {x, y, z};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          if (i == j || j == k || i == k) continue;
          if (p.less(e[i], e[j]) && p.less(e[j], e[k]) && !p.less(e[i], e[k])) return false;
        }
    return true;
  };
  auto try_choice = [&](int choice) {
    Poset saved = p;
    if (choice == 1) p.add_less(a, b);
    if (choice == 2) p.add_less(b, a);
    bool ok = true;
    for (int i = 0; i < a && ok; ++i) ok = consistent(i, a, b);
    if (ok) poset_rec(n, pi + 1, pairs, p, filter, visit);
    p = saved;
  };
  try_choice(0);
  try_choice(1);
  try_choice(2);
}

}  // namespace

void for_each_poset(int n, const std::function<void(const Poset&)>& visit,
                    EnumerationFilter filter) {
  if (n < 0 || n > kPosetGuard)
    throw GuardExceeded("poset enumeration refused: n = " + std::to_string(n) +
                        " exceeds the guard of " + std::to_string(kPosetGuard));
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  Poset p(n);
  poset_rec(n, 0, pairs, p, filter, visit);
}

std::vector<Poset> enumerate_posets(int n, EnumerationFilter filter) {
  std::vector<Poset> out;
  for_each_poset(n, [&](const Poset& p) { out.push_back(p); }, filter);
  return out;
}

void for_each_graph(int n, const std::function<void(const Graph&)>& visit,
                    EnumerationFilter filter) {
  if (n < 0 || n > kGraphGuard)
    throw GuardExceeded("graph enumeration refused: n = " + std::to_string(n) +
                        " exceeds the guard of " + std::to_string(kGraphGuard));
  int m = n * (n - 1) / 2;
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit)
        if ((mask >> bit) & 1) g.add_edge(u, v);
    if (filter.connected && !g.is_connected()) continue;
    visit(g);
  }
}

std::vector<Graph> enumerate_graphs(int n, EnumerationFilter filter) {
  std::vector<Graph> out;
  for_each_graph(n, [&](const Graph& g) { out.push_back(g); }, filter);
  return out;
}

Poset ordinal_sum_of_antichains(const std::vector<int>& nu) {
  int total = 0;
  for (int b : nu) {
    if (b < 1) throw std::invalid_argument("ordinal_sum_of_antichains: block sizes must be positive");
    total += b;
  }
  Poset p(total);
  int start = 0;
  for (int b : nu) {
    for (int x = 0; x < start; ++x)
      for (int y = start; y < start + b; ++y) p.add_less(x, y);
    start += b;
  }
  return p;
}

namespace {

// Shared line scanner for the two text formats.
std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
      line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    lines.push_back(start == std::string::npos ? std::string() : line.substr(start));
  }
  return lines;
}

[[noreturn]] void parse_fail(size_t lineno, const std::string& msg) {
  throw std::invalid_argument("line " + std::to_string(lineno + 1) + ": " + msg);
}

int parse_header(const std::vector<std::string>& lines, size_t& i, const std::string& kind) {
  while (i < lines.size() && lines[i].empty()) ++i;
  if (i >= lines.size()) throw std::invalid_argument("missing '" + kind + " n=<N>' header");
  std::istringstream hs(lines[i]);
  std::string word, nspec;
  hs >> word >> nspec;
  if (word != kind || nspec.rfind("n=", 0) != 0)
    parse_fail(i, "expected '" + kind + " n=<N>', got '" + lines[i] + "'");
  int n = std::stoi(nspec.substr(2));
  ++i;
  return n;
}

}  // namespace

Graph read_graph(std::istream& in) {
  auto lines = content_lines(in);
  size_t i = 0;
  Graph g(parse_header(lines, i, "graph"));
  for (; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::istringstream ls(lines[i]);
    int u, v;
    if (!(ls >> u >> v) || !(ls >> std::ws).eof()) parse_fail(i, "expected 'u v' edge");
    try {
      g.add_edge(u, v);
    } catch (const std::invalid_argument& e) {
      parse_fail(i, e.what());
    }
  }
  return g;
}

Poset read_poset(std::istream& in) {
  auto lines = content_lines(in);
  size_t i = 0;
  Poset p(parse_header(lines, i, "poset"));
  for (; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::istringstream ls(lines[i]);
    int u, v;
    std::string rel;
    if (!(ls >> u >> rel >> v) || rel != "<" || !(ls >> std::ws).eof())
      parse_fail(i, "expected 'u < v' cover relation");
    try {
      p.add_less(u, v);
    } catch (const std::invalid_argument& e) {
      parse_fail(i, e.what());
    }
  }
  p.close_transitively();
  return p;
}

namespace {
std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return in;
}
}  // namespace

Graph read_graph_file(const std::string& path) {
  auto in = open_or_throw(path);
  try {
    return read_graph(in);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

Poset read_poset_file(const std::string& path) {
  auto in = open_or_throw(path);
  try {
    return read_poset(in);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace chromsym
