#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chromsym {

// Raised when an enumeration guard would be exceeded.
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite strict partial order on elements 0..n-1. Relation stored as
// per-element bitmasks, so n is capped at 16 (far above every guard here).
class Poset {
 public:
  explicit Poset(int n);

  int n() const { return n_; }
  bool less(int a, int b) const { return (up_[a] >> b) & 1; }
  void add_less(int a, int b);  // raw insertion, no closure

  // Transitive closure in place; throws on a</b cycle (a<b and b<a).
  void close_transitively();

  // Checks irreflexivity, antisymmetry, transitivity by direct scan.
  bool is_valid() const;

  // Elements of `subset` (bitmask; ~0 = all) with no smaller element in subset.
  std::vector<int> minimal_elements(uint32_t subset) const;

  bool comparable(int a, int b) const { return less(a, b) || less(b, a); }

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  int n_;
  std::vector<uint16_t> up_;  // up_[a] bit b set iff a < b
};

// Finite simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  explicit Graph(int n);

  int n() const { return n_; }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }  // u < v
  uint16_t neighbors(int v) const { return adj_[v]; }

  // Edge-set bitmask over the fixed pair order (0,1),(0,2),...,(n-2,n-1);
  // combined with n this is a complete key for memoizing per-graph results.
  uint64_t edge_key() const;

  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  std::vector<uint16_t> adj_;
  std::vector<std::pair<int, int>> edges_;
};

// One direction per edge of a fixed underlying graph.
// Bit i false: edges()[i] runs u -> v (with u < v); true: v -> u.
class Orientation {
 public:
  Orientation(const Graph& g, std::vector<bool> towards_lower);

  const Graph& graph() const { return *graph_; }
  std::pair<int, int> directed_edge(size_t i) const;  // (from, to)
  std::vector<int> sinks() const;                     // no outgoing edge
  bool is_acyclic() const;

  friend bool operator==(const Orientation& a, const Orientation& b) {
    return *a.graph_ == *b.graph_ && a.flip_ == b.flip_;
  }

 private:
  const Graph* graph_;
  std::vector<bool> flip_;
};

Graph incomparability_graph(const Poset& p);

bool is_three_plus_one_free(const Poset& p);

// The obstruction witness when a poset is not (3+1)-free: (chain a<b<c, isolated d).
std::optional<std::array<int, 4>> find_three_plus_one(const Poset& p);

bool is_clawfree(const Graph& g);

// Sink-count distribution over acyclic orientations: result[l] = number of
// acyclic orientations with exactly l sinks. Plain orientation enumeration
// with early cycle pruning; guarded at |E| <= 24.
std::map<int, long long> acyclic_orientation_sink_counts(const Graph& g);

// All acyclic orientations (same guard).
std::vector<Orientation> acyclic_orientations(const Graph& g);

// Poset induced by an acyclic orientation: u < v iff a directed path runs
// from v to u; minimal elements coincide with the sinks (asserted).
Poset orientation_induced_order(const Orientation& o);

struct EnumerationFilter {
  bool three_plus_one_free = false;
  bool connected = false;  // graphs only
};

// All labeled strict partial orders on n elements (guard n <= 7), in a
// deterministic order, streamed to the visitor.
void for_each_poset(int n, const std::function<void(const Poset&)>& visit,
                    EnumerationFilter filter = {});
std::vector<Poset> enumerate_posets(int n, EnumerationFilter filter = {});

// All labeled simple graphs on n vertices (guard n <= 6).
void for_each_graph(int n, const std::function<void(const Graph&)>& visit,
                    EnumerationFilter filter = {});
std::vector<Graph> enumerate_graphs(int n, EnumerationFilter filter = {});

// Blocks of sizes nu_i; x < y iff block(x) precedes block(y).
Poset ordinal_sum_of_antichains(const std::vector<int>& nu);

// File formats: "graph n=<N>" / "poset n=<N>" headers, then "u v" edge or
// "u < v" cover lines; '#' starts a comment. Poset loader closes
// transitively and rejects cyclic cover sets.
Graph read_graph(std::istream& in);
Poset read_poset(std::istream& in);
Graph read_graph_file(const std::string& path);
Poset read_poset_file(const std::string& path);

}  // namespace chromsym
