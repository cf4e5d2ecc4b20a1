#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chromsym/orderstruct.hpp"
#include "chromsym/partition.hpp"

namespace chromsym {

// Filling of a Ferrers shape by the elements of a poset, each used once;
// columns strictly increase downward in the poset order, row neighbors x,y
// satisfy "not x > y".
struct PTableau {
  Partition shape;
  std::vector<std::vector<int>> rows;  // rows[i-1][j-1] = element at cell (i,j)

  int at(Cell c) const { return rows[c.row - 1][c.col - 1]; }
  Cell cell_of(int element) const;
  bool is_valid_for(const Poset& p) const;
  std::string render() const;

  friend bool operator==(const PTableau&, const PTableau&) = default;
};

// Border strip: edgewise connected, no 2x2 block. Special iff it meets
// column 1. Sign is (-1)^(height-1).
struct RimHook {
  std::vector<Cell> cells;  // sorted

  int size() const { return (int)cells.size(); }
  int height() const;
  int sign() const { return height() % 2 == 1 ? 1 : -1; }
  bool is_special() const;
  bool contains(Cell c) const;
  // Structural border-strip check: connected, no 2x2 block.
  bool is_rim_hook() const;

  friend bool operator==(const RimHook&, const RimHook&) = default;
};

// Decomposition of a shape into special rim hooks, iteratively peelable.
struct SpecialRimHookTabloid {
  Partition shape;
  std::vector<RimHook> hooks;  // sorted by topmost-then-leftmost cell

  int sign() const;
  Partition type() const;  // multiset of hook sizes
  int hook_count() const { return (int)hooks.size(); }
  const RimHook& hook_at(Cell c) const;
  int hook_index_at(Cell c) const;  // 0-based into hooks
  // Full invariant check: tiling, rim-hook structure, specialness, and
  // bottom-first peelability.
  bool is_valid() const;
  std::string render() const;

  friend bool operator==(const SpecialRimHookTabloid&, const SpecialRimHookTabloid&) = default;
};

// Pair (P-tableau, tabloid) of equal shape; its sign is the tabloid's.
struct SpecialRimHookPTableau {
  PTableau tableau;
  SpecialRimHookTabloid tabloid;

  int sign() const { return tabloid.sign(); }

  friend bool operator==(const SpecialRimHookPTableau&, const SpecialRimHookPTableau&) = default;
};

// All P-tableaux of the given shape, by row-major backtracking.
std::vector<PTableau> enumerate_p_tableaux(const Poset& p, const Partition& shape);
long long count_p_tableaux(const Poset& p, const Partition& shape);

// All special rim hook tabloids of a shape (optionally of a fixed type),
// each exactly once via canonical bottom-first peeling: at every step the
// removed hook is the one containing the bottom-left cell of the residue.
std::vector<SpecialRimHookTabloid> enumerate_srht(const Partition& shape,
                                                  const std::optional<Partition>& type_filter = {});

// Signed tabloid count of given shape and type; this is the combinatorial
// route to the inverse Kostka entry K^-1[type][shape].
long long count_srht_signed(const Partition& shape, const Partition& type);

// All special rim hook P-tableaux of a given type: cross product of
// P-tableaux and tabloids over every shape of |P| cells.
std::vector<SpecialRimHookPTableau> enumerate_srhpt(const Poset& p, const Partition& type);

// Sign-reversing involution on non-hook-shaped special rim hook P-tableaux.
// Exchanges row-1 cells between the hook through (1,1) and the hook through
// (2,2); the P-tableau part and the hook count are untouched. Throws on
// hook-shaped input.
SpecialRimHookPTableau sigma(const SpecialRimHookPTableau& t);

// A hook-shaped P-tableau induces an acyclic orientation of the
// incomparability graph: each edge points from the strictly-righter column
// to the lefter one. `g` must be incomparability_graph(p).
Orientation orientation_from_hook_tableau(const PTableau& t, const Poset& p, const Graph& g);

// All hook-shaped P-tableaux with k first-column cells inducing the acyclic
// orientation o; there are exactly C(l-1, k-1) of them where l = #sinks.
std::vector<PTableau> hook_tableaux_inducing(const Orientation& o, const Poset& p, int k);

}  // namespace chromsym
