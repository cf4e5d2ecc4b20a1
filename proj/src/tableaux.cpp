#include "chromsym/tableaux.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace chromsym {

Cell PTableau::cell_of(int element) const {
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j] == element) return Cell{(int)i + 1, (int)j + 1};
  throw std::invalid_argument("PTableau::cell_of: element not present");
}

bool PTableau::is_valid_for(const Poset& p) const {
  if ((int)rows.size() != shape.length()) return false;
  std::vector<bool> used(p.n(), false);
  int count = 0;
  for (int i = 1; i <= shape.length(); ++i) {
    if ((int)rows[i - 1].size() != shape.part(i)) return false;
    for (int j = 1; j <= shape.part(i); ++j) {
      int x = at({i, j});
      if (x < 0 || x >= p.n() || used[x]) return false;
      used[x] = true;
      ++count;
      if (i > 1 && !p.less(at({i - 1, j}), x)) return false;       // column condition
      if (j > 1 && p.less(x, at({i, j - 1}))) return false;        // row condition
    }
  }
  return count == p.n();
}

std::string PTableau::render() const {
  std::string out;
  for (const auto& row : rows) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

int RimHook::height() const {
  std::set<int> rows;
  for (const Cell& c : cells) rows.insert(c.row);
  return (int)rows.size();
}

bool RimHook::is_special() const {
  return std::any_of(cells.begin(), cells.end(), [](const Cell& c) { return c.col == 1; });
}

bool RimHook::contains(Cell c) const {
  return std::binary_search(cells.begin(), cells.end(), c);
}

bool RimHook::is_rim_hook() const {
  if (cells.empty()) return false;
  // no 2x2 block
  for (const Cell& c : cells)
    if (contains({c.row, c.col + 1}) && contains({c.row + 1, c.col}) &&
        contains({c.row + 1, c.col + 1}))
      return false;
  // edgewise connected
  std::set<Cell> seen{cells.front()};
  std::vector<Cell> stack{cells.front()};
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    for (Cell nb : {Cell{c.row - 1, c.col}, Cell{c.row + 1, c.col}, Cell{c.row, c.col - 1},
                    Cell{c.row, c.col + 1}})
      if (nb.row >= 1 && nb.col >= 1 && contains(nb) && seen.insert(nb).second)
        stack.push_back(nb);
  }
  return seen.size() == cells.size();
}

int SpecialRimHookTabloid::sign() const {
  int s = 1;
  for (const RimHook& h : hooks) s *= h.sign();
  return s;
}

Partition SpecialRimHookTabloid::type() const {
  std::vector<int> sizes;
  for (const RimHook& h : hooks) sizes.push_back(h.size());
  std::sort(sizes.rbegin(), sizes.rend());
  return Partition(sizes);
}

const RimHook& SpecialRimHookTabloid::hook_at(Cell c) const {
  return hooks[hook_index_at(c)];
}

int SpecialRimHookTabloid::hook_index_at(Cell c) const {
  for (size_t i = 0; i < hooks.size(); ++i)
    if (hooks[i].contains(c)) return (int)i;
  throw std::invalid_argument("SpecialRimHookTabloid: cell not covered");
}

namespace {

struct PeelStep {
  RimHook hook;
  std::vector<int> residue;  // shape after removal, trailing zeros stripped
};

// The unique removable special rim hook of `cur` that contains the
// bottom-left cell and whose topmost row is t (1-based); removal always
// leaves a legal diagram.
PeelStep peel_at(const std::vector<int>& cur, int t) {
  int r = (int)cur.size();
  std::vector<int> residue(cur.begin(), cur.end());
  RimHook hook;
  for (int i = t; i <= r; ++i) {
    int keep = (i < r) ? cur[i] - 1 : 0;  // cur[i] is row i+1, 1-based row i keeps cols 1..keep
    for (int j = keep + 1; j <= cur[i - 1]; ++j) hook.cells.push_back({i, j});
    residue[i - 1] = keep;
  }
  while (!residue.empty() && residue.back() == 0) residue.pop_back();
  std::sort(hook.cells.begin(), hook.cells.end());
  return {std::move(hook), std::move(residue)};
}

void srht_rec(const std::vector<int>& cur, std::vector<RimHook>& acc,
              std::map<int, int>& needed, bool filtered, const Partition& shape,
              std::vector<SpecialRimHookTabloid>& out) {
  if (cur.empty()) {
    SpecialRimHookTabloid t{shape, acc};
    std::sort(t.hooks.begin(), t.hooks.end(),
              [](const RimHook& a, const RimHook& b) { return a.cells.front() < b.cells.front(); });
    out.push_back(std::move(t));
    return;
  }
  int r = (int)cur.size();
  for (int t = 1; t <= r; ++t) {
    PeelStep step = peel_at(cur, t);
    if (filtered) {
      auto it = needed.find(step.hook.size());
      if (it == needed.end() || it->second == 0) continue;
      --it->second;
      acc.push_back(step.hook);
      srht_rec(step.residue, acc, needed, filtered, shape, out);
      acc.pop_back();
      ++it->second;
    } else {
      acc.push_back(step.hook);
      srht_rec(step.residue, acc, needed, filtered, shape, out);
      acc.pop_back();
    }
  }
}

}  // namespace

bool SpecialRimHookTabloid::is_valid() const {
  // tiling
  std::set<Cell> covered;
  int total = 0;
  for (const RimHook& h : hooks) {
    if (!h.is_rim_hook() || !h.is_special()) return false;
    for (const Cell& c : h.cells) {
      if (!shape.contains(c)) return false;
      if (!covered.insert(c).second) return false;
      ++total;
    }
  }
  if (total != shape.size()) return false;
  // bottom-first peelability
  std::vector<int> cur = shape.parts();
  std::vector<bool> removed(hooks.size(), false);
  while (!cur.empty()) {
    int r = (int)cur.size();
    Cell corner{r, 1};
    int idx = -1;
    for (size_t i = 0; i < hooks.size(); ++i)
      if (!removed[i] && hooks[i].contains(corner)) idx = (int)i;
    if (idx < 0) return false;
    int t = hooks[idx].cells.front().row;
    PeelStep step = peel_at(cur, t);
    if (!(step.hook == hooks[idx])) return false;
    removed[idx] = true;
    cur = step.residue;
  }
  return std::all_of(removed.begin(), removed.end(), [](bool b) { return b; });
}

std::string SpecialRimHookTabloid::render() const {
  std::string out;
  for (int i = 1; i <= shape.length(); ++i) {
    for (int j = 1; j <= shape.part(i); ++j) {
      if (j > 1) out += ' ';
      out += std::to_string(hook_index_at({i, j}) + 1);
    }
    out += '\n';
  }
  int s = sign();
  out += "type=" + to_string(type()) + " sign=" + (s > 0 ? "+1" : "-1") + '\n';
  return out;
}

std::vector<SpecialRimHookTabloid> enumerate_srht(const Partition& shape,
                                                  const std::optional<Partition>& type_filter) {
  std::vector<SpecialRimHookTabloid> out;
  if (type_filter && type_filter->size() != shape.size()) return out;
  std::map<int, int> needed;
  if (type_filter)
    for (int part : type_filter->parts()) ++needed[part];
  std::vector<RimHook> acc;
  std::vector<int> cur = shape.parts();
  srht_rec(cur, acc, needed, type_filter.has_value(), shape, out);
  return out;
}

long long count_srht_signed(const Partition& shape, const Partition& type) {
  long long total = 0;
  for (const auto& t : enumerate_srht(shape, type)) total += t.sign();
  return total;
}

namespace {

void p_tableaux_rec(const Poset& p, const Partition& shape, const std::vector<Cell>& cells,
                    size_t idx, uint32_t used, std::vector<std::vector<int>>& rows,
                    const std::function<void(const PTableau&)>& visit) {
  if (idx == cells.size()) {
    visit(PTableau{shape, rows});
    return;
  }
  Cell c = cells[idx];
  for (int x = 0; x < p.n(); ++x) {
    if ((used >> x) & 1) continue;
    if (c.row > 1 && !p.less(rows[c.row - 2][c.col - 1], x)) continue;  // column: above < x
    if (c.col > 1 && p.less(x, rows[c.row - 1][c.col - 2])) continue;   // row: not left > x
    rows[c.row - 1][c.col - 1] = x;
    p_tableaux_rec(p, shape, cells, idx + 1, used | (1u << x), rows, visit);
  }
}

void for_each_p_tableau(const Poset& p, const Partition& shape,
                        const std::function<void(const PTableau&)>& visit) {
  if (shape.size() != p.n())
    throw std::invalid_argument("enumerate_p_tableaux: |shape| must equal |P|");
  std::vector<Cell> cells;
  for (int i = 1; i <= shape.length(); ++i)
    for (int j = 1; j <= shape.part(i); ++j) cells.push_back({i, j});
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= shape.length(); ++i) rows.emplace_back(shape.part(i), -1);
  p_tableaux_rec(p, shape, cells, 0, 0, rows, visit);
}

}  // namespace

std::vector<PTableau> enumerate_p_tableaux(const Poset& p, const Partition& shape) {
  std::vector<PTableau> out;
  for_each_p_tableau(p, shape, [&](const PTableau& t) { out.push_back(t); });
  return out;
}

long long count_p_tableaux(const Poset& p, const Partition& shape) {
  long long n = 0;
  for_each_p_tableau(p, shape, [&](const PTableau&) { ++n; });
  return n;
}

std::vector<SpecialRimHookPTableau> enumerate_srhpt(const Poset& p, const Partition& type) {
  if (type.size() != p.n())
    throw std::invalid_argument("enumerate_srhpt: |type| must equal |P|");
  std::vector<SpecialRimHookPTableau> out;
  for (const Partition& shape : partitions_of(p.n())) {
    auto tabloids = enumerate_srht(shape, type);
    if (tabloids.empty()) continue;
    for (const PTableau& pt : enumerate_p_tableaux(p, shape))
      for (const auto& tab : tabloids) out.push_back({pt, tab});
  }
  return out;
}

SpecialRimHookPTableau sigma(const SpecialRimHookPTableau& t) {
  const Partition& shape = t.tabloid.shape;
  if (!shape.contains({2, 2}))
    throw std::invalid_argument("sigma: undefined on hook shapes");
  int i1 = t.tabloid.hook_index_at({1, 1});
  int i2 = t.tabloid.hook_index_at({2, 2});
  if (i1 == i2) throw std::logic_error("sigma: hooks through (1,1) and (2,2) must differ");

  RimHook h1 = t.tabloid.hooks[i1];
  RimHook h2 = t.tabloid.hooks[i2];

  std::vector<Cell> h2_row1;
  for (const Cell& c : h2.cells)
    if (c.row == 1) h2_row1.push_back(c);

  if (!h2_row1.empty()) {
    // transfer H2's first-row cells to H1
    std::erase_if(h2.cells, [](const Cell& c) { return c.row == 1; });
    h1.cells.insert(h1.cells.end(), h2_row1.begin(), h2_row1.end());
  } else {
    // rightmost cell of H2 is (2,m); move H1's first-row cells at cols >= m to H2
    int m = 0;
    for (const Cell& c : h2.cells) m = std::max(m, c.col);
    std::vector<Cell> moved;
    std::erase_if(h1.cells, [&](const Cell& c) {
      if (c.row == 1 && c.col >= m) {
        moved.push_back(c);
        return true;
      }
      return false;
    });
    h2.cells.insert(h2.cells.end(), moved.begin(), moved.end());
  }
  std::sort(h1.cells.begin(), h1.cells.end());
  std::sort(h2.cells.begin(), h2.cells.end());

  SpecialRimHookTabloid tab = t.tabloid;
  tab.hooks[i1] = std::move(h1);
  tab.hooks[i2] = std::move(h2);
  std::sort(tab.hooks.begin(), tab.hooks.end(),
            [](const RimHook& a, const RimHook& b) { return a.cells.front() < b.cells.front(); });
  return {t.tableau, std::move(tab)};
}

Orientation orientation_from_hook_tableau(const PTableau& t, const Poset& p, const Graph& g) {
  if (!is_hook(t.shape))
    throw std::invalid_argument("orientation_from_hook_tableau: shape must be a hook");
  if (!(g == incomparability_graph(p)))
    throw std::invalid_argument("orientation_from_hook_tableau: graph/poset mismatch");
  std::vector<int> col(p.n(), 0);
  for (int i = 1; i <= t.shape.length(); ++i)
    for (int j = 1; j <= t.shape.part(i); ++j) col[t.at({i, j})] = j;
  std::vector<bool> flip;
  for (auto [u, v] : g.edges()) {
    if (col[u] == col[v])
      throw std::logic_error("adjacent vertices share a column: not a P-tableau over P");
    flip.push_back(col[u] < col[v]);  // edge points from the righter column
  }
  Orientation o(g, flip);
  if (!o.is_acyclic()) throw std::logic_error("induced orientation is cyclic");
  return o;
}

namespace {

// The sinks of an acyclic orientation are pairwise non-adjacent in G, hence
// comparable in P; the proof of the hook correspondence leans on this, so we
// assert it instead of tie-breaking.
void require_chain(const Poset& p, const std::vector<int>& elems, const char* what) {
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = i + 1; j < elems.size(); ++j)
      if (!p.comparable(elems[i], elems[j]))
        throw std::logic_error(std::string(what) + " do not form a chain in P");
}

int poset_minimum(const Poset& p, const std::vector<int>& chain) {
  for (int x : chain) {
    bool least = true;
    for (int y : chain)
      if (y != x && !p.less(x, y)) {
        least = false;
        break;
      }
    if (least || chain.size() == 1) return x;
  }
  throw std::logic_error("chain has no least element");
}

}  // namespace

std::vector<PTableau> hook_tableaux_inducing(const Orientation& o, const Poset& p, int k) {
  Poset induced = orientation_induced_order(o);
  uint32_t all = p.n() ? (1u << p.n()) - 1 : 0;
  std::vector<int> sinks = induced.minimal_elements(all);
  int l = (int)sinks.size();
  if (k < 1 || k > l) return {};
  require_chain(p, sinks, "sinks");

  int u0 = poset_minimum(p, sinks);
  std::vector<int> others;
  for (int s : sinks)
    if (s != u0) others.push_back(s);

  int d = p.n();
  std::vector<int> shape_parts{d - k + 1};
  for (int i = 1; i < k; ++i) shape_parts.push_back(1);
  Partition shape(shape_parts);

  std::vector<PTableau> out;
  // (k-1)-subsets of the remaining l-1 sinks, in deterministic mask order
  for (uint32_t mask = 0; mask < (1u << others.size()); ++mask) {
    if (__builtin_popcount(mask) != k - 1) continue;
    std::vector<int> column{u0};
    for (size_t i = 0; i < others.size(); ++i)
      if ((mask >> i) & 1) column.push_back(others[i]);
    // arrange the chosen sinks in P-ascending order down the first column
    std::sort(column.begin() + 1, column.end(),
              [&](int a, int b) { return p.less(a, b); });

    uint32_t remaining = all;
    for (int x : column) remaining &= ~(1u << x);
    std::vector<int> row{u0};
    while (remaining) {
      std::vector<int> mins = induced.minimal_elements(remaining);
      require_chain(p, mins, "minimal elements of the residual suborder");
      int next = poset_minimum(p, mins);
      row.push_back(next);
      remaining &= ~(1u << next);
    }

    std::vector<std::vector<int>> rows{row};
    for (size_t i = 1; i < column.size(); ++i) rows.push_back({column[i]});
    out.push_back(PTableau{shape, std::move(rows)});
  }
  return out;
}

}  // namespace chromsym
