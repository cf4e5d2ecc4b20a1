#include <doctest.h>

#include "chromsym/symfunc.hpp"
#include "chromsym/tableaux.hpp"

#include <map>

using namespace chromsym;

namespace {

// The running example: 0 < 2 with 1 incomparable to both.
Poset p3_poset() {
  Poset p(3);
  p.add_less(0, 2);
  return p;
}

Poset chain(int n) {
  Poset p(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) p.add_less(a, b);
  return p;
}

long long binom_ll(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("P-tableau counts on the running example") {
  Poset p = p3_poset();
  CHECK(count_p_tableaux(p, Partition({3})) == 4);
  CHECK(count_p_tableaux(p, Partition({2, 1})) == 1);
  CHECK(count_p_tableaux(p, Partition({1, 1, 1})) == 0);

  PTableau only = enumerate_p_tableaux(p, Partition({2, 1})).front();
  CHECK(only.rows == std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK(only.is_valid_for(p));
  CHECK(only.cell_of(2) == Cell{2, 1});
  CHECK(only.render() == "0 1\n2\n");
  CHECK_THROWS(only.cell_of(5));
}

TEST_CASE("P-tableaux of antichains and chains") {
  Poset antichain(3);
  CHECK(count_p_tableaux(antichain, Partition({3})) == 6);
  CHECK(count_p_tableaux(antichain, Partition({1, 1, 1})) == 0);

  // On a chain, P-tableaux are standard Young tableaux.
  CHECK(count_p_tableaux(chain(3), Partition({3})) == 1);
  CHECK(count_p_tableaux(chain(3), Partition({2, 1})) == 2);
  CHECK(count_p_tableaux(chain(3), Partition({1, 1, 1})) == 1);
  CHECK(count_p_tableaux(chain(4), Partition({2, 2})) == 2);

  CHECK_THROWS(count_p_tableaux(chain(3), Partition({2})));

  for (const auto& t : enumerate_p_tableaux(chain(4), Partition({2, 2})))
    CHECK(t.is_valid_for(chain(4)));
}

TEST_CASE("rim hook structure") {
  RimHook row1{{{1, 1}, {1, 2}}};
  CHECK(row1.height() == 1);
  CHECK(row1.sign() == 1);
  CHECK(row1.is_special());
  CHECK(row1.is_rim_hook());

  RimHook bent{{{1, 2}, {2, 1}, {2, 2}}};
  CHECK(bent.height() == 2);
  CHECK(bent.sign() == -1);
  CHECK(bent.is_special());
  CHECK(bent.is_rim_hook());

  RimHook off_column{{{1, 2}, {2, 2}}};
  CHECK(off_column.height() == 2);
  CHECK_FALSE(off_column.is_special());

  RimHook square{{{1, 1}, {1, 2}, {2, 1}, {2, 2}}};
  CHECK_FALSE(square.is_rim_hook());  // 2x2 block

  RimHook split{{{1, 1}, {1, 3}}};
  CHECK_FALSE(split.is_rim_hook());  // not edge-connected
}

TEST_CASE("special rim hook tabloids of shape (2,2)") {
  auto all = enumerate_srht(Partition({2, 2}));
  REQUIRE(all.size() == 2);
  std::map<std::string, int> sign_by_type;
  for (const auto& t : all) {
    CHECK(t.is_valid());
    sign_by_type[to_string(t.type())] = t.sign();
  }
  CHECK(sign_by_type.size() == 2);
  CHECK(sign_by_type["2,2"] == 1);
  CHECK(sign_by_type["3,1"] == -1);

  auto filtered = enumerate_srht(Partition({2, 2}), Partition({3, 1}));
  REQUIRE(filtered.size() == 1);
  CHECK(filtered.front().hook_count() == 2);
  CHECK(filtered.front().hook_at({2, 2}).size() == 3);
  CHECK(filtered.front().render() == "1 2\n2 2\ntype=3,1 sign=-1\n");
  CHECK(enumerate_srht(Partition({2, 2}), Partition({4})).empty());
  CHECK(enumerate_srht(Partition({2, 2}), Partition({2})).empty());  // size mismatch
}

TEST_CASE("every enumerated tabloid is valid and the type filter is exact") {
  for (int d = 1; d <= 6; ++d)
    for (const auto& shape : partitions_of(d)) {
      auto all = enumerate_srht(shape);
      std::map<std::string, long long> by_type;
      for (const auto& t : all) {
        CHECK(t.is_valid());
        by_type[to_string(t.type())] += 1;
      }
      for (const auto& type : partitions_of(d)) {
        auto it = by_type.find(to_string(type));
        CHECK((long long)enumerate_srht(shape, type).size() ==
              (it == by_type.end() ? 0 : it->second));
      }
    }
}

TEST_CASE("hook shapes carry C(c-1, l-1) tabloids of uniform sign") {
  for (int d = 1; d <= 7; ++d)
    for (const auto& shape : partitions_of(d)) {
      if (!is_hook(shape)) continue;
      int c = first_column_length(shape);
      std::map<int, long long> count_by_hooks;
      for (const auto& t : enumerate_srht(shape)) {
        count_by_hooks[t.hook_count()] += 1;
        CHECK(t.sign() == ((c - t.hook_count()) % 2 == 0 ? 1 : -1));
      }
      for (int l = 1; l <= c; ++l)
        CHECK(count_by_hooks[l] == binom_ll(c - 1, l - 1));
    }
}

TEST_CASE("signed tabloid counts against the algebraic inverse Kostka") {
  for (int d = 1; d <= 6; ++d) {
    RationalMatrix inv = inverse_kostka_matrix_algebraic(d);
    const auto& parts = partitions_of(d);
    for (size_t t = 0; t < parts.size(); ++t)
      for (size_t s = 0; s < parts.size(); ++s)
        CHECK(Rational(count_srht_signed(parts[s], parts[t])) == inv((Eigen::Index)t, (Eigen::Index)s));
  }
}

TEST_CASE("special rim hook P-tableaux of the running example") {
  Poset p = p3_poset();
  auto signed_sum = [&](const Partition& type) {
    long long s = 0;
    for (const auto& t : enumerate_srhpt(p, type)) s += t.sign();
    return s;
  };
  CHECK(signed_sum(Partition({3})) == 3);
  CHECK(signed_sum(Partition({2, 1})) == 1);
  CHECK(signed_sum(Partition({1, 1, 1})) == 0);
  CHECK_THROWS(enumerate_srhpt(p, Partition({2})));
}

TEST_CASE("sigma on shape (2,2)") {
  auto plus = enumerate_srht(Partition({2, 2}), Partition({2, 2})).front();
  auto minus = enumerate_srht(Partition({2, 2}), Partition({3, 1})).front();
  PTableau pt{Partition({2, 2}), {{0, 1}, {2, 3}}};
  SpecialRimHookPTableau image = sigma({pt, plus});
  CHECK(image.tabloid == minus);
  CHECK(image.tableau == pt);
  CHECK(sigma(image).tabloid == plus);

  auto hook = enumerate_srht(Partition({2, 1})).front();
  CHECK_THROWS(sigma({PTableau{Partition({2, 1}), {{0, 1}, {2}}}, hook}));
}

TEST_CASE("sigma is a sign-reversing involution on every non-hook tabloid") {
  for (int d = 2; d <= 7; ++d)
    for (const auto& shape : partitions_of(d)) {
      if (!shape.contains({2, 2})) continue;
      PTableau dummy{shape, {}};  // sigma never touches the tableau part
      for (const auto& tab : enumerate_srht(shape)) {
        SpecialRimHookPTableau t{dummy, tab};
        SpecialRimHookPTableau u = sigma(t);
        CHECK(u.tabloid.is_valid());
        CHECK(u.tabloid.shape == shape);
        CHECK(u.sign() == -t.sign());
        CHECK(u.tabloid.hook_count() == tab.hook_count());
        CHECK(sigma(u) == t);
      }
    }
}

TEST_CASE("hook tableaux and acyclic orientations of the running example") {
  Poset p = p3_poset();
  Graph g = incomparability_graph(p);

  PTableau t{Partition({2, 1}), {{0, 1}, {2}}};
  Orientation o = orientation_from_hook_tableau(t, p, g);
  CHECK(o.sinks() == std::vector<int>{0, 2});

  auto back = hook_tableaux_inducing(o, p, 2);
  REQUIRE(back.size() == 1);
  CHECK(back.front() == t);
  CHECK(hook_tableaux_inducing(o, p, 1).size() == 1);
  CHECK(hook_tableaux_inducing(o, p, 3).empty());  // only two sinks

  // every hook tableau of shape (3) comes from a distinct orientation
  long long total = 0;
  for (const auto& o2 : acyclic_orientations(g)) total += (long long)hook_tableaux_inducing(o2, p, 1).size();
  CHECK(total == count_p_tableaux(p, Partition({3})));

  CHECK_THROWS(orientation_from_hook_tableau(
      PTableau{Partition({2, 2}), {{0, 1}, {2, 3}}}, p, g));
  CHECK_THROWS(orientation_from_hook_tableau(t, p, Graph(3)));
}

TEST_CASE("hook tableaux round trip on all 4-element posets") {
  for_each_poset(4, [](const Poset& p) {
    Graph g = incomparability_graph(p);
    for (const auto& o : acyclic_orientations(g)) {
      int l = (int)o.sinks().size();
      for (int k = 1; k <= 4; ++k) {
        auto ts = hook_tableaux_inducing(o, p, k);
        CHECK((long long)ts.size() == binom_ll(l - 1, k - 1));
        for (const auto& t : ts) {
          CHECK(t.is_valid_for(p));
          CHECK(orientation_from_hook_tableau(t, p, g) == o);
        }
      }
    }
  });
}
