#include <doctest.h>

#include "chromsym/csf.hpp"

using namespace chromsym;

namespace {

Graph path3() {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Poset p3_poset() {
  Poset p(3);
  p.add_less(0, 2);
  return p;
}

}  // namespace

TEST_CASE("X of the smallest graphs") {
  SymFunc k2 = chromatic_symmetric_function(complete(2));
  CHECK(k2.at(Partition({1, 1})) == 2);
  CHECK(k2.at(Partition({2})) == 0);

  SymFunc p3 = chromatic_symmetric_function(path3());
  CHECK(p3.at(Partition({1, 1, 1})) == 6);
  CHECK(p3.at(Partition({2, 1})) == 1);
  CHECK(p3.at(Partition({3})) == 0);

  // no edges: X = (x1 + x2 + ...)^n, multinomial m-coefficients
  SymFunc free3 = chromatic_symmetric_function(Graph(3));
  CHECK(free3.at(Partition({3})) == 1);
  CHECK(free3.at(Partition({2, 1})) == 3);
  CHECK(free3.at(Partition({1, 1, 1})) == 6);

  CHECK(chromatic_symmetric_function(Graph(0)).degree == 0);
  CHECK_THROWS_AS(chromatic_symmetric_function(Graph(10)), GuardExceeded);
}

TEST_CASE("complete graphs: X = n! e_n") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Integer> a = a_coefficients(complete(n));
    CHECK(a[0] == factorial(n));  // canonical index 0 is the one-row partition (n)
    for (size_t i = 1; i < a.size(); ++i) CHECK(a[i] == 0);
  }
}

TEST_CASE("coefficient families on the 3-vertex path") {
  Graph g = path3();
  CHECK(a_coefficients(g) == std::vector<Integer>{3, 1, 0});
  CHECK(f_coefficients(g) == std::vector<Integer>{4, 1, 0});
  CHECK(c_by_length(g) == std::vector<Integer>{3, 1, 0});
}

TEST_CASE("signed-tableau formula agrees with the algebraic e-coefficients") {
  Poset p = p3_poset();
  CHECK(a_coefficient_via_theorem1(p, Partition({3})) == 3);
  CHECK(a_coefficient_via_theorem1(p, Partition({2, 1})) == 1);
  CHECK(a_coefficient_via_theorem1(p, Partition({1, 1, 1})) == 0);
  CHECK_THROWS(a_coefficient_via_theorem1(p, Partition({2})));
}

TEST_CASE("signed-tableau formula refuses non-(3+1)-free posets") {
  Poset bad(4);  // 3-chain plus an isolated point
  bad.add_less(0, 1);
  bad.add_less(1, 2);
  bad.close_transitively();
  CHECK_THROWS_WITH_AS(a_coefficient_via_theorem1(bad, Partition({4})),
                       doctest::Contains("not (3+1)-free"), HypothesisViolation);
  CHECK_THROWS_WITH_AS(a_coefficient_via_theorem1(bad, Partition({4})),
                       doctest::Contains("0 < 1 < 2"), HypothesisViolation);
}

TEST_CASE("specializing to k variables counts proper colorings") {
  for_each_graph(4, [](const Graph& g) {
    SymFunc x = chromatic_symmetric_function(g);
    for (int k = 0; k <= 4; ++k)
      CHECK(specialize_ones(x, k) == Rational(count_proper_colorings(g, k)));
  });
  CHECK(count_proper_colorings(path3(), 2) == 2);
  CHECK(count_proper_colorings(complete(3), 2) == 0);
  CHECK_THROWS(count_proper_colorings(path3(), -1));
}

TEST_CASE("report bundles the poset route and the graph route identically") {
  CsfReport via_poset = csf_report(p3_poset(), "p3");
  CsfReport via_graph = csf_report(path3(), "p3");
  CHECK(via_poset.to_tsv() == via_graph.to_tsv());
  CHECK(via_poset.kappa == std::vector<Integer>{3, 1, 0});
  CHECK(via_poset.c == via_poset.kappa);
}

TEST_CASE("report serializations") {
  CsfReport r = csf_report(path3(), "p3");
  std::string json = r.to_json();
  CHECK(json.find("\"id\":\"p3\"") != std::string::npos);
  CHECK(json.find("\"degree\":3") != std::string::npos);
  CHECK(json.find("{\"partition\":\"3\",\"value\":\"3\"}") != std::string::npos);  // a_(3)
  CHECK(json.find("{\"length\":2,\"value\":\"1\"}") != std::string::npos);

  std::string tsv = r.to_tsv();
  CHECK(tsv.find("partition\tX_m\ta\tf\n") == 0);
  CHECK(tsv.find("2,1\t1\t1\t1\n") != std::string::npos);
  CHECK(tsv.find("length\tc\tkappa\n") != std::string::npos);

  std::string pretty = r.pretty();
  CHECK(pretty.find("graph: p3\n") == 0);
  CHECK(pretty.find("a[3] = 3\n") != std::string::npos);
  CHECK(pretty.find("kappa[2] = 1\n") != std::string::npos);
}
