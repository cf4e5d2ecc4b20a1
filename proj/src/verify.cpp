#include "chromsym/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "chromsym/csf.hpp"
#include "chromsym/orderstruct.hpp"
#include "chromsym/symfunc.hpp"
#include "chromsym/tableaux.hpp"

namespace chromsym {

std::string VerifyReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["bounds"] = bounds;
  j["instances"] = instances;
  j["passes"] = passes;
  j["failures"] = failures;
  j["wall_time_ms"] = wall_time_ms;
  return j.dump();
}

std::string VerifyReport::pretty() const {
  std::ostringstream out;
  out << "suite: " << suite << '\n';
  out << "bounds: " << bounds << '\n';
  out << "instances: " << instances << '\n';
  out << "passes: " << passes << '\n';
  out << "failures: " << failures.size() << '\n';
  for (const auto& f : failures) out << "  FAIL " << f << '\n';
  out << "wall_time_ms: " << wall_time_ms << '\n';
  out << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

namespace {

// Runs fn(i) for i in [0, count) across `jobs` threads. Aggregation stays
// order-independent because each index owns its result slot.
void parallel_indices(size_t count, int jobs, const std::function<void(size_t)>& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count < 2) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  for (int t = 0; t < jobs; ++t)
    threads.emplace_back([&, t] {
      for (size_t i = (size_t)t; i < count; i += (size_t)jobs) fn(i);
    });
  for (auto& th : threads) th.join();
}

// Per-graph results are memoized across poset instances; distinct labeled
// posets frequently share an incomparability graph.
class ReportCache {
 public:
  std::shared_ptr<const CsfReport> get(const Graph& g) {
    uint64_t key = g.edge_key();
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    auto r = std::make_shared<const CsfReport>(csf_report(g, "cache"));
    std::lock_guard<std::mutex> lock(mutex_);
    return map_.emplace(key, std::move(r)).first->second;
  }

 private:
  std::mutex mutex_;
  std::unordered_map<uint64_t, std::shared_ptr<const CsfReport>> map_;
};

struct Instance {
  int n;
  int index;  // position in the deterministic per-n enumeration
  Poset poset;
};

std::vector<Instance> poset_instances(int max_n, bool only_free) {
  std::vector<Instance> out;
  for (int n = 1; n <= max_n; ++n) {
    int index = 0;
    for_each_poset(n, [&](const Poset& p) {
      if (!only_free || is_three_plus_one_free(p)) out.push_back({n, index, p});
      ++index;
    });
  }
  return out;
}

std::string instance_id(const Instance& inst) {
  return "n=" + std::to_string(inst.n) + " poset#" + std::to_string(inst.index);
}

// Warms the per-degree transition tables so parallel workers only read them.
void warm_tables(int max_degree) {
  for (int d = 0; d <= max_degree; ++d) convert(SymFunc::zero(d, Basis::Elementary), Basis::Monomial);
}

VerifyReport run_over_instances(const std::string& suite, const std::string& bounds,
                                const std::vector<Instance>& instances, int jobs,
                                const std::function<std::string(const Instance&)>& check) {
  auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.suite = suite;
  report.bounds = bounds;
  report.instances = (long long)instances.size();
  std::vector<std::string> results(instances.size());
  parallel_indices(instances.size(), jobs, [&](size_t i) { results[i] = check(instances[i]); });
  for (const auto& r : results) {
    if (r.empty())
      ++report.passes;
    else
      report.failures.push_back(r);
  }
  report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

}  // namespace

VerifyReport verify_gasharov(int max_n, int jobs) {
  warm_tables(max_n);
  auto instances = poset_instances(max_n, /*only_free=*/true);
  auto cache = std::make_shared<ReportCache>();
  return run_over_instances(
      "gasharov", "max_n=" + std::to_string(max_n), instances, jobs,
      [cache](const Instance& inst) -> std::string {
        Graph g = incomparability_graph(inst.poset);
        auto report = cache->get(g);
        const auto& parts = partitions_of(inst.n);
        for (size_t i = 0; i < parts.size(); ++i) {
          long long tableaux = count_p_tableaux(inst.poset, parts[i]);
          if (report->f[i] != tableaux)
            return instance_id(inst) + " lambda=" + to_string(parts[i]) +
                   ": f=" + report->f[i].str() + " ptableaux=" + std::to_string(tableaux);
        }
        return {};
      });
}

VerifyReport verify_theorem1(int max_n, int jobs) {
  warm_tables(max_n);
  auto instances = poset_instances(max_n, /*only_free=*/true);
  auto cache = std::make_shared<ReportCache>();
  return run_over_instances(
      "theorem1", "max_n=" + std::to_string(max_n), instances, jobs,
      [cache](const Instance& inst) -> std::string {
        Graph g = incomparability_graph(inst.poset);
        auto report = cache->get(g);
        const auto& parts = partitions_of(inst.n);
        for (size_t i = 0; i < parts.size(); ++i) {
          Integer combinatorial = a_coefficient_via_theorem1(inst.poset, parts[i]);
          if (report->a[i] != combinatorial)
            return instance_id(inst) + " lambda=" + to_string(parts[i]) +
                   ": algebraic a=" + report->a[i].str() +
                   " signed tableau count=" + combinatorial.str();
        }
        return {};
      });
}

namespace {

Partition hook_shape(int d, int k) {
  std::vector<int> parts{d - k + 1};
  for (int i = 1; i < k; ++i) parts.push_back(1);
  return Partition(parts);
}

std::string check_lemma1_instance(const Instance& inst) {
  const Poset& p = inst.poset;
  int n = inst.n;
  Graph g = incomparability_graph(p);

  auto kappa = acyclic_orientation_sink_counts(g);
  std::vector<long long> pi(n + 1, 0);
  for (int k = 1; k <= n; ++k) pi[k] = count_p_tableaux(p, hook_shape(n, k));

  // the binomial identity
  for (int k = 1; k <= n; ++k) {
    Integer expected = 0;
    for (auto [l, count] : kappa) expected += binomial(l - 1, k - 1) * count;
    if (expected != pi[k])
      return instance_id(inst) + " k=" + std::to_string(k) + ": pi_k=" + std::to_string(pi[k]) +
             " sum C(l-1,k-1)kappa_l=" + expected.str();
  }

  // constructive refinement: round trips, counts, and the disjoint tiling
  auto orientations = acyclic_orientations(g);
  for (int k = 1; k <= n; ++k) {
    std::vector<PTableau> produced;
    for (const Orientation& o : orientations) {
      int l = (int)o.sinks().size();
      auto ts = hook_tableaux_inducing(o, p, k);
      if ((Integer)ts.size() != binomial(l - 1, k - 1))
        return instance_id(inst) + " k=" + std::to_string(k) +
               ": orientation with l=" + std::to_string(l) + " induced by " +
               std::to_string(ts.size()) + " tableaux, expected C(l-1,k-1)=" +
               binomial(l - 1, k - 1).str();
      for (const PTableau& t : ts) {
        if (!t.is_valid_for(p))
          return instance_id(inst) + " k=" + std::to_string(k) + ": constructed non-P-tableau";
        if (!(orientation_from_hook_tableau(t, p, g) == o))
          return instance_id(inst) + " k=" + std::to_string(k) + ": round trip broke";
        produced.push_back(t);
      }
    }
    auto all = enumerate_p_tableaux(p, hook_shape(n, k));
    auto key = [](const PTableau& t) { return t.rows; };
    std::multiset<std::vector<std::vector<int>>> got, want;
    for (const auto& t : produced) got.insert(key(t));
    for (const auto& t : all) want.insert(key(t));
    if (got.size() != want.size() || got != want ||
        got.size() != std::set(got.begin(), got.end()).size())
      return instance_id(inst) + " k=" + std::to_string(k) +
             ": orientations do not tile the hook P-tableaux";
  }
  return {};
}

}  // namespace

VerifyReport verify_lemma1(int max_n, int jobs) {
  auto instances = poset_instances(max_n, /*only_free=*/false);
  return run_over_instances("lemma1", "max_n=" + std::to_string(max_n), instances, jobs,
                            check_lemma1_instance);
}

VerifyReport verify_sink_theorem(int max_n_posets, int max_n_graphs, int jobs) {
  warm_tables(std::max(max_n_posets, max_n_graphs));
  auto start = std::chrono::steady_clock::now();

  auto check = [](const CsfReport& r, const std::string& id) -> std::string {
    if (r.c != r.kappa) {
      std::string cs, ks;
      for (const auto& v : r.c) cs += v.str() + ",";
      for (const auto& v : r.kappa) ks += v.str() + ",";
      return id + ": c=[" + cs + "] kappa=[" + ks + "]";
    }
    return {};
  };

  auto cache = std::make_shared<ReportCache>();
  auto posets = poset_instances(max_n_posets, /*only_free=*/true);
  VerifyReport part_a = run_over_instances(
      "sink_theorem", "", posets, jobs, [&](const Instance& inst) -> std::string {
        Graph g = incomparability_graph(inst.poset);
        return check(*cache->get(g), instance_id(inst));
      });

  struct GraphInstance {
    int n;
    int index;
    Graph graph;
  };
  std::vector<GraphInstance> graphs;
  for (int n = 1; n <= max_n_graphs; ++n) {
    int index = 0;
    for_each_graph(n, [&](const Graph& g) { graphs.push_back({n, index++, g}); });
  }
  std::vector<std::string> results(graphs.size());
  parallel_indices(graphs.size(), jobs, [&](size_t i) {
    results[i] = check(csf_report(graphs[i].graph, ""), "n=" + std::to_string(graphs[i].n) +
                                                            " graph#" +
                                                            std::to_string(graphs[i].index));
  });

  VerifyReport report;
  report.suite = "sink_theorem";
  report.bounds = "max_n_posets=" + std::to_string(max_n_posets) +
                  " max_n_graphs=" + std::to_string(max_n_graphs);
  report.instances = part_a.instances + (long long)graphs.size();
  report.failures = part_a.failures;
  for (const auto& r : results)
    if (!r.empty()) report.failures.push_back(r);
  report.passes = report.instances - (long long)report.failures.size();
  report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

namespace {

std::string check_sigma_instance(const Instance& inst) {
  const Poset& p = inst.poset;
  for (const Partition& shape : partitions_of(inst.n)) {
    if (shape.empty() || is_hook(shape)) continue;
    auto tabloids = enumerate_srht(shape);
    if (tabloids.empty()) continue;
    auto ptabs = enumerate_p_tableaux(p, shape);
    std::map<int, long long> signed_by_hook_count;
    for (const PTableau& pt : ptabs)
      for (const auto& tab : tabloids) {
        SpecialRimHookPTableau t{pt, tab};
        signed_by_hook_count[tab.hook_count()] += t.sign();
        SpecialRimHookPTableau image = sigma(t);
        if (!image.tabloid.is_valid())
          return instance_id(inst) + " shape=" + to_string(shape) + ": sigma image invalid";
        if (!(image.tableau == t.tableau))
          return instance_id(inst) + " shape=" + to_string(shape) + ": sigma moved the P-tableau";
        if (image.tabloid.hook_count() != tab.hook_count())
          return instance_id(inst) + " shape=" + to_string(shape) + ": sigma changed hook count";
        if (image.sign() != -t.sign())
          return instance_id(inst) + " shape=" + to_string(shape) + ": sigma kept the sign";
        if (!(sigma(image) == t))
          return instance_id(inst) + " shape=" + to_string(shape) + ": sigma is not an involution";
      }
    for (auto [l, total] : signed_by_hook_count)
      if (total != 0)
        return instance_id(inst) + " shape=" + to_string(shape) + " l=" + std::to_string(l) +
               ": non-hook signed sum " + std::to_string(total) + " != 0";
  }
  return {};
}

}  // namespace

VerifyReport verify_sigma(int max_n, int jobs) {
  auto instances = poset_instances(max_n, /*only_free=*/true);
  return run_over_instances("sigma", "max_n=" + std::to_string(max_n), instances, jobs,
                            check_sigma_instance);
}

namespace {

void compositions_rec(int total, std::vector<int>& prefix,
                      const std::function<void(const std::vector<int>&)>& visit) {
  if (total == 0) {
    visit(prefix);
    return;
  }
  for (int first = 1; first <= total; ++first) {
    prefix.push_back(first);
    compositions_rec(total - first, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

VerifyReport verify_ordinal_sum_identity(int max_total, int jobs) {
  warm_tables(max_total);
  std::vector<std::vector<int>> compositions;
  for (int total = 1; total <= max_total; ++total) {
    std::vector<int> prefix;
    compositions_rec(total, prefix, [&](const std::vector<int>& nu) { compositions.push_back(nu); });
  }

  auto start = std::chrono::steady_clock::now();
  std::vector<std::string> results(compositions.size());
  parallel_indices(compositions.size(), jobs, [&](size_t i) {
    const auto& nu = compositions[i];
    std::string nu_str;
    for (size_t j = 0; j < nu.size(); ++j) nu_str += (j ? "," : "") + std::to_string(nu[j]);
    Poset p = ordinal_sum_of_antichains(nu);
    Graph g = incomparability_graph(p);
    auto f = f_coefficients(g);
    Integer block_factor = 1;
    for (int b : nu) block_factor *= factorial(b);
    const auto& parts = partitions_of(p.n());
    for (size_t mi = 0; mi < parts.size(); ++mi) {
      Integer expected = block_factor * kostka(parts[mi], nu);
      if (f[mi] != expected) {
        results[i] = "nu=" + nu_str + " mu=" + to_string(parts[mi]) + ": f=" + f[mi].str() +
                     " expected " + expected.str();
        return;
      }
    }
  });

  VerifyReport report;
  report.suite = "ordinal_sum";
  report.bounds = "max_total=" + std::to_string(max_total);
  report.instances = (long long)compositions.size();
  for (const auto& r : results)
    if (!r.empty()) report.failures.push_back(r);
  report.passes = report.instances - (long long)report.failures.size();
  report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

EPositivityScan scan_e_positivity(int max_n, int jobs) {
  warm_tables(max_n);
  auto instances = poset_instances(max_n, /*only_free=*/true);
  auto cache = std::make_shared<ReportCache>();
  std::mutex witness_mutex;
  EPositivityScan scan;
  scan.report = run_over_instances(
      "e_positivity", "max_n=" + std::to_string(max_n), instances, jobs,
      [&, cache](const Instance& inst) -> std::string {
        Graph g = incomparability_graph(inst.poset);
        auto report = cache->get(g);
        const auto& parts = partitions_of(inst.n);
        for (size_t i = 0; i < parts.size(); ++i)
          if (report->a[i] < 0) {
            CsfReport witness = *report;
            witness.id = instance_id(inst);
            {
              std::lock_guard<std::mutex> lock(witness_mutex);
              scan.witness_json.push_back(witness.to_json());
            }
            return instance_id(inst) + " lambda=" + to_string(parts[i]) +
                   ": a=" + report->a[i].str() + " < 0 (conjecture violation)";
          }
        return {};
      });
  std::sort(scan.witness_json.begin(), scan.witness_json.end());
  return scan;
}

}  // namespace chromsym
