// One line per acceptance criterion. Each criterion runs its verify suite
// with default options; some also carry a cross-check against the slow
// oracles or a frozen count.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pseudoroots/hasse.hpp"
#include "pseudoroots/verify.hpp"

using namespace pseudoroots;

namespace {

struct Criterion {
  int number;
  const char* suite;
  const char* what;
  double limit_s;
  // Extra check; returns an empty string on success.
  std::string (*extra)(const verify::Result&) = nullptr;
};

bool oracle_sufficient(const Digraph& g, const std::set<EdgeIndex>& es) {
  const auto closed = oracle::completion(g, es);
  const VertexIndex top = sources(g).front(), bottom = sinks(g).front();
  std::set<VertexIndex> seen{top};
  std::vector<VertexIndex> stack{top};
  while (!stack.empty()) {
    const VertexIndex x = stack.back();
    stack.pop_back();
    for (EdgeIndex e : closed) {
      if (g.tail(e) == x && seen.insert(g.head(e)).second) stack.push_back(g.head(e));
    }
  }
  return seen.count(bottom) != 0;
}

std::string census_cross_check(const verify::Result& r) {
  for (int n = 2; n <= 3; ++n) {
    const Digraph g = boolean_lattice(n);
    const EdgeIndex m = g.edge_count();
    int subsets = 0, sufficient = 0;
    std::vector<EdgeIndex> pick(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < pick.size(); ++k) pick[k] = k;
    while (true) {
      ++subsets;
      if (oracle_sufficient(g, std::set<EdgeIndex>(pick.begin(), pick.end()))) ++sufficient;
      int k = n - 1;
      while (k >= 0 && pick[k] == m - static_cast<EdgeIndex>(n - k)) --k;
      if (k < 0) break;
      ++pick[k];
      for (int j = k + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
    const auto& row = r.summary["per_n"][std::to_string(n)];
    if (row["subsets"] != subsets || row["sufficient"] != sufficient) {
      return "n=" + std::to_string(n) + ": oracle counts " + std::to_string(sufficient) + " of " +
             std::to_string(subsets);
    }
    if (n == 2 && sufficient != 4) return "n=2: expected 4 sufficient subsets";
  }
  return {};
}

std::string star_cross_check(const verify::Result&) {
  for (int n = 2; n <= 4; ++n) {
    const Digraph g = boolean_lattice(n);
    std::set<EdgeIndex> star;
    for (int k = 1; k <= n; ++k) star.insert(g.edge("{}:" + std::to_string(k)));
    if (oracle::completion(g, star).size() != static_cast<std::size_t>(n << (n - 1))) {
      return "oracle completion of the star is not all of the host at n=" + std::to_string(n);
    }
  }
  return {};
}

std::string chain_cross_check(const verify::Result&) {
  for (int n = 1; n <= 4; ++n) {
    const Digraph g = boolean_lattice(n);
    std::set<EdgeIndex> chain;
    std::string prefix;
    for (int k = 1; k <= n; ++k) {
      chain.insert(g.edge("{" + prefix + "}:" + std::to_string(k)));
      prefix += (prefix.empty() ? "" : ",") + std::to_string(k);
    }
    if (oracle::completion(g, chain) != chain) return "oracle completion grows the chain at n=" + std::to_string(n);
  }
  return {};
}

std::string partition_cross_check(const verify::Result&) {
  const Digraph g = partition_lattice(4).graph;
  if (!oracle::modular(g)) return "literal modularity check fails on the partition host";
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "closed-form-n2", "n=2 closed form for pseudo-roots", 1},
      {2, "closed-form-n3", "n=3 closed forms agree", 5},
      {3, "ordering-independence", "canonical polynomial independent of ordering", 30},
      {4, "census", "connected distinct-index sets are sufficient", 5, census_cross_check},
      {5, "necessity", "sufficient n-edge sets have distinct indices", 5},
      {6, "example-w", "W is complete, disconnected, not sufficient", 1},
      {7, "star-completion", "completion of the star is all of the host", 10, star_cross_check},
      {8, "chain-completion", "maximal chain is complete", 1, chain_cross_check},
      {9, "diamond-ops", "d/u operations preserve sum and product", 5},
      {10, "two-oracle", "labeled completion reproduces the table", 30},
      {11, "derive", "derived factorizations multiply to P", 30},
      {12, "divisor-graph", "divisor graph is the labeled boolean lattice", 30},
      {13, "lemma-witness", "lemma witnesses exist", 60},
      {14, "partition-host", "partition host: ample connected sets are sufficient", 5, partition_cross_check},
      {15, "scalar", "scalar specialization", 1},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string why;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const auto* suite = verify::find_suite(c.suite);
      if (suite == nullptr) throw std::runtime_error(std::string("missing suite ") + c.suite);
      const verify::Result r = suite->run(verify::Options{});
      if (!r.passed) why = r.counterexample.value_or("suite failed");
      if (why.empty() && c.extra != nullptr) why = c.extra(r);
    } catch (const std::exception& e) {
      why = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (why.empty() && secs >= c.limit_s) why = "time limit exceeded";
    const bool ok = why.empty();
    if (!ok) ++failures;
    std::printf("%s criterion %d: %s (%.2f s, limit %.0f s)%s%s\n", ok ? "PASS" : "FAIL", c.number, c.what, secs,
                c.limit_s, ok ? "" : ": ", why.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
