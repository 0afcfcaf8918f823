#include <bit>
#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "pseudoroots/duclosure.hpp"
#include "pseudoroots/errors.hpp"
#include "pseudoroots/hasse.hpp"

using namespace pseudoroots;

namespace {

EdgeSet edges(const Digraph& g, std::initializer_list<const char*> ids) {
  EdgeSet es(g);
  for (const char* id : ids) es.insert(g.edge(id));
  return es;
}

EdgeSet from_bits(const Digraph& g, std::uint64_t bits) {
  EdgeSet es(g);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (bits >> e & 1u) es.insert(e);
  }
  return es;
}

std::set<EdgeIndex> as_set(const EdgeSet& es) {
  const auto m = es.members();
  return {m.begin(), m.end()};
}

}  // namespace

TEST_CASE("d and u results on the square") {
  const Digraph g = boolean_lattice(2);
  const auto d = d_results(g, g.edge("{1}:2"), g.edge("{2}:1"));
  REQUIRE(d.size() == 1);
  // ({1},2) has head {1}; its continuation is ({},1).
  CHECK(g.edge_id(d[0].first) == "{}:1");
  CHECK(g.edge_id(d[0].second) == "{}:2");
  const auto u = u_results(g, g.edge("{}:1"), g.edge("{}:2"));
  REQUIRE(u.size() == 1);
  CHECK(g.edge_id(u[0].first) == "{1}:2");
  CHECK_THROWS_AS(d_results(g, g.edge("{1}:2"), g.edge("{1}:2")), PreconditionError);
  CHECK_THROWS_AS(d_results(g, g.edge("{1}:2"), g.edge("{}:1")), PreconditionError);
  CHECK_THROWS_AS(u_results(g, g.edge("{1}:2"), g.edge("{}:2")), PreconditionError);
}

TEST_CASE("closure of the star on the square") {
  const Digraph g = boolean_lattice(2);
  const Completion c = completion(edges(g, {"{}:1", "{}:2"}));
  CHECK(c.edges == EdgeSet::all(g));
  REQUIRE(c.trace.steps.size() == 2);
  CHECK(c.trace.steps[0].kind == OpKind::U);
  CHECK(c.trace.steps[0].added.size() == 2);
  CHECK(c.trace.steps[1].kind == OpKind::D);
  CHECK(c.trace.steps[1].added.empty());
}

TEST_CASE("closure is extensive, monotone, idempotent and matches the naive fixed point on the square") {
  const Digraph g = boolean_lattice(2);
  std::vector<EdgeSet> closures;
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    const EdgeSet es = from_bits(g, bits);
    const EdgeSet c = completion(es).edges;
    CHECK(es.subset_of(c));
    CHECK(completion(c).edges == c);
    CHECK(is_complete(c));
    CHECK(as_set(c) == oracle::completion(g, as_set(es)));
    closures.push_back(c);
  }
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t b = 0; b < 16; ++b) {
      if ((a & b) == a) CHECK(closures[a].subset_of(closures[b]));
    }
  }
}

TEST_CASE("closure matches the naive fixed point on every small subset of Γ_3") {
  const Digraph g = boolean_lattice(3);
  std::size_t checked = 0;
  for (std::uint64_t bits = 0; bits < (1u << 12); ++bits) {
    if (std::popcount(bits) > 3) continue;
    const EdgeSet es = from_bits(g, bits);
    const Completion c = completion(es);
    CHECK(as_set(c.edges) == oracle::completion(g, as_set(es)));
    // Every non-initial edge is introduced by exactly one step.
    std::map<EdgeIndex, int> introduced;
    for (const auto& s : c.trace.steps) {
      for (EdgeIndex x : s.added) ++introduced[x];
    }
    for (EdgeIndex e : c.edges.members()) CHECK(introduced[e] == (es.contains(e) ? 0 : 1));
    ++checked;
  }
  CHECK(checked == 1 + 12 + 66 + 220);
}

TEST_CASE("closure on sampled larger subsets of Γ_3") {
  const Digraph g = boolean_lattice(3);
  std::mt19937_64 rng(77);
  for (int k = 0; k < 60; ++k) {
    const EdgeSet es = from_bits(g, rng() & 0xfff);
    const EdgeSet c = completion(es).edges;
    CHECK(as_set(c) == oracle::completion(g, as_set(es)));
    CHECK(completion(c).edges == c);
  }
}

TEST_CASE("star and chain completions") {
  for (int n = 2; n <= 4; ++n) {
    const Digraph g = boolean_lattice(n);
    EdgeSet star(g), chain(g);
    for (int k = 1; k <= n; ++k) {
      star.insert(g.edge(GammaEdgeLabel{0, k}.str()));
      chain.insert(g.edge(GammaEdgeLabel{(SubsetMask{1} << (k - 1)) - 1, k}.str()));
    }
    CHECK(completion(star).edges == EdgeSet::all(g));
    CHECK(completion(chain).edges == chain);
  }
}

TEST_CASE("sufficiency: two-edge subsets of the square") {
  const Digraph g = boolean_lattice(2);
  // Sufficient: {({i},j), ({},i)}, {({},j), ({},i)}, {({i},j), ({j},i)}.
  CHECK(is_sufficient(edges(g, {"{1}:2", "{}:1"})).sufficient);
  CHECK(is_sufficient(edges(g, {"{2}:1", "{}:2"})).sufficient);
  CHECK(is_sufficient(edges(g, {"{}:1", "{}:2"})).sufficient);
  CHECK(is_sufficient(edges(g, {"{1}:2", "{2}:1"})).sufficient);
  // Not sufficient: {({i},j), ({},j)}.
  CHECK_FALSE(is_sufficient(edges(g, {"{1}:2", "{}:2"})).sufficient);
  CHECK_FALSE(is_sufficient(edges(g, {"{2}:1", "{}:1"})).sufficient);

  const auto r = is_sufficient(edges(g, {"{1}:2", "{}:1"}));
  REQUIRE(r.path.size() == 2);
  CHECK(g.edge_id(r.path[0]) == "{1}:2");
  CHECK(g.edge_id(r.path[1]) == "{}:1");
}

TEST_CASE("sufficiency examples on Γ_3") {
  const Digraph g = boolean_lattice(3);
  CHECK(is_sufficient(edges(g, {"{1}:2", "{2}:1", "{1}:3"})).sufficient);
  CHECK(is_sufficient(edges(g, {"{1}:2", "{2}:1", "{}:3"})).sufficient);
  CHECK(is_sufficient(edges(g, {"{1}:3", "{1}:2", "{}:1"})).sufficient);
  const EdgeSet w = edges(g, {"{1,2}:3", "{3}:2", "{}:1"});
  CHECK(completion(w).edges == w);
  CHECK_FALSE(is_connected(w));
  CHECK_FALSE(is_sufficient(w).sufficient);
}

TEST_CASE("sufficiency agrees with a path search in the naive closure") {
  const Digraph g = boolean_lattice(3);
  const VertexIndex top = g.vertex("{1,2,3}"), bottom = g.vertex("{}");
  for (std::uint64_t bits = 1; bits < (1u << 12); bits += 7) {
    const EdgeSet es = from_bits(g, bits);
    bool path = false;
    for (const auto& p : oracle::all_paths(g, oracle::completion(g, as_set(es)))) {
      path = path || (g.tail(p.front()) == top && g.head(p.back()) == bottom);
    }
    CHECK(is_sufficient(es).sufficient == path);
  }
}

TEST_CASE("ample") {
  const Digraph g = boolean_lattice(2);
  CHECK(is_ample(edges(g, {"{}:1", "{}:2"})).ample);
  CHECK(is_ample(edges(g, {"{1}:2", "{}:1"})).ample);
  // Ample by the definition (each element is both inside and outside some
  // vertex of V), though disconnected and not sufficient.
  CHECK(is_ample(edges(g, {"{1}:2", "{}:2"})).ample);
  const AmpleReport single = is_ample(edges(g, {"{}:1"}));
  CHECK_FALSE(single.ample);
  CHECK(single.uncovered.has_value());
}

TEST_CASE("gamma_n_ample_fast agrees with is_ample") {
  for (int n = 1; n <= 3; ++n) {
    const Digraph g = boolean_lattice(n);
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << g.edge_count()); ++bits) {
      if (std::popcount(bits) > n) continue;
      const EdgeSet es = from_bits(g, bits);
      CHECK(gamma_n_ample_fast(es) == is_ample(es).ample);
    }
  }
  // n = 4: 2^32 subsets, so extend sets one edge at a time up to size 4.
  const Digraph g4 = boolean_lattice(4);
  std::size_t count = 0;
  std::vector<EdgeIndex> pick;
  std::function<void(EdgeIndex)> grow = [&](EdgeIndex from) {
    for (EdgeIndex e = from; e < g4.edge_count(); ++e) {
      pick.push_back(e);
      const EdgeSet es(g4, pick);
      CHECK(gamma_n_ample_fast(es) == is_ample(es).ample);
      ++count;
      if (pick.size() < 4) grow(e + 1);
      pick.pop_back();
    }
  };
  grow(0);
  CHECK(count == 32 + 496 + 4960 + 35960);
  CHECK_THROWS_AS(gamma_n_ample_fast(EdgeSet::all(partition_lattice(4).graph)), PreconditionError);
}

TEST_CASE("ample connected sets are sufficient on the boolean lattices") {
  for (int n = 2; n <= 3; ++n) {
    const Digraph g = boolean_lattice(n);
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << g.edge_count()); ++bits) {
      const EdgeSet es = from_bits(g, bits);
      if (is_ample(es).ample && is_connected(es)) CHECK(is_sufficient(es).sufficient);
    }
  }
}

TEST_CASE("lemma_witness") {
  const Digraph g = boolean_lattice(2);
  const EdgeSet all = EdgeSet::all(g);
  const auto w = lemma_witness(all, g.vertex("{1}"), g.vertex("{2}"));
  CHECK(g.edge_id(w.leaving_v) == "{}:2");
  CHECK(g.edge_id(w.entering_u) == "{1}:2");
  CHECK_THROWS_AS(lemma_witness(all, g.vertex("{1,2}"), g.vertex("{}")), PreconditionError);
  CHECK_THROWS_AS(lemma_witness(edges(g, {"{}:1"}), g.vertex("{1}"), g.vertex("{2}")), PreconditionError);
}
