#include <bit>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "pseudoroots/errors.hpp"
#include "pseudoroots/hasse.hpp"

using namespace pseudoroots;

namespace {

// All partitions obtainable from mu by summing consecutive blocks.
std::set<Partition> groupings(const Partition& mu) {
  std::set<Partition> out;
  const std::size_t cuts = mu.size() - 1;
  for (std::uint32_t bits = 0; bits < (1u << cuts); ++bits) {
    Partition lambda{mu[0]};
    for (std::size_t k = 1; k < mu.size(); ++k) {
      if (bits >> (k - 1) & 1u) {
        lambda.back() += mu[k];
      } else {
        lambda.push_back(mu[k]);
      }
    }
    if (std::is_sorted(lambda.rbegin(), lambda.rend())) out.insert(lambda);
  }
  return out;
}

}  // namespace

TEST_CASE("subset ids") {
  CHECK(subset_id(0) == "{}");
  CHECK(subset_id(0b101) == "{1,3}");
  CHECK(parse_subset("{1,3}") == SubsetMask{0b101});
  CHECK(parse_subset("{}") == SubsetMask{0});
  CHECK_FALSE(parse_subset("{1,1}").has_value());
  CHECK_FALSE(parse_subset("1,3").has_value());
  CHECK_FALSE(parse_subset("{0}").has_value());
  CHECK(subset_elements(0b110) == std::vector<int>{2, 3});
}

TEST_CASE("gamma edge ids") {
  const auto e = parse_gamma_edge("{1,3}:2");
  CHECK(e.set == 0b101);
  CHECK(e.index == 2);
  CHECK(e.tail() == 0b111);
  CHECK(e.str() == "{1,3}:2");
  CHECK(parse_gamma_edge("{}:1").tail() == 1);
  CHECK_THROWS_AS(parse_gamma_edge("{1}:1"), InputError);
  CHECK_THROWS_AS(parse_gamma_edge("{1}"), InputError);
  CHECK_THROWS_AS(parse_gamma_edge("{1}:x"), InputError);
}

TEST_CASE("boolean lattice sizes and shape") {
  for (int n = 1; n <= 6; ++n) {
    const Digraph g = boolean_lattice(n);
    CHECK(g.vertex_count() == (1u << n));
    CHECK(g.edge_count() == static_cast<std::size_t>(n) << (n - 1));
    CHECK(validate(g.spec()).layered());
    CHECK(is_modular(g).modular);
    CHECK(sources(g).size() == 1);
    CHECK(sinks(g) == std::vector<VertexIndex>{g.vertex("{}")});
    CHECK(boolean_lattice_order(g) == n);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      const auto label = parse_gamma_edge(g.edge_id(e));
      CHECK(g.vertex_id(g.tail(e)) == subset_id(label.tail()));
      CHECK(g.vertex_id(g.head(e)) == subset_id(label.head()));
    }
  }
  CHECK(boolean_lattice(3).edge_count() == 12);
  CHECK_THROWS_AS(boolean_lattice(0), InputError);
  CHECK_THROWS_AS(boolean_lattice(13), InputError);
}

TEST_CASE("boolean_lattice_order rejects other graphs") {
  CHECK_FALSE(boolean_lattice_order(partition_lattice(4).graph).has_value());
}

TEST_CASE("boolean lattice modularity matches the literal oracle") {
  for (int n = 1; n <= 3; ++n) CHECK(oracle::modular(boolean_lattice(n)));
}

TEST_CASE("hasse_from_poset") {
  // subsets of {1,2} by inclusion
  const std::vector<std::string> names{"{}", "{1}", "{2}", "{1,2}"};
  const std::vector<SubsetMask> masks{0, 1, 2, 3};
  auto less = [&](std::size_t a, std::size_t b) { return masks[a] != masks[b] && (masks[a] & masks[b]) == masks[a]; };
  auto rank = [&](std::size_t a) { return std::popcount(masks[a]); };
  const HasseGraph h = hasse_from_poset(names, less, rank);
  CHECK(h.layered);
  CHECK(h.graph.edge_count() == 4);
  CHECK(positive_path_exists(h.graph, "{1,2}", "{}"));

  const std::vector<std::string> chain{"0", "1", "2"};
  const HasseGraph c = hasse_from_poset(chain, [](std::size_t a, std::size_t b) { return a < b; },
                                        [](std::size_t a) { return static_cast<int>(a); });
  CHECK(c.graph.edge_count() == 2);

  // Rank jumps by two along a cover: no longer layered.
  const HasseGraph gap = hasse_from_poset(chain, [](std::size_t a, std::size_t b) { return a < b; },
                                          [](std::size_t a) { return static_cast<int>(2 * a); });
  CHECK_FALSE(gap.layered);
  CHECK_FALSE(gap.graph.has_rank());

  CHECK_THROWS_AS(hasse_from_poset(chain, [](std::size_t a, std::size_t b) { return a != b; },
                                   [](std::size_t) { return 0; }),
                  InputError);
  CHECK_THROWS_AS(hasse_from_poset(chain, [](std::size_t a, std::size_t b) { return a + 1 == b; },
                                   [](std::size_t a) { return static_cast<int>(a); }),
                  InputError);
}

TEST_CASE("complex_hasse") {
  const Digraph two = complex_hasse({{}, {1}, {2}});
  CHECK(two.edge_count() == 2);
  CHECK(sinks(two).size() == 1);
  CHECK_THROWS_AS(complex_hasse({{}, {1, 2}}), NotAComplex);
  try {
    complex_hasse({{}, {1, 2}});
  } catch (const NotAComplex& err) {
    CHECK(std::string(err.what()).find("{1}") != std::string::npos);
  }
  std::vector<std::vector<int>> all;
  for (SubsetMask m = 0; m < 8; ++m) all.push_back(subset_elements(m));
  const Digraph g = complex_hasse(all);
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 12);
  CHECK(is_modular(g).modular);
}

TEST_CASE("partition lattice of 4") {
  const HasseGraph h = partition_lattice(4);
  const Digraph& g = h.graph;
  CHECK(h.layered);
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 5);
  for (const char* id : {"(1,1,1,1)->(2,1,1)", "(2,1,1)->(2,2)", "(2,1,1)->(3,1)", "(2,2)->(4)", "(3,1)->(4)"}) {
    CAPTURE(id);
    CHECK(g.find_edge(id).has_value());
  }
  CHECK(is_modular(g).modular);
  CHECK(g.rank(g.vertex("(2,1,1)")) == 3);
}

TEST_CASE("partition counts and covers match the block-grouping oracle") {
  const int counts[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 1; n <= 10; ++n) {
    const auto parts = partitions_of(n);
    CHECK(parts.size() == static_cast<std::size_t>(counts[n - 1]));
    for (const auto& lambda : parts) {
      CHECK(std::accumulate(lambda.begin(), lambda.end(), 0) == n);
      CHECK(std::is_sorted(lambda.rbegin(), lambda.rend()));
    }
    if (n > 7) continue;
    for (const auto& mu : parts) {
      const auto below = groupings(mu);
      for (const auto& lambda : parts) CHECK(partition_leq(lambda, mu) == (below.count(lambda) == 1));
    }
    // Edges are exactly the covers of the oracle order.
    const Digraph g = partition_lattice(n).graph;
    std::size_t covers = 0;
    for (const auto& mu : parts) {
      for (const auto& lambda : groupings(mu)) {
        if (lambda == mu) continue;
        bool cover = true;
        for (const auto& nu : groupings(mu)) {
          if (nu != mu && nu != lambda && groupings(nu).count(lambda)) cover = false;
        }
        if (!cover) continue;
        ++covers;
        CHECK(g.edge_between(g.vertex(partition_id(mu)), g.vertex(partition_id(lambda))).has_value());
      }
    }
    CHECK(g.edge_count() == covers);
  }
}

TEST_CASE("partition lattices are layered up to the size bound") {
  for (int n = 1; n <= kMaxPartitionN; ++n) CHECK(partition_lattice(n).layered);
  // At 6 the edges (3,3)->(6) and (4,2)->(6) share a head but no common tail.
  for (int n = 1; n <= 5; ++n) CHECK(is_modular(partition_lattice(n).graph).modular);
  CHECK_FALSE(is_modular(partition_lattice(6).graph).modular);
  CHECK_THROWS_AS(partition_lattice(0), InputError);
  CHECK_THROWS_AS(partition_lattice(11), InputError);
}
