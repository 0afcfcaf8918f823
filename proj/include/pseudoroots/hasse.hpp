#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pseudoroots/digraph.hpp"

namespace pseudoroots {

// Subsets of {1..n} with n <= 12 are bitmasks: bit (k-1) holds element k.
using SubsetMask = std::uint32_t;

inline constexpr int kMaxBooleanLatticeN = 12;
inline constexpr int kMaxPartitionN = 10;

std::string subset_id(SubsetMask mask);                   // "{1,3}", "{}"
std::optional<SubsetMask> parse_subset(std::string_view text);
std::vector<int> subset_elements(SubsetMask mask);

// Edge (A, i) of the boolean lattice: tail A + {i}, head A.
struct GammaEdgeLabel {
  SubsetMask set = 0;
  int index = 0;

  SubsetMask tail() const { return set | (SubsetMask{1} << (index - 1)); }
  SubsetMask head() const { return set; }
  std::string str() const;  // "{1,3}:2"
  friend auto operator<=>(const GammaEdgeLabel&, const GammaEdgeLabel&) = default;
};

// Throws InputError on malformed text or i in A.
GammaEdgeLabel parse_gamma_edge(std::string_view text);

// The Hasse graph of all subsets of {1..n}; 2^n vertices, n 2^{n-1} edges,
// rank = cardinality. Vertex ids via subset_id, edge ids via
// GammaEdgeLabel::str. Throws InputError unless 1 <= n <= 12.
Digraph boolean_lattice(int n);

// If g is (an id-faithful copy of) boolean_lattice(n), returns n.
std::optional<int> boolean_lattice_order(const Digraph& g);

struct HasseGraph {
  Digraph graph;
  // False when some cover skips a rank; the graph then carries no ranks.
  bool layered = true;
  std::vector<std::string> rank_gaps;
};

// Hasse graph of a finite strict partial order: an edge x -> y for every
// cover y < x. Throws InputError if `less` is not irreflexive,
// antisymmetric and transitive, or the rank is not strictly monotone.
HasseGraph hasse_from_poset(const std::vector<std::string>& elements,
                            const std::function<bool(std::size_t, std::size_t)>& less,
                            const std::function<int(std::size_t)>& rank);

// Hasse graph of a downward-closed family of subsets, ranked by cardinality.
// Throws NotAComplex naming a missing subset and the member it lies under.
Digraph complex_hasse(const std::vector<std::vector<int>>& family);

using Partition = std::vector<int>;

std::string partition_id(const Partition& p);  // "(3,1)"
// All partitions of n as weakly decreasing sequences.
std::vector<Partition> partitions_of(int n);
// lambda <= mu: lambda's parts are sums of consecutive blocks of mu's parts.
bool partition_leq(const Partition& lambda, const Partition& mu);

// Hasse graph of the partitions of n under partition_leq, ranked by length.
// Throws InputError unless 1 <= n <= 10.
HasseGraph partition_lattice(int n);

}  // namespace pseudoroots
