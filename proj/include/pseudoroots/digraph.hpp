#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pseudoroots {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

// Raw description of a graph as read from a file or produced by a
// generator. Nothing is checked until it becomes a Digraph.
struct GraphSpec {
  struct Vertex {
    std::string id;
    std::optional<int> rank;
  };
  struct Edge {
    std::string id;
    std::string tail;
    std::string head;
  };
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

struct ValidationReport {
  bool ids_ok = true;
  bool simple = true;
  bool acyclic = true;
  bool rank_consistent = true;
  bool has_rank = false;
  std::vector<std::string> problems;
  // Vertex ids along a directed cycle, first vertex repeated at the end.
  std::vector<std::string> cycle;

  bool ok() const { return ids_ok && simple && acyclic && rank_consistent; }
  bool layered() const { return ok() && has_rank; }
};

ValidationReport validate(const GraphSpec& spec);

// Finite simple acyclic directed graph. Vertices and edges are addressed by
// dense indices in the order of the spec; ids are kept for I/O. Positive
// reachability is precomputed at construction.
class Digraph {
 public:
  // Throws InvalidGraph carrying the validation problems.
  explicit Digraph(GraphSpec spec);

  std::size_t vertex_count() const noexcept { return spec_.vertices.size(); }
  std::size_t edge_count() const noexcept { return spec_.edges.size(); }
  const GraphSpec& spec() const noexcept { return spec_; }

  const std::string& vertex_id(VertexIndex v) const { return spec_.vertices[v].id; }
  const std::string& edge_id(EdgeIndex e) const { return spec_.edges[e].id; }
  VertexIndex tail(EdgeIndex e) const { return tail_[e]; }
  VertexIndex head(EdgeIndex e) const { return head_[e]; }

  std::optional<VertexIndex> find_vertex(std::string_view id) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;
  // As above but throws InputError for an unknown id.
  VertexIndex vertex(std::string_view id) const;
  EdgeIndex edge(std::string_view id) const;
  std::optional<EdgeIndex> edge_between(VertexIndex tail, VertexIndex head) const;

  std::span<const EdgeIndex> out_edges(VertexIndex v) const { return out_[v]; }
  std::span<const EdgeIndex> in_edges(VertexIndex v) const { return in_[v]; }

  bool has_rank() const noexcept { return has_rank_; }
  int rank(VertexIndex v) const { return *spec_.vertices[v].rank; }

  // Tails before heads.
  const std::vector<VertexIndex>& topological_order() const noexcept { return topo_; }
  // Positive (forward) path from u to v; u reaches itself.
  bool reaches(VertexIndex u, VertexIndex v) const {
    return (reach_[u][v / 64] >> (v % 64)) & 1U;
  }

 private:
  GraphSpec spec_;
  std::vector<VertexIndex> tail_;
  std::vector<VertexIndex> head_;
  std::vector<std::vector<EdgeIndex>> out_;
  std::vector<std::vector<EdgeIndex>> in_;
  std::unordered_map<std::string, VertexIndex> vertex_index_;
  std::unordered_map<std::string, EdgeIndex> edge_index_;
  std::vector<VertexIndex> topo_;
  std::vector<std::vector<std::uint64_t>> reach_;
  bool has_rank_ = false;
};

// A subset of the edges of a host graph. The host must outlive the set.
class EdgeSet {
 public:
  explicit EdgeSet(const Digraph& host) : host_(&host), member_(host.edge_count(), false) {}
  EdgeSet(const Digraph& host, std::span<const EdgeIndex> edges);

  static EdgeSet all(const Digraph& host);
  // Throws InputError for an unknown id.
  static EdgeSet from_ids(const Digraph& host, std::span<const std::string> ids);

  const Digraph& host() const noexcept { return *host_; }
  bool contains(EdgeIndex e) const { return member_[e]; }
  bool insert(EdgeIndex e);
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  std::vector<EdgeIndex> members() const;
  std::vector<std::string> ids() const;
  // V(G): every tail and head, ascending.
  std::vector<VertexIndex> vertices() const;
  bool subset_of(const EdgeSet& other) const;

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
    return a.host_ == b.host_ && a.member_ == b.member_;
  }

 private:
  const Digraph* host_;
  std::vector<bool> member_;
  std::size_t count_ = 0;
};

struct ModularityReport {
  bool modular = true;
  // 1: a common-tail pair has no common-head continuation.
  // 2: a common-head pair has no common-tail predecessors.
  int failed_condition = 0;
  std::optional<std::pair<EdgeIndex, EdgeIndex>> witness;
};

ModularityReport is_modular(const Digraph& g);

std::vector<VertexIndex> sources(const Digraph& g);
std::vector<VertexIndex> sinks(const Digraph& g);

bool positive_path_exists(const Digraph& g, VertexIndex u, VertexIndex v);
bool positive_path_exists(const Digraph& g, std::string_view u, std::string_view v);
// Positive path from u to v using only edges of es (u reaches itself).
bool positive_path_within(const EdgeSet& es, VertexIndex u, VertexIndex v);

// V(es) connected once edge directions are ignored. Throws PreconditionError
// for an empty set.
bool is_connected(const EdgeSet& es);

// Longest directed path using only edges of es; ties go to the
// lexicographically smallest sequence of edge ids. Throws PreconditionError
// for an empty set.
std::vector<EdgeIndex> longest_positive_path(const EdgeSet& es);

// Longest path in es from some vertex of `from` to some vertex of `to`, same
// tie-breaking. Zero-length paths count when a vertex is in both sets.
std::optional<std::vector<EdgeIndex>> longest_path_between(const EdgeSet& es,
                                                           std::span<const VertexIndex> from,
                                                           std::span<const VertexIndex> to);

bool is_essential(const Digraph& g, EdgeIndex e);
EdgeSet edges_on_st_paths(const Digraph& g, VertexIndex u, VertexIndex v);

}  // namespace pseudoroots
