#include "pseudoroots/digraph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "pseudoroots/errors.hpp"

namespace pseudoroots {

namespace {

struct Resolved {
  std::vector<VertexIndex> tail;
  std::vector<VertexIndex> head;
  std::unordered_map<std::string, VertexIndex> vertex_index;
  std::unordered_map<std::string, EdgeIndex> edge_index;
};

// Kahn's algorithm; returns fewer than |V| vertices when a cycle exists.
std::vector<VertexIndex> kahn(std::size_t n, const std::vector<std::vector<EdgeIndex>>& out,
                              const std::vector<VertexIndex>& head) {
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& edges : out) {
    for (EdgeIndex e : edges) ++indeg[head[e]];
  }
  std::vector<VertexIndex> order;
  order.reserve(n);
  for (VertexIndex v = 0; v < n; ++v) {
    if (indeg[v] == 0) order.push_back(v);
  }
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (EdgeIndex e : out[order[k]]) {
      if (--indeg[head[e]] == 0) order.push_back(head[e]);
    }
  }
  return order;
}

std::vector<VertexIndex> find_cycle(std::size_t n, const std::vector<std::vector<EdgeIndex>>& out,
                                    const std::vector<VertexIndex>& head) {
  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<int> state(n, 0);
  std::vector<VertexIndex> parent(n, n);
  for (VertexIndex root = 0; root < n; ++root) {
    if (state[root] != 0) continue;
    std::vector<std::pair<VertexIndex, std::size_t>> stack{{root, 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == out[v].size()) {
        state[v] = 2;
        stack.pop_back();
        continue;
      }
      const VertexIndex w = head[out[v][next++]];
      if (state[w] == 1) {
        std::vector<VertexIndex> cycle{w};
        for (VertexIndex x = v; x != w; x = parent[x]) cycle.push_back(x);
        cycle.push_back(w);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (state[w] == 0) {
        state[w] = 1;
        parent[w] = v;
        stack.emplace_back(w, 0);
      }
    }
  }
  return {};
}

}  // namespace

ValidationReport validate(const GraphSpec& spec) {
  ValidationReport report;
  Resolved r;
  const std::size_t n = spec.vertices.size();
  for (VertexIndex v = 0; v < n; ++v) {
    if (!r.vertex_index.emplace(spec.vertices[v].id, v).second) {
      report.ids_ok = false;
      report.problems.push_back("duplicate vertex id \"" + spec.vertices[v].id + "\"");
    }
  }
  std::vector<std::vector<EdgeIndex>> out(n);
  std::set<std::pair<VertexIndex, VertexIndex>> seen;
  for (EdgeIndex e = 0; e < spec.edges.size(); ++e) {
    const auto& edge = spec.edges[e];
    if (!r.edge_index.emplace(edge.id, e).second) {
      report.ids_ok = false;
      report.problems.push_back("duplicate edge id \"" + edge.id + "\"");
    }
    auto t = r.vertex_index.find(edge.tail);
    auto h = r.vertex_index.find(edge.head);
    if (t == r.vertex_index.end() || h == r.vertex_index.end()) {
      report.ids_ok = false;
      report.problems.push_back("edge \"" + edge.id + "\" references an unknown vertex");
      continue;
    }
    if (!seen.emplace(t->second, h->second).second) {
      report.simple = false;
      report.problems.push_back("duplicate edge " + edge.tail + " -> " + edge.head + " (\"" + edge.id + "\")");
    }
    r.tail.push_back(t->second);
    r.head.push_back(h->second);
    out[t->second].push_back(r.tail.size() - 1);
  }

  if (kahn(n, out, r.head).size() != n) {
    report.acyclic = false;
    for (VertexIndex v : find_cycle(n, out, r.head)) report.cycle.push_back(spec.vertices[v].id);
    std::string text;
    for (const auto& id : report.cycle) text += (text.empty() ? "" : " -> ") + id;
    report.problems.push_back("cycle: " + text);
  }

  const auto ranked = std::count_if(spec.vertices.begin(), spec.vertices.end(),
                                    [](const GraphSpec::Vertex& v) { return v.rank.has_value(); });
  if (ranked != 0 && static_cast<std::size_t>(ranked) != n) {
    report.rank_consistent = false;
    report.problems.push_back("rank given for some vertices but not all");
  } else if (ranked != 0 && report.ids_ok) {
    report.has_rank = true;
    for (const auto& v : spec.vertices) {
      if (*v.rank < 0) {
        report.rank_consistent = false;
        report.problems.push_back("negative rank at \"" + v.id + "\"");
      }
    }
    for (const auto& edge : spec.edges) {
      const int rt = *spec.vertices[r.vertex_index.at(edge.tail)].rank;
      const int rh = *spec.vertices[r.vertex_index.at(edge.head)].rank;
      if (rt - 1 != rh) {
        report.rank_consistent = false;
        report.problems.push_back("rank violation on \"" + edge.id + "\": r(tail)=" + std::to_string(rt) +
                                  ", r(head)=" + std::to_string(rh));
      }
    }
  }
  return report;
}

Digraph::Digraph(GraphSpec spec) : spec_(std::move(spec)) {
  const ValidationReport report = validate(spec_);
  if (!report.ok()) {
    std::string msg = "invalid graph:";
    for (const auto& p : report.problems) msg += "\n  " + p;
    throw InvalidGraph(msg);
  }
  has_rank_ = report.has_rank;
  const std::size_t n = spec_.vertices.size();
  for (VertexIndex v = 0; v < n; ++v) vertex_index_.emplace(spec_.vertices[v].id, v);
  out_.resize(n);
  in_.resize(n);
  for (EdgeIndex e = 0; e < spec_.edges.size(); ++e) {
    edge_index_.emplace(spec_.edges[e].id, e);
    tail_.push_back(vertex_index_.at(spec_.edges[e].tail));
    head_.push_back(vertex_index_.at(spec_.edges[e].head));
    out_[tail_.back()].push_back(e);
    in_[head_.back()].push_back(e);
  }
  topo_ = kahn(n, out_, head_);

  const std::size_t words = (n + 63) / 64;
  reach_.assign(n, std::vector<std::uint64_t>(words, 0));
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    const VertexIndex v = *it;
    reach_[v][v / 64] |= std::uint64_t{1} << (v % 64);
    for (EdgeIndex e : out_[v]) {
      const auto& below = reach_[head_[e]];
      for (std::size_t w = 0; w < words; ++w) reach_[v][w] |= below[w];
    }
  }
}

std::optional<VertexIndex> Digraph::find_vertex(std::string_view id) const {
  auto it = vertex_index_.find(std::string(id));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> Digraph::find_edge(std::string_view id) const {
  auto it = edge_index_.find(std::string(id));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

VertexIndex Digraph::vertex(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  throw InputError("unknown vertex \"" + std::string(id) + "\"");
}

EdgeIndex Digraph::edge(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw InputError("unknown edge \"" + std::string(id) + "\"");
}

std::optional<EdgeIndex> Digraph::edge_between(VertexIndex tail, VertexIndex head) const {
  for (EdgeIndex e : out_[tail]) {
    if (head_[e] == head) return e;
  }
  return std::nullopt;
}

EdgeSet::EdgeSet(const Digraph& host, std::span<const EdgeIndex> edges) : EdgeSet(host) {
  for (EdgeIndex e : edges) {
    if (e >= host.edge_count()) throw InputError("edge index out of range");
    insert(e);
  }
}

EdgeSet EdgeSet::all(const Digraph& host) {
  EdgeSet es(host);
  for (EdgeIndex e = 0; e < host.edge_count(); ++e) es.insert(e);
  return es;
}

EdgeSet EdgeSet::from_ids(const Digraph& host, std::span<const std::string> ids) {
  EdgeSet es(host);
  for (const auto& id : ids) es.insert(host.edge(id));
  return es;
}

bool EdgeSet::insert(EdgeIndex e) {
  if (member_[e]) return false;
  member_[e] = true;
  ++count_;
  return true;
}

std::vector<EdgeIndex> EdgeSet::members() const {
  std::vector<EdgeIndex> out;
  out.reserve(count_);
  for (EdgeIndex e = 0; e < member_.size(); ++e) {
    if (member_[e]) out.push_back(e);
  }
  return out;
}

std::vector<std::string> EdgeSet::ids() const {
  std::vector<std::string> out;
  for (EdgeIndex e : members()) out.push_back(host_->edge_id(e));
  return out;
}

std::vector<VertexIndex> EdgeSet::vertices() const {
  std::vector<bool> used(host_->vertex_count(), false);
  for (EdgeIndex e : members()) {
    used[host_->tail(e)] = true;
    used[host_->head(e)] = true;
  }
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < used.size(); ++v) {
    if (used[v]) out.push_back(v);
  }
  return out;
}

bool EdgeSet::subset_of(const EdgeSet& other) const {
  for (EdgeIndex e = 0; e < member_.size(); ++e) {
    if (member_[e] && !other.member_[e]) return false;
  }
  return true;
}

ModularityReport is_modular(const Digraph& g) {
  ModularityReport report;
  const std::size_t n = g.vertex_count();
  // Vertices one step below / above each vertex.
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> above(n, std::vector<bool>(n, false));
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    below[g.tail(e)][g.head(e)] = true;
    above[g.head(e)][g.tail(e)] = true;
  }
  auto meet = [n](const std::vector<bool>& a, const std::vector<bool>& b) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[k] && b[k]) return true;
    }
    return false;
  };
  for (VertexIndex v = 0; v < n; ++v) {
    const auto out = g.out_edges(v);
    for (std::size_t a = 0; a < out.size(); ++a) {
      for (std::size_t b = a + 1; b < out.size(); ++b) {
        if (!meet(below[g.head(out[a])], below[g.head(out[b])])) {
          return {false, 1, std::pair{out[a], out[b]}};
        }
      }
    }
  }
  for (VertexIndex v = 0; v < n; ++v) {
    const auto in = g.in_edges(v);
    for (std::size_t a = 0; a < in.size(); ++a) {
      for (std::size_t b = a + 1; b < in.size(); ++b) {
        if (!meet(above[g.tail(in[a])], above[g.tail(in[b])])) {
          return {false, 2, std::pair{in[a], in[b]}};
        }
      }
    }
  }
  return report;
}

std::vector<VertexIndex> sources(const Digraph& g) {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.in_edges(v).empty()) out.push_back(v);
  }
  return out;
}

std::vector<VertexIndex> sinks(const Digraph& g) {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.out_edges(v).empty()) out.push_back(v);
  }
  return out;
}

bool positive_path_exists(const Digraph& g, VertexIndex u, VertexIndex v) {
  if (u >= g.vertex_count() || v >= g.vertex_count()) throw InputError("vertex index out of range");
  return g.reaches(u, v);
}

bool positive_path_exists(const Digraph& g, std::string_view u, std::string_view v) {
  return g.reaches(g.vertex(u), g.vertex(v));
}

bool positive_path_within(const EdgeSet& es, VertexIndex u, VertexIndex v) {
  const Digraph& g = es.host();
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexIndex> stack{u};
  seen[u] = true;
  while (!stack.empty()) {
    const VertexIndex x = stack.back();
    stack.pop_back();
    if (x == v) return true;
    for (EdgeIndex e : g.out_edges(x)) {
      if (es.contains(e) && !seen[g.head(e)]) {
        seen[g.head(e)] = true;
        stack.push_back(g.head(e));
      }
    }
  }
  return false;
}

bool is_connected(const EdgeSet& es) {
  if (es.empty()) throw PreconditionError("connectivity of an empty edge set is undefined");
  const Digraph& g = es.host();
  std::vector<VertexIndex> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), VertexIndex{0});
  auto find = [&parent](VertexIndex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeIndex e : es.members()) parent[find(g.tail(e))] = find(g.head(e));
  const auto verts = es.vertices();
  const VertexIndex root = find(verts.front());
  return std::all_of(verts.begin(), verts.end(), [&](VertexIndex v) { return find(v) == root; });
}

namespace {

constexpr long kUnreachable = std::numeric_limits<long>::min();

// Longest path DP over reverse topological order. `terminal` marks vertices
// where a path may stop; when empty every vertex is terminal.
struct PathTable {
  std::vector<long> length;
  std::vector<std::optional<EdgeIndex>> next;
};

PathTable longest_paths(const EdgeSet& es, const std::vector<bool>& terminal) {
  const Digraph& g = es.host();
  PathTable t{std::vector<long>(g.vertex_count(), kUnreachable),
              std::vector<std::optional<EdgeIndex>>(g.vertex_count())};
  const auto& topo = g.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const VertexIndex v = *it;
    if (terminal.empty() || terminal[v]) t.length[v] = 0;
    for (EdgeIndex e : g.out_edges(v)) {
      if (!es.contains(e) || t.length[g.head(e)] == kUnreachable) continue;
      const long cand = t.length[g.head(e)] + 1;
      if (cand > t.length[v] ||
          (cand == t.length[v] && t.next[v] && g.edge_id(e) < g.edge_id(*t.next[v]))) {
        t.length[v] = cand;
        t.next[v] = e;
      }
    }
  }
  return t;
}

std::vector<EdgeIndex> unroll(const Digraph& g, const PathTable& t, VertexIndex start) {
  std::vector<EdgeIndex> path;
  for (VertexIndex v = start; t.next[v] && static_cast<long>(path.size()) < t.length[start];) {
    path.push_back(*t.next[v]);
    v = g.head(*t.next[v]);
  }
  return path;
}

}  // namespace

std::vector<EdgeIndex> longest_positive_path(const EdgeSet& es) {
  if (es.empty()) throw PreconditionError("longest path of an empty edge set");
  const Digraph& g = es.host();
  const PathTable t = longest_paths(es, {});
  std::optional<VertexIndex> best;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (!t.next[v]) continue;
    if (!best || t.length[v] > t.length[*best] ||
        (t.length[v] == t.length[*best] && g.edge_id(*t.next[v]) < g.edge_id(*t.next[*best]))) {
      best = v;
    }
  }
  return unroll(g, t, *best);
}

std::optional<std::vector<EdgeIndex>> longest_path_between(const EdgeSet& es,
                                                           std::span<const VertexIndex> from,
                                                           std::span<const VertexIndex> to) {
  const Digraph& g = es.host();
  std::vector<bool> terminal(g.vertex_count(), false);
  for (VertexIndex v : to) terminal[v] = true;
  const PathTable t = longest_paths(es, terminal);
  std::optional<VertexIndex> best;
  for (VertexIndex v : from) {
    if (t.length[v] == kUnreachable) continue;
    if (!best || t.length[v] > t.length[*best]) {
      best = v;
    } else if (t.length[v] == t.length[*best] && t.next[v] && t.next[*best] &&
               g.edge_id(*t.next[v]) < g.edge_id(*t.next[*best])) {
      best = v;
    }
  }
  if (!best) return std::nullopt;
  return unroll(g, t, *best);
}

bool is_essential(const Digraph& g, EdgeIndex e) {
  if (e >= g.edge_count()) throw InputError("edge index out of range");
  const VertexIndex target = g.head(e);
  for (EdgeIndex f : g.out_edges(g.tail(e))) {
    if (f != e && g.reaches(g.head(f), target)) return false;
  }
  return true;
}

EdgeSet edges_on_st_paths(const Digraph& g, VertexIndex u, VertexIndex v) {
  if (u >= g.vertex_count() || v >= g.vertex_count()) throw InputError("vertex index out of range");
  EdgeSet es(g);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (g.reaches(u, g.tail(e)) && g.reaches(g.head(e), v)) es.insert(e);
  }
  return es;
}

}  // namespace pseudoroots
