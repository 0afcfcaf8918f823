#include "pseudoroots/duclosure.hpp"

#include <algorithm>

#include "pseudoroots/errors.hpp"
#include "pseudoroots/hasse.hpp"

namespace pseudoroots {

char to_char(OpKind kind) { return kind == OpKind::D ? 'D' : 'U'; }

std::vector<EdgePair> d_results(const Digraph& g, EdgeIndex e1, EdgeIndex e2) {
  if (e1 == e2 || g.tail(e1) != g.tail(e2)) {
    throw PreconditionError("D-operation needs two distinct edges with a common tail: \"" + g.edge_id(e1) +
                            "\", \"" + g.edge_id(e2) + "\"");
  }
  std::vector<EdgePair> out;
  for (EdgeIndex f1 : g.out_edges(g.head(e1))) {
    for (EdgeIndex f2 : g.out_edges(g.head(e2))) {
      if (g.head(f1) == g.head(f2)) out.emplace_back(f1, f2);
    }
  }
  return out;
}

std::vector<EdgePair> u_results(const Digraph& g, EdgeIndex f1, EdgeIndex f2) {
  if (f1 == f2 || g.head(f1) != g.head(f2)) {
    throw PreconditionError("U-operation needs two distinct edges with a common head: \"" + g.edge_id(f1) +
                            "\", \"" + g.edge_id(f2) + "\"");
  }
  std::vector<EdgePair> out;
  for (EdgeIndex e1 : g.in_edges(g.tail(f1))) {
    for (EdgeIndex e2 : g.in_edges(g.tail(f2))) {
      if (g.tail(e1) == g.tail(e2)) out.emplace_back(e1, e2);
    }
  }
  return out;
}

Completion completion(const EdgeSet& es) {
  const Digraph& g = es.host();
  Completion out{es, {}};
  std::vector<EdgeIndex> queue = es.members();
  std::vector<bool> processed(g.edge_count(), false);

  auto apply = [&](OpKind kind, EdgeIndex a, EdgeIndex b) {
    const EdgePair input = std::minmax(a, b);
    const auto results = kind == OpKind::D ? d_results(g, input.first, input.second)
                                           : u_results(g, input.first, input.second);
    for (const auto& output : results) {
      ClosureStep step{kind, input, output, {}};
      for (EdgeIndex x : {output.first, output.second}) {
        if (out.edges.insert(x)) {
          step.added.push_back(x);
          queue.push_back(x);
        }
      }
      out.trace.steps.push_back(std::move(step));
    }
  };

  // Each unordered pair is handled once, when its later member is dequeued.
  for (std::size_t next = 0; next < queue.size(); ++next) {
    const EdgeIndex e = queue[next];
    processed[e] = true;
    for (EdgeIndex m : g.out_edges(g.tail(e))) {
      if (m != e && processed[m]) apply(OpKind::D, m, e);
    }
    for (EdgeIndex m : g.in_edges(g.head(e))) {
      if (m != e && processed[m]) apply(OpKind::U, m, e);
    }
  }
  return out;
}

bool is_complete(const EdgeSet& es) {
  const Digraph& g = es.host();
  auto inside = [&es](const std::vector<EdgePair>& results) {
    return std::all_of(results.begin(), results.end(),
                       [&es](const EdgePair& p) { return es.contains(p.first) && es.contains(p.second); });
  };
  const auto members = es.members();
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const EdgeIndex x = members[a];
      const EdgeIndex y = members[b];
      if (g.tail(x) == g.tail(y) && !inside(d_results(g, x, y))) return false;
      if (g.head(x) == g.head(y) && !inside(u_results(g, x, y))) return false;
    }
  }
  return true;
}

AmpleReport is_ample(const EdgeSet& es) {
  const Digraph& g = es.host();
  const auto w = es.vertices();
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.out_edges(v).empty()) continue;
    if (std::none_of(w.begin(), w.end(), [&](VertexIndex u) { return !g.reaches(u, v); })) {
      return {false, 1, v};
    }
  }
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.in_edges(v).empty()) continue;
    if (std::none_of(w.begin(), w.end(), [&](VertexIndex x) { return !g.reaches(v, x); })) {
      return {false, 2, v};
    }
  }
  return {};
}

bool gamma_n_ample_fast(const EdgeSet& es) {
  const auto n = boolean_lattice_order(es.host());
  if (!n) throw PreconditionError("gamma_n_ample_fast: host is not a boolean lattice");
  SubsetMask somewhere_in = 0;
  SubsetMask somewhere_out = 0;
  const SubsetMask full = (SubsetMask{1} << *n) - 1;
  for (VertexIndex v : es.vertices()) {
    const SubsetMask m = *parse_subset(es.host().vertex_id(v));
    somewhere_in |= m;
    somewhere_out |= full & ~m;
  }
  return somewhere_in == full && somewhere_out == full;
}

SufficiencyReport is_sufficient(const EdgeSet& es) {
  SufficiencyReport report{false, {}, completion(es)};
  const Digraph& g = es.host();
  const auto from = sources(g);
  const auto to = sinks(g);
  if (auto path = longest_path_between(report.completion.edges, from, to)) {
    report.sufficient = true;
    report.path = std::move(*path);
  }
  return report;
}

LemmaWitness lemma_witness(const EdgeSet& f, VertexIndex u, VertexIndex v) {
  const Digraph& g = f.host();
  if (f.empty() || !is_connected(f)) throw PreconditionError("lemma_witness: F must be connected");
  if (!is_complete(f)) throw PreconditionError("lemma_witness: F must be complete");
  const auto verts = f.vertices();
  if (!std::binary_search(verts.begin(), verts.end(), u) || !std::binary_search(verts.begin(), verts.end(), v)) {
    throw PreconditionError("lemma_witness: u and v must lie in V(F)");
  }
  if (positive_path_within(f, u, v)) {
    throw PreconditionError("lemma_witness: F contains a positive path from \"" + g.vertex_id(u) + "\" to \"" +
                            g.vertex_id(v) + "\"");
  }
  std::optional<EdgeIndex> leaving;
  std::optional<EdgeIndex> entering;
  for (EdgeIndex e : g.out_edges(v)) {
    if (f.contains(e)) {
      leaving = e;
      break;
    }
  }
  for (EdgeIndex e : g.in_edges(u)) {
    if (f.contains(e)) {
      entering = e;
      break;
    }
  }
  if (!leaving || !entering) {
    throw LemmaViolated("no witness edge for u=\"" + g.vertex_id(u) + "\", v=\"" + g.vertex_id(v) + "\"");
  }
  return {*leaving, *entering};
}

}  // namespace pseudoroots
