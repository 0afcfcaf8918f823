#include "pseudoroots/hasse.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "pseudoroots/errors.hpp"

namespace pseudoroots {

namespace {

std::string join_ints(const std::vector<int>& xs, char open, char close) {
  std::string out(1, open);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(xs[k]);
  }
  out += close;
  return out;
}

// Parses "{a,b,...}" into ascending distinct integers.
std::optional<std::vector<int>> parse_int_set(std::string_view text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') return std::nullopt;
  text = text.substr(1, text.size() - 2);
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view part = text.substr(0, comma);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (part.empty() || part.size() > 9) return std::nullopt;
    int value = 0;
    for (char c : part) {
      if (c < '0' || c > '9') return std::nullopt;
      value = value * 10 + (c - '0');
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) return std::nullopt;
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) return std::nullopt;
  return out;
}

}  // namespace

std::vector<int> subset_elements(SubsetMask mask) {
  std::vector<int> out;
  for (int k = 1; mask; ++k, mask >>= 1) {
    if (mask & 1U) out.push_back(k);
  }
  return out;
}

std::string subset_id(SubsetMask mask) { return join_ints(subset_elements(mask), '{', '}'); }

std::optional<SubsetMask> parse_subset(std::string_view text) {
  auto elems = parse_int_set(text);
  if (!elems) return std::nullopt;
  SubsetMask mask = 0;
  for (int k : *elems) {
    if (k < 1 || k > kMaxBooleanLatticeN) return std::nullopt;
    mask |= SubsetMask{1} << (k - 1);
  }
  return mask;
}

std::string GammaEdgeLabel::str() const { return subset_id(set) + ":" + std::to_string(index); }

GammaEdgeLabel parse_gamma_edge(std::string_view text) {
  const auto colon = text.rfind(':');
  auto fail = [&text]() -> GammaEdgeLabel {
    throw InputError("not a boolean-lattice edge id: \"" + std::string(text) + "\"");
  };
  if (colon == std::string_view::npos) return fail();
  auto set = parse_subset(text.substr(0, colon));
  std::string_view idx = text.substr(colon + 1);
  if (!set || idx.empty() || idx.size() > 2) return fail();
  int index = 0;
  for (char c : idx) {
    if (c < '0' || c > '9') return fail();
    index = index * 10 + (c - '0');
  }
  if (index < 1 || index > kMaxBooleanLatticeN || (*set >> (index - 1)) & 1U) return fail();
  return {*set, index};
}

Digraph boolean_lattice(int n) {
  if (n < 1 || n > kMaxBooleanLatticeN) {
    throw InputError("boolean lattice needs 1 <= n <= " + std::to_string(kMaxBooleanLatticeN) +
                     ", got " + std::to_string(n));
  }
  const SubsetMask count = SubsetMask{1} << n;
  GraphSpec spec;
  spec.vertices.reserve(count);
  for (SubsetMask m = 0; m < count; ++m) {
    spec.vertices.push_back({subset_id(m), std::popcount(m)});
  }
  for (SubsetMask a = 0; a < count; ++a) {
    for (int i = 1; i <= n; ++i) {
      if ((a >> (i - 1)) & 1U) continue;
      const GammaEdgeLabel label{a, i};
      spec.edges.push_back({label.str(), subset_id(label.tail()), subset_id(label.head())});
    }
  }
  return Digraph(std::move(spec));
}

std::optional<int> boolean_lattice_order(const Digraph& g) {
  const std::size_t nv = g.vertex_count();
  if (nv < 2 || !std::has_single_bit(nv)) return std::nullopt;
  const int n = std::countr_zero(nv);
  if (n > kMaxBooleanLatticeN || g.edge_count() != static_cast<std::size_t>(n) << (n - 1)) {
    return std::nullopt;
  }
  const SubsetMask full = (SubsetMask{1} << n) - 1;
  std::set<SubsetMask> seen;
  for (VertexIndex v = 0; v < nv; ++v) {
    auto m = parse_subset(g.vertex_id(v));
    if (!m || (*m & ~full) || !seen.insert(*m).second) return std::nullopt;
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    GammaEdgeLabel label;
    try {
      label = parse_gamma_edge(g.edge_id(e));
    } catch (const InputError&) {
      return std::nullopt;
    }
    if (label.index > n || g.vertex_id(g.tail(e)) != subset_id(label.tail()) ||
        g.vertex_id(g.head(e)) != subset_id(label.head())) {
      return std::nullopt;
    }
  }
  return n;
}

HasseGraph hasse_from_poset(const std::vector<std::string>& elements,
                            const std::function<bool(std::size_t, std::size_t)>& less,
                            const std::function<int(std::size_t)>& rank) {
  const std::size_t n = elements.size();
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) lt[a][b] = less(a, b);
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (lt[a][a]) throw InputError("order is not irreflexive at " + elements[a]);
    for (std::size_t b = 0; b < n; ++b) {
      if (!lt[a][b]) continue;
      if (lt[b][a]) throw InputError("order is not antisymmetric: " + elements[a] + ", " + elements[b]);
      if (rank(a) >= rank(b)) {
        throw InputError("rank is not strictly monotone: " + elements[a] + " < " + elements[b]);
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (lt[b][c] && !lt[a][c]) {
          throw InputError("order is not transitive: " + elements[a] + " < " + elements[b] + " < " +
                           elements[c]);
        }
      }
    }
  }

  HasseGraph out{Digraph(GraphSpec{}), true, {}};
  GraphSpec spec;
  for (std::size_t x = 0; x < n; ++x) spec.vertices.push_back({elements[x], rank(x)});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!lt[y][x]) continue;
      bool cover = true;
      for (std::size_t z = 0; z < n && cover; ++z) cover = !(lt[y][z] && lt[z][x]);
      if (!cover) continue;
      spec.edges.push_back({elements[x] + "->" + elements[y], elements[x], elements[y]});
      if (rank(x) - rank(y) != 1) {
        out.layered = false;
        out.rank_gaps.push_back(elements[x] + " covers " + elements[y] + " across " +
                                std::to_string(rank(x) - rank(y)) + " ranks");
      }
    }
  }
  if (!out.layered) {
    for (auto& v : spec.vertices) v.rank.reset();
  }
  out.graph = Digraph(std::move(spec));
  return out;
}

Digraph complex_hasse(const std::vector<std::vector<int>>& family) {
  std::set<std::vector<int>> members;
  for (auto s : family) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw InputError("subset " + join_ints(s, '{', '}') + " repeats an element");
    }
    members.insert(std::move(s));
  }
  for (const auto& b : members) {
    for (auto it = b.rbegin(); it != b.rend(); ++it) {
      std::vector<int> a;
      std::copy_if(b.begin(), b.end(), std::back_inserter(a), [x = *it](int y) { return y != x; });
      if (!members.count(a)) {
        throw NotAComplex("family is not a complex: " + join_ints(a, '{', '}') + " is missing below " +
                          join_ints(b, '{', '}'));
      }
    }
  }
  std::vector<std::vector<int>> ordered(members.begin(), members.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });
  GraphSpec spec;
  for (const auto& s : ordered) spec.vertices.push_back({join_ints(s, '{', '}'), static_cast<int>(s.size())});
  for (const auto& a : ordered) {
    for (const auto& b : ordered) {
      if (b.size() != a.size() + 1 || !std::includes(b.begin(), b.end(), a.begin(), a.end())) continue;
      std::vector<int> extra;
      std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(extra));
      spec.edges.push_back({join_ints(a, '{', '}') + ":" + std::to_string(extra.front()),
                            join_ints(b, '{', '}'), join_ints(a, '{', '}')});
    }
  }
  return Digraph(std::move(spec));
}

std::string partition_id(const Partition& p) { return join_ints(p, '(', ')'); }

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition current;
  // Parts bounded by `max_part`, in reverse lexicographic order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  if (n >= 1) rec(n, n);
  return out;
}

bool partition_leq(const Partition& lambda, const Partition& mu) {
  // Consecutive-block merging of mu yields lambda exactly when lambda's
  // partial sums are a subset of mu's.
  std::set<long> mu_sums;
  long s = 0;
  for (int part : mu) mu_sums.insert(s += part);
  long t = 0;
  for (int part : lambda) {
    if (!mu_sums.count(t += part)) return false;
  }
  return t == s;
}

HasseGraph partition_lattice(int n) {
  if (n < 1 || n > kMaxPartitionN) {
    throw InputError("partition lattice needs 1 <= n <= " + std::to_string(kMaxPartitionN) + ", got " +
                     std::to_string(n));
  }
  const auto parts = partitions_of(n);
  // Longest partitions first, so the source (1,...,1) comes first.
  std::vector<Partition> ordered(parts.rbegin(), parts.rend());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Partition& a, const Partition& b) { return a.size() > b.size(); });
  std::vector<std::string> names;
  for (const auto& p : ordered) names.push_back(partition_id(p));
  return hasse_from_poset(
      names,
      [&ordered](std::size_t a, std::size_t b) { return a != b && partition_leq(ordered[a], ordered[b]); },
      [&ordered](std::size_t a) { return static_cast<int>(ordered[a].size()); });
}

}  // namespace pseudoroots
