#include "pseudoroots/pseudoroots.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

#include "pseudoroots/errors.hpp"

namespace pseudoroots {

namespace {

std::string index_list(std::span<const int> indices) {
  std::string out = "(";
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(indices[k]);
  }
  return out + ")";
}

void check_indices(const RootSet& rs, std::span<const int> indices) {
  if (indices.empty()) throw PreconditionError("Vandermonde data needs at least one index");
  std::set<int> seen;
  for (int i : indices) {
    if (i < 1 || i > rs.n()) throw PreconditionError("root index " + std::to_string(i) + " out of range");
    if (!seen.insert(i).second) throw PreconditionError("repeated root index in " + index_list(indices));
  }
}

// Calls f on every k-element subset of {1..n}, ascending.
template <typename F>
bool for_each_subset(int n, int k, F&& f) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 1);
  while (true) {
    if (!f(std::span<const int>(idx))) return false;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos + 1) --pos;
    if (pos < 0) return true;
    ++idx[pos];
    for (int q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

}  // namespace

struct RootSet::Cache {
  std::once_flag once;
  GenericityReport report;
};

RootSet::RootSet(std::vector<Matrix> roots) : roots_(std::move(roots)), cache_(std::make_shared<Cache>()) {
  if (roots_.empty()) throw PreconditionError("a root set needs at least one root");
  dim_ = roots_.front().dim();
  for (const auto& x : roots_) {
    if (x.dim() != dim_) throw DimensionMismatch("roots must share one dimension");
  }
}

const GenericityReport& RootSet::genericity() const {
  std::call_once(cache_->once, [this] { cache_->report = is_generic(*this); });
  return cache_->report;
}

Matrix vandermonde_matrix(const RootSet& rs, std::span<const int> indices) {
  check_indices(rs, indices);
  const std::size_t m = indices.size();
  std::vector<std::vector<Matrix>> blocks(m, std::vector<Matrix>(m));
  for (std::size_t c = 0; c < m; ++c) {
    Matrix p = Matrix::identity(rs.dim());
    for (std::size_t r = m; r-- > 0;) {
      blocks[r][c] = p;
      p = p * rs.root(indices[c]);
    }
  }
  return block_assemble(blocks);
}

Matrix vandermonde_quasidet(const RootSet& rs, std::span<const int> indices) {
  check_indices(rs, indices);
  const std::size_t k = indices.size() - 1;
  const std::size_t d = rs.dim();
  const Matrix& last = rs.root(indices[k]);
  if (k == 0) return Matrix::identity(d);
  const auto head = indices.first(k);
  const auto v_inv = try_inverse(vandermonde_matrix(rs, head));
  if (!v_inv) throw SingularVandermonde("V" + index_list(head) + " is singular");
  // c_b = last^{k-1-b}
  std::vector<Matrix> column(k);
  Matrix p = Matrix::identity(d);
  for (std::size_t b = k; b-- > 0;) {
    column[b] = p;
    p = p * last;
  }
  Matrix correction = Matrix::zero(d);
  for (std::size_t a = 0; a < k; ++a) {
    const Matrix row = power(rs.root(head[a]), static_cast<unsigned>(k));
    Matrix inner = Matrix::zero(d);
    for (std::size_t b = 0; b < k; ++b) inner = inner + block_at(*v_inv, d, a, b) * column[b];
    correction = correction + row * inner;
  }
  return power(last, static_cast<unsigned>(k)) - correction;
}

GenericityReport is_generic(const RootSet& rs) {
  GenericityReport report;
  const int n = rs.n();
  for (int size = 2; size <= n && report.generic; ++size) {
    for_each_subset(n, size, [&](std::span<const int> subset) {
      if (!is_invertible(vandermonde_matrix(rs, subset))) {
        report = {false, {subset.begin(), subset.end()}, "Vandermonde matrix is singular"};
        return false;
      }
      return true;
    });
  }
  for (int size = 2; size <= n && report.generic; ++size) {
    for_each_subset(n, size, [&](std::span<const int> subset) {
      for (std::size_t last = 0; last < subset.size(); ++last) {
        std::vector<int> ordered;
        for (std::size_t k = 0; k < subset.size(); ++k) {
          if (k != last) ordered.push_back(subset[k]);
        }
        ordered.push_back(subset[last]);
        if (!is_invertible(vandermonde_quasidet(rs, ordered))) {
          report = {false, ordered, "quasideterminant is singular"};
          return false;
        }
      }
      return true;
    });
  }
  return report;
}

Matrix pseudo_root_ordered(const RootSet& rs, std::span<const int> ordered_set, int i) {
  std::vector<int> indices(ordered_set.begin(), ordered_set.end());
  indices.push_back(i);
  const Matrix v = vandermonde_quasidet(rs, indices);
  const auto v_inv = try_inverse(v);
  if (!v_inv) throw SingularQuasidet("v" + index_list(indices) + " is singular");
  return v * rs.root(i) * *v_inv;
}

Matrix pseudo_root(const RootSet& rs, SubsetMask set, int i) {
  if (i < 1 || i > rs.n() || (set >> (i - 1)) & 1U || (set >> rs.n()) != 0) {
    throw PreconditionError("pseudo_root: bad pair " + GammaEdgeLabel{set, i}.str());
  }
  std::vector<int> elems = subset_elements(set);
  Matrix value = pseudo_root_ordered(rs, elems, i);
  if (elems.size() >= 2) {
    std::reverse(elems.begin(), elems.end());
    if (pseudo_root_ordered(rs, elems, i) != value) {
      throw LemmaViolated("pseudo-root " + GammaEdgeLabel{set, i}.str() + " depends on the ordering");
    }
  }
  return value;
}

const Matrix& PseudoRootTable::at(const GammaEdgeLabel& edge) const {
  auto it = entries_.find(edge);
  if (it == entries_.end()) throw InputError("no table entry for " + edge.str());
  return it->second;
}

std::optional<std::string> check_diamonds(const PseudoRootTable& table) {
  const int n = table.n();
  const SubsetMask count = SubsetMask{1} << n;
  for (SubsetMask a = 0; a < count; ++a) {
    for (int i = 1; i <= n; ++i) {
      const SubsetMask bi = SubsetMask{1} << (i - 1);
      if (a & bi) continue;
      for (int j = i + 1; j <= n; ++j) {
        const SubsetMask bj = SubsetMask{1} << (j - 1);
        if (a & bj) continue;
        const Matrix& top_j = table.at(a | bi, j);
        const Matrix& top_i = table.at(a | bj, i);
        const Matrix& low_i = table.at(a, i);
        const Matrix& low_j = table.at(a, j);
        const std::string where = "diamond A=" + subset_id(a) + ", i=" + std::to_string(i) + ", j=" +
                                  std::to_string(j);
        if (top_j + low_i != top_i + low_j) return "sum relation fails at " + where;
        if (top_j * low_i != top_i * low_j) return "product relation fails at " + where;
      }
    }
  }
  return std::nullopt;
}

PseudoRootTable build_table(const RootSet& rs) {
  const auto& gen = rs.genericity();
  if (!gen.generic) {
    throw SingularVandermonde("roots are not generic: " + gen.reason + " at " + index_list(gen.failing));
  }
  const int n = rs.n();
  PseudoRootTable table(n, rs.dim());
  for (SubsetMask a = 0; a < (SubsetMask{1} << n); ++a) {
    for (int i = 1; i <= n; ++i) {
      if ((a >> (i - 1)) & 1U) continue;
      table.set({a, i}, pseudo_root(rs, a, i));
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (table.at(0, i) != rs.root(i)) throw LemmaViolated("x_{{}," + std::to_string(i) + "} differs from x_i");
  }
  if (auto failure = check_diamonds(table)) throw LemmaViolated(*failure);
  return table;
}

std::vector<Matrix> defining_factors(const PseudoRootTable& table, std::span<const int> ordering) {
  std::vector<int> sorted(ordering.begin(), ordering.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expected(static_cast<std::size_t>(table.n()));
  std::iota(expected.begin(), expected.end(), 1);
  if (sorted != expected) throw PreconditionError("ordering must be a permutation of 1..n");
  std::vector<Matrix> ys;
  SubsetMask prefix = 0;
  for (int i : ordering) {
    ys.push_back(table.at(prefix, i));
    prefix |= SubsetMask{1} << (i - 1);
  }
  std::reverse(ys.begin(), ys.end());
  return ys;
}

Poly canonical_polynomial(const PseudoRootTable& table) {
  std::vector<int> ordering(static_cast<std::size_t>(table.n()));
  std::iota(ordering.begin(), ordering.end(), 1);
  const Poly p = from_linear_factors(defining_factors(table, ordering), table.dim());
  if (table.n() <= 5) {
    while (std::next_permutation(ordering.begin(), ordering.end())) {
      if (from_linear_factors(defining_factors(table, ordering), table.dim()) != p) {
        throw LemmaViolated("canonical polynomial depends on the ordering " + index_list(ordering));
      }
    }
  }
  return p;
}

Poly canonical_polynomial(const RootSet& rs) { return canonical_polynomial(build_table(rs)); }

std::pair<Matrix, Matrix> d_op(const Matrix& a1, const Matrix& a2) {
  const Matrix diff = a1 - a2;
  const auto inv = try_inverse(diff);
  if (!inv) throw SingularDifference("d-operation: a1 - a2 is singular");
  // (a2 - a1)^{-1} a1 (a2 - a1) = (a1 - a2)^{-1} a1 (a1 - a2)
  return {*inv * a2 * diff, *inv * a1 * diff};
}

std::pair<Matrix, Matrix> u_op(const Matrix& b1, const Matrix& b2) {
  const Matrix diff = b1 - b2;
  const auto inv = try_inverse(diff);
  if (!inv) throw SingularDifference("u-operation: b1 - b2 is singular");
  return {diff * b2 * *inv, diff * b1 * *inv};
}

void LabeledEdgeSet::add(EdgeIndex e, Matrix value, std::string name) {
  if (e >= host_->edge_count()) throw InputError("edge index out of range");
  if (!labels_.empty() && labels_.begin()->second.value.dim() != value.dim()) {
    throw DimensionMismatch("labels must share one dimension");
  }
  if (name.empty()) name = host_->edge_id(e);
  if (auto it = generators_.find(name); it != generators_.end() && it->second != value) {
    throw InputError("generator \"" + name + "\" bound to two different values");
  }
  generators_.emplace(name, value);
  labels_.insert_or_assign(e, EdgeLabel{std::move(value), ConjExpr::generator(name)});
}

void LabeledEdgeSet::add_derived(EdgeIndex e, EdgeLabel label) { labels_.insert_or_assign(e, std::move(label)); }

const EdgeLabel& LabeledEdgeSet::at(EdgeIndex e) const {
  auto it = labels_.find(e);
  if (it == labels_.end()) throw InputError("edge \"" + host_->edge_id(e) + "\" has no label");
  return it->second;
}

EdgeSet LabeledEdgeSet::edges() const {
  EdgeSet es(*host_);
  for (const auto& [e, label] : labels_) es.insert(e);
  return es;
}

LabeledEdgeSet labels_from_table(const Digraph& gamma, const PseudoRootTable& table,
                                 std::span<const EdgeIndex> edges) {
  LabeledEdgeSet ls(gamma);
  for (EdgeIndex e : edges) ls.add(e, table.at(parse_gamma_edge(gamma.edge_id(e))));
  return ls;
}

LabeledCompletion labeled_completion(const LabeledEdgeSet& ls) {
  const Digraph& g = ls.host();
  LabeledCompletion out{ls, {}, {}};
  LabeledEdgeSet& labels = out.labels;
  std::vector<EdgeIndex> queue;
  for (const auto& [e, label] : ls.labels()) queue.push_back(e);
  std::vector<bool> processed(g.edge_count(), false);

  auto assign = [&](EdgeIndex x, const Matrix& value, const ConjExpr& expr, ClosureStep& step) {
    if (labels.contains(x)) {
      if (labels.at(x).value != value) {
        throw InconsistentLabels("edge \"" + g.edge_id(x) + "\" derived as " + value.str() + " by " +
                                 to_char(step.kind) + "(\"" + g.edge_id(step.input.first) + "\", \"" +
                                 g.edge_id(step.input.second) + "\") but labeled " + labels.at(x).value.str());
      }
      return;
    }
    labels.add_derived(x, {value, expr});
    step.added.push_back(x);
    queue.push_back(x);
  };

  auto apply = [&](OpKind kind, EdgeIndex p, EdgeIndex q) {
    const EdgePair input = std::minmax(p, q);
    const auto results = kind == OpKind::D ? d_results(g, input.first, input.second)
                                           : u_results(g, input.first, input.second);
    if (results.empty()) return;
    const EdgeLabel& first = labels.at(input.first);
    const EdgeLabel& second = labels.at(input.second);
    std::pair<Matrix, Matrix> values;
    std::pair<ConjExpr, ConjExpr> exprs{first.expr, second.expr};
    try {
      if (kind == OpKind::D) {
        values = d_op(first.value, second.value);
        exprs = {ConjExpr::rconj(second.expr, first.expr), ConjExpr::rconj(first.expr, second.expr)};
      } else {
        values = u_op(first.value, second.value);
        exprs = {ConjExpr::lconj(second.expr, first.expr), ConjExpr::lconj(first.expr, second.expr)};
      }
    } catch (const SingularDifference& err) {
      out.skipped.push_back({kind, input, err.what()});
      return;
    }
    for (const auto& output : results) {
      ClosureStep step{kind, input, output, {}};
      assign(output.first, values.first, exprs.first, step);
      assign(output.second, values.second, exprs.second, step);
      out.steps.push_back(std::move(step));
    }
  };

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

Factorization derive_factorization(const LabeledEdgeSet& ls) {
  if (ls.size() == 0) throw NotSufficient("no labeled edges");
  const Digraph& g = ls.host();
  LabeledCompletion closure = labeled_completion(ls);
  const EdgeSet reached = closure.labels.edges();
  const auto path = longest_path_between(reached, sources(g), sinks(g));
  if (!path) throw NotSufficient("the labeled completion contains no source-to-sink path");
  Factorization out{*path, {}, {}, Poly::zero(ls.labels().begin()->second.value.dim()), std::move(closure)};
  for (EdgeIndex e : out.path) {
    const EdgeLabel& label = out.closure.labels.at(e);
    if (label.expr.eval(ls.assignment()) != label.value) {
      throw LemmaViolated("trace for \"" + g.edge_id(e) + "\" does not reproduce its value");
    }
    out.factors.push_back(label.value);
    out.traces.push_back(label.expr);
  }
  out.polynomial = from_linear_factors(out.factors, out.polynomial.dim());
  return out;
}

namespace {

void check_assignment(std::span<const Rational> s, int n) {
  if (static_cast<int>(s.size()) != n) throw PreconditionError("need exactly n scalar values");
  std::set<Rational> seen(s.begin(), s.end());
  if (seen.size() != s.size()) throw PreconditionError("scalar values must be pairwise distinct");
}

}  // namespace

std::map<GammaEdgeLabel, Rational> scalar_specialize(const PseudoRootTable& table, std::span<const Rational> s) {
  check_assignment(s, table.n());
  std::map<GammaEdgeLabel, Rational> out;
  for (const auto& [edge, value] : table.entries()) out.emplace(edge, s[edge.index - 1]);
  return out;
}

std::map<EdgeIndex, Rational> scalar_specialize(const EdgeSet& es, std::span<const Rational> s) {
  const auto n = boolean_lattice_order(es.host());
  if (!n) throw PreconditionError("scalar_specialize: host is not a boolean lattice");
  check_assignment(s, *n);
  std::map<EdgeIndex, Rational> out;
  for (EdgeIndex e : es.members()) out.emplace(e, s[parse_gamma_edge(es.host().edge_id(e)).index - 1]);
  return out;
}

bool specializes_to_defining_set(const std::map<EdgeIndex, Rational>& values, std::span<const Rational> s) {
  std::multiset<Rational> got;
  for (const auto& [e, v] : values) got.insert(v);
  return got == std::multiset<Rational>(s.begin(), s.end());
}

Matrix random_matrix(std::size_t dim, std::mt19937_64& rng, int bound) {
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  std::vector<Rational> entries;
  entries.reserve(dim * dim);
  for (std::size_t k = 0; k < dim * dim; ++k) {
    entries.emplace_back(static_cast<long>(rng() % span) - bound);
  }
  return Matrix(dim, std::move(entries));
}

RootSet random_generic_roots(int n, std::size_t dim, std::mt19937_64& rng, int bound, int max_attempts) {
  if (n < 1 || dim < 1) throw PreconditionError("random roots need n >= 1 and d >= 1");
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Matrix> roots;
    for (int i = 0; i < n; ++i) roots.push_back(random_matrix(dim, rng, bound));
    RootSet rs(std::move(roots));
    if (rs.genericity().generic) return rs;
  }
  throw NumericError("no generic root set found in " + std::to_string(max_attempts) + " draws");
}

}  // namespace pseudoroots
