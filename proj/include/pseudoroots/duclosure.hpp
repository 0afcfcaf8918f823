#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pseudoroots/digraph.hpp"

namespace pseudoroots {

using EdgePair = std::pair<EdgeIndex, EdgeIndex>;

enum class OpKind { D, U };

char to_char(OpKind kind);

// All common-head pairs (f1, f2) of host edges with t(f_i) = h(e_i).
// Requires e1 != e2 with a common tail; throws PreconditionError otherwise.
std::vector<EdgePair> d_results(const Digraph& g, EdgeIndex e1, EdgeIndex e2);
// All common-tail pairs (e1, e2) of host edges with h(e_i) = t(f_i).
// Requires f1 != f2 with a common head.
std::vector<EdgePair> u_results(const Digraph& g, EdgeIndex f1, EdgeIndex f2);

struct ClosureStep {
  OpKind kind;
  EdgePair input;
  // Aligned with input: output.first continues (D) or precedes (U) input.first.
  EdgePair output;
  // Members of output first introduced by this step.
  std::vector<EdgeIndex> added;
};

struct ClosureTrace {
  std::vector<ClosureStep> steps;
};

struct Completion {
  EdgeSet edges;
  ClosureTrace trace;
};

// Least DU-complete superset of es inside the host. Worklist order is FIFO
// over edge indices, so the trace is deterministic; every applied operation
// is recorded.
Completion completion(const EdgeSet& es);

bool is_complete(const EdgeSet& es);

struct AmpleReport {
  bool ample = true;
  // 1: a non-sink v is reachable from every vertex of V(es).
  // 2: a non-source v reaches every vertex of V(es).
  int failed_condition = 0;
  std::optional<VertexIndex> uncovered;
};

// Non-domination test over the whole host vertex set.
AmpleReport is_ample(const EdgeSet& es);

// Element-coverage form of the ample test on a boolean lattice: every
// element lies in some vertex of V(es) and outside another. Throws
// PreconditionError when the host is not a boolean lattice.
bool gamma_n_ample_fast(const EdgeSet& es);

struct SufficiencyReport {
  bool sufficient = false;
  // Host source to host sink inside the completion.
  std::vector<EdgeIndex> path;
  Completion completion;
};

SufficiencyReport is_sufficient(const EdgeSet& es);

struct LemmaWitness {
  EdgeIndex leaving_v;  // t(f) = v
  EdgeIndex entering_u; // h(e) = u
};

// For a complete connected F and u, v in V(F) with no positive path u -> v
// inside F, finds f in F leaving v and e in F entering u. Throws
// PreconditionError when the hypotheses fail and LemmaViolated when a
// witness is missing.
LemmaWitness lemma_witness(const EdgeSet& f, VertexIndex u, VertexIndex v);

}  // namespace pseudoroots
