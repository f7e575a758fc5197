#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gtw/words.hpp"

namespace gtw {

/// A directed edge labeled by a positive generator index.
struct LabeledEdge {
  int from;
  int label;  // 1..rank
  int to;
  bool operator==(const LabeledEdge&) const = default;
  auto operator<=>(const LabeledEdge&) const = default;
};

/// An arbitrary basepointed labeled graph, input to folding.
struct RawGraph {
  Alphabet alphabet;
  int vertex_count = 1;
  int basepoint = 0;
  std::vector<LabeledEdge> edges;
};

/// Folded core graph of a finitely generated subgroup of a free group.
/// Immutable after construction. Vertex 0 is the basepoint.
class CoreGraph {
 public:
  /// Folds and core-prunes an arbitrary raw graph.
  static CoreGraph fold(const RawGraph& raw);

  /// Folded core graph of the subgroup generated by the given words.
  /// An empty list gives the trivial subgroup.
  static CoreGraph from_generators(Alphabet a, const std::vector<Word>& gens);

  static CoreGraph trivial(Alphabet a) { return from_generators(a, {}); }

  /// The bouquet representing the whole free group.
  static CoreGraph whole_group(Alphabet a);

  const Alphabet& alphabet() const { return alphabet_; }
  int vertex_count() const { return static_cast<int>(fwd_.size()); }
  int edge_count() const { return edge_count_; }
  int basepoint() const { return 0; }

  /// Target of the edge labeled x out of v (x signed), or -1.
  int step(int v, Letter x) const;

  /// True iff w labels a closed basepoint path, i.e. membership.
  bool contains(const Word& w) const;

  /// |E| - |V| + 1.
  int rank() const { return edge_count_ - vertex_count() + 1; }

  /// Finite index (= vertex count) when every vertex carries all 2*rank
  /// incident labels, otherwise nullopt.
  std::optional<int> index() const;

  /// BFS relabeling from the basepoint, labels visited in order; equality
  /// of canonical forms is basepointed labeled-graph isomorphism.
  std::string canonical_form() const;

  bool operator==(const CoreGraph& o) const {
    return canonical_form() == o.canonical_form();
  }

  /// A free basis read off a BFS spanning tree (one word per non-tree edge).
  std::vector<Word> generators() const;

  /// All edges (from, label, to), label positive.
  std::vector<LabeledEdge> edges() const;

 private:
  explicit CoreGraph(Alphabet a) : alphabet_(a) {}
  Alphabet alphabet_;
  // fwd_[v][l-1] / bwd_[v][l-1]: target of the l-labeled edge out of / into v.
  std::vector<std::vector<int>> fwd_, bwd_;
  int edge_count_ = 0;
};

/// Basepoint component of the pullback; represents H ∩ K.
CoreGraph intersect(const CoreGraph& h, const CoreGraph& k);

/// rank(H ∩ K) without materializing the graph (pullback Euler count).
int intersection_rank(const CoreGraph& h, const CoreGraph& k);

/// Folded graph of ⟨H ∪ K⟩.
CoreGraph join(const CoreGraph& h, const CoreGraph& k);

/// Outcome of a bounded inertia/compression probe. A pass is evidence at
/// the stated bounds, not a proof.
struct ProbeWitness {
  std::vector<std::string> subgroup_generators;
  int subgroup_rank = 0;
  int compared_rank = 0;  // rk(K∩H) for inertia, rk(H) for compression
};

struct ProbeReport {
  bool passed = true;
  std::vector<ProbeWitness> witnesses;
  int max_generator_count = 0;
  int max_word_length = 0;
  long long candidates_tested = 0;
};

struct ProbeBounds {
  int max_generators = 2;
  int max_word_length = 4;
};

/// Checks rk(K ∩ H) <= rk(K) for every K generated by at most
/// bounds.max_generators words of length <= bounds.max_word_length.
ProbeReport probe_inert(const CoreGraph& h, ProbeBounds bounds);

/// Checks rk(H) <= rk(K) for K = ⟨H, w1, ..., wj⟩ over all adjunction
/// sequences of length <= bounds.max_generators with |wi| <= max_word_length.
ProbeReport probe_compressed(const CoreGraph& h, ProbeBounds bounds);

/// max(rk(H∩K)-1, 0) <= max(rk H - 1, 0) * max(rk K - 1, 0).
bool hanna_neumann_holds(const CoreGraph& h, const CoreGraph& k);

ProbeReport hanna_neumann_check(const CoreGraph& h, const CoreGraph& k);

}  // namespace gtw
