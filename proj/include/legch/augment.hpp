#pragma once

// The augmented graph of a permutation and the canonical augmentation of a
// positive braid closure built from it.

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "legch/braid.hpp"
#include "legch/dga.hpp"
#include "legch/z2poly.hpp"

namespace legch {

/// Simple directed graph on vertices 1..size (loops allowed).
struct DirectedGraph {
  int size = 0;
  std::set<std::pair<int, int>> edges;

  bool has(int from, int to) const { return edges.contains({from, to}); }
  std::vector<int> out(int from) const;

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;
};

enum class EdgeKind { kCycle, kChord };

struct GraphEdge {
  int from = 0;
  int to = 0;
  EdgeKind kind = EdgeKind::kCycle;
  int label = 0;  // chord label p; 0 for cycle edges

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct ChordEnds {
  int plus = 0;   // p_+
  int minus = 0;  // p_-
};

class AugmentedGraph {
 public:
  AugmentedGraph() = default;
  AugmentedGraph(Permutation sigma, std::vector<GraphEdge> edges,
                 std::map<int, ChordEnds> chords);

  const Permutation& permutation() const { return sigma_; }
  int size() const { return sigma_.size(); }
  std::span<const GraphEdge> edges() const { return edges_; }
  /// Chords keyed by label, for every non-maximal element of its cycle.
  const std::map<int, ChordEnds>& chords() const { return chords_; }
  bool is_cycle_max(int p) const { return !chords_.contains(p); }
  DirectedGraph graph() const;

 private:
  Permutation sigma_;
  std::vector<GraphEdge> edges_;
  std::map<int, ChordEnds> chords_;
};

AugmentedGraph augmented_graph(const Permutation& sigma);

/// Vertices of the loop of p in travel order, starting at p; the closing edge
/// back to p is implicit.
std::vector<int> loop_of(const AugmentedGraph& g, int p);

/// No pair of chords p, r with sigma(r_+) = p_-.
bool chords_avoid_shared_arrivals(const AugmentedGraph& g);

struct Augmentation {
  std::vector<Crossing> crossings;  // position order
  Assignment eps;                   // every crossing of the braid

  bool contains(GenId g) const { return eps.at(g); }
  std::vector<GenId> ids() const;
};

/// For every chord p selects the crossing labeled (p_+, p_-, 1).
Augmentation construct_augmentation(const BraidWord& b);

/// Same, selecting (p_+, p_-, t) with t taken from `third_labels[p]` where
/// present. Throws Error when a requested crossing does not exist.
Augmentation construct_augmentation(const BraidWord& b,
                                    const std::map<int, int>& third_labels);

/// Number of crossings labeled (p_+, p_-, *) for every chord p.
std::map<int, int> chord_realizations(const BraidWord& b);

Augmentation augmentation_from(const BraidWord& b, std::span<const GenId> selected);

bool eps_evaluate(const Augmentation& a, const Poly& p);

/// B, C, M evaluated under the augmentation without building polynomials.
CmTables<Gf2> eps_tables(const BraidWord& b, const Augmentation& a);

/// Edge i -> j iff B(i,j) evaluates to 1 with the crossings of Y set to 1.
DirectedGraph realized_graph(const BraidWord& b, std::span<const GenId> selected);

struct LoopSearch {
  int count = 0;
  std::vector<std::vector<int>> witnesses;  // intermediate vertex sequences
};

/// Directed loops at p whose intermediate vertices lie in {1..p-1} and form an
/// admissible sequence, by exhaustive search.
LoopSearch admissible_loop_oracle(const AugmentedGraph& g, int p);

/// Directed paths p -> r whose intermediate vertices form an element of D_p.
/// Requires sigma(r) = p and p < r.
int edge_reversal_oracle(const AugmentedGraph& g, int p, int r);

/// True iff p is the largest vertex of the loop of r other than r itself.
bool is_second_largest_on_loop(const AugmentedGraph& g, int p, int r);

struct EuclidBlocks {
  int p = 0;
  int q = 0;
  std::vector<int> quotients;  // k_{-1}, k_0, ..., k_l
  std::vector<int> residues;   // r_0, r_1, ..., r_l
  std::map<int, int> predicted;  // block size -> count
  std::map<int, int> actual;     // runs b[m,n], b[m,n+1], ... of selected crossings
  std::map<int, int> diagonal;   // runs b[m,n], b[m+1,n+1], ..., for comparison
  int predicted_total() const;
  int actual_total() const;
  bool matches() const { return predicted == actual; }
};

EuclidBlocks euclid_blocks(int p, int q);

}  // namespace legch
