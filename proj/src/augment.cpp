#include "legch/augment.hpp"

#include <algorithm>

namespace legch {

std::vector<int> DirectedGraph::out(int from) const {
  std::vector<int> targets;
  for (auto it = edges.lower_bound({from, 0}); it != edges.end() && it->first == from; ++it) {
    targets.push_back(it->second);
  }
  return targets;
}

AugmentedGraph::AugmentedGraph(Permutation sigma, std::vector<GraphEdge> edges,
                               std::map<int, ChordEnds> chords)
    : sigma_(std::move(sigma)), edges_(std::move(edges)), chords_(std::move(chords)) {}

DirectedGraph AugmentedGraph::graph() const {
  DirectedGraph g;
  g.size = size();
  for (const GraphEdge& e : edges_) g.edges.insert({e.from, e.to});
  return g;
}

AugmentedGraph augmented_graph(const Permutation& sigma) {
  std::vector<GraphEdge> edges;
  std::map<int, ChordEnds> chords;
  for (const auto& cycle : sigma.cycles()) {
    const int top = *std::ranges::max_element(cycle);
    for (int s : cycle) edges.push_back({s, sigma(s), EdgeKind::kCycle, 0});
    for (int p : cycle) {
      if (p == top) continue;
      int plus = p;
      while (sigma(plus) < p) plus = sigma(plus);
      int minus = p;
      while (sigma.inverse(minus) < p) minus = sigma.inverse(minus);
      chords[p] = {plus, minus};
    }
  }
  for (const auto& [p, ends] : chords) {
    edges.push_back({ends.plus, ends.minus, EdgeKind::kChord, p});
  }
  return AugmentedGraph(sigma, std::move(edges), std::move(chords));
}

std::vector<int> loop_of(const AugmentedGraph& g, int p) {
  const Permutation& sigma = g.permutation();
  std::vector<int> loop{p};
  if (g.is_cycle_max(p)) {
    for (int s = sigma(p); s != p; s = sigma(s)) loop.push_back(s);
    return loop;
  }
  const ChordEnds ends = g.chords().at(p);
  int s = p;
  while (s != ends.plus) {
    s = sigma(s);
    loop.push_back(s);
  }
  if (ends.minus != p) {
    loop.push_back(ends.minus);
    for (s = sigma(ends.minus); s != p; s = sigma(s)) loop.push_back(s);
  }
  return loop;
}

bool chords_avoid_shared_arrivals(const AugmentedGraph& g) {
  for (const auto& [p, pe] : g.chords()) {
    for (const auto& [r, re] : g.chords()) {
      if (g.permutation()(re.plus) == pe.minus) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- augmentation

std::vector<GenId> Augmentation::ids() const {
  std::vector<GenId> out;
  for (const Crossing& c : crossings) out.push_back(c.id);
  return out;
}

Augmentation augmentation_from(const BraidWord& b, std::span<const GenId> selected) {
  const CrossingTable table = label_crossings(b);
  Augmentation a;
  for (const Crossing& c : table.crossings()) {
    const bool chosen = std::ranges::find(selected, c.id) != selected.end();
    a.eps.set(c.id, chosen);
    if (chosen) a.crossings.push_back(c);
  }
  return a;
}

Augmentation construct_augmentation(const BraidWord& b,
                                    const std::map<int, int>& third_labels) {
  const CrossingTable table = label_crossings(b);
  const AugmentedGraph g = augmented_graph(table.permutation());
  std::vector<GenId> selected;
  for (const auto& [p, ends] : g.chords()) {
    auto t_it = third_labels.find(p);
    const int t = t_it == third_labels.end() ? 1 : t_it->second;
    const Label want{ends.plus, ends.minus, t};
    auto c = table.find(want);
    if (!c) {
      throw Error("no crossing labeled " + to_string(want) + " realizes chord " +
                  std::to_string(p));
    }
    selected.push_back(c->id);
  }
  return augmentation_from(b, selected);
}

Augmentation construct_augmentation(const BraidWord& b) {
  return construct_augmentation(b, {});
}

std::map<int, int> chord_realizations(const BraidWord& b) {
  const CrossingTable table = label_crossings(b);
  const AugmentedGraph g = augmented_graph(table.permutation());
  std::map<int, int> out;
  for (const auto& [p, ends] : g.chords()) {
    out[p] = static_cast<int>(table.with_pair(ends.plus, ends.minus).size());
  }
  return out;
}

bool eps_evaluate(const Augmentation& a, const Poly& p) { return evaluate(p, a.eps); }

CmTables<Gf2> eps_tables(const BraidWord& b, const Augmentation& a) {
  return cm_values(b, a.eps);
}

DirectedGraph realized_graph(const BraidWord& b, std::span<const GenId> selected) {
  const Augmentation y = augmentation_from(b, selected);
  const Matrix<Gf2> values = path_values(b, y.eps);
  DirectedGraph g;
  g.size = b.strands();
  for (int i = 1; i <= g.size; ++i) {
    for (int j = 1; j <= g.size; ++j) {
      if (values(i, j).bit) g.edges.insert({i, j});
    }
  }
  return g;
}

// ---------------------------------------------------------------- oracles

namespace {

// Appending v keeps the sequence admissible iff a larger entry follows the
// last earlier occurrence of v.
bool extends_admissibly(const std::vector<int>& seq, int v) {
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (*it > v) return true;
    if (*it == v) return false;
  }
  return true;
}

void search_paths(const DirectedGraph& g, int at, int target, int bound,
                  std::vector<int>& seq, std::vector<std::vector<int>>& found) {
  for (int next : g.out(at)) {
    if (next == target) found.push_back(seq);
    if (next < bound && extends_admissibly(seq, next)) {
      seq.push_back(next);
      search_paths(g, next, target, bound, seq, found);
      seq.pop_back();
    }
  }
}

}  // namespace

LoopSearch admissible_loop_oracle(const AugmentedGraph& g, int p) {
  if (p < 1 || p > g.size()) throw Error("vertex out of range");
  LoopSearch out;
  std::vector<int> seq;
  search_paths(g.graph(), p, p, p, seq, out.witnesses);
  out.count = static_cast<int>(out.witnesses.size());
  return out;
}

int edge_reversal_oracle(const AugmentedGraph& g, int p, int r) {
  if (!(p < r) || r > g.size() || p < 1 || g.permutation()(r) != p) {
    throw Error("edge reversal needs sigma(r) = p with p < r");
  }
  std::vector<int> seq;
  std::vector<std::vector<int>> found;
  search_paths(g.graph(), p, r, p, seq, found);
  return static_cast<int>(found.size());
}

bool is_second_largest_on_loop(const AugmentedGraph& g, int p, int r) {
  const std::vector<int> loop = loop_of(g, r);
  int best = 0;
  for (std::size_t k = 1; k < loop.size(); ++k) best = std::max(best, loop[k]);
  return best == p;
}

// ---------------------------------------------------------------- Euclid

int EuclidBlocks::predicted_total() const {
  int total = 0;
  for (const auto& [size, count] : predicted) total += size * count;
  return total;
}

int EuclidBlocks::actual_total() const {
  int total = 0;
  for (const auto& [size, count] : actual) total += size * count;
  return total;
}

EuclidBlocks euclid_blocks(int p, int q) {
  if (p < 2 || q < 2) throw Error("Euclidean blocks need p, q >= 2");
  EuclidBlocks out;
  out.p = p;
  out.q = q;
  out.quotients.push_back(p / q);
  int a = q;
  int r = p % q;
  while (r != 0) {
    out.residues.push_back(r);
    out.quotients.push_back(a / r);
    const int next = a % r;
    a = r;
    r = next;
  }
  for (std::size_t k = 0; k < out.residues.size(); ++k) {
    const int count = k == 0 ? out.quotients[1] - 1 : out.quotients[k + 1];
    if (count > 0) out.predicted[out.residues[k]] += count;
  }

  const BraidWord b = torus_braid(p, q);
  const Augmentation x = construct_augmentation(b);
  std::set<TorusCoord> cells;
  for (const Crossing& c : x.crossings) cells.insert(*c.torus);
  auto runs = [&cells](int dm, int dn) {
    std::map<int, int> sizes;
    for (const TorusCoord& c : cells) {
      if (cells.contains({c.m - dm, c.n - dn})) continue;
      int run = 0;
      for (TorusCoord at = c; cells.contains(at); at = {at.m + dm, at.n + dn}) ++run;
      ++sizes[run];
    }
    return sizes;
  };
  out.actual = runs(0, 1);
  out.diagonal = runs(1, 1);
  return out;
}

}  // namespace legch
