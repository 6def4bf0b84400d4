#include "legch/dga.hpp"

#include <algorithm>

namespace legch {

bool is_admissible(std::span<const int> s) {
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (s[a] < 1) return false;
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (s[b] > s[a]) break;  // separated from every later repeat
      if (s[b] == s[a]) return false;
    }
  }
  return true;
}

void SequenceSet::push(std::span<const std::uint8_t> s) {
  data_.insert(data_.end(), s.begin(), s.end());
  offsets_.push_back(data_.size());
}

std::vector<std::vector<int>> SequenceSet::to_vectors() const {
  std::vector<std::vector<int>> out;
  out.reserve(size());
  for (std::size_t k = 0; k < size(); ++k) {
    auto s = (*this)[k];
    out.emplace_back(s.begin(), s.end());
  }
  return out;
}

std::size_t SequenceSet::max_length() const {
  std::size_t best = 0;
  for (std::size_t k = 0; k < size(); ++k) best = std::max(best, (*this)[k].size());
  return best;
}

SequenceSet enumerate_D(int n, int max_n) {
  if (n < 1) throw Error("D_n needs n >= 1");
  if (n > max_n) {
    throw Error("D_" + std::to_string(n) + " exceeds the enumeration guard n <= " +
                std::to_string(max_n));
  }
  SequenceSet current;
  current.push({});
  for (int level = 2; level <= n; ++level) {
    const auto top = static_cast<std::uint8_t>(level - 1);
    SequenceSet next;
    for (std::size_t a = 0; a < current.size(); ++a) next.push(current[a]);
    std::vector<std::uint8_t> buffer;
    for (std::size_t a = 0; a < current.size(); ++a) {
      for (std::size_t b = 0; b < current.size(); ++b) {
        buffer.assign(current[a].begin(), current[a].end());
        buffer.push_back(top);
        buffer.insert(buffer.end(), current[b].begin(), current[b].end());
        next.push(buffer);
      }
    }
    current = std::move(next);
  }
  return current;
}

std::uint64_t count_D(int n) {
  if (n < 1) throw Error("D_n needs n >= 1");
  std::uint64_t c = 1;
  for (int level = 2; level <= n; ++level) c = c * c + c;
  return c;
}

Matrix<Poly> path_polys(const BraidWord& b) {
  return path_matrix<Poly>(b, [](GenId g) { return Poly::gen(g); });
}

Matrix<Gf2> path_values(const BraidWord& b, const Assignment& eps) {
  return path_matrix<Gf2>(b, [&](GenId g) { return Gf2{eps.at(g)}; });
}

namespace {

void walk_paths(const BraidWord& b, int pos, int row, int target,
                std::vector<GenId>& turns, std::vector<Word>& out) {
  if (pos > b.length()) {
    if (row == target) out.push_back(Word::of(turns));
    return;
  }
  const int m = b.letter(pos);
  if (row == m) {
    turns.push_back(b.id_at(pos));
    walk_paths(b, pos + 1, m, target, turns, out);
    turns.pop_back();
    walk_paths(b, pos + 1, m + 1, target, turns, out);
  } else if (row == m + 1) {
    walk_paths(b, pos + 1, m, target, turns, out);
  } else {
    walk_paths(b, pos + 1, row, target, turns, out);
  }
}

}  // namespace

Poly enumerate_paths_oracle(const BraidWord& b, int i, int j, int max_w) {
  if (b.length() > max_w) {
    throw Error("path enumeration is limited to words of length <= " +
                std::to_string(max_w));
  }
  const int q = b.strands();
  if (i < 1 || i > q || j < 1 || j > q) throw Error("endpoint out of range");
  std::vector<GenId> turns;
  std::vector<Word> words;
  walk_paths(b, 1, i, j, turns, words);
  return Poly::from_terms(std::move(words));
}

CmTables<Poly> cm_polys(const BraidWord& b) { return CmTables<Poly>(path_polys(b)); }

CmTables<Gf2> cm_values(const BraidWord& b, const Assignment& eps) {
  return CmTables<Gf2>(path_values(b, eps));
}

std::vector<GenId> DgaPresentation::generators() const {
  std::vector<GenId> out = crossings;
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

GenId index_one_generator(const BraidWord& b, int m) {
  if (m < 1 || m > b.strands()) throw Error("a_m needs 1 <= m <= q");
  return GenId{static_cast<std::uint32_t>(b.length() + m - 1)};
}

DgaPresentation differential(const BraidWord& b) {
  DgaPresentation dga;
  dga.braid = b;
  dga.table = label_crossings(b);
  dga.names = dga.table.alphabet();
  for (const Crossing& c : dga.table.crossings()) {
    dga.crossings.push_back(c.id);
    dga.grading[c.id] = 0;
    dga.differential.set(c.id, Poly::zero());
  }
  const CmTables<Poly> tables = cm_polys(b);
  for (int m = 1; m <= b.strands(); ++m) {
    const GenId a = index_one_generator(b, m);
    dga.a.push_back(a);
    dga.names.name(a, "a_" + std::to_string(m));
    dga.grading[a] = 1;
    dga.differential.set(a, Poly::one() + tables.C(m, m));
  }
  return dga;
}

bool d_squared_vanishes(const DgaPresentation& dga) {
  for (GenId g : dga.generators()) {
    if (!apply_derivation(dga.d(g), dga.differential).is_zero()) return false;
  }
  return true;
}

}  // namespace legch
