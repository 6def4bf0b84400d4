#pragma once

// Independent reference computations for the tests. Nothing here reuses the
// recurrences of the library: admissible sequences are found by brute-force
// search and C, M are summed term by term.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "legch/braid.hpp"
#include "legch/dga.hpp"
#include "legch/z2poly.hpp"

namespace oracle {

inline bool admissible_naive(const std::vector<int>& s) {
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (s[a] != s[b]) continue;
      bool separated = false;
      for (std::size_t k = a + 1; k < b; ++k) separated |= s[k] > s[a];
      if (!separated) return false;
    }
  }
  return true;
}

// Admissibility is inherited by prefixes, so depth-first extension with a
// full check at every node visits exactly the admissible sequences.
inline void extend(int n, std::vector<int>& s, std::vector<std::vector<int>>& out) {
  out.push_back(s);
  for (int v = 1; v < n; ++v) {
    s.push_back(v);
    if (admissible_naive(s)) extend(n, s, out);
    s.pop_back();
  }
}

/// D_n sorted lexicographically.
inline std::vector<std::vector<int>> brute_force_D(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> s;
  extend(n, s, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// B(i, s_1) B(s_1, s_2) ... B(s_last, j), or B(i, j) for empty s.
inline legch::Poly chain(const legch::Matrix<legch::Poly>& b, int i,
                         const std::vector<int>& s, int j) {
  int from = i;
  legch::Poly prod = legch::Poly::one();
  for (int v : s) {
    prod = prod * b(from, v);
    from = v;
  }
  return prod * b(from, j);
}

inline legch::Poly M_by_summation(const legch::Matrix<legch::Poly>& b, int i, int j) {
  legch::Poly sum;
  for (const auto& s : brute_force_D(std::min(i, j))) sum += chain(b, i, s, j);
  return sum;
}

/// i > j: sequences of D_i ending in j; i == j: same as M(i, i).
inline legch::Poly C_by_summation(const legch::Matrix<legch::Poly>& b, int i, int j) {
  if (i == j) return M_by_summation(b, i, i);
  legch::Poly sum;
  for (const auto& s : brute_force_D(i)) {
    if (s.empty() || s.back() != j) continue;
    std::vector<int> inner(s.begin(), s.end() - 1);
    sum += chain(b, i, inner, j);
  }
  return sum;
}

/// Generic matrix with a distinct generator in every cell: B(i, j) is
/// GenId (i-1) q + (j-1).
inline legch::Matrix<legch::Poly> generic_matrix(int q) {
  legch::Matrix<legch::Poly> b(q);
  for (int i = 1; i <= q; ++i) {
    for (int j = 1; j <= q; ++j) {
      b(i, j) = legch::Poly::gen(legch::GenId{static_cast<std::uint32_t>((i - 1) * q + (j - 1))});
    }
  }
  return b;
}

inline legch::BraidWord random_braid(std::mt19937_64& rng, int max_q, int max_w) {
  const int q = std::uniform_int_distribution<int>(1, max_q)(rng);
  std::vector<int> letters;
  if (q > 1) {
    const int w = std::uniform_int_distribution<int>(0, max_w)(rng);
    std::uniform_int_distribution<int> letter(1, q - 1);
    for (int k = 0; k < w; ++k) letters.push_back(letter(rng));
  }
  return legch::parse_braid(q, letters);
}

/// Random polynomial in generators 0..alphabet-1.
inline legch::Poly random_poly(std::mt19937_64& rng, int alphabet, int max_terms, int max_len) {
  std::vector<legch::Word> terms;
  const int n = std::uniform_int_distribution<int>(0, max_terms)(rng);
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::uint32_t> letter(0, alphabet - 1);
  for (int k = 0; k < n; ++k) {
    std::vector<legch::GenId> w;
    const int l = len(rng);
    for (int i = 0; i < l; ++i) w.push_back(legch::GenId{letter(rng)});
    terms.push_back(legch::Word::of(w));
  }
  return legch::Poly::from_terms(std::move(terms));
}

}  // namespace oracle
