#pragma once

// Degree-0 presentation of the Chekanov-Eliashberg DGA of a positive braid
// closure.
//
// B(i,j) is the mod-2 sum over braid paths from left endpoint i to right
// endpoint j that turn only at upward-facing quadrants; it is entry (i,j) of
// the ordered product of per-letter transfer matrices. The C and M tables
// are sums of B-products indexed by admissible sequences and are computed by
// recurrences instead of summing over D_n, which grows doubly exponentially.
//
// Every table is templated over the coefficient ring so the same recurrences
// run symbolically (Poly) or on GF(2) values (Gf2).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <tuple>
#include <vector>

#include "legch/braid.hpp"
#include "legch/z2poly.hpp"

namespace legch {

// ---------------------------------------------------------------- sequences

/// Any two equal entries are separated by a strictly larger entry.
bool is_admissible(std::span<const int> s);

/// Flat storage for a set of integer sequences.
class SequenceSet {
 public:
  std::size_t size() const { return offsets_.size() - 1; }
  std::span<const std::uint8_t> operator[](std::size_t k) const {
    return {data_.data() + offsets_[k], offsets_[k + 1] - offsets_[k]};
  }
  std::vector<std::vector<int>> to_vectors() const;
  std::size_t max_length() const;

  void push(std::span<const std::uint8_t> s);

 private:
  std::vector<std::uint8_t> data_;
  std::vector<std::size_t> offsets_{0};
};

inline constexpr int kDefaultMaxEnumeratedD = 6;

/// All admissible sequences over {1, ..., n-1}, via
/// D_n = D_{n-1} + D_{n-1} (n-1) D_{n-1}. Throws Error when n > max_n.
SequenceSet enumerate_D(int n, int max_n = kDefaultMaxEnumeratedD);

/// |D_n| from |D_n| = |D_{n-1}|^2 + |D_{n-1}|, |D_1| = 1.
std::uint64_t count_D(int n);

// ---------------------------------------------------------------- matrices

/// Dense q x q matrix with 1-based accessors.
template <class R>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int q) : q_(q), cells_(static_cast<std::size_t>(q) * q) {}

  static Matrix identity(int q) {
    Matrix m(q);
    for (int i = 1; i <= q; ++i) m(i, i) = R::one();
    return m;
  }

  int size() const { return q_; }
  R& operator()(int i, int j) { return cells_[index(i, j)]; }
  const R& operator()(int i, int j) const { return cells_[index(i, j)]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * q_ + (j - 1);
  }
  int q_ = 0;
  std::vector<R> cells_;
};

/// Multiplies `acc` on the right by the transfer matrix of a letter on rows
/// (m, m+1) whose crossing has value x: identity outside the block
/// [[x, 1], [1, 0]].
template <class R>
void apply_letter(Matrix<R>& acc, int m, const R& x) {
  for (int i = 1; i <= acc.size(); ++i) {
    R upper = acc(i, m);
    R lower = acc(i, m + 1);
    acc(i, m) = upper * x + lower;
    acc(i, m + 1) = upper;
  }
}

/// B-matrix with each crossing replaced by value(GenId).
template <class R, class ValueFn>
Matrix<R> path_matrix(const BraidWord& b, ValueFn&& value) {
  Matrix<R> acc = Matrix<R>::identity(b.strands());
  for (int pos = 1; pos <= b.length(); ++pos) {
    apply_letter(acc, b.letter(pos), value(b.id_at(pos)));
  }
  return acc;
}

Matrix<Poly> path_polys(const BraidWord& b);
Matrix<Gf2> path_values(const BraidWord& b, const Assignment& eps);

inline constexpr int kDefaultMaxOracleWord = 14;

/// B(i,j) by explicit depth-first walk over the braid. Throws Error when the
/// word is longer than max_w.
Poly enumerate_paths_oracle(const BraidWord& b, int i, int j,
                            int max_w = kDefaultMaxOracleWord);

// ---------------------------------------------------------------- C and M

/// B, M and C tables of one braid.
///
/// With N^(n)(i,j) the sum over s in D_n of B(i,s_1)...B(s_last,j):
///   N^(1) = B,  N^(n)(i,j) = N^(n-1)(i,j) + N^(n-1)(i,n-1) N^(n-1)(n-1,j),
/// and M(i,j) = N^(min(i,j))(i,j). Entries with min(i,j) = n-1 are final at
/// level n, so one matrix updated in place ends up holding M.
/// For i > j, C(i,j) sums the sequences of D_i that end in j:
///   Chat^(j+1)(x,j) = M(x,j),
///   Chat^(n+1)(x,j) = Chat^(n)(x,j) + M(x,n) Chat^(n)(n,j),
///   C(i,j) = Chat^(i)(i,j).
/// C(m,m) = M(m,m).
template <class R>
class CmTables {
 public:
  CmTables() = default;

  explicit CmTables(Matrix<R> b) : b_(std::move(b)), m_(b_), c_(b_.size()) {
    const int q = b_.size();
    for (int n = 2; n <= q; ++n) {
      for (int i = n; i <= q; ++i) {
        const R left = m_(i, n - 1);
        if (left == R::zero()) continue;
        for (int j = n; j <= q; ++j) m_(i, j) = multiply_add(m_(i, j), left, m_(n - 1, j));
      }
    }
    for (int j = 1; j < q; ++j) {
      std::vector<R> chat(q + 1);
      for (int x = j + 1; x <= q; ++x) chat[x] = m_(x, j);
      for (int n = j + 1; n < q; ++n) {
        if (chat[n] == R::zero()) continue;
        for (int x = n + 1; x <= q; ++x) chat[x] = multiply_add(chat[x], m_(x, n), chat[n]);
      }
      for (int i = j + 1; i <= q; ++i) c_(i, j) = chat[i];
    }
    for (int m = 1; m <= q; ++m) c_(m, m) = m_(m, m);
  }

  int strands() const { return b_.size(); }
  const R& B(int i, int j) const { return b_(i, j); }
  const R& M(int i, int j) const { return m_(i, j); }
  /// Defined for i >= j.
  const R& C(int i, int j) const {
    if (i < j) throw Error("C(i,j) needs i >= j");
    return c_(i, j);
  }

 private:
  Matrix<R> b_;
  Matrix<R> m_;
  Matrix<R> c_;
};

/// The same entries as CmTables, computed on first request and memoized.
/// Only the N^(n) entries a request depends on are ever built, which keeps
/// C(q,m) for m < q cheap even when M(q,q) is out of reach. Not thread-safe.
template <class R>
class CmQuery {
 public:
  explicit CmQuery(Matrix<R> b) : b_(std::move(b)) {}

  int strands() const { return b_.size(); }
  const R& B(int i, int j) const { return b_(i, j); }

  const R& N(int n, int i, int j) {
    if (n == 1) return b_(i, j);
    const auto key = std::tuple{n, i, j};
    if (auto it = n_.find(key); it != n_.end()) return it->second;
    R value = N(n - 1, i, j);
    const R& left = N(n - 1, i, n - 1);
    if (!(left == R::zero())) value = multiply_add(value, left, N(n - 1, n - 1, j));
    return n_.emplace(key, std::move(value)).first->second;
  }

  const R& M(int i, int j) { return N(std::min(i, j), i, j); }

  const R& C(int i, int j) {
    if (i < j) throw Error("C(i,j) needs i >= j");
    return i == j ? M(i, i) : chat(i, i, j);
  }

 private:
  // Chat^(n)(x,j) for x >= n > j.
  const R& chat(int n, int x, int j) {
    if (n == j + 1) return M(x, j);
    const auto key = std::tuple{n, x, j};
    if (auto it = chat_.find(key); it != chat_.end()) return it->second;
    R value = chat(n - 1, x, j);
    const R& below = chat(n - 1, n - 1, j);
    if (!(below == R::zero())) value = multiply_add(value, M(x, n - 1), below);
    return chat_.emplace(key, std::move(value)).first->second;
  }

  Matrix<R> b_;
  std::map<std::tuple<int, int, int>, R> n_;
  std::map<std::tuple<int, int, int>, R> chat_;
};

CmTables<Poly> cm_polys(const BraidWord& b);
CmTables<Gf2> cm_values(const BraidWord& b, const Assignment& eps);

// ---------------------------------------------------------------- presentation

struct DgaPresentation {
  BraidWord braid;
  CrossingTable table;
  Alphabet names;               // crossings "(i,j,t)", index-1 generators "a_m"
  std::vector<GenId> crossings; // position order
  std::vector<GenId> a;         // a[m-1] = a_m
  std::map<GenId, int> grading;
  GeneratorMap differential;

  const Poly& d(GenId g) const { return differential.image(g); }
  std::vector<GenId> generators() const;
};

/// GenId used for a_m in a braid of length w.
GenId index_one_generator(const BraidWord& b, int m);

/// d(a_m) = 1 + C(m,m); d = 0 on crossings.
DgaPresentation differential(const BraidWord& b);

/// d(d(g)) for every generator, computed through substitution.
bool d_squared_vanishes(const DgaPresentation& dga);

}  // namespace legch
