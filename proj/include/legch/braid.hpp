#pragma once

// Positive braid words and the crossing labels of their Legendrian closures.
//
// Rows and strand labels are 1-based throughout. Letter m is a positive
// half-twist of the strands currently at rows m and m+1; the strand entering
// at row m is the overcrossing one.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "legch/z2poly.hpp"

namespace legch {

/// Permutation of {1, ..., q}.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // images[i-1] = sigma(i)

  static Permutation identity(int q);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(i - 1); }
  int inverse(int i) const { return preimages_.at(i - 1); }
  bool is_identity() const;
  std::span<const int> images() const { return images_; }

  /// Cycles in order of their smallest element, each starting there and
  /// listed along sigma.
  std::vector<std::vector<int>> cycles() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }

 private:
  std::vector<int> images_;
  std::vector<int> preimages_;
};

struct TorusShape {
  int p = 0;  // periods
  int q = 0;  // strands

  friend bool operator==(TorusShape, TorusShape) = default;
};

class BraidWord {
 public:
  BraidWord() = default;

  int strands() const { return strands_; }
  int length() const { return static_cast<int>(letters_.size()); }
  std::span<const int> letters() const { return letters_; }
  int letter(int position) const { return letters_.at(position - 1); }

  /// Stable identity of the crossing at a 1-based position. Fresh words use
  /// identity position-1; conjugate_shift carries identities along.
  GenId id_at(int position) const { return ids_.at(position - 1); }
  std::span<const GenId> ids() const { return ids_; }
  int position_of(GenId id) const;  // 1-based; throws Error

  /// Set for words produced by torus_braid and not shifted since.
  const std::optional<TorusShape>& torus() const { return torus_; }

  std::string to_string() const;  // "1,2,3"

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  friend BraidWord parse_braid(int q, std::span<const int> letters);
  friend BraidWord torus_braid(int p, int q);
  friend BraidWord conjugate_shift(const BraidWord& b);

  int strands_ = 1;
  std::vector<int> letters_;
  std::vector<GenId> ids_;
  std::optional<TorusShape> torus_;
};

BraidWord parse_braid(int q, std::span<const int> letters);
/// Comma separated letters; blank text is the empty word.
BraidWord parse_braid(int q, std::string_view letters);

/// The standard (p, q) torus word: (1, 2, ..., q-1) repeated p times.
BraidWord torus_braid(int p, int q);

/// Moves the first letter to the end. The crossing identities travel with
/// their letters.
BraidWord conjugate_shift(const BraidWord& b);

Permutation underlying_permutation(const BraidWord& b);

struct Label {
  int i = 0;  // left label of the overcrossing strand
  int j = 0;  // right label of the undercrossing strand
  int t = 0;  // left-to-right count among crossings sharing (i, j)

  friend auto operator<=>(const Label&, const Label&) = default;
};

std::string to_string(const Label& l);  // "(i,j,t)"

struct TorusCoord {
  int m = 0;  // row
  int n = 0;  // period

  friend auto operator<=>(const TorusCoord&, const TorusCoord&) = default;
};

std::string to_string(const TorusCoord& c);  // "b[m,n]"

/// Generator for b[m,n] in an unshifted torus word.
GenId torus_gen(const TorusShape& shape, int m, int n);

struct Crossing {
  int position = 0;
  GenId id;
  int row = 0;  // rows (row, row+1)
  Label label;
  std::optional<TorusCoord> torus;
  /// Both strands belong to the same component of the closure.
  bool proper = false;
};

class CrossingTable {
 public:
  CrossingTable() = default;
  CrossingTable(Permutation sigma, std::vector<Crossing> crossings);

  const Permutation& permutation() const { return sigma_; }
  std::span<const Crossing> crossings() const { return crossings_; }
  const Crossing& at_position(int position) const;
  const Crossing& at_id(GenId id) const;
  std::optional<Crossing> find(const Label& label) const;
  /// All crossings with labels (i, j, *), in increasing t.
  std::vector<Crossing> with_pair(int i, int j) const;

  /// Names every crossing "(i,j,t)", with "b[m,n]" aliases on torus words.
  Alphabet alphabet() const;

 private:
  Permutation sigma_;
  std::vector<Crossing> crossings_;
};

CrossingTable label_crossings(const BraidWord& b);

struct ClosureInvariants {
  int tb = 0;
  int rotation = 0;
  int components = 0;
  std::vector<int> maslov;  // one per component
};

ClosureInvariants closure_invariants(const BraidWord& b);

}  // namespace legch
