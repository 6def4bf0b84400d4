#pragma once

// Free noncommutative polynomials over GF(2).
//
// A Poly is a finite set of monomials (Words); presence of a word means its
// coefficient is 1. Words are hash-consed in a process-wide append-only pool,
// so word equality and hashing are pointer operations.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"

namespace legch {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Identifier of one generator of a free algebra.
struct GenId {
  std::uint32_t value = 0;

  friend auto operator<=>(GenId, GenId) = default;
};

namespace detail {
struct WordNode;
class ProductTable;
}

/// Interned monomial. The default-constructed word is the empty word (1).
class Word {
 public:
  Word();

  static Word of(std::span<const GenId> letters);
  static Word letter(GenId g);

  std::span<const GenId> letters() const;
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::size_t hash() const;

  friend bool operator==(Word a, Word b) { return a.node_ == b.node_; }
  friend Word operator*(Word a, Word b);

  /// Canonical order: shorter words first, then lexicographic by GenId.
  friend bool canonical_less(Word a, Word b);

  const void* identity() const { return node_; }

 private:
  friend class detail::ProductTable;
  explicit Word(const detail::WordNode* node) : node_(node) {}
  const detail::WordNode* node_;
};

bool canonical_less(Word a, Word b);

/// Number of distinct words interned so far.
std::size_t interned_word_count();

/// Element of GF(2).
struct Gf2 {
  bool bit = false;

  static Gf2 zero() { return {false}; }
  static Gf2 one() { return {true}; }

  friend Gf2 operator+(Gf2 a, Gf2 b) { return {a.bit != b.bit}; }
  friend Gf2 operator*(Gf2 a, Gf2 b) { return {a.bit && b.bit}; }
  Gf2& operator+=(Gf2 o) { bit = bit != o.bit; return *this; }
  friend bool operator==(Gf2, Gf2) = default;
  explicit operator bool() const { return bit; }
  int value() const { return bit ? 1 : 0; }
};

inline Gf2 multiply_add(Gf2 acc, Gf2 a, Gf2 b) { return acc + a * b; }

/// Partial map GenId -> {0,1}.
class Assignment {
 public:
  Assignment() = default;

  void set(GenId g, bool v);
  std::optional<bool> find(GenId g) const;
  bool at(GenId g) const;  // throws Error when unset
  bool contains(GenId g) const { return find(g).has_value(); }
  std::vector<GenId> domain() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::int8_t> values_;  // -1 = unset
};

class Poly {
 public:
  Poly() = default;  // zero

  static Poly zero() { return {}; }
  static Poly one();
  static Poly gen(GenId g);
  static Poly monomial(Word w);
  /// Builds a polynomial from arbitrary terms, reducing coefficients mod 2.
  static Poly from_terms(std::vector<Word> terms);
  /// Takes terms already distinct and in canonical order.
  static Poly from_sorted_terms(std::vector<Word> terms);

  /// Terms in canonical order.
  std::span<const Word> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].empty(); }
  bool constant_term() const { return !terms_.empty() && terms_[0].empty(); }
  bool contains(Word w) const;
  bool mentions(GenId g) const;
  std::vector<GenId> generators() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<Word> terms_;
};

/// acc + a*b. The unreduced product is never materialized, and only the
/// surviving words are interned.
Poly multiply_add(const Poly& acc, const Poly& a, const Poly& b);

/// Total or partial map from generators to polynomials, applied as the unital
/// algebra morphism it generates.
class GeneratorMap {
 public:
  GeneratorMap() = default;

  void set(GenId g, Poly image) { images_[g] = std::move(image); }
  bool contains(GenId g) const { return images_.contains(g); }
  const Poly& image(GenId g) const;  // throws Error when unset
  const std::map<GenId, Poly>& images() const { return images_; }
  std::size_t size() const { return images_.size(); }

  friend bool operator==(const GeneratorMap&, const GeneratorMap&) = default;

 private:
  std::map<GenId, Poly> images_;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);

/// Applies the algebra morphism extending `phi`. Throws Error naming the first
/// generator of `p` that `phi` does not cover.
Poly substitute(const Poly& p, const GeneratorMap& phi);

/// `second` after `first`: g -> substitute(first(g), second).
GeneratorMap compose(const GeneratorMap& first, const GeneratorMap& second);

/// Extends `d` from generators to all of `p` by the Leibniz rule (signs
/// vanish mod 2).
Poly apply_derivation(const Poly& p, const GeneratorMap& d);

/// GF(2) value of `p` under the ring morphism induced by `eps`.
bool evaluate(const Poly& p, const Assignment& eps);

/// eps o phi on the domain of phi.
Assignment pull_back(const Assignment& eps, const GeneratorMap& phi);

/// Embeds an assignment as constant polynomials.
GeneratorMap lift(const Assignment& eps);

/// Bidirectional generator naming. Names must not contain '+', '*' or
/// whitespace.
class Alphabet {
 public:
  Alphabet() = default;

  void name(GenId g, std::string primary);
  void alias(GenId g, std::string extra);

  const std::string& name_of(GenId g) const;
  std::optional<GenId> lookup(std::string_view name) const;
  GenId resolve(std::string_view name) const;  // throws Error
  std::vector<GenId> generators() const;

 private:
  std::map<GenId, std::string> names_;
  std::unordered_map<std::string, GenId> lookup_;
};

/// Text form, e.g. "1 + x + x*y". Zero renders as "0".
std::string render(const Poly& p, const Alphabet& names);
Poly parse_poly(std::string_view text, const Alphabet& names);

/// {"terms": [[g, ...], ...]}; the empty list is the constant 1.
nlohmann::ordered_json to_json(const Poly& p, const Alphabet& names);
Poly poly_from_json(const nlohmann::json& j, const Alphabet& names);

}  // namespace legch

template <>
struct std::hash<legch::GenId> {
  std::size_t operator()(legch::GenId g) const noexcept {
    return std::hash<std::uint32_t>{}(g.value);
  }
};

template <>
struct std::hash<legch::Word> {
  std::size_t operator()(legch::Word w) const noexcept { return w.hash(); }
};
