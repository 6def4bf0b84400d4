#pragma once

// Chain maps induced by Legendrian Reidemeister moves on abstract DGA
// presentations over GF(2). Each constructor returns the images of the source
// generators; substitute() extends them to the unital algebra morphism.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "legch/z2poly.hpp"

namespace legch {

/// Free GF(2)-algebra with named generators, optional gradings and a
/// differential given on generators.
class AbstractDga {
 public:
  /// modulus 0 means Z-gradings; otherwise gradings live in Z/modulus.
  explicit AbstractDga(int modulus = 0);

  /// New generator with d = 0. Names must be unique.
  GenId add(std::string name, std::optional<int> grading = std::nullopt);
  void set_d(GenId g, Poly image);
  /// Parses `image` in this presentation's alphabet.
  void set_d(std::string_view name, std::string_view image);

  const Alphabet& names() const { return names_; }
  std::span<const GenId> generators() const { return generators_; }
  GenId id(std::string_view name) const { return names_.resolve(name); }
  std::optional<int> grading(GenId g) const;
  int modulus() const { return modulus_; }
  const Poly& d(GenId g) const { return differential_.image(g); }
  const GeneratorMap& differential() const { return differential_; }
  bool has(GenId g) const { return differential_.contains(g); }

  /// Throws Error naming the first generator whose differential has a term
  /// of the wrong degree. Terms mentioning ungraded generators are skipped.
  void check_grading() const;

  std::string render(const Poly& p) const { return legch::render(p, names_); }

 private:
  int modulus_ = 0;
  std::uint32_t next_ = 0;
  Alphabet names_;
  std::vector<GenId> generators_;
  std::map<GenId, int> gradings_;
  GeneratorMap differential_;
};

/// Source generator -> target generator.
using Renaming = std::map<GenId, GenId>;

/// x -> x' for every generator. The renaming must be injective and defined on
/// all generators of `source`.
GeneratorMap map_IIIa(const AbstractDga& source, const Renaming& renaming);

/// a -> a' + c'b', every other generator renamed.
GeneratorMap map_IIIb(const AbstractDga& source, GenId a, GenId b, GenId c,
                      const Renaming& renaming);

/// For d(a) = b + v with v free of a and b: a -> 0, b -> v', others renamed.
/// The renaming is required on every generator except a and b.
GeneratorMap map_II_inverse(const AbstractDga& source, GenId a, GenId b,
                            const Renaming& renaming);

/// Data of a Move II on the presentation right after the move.
struct MoveIIContext {
  GenId a;                   // d(a) = b + v
  GenId b;
  std::vector<GenId> above;  // a_1, ..., a_l in increasing height
  std::vector<GenId> below;  // b_1, ..., b_m
};

/// Throws Error unless the lists partition the generators other than a and b
/// and d(a) = b + v with v free of a and b.
void validate(const AbstractDga& target, const MoveIIContext& ctx);

/// Splitting of one monomial of d(a_i) around the vanishing pair: the
/// b-factors before the first a cut it into B_1 b B_2 b ... B_k b A.
struct MoveIIDecomposition {
  std::vector<Word> pieces;  // B_1, ..., B_k
  Word tail;                 // A
};

MoveIIDecomposition decompose(Word w, GenId a, GenId b);

/// The chain map of a Move II from the presentation before the move into
/// `target`. `renaming` sends each source generator to its counterpart in
/// target, which must cover every generator except a and b. The images of
/// a_1, ..., a_l are built in order, each using those already built.
GeneratorMap map_II(const AbstractDga& target, const MoveIIContext& ctx,
                    const Renaming& renaming);

/// phi(d_source(g)) == d_target(phi(g)) for every source generator.
bool is_chain_map(const AbstractDga& source, const AbstractDga& target,
                  const GeneratorMap& phi);

/// eps(d g) = 0 for every generator.
bool is_augmentation(const AbstractDga& dga, const Assignment& eps);

/// Pairs generators whose names agree once a trailing "'" is stripped from
/// either side. Source generators without a counterpart are left out.
Renaming rename_by_prime(const AbstractDga& source, const AbstractDga& target);

/// A bundled move: presentations before and after, and its chain map.
struct ToyMove {
  std::string name;
  AbstractDga source;
  AbstractDga target;
  GeneratorMap map;
};

/// One small presentation per move type: III_a, III_b, II^-1 and II.
std::vector<ToyMove> toy_moves();

}  // namespace legch
