#include "legch/rmoves.hpp"

#include <algorithm>
#include <set>

namespace legch {

AbstractDga::AbstractDga(int modulus) : modulus_(modulus) {
  if (modulus < 0) throw Error("grading modulus must be non-negative");
}

GenId AbstractDga::add(std::string name, std::optional<int> grading) {
  if (names_.lookup(name)) throw Error("duplicate generator name '" + name + "'");
  const GenId g{next_++};
  names_.name(g, std::move(name));
  generators_.push_back(g);
  if (grading) gradings_[g] = *grading;
  differential_.set(g, Poly::zero());
  return g;
}

void AbstractDga::set_d(GenId g, Poly image) {
  if (!has(g)) throw Error("generator #" + std::to_string(g.value) + " is not in this DGA");
  differential_.set(g, std::move(image));
}

void AbstractDga::set_d(std::string_view name, std::string_view image) {
  set_d(id(name), parse_poly(image, names_));
}

std::optional<int> AbstractDga::grading(GenId g) const {
  auto it = gradings_.find(g);
  if (it == gradings_.end()) return std::nullopt;
  return it->second;
}

void AbstractDga::check_grading() const {
  auto reduce = [this](int v) {
    if (modulus_ == 0) return v;
    return ((v % modulus_) + modulus_) % modulus_;
  };
  for (GenId g : generators_) {
    const auto dg = grading(g);
    if (!dg) continue;
    for (Word w : d(g).terms()) {
      int total = 0;
      bool graded = true;
      for (GenId x : w.letters()) {
        const auto gx = grading(x);
        if (!gx) {
          graded = false;
          break;
        }
        total += *gx;
      }
      if (graded && reduce(total) != reduce(*dg - 1)) {
        throw Error("d(" + names_.name_of(g) + ") has a term of degree " +
                    std::to_string(total) + ", expected " + std::to_string(*dg - 1));
      }
    }
  }
}

namespace {

void require_generator(const AbstractDga& dga, GenId g, const char* role) {
  if (!dga.has(g)) {
    throw Error(std::string(role) + " is not a generator of the presentation");
  }
}

GenId renamed(const Renaming& renaming, const AbstractDga& source, GenId g) {
  auto it = renaming.find(g);
  if (it == renaming.end()) {
    throw Error("renaming is undefined on " + source.names().name_of(g));
  }
  return it->second;
}

// Renames every source generator not in `skip`, checking injectivity.
GeneratorMap rename_all(const AbstractDga& source, const Renaming& renaming,
                        std::span<const GenId> skip = {}) {
  GeneratorMap out;
  std::set<GenId> seen;
  for (GenId g : source.generators()) {
    if (std::ranges::find(skip, g) != skip.end()) continue;
    const GenId image = renamed(renaming, source, g);
    if (!seen.insert(image).second) {
      throw Error("renaming is not injective: two generators map to #" +
                  std::to_string(image.value));
    }
    out.set(g, Poly::gen(image));
  }
  return out;
}

}  // namespace

GeneratorMap map_IIIa(const AbstractDga& source, const Renaming& renaming) {
  return rename_all(source, renaming);
}

GeneratorMap map_IIIb(const AbstractDga& source, GenId a, GenId b, GenId c,
                      const Renaming& renaming) {
  require_generator(source, a, "a");
  require_generator(source, b, "b");
  require_generator(source, c, "c");
  if (a == b || b == c || a == c) throw Error("Move III_b needs three distinct generators");
  GeneratorMap out = rename_all(source, renaming);
  out.set(a, out.image(a) + out.image(c) * out.image(b));
  return out;
}

GeneratorMap map_II_inverse(const AbstractDga& source, GenId a, GenId b,
                            const Renaming& renaming) {
  require_generator(source, a, "a");
  require_generator(source, b, "b");
  if (a == b) throw Error("Move II^-1 needs two distinct generators");
  const Poly& da = source.d(a);
  const Poly single_b = Poly::gen(b);
  if (!da.contains(single_b.terms()[0])) {
    throw Error("d(" + source.names().name_of(a) + ") = " + source.render(da) +
                " has no term " + source.names().name_of(b));
  }
  const Poly v = da + single_b;
  if (v.mentions(a) || v.mentions(b)) {
    throw Error("d(" + source.names().name_of(a) + ") - " + source.names().name_of(b) +
                " = " + source.render(v) + " mentions the vanishing pair");
  }
  const GenId pair[] = {a, b};
  GeneratorMap out = rename_all(source, renaming, pair);
  out.set(b, substitute(v, out));
  out.set(a, Poly::zero());
  return out;
}

void validate(const AbstractDga& target, const MoveIIContext& ctx) {
  require_generator(target, ctx.a, "a");
  require_generator(target, ctx.b, "b");
  if (ctx.a == ctx.b) throw Error("Move II needs two distinct generators");
  std::set<GenId> listed{ctx.a, ctx.b};
  for (const auto* list : {&ctx.above, &ctx.below}) {
    for (GenId g : *list) {
      require_generator(target, g, "listed crossing");
      if (!listed.insert(g).second) {
        throw Error("generator " + target.names().name_of(g) + " is listed twice");
      }
    }
  }
  if (listed.size() != target.generators().size()) {
    throw Error("the height lists must cover every generator other than a and b");
  }
  const Poly& da = target.d(ctx.a);
  const Poly v = da + Poly::gen(ctx.b);
  if (!da.contains(Poly::gen(ctx.b).terms()[0]) || v.mentions(ctx.a) || v.mentions(ctx.b)) {
    throw Error("Move II needs d(a) = b + v with v free of a and b, got d(" +
                target.names().name_of(ctx.a) + ") = " + target.render(da));
  }
}

MoveIIDecomposition decompose(Word w, GenId a, GenId b) {
  auto letters = w.letters();
  const auto first_a = std::ranges::find(letters, a) - letters.begin();
  MoveIIDecomposition out;
  std::size_t start = 0;
  for (std::size_t k = 0; k < static_cast<std::size_t>(first_a); ++k) {
    if (letters[k] != b) continue;
    out.pieces.push_back(Word::of(letters.subspan(start, k - start)));
    start = k + 1;
  }
  out.tail = Word::of(letters.subspan(start));
  return out;
}

GeneratorMap map_II(const AbstractDga& target, const MoveIIContext& ctx,
                    const Renaming& renaming) {
  validate(target, ctx);
  std::map<GenId, GenId> source_of;
  for (const auto& [src, tgt] : renaming) {
    if (tgt == ctx.a || tgt == ctx.b) throw Error("the vanishing pair has no source counterpart");
    if (!source_of.emplace(tgt, src).second) throw Error("renaming is not injective");
  }
  auto source_id = [&](GenId g) {
    auto it = source_of.find(g);
    if (it == source_of.end()) {
      throw Error("no source generator maps to " + target.names().name_of(g));
    }
    return it->second;
  };

  const Poly a = Poly::gen(ctx.a);
  const Poly b = Poly::gen(ctx.b);
  const Poly v = target.d(ctx.a) + b;

  GeneratorMap out;
  // Target-side substitution: processed a_j -> phi(a'_j), all else fixed.
  GeneratorMap bar;
  for (GenId g : target.generators()) bar.set(g, Poly::gen(g));
  std::set<GenId> allowed(ctx.below.begin(), ctx.below.end());

  for (GenId g : ctx.below) out.set(source_id(g), Poly::gen(g));
  for (GenId ai : ctx.above) {
    std::vector<Word> correction;
    for (Word w : target.d(ai).terms()) {
      const MoveIIDecomposition parts = decompose(w, ctx.a, ctx.b);
      for (Word piece : parts.pieces) {
        for (GenId x : piece.letters()) {
          if (!allowed.contains(x)) {
            throw Error("monomial " + target.render(Poly::monomial(w)) + " of d(" +
                        target.names().name_of(ai) + ") has " + target.names().name_of(x) +
                        " before its last b, outside b_1..b_m, a_1..a_(i-1)");
          }
        }
      }
      const std::size_t k = parts.pieces.size();
      for (std::size_t r = 0; r < k; ++r) {
        Poly term = Poly::one();
        for (std::size_t s = 0; s < r; ++s) {
          term = term * substitute(Poly::monomial(parts.pieces[s]), bar) * v;
        }
        term = term * substitute(Poly::monomial(parts.pieces[r]), bar) * a;
        for (std::size_t s = r + 1; s < k; ++s) term = term * Poly::monomial(parts.pieces[s]) * b;
        term = term * Poly::monomial(parts.tail);
        correction.insert(correction.end(), term.terms().begin(), term.terms().end());
      }
    }
    const Poly image = Poly::gen(ai) + Poly::from_terms(std::move(correction));
    out.set(source_id(ai), image);
    bar.set(ai, image);
    allowed.insert(ai);
  }
  return out;
}

bool is_chain_map(const AbstractDga& source, const AbstractDga& target,
                  const GeneratorMap& phi) {
  for (GenId g : source.generators()) {
    if (substitute(source.d(g), phi) != apply_derivation(phi.image(g), target.differential())) {
      return false;
    }
  }
  return true;
}

bool is_augmentation(const AbstractDga& dga, const Assignment& eps) {
  for (GenId g : dga.generators()) {
    if (evaluate(dga.d(g), eps)) return false;
  }
  return true;
}

Renaming rename_by_prime(const AbstractDga& source, const AbstractDga& target) {
  auto strip = [](std::string s) {
    if (!s.empty() && s.back() == '\'') s.pop_back();
    return s;
  };
  std::map<std::string, GenId> by_stem;
  for (GenId g : target.generators()) by_stem[strip(target.names().name_of(g))] = g;
  Renaming out;
  for (GenId g : source.generators()) {
    auto it = by_stem.find(strip(source.names().name_of(g)));
    if (it != by_stem.end()) out[g] = it->second;
  }
  return out;
}

// ---------------------------------------------------------------- toys

namespace {

ToyMove toy_IIIa() {
  ToyMove m{"III_a", AbstractDga{}, AbstractDga{}, {}};
  for (auto* dga : {&m.source, &m.target}) {
    const std::string prime = dga == &m.target ? "'" : "";
    for (const char* n : {"a", "b", "c", "x"}) dga->add(n + prime, 0);
    dga->add("e" + prime, 1);
    dga->set_d("e" + prime, "a" + prime + "*b" + prime + " + c" + prime + " + x" + prime);
  }
  m.map = map_IIIa(m.source, rename_by_prime(m.source, m.target));
  return m;
}

ToyMove toy_IIIb() {
  ToyMove m{"III_b", AbstractDga{}, AbstractDga{}, {}};
  for (const char* n : {"a", "b", "c"}) m.source.add(n, 0);
  m.source.add("e", 1);
  m.source.set_d("e", "1 + a");
  for (const char* n : {"a'", "b'", "c'"}) m.target.add(n, 0);
  m.target.add("e'", 1);
  m.target.set_d("e'", "1 + a' + c'*b'");
  m.map = map_IIIb(m.source, m.source.id("a"), m.source.id("b"), m.source.id("c"),
                   rename_by_prime(m.source, m.target));
  return m;
}

ToyMove toy_II_inverse() {
  ToyMove m{"II^-1", AbstractDga{}, AbstractDga{}, {}};
  m.source.add("a", 1);
  for (const char* n : {"b", "x", "y"}) m.source.add(n, 0);
  m.source.add("e", 1);
  m.source.set_d("a", "b + x*y");
  m.source.set_d("e", "1 + b");
  for (const char* n : {"x'", "y'"}) m.target.add(n, 0);
  m.target.add("e'", 1);
  m.target.set_d("e'", "1 + x'*y'");
  m.map = map_II_inverse(m.source, m.source.id("a"), m.source.id("b"),
                         rename_by_prime(m.source, m.target));
  return m;
}

ToyMove toy_II() {
  ToyMove m{"II", AbstractDga{}, AbstractDga{}, {}};
  m.source.add("x'", 0);
  m.source.add("y'", 0);
  m.source.add("a_1'", 1);
  m.source.set_d("a_1'", "1 + x'");
  m.target.add("a", 1);
  for (const char* n : {"b", "x", "y"}) m.target.add(n, 0);
  m.target.add("a_1", 1);
  m.target.set_d("a", "b + x");
  m.target.set_d("a_1", "1 + b");
  const MoveIIContext ctx{m.target.id("a"), m.target.id("b"),
                          {m.target.id("y"), m.target.id("a_1")},
                          {m.target.id("x")}};
  m.map = map_II(m.target, ctx, rename_by_prime(m.source, m.target));
  return m;
}

}  // namespace

std::vector<ToyMove> toy_moves() {
  std::vector<ToyMove> out;
  out.push_back(toy_IIIa());
  out.push_back(toy_IIIb());
  out.push_back(toy_II_inverse());
  out.push_back(toy_II());
  return out;
}

}  // namespace legch
