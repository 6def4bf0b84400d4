#include <gtest/gtest.h>

#include <random>

#include "legch/z2poly.hpp"
#include "support/oracles.hpp"

using namespace legch;

namespace {

GenId g(std::uint32_t v) { return GenId{v}; }

Alphabet letters(int n) {
  Alphabet a;
  for (int k = 0; k < n; ++k) a.name(g(k), std::string(1, static_cast<char>('a' + k)));
  return a;
}

}  // namespace

TEST(Word, InterningMakesEqualWordsIdentical) {
  const std::vector<GenId> xs{g(1), g(2), g(1)};
  EXPECT_EQ(Word::of(xs), Word::of(xs));
  EXPECT_EQ(Word::of(xs).identity(), Word::of(xs).identity());
  EXPECT_EQ(Word::letter(g(1)) * Word::letter(g(2)) * Word::letter(g(1)), Word::of(xs));
  EXPECT_TRUE(Word().empty());
  EXPECT_EQ(Word() * Word::of(xs), Word::of(xs));
}

TEST(Word, CanonicalOrderIsLengthThenLexicographic) {
  const Word one;
  const Word a = Word::letter(g(0));
  const Word b = Word::letter(g(1));
  const Word ab = a * b;
  EXPECT_TRUE(canonical_less(one, a));
  EXPECT_TRUE(canonical_less(a, b));
  EXPECT_TRUE(canonical_less(b, ab));
  EXPECT_FALSE(canonical_less(ab, ab));
}

TEST(Poly, CoefficientsReduceModTwo) {
  const Poly x = Poly::gen(g(0));
  EXPECT_TRUE((x + x).is_zero());
  EXPECT_EQ(Poly::from_terms({Word::letter(g(0)), Word::letter(g(0)), Word()}), Poly::one());
  EXPECT_TRUE(Poly::one().is_one());
  EXPECT_TRUE((Poly::one() + x).constant_term());
}

TEST(Poly, NonCommutative) {
  const Poly x = Poly::gen(g(0));
  const Poly y = Poly::gen(g(1));
  EXPECT_NE(x * y, y * x);
  EXPECT_EQ((x + y) * (x + y), x * x + x * y + y * x + y * y);
}

TEST(Poly, RingAxiomsOnRandomInputs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly a = oracle::random_poly(rng, 3, 5, 3);
    const Poly b = oracle::random_poly(rng, 3, 5, 3);
    const Poly c = oracle::random_poly(rng, 3, 5, 3);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a + b) * c, a * c + b * c);
    ASSERT_EQ(a * Poly::one(), a);
    ASSERT_EQ(Poly::one() * a, a);
    ASSERT_TRUE((a * Poly::zero()).is_zero());
    ASSERT_EQ(multiply_add(c, a, b), c + a * b);
    ASSERT_EQ(add(a, b), a + b);
    ASSERT_EQ(mul(a, b), a * b);
  }
}

TEST(Poly, TermsStayCanonical) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly p = oracle::random_poly(rng, 4, 8, 4) * oracle::random_poly(rng, 4, 4, 2);
    const auto t = p.terms();
    for (std::size_t k = 1; k < t.size(); ++k) ASSERT_TRUE(canonical_less(t[k - 1], t[k]));
  }
}

TEST(Poly, Queries) {
  const Alphabet names = letters(3);
  const Poly p = parse_poly("1 + a*b + c", names);
  EXPECT_TRUE(p.contains(Word::letter(g(2))));
  EXPECT_FALSE(p.contains(Word::letter(g(0))));
  EXPECT_TRUE(p.mentions(g(1)));
  EXPECT_EQ(p.generators(), (std::vector<GenId>{g(0), g(1), g(2)}));
  EXPECT_EQ(p.size(), 3u);
}

TEST(Text, RenderAndParseRoundTrip) {
  const Alphabet names = letters(3);
  EXPECT_EQ(render(Poly::zero(), names), "0");
  EXPECT_EQ(render(parse_poly("b*a + 1 + c + c", names), names), "1 + b*a");
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly p = oracle::random_poly(rng, 3, 6, 4);
    ASSERT_EQ(parse_poly(render(p, names), names), p);
  }
}

TEST(Text, RejectsUnknownNames) {
  EXPECT_THROW(parse_poly("a + z", letters(2)), Error);
  EXPECT_THROW(letters(2).resolve("q"), Error);
}

TEST(Json, RoundTrip) {
  const Alphabet names = letters(3);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Poly p = oracle::random_poly(rng, 3, 6, 4);
    const auto j = to_json(p, names);
    ASSERT_EQ(poly_from_json(nlohmann::json::parse(j.dump()), names), p);
  }
  EXPECT_EQ(to_json(Poly::one(), names).dump(), R"({"terms":[[]]})");
  EXPECT_EQ(to_json(Poly::zero(), names).dump(), R"({"terms":[]})");
}

TEST(Alphabet, AliasesResolveToTheSameGenerator) {
  Alphabet names;
  names.name(g(4), "(1,1,1)");
  names.alias(g(4), "b[1,1]");
  EXPECT_EQ(names.resolve("b[1,1]"), g(4));
  EXPECT_EQ(names.name_of(g(4)), "(1,1,1)");
}

TEST(Substitute, IsAUnitalAlgebraMorphism) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    GeneratorMap phi;
    for (std::uint32_t k = 0; k < 3; ++k) phi.set(g(k), oracle::random_poly(rng, 3, 3, 2));
    const Poly a = oracle::random_poly(rng, 3, 4, 3);
    const Poly b = oracle::random_poly(rng, 3, 4, 3);
    ASSERT_EQ(substitute(a * b, phi), substitute(a, phi) * substitute(b, phi));
    ASSERT_EQ(substitute(a + b, phi), substitute(a, phi) + substitute(b, phi));
    ASSERT_EQ(substitute(Poly::one(), phi), Poly::one());
  }
}

TEST(Substitute, ComposeMatchesNestedSubstitution) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    GeneratorMap first;
    GeneratorMap second;
    for (std::uint32_t k = 0; k < 3; ++k) {
      first.set(g(k), oracle::random_poly(rng, 3, 3, 2));
      second.set(g(k), oracle::random_poly(rng, 3, 3, 2));
    }
    const Poly a = oracle::random_poly(rng, 3, 4, 3);
    ASSERT_EQ(substitute(a, compose(first, second)), substitute(substitute(a, first), second));
  }
}

TEST(Substitute, MissingGeneratorThrows) {
  GeneratorMap phi;
  phi.set(g(0), Poly::one());
  EXPECT_THROW(substitute(Poly::gen(g(1)), phi), Error);
}

TEST(Derivation, LeibnizRule) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    GeneratorMap d;
    for (std::uint32_t k = 0; k < 3; ++k) d.set(g(k), oracle::random_poly(rng, 3, 3, 2));
    const Poly a = oracle::random_poly(rng, 3, 4, 3);
    const Poly b = oracle::random_poly(rng, 3, 4, 3);
    ASSERT_EQ(apply_derivation(a * b, d),
              apply_derivation(a, d) * b + a * apply_derivation(b, d));
    ASSERT_TRUE(apply_derivation(Poly::one(), d).is_zero());
  }
}

TEST(Evaluate, IsARingMorphismToGf2) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    Assignment eps;
    for (std::uint32_t k = 0; k < 3; ++k) eps.set(g(k), rng() & 1);
    const Poly a = oracle::random_poly(rng, 3, 4, 3);
    const Poly b = oracle::random_poly(rng, 3, 4, 3);
    ASSERT_EQ(evaluate(a * b, eps), evaluate(a, eps) && evaluate(b, eps));
    ASSERT_EQ(evaluate(a + b, eps), evaluate(a, eps) != evaluate(b, eps));
    ASSERT_EQ(evaluate(a, eps), evaluate(substitute(a, lift(eps)), Assignment{}));
  }
}

TEST(Evaluate, PullBackIsEvaluationAfterTheMap) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    GeneratorMap phi;
    Assignment eps;
    for (std::uint32_t k = 0; k < 3; ++k) {
      phi.set(g(k), oracle::random_poly(rng, 3, 3, 2));
      eps.set(g(k), rng() & 1);
    }
    const Assignment back = pull_back(eps, phi);
    const Poly a = oracle::random_poly(rng, 3, 4, 3);
    ASSERT_EQ(evaluate(a, back), evaluate(substitute(a, phi), eps));
  }
}

TEST(Assignment, UnsetLookupsThrow) {
  Assignment eps;
  eps.set(g(2), true);
  EXPECT_TRUE(eps.at(g(2)));
  EXPECT_FALSE(eps.find(g(0)).has_value());
  EXPECT_THROW(eps.at(g(0)), Error);
  EXPECT_EQ(eps.domain(), std::vector<GenId>{g(2)});
}
