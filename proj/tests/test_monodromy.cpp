#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "legch/monodromy.hpp"
#include "support/matrix_ring.hpp"
#include "support/oracles.hpp"

using namespace legch;

namespace {

std::vector<std::pair<int, int>> coprime_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p <= n; ++p) {
    for (int q = 2; q <= n; ++q) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  return out;
}

Assignment random_eps(std::mt19937_64& rng, int p, int q) {
  const BraidWord b = torus_braid(p, q);
  Assignment eps;
  for (GenId g : b.ids()) eps.set(g, rng() & 1);
  return eps;
}

}  // namespace

TEST(ClosedForm, TrefoilMap) {
  const GeneratorMap mu = closed_form_mu(3, 2);
  const TorusShape s{3, 2};
  EXPECT_EQ(mu.image(torus_gen(s, 1, 2)), Poly::gen(torus_gen(s, 1, 1)));
  EXPECT_EQ(mu.image(torus_gen(s, 1, 1)),
            Poly::one() + Poly::gen(torus_gen(s, 1, 2)) * Poly::gen(torus_gen(s, 1, 3)));
}

TEST(ClosedForm, FirstPeriodImagesMatchDirectSummation) {
  for (auto [p, q] : {std::pair{2, 3}, {3, 4}, {2, 4}, {4, 3}, {3, 3}}) {
    const GeneratorMap mu = closed_form_mu(p, q);
    const Matrix<Poly> b = path_polys(torus_braid(p, q));
    for (int m = 1; m < q; ++m) {
      EXPECT_EQ(mu.image(torus_gen({p, q}, m, 1)), oracle::C_by_summation(b, q, m))
          << p << "," << q << " m=" << m;
    }
  }
}

TEST(ClosedForm, AgreesWithTheComposedHolonomies) {
  for (auto [p, q] : {std::pair{2, 3}, {3, 2}, {2, 5}, {3, 4}, {3, 5}, {4, 3}, {5, 2}, {5, 3},
                      {5, 4}}) {
    EXPECT_EQ(period_composition(p, q), closed_form_mu(p, q)) << p << "," << q;
  }
}

namespace {

oracle::MatrixValues random_matrices(std::mt19937_64& rng, int p, int q) {
  const BraidWord b = torus_braid(p, q);
  oracle::MatrixValues x;
  for (GenId g : b.ids()) x[g] = oracle::BitMatrix::random(rng);
  return x;
}

oracle::BitMatrix evaluate_at(const Poly& poly, const oracle::MatrixValues& x) {
  oracle::BitMatrix sum;
  for (Word w : poly.terms()) {
    oracle::BitMatrix prod = oracle::BitMatrix::one();
    for (GenId g : w.letters()) prod = prod * x.at(g);
    sum = sum + prod;
  }
  return sum;
}

}  // namespace

TEST(MatrixEvaluation, ReproducesTheSymbolicMaps) {
  std::mt19937_64 rng(53);
  for (auto [p, q] : {std::pair{2, 3}, {3, 4}, {4, 3}, {5, 3}}) {
    const GeneratorMap closed = closed_form_mu(p, q);
    const GeneratorMap composed = period_composition(p, q);
    const oracle::MatrixValues x = random_matrices(rng, p, q);
    const oracle::MatrixValues fast_closed = oracle::closed_form_at(p, q, x);
    const oracle::MatrixValues fast_composed = oracle::composition_at(p, q, x);
    for (const auto& [g, image] : closed.images()) {
      ASSERT_EQ(evaluate_at(image, x), fast_closed.at(g)) << p << "," << q;
      ASSERT_EQ(evaluate_at(composed.image(g), x), fast_composed.at(g)) << p << "," << q;
    }
  }
}

TEST(MatrixEvaluation, SeparatesDifferentMaps) {
  std::mt19937_64 rng(59);
  const oracle::MatrixValues x = random_matrices(rng, 3, 4);
  oracle::MatrixValues swapped = x;
  std::swap(swapped[GenId{0}], swapped[GenId{1}]);
  EXPECT_NE(oracle::closed_form_at(3, 4, x), oracle::closed_form_at(3, 4, swapped));
}

TEST(MatrixEvaluation, ClosedFormAgreesWithCompositionBeyondSymbolicReach) {
  std::mt19937_64 rng(61);
  for (auto [p, q] : {std::pair{4, 5}, {5, 6}, {7, 9}}) {
    for (int trial = 0; trial < 4; ++trial) {
      const oracle::MatrixValues x = random_matrices(rng, p, q);
      ASSERT_EQ(oracle::closed_form_at(p, q, x), oracle::composition_at(p, q, x)) << p << "," << q;
    }
  }
}

TEST(ClosedForm, RejectsDegenerateShapes) {
  EXPECT_THROW(closed_form_mu(0, 3), Error);
  EXPECT_THROW(closed_form_mu(3, 1), Error);
}

TEST(Holonomy, MovesOneCrossing) {
  const BraidWord b = torus_braid(2, 3);
  const Holonomy h = conjugation_holonomy(b);
  EXPECT_EQ(h.shifted, conjugate_shift(b));
  for (int pos = 2; pos <= b.length(); ++pos) {
    EXPECT_EQ(h.map.image(b.id_at(pos)), Poly::gen(b.id_at(pos)));
  }
  EXPECT_THROW(conjugation_holonomy(parse_braid(2, "")), Error);
}

TEST(ScalarPullback, MatchesSymbolicEvaluation) {
  std::mt19937_64 rng(41);
  for (auto [p, q] : coprime_pairs(5)) {
    if (p == 4 && q == 5) continue;  // the symbolic map does not fit in memory
    const GeneratorMap mu = closed_form_mu(p, q);
    for (int trial = 0; trial < 5; ++trial) {
      const Assignment eps = random_eps(rng, p, q);
      ASSERT_EQ(scalar_mu_pullback(p, q, eps), pull_back(eps, mu)) << p << "," << q;
    }
  }
}

TEST(MinimalPeriod, CyclicWords) {
  EXPECT_EQ(minimal_period(std::vector<int>{0, 1, 0, 1}), 2);
  EXPECT_EQ(minimal_period(std::vector<int>{0, 0, 1}), 3);
  EXPECT_EQ(minimal_period(std::vector<int>{1, 1, 1}), 1);
  EXPECT_THROW(minimal_period(std::vector<int>{}), Error);
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> s(1 + rng() % 12);
    for (int& v : s) v = rng() & 1;
    const int d = minimal_period(s);
    ASSERT_EQ(s.size() % d, 0u);
    std::vector<int> rotated(s.begin() + d, s.end());
    rotated.insert(rotated.end(), s.begin(), s.begin() + d);
    ASSERT_EQ(rotated, s);
  }
}

TEST(Orbit, DescriptorsHaveLengthPPlusQ) {
  for (auto [p, q] : coprime_pairs(9)) {
    for (int m = 1; m < q; ++m) ASSERT_EQ(orbit_descriptors(p, q, m).size(), std::size_t(p + q));
  }
  EXPECT_THROW(orbit_descriptors(3, 4, 4), Error);
  const auto d = orbit_descriptors(3, 4, 3);
  EXPECT_EQ(d.front().describe(), "b[3,3]");
  EXPECT_EQ(d[3].describe(), "C[4,3]");
  EXPECT_EQ(d.back().describe(), "M[1,4]");
}

TEST(Orbit, DesignatedRow) {
  EXPECT_EQ(designated_row(3, 4), 3);
  EXPECT_EQ(designated_row(7, 3), 1);
  EXPECT_THROW(designated_row(2, 4), Error);
  EXPECT_THROW(designated_row(1, 3), Error);
}

TEST(Orbit, DesignatedPeriodIsPPlusQ) {
  for (auto [p, q] : coprime_pairs(9)) {
    EXPECT_EQ(orbit(p, q, designated_row(p, q)).minimal_period, p + q) << p << "," << q;
  }
}

TEST(Orbit, PredictedPatternWhereItApplies) {
  for (auto [p, q] : coprime_pairs(9)) {
    const PatternPrediction pred = predicted_pattern(p, q);
    const OrbitReport r = orbit(p, q, designated_row(p, q));
    ASSERT_EQ(pred.sequence().size(), r.sequence.size());
    if (pred.case_number == 3 || q == 2) continue;
    EXPECT_EQ(r.sequence, pred.sequence()) << p << "," << q;
    EXPECT_EQ(std::count(r.sequence.begin(), r.sequence.end(), 0), p);
  }
}

TEST(Orbit, QEqualsTwoAndUnitResidue) {
  for (auto [p, q] : coprime_pairs(9)) {
    if (q != 2 && !(p > q && p % q == 1)) continue;
    std::vector<int> expected(p - 1, 0);
    expected.insert(expected.end(), q + 1, 1);
    EXPECT_EQ(orbit(p, q, designated_row(p, q)).sequence, expected) << p << "," << q;
  }
}

TEST(Orbit, AgreesWithIteratedPullback) {
  std::mt19937_64 rng(47);
  for (auto [p, q] : coprime_pairs(6)) {
    const BraidWord b = torus_braid(p, q);
    const Augmentation x = construct_augmentation(b);
    const int m = designated_row(p, q);
    const OrbitReport r = orbit(p, q, m);
    Assignment eps = x.eps;
    const GenId start = torus_gen({p, q}, m, p);
    for (int k = 0; k < p + q; ++k) {
      ASSERT_EQ(eps.at(start) ? 1 : 0, r.sequence[k]) << p << "," << q << " k=" << k;
      eps = scalar_mu_pullback(p, q, eps);
    }
  }
}

TEST(Identities, HoldOnSmallPairs) {
  for (auto [p, q] : coprime_pairs(5)) {
    const IdentityReport r = verify_mu_identities(p, q);
    EXPECT_TRUE(r.symbolic);
    for (const IdentityCheck& c : r.checks) EXPECT_TRUE(c.holds) << p << "," << q << ": " << c.name;
  }
}

TEST(Identities, EpsLevelOnlyAboveTheLimit) {
  const IdentityReport r = verify_mu_identities(7, 3, 5);
  EXPECT_FALSE(r.symbolic);
  EXPECT_TRUE(r.all_hold());
  for (const IdentityCheck& c : r.checks) EXPECT_FALSE(c.chain_level);
}

TEST(Certificate, OrderIsPPlusQ) {
  for (auto [p, q] : coprime_pairs(9)) {
    const OrderCertificate c = certify_order(p, q);
    EXPECT_TRUE(c.certified()) << p << "," << q;
    EXPECT_TRUE(c.eps_stable);
    EXPECT_TRUE(c.lower_bound);
    EXPECT_TRUE(c.orbit_consistent);
    if (c.symbolic_cross_check) {
      EXPECT_TRUE(c.symbolic_agrees);
    }
  }
  EXPECT_EQ(certify_order(2, 3).order, 5);
  EXPECT_THROW(certify_order(2, 4), Error);
  EXPECT_THROW(certify_order(1, 3), Error);
}
