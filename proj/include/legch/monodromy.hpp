#pragma once

// Monodromy of the loop of Legendrian (p, q) torus links obtained by
// conjugating one full period of the standard torus word from the front to
// the back.
//
// Torus generators are named b[m,n] (row m, period n) and identified with
// GenId (n-1)(q-1) + (m-1), which is their position in the unshifted word.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "legch/augment.hpp"
#include "legch/braid.hpp"
#include "legch/dga.hpp"
#include "legch/z2poly.hpp"

namespace legch {

/// b[m,n] -> b[m,n-1] for n >= 2 and b[m,1] -> C(q,m).
GeneratorMap closed_form_mu(int p, int q);

struct Holonomy {
  GeneratorMap map;   // on the crossing identities of the input braid
  BraidWord shifted;  // the conjugated braid the images live in
};

/// Holonomy of moving the first letter (on rows m, m+1) to the end: the moved
/// crossing goes to M'(m+1,m) of the shifted braid, all others to themselves.
Holonomy conjugation_holonomy(const BraidWord& b);

/// q-1 conjugation holonomies composed, followed by the relabeling that names
/// each crossing after its new position.
GeneratorMap period_composition(int p, int q);

/// eps o mu on all torus generators, evaluated through the scalar tables
/// (eps must be defined on every crossing of torus_braid(p, q)).
Assignment scalar_mu_pullback(int p, int q, const Assignment& eps);

/// Minimal d >= 1 with s rotated by d equal to s.
int minimal_period(std::span<const int> s);

struct OrbitElement {
  enum class Kind { kB, kC, kM };
  Kind kind = Kind::kB;
  int first = 0;   // b: row m; C/M: first index
  int second = 0;  // b: period n; C/M: second index

  std::string describe() const;  // "b[m,n]", "C[i,j]", "M[i,j]"
  friend bool operator==(const OrbitElement&, const OrbitElement&) = default;
};

/// The p+q closed-form orbit elements of b[m,p]: b[m,p..1], then
/// C(q-t, m-t) for t < m, then M(q-m-s, q-s) for s < q-m.
std::vector<OrbitElement> orbit_descriptors(int p, int q, int m);

struct OrbitReport {
  int p = 0;
  int q = 0;
  int m = 0;
  std::vector<OrbitElement> elements;
  std::vector<int> sequence;  // 0-1-sequence under the canonical augmentation
  int minimal_period = 0;
};

OrbitReport orbit(int p, int q, int m);

/// Row of the orbit whose 0-1-sequence is aperiodic: p when q > p,
/// p mod q when q < p. Throws Error when one of p, q divides the other.
int designated_row(int p, int q);

/// Predicted 0-1-sequence of the designated orbit, case by case.
struct PatternPrediction {
  int case_number = 0;  // 1..4
  std::vector<int> b_part;
  std::vector<int> c_part;
  std::vector<int> m_part;
  std::vector<int> sequence() const;
};

PatternPrediction predicted_pattern(int p, int q);

struct IdentityCheck {
  std::string name;     // e.g. "mu(B[3,2]) = B[2,1] + B[2,4]*b[1,3]"
  bool chain_level = false;
  bool holds = false;
};

struct IdentityReport {
  int p = 0;
  int q = 0;
  bool symbolic = false;  // chain-level rows were checked
  std::vector<IdentityCheck> checks;
  bool all_hold() const;
};

inline constexpr int kDefaultSymbolicLimit = 5;

/// Homology identities for mu on B, C and M: rows of the B-identity with
/// i >= 2 at chain level (when p, q <= symbolic_limit), every row under the
/// canonical augmentation.
IdentityReport verify_mu_identities(int p, int q,
                                    int symbolic_limit = kDefaultSymbolicLimit);

struct OrderCertificate {
  int p = 0;
  int q = 0;
  int order = 0;                  // p+q when both bounds hold, else 0
  bool eps_stable = false;        // eps o mu^(p+q) = eps on every generator
  bool symbolic_cross_check = false;  // performed
  bool symbolic_agrees = false;
  OrbitReport designated;
  bool lower_bound = false;       // designated period == p+q
  bool orbit_consistent = false;  // pullback iterates reproduce the orbit sequence
  bool certified() const { return order == p + q; }
};

inline constexpr int kDefaultSymbolicIterationLimit = 4;

/// Throws Error unless gcd(p, q) = 1 and p, q >= 2.
OrderCertificate certify_order(int p, int q,
                               int symbolic_limit = kDefaultSymbolicIterationLimit);

}  // namespace legch
