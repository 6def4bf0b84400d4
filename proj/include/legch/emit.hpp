#pragma once

// JSON and DOT renderings shared by the command-line tool and the Python
// module. Every emitter produces keys and arrays in a fixed order, so equal
// inputs give byte-identical output.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "legch/augment.hpp"
#include "legch/braid.hpp"
#include "legch/dga.hpp"
#include "legch/monodromy.hpp"
#include "legch/report.hpp"
#include "legch/rmoves.hpp"

namespace legch {

enum class CrossingNames {
  kLabel,     // "(i,j,t)"
  kTorus,     // "b[m,n]", torus words only
  kPosition,  // "b_k" for the crossing at position k
};

CrossingNames crossing_names_from_string(std::string_view s);

/// Alphabet of the presentation with crossings renamed as requested.
Alphabet presentation_alphabet(const DgaPresentation& dga, CrossingNames names);

nlohmann::ordered_json dga_to_json(const DgaPresentation& dga, CrossingNames names);
std::string dga_to_text(const DgaPresentation& dga, CrossingNames names);

struct AugmentationSummary {
  BraidWord braid;
  CrossingTable table;
  AugmentedGraph graph;
  Augmentation augmentation;
  DirectedGraph realized;
  std::vector<int> eps_d;  // eps(d a_m) for m = 1..q
  bool realized_matches = false;
  bool size_matches = false;  // |X| = q - #cycles

  bool ok() const;
};

/// `last_third_label` selects (p_+, p_-, t) with the largest t instead of 1.
AugmentationSummary summarize_augmentation(const BraidWord& b, bool last_third_label = false);

nlohmann::ordered_json to_json(const AugmentationSummary& s);
std::string to_text(const AugmentationSummary& s);
std::string to_dot(const AugmentationSummary& s);

/// Names b[m,n] for every crossing of torus_braid(p, q).
Alphabet torus_alphabet(int p, int q);

nlohmann::ordered_json to_json(const OrbitReport& r);
std::string to_text(const OrbitReport& r);
nlohmann::ordered_json map_to_json(int p, int q, const GeneratorMap& mu);
std::string map_to_text(int p, int q, const GeneratorMap& mu);
nlohmann::ordered_json to_json(const IdentityReport& r);
std::string to_text(const IdentityReport& r);

nlohmann::ordered_json to_json(const ToyMove& move);
std::string to_text(const ToyMove& move);

std::string to_text(const VerificationReport& r);

/// Positive braids with 1..max_q strands and 0..max_w letters, drawn from a
/// seeded generator so a seed fixes the corpus.
std::vector<BraidWord> random_braids(int count, std::uint64_t seed, int max_q, int max_w);

/// Augmentation checks on an arbitrary positive braid, subject "q=..;w=..".
VerificationReport certify_braid(const BraidWord& b);

}  // namespace legch
