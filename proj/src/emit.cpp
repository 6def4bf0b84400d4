#include "legch/emit.hpp"

#include <random>
#include <sstream>

namespace legch {

using nlohmann::ordered_json;

CrossingNames crossing_names_from_string(std::string_view s) {
  if (s == "label") return CrossingNames::kLabel;
  if (s == "torus") return CrossingNames::kTorus;
  if (s == "position") return CrossingNames::kPosition;
  throw Error("unknown crossing naming '" + std::string(s) + "'");
}

Alphabet presentation_alphabet(const DgaPresentation& dga, CrossingNames names) {
  if (names == CrossingNames::kLabel) return dga.names;
  if (names == CrossingNames::kTorus && !dga.braid.torus()) {
    throw Error("torus names need a braid given by --torus");
  }
  Alphabet out;
  for (const Crossing& c : dga.table.crossings()) {
    out.name(c.id, names == CrossingNames::kTorus ? to_string(*c.torus)
                                                   : "b_" + std::to_string(c.position));
  }
  for (GenId a : dga.a) out.name(a, dga.names.name_of(a));
  return out;
}

ordered_json dga_to_json(const DgaPresentation& dga, CrossingNames names) {
  const Alphabet alphabet = presentation_alphabet(dga, names);
  const std::vector<GenId> gens = dga.generators();
  ordered_json j;
  j["generators"] = ordered_json::array();
  for (GenId g : gens) j["generators"].push_back(alphabet.name_of(g));
  j["gradings"] = ordered_json::object();
  for (GenId g : gens) j["gradings"][alphabet.name_of(g)] = dga.grading.at(g);
  j["differential"] = ordered_json::object();
  for (GenId g : gens) j["differential"][alphabet.name_of(g)] = to_json(dga.d(g), alphabet);
  return j;
}

std::string dga_to_text(const DgaPresentation& dga, CrossingNames names) {
  const Alphabet alphabet = presentation_alphabet(dga, names);
  std::ostringstream out;
  for (GenId g : dga.generators()) {
    out << "d(" << alphabet.name_of(g) << ") = " << render(dga.d(g), alphabet)
        << "    [deg " << dga.grading.at(g) << "]\n";
  }
  return out.str();
}

// ---------------------------------------------------------------- augment

bool AugmentationSummary::ok() const {
  for (int v : eps_d) {
    if (v != 0) return false;
  }
  return realized_matches && size_matches;
}

AugmentationSummary summarize_augmentation(const BraidWord& b, bool last_third_label) {
  AugmentationSummary s;
  s.braid = b;
  s.table = label_crossings(b);
  s.graph = augmented_graph(s.table.permutation());
  s.augmentation = last_third_label ? construct_augmentation(b, chord_realizations(b))
                                    : construct_augmentation(b);
  s.realized = realized_graph(b, s.augmentation.ids());
  s.realized_matches = s.realized == s.graph.graph();
  const auto cycles = s.table.permutation().cycles();
  s.size_matches =
      static_cast<int>(s.augmentation.crossings.size()) + static_cast<int>(cycles.size()) ==
      b.strands();
  const CmTables<Gf2> tables = eps_tables(b, s.augmentation);
  for (int m = 1; m <= b.strands(); ++m) s.eps_d.push_back(tables.C(m, m).bit ? 0 : 1);
  return s;
}

namespace {

ordered_json crossing_json(const Crossing& c) {
  ordered_json j;
  j["label"] = to_string(c.label);
  j["position"] = c.position;
  if (c.torus) j["torus"] = to_string(*c.torus);
  return j;
}

std::string kind_name(EdgeKind k) { return k == EdgeKind::kCycle ? "cycle" : "chord"; }

}  // namespace

ordered_json to_json(const AugmentationSummary& s) {
  ordered_json j;
  j["braid"] = {{"strands", s.braid.strands()}, {"word", s.braid.to_string()}};
  j["permutation"] = std::vector<int>(s.table.permutation().images().begin(),
                                      s.table.permutation().images().end());
  j["augmentation"] = ordered_json::array();
  for (const Crossing& c : s.augmentation.crossings) j["augmentation"].push_back(crossing_json(c));

  ordered_json edges = ordered_json::array();
  for (const GraphEdge& e : s.graph.edges()) {
    ordered_json edge{{"from", e.from}, {"to", e.to}, {"kind", kind_name(e.kind)}};
    if (e.kind == EdgeKind::kChord) edge["label"] = e.label;
    edges.push_back(std::move(edge));
  }
  j["graph"] = {{"vertices", s.graph.size()}, {"edges", std::move(edges)}};

  ordered_json realized = ordered_json::array();
  for (const auto& [from, to] : s.realized.edges) realized.push_back({from, to});
  j["realized_graph"] = std::move(realized);

  ordered_json eps_d = ordered_json::object();
  for (std::size_t m = 0; m < s.eps_d.size(); ++m) eps_d["a_" + std::to_string(m + 1)] = s.eps_d[m];
  j["checks"] = {{"eps_d", std::move(eps_d)},
                 {"realized_equals_augmented", s.realized_matches},
                 {"size_equals_q_minus_cycles", s.size_matches},
                 {"ok", s.ok()}};
  return j;
}

std::string to_text(const AugmentationSummary& s) {
  std::ostringstream out;
  out << "braid: " << s.braid.strands() << " strands, word [" << s.braid.to_string() << "]\n";
  out << "augmentation:";
  if (s.augmentation.crossings.empty()) out << " (empty)";
  for (const Crossing& c : s.augmentation.crossings) {
    out << ' ' << to_string(c.label) << '@' << c.position;
  }
  out << "\ngraph edges:";
  for (const GraphEdge& e : s.graph.edges()) {
    out << ' ' << e.from << (e.kind == EdgeKind::kCycle ? "->" : "~>") << e.to;
  }
  out << "\neps(d a_m):";
  for (int v : s.eps_d) out << ' ' << v;
  out << "\nrealized graph equals augmented graph: " << (s.realized_matches ? "yes" : "no")
      << "\n|X| = q - #cycles: " << (s.size_matches ? "yes" : "no") << '\n';
  return out.str();
}

std::string to_dot(const AugmentationSummary& s) {
  ordered_json selected = ordered_json::array();
  for (const Crossing& c : s.augmentation.crossings) {
    selected.push_back({c.label.i, c.label.j, c.label.t});
  }
  std::ostringstream out;
  out << "digraph augmented {\n";
  out << "  comment=" << ordered_json(selected.dump()).dump() << ";\n";
  for (int v = 1; v <= s.graph.size(); ++v) out << "  " << v << ";\n";
  for (const GraphEdge& e : s.graph.edges()) {
    out << "  " << e.from << " -> " << e.to;
    if (e.kind == EdgeKind::kCycle) {
      out << " [style=solid];\n";
    } else {
      out << " [style=dashed, label=\"" << e.label << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------- monodromy

Alphabet torus_alphabet(int p, int q) {
  Alphabet names;
  const TorusShape shape{p, q};
  for (int n = 1; n <= p; ++n) {
    for (int m = 1; m < q; ++m) names.name(torus_gen(shape, m, n), to_string(TorusCoord{m, n}));
  }
  return names;
}

ordered_json to_json(const OrbitReport& r) {
  ordered_json j;
  j["p"] = r.p;
  j["q"] = r.q;
  j["m"] = r.m;
  j["elements"] = ordered_json::array();
  for (const OrbitElement& e : r.elements) j["elements"].push_back(e.describe());
  j["sequence"] = r.sequence;
  j["minimal_period"] = r.minimal_period;
  return j;
}

std::string to_text(const OrbitReport& r) {
  std::ostringstream out;
  out << "orbit of b[" << r.m << ',' << r.p << "] for (" << r.p << ',' << r.q << ")\n";
  for (std::size_t k = 0; k < r.elements.size(); ++k) {
    out << "  " << r.elements[k].describe() << "  " << r.sequence[k] << '\n';
  }
  out << "sequence ";
  for (int v : r.sequence) out << v;
  out << ", minimal period " << r.minimal_period << '\n';
  return out.str();
}

ordered_json map_to_json(int p, int q, const GeneratorMap& mu) {
  const Alphabet names = torus_alphabet(p, q);
  ordered_json j;
  j["p"] = p;
  j["q"] = q;
  j["images"] = ordered_json::object();
  for (const auto& [g, image] : mu.images()) j["images"][names.name_of(g)] = to_json(image, names);
  return j;
}

std::string map_to_text(int p, int q, const GeneratorMap& mu) {
  const Alphabet names = torus_alphabet(p, q);
  std::ostringstream out;
  for (const auto& [g, image] : mu.images()) {
    out << names.name_of(g) << " -> " << render(image, names) << '\n';
  }
  return out.str();
}

ordered_json to_json(const IdentityReport& r) {
  ordered_json j;
  j["p"] = r.p;
  j["q"] = r.q;
  j["symbolic"] = r.symbolic;
  j["checks"] = ordered_json::array();
  for (const IdentityCheck& c : r.checks) {
    j["checks"].push_back(
        {{"name", c.name}, {"level", c.chain_level ? "chain" : "eps"}, {"holds", c.holds}});
  }
  j["all_hold"] = r.all_hold();
  return j;
}

std::string to_text(const IdentityReport& r) {
  std::ostringstream out;
  for (const IdentityCheck& c : r.checks) {
    out << (c.holds ? "holds  " : "FAILS  ") << (c.chain_level ? "[chain] " : "[eps]   ") << c.name
        << '\n';
  }
  out << (r.all_hold() ? "all identities hold" : "some identities fail") << '\n';
  return out.str();
}

// ---------------------------------------------------------------- moves

namespace {

ordered_json presentation_json(const AbstractDga& dga) {
  ordered_json gens = ordered_json::array();
  for (GenId g : dga.generators()) {
    ordered_json e;
    e["name"] = dga.names().name_of(g);
    if (auto deg = dga.grading(g)) e["grading"] = *deg;
    e["d"] = dga.render(dga.d(g));
    gens.push_back(std::move(e));
  }
  return gens;
}

}  // namespace

ordered_json to_json(const ToyMove& move) {
  ordered_json j;
  j["name"] = move.name;
  j["source"] = presentation_json(move.source);
  j["target"] = presentation_json(move.target);
  j["map"] = ordered_json::object();
  for (const auto& [g, image] : move.map.images()) {
    j["map"][move.source.names().name_of(g)] = move.target.render(image);
  }
  j["chain_map"] = is_chain_map(move.source, move.target, move.map);
  return j;
}

std::string to_text(const ToyMove& move) {
  std::ostringstream out;
  out << "move " << move.name << '\n';
  auto list = [&out](const char* title, const AbstractDga& dga) {
    out << "  " << title << ":\n";
    for (GenId g : dga.generators()) {
      out << "    d(" << dga.names().name_of(g) << ") = " << dga.render(dga.d(g)) << '\n';
    }
  };
  list("source", move.source);
  list("target", move.target);
  out << "  map:\n";
  for (const auto& [g, image] : move.map.images()) {
    out << "    " << move.source.names().name_of(g) << " -> " << move.target.render(image) << '\n';
  }
  out << "  chain map: " << (is_chain_map(move.source, move.target, move.map) ? "yes" : "no")
      << '\n';
  return out.str();
}

// ---------------------------------------------------------------- reports

std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  for (const CheckResult& c : r.checks) {
    std::string status = to_string(c.status);
    status.resize(8, ' ');
    std::string subject = c.subject;
    if (subject.size() < 8) subject.resize(8, ' ');
    out << status << subject << ' ' << c.name << ": " << c.details << '\n';
  }
  const ReportSummary s = r.summary();
  out << "total " << r.checks.size() << ", passed " << s.passed << ", failed " << s.failed
      << ", flagged " << s.flagged << '\n';
  return out.str();
}

std::vector<BraidWord> random_braids(int count, std::uint64_t seed, int max_q, int max_w) {
  if (max_q < 1 || max_w < 0) throw Error("random braids need max_q >= 1 and max_w >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> strands(1, max_q);
  std::uniform_int_distribution<int> length(0, max_w);
  std::vector<BraidWord> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    const int q = strands(rng);
    std::vector<int> letters;
    if (q > 1) {
      std::uniform_int_distribution<int> letter(1, q - 1);
      const int w = length(rng);
      for (int i = 0; i < w; ++i) letters.push_back(letter(rng));
    }
    out.push_back(parse_braid(q, letters));
  }
  return out;
}

VerificationReport certify_braid(const BraidWord& b) {
  const AugmentationSummary s = summarize_augmentation(b);
  const std::string subject = "q=" + std::to_string(b.strands()) + ";w=" + b.to_string();
  std::string eps;
  for (int v : s.eps_d) eps += std::to_string(v);
  VerificationReport r;
  r.checks.push_back({"augmentation", subject, s.ok() ? CheckStatus::kPass : CheckStatus::kFail,
                      std::to_string(s.augmentation.crossings.size()) + " crossings, eps(d a) " +
                          (eps.empty() ? "-" : eps) + ", realized graph matches " +
                          (s.realized_matches ? "yes" : "no") + ", |X| = q - #cycles " +
                          (s.size_matches ? "yes" : "no")});
  return r;
}

}  // namespace legch
