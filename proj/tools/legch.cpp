#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "legch/augment.hpp"
#include "legch/braid.hpp"
#include "legch/dga.hpp"
#include "legch/emit.hpp"
#include "legch/monodromy.hpp"
#include "legch/report.hpp"
#include "legch/rmoves.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 1;
  std::string config;
};

struct BraidOptions {
  std::vector<int> torus;
  std::optional<int> strands;
  std::optional<std::string> word;

  void attach(CLI::App* cmd) {
    auto* t = cmd->add_option("--torus", torus, "Standard torus word on q strands with p periods")
                  ->expected(2)
                  ->type_name("P Q");
    auto* s = cmd->add_option("--strands", strands, "Number of strands of a general braid");
    auto* w = cmd->add_option("--word", word, "Comma separated letters, e.g. \"1,2,1\"");
    t->excludes(s)->excludes(w);
    s->needs(w);
    w->needs(s);
  }

  legch::BraidWord build() const {
    if (!torus.empty()) return legch::torus_braid(torus[0], torus[1]);
    if (strands) return legch::parse_braid(*strands, *word);
    throw legch::Error("give a braid with --torus P Q or --strands Q --word LETTERS");
  }
};

class Output {
 public:
  explicit Output(const GlobalOptions& g) : json_(g.format == "json") {
    if (!g.out.empty()) {
      file_.open(g.out);
      if (!file_) throw legch::Error("cannot write " + g.out);
    }
  }

  bool json() const { return json_; }

  void emit(const nlohmann::ordered_json& j, const std::string& text) {
    stream() << (json_ ? j.dump(2) + "\n" : text);
  }

 private:
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  bool json_;
  std::ofstream file_;
};

legch::Guards guards_for(const GlobalOptions& g) {
  return g.config.empty() ? legch::Guards{} : legch::load_guards(g.config);
}

void require_coprime(int p, int q) {
  if (std::gcd(p, q) != 1) {
    throw legch::Error("(" + std::to_string(p) + "," + std::to_string(q) +
                       ") is not a knot: gcd(p, q) != 1");
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw legch::Error("cannot write " + path);
  f << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendrian DGA, augmentations and torus-link monodromy over GF(2)", "legch"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--out", global.out, "Write output to FILE instead of stdout");
  app.add_option("--seed", global.seed, "Seed for randomized corpora")->capture_default_str();
  app.add_option("--config", global.config, "JSON file overriding the numeric guards");

  auto* dga_cmd = app.add_subcommand("dga", "Degree-0 presentation of the closure");
  BraidOptions dga_braid;
  dga_braid.attach(dga_cmd);
  std::string dga_names = "label";
  dga_cmd->add_option("--names", dga_names, "Crossing names")
      ->check(CLI::IsMember({"label", "torus", "position"}))
      ->capture_default_str();

  auto* aug_cmd = app.add_subcommand("augment", "Canonical augmentation and its graphs");
  BraidOptions aug_braid;
  aug_braid.attach(aug_cmd);
  std::string dot_path;
  std::string third_label = "first";
  aug_cmd->add_option("--dot", dot_path, "Also write the augmented graph as DOT");
  aug_cmd->add_option("--third-label", third_label, "Which crossing realizes each chord")
      ->check(CLI::IsMember({"first", "last"}))
      ->capture_default_str();

  auto* mono_cmd = app.add_subcommand("monodromy", "Monodromy of the torus-link loop");
  std::vector<int> mono_torus;
  std::string emit = "orbit";
  std::string map_source = "closed-form";
  std::optional<int> orbit_row;
  mono_cmd->add_option("--torus", mono_torus, "Torus pair")
      ->expected(2)
      ->type_name("P Q")
      ->required();
  mono_cmd->add_option("--emit", emit, "What to report")
      ->check(CLI::IsMember({"orbit", "map", "identities"}))
      ->capture_default_str();
  mono_cmd->add_option("--m", orbit_row, "Orbit row (defaults to the designated row)");
  mono_cmd->add_option("--source", map_source, "How --emit map computes the map")
      ->check(CLI::IsMember({"closed-form", "composition"}))
      ->capture_default_str();

  auto* moves_cmd = app.add_subcommand("moves", "Chain maps of Reidemeister moves");
  bool demo = false;
  moves_cmd->add_flag("--demo", demo, "Apply every move to its bundled toy presentation")
      ->required();

  auto* cert_cmd = app.add_subcommand("certify", "Verification report with pass/fail checks");
  std::vector<int> cert_torus;
  std::optional<int> cert_range;
  int random_count = 0;
  auto* ct = cert_cmd->add_option("--torus", cert_torus, "One torus pair")
                 ->expected(2)
                 ->type_name("P Q");
  auto* cr = cert_cmd->add_option("--torus-range", cert_range,
                                  "Every coprime pair with 2 <= p, q <= N");
  ct->excludes(cr);
  cert_cmd->add_option("--random-braids", random_count,
                       "Add augmentation checks on K random braids (q <= 7, w <= 20)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Output out(global);

    if (*dga_cmd) {
      const legch::DgaPresentation dga = legch::differential(dga_braid.build());
      const auto names = legch::crossing_names_from_string(dga_names);
      out.emit(legch::dga_to_json(dga, names), legch::dga_to_text(dga, names));
      return kExitPass;
    }

    if (*aug_cmd) {
      const auto summary =
          legch::summarize_augmentation(aug_braid.build(), third_label == "last");
      if (!dot_path.empty()) write_file(dot_path, legch::to_dot(summary));
      out.emit(legch::to_json(summary), legch::to_text(summary));
      return summary.ok() ? kExitPass : kExitFailure;
    }

    if (*mono_cmd) {
      const int p = mono_torus[0];
      const int q = mono_torus[1];
      if (emit == "orbit") {
        const int m = orbit_row ? *orbit_row : legch::designated_row(p, q);
        const legch::OrbitReport r = legch::orbit(p, q, m);
        out.emit(legch::to_json(r), legch::to_text(r));
      } else if (emit == "map") {
        const legch::GeneratorMap mu = map_source == "closed-form"
                                           ? legch::closed_form_mu(p, q)
                                           : legch::period_composition(p, q);
        out.emit(legch::map_to_json(p, q, mu), legch::map_to_text(p, q, mu));
      } else {
        const legch::IdentityReport r =
            legch::verify_mu_identities(p, q, guards_for(global).symbolic_limit);
        out.emit(legch::to_json(r), legch::to_text(r));
        return r.all_hold() ? kExitPass : kExitFailure;
      }
      return kExitPass;
    }

    if (*moves_cmd) {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      std::string text;
      bool all_chain_maps = true;
      for (const legch::ToyMove& move : legch::toy_moves()) {
        j.push_back(legch::to_json(move));
        text += legch::to_text(move);
        all_chain_maps &= legch::is_chain_map(move.source, move.target, move.map);
      }
      out.emit({{"moves", std::move(j)}}, text);
      return all_chain_maps ? kExitPass : kExitFailure;
    }

    if (*cert_cmd) {
      if (cert_torus.empty() && !cert_range && random_count == 0) {
        throw legch::Error("certify needs --torus P Q, --torus-range N or --random-braids K");
      }
      if (random_count < 0) throw legch::Error("--random-braids needs K >= 0");
      const legch::Guards guards = guards_for(global);
      legch::VerificationReport report;
      if (!cert_torus.empty()) {
        require_coprime(cert_torus[0], cert_torus[1]);
        report = legch::certify_pair(cert_torus[0], cert_torus[1], guards);
      } else if (cert_range) {
        report = legch::certify_range(*cert_range, guards);
      }
      for (const legch::BraidWord& b : legch::random_braids(random_count, global.seed, 7, 20)) {
        report.append(legch::certify_braid(b));
      }
      out.emit(legch::to_json(report), legch::to_text(report));
      return report.failed() ? kExitFailure : kExitPass;
    }
  } catch (const legch::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
