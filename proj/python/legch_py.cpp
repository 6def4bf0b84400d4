#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "legch/augment.hpp"
#include "legch/braid.hpp"
#include "legch/dga.hpp"
#include "legch/emit.hpp"
#include "legch/monodromy.hpp"
#include "legch/report.hpp"
#include "legch/rmoves.hpp"

namespace py = pybind11;

namespace {

legch::BraidWord make_braid(std::optional<std::pair<int, int>> torus, std::optional<int> strands,
                            const std::string& word) {
  if (torus && strands) throw legch::Error("give either torus or strands, not both");
  if (torus) return legch::torus_braid(torus->first, torus->second);
  if (strands) return legch::parse_braid(*strands, word);
  throw legch::Error("give torus=(p, q) or strands=q with a word");
}

legch::Guards guards_from(const std::string& config_json) {
  return config_json.empty() ? legch::Guards{}
                             : legch::guards_from_json(nlohmann::json::parse(config_json));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of legch; the functions return JSON text.";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const legch::Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const nlohmann::json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def(
      "dga",
      [](std::optional<std::pair<int, int>> torus, std::optional<int> strands,
         const std::string& word, const std::string& names) {
        const legch::DgaPresentation dga = legch::differential(make_braid(torus, strands, word));
        return legch::dga_to_json(dga, legch::crossing_names_from_string(names)).dump();
      },
      py::arg("torus") = py::none(), py::arg("strands") = py::none(), py::arg("word") = "",
      py::arg("names") = "label");

  m.def(
      "augment",
      [](std::optional<std::pair<int, int>> torus, std::optional<int> strands,
         const std::string& word, bool last_third_label) {
        return legch::to_json(legch::summarize_augmentation(make_braid(torus, strands, word),
                                                            last_third_label))
            .dump();
      },
      py::arg("torus") = py::none(), py::arg("strands") = py::none(), py::arg("word") = "",
      py::arg("last_third_label") = false);

  m.def(
      "augment_dot",
      [](std::optional<std::pair<int, int>> torus, std::optional<int> strands,
         const std::string& word) {
        return legch::to_dot(legch::summarize_augmentation(make_braid(torus, strands, word)));
      },
      py::arg("torus") = py::none(), py::arg("strands") = py::none(), py::arg("word") = "");

  m.def(
      "orbit",
      [](int p, int q, std::optional<int> row) {
        return legch::to_json(legch::orbit(p, q, row ? *row : legch::designated_row(p, q))).dump();
      },
      py::arg("p"), py::arg("q"), py::arg("m") = py::none());

  m.def(
      "closed_form_mu",
      [](int p, int q) { return legch::map_to_json(p, q, legch::closed_form_mu(p, q)).dump(); },
      py::arg("p"), py::arg("q"));
  m.def(
      "period_composition",
      [](int p, int q) {
        return legch::map_to_json(p, q, legch::period_composition(p, q)).dump();
      },
      py::arg("p"), py::arg("q"));
  m.def(
      "identities",
      [](int p, int q, int symbolic_limit) {
        return legch::to_json(legch::verify_mu_identities(p, q, symbolic_limit)).dump();
      },
      py::arg("p"), py::arg("q"), py::arg("symbolic_limit") = legch::kDefaultSymbolicLimit);

  m.def("toy_moves", [] {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const legch::ToyMove& move : legch::toy_moves()) j.push_back(legch::to_json(move));
    return j.dump();
  });

  m.def(
      "certify_pair",
      [](int p, int q, const std::string& config) {
        return legch::to_json(legch::certify_pair(p, q, guards_from(config))).dump();
      },
      py::arg("p"), py::arg("q"), py::arg("config") = "");
  m.def(
      "certify_range",
      [](int n, const std::string& config) {
        legch::VerificationReport r;
        {
          py::gil_scoped_release release;
          r = legch::certify_range(n, guards_from(config));
        }
        return legch::to_json(r).dump();
      },
      py::arg("n"), py::arg("config") = "");

  m.def("count_D", &legch::count_D, py::arg("n"));
  m.def(
      "enumerate_D", [](int n) { return legch::enumerate_D(n).to_vectors(); }, py::arg("n"));
  m.def("minimal_period", [](const std::vector<int>& s) { return legch::minimal_period(s); },
        py::arg("sequence"));
  m.def(
      "closure_invariants",
      [](std::optional<std::pair<int, int>> torus, std::optional<int> strands,
         const std::string& word) {
        const legch::ClosureInvariants inv =
            legch::closure_invariants(make_braid(torus, strands, word));
        return nlohmann::ordered_json{{"tb", inv.tb},
                                      {"rotation", inv.rotation},
                                      {"components", inv.components},
                                      {"maslov", inv.maslov}}
            .dump();
      },
      py::arg("torus") = py::none(), py::arg("strands") = py::none(), py::arg("word") = "");
}
