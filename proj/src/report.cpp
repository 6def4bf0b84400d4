#include "legch/report.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <future>
#include <numeric>
#include <thread>

#include "legch/augment.hpp"
#include "legch/monodromy.hpp"

namespace legch {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kFlagged: return "flagged";
  }
  return "fail";
}

CheckStatus status_from_string(std::string_view s) {
  if (s == "pass") return CheckStatus::kPass;
  if (s == "fail") return CheckStatus::kFail;
  if (s == "flagged") return CheckStatus::kFlagged;
  throw Error("unknown check status '" + std::string(s) + "'");
}

ReportSummary VerificationReport::summary() const {
  ReportSummary s;
  for (const CheckResult& c : checks) {
    switch (c.status) {
      case CheckStatus::kPass: ++s.passed; break;
      case CheckStatus::kFail: ++s.failed; break;
      case CheckStatus::kFlagged: ++s.flagged; break;
    }
  }
  return s;
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

// Compares digit runs numerically so "(2,3)" sorts before "(10,3)".
bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && digit(a[ie])) ++ie;
      while (je < b.size() && digit(b[je])) ++je;
      const auto na = std::stoull(std::string(a.substr(i, ie - i)));
      const auto nb = std::stoull(std::string(b.substr(j, je - j)));
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

}  // namespace

void VerificationReport::sort() {
  std::ranges::stable_sort(checks, [](const CheckResult& x, const CheckResult& y) {
    if (x.subject != y.subject) return natural_less(x.subject, y.subject);
    return x.name < y.name;
  });
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : r.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["subject"] = c.subject;
    e["status"] = to_string(c.status);
    e["details"] = c.details;
    j["checks"].push_back(std::move(e));
  }
  const ReportSummary s = r.summary();
  j["summary"] = {{"total", r.checks.size()},
                  {"passed", s.passed},
                  {"failed", s.failed},
                  {"flagged", s.flagged}};
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  try {
    for (const auto& e : j.at("checks")) {
      r.checks.push_back({e.at("name").get<std::string>(), e.at("subject").get<std::string>(),
                          status_from_string(e.at("status").get<std::string>()),
                          e.at("details").get<std::string>()});
    }
    const auto& s = j.at("summary");
    const ReportSummary expect = r.summary();
    if (s.at("total").get<std::size_t>() != r.checks.size() ||
        s.at("passed").get<int>() != expect.passed ||
        s.at("failed").get<int>() != expect.failed ||
        s.at("flagged").get<int>() != expect.flagged) {
      throw Error("report summary does not match its checks");
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
  return r;
}

// ---------------------------------------------------------------- guards

Guards guards_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error("guard configuration must be a JSON object");
  Guards g;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_integer()) throw Error("guard '" + key + "' must be an integer");
    const int v = value.get<int>();
    if (key == "max_enumeration_n") g.max_enumeration_n = v;
    else if (key == "max_oracle_word") g.max_oracle_word = v;
    else if (key == "symbolic_limit") g.symbolic_limit = v;
    else if (key == "symbolic_iteration_limit") g.symbolic_iteration_limit = v;
    else if (key == "workers") g.workers = v;
    else throw Error("unknown guard '" + key + "'");
  }
  return g;
}

Guards load_guards(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open configuration file " + path);
  try {
    return guards_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("configuration file " + path + " is not valid JSON: " + e.what());
  }
}

nlohmann::ordered_json to_json(const Guards& g) {
  return {{"max_enumeration_n", g.max_enumeration_n},
          {"max_oracle_word", g.max_oracle_word},
          {"symbolic_limit", g.symbolic_limit},
          {"symbolic_iteration_limit", g.symbolic_iteration_limit},
          {"workers", g.workers}};
}

// ---------------------------------------------------------------- certify

namespace {

std::string bits(const std::vector<int>& s) {
  std::string out;
  for (int v : s) out += v ? '1' : '0';
  return out;
}

CheckResult pattern_check(int p, int q, const OrbitReport& orbit, const std::string& subject) {
  const PatternPrediction predicted = predicted_pattern(p, q);
  const std::string actual = bits(orbit.sequence);
  const std::string expected = bits(predicted.sequence());
  CheckResult c{"designated-pattern", subject, CheckStatus::kPass,
                "case " + std::to_string(predicted.case_number) + ", m=" +
                    std::to_string(orbit.m) + ", sequence " + actual};
  if (actual == expected) return c;

  c.details += ", predicted " + expected;
  const std::string derived = std::string(p - 1, '0') + std::string(q + 1, '1');
  if (q == 2 || (predicted.case_number == 3 && orbit.m == 1)) {
    c.status = actual == derived ? CheckStatus::kFlagged : CheckStatus::kFail;
    c.details += "; derived 0^(p-1) 1^(q+1): the last M-entry M[1,2] evaluates to 1";
  } else if (predicted.case_number == 3 && orbit.minimal_period == p + q) {
    c.status = CheckStatus::kFlagged;
    c.details += "; the M-part deviates, the minimal period is still p+q";
  } else {
    c.status = CheckStatus::kFail;
  }
  return c;
}

}  // namespace

VerificationReport certify_pair(int p, int q, const Guards& guards) {
  const OrderCertificate cert = certify_order(p, q, guards.symbolic_iteration_limit);
  const std::string subject = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  auto status = [](bool ok) { return ok ? CheckStatus::kPass : CheckStatus::kFail; };
  VerificationReport r;

  std::string order_details = "period " + std::to_string(cert.designated.minimal_period) +
                              ", eps stable " + (cert.eps_stable ? "yes" : "no") +
                              ", orbit consistent " + (cert.orbit_consistent ? "yes" : "no");
  if (cert.symbolic_cross_check) {
    order_details += ", symbolic mu " + std::string(cert.symbolic_agrees ? "agrees" : "disagrees");
  }
  r.checks.push_back({"order", subject, status(cert.certified()),
                      "order " + std::to_string(cert.order) + " (" + order_details + ")"});
  r.checks.push_back(pattern_check(p, q, cert.designated, subject));

  const IdentityReport ids = verify_mu_identities(p, q, guards.symbolic_limit);
  int eps_rows = 0;
  int eps_bad = 0;
  int chain_rows = 0;
  int chain_bad = 0;
  std::string first_bad;
  for (const IdentityCheck& c : ids.checks) {
    (c.chain_level ? chain_rows : eps_rows)++;
    if (!c.holds) {
      (c.chain_level ? chain_bad : eps_bad)++;
      if (first_bad.empty()) first_bad = c.name;
    }
  }
  auto rows = [&](int total, int bad) {
    std::string s = std::to_string(total - bad) + "/" + std::to_string(total) + " rows hold";
    if (bad > 0) s += ", first failure " + first_bad;
    return s;
  };
  r.checks.push_back({"identities-eps", subject, status(eps_bad == 0), rows(eps_rows, eps_bad)});
  if (ids.symbolic) {
    r.checks.push_back(
        {"identities-chain", subject, status(chain_bad == 0), rows(chain_rows, chain_bad)});
  }

  const BraidWord b = torus_braid(p, q);
  const Augmentation x = construct_augmentation(b);
  const CmTables<Gf2> e = eps_tables(b, x);
  bool kills_d = true;
  for (int m = 1; m <= q; ++m) kills_d &= e.C(m, m).bit;
  const CrossingTable table = label_crossings(b);
  const bool graph_ok =
      realized_graph(b, x.ids()) == augmented_graph(table.permutation()).graph();
  r.checks.push_back({"augmentation", subject, status(kills_d && graph_ok),
                      std::to_string(x.crossings.size()) + " crossings, eps(d a_m) = 0 " +
                          (kills_d ? "yes" : "no") + ", realized graph matches " +
                          (graph_ok ? "yes" : "no")});

  const ClosureInvariants inv = closure_invariants(b);
  const bool tb_ok = inv.tb == p * q - p - q && inv.rotation == 0;
  r.checks.push_back({"tb", subject, status(tb_ok),
                      "tb " + std::to_string(inv.tb) + ", rotation " + std::to_string(inv.rotation)});
  return r;
}

VerificationReport certify_range(int n, const Guards& guards) {
  if (n < 2) throw Error("torus range needs n >= 2");
  std::vector<std::pair<int, int>> pairs;
  for (int p = 2; p <= n; ++p) {
    for (int q = 2; q <= n; ++q) {
      if (std::gcd(p, q) == 1) pairs.emplace_back(p, q);
    }
  }
  unsigned workers = guards.workers > 0 ? static_cast<unsigned>(guards.workers)
                                        : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(pairs.size()));

  std::vector<VerificationReport> parts(pairs.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> running;
  for (unsigned w = 0; w < workers; ++w) {
    running.push_back(std::async(std::launch::async, [&] {
      for (std::size_t k = next++; k < pairs.size(); k = next++) {
        parts[k] = certify_pair(pairs[k].first, pairs[k].second, guards);
      }
    }));
  }
  for (auto& f : running) f.get();

  VerificationReport out;
  for (const VerificationReport& part : parts) out.append(part);
  out.sort();
  return out;
}

}  // namespace legch
