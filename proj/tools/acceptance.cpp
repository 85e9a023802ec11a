#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>
#include <spdlog/spdlog.h>

#include "heckelab/verify.hpp"

using nlohmann::ordered_json;
using namespace heckelab;

namespace {

struct Required {
  std::string id;
  ordered_json params;
};

struct Criterion {
  int number;
  std::string title;
  std::string suite;
  std::vector<std::string> prefixes;
  double limit_s;
  std::vector<Required> required;
};

bool params_match(const ordered_json& have, const ordered_json& want) {
  for (const auto& [k, v] : want.items()) {
    if (!have.contains(k) || have[k] != v) return false;
  }
  return true;
}

std::vector<Required> grid(const std::string& id, const std::string& a, std::vector<int> as, const std::string& b,
                           std::vector<int> bs) {
  std::vector<Required> out;
  for (int x : as) {
    for (int y : bs) out.push_back({id, {{a, x}, {b, y}}});
  }
  return out;
}

std::vector<Required> range(const std::string& id, const std::string& key, int lo, int hi) {
  std::vector<Required> out;
  for (int v = lo; v <= hi; ++v) out.push_back({id, {{key, v}}});
  return out;
}

template <class... Vs>
std::vector<Required> join(Vs... vs) {
  std::vector<Required> out;
  (out.insert(out.end(), vs.begin(), vs.end()), ...);
  return out;
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> c;
  c.push_back({1, "q-identities for 1 <= k <= 10", "qidentities", {"qidentities.identity."}, 5.0,
               join(range("qidentities.identity.gauss", "k", 1, 10), range("qidentities.identity.weighted", "k", 1, 10),
                    range("qidentities.identity.signed", "k", 1, 10), range("qidentities.identity.odd_chain", "k", 1, 10))});
  c.push_back({2, "characters vs brute force for N <= 8, λ-identities for r <= 5", "characters", {"characters."}, 30.0,
               join(range("characters.bruteforce", "N", 1, 8), range("characters.lambda.odd", "r", 1, 5),
                    range("characters.lambda.even_sum", "r", 1, 5), range("characters.lambda.even_derivative", "r", 1, 5),
                    std::vector<Required>{{"characters.lambda.odd_binomial", ordered_json::object()}})});
  c.push_back({3, "Satake identities for r <= 4, forward check for N <= 10", "satake", {"satake."}, 60.0,
               join(range("satake.identity.even1", "r", 1, 4), range("satake.identity.even2", "r", 1, 4),
                    range("satake.identity.even4", "r", 1, 4), range("satake.identity.odd1", "r", 1, 4),
                    range("satake.identity.odd2", "r", 1, 4),
                    range("satake.forward", "N", 1, 10))});
  c.push_back({4, "evaluation statements over F_10007 for N <= 16 and symbolically for r <= 4", "evalprops",
               {"evalprops.statement_"}, 60.0,
               join(range("evalprops.statement_symbolic.even1", "r", 1, 4),
                    range("evalprops.statement_symbolic.odd2", "r", 1, 4),
                    std::vector<Required>{{"evalprops.statement_field.even3", {{"N", 16}, {"trials", 100}}},
                                          {"evalprops.statement_field.odd2", {{"N", 15}, {"trials", 100}}}})});
  c.push_back({5, "bullet lattices between circ pairs for q, N in {2,3}; mixed counts at N=3, q=2", "lattice",
               {"lattice.bullet_between", "lattice.mixed"}, 300.0,
               join(grid("lattice.bullet_between", "q", {2, 3}, "N", {2, 3}),
                    std::vector<Required>{{"lattice.bullet_between", {{"N", 2}, {"delta", 1}}},
                                          {"lattice.bullet_between", {{"N", 3}, {"delta", 1}}},
                                          {"lattice.mixed", {{"q", 2}, {"N", 3}}}})});
  c.push_back({6, "maximal isotropic and meeting counts for q in {2,3}, N <= 5", "geometry",
               {"geometry.max_isotropic", "geometry.meeting", "geometry.partition"}, 300.0,
               join(grid("geometry.max_isotropic", "q", {2, 3}, "N", {2, 3, 4, 5}),
                    grid("geometry.partition", "q", {2, 3}, "N", {2, 3, 4, 5}))});
  c.push_back({7, "excess integrals for p in {2,3,5,7}, d•/d bridge for r <= 8", "chow", {"chow.excess.", "chow.bridge"},
               5.0, join(range("chow.bridge", "r", 1, 8), grid("chow.excess.I1", "p", {2, 3, 5, 7}, "r", {1, 8}),
                         grid("chow.excess.I2", "p", {2, 3, 5, 7}, "r", {1, 8}),
                         grid("chow.excess.I3", "p", {2, 3, 5, 7}, "d", {0, 8}))});
  c.push_back({8, "d-number facts, d• integral for r <= 10", "qidentities", {"qidentities.dnumber."}, 1.0,
               join(std::vector<Required>{{"qidentities.dnumber.d0", ordered_json::object()},
                                          {"qidentities.dnumber.d1", ordered_json::object()},
                                          {"qidentities.dnumber.dbullet1", ordered_json::object()}},
                    range("qidentities.dnumber.dbullet_integral", "r", 1, 10))});
  c.push_back({9, "Satake condition coherence and unitarity of tensor products", "evalprops",
               {"evalprops.coherence.", "evalprops.tensor_unitary"}, 5.0,
               std::vector<Required>{{"evalprops.coherence", {{"parity", "even"}, {"trials", 500}}},
                                     {"evalprops.coherence", {{"parity", "odd"}, {"trials", 500}}},
                                     {"evalprops.tensor_unitary", {{"trials", 100}}}}});
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  spdlog::set_level(spdlog::level::err);
  const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 20240601;
  const SuiteRanges ranges;
  int failures = 0;
  for (const Criterion& crit : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    SuiteReport report;
    try {
      report = run_suite(crit.suite, ranges, seed, crit.prefixes);
    } catch (const std::exception& e) {
      why = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::size_t fails = report.count(CheckStatus::fail);
    const std::size_t skips = report.count(CheckStatus::skipped);
    if (why.empty() && report.checks.empty()) why = "no checks ran";
    if (why.empty() && fails > 0) why = std::to_string(fails) + " failed";
    if (why.empty() && skips > 0) why = std::to_string(skips) + " skipped";
    for (const Required& req : crit.required) {
      if (!why.empty()) break;
      bool found = false;
      for (const CheckResult& r : report.checks) {
        if (r.id.rfind(req.id, 0) == 0 && params_match(r.params, req.params)) {
          found = true;
          break;
        }
      }
      if (!found) why = "missing " + req.id + " " + req.params.dump();
    }
    if (why.empty() && secs > crit.limit_s) why = "over time limit";
    const bool pass = why.empty();
    failures += pass ? 0 : 1;
    std::printf("%s %d %s (%zu checks, %.2fs / %.0fs)%s%s\n", pass ? "PASS" : "FAIL", crit.number, crit.title.c_str(),
                report.checks.size(), secs, crit.limit_s, pass ? "" : ": ", why.c_str());
    if (!pass) {
      for (const CheckResult& r : report.checks) {
        if (r.status != CheckStatus::pass) {
          std::printf("  %s %s %s\n", r.id.c_str(), r.params.dump().c_str(), r.witness.c_str());
        }
      }
    }
  }
  std::printf("%s: %d of 9 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
