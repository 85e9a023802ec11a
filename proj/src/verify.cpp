#include "heckelab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include <spdlog/spdlog.h>

#include "heckelab/charring.hpp"
#include "heckelab/chow.hpp"
#include "heckelab/errors.hpp"
#include "heckelab/finitegeom.hpp"
#include "heckelab/hecke.hpp"
#include "heckelab/qcalc.hpp"

namespace heckelab {

using nlohmann::ordered_json;

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "?";
}

bool SuiteReport::passed() const { return count(CheckStatus::fail) == 0; }

std::size_t SuiteReport::count(CheckStatus s) const {
  std::size_t n = 0;
  for (const CheckResult& c : checks) n += c.status == s ? 1 : 0;
  return n;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"qidentities", "characters", "satake", "evalprops",
                                              "lattice",     "geometry",   "chow",   "all"};
  return names;
}

namespace {

class Recorder {
 public:
  Recorder(std::string prefix, const std::vector<std::string>& only) : prefix_(std::move(prefix)), only_(only) {}

  bool wanted(const std::string& id) const {
    if (only_.empty()) return true;
    return std::any_of(only_.begin(), only_.end(), [&](const std::string& p) { return id.rfind(p, 0) == 0; });
  }

  /// Runs `body`; it returns an empty witness on success. Exceptions become failures or skips.
  void check(const std::string& id, ordered_json params, const std::function<std::string()>& body) {
    CheckResult result;
    result.id = prefix_ + "." + id;
    if (!wanted(result.id)) return;
    result.params = std::move(params);
    try {
      result.witness = body();
      result.status = result.witness.empty() ? CheckStatus::pass : CheckStatus::fail;
    } catch (const ResourceError& e) {
      result.status = CheckStatus::skipped;
      result.witness = std::string("budget: ") + e.what();
    } catch (const std::exception& e) {
      result.status = CheckStatus::fail;
      result.witness = std::string("exception: ") + e.what();
    }
    if (result.status == CheckStatus::fail) {
      spdlog::warn("{} {} failed: {}", result.id, result.params.dump(), result.witness);
    } else {
      spdlog::debug("{} {} {}", result.id, result.params.dump(), to_string(result.status));
    }
    out_.push_back(std::move(result));
  }

  void skip(const std::string& id, ordered_json params, std::string why) {
    if (!wanted(prefix_ + "." + id)) return;
    out_.push_back(CheckResult{prefix_ + "." + id, std::move(params), CheckStatus::skipped, std::move(why)});
  }

  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::string prefix_;
  const std::vector<std::string>& only_;
  std::vector<CheckResult> out_;
};

std::string expect_zero(const LaurentPoly& p) { return p.is_zero() ? "" : p.to_ascii(); }
std::string expect_zero(const SymLaurent& p) { return p.is_zero() ? "" : p.to_string(); }

template <class A, class B>
std::string expect_equal(const A& got, const B& want) {
  if (got == want) return "";
  std::ostringstream out;
  out << "got " << got << ", expected " << want;
  return out.str();
}

std::vector<unsigned> prime_powers_upto(int q_max) {
  std::vector<unsigned> out;
  for (unsigned q = 2; q <= static_cast<unsigned>(std::max(q_max, 1)); ++q) {
    try {
      prime_power(q);
      out.push_back(q);
    } catch (const DomainError&) {
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

void suite_qidentities(Recorder& rec, const SuiteRanges& R) {
  for (QIdentity which : {QIdentity::gauss, QIdentity::weighted, QIdentity::signed_sum, QIdentity::odd_chain}) {
    for (int k = 1; k <= R.k_max; ++k) {
      rec.check(std::string("identity.") + std::string(to_string(which)), {{"k", k}},
                [&] { return expect_zero(check_q_identity(which, k)); });
    }
  }
  const LaurentPoly q = LaurentPoly::var();
  rec.check("dnumber.d0", ordered_json::object(), [&] { return expect_zero(d_number(0) - LaurentPoly(1)); });
  rec.check("dnumber.d1", ordered_json::object(),
            [&] { return expect_zero(d_number(1) - (LaurentPoly(-2) * q * q - q + LaurentPoly(1))); });
  rec.check("dnumber.dbullet1", ordered_json::object(), [&] { return expect_zero(d_bullet_number(1) + q); });
  for (int r = 1; r <= R.dbullet_r_max; ++r) {
    // d_bullet_number throws InvariantViolation when a division is inexact.
    rec.check("dnumber.dbullet_integral", {{"r", r}}, [&] {
      d_bullet_number(r);
      return std::string();
    });
  }
}

void suite_characters(Recorder& rec, const SuiteRanges& R) {
  for (int N = 1; N <= R.char_n_max; ++N) {
    for (int delta = 0; delta <= N / 2; ++delta) {
      rec.check("bruteforce", {{"N", N}, {"delta", delta}},
                [&] { return expect_zero(character(N, delta) - character_bruteforce(N, delta)); });
    }
  }
  for (int r = 1; r <= R.lambda_r_max; ++r) {
    for (LambdaIdentity which : {LambdaIdentity::even_sum, LambdaIdentity::even_derivative}) {
      rec.check(std::string("lambda.") + std::string(to_string(which)), {{"r", r}},
                [&] { return expect_zero(check_lambda_identity(2 * r, which)); });
    }
  }
  for (int r = 0; r <= R.lambda_r_max; ++r) {
    rec.check("lambda.odd", {{"r", r}}, [&] { return expect_zero(check_lambda_identity(2 * r + 1, LambdaIdentity::odd)); });
  }
  for (int k = 0; k <= R.lambda_k_max; ++k) {
    rec.check("lambda.odd_binomial", {{"k", k}},
              [&] { return expect_zero(check_lambda_identity(k, LambdaIdentity::odd_binomial)); });
  }
}

void suite_satake(Recorder& rec, const SuiteRanges& R) {
  for (SatakeIdentity which :
       {SatakeIdentity::even1, SatakeIdentity::even2, SatakeIdentity::even4, SatakeIdentity::odd1, SatakeIdentity::odd2}) {
    for (int r = 1; r <= R.r_max; ++r) {
      rec.check(std::string("identity.") + std::string(to_string(which)), {{"r", r}},
                [&] { return expect_zero(verify_satake_identity(which, r)); });
    }
  }
  for (int N = 1; N <= R.satake_n_max; ++N) {
    rec.check("forward", {{"N", N}}, [&] {
      const auto discrepancy = satake_forward_discrepancy(N);
      for (std::size_t delta = 0; delta < discrepancy.size(); ++delta) {
        if (!discrepancy[delta].is_zero()) return "delta=" + std::to_string(delta) + ": " + discrepancy[delta].to_string();
      }
      return std::string();
    });
  }
}

void suite_evalprops(Recorder& rec, const SuiteRanges& R, std::mt19937_64& rng) {
  const std::uint64_t p = R.prime;
  Fp::require_prime(p);
  const EvalStatement all[] = {EvalStatement::even1, EvalStatement::even2, EvalStatement::even3, EvalStatement::odd1,
                               EvalStatement::odd2};
  auto random_unit = [&](std::uint64_t lo) {
    std::uniform_int_distribution<std::uint64_t> dist(lo, p - 2);
    return Fp(p, static_cast<std::int64_t>(dist(rng)));
  };
  for (EvalStatement s : all) {
    for (int r = 1; r <= R.r_max; ++r) {
      const int N = statement_is_even(s) ? 2 * r : 2 * r + 1;
      rec.check(std::string("statement_symbolic.") + std::string(to_string(s)), {{"r", r}}, [&] {
        return expect_zero(satake_transform(statement_operator(s, N)) - statement_closed_form(s, r));
      });
    }
  }
  for (EvalStatement s : all) {
    for (int N = 1; N <= R.eval_n_max; ++N) {
      if ((N % 2 == 0) != statement_is_even(s) || N < 2) continue;
      rec.check(std::string("statement_field.") + std::string(to_string(s)),
                {{"N", N}, {"prime", p}, {"trials", R.eval_trials}}, [&] {
                  const HeckeElement op = statement_operator(s, N);
                  for (int t = 0; t < R.eval_trials; ++t) {
                    const Fp qv = random_unit(2);
                    const auto alpha = random_inert(N, p, qv, rng);
                    const Fp lhs = eval_phi(op, alpha, qv);
                    const Fp rhs = eval_closed_form(s, alpha, qv);
                    if (!(lhs == rhs)) {
                      return "trial " + std::to_string(t) + ": phi=" + lhs.to_string() + " closed=" + rhs.to_string();
                    }
                  }
                  return std::string();
                });
    }
  }
  for (int parity = 0; parity <= 1; ++parity) {
    for (SatakeCondition which : {SatakeCondition::tate_generic, SatakeCondition::level_raising_special,
                                  SatakeCondition::intertwining_generic}) {
      if (which == SatakeCondition::tate_generic && parity == 0) continue;
      if (which == SatakeCondition::level_raising_special && parity == 1) continue;
      rec.check(std::string("coherence.") + std::string(to_string(which)),
                {{"parity", parity == 0 ? "even" : "odd"}, {"trials", R.coherence_trials}, {"prime", p}}, [&] {
                  const Fp one(p, 1);
                  int holds = 0;
                  for (int t = 0; t < R.coherence_trials; ++t) {
                    const int N = 2 * (1 + t % 4) - (parity == 1 ? 1 : 0);
                    Fp qv = random_unit(2);
                    while (qv * qv == one) qv = random_unit(2);
                    const auto alpha = random_inert(N, p, qv, rng);
                    const bool formal = satake_condition(char_poly(alpha.values(), one), qv, which);
                    const bool semantic = semantic_condition(alpha, qv, which);
                    if (formal != semantic) {
                      return "trial " + std::to_string(t) + " N=" + std::to_string(N) + ": formal=" +
                             (formal ? "true" : "false") + " semantic=" + (semantic ? "true" : "false");
                    }
                    holds += formal ? 1 : 0;
                  }
                  if (holds == 0 || holds == R.coherence_trials) {
                    return "condition constant on all trials (" + std::to_string(holds) + " true)";
                  }
                  return std::string();
                });
    }
  }
  rec.check("tensor_unitary", {{"trials", R.tensor_trials}, {"prime", p}}, [&] {
    const Fp one(p, 1);
    for (int t = 0; t < R.tensor_trials; ++t) {
      const Fp qv = random_unit(2);
      const auto A = random_inert(1 + t % 4, p, qv, rng);
      const auto B = random_inert(1 + (t / 4) % 4, p, qv, rng);
      if (!is_unitary(A, one) || !is_unitary(B, one)) return "trial " + std::to_string(t) + ": sampled non-unitary factor";
      if (!is_unitary(tensor_param(A, B), one)) return "trial " + std::to_string(t) + ": tensor not unitary";
    }
    return std::string();
  });
}

void suite_lattice(Recorder& rec, const SuiteRanges& R) {
  for (unsigned q : prime_powers_upto(R.q_max)) {
    for (int N = 2; N <= 3; ++N) {
      const ordered_json qn{{"q", q}, {"N", N}};
      if (q > 3) {
        rec.skip("window", qn, "budget: lattice windows are enumerated for q <= 3");
        continue;
      }
      std::vector<WindowLattice> window;
      try {
        window = enumerate_window(q, N);
      } catch (const ResourceError& e) {
        rec.skip("window", qn, std::string("budget: ") + e.what());
        continue;
      }
      rec.check("window", qn, [&] {
        if (std::adjacent_find(window.begin(), window.end(), [](const auto& a, const auto& b) { return !(a < b); }) !=
            window.end()) {
          return std::string("window not strictly sorted");
        }
        return std::string();
      });
      const WindowModel model(q, N);
      const WindowLattice unit = model.standard();
      rec.check("classify", qn, [&] {
        if (model.classify(unit) != LatticeType::circ) return std::string("standard lattice not circ");
        if (model.classify(model.standard_bullet()) != LatticeType::bullet) return std::string("standard bullet not bullet");
        if (model.classify(model.scaled_standard(-1)) != LatticeType::other) return std::string("scaled lattice not other");
        return std::string();
      });
      rec.check("duality", qn, [&] {
        for (std::size_t i = 0; i < window.size(); ++i) {
          const WindowLattice& L = window[i];
          const WindowLattice D = model.dual(L);
          if (!(model.dual(D) == L)) return "involution fails at lattice " + std::to_string(i);
          if (!model.contains(model.dual(model.intersection(L, unit)), D) ||
              !model.contains(D, model.dual(model.sum(L, unit)))) {
            return "order reversal fails at lattice " + std::to_string(i);
          }
        }
        return std::string();
      });
      rec.check("smith", qn, [&] {
        for (std::size_t i = 0; i < window.size(); i += std::max<std::size_t>(1, window.size() / 200)) {
          const WindowLattice& L = window[i];
          const std::vector<int> a = model.smith_exponents(L);
          int zeros = 0, ones = 0;
          for (int x : a) {
            zeros += x == 0;
            ones += x == 1;
          }
          const int pi_len = model.times_pi(L).length();
          if (zeros != pi_len || ones != L.length() - 2 * pi_len) return "Smith exponents disagree at lattice " + std::to_string(i);
        }
        return std::string();
      });
      std::vector<WindowLattice> circ;
      for (const WindowLattice& L : window) {
        if (model.classify(L) == LatticeType::circ) circ.push_back(L);
      }
      const HeckeElement icirc = named_operator(NamedOperator::Icirc, N);
      for (int delta = 0; delta <= N / 2; ++delta) {
        const mpz_class expect = bullet_between_closed_form(q, N, delta);
        rec.check("bullet_between", {{"q", q}, {"N", N}, {"delta", delta}}, [&] {
          std::size_t pairs = 0;
          for (const WindowLattice& L1 : circ) {
            for (const WindowLattice& L2 : circ) {
              if (!model.contains(L2, model.times_pi(L1)) || !model.contains(L1, model.times_pi(L2))) continue;
              if (model.disc(L1, L2) != 2 * delta) continue;
              ++pairs;
              const mpz_class got = count_bullet_between(model, L1, L2);
              if (got != expect) return "got " + got.get_str() + ", expected " + expect.get_str();
            }
          }
          return pairs == 0 ? std::string("no pairs at this distance") : std::string();
        });
        rec.check("icirc_composite", {{"q", q}, {"N", N}, {"delta", delta}}, [&] {
          const mpz_class coeff = icirc.coeff(delta).evaluate_integral(mpz_class(q));
          for (const WindowLattice& L2 : circ) {
            if (!model.contains(L2, model.times_pi(unit)) || !model.contains(unit, model.times_pi(L2))) continue;
            if (model.disc(unit, L2) != 2 * delta) continue;
            const mpz_class wide = count_bullet_between(model, unit, L2);
            const mpz_class narrow = count_bullet_between_filtered(model, window, unit, L2);
            if (wide != coeff || narrow != coeff) {
              return "m=4 count " + wide.get_str() + ", m=2 count " + narrow.get_str() + ", coefficient " + coeff.get_str();
            }
          }
          return std::string();
        });
      }
    }
    if (q <= 3) {
      for (int delta = 0; delta <= 1; ++delta) {
        for (int gamma = 0; gamma <= 1; ++gamma) {
          rec.check("mixed", {{"q", q}, {"N", 3}, {"delta", delta}, {"gamma", gamma}}, [&] {
            const MixedCounts got = mixed_counts(q, 3, delta, gamma);
            const auto want = mixed_closed_form(q, 3, delta, gamma);
            if (!got.uniform) return std::string("counts depend on the lattice");
            if (mpz_class(got.c_bullet) != want.first || mpz_class(got.c_circ) != want.second) {
              return "got (" + std::to_string(got.c_bullet) + "," + std::to_string(got.c_circ) + "), expected (" +
                     want.first.get_str() + "," + want.second.get_str() + ")";
            }
            return std::string();
          });
        }
      }
    }
  }
}

void suite_geometry(Recorder& rec, const SuiteRanges& R) {
  for (unsigned q : prime_powers_upto(R.q_max)) {
    for (int N = 2; N <= 5; ++N) {
      const ordered_json qn{{"q", q}, {"N", N}};
      std::uint64_t max_count = 0;
      rec.check("max_isotropic", qn, [&] {
        max_count = count_max_isotropic(q, N);
        return expect_equal(mpz_class(max_count), max_isotropic_closed_form(q, N));
      });
      std::uint64_t total = 0;
      bool complete = true;
      for (int s = 0; s <= N / 2; ++s) {
        rec.check("meeting", {{"q", q}, {"N", N}, {"s", s}}, [&] {
          complete = false;
          const std::uint64_t c = count_meeting(q, N, s);
          total += c;
          complete = true;
          return expect_equal(mpz_class(c), meeting_closed_form(q, N, s));
        });
        if (!complete) break;
      }
      if (complete && max_count != 0) {
        rec.check("partition", qn, [&] { return expect_equal(total, max_count); });
      } else {
        rec.skip("partition", qn, "budget: meeting or maximal counts unavailable");
      }
    }
  }
  rec.check("dl.examples", {{"q", 2}, {"N", 2}}, [&] {
    const SemilinearPair plane(2, 2);
    if (dl_points(plane, 2, 1) != 1) return std::string("h=2 count is not 1");
    if (dl_points(plane, 1, 1) != 3) return std::string("h=1 count is not 3");
    return std::string();
  });
  for (unsigned q : prime_powers_upto(std::min(R.q_max, 3))) {
    for (int N = 2; N <= 4; ++N) {
      for (int d = (N + 1) / 2; d <= N; ++d) {
        rec.check("dl_bullet.empty", {{"q", q}, {"N", N}, {"d", d}},
                  [&] { return expect_equal(dl_bullet_points(SemilinearPair(q, N, d), 1), 0u); });
      }
    }
    for (int N = 2; N <= 3; ++N) {
      rec.check("dl_bullet.sandwich", {{"q", q}, {"N", N}, {"d", N % 2}}, [&] {
        const SemilinearPair pair(q, N, N % 2);
        const int dim = N / 2;
        const mpz_class c1 = dl_bullet_points(pair, 1);
        const mpz_class c2 = dl_bullet_points(pair, 2);
        mpz_class Q1, Q2;
        mpz_ui_pow_ui(Q1.get_mpz_t(), q, 2);
        mpz_ui_pow_ui(Q2.get_mpz_t(), q, 4);
        mpz_class Q1d, Q2d;
        mpz_pow_ui(Q1d.get_mpz_t(), Q1.get_mpz_t(), static_cast<unsigned long>(dim));
        mpz_pow_ui(Q2d.get_mpz_t(), Q2.get_mpz_t(), static_cast<unsigned long>(dim));
        // |c2 − Q2^dim| / Q2^{dim−1/2} <= |c1 − Q1^dim| / Q1^{dim−1/2}, squared: Q1 = q², Q2 = q⁴.
        const mpz_class dev1 = abs(c1 - Q1d), dev2 = abs(c2 - Q2d);
        const mpz_class lhs = dev2 * dev2 * Q1d * Q1d * q * q;
        const mpz_class rhs = dev1 * dev1 * Q2d * Q2d;
        if (lhs > rhs || c2 <= c1) return "e=1 count " + c1.get_str() + ", e=2 count " + c2.get_str();
        return std::string();
      });
    }
  }
}

void suite_chow(Recorder& rec, const SuiteRanges& R) {
  for (long p : {2L, 3L, 5L, 7L}) {
    for (ExcessIntegral which : {ExcessIntegral::I1, ExcessIntegral::I2, ExcessIntegral::I3}) {
      const int lo = which == ExcessIntegral::I3 ? 0 : 1;
      for (int n = lo; n <= R.chow_max; ++n) {
        rec.check(std::string("excess.") + std::string(to_string(which)),
                  {{which == ExcessIntegral::I3 ? "d" : "r", n}, {"p", p}}, [&] {
                    const auto [got, want] = check_excess_integral(which, n, p);
                    return expect_equal(got, want);
                  });
      }
    }
    rec.check("whitney", {{"p", p}}, [&] {
      for (int n = 1; n <= R.chow_max + 1; ++n) {
        const int m = n - 1;
        const BundleClass sub = frobenius(tautological_sub(n), p);
        if (!whitney_holds(sub, BundleClass::trivial(m, n), BundleClass::line(m, p))) {
          return "Frobenius pullback sequence fails on P^" + std::to_string(m);
        }
      }
      return std::string();
    });
  }
  for (int r = 1; r <= R.chow_max; ++r) {
    rec.check("bridge", {{"r", r}}, [&] { return expect_zero(d_bullet_bridge_discrepancy(r)); });
  }
}

void run_one(const std::string& name, Recorder& rec, const SuiteRanges& R, std::mt19937_64& rng) {
  if (name == "qidentities") suite_qidentities(rec, R);
  else if (name == "characters") suite_characters(rec, R);
  else if (name == "satake") suite_satake(rec, R);
  else if (name == "evalprops") suite_evalprops(rec, R, rng);
  else if (name == "lattice") suite_lattice(rec, R);
  else if (name == "geometry") suite_geometry(rec, R);
  else if (name == "chow") suite_chow(rec, R);
}

}  // namespace

SuiteReport run_suite(std::string_view name, const SuiteRanges& ranges, std::uint64_t seed,
                      const std::vector<std::string>& only) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw DomainError("unknown suite: " + std::string(name));
  }
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = std::string(name);
  report.seed = seed;
  std::vector<std::string> todo;
  if (name == "all") {
    todo.assign(names.begin(), names.end() - 1);
  } else {
    todo.emplace_back(name);
  }
  for (const std::string& suite : todo) {
    spdlog::info("running suite {}", suite);
    std::mt19937_64 rng(seed);
    Recorder rec(suite, only);
    run_one(suite, rec, ranges, rng);
    for (CheckResult& c : rec.take()) report.checks.push_back(std::move(c));
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ordered_json to_json(const SuiteReport& report) {
  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"id", c.id}, {"params", c.params}, {"status", to_string(c.status)}, {"witness", c.witness}});
  }
  return {{"suite", report.suite},
          {"seed", report.seed},
          {"overall", report.passed() ? "pass" : "fail"},
          {"checks", checks},
          {"elapsed_ms", report.elapsed_ms}};
}

}  // namespace heckelab
