#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "heckelab/finitegeom.hpp"
#include "heckelab/hecke.hpp"
#include "heckelab/qcalc.hpp"
#include "heckelab/verify.hpp"

using nlohmann::ordered_json;
using namespace heckelab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string suite = "all";
  std::string kind;
  std::string q = "symbolic";
  std::string op;
  std::string alpha;
  std::string format = "csv";
  std::string out;
  std::string config;
  std::uint64_t seed = 42;
  int N = 2;
  int s = 0;
  int h = 1;
  int d = 0;
  int e = 1;
  int dim = -1;
  bool reproducible = false;
  SuiteRanges ranges;
};

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("heckelab");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("HECKELAB_LOG")) {
    const std::string level(env);
    if (level == "error") spdlog::set_level(spdlog::level::err);
    else if (level == "warn") spdlog::set_level(spdlog::level::warn);
    else if (level == "info") spdlog::set_level(spdlog::level::info);
    else if (level == "debug") spdlog::set_level(spdlog::level::debug);
    else spdlog::warn("ignoring HECKELAB_LOG={}", level);
  }
}

ordered_json laurent_json(const LaurentPoly& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& [e, c] : p.term_list()) {
    if (c.fits_slong_p()) {
      terms.push_back({e, c.get_si()});
    } else {
      terms.push_back({e, c.get_str()});
    }
  }
  return terms;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// A table as header + rows of (display string, json value) cells.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::pair<std::string, ordered_json>>> rows;

  std::string render(const std::string& format) const {
    if (format == "json") {
      ordered_json arr = ordered_json::array();
      for (const auto& row : rows) {
        ordered_json obj = ordered_json::object();
        for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i].second;
        arr.push_back(obj);
      }
      return arr.dump(2) + "\n";
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i].first);
      out << "\n";
    }
    return out.str();
  }
};

/// A symbolic cell, or its value at an integer q.
std::pair<std::string, ordered_json> poly_cell(const LaurentPoly& p, const std::optional<long>& q) {
  if (q) {
    const mpq_class v = p.evaluate(mpz_class(*q));
    const std::string text = v.get_str();
    if (v.get_den() == 1 && v.get_num().fits_slong_p()) return {text, v.get_num().get_si()};
    return {text, text};
  }
  return {p.to_pretty(), laurent_json(p)};
}

std::optional<long> parse_q(const std::string& q) {
  if (q == "symbolic") return std::nullopt;
  try {
    std::size_t used = 0;
    const long v = std::stol(q, &used);
    if (used != q.size()) throw DomainError("bad --q");
    return v;
  } catch (const std::logic_error&) {
    throw DomainError("--q must be 'symbolic' or an integer, got '" + q + "'");
  }
}

Table tables(const Options& o) {
  const std::optional<long> q = parse_q(o.q);
  Table t;
  if (o.kind == "dnumbers") {
    t.header = {"r", "d", "d_bullet"};
    for (int r = 0; r <= o.ranges.r_max; ++r) {
      std::pair<std::string, ordered_json> bullet{"—", nullptr};
      if (r >= 1) bullet = poly_cell(d_bullet_number(r), q);
      t.rows.push_back({{std::to_string(r), r}, poly_cell(d_number(r), q), bullet});
    }
  } else if (o.kind == "satake_matrix") {
    const SatakeMatrix M(o.N);
    t.header = {"delta", "i", "entry"};
    for (int delta = 0; delta < M.size(); ++delta) {
      for (int i = 0; i < M.size(); ++i) {
        t.rows.push_back({{std::to_string(delta), delta}, {std::to_string(i), i}, poly_cell(M.entry(delta, i), q)});
      }
    }
  } else if (o.kind == "operators") {
    t.header = {"operator", "N", "expression", "coefficients"};
    for (NamedOperator op : {NamedOperator::Icirc, NamedOperator::Tstar, NamedOperator::Rcirc, NamedOperator::TcircEven,
                             NamedOperator::Rbullet, NamedOperator::TbulletEven, NamedOperator::TbulletOdd}) {
      HeckeElement e = HeckeElement::unit(o.N);
      try {
        e = named_operator(op, o.N);
      } catch (const DomainError&) {
        continue;
      }
      ordered_json coeffs = ordered_json::array();
      std::string coeff_text;
      for (int delta = 0; delta <= e.rank(); ++delta) {
        const auto cell = poly_cell(e.coeff(delta), q);
        coeffs.push_back(cell.second);
        coeff_text += (delta ? ";" : "") + cell.first;
      }
      t.rows.push_back({{std::string(to_string(op)), std::string(to_string(op))},
                        {std::to_string(o.N), o.N},
                        {e.to_string(), e.to_string()},
                        {coeff_text, coeffs}});
    }
  } else {
    throw CLI::ValidationError("--kind", "unknown table kind '" + o.kind + "'");
  }
  return t;
}

struct EvalTarget {
  HeckeElement op;
  std::optional<EvalStatement> statement;
};

EvalTarget resolve_eval_target(const std::string& name, int N) {
  for (EvalStatement s : {EvalStatement::even1, EvalStatement::even2, EvalStatement::even3, EvalStatement::odd1,
                          EvalStatement::odd2}) {
    if (name == to_string(s)) {
      if (statement_is_even(s) != (N % 2 == 0)) throw DomainError("statement " + name + " has the other parity");
      return {statement_operator(s, N), s};
    }
  }
  if (name.size() >= 2 && name[0] == 'T' && std::isdigit(static_cast<unsigned char>(name[1]))) {
    return {HeckeElement::basis(N, std::stoi(name.substr(1))), std::nullopt};
  }
  const NamedOperator op = parse_named_operator(name);
  std::optional<EvalStatement> s;
  if (op == NamedOperator::Icirc) s = N % 2 == 0 ? EvalStatement::even1 : EvalStatement::odd1;
  if (op == NamedOperator::Tstar) s = EvalStatement::odd2;
  return {named_operator(op, N), s};
}

Table eval(const Options& o) {
  Fp::require_prime(o.ranges.prime);
  const std::uint64_t p = o.ranges.prime;
  const std::optional<long> qint = parse_q(o.q == "symbolic" ? "2" : o.q);
  const Fp qv(p, *qint);
  if (qv == Fp(p, 0)) throw DomainError("q vanishes mod the prime");
  std::vector<Fp> half;
  std::stringstream ss(o.alpha);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const Fp a(p, std::stoll(item));
    if (a == Fp(p, 0)) throw DomainError("alpha entry " + item + " is not invertible mod " + std::to_string(p));
    half.push_back(a);
  }
  const EvalTarget target = resolve_eval_target(o.op, o.N);
  const auto alpha = SatakeParam<Fp>::inert_from_half(half, o.N, Fp(p, 1));
  const Fp value = eval_phi(target.op, alpha, qv);
  Table t;
  t.header = {"N", "op", "alpha", "prime", "q", "value", "closed_form", "match"};
  std::vector<std::pair<std::string, ordered_json>> row{
      {std::to_string(o.N), o.N},  {o.op, o.op}, {o.alpha, o.alpha}, {std::to_string(p), p},
      {std::to_string(*qint), *qint}, {value.to_string(), std::stoll(value.to_string())}};
  if (target.statement) {
    const Fp closed = eval_closed_form(*target.statement, alpha, qv);
    const bool match = closed == value;
    row.push_back({closed.to_string(), std::stoll(closed.to_string())});
    row.push_back({match ? "true" : "false", match});
  } else {
    row.push_back({"none", nullptr});
    row.push_back({"none", nullptr});
  }
  t.rows.push_back(std::move(row));
  return t;
}

std::vector<CensusRow> count(const Options& o) {
  const std::optional<long> qq = parse_q(o.q == "symbolic" ? "2" : o.q);
  if (*qq < 2) throw DomainError("q must be a prime power");
  const unsigned q = static_cast<unsigned>(*qq);
  std::vector<CensusRow> rows;
  auto add = [&](std::string param, const mpz_class& got, const std::optional<mpz_class>& closed) {
    rows.push_back({q, o.N, std::move(param), got, closed ? closed->get_str() : "none", closed ? *closed == got : true});
  };
  if (o.kind == "isotropic") {
    const int dim = o.dim < 0 ? o.N / 2 : o.dim;
    const std::uint64_t c = enumerate_isotropic(HermSpace(q, o.N), dim).size();
    std::optional<mpz_class> closed;
    if (dim == o.N / 2) closed = max_isotropic_closed_form(q, o.N);
    add("dim=" + std::to_string(dim), c, closed);
  } else if (o.kind == "meeting") {
    add("s=" + std::to_string(o.s), count_meeting(q, o.N, o.s), meeting_closed_form(q, o.N, o.s));
  } else if (o.kind == "dl") {
    add("h=" + std::to_string(o.h) + ";d=" + std::to_string(o.d) + ";e=" + std::to_string(o.e),
        dl_points(SemilinearPair(q, o.N, o.d), o.h, o.e), std::nullopt);
  } else if (o.kind == "dlbullet") {
    add("d=" + std::to_string(o.d) + ";e=" + std::to_string(o.e), dl_bullet_points(SemilinearPair(q, o.N, o.d), o.e),
        std::nullopt);
  } else if (o.kind == "window") {
    const WindowModel model(q, o.N);
    const auto window = enumerate_window(q, o.N);
    std::uint64_t circ = 0, bullet = 0;
    std::vector<WindowLattice> circs;
    for (const WindowLattice& L : window) {
      const LatticeType t = model.classify(L);
      if (t == LatticeType::circ) {
        ++circ;
        circs.push_back(L);
      }
      bullet += t == LatticeType::bullet ? 1 : 0;
    }
    add("lattices", window.size(), std::nullopt);
    add("circ", circ, std::nullopt);
    add("bullet", bullet, std::nullopt);
    const WindowLattice unit = model.standard();
    for (int delta = 0; delta <= o.N / 2; ++delta) {
      for (const WindowLattice& L2 : circs) {
        if (!model.contains(L2, model.times_pi(unit)) || !model.contains(unit, model.times_pi(L2))) continue;
        if (model.disc(unit, L2) != 2 * delta) continue;
        add("bullet_between;delta=" + std::to_string(delta), count_bullet_between(model, unit, L2),
            bullet_between_closed_form(q, o.N, delta));
        break;
      }
    }
  } else {
    throw CLI::ValidationError("--kind", "unknown count kind '" + o.kind + "'");
  }
  return rows;
}

std::string render_census(const std::vector<CensusRow>& rows, const std::string& format) {
  if (format == "csv") return census_csv(rows);
  ordered_json arr = ordered_json::array();
  for (const CensusRow& r : rows) {
    arr.push_back({{"q", r.q},
                   {"N", r.N},
                   {"parameter", r.parameter},
                   {"count", r.count.fits_slong_p() ? ordered_json(r.count.get_si()) : ordered_json(r.count.get_str())},
                   {"closed_form", r.closed_form},
                   {"match", r.match}});
  }
  return arr.dump(2) + "\n";
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + path);
  f << text;
  if (!f) throw std::runtime_error("cannot write output file " + path);
}

/// Fill options from a JSON config file unless the flag was given.
void apply_config(CLI::App& app, Options& o) {
  if (o.config.empty()) return;
  std::ifstream f(o.config);
  if (!f) throw CLI::ValidationError("--config", "cannot read " + o.config);
  nlohmann::json cfg;
  try {
    cfg = nlohmann::json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw CLI::ValidationError("--config", e.what());
  }
  auto given = [&](const std::string& flag) {
    for (CLI::App* sub : app.get_subcommands()) {
      if (const CLI::Option* opt = sub->get_option_no_throw(flag); opt && opt->count() > 0) return true;
    }
    return false;
  };
  auto take_int = [&](const char* key, const char* flag, int& dst) {
    if (cfg.contains(key) && !given(flag)) dst = cfg[key].get<int>();
  };
  if (cfg.contains("seed") && !given("--seed")) o.seed = cfg["seed"].get<std::uint64_t>();
  if (cfg.contains("format") && !given("--format")) o.format = cfg["format"].get<std::string>();
  if (cfg.contains("prime") && !given("--prime")) o.ranges.prime = cfg["prime"].get<std::uint64_t>();
  if (cfg.contains("log_level") && std::getenv("HECKELAB_LOG") == nullptr) {
    const std::string level = cfg["log_level"].get<std::string>();
    spdlog::set_level(spdlog::level::from_str(level == "warn" ? "warning" : level));
  }
  take_int("r_max", "--r-max", o.ranges.r_max);
  take_int("k_max", "--k-max", o.ranges.k_max);
  take_int("q_max", "--q-max", o.ranges.q_max);
  if (cfg.contains("ranges")) {
    const auto& r = cfg["ranges"];
    auto set = [&](const char* key, int& dst) {
      if (r.contains(key)) dst = r[key].get<int>();
    };
    set("char_n_max", o.ranges.char_n_max);
    set("lambda_r_max", o.ranges.lambda_r_max);
    set("lambda_k_max", o.ranges.lambda_k_max);
    set("satake_n_max", o.ranges.satake_n_max);
    set("eval_n_max", o.ranges.eval_n_max);
    set("eval_trials", o.ranges.eval_trials);
    set("coherence_trials", o.ranges.coherence_trials);
    set("tensor_trials", o.ranges.tensor_trials);
    set("chow_max", o.ranges.chow_max);
    set("dbullet_r_max", o.ranges.dbullet_r_max);
  }
  if (o.format != "csv" && o.format != "json") throw CLI::ValidationError("format", "must be csv or json");
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  Options o;
  CLI::App app{"Exact checks for unitary Hecke algebras, Satake transforms and finite hermitian geometry"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "heckelab 1.0.0");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out, "Write output to PATH instead of stdout");
    sub->add_option("--config", o.config, "JSON config file; flags take precedence");
    sub->add_option("--seed", o.seed, "Seed for all randomness");
  };

  CLI::App* t = app.add_subcommand("tables", "Emit d-numbers, Satake matrices or named operators");
  t->add_option("--kind", o.kind, "dnumbers|satake_matrix|operators")
      ->required()
      ->check(CLI::IsMember({"dnumbers", "satake_matrix", "operators"}));
  t->add_option("--r-max", o.ranges.r_max, "Largest r for dnumbers")->check(CLI::Range(0, 40));
  t->add_option("--N", o.N, "Rank for satake_matrix and operators")->check(CLI::Range(1, 40));
  t->add_option("--q", o.q, "'symbolic' or an integer specialization");
  add_common(t);

  CLI::App* v = app.add_subcommand("verify", "Run verification suites and emit a JSON report");
  v->add_option("--suite", o.suite, "Suite name")->check(CLI::IsMember(suite_names()));
  v->add_option("--r-max", o.ranges.r_max, "Largest r for Satake identities and symbolic statements")->check(CLI::Range(1, 8));
  v->add_option("--k-max", o.ranges.k_max, "Largest k for q-identities")->check(CLI::Range(1, 30));
  v->add_option("--q-max", o.ranges.q_max, "Largest q for lattice and geometry suites")->check(CLI::Range(2, 9));
  v->add_option("--prime", o.ranges.prime, "Prime for field evaluations");
  v->add_flag("--reproducible", o.reproducible, "Report elapsed_ms as 0 so reports are byte-identical");
  add_common(v);

  CLI::App* e = app.add_subcommand("eval", "Evaluate φ_α of a Hecke operator mod a prime");
  e->add_option("--N", o.N, "Rank")->check(CLI::Range(1, 40));
  e->add_option("--op", o.op, "Named operator, statement name (even1..odd2) or T<δ>")->required();
  e->add_option("--alpha", o.alpha, "Comma-separated α_1..α_r; inverses are appended")->required();
  e->add_option("--prime", o.ranges.prime, "Prime modulus");
  e->add_option("--q", o.q, "Integer value of q (default 2)");
  add_common(e);

  CLI::App* c = app.add_subcommand("count", "Exhaustive finite-geometry counts");
  c->set_help_flag("--help", "Print this help message and exit");
  c->add_option("--kind", o.kind, "isotropic|meeting|dl|dlbullet|window")
      ->required()
      ->check(CLI::IsMember({"isotropic", "meeting", "dl", "dlbullet", "window"}));
  c->add_option("--q", o.q, "Prime power q (default 2)");
  c->add_option("--N", o.N, "Dimension")->check(CLI::Range(1, 8));
  c->add_option("--s", o.s, "Codimension of the meeting (meeting)");
  c->add_option("--h", o.h, "Subspace dimension (dl)");
  c->add_option("--d", o.d, "Radical dimension (dl, dlbullet)");
  c->add_option("--e", o.e, "Extension degree 1 or 2 (dl, dlbullet)");
  c->add_option("--dim", o.dim, "Subspace dimension (isotropic; default ⌊N/2⌋)");
  add_common(c);

  try {
    app.parse(argc, argv);
    apply_config(app, o);
  } catch (const CLI::Success& s) {
    return app.exit(s);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitUsage;
  }

  try {
    if (t->parsed()) {
      emit(tables(o).render(o.format), o.out);
      return kExitPass;
    }
    if (v->parsed()) {
      SuiteReport report = run_suite(o.suite, o.ranges, o.seed);
      if (o.reproducible) report.elapsed_ms = 0;
      emit(to_json(report).dump(2) + "\n", o.out);
      spdlog::info("{}: {} pass, {} fail, {} skipped", report.suite, report.count(CheckStatus::pass),
                   report.count(CheckStatus::fail), report.count(CheckStatus::skipped));
      return report.passed() ? kExitPass : kExitFail;
    }
    if (e->parsed()) {
      const Table table = eval(o);
      emit(table.render(o.format), o.out);
      const auto& match = table.rows.front().back().second;
      return match.is_boolean() && !match.get<bool>() ? kExitFail : kExitPass;
    }
    if (c->parsed()) {
      const auto rows = count(o);
      emit(render_census(rows, o.format), o.out);
      for (const CensusRow& r : rows) {
        if (!r.match) return kExitFail;
      }
      return kExitPass;
    }
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitUsage;
  } catch (const DomainError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitFail;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
