#include "heckelab/hecke.hpp"

#include <mutex>

namespace heckelab {

namespace {

LaurentPoly q_var() { return LaurentPoly::var(); }

Parity parity_of(int N) { return N % 2 == 0 ? Parity::even : Parity::odd; }

void require_parity(int N, bool even, std::string_view what) {
  if (N < 1) throw DomainError(std::string(what) + " requires N >= 1");
  if ((N % 2 == 0) != even) {
    throw DomainError(std::string(what) + " requires " + (even ? "even" : "odd") + " N, got N=" + std::to_string(N));
  }
}

}  // namespace

HeckeElement::HeckeElement(int N, Flavor flavor) : N_(N), flavor_(flavor) {
  if (N < 1) throw DomainError("HeckeElement requires N >= 1");
  coeffs_.assign(static_cast<std::size_t>(N / 2) + 1, LaurentPoly());
}

HeckeElement HeckeElement::basis(int N, int delta, Flavor flavor) {
  HeckeElement e(N, flavor);
  e.set_coeff(delta, LaurentPoly(1));
  return e;
}

const LaurentPoly& HeckeElement::coeff(int delta) const {
  if (delta < 0 || delta > rank()) throw DomainError("Hecke basis index out of range");
  return coeffs_[static_cast<std::size_t>(delta)];
}

void HeckeElement::set_coeff(int delta, LaurentPoly c) {
  if (delta < 0 || delta > rank()) throw DomainError("Hecke basis index out of range");
  coeffs_[static_cast<std::size_t>(delta)] = std::move(c);
}

void HeckeElement::check_compatible(const HeckeElement& other) const {
  if (other.N_ != N_ || other.flavor_ != flavor_) throw DomainError("Hecke elements of different algebras");
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& rhs) {
  check_compatible(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& rhs) {
  check_compatible(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

HeckeElement operator*(const LaurentPoly& c, HeckeElement e) {
  for (auto& x : e.coeffs_) x = c * x;
  return e;
}

bool operator==(const HeckeElement& a, const HeckeElement& b) {
  return a.N_ == b.N_ && a.flavor_ == b.flavor_ && a.coeffs_ == b.coeffs_;
}

std::string HeckeElement::to_string() const {
  std::string out;
  for (int d = rank(); d >= 0; --d) {
    const LaurentPoly& c = coeffs_[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string basis = "T" + std::to_string(d);
    if (c == LaurentPoly(1)) {
      out += basis;
    } else if (c.terms().size() == 1) {
      out += c.to_pretty() + "·" + basis;
    } else {
      out += "(" + c.to_pretty() + ")·" + basis;
    }
  }
  return out.empty() ? "0" : out;
}

SatakeMatrix::SatakeMatrix(int N) : N_(N) {
  if (N < 1) throw DomainError("SatakeMatrix requires N >= 1");
  const int r = N / 2;
  const QBase mq = QBase::minus_q();
  entries_.resize(static_cast<std::size_t>(r) + 1);
  for (int d = 0; d <= r; ++d) {
    for (int i = 0; i <= d; ++i) entries_[static_cast<std::size_t>(d)].push_back(q_binomial(N - 2 * i, d - i, mq));
  }
}

LaurentPoly SatakeMatrix::entry(int delta, int i) const {
  if (delta < 0 || delta >= size() || i < 0 || i >= size()) throw DomainError("SatakeMatrix index out of range");
  if (i > delta) return LaurentPoly();
  return entries_[static_cast<std::size_t>(delta)][static_cast<std::size_t>(i)];
}

bool SatakeMatrix::is_lower_unitriangular() const {
  for (int d = 0; d < size(); ++d) {
    if (!(entry(d, d) == LaurentPoly(1))) return false;
  }
  return true;
}

const std::vector<std::vector<LaurentPoly>>& satake_basis_images(int N) {
  static std::mutex mutex;
  static std::map<int, std::vector<std::vector<LaurentPoly>>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
  }
  const SatakeMatrix M(N);
  const int r = N / 2;
  std::vector<std::vector<LaurentPoly>> images;
  for (int d = 0; d <= r; ++d) {
    const std::vector<mpz_class> chi = character_coefficients(N, d);
    std::vector<LaurentPoly> image(static_cast<std::size_t>(r) + 1);
    for (std::size_t j = 0; j < image.size(); ++j) image[j] = LaurentPoly::monomial(chi[j], d * (N - d));
    for (int i = 0; i < d; ++i) {
      const LaurentPoly& m = M.entry(d, i);
      for (std::size_t j = 0; j < image.size(); ++j) image[j] -= m * images[static_cast<std::size_t>(i)][j];
    }
    images.push_back(std::move(image));
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(N, std::move(images)).first->second;
}

std::vector<LaurentPoly> satake_transform_elementary(const HeckeElement& e) {
  if (e.flavor() != Flavor::circ) throw DomainError("the Satake transform is defined on the circ algebra");
  const auto& images = satake_basis_images(e.N());
  std::vector<LaurentPoly> out(images.size());
  for (std::size_t d = 0; d < images.size(); ++d) {
    const LaurentPoly& c = e.coeffs()[d];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += c * images[d][j];
  }
  return out;
}

SymLaurent satake_transform(const HeckeElement& e) {
  const std::vector<LaurentPoly> coords = satake_transform_elementary(e);
  const int r = e.rank();
  SymLaurent out(r);
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (!coords[j].is_zero()) out += coords[j] * elem_sym(r, static_cast<int>(j));
  }
  return out;
}

std::vector<SymLaurent> satake_forward_discrepancy(int N) {
  const SatakeMatrix M(N);
  const int r = N / 2;
  std::vector<SymLaurent> solved;
  for (int i = 0; i <= r; ++i) solved.push_back(satake_transform(HeckeElement::basis(N, i)));
  std::vector<SymLaurent> out;
  for (int d = 0; d <= r; ++d) {
    SymLaurent acc(r);
    for (int i = 0; i <= d; ++i) acc += M.entry(d, i) * solved[static_cast<std::size_t>(i)];
    acc -= q_power(d * (N - d)) * character(N, d);
    out.push_back(std::move(acc));
  }
  return out;
}

NamedOperator parse_named_operator(std::string_view name) {
  if (name == "Icirc") return NamedOperator::Icirc;
  if (name == "Tstar") return NamedOperator::Tstar;
  if (name == "Rcirc") return NamedOperator::Rcirc;
  if (name == "TcircEven") return NamedOperator::TcircEven;
  if (name == "Rbullet") return NamedOperator::Rbullet;
  if (name == "TbulletEven") return NamedOperator::TbulletEven;
  if (name == "TbulletOdd") return NamedOperator::TbulletOdd;
  throw DomainError("unknown operator '" + std::string(name) + "'");
}

std::string_view to_string(NamedOperator op) {
  switch (op) {
    case NamedOperator::Icirc:
      return "Icirc";
    case NamedOperator::Tstar:
      return "Tstar";
    case NamedOperator::Rcirc:
      return "Rcirc";
    case NamedOperator::TcircEven:
      return "TcircEven";
    case NamedOperator::Rbullet:
      return "Rbullet";
    case NamedOperator::TbulletEven:
      return "TbulletEven";
    case NamedOperator::TbulletOdd:
      return "TbulletOdd";
  }
  return "?";
}

HeckeElement named_operator(NamedOperator op, int N) {
  const int r = N / 2;
  const LaurentPoly q_plus_1 = q_var() + 1;
  switch (op) {
    case NamedOperator::Icirc: {
      if (N < 1) throw DomainError("Icirc requires N >= 1");
      HeckeElement e(N, Flavor::circ);
      for (int d = 0; d <= r; ++d) e.set_coeff(d, odd_product(r - d, parity_of(N)));
      return e;
    }
    case NamedOperator::Tstar: {
      require_parity(N, false, "Tstar");
      HeckeElement e(N, Flavor::circ);
      for (int d = 0; d <= r; ++d) e.set_coeff(d, d_number(r - d));
      return e;
    }
    case NamedOperator::Rcirc:
    case NamedOperator::Rbullet: {
      require_parity(N, true, to_string(op));
      HeckeElement e(N, op == NamedOperator::Rcirc ? Flavor::circ : Flavor::bullet);
      for (int d = 0; d < r; ++d) {
        const LaurentPoly head = LaurentPoly::divide_exact(1 - minus_q_power(r - d), q_plus_1, "R coefficient");
        e.set_coeff(d, head * odd_product(r - d, Parity::even));
      }
      return e;
    }
    case NamedOperator::TcircEven:
    case NamedOperator::TbulletEven:
    case NamedOperator::TbulletOdd: {
      const bool even = op != NamedOperator::TbulletOdd;
      require_parity(N, even, to_string(op));
      HeckeElement e(N, op == NamedOperator::TcircEven ? Flavor::circ : Flavor::bullet);
      for (int d = 0; d < r; ++d) e.set_coeff(d, d_bullet_number(r - d));
      return e;
    }
  }
  throw DomainError("unknown operator");
}

EvalStatement parse_eval_statement(std::string_view name) {
  if (name == "even1") return EvalStatement::even1;
  if (name == "even2") return EvalStatement::even2;
  if (name == "even3") return EvalStatement::even3;
  if (name == "odd1") return EvalStatement::odd1;
  if (name == "odd2") return EvalStatement::odd2;
  throw DomainError("unknown evaluation statement '" + std::string(name) + "'");
}

std::string_view to_string(EvalStatement s) {
  switch (s) {
    case EvalStatement::even1:
      return "even1";
    case EvalStatement::even2:
      return "even2";
    case EvalStatement::even3:
      return "even3";
    case EvalStatement::odd1:
      return "odd1";
    case EvalStatement::odd2:
      return "odd2";
  }
  return "?";
}

bool statement_is_even(EvalStatement s) {
  return s == EvalStatement::even1 || s == EvalStatement::even2 || s == EvalStatement::even3;
}

HeckeElement statement_operator(EvalStatement s, int N) {
  require_parity(N, statement_is_even(s), to_string(s));
  const LaurentPoly q_plus_1 = q_var() + 1;
  switch (s) {
    case EvalStatement::even1:
    case EvalStatement::odd1:
      return named_operator(NamedOperator::Icirc, N);
    case EvalStatement::even2:
      return q_plus_1 * named_operator(NamedOperator::Rcirc, N) - named_operator(NamedOperator::Icirc, N);
    case EvalStatement::even3:
      return named_operator(NamedOperator::Rcirc, N) + q_plus_1 * named_operator(NamedOperator::TcircEven, N);
    case EvalStatement::odd2:
      return named_operator(NamedOperator::Tstar, N);
  }
  throw DomainError("unknown evaluation statement");
}

namespace {

// Π_i (m_i + c)
SymLaurent shifted_product(int r, const LaurentPoly& c) {
  SymLaurent acc = SymLaurent::constant(r, LaurentPoly(1));
  for (int i = 0; i < r; ++i) acc = acc * (SymLaurent::m(r, i) + SymLaurent::constant(r, c));
  return acc;
}

// Σ_j Π_{i≠j} (m_i + c)
SymLaurent shifted_product_omitting_one(int r, const LaurentPoly& c) {
  SymLaurent sum(r);
  for (int j = 0; j < r; ++j) {
    SymLaurent acc = SymLaurent::constant(r, LaurentPoly(1));
    for (int i = 0; i < r; ++i) {
      if (i != j) acc = acc * (SymLaurent::m(r, i) + SymLaurent::constant(r, c));
    }
    sum += acc;
  }
  return sum;
}

LaurentPoly minus_q_minus_qinv() { return -q_var() - LaurentPoly::monomial(1, -1); }

}  // namespace

SymLaurent statement_closed_form(EvalStatement s, int r) {
  if (r < 1) throw DomainError("closed forms require r >= 1");
  switch (s) {
    case EvalStatement::even1:
      return q_power(r * r) * shifted_product(r, LaurentPoly(2));
    case EvalStatement::even2:
      return -(q_power(r * r) * shifted_product(r, minus_q_minus_qinv()));
    case EvalStatement::even3:
      return -((q_power(r * r + 1) - q_power(r * r - 1)) * shifted_product_omitting_one(r, minus_q_minus_qinv()));
    case EvalStatement::odd1:
      return q_power(r * r + r) * shifted_product(r, q_var() + LaurentPoly::monomial(1, -1));
    case EvalStatement::odd2:
      return q_power(r * r + r) * shifted_product(r, LaurentPoly(-2));
  }
  throw DomainError("unknown evaluation statement");
}

SatakeIdentity parse_satake_identity(std::string_view name) {
  if (name == "even1") return SatakeIdentity::even1;
  if (name == "even2") return SatakeIdentity::even2;
  if (name == "even4") return SatakeIdentity::even4;
  if (name == "odd1") return SatakeIdentity::odd1;
  if (name == "odd2") return SatakeIdentity::odd2;
  throw DomainError("unknown Satake identity '" + std::string(name) + "'");
}

std::string_view to_string(SatakeIdentity which) {
  switch (which) {
    case SatakeIdentity::even1:
      return "even1";
    case SatakeIdentity::even2:
      return "even2";
    case SatakeIdentity::even4:
      return "even4";
    case SatakeIdentity::odd1:
      return "odd1";
    case SatakeIdentity::odd2:
      return "odd2";
  }
  return "?";
}

SymLaurent verify_satake_identity(SatakeIdentity which, int r) {
  if (r < 1) throw DomainError("verify_satake_identity requires r >= 1");
  const bool even = which == SatakeIdentity::even1 || which == SatakeIdentity::even2 || which == SatakeIdentity::even4;
  const int N = even ? 2 * r : 2 * r + 1;
  auto sat = [&](int delta) { return satake_transform(HeckeElement::basis(N, delta)); };
  SymLaurent lhs(r);
  SymLaurent rhs(r);
  switch (which) {
    case SatakeIdentity::even1:
      lhs = q_power(r * r) * shifted_product(r, LaurentPoly(2));
      rhs = sat(r);
      for (int d = 1; d <= r; ++d) rhs += odd_product(d, Parity::even) * sat(r - d);
      break;
    case SatakeIdentity::even2:
      lhs = q_power(r * r) * shifted_product(r, minus_q_minus_qinv());
      rhs = sat(r);
      for (int d = 1; d <= r; ++d) rhs += (minus_q_power(d) * odd_product(d, Parity::even)) * sat(r - d);
      break;
    case SatakeIdentity::even4:
      lhs = (q_power(r * r + 1) - q_power(r * r - 1)) * shifted_product_omitting_one(r, minus_q_minus_qinv());
      for (int d = 1; d <= r; ++d) {
        rhs += (minus_q_power(d) * odd_product(d, Parity::even) - d_number(d)) * sat(r - d);
      }
      break;
    case SatakeIdentity::odd1:
      lhs = q_power(r * r + r) * shifted_product(r, q_var() + LaurentPoly::monomial(1, -1));
      rhs = sat(r);
      for (int d = 1; d <= r; ++d) rhs += odd_product(d, Parity::odd) * sat(r - d);
      break;
    case SatakeIdentity::odd2:
      lhs = q_power(r * r + r) * shifted_product(r, LaurentPoly(-2));
      for (int d = 0; d <= r; ++d) rhs += d_number(d) * sat(r - d);
      break;
  }
  return lhs - rhs;
}

SatakeCondition parse_satake_condition(std::string_view name) {
  if (name == "tate_generic") return SatakeCondition::tate_generic;
  if (name == "level_raising_special") return SatakeCondition::level_raising_special;
  if (name == "intertwining_generic") return SatakeCondition::intertwining_generic;
  throw DomainError("unknown Satake condition '" + std::string(name) + "'");
}

std::string_view to_string(SatakeCondition which) {
  switch (which) {
    case SatakeCondition::tate_generic:
      return "tate_generic";
    case SatakeCondition::level_raising_special:
      return "level_raising_special";
    case SatakeCondition::intertwining_generic:
      return "intertwining_generic";
  }
  return "?";
}

namespace {

void require_condition_parity(int N, SatakeCondition which) {
  if (which == SatakeCondition::tate_generic && N % 2 == 0) throw DomainError("tate_generic requires odd N");
  if (which == SatakeCondition::level_raising_special && N % 2 == 1) {
    throw DomainError("level_raising_special requires even N");
  }
}

}  // namespace

bool satake_condition(const std::vector<Fp>& P, const Fp& qv, SatakeCondition which) {
  if (P.size() < 2) throw DomainError("Satake condition needs a polynomial of degree >= 1");
  const Fp one = Fp::one(qv.modulus());
  if (!(P.back() == one)) throw DomainError("polynomial must be monic");
  if (!satisfies_functional_equation(P)) throw DomainError("polynomial violates P(T) = (-T)^N P(1/T)");
  if (qv.is_zero()) throw DomainError("qv must be invertible");
  const int N = static_cast<int>(P.size()) - 1;
  require_condition_parity(N, which);
  const std::vector<Fp> dP = poly_derivative(P, one);
  switch (which) {
    case SatakeCondition::tate_generic:
      return !poly_eval(dP, one).is_zero();
    case SatakeCondition::level_raising_special:
      return poly_eval(P, qv).is_zero() && !poly_eval(dP, qv).is_zero();
    case SatakeCondition::intertwining_generic:
      return !poly_eval(P, N % 2 == 1 ? -qv : -one).is_zero();
  }
  throw DomainError("unknown Satake condition");
}

bool semantic_condition(const SatakeParam<Fp>& alpha, const Fp& qv, SatakeCondition which) {
  const Fp one = Fp::one(qv.modulus());
  if (!alpha.pairing_holds(one)) throw DomainError("semantic reading requires a paired inert parameter");
  if (qv.is_zero() || qv * qv == one) throw DomainError("semantic reading requires qv^2 != 1");
  const int N = alpha.rank();
  require_condition_parity(N, which);
  const auto& a = alpha.values();
  const std::size_t half = static_cast<std::size_t>(N / 2);
  // Pair i is {a[i], a[N-1-i]} for i < ⌊N/2⌋.
  auto pairs_containing = [&](const Fp& x) {
    int count = 0;
    for (std::size_t i = 0; i < half; ++i) {
      if (a[i] == x || a[a.size() - 1 - i] == x) ++count;
    }
    return count;
  };
  switch (which) {
    case SatakeCondition::tate_generic:
      return std::count(a.begin(), a.end(), one) == 1;
    case SatakeCondition::level_raising_special:
      return pairs_containing(qv) == 1;
    case SatakeCondition::intertwining_generic:
      return pairs_containing(N % 2 == 1 ? -qv : -one) == 0;
  }
  throw DomainError("unknown Satake condition");
}

bool decomposed_generic(const std::vector<Fp>& roots, const Fp& qv) {
  for (const Fp& x : roots) {
    if (x.is_zero()) throw DomainError("decomposed_generic requires nonzero roots");
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (i != j && roots[i] == qv * roots[j]) return false;
    }
  }
  return true;
}

SatakeParam<Fp> random_inert(int N, std::uint64_t p, const Fp& qv, std::mt19937_64& rng) {
  if (N < 1) throw DomainError("random_inert requires N >= 1");
  const Fp one = Fp::one(p);
  const std::vector<Fp> special{one, -one, qv, qv.inverse(), -qv, -qv.inverse()};
  std::uniform_int_distribution<std::uint64_t> uniform(1, p - 1);
  std::uniform_int_distribution<std::size_t> pick(0, special.size() - 1);
  std::uniform_int_distribution<int> coin(0, 3);
  std::vector<Fp> half;
  for (int i = 0; i < N / 2; ++i) {
    if (coin(rng) == 0) {
      half.push_back(special[pick(rng)]);
    } else {
      half.push_back(Fp(p, static_cast<std::int64_t>(uniform(rng))));
    }
  }
  return SatakeParam<Fp>::inert_from_half(half, N, one);
}

std::vector<Fp> elementary_at(const std::vector<Fp>& m_values) {
  if (m_values.empty()) throw DomainError("elementary_at needs the field; pass at least one value");
  const Fp one = Fp::one(m_values[0].modulus());
  std::vector<Fp> e(m_values.size() + 1, one - one);
  e[0] = one;
  for (std::size_t k = 0; k < m_values.size(); ++k) {
    for (std::size_t j = k + 1; j >= 1; --j) e[j] = e[j] + m_values[k] * e[j - 1];
  }
  return e;
}

namespace {

std::vector<Fp> m_values_of(const SatakeParam<Fp>& alpha, const Fp& one) {
  if (alpha.kind() != ParamKind::inert) throw DomainError("φ is defined for inert parameters");
  if (!alpha.pairing_holds(one)) throw DomainError("φ requires a paired inert parameter");
  std::vector<Fp> m;
  for (int i = 0; i < alpha.rank() / 2; ++i) {
    const Fp& a = alpha.values()[static_cast<std::size_t>(i)];
    m.push_back(a + a.inverse());
  }
  return m;
}

}  // namespace

Fp eval_phi(const HeckeElement& e, const SatakeParam<Fp>& alpha, const Fp& qv) {
  if (alpha.rank() != e.N()) throw DomainError("Satake parameter rank does not match the Hecke element");
  if (qv.is_zero()) throw DomainError("q must be invertible in the evaluation field");
  const Fp one = Fp::one(qv.modulus());
  const std::vector<Fp> m = m_values_of(alpha, one);
  const std::vector<LaurentPoly> coords = satake_transform_elementary(e);
  std::vector<Fp> s{one};
  if (!m.empty()) s = elementary_at(m);
  Fp acc = one - one;
  for (std::size_t j = 0; j < coords.size(); ++j) acc = acc + coords[j].evaluate_in(qv, one) * s[j];
  return acc;
}

Fp eval_closed_form(EvalStatement s, const SatakeParam<Fp>& alpha, const Fp& qv) {
  const int N = alpha.rank();
  require_parity(N, statement_is_even(s), to_string(s));
  if (qv.is_zero()) throw DomainError("q must be invertible in the evaluation field");
  const Fp one = Fp::one(qv.modulus());
  const std::vector<Fp> m = m_values_of(alpha, one);
  const int r = N / 2;
  const Fp q_plus_qinv = qv + qv.inverse();
  auto product = [&](const Fp& shift) {
    Fp acc = one;
    for (const Fp& x : m) acc = acc * (x + shift);
    return acc;
  };
  switch (s) {
    case EvalStatement::even1:
      return qv.pow(r * r) * product(one + one);
    case EvalStatement::even2:
      return -(qv.pow(r * r) * product(-q_plus_qinv));
    case EvalStatement::even3: {
      Fp sum = one - one;
      for (std::size_t j = 0; j < m.size(); ++j) {
        Fp acc = one;
        for (std::size_t i = 0; i < m.size(); ++i) {
          if (i != j) acc = acc * (m[i] - q_plus_qinv);
        }
        sum = sum + acc;
      }
      return -((qv.pow(r * r + 1) - qv.pow(r * r - 1)) * sum);
    }
    case EvalStatement::odd1:
      return qv.pow(r * r + r) * product(q_plus_qinv);
    case EvalStatement::odd2:
      return qv.pow(r * r + r) * product(-(one + one));
  }
  throw DomainError("unknown evaluation statement");
}

InversionLaurent eval_phi_symbolic(const HeckeElement& e) { return InversionLaurent::expand(satake_transform(e)); }

}  // namespace heckelab
