#include "heckelab/laurent.hpp"

#include <sstream>

namespace heckelab {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, mpz_class(constant));
}

LaurentPoly::LaurentPoly(const mpz_class& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(const mpz_class& coeff, int exponent) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, long>>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(c, e);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

mpz_class LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw DomainError("min_degree of the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw DomainError("max_degree of the zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::prune(int exponent) {
  auto it = terms_.find(exponent);
  if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    terms_[e] += c;
    prune(e);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    terms_[e] -= c;
    prune(e);
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.terms_[ea + eb] += ca * cb;
    }
  }
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    it = (it->second == 0) ? out.terms_.erase(it) : std::next(it);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly acc(1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1U) acc *= base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return acc;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

LaurentPoly LaurentPoly::substitute(int sign, int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    mpz_class coeff = c;
    if (sign < 0 && (e % 2 != 0)) coeff = -coeff;
    out.terms_[e * k] += coeff;
    out.prune(e * k);
  }
  return out;
}

std::optional<LaurentPoly> LaurentPoly::try_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero Laurent polynomial");
  if (a.is_zero()) return LaurentPoly();
  // Normalize both to ordinary polynomials with nonzero constant term for b;
  // then a/b is Laurent iff the normalized quotient is a polynomial.
  const int shift_a = a.min_degree();
  const int shift_b = b.min_degree();
  std::map<int, mpz_class> rem;
  for (const auto& [e, c] : a.terms_) rem.emplace(e - shift_a, c);
  const int deg_b = b.max_degree() - shift_b;
  const mpz_class& lead_b = b.terms_.rbegin()->second;

  LaurentPoly quotient;
  while (!rem.empty()) {
    const int deg_r = rem.rbegin()->first;
    if (deg_r < deg_b) return std::nullopt;
    const mpz_class& lead_r = rem.rbegin()->second;
    if (!mpz_divisible_p(lead_r.get_mpz_t(), lead_b.get_mpz_t())) return std::nullopt;
    mpz_class factor = lead_r / lead_b;
    const int step = deg_r - deg_b;
    quotient.terms_.emplace(step, factor);
    for (const auto& [e, c] : b.terms_) {
      const int target = e - shift_b + step;
      rem[target] -= factor * c;
      if (rem[target] == 0) rem.erase(target);
    }
  }
  return quotient.shifted(shift_a - shift_b);
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& a, const LaurentPoly& b, const char* what) {
  auto q = try_divide(a, b);
  if (!q) {
    throw InvariantViolation(std::string("non-exact division in ") + what + ": (" + a.to_ascii() +
                             ") / (" + b.to_ascii() + ")");
  }
  return *q;
}

mpq_class LaurentPoly::evaluate(const mpz_class& x) const {
  mpq_class acc = 0;
  for (const auto& [e, c] : terms_) {
    if (e < 0 && x == 0) throw DomainError("evaluating a negative power at 0");
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    acc += (e >= 0) ? mpq_class(c * p) : mpq_class(c, p);
  }
  acc.canonicalize();
  return acc;
}

mpz_class LaurentPoly::evaluate_integral(const mpz_class& x) const {
  mpq_class v = evaluate(x);
  if (v.get_den() != 1) {
    throw InvariantViolation("expected an integral value for " + to_ascii() + " at " + x.get_str());
  }
  return v.get_num();
}

namespace {

std::string superscript(int n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  if (n < 0) {
    out += "⁻";
    n = -n;
  }
  std::string dec = std::to_string(n);
  for (char ch : dec) out += digits[ch - '0'];
  return out;
}

}  // namespace

std::string LaurentPoly::to_pretty(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    mpz_class c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (negative) {
      out += "−";
    } else if (!first) {
      out += "+";
    }
    if (e == 0) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str();
      out += var;
      if (e != 1) out += superscript(e);
    }
    first = false;
  }
  return out;
}

std::string LaurentPoly::to_ascii(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    mpz_class c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (negative) {
      out << "-";
    } else if (!first) {
      out << "+";
    }
    if (e == 0) {
      out << c.get_str();
    } else {
      if (c != 1) out << c.get_str() << "*";
      out << var;
      if (e != 1) out << "^" << e;
    }
    first = false;
  }
  return out.str();
}

std::vector<std::pair<int, mpz_class>> LaurentPoly::term_list() const {
  return {terms_.begin(), terms_.end()};
}

}  // namespace heckelab
