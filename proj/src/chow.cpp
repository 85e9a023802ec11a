#include "heckelab/chow.hpp"

#include <sstream>

namespace heckelab {

ChowClass::ChowClass(int ambient_dim) : m_(ambient_dim) {
  if (ambient_dim < 0) throw DomainError("ambient dimension must be nonnegative");
  c_.assign(static_cast<std::size_t>(ambient_dim) + 1, 0);
}

ChowClass::ChowClass(int ambient_dim, std::vector<mpz_class> coeffs) : ChowClass(ambient_dim) {
  for (std::size_t j = 0; j < coeffs.size() && j < c_.size(); ++j) c_[j] = coeffs[j];
}

ChowClass ChowClass::one(int ambient_dim) {
  ChowClass out(ambient_dim);
  out.c_[0] = 1;
  return out;
}

ChowClass ChowClass::linear(int ambient_dim, const mpz_class& k) {
  ChowClass out = one(ambient_dim);
  if (ambient_dim >= 1) out.c_[1] = k;
  return out;
}

const mpz_class& ChowClass::coeff(int j) const {
  static const mpz_class zero = 0;
  if (j < 0 || j > m_) return zero;
  return c_[static_cast<std::size_t>(j)];
}

void ChowClass::check_same(const ChowClass& other) const {
  if (m_ != other.m_) throw DomainError("Chow classes on different projective spaces");
}

ChowClass& ChowClass::operator+=(const ChowClass& rhs) {
  check_same(rhs);
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += rhs.c_[j];
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& rhs) {
  check_same(rhs);
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= rhs.c_[j];
  return *this;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
  a.check_same(b);
  ChowClass out(a.m_);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < a.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return out;
}

ChowClass ChowClass::inverse() const {
  if (c_[0] != 1 && c_[0] != -1) throw DomainError("Chow class is not a unit");
  ChowClass out(m_);
  out.c_[0] = c_[0];
  for (std::size_t k = 1; k < c_.size(); ++k) {
    mpz_class acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * out.c_[k - j];
    out.c_[k] = -acc * c_[0];
  }
  return out;
}

ChowClass ChowClass::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  ChowClass acc = one(m_);
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

std::string ChowClass::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    const mpz_class& c = c_[j];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (j == 0 || mag != 1) out << mag.get_str();
    if (j > 0) {
      if (mag != 1) out << '*';
      out << "η";
      if (j > 1) out << '^' << j;
    }
    first = false;
  }
  return first ? "0" : out.str();
}

BundleClass::BundleClass(int rank, ChowClass total) : rank_(rank), total_(std::move(total)) {
  if (rank < 0) throw DomainError("bundle rank must be nonnegative");
  if (total_.coeff(0) != 1) throw InvariantViolation("total Chern class must start with 1");
  for (int j = rank + 1; j <= total_.ambient_dim(); ++j) {
    if (total_.coeff(j) != 0) throw InvariantViolation("Chern class c_" + std::to_string(j) + " of a rank-" +
                                                       std::to_string(rank) + " bundle is nonzero");
  }
}

BundleClass BundleClass::trivial(int ambient_dim, int rank) { return BundleClass(rank, ChowClass::one(ambient_dim)); }

BundleClass BundleClass::line(int ambient_dim, const mpz_class& k) {
  return BundleClass(1, ChowClass::linear(ambient_dim, k));
}

const mpz_class& BundleClass::c(int j) const { return total_.coeff(j); }

BundleClass operator+(const BundleClass& a, const BundleClass& b) {
  return BundleClass(a.rank_ + b.rank_, a.total_ * b.total_);
}

BundleClass tautological_sub(int n) {
  if (n < 1) throw DomainError("tautological subbundle needs n >= 1");
  return BundleClass(n - 1, ChowClass::linear(n - 1, 1).inverse());
}

BundleClass twist(const BundleClass& E, const mpz_class& k) {
  const int m = E.ambient_dim();
  const int rank = E.rank();
  ChowClass out(m);
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(m) + 1, 0);
  for (int j = 0; j <= m; ++j) {
    mpz_class acc = 0;
    for (int i = 0; i <= j; ++i) {
      if (rank - i < j - i || rank - i < 0) continue;
      mpz_class binom, kp;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(rank - i), static_cast<unsigned long>(j - i));
      mpz_pow_ui(kp.get_mpz_t(), k.get_mpz_t(), static_cast<unsigned long>(j - i));
      acc += binom * E.c(i) * kp;
    }
    coeffs[static_cast<std::size_t>(j)] = acc;
  }
  return BundleClass(rank, ChowClass(m, std::move(coeffs)));
}

BundleClass frobenius(const BundleClass& E, const mpz_class& p) {
  if (p < 2) throw DomainError("Frobenius degree must be at least 2");
  const int m = E.ambient_dim();
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(m) + 1);
  mpz_class scale = 1;
  for (int j = 0; j <= m; ++j) {
    coeffs[static_cast<std::size_t>(j)] = E.c(j) * scale;
    scale *= p;
  }
  return BundleClass(E.rank(), ChowClass(m, std::move(coeffs)));
}

BundleClass kernel_of(const BundleClass& middle, const BundleClass& quotient) {
  if (quotient.rank() > middle.rank()) throw DomainError("quotient rank exceeds the middle rank");
  return BundleClass(middle.rank() - quotient.rank(), middle.total() * quotient.total().inverse());
}

bool whitney_holds(const BundleClass& sub, const BundleClass& middle, const BundleClass& quotient) {
  return sub.rank() + quotient.rank() == middle.rank() && sub.total() * quotient.total() == middle.total();
}

ExcessIntegral parse_excess_integral(std::string_view name) {
  if (name == "I1") return ExcessIntegral::I1;
  if (name == "I2") return ExcessIntegral::I2;
  if (name == "I3") return ExcessIntegral::I3;
  throw DomainError("unknown excess integral: " + std::string(name));
}

std::string_view to_string(ExcessIntegral which) {
  switch (which) {
    case ExcessIntegral::I1:
      return "I1";
    case ExcessIntegral::I2:
      return "I2";
    case ExcessIntegral::I3:
      return "I3";
  }
  return "?";
}

namespace {

/// (1 − (−p)^k)/(p+1), exact.
mpz_class alternating_quotient(int k, const mpz_class& p) {
  mpz_class power;
  const mpz_class neg = -p;
  mpz_pow_ui(power.get_mpz_t(), neg.get_mpz_t(), static_cast<unsigned long>(k));
  const mpz_class num = 1 - power;
  const mpz_class den = p + 1;
  if (num % den != 0) throw InvariantViolation("non-integral expected excess integral");
  return num / den;
}

}  // namespace

std::pair<mpz_class, mpz_class> check_excess_integral(ExcessIntegral which, int n, const mpz_class& p) {
  if (p < 2) throw DomainError("p must be at least 2");
  switch (which) {
    case ExcessIntegral::I1:
    case ExcessIntegral::I2: {
      const int r = n;
      if (r < 1) throw DomainError("I1 and I2 need r >= 1");
      const BundleClass pulled = frobenius(tautological_sub(r), p);
      if (which == ExcessIntegral::I2) {
        mpz_class expected;
        const mpz_class neg = -p;
        mpz_pow_ui(expected.get_mpz_t(), neg.get_mpz_t(), static_cast<unsigned long>(r - 1));
        return {pulled.c(r - 1), expected};
      }
      const BundleClass F = twist(pulled, 1);
      const int m = r - 1;
      BundleClass ones = BundleClass::trivial(m, 0);
      for (int i = 0; i < r; ++i) ones = ones + BundleClass::line(m, 1);
      const BundleClass top = BundleClass::line(m, p + 1);
      if (!whitney_holds(F, ones, top)) throw InvariantViolation("Whitney fails for 0 → F → O(1)^r → O(p+1) → 0");
      return {F.c(r - 1), alternating_quotient(r, p)};
    }
    case ExcessIntegral::I3: {
      const int d = n;
      if (d < 0) throw DomainError("I3 needs d >= 0");
      const BundleClass E = twist(frobenius(tautological_sub(d + 1), p), 1);
      return {E.c(d), alternating_quotient(d + 1, p)};
    }
  }
  throw DomainError("unknown excess integral");
}

}  // namespace heckelab
