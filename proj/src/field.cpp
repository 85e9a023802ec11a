#include "heckelab/field.hpp"

namespace heckelab {

Fp::Fp(std::uint64_t modulus, std::int64_t value) : p_(modulus) {
  if (modulus < 2 || modulus >= (1ULL << 32)) throw DomainError("Fp modulus out of range");
  const std::int64_t m = static_cast<std::int64_t>(modulus);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  v_ = static_cast<std::uint64_t>(r);
}

void Fp::require_prime(std::uint64_t modulus) {
  if (modulus < 2 || modulus >= (1ULL << 32)) throw DomainError("prime must lie in [2, 2^32)");
  mpz_class m(static_cast<unsigned long>(modulus));
  if (mpz_probab_prime_p(m.get_mpz_t(), 30) == 0) {
    throw DomainError(std::to_string(modulus) + " is not prime");
  }
}

void Fp::check_same(const Fp& a, const Fp& b) {
  if (a.p_ != b.p_) throw DomainError("mixing elements of different prime fields");
}

Fp Fp::lift(const mpz_class& c) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p_));
  return Fp(p_, static_cast<std::int64_t>(r.get_ui()));
}

Fp operator+(const Fp& a, const Fp& b) {
  Fp::check_same(a, b);
  Fp out = a;
  out.v_ = (a.v_ + b.v_) % a.p_;
  return out;
}

Fp operator-(const Fp& a, const Fp& b) {
  Fp::check_same(a, b);
  Fp out = a;
  out.v_ = (a.v_ + a.p_ - b.v_) % a.p_;
  return out;
}

Fp operator*(const Fp& a, const Fp& b) {
  Fp::check_same(a, b);
  Fp out = a;
  out.v_ = (a.v_ * b.v_) % a.p_;
  return out;
}

Fp Fp::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Fp acc = one(p_);
  Fp base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw DomainError("zero is not invertible in F_" + std::to_string(p_));
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(v_);
  while (new_r != 0) {
    const std::int64_t quotient = r / new_r;
    std::int64_t tmp = t - quotient * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quotient * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw DomainError(std::to_string(v_) + " is not invertible mod " + std::to_string(p_));
  return Fp(p_, t);
}

}  // namespace heckelab
