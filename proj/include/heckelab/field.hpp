#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "heckelab/errors.hpp"

namespace heckelab {

/// Element of the prime field F_p, p < 2^32. The modulus travels with the
/// value so that mixed-field arithmetic is caught.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t modulus, std::int64_t value);

  static Fp zero(std::uint64_t modulus) { return Fp(modulus, 0); }
  static Fp one(std::uint64_t modulus) { return Fp(modulus, 1); }
  /// Throws DomainError unless `modulus` is a prime below 2^32.
  static void require_prime(std::uint64_t modulus);

  std::uint64_t modulus() const { return p_; }
  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp lift(const mpz_class& c) const;
  Fp inverse() const;
  Fp pow(std::int64_t e) const;

  friend Fp operator+(const Fp& a, const Fp& b);
  friend Fp operator-(const Fp& a, const Fp& b);
  friend Fp operator*(const Fp& a, const Fp& b);
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return Fp(p_, 0) - *this; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.p_ == b.p_ && a.v_ == b.v_; }
  friend bool operator<(const Fp& a, const Fp& b) { return a.v_ < b.v_; }

  std::string to_string() const { return std::to_string(v_); }

 private:
  static void check_same(const Fp& a, const Fp& b);

  std::uint64_t p_ = 2;
  std::uint64_t v_ = 0;
};

}  // namespace heckelab
