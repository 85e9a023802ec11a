#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heckelab/errors.hpp"

namespace heckelab {

/// Exact Laurent polynomial in one indeterminate over arbitrary-precision
/// integers.
///
/// Stored sparsely as exponent -> coefficient with no zero coefficients, so
/// equality is map equality. Exponents are machine integers; coefficients are
/// GMP integers.
class LaurentPoly {
 public:
  using Terms = std::map<int, mpz_class>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const mpz_class& constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const mpz_class& coeff, int exponent);
  /// The indeterminate itself.
  static LaurentPoly var() { return monomial(1, 1); }
  static LaurentPoly from_terms(const std::vector<std::pair<int, long>>& terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  mpz_class coeff(int exponent) const;
  int min_degree() const;  // requires nonzero
  int max_degree() const;  // requires nonzero

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  LaurentPoly pow(unsigned n) const;
  /// Multiply by var^k.
  LaurentPoly shifted(int k) const;
  /// p(x) -> p(c * x^k) for c in {1,-1}; used for the bases -q and q^2.
  LaurentPoly substitute(int sign, int k) const;

  /// Exact quotient a / b in Z[x, x^-1], or nullopt if b does not divide a.
  static std::optional<LaurentPoly> try_divide(const LaurentPoly& a, const LaurentPoly& b);
  /// Exact quotient; throws InvariantViolation when the division leaves a remainder.
  static LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b, const char* what);

  /// Evaluate at an integer; throws DomainError for x = 0 with negative exponents.
  mpq_class evaluate(const mpz_class& x) const;
  /// Evaluate at an integer when the result is known to be integral.
  mpz_class evaluate_integral(const mpz_class& x) const;

  /// Evaluate in a field element type. Scalar must provide +, *, inverse() and
  /// lift(mpz_class) mapping an integer into the same field as `one`.
  template <class Scalar>
  Scalar evaluate_in(const Scalar& x, const Scalar& one) const {
    Scalar result = one - one;
    if (terms_.empty()) return result;
    std::optional<Scalar> inv;
    for (const auto& [e, c] : terms_) {
      Scalar term = one.lift(c);
      if (e >= 0) {
        term = term * power(x, static_cast<unsigned>(e), one);
      } else {
        if (!inv) inv = x.inverse();
        term = term * power(*inv, static_cast<unsigned>(-e), one);
      }
      result = result + term;
    }
    return result;
  }

  /// Human-readable form with unicode superscripts and minus, descending
  /// degree: "−2q²−q+1".
  std::string to_pretty(const std::string& var = "q") const;
  /// ASCII form: "-2*q^2-q+1".
  std::string to_ascii(const std::string& var = "q") const;
  /// Sorted (exponent, coefficient) pairs; coefficients as decimal strings
  /// when they exceed 64 bits.
  std::vector<std::pair<int, mpz_class>> term_list() const;

 private:
  template <class Scalar>
  static Scalar power(Scalar base, unsigned n, const Scalar& one) {
    Scalar acc = one;
    while (n > 0) {
      if (n & 1U) acc = acc * base;
      base = base * base;
      n >>= 1U;
    }
    return acc;
  }
  void prune(int exponent);

  Terms terms_;
};

}  // namespace heckelab
