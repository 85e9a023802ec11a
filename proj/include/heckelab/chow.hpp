#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "heckelab/errors.hpp"

namespace heckelab {

/// Element of CH*(P^m) = Z[η]/(η^{m+1}).
class ChowClass {
 public:
  explicit ChowClass(int ambient_dim);
  ChowClass(int ambient_dim, std::vector<mpz_class> coeffs);

  static ChowClass one(int ambient_dim);
  /// 1 + kη.
  static ChowClass linear(int ambient_dim, const mpz_class& k);

  int ambient_dim() const { return m_; }
  const mpz_class& coeff(int j) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }
  /// Coefficient of η^m.
  const mpz_class& integrate() const { return c_.back(); }

  ChowClass& operator+=(const ChowClass& rhs);
  ChowClass& operator-=(const ChowClass& rhs);
  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
  friend bool operator==(const ChowClass& a, const ChowClass& b) { return a.m_ == b.m_ && a.c_ == b.c_; }

  /// Multiplicative inverse; needs constant term ±1.
  ChowClass inverse() const;
  ChowClass pow(int e) const;
  /// "1 - η + η^2".
  std::string to_string() const;

 private:
  void check_same(const ChowClass& other) const;

  int m_;
  std::vector<mpz_class> c_;
};

/// Rank and total Chern class of a vector bundle on P^m.
class BundleClass {
 public:
  /// Throws InvariantViolation unless c_0 = 1 and c_j = 0 for j > rank.
  BundleClass(int rank, ChowClass total);

  static BundleClass trivial(int ambient_dim, int rank);
  /// O(k).
  static BundleClass line(int ambient_dim, const mpz_class& k);

  int rank() const { return rank_; }
  int ambient_dim() const { return total_.ambient_dim(); }
  const ChowClass& total() const { return total_; }
  const mpz_class& c(int j) const;

  /// E ⊕ F.
  friend BundleClass operator+(const BundleClass& a, const BundleClass& b);
  friend bool operator==(const BundleClass& a, const BundleClass& b) {
    return a.rank_ == b.rank_ && a.total_ == b.total_;
  }

 private:
  int rank_;
  ChowClass total_;
};

/// Kernel of O^{⊕n} → O(1) on P^{n−1}: rank n−1, class (1+η)^{−1}.
BundleClass tautological_sub(int n);
/// E ⊗ O(k).
BundleClass twist(const BundleClass& E, const mpz_class& k);
/// Pullback along the p-power Frobenius: c_i ↦ p^i c_i.
BundleClass frobenius(const BundleClass& E, const mpz_class& p);
/// S for 0 → S → E → Q → 0 given E and Q.
BundleClass kernel_of(const BundleClass& middle, const BundleClass& quotient);
/// c(sub)·c(quotient) = c(middle) and the ranks add up.
bool whitney_holds(const BundleClass& sub, const BundleClass& middle, const BundleClass& quotient);

enum class ExcessIntegral { I1, I2, I3 };

ExcessIntegral parse_excess_integral(std::string_view name);
std::string_view to_string(ExcessIntegral which);

/// (computed, expected). I1, I2 take r >= 1 on P^{r−1}; I3 takes d >= 0 on P^d.
std::pair<mpz_class, mpz_class> check_excess_integral(ExcessIntegral which, int n, const mpz_class& p);

}  // namespace heckelab
