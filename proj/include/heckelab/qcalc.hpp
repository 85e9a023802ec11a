#pragma once

#include <string>
#include <string_view>

#include "heckelab/laurent.hpp"

namespace heckelab {

/// Base of a q-analogue. Only q, -q, q^2 and integer specializations occur.
class QBase {
 public:
  static QBase q() { return QBase(LaurentPoly::var(), "q"); }
  static QBase minus_q() { return QBase(-LaurentPoly::var(), "-q"); }
  static QBase q_squared() { return QBase(LaurentPoly::monomial(1, 2), "q^2"); }
  /// Integer base b with b != 1.
  static QBase integer(long b);

  const LaurentPoly& value() const { return value_; }
  const std::string& name() const { return name_; }

 private:
  QBase(LaurentPoly value, std::string name) : value_(std::move(value)), name_(std::move(name)) {}

  LaurentPoly value_;
  std::string name_;
};

/// [n]_b = 1 + b + ... + b^{n-1}; [0]_b = 1 (see README, "conventions").
LaurentPoly q_integer(int n, const QBase& base);
/// [n]_b! with the empty product equal to 1.
LaurentPoly q_factorial(int n, const QBase& base);
/// Gaussian binomial [n choose m]_b by exact division of factorials.
LaurentPoly q_binomial(int n, int m, const QBase& base);

/// d_{r,q} = sum_{δ=0}^{r} (-1)^δ (2δ+1) q^{δ(δ+1)} [2r+1 choose r-δ]_{-q}.
LaurentPoly d_number(int r);
/// d•_{r,q} = (d_{r,q} + ((-q)^{r+1}-1)/(q+1) * prod_{i=1}^r (q^{2i-1}+1)) / (q+1).
LaurentPoly d_bullet_number(int r);

/// (q+1)d•_{r,q} − d_{r,q} − ((−q)^{r+1}−1)/(q+1)·Π(q^{2i−1}+1); zero when d• is consistent.
LaurentPoly d_bullet_bridge_discrepancy(int r);

enum class Parity { even, odd };

/// prod_{i=1}^{r} (q^{2i-1}+1) for `even`, prod_{i=1}^{r} (q^{2i+1}+1) for `odd`.
LaurentPoly odd_product(int r, Parity variant);

/// (-q)^k as a Laurent polynomial.
LaurentPoly minus_q_power(int k);
/// q^k.
inline LaurentPoly q_power(int k) { return LaurentPoly::monomial(1, k); }

enum class QIdentity { gauss, weighted, signed_sum, odd_chain };

QIdentity parse_q_identity(std::string_view name);
std::string_view to_string(QIdentity which);

/// LHS - RHS of one of the four q-binomial identities at parameter k >= 1;
/// the identity holds iff the result is zero.
///  gauss:     sum_{δ=-k}^{k} q^{δ²} [2k choose k-δ]_{-q} - prod (q^{2i-1}+1)
///  weighted:  the two-sum identity with weights (-1)^δ δ q^{δ²+δ}
///  signed:    sum_{δ=-k}^{k} (-1)^δ q^{δ²+δ} [2k choose k-δ]_{-q} - (-q)^k prod
///  odd_chain: the q^2-binomial chain identity relating d-numbers across ranks
LaurentPoly check_q_identity(QIdentity which, int k);

}  // namespace heckelab
