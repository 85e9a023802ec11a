#include "heckelab/qcalc.hpp"

#include <array>
#include <map>
#include <mutex>
#include <tuple>

namespace heckelab {

QBase QBase::integer(long b) {
  if (b == 1) throw DomainError("q-analogue base must differ from 1");
  return QBase(LaurentPoly(b), std::to_string(b));
}

LaurentPoly q_integer(int n, const QBase& base) {
  if (n < 0) throw DomainError("q_integer requires n >= 0");
  if (n == 0) return LaurentPoly(1);
  LaurentPoly acc;
  LaurentPoly power(1);
  for (int i = 0; i < n; ++i) {
    acc += power;
    power *= base.value();
  }
  return acc;
}

LaurentPoly q_factorial(int n, const QBase& base) {
  if (n < 0) throw DomainError("q_factorial requires n >= 0");
  LaurentPoly acc(1);
  for (int k = 1; k <= n; ++k) acc *= q_integer(k, base);
  return acc;
}

LaurentPoly q_binomial(int n, int m, const QBase& base) {
  if (m < 0 || m > n) {
    throw DomainError("q_binomial requires 0 <= m <= n (got n=" + std::to_string(n) +
                      ", m=" + std::to_string(m) + ")");
  }
  // Values are reused heavily by the identity checks; memoize per base.
  static std::mutex mutex;
  static std::map<std::tuple<std::string, int, int>, LaurentPoly> cache;
  const auto key = std::make_tuple(base.name(), n, m);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const LaurentPoly numerator = q_factorial(n, base);
  const LaurentPoly denominator = q_factorial(n - m, base) * q_factorial(m, base);
  LaurentPoly value = LaurentPoly::divide_exact(numerator, denominator, "q_binomial");
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(key, value);
  return value;
}

LaurentPoly minus_q_power(int k) {
  return LaurentPoly::monomial((k % 2 == 0) ? 1 : -1, k);
}

LaurentPoly d_number(int r) {
  if (r < 0) throw DomainError("d_number requires r >= 0");
  const QBase mq = QBase::minus_q();
  LaurentPoly acc;
  for (int delta = 0; delta <= r; ++delta) {
    const long sign = (delta % 2 == 0) ? 1 : -1;
    acc += LaurentPoly::monomial(sign * (2 * delta + 1), delta * (delta + 1)) *
           q_binomial(2 * r + 1, r - delta, mq);
  }
  return acc;
}

LaurentPoly d_bullet_number(int r) {
  if (r < 1) throw DomainError("d_bullet_number requires r >= 1");
  const LaurentPoly q_plus_1 = LaurentPoly::var() + LaurentPoly(1);
  const LaurentPoly inner = LaurentPoly::divide_exact(minus_q_power(r + 1) - LaurentPoly(1), q_plus_1,
                                                      "d_bullet_number (inner)");
  return LaurentPoly::divide_exact(d_number(r) + inner * odd_product(r, Parity::even), q_plus_1,
                                   "d_bullet_number (outer)");
}

LaurentPoly d_bullet_bridge_discrepancy(int r) {
  const LaurentPoly q_plus_1 = LaurentPoly::var() + LaurentPoly(1);
  const LaurentPoly rhs = LaurentPoly::divide_exact(minus_q_power(r + 1) - LaurentPoly(1), q_plus_1, "bridge") *
                          odd_product(r, Parity::even);
  return q_plus_1 * d_bullet_number(r) - d_number(r) - rhs;
}

LaurentPoly odd_product(int r, Parity variant) {
  if (r < 0) throw DomainError("odd_product requires r >= 0");
  LaurentPoly acc(1);
  for (int i = 1; i <= r; ++i) {
    const int e = (variant == Parity::even) ? 2 * i - 1 : 2 * i + 1;
    acc *= LaurentPoly::monomial(1, e) + LaurentPoly(1);
  }
  return acc;
}

QIdentity parse_q_identity(std::string_view name) {
  if (name == "gauss") return QIdentity::gauss;
  if (name == "weighted") return QIdentity::weighted;
  if (name == "signed") return QIdentity::signed_sum;
  if (name == "odd_chain") return QIdentity::odd_chain;
  throw DomainError("unknown q-identity '" + std::string(name) + "'");
}

std::string_view to_string(QIdentity which) {
  switch (which) {
    case QIdentity::gauss:
      return "gauss";
    case QIdentity::weighted:
      return "weighted";
    case QIdentity::signed_sum:
      return "signed";
    case QIdentity::odd_chain:
      return "odd_chain";
  }
  return "?";
}

namespace {

// sum_{δ=lo}^{hi} sign(δ) * weight(δ) * q^{exp(δ)} * [n choose k-δ]_{-q}
template <class Coeff>
LaurentPoly binomial_sum(int n, int k, int lo, int hi, Coeff&& coeff) {
  const QBase mq = QBase::minus_q();
  LaurentPoly acc;
  for (int delta = lo; delta <= hi; ++delta) {
    acc += coeff(delta) * q_binomial(n, k - delta, mq);
  }
  return acc;
}

long alternating(int delta) { return (delta % 2 == 0) ? 1 : -1; }

LaurentPoly gauss_lhs(int k) {
  return binomial_sum(2 * k, k, -k, k, [](int d) { return q_power(d * d); });
}

LaurentPoly weighted_lhs(int k) {
  auto weight = [](int d) { return LaurentPoly::monomial(alternating(d) * d, d * d + d); };
  return binomial_sum(2 * k + 1, k, -k - 1, k, weight) - binomial_sum(2 * k, k, -k, k, weight);
}

LaurentPoly signed_lhs(int k) {
  return binomial_sum(2 * k, k, -k, k,
                      [](int d) { return LaurentPoly::monomial(alternating(d), d * d + d); });
}

// sum_δ d_δ q^{(k-δ)²} [k δ]_{q²}
//   = q^{k(k+2)} + sum_{δ=1}^{k} ((q+1) d_δ + (-q)^{δ+1} prod_{i≤δ}(q^{2i-1}+1)) q^{(k-δ)(k-δ+2)} [k δ]_{q²}
LaurentPoly odd_chain_discrepancy(int k) {
  const QBase q2 = QBase::q_squared();
  const LaurentPoly q_plus_1 = LaurentPoly::var() + LaurentPoly(1);
  LaurentPoly lhs;
  for (int delta = 0; delta <= k; ++delta) {
    lhs += d_number(delta) * q_power((k - delta) * (k - delta)) * q_binomial(k, delta, q2);
  }
  LaurentPoly rhs = q_power(k * (k + 2));
  for (int delta = 1; delta <= k; ++delta) {
    const LaurentPoly c = q_plus_1 * d_number(delta) + minus_q_power(delta + 1) * odd_product(delta, Parity::even);
    rhs += c * q_power((k - delta) * (k - delta + 2)) * q_binomial(k, delta, q2);
  }
  return lhs - rhs;
}

}  // namespace

LaurentPoly check_q_identity(QIdentity which, int k) {
  if (k < 1) throw DomainError("check_q_identity requires k >= 1");
  const LaurentPoly product = odd_product(k, Parity::even);
  switch (which) {
    case QIdentity::gauss:
      return gauss_lhs(k) - product;
    case QIdentity::weighted:
    case QIdentity::signed_sum: {
      const LaurentPoly lhs = which == QIdentity::weighted ? weighted_lhs(k) : signed_lhs(k);
      return lhs - minus_q_power(k) * product;
    }
    case QIdentity::odd_chain:
      return odd_chain_discrepancy(k);
  }
  throw DomainError("unknown q-identity");
}

}  // namespace heckelab
