#pragma once

#include <gmpxx.h>

#include <vector>

// Independent reference values. Nothing here calls into heckelab.
namespace oracle {

// [n choose m]_b at a rational point b != 1, by the product formula.
inline mpq_class gaussian_binomial_at(int n, int m, const mpq_class& b) {
  mpq_class acc = 1;
  for (int i = 0; i < m; ++i) {
    mpq_class num = 1, den = 1;
    for (int k = 0; k < n - i; ++k) num *= b;
    for (int k = 0; k < i + 1; ++k) den *= b;
    acc *= (num - 1) / (den - 1);
  }
  acc.canonicalize();
  return acc;
}

inline mpq_class power(const mpq_class& x, int e) {
  mpq_class acc = 1;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) acc *= x;
  return e < 0 ? mpq_class(1 / acc) : acc;
}

// d_{r,q} at an integer point through the rational product formula.
inline mpq_class d_number_at(int r, long t) {
  const mpq_class q(t);
  mpq_class acc = 0;
  for (int d = 0; d <= r; ++d) {
    const long sign = d % 2 == 0 ? 1 : -1;
    acc += sign * (2 * d + 1) * power(q, d * (d + 1)) * gaussian_binomial_at(2 * r + 1, r - d, -q);
  }
  return acc;
}

// Coefficients (lowest degree first) frozen from an independent computer-algebra expansion.
inline const std::vector<std::vector<long>>& d_number_table() {
  static const std::vector<std::vector<long>> table{
      {1},
      {1, -1, -2},
      {1, -1, -1, 1, -1, 2, 3},
      {1, -1, -1, 0, -2, 2, 1, 0, 0, -2, 1, -3, -4},
  };
  return table;
}

inline const std::vector<std::vector<long>>& d_bullet_table() {
  static const std::vector<std::vector<long>> table{
      {},
      {0, -1},
      {0, -1, 0, -1, 0, 2},
      {0, -1, 0, -1, 0, 1, 0, 1, -2, 1, 0, -3},
  };
  return table;
}

long ordinary_binomial(int n, int k);

// [n choose m]_{-1}: zero when n is even and m odd, otherwise binom(n div 2, m div 2).
inline long gaussian_binomial_at_minus_one(int n, int m) {
  if (n % 2 == 0 && m % 2 == 1) return 0;
  return ordinary_binomial(n / 2, m / 2);
}

inline long ordinary_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long acc = 1;
  for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

// Π_{i=1}^{r}(q^{2i-1}+1) for N = 2r, Π_{i=1}^{r}(q^{2i+1}+1) for N = 2r+1.
inline mpz_class odd_product_at(int r, bool odd, long q) {
  mpz_class acc = 1;
  for (int i = 1; i <= r; ++i) {
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(odd ? 2 * i + 1 : 2 * i - 1));
    acc *= t + 1;
  }
  return acc;
}

inline mpz_class max_isotropic_at(int N, long q) { return odd_product_at(N / 2, N % 2 == 1, q); }

inline mpz_class meeting_at(int N, int s, long q) {
  const int r = N / 2;
  const int e = N % 2 == 0 ? s * s : s * (s + 2);
  const mpq_class v = power(mpq_class(q), e) * gaussian_binomial_at(r, s, mpq_class(q * q));
  return v.get_num();
}

}  // namespace oracle
