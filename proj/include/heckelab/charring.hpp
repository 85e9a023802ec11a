#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "heckelab/laurent.hpp"
#include "heckelab/sparse_poly.hpp"

namespace heckelab {

/// Element of Z[q^±1][m_1..m_r] (optionally ⊗ Z[λ^±1]).
///
/// m_i stands for y_i + y_i^{-1} with independent y_i, so the m_i are free
/// commuting indeterminates. Symmetry under permutations of the m_i is not
/// enforced; `is_symmetric()` checks it on demand.
class SymLaurent {
 public:
  using Poly = SparsePoly<LaurentPoly>;

  explicit SymLaurent(int rank = 0, bool with_lambda = false);
  SymLaurent(int rank, bool with_lambda, Poly poly);

  static SymLaurent constant(int rank, const LaurentPoly& c, bool with_lambda = false);
  /// m_{i+1} (0-based index i).
  static SymLaurent m(int rank, int i, bool with_lambda = false);
  /// A pure Laurent polynomial in λ (the LaurentPoly indeterminate read as λ).
  static SymLaurent lambda_poly(int rank, const LaurentPoly& in_lambda);

  int rank() const { return rank_; }
  bool with_lambda() const { return with_lambda_; }
  const Poly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  /// The same element viewed inside the ring with λ adjoined.
  SymLaurent lifted_to_lambda() const;

  SymLaurent& operator+=(const SymLaurent& rhs);
  SymLaurent& operator-=(const SymLaurent& rhs);
  friend SymLaurent operator+(SymLaurent a, const SymLaurent& b) { return a += b; }
  friend SymLaurent operator-(SymLaurent a, const SymLaurent& b) { return a -= b; }
  friend SymLaurent operator*(const SymLaurent& a, const SymLaurent& b);
  friend SymLaurent operator*(const LaurentPoly& c, const SymLaurent& a);
  SymLaurent operator-() const;
  friend bool operator==(const SymLaurent& a, const SymLaurent& b);

  /// Invariant under every adjacent transposition of m_1..m_r.
  bool is_symmetric() const;

  std::string to_string() const;

 private:
  void check_compatible(const SymLaurent& other) const;

  int rank_;
  bool with_lambda_;
  Poly poly_;
};

/// Laurent polynomial in y_1..y_r with Z[q^±1] coefficients; the intermediate
/// home of the weights μ_i - μ_{N+1-i} before rewriting into m-variables.
class InversionLaurent {
 public:
  using Poly = SparsePoly<LaurentPoly>;

  explicit InversionLaurent(int rank = 0) : rank_(rank), poly_(static_cast<std::size_t>(rank)) {}
  InversionLaurent(int rank, Poly poly);

  static InversionLaurent y_power(int rank, int i, int k);

  int rank() const { return rank_; }
  const Poly& poly() const { return poly_; }

  /// Substitute m_i -> y_i + y_i^{-1}.
  static InversionLaurent expand(const SymLaurent& f);

 private:
  int rank_;
  Poly poly_;
};

/// Rewrite an element invariant under every y_i -> y_i^{-1} into m-variables via
/// y^k + y^{-k} = P_k(y + y^{-1}). Throws InvariantViolation otherwise.
SymLaurent reduce_to_m(const InversionLaurent& f);

/// 𝔰_δ: elementary symmetric polynomial of degree δ in m_1..m_r.
SymLaurent elem_sym(int r, int delta);

/// Coefficients c_j of χ(ρ_{N;δ}) = Σ_j c_j 𝔰_j from the closed form
/// (index j = 0..r).
std::vector<mpz_class> character_coefficients(int N, int delta);
/// Closed-form character of ρ_{N;δ} restricted to T_N·σ.
SymLaurent character(int N, int delta);
/// Oracle: Σ_{|I|=δ} Π_{i∈I} μ_i μ_{N+1-i}^{-1} summed over subsets, then
/// rewritten into m-variables. N <= 12.
SymLaurent character_bruteforce(int N, int delta);

/// Express a symmetric element (no λ) in the elementary basis: the result is a
/// polynomial in variables s_1..s_r standing for 𝔰_1..𝔰_r.
SparsePoly<LaurentPoly> to_elementary_basis(const SymLaurent& f);
/// Inverse of to_elementary_basis.
SymLaurent from_elementary_basis(int r, const SparsePoly<LaurentPoly>& g);

enum class LambdaIdentity { even_sum, even_derivative, odd, odd_binomial };

LambdaIdentity parse_lambda_identity(std::string_view name);
std::string_view to_string(LambdaIdentity which);

/// LHS - RHS of a λ-identity in Z[X]^sym ⊗ Z[λ^±1]; zero when it holds.
/// `n` is the rank N (even_sum/even_derivative need N even, odd needs N odd)
/// and is the exponent k for odd_binomial.
SymLaurent check_lambda_identity(int n, LambdaIdentity which);

}  // namespace heckelab
