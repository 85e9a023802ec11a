#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "heckelab/errors.hpp"

namespace heckelab {

/// Finite field GF(p^k), Q = p^k <= 65536, elements encoded as 0..Q-1
/// (base-p digits of the residue polynomial). 0 and 1 encode zero and one.
class GaloisField {
 public:
  using Elem = std::uint32_t;

  GaloisField(unsigned p, unsigned k);
  /// GF(Q) for a prime power Q.
  static std::shared_ptr<const GaloisField> of_order(unsigned Q);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  unsigned order() const { return Q_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (Q_ - 1)];
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  /// a^(p^j).
  Elem frobenius(Elem a, unsigned j) const;
  /// A generator of the multiplicative group.
  Elem generator() const { return exp_[1 % (Q_ - 1)]; }
  /// Image of an integer under Z -> GF(p) ⊆ GF(Q).
  Elem from_int(long n) const;

 private:
  unsigned p_;
  unsigned k_;
  unsigned Q_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> add_table_;
  std::vector<Elem> neg_table_;
};

/// Prime power decomposition; throws DomainError unless n = p^f with f >= 1.
struct PrimePower {
  unsigned p;
  unsigned f;
};
PrimePower prime_power(unsigned n);

using FMatrix = std::vector<std::vector<GaloisField::Elem>>;

/// Dense linear algebra over a GaloisField.
class LinAlg {
 public:
  explicit LinAlg(const GaloisField& F) : F_(F) {}

  /// In-place reduced row echelon form; returns pivot columns, drops zero rows.
  std::vector<int> rref(FMatrix& M) const;
  int rank(FMatrix M) const;
  /// Basis of {x : M x = 0} for an r x n matrix M, as rows; `ncols` covers M with no rows.
  FMatrix nullspace(FMatrix M, std::size_t ncols) const;
  /// Row space of `sub` inside row space of `space`.
  bool contains(const FMatrix& space, const FMatrix& sub) const;
  /// Canonical basis (RREF) of the sum.
  FMatrix sum(const FMatrix& a, const FMatrix& b) const;
  /// Canonical basis of the intersection of two row spaces in F^n.
  FMatrix intersection(const FMatrix& a, const FMatrix& b, std::size_t n) const;
  /// Apply a field map entrywise.
  template <class Fn>
  FMatrix map(const FMatrix& M, Fn&& fn) const {
    FMatrix out = M;
    for (auto& row : out) {
      for (auto& x : row) x = fn(x);
    }
    return out;
  }
  FMatrix multiply(const FMatrix& A, const FMatrix& B) const;
  FMatrix transpose(const FMatrix& A) const;

  /// Every k-dimensional subspace of F^n in RREF; throws ResourceError beyond `budget`.
  std::vector<FMatrix> subspaces(std::size_t n, std::size_t k, std::uint64_t budget) const;
  /// Gaussian binomial [n choose k]_Q as a saturating 64-bit count.
  static std::uint64_t grassmannian_size(unsigned Q, unsigned n, unsigned k);

  const GaloisField& field() const { return F_; }

 private:
  const GaloisField& F_;
};

}  // namespace heckelab
