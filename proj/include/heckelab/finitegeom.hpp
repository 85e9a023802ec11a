#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "heckelab/gf.hpp"

namespace heckelab {

inline constexpr std::uint64_t kDefaultBudget = 20'000'000;

/// F_{q²} with conjugation x ↦ x^q.
class Fq2 {
 public:
  explicit Fq2(unsigned q);

  unsigned q() const { return q_; }
  const GaloisField& field() const { return *field_; }
  std::shared_ptr<const GaloisField> field_ptr() const { return field_; }
  GaloisField::Elem conj(GaloisField::Elem x) const { return field_->pow(x, q_); }

 private:
  unsigned q_;
  std::shared_ptr<const GaloisField> field_;
};

/// F_{q²}^N with (x, y) = Σ x_i G_ij conj(y_j).
class HermSpace {
 public:
  /// Antidiagonal Gram.
  HermSpace(unsigned q, int N);
  /// Throws DomainError unless conj(G)ᵀ = G and G is invertible.
  HermSpace(unsigned q, FMatrix gram);

  unsigned q() const { return fq2_.q(); }
  int N() const { return N_; }
  const Fq2& fq2() const { return fq2_; }
  const FMatrix& gram() const { return gram_; }
  GaloisField::Elem pair(const std::vector<GaloisField::Elem>& x, const std::vector<GaloisField::Elem>& y) const;

 private:
  Fq2 fq2_;
  int N_;
  FMatrix gram_;
};

/// Totally isotropic subspaces of dimension `dim`, RREF, in lexicographic pivot order.
std::vector<FMatrix> enumerate_isotropic(const HermSpace& space, int dim, std::uint64_t budget = kDefaultBudget);
std::uint64_t count_max_isotropic(unsigned q, int N, std::uint64_t budget = kDefaultBudget);
/// Maximal isotropic Y with dim(Y ∩ Y₀) = r − s, Y₀ spanned by the first r basis vectors.
std::uint64_t count_meeting(unsigned q, int N, int s, std::uint64_t budget = kDefaultBudget);
/// Π(q^{2i−1}+1) or Π(q^{2i+1}+1) at the integer q.
mpz_class max_isotropic_closed_form(unsigned q, int N);
/// q^{s²}[r,s]_{q²} (N even) or q^{s(s+2)}[r,s]_{q²} (N odd).
mpz_class meeting_closed_form(unsigned q, int N, int s);

/// {x, y} = σ(x)ᵀ J′ y over F_{q^{2e}}, J′ antidiagonal ε on the leading N−d block.
class SemilinearPair {
 public:
  /// d = dim of the radical; asserts σ(J′)ᵀ = −J′.
  SemilinearPair(unsigned q, int N, int d = 0);

  unsigned q() const { return q_; }
  int N() const { return N_; }
  int radical_dim() const { return d_; }
  /// ε ∈ F_{q²} with ε^q = −ε, as an element of GF(q^{2e}).
  GaloisField::Elem epsilon(const GaloisField& ext) const;
  /// J′ over GF(q^{2e}); throws InvariantViolation if not admissible.
  FMatrix gram(const GaloisField& ext) const;

 private:
  unsigned q_;
  int N_;
  int d_;
};

/// h-dimensional H over F_{q^{2e}} with H^⊣ ⊆ H.
std::uint64_t dl_points(const SemilinearPair& pair, int h, int e, std::uint64_t budget = kDefaultBudget);
/// Flags V^⊣ ⊆ H₂ ⊆ H₁ ⊆ H₂^⊣ with H₂ ⊆ H₁^⊣ ⊆ H₂^⊣, rank H₁ = ⌈N/2⌉.
std::uint64_t dl_bullet_points(const SemilinearPair& pair, int e, std::uint64_t budget = kDefaultBudget);

// ---------------------------------------------------------------------------
// Lattice windows

enum class LatticeType { circ, bullet, other };
std::string to_string(LatticeType t);

/// A lattice L with ϖ^{m/2}Λ° ⊆ L ⊆ ϖ^{−m/2}Λ°, stored as the F_{q²}-subspace
/// L/ϖ^{m/2}Λ° ⊆ R_m^N in RREF. Coordinate (i, j) = coefficient of π^j on e_i
/// sits at index i·m + j and stands for ϖ^{j−m/2}e_i.
struct WindowLattice {
  int N = 0;
  int m = 2;
  FMatrix basis;

  int length() const { return static_cast<int>(basis.size()); }
  friend bool operator==(const WindowLattice& a, const WindowLattice& b) {
    return a.N == b.N && a.m == b.m && a.basis == b.basis;
  }
  friend bool operator<(const WindowLattice& a, const WindowLattice& b) { return a.basis < b.basis; }
};

/// The chain ring R_m = F_{q²}[π]/(π^m), π fixed by conjugation, acting on windows.
class WindowModel {
 public:
  WindowModel(unsigned q, int N, int m = 2);

  unsigned q() const { return fq2_.q(); }
  int N() const { return N_; }
  int m() const { return m_; }
  const Fq2& fq2() const { return fq2_; }
  std::size_t dim() const { return static_cast<std::size_t>(N_ * m_); }

  WindowLattice from_generators(FMatrix rows) const;
  /// ϖ^k Λ°, |k| <= m/2.
  WindowLattice scaled_standard(int k) const;
  WindowLattice standard() const { return scaled_standard(0); }
  /// ϖ^{−1} on e_0..e_{r−1}, O elsewhere.
  WindowLattice standard_bullet() const;

  WindowLattice dual(const WindowLattice& L) const;
  /// ϖL + ϖ^{m/2}Λ°.
  WindowLattice times_pi(const WindowLattice& L) const;
  /// ϖ^{−1}L ∩ ϖ^{−m/2}Λ°.
  WindowLattice pi_inverse(const WindowLattice& L) const;
  WindowLattice sum(const WindowLattice& a, const WindowLattice& b) const;
  WindowLattice intersection(const WindowLattice& a, const WindowLattice& b) const;
  bool contains(const WindowLattice& big, const WindowLattice& small) const;
  bool is_pi_stable(const WindowLattice& L) const;
  LatticeType classify(const WindowLattice& L) const;
  /// Elementary divisors of L relative to Λ°, shifted into [0, m] (m = absent summand).
  std::vector<int> smith_exponents(const WindowLattice& L) const;
  /// Sum of the lengths of L1/(L1∩L2) and L2/(L1∩L2).
  int disc(const WindowLattice& a, const WindowLattice& b) const;

  /// The same lattice in a wider window of `target`.
  WindowLattice embed(const WindowLattice& L, const WindowModel& target) const;

  /// Lattices X with low ⊆ X ⊆ high and length(X/low) = k, where ϖ·high ⊆ low.
  std::vector<WindowLattice> between(const WindowLattice& low, const WindowLattice& high, int k,
                                     std::uint64_t budget = kDefaultBudget) const;

 private:
  void check(const WindowLattice& L) const;

  Fq2 fq2_;
  int N_;
  int m_;
  LinAlg la_;
};

/// Every lattice of the m = 2 window, sorted by normal form.
std::vector<WindowLattice> enumerate_window(unsigned q, int N, std::uint64_t budget = 2'000'000);

/// Bullet Λ with L1, L2 ⊆ Λ ⊆ ϖ^{−1}L1 ∩ ϖ^{−1}L2 for circ L1, L2 of the m = 2 window.
std::uint64_t count_bullet_between(const WindowModel& model, const WindowLattice& L1, const WindowLattice& L2);
/// The same count by filtering an enumerated m = 2 window; valid when L1 ⊆ Λ° or L2 ⊆ Λ°.
std::uint64_t count_bullet_between_filtered(const WindowModel& model, const std::vector<WindowLattice>& window,
                                            const WindowLattice& L1, const WindowLattice& L2);
/// c_{N,δ} = Π_{i=1}^{r−δ}(q^{2i∓1}+1) at the integer q.
mpz_class bullet_between_closed_form(unsigned q, int N, int delta);

struct MixedCounts {
  std::uint64_t c_bullet = 0;
  std::uint64_t c_circ = 0;
  /// Circ lattices with the requested γ that were examined.
  std::uint64_t lattices = 0;
  /// All examined lattices gave the same pair.
  bool uniform = true;
};

/// For circ L with (L+Λ•)/Λ• ≅ κ^γ: bullet L• ⊇ L with (L•+Λ•)/Λ• ≅ κ^δ, and
/// circ L° ⊆ Λ• with L/(L∩L°) ≅ κ^δ. Runs over every such L in the m = 2 window.
MixedCounts mixed_counts(unsigned q, int N, int delta, int gamma);
/// q^{(δ−γ)(δ−γ+2)}[r−γ, δ−γ]_{q²} and q^{(δ−γ)²}[r−γ, δ−γ]_{q²}; zero unless γ <= δ.
std::pair<mpz_class, mpz_class> mixed_closed_form(unsigned q, int N, int delta, int gamma);

struct CensusRow {
  unsigned q;
  int N;
  std::string parameter;
  mpz_class count;
  std::string closed_form;
  bool match;
};

std::string census_csv(const std::vector<CensusRow>& rows);

}  // namespace heckelab
