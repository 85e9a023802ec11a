#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "heckelab/charring.hpp"
#include "heckelab/field.hpp"
#include "heckelab/laurent.hpp"
#include "heckelab/qcalc.hpp"

namespace heckelab {

enum class Flavor { circ, bullet };

/// Σ_δ c_δ T_{N;δ} over Z[q^±1], 0 <= δ <= ⌊N/2⌋.
class HeckeElement {
 public:
  HeckeElement(int N, Flavor flavor);

  static HeckeElement basis(int N, int delta, Flavor flavor = Flavor::circ);
  static HeckeElement unit(int N, Flavor flavor = Flavor::circ) { return basis(N, 0, flavor); }

  int N() const { return N_; }
  int rank() const { return N_ / 2; }
  Flavor flavor() const { return flavor_; }
  const LaurentPoly& coeff(int delta) const;
  void set_coeff(int delta, LaurentPoly c);
  const std::vector<LaurentPoly>& coeffs() const { return coeffs_; }

  HeckeElement& operator+=(const HeckeElement& rhs);
  HeckeElement& operator-=(const HeckeElement& rhs);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentPoly& c, HeckeElement e);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b);

  /// "T1 + (q³+1)·T0"; highest δ first, zero terms omitted.
  std::string to_string() const;

 private:
  void check_compatible(const HeckeElement& other) const;

  int N_;
  Flavor flavor_;
  std::vector<LaurentPoly> coeffs_;
};

/// M[δ][i] = [N−2i choose δ−i]_{−q}, lower unitriangular.
class SatakeMatrix {
 public:
  explicit SatakeMatrix(int N);

  int N() const { return N_; }
  int size() const { return static_cast<int>(entries_.size()); }
  /// Zero above the diagonal.
  LaurentPoly entry(int delta, int i) const;
  bool is_lower_unitriangular() const;

 private:
  int N_;
  std::vector<std::vector<LaurentPoly>> entries_;
};

/// Sat(T_{N;δ}) as coordinates in the 𝔰-basis: entry j multiplies 𝔰_j.
const std::vector<std::vector<LaurentPoly>>& satake_basis_images(int N);
/// Sat(e) in 𝔰-coordinates.
std::vector<LaurentPoly> satake_transform_elementary(const HeckeElement& e);
/// Sat(e) in m-variables.
SymLaurent satake_transform(const HeckeElement& e);

enum class NamedOperator { Icirc, Tstar, Rcirc, TcircEven, Rbullet, TbulletEven, TbulletOdd };

NamedOperator parse_named_operator(std::string_view name);
std::string_view to_string(NamedOperator op);
HeckeElement named_operator(NamedOperator op, int N);

/// The closed-form evaluation statements.
///  even1: φ(I°) = q^{r²} Π(α+α⁻¹+2)
///  even2: φ((q+1)R° − I°) = −q^{r²} Π(α+α⁻¹−q−q⁻¹)
///  even3: φ(R° + (q+1)T°) = −(q^{r²+1}−q^{r²−1}) Σ_j Π_{i≠j}(α_i+α_i⁻¹−q−q⁻¹)
///  odd1:  φ(I°) = q^{r²+r} Π(α+α⁻¹+q+q⁻¹)
///  odd2:  φ(T★) = q^{r²+r} Π(α+α⁻¹−2)
enum class EvalStatement { even1, even2, even3, odd1, odd2 };

EvalStatement parse_eval_statement(std::string_view name);
std::string_view to_string(EvalStatement s);
bool statement_is_even(EvalStatement s);
/// The Hecke element whose evaluation the statement describes.
HeckeElement statement_operator(EvalStatement s, int N);
/// The closed form with m_i standing for α_i+α_i⁻¹.
SymLaurent statement_closed_form(EvalStatement s, int r);

enum class SatakeIdentity { even1, even2, even4, odd1, odd2 };

SatakeIdentity parse_satake_identity(std::string_view name);
std::string_view to_string(SatakeIdentity which);
/// LHS − RHS; zero when the identity holds.
SymLaurent verify_satake_identity(SatakeIdentity which, int r);

/// Sat-matrix times the solved column minus q^{δ(N−δ)}χ(ρ_{N;δ}), for every δ.
std::vector<SymLaurent> satake_forward_discrepancy(int N);

// ---------------------------------------------------------------------------
// Satake parameters

enum class ParamKind { inert, split };

template <class S>
class SatakeParam {
 public:
  /// Inert parameter. The pairing values[i]·values[N−1−i] = 1 is not enforced; see pairing_holds().
  static SatakeParam inert(std::vector<S> values) {
    SatakeParam p;
    p.kind_ = ParamKind::inert;
    p.first_ = std::move(values);
    return p;
  }
  /// Complete α_1..α_r to a paired inert parameter of rank N (middle entry 1 when N is odd).
  static SatakeParam inert_from_half(const std::vector<S>& half, int N, const S& one) {
    if (N < 1 || static_cast<int>(half.size()) != N / 2) throw DomainError("need ⌊N/2⌋ entries to complete a parameter");
    std::vector<S> values(static_cast<std::size_t>(N), one);
    for (std::size_t i = 0; i < half.size(); ++i) {
      values[i] = half[i];
      values[static_cast<std::size_t>(N) - 1 - i] = half[i].inverse();
    }
    return inert(std::move(values));
  }
  static SatakeParam split(std::vector<S> first, std::vector<S> second) {
    if (first.size() != second.size()) throw DomainError("split parameter halves must have equal size");
    SatakeParam p;
    p.kind_ = ParamKind::split;
    p.first_ = std::move(first);
    p.second_ = std::move(second);
    return p;
  }

  ParamKind kind() const { return kind_; }
  int rank() const { return static_cast<int>(first_.size()); }
  const std::vector<S>& values() const { return first_; }
  const std::vector<S>& second() const { return second_; }

  bool pairing_holds(const S& one) const {
    if (kind_ != ParamKind::inert) return false;
    const std::size_t n = first_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (!(first_[i] * first_[n - 1 - i] == one)) return false;
    }
    return true;
  }

 private:
  ParamKind kind_ = ParamKind::inert;
  std::vector<S> first_;
  std::vector<S> second_;
};

/// Coefficients of Π(T − α_i), lowest degree first; `one` fixes the ring.
template <class S>
std::vector<S> char_poly(const std::vector<S>& roots, const S& one) {
  const S zero = one - one;
  std::vector<S> p{one};
  for (const S& a : roots) {
    std::vector<S> next(p.size() + 1, zero);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] = next[i + 1] + p[i];
      next[i] = next[i] - a * p[i];
    }
    p = std::move(next);
  }
  return p;
}

/// P(T) = (−T)^N P(T⁻¹) coefficientwise: a_{N−k} = (−1)^N a_k.
template <class S>
bool satisfies_functional_equation(const std::vector<S>& P) {
  const std::size_t N = P.size() - 1;
  for (std::size_t k = 0; k <= N; ++k) {
    const S mirrored = (N % 2 == 0) ? P[k] : -P[k];
    if (!(P[N - k] == mirrored)) return false;
  }
  return true;
}

template <class S>
S poly_eval(const std::vector<S>& P, const S& x) {
  S acc = P.back();
  for (std::size_t i = P.size() - 1; i-- > 0;) acc = acc * x + P[i];
  return acc;
}

template <class S>
std::vector<S> poly_derivative(const std::vector<S>& P, const S& one) {
  std::vector<S> d;
  for (std::size_t i = 1; i < P.size(); ++i) d.push_back(one.lift(static_cast<long>(i)) * P[i]);
  if (d.empty()) d.push_back(one - one);
  return d;
}

/// Inert: P_α(T) = (−T)^N P_α(T⁻¹). Split: P_{α1}(T) = c·T^N·P_{α2}(T⁻¹) for a unit c.
template <class S>
bool is_unitary(const SatakeParam<S>& a, const S& one) {
  if (a.kind() == ParamKind::inert) return satisfies_functional_equation(char_poly(a.values(), one));
  const auto p1 = char_poly(a.values(), one);
  const auto p2 = char_poly(a.second(), one);
  const std::size_t N = p1.size() - 1;
  if (p2[0] == one - one) return false;
  for (std::size_t k = 0; k <= N; ++k) {
    if (!(p1[k] * p2[0] == p2[N - k])) return false;
  }
  return true;
}

/// All pairwise products; inert entries (i, j) go to position i·n1 + j, which keeps the pairing.
template <class S>
SatakeParam<S> tensor_param(const SatakeParam<S>& a, const SatakeParam<S>& b) {
  if (a.kind() != b.kind()) throw DomainError("tensor product of Satake parameters of different kinds");
  auto products = [](const std::vector<S>& x, const std::vector<S>& y) {
    std::vector<S> out;
    out.reserve(x.size() * y.size());
    for (const S& u : x) {
      for (const S& v : y) out.push_back(u * v);
    }
    return out;
  };
  if (a.kind() == ParamKind::inert) return SatakeParam<S>::inert(products(a.values(), b.values()));
  return SatakeParam<S>::split(products(a.values(), b.values()), products(a.second(), b.second()));
}

enum class SatakeCondition { tate_generic, level_raising_special, intertwining_generic };

SatakeCondition parse_satake_condition(std::string_view name);
std::string_view to_string(SatakeCondition which);

/// The conditions on P itself; N = deg P decides the parity clause.
bool satake_condition(const std::vector<Fp>& P, const Fp& qv, SatakeCondition which);
/// The multiset reading of the same conditions. Requires a paired α and qv² ≠ 1.
bool semantic_condition(const SatakeParam<Fp>& alpha, const Fp& qv, SatakeCondition which);
/// No ordered pair of distinct positions has ratio qv.
bool decomposed_generic(const std::vector<Fp>& roots, const Fp& qv);

/// Draw α_1..α_r from F_p^× with a bias towards 1, ±qv and −1 so that the
/// conditions are exercised on both sides; completes the pairing.
SatakeParam<Fp> random_inert(int N, std::uint64_t p, const Fp& qv, std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Evaluation φ°_α

/// 𝔰_0..𝔰_r at m_i = α_i + α_i⁻¹ for the first r entries of α.
std::vector<Fp> elementary_at(const std::vector<Fp>& m_values);
/// φ°_α(e) in F_p with q ↦ qv. α must be inert of rank e.N().
Fp eval_phi(const HeckeElement& e, const SatakeParam<Fp>& alpha, const Fp& qv);
/// The closed form of a statement evaluated in F_p.
Fp eval_closed_form(EvalStatement s, const SatakeParam<Fp>& alpha, const Fp& qv);
/// φ°_α(e) with symbolic α: a Laurent polynomial in α_1..α_r over Z[q^±1].
InversionLaurent eval_phi_symbolic(const HeckeElement& e);

}  // namespace heckelab
