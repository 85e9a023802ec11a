#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "heckelab/errors.hpp"

namespace heckelab {

/// Sparse multivariate Laurent polynomial with a fixed number of variables.
///
/// Monomials are exponent vectors (possibly negative); coefficients live in a
/// commutative ring `Coeff` constructible from `long` (LaurentPoly, mpz_class).
/// Canonical form: no zero coefficients.
template <class Coeff>
class SparsePoly {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Coeff>;

  explicit SparsePoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static SparsePoly constant(std::size_t nvars, const Coeff& c) {
    SparsePoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }
  static SparsePoly variable(std::size_t nvars, std::size_t index, int power = 1) {
    if (index >= nvars) throw DomainError("variable index out of range");
    Exponents e(nvars, 0);
    e[index] = power;
    SparsePoly p(nvars);
    p.add_term(std::move(e), Coeff(1));
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(Exponents e, const Coeff& c) {
    if (e.size() != nvars_) throw DomainError("monomial arity mismatch");
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) it->second += c;
    if (it->second == Coeff(0)) terms_.erase(it);
  }

  SparsePoly& operator+=(const SparsePoly& rhs) {
    check_arity(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& rhs) {
    check_arity(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  SparsePoly operator-() const {
    SparsePoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check_arity(b);
    SparsePoly out(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  SparsePoly& operator*=(const SparsePoly& rhs) { return *this = *this * rhs; }

  friend SparsePoly operator*(const Coeff& c, const SparsePoly& p) {
    SparsePoly out(p.nvars_);
    if (c == Coeff(0)) return out;
    for (const auto& [e, pc] : p.terms_) out.add_term(e, c * pc);
    return out;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  SparsePoly pow(unsigned n) const {
    SparsePoly acc = constant(nvars_, Coeff(1));
    for (unsigned i = 0; i < n; ++i) acc *= *this;
    return acc;
  }

  /// Swap variables i and j.
  SparsePoly swapped(std::size_t i, std::size_t j) const {
    SparsePoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      std::swap(f[i], f[j]);
      out.terms_.emplace(std::move(f), c);
    }
    return out;
  }

  /// Re-embed into a ring with `nvars` variables; variable k goes to index map[k].
  SparsePoly reindexed(std::size_t nvars, const std::vector<std::size_t>& map) const {
    SparsePoly out(nvars);
    for (const auto& [e, c] : terms_) {
      Exponents f(nvars, 0);
      for (std::size_t k = 0; k < nvars_; ++k) f.at(map.at(k)) += e[k];
      out.add_term(std::move(f), c);
    }
    return out;
  }

 private:
  void check_arity(const SparsePoly& other) const {
    if (other.nvars_ != nvars_) throw DomainError("polynomial arity mismatch");
  }

  std::size_t nvars_;
  Terms terms_;
};

}  // namespace heckelab
