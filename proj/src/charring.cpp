#include "heckelab/charring.hpp"

#include <algorithm>
#include <map>

namespace heckelab {

namespace {

std::size_t arity(int rank, bool with_lambda) {
  if (rank < 0) throw DomainError("rank must be non-negative");
  return static_cast<std::size_t>(rank) + (with_lambda ? 1 : 0);
}

mpz_class binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// y^k + y^{-k} as a polynomial in m = y + y^{-1}, lowest degree first.
std::vector<mpz_class> chebyshev(int k) {
  std::vector<mpz_class> prev{2};
  std::vector<mpz_class> cur{0, 1};
  if (k == 0) return prev;
  for (int j = 1; j < k; ++j) {
    std::vector<mpz_class> next(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

SymLaurent::SymLaurent(int rank, bool with_lambda)
    : rank_(rank), with_lambda_(with_lambda), poly_(arity(rank, with_lambda)) {}

SymLaurent::SymLaurent(int rank, bool with_lambda, Poly poly)
    : rank_(rank), with_lambda_(with_lambda), poly_(std::move(poly)) {
  if (poly_.nvars() != arity(rank, with_lambda)) throw DomainError("SymLaurent arity mismatch");
}

SymLaurent SymLaurent::constant(int rank, const LaurentPoly& c, bool with_lambda) {
  return SymLaurent(rank, with_lambda, Poly::constant(arity(rank, with_lambda), c));
}

SymLaurent SymLaurent::m(int rank, int i, bool with_lambda) {
  if (i < 0 || i >= rank) throw DomainError("m-variable index out of range");
  return SymLaurent(rank, with_lambda, Poly::variable(arity(rank, with_lambda), static_cast<std::size_t>(i)));
}

SymLaurent SymLaurent::lambda_poly(int rank, const LaurentPoly& in_lambda) {
  const std::size_t n = arity(rank, true);
  Poly p(n);
  for (const auto& [e, c] : in_lambda.terms()) {
    Poly::Exponents ex(n, 0);
    ex[n - 1] = e;
    p.add_term(std::move(ex), LaurentPoly(c));
  }
  return SymLaurent(rank, true, std::move(p));
}

SymLaurent SymLaurent::lifted_to_lambda() const {
  if (with_lambda_) return *this;
  std::vector<std::size_t> map(static_cast<std::size_t>(rank_));
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  return SymLaurent(rank_, true, poly_.reindexed(arity(rank_, true), map));
}

void SymLaurent::check_compatible(const SymLaurent& other) const {
  if (other.rank_ != rank_ || other.with_lambda_ != with_lambda_) {
    throw DomainError("SymLaurent operands live in different rings");
  }
}

SymLaurent& SymLaurent::operator+=(const SymLaurent& rhs) {
  check_compatible(rhs);
  poly_ += rhs.poly_;
  return *this;
}

SymLaurent& SymLaurent::operator-=(const SymLaurent& rhs) {
  check_compatible(rhs);
  poly_ -= rhs.poly_;
  return *this;
}

SymLaurent operator*(const SymLaurent& a, const SymLaurent& b) {
  a.check_compatible(b);
  return SymLaurent(a.rank_, a.with_lambda_, a.poly_ * b.poly_);
}

SymLaurent operator*(const LaurentPoly& c, const SymLaurent& a) {
  return SymLaurent(a.rank_, a.with_lambda_, c * a.poly_);
}

SymLaurent SymLaurent::operator-() const { return SymLaurent(rank_, with_lambda_, -poly_); }

bool operator==(const SymLaurent& a, const SymLaurent& b) {
  return a.rank_ == b.rank_ && a.with_lambda_ == b.with_lambda_ && a.poly_ == b.poly_;
}

bool SymLaurent::is_symmetric() const {
  for (int i = 0; i + 1 < rank_; ++i) {
    if (!(poly_.swapped(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1)) == poly_)) return false;
  }
  return true;
}

std::string SymLaurent::to_string() const {
  if (poly_.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = poly_.terms().rbegin(); it != poly_.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) out += " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (with_lambda_ && i + 1 == e.size()) ? std::string("lambda") : "m" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    const std::string coeff = c.to_ascii();
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += "(" + coeff + ")*" + mono;
    }
  }
  return out;
}

InversionLaurent::InversionLaurent(int rank, Poly poly) : rank_(rank), poly_(std::move(poly)) {
  if (poly_.nvars() != static_cast<std::size_t>(rank)) throw DomainError("InversionLaurent arity mismatch");
}

InversionLaurent InversionLaurent::y_power(int rank, int i, int k) {
  return InversionLaurent(rank, Poly::variable(static_cast<std::size_t>(rank), static_cast<std::size_t>(i), k));
}

InversionLaurent InversionLaurent::expand(const SymLaurent& f) {
  if (f.with_lambda()) throw DomainError("expand expects an element without λ");
  const int r = f.rank();
  const std::size_t n = static_cast<std::size_t>(r);
  std::vector<Poly> m_images;
  for (int i = 0; i < r; ++i) {
    m_images.push_back(Poly::variable(n, static_cast<std::size_t>(i), 1) +
                       Poly::variable(n, static_cast<std::size_t>(i), -1));
  }
  Poly out(n);
  for (const auto& [e, c] : f.poly().terms()) {
    Poly term = Poly::constant(n, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] < 0) throw DomainError("expand expects polynomial m-exponents");
      term *= m_images[i].pow(static_cast<unsigned>(e[i]));
    }
    out += term;
  }
  return InversionLaurent(r, std::move(out));
}

SymLaurent reduce_to_m(const InversionLaurent& f) {
  // Mixed ring: indices [0, r) are y-variables, [r, 2r) are m-variables.
  const int r = f.rank();
  const std::size_t n = static_cast<std::size_t>(r);
  using Poly = SparsePoly<LaurentPoly>;
  Poly current(2 * n);
  for (const auto& [e, c] : f.poly().terms()) {
    Poly::Exponents ex(2 * n, 0);
    std::copy(e.begin(), e.end(), ex.begin());
    current.add_term(std::move(ex), c);
  }
  for (std::size_t i = 0; i < n; ++i) {
    Poly next(2 * n);
    for (const auto& [e, c] : current.terms()) {
      const int k = e[i];
      if (k != 0) {
        Poly::Exponents mirror = e;
        mirror[i] = -k;
        if (!(current.coeff(mirror) == c)) {
          throw InvariantViolation("element is not invariant under y_" + std::to_string(i + 1) + " -> y_" +
                                   std::to_string(i + 1) + "^-1");
        }
      }
      if (k < 0) continue;
      Poly::Exponents base = e;
      base[i] = 0;
      if (k == 0) {
        next.add_term(base, c);
        continue;
      }
      const std::vector<mpz_class> cheb = chebyshev(k);
      for (std::size_t d = 0; d < cheb.size(); ++d) {
        if (cheb[d] == 0) continue;
        Poly::Exponents ex = base;
        ex[n + i] += static_cast<int>(d);
        next.add_term(std::move(ex), LaurentPoly(cheb[d]) * c);
      }
    }
    current = std::move(next);
  }
  Poly out(n);
  for (const auto& [e, c] : current.terms()) {
    out.add_term(Poly::Exponents(e.begin() + static_cast<long>(n), e.end()), c);
  }
  return SymLaurent(r, false, std::move(out));
}

SymLaurent elem_sym(int r, int delta) {
  if (r < 0 || delta < 0) throw DomainError("elem_sym requires r, δ >= 0");
  const std::size_t n = static_cast<std::size_t>(r);
  SparsePoly<LaurentPoly> out(n);
  if (delta > r) return SymLaurent(r, false, out);
  std::vector<bool> chosen(n, false);
  std::fill(chosen.begin(), chosen.begin() + delta, true);
  do {
    SparsePoly<LaurentPoly>::Exponents e(n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i] = chosen[i] ? 1 : 0;
    out.add_term(std::move(e), LaurentPoly(1));
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return SymLaurent(r, false, std::move(out));
}

std::vector<mpz_class> character_coefficients(int N, int delta) {
  if (N < 1) throw DomainError("character requires N >= 1");
  const int r = N / 2;
  if (delta < 0 || delta > r) throw DomainError("character requires 0 <= δ <= ⌊N/2⌋");
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(r) + 1, 0);
  if (N % 2 == 1) {
    for (int i = 0; i <= delta; ++i) coeffs[static_cast<std::size_t>(delta - i)] += binomial(r - delta + i, i / 2);
  } else {
    for (int j = 0; j <= delta / 2; ++j) {
      coeffs[static_cast<std::size_t>(delta - 2 * j)] += binomial(r - delta + 2 * j, j);
    }
  }
  return coeffs;
}

SymLaurent character(int N, int delta) {
  const std::vector<mpz_class> coeffs = character_coefficients(N, delta);
  const int r = N / 2;
  SymLaurent out(r);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] != 0) out += LaurentPoly(coeffs[j]) * elem_sym(r, static_cast<int>(j));
  }
  return out;
}

SymLaurent character_bruteforce(int N, int delta) {
  if (N < 1) throw DomainError("character requires N >= 1");
  if (N > 12) throw ResourceError("character_bruteforce is limited to N <= 12");
  const int r = N / 2;
  if (delta < 0 || delta > r) throw DomainError("character requires 0 <= δ <= ⌊N/2⌋");
  const std::size_t n = static_cast<std::size_t>(r);
  // Weight of index i (1-based): y_i for i <= r, y_{N+1-i}^{-1} for i > N-r, 1 in the middle.
  std::vector<SparsePoly<LaurentPoly>::Exponents> weight(static_cast<std::size_t>(N),
                                                         SparsePoly<LaurentPoly>::Exponents(n, 0));
  for (int i = 1; i <= N; ++i) {
    if (i <= r) weight[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)] = 1;
    if (i > N - r) weight[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(N - i)] = -1;
  }
  SparsePoly<LaurentPoly> sum(n);
  for (unsigned mask = 0; mask < (1U << N); ++mask) {
    if (__builtin_popcount(mask) != delta) continue;
    SparsePoly<LaurentPoly>::Exponents e(n, 0);
    for (int i = 0; i < N; ++i) {
      if (mask & (1U << i)) {
        for (std::size_t j = 0; j < n; ++j) e[j] += weight[static_cast<std::size_t>(i)][j];
      }
    }
    sum.add_term(std::move(e), LaurentPoly(1));
  }
  return reduce_to_m(InversionLaurent(r, std::move(sum)));
}

SparsePoly<LaurentPoly> to_elementary_basis(const SymLaurent& f) {
  if (f.with_lambda()) throw DomainError("to_elementary_basis expects an element without λ");
  const int r = f.rank();
  const std::size_t n = static_cast<std::size_t>(r);
  std::vector<SymLaurent> elementary;
  for (int k = 0; k <= r; ++k) elementary.push_back(elem_sym(r, k));

  SparsePoly<LaurentPoly> out(n);
  SymLaurent rest = f;
  while (!rest.is_zero()) {
    const auto& [lead, c] = *rest.poly().terms().rbegin();
    for (std::size_t i = 0; i < n; ++i) {
      if (lead[i] < 0 || (i + 1 < n && lead[i] < lead[i + 1])) {
        throw InvariantViolation("element is not a symmetric polynomial in m_1..m_r");
      }
    }
    SparsePoly<LaurentPoly>::Exponents s(n, 0);
    SymLaurent product = SymLaurent::constant(r, c);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = lead[i] - (i + 1 < n ? lead[i + 1] : 0);
      for (int t = 0; t < s[i]; ++t) product = product * elementary[i + 1];
    }
    out.add_term(s, c);
    rest -= product;
  }
  if (!(from_elementary_basis(r, out) == f)) {
    throw InvariantViolation("elementary-basis expansion does not reproduce its input");
  }
  return out;
}

SymLaurent from_elementary_basis(int r, const SparsePoly<LaurentPoly>& g) {
  if (g.nvars() != static_cast<std::size_t>(r)) throw DomainError("elementary-basis arity mismatch");
  std::vector<SymLaurent> elementary;
  for (int k = 1; k <= r; ++k) elementary.push_back(elem_sym(r, k));
  SymLaurent out(r);
  for (const auto& [e, c] : g.terms()) {
    SymLaurent term = SymLaurent::constant(r, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0) throw DomainError("negative exponent in the elementary basis");
      for (int t = 0; t < e[i]; ++t) term = term * elementary[i];
    }
    out += term;
  }
  return out;
}

LambdaIdentity parse_lambda_identity(std::string_view name) {
  if (name == "even_sum") return LambdaIdentity::even_sum;
  if (name == "even_derivative") return LambdaIdentity::even_derivative;
  if (name == "odd") return LambdaIdentity::odd;
  if (name == "odd_binomial") return LambdaIdentity::odd_binomial;
  throw DomainError("unknown λ-identity '" + std::string(name) + "'");
}

std::string_view to_string(LambdaIdentity which) {
  switch (which) {
    case LambdaIdentity::even_sum:
      return "even_sum";
    case LambdaIdentity::even_derivative:
      return "even_derivative";
    case LambdaIdentity::odd:
      return "odd";
    case LambdaIdentity::odd_binomial:
      return "odd_binomial";
  }
  return "?";
}

namespace {

LaurentPoly lam(int k) { return LaurentPoly::monomial(1, k); }

// (λ^{δ+1} + λ^{-δ}) / (λ + 1)
LaurentPoly odd_kernel(int delta) {
  return LaurentPoly::divide_exact(lam(delta + 1) + lam(-delta), lam(1) + LaurentPoly(1), "odd λ-kernel");
}

// λ + λ^{-1} + m_i
SymLaurent shifted_m(int r, int i) {
  return SymLaurent::lambda_poly(r, lam(1) + lam(-1)) + SymLaurent::m(r, i, true);
}

}  // namespace

SymLaurent check_lambda_identity(int n, LambdaIdentity which) {
  if (which == LambdaIdentity::odd_binomial) {
    if (n < 0) throw DomainError("odd_binomial requires k >= 0");
    LaurentPoly rhs;
    for (int delta = 0; delta <= n; ++delta) {
      rhs += LaurentPoly(binomial(n, (n - delta) / 2)) * odd_kernel(delta);
    }
    const LaurentPoly lhs = (lam(1) + lam(-1)).pow(static_cast<unsigned>(n));
    return SymLaurent::lambda_poly(0, lhs - rhs);
  }
  if (n < 1) throw DomainError("λ-identity requires N >= 1");
  const bool even = n % 2 == 0;
  if (even != (which != LambdaIdentity::odd)) {
    throw DomainError("λ-identity '" + std::string(to_string(which)) + "' does not apply to N=" + std::to_string(n));
  }
  const int r = n / 2;
  auto chi = [&](int delta) { return character(n, delta).lifted_to_lambda(); };
  SymLaurent lhs(r, true);
  SymLaurent rhs(r, true);
  switch (which) {
    case LambdaIdentity::even_sum: {
      lhs = SymLaurent::constant(r, LaurentPoly(1), true);
      for (int i = 0; i < r; ++i) lhs = lhs * shifted_m(r, i);
      rhs = chi(r);
      for (int d = 1; d <= r; ++d) rhs += chi(r - d) * SymLaurent::lambda_poly(r, lam(d) + lam(-d));
      break;
    }
    case LambdaIdentity::even_derivative: {
      for (int j = 0; j < r; ++j) {
        SymLaurent term = SymLaurent::constant(r, LaurentPoly(1), true);
        for (int i = 0; i < r; ++i) {
          if (i != j) term = term * shifted_m(r, i);
        }
        lhs += term;
      }
      for (int d = 1; d <= r; ++d) {
        const LaurentPoly kernel =
            LaurentPoly::divide_exact(lam(d) - lam(-d), lam(1) - lam(-1), "even λ-derivative kernel");
        rhs += chi(r - d) * SymLaurent::lambda_poly(r, LaurentPoly(d) * kernel);
      }
      break;
    }
    case LambdaIdentity::odd: {
      lhs = SymLaurent::constant(r, LaurentPoly(1), true);
      for (int i = 0; i < r; ++i) lhs = lhs * shifted_m(r, i);
      for (int d = 0; d <= r; ++d) rhs += chi(r - d) * SymLaurent::lambda_poly(r, odd_kernel(d));
      break;
    }
    case LambdaIdentity::odd_binomial:
      break;
  }
  return lhs - rhs;
}

}  // namespace heckelab
