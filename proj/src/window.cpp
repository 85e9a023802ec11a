#include <algorithm>

#include "heckelab/finitegeom.hpp"
#include "heckelab/qcalc.hpp"

namespace heckelab {

using Elem = GaloisField::Elem;
using Vec = std::vector<Elem>;

WindowModel::WindowModel(unsigned q, int N, int m) : fq2_(q), N_(N), m_(m), la_(fq2_.field()) {
  if (N < 1) throw DomainError("window needs N >= 1");
  if (m < 2 || m % 2 != 0) throw DomainError("window exponent must be even and at least 2");
}

void WindowModel::check(const WindowLattice& L) const {
  if (L.N != N_ || L.m != m_) throw DomainError("lattice belongs to a different window");
}

WindowLattice WindowModel::from_generators(FMatrix rows) const {
  for (const Vec& row : rows) {
    if (row.size() != dim()) throw DomainError("generator has the wrong length");
  }
  // Close under π.
  FMatrix all = rows;
  FMatrix layer = rows;
  for (int s = 1; s < m_; ++s) {
    for (Vec& row : layer) {
      Vec next(dim(), 0);
      for (int i = 0; i < N_; ++i) {
        for (int j = 0; j + 1 < m_; ++j) next[static_cast<std::size_t>(i * m_ + j + 1)] = row[static_cast<std::size_t>(i * m_ + j)];
      }
      row = std::move(next);
    }
    all.insert(all.end(), layer.begin(), layer.end());
  }
  la_.rref(all);
  return WindowLattice{N_, m_, std::move(all)};
}

WindowLattice WindowModel::scaled_standard(int k) const {
  if (2 * std::abs(k) > m_) throw DomainError("scaled standard lattice leaves the window");
  FMatrix rows;
  for (int i = 0; i < N_; ++i) {
    for (int j = k + m_ / 2; j < m_; ++j) {
      Vec v(dim(), 0);
      v[static_cast<std::size_t>(i * m_ + j)] = 1;
      rows.push_back(std::move(v));
    }
  }
  la_.rref(rows);
  return WindowLattice{N_, m_, std::move(rows)};
}

WindowLattice WindowModel::standard_bullet() const {
  const int r = N_ / 2;
  FMatrix rows;
  for (int i = 0; i < N_; ++i) {
    for (int j = (i < r ? m_ / 2 - 1 : m_ / 2); j < m_; ++j) {
      Vec v(dim(), 0);
      v[static_cast<std::size_t>(i * m_ + j)] = 1;
      rows.push_back(std::move(v));
    }
  }
  la_.rref(rows);
  return WindowLattice{N_, m_, std::move(rows)};
}

WindowLattice WindowModel::dual(const WindowLattice& L) const {
  check(L);
  // x ∈ L^∨ iff Σ_{a+b=t} Σ_i x_{i,a} conj(y_{N−1−i,b}) = 0 for every t < m and y ∈ L.
  FMatrix constraints;
  for (const Vec& y : L.basis) {
    for (int t = 0; t < m_; ++t) {
      Vec row(dim(), 0);
      for (int i = 0; i < N_; ++i) {
        for (int a = 0; a <= t; ++a) {
          row[static_cast<std::size_t>(i * m_ + a)] = fq2_.conj(y[static_cast<std::size_t>((N_ - 1 - i) * m_ + (t - a))]);
        }
      }
      constraints.push_back(std::move(row));
    }
  }
  return WindowLattice{N_, m_, la_.nullspace(std::move(constraints), dim())};
}

WindowLattice WindowModel::times_pi(const WindowLattice& L) const {
  check(L);
  FMatrix rows;
  for (const Vec& v : L.basis) {
    Vec w(dim(), 0);
    for (int i = 0; i < N_; ++i) {
      for (int j = 0; j + 1 < m_; ++j) w[static_cast<std::size_t>(i * m_ + j + 1)] = v[static_cast<std::size_t>(i * m_ + j)];
    }
    rows.push_back(std::move(w));
  }
  la_.rref(rows);
  return WindowLattice{N_, m_, std::move(rows)};
}

WindowLattice WindowModel::pi_inverse(const WindowLattice& L) const {
  check(L);
  const FMatrix annihilator = la_.nullspace(L.basis, dim());
  FMatrix rows;
  for (const Vec& a : annihilator) {
    Vec r(dim(), 0);
    for (int i = 0; i < N_; ++i) {
      for (int j = 0; j + 1 < m_; ++j) r[static_cast<std::size_t>(i * m_ + j)] = a[static_cast<std::size_t>(i * m_ + j + 1)];
    }
    rows.push_back(std::move(r));
  }
  return WindowLattice{N_, m_, la_.nullspace(std::move(rows), dim())};
}

WindowLattice WindowModel::sum(const WindowLattice& a, const WindowLattice& b) const {
  check(a);
  check(b);
  return WindowLattice{N_, m_, la_.sum(a.basis, b.basis)};
}

WindowLattice WindowModel::intersection(const WindowLattice& a, const WindowLattice& b) const {
  check(a);
  check(b);
  return WindowLattice{N_, m_, la_.intersection(a.basis, b.basis, dim())};
}

bool WindowModel::contains(const WindowLattice& big, const WindowLattice& small) const {
  check(big);
  check(small);
  return la_.contains(big.basis, small.basis);
}

bool WindowModel::is_pi_stable(const WindowLattice& L) const { return contains(L, times_pi(L)); }

LatticeType WindowModel::classify(const WindowLattice& L) const {
  const WindowLattice D = dual(L);
  if (D == L) return LatticeType::circ;
  const int r = N_ / 2;
  const int colength = (m_ + 1) * N_ - 2 * L.length();
  if (colength == N_ - 2 * r && contains(D, times_pi(L))) return LatticeType::bullet;
  return LatticeType::other;
}

int WindowModel::disc(const WindowLattice& a, const WindowLattice& b) const {
  const int meet = intersection(a, b).length();
  return a.length() + b.length() - 2 * meet;
}

WindowLattice WindowModel::embed(const WindowLattice& L, const WindowModel& target) const {
  check(L);
  if (target.N_ != N_ || target.q() != q() || target.m_ < m_) throw DomainError("cannot embed into a narrower window");
  const int shift = (target.m_ - m_) / 2;
  FMatrix rows;
  for (const Vec& v : L.basis) {
    Vec w(target.dim(), 0);
    for (int i = 0; i < N_; ++i) {
      for (int j = 0; j < m_; ++j) w[static_cast<std::size_t>(i * target.m_ + j + shift)] = v[static_cast<std::size_t>(i * m_ + j)];
    }
    rows.push_back(std::move(w));
  }
  for (int i = 0; i < N_; ++i) {
    for (int j = m_ + shift; j < target.m_; ++j) {
      Vec w(target.dim(), 0);
      w[static_cast<std::size_t>(i * target.m_ + j)] = 1;
      rows.push_back(std::move(w));
    }
  }
  target.la_.rref(rows);
  return WindowLattice{N_, target.m_, std::move(rows)};
}

std::vector<WindowLattice> WindowModel::between(const WindowLattice& low, const WindowLattice& high, int k,
                                                std::uint64_t budget) const {
  if (!contains(high, low)) throw DomainError("between: lower lattice not contained in upper");
  if (!contains(low, times_pi(high))) throw DomainError("between: quotient is not killed by π");
  FMatrix extra;
  {
    FMatrix acc = low.basis;
    int rank = low.length();
    for (const Vec& row : high.basis) {
      acc.push_back(row);
      const int next = la_.rank(acc);
      if (next > rank) {
        extra.push_back(row);
        rank = next;
      } else {
        acc.pop_back();
      }
    }
  }
  std::vector<WindowLattice> out;
  if (k < 0 || k > static_cast<int>(extra.size())) return out;
  for (const FMatrix& S : la_.subspaces(extra.size(), static_cast<std::size_t>(k), budget)) {
    FMatrix rows = la_.multiply(S, extra);
    out.push_back(WindowLattice{N_, m_, la_.sum(low.basis, rows)});
  }
  return out;
}

namespace {

/// Truncated power series over F modulo π^m.
using Series = std::vector<Elem>;

int valuation(const Series& s) {
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] != 0) return static_cast<int>(j);
  }
  return static_cast<int>(s.size());
}

Series series_mul(const GaloisField& F, const Series& a, const Series& b) {
  Series out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  return out;
}

Series series_inverse(const GaloisField& F, const Series& u) {
  const std::size_t m = u.size();
  Series inv(m, 0);
  inv[0] = F.inv(u[0]);
  for (std::size_t k = 1; k < m; ++k) {
    Elem acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc = F.add(acc, F.mul(u[j], inv[k - j]));
    inv[k] = F.neg(F.mul(acc, inv[0]));
  }
  return inv;
}

}  // namespace

std::vector<int> WindowModel::smith_exponents(const WindowLattice& L) const {
  check(L);
  const GaloisField& F = fq2_.field();
  const std::size_t m = static_cast<std::size_t>(m_);
  std::vector<std::vector<Series>> A;
  for (const Vec& v : L.basis) {
    std::vector<Series> row(static_cast<std::size_t>(N_), Series(m, 0));
    for (int i = 0; i < N_; ++i) {
      for (int j = 0; j < m_; ++j) row[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(i * m_ + j)];
    }
    A.push_back(std::move(row));
  }
  std::vector<int> exps;
  const std::size_t rows = A.size();
  const std::size_t cols = static_cast<std::size_t>(N_);
  for (std::size_t t = 0; t < cols; ++t) {
    int best = m_;
    std::size_t br = 0, bc = 0;
    for (std::size_t r = t; r < rows; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        const int v = valuation(A[r][c]);
        if (v < best) {
          best = v;
          br = r;
          bc = c;
        }
      }
    }
    if (best == m_) {
      exps.push_back(m_);
      continue;
    }
    std::swap(A[t], A[br]);
    for (auto& row : A) std::swap(row[t], row[bc]);
    // Pivot = π^best · u with u a unit.
    Series unit(m, 0);
    for (std::size_t j = static_cast<std::size_t>(best); j < m; ++j) unit[j - static_cast<std::size_t>(best)] = A[t][t][j];
    const Series u_inv = series_inverse(F, unit);
    for (std::size_t r = t + 1; r < rows; ++r) {
      const Series& entry = A[r][t];
      if (valuation(entry) == m_) continue;
      Series w(m, 0);
      for (std::size_t j = static_cast<std::size_t>(best); j < m; ++j) w[j - static_cast<std::size_t>(best)] = entry[j];
      const Series factor = series_mul(F, w, u_inv);
      for (std::size_t c = t; c < cols; ++c) {
        const Series prod = series_mul(F, factor, A[t][c]);
        for (std::size_t j = 0; j < m; ++j) A[r][c][j] = F.sub(A[r][c][j], prod[j]);
      }
    }
    exps.push_back(best);
  }
  std::sort(exps.begin(), exps.end());
  return exps;
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, int e) {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) out = saturating_mul(out, base);
  return out;
}

}  // namespace

std::vector<WindowLattice> enumerate_window(unsigned q, int N, std::uint64_t budget) {
  WindowModel model(q, N, 2);
  const LinAlg la(model.fq2().field());
  const unsigned Q = model.fq2().field().order();
  const std::size_t n = static_cast<std::size_t>(N);
  std::uint64_t total = 0;
  for (int a = 0; a <= N; ++a) {
    for (int b = a; b <= N; ++b) {
      std::uint64_t term = saturating_mul(LinAlg::grassmannian_size(Q, static_cast<unsigned>(N), static_cast<unsigned>(a)),
                                          LinAlg::grassmannian_size(Q, static_cast<unsigned>(N - a), static_cast<unsigned>(b - a)));
      term = saturating_mul(term, saturating_pow(Q, a * (N - b)));
      total = std::min<std::uint64_t>(UINT64_MAX - 1, total + term);
    }
  }
  if (total > budget) {
    throw ResourceError("window for q=" + std::to_string(q) + ", N=" + std::to_string(N) + " has " +
                        std::to_string(total) + " lattices, budget " + std::to_string(budget));
  }
  // L/ϖΛ° ↔ (A, B, φ): A = image mod π, B = {b : πb ∈ M} ⊇ A, φ : A → F^N/B.
  std::vector<WindowLattice> out;
  out.reserve(static_cast<std::size_t>(total));
  for (std::size_t a = 0; a <= n; ++a) {
    for (const FMatrix& A : la.subspaces(n, a, budget)) {
      std::vector<bool> a_pivot(n, false);
      {
        FMatrix tmp = A;
        for (int p : la.rref(tmp)) a_pivot[static_cast<std::size_t>(p)] = true;
      }
      std::vector<std::size_t> a_free;
      for (std::size_t c = 0; c < n; ++c) {
        if (!a_pivot[c]) a_free.push_back(c);
      }
      for (std::size_t extra = 0; extra <= n - a; ++extra) {
        for (const FMatrix& C : la.subspaces(n - a, extra, budget)) {
          FMatrix B = A;
          for (const Vec& row : C) {
            Vec v(n, 0);
            for (std::size_t t = 0; t < a_free.size(); ++t) v[a_free[t]] = row[t];
            B.push_back(std::move(v));
          }
          std::vector<bool> b_pivot(n, false);
          for (int p : la.rref(B)) b_pivot[static_cast<std::size_t>(p)] = true;
          std::vector<std::size_t> b_free;
          for (std::size_t c = 0; c < n; ++c) {
            if (!b_pivot[c]) b_free.push_back(c);
          }
          const std::size_t nphi = a * b_free.size();
          Vec phi(nphi, 0);
          while (true) {
            FMatrix rows;
            for (std::size_t k = 0; k < a; ++k) {
              Vec v(2 * n, 0);
              for (std::size_t i = 0; i < n; ++i) v[2 * i] = A[k][i];
              for (std::size_t t = 0; t < b_free.size(); ++t) v[2 * b_free[t] + 1] = phi[k * b_free.size() + t];
              rows.push_back(std::move(v));
            }
            for (const Vec& b : B) {
              Vec v(2 * n, 0);
              for (std::size_t i = 0; i < n; ++i) v[2 * i + 1] = b[i];
              rows.push_back(std::move(v));
            }
            la.rref(rows);
            out.push_back(WindowLattice{N, 2, std::move(rows)});
            std::size_t t = 0;
            while (t < nphi && ++phi[t] == Q) phi[t++] = 0;
            if (t == nphi) break;
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_circ_pair(const WindowModel& model, const WindowLattice& L1, const WindowLattice& L2) {
  if (model.m() != 2) throw DomainError("bullet counts take lattices of the m = 2 window");
  if (model.classify(L1) != LatticeType::circ || model.classify(L2) != LatticeType::circ) {
    throw DomainError("bullet counts need two self-dual lattices");
  }
  if (!model.contains(L2, model.times_pi(L1)) || !model.contains(L1, model.times_pi(L2))) {
    throw DomainError("lattices are not within distance one: need ϖL2 ⊆ L1 ⊆ ϖ^{-1}L2");
  }
}

}  // namespace

std::uint64_t count_bullet_between(const WindowModel& model, const WindowLattice& L1, const WindowLattice& L2) {
  require_circ_pair(model, L1, L2);
  const WindowModel wide(model.q(), model.N(), 4);
  const WindowLattice E1 = model.embed(L1, wide);
  const WindowLattice E2 = model.embed(L2, wide);
  const WindowLattice top2 = wide.pi_inverse(E2);
  std::uint64_t count = 0;
  for (const WindowLattice& X : wide.between(E1, wide.pi_inverse(E1), model.N() / 2)) {
    if (wide.contains(X, E2) && wide.contains(top2, X) && wide.classify(X) == LatticeType::bullet) ++count;
  }
  return count;
}

std::uint64_t count_bullet_between_filtered(const WindowModel& model, const std::vector<WindowLattice>& window,
                                            const WindowLattice& L1, const WindowLattice& L2) {
  require_circ_pair(model, L1, L2);
  const WindowLattice unit = model.standard();
  if (!(L1 == unit) && !(L2 == unit)) throw DomainError("filtered count needs one lattice equal to Λ°");
  const WindowLattice top1 = model.pi_inverse(L1);
  const WindowLattice top2 = model.pi_inverse(L2);
  std::uint64_t count = 0;
  for (const WindowLattice& X : window) {
    if (!model.contains(X, L1) || !model.contains(X, L2)) continue;
    if (!model.contains(top1, X) || !model.contains(top2, X)) continue;
    if (model.classify(X) == LatticeType::bullet) ++count;
  }
  return count;
}

mpz_class bullet_between_closed_form(unsigned q, int N, int delta) {
  const int r = N / 2;
  if (delta < 0 || delta > r) throw DomainError("δ out of range");
  return odd_product(r - delta, N % 2 == 0 ? Parity::even : Parity::odd).evaluate_integral(mpz_class(q));
}

MixedCounts mixed_counts(unsigned q, int N, int delta, int gamma) {
  if (N != 3) throw DomainError("mixed counts are modeled for N = 3");
  const int r = N / 2;
  if (delta < 0 || delta > r || gamma < 0 || gamma > r) throw DomainError("δ and γ must lie in [0, r]");
  const WindowModel base(q, N, 2);
  const WindowModel wide(q, N, 4);
  const WindowLattice bullet = base.embed(base.standard_bullet(), wide);
  const WindowLattice bullet_dual = wide.dual(bullet);

  auto excess_over_bullet = [&](const WindowLattice& X) -> int {
    const WindowLattice S = wide.sum(X, bullet);
    if (!wide.contains(bullet, wide.times_pi(S))) return -1;
    return S.length() - bullet.length();
  };

  std::vector<WindowLattice> circ_below;
  for (const WindowLattice& C : wide.between(bullet_dual, bullet, r)) {
    if (wide.classify(C) == LatticeType::circ) circ_below.push_back(C);
  }

  MixedCounts result;
  bool first = true;
  for (const WindowLattice& L0 : enumerate_window(q, N)) {
    if (base.classify(L0) != LatticeType::circ) continue;
    const WindowLattice L = base.embed(L0, wide);
    if (excess_over_bullet(L) != gamma) continue;
    std::uint64_t cb = 0;
    for (const WindowLattice& X : wide.between(L, wide.pi_inverse(L), r)) {
      if (wide.classify(X) == LatticeType::bullet && excess_over_bullet(X) == delta) ++cb;
    }
    std::uint64_t cc = 0;
    const WindowLattice piL = wide.times_pi(L);
    for (const WindowLattice& C : circ_below) {
      if (!wide.contains(C, piL)) continue;
      if (L.length() - wide.intersection(L, C).length() == delta) ++cc;
    }
    if (first) {
      result.c_bullet = cb;
      result.c_circ = cc;
      first = false;
    } else if (cb != result.c_bullet || cc != result.c_circ) {
      result.uniform = false;
    }
    ++result.lattices;
  }
  return result;
}

std::pair<mpz_class, mpz_class> mixed_closed_form(unsigned q, int N, int delta, int gamma) {
  const int r = N / 2;
  if (gamma > delta || delta > r || gamma < 0) return {0, 0};
  const int k = delta - gamma;
  const mpz_class binom = q_binomial(r - gamma, k, QBase::q_squared()).evaluate_integral(mpz_class(q));
  mpz_class a, b;
  mpz_ui_pow_ui(a.get_mpz_t(), q, static_cast<unsigned long>(k * (k + 2)));
  mpz_ui_pow_ui(b.get_mpz_t(), q, static_cast<unsigned long>(k * k));
  return {a * binom, b * binom};
}

}  // namespace heckelab
