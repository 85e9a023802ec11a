#include "heckelab/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

namespace heckelab {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

PrimePower prime_power(unsigned n) {
  if (n < 2) throw DomainError("not a prime power: " + std::to_string(n));
  unsigned p = 2;
  while (n % p != 0) ++p;
  unsigned f = 0;
  unsigned m = n;
  while (m % p == 0) {
    m /= p;
    ++f;
  }
  if (m != 1 || !is_prime(p)) throw DomainError("not a prime power: " + std::to_string(n));
  return {p, f};
}

GaloisField::GaloisField(unsigned p, unsigned k) : p_(p), k_(k), Q_(1) {
  if (!is_prime(p) || k == 0) throw DomainError("GaloisField needs a prime p and k >= 1");
  for (unsigned i = 0; i < k; ++i) {
    if (Q_ > 65536 / p) throw ResourceError("field order exceeds 65536");
    Q_ *= p;
  }
  // Digits of an element, lowest degree first.
  auto digits = [&](Elem a) {
    std::vector<unsigned> d(k, 0);
    for (unsigned i = 0; i < k; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  };
  auto encode = [&](const std::vector<unsigned>& d) {
    Elem a = 0;
    for (unsigned i = k; i-- > 0;) a = a * p + d[i];
    return a;
  };
  // Search monic f(x) = x^k + c_{k-1} x^{k-1} + ... + c_0 with x of order Q-1.
  for (Elem tail = 1; tail < Q_; ++tail) {
    const std::vector<unsigned> c = digits(tail);
    if (c[0] == 0) continue;
    std::vector<unsigned> cur(k, 0);
    cur[0] = 1;
    std::vector<Elem> powers;
    powers.reserve(Q_ - 1);
    bool primitive = true;
    for (unsigned e = 0; e < Q_ - 1; ++e) {
      const Elem code = encode(cur);
      if (e > 0 && code == 1) {
        primitive = false;
        break;
      }
      powers.push_back(code);
      // multiply by x modulo f
      const unsigned top = cur[k - 1];
      for (unsigned i = k - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      for (unsigned i = 0; i < k; ++i) cur[i] = (cur[i] + (p - (top * c[i]) % p)) % p;
    }
    if (!primitive || encode(cur) != 1) continue;
    exp_ = std::move(powers);
    break;
  }
  if (exp_.size() != Q_ - 1) throw InvariantViolation("no primitive polynomial found");
  log_.assign(Q_, 0);
  for (std::uint32_t e = 0; e < Q_ - 1; ++e) log_[exp_[e]] = e;

  neg_table_.resize(Q_);
  for (Elem a = 0; a < Q_; ++a) {
    std::vector<unsigned> d = digits(a);
    for (auto& x : d) x = (p - x) % p;
    neg_table_[a] = encode(d);
  }
  if (Q_ <= 1024) {
    add_table_.resize(static_cast<std::size_t>(Q_) * Q_);
    for (Elem a = 0; a < Q_; ++a) {
      const std::vector<unsigned> da = digits(a);
      for (Elem b = 0; b < Q_; ++b) {
        const std::vector<unsigned> db = digits(b);
        std::vector<unsigned> s(k);
        for (unsigned i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
        add_table_[static_cast<std::size_t>(a) * Q_ + b] = encode(s);
      }
    }
  }
}

std::shared_ptr<const GaloisField> GaloisField::of_order(unsigned Q) {
  static std::mutex mutex;
  static std::map<unsigned, std::shared_ptr<const GaloisField>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(Q);
  if (it != cache.end()) return it->second;
  const PrimePower pp = prime_power(Q);
  auto field = std::make_shared<const GaloisField>(pp.p, pp.f);
  cache.emplace(Q, field);
  return field;
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * Q_ + b];
  Elem out = 0;
  Elem scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

GaloisField::Elem GaloisField::neg(Elem a) const { return neg_table_[a]; }

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw DomainError("zero is not invertible");
  return exp_[(Q_ - 1 - log_[a]) % (Q_ - 1)];
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::size_t>((static_cast<std::uint64_t>(log_[a]) * (e % (Q_ - 1))) % (Q_ - 1))];
}

GaloisField::Elem GaloisField::frobenius(Elem a, unsigned j) const {
  std::uint64_t e = 1;
  for (unsigned i = 0; i < j % k_; ++i) e *= p_;
  return pow(a, e);
}

GaloisField::Elem GaloisField::from_int(long n) const {
  long r = n % static_cast<long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::vector<int> LinAlg::rref(FMatrix& M) const {
  std::vector<int> pivots;
  if (M.empty()) return pivots;
  const std::size_t ncols = M[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < M.size(); ++col) {
    std::size_t sel = row;
    while (sel < M.size() && M[sel][col] == 0) ++sel;
    if (sel == M.size()) continue;
    std::swap(M[row], M[sel]);
    const auto inv = F_.inv(M[row][col]);
    for (auto& x : M[row]) x = F_.mul(x, inv);
    for (std::size_t r = 0; r < M.size(); ++r) {
      if (r == row || M[r][col] == 0) continue;
      const auto factor = M[r][col];
      for (std::size_t c = col; c < ncols; ++c) {
        if (M[row][c] != 0) M[r][c] = F_.sub(M[r][c], F_.mul(factor, M[row][c]));
      }
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  M.resize(row);
  return pivots;
}

int LinAlg::rank(FMatrix M) const { return static_cast<int>(rref(M).size()); }

FMatrix LinAlg::nullspace(FMatrix M, std::size_t ncols) const {
  const std::vector<int> pivots = rref(M);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  FMatrix basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<GaloisField::Elem> v(ncols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[static_cast<std::size_t>(pivots[r])] = F_.neg(M[r][free]);
    basis.push_back(std::move(v));
  }
  rref(basis);
  return basis;
}

bool LinAlg::contains(const FMatrix& space, const FMatrix& sub) const {
  if (sub.empty()) return true;
  FMatrix both = space;
  both.insert(both.end(), sub.begin(), sub.end());
  return rank(both) == rank(space);
}

FMatrix LinAlg::sum(const FMatrix& a, const FMatrix& b) const {
  FMatrix both = a;
  both.insert(both.end(), b.begin(), b.end());
  rref(both);
  return both;
}

FMatrix LinAlg::intersection(const FMatrix& a, const FMatrix& b, std::size_t n) const {
  // x in both iff x ⊥ (a^⊥ + b^⊥) under the standard bilinear dot product.
  FMatrix perp = nullspace(a, n);
  FMatrix pb = nullspace(b, n);
  perp.insert(perp.end(), pb.begin(), pb.end());
  return nullspace(perp, n);
}

FMatrix LinAlg::multiply(const FMatrix& A, const FMatrix& B) const {
  if (A.empty()) return {};
  const std::size_t inner = B.size();
  const std::size_t cols = B.empty() ? 0 : B[0].size();
  FMatrix C(A.size(), std::vector<GaloisField::Elem>(cols, 0));
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (A[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) C[i][j] = F_.add(C[i][j], F_.mul(A[i][k], B[k][j]));
    }
  }
  return C;
}

FMatrix LinAlg::transpose(const FMatrix& A) const {
  if (A.empty()) return {};
  FMatrix T(A[0].size(), std::vector<GaloisField::Elem>(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = 0; j < A[0].size(); ++j) T[j][i] = A[i][j];
  }
  return T;
}

std::uint64_t LinAlg::grassmannian_size(unsigned Q, unsigned n, unsigned k) {
  if (k > n) return 0;
  // Count RREF matrices: sum over pivot sets of Q^{free entries}, saturating.
  const std::uint64_t cap = UINT64_MAX / 2;
  // g(n, k) = g(n-1, k-1) + Q^k g(n-1, k)
  std::vector<std::vector<std::uint64_t>> g(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  for (unsigned m = 0; m <= n; ++m) g[m][0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    for (unsigned j = 1; j <= std::min(m, k); ++j) {
      std::uint64_t qj = 1;
      for (unsigned t = 0; t < j && qj < cap; ++t) qj *= Q;
      std::uint64_t term = g[m - 1][j];
      term = (term != 0 && qj > cap / term) ? cap : term * qj;
      g[m][j] = std::min(cap, g[m - 1][j - 1] + term);
    }
  }
  return g[n][k];
}

std::vector<FMatrix> LinAlg::subspaces(std::size_t n, std::size_t k, std::uint64_t budget) const {
  const unsigned Q = F_.order();
  const std::uint64_t total = grassmannian_size(Q, static_cast<unsigned>(n), static_cast<unsigned>(k));
  if (total > budget) {
    throw ResourceError("Grassmannian Gr(" + std::to_string(k) + "," + std::to_string(n) + ") over GF(" +
                        std::to_string(Q) + ") has " + std::to_string(total) + " points, budget " +
                        std::to_string(budget));
  }
  std::vector<FMatrix> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<int> pivots(k);
  // Iterate pivot sets in lexicographic order.
  std::vector<bool> choose(n, false);
  std::fill(choose.begin(), choose.begin() + static_cast<long>(k), true);
  do {
    std::size_t idx = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (choose[c]) pivots[idx++] = static_cast<int>(c);
    }
    // Free positions: row i, columns > pivot_i that are not pivots.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t c = static_cast<std::size_t>(pivots[i]) + 1; c < n; ++c) {
        if (!choose[c]) free.emplace_back(i, c);
      }
    }
    FMatrix M(k, std::vector<GaloisField::Elem>(n, 0));
    for (std::size_t i = 0; i < k; ++i) M[i][static_cast<std::size_t>(pivots[i])] = 1;
    std::vector<GaloisField::Elem> counter(free.size(), 0);
    while (true) {
      for (std::size_t t = 0; t < free.size(); ++t) M[free[t].first][free[t].second] = counter[t];
      out.push_back(M);
      std::size_t t = 0;
      while (t < counter.size() && ++counter[t] == Q) counter[t++] = 0;
      if (t == counter.size()) break;
    }
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return out;
}

}  // namespace heckelab
