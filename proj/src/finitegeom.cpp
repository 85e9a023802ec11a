#include "heckelab/finitegeom.hpp"

#include <algorithm>
#include <sstream>

#include "heckelab/qcalc.hpp"

namespace heckelab {

using Elem = GaloisField::Elem;
using Vec = std::vector<Elem>;

Fq2::Fq2(unsigned q) : q_(q) {
  prime_power(q);
  if (q > 9) throw DomainError("q must be at most 9");
  field_ = GaloisField::of_order(q * q);
}

HermSpace::HermSpace(unsigned q, int N) : fq2_(q), N_(N) {
  if (N < 1) throw DomainError("hermitian space needs N >= 1");
  gram_.assign(static_cast<std::size_t>(N), Vec(static_cast<std::size_t>(N), 0));
  for (int i = 0; i < N; ++i) gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(N - 1 - i)] = 1;
}

HermSpace::HermSpace(unsigned q, FMatrix gram) : fq2_(q), N_(static_cast<int>(gram.size())), gram_(std::move(gram)) {
  if (N_ < 1) throw DomainError("hermitian space needs N >= 1");
  for (const auto& row : gram_) {
    if (static_cast<int>(row.size()) != N_) throw DomainError("Gram matrix must be square");
  }
  for (int i = 0; i < N_; ++i) {
    for (int j = 0; j < N_; ++j) {
      if (fq2_.conj(gram_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) !=
          gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
        throw DomainError("Gram matrix is not conjugate-symmetric");
      }
    }
  }
  if (LinAlg(fq2_.field()).rank(gram_) != N_) throw DomainError("Gram matrix is singular");
}

Elem HermSpace::pair(const Vec& x, const Vec& y) const {
  const GaloisField& F = fq2_.field();
  Elem acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0 || gram_[i][j] == 0) continue;
      acc = F.add(acc, F.mul(F.mul(x[i], gram_[i][j]), fq2_.conj(y[j])));
    }
  }
  return acc;
}

namespace {

struct IsotropicSearch {
  const HermSpace& space;
  std::size_t n;
  std::size_t k;
  std::vector<int> pivots;
  std::vector<bool> is_pivot;
  FMatrix rows;
  std::vector<FMatrix>* out;
  std::uint64_t work = 0;
  std::uint64_t budget;

  void fill(std::size_t i) {
    if (i == k) {
      out->push_back(rows);
      return;
    }
    std::vector<std::size_t> free;
    for (std::size_t c = static_cast<std::size_t>(pivots[i]) + 1; c < n; ++c) {
      if (!is_pivot[c]) free.push_back(c);
    }
    const unsigned Q = space.fq2().field().order();
    Vec& row = rows[i];
    std::fill(row.begin(), row.end(), 0);
    row[static_cast<std::size_t>(pivots[i])] = 1;
    Vec counter(free.size(), 0);
    while (true) {
      if (++work > budget) throw ResourceError("isotropic enumeration exceeded its budget");
      for (std::size_t t = 0; t < free.size(); ++t) row[free[t]] = counter[t];
      bool ok = space.pair(row, row) == 0;
      for (std::size_t j = 0; ok && j < i; ++j) ok = space.pair(rows[j], row) == 0;
      if (ok) fill(i + 1);
      std::size_t t = 0;
      while (t < counter.size() && ++counter[t] == Q) counter[t++] = 0;
      if (t == counter.size()) break;
    }
  }
};

mpz_class evaluate_at(const LaurentPoly& p, unsigned q) { return p.evaluate_integral(mpz_class(q)); }

mpz_class mpz_pow(unsigned q, int e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), q, static_cast<unsigned long>(e));
  return out;
}

}  // namespace

std::vector<FMatrix> enumerate_isotropic(const HermSpace& space, int dim, std::uint64_t budget) {
  const int N = space.N();
  if (dim < 0 || dim > N) throw DomainError("isotropic dimension out of range");
  const std::size_t n = static_cast<std::size_t>(N);
  const std::size_t k = static_cast<std::size_t>(dim);
  const std::uint64_t total = LinAlg::grassmannian_size(space.fq2().field().order(), static_cast<unsigned>(N),
                                                        static_cast<unsigned>(dim));
  if (total > budget) throw ResourceError("Grassmannian too large for isotropic enumeration");
  std::vector<FMatrix> out;
  IsotropicSearch search{space, n, k, std::vector<int>(k), std::vector<bool>(n, false), FMatrix(k, Vec(n, 0)), &out,
                         0, budget};
  if (k == 0) {
    out.push_back(FMatrix{});
    return out;
  }
  std::vector<bool> choose(n, false);
  std::fill(choose.begin(), choose.begin() + static_cast<long>(k), true);
  do {
    std::size_t idx = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (choose[c]) search.pivots[idx++] = static_cast<int>(c);
    }
    search.is_pivot = choose;
    for (auto& row : search.rows) std::fill(row.begin(), row.end(), 0);
    search.fill(0);
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return out;
}

std::uint64_t count_max_isotropic(unsigned q, int N, std::uint64_t budget) {
  return enumerate_isotropic(HermSpace(q, N), N / 2, budget).size();
}

std::uint64_t count_meeting(unsigned q, int N, int s, std::uint64_t budget) {
  const int r = N / 2;
  if (s < 0 || s > r) throw DomainError("meeting codimension out of range");
  HermSpace space(q, N);
  LinAlg la(space.fq2().field());
  FMatrix y0(static_cast<std::size_t>(r), Vec(static_cast<std::size_t>(N), 0));
  for (int i = 0; i < r; ++i) y0[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  std::uint64_t count = 0;
  for (const FMatrix& Y : enumerate_isotropic(space, r, budget)) {
    FMatrix both = Y;
    both.insert(both.end(), y0.begin(), y0.end());
    const int meet = 2 * r - la.rank(both);
    if (meet == r - s) ++count;
  }
  return count;
}

mpz_class max_isotropic_closed_form(unsigned q, int N) {
  return evaluate_at(odd_product(N / 2, N % 2 == 0 ? Parity::even : Parity::odd), q);
}

mpz_class meeting_closed_form(unsigned q, int N, int s) {
  const int r = N / 2;
  if (s < 0 || s > r) return 0;
  const int e = (N % 2 == 0) ? s * s : s * (s + 2);
  return mpz_pow(q, e) * evaluate_at(q_binomial(r, s, QBase::q_squared()), q);
}

// ---------------------------------------------------------------------------

SemilinearPair::SemilinearPair(unsigned q, int N, int d) : q_(q), N_(N), d_(d) {
  prime_power(q);
  if (N < 1 || d < 0 || d > N) throw DomainError("semilinear pair needs N >= 1 and 0 <= d <= N");
  // Admissibility is asserted once over F_{q²}.
  gram(*GaloisField::of_order(q * q));
}

Elem SemilinearPair::epsilon(const GaloisField& ext) const {
  if (q_ % 2 == 0) return 1;
  for (Elem x = 1; x < ext.order(); ++x) {
    if (ext.pow(x, static_cast<std::uint64_t>(q_) * q_) != x) continue;
    if (ext.pow(x, q_) == ext.neg(x)) return x;
  }
  throw InvariantViolation("no ε with ε^q = −ε");
}

FMatrix SemilinearPair::gram(const GaloisField& ext) const {
  const std::size_t n = static_cast<std::size_t>(N_);
  const std::size_t core = static_cast<std::size_t>(N_ - d_);
  const Elem eps = epsilon(ext);
  FMatrix J(n, Vec(n, 0));
  for (std::size_t i = 0; i < core; ++i) J[i][core - 1 - i] = eps;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (ext.pow(J[j][i], q_) != ext.neg(J[i][j])) throw InvariantViolation("semilinear Gram is not admissible");
    }
  }
  return J;
}

namespace {

struct SemilinearContext {
  std::shared_ptr<const GaloisField> ext;
  LinAlg la;
  FMatrix J;
  unsigned q;
  std::size_t n;

  SemilinearContext(const SemilinearPair& pair, int e)
      : ext(make_ext(pair.q(), e)), la(*ext), J(pair.gram(*ext)), q(pair.q()), n(static_cast<std::size_t>(pair.N())) {}

  static std::shared_ptr<const GaloisField> make_ext(unsigned q, int e) {
    if (e != 1 && e != 2) throw DomainError("only extension degrees 1 and 2 are supported");
    unsigned Q = 1;
    for (int i = 0; i < 2 * e; ++i) Q *= q;
    return GaloisField::of_order(Q);
  }

  /// H^⊣ = {y : σ(x)ᵀJ′y = 0 for x in H}.
  FMatrix right_perp(const FMatrix& H) const {
    const FMatrix sH = la.map(H, [&](Elem x) { return ext->pow(x, q); });
    return la.nullspace(la.multiply(sH, J), n);
  }
};

/// Rows of `big` extending `small` to a basis of `big`.
FMatrix complement_in(const LinAlg& la, const FMatrix& small, const FMatrix& big) {
  FMatrix acc = small;
  FMatrix out;
  int rank = la.rank(acc);
  for (const Vec& row : big) {
    acc.push_back(row);
    const int next = la.rank(acc);
    if (next > rank) {
      out.push_back(row);
      rank = next;
    } else {
      acc.pop_back();
    }
  }
  return out;
}

FMatrix combine(const LinAlg& la, const FMatrix& coeffs, const FMatrix& basis) { return la.multiply(coeffs, basis); }

}  // namespace

std::uint64_t dl_points(const SemilinearPair& pair, int h, int e, std::uint64_t budget) {
  const int N = pair.N();
  if (h < 0 || h > N || 2 * h < N + pair.radical_dim()) return 0;
  SemilinearContext ctx(pair, e);
  std::uint64_t count = 0;
  for (const FMatrix& H : ctx.la.subspaces(ctx.n, static_cast<std::size_t>(h), budget)) {
    if (ctx.la.contains(H, ctx.right_perp(H))) ++count;
  }
  return count;
}

std::uint64_t dl_bullet_points(const SemilinearPair& pair, int e, std::uint64_t budget) {
  const int N = pair.N();
  const int d = pair.radical_dim();
  const int c = (N + 1) / 2;
  if (c - 1 < d) return 0;
  SemilinearContext ctx(pair, e);
  const LinAlg& la = ctx.la;
  const std::size_t core = static_cast<std::size_t>(N - d);
  FMatrix whole(ctx.n, Vec(ctx.n, 0));
  for (std::size_t i = 0; i < ctx.n; ++i) whole[i][i] = 1;
  const FMatrix radical = ctx.right_perp(whole);
  // Subspaces of F^{N−d} sit on the leading coordinates.
  const FMatrix core_basis(whole.begin(), whole.begin() + static_cast<long>(core));
  std::uint64_t count = 0;
  for (const FMatrix& C : la.subspaces(core, static_cast<std::size_t>(c - 1 - d), budget)) {
    FMatrix H2 = la.sum(combine(la, C, core_basis), radical);
    const FMatrix H2perp = ctx.right_perp(H2);
    if (!la.contains(H2perp, H2)) continue;
    const FMatrix extra = complement_in(la, H2, H2perp);
    if (extra.empty()) continue;
    for (const FMatrix& line : la.subspaces(extra.size(), 1, budget)) {
      const FMatrix H1 = la.sum(H2, combine(la, line, extra));
      const FMatrix H1perp = ctx.right_perp(H1);
      if (la.contains(H1perp, H2) && la.contains(H2perp, H1perp)) ++count;
    }
  }
  return count;
}

// ---------------------------------------------------------------------------

std::string to_string(LatticeType t) {
  switch (t) {
    case LatticeType::circ:
      return "circ";
    case LatticeType::bullet:
      return "bullet";
    case LatticeType::other:
      return "other";
  }
  return "other";
}

std::string census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  out << "q,N,parameter,count,closed_form,match\n";
  for (const CensusRow& row : rows) {
    out << row.q << ',' << row.N << ',' << row.parameter << ',' << row.count.get_str() << ',' << row.closed_form
        << ',' << (row.match ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace heckelab
