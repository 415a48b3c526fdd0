#include "sklylab/zerodim.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "sklylab/error.hpp"
#include "sklylab/linalg.hpp"
#include "sklylab/upoly.hpp"

namespace sklylab {

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
  const auto& leads = gb.leading_monomials();
  const std::size_t n = gb.vars().size();
  if (gb.is_unit()) return {};
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (const auto& m : leads) {
      bool pure = m[i] > 0;
      for (std::size_t k = 0; k < n && pure; ++k)
        if (k != i && m[k]) pure = false;
      if (pure) found = true;
    }
    if (!found)
      throw Error(Errc::NotZeroDimensional, "no pure power of '" + gb.vars().name(i) + "' among leading monomials");
  }
  auto is_standard = [&](const Monomial& m) {
    for (const auto& l : leads)
      if (divides(l, m)) return false;
    return true;
  };
  std::set<Monomial> seen{Monomial{}};
  std::deque<Monomial> queue{Monomial{}};
  std::vector<Monomial> out;
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    out.push_back(m);
    for (std::size_t i = 0; i < n; ++i) {
      Monomial nm = m;
      ++nm[i];
      if (is_standard(nm) && seen.insert(nm).second) queue.push_back(nm);
    }
  }
  return out;
}

namespace {

// Finite-dimensional quotient k[x]/I with a fixed monomial basis.
class Quotient {
 public:
  explicit Quotient(const GroebnerBasis& gb) : gb_(gb), basis_(standard_monomials(gb)) {
    for (std::size_t k = 0; k < basis_.size(); ++k) index_[basis_[k]] = k;
  }

  std::size_t dim() const { return basis_.size(); }
  const FieldSpec& field() const { return gb_.field(); }

  Vec coords(const MPoly& f) const {
    MPoly r = gb_.reduce(f);
    Vec v(dim(), field().zero());
    for (const auto& [m, c] : r.terms()) v[index_.at(m)] = c;
    return v;
  }

  MPoly element(std::size_t k) const { return MPoly::term(gb_.vars(), field(), basis_[k], field().one()); }

  // Column k holds the coordinates of f * basis_k.
  Mat mult_matrix(const MPoly& f) const {
    Mat m(dim(), Vec(dim(), field().zero()));
    for (std::size_t k = 0; k < dim(); ++k) {
      Vec c = coords(f * element(k));
      for (std::size_t i = 0; i < dim(); ++i) m[i][k] = c[i];
    }
    return m;
  }

 private:
  const GroebnerBasis& gb_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
};

Vec mat_vec(const Mat& m, const Vec& v, const FieldSpec& F) {
  Vec r(m.size(), F.zero());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero() && !m[i][j].is_zero()) r[i] += m[i][j] * v[j];
  return r;
}

// Minimal polynomial of the multiplication operator `m` (acting on coords).
UPoly minimal_polynomial(const Mat& m, const Vec& one, const FieldSpec& F) {
  std::vector<Vec> powers{one};
  for (std::size_t k = 1; k <= m.size(); ++k) {
    powers.push_back(mat_vec(m, powers.back(), F));
    Mat a(m.size(), Vec(k + 1, F.zero()));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j <= k; ++j) a[i][j] = powers[j][i];
    auto ker = kernel(a, k + 1, F);
    if (!ker.empty()) return UPoly(F, ker.front()).monic();
  }
  throw Error(Errc::ShapeMismatch, "minimal polynomial search failed");
}

UPoly characteristic_polynomial(Mat h, const FieldSpec& F) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1].is_zero()) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    Scalar inv = h[m][m - 1].inverse();
    for (std::size_t j = m + 1; j < n; ++j) {
      Scalar u = h[j][m - 1] * inv;
      if (u.is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) h[j][k] -= u * h[m][k];
      for (std::size_t k = 0; k < n; ++k) h[k][m] += u * h[k][j];
    }
  }
  std::vector<UPoly> p{UPoly::constant(F, F.one())};
  UPoly t = UPoly::identity(F);
  for (std::size_t m = 1; m <= n; ++m) {
    UPoly pm = (t - UPoly::constant(F, h[m - 1][m - 1])) * p[m - 1];
    Scalar prod = F.one();
    for (std::size_t i = 1; i < m; ++i) {
      prod *= h[m - i][m - i - 1];
      pm = pm - p[m - i - 1] * (prod * h[m - i - 1][m - 1]);
    }
    p.push_back(pm);
  }
  return p.back();
}

std::complex<double> eval_c(const UPoly& f, std::complex<double> x) {
  std::complex<double> acc = 0;
  for (std::size_t k = f.coeffs().size(); k-- > 0;) acc = acc * x + f.coeffs()[k].to_complex();
  return acc;
}

std::vector<std::complex<double>> numeric_roots(const UPoly& f) {
  const int d = f.degree();
  std::vector<std::complex<double>> out;
  if (d < 1) return out;
  UPoly g = f.monic();
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -g.coeffs()[static_cast<std::size_t>(i)].to_complex();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  UPoly dg = g.derivative();
  for (int i = 0; i < d; ++i) {
    std::complex<double> x = es.eigenvalues()[i];
    for (int it = 0; it < 50; ++it) {
      std::complex<double> fx = eval_c(g, x), dx = eval_c(dg, x);
      if (std::abs(dx) == 0.0) break;
      std::complex<double> step = fx / dx;
      x -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    out.push_back(x);
  }
  return out;
}

// Continued-fraction guess of a rational close to x.
std::optional<mpq_class> rational_guess(double x) {
  if (!std::isfinite(x) || std::abs(x) > 1e12) return std::nullopt;
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 40; ++it) {
    double a = std::floor(r);
    mpz_class ai(static_cast<long>(a));
    mpz_class h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    mpq_class q(h1, k1);
    q.canonicalize();
    if (std::abs(q.get_d() - x) <= 1e-12 * std::max(1.0, std::abs(x))) return q;
    if (k1 > 100000000) break;
    double frac = r - a;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  return std::nullopt;
}

}  // namespace

ZeroDimSolution solve_zero_dim(const PolyIdeal& I, std::uint64_t seed) {
  const FieldSpec& F = I.field();
  if (!F.is_exact()) throw Error(Errc::Unsupported, "solve_zero_dim needs an exact field");
  const std::size_t n = I.vars().size();
  ZeroDimSolution sol;
  const GroebnerBasis& gb = I.basis(TermOrder::Grevlex);
  if (gb.is_unit()) return sol;
  Quotient Q(gb);
  sol.total_multiplicity = Q.dim();

  // Seidenberg: adding squarefree parts of the coordinate minimal
  // polynomials yields the radical.
  std::vector<MPoly> rad_gens = I.generators();
  Vec one = Q.coords(MPoly::constant(I.vars(), F, 1));
  for (std::size_t i = 0; i < n; ++i) {
    UPoly mp = minimal_polynomial(Q.mult_matrix(MPoly::variable(I.vars(), F, i)), one, F);
    UPoly sf = squarefree_part(mp);
    if (sf.degree() == mp.degree()) continue;
    MPoly xi = MPoly::variable(I.vars(), F, i);
    MPoly u(I.vars(), F);
    for (std::size_t k = 0; k < sf.coeffs().size(); ++k) u += xi.pow(static_cast<unsigned>(k)) * sf.coeffs()[k];
    rad_gens.push_back(u);
  }
  PolyIdeal radical(I.vars(), F, rad_gens);
  Quotient R(radical.basis(TermOrder::Grevlex));
  sol.distinct_count = R.dim();
  Vec rone = R.coords(MPoly::constant(I.vars(), F, 1));

  // Separating linear form on the radical quotient.
  std::mt19937_64 rng(seed);
  MPoly ell(I.vars(), F);
  UPoly ell_min;
  bool separated = false;
  for (int attempt = 0; attempt < 64 && !separated; ++attempt) {
    ell = MPoly(I.vars(), F);
    for (std::size_t i = 0; i < n; ++i) {
      long long c = attempt == 0 ? static_cast<long long>(i + 1) : static_cast<long long>(rng() % 41) - 20;
      ell += MPoly::variable(I.vars(), F, i) * F.from_int(c);
    }
    ell_min = minimal_polynomial(R.mult_matrix(ell), rone, F);
    separated = ell_min.degree() == static_cast<int>(R.dim());
  }
  if (!separated) throw Error(Errc::NotZeroDimensional, "no separating linear form found");

  // x_i = P_i(ell) on the radical quotient.
  const std::size_t D = R.dim();
  Mat Lmul = R.mult_matrix(ell);
  std::vector<Vec> lpow{rone};
  for (std::size_t k = 1; k < D; ++k) lpow.push_back(mat_vec(Lmul, lpow.back(), F));
  Mat A(D, Vec(D, F.zero()));
  for (std::size_t r = 0; r < D; ++r)
    for (std::size_t k = 0; k < D; ++k) A[r][k] = lpow[k][r];
  std::vector<UPoly> param;
  for (std::size_t i = 0; i < n; ++i) {
    auto x = solve(A, R.coords(MPoly::variable(I.vars(), F, i)), F);
    if (!x) throw Error(Errc::NotZeroDimensional, "parametrization failed");
    param.emplace_back(F, *x);
  }

  // Multiplicities from the characteristic polynomial on the full quotient.
  auto factors = squarefree_decomposition(characteristic_polynomial(Q.mult_matrix(ell), F));

  if (F.kind() == FieldSpec::Kind::PrimeField) {
    for (auto r : roots_mod_p(ell_min, seed)) {
      Scalar root(r, F.modulus());
      ZeroDimPoint pt;
      for (const auto& P : param) pt.exact.push_back(P.evaluate(root));
      for (const auto& [f, m] : factors)
        if (f.evaluate(root).is_zero()) pt.multiplicity = m;
      sol.points.push_back(std::move(pt));
    }
    return sol;
  }

  for (auto z : numeric_roots(ell_min)) {
    ZeroDimPoint pt;
    std::optional<Scalar> exact_root;
    if (std::abs(z.imag()) <= 1e-9 * std::max(1.0, std::abs(z))) {
      if (auto q = rational_guess(z.real())) {
        Scalar cand(*q);
        if (ell_min.evaluate(cand).is_zero()) exact_root = cand;
      }
    }
    if (exact_root) {
      for (const auto& P : param) {
        pt.exact.push_back(P.evaluate(*exact_root));
        pt.approx.push_back(pt.exact.back().to_complex());
      }
      for (const auto& [f, m] : factors)
        if (f.evaluate(*exact_root).is_zero()) pt.multiplicity = m;
    } else {
      for (const auto& P : param) pt.approx.push_back(eval_c(P, z));
      double best = INFINITY;
      for (const auto& [f, m] : factors) {
        double v = std::abs(eval_c(f.monic(), z));
        if (v < best) {
          best = v;
          pt.multiplicity = m;
        }
      }
    }
    sol.points.push_back(std::move(pt));
  }
  std::sort(sol.points.begin(), sol.points.end(), [](const ZeroDimPoint& a, const ZeroDimPoint& b) {
    for (std::size_t k = 0; k < a.approx.size(); ++k) {
      if (a.approx[k].real() != b.approx[k].real()) return a.approx[k].real() < b.approx[k].real();
      if (a.approx[k].imag() != b.approx[k].imag()) return a.approx[k].imag() < b.approx[k].imag();
    }
    return false;
  });
  return sol;
}

}  // namespace sklylab
