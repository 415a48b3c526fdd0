#include "sklylab/heisenberg.hpp"

#include <cmath>
#include <map>
#include <set>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "sklylab/error.hpp"

namespace sklylab {

namespace {

using cd = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;

cd to_cd(const Scalar& s) {
  if (s.is_residue()) throw Error(Errc::Unsupported, "the H4 action needs rational or complex parameters");
  return s.to_complex();
}

struct Roots4 {
  cd A, B, C;
};

Roots4 fourth_roots(const SklyaninParams& p) {
  return {std::pow(to_cd(p.alpha), 0.25), std::pow(to_cd(p.beta), 0.25), std::pow(to_cd(p.gamma), 0.25)};
}

double max_abs(const CMat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

HeisenbergConstants heisenberg_constants(const SklyaninParams& p) {
  const cd al = to_cd(p.alpha), be = to_cd(p.beta), ga = to_cd(p.gamma);
  if (std::abs(al * be * ga) < 1e-12) throw Error(Errc::DegenerateParams, "alpha*beta*gamma = 0");
  return {std::sqrt(al), std::sqrt(be), std::sqrt(ga), std::polar(1.0, 3 * kPi / 4)};
}

H4Generators build_generators(const SklyaninParams& p) {
  H4Generators g;
  g.k = heisenberg_constants(p);
  const auto [A, B, C] = fourth_roots(p);
  const cd xi = g.k.xi;
  const cd I(0, 1);

  g.eps1 = CMat::Zero(4, 4);
  g.eps1(0, 1) = B * C / xi;
  g.eps1(1, 0) = xi / (B * C);
  g.eps1(2, 3) = B / C * xi;
  g.eps1(3, 2) = -C / (B * xi);

  g.eps2 = CMat::Zero(4, 4);
  g.eps2(0, 2) = A * C / xi;
  g.eps2(1, 3) = -A / (C * xi);
  g.eps2(2, 0) = xi / (A * C);
  g.eps2(3, 1) = C / A * xi;

  g.eps = -I * CMat::Identity(4, 4);
  return g;
}

PresentationReport verify_presentation(const CMat& e, const CMat& e1, const CMat& e2, Convention conv) {
  const auto n = e.rows();
  const CMat id = CMat::Identity(n, n);
  PresentationReport r;
  auto add = [&](std::string name, const CMat& diff) {
    const double v = max_abs(diff);
    r.residuals.push_back({std::move(name), v});
    r.max_residual = std::max(r.max_residual, v);
  };
  add("e^4 = 1", e * e * e * e - id);
  add("e1^4 = 1", e1 * e1 * e1 * e1 - id);
  add("e2^4 = 1", e2 * e2 * e2 * e2 - id);
  add("e e1 = e1 e", e * e1 - e1 * e);
  add("e e2 = e2 e", e * e2 - e2 * e);
  if (conv == Convention::Row)
    add("e1 e2 = e e2 e1", e1 * e2 - e * e2 * e1);
  else
    add("e1 e2 = e^-1 e2 e1", e1 * e2 - e * e * e * e2 * e1);
  return r;
}

std::vector<CMat> enumerate_group(const std::vector<CMat>& generators, std::size_t cap) {
  if (generators.empty()) throw Error(Errc::ShapeMismatch, "no generators");
  const auto n = generators.front().rows();
  auto key = [](const CMat& m) {
    std::vector<long long> k;
    k.reserve(2 * m.size());
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      k.push_back(std::llround(m(i).real() * 1e7));
      k.push_back(std::llround(m(i).imag() * 1e7));
    }
    return k;
  };
  std::set<std::vector<long long>> seen;
  std::vector<CMat> elems{CMat::Identity(n, n)};
  seen.insert(key(elems[0]));
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const CMat& g : generators) {
      CMat prod = elems[head] * g;
      if (seen.insert(key(prod)).second) {
        if (elems.size() >= cap)
          throw Error(Errc::ClosureExplosion, "group closure exceeded " + std::to_string(cap) + " elements");
        elems.push_back(std::move(prod));
      }
    }
  }
  return elems;
}

CMat relation_matrix(const SklyaninParams& p) {
  const RelationSet rs = build_relations(p);
  CMat R(16, 6);
  for (int j = 0; j < 6; ++j)
    for (int i = 0; i < 16; ++i) R(i, j) = to_cd(rs.rows[j][i]);
  return R;
}

namespace {

// Row-convention T acts on degree-2 coefficient vectors by (T^t (x) T^t).
CMat square_action(const CMat& m) {
  const CMat t = m.transpose();
  CMat k(16, 16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) k.block(4 * i, 4 * j, 4, 4) = t(i, j) * t;
  return k;
}

}  // namespace

double automorphism_residual(const CMat& m, const CMat& relations) {
  const CMat K = square_action(m);
  Eigen::HouseholderQR<CMat> qr(relations);
  const CMat Q = qr.householderQ() * CMat::Identity(relations.rows(), relations.cols());
  double worst = 0;
  for (Eigen::Index j = 0; j < relations.cols(); ++j) {
    const Eigen::VectorXcd v = K * relations.col(j);
    const Eigen::VectorXcd resid = v - Q * (Q.adjoint() * v);
    worst = std::max(worst, resid.norm() / std::max(v.norm(), 1e-300));
  }
  return worst;
}

bool is_algebra_automorphism(const CMat& m, const CMat& relations, double tol) {
  return automorphism_residual(m, relations) < tol;
}

CMat induced_action_on_g(const CMat& m, const SklyaninParams& p, double tol) {
  const cd al = to_cd(p.alpha), be = to_cd(p.beta), ga = to_cd(p.gamma);
  Eigen::VectorXcd g1 = Eigen::VectorXcd::Zero(16), g2 = Eigen::VectorXcd::Zero(16);
  g1(0) = -1.0;
  g1(5) = g1(10) = g1(15) = 1.0;
  g2(5) = 1.0;
  g2(10) = (1.0 + al) / (1.0 - be);
  g2(15) = (1.0 - al) / (1.0 + ga);

  CMat basis(16, 8);
  basis.col(0) = g1;
  basis.col(1) = g2;
  basis.rightCols(6) = relation_matrix(p);
  const auto solver = basis.colPivHouseholderQr();

  const CMat K = square_action(m);
  CMat out(2, 2);
  for (int k = 0; k < 2; ++k) {
    const Eigen::VectorXcd img = K * (k == 0 ? g1 : g2);
    const Eigen::VectorXcd coef = solver.solve(img);
    const double resid = (basis * coef - img).norm() / std::max(img.norm(), 1e-300);
    if (resid > tol)
      throw Error(Errc::NotInGSpan, "image of g" + std::to_string(k + 1) + " leaves span(g1, g2) + R");
    out(0, k) = coef(0);
    out(1, k) = coef(1);
  }
  return out;
}

std::array<CMat, 2> expected_g_action(const SklyaninParams& p) {
  const auto k = heisenberg_constants(p);
  const cd al = to_cd(p.alpha), be = to_cd(p.beta), ga = to_cd(p.gamma);
  const cd I(0, 1);
  CMat m1(2, 2), m2(2, 2);
  m1 << 1.0, 1.0, -1.0 - be * ga, -1.0;
  m2 << 1.0, (1.0 + al) / (1.0 - be), -1.0 - ga, -1.0;
  return {CMat(I / (k.b * k.c) * m1), CMat(I / (k.a * k.c) * m2)};
}

RhoType parse_rho(const std::string& s) {
  if (s == "rho1" || s == "1") return RhoType::Rho1;
  if (s == "rho2" || s == "2") return RhoType::Rho2;
  if (s == "rho3" || s == "3") return RhoType::Rho3;
  throw Error(Errc::ParseError, "unknown representation '" + s + "'");
}

std::string to_string(RhoType r) {
  switch (r) {
    case RhoType::Rho1: return "rho1";
    case RhoType::Rho2: return "rho2";
    default: return "rho3";
  }
}

EvenIrrepReport verify_even_irrep(const SklyaninParams& p, int s, RhoType rho) {
  if (s < 1) throw Error(Errc::RangeError, "s must be positive");
  const auto k = heisenberg_constants(p);
  const int n = 2 * s;
  const cd xin = std::pow(k.xi, n);
  const cd as = std::pow(k.a, s), bs = std::pow(k.b, s), cs = std::pow(k.c, s);

  EvenIrrepReport r;
  r.eps = ((s % 2 == 0) ? 1.0 : -1.0) * CMat::Identity(2, 2);
  r.eps1 = CMat::Identity(2, 2);
  r.eps2 = CMat::Identity(2, 2);
  auto swap = [](cd top, cd bottom) {
    CMat m = CMat::Zero(2, 2);
    m(0, 1) = top;
    m(1, 0) = bottom;
    return m;
  };
  switch (rho) {
    case RhoType::Rho1:
      r.eps1 = swap(xin / cs, cs / xin);
      r.eps2 = swap(1.0 / cs, cs);
      break;
    case RhoType::Rho2:
      r.eps1 = swap(1.0 / bs, bs);
      break;
    case RhoType::Rho3:
      r.eps2 = swap(1.0 / (as * xin), as * xin);
      break;
  }
  r.presentation = verify_presentation(r.eps, r.eps1, r.eps2, Convention::Column);

  const CMat ab = r.eps1 * r.eps2, ba = r.eps2 * r.eps1;
  r.commutator_scalar = (ba.inverse() * ab).trace() / 2.0;
  r.commute_up_to_scalar = max_abs(ab - r.commutator_scalar * ba) < 1e-9;

  // Reducible iff e1 and e2 share an eigenvector.
  auto shares = [](const CMat& a, const CMat& b) {
    if (max_abs(a - a(0, 0) * CMat::Identity(2, 2)) < 1e-12) return true;
    Eigen::ComplexEigenSolver<CMat> es(a);
    for (int i = 0; i < 2; ++i) {
      const Eigen::Vector2cd v = es.eigenvectors().col(i);
      const Eigen::Vector2cd w = b * v;
      if (std::abs(v(0) * w(1) - v(1) * w(0)) < 1e-9 * std::max(1.0, w.norm())) return true;
    }
    return false;
  };
  r.irreducible = !shares(r.eps1, r.eps2);
  return r;
}

std::array<CMat, 3> z_action_generators(const SklyaninParams& p, int n) {
  if (n < 1) throw Error(Errc::RangeError, "PI degree must be positive");
  const auto k = heisenberg_constants(p);
  const cd xn = std::pow(k.xi, n), xmn = std::pow(k.xi, -n);
  const double sg = (n % 2 == 0) ? 1.0 : -1.0;
  // x^{n/2} for x in {a, b, c}, through the principal fourth roots.
  const auto [A, B, C] = fourth_roots(p);
  auto half = [n](cd fourth_root, int sign) { return std::pow(fourth_root, sign * n); };

  CMat e1 = CMat::Zero(4, 4), e2 = CMat::Zero(4, 4);
  e1(0, 1) = half(B, -1) * half(C, -1) * xn;
  e1(1, 0) = half(B, 1) * half(C, 1) * xmn;
  e1(2, 3) = sg * half(B, -1) * half(C, 1) * xmn;
  e1(3, 2) = half(B, 1) * half(C, -1) * xn;

  e2(0, 2) = half(A, -1) * half(C, -1) * xn;
  e2(1, 3) = half(A, -1) * half(C, 1) * xn;
  e2(2, 0) = half(A, 1) * half(C, 1) * xmn;
  e2(3, 1) = sg * half(A, 1) * half(C, -1) * xmn;

  const CMat e = std::pow(cd(0, -1), n) * CMat::Identity(4, 4);
  return {e, e1, e2};
}

double z_action_power_deviation(const SklyaninParams& p, int n) {
  const auto gens = build_generators(p);
  const auto z = z_action_generators(p, n);
  auto entrywise = [n](const CMat& m) {
    CMat out = m.transpose();
    for (Eigen::Index i = 0; i < out.size(); ++i)
      if (std::abs(out(i)) > 0) out(i) = std::pow(out(i), n);
    return out;
  };
  return std::max({max_abs(z[0] - entrywise(gens.eps)), max_abs(z[1] - entrywise(gens.eps1)),
                   max_abs(z[2] - entrywise(gens.eps2))});
}

}  // namespace sklylab
