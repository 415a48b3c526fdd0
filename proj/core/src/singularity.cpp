#include "sklylab/singularity.hpp"

#include <chrono>

#include "sklylab/error.hpp"
#include "sklylab/upoly.hpp"

namespace sklylab {

namespace {

std::size_t index_or_throw(const VarTable& vars, const std::string& name) {
  auto i = vars.index_of(name);
  if (!i) throw Error(Errc::UnknownVariable, "presentation needs variable " + name);
  return *i;
}

std::array<std::size_t, 6> six_indices(const VarTable& vars) {
  return {index_or_throw(vars, "z0"), index_or_throw(vars, "z1"), index_or_throw(vars, "z2"),
          index_or_throw(vars, "z3"), index_or_throw(vars, "g1"), index_or_throw(vars, "g2")};
}

// Every term has total degree `deg` and uses only the variables in `allowed`.
bool is_form_in(const MPoly& f, const std::vector<std::size_t>& allowed, int deg) {
  for (const auto& [m, c] : f.terms()) {
    if (total_degree(m) != deg) return false;
    for (std::size_t i = 0; i < f.vars().size(); ++i)
      if (m[i] && std::find(allowed.begin(), allowed.end(), i) == allowed.end()) return false;
  }
  return true;
}

std::vector<std::size_t> z_vars(const VarTable& v) {
  auto s = six_indices(v);
  return {s[0], s[1], s[2], s[3]};
}
std::vector<std::size_t> g_vars(const VarTable& v) {
  auto s = six_indices(v);
  return {s[4], s[5]};
}

// Uniform g-degree of a nonzero form, or -1.
int g_form_degree(const MPoly& h) {
  if (h.is_zero()) return -1;
  const int d = h.total_degree();
  return is_form_in(h, g_vars(h.vars()), d) ? d : -1;
}

std::vector<MPoly> two_by_two_minors(const MPoly& F1, const MPoly& F2, const std::vector<std::size_t>& cols) {
  std::vector<MPoly> out;
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = i + 1; j < cols.size(); ++j) {
      MPoly m = jacobian_minor({F1, F2}, {0, 1}, {cols[i], cols[j]});
      if (!m.is_zero()) out.push_back(std::move(m));
    }
  return out;
}

PolyIdeal restricted_ideal(const std::vector<MPoly>& gens, const Scalar& c1, const Scalar& c2) {
  std::vector<MPoly> out;
  VarTable vars;
  for (const MPoly& g : gens) {
    MPoly r = restrict_to_slice(g, c1, c2);
    vars = r.vars();
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return PolyIdeal(vars, gens.front().field(), std::move(out));
}

}  // namespace

const char* to_string(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

std::array<std::array<int, 2>, 2> pairing_of(RhoType r) {
  switch (r) {
    case RhoType::Rho1: return {{{0, 3}, {1, 2}}};
    case RhoType::Rho2: return {{{0, 2}, {1, 3}}};
    default: return {{{0, 1}, {2, 3}}};
  }
}

bool binary_forms_share_factor(const MPoly& h1, const MPoly& h2) {
  const int d1 = g_form_degree(h1), d2 = g_form_degree(h2);
  if (d1 < 0 || d2 < 0) throw Error(Errc::DegreeMismatch, "expected nonzero homogeneous forms in g1, g2");
  const auto g = g_vars(h1.vars());
  const FieldSpec& F = h1.field();
  // Dehomogenize at g2 = 1: coefficient of g1^i g2^(d-i) goes to t^i.
  auto dehom = [&](const MPoly& h, int d) {
    std::vector<Scalar> c(d + 1, F.zero());
    for (const auto& [m, v] : h.terms()) c[m[g[0]]] = v;
    return UPoly(F, c);
  };
  const UPoly u1 = dehom(h1, d1), u2 = dehom(h2, d2);
  // Both divisible by g2 exactly when neither reaches t^d.
  if (u1.degree() < d1 && u2.degree() < d2) return true;
  return gcd(u1, u2).degree() > 0;
}

CenterPresentation build_even_presentation(RhoType pairing, const MPoly& a1, const MPoly& a2, const MPoly& h1,
                                           const MPoly& h2, int s, const EvenBuildOptions& opts) {
  if (s < 1) throw Error(Errc::RangeError, "s must be positive");
  const VarTable& vars = a1.vars();
  for (const MPoly* p : {&a2, &h1, &h2})
    if (!(p->vars() == vars)) throw Error(Errc::ShapeMismatch, "presentation parts live in different rings");
  const auto z = z_vars(vars);
  for (const MPoly* a : {&a1, &a2})
    if (a->is_zero() || !is_form_in(*a, z, 1))
      throw Error(Errc::DegenerateAForm, "a-forms must be nonzero linear forms in z0..z3");
  if (g_form_degree(h1) != s || g_form_degree(h2) != s)
    throw Error(Errc::DegreeMismatch, "h-forms must be forms of degree " + std::to_string(s) + " in g1, g2");

  const auto pr = pairing_of(pairing);
  if (opts.validate) {
    // Each a-form must reach into the opposite pair.
    Monomial m2{}, m1{};
    m2[z[pr[0][1]]] = 1;
    m1[z[pr[1][1]]] = 1;
    if (a2.coefficient(m2).is_zero())
      throw Error(Errc::DegenerateAForm, "a2 must involve z" + std::to_string(pr[0][1]));
    if (a1.coefficient(m1).is_zero())
      throw Error(Errc::DegenerateAForm, "a1 must involve z" + std::to_string(pr[1][1]));
    if (binary_forms_share_factor(h1, h2)) throw Error(Errc::CommonFactorH, "h1 and h2 share a factor");
  }

  const FieldSpec& F = a1.field();
  auto zv = [&](int k) { return MPoly::variable(vars, F, z[k]); };
  CenterPresentation P;
  P.n = 2 * s;
  P.parity = Parity::Even;
  P.pairing = pairing;
  P.a1 = a1;
  P.a2 = a2;
  P.h1 = h1;
  P.h2 = h2;
  P.F1 = (a1 - h1).pow(2) - zv(pr[0][0]) * zv(pr[0][1]);
  P.F2 = (a2 - h2).pow(2) - zv(pr[1][0]) * zv(pr[1][1]);
  P.label = "even-" + to_string(pairing) + "-s" + std::to_string(s);
  return P;
}

CenterPresentation build_odd_presentation(const MPoly& quad1, const MPoly& h1, const MPoly& quad2,
                                          const MPoly& h2) {
  const VarTable& vars = quad1.vars();
  for (const MPoly* p : {&h1, &quad2, &h2})
    if (!(p->vars() == vars)) throw Error(Errc::ShapeMismatch, "presentation parts live in different rings");
  const auto z = z_vars(vars);
  for (const MPoly* q : {&quad1, &quad2})
    if (q->is_zero() || !is_form_in(*q, z, 2))
      throw Error(Errc::DegreeMismatch, "quadratic parts must be nonzero quadratic forms in z0..z3");
  const int d1 = g_form_degree(h1), d2 = g_form_degree(h2);
  if (d1 < 1 || d1 != d2) throw Error(Errc::DegreeMismatch, "h-forms must be forms of one positive degree in g");
  for (std::size_t k = 0; k < 4; ++k)
    if (vars.weight(z[k]) != d1)
      throw Error(Errc::DegreeMismatch, "z weights must equal the degree of the h-forms");

  CenterPresentation P;
  P.n = d1;
  P.parity = Parity::Odd;
  P.quad1 = quad1;
  P.quad2 = quad2;
  P.h1 = h1;
  P.h2 = h2;
  P.F1 = quad1 + h1;
  P.F2 = quad2 + h2;
  P.label = "odd-n" + std::to_string(d1);
  return P;
}

PolyIdeal singular_locus_ideal(const CenterPresentation& P) {
  const auto idx = six_indices(P.vars());
  std::vector<MPoly> gens{P.F1, P.F2};
  for (MPoly& m : two_by_two_minors(P.F1, P.F2, {idx.begin(), idx.end()})) gens.push_back(std::move(m));
  return PolyIdeal(P.vars(), P.field(), std::move(gens));
}

std::array<PolyIdeal, 2> even_components(const CenterPresentation& P) {
  if (P.parity != Parity::Even) throw Error(Errc::InvalidInstance, "even components need an even presentation");
  const auto z = z_vars(P.vars());
  const auto pr = pairing_of(P.pairing);
  auto zv = [&](int k) { return MPoly::variable(P.vars(), P.field(), z[k]); };
  PolyIdeal I1(P.vars(), P.field(), {P.a1 - P.h1, zv(pr[0][0]), zv(pr[0][1]), P.F2});
  PolyIdeal I2(P.vars(), P.field(), {P.a2 - P.h2, zv(pr[1][0]), zv(pr[1][1]), P.F1});
  return {I1, I2};
}

SingularLocusReport verify_even_decomposition(const CenterPresentation& P,
                                              std::optional<std::array<Scalar, 2>> slice) {
  const auto t0 = std::chrono::steady_clock::now();
  SingularLocusReport r;
  const PolyIdeal sing = singular_locus_ideal(P);
  const auto comps = even_components(P);
  r.singular_generators = sing.generators();
  r.components = {comps[0].generators(), comps[1].generators()};

  r.variety_equal = variety_equal(sing, comps[0].product(comps[1]));

  std::vector<MPoly> all_vars;
  for (std::size_t i = 0; i < P.vars().size(); ++i) all_vars.push_back(MPoly::variable(P.vars(), P.field(), i));
  r.origin_only = variety_equal(comps[0] + comps[1], PolyIdeal(P.vars(), P.field(), all_vars));

  if (slice) {
    std::array<std::size_t, 2> counts{};
    for (int c = 0; c < 2; ++c)
      counts[c] = solve_zero_dim(restricted_ideal(comps[c].generators(), (*slice)[0], (*slice)[1])).total_multiplicity;
    r.component_slice_counts = counts;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::array<std::array<Scalar, 6>, 2> jacobian_at(const CenterPresentation& P, const std::vector<Scalar>& pt) {
  const auto idx = six_indices(P.vars());
  std::array<std::array<Scalar, 6>, 2> J;
  for (int k = 0; k < 6; ++k) {
    J[0][k] = P.F1.derivative(idx[k]).evaluate(pt);
    J[1][k] = P.F2.derivative(idx[k]).evaluate(pt);
  }
  return J;
}

int jacobian_rank_at(const CenterPresentation& P, const std::vector<Scalar>& pt) {
  const auto J = jacobian_at(P, pt);
  bool any = false;
  for (int k = 0; k < 6; ++k) any = any || !J[0][k].is_zero() || !J[1][k].is_zero();
  if (!any) return 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (!(J[0][i] * J[1][j] - J[0][j] * J[1][i]).is_zero()) return 2;
  return 1;
}

NodalCurveReport nodal_curve_check(const CenterPresentation& P, const NodalCurveSpec& C,
                                   const std::vector<Scalar>& ts) {
  if (C.apex < 0 || C.apex > 3) throw Error(Errc::RangeError, "apex must be a coordinate point e0..e3");
  const FieldSpec& F = P.field();
  const auto idx = six_indices(P.vars());
  auto point = [&](const Scalar& t) {
    std::vector<Scalar> pt(P.vars().size(), F.zero());
    pt[idx[C.apex]] = t.pow(P.n);
    pt[idx[4]] = t * t * C.direction[0];
    pt[idx[5]] = t * t * C.direction[1];
    return pt;
  };
  NodalCurveReport r;
  const auto base = point(F.one());
  r.compatible = P.F1.evaluate(base).is_zero() && P.F2.evaluate(base).is_zero();
  for (const Scalar& t : ts) {
    const auto pt = point(t);
    const bool ok = P.F1.evaluate(pt).is_zero() && P.F2.evaluate(pt).is_zero() && jacobian_rank_at(P, pt) <= 1;
    r.samples.emplace_back(t, ok);
    r.ok = r.ok && ok;
  }
  r.ok = r.ok && r.compatible;
  return r;
}

PolyIdeal slice_singular_ideal(const CenterPresentation& P, const Scalar& c1, const Scalar& c2) {
  const MPoly f1 = restrict_to_slice(P.F1, c1, c2), f2 = restrict_to_slice(P.F2, c1, c2);
  std::vector<MPoly> gens;
  for (const MPoly* f : {&f1, &f2})
    if (!f->is_zero()) gens.push_back(*f);
  for (MPoly& m : two_by_two_minors(f1, f2, {0, 1, 2, 3})) gens.push_back(std::move(m));
  return PolyIdeal(f1.vars(), P.field(), std::move(gens));
}

ZeroDimSolution slice_singular_points(const CenterPresentation& P, const Scalar& c1, const Scalar& c2,
                                      std::uint64_t seed) {
  return solve_zero_dim(slice_singular_ideal(P, c1, c2), seed);
}

}  // namespace sklylab
