#include "sklylab/geometry.hpp"

#include <cmath>
#include <random>

#include "sklylab/error.hpp"
#include "sklylab/groebner.hpp"

namespace sklylab {

ProjPoint::ProjPoint(std::array<Scalar, 4> coords) : c_(std::move(coords)) {
  std::size_t lead = 4;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!c_[i].is_zero()) {
      lead = i;
      break;
    }
  }
  if (lead == 4) throw Error(Errc::ShapeMismatch, "projective point with all coordinates zero");
  Scalar inv = c_[lead].inverse();
  for (auto& x : c_) x *= inv;
}

std::string ProjPoint::to_string() const {
  return "[" + c_[0].to_string() + ":" + c_[1].to_string() + ":" + c_[2].to_string() + ":" + c_[3].to_string() + "]";
}

ProjPoint coordinate_point(const FieldSpec& field, int i) {
  std::array<Scalar, 4> c{field.zero(), field.zero(), field.zero(), field.zero()};
  c[static_cast<std::size_t>(i)] = field.one();
  return ProjPoint(c);
}

namespace {

VarTable curve_vars() {
  static const VarTable vars({"v0", "v1", "v2", "v3"});
  return vars;
}

// Sigma cubics with coefficients given as polynomials over `vars`, whose
// first four variables are v0..v3.
std::array<MPoly, 4> sigma_cubics(const VarTable& vars, const FieldSpec& F, const MPoly& a, const MPoly& b,
                                  const MPoly& c) {
  auto v = [&](std::size_t i) { return MPoly::variable(vars, F, i); };
  const MPoly v0 = v(0), v1 = v(1), v2 = v(2), v3 = v(3);
  const MPoly s0 = v0 * v0, s1 = v1 * v1, s2 = v2 * v2, s3 = v3 * v3;
  const MPoly bc = b * c, ac = a * c, ab = a * b;
  const MPoly two = MPoly::constant(vars, F, 2);
  return {
      -(two * a * b * c * v1 * v2 * v3) - v0 * (-s0 + bc * s1 + ac * s2 + ab * s3),
      two * a * v0 * v2 * v3 + v1 * (s0 - bc * s1 + ac * s2 + ab * s3),
      two * b * v0 * v1 * v3 + v2 * (s0 + bc * s1 - ac * s2 + ab * s3),
      two * c * v0 * v1 * v2 + v3 * (s0 + bc * s1 + ac * s2 - ab * s3),
  };
}

bool approx_vanishes(const MPoly& f, const std::vector<Scalar>& pt, double tol) {
  std::complex<double> value = 0;
  double scale = 0;
  for (const auto& [m, c] : f.terms()) {
    std::complex<double> t = c.to_complex();
    for (std::size_t i = 0; i < pt.size(); ++i)
      if (m[i]) t *= std::pow(pt[i].to_complex(), static_cast<int>(m[i]));
    value += t;
    scale += std::abs(t);
  }
  return std::abs(value) <= tol * std::max(1.0, scale);
}

}  // namespace

CurveE build_curve(const SklyaninParams& p) {
  const FieldSpec& F = p.field;
  const VarTable vars = curve_vars();
  const Scalar one = F.one();
  auto v = [&](std::size_t i) { return MPoly::variable(vars, F, i); };
  CurveE E{vars, MPoly(vars, F), MPoly(vars, F)};
  E.phi1 = v(0) * v(0) + v(1) * v(1) + v(2) * v(2) + v(3) * v(3);
  E.phi2 = v(1) * v(1) * ((one - p.gamma) / (one + p.alpha)) + v(2) * v(2) * ((one + p.gamma) / (one - p.beta)) +
           v(3) * v(3);
  return E;
}

bool on_curve(const CurveE& E, const ProjPoint& pt) {
  auto x = pt.as_vector();
  if (!E.phi1.field().is_exact()) {
    double tol = E.phi1.field().tolerance();
    return approx_vanishes(E.phi1, x, tol) && approx_vanishes(E.phi2, x, tol);
  }
  return E.phi1.evaluate(x).is_zero() && E.phi2.evaluate(x).is_zero();
}

SigmaMap SigmaMap::from_params(const SklyaninParams& p) {
  const VarTable vars = curve_vars();
  const FieldSpec& F = p.field;
  return {sigma_cubics(vars, F, MPoly::constant(vars, F, p.alpha), MPoly::constant(vars, F, p.beta),
                       MPoly::constant(vars, F, p.gamma))};
}

SigmaMap SigmaMap::perturbed(std::size_t component, const Monomial& monomial, const Scalar& delta) const {
  SigmaMap m = *this;
  m.components.at(component).add_term(monomial, delta);
  return m;
}

ProjPoint SigmaMap::apply(const ProjPoint& pt) const {
  auto x = pt.as_vector();
  std::array<Scalar, 4> out;
  bool all_zero = true;
  for (std::size_t i = 0; i < 4; ++i) {
    out[i] = components[i].evaluate(x);
    if (!out[i].is_zero()) all_zero = false;
  }
  if (all_zero) throw Error(Errc::Indeterminacy, "sigma is undefined at " + pt.to_string());
  return ProjPoint(out);
}

ProjPoint sigma_apply(const SklyaninParams& p, const ProjPoint& pt) { return SigmaMap::from_params(p).apply(pt); }

ProjPoint find_point_fp(const SklyaninParams& p, std::uint64_t seed, int attempt_cap) {
  if (p.field.kind() != FieldSpec::Kind::PrimeField) throw Error(Errc::Unsupported, "find_point_fp needs F_p");
  const FieldSpec& F = p.field;
  const std::uint64_t q = F.modulus();
  const Scalar one = F.one();
  const Scalar A = (one - p.gamma) / (one + p.alpha);
  const Scalar B = (one + p.gamma) / (one - p.beta);
  std::mt19937_64 rng(seed);
  auto root = [&](const Scalar& s) {
    Scalar r(sqrt_mod_p(s.residue(), q), q);
    return (rng() & 1) ? -r : r;
  };
  for (int attempt = 0; attempt < attempt_cap; ++attempt) {
    Scalar t(rng() % q, q);
    try {
      Scalar v1, v2, v3 = one;
      // phi2 = A v1^2 + B v2^2 + v3^2 fixes one square, phi1 the other.
      if (!A.is_zero()) {
        v2 = t;
        v1 = root(-(B * v2 * v2 + one) / A);
      } else {
        v1 = t;
        v2 = root(-(A * v1 * v1 + one) / B);
      }
      Scalar v0 = root(-(v1 * v1 + v2 * v2 + v3 * v3));
      return ProjPoint({v0, v1, v2, v3});
    } catch (const Error& e) {
      if (e.code() != Errc::NonResidue) throw;
    }
  }
  throw Error(Errc::NoPointFound, "no point on E found after " + std::to_string(attempt_cap) + " attempts");
}

std::uint64_t hasse_bound(std::uint64_t p) {
  return p + 1 + 2 * static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(p))));
}

SigmaOrderResult sigma_order(const SklyaninParams& p, int samples, std::uint64_t cap, std::uint64_t seed) {
  if (p.field.kind() != FieldSpec::Kind::PrimeField) throw Error(Errc::Unsupported, "sigma_order needs F_p");
  if (samples < 1) throw Error(Errc::RangeError, "sigma_order needs at least one sample");
  const SigmaMap sigma = SigmaMap::from_params(p);
  SigmaOrderResult res;
  std::uint64_t s = seed;
  int attempts = 0;
  while (static_cast<int>(res.witnesses.size()) < samples) {
    if (++attempts > 20 * samples)
      throw Error(Errc::Indeterminacy, "every sampled orbit meets an indeterminacy point of the sigma formula");
    ProjPoint start = find_point_fp(p, s++);
    std::optional<std::uint64_t> k;
    try {
      ProjPoint cur = sigma.apply(start);
      std::uint64_t steps = 1;
      while (cur != start && steps < cap) {
        cur = sigma.apply(cur);
        ++steps;
      }
      if (cur == start) k = steps;
    } catch (const Error& e) {
      if (e.code() != Errc::Indeterminacy) throw;
      ++res.skipped_indeterminate;
      continue;
    }
    res.witnesses.push_back(start);
    res.per_point.push_back(k);
  }
  std::optional<std::uint64_t> common;
  bool unknown = false;
  for (const auto& k : res.per_point) {
    if (!k) {
      unknown = true;
      continue;
    }
    if (common && *common != *k)
      throw Error(Errc::DisagreementAcrossPoints, "orbit lengths " + std::to_string(*common) + " and " +
                                                      std::to_string(*k) + " differ");
    common = k;
  }
  if (!unknown) res.order = common;
  return res;
}

PreservationResult sigma_preserves_E(const SklyaninParams& p, int trials, std::uint64_t seed,
                                     const SigmaMap* override_map) {
  const SigmaMap sigma = override_map ? *override_map : SigmaMap::from_params(p);
  const CurveE E = build_curve(p);
  const FieldSpec& F = p.field;
  PreservationResult res;
  res.trials = trials;
  if (F.kind() == FieldSpec::Kind::Rational) {
    res.method = "symbolic";
    PolyIdeal I(E.vars, F, {E.phi1, E.phi2});
    std::vector<MPoly> comps(sigma.components.begin(), sigma.components.end());
    for (const MPoly* phi : {&E.phi1, &E.phi2})
      if (!ideal_member(compose(*phi, comps), I)) res.ok = false;
    return res;
  }
  res.method = "sampled";
  if (F.kind() == FieldSpec::Kind::PrimeField) {
    for (int t = 0; t < trials; ++t) {
      ProjPoint pt = find_point_fp(p, seed + static_cast<std::uint64_t>(t));
      std::optional<ProjPoint> img;
      try {
        img = sigma.apply(pt);
      } catch (const Error& e) {
        if (e.code() != Errc::Indeterminacy) throw;
        continue;  // sigma is only defined on an open subset
      }
      if (!on_curve(E, *img)) {
        res.ok = false;
        res.witness = pt;
        return res;
      }
    }
    return res;
  }
  // Complex: numeric points from v3 = 1 and a random v2.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  const double tol = F.tolerance();
  const auto A = ((F.one() - p.gamma) / (F.one() + p.alpha)).to_complex();
  const auto B = ((F.one() + p.gamma) / (F.one() - p.beta)).to_complex();
  for (int t = 0; t < trials; ++t) {
    std::complex<double> v2(U(rng), U(rng));
    std::complex<double> v1 = std::sqrt(-(B * v2 * v2 + 1.0) / A);
    std::complex<double> v0 = std::sqrt(-(v1 * v1 + v2 * v2 + 1.0));
    ProjPoint pt({Scalar(v0, tol), Scalar(v1, tol), Scalar(v2, tol), Scalar(std::complex<double>(1.0), tol)});
    auto x = pt.as_vector();
    std::vector<Scalar> img;
    double mx = 0;
    for (const auto& c : sigma.components) {
      img.push_back(c.evaluate(x));
      mx = std::max(mx, std::abs(img.back().to_complex()));
    }
    if (mx == 0) continue;
    for (auto& s : img) s = Scalar(s.to_complex() / mx, tol);
    // Cubic images lose a few digits; allow for that in the check.
    if (!approx_vanishes(E.phi1, img, 1e3 * tol) || !approx_vanishes(E.phi2, img, 1e3 * tol)) {
      res.ok = false;
      res.witness = pt;
      return res;
    }
  }
  return res;
}

FixedPointCheck sigma_fixes_coordinate_points() {
  const FieldSpec F;
  const VarTable vars({"v0", "v1", "v2", "v3", "alpha", "beta", "gamma"});
  auto comps = sigma_cubics(vars, F, MPoly::variable(vars, F, 4), MPoly::variable(vars, F, 5),
                            MPoly::variable(vars, F, 6));
  FixedPointCheck res;
  for (std::size_t i = 0; i < 4; ++i) {
    std::map<std::size_t, Scalar> at;
    for (std::size_t k = 0; k < 4; ++k) at[k] = k == i ? F.one() : F.zero();
    for (std::size_t j = 0; j < 4; ++j) {
      MPoly val = comps[j].substitute(at);
      if (j == i) res.scale[i] = val.to_string();
      else if (!val.is_zero()) res.ok = false;
    }
    if (res.scale[i] == "0") res.ok = false;
  }
  return res;
}

}  // namespace sklylab
