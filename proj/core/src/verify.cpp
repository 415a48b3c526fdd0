#include "sklylab/verify.hpp"

#include <chrono>
#include <optional>
#include <random>
#include <sstream>

#include "sklylab/error.hpp"
#include "sklylab/geometry.hpp"
#include "sklylab/heisenberg.hpp"
#include "sklylab/instance.hpp"
#include "sklylab/poisson.hpp"
#include "sklylab/singularity.hpp"
#include "sklylab/skly.hpp"
#include "sklylab/strata.hpp"

namespace sklylab {

namespace {

using json = nlohmann::json;

std::string params_string(const SklyaninParams& p) {
  return "(" + p.alpha.to_string() + ", " + p.beta.to_string() + ", " + p.gamma.to_string() + ")";
}

std::vector<SklyaninParams> sample_triples(const FieldSpec& F, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SklyaninParams> out;
  for (int i = 0; i < count; ++i) out.push_back(random_params(F, rng));
  return out;
}

std::size_t binom3(int d) { return static_cast<std::size_t>((d + 1) * (d + 2) * (d + 3) / 6); }

struct Outcome {
  bool ok = true;
  std::vector<std::string> failures;
  json data = json::object();
  void fail(std::string why) {
    ok = false;
    failures.push_back(std::move(why));
  }
};

Outcome hilbert(const VerifyOptions& o) {
  Outcome out;
  for (const FieldSpec& F : {FieldSpec::rational(), FieldSpec::prime_field(o.prime)}) {
    const int count = F.is_exact() && F.kind() == FieldSpec::Kind::Rational ? o.rational_triples : o.prime_triples;
    for (const auto& p : sample_triples(F, count, o.seed)) {
      SklyaninAlgebra S(p, 5);
      std::vector<std::size_t> dims;
      for (int d = 0; d <= 5; ++d) {
        dims.push_back(S.graded_dimension(d));
        if (dims.back() != binom3(d))
          out.fail(F.to_string() + " " + params_string(p) + ": dim S_" + std::to_string(d) + " = " +
                   std::to_string(dims.back()));
      }
      out.data[F.to_string()].push_back({{"params", params_string(p)}, {"dims", dims}});
    }
  }
  return out;
}

Outcome centrality(const VerifyOptions& o) {
  Outcome out;
  for (const FieldSpec& F : {FieldSpec::rational(), FieldSpec::prime_field(o.prime)}) {
    const int count = F.kind() == FieldSpec::Kind::Rational ? o.rational_triples : o.prime_triples;
    for (const auto& p : sample_triples(F, count, o.seed + 1)) {
      SklyaninAlgebra S(p, 5);
      const NcPoly g1 = S.g1(), g2 = S.g2();
      if (!S.is_central_up_to(g1, 5)) out.fail(params_string(p) + ": g1 not central");
      if (!S.is_central_up_to(g2, 5)) out.fail(params_string(p) + ": g2 not central");
      std::vector<std::size_t> q;
      for (int d = 1; d <= 5; ++d) {
        q.push_back(S.quotient_dimension({g1, g2}, d));
        if (q.back() != static_cast<std::size_t>(4 * d))
          out.fail(params_string(p) + ": quotient dim in degree " + std::to_string(d) + " = " +
                   std::to_string(q.back()));
      }
      out.data[F.to_string()].push_back({{"params", params_string(p)}, {"quotient_dims", q}});
    }
  }
  return out;
}

Outcome sigma_geometry(const VerifyOptions& o) {
  Outcome out;
  const FixedPointCheck fixed = sigma_fixes_coordinate_points();
  if (!fixed.ok) out.fail("sigma does not fix the coordinate points");
  out.data["fixed_point_scales"] = fixed.scale;
  const FieldSpec F = FieldSpec::prime_field(o.prime);
  // Triples whose sampled orbits all meet an indeterminacy point of the
  // cubic formula are replaced, up to a fixed number of redraws.
  std::mt19937_64 rng(o.seed + 2);
  int resolved = 0, redraws = 0;
  const int max_redraws = 3 * o.prime_triples;
  out.data["replaced"] = json::array();
  while (resolved < o.prime_triples) {
    const SklyaninParams p = random_params(F, rng);
    json entry{{"params", params_string(p)}};
    std::optional<SigmaOrderResult> ord;
    try {
      ord = sigma_order(p, 5, hasse_bound(o.prime), o.seed);
    } catch (const Error& e) {
      if (e.code() != Errc::Indeterminacy) {
        out.fail(params_string(p) + ": " + e.what());
      } else if (++redraws > max_redraws) {
        out.fail("too many triples with unresolved sigma orbits");
        break;
      } else {
        out.data["replaced"].push_back(params_string(p));
        continue;
      }
    }
    ++resolved;
    if (ord) {
      if (!ord->order) out.fail(params_string(p) + ": sigma order above the Hasse bound");
      else entry["order"] = *ord->order;
    }
    const PreservationResult pres = sigma_preserves_E(p, 100, o.seed);
    if (!pres.ok) out.fail(params_string(p) + ": sigma leaves E");
    entry["preserves_E"] = pres.ok;
    entry["points"] = pres.trials;
    out.data["triples"].push_back(entry);
  }
  return out;
}

Outcome heisenberg(const VerifyOptions& o) {
  Outcome out;
  for (const auto& p : sample_triples(FieldSpec::rational(), o.h4_triples, o.seed + 3)) {
    const std::string tag = params_string(p);
    const H4Generators g = build_generators(p);
    const PresentationReport pres = verify_presentation(g.eps, g.eps1, g.eps2);
    if (!pres.ok(o.h4_tol)) out.fail(tag + ": presentation residual " + std::to_string(pres.max_residual));

    const auto group = enumerate_group({g.eps, g.eps1, g.eps2});
    if (group.size() != 64) out.fail(tag + ": group order " + std::to_string(group.size()));

    const CMat R = relation_matrix(p);
    double worst = 0;
    for (const CMat& m : group) worst = std::max(worst, automorphism_residual(m, R));
    if (worst >= o.automorphism_tol) out.fail(tag + ": automorphism residual " + std::to_string(worst));

    double n4 = 0;
    const auto N4 = enumerate_group({g.eps * g.eps, g.eps1 * g.eps1, g.eps2 * g.eps2});
    if (N4.size() != 8) out.fail(tag + ": N4 has order " + std::to_string(N4.size()));
    for (const CMat& m : N4)
      n4 = std::max(n4, (induced_action_on_g(m, p) - CMat::Identity(2, 2)).cwiseAbs().maxCoeff());
    if (n4 >= o.h4_tol) out.fail(tag + ": N4 moves g by " + std::to_string(n4));

    const double e1dev = (induced_action_on_g(g.eps1, p) - expected_g_action(p)[0]).cwiseAbs().maxCoeff();
    if (e1dev >= o.h4_tol) out.fail(tag + ": e1 action on g off by " + std::to_string(e1dev));

    out.data["triples"].push_back({{"params", tag},
                                   {"presentation_residual", pres.max_residual},
                                   {"group_order", group.size()},
                                   {"automorphism_residual", worst},
                                   {"n4_deviation", n4},
                                   {"e1_g_action_deviation", e1dev}});
  }
  return out;
}

MPoly random_poly(const VarTable& vars, const FieldSpec& F, std::mt19937_64& rng, int max_deg, int terms) {
  MPoly f(vars, F);
  for (int t = 0; t < terms; ++t) {
    Monomial m{};
    const int deg = static_cast<int>(rng() % (max_deg + 1));
    for (int i = 0; i < deg; ++i) ++m[rng() % vars.size()];
    f.add_term(m, F.from_int(static_cast<long long>(rng() % 7) - 3));
  }
  if (f.is_zero()) f = MPoly::variable(vars, F, rng() % 4);
  return f;
}

Outcome poisson(const VerifyOptions& o) {
  Outcome out;
  for (const CenterPresentation& P : {preset_even_rho1(), preset_odd_n3()}) {
    const JacobianPoissonStructure J = P.poisson();
    const VarTable& V = P.vars();
    const FieldSpec& F = P.field();
    std::mt19937_64 rng(o.seed + 4);
    int anti = 0, leib = 0, jac = 0, nambu = 0;
    const auto sign = J.nambu_sign();
    if (!sign) out.fail(P.label + ": no global Nambu sign");
    for (int i = 0; i < o.poisson_samples; ++i) {
      const MPoly f = random_poly(V, F, rng, 2, 3), g = random_poly(V, F, rng, 2, 3), h = random_poly(V, F, rng, 2, 3);
      const MPoly fg = J.bracket(f, g);
      if (fg != -J.bracket(g, f)) ++anti;
      if (J.bracket(f, g * h) != g * J.bracket(f, h) + fg * h) ++leib;
      if (!J.jacobi_defect(f, g, h).is_zero()) ++jac;
      if (sign && fg != J.nambu(f, g) * F.from_int(*sign)) ++nambu;
    }
    int casimir = 0;
    for (std::size_t k = 0; k < 4; ++k)
      for (const MPoly* Fi : {&P.F1, &P.F2})
        if (!J.bracket(MPoly::variable(V, F, J.z_index()[k]), *Fi).is_zero()) ++casimir;
    for (const char* gname : {"g1", "g2"})
      for (int i = 0; i < 10; ++i)
        if (!J.bracket(MPoly::variable(V, F, gname), random_poly(V, F, rng, 3, 4)).is_zero()) ++casimir;
    if (anti) out.fail(P.label + ": antisymmetry failed " + std::to_string(anti) + " times");
    if (leib) out.fail(P.label + ": Leibniz failed " + std::to_string(leib) + " times");
    if (jac) out.fail(P.label + ": Jacobi defect nonzero " + std::to_string(jac) + " times");
    if (casimir) out.fail(P.label + ": Casimir identity failed " + std::to_string(casimir) + " times");
    if (nambu) out.fail(P.label + ": Nambu form disagreed " + std::to_string(nambu) + " times");
    out.data[P.label] = {{"casimir_ok", casimir == 0},
                         {"jacobi_ok", jac == 0},
                         {"antisymmetry_ok", anti == 0},
                         {"leibniz_ok", leib == 0},
                         {"nambu_sign", sign ? *sign : 0},
                         {"samples", o.poisson_samples}};
  }
  return out;
}

bool only_origin(const ZeroDimSolution& s) {
  if (s.distinct_count != 1 || s.points.size() != 1 || !s.points[0].rational()) return false;
  for (const auto& c : s.points[0].exact)
    if (!c.is_zero()) return false;
  return true;
}

Outcome even_locus(const VerifyOptions&) {
  Outcome out;
  const CenterPresentation P = preset_even_rho1();
  const FieldSpec& F = P.field();
  const auto rep = verify_even_decomposition(P, std::array<Scalar, 2>{F.from_int(2), F.from_int(3)});
  if (!rep.variety_equal) out.fail("Y^sing differs from the union of the two components");
  if (!rep.origin_only) out.fail("components meet outside the origin");
  const auto generic = slice_singular_points(P, F.from_int(2), F.from_int(3));
  if (generic.total_multiplicity != 4) out.fail("generic slice has " + std::to_string(generic.total_multiplicity) + " points");
  const auto zero = slice_singular_points(P, F.zero(), F.zero());
  if (!only_origin(zero)) out.fail("slice (0,0) is not just the origin");
  out.data = {{"variety_equal", rep.variety_equal},
              {"origin_only", rep.origin_only},
              {"component_slice_counts", *rep.component_slice_counts},
              {"generic_slice_points", generic.total_multiplicity},
              {"generic_slice_distinct", generic.distinct_count},
              {"zero_slice_distinct", zero.distinct_count}};
  return out;
}

Outcome odd_nodal(const VerifyOptions&) {
  Outcome out;
  const CenterPresentation P = preset_odd_n3();
  const FieldSpec& F = P.field();
  const NodalCurveSpec C{0, {F.zero(), F.from_int(-1)}, "e0"};
  const auto rep = nodal_curve_check(P, C, {F.from_int(1), F.from_int(2), F.from_int(3), F.from_int(5)});
  if (!rep.ok) out.fail("nodal curve check failed");
  const auto s1 = slice_singular_points(P, F.zero(), F.from_int(-1));
  if (s1.distinct_count != 2) out.fail("slice (0,-1) has " + std::to_string(s1.distinct_count) + " singular points");
  const auto s0 = slice_singular_points(P, F.zero(), F.zero());
  if (!only_origin(s0)) out.fail("slice (0,0) is not just the origin");
  out.data = {{"nodal_ok", rep.ok}, {"slice_0_-1", s1.distinct_count}, {"slice_0_0", s0.distinct_count}};
  return out;
}

Outcome symplectic(const VerifyOptions&) {
  Outcome out;
  const std::vector<std::pair<int, int>> slices{{0, -1}, {0, 0}, {2, 3}, {1, 1}, {-1, 2}, {3, -5}};
  for (const CenterPresentation& P : {preset_even_rho1(), preset_odd_n3()}) {
    const JacobianPoissonStructure J = P.poisson();
    const FieldSpec& F = P.field();
    for (auto [a, b] : slices) {
      const Scalar c1 = F.from_int(a), c2 = F.from_int(b);
      const bool eq = variety_equal(J.slice_symplectic_ideal(c1, c2), slice_singular_ideal(P, c1, c2));
      const auto sp = J.slice_symplectic_points(c1, c2);
      const auto sg = slice_singular_points(P, c1, c2);
      const std::string tag = P.label + " (" + std::to_string(a) + "," + std::to_string(b) + ")";
      if (!eq) out.fail(tag + ": varieties differ");
      if (sp.distinct_count != sg.distinct_count) out.fail(tag + ": point counts differ");
      out.data[P.label].push_back({{"slice", {a, b}}, {"equal", eq}, {"points", sp.distinct_count}});
    }
  }
  return out;
}

Outcome strata(const VerifyOptions&) {
  Outcome out;
  for (int n : {3, 5, 6, 7, 9, 10, 11, 13}) {
    const ConsistencyReport r = consistency_check(n);
    for (const auto& v : r.verdicts)
      if (!v.ok) out.fail("n=" + std::to_string(n) + " " + v.name + ": " + v.detail);
    out.data[std::to_string(n)] = r.ok();
  }
  return out;
}

Outcome fat_points(const VerifyOptions&) {
  Outcome out;
  for (int k = 0; k <= 50; ++k)
    if (hs_quotient_multiplicity(k).multiplicity != k + 1) out.fail("k=" + std::to_string(k));
  out.data["checked"] = "0..50";
  return out;
}

using Runner = Outcome (*)(const VerifyOptions&);

Runner runner_for(int id) {
  static const Runner table[] = {hilbert, centrality, sigma_geometry, heisenberg, poisson,
                                 even_locus, odd_nodal, symplectic, strata, fat_points};
  if (id < 1 || id > 10) throw Error(Errc::RangeError, "criterion id must lie in 1..10");
  return table[id - 1];
}

}  // namespace

const std::vector<CriterionInfo>& acceptance_criteria() {
  static const std::vector<CriterionInfo> list{
      {1, "hilbert", "Hilbert function dim S_d = C(d+3,3), d <= 5", 60},
      {2, "center", "g1, g2 central; quotient dims 4d", 0},
      {3, "sigma", "sigma fixes e_i, preserves E, consistent order", 0},
      {4, "h4", "Heisenberg group of order 64 and its action on g", 0},
      {5, "poisson", "Jacobian bracket: Leibniz, Casimirs, Jacobi", 120},
      {6, "even", "even singular locus decomposition", 300},
      {7, "odd", "odd nodal curve and slice counts", 0},
      {8, "symplectic", "symplectic points equal slice singular points", 0},
      {9, "strata", "stratification arithmetic", 0},
      {10, "fatpoint", "fat-point multiplicity k+1", 0},
  };
  return list;
}

CriterionResult run_criterion(int id, const VerifyOptions& opts) {
  const CriterionInfo& info = acceptance_criteria().at(static_cast<std::size_t>(id - 1));
  CriterionResult r;
  r.id = id;
  r.key = info.key;
  r.title = info.title;
  r.limit_seconds = info.limit_seconds;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o = runner_for(id)(opts);
    r.checks_passed = o.ok;
    r.data = std::move(o.data);
    std::ostringstream os;
    for (std::size_t i = 0; i < o.failures.size(); ++i) os << (i ? "; " : "") << o.failures[i];
    r.detail = os.str();
  } catch (const std::exception& e) {
    r.checks_passed = false;
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.checks_passed && !r.within_budget())
    r.detail = "over the " + std::to_string(static_cast<int>(r.limit_seconds)) + " s budget";
  return r;
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts, const std::set<std::string>& only,
                                            const std::function<void(const CriterionResult&)>& on_done) {
  std::set<int> ids;
  for (const std::string& key : only) {
    bool found = false;
    for (const auto& c : acceptance_criteria())
      if (key == c.key || key == std::to_string(c.id)) {
        ids.insert(c.id);
        found = true;
      }
    if (!found) throw Error(Errc::RangeError, "unknown criterion '" + key + "'");
  }
  std::vector<CriterionResult> out;
  for (const auto& c : acceptance_criteria()) {
    if (!ids.empty() && !ids.count(c.id)) continue;
    out.push_back(run_criterion(c.id, opts));
    if (on_done) on_done(out.back());
  }
  return out;
}

nlohmann::json to_json(const CriterionResult& r, bool with_timing) {
  json j{{"id", r.id}, {"key", r.key}, {"title", r.title}, {"passed", r.passed()}, {"detail", r.detail}, {"data", r.data}};
  if (with_timing) {
    j["seconds"] = r.seconds;
    j["limit_seconds"] = r.limit_seconds;
  }
  return j;
}

}  // namespace sklylab
