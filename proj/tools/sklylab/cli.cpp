#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <random>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sklylab/error.hpp"
#include "sklylab/geometry.hpp"
#include "sklylab/heisenberg.hpp"
#include "sklylab/instance.hpp"
#include "sklylab/poisson.hpp"
#include "sklylab/singularity.hpp"
#include "sklylab/skly.hpp"
#include "sklylab/strata.hpp"
#include "sklylab/verify.hpp"

namespace sklylab::cli {

namespace {

using json = nlohmann::json;

struct Globals {
  std::string field = "rational";
  std::uint64_t seed = 1;
  double tol = 1e-9;
  int max_deg = 5;
  std::string out;
  std::string format = "json";
  bool timing = false;
};

struct ParamArgs {
  std::string alpha, beta, gamma;
};

void add_param_options(CLI::App* cmd, ParamArgs& p) {
  cmd->add_option("--alpha", p.alpha, "alpha as p/q")->required();
  cmd->add_option("--beta", p.beta, "beta as p/q")->required();
  cmd->add_option("--gamma", p.gamma, "gamma as p/q")->required();
}

SklyaninParams make_params(const Globals& g, const ParamArgs& a) {
  return SklyaninParams::parse(FieldSpec::parse(g.field), a.alpha, a.beta, a.gamma);
}

std::string fmt(std::complex<double> z) {
  auto clean = [](double v) { return std::abs(v) < 1e-12 ? 0.0 : v; };
  z = {clean(z.real()), clean(z.imag())};
  std::ostringstream os;
  os << std::setprecision(12) << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

json matrix_json(const CMat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(fmt(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json verdict(const std::string& name, bool ok, const std::string& checks) {
  return {{"name", name}, {"ok", ok}, {"checks", checks}};
}

class Reporter {
 public:
  Reporter(const Globals& g, std::ostream& out) : g_(g), out_(out), t0_(std::chrono::steady_clock::now()) {}

  int emit(const std::string& command, json config, json verdicts, json payload) {
    json report;
    report["schema"] = "sklylab.report/1";
    report["command"] = command;
    config["field"] = g_.field;
    config["seed"] = g_.seed;
    report["config"] = std::move(config);
    bool ok = true;
    for (const auto& v : verdicts) ok = ok && v.at("ok").get<bool>();
    report["verdicts"] = std::move(verdicts);
    for (auto& [k, v] : payload.items()) report[k] = v;
    if (g_.timing)
      report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    write(report.dump(2) + "\n");
    return ok ? kExitOk : kExitVerdict;
  }

  void write(const std::string& text) {
    if (g_.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(g_.out);
    if (!f) throw Error(Errc::InvalidInstance, "cannot write " + g_.out);
    f << text;
  }

 private:
  const Globals& g_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point t0_;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

CenterPresentation load_presentation(const std::string& preset_name, const std::string& file) {
  if (!file.empty()) return load_instance(file);
  return preset(preset_name);
}

json solution_json(const ZeroDimSolution& s) {
  json pts = json::array();
  for (const auto& p : s.points) {
    json coords = json::array();
    if (p.rational())
      for (const auto& c : p.exact) coords.push_back(c.to_string());
    else
      for (const auto& c : p.approx) coords.push_back(fmt(c));
    pts.push_back({{"coords", coords}, {"multiplicity", p.multiplicity}, {"exact", p.rational()}});
  }
  return {{"total_multiplicity", s.total_multiplicity}, {"distinct", s.distinct_count}, {"points", pts}};
}

std::vector<std::string> poly_strings(const std::vector<MPoly>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations for PI four-dimensional Sklyanin algebras", "sklylab"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--field", g.field, "rational | fp:<p> | complex[:tol]");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--tol", g.tol, "numeric tolerance");
  app.add_option("--max-deg", g.max_deg, "largest degree");
  app.add_option("--out", g.out, "write the report here instead of stdout");
  app.add_option("--format", g.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--timing", g.timing, "include wall-clock seconds in reports");

  ParamArgs pa;

  auto* validate = app.add_subcommand("validate", "check the parameter conditions");
  add_param_options(validate, pa);

  auto* hilbert = app.add_subcommand("hilbert", "graded dimensions of S");
  add_param_options(hilbert, pa);
  bool certificate = false;
  hilbert->add_flag("--certificate", certificate, "also reduce modulo two random primes");

  auto* center = app.add_subcommand("center", "basis of the degree-d center");
  add_param_options(center, pa);
  int center_deg = 2;
  center->add_option("--deg", center_deg, "degree")->required();

  auto* sigma = app.add_subcommand("sigma-order", "order of sigma on E over F_p");
  add_param_options(sigma, pa);
  int samples = 5;
  std::uint64_t cap = 5000;
  sigma->add_option("--samples", samples, "number of curve points");
  sigma->add_option("--cap", cap, "iteration cap");

  auto* h4 = app.add_subcommand("h4", "Heisenberg group action");
  auto* h4verify = h4->add_subcommand("verify", "presentation, closure and action on g1, g2");
  h4->require_subcommand(1);
  add_param_options(h4verify, pa);

  std::string instance_file, preset_name = "even_rho1";
  auto* poisson = app.add_subcommand("poisson", "Jacobian Poisson bracket");
  auto* pcheck = poisson->add_subcommand("check", "Casimirs, Jacobi and the symplectic ideal");
  poisson->require_subcommand(1);
  pcheck->add_option("--instance", instance_file, "instance JSON file");
  pcheck->add_option("--preset", preset_name, "even_rho1 | odd_n3");
  int jacobi_samples = 50;
  pcheck->add_option("--samples", jacobi_samples, "random triples for the Jacobi identity");

  auto* singloc = app.add_subcommand("singloc", "singular loci of the center");
  singloc->require_subcommand(1);
  auto* seven = singloc->add_subcommand("even", "two-component decomposition");
  std::string even_preset = "rho1";
  int s_value = 2;
  std::string slice_text = "2,3";
  seven->add_option("--preset", even_preset, "rho1");
  seven->add_option("--file", instance_file, "instance JSON file");
  seven->add_option("--s", s_value, "half the PI degree");
  seven->add_option("--slice", slice_text, "generic slice g1,g2");
  auto* sodd = singloc->add_subcommand("odd", "nodal curves and slice points");
  std::string odd_preset = "odd_n3", curve = "e0", direction = "0,-1", tsamples = "1,2,3,5";
  std::vector<std::string> slices{"0,-1", "0,0"};
  sodd->add_option("--preset", odd_preset, "odd_n3");
  sodd->add_option("--file", instance_file, "instance JSON file");
  sodd->add_option("--curve", curve, "apex e0..e3");
  sodd->add_option("--direction", direction, "direction in the g-plane");
  sodd->add_option("--samples", tsamples, "curve parameters");
  sodd->add_option("--slice", slices, "slices g1,g2 to solve");

  auto* strata = app.add_subcommand("strata", "representation strata for PI degree n");
  int n = 0;
  bool profile = false;
  strata->add_option("--n", n, "PI degree")->required();
  strata->add_flag("--profile", profile, "discriminant profile as CSV");

  auto* full = app.add_subcommand("full-verify", "run the acceptance suite");
  std::vector<std::string> only;
  full->add_option("--only", only, "criterion keys or ids");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Reporter rep(g, out);
  try {
    if (*validate) {
      const auto v = validate_params(make_params(g, pa));
      return rep.emit("validate", {{"alpha", pa.alpha}, {"beta", pa.beta}, {"gamma", pa.gamma}},
                      json::array({verdict("parameter conditions", v.valid, "sum condition and excluded families")}),
                      {{"valid", v.valid}, {"violations", v.violations}, {"warnings", v.warnings}});
    }

    if (*hilbert) {
      const auto p = make_params(g, pa);
      SklyaninAlgebra S(p, std::max(g.max_deg, SklyaninAlgebra::kDefaultCap));
      std::vector<std::size_t> dims;
      bool ok = true;
      for (int d = 0; d <= g.max_deg; ++d) {
        dims.push_back(S.graded_dimension(d));
        ok = ok && dims.back() == static_cast<std::size_t>((d + 1) * (d + 2) * (d + 3) / 6);
      }
      json verdicts = json::array({verdict("hilbert series (1-t)^-4", ok, "dim S_d = C(d+3,3)")});
      json payload{{"dims", dims}};
      if (certificate) {
        const auto c = two_prime_certificate(p, g.max_deg, g.seed);
        payload["certificate"] = {{"primes", c.primes}, {"dims", c.dims}, {"agree", c.agree}};
        verdicts.push_back(verdict("two-prime agreement", c.agree, "dims agree modulo both primes"));
      }
      return rep.emit("hilbert", {{"alpha", pa.alpha}, {"beta", pa.beta}, {"gamma", pa.gamma}, {"max_deg", g.max_deg}},
                      verdicts, payload);
    }

    if (*center) {
      const auto p = make_params(g, pa);
      SklyaninAlgebra S(p, std::max(center_deg + 1, SklyaninAlgebra::kDefaultCap));
      const auto basis = S.center_slice(center_deg);
      std::vector<std::string> text;
      for (const auto& b : basis) text.push_back(b.to_string());
      return rep.emit("center", {{"alpha", pa.alpha}, {"beta", pa.beta}, {"gamma", pa.gamma}, {"deg", center_deg}},
                      json::array(), {{"dimension", basis.size()}, {"basis", text}});
    }

    if (*sigma) {
      const auto p = make_params(g, pa);
      json verdicts = json::array();
      json payload;
      try {
        const auto r = sigma_order(p, samples, cap, g.seed);
        payload["order"] = r.order ? json(*r.order) : json("unknown");
        std::vector<std::string> pts;
        for (const auto& w : r.witnesses) pts.push_back(w.to_string());
        payload["witness_points"] = pts;
        payload["skipped_indeterminate"] = r.skipped_indeterminate;
        verdicts.push_back(verdict("order agrees across points", true, std::to_string(samples) + " points"));
      } catch (const Error& e) {
        if (e.code() != Errc::DisagreementAcrossPoints) throw;
        payload["order"] = "unknown";
        payload["error"] = e.what();
        verdicts.push_back(verdict("order agrees across points", false, e.what()));
      }
      return rep.emit("sigma-order",
                      {{"alpha", pa.alpha}, {"beta", pa.beta}, {"gamma", pa.gamma}, {"samples", samples}, {"cap", cap}},
                      verdicts, payload);
    }

    if (*h4verify) {
      const auto p = make_params(g, pa);
      const auto gens = build_generators(p);
      const auto pres = verify_presentation(gens.eps, gens.eps1, gens.eps2);
      json residuals;
      for (const auto& r : pres.residuals) residuals[r.relation] = r.residual;
      const auto group = enumerate_group({gens.eps, gens.eps1, gens.eps2});
      const CMat R = relation_matrix(p);
      json failures = json::array();
      for (std::size_t i = 0; i < group.size(); ++i)
        if (!is_algebra_automorphism(group[i], R, std::max(g.tol, 1e-8))) failures.push_back(i);
      const CMat a1 = induced_action_on_g(gens.eps1, p), a2 = induced_action_on_g(gens.eps2, p);
      const CMat ae = induced_action_on_g(gens.eps, p);
      const auto expect = expected_g_action(p);
      const double dev = std::max((a1 - expect[0]).cwiseAbs().maxCoeff(), (a2 - expect[1]).cwiseAbs().maxCoeff());
      json verdicts = json::array({verdict("presentation", pres.ok(g.tol), "max residual below --tol"),
                                   verdict("group order 64", group.size() == 64, "closure size"),
                                   verdict("automorphisms", failures.empty(), "relation span preserved"),
                                   verdict("action on g", dev < g.tol, "matches the closed form")});
      return rep.emit("h4 verify", {{"alpha", pa.alpha}, {"beta", pa.beta}, {"gamma", pa.gamma}, {"tol", g.tol}},
                      verdicts,
                      {{"relations", {{"residuals", residuals}}},
                       {"group_order", group.size()},
                       {"automorphism_failures", failures},
                       {"g_action", {{"eps", matrix_json(ae)}, {"eps1", matrix_json(a1)}, {"eps2", matrix_json(a2)}}},
                       {"g_action_deviation", dev}});
    }

    if (*pcheck) {
      const CenterPresentation P = load_presentation(preset_name, instance_file);
      const JacobianPoissonStructure J = P.poisson();
      bool casimir = true;
      for (std::size_t k = 0; k < 4; ++k)
        for (const MPoly* Fi : {&P.F1, &P.F2})
          casimir = casimir && J.bracket(MPoly::variable(P.vars(), P.field(), J.z_index()[k]), *Fi).is_zero();
      std::mt19937_64 rng(g.seed);
      auto rnd = [&] {
        MPoly f(P.vars(), P.field());
        for (int t = 0; t < 3; ++t) {
          Monomial m{};
          const int deg = static_cast<int>(rng() % 3);
          for (int i = 0; i < deg; ++i) ++m[rng() % P.vars().size()];
          f.add_term(m, P.field().from_int(static_cast<long long>(rng() % 7) - 3));
        }
        return f;
      };
      bool jacobi = true;
      for (int i = 0; i < jacobi_samples; ++i) jacobi = jacobi && J.jacobi_defect(rnd(), rnd(), rnd()).is_zero();
      json table;
      for (int k = 0; k < 4; ++k)
        for (int l = k + 1; l < 4; ++l) table["{z" + std::to_string(k) + ",z" + std::to_string(l) + "}"] = J.entry(k, l).to_string();
      const auto sign = J.nambu_sign();
      return rep.emit("poisson check", {{"instance", instance_file.empty() ? preset_name : instance_file}},
                      json::array({verdict("casimir", casimir, "{z_k, F_i} = 0"),
                                   verdict("jacobi", jacobi, std::to_string(jacobi_samples) + " random triples")}),
                      {{"label", P.label},
                       {"surrogate", P.surrogate},
                       {"casimir_ok", casimir},
                       {"jacobi_ok", jacobi},
                       {"nambu_sign", sign ? *sign : 0},
                       {"table", table},
                       {"symplectic_ideal", {{"generators", poly_strings(J.symplectic_point_ideal().generators())}}}});
    }

    if (*seven) {
      CenterPresentation P = instance_file.empty() ? preset("even_" + even_preset) : load_instance(instance_file);
      if (P.parity != Parity::Even) throw Error(Errc::InvalidInstance, "instance is not even");
      if (instance_file.empty() && P.n != 2 * s_value)
        throw Error(Errc::InvalidInstance, "preset " + even_preset + " has s = " + std::to_string(P.n / 2));
      const auto sl = split(slice_text, ',');
      if (sl.size() != 2) throw Error(Errc::ParseError, "--slice expects g1,g2");
      const Scalar c1 = P.field().parse_scalar(sl[0]), c2 = P.field().parse_scalar(sl[1]);
      const auto r = verify_even_decomposition(P, std::array<Scalar, 2>{c1, c2});
      const auto generic = slice_singular_points(P, c1, c2);
      const auto zero = slice_singular_points(P, P.field().zero(), P.field().zero());
      json payload{{"label", P.label},
                   {"surrogate", P.surrogate},
                   {"instance", instance_to_json(P)},
                   {"singular_ideal", poly_strings(r.singular_generators)},
                   {"components", {poly_strings(r.components[0]), poly_strings(r.components[1])}},
                   {"component_slice_counts", *r.component_slice_counts},
                   {"generic_slice", solution_json(generic)},
                   {"zero_slice", solution_json(zero)}};
      if (g.timing) payload["groebner_seconds"] = r.seconds;
      return rep.emit("singloc even", {{"preset", even_preset}, {"s", s_value}, {"slice", slice_text}},
                      json::array({verdict("Y^sing = Y1 u Y2", r.variety_equal, "radical membership both ways"),
                                   verdict("Y1 n Y2 = {0}", r.origin_only, "radical membership both ways"),
                                   verdict("generic slice has 4 points", generic.total_multiplicity == 4,
                                           "with multiplicity"),
                                   verdict("slice (0,0) is the origin", zero.distinct_count == 1, "distinct points")}),
                      payload);
    }

    if (*sodd) {
      CenterPresentation P = load_presentation(odd_preset, instance_file);
      if (P.parity != Parity::Odd) throw Error(Errc::InvalidInstance, "instance is not odd");
      if (curve.size() != 2 || curve[0] != 'e' || curve[1] < '0' || curve[1] > '3')
        throw Error(Errc::ParseError, "--curve expects e0..e3");
      const auto dir = split(direction, ',');
      if (dir.size() != 2) throw Error(Errc::ParseError, "--direction expects g1,g2");
      const FieldSpec& F = P.field();
      NodalCurveSpec C{curve[1] - '0', {F.parse_scalar(dir[0]), F.parse_scalar(dir[1])}, curve};
      std::vector<Scalar> ts;
      for (const auto& t : split(tsamples, ',')) ts.push_back(F.parse_scalar(t));
      const auto r = nodal_curve_check(P, C, ts);
      json sample_json = json::array();
      for (const auto& [t, ok] : r.samples) sample_json.push_back({{"t", t.to_string()}, {"ok", ok}});
      json slice_json = json::array();
      for (const auto& s : slices) {
        const auto parts = split(s, ',');
        if (parts.size() != 2) throw Error(Errc::ParseError, "--slice expects g1,g2");
        auto sol = slice_singular_points(P, F.parse_scalar(parts[0]), F.parse_scalar(parts[1]));
        json j = solution_json(sol);
        j["slice"] = s;
        slice_json.push_back(j);
      }
      return rep.emit("singloc odd", {{"preset", odd_preset}, {"curve", curve}, {"direction", direction}, {"samples", tsamples}},
                      json::array({verdict("nodal curve singular on Y", r.ok, "F1 = F2 = 0 and Jacobian rank <= 1"),
                                   verdict("direction compatible", r.compatible, "F_i(e, p) = 0")}),
                      {{"label", P.label}, {"surrogate", P.surrogate}, {"samples", sample_json}, {"slices", slice_json}});
    }

    if (*strata) {
      if (profile || g.format == "csv") {
        const auto p = discriminant_profile(n);
        std::ostringstream os;
        os << "ell,stratum\n";
        for (const auto& e : p.entries) os << e.ell << ",\"" << e.description << "\"\n";
        rep.write(os.str());
        return kExitOk;
      }
      const auto t = irr_table(n);
      const auto c = consistency_check(n);
      json rows = json::array();
      for (const auto& s : t.strata)
        rows.push_back({{"label", s.label}, {"irrep_count", s.irrep_count()}, {"dims", s.dims}, {"d_value", s.d_value}});
      json verdicts = json::array();
      for (const auto& v : c.verdicts) verdicts.push_back(verdict(v.name, v.ok, v.detail));
      json ranges = json::array();
      for (const auto& r : discriminant_profile(n).ranges)
        ranges.push_back({{"lo", r.lo}, {"hi", r.hi}, {"zero_set", r.description}});
      return rep.emit("strata", {{"n", n}}, verdicts,
                      {{"n", n}, {"parity", t.odd ? "odd" : "even"}, {"strata", rows}, {"discriminant_ranges", ranges}});
    }

    if (*full) {
      VerifyOptions o;
      o.seed = g.seed;
      std::set<std::string> keys;
      for (const auto& k : only)
        for (const auto& part : split(k, ',')) keys.insert(part);
      const auto results = run_acceptance(o, keys);
      json verdicts = json::array(), criteria = json::array();
      for (const auto& r : results) {
        verdicts.push_back(verdict(std::to_string(r.id) + " " + r.key, r.passed(), r.title));
        criteria.push_back(to_json(r, g.timing));
      }
      return rep.emit("full-verify", {{"only", keys}}, verdicts, {{"criteria", criteria}});
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sklylab::cli
