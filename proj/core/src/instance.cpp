#include "sklylab/instance.hpp"

#include <fstream>

#include "sklylab/error.hpp"

namespace sklylab {

namespace {

MPoly parse_in(const std::string& text, int n) {
  return MPoly::parse(text, center_vars(n), FieldSpec::rational());
}

}  // namespace

CenterPresentation preset_even_rho1() {
  const int s = 2, n = 4;
  CenterPresentation P = build_even_presentation(RhoType::Rho1, parse_in("z0 + 2*z3 + z1 + 3*z2", n),
                                                 parse_in("z0 + z3 + z1 + z2", n), parse_in("g1^2", n),
                                                 parse_in("g2^2", n), s);
  P.label = "even_rho1";
  return P;
}

CenterPresentation preset_odd_n3() {
  const int n = 3;
  CenterPresentation P =
      build_odd_presentation(parse_in("z1^2 + z2^2 + z3^2", n), parse_in("g1^2*g2", n),
                             parse_in("z0^2 + z1^2 + 2*z2^2 + 3*z3^2", n), parse_in("g1^3 + g2^3", n));
  P.label = "odd_n3";
  return P;
}

CenterPresentation preset(const std::string& name) {
  if (name == "even_rho1" || name == "rho1") return preset_even_rho1();
  if (name == "odd_n3" || name == "n3") return preset_odd_n3();
  throw Error(Errc::InvalidInstance, "unknown preset '" + name + "'");
}

nlohmann::json instance_to_json(const CenterPresentation& P) {
  nlohmann::json j;
  j["schema"] = kInstanceSchema;
  j["label"] = P.label;
  j["surrogate"] = P.surrogate;
  j["parity"] = to_string(P.parity);
  j["n"] = P.n;
  j["field"] = P.field().to_string();
  if (P.parity == Parity::Even) {
    j["rho"] = to_string(P.pairing);
    j["a1"] = P.a1.to_string();
    j["a2"] = P.a2.to_string();
  } else {
    j["quad1"] = P.quad1.to_string();
    j["quad2"] = P.quad2.to_string();
  }
  j["h1"] = P.h1.to_string();
  j["h2"] = P.h2.to_string();
  j["F1"] = P.F1.to_string();
  j["F2"] = P.F2.to_string();
  return j;
}

CenterPresentation instance_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema").get<std::string>() != kInstanceSchema)
      throw Error(Errc::InvalidInstance, "unsupported schema '" + j.at("schema").get<std::string>() + "'");
    const int n = j.at("n").get<int>();
    const FieldSpec F = FieldSpec::parse(j.value("field", std::string("rational")));
    const VarTable vars = center_vars(n);
    auto poly = [&](const char* key) { return MPoly::parse(j.at(key).get<std::string>(), vars, F); };
    const std::string parity = j.at("parity").get<std::string>();
    CenterPresentation P;
    if (parity == "even") {
      if (n % 2 != 0) throw Error(Errc::InvalidInstance, "even instance needs even n");
      P = build_even_presentation(parse_rho(j.at("rho").get<std::string>()), poly("a1"), poly("a2"), poly("h1"),
                                  poly("h2"), n / 2);
    } else if (parity == "odd") {
      P = build_odd_presentation(poly("quad1"), poly("h1"), poly("quad2"), poly("h2"));
      if (P.n != n) throw Error(Errc::InvalidInstance, "declared n disagrees with the h-form degree");
    } else {
      throw Error(Errc::InvalidInstance, "parity must be 'odd' or 'even'");
    }
    P.label = j.value("label", P.label);
    P.surrogate = j.value("surrogate", true);
    // Stored potentials are optional; when present they must match.
    for (const char* key : {"F1", "F2"})
      if (j.contains(key) && poly(key) != (key[1] == '1' ? P.F1 : P.F2))
        throw Error(Errc::InvalidInstance, std::string(key) + " disagrees with the structured parts");
    return P;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidInstance, e.what());
  }
}

CenterPresentation load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInstance, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidInstance, path + ": " + e.what());
  }
  return instance_from_json(j);
}

void save_instance(const CenterPresentation& P, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::InvalidInstance, "cannot write " + path);
  out << instance_to_json(P).dump(2) << '\n';
}

}  // namespace sklylab
