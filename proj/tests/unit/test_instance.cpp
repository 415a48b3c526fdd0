#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "sklylab/error.hpp"
#include "sklylab/instance.hpp"

using namespace sklylab;

namespace {

std::optional<Errc> code_of(const nlohmann::json& j) {
  try {
    instance_from_json(j);
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("presets by name") {
  CHECK(preset("even_rho1").label == "even_rho1");
  CHECK(preset("rho1").F1 == preset_even_rho1().F1);
  CHECK(preset("n3").label == "odd_n3");
  CHECK_THROWS_AS(preset("nonsense"), Error);
}

TEST_CASE("JSON round trip") {
  for (const auto& P : {preset_even_rho1(), preset_odd_n3()}) {
    const auto j = instance_to_json(P);
    CHECK(j.at("schema") == kInstanceSchema);
    const auto back = instance_from_json(j);
    CHECK(back.F1 == P.F1);
    CHECK(back.F2 == P.F2);
    CHECK(back.label == P.label);
    CHECK(back.parity == P.parity);
    CHECK(back.n == P.n);
    CHECK(instance_to_json(back) == j);
  }
}

TEST_CASE("file round trip") {
  const auto path = (std::filesystem::temp_directory_path() / "sklylab_instance_test.json").string();
  save_instance(preset_odd_n3(), path);
  CHECK(load_instance(path).F2 == preset_odd_n3().F2);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_instance(path), Error);
}

TEST_CASE("malformed instances") {
  auto j = instance_to_json(preset_odd_n3());
  auto bad = j;
  bad["schema"] = "other/1";
  CHECK(code_of(bad) == Errc::InvalidInstance);
  bad = j;
  bad.erase("quad1");
  CHECK(code_of(bad) == Errc::InvalidInstance);
  bad = j;
  bad["F1"] = "z0^2";
  CHECK(code_of(bad) == Errc::InvalidInstance);
  bad = j;
  bad["parity"] = "neither";
  CHECK(code_of(bad) == Errc::InvalidInstance);
  bad = j;
  bad["n"] = 5;
  CHECK(code_of(bad).has_value());
  bad = j;
  bad["h2"] = "g1^2*g2";
  CHECK(code_of(bad).has_value());

  auto even = instance_to_json(preset_even_rho1());
  even["h2"] = even["h1"];
  even.erase("F2");
  CHECK(code_of(even) == Errc::CommonFactorH);
  even = instance_to_json(preset_even_rho1());
  even["n"] = 3;
  CHECK(code_of(even).has_value());

  const auto path = (std::filesystem::temp_directory_path() / "sklylab_corrupt.json").string();
  {
    std::ofstream out(path);
    out << "{ \"schema\": ";
  }
  CHECK_THROWS_AS(load_instance(path), Error);
  std::remove(path.c_str());
}
