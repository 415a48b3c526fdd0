#include <doctest.h>

#include <random>

#include "sklylab/error.hpp"
#include "sklylab/mpoly.hpp"
#include "sklylab/upoly.hpp"

using namespace sklylab;

namespace {

const VarTable xyz({"x", "y", "z"});

MPoly P(const char* s, const FieldSpec& F = FieldSpec::rational()) { return MPoly::parse(s, xyz, F); }

MPoly random_poly(std::mt19937_64& rng, const FieldSpec& F) {
  MPoly f(xyz, F);
  for (int t = 0; t < 4; ++t) {
    Monomial m{};
    for (int i = 0; i < 3; ++i) m[i] = static_cast<std::uint16_t>(rng() % 3);
    f.add_term(m, F.from_int(static_cast<long long>(rng() % 11) - 5));
  }
  return f;
}

std::vector<Scalar> random_point(std::mt19937_64& rng, const FieldSpec& F) {
  std::vector<Scalar> v;
  for (int i = 0; i < 3; ++i) v.push_back(F.from_int(static_cast<long long>(rng() % 21) - 10));
  return v;
}

}  // namespace

TEST_CASE("parse and canonical printing") {
  CHECK(P("(x - y)^3").to_string() == "x^3 - 3*x^2*y + 3*x*y^2 - y^3");
  CHECK(P("1/2 + 3/2*x*y - x^3").to_string() == "-x^3 + 3/2*x*y + 1/2");
  CHECK(P("0").to_string() == "0");
  CHECK(P("x*y - y*x").is_zero());
  CHECK_THROWS_AS(P("x + w"), Error);
  CHECK_THROWS_AS(P("x +* y"), Error);
  CHECK_THROWS_AS(P("(x + y"), Error);
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const MPoly f = random_poly(rng, FieldSpec::rational());
    CHECK(P(f.to_string().c_str()) == f);
  }
}

TEST_CASE("json round trip keeps vars, weights and terms") {
  const VarTable w({"z0", "g1"}, {3, 2});
  const MPoly f = MPoly::parse("z0^2 - 7/3*g1^3 + 1", w, FieldSpec::rational());
  const auto j = f.to_json();
  CHECK(j["weights"] == nlohmann::json({3, 2}));
  CHECK(MPoly::from_json(j, FieldSpec::rational()) == f);
  CHECK(f.weighted_degree() == 6);
  CHECK_FALSE(f.is_homogeneous());
  CHECK(MPoly::parse("z0^2 + g1^3", w, FieldSpec::rational()).is_homogeneous());
}

TEST_CASE("ring operations agree with pointwise evaluation") {
  std::mt19937_64 rng(11);
  for (const FieldSpec& F : {FieldSpec::rational(), FieldSpec::prime_field(10007)}) {
    for (int i = 0; i < 40; ++i) {
      const MPoly f = random_poly(rng, F), g = random_poly(rng, F);
      const auto pt = random_point(rng, F);
      CHECK((f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt));
      CHECK((f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt));
      CHECK(f.pow(3).evaluate(pt) == f.evaluate(pt).pow(3));
      CHECK(compose(f, {g, MPoly::variable(xyz, F, 1), MPoly::variable(xyz, F, 2)}).evaluate(pt) ==
            f.evaluate({g.evaluate(pt), pt[1], pt[2]}));
      CHECK(f.substitute(0, g).evaluate(pt) == f.evaluate({g.evaluate(pt), pt[1], pt[2]}));
    }
  }
}

TEST_CASE("derivative follows the power rule and Leibniz") {
  CHECK(P("x^3*y + 2*y^2").derivative(0) == P("3*x^2*y"));
  CHECK(P("x^3*y + 2*y^2").derivative(1) == P("x^3 + 4*y"));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    const MPoly f = random_poly(rng, FieldSpec::rational()), g = random_poly(rng, FieldSpec::rational());
    CHECK((f * g).derivative(2) == f.derivative(2) * g + f * g.derivative(2));
  }
}

TEST_CASE("determinant and Jacobian minors") {
  const FieldSpec Q;
  auto v = [&](int i) { return MPoly::variable(xyz, Q, i); };
  CHECK(determinant({{v(0), v(1)}, {v(1), v(0)}}) == P("x^2 - y^2"));
  // d(xy, yz)/d(x, z) = [[y, 0], [0, y]]
  CHECK(jacobian_minor({P("x*y"), P("y*z")}, {0, 1}, {0, 2}) == P("y^2"));
}

TEST_CASE("embedding matches variables by name") {
  const VarTable big({"a", "x", "y", "z"});
  const MPoly f = P("x*z + y");
  const MPoly g = f.embed(big);
  CHECK(g.to_string() == "x*z + y");
  CHECK_THROWS_AS(MPoly::parse("a*x", big, FieldSpec::rational()).embed(xyz), Error);
}

TEST_CASE("univariate gcd and squarefree decomposition") {
  const FieldSpec Q;
  auto u = [&](std::vector<long long> c) {
    std::vector<Scalar> s;
    for (auto x : c) s.push_back(Q.from_int(x));
    return UPoly(Q, s);
  };
  const UPoly a = u({-1, 0, 1}) * u({2, 1});  // (t^2 - 1)(t + 2)
  const UPoly b = u({1, 1}) * u({3, 1});      // (t + 1)(t + 3)
  CHECK(gcd(a, b) == u({1, 1}));
  const UPoly f = u({1, 1}) * u({1, 1}) * u({1, 1}) * u({-2, 1});
  const auto sqf = squarefree_decomposition(f);
  int total = 0;
  for (const auto& [g, k] : sqf) total += g.degree() * k;
  CHECK(total == 4);
  CHECK(squarefree_part(f).degree() == 2);

  const FieldSpec Fp = FieldSpec::prime_field(101);
  std::vector<Scalar> c{Fp.from_int(6), Fp.from_int(-5), Fp.from_int(1)};  // (t-2)(t-3)
  auto roots = roots_mod_p(UPoly(Fp, c));
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<std::uint64_t>{2, 3});
}
