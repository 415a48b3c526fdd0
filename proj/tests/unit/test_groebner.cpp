#include <doctest.h>

#include <random>

#include "sklylab/error.hpp"
#include "sklylab/groebner.hpp"

using namespace sklylab;

namespace {

const VarTable xyz({"x", "y", "z"});

MPoly P(const char* s, const FieldSpec& F = FieldSpec::rational()) { return MPoly::parse(s, xyz, F); }

MPoly spoly(const MPoly& f, const MPoly& g, TermOrder o) {
  const Monomial lf = leading_monomial(f, o), lg = leading_monomial(g, o);
  const Monomial l = mono_lcm(lf, lg);
  const FieldSpec& F = f.field();
  return MPoly::term(f.vars(), F, mono_div(l, lf), f.coefficient(lf).inverse()) * f -
         MPoly::term(g.vars(), F, mono_div(l, lg), g.coefficient(lg).inverse()) * g;
}

// Every S-polynomial of the basis reduces to zero (Buchberger's criterion)
// and no remainder term is divisible by a leading monomial.
void check_is_groebner(const GroebnerBasis& gb) {
  const auto& ps = gb.polys();
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) CHECK(gb.reduce(spoly(ps[i], ps[j], gb.order())).is_zero());
}

}  // namespace

TEST_CASE("known lex basis") {
  GroebnerOptions o;
  o.order = TermOrder::Lex;
  const auto gb = groebner_basis({P("x^2 + y^2 - 1"), P("x - y")}, o);
  REQUIRE(gb.polys().size() == 2);
  CHECK(gb.contains(P("y^2 - 1/2")));
  CHECK(gb.contains(P("x - y")));
  check_is_groebner(gb);
}

TEST_CASE("bases satisfy Buchberger's criterion in every order") {
  const std::vector<MPoly> gens{P("x^2*y - z"), P("x*y^2 - x"), P("y*z - x^2 + 1")};
  for (TermOrder o : {TermOrder::Grevlex, TermOrder::Lex, TermOrder::WeightedGrevlex}) {
    GroebnerOptions opt;
    opt.order = o;
    const auto gb = groebner_basis(gens, opt);
    check_is_groebner(gb);
    for (const auto& g : gens) CHECK(gb.contains(g));
  }
}

TEST_CASE("random combinations are ideal members") {
  std::mt19937_64 rng(9);
  const PolyIdeal I(xyz, FieldSpec::rational(), {P("x^2 - y*z"), P("y^3 - x*z + 2")});
  for (int i = 0; i < 20; ++i) {
    MPoly f(xyz, FieldSpec::rational());
    for (const auto& g : I.generators()) {
      Monomial m{};
      m[rng() % 3] = static_cast<std::uint16_t>(rng() % 3);
      f += MPoly::term(xyz, FieldSpec::rational(), m, FieldSpec::rational().from_int(static_cast<long long>(rng() % 7) - 3)) * g;
    }
    CHECK(ideal_member(f, I));
    CHECK_FALSE(ideal_member(f + P("x"), I));
  }
}

TEST_CASE("unit ideals and caps") {
  CHECK(groebner_basis({P("x"), P("x - 1")}).is_unit());
  GroebnerOptions tight;
  tight.degree_cap = 3;
  CHECK_THROWS_AS(groebner_basis({P("x^3*y - z^2"), P("y^4 - x*z")}, tight), Error);
  const FieldSpec C = FieldSpec::complex_approx();
  CHECK_THROWS_AS(groebner_basis({MPoly::parse("x - y", xyz, C)}), Error);
}

TEST_CASE("radical membership and variety equality") {
  const PolyIdeal I(xyz, FieldSpec::rational(), {P("x^2"), P("y")});
  CHECK_FALSE(ideal_member(P("x"), I));
  CHECK(radical_member(P("x"), I));
  CHECK(variety_equal(I, PolyIdeal(xyz, FieldSpec::rational(), {P("x"), P("y")})));
  CHECK_FALSE(variety_equal(I, PolyIdeal(xyz, FieldSpec::rational(), {P("x")})));
  const PolyIdeal J(xyz, FieldSpec::rational(), {P("x*y")});
  CHECK(variety_equal(J, PolyIdeal(xyz, FieldSpec::rational(), {P("x")}).product(PolyIdeal(xyz, FieldSpec::rational(), {P("y")}))));
}

TEST_CASE("radical membership agrees with exhaustive evaluation over F_13") {
  // V(I) consists of four F_13-rational points, so vanishing on the F_13
  // points decides radical membership.
  const FieldSpec F = FieldSpec::prime_field(13);
  const PolyIdeal I(xyz, F, {P("x^2 - 1", F), P("y^2 - 4", F), P("z - x*y", F)});
  std::vector<std::vector<Scalar>> points;
  for (int a = 0; a < 13; ++a)
    for (int b = 0; b < 13; ++b)
      for (int c = 0; c < 13; ++c) {
        std::vector<Scalar> pt{F.from_int(a), F.from_int(b), F.from_int(c)};
        bool on = true;
        for (const auto& g : I.generators()) on = on && g.evaluate(pt).is_zero();
        if (on) points.push_back(pt);
      }
  REQUIRE(points.size() == 4);
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    MPoly f(xyz, F);
    for (int t = 0; t < 3; ++t) {
      Monomial m{};
      for (int v = 0; v < 3; ++v) m[v] = static_cast<std::uint16_t>(rng() % 2);
      f.add_term(m, F.from_int(static_cast<long long>(rng() % 13)));
    }
    // Bias half the samples toward members.
    if (i % 2 == 0) f = f * P("x*y - z", F) + P("x^2 - 1", F) * f;
    bool vanishes = true;
    for (const auto& pt : points) vanishes = vanishes && f.evaluate(pt).is_zero();
    CHECK(radical_member(f, I) == vanishes);
    ++checked;
  }
  CHECK(checked == 200);
}
