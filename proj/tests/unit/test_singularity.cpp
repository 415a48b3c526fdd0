#include <doctest.h>

#include <set>

#include "sklylab/error.hpp"
#include "sklylab/instance.hpp"
#include "sklylab/singularity.hpp"

using namespace sklylab;

namespace {

const FieldSpec Q;

std::vector<Scalar> pt(std::initializer_list<long long> v) {
  std::vector<Scalar> out;
  for (long long x : v) out.push_back(Q.from_int(x));
  return out;
}

// Rank of the 2x6 Jacobian, from derivatives evaluated here.
int oracle_rank(const CenterPresentation& P, const std::vector<Scalar>& x) {
  std::array<std::array<Scalar, 6>, 2> J;
  for (int i = 0; i < 6; ++i) {
    J[0][i] = P.F1.derivative(static_cast<std::size_t>(i)).evaluate(x);
    J[1][i] = P.F2.derivative(static_cast<std::size_t>(i)).evaluate(x);
  }
  bool any = false;
  for (int i = 0; i < 6; ++i) {
    if (!J[0][i].is_zero() || !J[1][i].is_zero()) any = true;
    for (int j = i + 1; j < 6; ++j)
      if (!(J[0][i] * J[1][j] - J[0][j] * J[1][i]).is_zero()) return 2;
  }
  return any ? 1 : 0;
}

bool on_Y(const CenterPresentation& P, const std::vector<Scalar>& x) {
  return P.F1.evaluate(x).is_zero() && P.F2.evaluate(x).is_zero();
}

MPoly in(const std::string& s, int n) { return MPoly::parse(s, center_vars(n), Q); }

}  // namespace

TEST_CASE("pairings") {
  CHECK(pairing_of(RhoType::Rho1) == std::array<std::array<int, 2>, 2>{{{0, 3}, {1, 2}}});
  CHECK(pairing_of(RhoType::Rho2) == std::array<std::array<int, 2>, 2>{{{0, 2}, {1, 3}}});
  CHECK(pairing_of(RhoType::Rho3) == std::array<std::array<int, 2>, 2>{{{0, 1}, {2, 3}}});
}

TEST_CASE("builder errors") {
  auto code = [](auto&& f) -> std::optional<Errc> {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return std::nullopt;
  };
  const MPoly a1 = in("z0 + 2*z3 + z1 + 3*z2", 4), a2 = in("z0 + z3 + z1 + z2", 4);
  CHECK(code([&] { build_even_presentation(RhoType::Rho1, in("z0^2", 4), a2, in("g1^2", 4), in("g2^2", 4), 2); }) ==
        Errc::DegenerateAForm);
  // a2 must involve z3 for the first pair.
  CHECK(code([&] { build_even_presentation(RhoType::Rho1, a1, in("z1 + z2", 4), in("g1^2", 4), in("g2^2", 4), 2); }) ==
        Errc::DegenerateAForm);
  CHECK(code([&] { build_even_presentation(RhoType::Rho1, a1, a2, in("g1^2", 4), in("g1*g2", 4), 2); }) ==
        Errc::CommonFactorH);
  CHECK(code([&] { build_even_presentation(RhoType::Rho1, a1, a2, in("g1^2", 4), in("g1^2", 4), 2); }) ==
        Errc::CommonFactorH);
  CHECK(code([&] { build_even_presentation(RhoType::Rho1, a1, a2, in("g1^3", 4), in("g2^2", 4), 2); }) ==
        Errc::DegreeMismatch);
  CHECK(code([&] { build_odd_presentation(in("z1^2", 3), in("g1^2", 3), in("z0^2", 3), in("g2^3", 3)); }) ==
        Errc::DegreeMismatch);
  // z weight 3 but h of degree 2.
  CHECK(code([&] { build_odd_presentation(in("z1^2", 3), in("g1^2", 3), in("z0^2", 3), in("g2^2", 3)); }) ==
        Errc::DegreeMismatch);
}

TEST_CASE("binary forms sharing a factor") {
  CHECK(binary_forms_share_factor(in("g1^2 - g2^2", 4), in("g1^2 + g1*g2", 4)));
  CHECK_FALSE(binary_forms_share_factor(in("g1^2", 4), in("g2^2", 4)));
  CHECK(binary_forms_share_factor(in("g1*g2", 4), in("g2^2 + g1*g2", 4)));
  CHECK_FALSE(binary_forms_share_factor(in("g1^2 + g2^2", 4), in("g1^2 - g2^2", 4)));
}

TEST_CASE("odd instance: singular point and nodal curve") {
  const auto P = preset_odd_n3();
  CHECK(P.parity == Parity::Odd);
  CHECK(P.n == 3);
  const auto x = pt({1, 0, 0, 0, 0, -1});
  CHECK(on_Y(P, x));
  CHECK(oracle_rank(P, x) <= 1);
  CHECK(jacobian_rank_at(P, x) == oracle_rank(P, x));

  NodalCurveSpec C{0, {Q.zero(), Q.from_int(-1)}, "e0"};
  const auto ok = nodal_curve_check(P, C, pt({1, 2, 3, 5}));
  CHECK(ok.ok);
  CHECK(ok.compatible);
  CHECK(ok.samples.size() == 4);
  for (long long t : {1, 2, 3, 5}) {
    const auto y = pt({t * t * t, 0, 0, 0, 0, -t * t});
    CHECK(on_Y(P, y));
    CHECK(oracle_rank(P, y) <= 1);
  }
  NodalCurveSpec wrong{0, {Q.zero(), Q.one()}, "wrong"};
  CHECK_FALSE(nodal_curve_check(P, wrong, pt({1, 2, 3, 5})).ok);
  CHECK_THROWS_AS(nodal_curve_check(P, NodalCurveSpec{4, {Q.zero(), Q.one()}, "bad"}, pt({1})), Error);
}

TEST_CASE("odd instance: slice singular points") {
  const auto P = preset_odd_n3();
  const auto s = slice_singular_points(P, Q.zero(), Q.from_int(-1));
  CHECK(s.distinct_count == 2);
  std::set<std::vector<std::string>> got;
  for (const auto& p : s.points) {
    REQUIRE(p.rational());
    std::vector<std::string> row;
    for (const auto& c : p.exact) row.push_back(c.to_string());
    got.insert(row);
  }
  CHECK(got == std::set<std::vector<std::string>>{{"1", "0", "0", "0"}, {"-1", "0", "0", "0"}});
  CHECK(slice_singular_points(P, Q.zero(), Q.zero()).distinct_count == 1);
  CHECK(slice_singular_points(P, Q.from_int(2), Q.from_int(3)).distinct_count == 0);
}

TEST_CASE("even instance: components lie in the singular locus") {
  const auto P = preset_even_rho1();
  CHECK(P.parity == Parity::Even);
  // On the first component z0 = z3 = 0 and a1 = g1^2; z2 = 0 forces g2 = +-g1.
  for (long long g : {1, 2, -3}) {
    for (long long sg : {1, -1}) {
      const auto x = pt({0, g * g, 0, 0, g, sg * g});
      CHECK(on_Y(P, x));
      CHECK(oracle_rank(P, x) <= 1);
      CHECK(jacobian_rank_at(P, x) <= 1);
    }
  }
  const auto smooth = pt({-6, 4, 4, -6, -2, 0});
  CHECK(on_Y(P, smooth));
  CHECK(oracle_rank(P, smooth) == 2);
  CHECK(jacobian_rank_at(P, smooth) == 2);
}

TEST_CASE("even instance: decomposition of the singular locus") {
  const auto P = preset_even_rho1();
  const auto r = verify_even_decomposition(P, std::array<Scalar, 2>{Q.from_int(2), Q.from_int(3)});
  CHECK(r.variety_equal);
  CHECK(r.origin_only);
  REQUIRE(r.component_slice_counts.has_value());
  CHECK((*r.component_slice_counts)[0] == 2);
  CHECK((*r.component_slice_counts)[1] == 2);
  CHECK(slice_singular_points(P, Q.zero(), Q.zero()).distinct_count == 1);
  CHECK(slice_singular_points(P, Q.from_int(2), Q.from_int(3)).distinct_count == 4);
}

TEST_CASE("even negative control: equal h forms") {
  const MPoly a1 = in("z0 + 2*z3 + z1 + 3*z2", 4), a2 = in("z0 + z3 + z1 + z2", 4);
  const auto P = build_even_presentation(RhoType::Rho1, a1, a2, in("g1^2", 4), in("g1^2", 4), 2, {false});
  const auto r = verify_even_decomposition(P);
  CHECK_FALSE((r.origin_only && r.variety_equal));
}

TEST_CASE("symplectic points on a slice equal the slice singular points") {
  for (const auto& P : {preset_odd_n3(), preset_even_rho1()}) {
    const auto J = P.poisson();
    for (auto [c1, c2] : std::vector<std::pair<int, int>>{{0, -1}, {2, 3}, {1, 1}}) {
      const auto a = J.slice_symplectic_ideal(Q.from_int(c1), Q.from_int(c2));
      const auto b = slice_singular_ideal(P, Q.from_int(c1), Q.from_int(c2));
      CHECK(variety_equal(a, b));
    }
  }
}

TEST_CASE("smooth-point rank over F_p") {
  const auto P = preset_odd_n3();
  const FieldSpec F = FieldSpec::prime_field(10007);
  CenterPresentation Pp = P;
  Pp.F1 = P.F1.change_field(F);
  Pp.F2 = P.F2.change_field(F);
  // With z2 = z3 = 0 and g1 = 1, F1 = 0 fixes g2 = -z1^2 and F2 = 0 fixes z0^2.
  int found = 0;
  for (std::uint64_t a = 1; a < 200 && found < 3; ++a) {
    std::vector<Scalar> x{F.zero(), F.from_int(static_cast<long long>(a)), F.zero(), F.zero(), F.one(), F.zero()};
    x[5] = -(x[1] * x[1]);
    const Scalar rhs = -(x[1] * x[1] + x[4] * x[4] * x[4] + x[5] * x[5] * x[5]);
    Scalar root;
    try {
      root = Scalar(sqrt_mod_p(rhs.residue(), 10007), 10007);
    } catch (const Error&) {
      continue;
    }
    x[0] = root;
    REQUIRE(Pp.F1.evaluate(x).is_zero());
    REQUIRE(Pp.F2.evaluate(x).is_zero());
    if (root.is_zero()) continue;
    CHECK(jacobian_rank_at(Pp, x) == 2);
    ++found;
  }
  CHECK(found == 3);
}
