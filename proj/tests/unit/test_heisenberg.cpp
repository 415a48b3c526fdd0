#include <doctest.h>

#include <random>

#include "sklylab/error.hpp"
#include "sklylab/heisenberg.hpp"

using namespace sklylab;
using cd = std::complex<double>;

namespace {

SklyaninParams standard() { return SklyaninParams::parse(FieldSpec(), "-5/7", "2", "3"); }

double max_abs(const CMat& m) { return m.cwiseAbs().maxCoeff(); }

// Relations rewritten after x_i -> sum_k T(i,k) x_k, computed term by term.
CMat substituted_relations(const SklyaninParams& p, const CMat& T) {
  const RelationSet R = build_relations(p);
  CMat out = CMat::Zero(16, 6);
  for (int r = 0; r < 6; ++r)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const cd c = R.rows[r][4 * i + j].to_complex();
        if (c == cd(0)) continue;
        for (int k = 0; k < 4; ++k)
          for (int l = 0; l < 4; ++l) out(4 * k + l, r) += c * T(i, k) * T(j, l);
      }
  return out;
}

// The relation span is preserved iff appending the images keeps rank 6.
bool preserves_relations(const SklyaninParams& p, const CMat& T) {
  const CMat R = relation_matrix(p);
  CMat both(16, 12);
  both << R, substituted_relations(p, T);
  Eigen::JacobiSVD<CMat> svd(both);
  const auto& sv = svd.singularValues();
  return sv(6) < 1e-9 * sv(0);
}

}  // namespace

TEST_CASE("generators satisfy the presentation") {
  const auto g = build_generators(standard());
  const auto rep = verify_presentation(g.eps, g.eps1, g.eps2);
  CHECK(rep.ok(1e-12));
  CHECK(rep.residuals.size() == 6);
  const CMat e1sq = g.eps1 * g.eps1, e2sq = g.eps2 * g.eps2;
  CHECK(max_abs(e1sq - Eigen::Vector4cd(1, 1, -1, -1).asDiagonal().toDenseMatrix()) < 1e-12);
  CHECK(max_abs(e2sq - Eigen::Vector4cd(1, -1, 1, -1).asDiagonal().toDenseMatrix()) < 1e-12);
  // The group commutator of e1 and e2 is e.
  CHECK(max_abs(g.eps1 * g.eps2 * g.eps1.inverse() * g.eps2.inverse() - g.eps) < 1e-12);
}

TEST_CASE("presentation negative controls") {
  const auto g = build_generators(standard());
  CMat bumped = g.eps1;
  bumped(0, 1) *= 1.001;
  CHECK_FALSE(verify_presentation(g.eps, bumped, g.eps2).ok(1e-9));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> U(-1, 1);
  CMat r(4, 4);
  for (Eigen::Index i = 0; i < 16; ++i) r(i) = cd(U(rng), U(rng));
  CHECK_FALSE(verify_presentation(g.eps, r, g.eps2).ok(1e-9));
  // Row and column forms differ unless e^2 = 1.
  CHECK_FALSE(verify_presentation(g.eps, g.eps1, g.eps2, Convention::Column).ok(1e-9));
  const CMat id = CMat::Identity(4, 4);
  CHECK(verify_presentation(id, id, id).ok(1e-12));
}

TEST_CASE("group closure") {
  const auto g = build_generators(standard());
  CHECK(enumerate_group({g.eps}).size() == 4);
  CHECK(enumerate_group({g.eps, g.eps1, g.eps2}).size() == 64);
  // An infinite-order element cannot close.
  CMat rot = CMat::Identity(4, 4);
  rot(0, 0) = std::polar(1.0, 1.0);
  CHECK_THROWS_AS(enumerate_group({rot}, 100), Error);
}

TEST_CASE("all 64 elements are algebra automorphisms, by direct substitution") {
  const auto p = standard();
  const auto g = build_generators(p);
  const auto G = enumerate_group({g.eps, g.eps1, g.eps2});
  const CMat R = relation_matrix(p);
  for (const CMat& m : G) {
    CHECK(preserves_relations(p, m));
    CHECK(is_algebra_automorphism(m, R, 1e-8));
  }
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> U(-1, 1);
  CMat r(4, 4);
  for (Eigen::Index i = 0; i < 16; ++i) r(i) = cd(U(rng), U(rng));
  CHECK_FALSE(preserves_relations(p, r));
  CHECK_FALSE(is_algebra_automorphism(r, R, 1e-8));
}

TEST_CASE("action on span(g1, g2) matches the closed form") {
  const auto p = standard();
  const auto g = build_generators(p);
  const auto expected = expected_g_action(p);
  CHECK(max_abs(induced_action_on_g(g.eps1, p) - expected[0]) < 1e-9);
  CHECK(max_abs(induced_action_on_g(g.eps2, p) - expected[1]) < 1e-9);
  CHECK(max_abs(induced_action_on_g(g.eps, p) + CMat::Identity(2, 2)) < 1e-9);
  CHECK(std::abs(expected[0].determinant() - cd(-1)) < 1e-12);
  CHECK(verify_presentation(-CMat::Identity(2, 2), expected[0], expected[1], Convention::Column).ok(1e-9));

  // The order-8 subgroup of squares fixes g pointwise.
  const auto N = enumerate_group({CMat(g.eps * g.eps), CMat(g.eps1 * g.eps1), CMat(g.eps2 * g.eps2)});
  CHECK(N.size() == 8);
  for (const CMat& m : N) {
    const CMat a = induced_action_on_g(m, p);
    CHECK(max_abs(a - CMat::Identity(2, 2)) < 1e-9);
  }

  CMat swap = CMat::Zero(4, 4);
  swap(0, 1) = swap(1, 0) = swap(2, 2) = swap(3, 3) = 1;
  CHECK_THROWS_AS(induced_action_on_g(CMat(CMat::Ones(4, 4) + 2.0 * swap), p), Error);
}

TEST_CASE("ten random triples give a 64-element group of automorphisms") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 10; ++t) {
    const auto p = random_params(FieldSpec(), rng);
    const auto g = build_generators(p);
    CHECK(verify_presentation(g.eps, g.eps1, g.eps2).ok(1e-9));
    const auto G = enumerate_group({g.eps, g.eps1, g.eps2});
    CHECK(G.size() == 64);
    for (std::size_t i = 0; i < G.size(); i += 7) CHECK(preserves_relations(p, G[i]));
  }
}

TEST_CASE("degenerate and unsupported parameters") {
  CHECK_THROWS_AS(heisenberg_constants(SklyaninParams::parse(FieldSpec(), "0", "0", "0")), Error);
  try {
    heisenberg_constants(SklyaninParams::parse(FieldSpec(), "0", "0", "0"));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegenerateParams);
  }
  CHECK_THROWS_AS(build_generators(SklyaninParams::parse(FieldSpec::prime_field(10007), "-5/7", "2", "3")), Error);
}

TEST_CASE("z-action is the entrywise power of the generators") {
  const auto p = standard();
  for (int n : {3, 5, 6, 7, 10}) {
    CHECK(z_action_power_deviation(p, n) < 1e-9);
    const auto z = z_action_generators(p, n);
    CHECK(verify_presentation(z[0], z[1], z[2], Convention::Column).ok(1e-9));
  }
  CHECK_THROWS_AS(z_action_generators(p, 0), Error);
}

TEST_CASE("even-degree two-dimensional images") {
  const auto p = standard();
  const auto odd = verify_even_irrep(p, 3, RhoType::Rho1);
  CHECK(odd.presentation.ok(1e-9));
  CHECK(odd.commute_up_to_scalar);
  CHECK(std::abs(odd.commutator_scalar - cd(-1)) < 1e-9);
  CHECK(odd.irreducible);

  const auto even = verify_even_irrep(p, 2, RhoType::Rho1);
  CHECK(even.presentation.ok(1e-9));
  CHECK_FALSE(even.irreducible);

  // The displayed second and third images break the presentation for odd s.
  CHECK_FALSE(verify_even_irrep(p, 3, RhoType::Rho2).presentation.ok(1e-6));
  CHECK_FALSE(verify_even_irrep(p, 3, RhoType::Rho3).presentation.ok(1e-6));
  CHECK_FALSE(verify_even_irrep(p, 2, RhoType::Rho2).irreducible);

  CHECK(parse_rho("rho2") == RhoType::Rho2);
  CHECK(parse_rho("3") == RhoType::Rho3);
  CHECK(to_string(RhoType::Rho1) == "rho1");
  CHECK_THROWS_AS(parse_rho("rho4"), Error);
}
