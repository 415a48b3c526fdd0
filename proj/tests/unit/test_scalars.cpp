#include <doctest.h>

#include <random>

#include "sklylab/error.hpp"
#include "sklylab/linalg.hpp"
#include "sklylab/scalars.hpp"

using namespace sklylab;

namespace {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("primality agrees with trial division") {
  for (std::uint64_t n = 0; n < 5000; ++n) CHECK_MESSAGE(is_prime(n) == trial_division_prime(n), n);
  CHECK(is_prime(1000000007ULL));
  CHECK_FALSE(is_prime(1000000007ULL * 3));
}

TEST_CASE("field specs parse and reject bad moduli") {
  CHECK(FieldSpec::parse("rational").kind() == FieldSpec::Kind::Rational);
  CHECK(FieldSpec::parse("fp:10007").modulus() == 10007);
  CHECK(FieldSpec::parse("complex:1e-10").tolerance() == doctest::Approx(1e-10));
  CHECK_THROWS_AS(FieldSpec::prime_field(3), Error);
  CHECK_THROWS_AS(FieldSpec::prime_field(10006), Error);
  CHECK_THROWS_AS(FieldSpec::parse("reals"), Error);
}

TEST_CASE("prime-field inverses and square roots match brute force") {
  const std::uint64_t p = 101;
  const FieldSpec F = FieldSpec::prime_field(p);
  for (std::uint64_t a = 1; a < p; ++a) {
    std::uint64_t brute = 0;
    for (std::uint64_t b = 1; b < p; ++b)
      if (a * b % p == 1) brute = b;
    CHECK(inv_mod(a, p) == brute);
    CHECK((F.from_int(static_cast<long long>(a)) * F.from_int(static_cast<long long>(a)).inverse()).is_one());

    bool residue = false;
    for (std::uint64_t r = 0; r < p; ++r) residue = residue || r * r % p == a;
    if (residue) {
      const std::uint64_t r = sqrt_mod_p(a, p);
      CHECK(r * r % p == a);
    } else {
      CHECK_THROWS_AS(sqrt_mod_p(a, p), Error);
    }
  }
}

TEST_CASE("rational arithmetic is exact") {
  const FieldSpec Q;
  const Scalar a = Q.parse_scalar("-5/7"), b = Q.parse_scalar("2");
  CHECK((a * b).to_string() == "-10/7");
  CHECK((a / a).is_one());
  CHECK(Q.parse_scalar("0.25") == Q.parse_scalar("1/4"));
  CHECK_THROWS_AS(Q.zero().inverse(), Error);
  CHECK(Q.parse_scalar("3").pow(-2) == Q.parse_scalar("1/9"));
}

TEST_CASE("mixing fields is an error") {
  const Scalar q = FieldSpec::rational().one();
  const Scalar r = FieldSpec::prime_field(7).one();
  const Scalar r2 = FieldSpec::prime_field(11).one();
  CHECK_THROWS_AS(q + r, Error);
  CHECK_THROWS_AS(r * r2, Error);
}

TEST_CASE("approximate scalars compare within tolerance") {
  const FieldSpec C = FieldSpec::complex_approx(1e-9);
  const Scalar x = C.parse_scalar("1+2i");
  CHECK(x.to_complex() == std::complex<double>(1, 2));
  CHECK(x == Scalar(std::complex<double>(1 + 1e-12, 2), 1e-9));
  CHECK_FALSE(x == Scalar(std::complex<double>(1 + 1e-3, 2), 1e-9));
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(7);
  for (const FieldSpec& F : {FieldSpec::rational(), FieldSpec::prime_field(10007)}) {
    for (int i = 0; i < 200; ++i) {
      const Scalar a = F.from_int(static_cast<long long>(rng() % 2001) - 1000);
      const Scalar b = F.from_int(static_cast<long long>(rng() % 2001) - 1000);
      const Scalar c = F.from_int(static_cast<long long>(rng() % 2001) - 1000);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) - b == a);
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }
}

TEST_CASE("row reduction rank and kernel") {
  const FieldSpec Q;
  auto s = [&](long long v) { return Q.from_int(v); };
  Mat m{{s(1), s(2), s(3)}, {s(2), s(4), s(6)}, {s(1), s(0), s(1)}};
  CHECK(rank(m, Q) == 2);
  const auto ker = kernel(m, 3, Q);
  REQUIRE(ker.size() == 1);
  for (const auto& row : m) {
    Scalar dot = Q.zero();
    for (int j = 0; j < 3; ++j) dot += row[j] * ker[0][j];
    CHECK(dot.is_zero());
  }
  const auto x = solve(m, {s(6), s(12), s(2)}, Q);
  REQUIRE(x.has_value());
  CHECK_FALSE(solve(m, {s(1), s(0), s(0)}, Q).has_value());

  RowSpace rs(3, Q);
  CHECK(rs.insert({s(1), s(1), s(0)}));
  CHECK_FALSE(rs.insert({s(2), s(2), s(0)}));
  CHECK(rs.contains({s(-3), s(-3), s(0)}));
  CHECK(rs.rank() == 1);
}
