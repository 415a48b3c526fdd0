#include <doctest.h>

#include <random>
#include <set>

#include "sklylab/error.hpp"
#include "sklylab/geometry.hpp"

using namespace sklylab;

namespace {

// Plain modular arithmetic, kept apart from Scalar.
struct Zp {
  std::int64_t p;
  std::int64_t m(std::int64_t x) const { return ((x % p) + p) % p; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return m(a * b); }
  std::int64_t inv(std::int64_t a) const {
    std::int64_t r = 1, e = p - 2, b = m(a);
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
};

using Pt = std::array<std::int64_t, 4>;

Pt normalize(const Zp& z, Pt v) {
  for (auto x : v)
    if (x) {
      const auto i = z.inv(x);
      for (auto& y : v) y = z.mul(y, i);
      break;
    }
  return v;
}

struct Oracle {
  Zp z;
  std::int64_t a, b, c;

  bool on_curve(const Pt& v) const {
    const auto A = z.mul(z.m(1 - c), z.inv(1 + a));
    const auto B = z.mul(z.m(1 + c), z.inv(1 - b));
    auto sq = [&](std::int64_t x) { return z.mul(x, x); };
    return z.m(sq(v[0]) + sq(v[1]) + sq(v[2]) + sq(v[3])) == 0 &&
           z.m(z.mul(A, sq(v[1])) + z.mul(B, sq(v[2])) + sq(v[3])) == 0;
  }

  std::optional<Pt> sigma(const Pt& v) const {
    auto sq = [&](std::int64_t x) { return z.mul(x, x); };
    const auto s0 = sq(v[0]), s1 = sq(v[1]), s2 = sq(v[2]), s3 = sq(v[3]);
    const auto bc = z.mul(b, c), ac = z.mul(a, c), ab = z.mul(a, b);
    Pt out{
        z.m(-2 * z.mul(z.mul(ab, c), z.mul(v[1], z.mul(v[2], v[3]))) -
            z.mul(v[0], z.m(-s0 + z.mul(bc, s1) + z.mul(ac, s2) + z.mul(ab, s3)))),
        z.m(2 * z.mul(a, z.mul(v[0], z.mul(v[2], v[3]))) + z.mul(v[1], z.m(s0 - z.mul(bc, s1) + z.mul(ac, s2) + z.mul(ab, s3)))),
        z.m(2 * z.mul(b, z.mul(v[0], z.mul(v[1], v[3]))) + z.mul(v[2], z.m(s0 + z.mul(bc, s1) - z.mul(ac, s2) + z.mul(ab, s3)))),
        z.m(2 * z.mul(c, z.mul(v[0], z.mul(v[1], v[2]))) + z.mul(v[3], z.m(s0 + z.mul(bc, s1) + z.mul(ac, s2) - z.mul(ab, s3)))),
    };
    if (out == Pt{0, 0, 0, 0}) return std::nullopt;
    return normalize(z, out);
  }

  std::vector<Pt> all_points() const {
    std::vector<Pt> pts;
    const auto p = z.p;
    for (std::int64_t lead = 0; lead < 4; ++lead) {
      // Points whose first nonzero coordinate is `lead`, scaled to 1.
      const std::int64_t free = 3 - lead;
      std::int64_t total = 1;
      for (int i = 0; i < free; ++i) total *= p;
      for (std::int64_t code = 0; code < total; ++code) {
        Pt v{0, 0, 0, 0};
        v[lead] = 1;
        std::int64_t k = code;
        for (std::int64_t i = lead + 1; i < 4; ++i) {
          v[i] = k % p;
          k /= p;
        }
        if (on_curve(v)) pts.push_back(v);
      }
    }
    return pts;
  }
};

std::int64_t res(const Scalar& s) { return static_cast<std::int64_t>(s.residue()); }

Pt to_pt(const ProjPoint& q) { return {res(q[0]), res(q[1]), res(q[2]), res(q[3])}; }

}  // namespace

TEST_CASE("projective points normalize") {
  const FieldSpec Q;
  ProjPoint a({Q.zero(), Q.from_int(2), Q.from_int(4), Q.zero()});
  CHECK(a[1] == Q.one());
  CHECK(a[2] == Q.from_int(2));
  CHECK(a == ProjPoint({Q.zero(), Q.from_int(-1), Q.from_int(-2), Q.zero()}));
  CHECK_THROWS_AS(ProjPoint({Q.zero(), Q.zero(), Q.zero(), Q.zero()}), Error);
}

TEST_CASE("sigma agrees with the modular oracle on every point of E over a small field") {
  const FieldSpec F = FieldSpec::prime_field(103);
  std::mt19937_64 rng(5);
  int closed_cases = 0;
  for (int trial = 0; trial < 6; ++trial) {
    const auto p = random_params(F, rng);
    const Oracle o{{103}, res(p.alpha), res(p.beta), res(p.gamma)};
    const CurveE E = build_curve(p);
    const SigmaMap sigma = SigmaMap::from_params(p);
    const auto pts = o.all_points();
    REQUIRE_FALSE(pts.empty());
    std::set<std::uint64_t> lengths;
    for (const Pt& v : pts) {
      ProjPoint q({F.from_int(v[0]), F.from_int(v[1]), F.from_int(v[2]), F.from_int(v[3])});
      CHECK(on_curve(E, q));
      const auto img = o.sigma(v);
      if (!img) {
        CHECK_THROWS_AS(sigma.apply(q), Error);
        continue;
      }
      CHECK(o.on_curve(*img));
      CHECK(to_pt(sigma.apply(q)) == *img);
      // Orbit length by the oracle alone.
      Pt cur = *img;
      std::uint64_t k = 1;
      bool defined = true;
      while (cur != v && k < 1000) {
        const auto nxt = o.sigma(cur);
        if (!nxt) {
          defined = false;
          break;
        }
        cur = *nxt;
        ++k;
      }
      if (defined && cur == v) lengths.insert(k);
    }
    // sigma is a translation, so every defined orbit has the same length.
    CHECK(lengths.size() <= 1);
    if (lengths.empty()) {
      // Few long orbits can all pass through the four indeterminacy points
      // of the cubic formula; that is reported, not resolved.
      try {
        sigma_order(p, 3, hasse_bound(103), 11);
        FAIL("expected an indeterminacy report");
      } catch (const Error& e) {
        CHECK(e.code() == Errc::Indeterminacy);
      }
      continue;
    }
    ++closed_cases;
    const auto r = sigma_order(p, 3, hasse_bound(103), 11);
    REQUIRE(r.order.has_value());
    CHECK(*r.order == *lengths.begin());
  }
  CHECK(closed_cases >= 2);
}

TEST_CASE("sigma preserves E") {
  const FieldSpec Q;
  const auto p = SklyaninParams::parse(Q, "-5/7", "2", "3");
  const auto sym = sigma_preserves_E(p, 0, 1);
  CHECK(sym.ok);
  CHECK(sym.method == "symbolic");

  Monomial m{};
  m[0] = 3;
  const SigmaMap bad = SigmaMap::from_params(p).perturbed(1, m, Q.one());
  CHECK_FALSE(sigma_preserves_E(p, 0, 1, &bad).ok);

  const FieldSpec F = FieldSpec::prime_field(10007);
  const auto pf = SklyaninParams::parse(F, "-5/7", "2", "3");
  const auto sampled = sigma_preserves_E(pf, 20, 3);
  CHECK(sampled.ok);
  CHECK(sampled.method == "sampled");
  const SigmaMap badf = SigmaMap::from_params(pf).perturbed(1, m, F.one());
  CHECK_FALSE(sigma_preserves_E(pf, 20, 3, &badf).ok);

  const auto pc = SklyaninParams::parse(FieldSpec::complex_approx(), "-5/7", "2", "3");
  CHECK(sigma_preserves_E(pc, 20, 3).ok);
}

TEST_CASE("sigma fixes the coordinate points") {
  const auto r = sigma_fixes_coordinate_points();
  CHECK(r.ok);
  for (const auto& s : r.scale) CHECK_FALSE(s.empty());
}

TEST_CASE("sigma order over F_p is stable and bounded") {
  const FieldSpec F = FieldSpec::prime_field(10007);
  const auto p = SklyaninParams::parse(F, "-5/7", "2", "3");
  const auto a = sigma_order(p, 3, hasse_bound(10007), 1);
  const auto b = sigma_order(p, 3, hasse_bound(10007), 1);
  REQUIRE(a.order.has_value());
  CHECK(a.order == b.order);
  CHECK(*a.order <= hasse_bound(10007));
  const auto capped = sigma_order(p, 1, 1, 1);
  if (*a.order > 1) CHECK_FALSE(capped.order.has_value());
  CHECK_THROWS_AS(sigma_order(SklyaninParams::parse(FieldSpec(), "-5/7", "2", "3"), 1, 10, 1), Error);
  for (int s = 0; s < 5; ++s) CHECK(on_curve(build_curve(p), find_point_fp(p, static_cast<std::uint64_t>(s))));
}
