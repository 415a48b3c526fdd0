#include <doctest.h>

#include <algorithm>
#include <set>

#include "sklylab/error.hpp"
#include "sklylab/strata.hpp"

using namespace sklylab;

namespace {

// Dimension vectors written out independently: odd n has curves (k+1, n-1-k);
// even n = 2s has (s, s) off the curves and (k+1, k+1, s-1-k, s-1-k) on them.
std::vector<std::pair<std::string, std::vector<int>>> oracle_strata(int n) {
  std::vector<std::pair<std::string, std::vector<int>>> out{{"smooth", {n}}, {"origin", {1}}};
  if (n % 2) {
    for (int k = 0; k + 2 <= n; ++k) out.push_back({"curve(" + std::to_string(k) + ")", {k + 1, n - 1 - k}});
  } else {
    const int s = n / 2;
    out.push_back({"off-curve singular", {s, s}});
    for (int k = 0; k + 2 <= s; ++k)
      out.push_back({"curve(" + std::to_string(k) + ")", {k + 1, k + 1, s - 1 - k, s - 1 - k}});
  }
  return out;
}

long long squares(const std::vector<int>& v) {
  long long t = 0;
  for (int d : v) t += static_cast<long long>(d) * d;
  return t;
}

}  // namespace

TEST_CASE("PI degree guard") {
  for (int bad : {0, 1, 2, 4}) CHECK_THROWS_AS(irr_table(bad), Error);
  try {
    require_pi_degree(4);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadPIDegree);
    CHECK(std::string(e.what()).find("n divides 4 excluded") != std::string::npos);
  }
  CHECK_NOTHROW(require_pi_degree(3));
  CHECK_NOTHROW(require_pi_degree(6));
  CHECK(half_degree(7) == 7);
  CHECK(half_degree(10) == 5);
}

TEST_CASE("q values") {
  CHECK(q_value(2, 5) == 13);
  CHECK(q_value(1, 6) == 10);
  CHECK(q_value(0, 5) == 25);
  CHECK(q_value(1, 3) == 5);
}

TEST_CASE("stratum tables match the oracle dimension vectors") {
  for (int n : {3, 5, 6, 7, 8, 9, 10, 11, 12, 13}) {
    const StratumTable t = irr_table(n);
    auto want = oracle_strata(n);
    std::set<std::pair<std::string, std::vector<int>>> got_set, want_set(want.begin(), want.end());
    for (const auto& s : t.strata) {
      got_set.insert({s.label, s.dims});
      CHECK(s.d_value == squares(s.dims));
    }
    CHECK(got_set == want_set);
  }
}

TEST_CASE("discriminant zero sets are exactly the strata with d below ell") {
  for (int n : {3, 5, 6, 7, 10}) {
    const auto prof = discriminant_profile(n);
    const auto strata = oracle_strata(n);
    REQUIRE(prof.entries.size() == static_cast<std::size_t>(n * n));
    for (const auto& e : prof.entries) {
      std::vector<std::string> want;
      for (const auto& [label, dims] : strata)
        if (squares(dims) < e.ell) want.push_back(label);
      std::sort(want.begin(), want.end());
      CHECK_MESSAGE(e.strata == want, "n=" << n << " ell=" << e.ell);
    }
  }
}

TEST_CASE("profile ranges for n = 5 and n = 6") {
  const auto p5 = discriminant_profile(5);
  REQUIRE(p5.ranges.size() == 4);
  CHECK(p5.ranges[0].lo == 1);
  CHECK(p5.ranges[0].hi == 1);
  CHECK(p5.ranges[1].lo == 2);
  CHECK(p5.ranges[1].hi == 13);
  CHECK(p5.ranges[2].lo == 14);
  CHECK(p5.ranges[2].hi == 17);
  CHECK(p5.ranges[3].lo == 18);
  CHECK(p5.ranges[3].hi == 25);

  const auto p6 = discriminant_profile(6);
  CHECK(p6.ranges[1].hi == 10);
  CHECK(p6.ranges[2].lo == 11);
  CHECK(p6.ranges[2].hi == 18);
  CHECK(p6.ranges[3].lo == 19);
  CHECK(p6.ranges[3].hi == 36);
}

TEST_CASE("consistency checks pass") {
  for (int n : {3, 5, 6, 7, 8, 9, 10, 11, 13}) {
    const auto r = consistency_check(n);
    CHECK_MESSAGE(r.ok(), "n=" << n);
    CHECK_FALSE(r.verdicts.empty());
  }
}

TEST_CASE("fat point series") {
  for (int k = 0; k <= 6; ++k) {
    const auto fp = hs_quotient_multiplicity(k);
    CHECK(fp.multiplicity == k + 1);
    CHECK(fp.series.dim() == 1);
    for (int d = 0; d < 12; ++d) CHECK(fp.series.coefficient(d) == std::min(d + 1, k + 1));
  }
  CHECK(hs_quotient_multiplicity(2).series.to_string() == "(1 + t + t^2)/(1 - t)");
  CHECK_THROWS_AS(hs_quotient_multiplicity(-1), Error);
}

TEST_CASE("Hilbert series arithmetic") {
  const HilbertSeries poly({1}, 4);
  for (int d = 0; d < 6; ++d) CHECK(poly.coefficient(d) == (d + 1) * (d + 2) * (d + 3) / 6);
  const HilbertSeries diff = poly - poly.shifted(2);
  CHECK(diff.dim() == 3);
  CHECK(diff.multiplicity() == 2);
  CHECK((diff + poly.shifted(2)) == poly);
  CHECK(HilbertSeries({1, -1}, 1) == HilbertSeries({1}, 0));
}

TEST_CASE("curve label normalization") {
  CHECK(curve_label_normalize({1, false, 4}, 7).k == 1);
  CHECK(curve_label_normalize({1, false, 1}, 7).k == 1);
  const auto even = curve_label_normalize({2, true, 0}, 10);
  CHECK(even == CurveLabel{2, false, 3});
  CHECK(curve_label_normalize({2, false, 0}, 10) == CurveLabel{2, false, 0});
  CHECK_THROWS_AS(curve_label_normalize({0, true, 0}, 7), Error);
  CHECK_THROWS_AS(curve_label_normalize({4, false, 0}, 7), Error);
  CHECK_THROWS_AS(curve_label_normalize({0, false, 6}, 7), Error);
}
