// Runs the ten acceptance criteria at their tolerances and time budgets and
// prints one PASS/FAIL line per criterion, followed by frozen-value
// cross-checks computed here. Exit status is nonzero if anything fails.

#include <cstdio>
#include <iostream>
#include <string>

#include "sklylab/skly.hpp"
#include "sklylab/strata.hpp"
#include "sklylab/verify.hpp"

using namespace sklylab;

namespace {

int failures = 0;

void report(bool ok, const std::string& name, const std::string& extra) {
  if (!ok) ++failures;
  std::printf("%s  %s%s\n", ok ? "PASS" : "FAIL", name.c_str(), extra.c_str());
}

std::uint64_t binom3(int d) { return static_cast<std::uint64_t>((d + 1) * (d + 2) * (d + 3) / 6); }

void frozen_checks() {
  {
    SklyaninAlgebra S(SklyaninParams::parse(FieldSpec::prime_field(10007), "-5/7", "2", "3"));
    bool ok = true;
    for (int d = 0; d <= 6; ++d) ok = ok && S.graded_dimension(d) == binom3(d);
    report(ok, "oracle: dim S_d = C(d+3,3) for d <= 6 over F_10007", "");
  }
  {
    const auto p = discriminant_profile(5);
    const bool ok = p.ranges.size() == 4 && p.ranges[1].lo == 2 && p.ranges[1].hi == 13 && p.ranges[2].lo == 14 &&
                    p.ranges[2].hi == 17 && p.ranges[3].lo == 18 && p.ranges[3].hi == 25;
    report(ok, "oracle: n = 5 discriminant ranges 1 | 2-13 | 14-17 | 18-25", "");
  }
  {
    const auto p = discriminant_profile(6);
    const bool ok = p.ranges[1].hi == 10 && p.ranges[2].hi == 18 && p.ranges[3].hi == 36;
    report(ok, "oracle: n = 6 discriminant ranges 2-10 | 11-18 | 19-36", "");
  }
  {
    bool ok = q_value(2, 5) == 13 && q_value(1, 6) == 10;
    for (int k = 0; k <= 5; ++k) ok = ok && hs_quotient_multiplicity(k).multiplicity == k + 1;
    report(ok, "oracle: q(2,5) = 13, q(1,6) = 10, fat-point multiplicity k+1", "");
  }
}

}  // namespace

int main() {
  const VerifyOptions opts;
  std::printf("acceptance criteria (seed %llu)\n", static_cast<unsigned long long>(opts.seed));
  run_acceptance(opts, {}, [](const CriterionResult& r) {
    char buf[128];
    if (r.limit_seconds > 0)
      std::snprintf(buf, sizeof buf, "  [%.2f s, limit %.0f s]", r.seconds, r.limit_seconds);
    else
      std::snprintf(buf, sizeof buf, "  [%.2f s]", r.seconds);
    std::string extra = buf;
    if (!r.checks_passed && !r.detail.empty()) extra += "  " + r.detail;
    if (r.checks_passed && !r.within_budget()) extra += "  over time budget";
    report(r.passed(), std::to_string(r.id) + ". " + r.title, extra);
    std::fflush(stdout);
  });
  frozen_checks();
  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
