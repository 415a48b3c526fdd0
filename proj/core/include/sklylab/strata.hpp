#pragma once

// Closed-form representation bookkeeping for PI degree n: fat-point Hilbert
// series, irreducible-representation strata, and discriminant zero sets.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sklylab {

/// numerator(t) / (1 - t)^dim, kept with numerator(1) != 0.
class HilbertSeries {
 public:
  HilbertSeries(std::vector<mpq_class> numerator, int dim);

  const std::vector<mpq_class>& numerator() const { return num_; }
  int dim() const { return dim_; }
  /// numerator(1); the leading coefficient of the growth.
  mpq_class multiplicity() const;

  HilbertSeries shifted(int k) const;  // t^k * this
  HilbertSeries operator-(const HilbertSeries& o) const;
  HilbertSeries operator+(const HilbertSeries& o) const;
  /// Coefficient of t^d in the expansion.
  mpq_class coefficient(int d) const;

  std::string to_string() const;
  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
    return a.dim_ == b.dim_ && a.num_ == b.num_;
  }

 private:
  void canonicalize();
  std::vector<mpq_class> num_;
  int dim_;
};

struct FatPointSeries {
  HilbertSeries series;
  mpq_class multiplicity;
};

/// Quotient of a line module by its shift by k + 1. Throws RangeError for k < 0.
FatPointSeries hs_quotient_multiplicity(int k);

/// Throws BadPIDegree for n < 3 or n dividing 4.
void require_pi_degree(int n);
/// n / gcd(n, 2).
int half_degree(int n);
/// (k^2 + (s - k)^2) n / s.
std::int64_t q_value(int k, int n);

enum class StratumKind { Smooth, OffCurveSingular, Curve, Origin };

struct Stratum {
  StratumKind kind;
  std::string label;
  int curve_index = -1;  // k for curve strata
  std::vector<int> dims;
  std::int64_t d_value = 0;  // sum of squared dims
  int irrep_count() const { return static_cast<int>(dims.size()); }
};

struct StratumTable {
  int n = 0;
  bool odd = true;
  std::vector<Stratum> strata;
};

StratumTable irr_table(int n);

struct ProfileRange {
  std::int64_t lo = 0, hi = 0;  // inclusive; empty when lo > hi
  std::string description;
};

struct DiscriminantEntry {
  std::int64_t ell = 0;
  std::string description;
  /// Labels of the strata making up the zero set.
  std::vector<std::string> strata;
};

struct DiscriminantProfile {
  int n = 0;
  std::vector<ProfileRange> ranges;  // ell = 1, origin, curves, top
  std::vector<DiscriminantEntry> entries;  // ell = 1..n^2
};

DiscriminantProfile discriminant_profile(int n);

struct Verdict {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct ConsistencyReport {
  int n = 0;
  std::vector<Verdict> verdicts;
  bool ok() const;
};

ConsistencyReport consistency_check(int n);

struct CurveLabel {
  int omega = 0;          // index of the 2-torsion point, 0..3
  bool shifted = false;   // omega + s*tau in the even case
  int k = 0;
  std::string to_string() const;
  friend bool operator==(const CurveLabel&, const CurveLabel&) = default;
};

/// Odd: k -> min(k, n - 2 - k). Even: (omega + s tau, k) -> (omega, s - 2 - k).
/// Throws RangeError outside the valid index ranges.
CurveLabel curve_label_normalize(const CurveLabel& label, int n);

}  // namespace sklylab
