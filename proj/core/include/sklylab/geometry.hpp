#pragma once

// The elliptic curve E = V(phi1, phi2) in P^3 and the cubic automorphism
// sigma attached to the parameters.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sklylab/mpoly.hpp"
#include "sklylab/skly.hpp"

namespace sklylab {

class ProjPoint {
 public:
  /// Normalizes so that the first nonzero coordinate is 1. Throws
  /// ShapeMismatch for the zero vector.
  explicit ProjPoint(std::array<Scalar, 4> coords);

  const std::array<Scalar, 4>& coords() const { return c_; }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  std::vector<Scalar> as_vector() const { return {c_.begin(), c_.end()}; }
  std::string to_string() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }

 private:
  std::array<Scalar, 4> c_;
};

/// Coordinate point e_i.
ProjPoint coordinate_point(const FieldSpec& field, int i);

struct CurveE {
  VarTable vars;  // v0..v3
  MPoly phi1, phi2;
};

CurveE build_curve(const SklyaninParams& p);

bool on_curve(const CurveE& E, const ProjPoint& pt);

/// The four cubic coordinate functions of sigma.
struct SigmaMap {
  std::array<MPoly, 4> components;

  static SigmaMap from_params(const SklyaninParams& p);
  /// Copy with `delta` added to the coefficient of `monomial` in one
  /// component; a negative control.
  SigmaMap perturbed(std::size_t component, const Monomial& monomial, const Scalar& delta) const;

  /// Throws Indeterminacy if all four cubics vanish at pt.
  ProjPoint apply(const ProjPoint& pt) const;
};

ProjPoint sigma_apply(const SklyaninParams& p, const ProjPoint& pt);

/// Point on E over F_p found from the seed stream. Throws NoPointFound.
ProjPoint find_point_fp(const SklyaninParams& p, std::uint64_t seed, int attempt_cap = 1000);

struct SigmaOrderResult {
  std::optional<std::uint64_t> order;  // nullopt when the cap was hit
  std::vector<ProjPoint> witnesses;
  std::vector<std::optional<std::uint64_t>> per_point;
  int skipped_indeterminate = 0;
};

/// Hasse bound p + 1 + 2 sqrt(p), a natural iteration cap over F_p.
std::uint64_t hasse_bound(std::uint64_t p);

/// Throws DisagreementAcrossPoints if two sampled orbits differ in length,
/// and Indeterminacy if every sampled orbit runs into a point where the
/// cubic formula is undefined.
SigmaOrderResult sigma_order(const SklyaninParams& p, int samples, std::uint64_t cap, std::uint64_t seed);

struct PreservationResult {
  bool ok = true;
  std::string method;  // "symbolic" over Q, "sampled" otherwise
  int trials = 0;
  std::optional<ProjPoint> witness;
};

/// Over Q: phi_i(sigma(v)) lies in (phi1, phi2), checked by normal forms.
/// Over F_p: sampled curve points. Over complex: sampled numeric points.
PreservationResult sigma_preserves_E(const SklyaninParams& p, int trials, std::uint64_t seed,
                                     const SigmaMap* override_map = nullptr);

struct FixedPointCheck {
  bool ok = true;
  /// Scale factor of sigma(e_i) = c_i e_i as a polynomial in alpha, beta, gamma.
  std::array<std::string, 4> scale;
};

/// Symbolic: the sigma cubics with alpha, beta, gamma as variables,
/// evaluated at each e_i, are proportional to e_i.
FixedPointCheck sigma_fixes_coordinate_points();

}  // namespace sklylab
