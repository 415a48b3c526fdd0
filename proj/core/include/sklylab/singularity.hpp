#pragma once

// Center presentations Z = k[z0..z3, g1, g2] / (F1, F2) and their singular
// loci: the even-case two-component decomposition, odd-case nodal curves and
// singular points of the (g1, g2) slices.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sklylab/groebner.hpp"
#include "sklylab/heisenberg.hpp"
#include "sklylab/mpoly.hpp"
#include "sklylab/poisson.hpp"
#include "sklylab/zerodim.hpp"

namespace sklylab {

enum class Parity { Odd, Even };

const char* to_string(Parity p);

/// Index pairs (z_i z_j) subtracted from F1 and F2.
std::array<std::array<int, 2>, 2> pairing_of(RhoType r);

struct CenterPresentation {
  int n = 0;
  Parity parity = Parity::Odd;
  std::string label;
  bool surrogate = true;
  MPoly F1, F2;

  // Odd: F_i = quad_i + h_i. Even: F_i = (a_i - h_i)^2 - pair_i.
  MPoly quad1, quad2;
  MPoly a1, a2;
  MPoly h1, h2;
  RhoType pairing = RhoType::Rho1;

  const VarTable& vars() const { return F1.vars(); }
  const FieldSpec& field() const { return F1.field(); }
  JacobianPoissonStructure poisson() const { return JacobianPoissonStructure(F1, F2); }
};

struct EvenBuildOptions {
  /// Skip the DegenerateAForm and CommonFactorH checks; for negative controls.
  bool validate = true;
};

/// Inputs live in center_vars(2s). Throws DegenerateAForm, CommonFactorH,
/// DegreeMismatch.
CenterPresentation build_even_presentation(RhoType pairing, const MPoly& a1, const MPoly& a2,
                                           const MPoly& h1, const MPoly& h2, int s,
                                           const EvenBuildOptions& opts = {});

/// Quadratic forms in z and equal-degree forms in g, all in one table that
/// contains z0..z3, g1, g2. n is the degree of the g forms. Throws
/// DegreeMismatch.
CenterPresentation build_odd_presentation(const MPoly& quad1, const MPoly& h1, const MPoly& quad2,
                                          const MPoly& h2);

/// True if the binary forms share a nonconstant factor.
bool binary_forms_share_factor(const MPoly& h1, const MPoly& h2);

/// F1, F2 and the fifteen 2x2 minors of d(F1, F2)/d(z0..z3, g1, g2).
PolyIdeal singular_locus_ideal(const CenterPresentation& P);

/// Even components: I1 = (a1 - h1, pair1 vars, F2), I2 = (a2 - h2, pair2 vars, F1).
std::array<PolyIdeal, 2> even_components(const CenterPresentation& P);

struct SingularLocusReport {
  std::vector<MPoly> singular_generators;
  std::array<std::vector<MPoly>, 2> components;
  bool variety_equal = false;
  bool origin_only = false;
  /// Slice point counts per component, when a slice was requested.
  std::optional<std::array<std::size_t, 2>> component_slice_counts;
  double seconds = 0;
};

SingularLocusReport verify_even_decomposition(const CenterPresentation& P,
                                              std::optional<std::array<Scalar, 2>> slice = std::nullopt);

struct NodalCurveSpec {
  int apex = 0;                    // coordinate point e_apex
  std::array<Scalar, 2> direction; // (g1, g2)
  std::string label;
};

struct NodalCurveReport {
  bool ok = true;
  /// quad2(e) + h2(direction) = 0 and quad1(e) + h1(direction) = 0.
  bool compatible = true;
  std::vector<std::pair<Scalar, bool>> samples;
};

/// Point t^n e_apex + t^2 direction lies on Y and every 2x2 minor vanishes.
NodalCurveReport nodal_curve_check(const CenterPresentation& P, const NodalCurveSpec& C,
                                   const std::vector<Scalar>& ts);

/// F1, F2 at g = (c1, c2) and the six 2x2 minors of d(F1, F2)/d(z0..z3).
PolyIdeal slice_singular_ideal(const CenterPresentation& P, const Scalar& c1, const Scalar& c2);
/// Throws NotZeroDimensional.
ZeroDimSolution slice_singular_points(const CenterPresentation& P, const Scalar& c1, const Scalar& c2,
                                      std::uint64_t seed = 1);

/// 2x6 Jacobian of (F1, F2) at a point of the six-variable space.
std::array<std::array<Scalar, 6>, 2> jacobian_at(const CenterPresentation& P, const std::vector<Scalar>& pt);
int jacobian_rank_at(const CenterPresentation& P, const std::vector<Scalar>& pt);

}  // namespace sklylab
