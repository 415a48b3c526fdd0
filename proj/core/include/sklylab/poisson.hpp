#pragma once

// Jacobian Poisson structure on a rank-six center k[z0..z3, g1, g2] / (F1, F2):
// brackets of the z's are signed 2x2 minors of d(F1, F2)/dz and g1, g2 are
// Casimirs.

#include <array>
#include <optional>
#include <vector>

#include "sklylab/groebner.hpp"
#include "sklylab/mpoly.hpp"
#include "sklylab/zerodim.hpp"

namespace sklylab {

/// z0..z3 with weight n followed by g1, g2 with weight 2.
VarTable center_vars(int n);

class JacobianPoissonStructure {
 public:
  /// F1, F2 share one table containing z0..z3; g1, g2 are optional.
  /// Throws ShapeMismatch on mismatched tables, UnknownVariable if a z is
  /// missing, and DivisionByZero for eta = 0.
  JacobianPoissonStructure(MPoly F1, MPoly F2, std::optional<Scalar> eta = std::nullopt);

  const VarTable& vars() const { return F1_.vars(); }
  const FieldSpec& field() const { return F1_.field(); }
  const MPoly& F1() const { return F1_; }
  const MPoly& F2() const { return F2_; }
  const Scalar& eta() const { return eta_; }
  /// Table indices of z0..z3.
  const std::array<std::size_t, 4>& z_index() const { return z_; }

  /// {z_k, z_l}; antisymmetric, zero on the diagonal.
  const MPoly& entry(int k, int l) const;
  /// The six entries with k < l in the order 01, 02, 03, 12, 13, 23.
  std::vector<MPoly> table() const;

  MPoly bracket(const MPoly& f, const MPoly& g) const;
  MPoly jacobi_defect(const MPoly& f, const MPoly& g, const MPoly& h) const;

  /// eta * det d(F1, F2, f, g)/d(z0..z3).
  MPoly nambu(const MPoly& f, const MPoly& g) const;
  /// The s in {+1, -1} with {z_k, z_l} = s * nambu(z_k, z_l) for all pairs;
  /// nullopt if no single sign works.
  std::optional<int> nambu_sign() const;

  /// Six table entries plus F1, F2.
  PolyIdeal symplectic_point_ideal() const;
  /// The symplectic ideal with g1 = c1, g2 = c2, in z0..z3 only.
  PolyIdeal slice_symplectic_ideal(const Scalar& c1, const Scalar& c2) const;
  /// Throws NotZeroDimensional for a degenerate slice.
  ZeroDimSolution slice_symplectic_points(const Scalar& c1, const Scalar& c2, std::uint64_t seed = 1) const;

 private:
  MPoly F1_, F2_;
  Scalar eta_;
  std::array<std::size_t, 4> z_{};
  std::array<std::array<MPoly, 4>, 4> tab_;
};

/// Substitutes g1 = c1, g2 = c2 (when present) and re-expresses the result
/// over z0..z3 with the same z weights.
MPoly restrict_to_slice(const MPoly& f, const Scalar& c1, const Scalar& c2);

}  // namespace sklylab
