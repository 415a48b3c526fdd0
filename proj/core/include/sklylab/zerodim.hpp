#pragma once

// Solving zero-dimensional polynomial systems through the finite-dimensional
// quotient algebra: multiplication matrices, a separating linear form and a
// shape-lemma style parametrization.

#include <complex>
#include <cstdint>
#include <vector>

#include "sklylab/groebner.hpp"

namespace sklylab {

struct ZeroDimPoint {
  /// Exact coordinates when the point is defined over the base field.
  std::vector<Scalar> exact;
  /// Numeric coordinates; always filled over Q, empty over F_p.
  std::vector<std::complex<double>> approx;
  int multiplicity = 1;
  bool rational() const { return !exact.empty(); }
};

struct ZeroDimSolution {
  /// Dimension of the quotient ring: points counted with multiplicity.
  std::size_t total_multiplicity = 0;
  /// Number of distinct points over the algebraic closure.
  std::size_t distinct_count = 0;
  /// Over Q all points; over F_p only those with F_p coordinates.
  std::vector<ZeroDimPoint> points;
};

/// Standard monomials of a zero-dimensional Groebner basis. Throws
/// NotZeroDimensional if some variable has no pure-power leading monomial.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb);

ZeroDimSolution solve_zero_dim(const PolyIdeal& I, std::uint64_t seed = 1);

}  // namespace sklylab
