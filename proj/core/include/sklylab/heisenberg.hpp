#pragma once

// The order-64 Heisenberg group acting on S by graded automorphisms.
//
// Generator matrices use the row convention: row i holds the image of x_i.
// In that convention the defining relation e1 e2 = e e2 e1 holds as a
// literal matrix identity. Induced actions on central elements are written
// with columns holding images, which reverses products; their relation is
// therefore e1 e2 = e^{-1} e2 e1.

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "sklylab/skly.hpp"

namespace sklylab {

using CMat = Eigen::MatrixXcd;

enum class Convention { Row, Column };

struct HeisenbergConstants {
  std::complex<double> a, b, c;  // principal square roots of alpha, beta, gamma
  std::complex<double> xi;       // exp(3 pi i / 4)
};

struct H4Generators {
  CMat eps, eps1, eps2;
  HeisenbergConstants k;
};

/// Throws DegenerateParams if alpha*beta*gamma = 0.
HeisenbergConstants heisenberg_constants(const SklyaninParams& p);
H4Generators build_generators(const SklyaninParams& p);

struct RelationResidual {
  std::string relation;
  double residual = 0;
};

struct PresentationReport {
  std::vector<RelationResidual> residuals;
  double max_residual = 0;
  bool ok(double tol) const { return max_residual < tol; }
};

PresentationReport verify_presentation(const CMat& eps, const CMat& eps1, const CMat& eps2,
                                       Convention conv = Convention::Row);

/// Closure of the generators, deduplicated on entries rounded to 1e-7.
/// Throws ClosureExplosion past `cap` elements.
std::vector<CMat> enumerate_group(const std::vector<CMat>& generators, std::size_t cap = 512);

/// 16 x 6 complex matrix whose columns are the relations.
CMat relation_matrix(const SklyaninParams& p);

/// Relative residual of the worst relation image after projection onto
/// span(R).
double automorphism_residual(const CMat& m, const CMat& relations);
bool is_algebra_automorphism(const CMat& m, const CMat& relations, double tol);

/// Action on span(g1, g2): column k holds the image of g_k. Throws
/// NotInGSpan if an image leaves span(g1, g2) + span(R).
CMat induced_action_on_g(const CMat& m, const SklyaninParams& p, double tol = 1e-8);

/// Closed-form matrices for e1 and e2 on span(g1, g2).
std::array<CMat, 2> expected_g_action(const SklyaninParams& p);

enum class RhoType { Rho1, Rho2, Rho3 };
RhoType parse_rho(const std::string& s);
std::string to_string(RhoType r);

struct EvenIrrepReport {
  CMat eps, eps1, eps2;
  PresentationReport presentation;
  /// c with e1 e2 = c e2 e1, when such a scalar exists.
  std::complex<double> commutator_scalar;
  bool commute_up_to_scalar = false;
  /// No common eigenvector of e1 and e2.
  bool irreducible = false;
};

EvenIrrepReport verify_even_irrep(const SklyaninParams& p, int s, RhoType rho);

/// Displayed action on span(z0..z3) for PI degree n (column convention).
std::array<CMat, 3> z_action_generators(const SklyaninParams& p, int n);
/// Largest deviation between the displayed z-action and the entrywise n-th
/// power of the transposed generator matrices.
double z_action_power_deviation(const SklyaninParams& p, int n);

}  // namespace sklylab
