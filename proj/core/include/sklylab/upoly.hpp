#pragma once

// Dense univariate polynomials over a FieldSpec; coefficients low to high.

#include <cstdint>
#include <utility>
#include <vector>

#include "sklylab/scalars.hpp"

namespace sklylab {

class UPoly {
 public:
  UPoly() = default;
  UPoly(FieldSpec field, std::vector<Scalar> coeffs);

  static UPoly constant(const FieldSpec& field, const Scalar& c);
  /// The polynomial t.
  static UPoly identity(const FieldSpec& field);

  const FieldSpec& field() const { return field_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Scalar& lead() const { return c_.back(); }
  Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : field_.zero(); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const Scalar& s) const;
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly operator%(const UPoly& d) const { return divmod(d).second; }
  UPoly operator/(const UPoly& d) const { return divmod(d).first; }

  UPoly monic() const;
  UPoly derivative() const;
  Scalar evaluate(const Scalar& x) const;

  friend bool operator==(const UPoly& a, const UPoly& b);

 private:
  void trim();
  FieldSpec field_;
  std::vector<Scalar> c_;
};

UPoly gcd(UPoly a, UPoly b);
UPoly powmod(const UPoly& base, std::uint64_t e, const UPoly& mod);

/// Yun's algorithm: returns (f_m, m) with f = lead * prod f_m^m, each f_m
/// monic squarefree, only nonconstant factors listed. Needs char 0 or a
/// characteristic above deg f.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f);
UPoly squarefree_part(const UPoly& f);

/// Distinct roots in F_p (equal-degree splitting with a fixed seed).
std::vector<std::uint64_t> roots_mod_p(const UPoly& f, std::uint64_t seed = 1);

}  // namespace sklylab
