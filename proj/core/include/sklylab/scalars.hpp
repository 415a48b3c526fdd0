#pragma once

// Field arithmetic behind every computation in the library: exact rationals
// (GMP), prime fields F_p with p >= 5, and complex doubles compared with a
// relative/absolute tolerance.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace sklylab {

class Scalar;

class FieldSpec {
 public:
  enum class Kind { Rational, PrimeField, ComplexApprox };

  static constexpr double kDefaultTolerance = 1e-9;

  /// Rational field; the default.
  FieldSpec() = default;

  static FieldSpec rational() { return FieldSpec(); }
  /// Throws InvalidField unless p is a prime >= 5.
  static FieldSpec prime_field(std::uint64_t p);
  /// Throws InvalidField unless tol lies in (0, 1e-3].
  static FieldSpec complex_approx(double tol = kDefaultTolerance);

  /// Parses the CLI form `rational | fp:<p> | complex:<tol>`.
  static FieldSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  double tolerance() const noexcept { return tolerance_; }
  bool is_exact() const noexcept { return kind_ != Kind::ComplexApprox; }

  std::string to_string() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  /// Maps an exact rational into this field. Throws DivisionByZero if the
  /// denominator vanishes mod p.
  Scalar from_rational(const mpq_class& q) const;
  /// Parses `p/q`, an integer, or (complex mode) `re+imi`-free decimal.
  Scalar parse_scalar(std::string_view text) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_ &&
           (a.kind_ != Kind::ComplexApprox || a.tolerance_ == b.tolerance_);
  }

 private:
  Kind kind_ = Kind::Rational;
  std::uint64_t modulus_ = 0;
  double tolerance_ = kDefaultTolerance;
};

bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

/// Tonelli-Shanks. Returns min(r, p - r) for the root r. Throws NonResidue.
std::uint64_t sqrt_mod_p(std::uint64_t a, std::uint64_t p);

/// |a - b| <= tol * max(1, |a|, |b|).
bool approx_eq(std::complex<double> a, std::complex<double> b, double tol);

class Scalar {
 public:
  struct Residue {
    std::uint64_t value = 0;
    std::uint64_t modulus = 0;
  };
  struct Approx {
    std::complex<double> value;
    double tolerance = FieldSpec::kDefaultTolerance;
  };

  /// Rational zero.
  Scalar() = default;
  explicit Scalar(mpq_class q);
  Scalar(std::uint64_t residue, std::uint64_t modulus);
  Scalar(std::complex<double> z, double tol);

  FieldSpec field() const;

  bool is_zero() const;
  bool is_one() const;

  bool is_rational() const { return std::holds_alternative<mpq_class>(v_); }
  bool is_residue() const { return std::holds_alternative<Residue>(v_); }
  bool is_approx() const { return std::holds_alternative<Approx>(v_); }

  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  std::uint64_t residue() const { return std::get<Residue>(v_).value; }
  std::complex<double> to_complex() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(long long e) const;

  /// Exact equality in exact fields; hybrid tolerance in complex mode.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical text: `p/q` or `p` for rationals, the residue for F_p,
  /// `re+imi` for complex values.
  std::string to_string() const;

 private:
  void check_same_field(const Scalar& o) const;

  std::variant<mpq_class, Residue, Approx> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace sklylab
