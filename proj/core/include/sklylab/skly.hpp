#pragma once

// The four-generator Sklyanin algebra S(alpha, beta, gamma): parameters,
// quadratic relations and degree-by-degree linear algebra on the quotient
// of the free algebra.

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "sklylab/linalg.hpp"
#include "sklylab/scalars.hpp"

namespace sklylab {

struct SklyaninParams {
  FieldSpec field;
  Scalar alpha, beta, gamma;

  /// Parses the three values (`p/q` or integers) into `field`.
  static SklyaninParams parse(const FieldSpec& field, const std::string& alpha, const std::string& beta,
                              const std::string& gamma);
  static SklyaninParams from_rationals(const FieldSpec& field, const mpq_class& alpha, const mpq_class& beta,
                                       const mpq_class& gamma);
};

struct ParamValidation {
  bool valid = true;
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
};

ParamValidation validate_params(const SklyaninParams& p);
/// Throws ConstraintViolated naming the first violated condition.
void require_valid(const SklyaninParams& p);

/// beta, gamma drawn at random, alpha solved from the defining equation;
/// boundary values 0, +-1 avoided. Over Q the values are small fractions.
SklyaninParams random_params(const FieldSpec& field, std::mt19937_64& rng);

/// Six quadratic relations as coefficient vectors on x_i x_j (index 4i+j).
struct RelationSet {
  std::array<Vec, 6> rows;
  std::size_t span_rank(const FieldSpec& field) const;
};

RelationSet build_relations(const SklyaninParams& p);

/// Homogeneous element of the free algebra on x0..x3. Words are encoded in
/// base 4 with the first letter most significant.
class NcPoly {
 public:
  NcPoly(FieldSpec field, int degree) : field_(std::move(field)), degree_(degree) {}

  static NcPoly word(const FieldSpec& field, const std::vector<int>& letters, const Scalar& c);
  /// Grammar: signed terms `c*x0^2*x3*x1`; every term must have one degree.
  static NcPoly parse(std::string_view text, const FieldSpec& field);

  int degree() const { return degree_; }
  const FieldSpec& field() const { return field_; }
  const std::map<std::uint64_t, Scalar>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  void add(std::uint64_t w, const Scalar& c);
  NcPoly operator+(const NcPoly& o) const;
  NcPoly operator-(const NcPoly& o) const;
  NcPoly operator*(const Scalar& s) const;
  /// Concatenation product.
  NcPoly operator*(const NcPoly& o) const;
  /// this * x_j - x_j * this
  NcPoly commutator_with_generator(int j) const;

  std::string to_string() const;

 private:
  FieldSpec field_;
  int degree_;
  std::map<std::uint64_t, Scalar> c_;
};

std::string word_to_string(std::uint64_t w, int degree);

class SklyaninAlgebra {
 public:
  static constexpr int kDefaultCap = 6;

  /// Validates the parameters; throws ConstraintViolated.
  explicit SklyaninAlgebra(SklyaninParams p, int cap = kDefaultCap);

  const SklyaninParams& params() const { return p_; }
  const FieldSpec& field() const { return p_.field; }
  const RelationSet& relations() const { return rel_; }
  int cap() const { return cap_; }

  /// Throws CapExceeded for d > cap.
  std::size_t graded_dimension(int d);
  /// Normal words of degree d in increasing order.
  const std::vector<std::uint64_t>& normal_words(int d);
  /// Rank of the degree-d part of the relation ideal.
  std::size_t ideal_rank(int d) { return pow4(d) - graded_dimension(d); }

  /// Coordinates of the image in S_d over the normal words.
  Vec normal_form(const NcPoly& f);
  bool in_ideal(const NcPoly& f);
  /// Element of degree d from normal-word coordinates.
  NcPoly from_coords(const Vec& v, int d);

  NcPoly g1() const;
  NcPoly g2() const;

  /// [c, w] vanishes in S for every word w with 1 <= |w| <= dmax - deg c.
  bool is_central_up_to(const NcPoly& c, int dmax);
  /// Basis of the degree-d center, as elements written in normal words.
  std::vector<NcPoly> center_slice(int d);
  /// dim of S_d modulo the two-sided ideal generated by `central`.
  std::size_t quotient_dimension(const std::vector<NcPoly>& central, int d);

  static std::uint64_t pow4(int d) { return std::uint64_t{1} << (2 * d); }

 private:
  struct Degree {
    std::vector<std::uint64_t> basis;
    std::unordered_map<std::uint64_t, std::size_t> pos;
    // NF of (basis_{d-1}[b] x_k) at index 4b+k.
    std::vector<Vec> ext;
    std::unordered_map<std::uint64_t, Vec> word_nf;
  };

  void ensure(int d);
  void check_cap(int d) const;
  const Vec& word_nf(std::uint64_t w, int d);

  SklyaninParams p_;
  int cap_;
  RelationSet rel_;
  std::vector<Degree> deg_;
};

/// Dimensions of S_0..S_dmax for rational parameters reduced modulo two
/// random primes; used as an agreement certificate.
struct PrimeCertificate {
  std::vector<std::uint64_t> primes;
  std::vector<std::vector<std::size_t>> dims;
  bool agree = false;
};
PrimeCertificate two_prime_certificate(const SklyaninParams& rational_params, int dmax, std::uint64_t seed);

}  // namespace sklylab
