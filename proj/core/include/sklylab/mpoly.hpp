#pragma once

// Sparse commutative polynomials over a FieldSpec, with per-variable weights.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sklylab/scalars.hpp"

namespace sklylab {

inline constexpr std::size_t kMaxVars = 12;

using Monomial = std::array<std::uint16_t, kMaxVars>;

class VarTable {
 public:
  VarTable() : VarTable(std::vector<std::string>{}) {}
  /// Weights default to 1. Throws ShapeMismatch on duplicates, bad weights
  /// or more than kMaxVars names.
  explicit VarTable(std::vector<std::string> names, std::vector<int> weights = {});

  std::size_t size() const { return d_->names.size(); }
  const std::string& name(std::size_t i) const { return d_->names[i]; }
  int weight(std::size_t i) const { return d_->weights[i]; }
  const std::vector<std::string>& names() const { return d_->names; }
  const std::vector<int>& weights() const { return d_->weights; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// A copy with one more variable appended.
  VarTable with_extra(const std::string& name, int weight) const;

  friend bool operator==(const VarTable& a, const VarTable& b) {
    return a.d_ == b.d_ || (a.d_->names == b.d_->names && a.d_->weights == b.d_->weights);
  }

 private:
  struct Data {
    std::vector<std::string> names;
    std::vector<int> weights;
  };
  std::shared_ptr<const Data> d_;
};

int total_degree(const Monomial& m);
int weighted_degree(const Monomial& m, const VarTable& vars);
bool divides(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_mul(const Monomial& a, const Monomial& b);
/// b / a; requires divides(a, b).
Monomial mono_div(const Monomial& b, const Monomial& a);

class MPoly {
 public:
  using TermMap = std::map<Monomial, Scalar>;

  MPoly() = default;
  MPoly(VarTable vars, FieldSpec field) : vars_(std::move(vars)), field_(std::move(field)) {}

  static MPoly constant(const VarTable& vars, const FieldSpec& field, const Scalar& c);
  static MPoly constant(const VarTable& vars, const FieldSpec& field, long long c);
  static MPoly variable(const VarTable& vars, const FieldSpec& field, std::size_t i);
  static MPoly variable(const VarTable& vars, const FieldSpec& field, std::string_view name);
  static MPoly term(const VarTable& vars, const FieldSpec& field, const Monomial& m, const Scalar& c);

  /// Grammar: sums of products of numbers, variables, `var^k` and
  /// parenthesized subexpressions raised to nonnegative integer powers.
  static MPoly parse(std::string_view text, const VarTable& vars, const FieldSpec& field);

  const VarTable& vars() const { return vars_; }
  const FieldSpec& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar coefficient(const Monomial& m) const;

  /// Adds c*m, dropping the entry if it cancels.
  void add_term(const Monomial& m, const Scalar& c);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Scalar& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Scalar& c) { return a *= c; }
  friend MPoly operator*(const Scalar& c, MPoly a) { return a *= c; }

  MPoly pow(unsigned e) const;
  MPoly derivative(std::size_t var) const;

  Scalar evaluate(const std::vector<Scalar>& point) const;
  /// Replaces variable `var` by `value` (a polynomial over the same table).
  MPoly substitute(std::size_t var, const MPoly& value) const;
  /// Replaces several variables by constants.
  MPoly substitute(const std::map<std::size_t, Scalar>& values) const;
  /// Re-expresses this polynomial in `target`, matching variables by name.
  /// Throws UnknownVariable if a used variable is missing from `target`.
  MPoly embed(const VarTable& target) const;
  /// Same polynomial with coefficients mapped into another field.
  MPoly change_field(const FieldSpec& target) const;

  int total_degree() const;
  /// Maximum weighted degree over the terms; -1 for zero.
  int weighted_degree() const;
  bool is_homogeneous() const;

  /// Canonical text, terms in descending weighted-grevlex order.
  std::string to_string() const;
  nlohmann::json to_json() const;
  static MPoly from_json(const nlohmann::json& j, const FieldSpec& field);

  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

 private:
  void check_compatible(const MPoly& o) const;

  VarTable vars_;
  FieldSpec field_;
  TermMap terms_;
};

/// f(values[0], ..., values[n-1]); the values share one ring.
MPoly compose(const MPoly& f, const std::vector<MPoly>& values);

/// Determinant by cofactor expansion; fine for the small sizes used here.
MPoly determinant(const std::vector<std::vector<MPoly>>& m);

/// det of the submatrix of the Jacobian of `F` with the given rows (indices
/// into F) and columns (variable indices).
MPoly jacobian_minor(const std::vector<MPoly>& F, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols);

}  // namespace sklylab
