#pragma once

// Buchberger's algorithm with the Gebauer-Moeller pair criteria and sugar
// selection, plus the ideal-level queries built on top of it.

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "sklylab/mpoly.hpp"

namespace sklylab {

enum class TermOrder { Grevlex, Lex, WeightedGrevlex };

const char* to_string(TermOrder order);

struct GroebnerOptions {
  TermOrder order = TermOrder::WeightedGrevlex;
  /// Largest total degree of an S-pair lcm before giving up.
  int degree_cap = 40;
  /// Return {1} as soon as a nonzero constant appears.
  bool stop_on_unit = false;
};

/// True if a > b in the given order.
bool order_greater(const Monomial& a, const Monomial& b, const VarTable& vars, TermOrder order);

/// Leading monomial of a nonzero polynomial.
Monomial leading_monomial(const MPoly& f, TermOrder order);

class GroebnerBasis {
 public:
  GroebnerBasis(VarTable vars, FieldSpec field, TermOrder order, std::vector<MPoly> polys);

  const std::vector<MPoly>& polys() const { return polys_; }
  TermOrder order() const { return order_; }
  const VarTable& vars() const { return vars_; }
  const FieldSpec& field() const { return field_; }
  bool is_unit() const;
  const std::vector<Monomial>& leading_monomials() const { return leads_; }

  /// Fully reduced remainder of f.
  MPoly reduce(const MPoly& f) const;
  bool contains(const MPoly& f) const { return reduce(f).is_zero(); }

 private:
  VarTable vars_;
  FieldSpec field_;
  TermOrder order_;
  std::vector<MPoly> polys_;
  std::vector<Monomial> leads_;
};

/// Reduced, monic Groebner basis. Throws Unsupported over ComplexApprox and
/// DegreeCapExceeded when the cap is hit.
GroebnerBasis groebner_basis(const std::vector<MPoly>& gens, const GroebnerOptions& opts = {});

class PolyIdeal {
 public:
  PolyIdeal(VarTable vars, FieldSpec field, std::vector<MPoly> generators = {});
  explicit PolyIdeal(std::vector<MPoly> generators);

  const VarTable& vars() const { return vars_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<MPoly>& generators() const { return gens_; }

  /// Cached per order; thread-safe.
  const GroebnerBasis& basis(TermOrder order = TermOrder::WeightedGrevlex) const;

  PolyIdeal operator+(const PolyIdeal& other) const;
  /// Ideal generated by pairwise products of generators (same variety as the
  /// intersection).
  PolyIdeal product(const PolyIdeal& other) const;

 private:
  VarTable vars_;
  FieldSpec field_;
  std::vector<MPoly> gens_;
  struct Cache {
    std::mutex mu;
    std::map<TermOrder, std::unique_ptr<GroebnerBasis>> bases;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

MPoly normal_form(const MPoly& f, const PolyIdeal& I);
bool ideal_member(const MPoly& f, const PolyIdeal& I);

/// f vanishes on V(I): 1 lies in I + (1 - y f) with y a fresh variable.
bool radical_member(const MPoly& f, const PolyIdeal& I);

/// V(I) == V(J), generator by generator through radical_member.
bool variety_equal(const PolyIdeal& I, const PolyIdeal& J);

}  // namespace sklylab
