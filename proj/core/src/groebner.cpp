#include "sklylab/groebner.hpp"

#include <algorithm>
#include <map>

#include "sklylab/error.hpp"

namespace sklylab {

const char* to_string(TermOrder order) {
  switch (order) {
    case TermOrder::Grevlex: return "grevlex";
    case TermOrder::Lex: return "lex";
    case TermOrder::WeightedGrevlex: return "weighted-grevlex";
  }
  return "?";
}

namespace {

int order_degree(const Monomial& m, const VarTable& vars, TermOrder order) {
  return order == TermOrder::WeightedGrevlex ? weighted_degree(m, vars) : total_degree(m);
}

struct Greater {
  const VarTable* vars;
  TermOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order_greater(a, b, *vars, order); }
};

struct Term {
  Monomial m;
  Scalar c;
};

// Terms sorted in descending order; the first term is the leading one.
struct IPoly {
  std::vector<Term> terms;
  int sugar = 0;
  const Monomial& lm() const { return terms.front().m; }
};

class Engine {
 public:
  Engine(const VarTable& vars, const FieldSpec& field, const GroebnerOptions& opts)
      : vars_(vars), field_(field), opts_(opts), cmp_{&vars_, opts.order} {}

  IPoly from_mpoly(const MPoly& f) const {
    IPoly p;
    for (const auto& [m, c] : f.terms()) p.terms.push_back({m, c});
    std::sort(p.terms.begin(), p.terms.end(), [&](const Term& a, const Term& b) { return cmp_(a.m, b.m); });
    p.sugar = 0;
    for (const auto& t : p.terms) p.sugar = std::max(p.sugar, deg(t.m));
    return p;
  }

  MPoly to_mpoly(const IPoly& p) const {
    MPoly f(vars_, field_);
    for (const auto& t : p.terms) f.add_term(t.m, t.c);
    return f;
  }

  int deg(const Monomial& m) const { return order_degree(m, vars_, opts_.order); }

  void make_monic(IPoly& p) const {
    if (p.terms.empty() || p.terms.front().c.is_one()) return;
    Scalar inv = p.terms.front().c.inverse();
    for (auto& t : p.terms) t.c *= inv;
  }

  // Full reduction of p by the polynomials of `basis` whose index is active.
  IPoly reduce(IPoly p, const std::vector<IPoly>& basis, const std::vector<bool>& active) const {
    std::map<Monomial, Scalar, Greater> work(cmp_);
    for (auto& t : p.terms) work.emplace(t.m, std::move(t.c));
    IPoly out;
    out.sugar = p.sugar;
    while (!work.empty()) {
      auto it = work.begin();
      const Monomial m = it->first;
      const IPoly* red = nullptr;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (active[i] && divides(basis[i].lm(), m)) {
          red = &basis[i];
          break;
        }
      }
      if (!red) {
        out.terms.push_back({m, std::move(it->second)});
        work.erase(it);
        continue;
      }
      Scalar c = it->second;  // reducers are monic
      work.erase(it);
      Monomial q = mono_div(m, red->lm());
      out.sugar = std::max(out.sugar, deg(q) + red->sugar);
      for (std::size_t k = 1; k < red->terms.size(); ++k) {
        const Term& t = red->terms[k];
        Monomial mm = mono_mul(q, t.m);
        Scalar d = c * t.c;
        auto [jt, inserted] = work.try_emplace(mm, -d);
        if (!inserted) {
          jt->second -= d;
          if (jt->second.is_zero()) work.erase(jt);
        }
      }
    }
    return out;
  }

  IPoly spoly(const IPoly& f, const IPoly& g) const {
    Monomial l = mono_lcm(f.lm(), g.lm());
    Monomial qf = mono_div(l, f.lm()), qg = mono_div(l, g.lm());
    std::map<Monomial, Scalar, Greater> work(cmp_);
    for (std::size_t k = 1; k < f.terms.size(); ++k) {
      work.try_emplace(mono_mul(qf, f.terms[k].m), f.terms[k].c);
    }
    for (std::size_t k = 1; k < g.terms.size(); ++k) {
      Monomial mm = mono_mul(qg, g.terms[k].m);
      auto [it, inserted] = work.try_emplace(mm, -g.terms[k].c);
      if (!inserted) {
        it->second -= g.terms[k].c;
        if (it->second.is_zero()) work.erase(it);
      }
    }
    IPoly s;
    for (auto& [m, c] : work) s.terms.push_back({m, c});
    s.sugar = std::max(f.sugar + deg(qf), g.sugar + deg(qg));
    return s;
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int sugar;
  };

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t k = 0; k < kMaxVars; ++k)
      if (a[k] && b[k]) return false;
    return true;
  }

  // Gebauer-Moeller update after appending polys_[h].
  void update(std::size_t h) {
    const Monomial& lh = polys_[h].lm();
    std::vector<std::size_t> cands;
    for (std::size_t g = 0; g < h; ++g)
      if (active_[g]) cands.push_back(g);
    std::vector<std::size_t> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      const std::size_t g1 = cands[a];
      Monomial l1 = mono_lcm(lh, polys_[g1].lm());
      bool keep = coprime(lh, polys_[g1].lm());
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cands.size() && keep; ++b)
          if (divides(mono_lcm(lh, polys_[cands[b]].lm()), l1)) keep = false;
        for (std::size_t g2 : kept)
          if (keep && divides(mono_lcm(lh, polys_[g2].lm()), l1)) keep = false;
      }
      if (keep) kept.push_back(g1);
    }
    // Drop old pairs made redundant by the new leading monomial.
    std::vector<Pair> next;
    for (auto& p : pairs_) {
      bool drop = divides(lh, p.lcm) && mono_lcm(polys_[p.i].lm(), lh) != p.lcm &&
                  mono_lcm(polys_[p.j].lm(), lh) != p.lcm;
      if (!drop) next.push_back(std::move(p));
    }
    pairs_ = std::move(next);
    for (std::size_t g : kept) {
      if (coprime(lh, polys_[g].lm())) continue;
      Monomial l = mono_lcm(lh, polys_[g].lm());
      int s = std::max(polys_[g].sugar + deg(mono_div(l, polys_[g].lm())), polys_[h].sugar + deg(mono_div(l, lh)));
      pairs_.push_back({g, h, l, s});
    }
    for (std::size_t g = 0; g < h; ++g)
      if (active_[g] && divides(lh, polys_[g].lm())) active_[g] = false;
  }

  // Adds a reduced nonzero polynomial; returns false if it is a constant.
  bool add(IPoly p) {
    make_monic(p);
    if (deg(p.lm()) == 0 && total_degree(p.lm()) == 0) return false;
    polys_.push_back(std::move(p));
    active_.push_back(true);
    update(polys_.size() - 1);
    return true;
  }

  std::vector<MPoly> run(const std::vector<MPoly>& gens) {
    std::vector<IPoly> input;
    for (const auto& g : gens)
      if (!g.is_zero()) input.push_back(from_mpoly(g));
    std::sort(input.begin(), input.end(), [&](const IPoly& a, const IPoly& b) { return cmp_(b.lm(), a.lm()); });
    for (auto& g : input) {
      IPoly r = reduce(std::move(g), polys_, active_);
      if (r.terms.empty()) continue;
      if (!add(std::move(r))) return unit();
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const auto& a = pairs_[k];
        const auto& b = pairs_[best];
        if (a.sugar < b.sugar || (a.sugar == b.sugar && cmp_(b.lcm, a.lcm))) best = k;
      }
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      if (total_degree(p.lcm) > opts_.degree_cap)
        throw Error(Errc::DegreeCapExceeded,
                    "S-pair degree " + std::to_string(total_degree(p.lcm)) + " exceeds cap " +
                        std::to_string(opts_.degree_cap));
      IPoly s = spoly(polys_[p.i], polys_[p.j]);
      if (s.terms.empty()) continue;
      IPoly r = reduce(std::move(s), polys_, active_);
      if (r.terms.empty()) continue;
      if (!add(std::move(r))) return unit();
    }
    // Interreduce the minimal basis.
    std::vector<IPoly> minimal;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) minimal.push_back(polys_[i]);
    std::vector<MPoly> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<bool> others(minimal.size(), true);
      others[i] = false;
      IPoly head;
      head.terms.push_back(minimal[i].terms.front());
      IPoly tail;
      tail.terms.assign(minimal[i].terms.begin() + 1, minimal[i].terms.end());
      IPoly red = reduce(std::move(tail), minimal, others);
      for (auto& t : red.terms) head.terms.push_back(std::move(t));
      out.push_back(to_mpoly(head));
    }
    std::sort(out.begin(), out.end(), [&](const MPoly& a, const MPoly& b) {
      return cmp_(leading_monomial(b, opts_.order), leading_monomial(a, opts_.order));
    });
    return out;
  }

  std::vector<MPoly> unit() const { return {MPoly::constant(vars_, field_, 1)}; }

 private:
  VarTable vars_;
  FieldSpec field_;
  GroebnerOptions opts_;
  Greater cmp_;
  std::vector<IPoly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

bool order_greater(const Monomial& a, const Monomial& b, const VarTable& vars, TermOrder order) {
  const std::size_t n = vars.size();
  if (order == TermOrder::Lex) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
  int da = order_degree(a, vars, order), db = order_degree(b, vars, order);
  if (da != db) return da > db;
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

Monomial leading_monomial(const MPoly& f, TermOrder order) {
  if (f.is_zero()) throw Error(Errc::ShapeMismatch, "leading monomial of zero");
  auto it = f.terms().begin();
  Monomial best = it->first;
  for (++it; it != f.terms().end(); ++it)
    if (order_greater(it->first, best, f.vars(), order)) best = it->first;
  return best;
}

GroebnerBasis::GroebnerBasis(VarTable vars, FieldSpec field, TermOrder order, std::vector<MPoly> polys)
    : vars_(std::move(vars)), field_(std::move(field)), order_(order), polys_(std::move(polys)) {
  for (const auto& p : polys_) leads_.push_back(leading_monomial(p, order_));
}

bool GroebnerBasis::is_unit() const { return polys_.size() == 1 && polys_[0].is_constant() && !polys_[0].is_zero(); }

MPoly GroebnerBasis::reduce(const MPoly& f) const {
  GroebnerOptions opts;
  opts.order = order_;
  Engine e(vars_, field_, opts);
  std::vector<IPoly> basis;
  for (const auto& p : polys_) basis.push_back(e.from_mpoly(p));
  std::vector<bool> active(basis.size(), true);
  return e.to_mpoly(e.reduce(e.from_mpoly(f), basis, active));
}

GroebnerBasis groebner_basis(const std::vector<MPoly>& gens, const GroebnerOptions& opts) {
  if (gens.empty()) throw Error(Errc::ShapeMismatch, "groebner_basis needs at least one generator");
  const VarTable& vars = gens.front().vars();
  const FieldSpec& field = gens.front().field();
  if (!field.is_exact())
    throw Error(Errc::Unsupported, "Groebner bases are disabled over approximate complex numbers");
  for (const auto& g : gens)
    if (!(g.vars() == vars) || !(g.field() == field))
      throw Error(Errc::MixedFields, "generators over different rings");
  Engine e(vars, field, opts);
  return GroebnerBasis(vars, field, opts.order, e.run(gens));
}

// ---------------------------------------------------------------- PolyIdeal

PolyIdeal::PolyIdeal(VarTable vars, FieldSpec field, std::vector<MPoly> generators)
    : vars_(std::move(vars)), field_(std::move(field)), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (!(g.vars() == vars_) || !(g.field() == field_))
      throw Error(Errc::MixedFields, "ideal generators over different rings");
}

PolyIdeal::PolyIdeal(std::vector<MPoly> generators)
    : PolyIdeal(generators.empty() ? VarTable() : generators.front().vars(),
                generators.empty() ? FieldSpec() : generators.front().field(), generators) {}

const GroebnerBasis& PolyIdeal::basis(TermOrder order) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto& slot = cache_->bases[order];
  if (!slot) {
    GroebnerOptions opts;
    opts.order = order;
    std::vector<MPoly> gens = gens_;
    if (gens.empty()) gens.push_back(MPoly(vars_, field_));
    bool all_zero = std::all_of(gens.begin(), gens.end(), [](const MPoly& g) { return g.is_zero(); });
    if (all_zero) slot = std::make_unique<GroebnerBasis>(vars_, field_, order, std::vector<MPoly>{});
    else slot = std::make_unique<GroebnerBasis>(groebner_basis(gens, opts));
  }
  return *slot;
}

PolyIdeal PolyIdeal::operator+(const PolyIdeal& other) const {
  auto g = gens_;
  g.insert(g.end(), other.gens_.begin(), other.gens_.end());
  return PolyIdeal(vars_, field_, std::move(g));
}

PolyIdeal PolyIdeal::product(const PolyIdeal& other) const {
  std::vector<MPoly> g;
  for (const auto& a : gens_)
    for (const auto& b : other.gens_) g.push_back(a * b);
  return PolyIdeal(vars_, field_, std::move(g));
}

MPoly normal_form(const MPoly& f, const PolyIdeal& I) { return I.basis().reduce(f); }

bool ideal_member(const MPoly& f, const PolyIdeal& I) { return normal_form(f, I).is_zero(); }

bool radical_member(const MPoly& f, const PolyIdeal& I) {
  if (f.is_zero()) return true;
  if (ideal_member(f, I)) return true;
  std::string yname = "_y";
  while (I.vars().index_of(yname)) yname += "_";
  VarTable ext = I.vars().with_extra(yname, 1);
  std::vector<MPoly> gens;
  for (const auto& g : I.generators()) gens.push_back(g.embed(ext));
  MPoly y = MPoly::variable(ext, I.field(), ext.size() - 1);
  gens.push_back(MPoly::constant(ext, I.field(), 1) - y * f.embed(ext));
  GroebnerOptions opts;
  opts.order = TermOrder::Grevlex;
  opts.stop_on_unit = true;
  return groebner_basis(gens, opts).is_unit();
}

bool variety_equal(const PolyIdeal& I, const PolyIdeal& J) {
  for (const auto& g : I.generators())
    if (!radical_member(g, J)) return false;
  for (const auto& g : J.generators())
    if (!radical_member(g, I)) return false;
  return true;
}

}  // namespace sklylab
