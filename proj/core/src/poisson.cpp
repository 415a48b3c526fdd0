#include "sklylab/poisson.hpp"

#include "sklylab/error.hpp"

namespace sklylab {

VarTable center_vars(int n) {
  if (n < 1) throw Error(Errc::RangeError, "PI degree must be positive");
  return VarTable({"z0", "z1", "z2", "z3", "g1", "g2"}, {n, n, n, n, 2, 2});
}

JacobianPoissonStructure::JacobianPoissonStructure(MPoly F1, MPoly F2, std::optional<Scalar> eta)
    : F1_(std::move(F1)), F2_(std::move(F2)) {
  if (!(F1_.vars() == F2_.vars()) || !(F1_.field() == F2_.field()))
    throw Error(Errc::ShapeMismatch, "potentials live in different rings");
  eta_ = eta ? *eta : field().one();
  if (eta_.is_zero()) throw Error(Errc::DivisionByZero, "eta must be nonzero");
  for (int k = 0; k < 4; ++k) {
    const auto idx = vars().index_of("z" + std::to_string(k));
    if (!idx) throw Error(Errc::UnknownVariable, "potentials need variable z" + std::to_string(k));
    z_[k] = *idx;
  }
  const MPoly zero(vars(), field());
  for (auto& row : tab_) row.fill(zero);
  for (int k = 0; k < 4; ++k)
    for (int l = k + 1; l < 4; ++l) {
      std::vector<std::size_t> cols;
      for (int m = 0; m < 4; ++m)
        if (m != k && m != l) cols.push_back(z_[m]);
      MPoly e = jacobian_minor({F1_, F2_}, {0, 1}, cols) * eta_;
      if ((k + l) % 2 == 1) e = -e;
      tab_[l][k] = -e;
      tab_[k][l] = std::move(e);
    }
}

const MPoly& JacobianPoissonStructure::entry(int k, int l) const {
  if (k < 0 || k > 3 || l < 0 || l > 3) throw Error(Errc::RangeError, "bracket index out of range");
  return tab_[k][l];
}

std::vector<MPoly> JacobianPoissonStructure::table() const {
  std::vector<MPoly> out;
  for (int k = 0; k < 4; ++k)
    for (int l = k + 1; l < 4; ++l) out.push_back(tab_[k][l]);
  return out;
}

MPoly JacobianPoissonStructure::bracket(const MPoly& f, const MPoly& g) const {
  std::array<MPoly, 4> df, dg;
  for (int k = 0; k < 4; ++k) {
    df[k] = f.derivative(z_[k]);
    dg[k] = g.derivative(z_[k]);
  }
  MPoly out(vars(), field());
  for (int k = 0; k < 4; ++k)
    for (int l = k + 1; l < 4; ++l) {
      if (tab_[k][l].is_zero()) continue;
      const MPoly w = df[k] * dg[l] - df[l] * dg[k];
      if (!w.is_zero()) out += tab_[k][l] * w;
    }
  return out;
}

MPoly JacobianPoissonStructure::jacobi_defect(const MPoly& f, const MPoly& g, const MPoly& h) const {
  return bracket(f, bracket(g, h)) + bracket(g, bracket(h, f)) + bracket(h, bracket(f, g));
}

MPoly JacobianPoissonStructure::nambu(const MPoly& f, const MPoly& g) const {
  std::vector<std::vector<MPoly>> m;
  for (const MPoly* p : {&F1_, &F2_, &f, &g}) {
    std::vector<MPoly> row;
    for (int k = 0; k < 4; ++k) row.push_back(p->derivative(z_[k]));
    m.push_back(std::move(row));
  }
  return determinant(m) * eta_;
}

std::optional<int> JacobianPoissonStructure::nambu_sign() const {
  std::optional<int> sign;
  for (int k = 0; k < 4; ++k)
    for (int l = k + 1; l < 4; ++l) {
      const MPoly zk = MPoly::variable(vars(), field(), z_[k]);
      const MPoly zl = MPoly::variable(vars(), field(), z_[l]);
      const MPoly nb = nambu(zk, zl);
      const MPoly& br = tab_[k][l];
      if (br.is_zero() && nb.is_zero()) continue;
      int s;
      if (br == nb)
        s = 1;
      else if (br == -nb)
        s = -1;
      else
        return std::nullopt;
      if (sign && *sign != s) return std::nullopt;
      sign = s;
    }
  // All brackets zero: both signs work; report the generic one.
  return sign ? sign : std::optional<int>(-1);
}

PolyIdeal JacobianPoissonStructure::symplectic_point_ideal() const {
  std::vector<MPoly> gens = table();
  gens.push_back(F1_);
  gens.push_back(F2_);
  std::erase_if(gens, [](const MPoly& p) { return p.is_zero(); });
  return PolyIdeal(vars(), field(), std::move(gens));
}

MPoly restrict_to_slice(const MPoly& f, const Scalar& c1, const Scalar& c2) {
  std::map<std::size_t, Scalar> vals;
  if (auto i = f.vars().index_of("g1")) vals.emplace(*i, c1);
  if (auto i = f.vars().index_of("g2")) vals.emplace(*i, c2);
  std::vector<int> w(4, 1);
  for (int k = 0; k < 4; ++k)
    if (auto i = f.vars().index_of("z" + std::to_string(k))) w[k] = f.vars().weight(*i);
  const VarTable zonly({"z0", "z1", "z2", "z3"}, w);
  return f.substitute(vals).embed(zonly);
}

PolyIdeal JacobianPoissonStructure::slice_symplectic_ideal(const Scalar& c1, const Scalar& c2) const {
  const PolyIdeal full = symplectic_point_ideal();
  std::vector<MPoly> gens;
  for (const MPoly& g : full.generators()) {
    MPoly r = restrict_to_slice(g, c1, c2);
    if (!r.is_zero()) gens.push_back(std::move(r));
  }
  const MPoly probe = restrict_to_slice(F1_, c1, c2);
  return PolyIdeal(probe.vars(), field(), std::move(gens));
}

ZeroDimSolution JacobianPoissonStructure::slice_symplectic_points(const Scalar& c1, const Scalar& c2,
                                                                  std::uint64_t seed) const {
  return solve_zero_dim(slice_symplectic_ideal(c1, c2), seed);
}

}  // namespace sklylab
