#include "sklylab/upoly.hpp"

#include <algorithm>
#include <random>

#include "sklylab/error.hpp"

namespace sklylab {

UPoly::UPoly(FieldSpec field, std::vector<Scalar> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::constant(const FieldSpec& field, const Scalar& c) { return UPoly(field, {c}); }

UPoly UPoly::identity(const FieldSpec& field) { return UPoly(field, {field.zero(), field.one()}); }

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Scalar> r(std::max(c_.size(), o.c_.size()), field_.zero());
  for (std::size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
  return UPoly(field_, std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + o * (-field_.one()); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (c_.empty() || o.c_.empty()) return UPoly(field_, {});
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UPoly(field_, std::move(r));
}

UPoly UPoly::operator*(const Scalar& s) const {
  std::vector<Scalar> r = c_;
  for (auto& x : r) x *= s;
  return UPoly(field_, std::move(r));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (degree() < d.degree()) return {UPoly(field_, {}), *this};
  std::vector<Scalar> rem = c_;
  std::vector<Scalar> q(c_.size() - d.c_.size() + 1, field_.zero());
  Scalar inv = d.lead().inverse();
  for (std::size_t k = q.size(); k-- > 0;) {
    Scalar f = rem[k + d.c_.size() - 1] * inv;
    q[k] = f;
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= f * d.c_[j];
  }
  rem.resize(d.c_.size() - 1);
  return {UPoly(field_, std::move(q)), UPoly(field_, std::move(rem))};
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inverse();
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly(field_, {});
  std::vector<Scalar> r;
  for (std::size_t k = 1; k < c_.size(); ++k) r.push_back(c_[k] * field_.from_int(static_cast<long long>(k)));
  return UPoly(field_, std::move(r));
}

Scalar UPoly::evaluate(const Scalar& x) const {
  Scalar acc = field_.zero();
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly powmod(const UPoly& base, std::uint64_t e, const UPoly& mod) {
  UPoly acc = UPoly::constant(base.field(), base.field().one()) % mod;
  UPoly b = base % mod;
  while (e) {
    if (e & 1) acc = (acc * b) % mod;
    e >>= 1;
    if (e) b = (b * b) % mod;
  }
  return acc;
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
  std::vector<std::pair<UPoly, int>> out;
  if (f.degree() < 1) return out;
  UPoly fm = f.monic();
  UPoly a = gcd(fm, fm.derivative());
  UPoly b = fm / a;
  UPoly c = fm.derivative() / a;
  UPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

UPoly squarefree_part(const UPoly& f) {
  if (f.degree() < 1) return f.monic();
  return (f / gcd(f, f.derivative())).monic();
}

namespace {

void split_linear(const UPoly& f, std::uint64_t p, std::mt19937_64& rng, std::vector<std::uint64_t>& out) {
  if (f.degree() <= 0) return;
  if (f.degree() == 1) {
    Scalar r = -(f.coeff(0) / f.coeff(1));
    out.push_back(r.residue());
    return;
  }
  const FieldSpec& F = f.field();
  while (true) {
    Scalar a(rng() % p, p);
    UPoly shift(F, {a, F.one()});
    UPoly h = powmod(shift, (p - 1) / 2, f) - UPoly::constant(F, F.one());
    UPoly g = gcd(f, h);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split_linear(g, p, rng, out);
      split_linear(f / g, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::uint64_t> roots_mod_p(const UPoly& f, std::uint64_t seed) {
  if (f.field().kind() != FieldSpec::Kind::PrimeField) throw Error(Errc::Unsupported, "roots_mod_p needs F_p");
  const std::uint64_t p = f.field().modulus();
  std::vector<std::uint64_t> out;
  if (f.degree() < 1) return out;
  UPoly x = UPoly::identity(f.field());
  UPoly xp = powmod(x, p, f.monic());
  UPoly g = gcd(f, xp - x);
  std::mt19937_64 rng(seed);
  split_linear(g, p, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sklylab
