#include "sklylab/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "sklylab/error.hpp"

namespace sklylab {

// ---------------------------------------------------------------- VarTable

VarTable::VarTable(std::vector<std::string> names, std::vector<int> weights) {
  if (names.size() > kMaxVars)
    throw Error(Errc::ShapeMismatch, "at most " + std::to_string(kMaxVars) + " variables supported");
  if (weights.empty()) weights.assign(names.size(), 1);
  if (weights.size() != names.size()) throw Error(Errc::ShapeMismatch, "weights/names length mismatch");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty() || !seen.insert(names[i]).second)
      throw Error(Errc::ShapeMismatch, "variable names must be unique and nonempty");
    if (weights[i] < 1) throw Error(Errc::ShapeMismatch, "variable weights must be >= 1");
  }
  d_ = std::make_shared<const Data>(Data{std::move(names), std::move(weights)});
}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < d_->names.size(); ++i)
    if (d_->names[i] == name) return i;
  return std::nullopt;
}

VarTable VarTable::with_extra(const std::string& name, int weight) const {
  auto n = d_->names;
  auto w = d_->weights;
  n.push_back(name);
  w.push_back(weight);
  return VarTable(std::move(n), std::move(w));
}

// ---------------------------------------------------------------- monomials

int total_degree(const Monomial& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

int weighted_degree(const Monomial& m, const VarTable& vars) {
  int d = 0;
  for (std::size_t i = 0; i < vars.size(); ++i) d += m[i] * vars.weight(i);
  return d;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r{};
  for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r{};
  for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial r{};
  for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint16_t>(b[i] - a[i]);
  return r;
}

namespace {

// Descending weighted grevlex, ties broken by the last variable being smallest.
bool wgrevlex_greater(const Monomial& a, const Monomial& b, const VarTable& vars) {
  int da = weighted_degree(a, vars), db = weighted_degree(b, vars);
  if (da != db) return da > db;
  for (std::size_t i = vars.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// ---------------------------------------------------------------- parser

class Parser {
 public:
  Parser(std::string_view text, const VarTable& vars, const FieldSpec& field)
      : s_(text), vars_(vars), field_(field) {}

  MPoly run() {
    MPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::ParseError, msg + " at position " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly acc(vars_, field_);
    bool first = true;
    while (true) {
      skip();
      bool neg = false;
      if (accept('-')) {
        neg = true;
      } else if (accept('+')) {
      } else if (!first) {
        break;
      }
      MPoly t = term();
      if (neg) acc -= t;
      else acc += t;
      first = false;
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return acc;
  }

  MPoly term() {
    MPoly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  MPoly factor() {
    MPoly base = primary();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 1000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MPoly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::size_t dstart = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected denominator");
      }
      std::string lit(s_.substr(start, pos_ - start));
      return MPoly::constant(vars_, field_, field_.parse_scalar(lit));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto idx = vars_.index_of(name);
      if (!idx) throw Error(Errc::UnknownVariable, "unknown variable '" + name + "' at position " + std::to_string(start));
      return MPoly::variable(vars_, field_, *idx);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const VarTable& vars_;
  const FieldSpec& field_;
};

}  // namespace

// ---------------------------------------------------------------- MPoly

MPoly MPoly::constant(const VarTable& vars, const FieldSpec& field, const Scalar& c) {
  MPoly p(vars, field);
  p.add_term(Monomial{}, c);
  return p;
}

MPoly MPoly::constant(const VarTable& vars, const FieldSpec& field, long long c) {
  return constant(vars, field, field.from_int(c));
}

MPoly MPoly::variable(const VarTable& vars, const FieldSpec& field, std::size_t i) {
  if (i >= vars.size()) throw Error(Errc::UnknownVariable, "variable index out of range");
  Monomial m{};
  m[i] = 1;
  return term(vars, field, m, field.one());
}

MPoly MPoly::variable(const VarTable& vars, const FieldSpec& field, std::string_view name) {
  auto idx = vars.index_of(name);
  if (!idx) throw Error(Errc::UnknownVariable, "unknown variable '" + std::string(name) + "'");
  return variable(vars, field, *idx);
}

MPoly MPoly::term(const VarTable& vars, const FieldSpec& field, const Monomial& m, const Scalar& c) {
  MPoly p(vars, field);
  p.add_term(m, c);
  return p;
}

MPoly MPoly::parse(std::string_view text, const VarTable& vars, const FieldSpec& field) {
  return Parser(text, vars, field).run();
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Scalar MPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void MPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MPoly::check_compatible(const MPoly& o) const {
  if (!(vars_ == o.vars_)) throw Error(Errc::ShapeMismatch, "polynomials over different variable tables");
  if (!(field_ == o.field_)) throw Error(Errc::MixedFields, "polynomials over different fields");
}

MPoly MPoly::operator-() const {
  MPoly r(vars_, field_);
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_compatible(b);
  MPoly r(a.vars_, a.field_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly acc = constant(vars_, field_, 1);
  MPoly base = *this;
  while (e) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly r(vars_, field_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    --d[var];
    r.add_term(d, c * field_.from_int(m[var]));
  }
  return r;
}

Scalar MPoly::evaluate(const std::vector<Scalar>& point) const {
  if (point.size() != vars_.size()) throw Error(Errc::ShapeMismatch, "evaluate: point has wrong length");
  Scalar acc = field_.zero();
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (m[i]) t *= point[i].pow(m[i]);
    acc += t;
  }
  return acc;
}

MPoly MPoly::substitute(std::size_t var, const MPoly& value) const {
  check_compatible(value);
  MPoly r(vars_, field_);
  std::map<unsigned, MPoly> powers;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    unsigned e = rest[var];
    rest[var] = 0;
    MPoly t = term(vars_, field_, rest, c);
    if (e) {
      auto it = powers.find(e);
      if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
      t *= it->second;
    }
    r += t;
  }
  return r;
}

MPoly MPoly::substitute(const std::map<std::size_t, Scalar>& values) const {
  MPoly r(vars_, field_);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    Scalar t = c;
    for (const auto& [var, v] : values) {
      if (rest[var]) {
        t *= v.pow(rest[var]);
        rest[var] = 0;
      }
    }
    r.add_term(rest, t);
  }
  return r;
}

MPoly MPoly::embed(const VarTable& target) const {
  std::vector<std::size_t> map(vars_.size(), kMaxVars);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (auto j = target.index_of(vars_.name(i))) map[i] = *j;
  }
  MPoly r(target, field_);
  for (const auto& [m, c] : terms_) {
    Monomial nm{};
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (!m[i]) continue;
      if (map[i] == kMaxVars) throw Error(Errc::UnknownVariable, "variable '" + vars_.name(i) + "' missing in target");
      nm[map[i]] = m[i];
    }
    r.add_term(nm, c);
  }
  return r;
}

MPoly MPoly::change_field(const FieldSpec& target) const {
  MPoly r(vars_, target);
  for (const auto& [m, c] : terms_) {
    if (!c.is_rational()) throw Error(Errc::MixedFields, "only rational polynomials can change field");
    r.add_term(m, target.from_rational(c.rational()));
  }
  return r;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, sklylab::total_degree(m));
  return d;
}

int MPoly::weighted_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, sklylab::weighted_degree(m, vars_));
  return d;
}

bool MPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int e = sklylab::weighted_degree(m, vars_);
    if (d >= 0 && e != d) return false;
    d = e;
  }
  return true;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [&](auto* a, auto* b) { return wgrevlex_greater(a->first, b->first, vars_); });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    const Monomial& m = t->first;
    const Scalar& c = t->second;
    std::string mono;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_.name(i);
      if (m[i] > 1) mono += '^' + std::to_string(m[i]);
    }
    std::string coef;
    bool negative = false;
    if (c.is_rational() && sgn(c.rational()) < 0) {
      negative = true;
      coef = mpq_class(-c.rational()).get_str();
    } else if (c.is_approx()) {
      coef = "(" + c.to_string() + ")";
    } else {
      coef = c.to_string();
    }
    std::string body;
    if (mono.empty()) body = coef;
    else if (coef == "1") body = mono;
    else body = coef + "*" + mono;
    if (first) os << (negative ? "-" : "") << body;
    else os << (negative ? " - " : " + ") << body;
    first = false;
  }
  return os.str();
}

nlohmann::json MPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [&](auto* a, auto* b) { return wgrevlex_greater(a->first, b->first, vars_); });
  for (const auto* t : order) {
    std::vector<int> exps(t->first.begin(), t->first.begin() + static_cast<std::ptrdiff_t>(vars_.size()));
    terms.push_back({{"coeff", t->second.to_string()}, {"exps", exps}});
  }
  return {{"vars", vars_.names()}, {"weights", vars_.weights()}, {"terms", terms}};
}

MPoly MPoly::from_json(const nlohmann::json& j, const FieldSpec& field) {
  try {
    auto names = j.at("vars").get<std::vector<std::string>>();
    std::vector<int> weights;
    if (j.contains("weights")) weights = j.at("weights").get<std::vector<int>>();
    VarTable vars(names, weights);
    MPoly p(vars, field);
    for (const auto& t : j.at("terms")) {
      auto exps = t.at("exps").get<std::vector<int>>();
      if (exps.size() != names.size()) throw Error(Errc::ParseError, "term exponent vector has wrong length");
      Monomial m{};
      for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0) throw Error(Errc::ParseError, "negative exponent");
        m[i] = static_cast<std::uint16_t>(exps[i]);
      }
      p.add_term(m, field.parse_scalar(t.at("coeff").get<std::string>()));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("polynomial JSON: ") + e.what());
  }
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (!(a.vars_ == b.vars_) || a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

MPoly compose(const MPoly& f, const std::vector<MPoly>& values) {
  if (values.size() != f.vars().size()) throw Error(Errc::ShapeMismatch, "compose: wrong number of values");
  if (values.empty()) return f;
  const VarTable& vt = values.front().vars();
  const FieldSpec& F = values.front().field();
  std::vector<std::vector<MPoly>> powers(values.size());
  MPoly r(vt, F);
  for (const auto& [m, c] : f.terms()) {
    MPoly t = MPoly::constant(vt, F, c);
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!m[i]) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(MPoly::constant(vt, F, 1));
      while (pw.size() <= m[i]) pw.push_back(pw.back() * values[i]);
      t *= pw[m[i]];
    }
    r += t;
  }
  return r;
}

// ---------------------------------------------------------------- determinants

MPoly determinant(const std::vector<std::vector<MPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(Errc::ShapeMismatch, "determinant of empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw Error(Errc::ShapeMismatch, "determinant of non-square matrix");
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  MPoly acc(m[0][0].vars(), m[0][0].field());
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    MPoly t = m[0][j] * determinant(minor);
    if (j % 2) acc -= t;
    else acc += t;
  }
  return acc;
}

MPoly jacobian_minor(const std::vector<MPoly>& F, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) {
  if (rows.size() != cols.size() || rows.empty())
    throw Error(Errc::ShapeMismatch, "jacobian_minor needs equally many rows and columns");
  std::vector<std::vector<MPoly>> m;
  for (auto r : rows) {
    if (r >= F.size()) throw Error(Errc::ShapeMismatch, "jacobian_minor row out of range");
    std::vector<MPoly> row;
    for (auto c : cols) {
      if (c >= F[r].vars().size()) throw Error(Errc::ShapeMismatch, "jacobian_minor column out of range");
      row.push_back(F[r].derivative(c));
    }
    m.push_back(std::move(row));
  }
  return determinant(m);
}

}  // namespace sklylab
