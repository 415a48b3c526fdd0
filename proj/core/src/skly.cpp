#include "sklylab/skly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sklylab/error.hpp"

namespace sklylab {

// ---------------------------------------------------------------- params

SklyaninParams SklyaninParams::parse(const FieldSpec& field, const std::string& alpha, const std::string& beta,
                                     const std::string& gamma) {
  return {field, field.parse_scalar(alpha), field.parse_scalar(beta), field.parse_scalar(gamma)};
}

SklyaninParams SklyaninParams::from_rationals(const FieldSpec& field, const mpq_class& alpha, const mpq_class& beta,
                                              const mpq_class& gamma) {
  return {field, field.from_rational(alpha), field.from_rational(beta), field.from_rational(gamma)};
}

ParamValidation validate_params(const SklyaninParams& p) {
  ParamValidation r;
  const FieldSpec& F = p.field;
  const Scalar one = F.one();
  const Scalar& a = p.alpha;
  const Scalar& b = p.beta;
  const Scalar& c = p.gamma;
  auto fail = [&](const std::string& msg) {
    r.valid = false;
    r.violations.push_back(msg);
  };
  if (!(a + b + c + a * b * c).is_zero()) fail("alpha + beta + gamma + alpha*beta*gamma != 0");
  if (a == -one && b == one) fail("excluded family (-1, 1, gamma)");
  if (b == -one && c == one) fail("excluded family (alpha, -1, 1)");
  if (a == one && c == -one) fail("excluded family (1, beta, -1)");
  if ((one - b).is_zero()) fail("1 - beta = 0 (central element g2 undefined)");
  if ((one + c).is_zero()) fail("1 + gamma = 0 (central element g2 undefined)");
  if ((one + a).is_zero()) fail("1 + alpha = 0 (second quadric of E undefined)");
  const char* names[] = {"alpha", "beta", "gamma"};
  const Scalar* vals[] = {&a, &b, &c};
  for (int i = 0; i < 3; ++i) {
    if (vals[i]->is_zero() || *vals[i] == one || *vals[i] == -one)
      r.warnings.push_back(std::string(names[i]) + " is in {0, 1, -1}; elliptic data may degenerate");
  }
  return r;
}

void require_valid(const SklyaninParams& p) {
  auto r = validate_params(p);
  if (!r.valid) throw Error(Errc::ConstraintViolated, r.violations.front());
}

SklyaninParams random_params(const FieldSpec& field, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Scalar b, c;
    if (field.kind() == FieldSpec::Kind::PrimeField) {
      b = Scalar(rng() % field.modulus(), field.modulus());
      c = Scalar(rng() % field.modulus(), field.modulus());
    } else {
      auto frac = [&] {
        long num = static_cast<long>(rng() % 19) - 9;
        long den = static_cast<long>(rng() % 5) + 1;
        return mpq_class(num, den);
      };
      mpq_class qb = frac(), qc = frac();
      qb.canonicalize();
      qc.canonicalize();
      b = field.from_rational(qb);
      c = field.from_rational(qc);
    }
    Scalar den = field.one() + b * c;
    if (den.is_zero()) continue;
    Scalar a = -(b + c) / den;
    SklyaninParams p{field, a, b, c};
    auto v = validate_params(p);
    if (v.valid && v.warnings.empty()) return p;
  }
  throw Error(Errc::ConstraintViolated, "could not sample valid parameters");
}

// ---------------------------------------------------------------- relations

std::size_t RelationSet::span_rank(const FieldSpec& field) const {
  Mat m(rows.begin(), rows.end());
  return rank(m, field);
}

RelationSet build_relations(const SklyaninParams& p) {
  const FieldSpec& F = p.field;
  auto at = [](int i, int j) { return static_cast<std::size_t>(4 * i + j); };
  RelationSet R;
  for (auto& r : R.rows) r.assign(16, F.zero());
  const Scalar one = F.one();
  // x0xi - xix0 = coef * (xjxk + xkxj) and x0xi + xix0 = xjxk - xkxj for
  // the cyclic triples (i, j, k) = (1,2,3), (2,3,1), (3,1,2).
  const int trip[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  const Scalar* coef[3] = {&p.alpha, &p.beta, &p.gamma};
  for (int t = 0; t < 3; ++t) {
    const int i = trip[t][0], j = trip[t][1], k = trip[t][2];
    Vec& minus = R.rows[static_cast<std::size_t>(2 * t)];
    minus[at(0, i)] += one;
    minus[at(i, 0)] -= one;
    minus[at(j, k)] -= *coef[t];
    minus[at(k, j)] -= *coef[t];
    Vec& plus = R.rows[static_cast<std::size_t>(2 * t + 1)];
    plus[at(0, i)] += one;
    plus[at(i, 0)] += one;
    plus[at(j, k)] -= one;
    plus[at(k, j)] += one;
  }
  return R;
}

// ---------------------------------------------------------------- NcPoly

std::string word_to_string(std::uint64_t w, int degree) {
  if (degree == 0) return "1";
  std::string out;
  int prev = -1, run = 0;
  auto flush = [&] {
    if (prev < 0) return;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(prev);
    if (run > 1) out += "^" + std::to_string(run);
  };
  for (int i = 0; i < degree; ++i) {
    int letter = static_cast<int>((w >> (2 * (degree - 1 - i))) & 3);
    if (letter == prev) {
      ++run;
    } else {
      flush();
      prev = letter;
      run = 1;
    }
  }
  flush();
  return out;
}

NcPoly NcPoly::word(const FieldSpec& field, const std::vector<int>& letters, const Scalar& c) {
  NcPoly p(field, static_cast<int>(letters.size()));
  std::uint64_t w = 0;
  for (int l : letters) {
    if (l < 0 || l > 3) throw Error(Errc::ParseError, "generator index out of range");
    w = w * 4 + static_cast<std::uint64_t>(l);
  }
  p.add(w, c);
  return p;
}

NcPoly NcPoly::parse(std::string_view text, const FieldSpec& field) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(Errc::ParseError, "empty noncommutative polynomial");
  if (s == "0") return NcPoly(field, 0);
  std::size_t pos = 0;
  std::vector<std::pair<std::vector<int>, Scalar>> terms;
  while (pos < s.size()) {
    Scalar sign = field.one();
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -sign;
      ++pos;
    } else if (!terms.empty()) {
      throw Error(Errc::ParseError, "expected '+' or '-' at position " + std::to_string(pos));
    }
    Scalar coef = sign;
    std::vector<int> letters;
    bool expect_factor = true;
    while (expect_factor && pos < s.size()) {
      if (s[pos] == 'x') {
        ++pos;
        if (pos >= s.size() || s[pos] < '0' || s[pos] > '3')
          throw Error(Errc::UnknownVariable, "generators are x0..x3 (position " + std::to_string(pos) + ")");
        int l = s[pos++] - '0';
        int e = 1;
        if (pos < s.size() && s[pos] == '^') {
          std::size_t start = ++pos;
          while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
          if (start == pos) throw Error(Errc::ParseError, "expected exponent at position " + std::to_string(pos));
          e = std::stoi(s.substr(start, pos - start));
        }
        for (int k = 0; k < e; ++k) letters.push_back(l);
      } else if (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.') {
        std::size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.' || s[pos] == '/'))
          ++pos;
        coef *= field.parse_scalar(s.substr(start, pos - start));
      } else {
        throw Error(Errc::ParseError, "unexpected character '" + std::string(1, s[pos]) + "' at position " +
                                          std::to_string(pos));
      }
      if (pos < s.size() && s[pos] == '*') ++pos;
      else expect_factor = false;
    }
    terms.emplace_back(std::move(letters), coef);
  }
  const int d = static_cast<int>(terms.front().first.size());
  NcPoly p(field, d);
  for (auto& [letters, c] : terms) {
    if (static_cast<int>(letters.size()) != d) throw Error(Errc::ParseError, "terms of different degrees");
    p = p + word(field, letters, c);
  }
  return p;
}

void NcPoly::add(std::uint64_t w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = c_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
  if (o.degree_ != degree_ && !o.is_zero() && !is_zero())
    throw Error(Errc::ShapeMismatch, "adding elements of different degrees");
  NcPoly r = is_zero() ? NcPoly(field_, o.degree_) : *this;
  for (const auto& [w, c] : o.c_) r.add(w, c);
  return r;
}

NcPoly NcPoly::operator-(const NcPoly& o) const { return *this + o * (-field_.one()); }

NcPoly NcPoly::operator*(const Scalar& s) const {
  NcPoly r(field_, degree_);
  for (const auto& [w, c] : c_) r.add(w, c * s);
  return r;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
  NcPoly r(field_, degree_ + o.degree_);
  const std::uint64_t shift = std::uint64_t{1} << (2 * o.degree_);
  for (const auto& [w1, c1] : c_)
    for (const auto& [w2, c2] : o.c_) r.add(w1 * shift + w2, c1 * c2);
  return r;
}

NcPoly NcPoly::commutator_with_generator(int j) const {
  NcPoly x = word(field_, {j}, field_.one());
  return *this * x - x * *this;
}

std::string NcPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : c_) {
    std::string coef;
    bool neg = false;
    if (c.is_rational()) {
      neg = sgn(c.rational()) < 0;
      coef = neg ? mpq_class(-c.rational()).get_str() : c.rational().get_str();
    } else if (c.is_approx()) {
      coef = "(" + c.to_string() + ")";
    } else {
      coef = c.to_string();
    }
    std::string body;
    if (degree_ == 0) body = coef;
    else if (coef == "1") body = word_to_string(w, degree_);
    else body = coef + "*" + word_to_string(w, degree_);
    if (first) os << (neg ? "-" : "") << body;
    else os << (neg ? " - " : " + ") << body;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- algebra

SklyaninAlgebra::SklyaninAlgebra(SklyaninParams p, int cap) : p_(std::move(p)), cap_(cap) {
  require_valid(p_);
  if (cap_ < 0 || cap_ > 8) throw Error(Errc::CapExceeded, "degree cap must lie in [0, 8]");
  rel_ = build_relations(p_);
  deg_.reserve(static_cast<std::size_t>(cap_) + 1);
}

void SklyaninAlgebra::check_cap(int d) const {
  if (d < 0) throw Error(Errc::RangeError, "negative degree");
  if (d > cap_)
    throw Error(Errc::CapExceeded, "degree " + std::to_string(d) + " exceeds cap " + std::to_string(cap_));
}

void SklyaninAlgebra::ensure(int d) {
  check_cap(d);
  const FieldSpec& F = p_.field;
  while (static_cast<int>(deg_.size()) <= d) {
    const int e = static_cast<int>(deg_.size());
    Degree D;
    if (e == 0) {
      D.basis = {0};
    } else if (e == 1) {
      D.basis = {0, 1, 2, 3};
      for (int k = 0; k < 4; ++k) {
        Vec v(4, F.zero());
        v[static_cast<std::size_t>(k)] = F.one();
        D.ext.push_back(std::move(v));
      }
    } else {
      const Degree& prev = deg_[static_cast<std::size_t>(e - 1)];
      const Degree& prev2 = deg_[static_cast<std::size_t>(e - 2)];
      const std::size_t N = prev.basis.size() * 4;
      auto col_word = [&](std::size_t col) { return prev.basis[col / 4] * 4 + col % 4; };
      // Larger words come first, so pivots land on them and normal words
      // are the smallest available.
      std::vector<std::size_t> perm(N);
      for (std::size_t k = 0; k < N; ++k) perm[k] = k;
      std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return col_word(a) > col_word(b); });
      std::vector<std::size_t> inv(N);
      for (std::size_t k = 0; k < N; ++k) inv[perm[k]] = k;

      RowSpace rs(N, F);
      for (std::size_t b2 = 0; b2 < prev2.basis.size(); ++b2) {
        for (const auto& r : rel_.rows) {
          Vec v(N, F.zero());
          for (int j = 0; j < 4; ++j) {
            const Vec& nf = prev.ext[b2 * 4 + static_cast<std::size_t>(j)];
            for (int k = 0; k < 4; ++k) {
              const Scalar& rc = r[static_cast<std::size_t>(4 * j + k)];
              if (rc.is_zero()) continue;
              for (std::size_t b = 0; b < nf.size(); ++b)
                if (!nf[b].is_zero()) v[inv[b * 4 + static_cast<std::size_t>(k)]] += rc * nf[b];
            }
          }
          rs.insert(std::move(v));
        }
      }
      std::vector<bool> pivot(N, false);
      std::vector<std::size_t> row_of(N, 0);
      for (std::size_t i = 0; i < rs.pivots().size(); ++i) {
        pivot[rs.pivots()[i]] = true;
        row_of[rs.pivots()[i]] = i;
      }
      for (std::size_t q = 0; q < N; ++q)
        if (!pivot[q]) D.basis.push_back(col_word(perm[q]));
      std::sort(D.basis.begin(), D.basis.end());
      for (std::size_t k = 0; k < D.basis.size(); ++k) D.pos[D.basis[k]] = k;
      D.ext.resize(N);
      for (std::size_t col = 0; col < N; ++col) {
        Vec v(D.basis.size(), F.zero());
        const std::size_t q = inv[col];
        if (!pivot[q]) {
          v[D.pos.at(col_word(col))] = F.one();
        } else {
          const Vec& row = rs.rows()[row_of[q]];
          for (std::size_t t = 0; t < N; ++t)
            if (!pivot[t] && !row[t].is_zero()) v[D.pos.at(col_word(perm[t]))] = -row[t];
        }
        D.ext[col] = std::move(v);
      }
    }
    for (std::size_t k = 0; k < D.basis.size(); ++k) D.pos[D.basis[k]] = k;
    deg_.push_back(std::move(D));
  }
}

std::size_t SklyaninAlgebra::graded_dimension(int d) {
  ensure(d);
  return deg_[static_cast<std::size_t>(d)].basis.size();
}

const std::vector<std::uint64_t>& SklyaninAlgebra::normal_words(int d) {
  ensure(d);
  return deg_[static_cast<std::size_t>(d)].basis;
}

const Vec& SklyaninAlgebra::word_nf(std::uint64_t w, int d) {
  Degree& D = deg_[static_cast<std::size_t>(d)];
  auto it = D.word_nf.find(w);
  if (it != D.word_nf.end()) return it->second;
  const FieldSpec& F = p_.field;
  Vec v(D.basis.size(), F.zero());
  if (d == 0) {
    v[0] = F.one();
  } else if (d == 1) {
    v[w] = F.one();
  } else {
    const Vec& pre = word_nf(w >> 2, d - 1);
    const std::size_t last = w & 3;
    for (std::size_t b = 0; b < pre.size(); ++b) {
      if (pre[b].is_zero()) continue;
      const Vec& e = D.ext[b * 4 + last];
      for (std::size_t k = 0; k < e.size(); ++k)
        if (!e[k].is_zero()) v[k] += pre[b] * e[k];
    }
  }
  return D.word_nf.emplace(w, std::move(v)).first->second;
}

Vec SklyaninAlgebra::normal_form(const NcPoly& f) {
  const int d = f.degree();
  ensure(d);
  const FieldSpec& F = p_.field;
  Vec v(deg_[static_cast<std::size_t>(d)].basis.size(), F.zero());
  for (const auto& [w, c] : f.coeffs()) {
    const Vec& nf = word_nf(w, d);
    for (std::size_t k = 0; k < nf.size(); ++k)
      if (!nf[k].is_zero()) v[k] += c * nf[k];
  }
  return v;
}

bool SklyaninAlgebra::in_ideal(const NcPoly& f) {
  if (f.is_zero()) return true;
  for (const auto& x : normal_form(f))
    if (!x.is_zero()) return false;
  return true;
}

NcPoly SklyaninAlgebra::from_coords(const Vec& v, int d) {
  const auto& basis = normal_words(d);
  if (v.size() != basis.size()) throw Error(Errc::ShapeMismatch, "coordinate vector length");
  NcPoly p(p_.field, d);
  for (std::size_t k = 0; k < v.size(); ++k) p.add(basis[k], v[k]);
  return p;
}

NcPoly SklyaninAlgebra::g1() const {
  const FieldSpec& F = p_.field;
  NcPoly g(F, 2);
  g.add(0, -F.one());
  g.add(5, F.one());
  g.add(10, F.one());
  g.add(15, F.one());
  return g;
}

NcPoly SklyaninAlgebra::g2() const {
  const FieldSpec& F = p_.field;
  const Scalar one = F.one();
  NcPoly g(F, 2);
  g.add(5, one);
  g.add(10, (one + p_.alpha) / (one - p_.beta));
  g.add(15, (one - p_.alpha) / (one + p_.gamma));
  return g;
}

bool SklyaninAlgebra::is_central_up_to(const NcPoly& c, int dmax) {
  check_cap(dmax);
  if (c.is_zero()) return true;
  const int e = c.degree();
  if (e + 1 > dmax) throw Error(Errc::RangeError, "dmax must exceed the element degree");
  const FieldSpec& F = p_.field;
  for (int len = 1; e + len <= dmax; ++len) {
    for (std::uint64_t w = 0; w < pow4(len); ++w) {
      NcPoly word(F, len);
      word.add(w, F.one());
      if (!in_ideal(c * word - word * c)) return false;
    }
  }
  return true;
}

std::vector<NcPoly> SklyaninAlgebra::center_slice(int d) {
  check_cap(d + 1);
  const FieldSpec& F = p_.field;
  const auto basis = normal_words(d);
  const std::size_t next = graded_dimension(d + 1);
  Mat eqs(4 * next, Vec(basis.size(), F.zero()));
  for (std::size_t b = 0; b < basis.size(); ++b) {
    NcPoly elem(F, d);
    elem.add(basis[b], F.one());
    for (int j = 0; j < 4; ++j) {
      Vec v = normal_form(elem.commutator_with_generator(j));
      for (std::size_t k = 0; k < next; ++k) eqs[static_cast<std::size_t>(j) * next + k][b] = v[k];
    }
  }
  std::vector<NcPoly> out;
  for (const auto& v : kernel(eqs, basis.size(), F)) out.push_back(from_coords(v, d));
  return out;
}

std::size_t SklyaninAlgebra::quotient_dimension(const std::vector<NcPoly>& central, int d) {
  const std::size_t dim = graded_dimension(d);
  const FieldSpec& F = p_.field;
  RowSpace span(dim, F);
  for (const auto& c : central) {
    const int e = c.degree();
    if (c.is_zero() || e > d) continue;
    for (auto w : normal_words(d - e)) {
      NcPoly word(F, d - e);
      word.add(w, F.one());
      span.insert(normal_form(c * word));
    }
  }
  return dim - span.rank();
}

PrimeCertificate two_prime_certificate(const SklyaninParams& rp, int dmax, std::uint64_t seed) {
  if (!rp.alpha.is_rational()) throw Error(Errc::Unsupported, "two-prime certificate needs rational parameters");
  std::mt19937_64 rng(seed);
  PrimeCertificate cert;
  while (cert.primes.size() < 2) {
    std::uint64_t p = (rng() % (std::uint64_t{1} << 29)) + (std::uint64_t{1} << 29);
    while (!is_prime(p)) ++p;
    try {
      FieldSpec F = FieldSpec::prime_field(p);
      auto params = SklyaninParams::from_rationals(F, rp.alpha.rational(), rp.beta.rational(), rp.gamma.rational());
      if (!validate_params(params).valid) continue;
      SklyaninAlgebra S(params, dmax);
      std::vector<std::size_t> dims;
      for (int d = 0; d <= dmax; ++d) dims.push_back(S.graded_dimension(d));
      cert.primes.push_back(p);
      cert.dims.push_back(std::move(dims));
    } catch (const Error& e) {
      if (e.code() != Errc::DivisionByZero) throw;
    }
  }
  cert.agree = cert.dims[0] == cert.dims[1];
  return cert;
}

}  // namespace sklylab
