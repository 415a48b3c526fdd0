#include "sklylab/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "sklylab/error.hpp"

namespace sklylab {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  std::string t = text;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (t.empty() || q.set_str(t, 10) != 0) {
    // Also accept plain decimals such as -0.25.
    auto dot = t.find('.');
    if (dot == std::string::npos || t.find('/') != std::string::npos)
      throw Error(Errc::ParseError, "not a rational number: '" + text + "'");
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    mpz_class num;
    if (num.set_str(digits, 10) != 0)
      throw Error(Errc::ParseError, "not a rational number: '" + text + "'");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, t.size() - dot - 1);
    q = mpq_class(num, den);
  }
  q.canonicalize();
  return q;
}

double parse_double(std::string_view s) {
  std::string t = trim(s);
  if (t.empty() || t == "+") return 1.0;
  if (t == "-") return -1.0;
  if (t.find('/') != std::string::npos) return parse_rational(t).get_d();
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &pos);
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "not a number: '" + t + "'");
  }
  if (pos != t.size()) throw Error(Errc::ParseError, "not a number: '" + t + "'");
  return v;
}

}  // namespace

// ---------------------------------------------------------------- modular

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of 0 mod " + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This witness set is deterministic for all 64-bit n.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t sqrt_mod_p(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (pow_mod(a, (p - 1) / 2, p) != 1)
    throw Error(Errc::NonResidue, std::to_string(a) + " is not a square mod " + std::to_string(p));
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = pow_mod(z, q, p);
  std::uint64_t t = pow_mod(a, q, p);
  std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return std::min(r, p - r);
}

bool approx_eq(std::complex<double> a, std::complex<double> b, double tol) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

// ---------------------------------------------------------------- FieldSpec

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p < 5 || !is_prime(p))
    throw Error(Errc::InvalidField, "prime field modulus must be a prime >= 5, got " + std::to_string(p));
  FieldSpec f;
  f.kind_ = Kind::PrimeField;
  f.modulus_ = p;
  return f;
}

FieldSpec FieldSpec::complex_approx(double tol) {
  if (!(tol > 0.0) || tol > 1e-3)
    throw Error(Errc::InvalidField, "complex tolerance must lie in (0, 1e-3]");
  FieldSpec f;
  f.kind_ = Kind::ComplexApprox;
  f.tolerance_ = tol;
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string t = trim(text);
  if (t == "rational" || t == "Q") return rational();
  if (t.rfind("fp:", 0) == 0) {
    std::uint64_t p = 0;
    auto s = t.substr(3);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), p);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw Error(Errc::InvalidField, "bad prime in field spec '" + t + "'");
    return prime_field(p);
  }
  if (t == "complex") return complex_approx();
  if (t.rfind("complex:", 0) == 0) {
    double tol = 0;
    try {
      std::size_t pos = 0;
      tol = std::stod(t.substr(8), &pos);
      if (pos != t.size() - 8) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(Errc::InvalidField, "bad tolerance in field spec '" + t + "'");
    }
    return complex_approx(tol);
  }
  throw Error(Errc::InvalidField, "unknown field spec '" + t + "' (use rational | fp:<p> | complex:<tol>)");
}

std::string FieldSpec::to_string() const {
  switch (kind_) {
    case Kind::Rational: return "rational";
    case Kind::PrimeField: return "fp:" + std::to_string(modulus_);
    case Kind::ComplexApprox: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "complex:%g", tolerance_);
      return buf;
    }
  }
  return "?";
}

Scalar FieldSpec::zero() const { return from_int(0); }
Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(long long v) const {
  switch (kind_) {
    case Kind::Rational: return Scalar(mpq_class(static_cast<long>(v)));
    case Kind::PrimeField: {
      long long m = static_cast<long long>(modulus_);
      long long r = v % m;
      if (r < 0) r += m;
      return Scalar(static_cast<std::uint64_t>(r), modulus_);
    }
    case Kind::ComplexApprox: return Scalar(std::complex<double>(static_cast<double>(v), 0.0), tolerance_);
  }
  return Scalar();
}

Scalar FieldSpec::from_rational(const mpq_class& q) const {
  switch (kind_) {
    case Kind::Rational: return Scalar(q);
    case Kind::PrimeField: {
      mpz_class m(std::to_string(modulus_));
      mpz_class num = q.get_num() % m;
      if (num < 0) num += m;
      mpz_class den = q.get_den() % m;
      if (den == 0)
        throw Error(Errc::DivisionByZero, "denominator of " + q.get_str() + " vanishes mod " + std::to_string(modulus_));
      std::uint64_t n = std::stoull(num.get_str());
      std::uint64_t d = std::stoull(den.get_str());
      return Scalar(mul_mod(n, inv_mod(d, modulus_), modulus_), modulus_);
    }
    case Kind::ComplexApprox: return Scalar(std::complex<double>(q.get_d(), 0.0), tolerance_);
  }
  return Scalar();
}

Scalar FieldSpec::parse_scalar(std::string_view text) const {
  std::string t = trim(text);
  if (t.empty()) throw Error(Errc::ParseError, "empty scalar");
  if (kind_ != Kind::ComplexApprox) return from_rational(parse_rational(t));
  // Complex: `x`, `yi`, `x+yi`, `x-yi`.
  if (t.back() != 'i') return Scalar(std::complex<double>(parse_double(t), 0.0), tolerance_);
  std::string body = t.substr(0, t.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return Scalar(std::complex<double>(0.0, parse_double(body)), tolerance_);
  return Scalar(std::complex<double>(parse_double(body.substr(0, split)), parse_double(body.substr(split))),
                tolerance_);
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(mpq_class q) : v_(std::move(q)) { std::get<mpq_class>(v_).canonicalize(); }

Scalar::Scalar(std::uint64_t residue, std::uint64_t modulus) : v_(Residue{residue % modulus, modulus}) {}

Scalar::Scalar(std::complex<double> z, double tol) : v_(Approx{z, tol}) {}

FieldSpec Scalar::field() const {
  if (is_rational()) return FieldSpec::rational();
  if (is_residue()) return FieldSpec::prime_field(std::get<Residue>(v_).modulus);
  return FieldSpec::complex_approx(std::get<Approx>(v_).tolerance);
}

bool Scalar::is_zero() const {
  switch (v_.index()) {
    case 0: return sgn(std::get<mpq_class>(v_)) == 0;
    case 1: return std::get<Residue>(v_).value == 0;
    default: {
      const auto& a = std::get<Approx>(v_);
      return std::abs(a.value) <= a.tolerance;
    }
  }
}

bool Scalar::is_one() const {
  switch (v_.index()) {
    case 0: return std::get<mpq_class>(v_) == 1;
    case 1: return std::get<Residue>(v_).value == 1;
    default: {
      const auto& a = std::get<Approx>(v_);
      return approx_eq(a.value, 1.0, a.tolerance);
    }
  }
}

std::complex<double> Scalar::to_complex() const {
  switch (v_.index()) {
    case 0: return {std::get<mpq_class>(v_).get_d(), 0.0};
    case 1: return {static_cast<double>(std::get<Residue>(v_).value), 0.0};
    default: return std::get<Approx>(v_).value;
  }
}

void Scalar::check_same_field(const Scalar& o) const {
  if (v_.index() != o.v_.index())
    throw Error(Errc::MixedFields, "operands from different fields");
  if (is_residue() && std::get<Residue>(v_).modulus != std::get<Residue>(o.v_).modulus)
    throw Error(Errc::MixedFields, "operands from different prime fields");
}

Scalar Scalar::operator-() const {
  switch (v_.index()) {
    case 0: return Scalar(mpq_class(-std::get<mpq_class>(v_)));
    case 1: {
      const auto& r = std::get<Residue>(v_);
      return Scalar(r.value == 0 ? 0 : r.modulus - r.value, r.modulus);
    }
    default: {
      const auto& a = std::get<Approx>(v_);
      return Scalar(-a.value, a.tolerance);
    }
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  switch (v_.index()) {
    case 0: std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_); break;
    case 1: {
      auto& r = std::get<Residue>(v_);
      std::uint64_t s = r.value + std::get<Residue>(o.v_).value;
      r.value = s >= r.modulus ? s - r.modulus : s;
      break;
    }
    default: std::get<Approx>(v_).value += std::get<Approx>(o.v_).value;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  switch (v_.index()) {
    case 0: std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_); break;
    case 1: {
      auto& r = std::get<Residue>(v_);
      r.value = mul_mod(r.value, std::get<Residue>(o.v_).value, r.modulus);
      break;
    }
    default: std::get<Approx>(v_).value *= std::get<Approx>(o.v_).value;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  switch (v_.index()) {
    case 0: return Scalar(mpq_class(1 / std::get<mpq_class>(v_)));
    case 1: {
      const auto& r = std::get<Residue>(v_);
      return Scalar(inv_mod(r.value, r.modulus), r.modulus);
    }
    default: {
      const auto& a = std::get<Approx>(v_);
      return Scalar(1.0 / a.value, a.tolerance);
    }
  }
}

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar base = *this;
  Scalar acc = field().one();
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) return false;
  switch (a.v_.index()) {
    case 0: return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
    case 1: {
      const auto& x = std::get<Scalar::Residue>(a.v_);
      const auto& y = std::get<Scalar::Residue>(b.v_);
      return x.modulus == y.modulus && x.value == y.value;
    }
    default: {
      const auto& x = std::get<Scalar::Approx>(a.v_);
      const auto& y = std::get<Scalar::Approx>(b.v_);
      return approx_eq(x.value, y.value, std::max(x.tolerance, y.tolerance));
    }
  }
}

std::string Scalar::to_string() const {
  switch (v_.index()) {
    case 0: return std::get<mpq_class>(v_).get_str();
    case 1: return std::to_string(std::get<Residue>(v_).value);
    default: {
      auto z = std::get<Approx>(v_).value;
      char buf[96];
      std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
      return buf;
    }
  }
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace sklylab
