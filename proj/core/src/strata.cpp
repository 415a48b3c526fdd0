#include "sklylab/strata.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "sklylab/error.hpp"

namespace sklylab {

HilbertSeries::HilbertSeries(std::vector<mpq_class> numerator, int dim) : num_(std::move(numerator)), dim_(dim) {
  if (dim_ < 0) throw Error(Errc::RangeError, "negative dimension");
  canonicalize();
}

void HilbertSeries::canonicalize() {
  while (!num_.empty() && num_.back() == 0) num_.pop_back();
  // Divide by (1 - t) while the numerator vanishes at 1.
  while (dim_ > 0 && !num_.empty() && multiplicity() == 0) {
    // p(t) = (1 - t) r(t): r_i = sum_{j <= i} p_j.
    std::vector<mpq_class> r(num_.size() - 1);
    mpq_class acc = 0;
    for (std::size_t i = 0; i + 1 < num_.size(); ++i) r[i] = acc += num_[i];
    num_ = std::move(r);
    --dim_;
    while (!num_.empty() && num_.back() == 0) num_.pop_back();
  }
}

mpq_class HilbertSeries::multiplicity() const {
  mpq_class s = 0;
  for (const auto& c : num_) s += c;
  return s;
}

HilbertSeries HilbertSeries::shifted(int k) const {
  if (k < 0) throw Error(Errc::RangeError, "negative shift");
  std::vector<mpq_class> n(k, 0);
  n.insert(n.end(), num_.begin(), num_.end());
  return HilbertSeries(std::move(n), dim_);
}

namespace {

// Multiply a numerator by (1 - t)^e.
std::vector<mpq_class> times_one_minus_t(std::vector<mpq_class> p, int e) {
  for (int i = 0; i < e; ++i) {
    std::vector<mpq_class> q(p.size() + 1, 0);
    for (std::size_t j = 0; j < p.size(); ++j) {
      q[j] += p[j];
      q[j + 1] -= p[j];
    }
    p = std::move(q);
  }
  return p;
}

HilbertSeries combine(const HilbertSeries& a, const HilbertSeries& b, int sign) {
  const int d = std::max(a.dim(), b.dim());
  auto pa = times_one_minus_t(a.numerator(), d - a.dim());
  auto pb = times_one_minus_t(b.numerator(), d - b.dim());
  pa.resize(std::max(pa.size(), pb.size()), 0);
  for (std::size_t i = 0; i < pb.size(); ++i) pa[i] += sign * pb[i];
  return HilbertSeries(std::move(pa), d);
}

}  // namespace

HilbertSeries HilbertSeries::operator-(const HilbertSeries& o) const { return combine(*this, o, -1); }
HilbertSeries HilbertSeries::operator+(const HilbertSeries& o) const { return combine(*this, o, 1); }

mpq_class HilbertSeries::coefficient(int d) const {
  // [t^m] (1 - t)^{-dim} = C(m + dim - 1, dim - 1).
  mpq_class out = 0;
  for (int i = 0; i < static_cast<int>(num_.size()) && i <= d; ++i) {
    const int m = d - i;
    mpz_class c;
    if (dim_ == 0)
      c = (m == 0) ? 1 : 0;
    else
      mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(m + dim_ - 1), static_cast<unsigned long>(dim_ - 1));
    out += num_[i] * c;
  }
  return out;
}

std::string HilbertSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    mpq_class c = num_[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    if (c < 0) c = -c;
    first = false;
    if (i == 0 || c != 1) os << c.get_str() << (i ? "*" : "");
    if (i == 1) os << "t";
    if (i > 1) os << "t^" << i;
  }
  if (first) os << "0";
  if (dim_ == 0) return os.str();
  std::string num = os.str();
  if (num.find_first_of("+-", 1) != std::string::npos) num = "(" + num + ")";
  return num + "/(1 - t)" + (dim_ > 1 ? "^" + std::to_string(dim_) : "");
}

FatPointSeries hs_quotient_multiplicity(int k) {
  if (k < 0) throw Error(Errc::RangeError, "shift must be nonnegative");
  const HilbertSeries line({1}, 2);
  HilbertSeries q = line - line.shifted(k + 1);
  const mpq_class m = q.dim() == 1 ? q.multiplicity() : mpq_class(0);
  return {std::move(q), m};
}

void require_pi_degree(int n) {
  if (n < 3) throw Error(Errc::BadPIDegree, "PI degree must be at least 3");
  if (4 % n == 0) throw Error(Errc::BadPIDegree, "n divides 4 excluded");
}

int half_degree(int n) { return n / std::gcd(n, 2); }

std::int64_t q_value(int k, int n) {
  require_pi_degree(n);
  const std::int64_t s = half_degree(n);
  return (std::int64_t{k} * k + (s - k) * (s - k)) * n / s;
}

namespace {

std::int64_t sum_squares(const std::vector<int>& dims) {
  std::int64_t t = 0;
  for (int d : dims) t += std::int64_t{d} * d;
  return t;
}

Stratum make(StratumKind kind, std::string label, std::vector<int> dims, int k = -1) {
  Stratum s{kind, std::move(label), k, std::move(dims), 0};
  s.d_value = sum_squares(s.dims);
  return s;
}

}  // namespace

StratumTable irr_table(int n) {
  require_pi_degree(n);
  StratumTable t;
  t.n = n;
  t.odd = n % 2 == 1;
  t.strata.push_back(make(StratumKind::Smooth, "smooth", {n}));
  if (t.odd) {
    for (int k = 0; k <= n - 2; ++k)
      t.strata.push_back(make(StratumKind::Curve, "curve(" + std::to_string(k) + ")", {k + 1, n - 1 - k}, k));
  } else {
    const int s = n / 2;
    t.strata.push_back(make(StratumKind::OffCurveSingular, "off-curve singular", {s, s}));
    for (int k = 0; k <= s - 2; ++k)
      t.strata.push_back(make(StratumKind::Curve, "curve(" + std::to_string(k) + ")",
                              {k + 1, k + 1, s - 1 - k, s - 1 - k}, k));
  }
  t.strata.push_back(make(StratumKind::Origin, "origin", {1}));
  return t;
}

DiscriminantProfile discriminant_profile(int n) {
  require_pi_degree(n);
  const bool odd = n % 2 == 1;
  const int s = half_degree(n);
  const std::int64_t n2 = std::int64_t{n} * n;
  const std::int64_t low = odd ? q_value(n / 2, n) : q_value(s / 2, n);
  const std::int64_t mid_hi = odd ? q_value(n - 1, n) : 2 * std::int64_t{s} * s;
  const int kmax = odd ? n - 2 : s - 2;

  DiscriminantProfile p;
  p.n = n;
  p.ranges = {{1, 1, "empty"}, {2, low, "origin"}, {low + 1, mid_hi, "curves"}, {mid_hi + 1, n2, "Y^sing"}};

  const StratumTable table = irr_table(n);
  std::vector<std::string> sing_labels;
  for (const auto& st : table.strata)
    if (st.kind != StratumKind::Smooth) sing_labels.push_back(st.label);

  for (std::int64_t ell = 1; ell <= n2; ++ell) {
    DiscriminantEntry e;
    e.ell = ell;
    if (ell == 1) {
      e.description = "empty";
    } else if (ell <= low) {
      e.description = "origin";
      e.strata = {"origin"};
    } else if (ell <= mid_hi) {
      std::vector<int> ks;
      for (int k = 0; k <= kmax; ++k)
        if (q_value(k + 1, n) < ell) ks.push_back(k);
      std::ostringstream os;
      os << "curves k in {";
      for (std::size_t i = 0; i < ks.size(); ++i) os << (i ? "," : "") << ks[i];
      os << "}";
      e.description = os.str();
      for (int k : ks) e.strata.push_back("curve(" + std::to_string(k) + ")");
      e.strata.push_back("origin");
    } else {
      e.description = "Y^sing";
      e.strata = sing_labels;
    }
    std::sort(e.strata.begin(), e.strata.end());
    p.entries.push_back(std::move(e));
  }
  return p;
}

bool ConsistencyReport::ok() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.ok; });
}

ConsistencyReport consistency_check(int n) {
  require_pi_degree(n);
  ConsistencyReport r;
  r.n = n;
  const StratumTable t = irr_table(n);
  const DiscriminantProfile p = discriminant_profile(n);
  const int s = half_degree(n);
  const std::int64_t n2 = std::int64_t{n} * n;

  Verdict braun{"braun saturation", true, ""};
  Verdict dval{"d-values match q", true, ""};
  for (const auto& st : t.strata) {
    const int sum = std::accumulate(st.dims.begin(), st.dims.end(), 0);
    if (st.kind != StratumKind::Origin && sum != n) {
      braun.ok = false;
      braun.detail += st.label + " sums to " + std::to_string(sum) + "; ";
    }
    std::int64_t expect = 1;
    switch (st.kind) {
      case StratumKind::Smooth: expect = n2; break;
      case StratumKind::OffCurveSingular: expect = q_value(0, n); break;
      case StratumKind::Curve: expect = q_value(st.curve_index + 1, n); break;
      case StratumKind::Origin: expect = 1; break;
    }
    if (st.d_value != expect) {
      dval.ok = false;
      dval.detail += st.label + " has d=" + std::to_string(st.d_value) + " vs " + std::to_string(expect) + "; ";
    }
  }
  if (t.odd == false && q_value(0, n) != 2 * std::int64_t{s} * s) {
    dval.ok = false;
    dval.detail += "q(0) != 2s^2; ";
  }
  r.verdicts.push_back(braun);
  r.verdicts.push_back(dval);

  Verdict part{"ranges partition [1, n^2]", true, ""};
  std::int64_t next = 1;
  for (const auto& rg : p.ranges) {
    if (rg.lo > rg.hi) {
      if (rg.lo != next) part.ok = false;
      continue;  // empty range
    }
    if (rg.lo != next) {
      part.ok = false;
      part.detail += rg.description + " starts at " + std::to_string(rg.lo) + "; ";
    }
    next = rg.hi + 1;
  }
  if (next != n2 + 1) {
    part.ok = false;
    part.detail += "cover ends at " + std::to_string(next - 1) + "; ";
  }
  r.verdicts.push_back(part);

  Verdict mono{"monotone zero sets", true, ""};
  for (std::size_t i = 0; i + 1 < p.entries.size(); ++i) {
    const auto& a = p.entries[i].strata;
    const auto& b = p.entries[i + 1].strata;
    if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) {
      mono.ok = false;
      mono.detail += "ell=" + std::to_string(p.entries[i].ell) + "; ";
    }
  }
  r.verdicts.push_back(mono);

  // The displayed ranges agree with {m : d(m) < ell}.
  Verdict dmodel{"profile equals {d < ell}", true, ""};
  for (const auto& e : p.entries) {
    std::vector<std::string> want;
    for (const auto& st : t.strata)
      if (st.d_value < e.ell) want.push_back(st.label);
    std::sort(want.begin(), want.end());
    if (want != e.strata) {
      dmodel.ok = false;
      dmodel.detail += "ell=" + std::to_string(e.ell) + "; ";
    }
  }
  r.verdicts.push_back(dmodel);

  if (t.odd) {
    Verdict sym{"curve q-values symmetric", true, ""};
    for (int k = 0; k <= n - 2; ++k)
      if (q_value(k + 1, n) != q_value(n - 1 - k, n)) sym.ok = false;
    r.verdicts.push_back(sym);
  }
  return r;
}

std::string CurveLabel::to_string() const {
  std::string w = "w" + std::to_string(omega) + (shifted ? "+s*tau" : "");
  return "C(" + w + " + " + std::to_string(k) + "*tau)";
}

CurveLabel curve_label_normalize(const CurveLabel& label, int n) {
  require_pi_degree(n);
  if (label.omega < 0 || label.omega > 3) throw Error(Errc::RangeError, "omega index must lie in 0..3");
  if (n % 2 == 1) {
    if (label.shifted) throw Error(Errc::RangeError, "shifted labels only occur for even n");
    if (label.k < 0 || label.k > n - 2) throw Error(Errc::RangeError, "k must lie in [0, n-2]");
    return {label.omega, false, std::min(label.k, n - 2 - label.k)};
  }
  const int s = n / 2;
  if (label.k < 0 || label.k > s - 2) throw Error(Errc::RangeError, "k must lie in [0, s-2]");
  if (!label.shifted) return label;
  return {label.omega, false, s - 2 - label.k};
}

}  // namespace sklylab
