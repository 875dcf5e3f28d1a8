#include "tpcells/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "tpcells/error.hpp"

namespace tpcells {

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a < b;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(int constant) : LaurentPoly(Integer(constant)) {}

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(Exponent{}, constant);
}

LaurentPoly LaurentPoly::constant(std::size_t arity, const Integer& c) {
  LaurentPoly p(arity);
  if (c != 0) p.terms_.emplace(Exponent(arity, 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw InputError("variable index out of range");
  Exponent e(arity, 0);
  e[index] = 1;
  LaurentPoly p(arity);
  p.terms_.emplace(std::move(e), Integer(1));
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& exp, const Integer& coeff) {
  LaurentPoly p(exp.size());
  if (coeff != 0) p.terms_.emplace(exp, coeff);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

std::optional<Integer> LaurentPoly::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return terms_.empty() ? Integer(0) : terms_.begin()->second;
}

const std::pair<const Exponent, Integer>& LaurentPoly::leading_term() const {
  if (terms_.empty()) throw InputError("zero polynomial has no leading term");
  return *terms_.rbegin();
}

int LaurentPoly::sign_of_leading() const {
  return terms_.empty() ? 0 : sgn(terms_.rbegin()->second);
}

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;
}

Exponent LaurentPoly::min_exponent() const {
  Exponent m(arity_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (e.empty()) continue;
    if (first) {
      m = e;
      first = false;
    } else {
      for (std::size_t i = 0; i < e.size(); ++i) m[i] = std::min(m[i], e[i]);
    }
  }
  return m;
}

bool LaurentPoly::has_nonnegative_coeffs() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return sgn(t.second) > 0; });
}

void LaurentPoly::promote(std::size_t arity) {
  if (arity_ == arity) return;
  if (arity_ != 0) throw InputError("polynomial arity mismatch");
  TermMap t;
  for (auto& [e, c] : terms_) t.emplace(Exponent(arity, 0), std::move(c));
  terms_ = std::move(t);
  arity_ = arity;
}

void LaurentPoly::check_arity(const LaurentPoly& other) {
  if (arity_ == other.arity_) return;
  if (arity_ == 0 && is_constant()) {
    promote(other.arity_);
    return;
  }
  if (other.arity_ == 0 && other.is_constant()) return;
  throw InputError("polynomial arity mismatch: " + std::to_string(arity_) +
                   " vs " + std::to_string(other.arity_));
}

void LaurentPoly::add_term(const Exponent& exp, const Integer& coeff) {
  if (coeff == 0) return;
  if (exp.size() != arity_) {
    if (arity_ == 0 && is_constant()) {
      promote(exp.size());
    } else {
      throw InputError("term arity mismatch");
    }
  }
  auto [it, inserted] = terms_.emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_arity(other);
  for (const auto& [e, c] : other.terms_) {
    add_term(e.size() == arity_ ? e : Exponent(arity_, 0), c);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  check_arity(other);
  for (const auto& [e, c] : other.terms_) {
    add_term(e.size() == arity_ ? e : Exponent(arity_, 0), -c);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    return LaurentPoly(std::max(a.arity(), b.arity()));
  }
  if (a.arity() != b.arity()) {
    if (a.arity() == 0 && a.is_constant()) {
      return b * LaurentPoly::constant(b.arity(), *a.constant_value());
    }
    if (b.arity() == 0 && b.is_constant()) {
      return a * LaurentPoly::constant(a.arity(), *b.constant_value());
    }
    throw InputError("polynomial arity mismatch in product");
  }
  LaurentPoly out(a.arity());
  Exponent e(a.arity());
  Integer c;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      c = ca * cb;
      out.add_term(e, c);
    }
  }
  return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.arity() == b.arity()) return a.terms() == b.terms();
  if (a.is_constant() && b.is_constant()) {
    return *a.constant_value() == *b.constant_value();
  }
  return false;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = LaurentPoly::constant(arity_, 1);
  LaurentPoly base = *this;
  while (k) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const {
  if (shift.size() != arity_) throw InputError("shift arity mismatch");
  LaurentPoly out(arity_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += shift[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

LaurentPoly LaurentPoly::divided_by(const Integer& d) const {
  if (d == 0) throw InputError("division by zero");
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) {
      throw InputError("inexact integer division");
    }
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  return out;
}

LaurentPoly LaurentPoly::remapped(
    std::size_t new_arity, const std::vector<std::size_t>& index_map) const {
  LaurentPoly out(new_arity);
  for (const auto& [e, c] : terms_) {
    Exponent f(new_arity, 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i >= index_map.size() || index_map[i] >= new_arity) {
        throw InputError("variable remap out of range");
      }
      f[index_map[i]] += e[i];
    }
    out.add_term(f, c);
  }
  return out;
}

Rational LaurentPoly::evaluate(std::span<const Rational> point) const {
  if (arity_ != 0 && point.size() != arity_) {
    throw InputError("evaluation point has wrong arity");
  }
  Rational sum = 0;
  Rational term;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0 && point[i] == 0) {
        throw InputError("evaluation at a pole");
      }
      Rational base = e[i] > 0 ? point[i] : Rational(1) / point[i];
      for (int k = 0; k < std::abs(e[i]); ++k) term *= base;
    }
    sum += term;
  }
  return sum;
}

std::optional<LaurentPoly> LaurentPoly::exact_divide(const LaurentPoly& a,
                                                     const LaurentPoly& b) {
  if (b.is_zero()) throw InputError("division by the zero polynomial");
  const std::size_t n = std::max(a.arity(), b.arity());
  LaurentPoly pa = a, pb = b;
  if (pa.arity() != n) pa.promote(n);
  if (pb.arity() != n) pb.promote(n);
  if (pa.is_zero()) return LaurentPoly(n);
  const Exponent sa = pa.min_exponent();
  const Exponent sb = pb.min_exponent();
  Exponent neg_a(n), neg_b(n), net(n);
  for (std::size_t i = 0; i < n; ++i) {
    neg_a[i] = -sa[i];
    neg_b[i] = -sb[i];
    net[i] = sa[i] - sb[i];
  }
  LaurentPoly r = pa.shifted(neg_a);
  const LaurentPoly d = pb.shifted(neg_b);
  const auto& [lead_e, lead_c] = d.leading_term();
  LaurentPoly q(n);
  Exponent diff(n);
  Integer qc;
  while (!r.is_zero()) {
    const auto& [re, rc] = r.leading_term();
    for (std::size_t i = 0; i < n; ++i) {
      diff[i] = re[i] - lead_e[i];
      if (diff[i] < 0) return std::nullopt;
    }
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) {
      return std::nullopt;
    }
    mpz_divexact(qc.get_mpz_t(), rc.get_mpz_t(), lead_c.get_mpz_t());
    const LaurentPoly step = LaurentPoly::monomial(diff, qc);
    q += step;
    r -= step * d;
  }
  return q.shifted(net);
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool unit_mono =
        std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (!(unit_mono && mag == 1)) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << "*";
      out << (i < names.size() ? names[i] : "t" + std::to_string(i + 1));
      if (e[i] != 1) out << "^" << e[i];
      wrote = true;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// gcd

namespace {

int degree_in(const LaurentPoly& p, std::size_t var) {
  int d = -1;
  for (const auto& [e, c] : p.terms()) d = std::max(d, e[var]);
  return d;
}

// coefficient of x_var^k, as a polynomial with x_var absent
LaurentPoly coeff_in(const LaurentPoly& p, std::size_t var, int k) {
  LaurentPoly out(p.arity());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] != k) continue;
    Exponent f = e;
    f[var] = 0;
    out.add_term(f, c);
  }
  return out;
}

LaurentPoly strip_monomial(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  Exponent m = p.min_exponent();
  for (auto& x : m) x = -x;
  return p.shifted(m);
}

LaurentPoly normalize_sign(LaurentPoly p) {
  return p.sign_of_leading() < 0 ? -p : p;
}

LaurentPoly gcd_poly(const LaurentPoly& a, const LaurentPoly& b);

// gcd of the coefficients of p viewed as a polynomial in x_var
LaurentPoly content_in(const LaurentPoly& p, std::size_t var) {
  LaurentPoly g(p.arity());
  const int d = degree_in(p, var);
  for (int k = 0; k <= d; ++k) {
    LaurentPoly c = coeff_in(p, var, k);
    if (c.is_zero()) continue;
    g = g.is_zero() ? normalize_sign(c) : gcd_poly(g, c);
    if (g.is_constant() && abs(*g.constant_value()) == 1) break;
  }
  return g;
}

LaurentPoly exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = LaurentPoly::exact_divide(a, b);
  if (!q) throw CheckFailure("gcd: inexact division");
  return *q;
}

// a, b: polynomials (nonnegative exponents), nonzero
LaurentPoly gcd_poly(const LaurentPoly& a_in, const LaurentPoly& b_in) {
  const LaurentPoly a = strip_monomial(a_in);
  const LaurentPoly b = strip_monomial(b_in);
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  const std::size_t n = std::max(a.arity(), b.arity());
  // pick the highest-index variable occurring in either
  std::optional<std::size_t> var;
  for (std::size_t i = n; i-- > 0;) {
    if ((a.arity() == n && degree_in(a, i) > 0) ||
        (b.arity() == n && degree_in(b, i) > 0)) {
      var = i;
      break;
    }
  }
  if (!var) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    return LaurentPoly::constant(n, g);
  }
  const std::size_t x = *var;
  const LaurentPoly ca = content_in(a, x);
  const LaurentPoly cb = content_in(b, x);
  const LaurentPoly g_content = gcd_poly(ca, cb);
  LaurentPoly f1 = exact(a, ca);
  LaurentPoly f2 = exact(b, cb);
  if (degree_in(f1, x) < degree_in(f2, x)) std::swap(f1, f2);
  if (degree_in(f2, x) <= 0) return g_content;
  // primitive polynomial remainder sequence
  while (true) {
    const int d2 = degree_in(f2, x);
    const LaurentPoly lc2 = coeff_in(f2, x, d2);
    LaurentPoly r = f1;
    while (!r.is_zero() && degree_in(r, x) >= d2) {
      const int dr = degree_in(r, x);
      const LaurentPoly lcr = coeff_in(r, x, dr);
      Exponent shift(n, 0);
      shift[x] = dr - d2;
      r = lc2 * r - lcr * f2.shifted(shift);
    }
    if (r.is_zero()) {
      return normalize_sign(g_content * normalize_sign(f2));
    }
    if (degree_in(r, x) == 0) return g_content;
    r = exact(r, content_in(r, x));
    f1 = std::move(f2);
    f2 = std::move(r);
  }
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly(std::max(a.arity(), b.arity()));
  LaurentPoly pa = a, pb = b;
  const std::size_t n = std::max(a.arity(), b.arity());
  if (pa.arity() != n) pa = pa * LaurentPoly::constant(n, 1);
  if (pb.arity() != n) pb = pb * LaurentPoly::constant(n, 1);
  if (pa.is_zero()) return normalize_sign(strip_monomial(pb));
  if (pb.is_zero()) return normalize_sign(strip_monomial(pa));
  return normalize_sign(gcd_poly(pa, pb));
}

// ---------------------------------------------------------------------------
// RationalFn

RationalFn::RationalFn(LaurentPoly num) : num_(std::move(num)), den_(1) {}

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

std::size_t RationalFn::arity() const {
  return std::max(num_.arity(), den_.arity());
}

void RationalFn::normalize() {
  if (den_.is_zero()) throw InputError("division by the zero polynomial");
  const std::size_t n = arity();
  if (num_.arity() != n) num_ = num_ * LaurentPoly::constant(n, 1);
  if (den_.arity() != n) den_ = den_ * LaurentPoly::constant(n, 1);
  if (num_.is_zero()) {
    num_ = LaurentPoly(n);
    den_ = LaurentPoly::constant(n, 1);
    return;
  }
  const Exponent mn = num_.min_exponent();
  const Exponent md = den_.min_exponent();
  Exponent neg_n(n), neg_d(n), net(n);
  for (std::size_t i = 0; i < n; ++i) {
    neg_n[i] = -mn[i];
    neg_d[i] = -md[i];
    net[i] = mn[i] - md[i];
  }
  LaurentPoly a = num_.shifted(neg_n);
  LaurentPoly b = den_.shifted(neg_d);
  if (b.is_constant()) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    a = a.divided_by(g);
    b = b.divided_by(g);
  } else {
    const LaurentPoly g = poly_gcd(a, b);
    a = exact(a, g);
    b = exact(b, g);
  }
  if (b.sign_of_leading() < 0) {
    a = -a;
    b = -b;
  }
  num_ = a.shifted(net);
  den_ = std::move(b);
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
  return a + (-b);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.is_zero()) throw InputError("division by the zero rational function");
  return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RationalFn& a, const RationalFn& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

bool RationalFn::subtraction_free() const {
  return num_.has_nonnegative_coeffs() && den_.has_nonnegative_coeffs();
}

Rational RationalFn::evaluate(std::span<const Rational> point) const {
  const Rational d = den_.evaluate(point);
  if (d == 0) throw InputError("evaluation at a pole");
  return num_.evaluate(point) / d;
}

std::string RationalFn::to_string(const std::vector<std::string>& names) const {
  if (den_.is_constant() && *den_.constant_value() == 1) {
    return num_.to_string(names);
  }
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

RationalFn substitute(const LaurentPoly& p, std::span<const RationalFn> values) {
  if (p.arity() != 0 && p.arity() != values.size()) {
    throw InputError("substitution arity mismatch");
  }
  std::size_t out_arity = 0;
  for (const auto& v : values) out_arity = std::max(out_arity, v.arity());
  // accumulate over a common denominator built from powers of the values'
  // denominators, then normalise once
  std::vector<int> max_pos(values.size(), 0), max_neg(values.size(), 0);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      max_pos[i] = std::max(max_pos[i], e[i]);
      max_neg[i] = std::max(max_neg[i], -e[i]);
    }
  }
  LaurentPoly common = LaurentPoly::constant(out_arity, 1);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (max_neg[i] > 0 && values[i].is_zero()) {
      throw InputError("substitution of zero into a negative power");
    }
    common *= values[i].den().pow(max_pos[i]);
    common *= values[i].num().pow(max_neg[i]);
  }
  LaurentPoly total(out_arity);
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly term = LaurentPoly::constant(out_arity, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      // value^e * den^max_pos * num^max_neg
      const int pos = e[i] > 0 ? e[i] : 0;
      const int neg = e[i] < 0 ? -e[i] : 0;
      term *= values[i].num().pow(pos + max_neg[i] - neg);
      term *= values[i].den().pow(neg + max_pos[i] - pos);
    }
    total += term;
  }
  return RationalFn(total, common);
}

RationalFn substitute(const RationalFn& f, std::span<const RationalFn> values) {
  return substitute(f.num(), values) / substitute(f.den(), values);
}

ExponentTable exponent_vectors(std::span<const LaurentPoly> polys) {
  std::size_t arity = 0;
  for (const auto& p : polys) arity = std::max(arity, p.arity());
  for (const auto& p : polys) {
    if (p.arity() != arity && !(p.arity() == 0 && p.is_constant())) {
      throw InputError("exponent_vectors: polynomials of different arity");
    }
  }
  std::set<Exponent, GrlexLess> all;
  for (const auto& p : polys) {
    for (const auto& [e, c] : p.terms()) {
      all.insert(e.size() == arity ? e : Exponent(arity, 0));
    }
  }
  if (all.empty()) {
    throw InputError("exponent_vectors: every polynomial is zero");
  }
  ExponentTable out;
  out.arity = arity;
  out.exponents.assign(all.begin(), all.end());
  out.table.assign(polys.size(),
                   std::vector<Integer>(out.exponents.size(), Integer(0)));
  for (std::size_t j = 0; j < polys.size(); ++j) {
    for (const auto& [e, c] : polys[j].terms()) {
      const Exponent key = e.size() == arity ? e : Exponent(arity, 0);
      auto it = std::lower_bound(out.exponents.begin(), out.exponents.end(),
                                 key, GrlexLess{});
      out.table[j][static_cast<std::size_t>(it - out.exponents.begin())] = c;
    }
  }
  return out;
}

}  // namespace tpcells
