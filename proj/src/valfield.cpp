#include "sp1/valfield.hpp"

#include <algorithm>

#include "sp1/errors.hpp"

namespace sp1 {

namespace qpoly {

void trim(QPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  if (b.empty()) throw PreconditionError("polynomial division by zero");
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Rational factor = r.back() / b.back();
    q[shift] = factor;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= factor * b[j];
    r.pop_back();
    trim(r);
  }
  trim(q);
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  Rational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

std::size_t order_at_zero(const QPoly& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0) return i;
  }
  throw PreconditionError("order at zero of the zero polynomial");
}

}  // namespace qpoly

namespace {

int compare_qpoly(const QPoly& a, const QPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace

FieldElem FieldElem::ratfunc(QPoly num, QPoly den) {
  qpoly::trim(num);
  qpoly::trim(den);
  if (den.empty()) throw PreconditionError("rational function with zero denominator");
  FieldElem out;
  if (num.empty()) return out;
  QPoly g = qpoly::gcd(num, den);
  QPoly q, r;
  qpoly::divmod(num, g, q, r);
  num = std::move(q);
  qpoly::divmod(den, g, q, r);
  den = std::move(q);
  Rational lead = den.back();
  for (auto& c : num) c /= lead;
  for (auto& c : den) c /= lead;
  if (num.size() == 1 && den.size() == 1) {
    out.v_ = Rational(num[0]);
  } else {
    out.v_ = RatFunc{std::move(num), std::move(den)};
  }
  return out;
}

const Rational& FieldElem::rational() const {
  if (!is_rational()) throw PreconditionError("element is not a rational constant: " + str());
  return std::get<Rational>(v_);
}

QPoly FieldElem::numerator() const {
  if (is_rational()) {
    QPoly p{std::get<Rational>(v_)};
    qpoly::trim(p);
    return p;
  }
  return std::get<RatFunc>(v_).num;
}

QPoly FieldElem::denominator() const {
  if (is_rational()) return {Rational(1)};
  return std::get<RatFunc>(v_).den;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  if (a.is_rational() && b.is_rational()) return FieldElem(Rational(a.rational() + b.rational()));
  QPoly an = a.numerator(), ad = a.denominator(), bn = b.numerator(), bd = b.denominator();
  return FieldElem::ratfunc(qpoly::add(qpoly::mul(an, bd), qpoly::mul(bn, ad)), qpoly::mul(ad, bd));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem FieldElem::operator-() const {
  if (is_rational()) return FieldElem(Rational(-std::get<Rational>(v_)));
  RatFunc f = std::get<RatFunc>(v_);
  for (auto& c : f.num) c = -c;
  FieldElem out;
  out.v_ = std::move(f);
  return out;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  if (a.is_rational() && b.is_rational()) return FieldElem(Rational(a.rational() * b.rational()));
  return FieldElem::ratfunc(qpoly::mul(a.numerator(), b.numerator()),
                            qpoly::mul(a.denominator(), b.denominator()));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  if (b.is_zero()) throw PreconditionError("division by zero field element");
  if (a.is_rational() && b.is_rational()) return FieldElem(Rational(a.rational() / b.rational()));
  return FieldElem::ratfunc(qpoly::mul(a.numerator(), b.denominator()),
                            qpoly::mul(a.denominator(), b.numerator()));
}

bool operator<(const FieldElem& a, const FieldElem& b) {
  if (a.is_rational() != b.is_rational()) return a.is_rational();
  if (a.is_rational()) return a.rational() < b.rational();
  int c = compare_qpoly(a.numerator(), b.numerator());
  if (c != 0) return c < 0;
  return compare_qpoly(a.denominator(), b.denominator()) < 0;
}

namespace {

std::string qpoly_str(const QPoly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (sgn(p[i]) == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(p[i]) + ")";
    if (i >= 1) s += "*t";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

}  // namespace

std::string FieldElem::str() const {
  if (is_rational()) return to_string(std::get<Rational>(v_));
  const auto& f = std::get<RatFunc>(v_);
  if (f.den.size() == 1) return qpoly_str(f.num);
  return "(" + qpoly_str(f.num) + ")/(" + qpoly_str(f.den) + ")";
}

// ---------------------------------------------------------------------------

PadicField::PadicField(Integer p) : p_(std::move(p)) {
  if (p_ < 2 || mpz_probab_prime_p(p_.get_mpz_t(), 40) == 0) {
    throw ParseError("p not prime: " + p_.get_str());
  }
}

void PadicField::check(const FieldElem& a) const {
  if (!a.is_rational()) {
    throw PreconditionError("malformed element for padic field: " + a.str());
  }
}

namespace {

long remove_factor(Integer& n, const Integer& p) {
  if (n == 0) return 0;
  return static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

Integer ipow(const Integer& p, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
  return r;
}

// p^e as a rational, e possibly negative.
Rational qpow(const Integer& p, long e) {
  if (e >= 0) return Rational(ipow(p, static_cast<unsigned long>(e)));
  return Rational(Integer(1), ipow(p, static_cast<unsigned long>(-e)));
}

}  // namespace

GammaValue PadicField::val(const FieldElem& a) const {
  check(a);
  const Rational& q = a.rational();
  if (sgn(q) == 0) return kInfinity;
  Integer num = q.get_num(), den = q.get_den();
  long v = remove_factor(num, p_) - remove_factor(den, p_);
  return GammaValue(v);
}

FieldElem PadicField::truncate(const FieldElem& c, const Rational& r) const {
  check(c);
  const Rational& q = c.rational();
  if (sgn(q) == 0) return c;
  Integer num = q.get_num(), den = q.get_den();
  long v = remove_factor(num, p_) - remove_factor(den, p_);
  // keep exponents v .. bound-1
  Integer bound_z = sp1::ceil(r);
  if (bound_z <= v) return FieldElem(0);
  if (!bound_z.fits_slong_p()) throw PreconditionError("truncation level too large");
  long digits = bound_z.get_si() - v;
  Integer modulus = ipow(p_, static_cast<unsigned long>(digits));
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  Integer unit = num * inv;
  mpz_mod(unit.get_mpz_t(), unit.get_mpz_t(), modulus.get_mpz_t());
  return FieldElem(Rational(Rational(unit) * qpow(p_, v)));
}

GammaValue TadicField::val(const FieldElem& a) const {
  if (a.is_zero()) return kInfinity;
  long v = static_cast<long>(qpoly::order_at_zero(a.numerator())) -
           static_cast<long>(qpoly::order_at_zero(a.denominator()));
  return GammaValue(v);
}

FieldElem TadicField::truncate(const FieldElem& c, const Rational& r) const {
  if (c.is_zero()) return c;
  QPoly num = c.numerator(), den = c.denominator();
  std::size_t on = qpoly::order_at_zero(num), od = qpoly::order_at_zero(den);
  long v = static_cast<long>(on) - static_cast<long>(od);
  Integer bound_z = sp1::ceil(r);
  if (bound_z <= v) return FieldElem(0);
  if (!bound_z.fits_slong_p()) throw PreconditionError("truncation level too large");
  long digits = bound_z.get_si() - v;
  num.erase(num.begin(), num.begin() + static_cast<long>(on));
  den.erase(den.begin(), den.begin() + static_cast<long>(od));
  // power series num/den modulo t^digits
  QPoly series(static_cast<std::size_t>(digits));
  for (std::size_t k = 0; k < series.size(); ++k) {
    Rational acc = k < num.size() ? num[k] : Rational(0);
    for (std::size_t j = 1; j <= k && j < den.size(); ++j) acc -= den[j] * series[k - j];
    series[k] = acc / den[0];
  }
  if (v >= 0) {
    series.insert(series.begin(), static_cast<std::size_t>(v), Rational(0));
    return FieldElem::ratfunc(series, {Rational(1)});
  }
  QPoly shift(static_cast<std::size_t>(-v) + 1);
  shift.back() = 1;
  return FieldElem::ratfunc(series, shift);
}

FieldSpec FieldSpec::padic(const Integer& p) {
  return FieldSpec(std::make_shared<const PadicField>(p));
}

FieldSpec FieldSpec::tadic() { return FieldSpec(std::make_shared<const TadicField>()); }

Integer FieldSpec::p() const {
  if (auto* pf = dynamic_cast<const PadicField*>(impl_.get())) return pf->p();
  return Integer(0);
}

// ---------------------------------------------------------------------------

Poly::Poly(std::vector<FieldElem> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElem Poly::operator()(const FieldElem& x) const {
  FieldElem acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<FieldElem> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<FieldElem> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<FieldElem> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(r));
}

Poly operator*(const FieldElem& s, const Poly& a) {
  std::vector<FieldElem> r = a.c_;
  for (auto& c : r) c *= s;
  return Poly(std::move(r));
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[i].str() + ")";
    if (i >= 1) s += "*x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

std::vector<FieldElem> taylor_shift(const FieldSpec& spec, const Poly& f, const FieldElem& c) {
  if (f.degree() > static_cast<long>(spec.max_degree())) {
    throw PreconditionError("polynomial degree " + std::to_string(f.degree()) +
                            " exceeds the configured cap " + std::to_string(spec.max_degree()));
  }
  for (const auto& a : f.coeffs()) spec.field().check(a);
  spec.field().check(c);
  // Repeated synthetic division by (x − c).
  std::vector<FieldElem> a = f.coeffs();
  const std::size_t n = a.size();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = n - 1; i-- > k;) a[i] += c * a[i + 1];
  }
  return a;
}

}  // namespace sp1
