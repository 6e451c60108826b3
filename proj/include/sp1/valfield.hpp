#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "sp1/gamma.hpp"
#include "sp1/rational.hpp"

namespace sp1 {

/// Dense polynomial over Q, coefficients from degree 0 upward, no trailing zeros.
using QPoly = std::vector<Rational>;

namespace qpoly {
void trim(QPoly& a);
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
// a = q·b + r with deg r < deg b; b nonzero.
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
QPoly gcd(QPoly a, QPoly b);  // monic, or empty when both are zero
// Index of the lowest nonzero coefficient; a nonzero.
std::size_t order_at_zero(const QPoly& a);
}  // namespace qpoly

/// Element of Q(t), reduced with a monic denominator.
struct RatFunc {
  QPoly num;
  QPoly den;
  friend bool operator==(const RatFunc&, const RatFunc&) = default;
};

/// Element of Q or Q(t). Constants are always stored as Rational, so the
/// representation of every element is unique.
class FieldElem {
 public:
  FieldElem() : v_(Rational(0)) {}
  FieldElem(const Rational& q) : v_(q) {}  // NOLINT
  FieldElem(long n) : v_(Rational(n)) {}   // NOLINT
  // num/den over Q; den nonzero.
  static FieldElem ratfunc(QPoly num, QPoly den);
  static FieldElem t() { return ratfunc({Rational(0), Rational(1)}, {Rational(1)}); }

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const;
  // Numerator and denominator, also for constants.
  QPoly numerator() const;
  QPoly denominator() const;

  bool is_zero() const { return is_rational() && sgn(std::get<Rational>(v_)) == 0; }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
  FieldElem& operator-=(const FieldElem& b) { return *this = *this - b; }
  FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }

  friend bool operator==(const FieldElem&, const FieldElem&) = default;
  // Arbitrary but fixed total order, used for deduplication and sorting.
  friend bool operator<(const FieldElem& a, const FieldElem& b);

  std::string str() const;

 private:
  std::variant<Rational, RatFunc> v_;
};

/// A valued field instance: valuation and ball-center truncation.
class ValuedField {
 public:
  virtual ~ValuedField() = default;
  virtual std::string kind() const = 0;
  virtual GammaValue val(const FieldElem& a) const = 0;
  // Sum of the expansion terms of c of exponent < r: the canonical center of
  // the closed ball B(c, r).
  virtual FieldElem truncate(const FieldElem& c, const Rational& r) const = 0;
  // Throws PreconditionError if a is not an element of this field.
  virtual void check(const FieldElem& a) const = 0;
  // An element of valuation 1.
  virtual FieldElem uniformizer() const = 0;
};

class PadicField final : public ValuedField {
 public:
  explicit PadicField(Integer p);  // throws ParseError unless p is prime
  std::string kind() const override { return "padic"; }
  GammaValue val(const FieldElem& a) const override;
  FieldElem truncate(const FieldElem& c, const Rational& r) const override;
  void check(const FieldElem& a) const override;
  FieldElem uniformizer() const override { return FieldElem(Rational(p_)); }
  const Integer& p() const { return p_; }

 private:
  Integer p_;
};

class TadicField final : public ValuedField {
 public:
  std::string kind() const override { return "tadic"; }
  GammaValue val(const FieldElem& a) const override;
  FieldElem truncate(const FieldElem& c, const Rational& r) const override;
  void check(const FieldElem&) const override {}
  FieldElem uniformizer() const override { return FieldElem::t(); }
};

/// Handle to a valued field plus the polynomial degree cap.
class FieldSpec {
 public:
  static FieldSpec padic(const Integer& p);
  static FieldSpec padic(long p) { return padic(Integer(p)); }
  static FieldSpec tadic();
  explicit FieldSpec(std::shared_ptr<const ValuedField> impl, std::size_t max_degree = 64)
      : impl_(std::move(impl)), max_degree_(max_degree) {}

  const ValuedField& field() const { return *impl_; }
  std::string kind() const { return impl_->kind(); }
  // The prime for p-adic fields, 0 otherwise.
  Integer p() const;
  std::size_t max_degree() const { return max_degree_; }
  FieldSpec with_max_degree(std::size_t d) const { return FieldSpec(impl_, d); }

  GammaValue val(const FieldElem& a) const { return impl_->val(a); }

 private:
  std::shared_ptr<const ValuedField> impl_;
  std::size_t max_degree_;
};

inline GammaValue val(const FieldSpec& spec, const FieldElem& a) { return spec.val(a); }

/// Univariate polynomial over FieldElem, coefficients from degree 0 upward.
class Poly {
 public:
  Poly() = default;
  Poly(std::vector<FieldElem> coeffs);  // NOLINT
  static Poly constant(const FieldElem& c) { return Poly(std::vector<FieldElem>{c}); }
  static Poly x() { return Poly(std::vector<FieldElem>{FieldElem(0), FieldElem(1)}); }
  // x − c
  static Poly linear(const FieldElem& c) { return Poly(std::vector<FieldElem>{-c, FieldElem(1)}); }

  const std::vector<FieldElem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  FieldElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : FieldElem(0); }

  FieldElem operator()(const FieldElem& x) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const FieldElem& s, const Poly& a);
  friend bool operator==(const Poly&, const Poly&) = default;

  std::string str() const;

 private:
  void trim();
  std::vector<FieldElem> c_;
};

/// Coefficients a_0..a_d with f(x) = Σ a_i (x − c)^i.
/// Throws PreconditionError if deg f exceeds the spec's degree cap.
std::vector<FieldElem> taylor_shift(const FieldSpec& spec, const Poly& f, const FieldElem& c);

}  // namespace sp1
