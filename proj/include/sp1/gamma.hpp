#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sp1/rational.hpp"

namespace sp1 {

/// An element of the value group extended by a top element: Q ∪ {∞}.
///
/// Finite values compare as rationals and ∞ is strictly above all of them.
/// Addition absorbs into ∞. Subtraction and scaling are partial: ∞ − ∞ and
/// 0·∞ throw PreconditionError, as does any operation that would need −∞.
class GammaValue {
 public:
  GammaValue() = default;  // 0
  GammaValue(const Rational& q) : value_(q) { value_->canonicalize(); }  // NOLINT: implicit on purpose
  GammaValue(long n) : value_(Rational(n)) {}   // NOLINT

  static GammaValue infinity() {
    GammaValue g;
    g.value_.reset();
    return g;
  }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  // Throws PreconditionError when infinite.
  const Rational& finite() const;

  friend bool operator==(const GammaValue& a, const GammaValue& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const GammaValue& a, const GammaValue& b);

  friend GammaValue operator+(const GammaValue& a, const GammaValue& b);
  GammaValue& operator+=(const GammaValue& b) { return *this = *this + b; }

  // a − b; b must be finite.
  friend GammaValue operator-(const GammaValue& a, const GammaValue& b);

  // s·a; rejects 0·∞ and negative·∞.
  friend GammaValue operator*(const Rational& s, const GammaValue& a);

  std::string str() const;
  static GammaValue parse(std::string_view text);

 private:
  std::optional<Rational> value_ = Rational(0);
};

inline const GammaValue kInfinity = GammaValue::infinity();

inline GammaValue gamma_add(const GammaValue& a, const GammaValue& b) { return a + b; }

/// An affine function t ↦ slope·t + intercept with intercept in Γ_∞.
struct Affine {
  Rational slope;
  GammaValue intercept;

  GammaValue operator()(const GammaValue& t) const;
  friend bool operator==(const Affine&, const Affine&) = default;
  friend auto operator<=>(const Affine& a, const Affine& b) {
    if (auto c = a.intercept.is_infinite() <=> b.intercept.is_infinite(); c != 0) return c;
    if (auto c = compare(a.slope, b.slope); c != 0) return c;
    return a.intercept <=> b.intercept;
  }
  std::string str() const;
};

/// A minimum of finitely many affine functions of one variable t ∈ Q.
///
/// Kept canonical: terms sorted by strictly increasing slope and every term
/// attains the minimum alone on some open interval of Q. The function that
/// is identically ∞ is the single term (0, ∞).
class MinAffine {
 public:
  struct Term {
    Rational slope;
    GammaValue intercept;
    friend bool operator==(const Term&, const Term&) = default;
  };

  MinAffine() : MinAffine(std::vector<Term>{{Rational(0), kInfinity}}) {}
  explicit MinAffine(std::vector<Term> terms);

  static MinAffine constant(const GammaValue& c) { return MinAffine({{Rational(0), c}}); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_infinite() const { return terms_.front().intercept.is_infinite(); }

  // Evaluation at t = ∞ follows the minimal slope: slope > 0 gives ∞, slope 0
  // gives its intercept, a negative slope throws PreconditionError.
  GammaValue operator()(const GammaValue& t) const;

  // Strictly increasing t-values where the attaining term changes.
  std::vector<Rational> breakpoints() const;

  // The term attaining the minimum on a right-neighbourhood of t (finite t).
  const Term& attaining_right(const Rational& t) const;

  MinAffine min(const MinAffine& other) const;
  MinAffine plus_affine(const Rational& slope, const GammaValue& intercept) const;

  friend bool operator==(const MinAffine&, const MinAffine&) = default;
  std::string str() const;

 private:
  std::vector<Term> terms_;
};

inline GammaValue minaffine_eval(const MinAffine& f, const GammaValue& t) { return f(t); }
inline std::vector<Rational> minaffine_breakpoints(const MinAffine& f) { return f.breakpoints(); }

}  // namespace sp1
