#include "sp1/gamma.hpp"

#include <algorithm>
#include <map>

#include "sp1/errors.hpp"

namespace sp1 {

const Rational& GammaValue::finite() const {
  if (!value_) throw PreconditionError("expected a finite value, got inf");
  return *value_;
}

std::strong_ordering operator<=>(const GammaValue& a, const GammaValue& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() <=> b.is_infinite();
  }
  int c = cmp(*a.value_, *b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

GammaValue operator+(const GammaValue& a, const GammaValue& b) {
  if (a.is_infinite() || b.is_infinite()) return kInfinity;
  return GammaValue(Rational(*a.value_ + *b.value_));
}

GammaValue operator-(const GammaValue& a, const GammaValue& b) {
  if (b.is_infinite()) throw PreconditionError("subtraction of inf is undefined");
  if (a.is_infinite()) return kInfinity;
  return GammaValue(Rational(*a.value_ - *b.value_));
}

GammaValue operator*(const Rational& s, const GammaValue& a) {
  if (a.is_infinite()) {
    if (sgn(s) <= 0) throw PreconditionError("non-positive multiple of inf is undefined");
    return kInfinity;
  }
  return GammaValue(Rational(s * *a.value_));
}

std::string GammaValue::str() const {
  return value_ ? to_string(*value_) : std::string("inf");
}

GammaValue GammaValue::parse(std::string_view text) {
  if (text == "inf" || text == "∞") return kInfinity;
  return GammaValue(parse_rational(text));
}

GammaValue Affine::operator()(const GammaValue& t) const {
  if (t.is_finite()) return intercept + GammaValue(Rational(slope * t.finite()));
  if (intercept.is_infinite() || sgn(slope) > 0) return kInfinity;
  if (sgn(slope) == 0) return intercept;
  throw PreconditionError("affine function tends to -inf at t = inf");
}

std::string Affine::str() const {
  if (intercept.is_infinite()) return "inf";
  return to_string(slope) + "*t + " + intercept.str();
}

namespace {

using Term = MinAffine::Term;

// t where lines a and b meet; slopes differ.
Rational crossing(const Term& a, const Term& b) {
  return Rational((b.intercept.finite() - a.intercept.finite()) / (a.slope - b.slope));
}

}  // namespace

MinAffine::MinAffine(std::vector<Term> terms) {
  std::map<Rational, GammaValue> best;  // slope -> least intercept
  for (auto& t : terms) {
    if (t.intercept.is_infinite()) continue;
    auto [it, fresh] = best.try_emplace(t.slope, t.intercept);
    if (!fresh && t.intercept < it->second) it->second = t.intercept;
  }
  if (best.empty()) {
    terms_ = {{Rational(0), kInfinity}};
    return;
  }
  // Lower envelope; lines enter in decreasing slope, i.e. in the order they
  // attain the minimum as t grows.
  std::vector<Term> hull;
  for (auto it = best.rbegin(); it != best.rend(); ++it) {
    Term line{it->first, it->second};
    while (hull.size() >= 2) {
      const Term& a = hull[hull.size() - 2];
      const Term& b = hull.back();
      if (crossing(a, line) <= crossing(a, b)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(line);
  }
  std::reverse(hull.begin(), hull.end());
  terms_ = std::move(hull);
}

GammaValue MinAffine::operator()(const GammaValue& t) const {
  if (t.is_infinite()) {
    return Affine{terms_.front().slope, terms_.front().intercept}(t);
  }
  GammaValue best = kInfinity;
  for (const auto& term : terms_) {
    best = std::min(best, Affine{term.slope, term.intercept}(t));
  }
  return best;
}

std::vector<Rational> MinAffine::breakpoints() const {
  std::vector<Rational> out;
  for (std::size_t i = terms_.size(); i-- > 1;) {
    out.push_back(crossing(terms_[i], terms_[i - 1]));
  }
  return out;
}

const MinAffine::Term& MinAffine::attaining_right(const Rational& t) const {
  const Term* best = &terms_.front();
  GammaValue best_val = Affine{best->slope, best->intercept}(GammaValue(t));
  for (const auto& term : terms_) {
    GammaValue v = Affine{term.slope, term.intercept}(GammaValue(t));
    if (v < best_val || (v == best_val && term.slope < best->slope)) {
      best = &term;
      best_val = v;
    }
  }
  return *best;
}

MinAffine MinAffine::min(const MinAffine& other) const {
  std::vector<Term> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return MinAffine(std::move(all));
}

MinAffine MinAffine::plus_affine(const Rational& slope, const GammaValue& intercept) const {
  std::vector<Term> shifted;
  shifted.reserve(terms_.size());
  for (const auto& t : terms_) {
    shifted.push_back({Rational(t.slope + slope), t.intercept + intercept});
  }
  return MinAffine(std::move(shifted));
}

std::string MinAffine::str() const {
  std::string s = "min(";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += ", ";
    s += Affine{terms_[i].slope, terms_[i].intercept}.str();
  }
  return s + ")";
}

}  // namespace sp1
