#pragma once

#include <doctest.h>

#include <string>

#include "sp1/gamma.hpp"
#include "sp1/pline.hpp"
#include "sp1/rational.hpp"
#include "sp1/valfield.hpp"

namespace sp1::test {

inline Rational q(const char* text) { return parse_rational(text); }
inline GammaValue g(const char* text) { return GammaValue::parse(text); }
inline FieldElem e(const char* text) { return FieldElem(parse_rational(text)); }

inline PLinePoint pt(const FieldSpec& spec, const char* text) {
  if (std::string(text) == "inf") return point_at_infinity();
  return simple_point(spec, e(text));
}

inline PLinePoint ball(const FieldSpec& spec, const char* center, const char* radius) {
  return normalize_point(spec, Chart::Std, e(center), g(radius));
}

}  // namespace sp1::test

namespace doctest {

template <>
struct StringMaker<sp1::GammaValue> {
  static String convert(const sp1::GammaValue& v) { return v.str().c_str(); }
};

template <>
struct StringMaker<sp1::PLinePoint> {
  static String convert(const sp1::PLinePoint& p) { return p.str().c_str(); }
};

template <>
struct StringMaker<sp1::Rational> {
  static String convert(const sp1::Rational& r) { return sp1::to_string(r).c_str(); }
};

}  // namespace doctest
