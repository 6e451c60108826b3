#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sp1/gamma.hpp"
#include "sp1/valfield.hpp"

namespace sp1 {

/// Newton polygon of a univariate polynomial from its coefficient valuations.
/// Each segment reports the common valuation of the roots it accounts for
/// (the negated hull slope) and how many roots that is. Slopes increase.
struct NewtonPolygon {
  struct Segment {
    Rational slope;
    long multiplicity;
    friend bool operator==(const Segment&, const Segment&) = default;
  };
  std::vector<Segment> segments;

  long total_multiplicity() const;
  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
};

/// Lower convex hull of {(i, v_i) : v_i finite}. Throws PreconditionError if
/// every entry is ∞.
NewtonPolygon newton_polygon(std::span<const GammaValue> coeff_vals);

/// F(x, y) = Σ_j a_j(x) y^j, stored as a_0, a_1, ...
struct BiPoly {
  std::vector<Poly> y_coeffs;

  long y_degree() const;
  friend BiPoly operator*(const BiPoly& f, const BiPoly& g);
};

/// t ↦ gauss_val(a, B(c, t)) as a canonical MinAffine.
MinAffine coeff_val_path(const FieldSpec& spec, const Poly& a, const FieldElem& c);

/// Root valuations of F(x_t, y), x_t the generic point of B(c, t), t ∈ [0, ∞].
///
/// Pieces are closed intervals covering [0, ∞]; on each one every root
/// valuation is an affine function of t. Roots at y = 0 appear with the
/// constant valuation ∞.
struct RootProfile {
  using Root = std::pair<Affine, long>;  // valuation, multiplicity
  struct Piece {
    Rational lo;
    GammaValue hi;
    std::vector<Root> roots;  // sorted, merged
    friend bool operator==(const Piece&, const Piece&) = default;
  };
  std::vector<Piece> pieces;

  // Multiset of root valuations at t, as (value, multiplicity), sorted.
  std::vector<std::pair<GammaValue, long>> at(const GammaValue& t) const;
  friend bool operator==(const RootProfile&, const RootProfile&) = default;
};

RootProfile root_valuations_along_path(const FieldSpec& spec, const BiPoly& f,
                                       const FieldElem& c);

/// Piece boundaries where the root data changes: candidate forward-branching
/// radii along the path.
std::vector<GammaValue> branch_events(const RootProfile& profile);

/// Quadratic covers only: true iff at radius t both roots have the same
/// valuation λ and val(y1 − y2) > λ, i.e. the residual polynomial of the
/// double segment is a square.
bool quadratic_residual_square(const FieldSpec& spec, const BiPoly& f, const FieldElem& c,
                               const GammaValue& t);

}  // namespace sp1
