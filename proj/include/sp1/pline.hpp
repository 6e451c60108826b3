#pragma once

#include <string>
#include <vector>

#include "sp1/gamma.hpp"
#include "sp1/tree.hpp"
#include "sp1/valfield.hpp"

namespace sp1 {

// Points of the stable completion of P^1 as generic points of closed balls.
//
// Raw input (std, c, r) is the ball {x : val(x − c) ≥ r} in the coordinate x,
// (inv, c, r) is {x : val(1/x − c) ≥ r}; r = ∞ gives the simple point.
//
// Normal form (see PLinePoint):
//  * simple points: (std, c, ∞) if val c ≥ 0, (inv, 1/c, ∞) if val c < 0,
//    and (inv, 0, ∞) for the point at infinity;
//  * balls inside O = {val x ≥ 0}: (std, c, r) with r ≥ 0, val c ≥ 0;
//  * balls around ∞, {val x ≤ −r'} ∪ {∞}: (std, 0, −r') with −r' < 0;
//  * other balls inside {val x < 0}: (inv, c', r') with 0 < val c' < r';
//  * centers are truncated expansions, so equal balls have equal forms.
//
// Every point has a local chart in which its radius is ≥ 0 and equals the
// standard metric radius; the Gauss point (std, 0, 0) is the only point of
// radius 0 and is the common ancestor of both charts.

/// Normalizes arbitrary chart/center/radius data. Idempotent.
PLinePoint normalize_point(const FieldSpec& spec, Chart chart, const FieldElem& center,
                           const GammaValue& radius);

inline PLinePoint normalize_point(const FieldSpec& spec, const PLinePoint& raw) {
  return normalize_point(spec, raw.chart, raw.center, raw.radius);
}

/// The simple point a (std chart coordinate).
PLinePoint simple_point(const FieldSpec& spec, const FieldElem& a);
PLinePoint point_at_infinity();
PLinePoint gauss_point();

/// Chart in which the point's metric radius is read, and that radius.
struct LocalView {
  Chart chart;
  FieldElem center;
  GammaValue radius;  // ≥ 0
};
LocalView local_view(const PLinePoint& p);

/// Smallest ball point above both inputs in the tree rooted at the Gauss point.
PLinePoint join(const FieldSpec& spec, const PLinePoint& x, const PLinePoint& y);

/// True iff the ball of `outer` contains the ball of `inner` (ancestor relation).
bool contains(const FieldSpec& spec, const PLinePoint& outer, const PLinePoint& inner);

/// Standard metric on simple points; ∞ on the diagonal, 0 across the unit circle.
GammaValue metric_d(const FieldSpec& spec, const PLinePoint& x, const PLinePoint& y);

/// Gauss valuation min_i (val a_i + i·r) of f at the generic point of b.
/// Throws PreconditionError at the simple point at infinity.
GammaValue gauss_val(const FieldSpec& spec, const Poly& f, const PLinePoint& b);

/// A divisor: nonempty, deduplicated, all points simple and normalized.
struct Divisor {
  std::vector<PLinePoint> points;
};
Divisor make_divisor(const FieldSpec& spec, const std::vector<PLinePoint>& points);

/// Standard homotopy: generic of the metric ball of radius t around a.
/// Requires t ≥ 0; for ball points the radius becomes min(t, r).
PLinePoint psi(const FieldSpec& spec, const GammaValue& t, const PLinePoint& a);

/// Valuative closeness of a to a simple point d: radius of join(a, d).
GammaValue rho(const FieldSpec& spec, const PLinePoint& a, const PLinePoint& d);
GammaValue rho(const FieldSpec& spec, const PLinePoint& a, const Divisor& divisor);

/// ψ_D(t, a) = ψ(max(t, ρ(a, D)), a).
PLinePoint psi_D(const FieldSpec& spec, const GammaValue& t, const PLinePoint& a,
                 const Divisor& divisor);

/// ψ_D(0, a): the retraction onto the skeleton of D.
PLinePoint retract(const FieldSpec& spec, const PLinePoint& a, const Divisor& divisor);

/// Convex hull of D and the Gauss point. Vertices are D, the Gauss point and
/// all pairwise joins; edges run child → parent in the ball order, with
/// length equal to the radius difference (∞ at simple points). Divisor
/// vertices are marked and labeled by their normal form.
FiniteMetricTree skeleton(const FieldSpec& spec, const Divisor& divisor);

/// Exact test that x lies on a vertex or an edge of a tree whose vertices all
/// carry points.
bool on_tree(const FieldSpec& spec, const PLinePoint& x, const FiniteMetricTree& tree);

}  // namespace sp1
