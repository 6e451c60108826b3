#include "sp1/pline.hpp"

#include <algorithm>
#include <set>

#include "sp1/errors.hpp"

namespace sp1 {

namespace {

PLinePoint make(Chart chart, FieldElem center, GammaValue radius) {
  return PLinePoint{chart, std::move(center), std::move(radius)};
}

PLinePoint normalize_std(const FieldSpec& spec, const FieldElem& c, const GammaValue& r) {
  GammaValue vc = spec.val(c);
  if (r.is_infinite()) {
    if (vc >= GammaValue(0)) return make(Chart::Std, c, kInfinity);
    return make(Chart::Inv, FieldElem(1) / c, kInfinity);
  }
  const Rational& rr = r.finite();
  if (vc >= r) return make(Chart::Std, FieldElem(0), r);
  if (vc >= GammaValue(0)) return make(Chart::Std, spec.field().truncate(c, rr), r);
  // The ball avoids 0 and lies in {val x < 0}: read it in the inverse chart,
  // where it is B(1/c, r − 2 val c) with 0 < val(1/c) < r − 2 val c.
  Rational inv_r = rr - 2 * vc.finite();
  FieldElem inv_c = FieldElem(1) / c;
  return make(Chart::Inv, spec.field().truncate(inv_c, inv_r), GammaValue(inv_r));
}

PLinePoint normalize_inv(const FieldSpec& spec, const FieldElem& c, const GammaValue& r) {
  GammaValue u = spec.val(c);
  if (r.is_infinite()) {
    if (c.is_zero()) return point_at_infinity();
    if (u > GammaValue(0)) return make(Chart::Inv, c, kInfinity);
    return make(Chart::Std, FieldElem(1) / c, kInfinity);
  }
  const Rational& rr = r.finite();
  if (u >= r) return make(Chart::Std, FieldElem(0), GammaValue(Rational(-rr)));
  if (u > GammaValue(0)) return make(Chart::Inv, spec.field().truncate(c, rr), r);
  return normalize_std(spec, FieldElem(1) / c, GammaValue(Rational(rr - 2 * u.finite())));
}

PLinePoint from_local(const FieldSpec& spec, Chart chart, const FieldElem& c,
                      const GammaValue& r) {
  return chart == Chart::Std ? normalize_std(spec, c, r) : normalize_inv(spec, c, r);
}

}  // namespace

PLinePoint normalize_point(const FieldSpec& spec, Chart chart, const FieldElem& center,
                           const GammaValue& radius) {
  spec.field().check(center);
  return from_local(spec, chart, center, radius);
}

PLinePoint simple_point(const FieldSpec& spec, const FieldElem& a) {
  return normalize_point(spec, Chart::Std, a, kInfinity);
}

PLinePoint point_at_infinity() { return make(Chart::Inv, FieldElem(0), kInfinity); }

PLinePoint gauss_point() { return make(Chart::Std, FieldElem(0), GammaValue(0)); }

LocalView local_view(const PLinePoint& p) {
  if (p.chart == Chart::Std && p.radius.is_finite() && sgn(p.radius.finite()) < 0) {
    return {Chart::Inv, FieldElem(0), GammaValue(Rational(-p.radius.finite()))};
  }
  return {p.chart, p.center, p.radius};
}

PLinePoint join(const FieldSpec& spec, const PLinePoint& x, const PLinePoint& y) {
  LocalView lx = local_view(x);
  LocalView ly = local_view(y);
  if (lx.chart != ly.chart) return gauss_point();
  GammaValue r = std::min({lx.radius, ly.radius, spec.val(lx.center - ly.center)});
  return from_local(spec, lx.chart, lx.center, r);
}

bool contains(const FieldSpec& spec, const PLinePoint& outer, const PLinePoint& inner) {
  return join(spec, outer, inner) == outer;
}

GammaValue metric_d(const FieldSpec& spec, const PLinePoint& x, const PLinePoint& y) {
  if (!x.is_simple() || !y.is_simple()) {
    throw PreconditionError("metric_d expects simple points");
  }
  return local_view(join(spec, x, y)).radius;
}

GammaValue gauss_val(const FieldSpec& spec, const Poly& f, const PLinePoint& b) {
  if (f.is_zero()) return kInfinity;
  FieldElem center = b.center;
  GammaValue radius = b.radius;
  if (b.chart == Chart::Inv) {
    if (b.center.is_zero()) {
      throw PreconditionError("gauss valuation at the point at infinity is undefined");
    }
    // (inv, c', r') with 0 < val c' < r' is the std ball B(1/c', r' − 2 val c').
    center = FieldElem(1) / b.center;
    if (radius.is_finite()) {
      radius = GammaValue(Rational(radius.finite() - 2 * spec.val(b.center).finite()));
    }
  }
  if (radius.is_infinite()) return spec.val(f(center));
  auto a = taylor_shift(spec, f, center);
  GammaValue best = kInfinity;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    best = std::min(best, spec.val(a[i]) + GammaValue(Rational(radius.finite() * long(i))));
  }
  return best;
}

Divisor make_divisor(const FieldSpec& spec, const std::vector<PLinePoint>& points) {
  if (points.empty()) throw PreconditionError("divisor must be nonempty");
  std::set<PLinePoint> seen;
  Divisor d;
  for (const auto& raw : points) {
    PLinePoint p = normalize_point(spec, raw);
    if (!p.is_simple()) throw PreconditionError("divisor points must be simple: " + p.str());
    if (seen.insert(p).second) d.points.push_back(p);
  }
  return d;
}

PLinePoint psi(const FieldSpec& spec, const GammaValue& t, const PLinePoint& a) {
  if (t < GammaValue(0)) throw PreconditionError("psi requires t >= 0");
  LocalView l = local_view(a);
  return from_local(spec, l.chart, l.center, std::min(t, l.radius));
}

GammaValue rho(const FieldSpec& spec, const PLinePoint& a, const PLinePoint& d) {
  return local_view(join(spec, a, d)).radius;
}

GammaValue rho(const FieldSpec& spec, const PLinePoint& a, const Divisor& divisor) {
  if (divisor.points.empty()) throw PreconditionError("divisor must be nonempty");
  GammaValue best(0);
  for (const auto& d : divisor.points) best = std::max(best, rho(spec, a, d));
  return best;
}

PLinePoint psi_D(const FieldSpec& spec, const GammaValue& t, const PLinePoint& a,
                 const Divisor& divisor) {
  return psi(spec, std::max(t, rho(spec, a, divisor)), a);
}

PLinePoint retract(const FieldSpec& spec, const PLinePoint& a, const Divisor& divisor) {
  return psi_D(spec, GammaValue(0), a, divisor);
}

FiniteMetricTree skeleton(const FieldSpec& spec, const Divisor& divisor) {
  if (divisor.points.empty()) throw PreconditionError("divisor must be nonempty");
  std::set<PLinePoint> marked(divisor.points.begin(), divisor.points.end());
  std::set<PLinePoint> verts = marked;
  verts.insert(gauss_point());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<PLinePoint> current(verts.begin(), verts.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        grew |= verts.insert(join(spec, current[i], current[j])).second;
      }
    }
  }
  // Gauss point first, then by (local radius, chart, center).
  std::vector<PLinePoint> order(verts.begin(), verts.end());
  std::stable_sort(order.begin(), order.end(), [](const PLinePoint& a, const PLinePoint& b) {
    LocalView la = local_view(a), lb = local_view(b);
    if (la.radius != lb.radius) return la.radius < lb.radius;
    if (la.chart != lb.chart) return la.chart < lb.chart;
    return la.center < lb.center;
  });

  FiniteMetricTree tree;
  for (const auto& p : order) {
    tree.vertices.push_back({p.str(), marked.count(p) > 0, p});
  }
  for (std::size_t i = 1; i < order.size(); ++i) {
    // The ancestors of a vertex form a chain; its parent is the deepest one.
    std::size_t parent = 0;
    GammaValue parent_r(0);
    for (std::size_t j = 0; j < order.size(); ++j) {
      if (j == i || !contains(spec, order[j], order[i])) continue;
      GammaValue rj = local_view(order[j]).radius;
      if (rj > parent_r) {
        parent = j;
        parent_r = rj;
      }
    }
    GammaValue ri = local_view(order[i]).radius;
    GammaValue len = ri.is_infinite() ? kInfinity : ri - parent_r;
    tree.edges.push_back({i, parent, len});
  }
  return tree;
}

bool on_tree(const FieldSpec& spec, const PLinePoint& x, const FiniteMetricTree& tree) {
  for (const auto& v : tree.vertices) {
    if (!v.point) throw PreconditionError("on_tree needs vertices carrying points");
    if (*v.point == x) return true;
  }
  for (const auto& e : tree.edges) {
    const PLinePoint& a = *tree.vertices[e.a].point;
    const PLinePoint& b = *tree.vertices[e.b].point;
    if (contains(spec, a, x) && contains(spec, x, b)) return true;
    if (contains(spec, b, x) && contains(spec, x, a)) return true;
  }
  return false;
}

}  // namespace sp1
