#include "sp1/newton.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sp1/errors.hpp"

namespace sp1 {

namespace {

struct HullPoint {
  long i;
  Rational w;
};

// Vertices of the lower convex hull, collinear interior points dropped.
std::vector<HullPoint> lower_hull(const std::vector<HullPoint>& pts) {
  std::vector<HullPoint> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull.back();
      Rational cross = Rational(a.i - o.i) * (p.w - o.w) - (a.w - o.w) * Rational(p.i - o.i);
      if (sgn(cross) <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  return hull;
}

}  // namespace

long NewtonPolygon::total_multiplicity() const {
  long n = 0;
  for (const auto& s : segments) n += s.multiplicity;
  return n;
}

NewtonPolygon newton_polygon(std::span<const GammaValue> coeff_vals) {
  std::vector<HullPoint> pts;
  for (std::size_t i = 0; i < coeff_vals.size(); ++i) {
    if (coeff_vals[i].is_finite()) pts.push_back({static_cast<long>(i), coeff_vals[i].finite()});
  }
  if (pts.empty()) throw PreconditionError("newton polygon of the zero polynomial");
  auto hull = lower_hull(pts);
  NewtonPolygon poly;
  for (std::size_t k = 1; k < hull.size(); ++k) {
    long len = hull[k].i - hull[k - 1].i;
    poly.segments.push_back({Rational((hull[k - 1].w - hull[k].w) / len), len});
  }
  std::reverse(poly.segments.begin(), poly.segments.end());
  return poly;
}

long BiPoly::y_degree() const {
  long d = static_cast<long>(y_coeffs.size()) - 1;
  while (d >= 0 && y_coeffs[static_cast<std::size_t>(d)].is_zero()) --d;
  return d;
}

BiPoly operator*(const BiPoly& f, const BiPoly& g) {
  if (f.y_coeffs.empty() || g.y_coeffs.empty()) return {};
  BiPoly out;
  out.y_coeffs.resize(f.y_coeffs.size() + g.y_coeffs.size() - 1);
  for (std::size_t i = 0; i < f.y_coeffs.size(); ++i) {
    for (std::size_t j = 0; j < g.y_coeffs.size(); ++j) {
      out.y_coeffs[i + j] = out.y_coeffs[i + j] + f.y_coeffs[i] * g.y_coeffs[j];
    }
  }
  return out;
}

MinAffine coeff_val_path(const FieldSpec& spec, const Poly& a, const FieldElem& c) {
  if (a.is_zero()) return MinAffine();
  auto shifted = taylor_shift(spec, a, c);
  std::vector<MinAffine::Term> terms;
  for (std::size_t i = 0; i < shifted.size(); ++i) {
    if (shifted[i].is_zero()) continue;
    terms.push_back({Rational(static_cast<long>(i)), spec.val(shifted[i])});
  }
  return MinAffine(std::move(terms));
}

std::vector<std::pair<GammaValue, long>> RootProfile::at(const GammaValue& t) const {
  for (const auto& piece : pieces) {
    if (GammaValue(piece.lo) <= t && t <= piece.hi) {
      std::map<GammaValue, long> acc;
      for (const auto& [aff, mult] : piece.roots) acc[aff(t)] += mult;
      return {acc.begin(), acc.end()};
    }
  }
  throw PreconditionError("t outside the profile domain [0, inf]");
}

namespace {

using Root = RootProfile::Root;

std::vector<Root> merge_roots(std::vector<Root> roots) {
  std::sort(roots.begin(), roots.end(),
            [](const Root& a, const Root& b) { return a.first < b.first; });
  std::vector<Root> out;
  for (auto& r : roots) {
    if (!out.empty() && out.back().first == r.first) {
      out.back().second += r.second;
    } else {
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace

RootProfile root_valuations_along_path(const FieldSpec& spec, const BiPoly& f,
                                       const FieldElem& c) {
  const long deg = f.y_degree();
  if (deg <= 0) throw PreconditionError("degenerate F: y-degree must be positive");

  std::vector<MinAffine> vals;
  std::vector<long> support;  // y-exponents with a_j ≠ 0
  for (long j = 0; j <= deg; ++j) {
    const Poly& a = f.y_coeffs[static_cast<std::size_t>(j)];
    vals.push_back(coeff_val_path(spec, a, c));
    if (!a.is_zero()) support.push_back(j);
  }
  const long zero_roots = support.front();

  std::set<Rational> cuts{Rational(0)};
  for (long j : support) {
    for (const auto& b : vals[static_cast<std::size_t>(j)].breakpoints()) {
      if (sgn(b) > 0) cuts.insert(b);
    }
  }

  // Within each interval the coefficient valuations are affine; the hull can
  // only change where three of the points (j, V_j(t)) become collinear.
  auto affine_on = [&](long j, const Rational& lo) {
    const auto& term = vals[static_cast<std::size_t>(j)].attaining_right(lo);
    return Affine{term.slope, term.intercept};
  };
  std::vector<Rational> base(cuts.begin(), cuts.end());
  for (std::size_t k = 0; k < base.size(); ++k) {
    const Rational& lo = base[k];
    const bool bounded = k + 1 < base.size();
    std::vector<Affine> aff;
    for (long j : support) aff.push_back(affine_on(j, lo));
    for (std::size_t a = 0; a < support.size(); ++a) {
      for (std::size_t b = a + 1; b < support.size(); ++b) {
        for (std::size_t d = b + 1; d < support.size(); ++d) {
          // (V_b − V_a)(j_d − j_a) − (V_d − V_a)(j_b − j_a) = A t + B
          Rational jb = support[b] - support[a], jd = support[d] - support[a];
          Rational A = (aff[b].slope - aff[a].slope) * jd - (aff[d].slope - aff[a].slope) * jb;
          Rational B = (aff[b].intercept.finite() - aff[a].intercept.finite()) * jd -
                       (aff[d].intercept.finite() - aff[a].intercept.finite()) * jb;
          if (sgn(A) == 0) continue;
          Rational t = -B / A;
          if (t > lo && (!bounded || t < base[k + 1])) cuts.insert(t);
        }
      }
    }
  }

  std::vector<Rational> bounds(cuts.begin(), cuts.end());
  RootProfile profile;
  for (std::size_t k = 0; k < bounds.size(); ++k) {
    const Rational& lo = bounds[k];
    const bool bounded = k + 1 < bounds.size();
    Rational sample = bounded ? Rational((lo + bounds[k + 1]) / 2) : Rational(lo + 1);

    std::vector<Affine> aff;
    std::vector<HullPoint> pts;
    for (long j : support) {
      aff.push_back(affine_on(j, lo));
      pts.push_back({j, aff.back()(GammaValue(sample)).finite()});
    }
    auto hull = lower_hull(pts);
    std::vector<Root> roots;
    if (zero_roots > 0) roots.push_back({Affine{Rational(0), kInfinity}, zero_roots});
    std::size_t pos = 0;  // index into support of the current hull vertex
    for (std::size_t h = 1; h < hull.size(); ++h) {
      std::size_t next = pos;
      while (support[next] != hull[h].i) ++next;
      const long len = hull[h].i - hull[h - 1].i;
      Rational slope = (aff[pos].slope - aff[next].slope) / len;
      Rational icpt = (aff[pos].intercept.finite() - aff[next].intercept.finite()) / len;
      roots.push_back({Affine{slope, GammaValue(icpt)}, len});
      pos = next;
    }
    RootProfile::Piece piece{lo, bounded ? GammaValue(bounds[k + 1]) : kInfinity,
                             merge_roots(std::move(roots))};
    if (!profile.pieces.empty() && profile.pieces.back().roots == piece.roots) {
      profile.pieces.back().hi = piece.hi;
    } else {
      profile.pieces.push_back(std::move(piece));
    }
  }
  return profile;
}

std::vector<GammaValue> branch_events(const RootProfile& profile) {
  std::vector<GammaValue> out;
  for (std::size_t k = 1; k < profile.pieces.size(); ++k) {
    if (profile.pieces[k].roots != profile.pieces[k - 1].roots) {
      out.push_back(GammaValue(profile.pieces[k].lo));
    }
  }
  return out;
}

bool quadratic_residual_square(const FieldSpec& spec, const BiPoly& f, const FieldElem& c,
                               const GammaValue& t) {
  if (f.y_degree() != 2) throw PreconditionError("residual square test needs a quadratic cover");
  const Poly& a0 = f.y_coeffs[0];
  const Poly& a1 = f.y_coeffs[1];
  const Poly& a2 = f.y_coeffs[2];
  auto gv = [&](const Poly& p) { return coeff_val_path(spec, p, c)(t); };
  GammaValue lead = gv(a2);
  if (lead.is_infinite()) throw PreconditionError("leading coefficient vanishes at this point");
  std::vector<GammaValue> v{gv(a0), gv(a1), lead};
  auto poly = newton_polygon(v);
  Poly disc = a1 * a1 - FieldElem(4) * (a0 * a2);
  if (disc.is_zero()) return true;
  if (poly.segments.size() != 1 || v[0].is_infinite()) return false;
  const Rational& lambda = poly.segments.front().slope;
  // val(y1 − y2) = (val disc − 2 val a2) / 2
  GammaValue dv = gv(disc);
  if (dv.is_infinite()) return true;
  Rational sep = (dv.finite() - 2 * lead.finite()) / 2;
  return sep > lambda;
}

}  // namespace sp1
