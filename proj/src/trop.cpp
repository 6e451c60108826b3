#include "sp1/trop.hpp"

#include <algorithm>
#include <numeric>

#include "sp1/errors.hpp"
#include "sp1/pline.hpp"

namespace sp1 {

TropPoint trop_normalize(const std::vector<GammaValue>& raw) {
  if (raw.empty()) throw PreconditionError("tropical point needs at least one coordinate");
  GammaValue lowest = *std::min_element(raw.begin(), raw.end());
  if (lowest.is_infinite()) throw PreconditionError("all tropical coordinates are inf");
  TropPoint out;
  for (const auto& g : raw) out.coords.push_back(g - lowest);
  return out;
}

MPoly::MPoly(std::size_t nvars, const std::map<Exponent, FieldElem>& terms) : nvars_(nvars) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

MPoly MPoly::monomial(std::size_t nvars, Exponent e, const FieldElem& c) {
  MPoly m(nvars);
  m.add_term(e, c);
  return m;
}

void MPoly::add_term(const Exponent& e, const FieldElem& c) {
  if (e.size() != nvars_) throw PreconditionError("exponent length does not match variable count");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

long MPoly::degree() const {
  long d = -1;
  for (const auto& [e, c] : terms_) {
    d = std::max(d, static_cast<long>(std::accumulate(e.begin(), e.end(), 0u)));
  }
  return d;
}

bool MPoly::is_homogeneous(unsigned d) const {
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) {
    return std::accumulate(t.first.begin(), t.first.end(), 0u) == d;
  });
}

FieldElem MPoly::operator()(const std::vector<FieldElem>& x) const {
  if (x.size() != nvars_) throw PreconditionError("point dimension does not match variable count");
  FieldElem acc;
  for (const auto& [e, c] : terms_) {
    FieldElem term = c;
    for (std::size_t k = 0; k < nvars_; ++k) {
      for (unsigned i = 0; i < e[k]; ++i) term *= x[k];
    }
    acc += term;
  }
  return acc;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw PreconditionError("variable count mismatch");
  MPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw PreconditionError("variable count mismatch");
  MPoly r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MPoly::Exponent e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly operator*(const FieldElem& s, const MPoly& a) {
  MPoly r(a.nvars_);
  for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
  return r;
}

void PolyTuple::validate() const {
  if (h.empty()) throw PreconditionError("polynomial tuple is empty");
  for (const auto& p : h) {
    if (p.nvars() != h.front().nvars()) throw PreconditionError("tuple variable counts differ");
    if (!p.is_homogeneous(degree)) {
      throw PreconditionError("tuple entry is not homogeneous of degree " + std::to_string(degree));
    }
  }
}

TropPoint tau_h(const FieldSpec& spec, const PolyTuple& h, const std::vector<FieldElem>& x) {
  h.validate();
  std::vector<GammaValue> vals;
  for (const auto& p : h.h) vals.push_back(spec.val(p(x)));
  if (std::all_of(vals.begin(), vals.end(), [](const GammaValue& g) { return g.is_infinite(); })) {
    throw PreconditionError("all h_i vanish at the point (common zero)");
  }
  return trop_normalize(vals);
}

namespace {

// h(1, x) for the std chart, h(y, 1) for the inverse chart.
Poly dehomogenize(const MPoly& h, unsigned d, Chart chart) {
  std::vector<FieldElem> c(d + 1);
  for (const auto& [e, coeff] : h.terms()) {
    c[chart == Chart::Std ? e[1] : e[0]] += coeff;
  }
  return Poly(std::move(c));
}

}  // namespace

TropPoint tau_h(const FieldSpec& spec, const PolyTuple& h, const PLinePoint& x) {
  h.validate();
  if (h.h.front().nvars() != 2) throw PreconditionError("tau_h on P^1 needs bivariate h");
  // In the inverse chart the stored data is the ball B(c', r') in y = 1/x.
  PLinePoint ball{Chart::Std, x.center, x.radius};
  std::vector<GammaValue> vals;
  for (const auto& p : h.h) vals.push_back(gauss_val(spec, dehomogenize(p, h.degree, x.chart), ball));
  if (std::all_of(vals.begin(), vals.end(), [](const GammaValue& g) { return g.is_infinite(); })) {
    throw PreconditionError("all h_i vanish at the point (common zero)");
  }
  return trop_normalize(vals);
}

GammaValue polydisk_gauss_val(const FieldSpec& spec, const MPoly& h,
                              const std::vector<GammaValue>& gamma) {
  if (h.is_zero()) throw PreconditionError("polydisk valuation of the zero polynomial");
  if (gamma.size() != h.nvars()) throw PreconditionError("polyradius length mismatch");
  for (const auto& g : gamma) {
    if (g < GammaValue(0)) throw PreconditionError("polyradius entries must be >= 0");
  }
  GammaValue best = kInfinity;
  for (const auto& [e, c] : h.terms()) {
    GammaValue v = spec.val(c);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] != 0) v += Rational(e[k]) * gamma[k];
    }
    best = std::min(best, v);
  }
  return best;
}

bool semilattice_member(const FieldSpec& spec, const MPoly& h,
                        const std::vector<GammaValue>& gamma, unsigned d) {
  if (h.degree() > static_cast<long>(d)) {
    throw PreconditionError("degree overflow: deg h = " + std::to_string(h.degree()) +
                            " > " + std::to_string(d));
  }
  if (h.is_zero()) return true;
  return polydisk_gauss_val(spec, h, gamma) >= GammaValue(0);
}

}  // namespace sp1
