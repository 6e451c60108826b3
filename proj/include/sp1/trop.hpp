#pragma once

#include <map>
#include <vector>

#include "sp1/gamma.hpp"
#include "sp1/tree.hpp"
#include "sp1/valfield.hpp"

namespace sp1 {

/// A point of tropical projective space: coordinates in Γ_∞ with minimum 0.
struct TropPoint {
  std::vector<GammaValue> coords;
  friend bool operator==(const TropPoint&, const TropPoint&) = default;
  friend bool operator<(const TropPoint& a, const TropPoint& b) { return a.coords < b.coords; }
};

/// Subtracts the minimum from every coordinate. Throws PreconditionError if
/// every entry is ∞.
TropPoint trop_normalize(const std::vector<GammaValue>& raw);

/// Sparse polynomial in a fixed number of variables.
class MPoly {
 public:
  using Exponent = std::vector<unsigned>;

  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  MPoly(std::size_t nvars, const std::map<Exponent, FieldElem>& terms);

  static MPoly monomial(std::size_t nvars, Exponent e, const FieldElem& c = FieldElem(1));

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, FieldElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long degree() const;  // -1 for zero
  bool is_homogeneous(unsigned d) const;

  FieldElem operator()(const std::vector<FieldElem>& x) const;

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const FieldElem& s, const MPoly& a);
  friend bool operator==(const MPoly&, const MPoly&) = default;

 private:
  void add_term(const Exponent& e, const FieldElem& c);
  std::size_t nvars_;
  std::map<Exponent, FieldElem> terms_;
};

/// Homogeneous polynomials h_0..h_m of a common degree d in n+1 variables.
struct PolyTuple {
  unsigned degree = 0;
  std::vector<MPoly> h;

  // Throws PreconditionError if empty, if variable counts differ, or if some
  // h_i is not homogeneous of the stated degree.
  void validate() const;
};

/// τ_h at a simple point [x_0 : … : x_n] given by coordinates.
TropPoint tau_h(const FieldSpec& spec, const PolyTuple& h, const std::vector<FieldElem>& x);

/// τ_h at a point of the stable completion of P^1 (bivariate tuple), using
/// Gauss valuations of the dehomogenization in the point's chart.
TropPoint tau_h(const FieldSpec& spec, const PolyTuple& h, const PLinePoint& x);

/// min over monomials c_e x^e of val(c_e) + e·γ: the generic valuation of h
/// at the polydisk of polyradius γ centered at 0.
GammaValue polydisk_gauss_val(const FieldSpec& spec, const MPoly& h,
                              const std::vector<GammaValue>& gamma);

/// Membership of h in the monomial semi-lattice J_d of the polydisk γ.
/// Throws PreconditionError if deg h > d.
bool semilattice_member(const FieldSpec& spec, const MPoly& h,
                        const std::vector<GammaValue>& gamma, unsigned d);

}  // namespace sp1
