#pragma once

#include <string>
#include <vector>

#include "sp1/pline.hpp"
#include "sp1/tree.hpp"
#include "sp1/valfield.hpp"

namespace sp1 {

/// Canonical homeomorphism type of a finite tree relative to its marked
/// vertices, plus its finite metric data.
///
/// `shape` is an AHU-style code of the tree with unmarked degree-2 vertices
/// suppressed, minimized over all roots; marked vertices contribute their
/// labels. `metric` is the same code with merged edge lengths attached.
struct Fingerprint {
  std::string shape;
  std::string metric;
  std::vector<Rational> finite_lengths;  // sorted

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint tree_fingerprint(const FiniteMetricTree& tree);

/// Homeomorphism test; `strict` also requires equal metric codes.
bool tree_iso(const FiniteMetricTree& a, const FiniteMetricTree& b, bool strict = false);

/// Splits edge `edge` with a new unmarked vertex. Finite lengths are halved;
/// an infinite edge becomes a unit edge plus an infinite edge at its simple
/// end.
FiniteMetricTree subdivide_edge(const FiniteMetricTree& tree, std::size_t edge);

/// The same tree with vertex i renumbered to order[i].
FiniteMetricTree renumber(const FiniteMetricTree& tree, const std::vector<std::size_t>& order);

/// A point u·b + v of a divisor family, or the point at infinity.
struct FamilyMember {
  std::string name;
  FieldElem u;
  FieldElem v;
  bool infinity = false;
};

struct FamilyClass {
  Fingerprint fingerprint;
  std::vector<FieldElem> samples;
  FiniteMetricTree representative;
};

/// Classes ordered by shape code; samples keep input order.
struct FamilySweep {
  std::vector<FamilyClass> classes;
};

/// The skeleton of D_b with marked vertices relabeled by member names
/// (comma-joined when members coincide).
FiniteMetricTree family_skeleton(const FieldSpec& spec, const std::vector<FamilyMember>& family,
                                 const FieldElem& b);

FamilySweep family_sweep(const FieldSpec& spec, const std::vector<FamilyMember>& family,
                         const std::vector<FieldElem>& samples);

}  // namespace sp1
