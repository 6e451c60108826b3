#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sp1/gamma.hpp"
#include "sp1/valfield.hpp"

namespace sp1 {

enum class Chart { Std, Inv };

/// A point of the stable completion of P^1: the generic point of a closed
/// ball, or a simple point when radius = ∞. Compare only normalized points.
struct PLinePoint {
  Chart chart = Chart::Std;
  FieldElem center;
  GammaValue radius = kInfinity;

  bool is_simple() const { return radius.is_infinite(); }
  friend bool operator==(const PLinePoint&, const PLinePoint&) = default;
  friend bool operator<(const PLinePoint& a, const PLinePoint& b);
  std::string str() const;
};

/// A finite tree with Γ_∞ edge lengths.
///
/// Marked vertices carry a label that identifies them across trees (divisor
/// points, family members); unmarked vertices are anonymous for the purposes
/// of fingerprints.
struct FiniteMetricTree {
  struct Vertex {
    std::string label;
    bool marked = false;
    std::optional<PLinePoint> point;
  };
  struct Edge {
    std::size_t a;
    std::size_t b;
    GammaValue length;
  };

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  // Throws PreconditionError unless connected, acyclic, with positive lengths.
  void validate() const;
  std::vector<std::vector<std::size_t>> adjacency() const;
  std::string to_dot() const;
};

}  // namespace sp1
