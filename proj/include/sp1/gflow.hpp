#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sp1/gamma.hpp"
#include "sp1/lp.hpp"
#include "sp1/rational.hpp"

// Piecewise-linear retraction of Γ^w onto the cells where every coordinate is
// linearly bounded by a distinguished coordinate h.
//
// Cells are sign patterns over a list of affine functionals α·x − c. Points
// are vectors indexed like the coordinate list; flows run inside the closed
// nonnegative orthant, where every recession direction is nonnegative.
namespace sp1 {

/// The affine function x ↦ α·x − c.
struct Functional {
  lp::Vec alpha;
  Rational c;

  Rational operator()(const lp::Vec& x) const;
  friend bool operator==(const Functional&, const Functional&) = default;
};

struct ComplexSpec {
  std::vector<std::string> coords;
  std::string h;
  std::vector<Functional> functionals;
  /// Affine functions the flow must leave invariant.
  std::vector<Functional> xi;
  /// Closed constraints α·x ≤ c describing the region W.
  std::vector<Functional> region;
  /// Permutations of the coordinates, as name → name maps.
  std::vector<std::map<std::string, std::string>> symmetries;
  /// Add [x_a = x_b] for every pair of coordinates.
  bool diagonals = true;
};

/// A sign pattern, one of '<', '=', '>' per functional.
struct Cell {
  std::string signs;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend bool operator<(const Cell& a, const Cell& b) { return a.signs < b.signs; }
};

struct CellInfo {
  std::size_t dimension = 0;
  bool d0 = false;
  lp::Vec direction;  // e_C; zero on D_0 cells
};

struct FlowStep {
  GammaValue time;
  Cell cell;
  lp::Vec direction;
};

struct FlowResult {
  std::vector<FlowStep> trajectory;
  Cell final_cell;  // empty signs when x_h = ∞
  std::vector<GammaValue> endpoint;
  /// ∞-norm Lipschitz constant of the endpoint map along this cell chain.
  Rational lipschitz = 1;
};

/// Per-coordinate bounds x_i ≤ m_i·x_h + c_i valid on W_0 ∩ W ∩ Γ^w.
struct CoreBounds {
  std::vector<Integer> m;
  std::vector<Rational> c;
};

class CellComplex {
 public:
  std::size_t dim() const { return coords_.size(); }
  const std::vector<std::string>& coords() const { return coords_; }
  std::size_t h() const { return h_; }
  const std::vector<Functional>& functionals() const { return functionals_; }
  const std::vector<Functional>& xi() const { return xi_; }

  /// Constraint rows of the cell (strict for '<' and '>').
  std::vector<lp::Constraint> rows(const Cell& cell) const;
  /// Rows of the recession cone of the cell's closure.
  std::vector<lp::Constraint> recession_rows(const Cell& cell) const;
  bool feasible(const Cell& cell) const;
  bool in_region(const Cell& cell) const;
  bool in_region(const lp::Vec& x) const;

  /// False iff sign `s` on functional j puts a cell outside the region W.
  bool region_allows(std::size_t j, char s) const;
  /// True iff the cell lies in the closed nonnegative orthant.
  bool in_orthant(const Cell& cell) const;

  /// Dimension, D_0 membership and flow direction; memoized per pattern.
  const CellInfo& info(const Cell& cell) const;
  /// Dimension and D_0 membership only; memoized per pattern.
  std::pair<std::size_t, bool> kind(const Cell& cell) const;

 private:
  friend CellComplex build_complex(const ComplexSpec& spec);

  std::vector<std::string> coords_;
  std::size_t h_ = 0;
  std::vector<Functional> functionals_;
  std::vector<Functional> xi_;
  // Region constraint k is functional region_[k].first; the cell lies in W
  // iff that sign is '=' or region_[k].second.
  std::vector<std::pair<std::size_t, char>> region_;
  // Index of the functional x_i for each coordinate i.
  std::vector<std::size_t> coord_functional_;

  mutable std::shared_ptr<std::mutex> mutex_ = std::make_shared<std::mutex>();
  mutable std::shared_ptr<std::map<std::string, CellInfo>> cache_ =
      std::make_shared<std::map<std::string, CellInfo>>();
  mutable std::shared_ptr<std::map<std::string, std::pair<std::size_t, bool>>> kind_cache_ =
      std::make_shared<std::map<std::string, std::pair<std::size_t, bool>>>();
};

/// Closes the functional list under the symmetries, adds the coordinate
/// hyperplanes (and diagonals when requested) and the region constraints.
/// Functionals are scaled so the first nonzero coefficient is 1 and
/// deduplicated up to sign.
CellComplex build_complex(const ComplexSpec& spec);

Cell locate_cell(const CellComplex& k, const lp::Vec& x);

bool classify_D0(const CellComplex& k, const Cell& cell);

lp::Vec recession_barycenter(const CellComplex& k, const Cell& cell);

/// First time s > 0 at which x − s·e leaves the open cell; ∞ if never.
GammaValue exit_time(const CellComplex& k, const Cell& cell, const lp::Vec& e, const lp::Vec& x);

/// H_Γ(t, x). Coordinates must be finite and nonnegative except that
/// x_h = ∞ marks a fixed point.
FlowResult flow(const CellComplex& k, const GammaValue& t, const std::vector<GammaValue>& x);

bool final_image_membership(const CellComplex& k, const std::vector<GammaValue>& x);

/// Every nonempty cell, in lexicographic order of sign patterns.
std::vector<Cell> enumerate_cells(const CellComplex& k);

/// Nonempty cells in the closed nonnegative orthant and in the region W.
std::vector<Cell> enumerate_flow_cells(const CellComplex& k);

CoreBounds compact_core(const CellComplex& k);
/// The same, reusing the output of enumerate_flow_cells.
CoreBounds compact_core(const CellComplex& k, std::vector<Cell> flow_cells);

}  // namespace sp1
