#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sp1/rational.hpp"

// Exact linear programming over Q for the small systems that arise from cell
// decompositions: dense two-phase simplex with Bland's rule.
namespace sp1::lp {

using Vec = std::vector<Rational>;

enum class Rel { Le, Ge, Eq, Lt, Gt };

/// a·x rel b
struct Constraint {
  Vec a;
  Rel rel;
  Rational b;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  Rational value;
  Vec x;
};

/// Maximizes objective·x over x ∈ Q^n, or over x ≥ 0 when `nonneg` is set.
/// Strict relations are not allowed here (PreconditionError).
Result maximize(const Vec& objective, std::size_t n, const std::vector<Constraint>& rows,
                bool nonneg = false);

/// A point satisfying every row, strict ones strictly; nullopt if none exists.
std::optional<Vec> find_point(std::size_t n, const std::vector<Constraint>& rows, bool nonneg = false);

/// True iff every coordinate is bounded above and below on the (nonempty)
/// polyhedron defined by weak rows.
bool is_bounded(std::size_t n, const std::vector<Constraint>& rows);

/// Vertices of a pointed polyhedron given by weak rows, in lexicographic order.
std::vector<Vec> vertices(std::size_t n, const std::vector<Constraint>& rows);

/// Rank of a rational matrix given as rows.
std::size_t rank(std::vector<Vec> m);

}  // namespace sp1::lp
