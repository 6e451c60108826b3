#include "sp1/lp.hpp"

#include <algorithm>
#include <set>

#include "sp1/errors.hpp"

namespace sp1::lp {

namespace {

struct Tableau {
  std::vector<Vec> t;  // m × cols
  Vec rhs;
  std::vector<std::size_t> basis;
  std::size_t cols = 0;

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / t[r][c];
    for (auto& v : t[r]) v *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || sgn(t[i][c]) == 0) continue;
      Rational f = t[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        if (sgn(t[r][j]) != 0) t[i][j] -= f * t[r][j];
      }
      rhs[i] -= f * rhs[r];
    }
    basis[r] = c;
  }

  void remove_row(std::size_t r) {
    t.erase(t.begin() + static_cast<long>(r));
    rhs.erase(rhs.begin() + static_cast<long>(r));
    basis.erase(basis.begin() + static_cast<long>(r));
  }

  // Maximizes cost over the columns below `limit`; Bland's rule throughout.
  Status run(const Vec& cost, std::size_t limit) {
    for (;;) {
      std::size_t entering = limit;
      for (std::size_t j = 0; j < limit && entering == limit; ++j) {
        if (std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
        Rational r = cost[j];
        for (std::size_t i = 0; i < t.size(); ++i) {
          if (sgn(t[i][j]) != 0) r -= cost[basis[i]] * t[i][j];
        }
        if (sgn(r) > 0) entering = j;
      }
      if (entering == limit) return Status::Optimal;
      std::size_t leave = t.size();
      Rational best;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (sgn(t[i][entering]) <= 0) continue;
        Rational ratio = rhs[i] / t[i][entering];
        if (leave == t.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == t.size()) return Status::Unbounded;
      pivot(leave, entering);
    }
  }

  Rational objective(const Vec& cost) const {
    Rational z = 0;
    for (std::size_t i = 0; i < t.size(); ++i) z += cost[basis[i]] * rhs[i];
    return z;
  }
};

}  // namespace

Result maximize(const Vec& objective, std::size_t n, const std::vector<Constraint>& rows, bool nonneg) {
  if (objective.size() != n) throw PreconditionError("objective length mismatch");
  std::size_t slacks = 0;
  for (const auto& r : rows) {
    if (r.a.size() != n) throw PreconditionError("constraint length mismatch");
    if (r.rel == Rel::Lt || r.rel == Rel::Gt) {
      throw PreconditionError("maximize accepts weak constraints only");
    }
    if (r.rel != Rel::Eq) ++slacks;
  }
  const std::size_t m = rows.size();
  // Free variables are split as x = x⁺ − x⁻; nonnegative ones keep one column.
  const std::size_t vars = nonneg ? n : 2 * n;
  const std::size_t art0 = vars + slacks;
  Tableau tab;
  tab.cols = art0 + m;
  tab.t.assign(m, Vec(tab.cols));
  tab.rhs.assign(m, Rational(0));
  tab.basis.resize(m);
  std::size_t slack = vars;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& r = rows[i];
    Vec& row = tab.t[i];
    for (std::size_t k = 0; k < n; ++k) {
      row[k] = r.a[k];
      if (!nonneg) row[n + k] = -r.a[k];
    }
    if (r.rel == Rel::Le) row[slack++] = 1;
    if (r.rel == Rel::Ge) row[slack++] = -1;
    tab.rhs[i] = r.b;
    if (sgn(r.b) < 0) {
      for (auto& v : row) v = -v;
      tab.rhs[i] = -r.b;
    }
    row[art0 + i] = 1;
    tab.basis[i] = art0 + i;
  }

  Vec phase1(tab.cols);
  for (std::size_t i = 0; i < m; ++i) phase1[art0 + i] = -1;
  tab.run(phase1, tab.cols);
  Result res;
  if (sgn(tab.objective(phase1)) < 0) {
    res.status = Status::Infeasible;
    return res;
  }
  // Drive remaining (zero-level) artificials out of the basis.
  for (std::size_t i = tab.t.size(); i-- > 0;) {
    if (tab.basis[i] < art0) continue;
    std::size_t col = art0;
    for (std::size_t j = 0; j < art0 && col == art0; ++j) {
      if (sgn(tab.t[i][j]) != 0) col = j;
    }
    if (col == art0) {
      tab.remove_row(i);
    } else {
      tab.pivot(i, col);
    }
  }

  Vec phase2(tab.cols);
  for (std::size_t k = 0; k < n; ++k) {
    phase2[k] = objective[k];
    if (!nonneg) phase2[n + k] = -objective[k];
  }
  Status st = tab.run(phase2, art0);
  res.status = st;
  if (st != Status::Optimal) return res;
  res.value = tab.objective(phase2);
  res.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < tab.t.size(); ++i) {
    std::size_t b = tab.basis[i];
    if (b < n) res.x[b] += tab.rhs[i];
    else if (b < vars) res.x[b - n] -= tab.rhs[i];
  }
  return res;
}

std::optional<Vec> find_point(std::size_t n, const std::vector<Constraint>& rows, bool nonneg) {
  std::vector<Constraint> weak;
  bool strict = false;
  for (const auto& r : rows) {
    Vec a = r.a;
    a.push_back(Rational(0));
    switch (r.rel) {
      case Rel::Lt:
        a.back() = 1;
        weak.push_back({a, Rel::Le, r.b});
        strict = true;
        break;
      case Rel::Gt:
        a.back() = -1;
        weak.push_back({a, Rel::Ge, r.b});
        strict = true;
        break;
      default:
        weak.push_back({a, r.rel, r.b});
    }
  }
  Vec cap(n + 1);
  cap[n] = 1;
  weak.push_back({cap, Rel::Le, Rational(1)});
  Vec obj(n + 1);
  if (strict) obj[n] = 1;
  Result res = maximize(obj, n + 1, weak, nonneg);
  if (res.status != Status::Optimal) return std::nullopt;
  if (strict && sgn(res.value) <= 0) return std::nullopt;
  res.x.pop_back();
  return res.x;
}

bool is_bounded(std::size_t n, const std::vector<Constraint>& rows) {
  for (std::size_t k = 0; k < n; ++k) {
    for (int s : {1, -1}) {
      Vec obj(n);
      obj[k] = s;
      if (maximize(obj, n, rows).status == Status::Unbounded) return false;
    }
  }
  return true;
}

std::size_t rank(std::vector<Vec> m) {
  std::size_t r = 0;
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && sgn(m[piv][c]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

namespace {

// Unique solution of A x = b (A given as rows), if A has full column rank and
// the system is consistent.
std::optional<Vec> solve_unique(std::vector<Vec> a, Vec b, std::size_t n) {
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < n && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && sgn(a[piv][c]) == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    std::swap(b[r], b[piv]);
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < n; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivots.push_back(c);
    ++r;
  }
  if (r < n) return std::nullopt;
  for (std::size_t i = r; i < a.size(); ++i) {
    if (sgn(b[i]) != 0) return std::nullopt;
  }
  Vec x(n);
  for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = b[i];
  return x;
}

Rational dot(const Vec& a, const Vec& x) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * x[k];
  return s;
}

bool satisfies(const Constraint& c, const Vec& x) {
  Rational v = dot(c.a, x);
  switch (c.rel) {
    case Rel::Le: return v <= c.b;
    case Rel::Ge: return v >= c.b;
    case Rel::Eq: return v == c.b;
    case Rel::Lt: return v < c.b;
    case Rel::Gt: return v > c.b;
  }
  return false;
}

}  // namespace

std::vector<Vec> vertices(std::size_t n, const std::vector<Constraint>& rows) {
  std::vector<Vec> eq_a;
  Vec eq_b;
  std::vector<const Constraint*> ineq;
  for (const auto& r : rows) {
    if (r.rel == Rel::Lt || r.rel == Rel::Gt) {
      throw PreconditionError("vertex enumeration accepts weak constraints only");
    }
    if (r.rel == Rel::Eq) {
      eq_a.push_back(r.a);
      eq_b.push_back(r.b);
    } else {
      ineq.push_back(&r);
    }
  }
  const std::size_t k = rank(eq_a);
  if (k > n) return {};
  const std::size_t need = n - k;
  std::set<Vec> found;
  if (need > ineq.size()) return {};
  // Choose `need` inequality rows to be tight.
  std::vector<std::size_t> pick(need);
  for (std::size_t i = 0; i < need; ++i) pick[i] = i;
  for (;;) {
    std::vector<Vec> a = eq_a;
    Vec b = eq_b;
    for (std::size_t i : pick) {
      a.push_back(ineq[i]->a);
      b.push_back(ineq[i]->b);
    }
    if (auto x = solve_unique(a, b, n)) {
      bool ok = std::all_of(rows.begin(), rows.end(), [&](const Constraint& c) { return satisfies(c, *x); });
      if (ok) found.insert(*x);
    }
    // next combination
    std::size_t i = need;
    while (i > 0 && pick[i - 1] == ineq.size() - need + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < need; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {found.begin(), found.end()};
}

}  // namespace sp1::lp
