#include "sp1/gflow.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "sp1/errors.hpp"

namespace sp1 {

namespace {

constexpr std::size_t kMaxCoords = 12;

Rational dot(const lp::Vec& a, const lp::Vec& x) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * x[k];
  return s;
}

char sign_char(const Rational& v) { return sgn(v) < 0 ? '<' : (sgn(v) > 0 ? '>' : '='); }

// Scales so the first nonzero coefficient is 1; returns the scale's sign.
int normalize(Functional& f) {
  auto it = std::find_if(f.alpha.begin(), f.alpha.end(), [](const Rational& a) { return sgn(a) != 0; });
  if (it == f.alpha.end()) throw PreconditionError("functional with zero coefficient vector");
  Rational s = *it;
  for (auto& a : f.alpha) a /= s;
  f.c /= s;
  return sgn(s);
}

Functional permute(const Functional& f, const std::vector<std::size_t>& sigma) {
  Functional g{lp::Vec(f.alpha.size()), f.c};
  for (std::size_t a = 0; a < sigma.size(); ++a) g.alpha[sigma[a]] = f.alpha[a];
  return g;
}

struct Exit {
  GammaValue time = kInfinity;
  std::size_t functional = 0;
};

Exit exit_info(const CellComplex& k, const Cell& cell, const lp::Vec& e, const lp::Vec& x) {
  Exit best;
  for (std::size_t j = 0; j < k.functionals().size(); ++j) {
    const char s = cell.signs[j];
    if (s == '=') continue;
    const auto& f = k.functionals()[j];
    Rational value = f(x);
    Rational rate = dot(f.alpha, e);
    if (s == '<') {
      value = -value;
      rate = -rate;
    }
    if (sgn(rate) <= 0) continue;
    GammaValue ratio(Rational(value / rate));
    if (ratio < best.time) best = {ratio, j};
  }
  return best;
}

lp::Vec unit(std::size_t n, std::size_t i, long v = 1) {
  lp::Vec e(n);
  e[i] = v;
  return e;
}

std::size_t cell_dimension(const CellComplex& k, const Cell& cell) {
  std::vector<lp::Vec> eq;
  for (std::size_t j = 0; j < cell.signs.size(); ++j) {
    if (cell.signs[j] == '=') eq.push_back(k.functionals()[j].alpha);
  }
  return k.dim() - lp::rank(eq);
}

bool compute_d0(const CellComplex& k, const Cell& cell) {
  const std::size_t n = k.dim();
  const std::size_t h = k.h();
  auto rec = k.recession_rows(cell);
  rec.push_back({unit(n, h), lp::Rel::Eq, Rational(0)});
  if (k.in_orthant(cell)) {
    // The cone lies in the orthant, so it is pointed and meets [v_h = 0]
    // only at 0 iff Σ_{i≠h} v_i vanishes there.
    lp::Vec obj(n, Rational(1));
    obj[h] = 0;
    auto r = lp::maximize(obj, n, rec, true);
    return r.status == lp::Status::Optimal && sgn(r.value) == 0;
  }
  auto with_h = [&](long value) {
    auto rows = rec;
    rows.back().b = value;
    return rows;
  };
  // x_i ≤ m·x_h + c holds on the cell iff v_i ≤ m·v_h on its recession cone.
  for (std::size_t i = 0; i < n; ++i) {
    if (i == h) continue;
    const auto obj = unit(n, i);
    auto flat = lp::maximize(obj, n, rec);
    if (flat.status == lp::Status::Unbounded || sgn(flat.value) > 0) return false;
    auto up = lp::maximize(obj, n, with_h(1));
    if (up.status == lp::Status::Unbounded) return false;
    Integer m_lo = 0;
    if (up.status == lp::Status::Optimal) m_lo = std::max(Integer(0), ceil(up.value));
    auto down = lp::maximize(obj, n, with_h(-1));
    if (down.status == lp::Status::Unbounded) return false;
    if (down.status == lp::Status::Optimal && Rational(m_lo) > -down.value) return false;
  }
  return true;
}

lp::Vec compute_direction(const CellComplex& k, const Cell& cell) {
  const std::size_t n = k.dim();
  auto slice = k.recession_rows(cell);
  slice.push_back({unit(n, k.h()), lp::Rel::Eq, Rational(0)});
  slice.push_back({lp::Vec(n, Rational(1)), lp::Rel::Eq, Rational(1)});
  if (!k.in_orthant(cell) && !lp::is_bounded(n, slice)) {
    throw InconsistencyError("recession slice of cell " + cell.signs + " is unbounded");
  }
  auto verts = lp::vertices(n, slice);
  if (verts.empty()) {
    throw InconsistencyError("recession slice of non-D_0 cell " + cell.signs + " is empty");
  }
  lp::Vec direction(n, Rational(0));
  for (const auto& v : verts) {
    for (std::size_t i = 0; i < n; ++i) direction[i] += v[i];
  }
  for (auto& c : direction) c /= static_cast<long>(verts.size());
  return direction;
}

// Depth-first search over sign patterns. `witness` satisfies the rows so far;
// the child containing it needs no feasibility test.
void enumerate(const CellComplex& k, std::vector<lp::Constraint>& rows, std::string& signs,
               const lp::Vec& witness, bool flow_cells, std::vector<Cell>& out) {
  const std::size_t j = signs.size();
  if (j == k.functionals().size()) {
    out.push_back({signs});
    return;
  }
  const auto& f = k.functionals()[j];
  const char here = sign_char(f(witness));
  for (char s : {'<', '=', '>'}) {
    if (flow_cells && !k.region_allows(j, s)) continue;
    lp::Rel rel = s == '<' ? lp::Rel::Lt : (s == '=' ? lp::Rel::Eq : lp::Rel::Gt);
    rows.push_back({f.alpha, rel, f.c});
    std::optional<lp::Vec> x;
    if (s == here) {
      x = witness;
    } else {
      x = lp::find_point(k.dim(), rows, flow_cells);
    }
    if (x) {
      signs.push_back(s);
      enumerate(k, rows, signs, *x, flow_cells, out);
      signs.pop_back();
    }
    rows.pop_back();
  }
}

}  // namespace

Rational Functional::operator()(const lp::Vec& x) const { return dot(alpha, x) - c; }

CellComplex build_complex(const ComplexSpec& spec) {
  const std::size_t n = spec.coords.size();
  if (n == 0) throw PreconditionError("coordinate set w is empty");
  if (n > kMaxCoords) throw PreconditionError("coordinate set w exceeds 12 entries");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(spec.coords[i], i).second) {
      throw PreconditionError("duplicate coordinate name " + spec.coords[i]);
    }
  }
  auto h = index.find(spec.h);
  if (h == index.end()) throw PreconditionError("distinguished coordinate h is not in w");

  auto check_len = [&](const Functional& f) {
    if (f.alpha.size() != n) throw PreconditionError("functional length does not match w");
  };

  CellComplex k;
  k.coords_ = spec.coords;
  k.h_ = h->second;

  std::vector<Functional> queue;
  for (const auto& f : spec.functionals) {
    check_len(f);
    queue.push_back(f);
  }
  for (std::size_t a = 0; a < n; ++a) queue.push_back({unit(n, a), Rational(0)});
  if (spec.diagonals) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        lp::Vec alpha(n);
        alpha[a] = 1;
        alpha[b] = -1;
        queue.push_back({alpha, Rational(0)});
      }
    }
  }
  for (const auto& f : spec.region) {
    check_len(f);
    queue.push_back(f);
  }

  std::vector<std::vector<std::size_t>> perms;
  for (const auto& g : spec.symmetries) {
    std::vector<std::size_t> sigma(n);
    for (std::size_t a = 0; a < n; ++a) sigma[a] = a;
    for (const auto& [from, to] : g) {
      auto f = index.find(from);
      auto t = index.find(to);
      if (f == index.end() || t == index.end()) {
        throw PreconditionError("symmetry names a coordinate outside w");
      }
      sigma[f->second] = t->second;
    }
    if (std::set<std::size_t>(sigma.begin(), sigma.end()).size() != n) {
      throw PreconditionError("symmetry is not a permutation of w");
    }
    perms.push_back(std::move(sigma));
  }

  std::set<std::pair<lp::Vec, Rational>> seen;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Functional f = queue[q];
    normalize(f);
    if (!seen.insert({f.alpha, f.c}).second) continue;
    k.functionals_.push_back(f);
    for (const auto& sigma : perms) queue.push_back(permute(f, sigma));
  }

  for (const auto& r : spec.region) {
    Functional f = r;
    const int s = normalize(f);
    auto it = std::find(k.functionals_.begin(), k.functionals_.end(), f);
    k.region_.push_back({static_cast<std::size_t>(it - k.functionals_.begin()), s > 0 ? '<' : '>'});
  }
  for (const auto& xi : spec.xi) {
    check_len(xi);
    k.xi_.push_back(xi);
  }
  for (std::size_t a = 0; a < n; ++a) {
    const Functional axis{unit(n, a), Rational(0)};
    auto it = std::find(k.functionals_.begin(), k.functionals_.end(), axis);
    k.coord_functional_.push_back(static_cast<std::size_t>(it - k.functionals_.begin()));
  }
  return k;
}

std::vector<lp::Constraint> CellComplex::rows(const Cell& cell) const {
  if (cell.signs.size() != functionals_.size()) throw PreconditionError("sign pattern length mismatch");
  std::vector<lp::Constraint> out;
  for (std::size_t j = 0; j < functionals_.size(); ++j) {
    const char s = cell.signs[j];
    lp::Rel rel = s == '<' ? lp::Rel::Lt : (s == '=' ? lp::Rel::Eq : lp::Rel::Gt);
    out.push_back({functionals_[j].alpha, rel, functionals_[j].c});
  }
  return out;
}

std::vector<lp::Constraint> CellComplex::recession_rows(const Cell& cell) const {
  if (cell.signs.size() != functionals_.size()) throw PreconditionError("sign pattern length mismatch");
  std::vector<lp::Constraint> out;
  for (std::size_t j = 0; j < functionals_.size(); ++j) {
    const char s = cell.signs[j];
    lp::Rel rel = s == '<' ? lp::Rel::Le : (s == '=' ? lp::Rel::Eq : lp::Rel::Ge);
    out.push_back({functionals_[j].alpha, rel, Rational(0)});
  }
  return out;
}

bool CellComplex::feasible(const Cell& cell) const { return lp::find_point(dim(), rows(cell)).has_value(); }

bool CellComplex::in_region(const Cell& cell) const {
  return std::all_of(region_.begin(), region_.end(), [&](const auto& r) {
    return cell.signs[r.first] == '=' || cell.signs[r.first] == r.second;
  });
}

bool CellComplex::in_region(const lp::Vec& x) const { return in_region(locate_cell(*this, x)); }

bool CellComplex::region_allows(std::size_t j, char s) const {
  return std::all_of(region_.begin(), region_.end(),
                     [&](const auto& r) { return r.first != j || s == '=' || s == r.second; });
}

bool CellComplex::in_orthant(const Cell& cell) const {
  return std::all_of(coord_functional_.begin(), coord_functional_.end(),
                     [&](std::size_t j) { return cell.signs.at(j) != '<'; });
}

std::pair<std::size_t, bool> CellComplex::kind(const Cell& cell) const {
  {
    std::lock_guard<std::mutex> lock(*mutex_);
    auto it = kind_cache_->find(cell.signs);
    if (it != kind_cache_->end()) return it->second;
  }
  std::pair<std::size_t, bool> computed{cell_dimension(*this, cell), compute_d0(*this, cell)};
  std::lock_guard<std::mutex> lock(*mutex_);
  return kind_cache_->emplace(cell.signs, computed).first->second;
}

const CellInfo& CellComplex::info(const Cell& cell) const {
  {
    std::lock_guard<std::mutex> lock(*mutex_);
    auto it = cache_->find(cell.signs);
    if (it != cache_->end()) return it->second;
  }
  CellInfo computed;
  std::tie(computed.dimension, computed.d0) = kind(cell);
  computed.direction = computed.d0 ? lp::Vec(dim(), Rational(0)) : compute_direction(*this, cell);
  std::lock_guard<std::mutex> lock(*mutex_);
  return cache_->emplace(cell.signs, std::move(computed)).first->second;
}

Cell locate_cell(const CellComplex& k, const lp::Vec& x) {
  if (x.size() != k.dim()) throw PreconditionError("point dimension does not match w");
  Cell cell;
  for (const auto& f : k.functionals()) cell.signs.push_back(sign_char(f(x)));
  return cell;
}

bool classify_D0(const CellComplex& k, const Cell& cell) { return k.kind(cell).second; }

lp::Vec recession_barycenter(const CellComplex& k, const Cell& cell) { return k.info(cell).direction; }

GammaValue exit_time(const CellComplex& k, const Cell& cell, const lp::Vec& e, const lp::Vec& x) {
  return exit_info(k, cell, e, x).time;
}

FlowResult flow(const CellComplex& k, const GammaValue& t, const std::vector<GammaValue>& x) {
  const std::size_t n = k.dim();
  if (x.size() != n) throw PreconditionError("point dimension does not match w");
  if (t < GammaValue(0)) throw PreconditionError("flow time must be >= 0");
  FlowResult result;
  result.endpoint = x;
  if (x[k.h()].is_infinite()) return result;

  lp::Vec p(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_infinite()) throw PreconditionError("only the h coordinate may be inf");
    if (sgn(x[i].finite()) < 0) throw PreconditionError("start point must lie in the nonnegative orthant");
    p[i] = x[i].finite();
  }
  if (!k.in_region(p)) throw PreconditionError("start point lies outside the region W");

  GammaValue remaining = t;
  std::optional<std::size_t> prev_dim;
  for (;;) {
    Cell cell = locate_cell(k, p);
    const CellInfo& info = k.info(cell);
    if (prev_dim && info.dimension >= *prev_dim) {
      throw InconsistencyError("visited cell dimension did not decrease at " + cell.signs);
    }
    result.final_cell = cell;
    if (info.d0 || remaining == GammaValue(0)) break;
    const lp::Vec& e = info.direction;
    for (std::size_t i = 0; i < k.xi().size(); ++i) {
      if (sgn(dot(k.xi()[i].alpha, e)) != 0) {
        throw PreconditionError("xi_" + std::to_string(i) + " is not invariant along the flow direction of cell " +
                                cell.signs);
      }
    }
    Exit ex = exit_info(k, cell, e, p);
    if (ex.time == GammaValue(0)) {
      throw InconsistencyError("flow leaves cell " + cell.signs + " immediately (re-entry hazard)");
    }
    if (ex.time.is_infinite() && remaining.is_infinite()) {
      throw InconsistencyError("non-terminating trajectory in cell " + cell.signs);
    }
    const bool exits = ex.time <= remaining;
    const Rational step = exits ? ex.time.finite() : remaining.finite();
    for (std::size_t i = 0; i < n; ++i) p[i] -= step * e[i];
    result.trajectory.push_back({GammaValue(step), cell, e});
    if (exits) {
      const auto& alpha = k.functionals()[ex.functional].alpha;
      Rational norm_e = 0, norm_a = 0;
      for (const auto& v : e) norm_e = std::max(norm_e, Rational(abs(v)));
      for (const auto& v : alpha) norm_a += abs(v);
      result.lipschitz *= 1 + norm_e * norm_a / abs(dot(alpha, e));
    }
    remaining = remaining.is_infinite() ? remaining : GammaValue(Rational(remaining.finite() - step));
    prev_dim = info.dimension;
    if (!exits) {
      result.final_cell = locate_cell(k, p);
      break;
    }
  }
  for (std::size_t i = 0; i < n; ++i) result.endpoint[i] = GammaValue(p[i]);
  return result;
}

bool final_image_membership(const CellComplex& k, const std::vector<GammaValue>& x) {
  if (x.size() != k.dim()) throw PreconditionError("point dimension does not match w");
  if (x[k.h()].is_infinite()) return true;
  lp::Vec p;
  for (const auto& g : x) p.push_back(g.finite());
  return classify_D0(k, locate_cell(k, p));
}

std::vector<Cell> enumerate_cells(const CellComplex& k) {
  std::vector<lp::Constraint> rows;
  std::string signs;
  std::vector<Cell> out;
  enumerate(k, rows, signs, lp::Vec(k.dim(), Rational(0)), false, out);
  return out;
}

std::vector<Cell> enumerate_flow_cells(const CellComplex& k) {
  std::vector<lp::Constraint> rows;
  std::string signs;
  std::vector<Cell> out;
  enumerate(k, rows, signs, lp::Vec(k.dim(), Rational(0)), true, out);
  return out;
}

CoreBounds compact_core(const CellComplex& k) { return compact_core(k, enumerate_flow_cells(k)); }

CoreBounds compact_core(const CellComplex& k, std::vector<Cell> cells) {
  const std::size_t n = k.dim();
  const std::size_t h = k.h();
  auto equalities = [](const Cell& c) { return std::count(c.signs.begin(), c.signs.end(), '='); };
  std::stable_sort(cells.begin(), cells.end(),
                   [&](const Cell& a, const Cell& b) { return equalities(a) < equalities(b); });
  // A cell whose pattern turns into a D_0 flow cell by relaxing one '=' lies in
  // the closure of that cell, so it is in D_0 and adds no new bound. Only the
  // remaining D_0 cells need linear programs.
  std::set<std::string> d0;
  std::vector<Cell> core;
  for (const auto& c : cells) {
    bool covered = false;
    for (std::size_t j = 0; j < c.signs.size() && !covered; ++j) {
      if (c.signs[j] != '=') continue;
      for (char s : {'<', '>'}) {
        std::string flipped = c.signs;
        flipped[j] = s;
        covered = covered || d0.count(flipped) > 0;
      }
    }
    if (covered || classify_D0(k, c)) d0.insert(c.signs);
    if (!covered && classify_D0(k, c)) core.push_back(c);
  }
  CoreBounds b{std::vector<Integer>(n, Integer(0)), std::vector<Rational>(n, Rational(0))};
  for (const auto& c : core) {
    auto rows = k.recession_rows(c);
    rows.push_back({unit(n, h), lp::Rel::Eq, Rational(1)});
    for (std::size_t i = 0; i < n; ++i) {
      auto r = lp::maximize(unit(n, i), n, rows, true);
      if (r.status == lp::Status::Optimal) b.m[i] = std::max(b.m[i], ceil(r.value));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool first = true;
    for (const auto& c : core) {
      auto rows = k.rows(c);
      for (auto& r : rows) {
        if (r.rel == lp::Rel::Lt) r.rel = lp::Rel::Le;
        if (r.rel == lp::Rel::Gt) r.rel = lp::Rel::Ge;
      }
      lp::Vec obj = unit(n, i);
      obj[h] -= Rational(b.m[i]);
      auto r = lp::maximize(obj, n, rows, true);
      if (r.status == lp::Status::Unbounded) {
        throw InconsistencyError("D_0 cell " + c.signs + " violates the linear bound for " + k.coords()[i]);
      }
      if (r.status != lp::Status::Optimal) continue;
      if (first || r.value > b.c[i]) b.c[i] = r.value;
      first = false;
    }
  }
  return b;
}

}  // namespace sp1
