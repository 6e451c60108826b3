#include "sp1/topo.hpp"

#include <algorithm>
#include <map>

#include "sp1/errors.hpp"

namespace sp1 {

namespace {

using Adjacency = std::map<std::size_t, std::map<std::size_t, GammaValue>>;

// Removes unmarked vertices of degree 2, merging their two edges.
Adjacency suppress(const FiniteMetricTree& tree) {
  Adjacency adj;
  for (std::size_t v = 0; v < tree.vertices.size(); ++v) adj[v];
  for (const auto& e : tree.edges) {
    adj[e.a][e.b] = e.length;
    adj[e.b][e.a] = e.length;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (auto it = adj.begin(); it != adj.end(); ++it) {
      const std::size_t v = it->first;
      if (tree.vertices[v].marked || it->second.size() != 2) continue;
      auto first = it->second.begin();
      auto second = std::next(first);
      const std::size_t a = first->first, b = second->first;
      const GammaValue len = first->second + second->second;
      adj[a].erase(v);
      adj[b].erase(v);
      adj[a][b] = len;
      adj[b][a] = len;
      adj.erase(it);
      changed = true;
      break;
    }
  }
  return adj;
}

std::string code(const FiniteMetricTree& tree, const Adjacency& adj, std::size_t v, std::size_t parent,
                 bool metric) {
  std::vector<std::string> kids;
  for (const auto& [u, len] : adj.at(v)) {
    if (u == parent) continue;
    std::string c = code(tree, adj, u, v, metric);
    kids.push_back(metric ? len.str() + "~" + c : c);
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  if (tree.vertices[v].marked) out += tree.vertices[v].label;
  if (!kids.empty()) {
    out += ":";
    for (const auto& k : kids) out += k;
  }
  return out + ")";
}

std::string min_code(const FiniteMetricTree& tree, const Adjacency& adj, bool metric) {
  std::string best;
  bool first = true;
  for (const auto& [v, nbrs] : adj) {
    std::string c = code(tree, adj, v, static_cast<std::size_t>(-1), metric);
    if (first || c < best) best = std::move(c);
    first = false;
  }
  return best;
}

}  // namespace

Fingerprint tree_fingerprint(const FiniteMetricTree& tree) {
  tree.validate();
  Adjacency adj = suppress(tree);
  Fingerprint fp;
  fp.shape = min_code(tree, adj, false);
  fp.metric = min_code(tree, adj, true);
  for (const auto& [v, nbrs] : adj) {
    for (const auto& [u, len] : nbrs) {
      if (v < u && len.is_finite()) fp.finite_lengths.push_back(len.finite());
    }
  }
  std::sort(fp.finite_lengths.begin(), fp.finite_lengths.end());
  return fp;
}

bool tree_iso(const FiniteMetricTree& a, const FiniteMetricTree& b, bool strict) {
  Fingerprint fa = tree_fingerprint(a), fb = tree_fingerprint(b);
  return strict ? fa.metric == fb.metric : fa.shape == fb.shape;
}

FiniteMetricTree subdivide_edge(const FiniteMetricTree& tree, std::size_t edge) {
  if (edge >= tree.edges.size()) throw PreconditionError("edge index out of range");
  FiniteMetricTree out = tree;
  const auto e = tree.edges[edge];
  const std::size_t mid = out.vertices.size();
  out.vertices.push_back({"", false, std::nullopt});
  GammaValue near_a, near_b;
  if (e.length.is_finite()) {
    near_a = near_b = GammaValue(Rational(e.length.finite() / 2));
  } else {
    const auto& pa = tree.vertices[e.a].point;
    const bool a_simple = pa && pa->is_simple();
    near_a = a_simple ? kInfinity : GammaValue(1);
    near_b = a_simple ? GammaValue(1) : kInfinity;
  }
  out.edges[edge] = {e.a, mid, near_a};
  out.edges.push_back({mid, e.b, near_b});
  return out;
}

FiniteMetricTree renumber(const FiniteMetricTree& tree, const std::vector<std::size_t>& order) {
  if (order.size() != tree.vertices.size()) throw PreconditionError("renumbering has the wrong length");
  FiniteMetricTree out;
  out.vertices.resize(tree.vertices.size());
  for (std::size_t i = 0; i < order.size(); ++i) out.vertices.at(order[i]) = tree.vertices[i];
  for (const auto& e : tree.edges) out.edges.push_back({order[e.a], order[e.b], e.length});
  return out;
}

FiniteMetricTree family_skeleton(const FieldSpec& spec, const std::vector<FamilyMember>& family,
                                 const FieldElem& b) {
  if (family.empty()) throw PreconditionError("divisor family is empty");
  std::map<PLinePoint, std::vector<std::string>> names;
  std::vector<PLinePoint> points;
  for (const auto& m : family) {
    PLinePoint p = m.infinity ? point_at_infinity() : simple_point(spec, m.u * b + m.v);
    names[p].push_back(m.name);
    points.push_back(p);
  }
  FiniteMetricTree tree = skeleton(spec, make_divisor(spec, points));
  for (auto& v : tree.vertices) {
    if (!v.marked) continue;
    auto& list = names.at(*v.point);
    std::sort(list.begin(), list.end());
    v.label.clear();
    for (std::size_t i = 0; i < list.size(); ++i) v.label += (i ? "," : "") + list[i];
  }
  return tree;
}

FamilySweep family_sweep(const FieldSpec& spec, const std::vector<FamilyMember>& family,
                         const std::vector<FieldElem>& samples) {
  std::map<std::string, FamilyClass> classes;
  for (const auto& b : samples) {
    FiniteMetricTree tree = family_skeleton(spec, family, b);
    Fingerprint fp = tree_fingerprint(tree);
    auto [it, fresh] = classes.try_emplace(fp.shape);
    if (fresh) {
      it->second.fingerprint = fp;
      it->second.representative = std::move(tree);
    }
    it->second.samples.push_back(b);
  }
  FamilySweep sweep;
  for (auto& [shape, cls] : classes) sweep.classes.push_back(std::move(cls));
  return sweep;
}

}  // namespace sp1
