#include "sp1/tree.hpp"

#include <functional>
#include <sstream>

#include "sp1/errors.hpp"

namespace sp1 {

bool operator<(const PLinePoint& a, const PLinePoint& b) {
  if (a.chart != b.chart) return a.chart < b.chart;
  if (a.radius != b.radius) return a.radius < b.radius;
  return a.center < b.center;
}

std::string PLinePoint::str() const {
  return std::string("(") + (chart == Chart::Std ? "std" : "inv") + ", " + center.str() + ", " +
         radius.str() + ")";
}

std::vector<std::vector<std::size_t>> FiniteMetricTree::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (const auto& e : edges) {
    adj.at(e.a).push_back(e.b);
    adj.at(e.b).push_back(e.a);
  }
  return adj;
}

void FiniteMetricTree::validate() const {
  if (vertices.empty()) throw PreconditionError("tree has no vertices");
  if (edges.size() + 1 != vertices.size()) {
    throw PreconditionError("tree must have |edges| = |vertices| - 1");
  }
  for (const auto& e : edges) {
    if (e.a >= vertices.size() || e.b >= vertices.size() || e.a == e.b) {
      throw PreconditionError("tree edge has invalid endpoints");
    }
    if (e.length <= GammaValue(0)) throw PreconditionError("tree edge length must be positive");
  }
  auto adj = adjacency();
  std::vector<bool> seen(vertices.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u : adj[v]) {
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
    }
  }
  // connected with |V|-1 edges implies acyclic
  if (count != vertices.size()) throw PreconditionError("tree is disconnected or cyclic");
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string FiniteMetricTree::to_dot() const {
  std::ostringstream os;
  os << "graph tree {\n";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& v = vertices[i];
    std::string label = v.label.empty() && v.point ? v.point->str() : v.label;
    os << "  v" << i << " [label=\"" << dot_escape(label) << "\"";
    if (v.marked) os << ", shape=box";
    os << "];\n";
  }
  for (const auto& e : edges) {
    os << "  v" << e.a << " -- v" << e.b << " [label=\"" << e.length.str() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace sp1
