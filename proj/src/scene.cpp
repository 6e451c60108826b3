#include "sp1/scene.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "sp1/errors.hpp"
#include "sp1/random.hpp"
#include "sp1/sample.hpp"

namespace sp1 {

using io::Json;

namespace {

constexpr std::array<const char*, 6> kTasks{"skeleton", "retract", "newton", "trop", "flow", "family"};

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("scene is missing \"") + key + "\"");
  return j.at(key);
}

const Json& need_array(const Json& j, const char* key) {
  const Json& a = need(j, key);
  if (!a.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  return a;
}

std::vector<PLinePoint> points_of(const Json& arr, const FieldSpec& spec) {
  std::vector<PLinePoint> out;
  for (const auto& p : arr) out.push_back(io::point_from_json(p, spec));
  return out;
}

void unsupported(Format f, const std::string& task) {
  static const std::array<const char*, 4> names{"json", "dot", "svg", "csv"};
  throw ParseError(std::string("format ") + names[static_cast<std::size_t>(f)] + " is not available for " + task);
}

// Every vertex of the divisor is a leaf, the tree validates, and
// subdividing any edge keeps the shape.
Json tree_checks(const FiniteMetricTree& tree) {
  Json c = Json::object();
  bool valid = true;
  try {
    tree.validate();
  } catch (const PreconditionError&) {
    valid = false;
  }
  c["tree_valid"] = valid;
  auto adj = tree.adjacency();
  bool leaves = true;
  for (std::size_t v = 0; v < tree.vertices.size(); ++v) {
    if (tree.vertices[v].marked && adj[v].size() > 1) leaves = false;
  }
  c["divisor_points_are_leaves"] = leaves;
  const Fingerprint fp = tree_fingerprint(tree);
  bool stable = true;
  for (std::size_t e = 0; e < tree.edges.size(); ++e) {
    const Fingerprint sub = tree_fingerprint(subdivide_edge(tree, e));
    stable = stable && sub.shape == fp.shape && sub.metric == fp.metric;
  }
  c["subdivision_stable"] = stable;
  std::vector<std::size_t> order(tree.vertices.size());
  std::iota(order.rbegin(), order.rend(), std::size_t{0});
  c["relabel_invariant"] = tree_fingerprint(renumber(tree, order)) == fp;
  return c;
}

struct RetractChecks {
  bool infinity_fixes = true;
  bool idempotent = true;
  bool condition_star = true;
  bool on_skeleton = true;

  void run(const FieldSpec& spec, const PLinePoint& a, const Divisor& d, const FiniteMetricTree& tree, Rng& rng) {
    const PLinePoint r = retract(spec, a, d);
    infinity_fixes = infinity_fixes && psi_D(spec, kInfinity, a, d) == a;
    idempotent = idempotent && retract(spec, r, d) == r;
    for (int k = 0; k < 5; ++k) {
      const PLinePoint moved = psi_D(spec, sample::radius(rng), a, d);
      condition_star = condition_star && psi_D(spec, GammaValue(0), moved, d) == r;
    }
    on_skeleton = on_skeleton && on_tree(spec, r, tree);
  }

  Json json() const {
    return Json{{"psi_D_at_inf_is_identity", infinity_fixes},
                {"retract_idempotent", idempotent},
                {"condition_star", condition_star},
                {"retract_on_skeleton", on_skeleton}};
  }
};

bool all_true(const Json& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Json& v) { return v.get<bool>(); });
}

// ---------------------------------------------------------------------------

RunOutput run_skeleton(const FieldSpec& spec, const Json& task, const RunOptions& opt) {
  const Divisor d = make_divisor(spec, points_of(need_array(task, "divisor"), spec));
  const FiniteMetricTree tree = skeleton(spec, d);
  Json out{{"task", "skeleton"}, {"field", io::to_json(spec)}, {"tree", io::to_json(tree)},
           {"fingerprint", io::to_json(tree_fingerprint(tree))}};
  RunOutput res;
  if (opt.check) {
    Json c = tree_checks(tree);
    Rng rng(opt.seed);
    RetractChecks rc;
    for (int k = 0; k < 20; ++k) rc.run(spec, sample::point(spec, rng), d, tree, rng);
    c["retract_on_skeleton"] = rc.on_skeleton;
    res.checks_passed = all_true(c);
    out["checks"] = c;
  }
  if (opt.format == Format::Dot) {
    res.text = tree.to_dot();
  } else if (opt.format == Format::Json) {
    res.text = io::dump(out);
  } else {
    unsupported(opt.format, "skeleton");
  }
  return res;
}

RunOutput run_retract(const FieldSpec& spec, const Json& task, const RunOptions& opt) {
  const Divisor d = make_divisor(spec, points_of(need_array(task, "divisor"), spec));
  const auto points = points_of(need_array(task, "points"), spec);
  std::optional<GammaValue> t;
  if (task.contains("t")) t = io::gamma_from_json(task.at("t"));
  const FiniteMetricTree tree = skeleton(spec, d);
  Json results = Json::array();
  for (const auto& a : points) {
    Json r{{"point", io::to_json(a)}, {"retract", io::to_json(retract(spec, a, d))},
           {"rho", io::to_json(rho(spec, a, d))}};
    if (t) r["psi_D"] = io::to_json(psi_D(spec, *t, a, d));
    results.push_back(r);
  }
  Json out{{"task", "retract"}, {"field", io::to_json(spec)}, {"results", results}};
  if (t) out["t"] = io::to_json(*t);
  RunOutput res;
  if (opt.check) {
    Rng rng(opt.seed);
    RetractChecks rc;
    for (const auto& a : points) rc.run(spec, a, d, tree, rng);
    Json c = rc.json();
    res.checks_passed = all_true(c);
    out["checks"] = c;
  }
  if (opt.format == Format::Dot) {
    res.text = tree.to_dot();
  } else if (opt.format == Format::Json) {
    res.text = io::dump(out);
  } else {
    unsupported(opt.format, "retract");
  }
  return res;
}

Json newton_checks(const FieldSpec& spec, const BiPoly& f, const FieldElem& c, const RootProfile& profile) {
  const long deg = f.y_degree();
  bool mult = true, agree = true, continuous = true;
  for (std::size_t k = 0; k < profile.pieces.size(); ++k) {
    const auto& piece = profile.pieces[k];
    long total = 0;
    for (const auto& r : piece.roots) total += r.second;
    mult = mult && total == deg;
    if (k > 0) {
      // Both neighbours evaluated at the shared endpoint.
      std::map<GammaValue, long> left, right;
      for (const auto& [aff, m] : profile.pieces[k - 1].roots) left[aff(GammaValue(piece.lo))] += m;
      for (const auto& [aff, m] : piece.roots) right[aff(GammaValue(piece.lo))] += m;
      continuous = continuous && left == right;
    }
    const Rational mid = piece.hi.is_finite() ? Rational((piece.lo + piece.hi.finite()) / 2) : Rational(piece.lo + 3);
    std::vector<GammaValue> vals;
    for (const auto& a : f.y_coeffs) vals.push_back(coeff_val_path(spec, a, c)(GammaValue(mid)));
    vals.resize(static_cast<std::size_t>(deg) + 1);
    std::map<GammaValue, long> expect;
    long zero = 0;
    while (vals[static_cast<std::size_t>(zero)].is_infinite()) ++zero;
    if (zero > 0) expect[kInfinity] = zero;
    for (const auto& s : newton_polygon(vals).segments) expect[GammaValue(s.slope)] += s.multiplicity;
    auto got = profile.at(GammaValue(mid));
    agree = agree && std::vector<std::pair<GammaValue, long>>(expect.begin(), expect.end()) == got;
  }
  return Json{{"multiplicities_sum_to_degree", mult},
              {"matches_newton_polygon", agree},
              {"continuous_at_breaks", continuous}};
}

RunOutput run_newton(const FieldSpec& spec, const Json& task, const RunOptions& opt) {
  const BiPoly f = io::bipoly_from_json(need(task, "F"), spec);
  const FieldElem c = task.contains("center") ? io::elem_from_json(task.at("center"), spec) : FieldElem(0);
  const RootProfile profile = root_valuations_along_path(spec, f, c);
  Json out{{"task", "newton"}, {"field", io::to_json(spec)}, {"center", io::to_json(c)},
           {"profile", io::to_json(profile)}};
  RunOutput res;
  if (opt.check) {
    Json checks = newton_checks(spec, f, c, profile);
    res.checks_passed = all_true(checks);
    out["checks"] = checks;
  }
  if (opt.format == Format::Svg) {
    res.text = profile_svg(profile);
  } else if (opt.format == Format::Json) {
    res.text = io::dump(out);
  } else {
    unsupported(opt.format, "newton");
  }
  return res;
}

PolyTuple tuple_of(const Json& task, const FieldSpec& spec) {
  const Json& h = need(task, "h");
  PolyTuple tuple;
  const Json* polys = &h;
  if (h.is_object()) {
    const Json& d = need(h, "degree");
    if (!d.is_number_unsigned()) throw ParseError("degree must be a nonnegative integer");
    tuple.degree = d.get<unsigned>();
    polys = &need_array(h, "polys");
  }
  if (!polys->is_array() || polys->empty()) throw ParseError("h must list at least one polynomial");
  for (const auto& p : *polys) tuple.h.push_back(io::mpoly_from_json(p, spec));
  if (!h.is_object()) {
    const long d = tuple.h.front().degree();
    tuple.degree = static_cast<unsigned>(std::max(0L, d));
  }
  return tuple;
}

RunOutput run_trop(const FieldSpec& spec, const Json& task, const RunOptions& opt) {
  const PolyTuple tuple = tuple_of(task, spec);
  Json results = Json::array();
  std::vector<TropPoint> taus;
  bool scaling = true, consistent = true, normalized = true;
  Rng rng(opt.seed);
  for (const auto& p : need_array(task, "points")) {
    Json r;
    TropPoint tau;
    if (p.is_array()) {
      std::vector<FieldElem> x;
      Json coords = Json::array();
      for (const auto& e : p) {
        x.push_back(io::elem_from_json(e, spec));
        coords.push_back(io::to_json(x.back()));
      }
      tau = tau_h(spec, tuple, x);
      r["point"] = coords;
      if (opt.check) {
        const FieldElem lambda = sample::element(spec, rng);
        std::vector<FieldElem> scaled;
        for (const auto& e : x) scaled.push_back(lambda * e);
        scaling = scaling && tau_h(spec, tuple, scaled) == tau;
      }
    } else {
      const PLinePoint x = io::point_from_json(p, spec);
      tau = tau_h(spec, tuple, x);
      r["point"] = io::to_json(x);
      if (opt.check && x.is_simple()) {
        // The same simple point given by homogeneous coordinates.
        std::vector<FieldElem> coords = x.chart == Chart::Std ? std::vector<FieldElem>{FieldElem(1), x.center}
                                                              : std::vector<FieldElem>{x.center, FieldElem(1)};
        consistent = consistent && tau_h(spec, tuple, coords) == tau;
      }
    }
    if (opt.check) {
      PolyTuple scaled_tuple = tuple;
      const FieldElem lambda = sample::element(spec, rng);
      for (auto& h : scaled_tuple.h) h = lambda * h;
      const TropPoint again = p.is_array()
                                  ? tau_h(spec, scaled_tuple,
                                          [&] {
                                            std::vector<FieldElem> x;
                                            for (const auto& e : p) x.push_back(io::elem_from_json(e, spec));
                                            return x;
                                          }())
                                  : tau_h(spec, scaled_tuple, io::point_from_json(p, spec));
      scaling = scaling && again == tau;
      normalized = normalized && *std::min_element(tau.coords.begin(), tau.coords.end()) == GammaValue(0);
    }
    r["tau"] = io::to_json(tau);
    taus.push_back(tau);
    results.push_back(r);
  }
  Json out{{"task", "trop"}, {"field", io::to_json(spec)}, {"degree", tuple.degree}, {"results", results}};
  RunOutput res;
  if (opt.check) {
    Json checks{{"scaling_invariant", scaling}, {"chart_consistent", consistent}, {"normalized", normalized}};
    res.checks_passed = all_true(checks);
    out["checks"] = checks;
  }
  if (opt.format == Format::Csv) {
    std::ostringstream os;
    std::size_t width = 0;
    for (const auto& t : taus) width = std::max(width, t.coords.size());
    os << "index";
    for (std::size_t i = 0; i < width; ++i) os << ",tau_" << i;
    os << "\n";
    for (std::size_t k = 0; k < taus.size(); ++k) {
      os << k;
      for (const auto& g : taus[k].coords) os << "," << g.str();
      os << "\n";
    }
    res.text = os.str();
  } else if (opt.format == Format::Json) {
    res.text = io::dump(out);
  } else {
    unsupported(opt.format, "trop");
  }
  return res;
}

ComplexSpec complex_spec_of(const Json& task) {
  ComplexSpec cs;
  for (const auto& name : need_array(task, "w")) {
    if (!name.is_string()) throw ParseError("coordinate names must be strings");
    cs.coords.push_back(name.get<std::string>());
  }
  const Json& h = need(task, "h");
  if (!h.is_string()) throw ParseError("h must be a coordinate name");
  cs.h = h.get<std::string>();
  if (task.contains("functionals")) {
    for (const auto& f : need_array(task, "functionals")) cs.functionals.push_back(io::functional_from_json(f, cs.coords));
  }
  if (task.contains("xi")) {
    for (const auto& f : need_array(task, "xi")) cs.xi.push_back(io::functional_from_json(f, cs.coords));
  }
  if (task.contains("region")) {
    for (const auto& f : need_array(task, "region")) cs.region.push_back(io::functional_from_json(f, cs.coords));
  }
  if (task.contains("symmetry")) {
    for (const auto& g : need_array(task, "symmetry")) {
      if (!g.is_object()) throw ParseError("symmetry entries must map names to names");
      std::map<std::string, std::string> perm;
      for (const auto& [from, to] : g.items()) {
        if (!to.is_string()) throw ParseError("symmetry entries must map names to names");
        perm[from] = to.get<std::string>();
      }
      cs.symmetries.push_back(std::move(perm));
    }
  }
  if (task.contains("diagonals")) {
    if (!task.at("diagonals").is_boolean()) throw ParseError("diagonals must be a boolean");
    cs.diagonals = task.at("diagonals").get<bool>();
  }
  return cs;
}

RunOutput run_flow(const Json& task, const RunOptions& opt) {
  const ComplexSpec cs = complex_spec_of(task);
  const CellComplex k = build_complex(cs);
  std::vector<GammaValue> start;
  for (const auto& g : need_array(task, "start")) start.push_back(io::gamma_from_json(g));
  if (start.size() != cs.coords.size()) throw ParseError("start must have one entry per coordinate");
  const GammaValue t = task.contains("t") ? io::gamma_from_json(task.at("t")) : kInfinity;

  const FlowResult r = flow(k, t, start);
  Json functionals = Json::array();
  for (const auto& f : k.functionals()) functionals.push_back(io::to_json(f, cs.coords));
  Json out{{"task", "flow"}, {"t", io::to_json(t)}, {"functionals", functionals}, {"result", io::to_json(r, cs.coords)},
           {"endpoint_in_W0", final_image_membership(k, r.endpoint)}};
  if (task.contains("core") && task.at("core") == true) {
    const CoreBounds b = compact_core(k);
    Json m = Json::object(), c = Json::object();
    for (std::size_t i = 0; i < cs.coords.size(); ++i) {
      m[cs.coords[i]] = b.m[i].get_str();
      c[cs.coords[i]] = io::to_json(b.c[i]);
    }
    out["core"] = Json{{"m", m}, {"c", c}};
  }
  RunOutput res;
  if (opt.check) {
    Rng rng(opt.seed);
    Rational total = 0;
    for (const auto& s : r.trajectory) total += s.time.finite();
    Rational s = total * make_rational(rng.uniform(0, 8), 8);
    if (t.is_finite()) s = t.finite() * make_rational(rng.uniform(0, 8), 8);
    const GammaValue rest = t.is_finite() ? GammaValue(Rational(t.finite() - s)) : kInfinity;
    const FlowResult first = flow(k, GammaValue(s), start);
    const bool semigroup = flow(k, rest, first.endpoint).endpoint == r.endpoint;
    bool xi_ok = true;
    if (start[k.h()].is_finite()) {
      lp::Vec a, b;
      for (const auto& g : start) a.push_back(g.finite());
      for (const auto& g : r.endpoint) b.push_back(g.finite());
      for (const auto& xi : k.xi()) xi_ok = xi_ok && xi(a) == xi(b);
    }
    bool dims = true;
    for (std::size_t i = 1; i < r.trajectory.size(); ++i) {
      dims = dims && k.info(r.trajectory[i].cell).dimension < k.info(r.trajectory[i - 1].cell).dimension;
    }
    Json checks{{"semigroup", semigroup}, {"xi_invariant", xi_ok}, {"dimensions_decrease", dims}};
    if (t.is_infinite()) {
      checks["endpoint_in_W0"] = final_image_membership(k, r.endpoint);
      const FlowResult again = flow(k, kInfinity, r.endpoint);
      checks["core_fixed"] = again.endpoint == r.endpoint && again.trajectory.empty();
    }
    res.checks_passed = all_true(checks);
    out["checks"] = checks;
  }
  if (opt.format == Format::Csv) {
    std::ostringstream os;
    os << "step,time,cell";
    for (const auto& c : cs.coords) os << ",e_" << c;
    os << "\n";
    for (std::size_t i = 0; i < r.trajectory.size(); ++i) {
      const auto& st = r.trajectory[i];
      os << i << "," << st.time.str() << "," << st.cell.signs;
      for (const auto& v : st.direction) os << "," << to_string(v);
      os << "\n";
    }
    res.text = os.str();
  } else if (opt.format == Format::Json) {
    res.text = io::dump(out);
  } else {
    unsupported(opt.format, "flow");
  }
  return res;
}

RunOutput run_family(const FieldSpec& spec, const Json& task, const RunOptions& opt) {
  std::vector<FamilyMember> members;
  for (const auto& m : need_array(task, "members")) {
    FamilyMember fm;
    const Json& name = need(m, "name");
    if (!name.is_string()) throw ParseError("member name must be a string");
    fm.name = name.get<std::string>();
    if (m.contains("inf") && m.at("inf") == true) {
      fm.infinity = true;
    } else {
      fm.u = m.contains("b") ? io::elem_from_json(m.at("b"), spec) : FieldElem(0);
      fm.v = m.contains("c") ? io::elem_from_json(m.at("c"), spec) : FieldElem(0);
    }
    members.push_back(std::move(fm));
  }
  std::vector<FieldElem> samples;
  for (const auto& b : need_array(task, "samples")) samples.push_back(io::elem_from_json(b, spec));
  const FamilySweep sweep = family_sweep(spec, members, samples);
  Json out = io::to_json(sweep);
  out["task"] = "family";
  out["field"] = io::to_json(spec);
  RunOutput res;
  if (opt.check) {
    bool stable = true, relabel = true, classes_ok = true;
    for (const auto& cls : sweep.classes) {
      Json c = tree_checks(cls.representative);
      stable = stable && c["subdivision_stable"].get<bool>();
      relabel = relabel && c["relabel_invariant"].get<bool>();
      for (const auto& b : cls.samples) {
        classes_ok = classes_ok && tree_fingerprint(family_skeleton(spec, members, b)).shape == cls.fingerprint.shape;
      }
    }
    Json checks{{"subdivision_stable", stable}, {"relabel_invariant", relabel}, {"classes_consistent", classes_ok}};
    if (members.size() <= 5) checks["at_most_16_classes"] = sweep.classes.size() <= 16;
    res.checks_passed = all_true(checks);
    out["checks"] = checks;
  }
  if (opt.format == Format::Dot) {
    std::string text;
    for (std::size_t i = 0; i < sweep.classes.size(); ++i) {
      std::string dot = sweep.classes[i].representative.to_dot();
      dot.replace(0, std::string("graph tree").size(), "graph class_" + std::to_string(i));
      text += dot;
    }
    res.text = text;
  } else if (opt.format == Format::Json) {
    res.text = io::dump(out);
  } else {
    unsupported(opt.format, "family");
  }
  return res;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "dot") return Format::Dot;
  if (name == "svg") return Format::Svg;
  if (name == "csv") return Format::Csv;
  throw ParseError("unknown format " + name);
}

std::string scene_task(const Json& scene) {
  if (!scene.is_object()) throw ParseError("scene must be a JSON object");
  std::string found;
  for (const char* t : kTasks) {
    if (!scene.contains(t)) continue;
    if (!found.empty()) throw ParseError("scene has more than one task block");
    found = t;
  }
  if (found.empty()) throw ParseError("scene has no task block");
  return found;
}

RunOutput run_scene(const Json& scene, const std::string& task, const RunOptions& options) {
  const std::string present = scene_task(scene);
  if (present != task) throw ParseError("scene holds a " + present + " block, not " + task);
  const Json& block = scene.at(task);
  if (!block.is_object()) throw ParseError("task block must be an object");
  if (task == "flow") return run_flow(block, options);
  const FieldSpec spec = io::field_from_json(need(scene, "field"));
  if (task == "skeleton") return run_skeleton(spec, block, options);
  if (task == "retract") return run_retract(spec, block, options);
  if (task == "newton") return run_newton(spec, block, options);
  if (task == "trop") return run_trop(spec, block, options);
  return run_family(spec, block, options);
}

std::string profile_svg(const RootProfile& profile) {
  Rational t_max = 4;
  for (const auto& p : profile.pieces) t_max = std::max(t_max, Rational(p.lo * 3 / 2));
  struct Seg {
    double x0, y0, x1, y1;
  };
  std::vector<Seg> segs;
  double y_min = 0, y_max = 1;
  for (const auto& p : profile.pieces) {
    if (p.lo >= t_max) continue;
    const Rational hi = p.hi.is_finite() ? std::min(p.hi.finite(), t_max) : t_max;
    for (const auto& [aff, mult] : p.roots) {
      if (aff.intercept.is_infinite()) continue;
      const double y0 = aff(GammaValue(p.lo)).finite().get_d();
      const double y1 = aff(GammaValue(hi)).finite().get_d();
      segs.push_back({p.lo.get_d(), y0, hi.get_d(), y1});
      y_min = std::min({y_min, y0, y1});
      y_max = std::max({y_max, y0, y1});
    }
  }
  const double w = 640, h = 400, m = 48;
  const double tx = t_max.get_d();
  auto X = [&](double t) { return m + (w - 2 * m) * t / tx; };
  auto Y = [&](double v) { return h - m - (h - 2 * m) * (v - y_min) / (y_max - y_min); };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  os << "  <line x1=\"" << fixed(X(0)) << "\" y1=\"" << fixed(Y(y_min)) << "\" x2=\"" << fixed(X(tx)) << "\" y2=\""
     << fixed(Y(y_min)) << "\" stroke=\"black\"/>\n";
  os << "  <line x1=\"" << fixed(X(0)) << "\" y1=\"" << fixed(Y(y_min)) << "\" x2=\"" << fixed(X(0)) << "\" y2=\""
     << fixed(Y(y_max)) << "\" stroke=\"black\"/>\n";
  os << "  <text x=\"" << fixed(X(tx)) << "\" y=\"" << fixed(Y(y_min) + 20) << "\" text-anchor=\"end\">t = "
     << to_string(t_max) << "</text>\n";
  os << "  <text x=\"" << fixed(X(0) - 6) << "\" y=\"" << fixed(Y(y_max)) << "\" text-anchor=\"end\">" << fixed(y_max)
     << "</text>\n";
  for (const auto& b : branch_events(profile)) {
    if (b.finite() > t_max) continue;
    const double bx = X(b.finite().get_d());
    os << "  <line x1=\"" << fixed(bx) << "\" y1=\"" << fixed(Y(y_min)) << "\" x2=\"" << fixed(bx) << "\" y2=\""
       << fixed(Y(y_max)) << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
  }
  for (const auto& s : segs) {
    os << "  <line x1=\"" << fixed(X(s.x0)) << "\" y1=\"" << fixed(Y(s.y0)) << "\" x2=\"" << fixed(X(s.x1))
       << "\" y2=\"" << fixed(Y(s.y1)) << "\" stroke=\"steelblue\" stroke-width=\"2\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace sp1
