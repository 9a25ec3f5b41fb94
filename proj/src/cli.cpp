#include "maxmin/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxmin/errors.hpp"
#include "maxmin/geometry.hpp"
#include "maxmin/grid.hpp"
#include "maxmin/hull.hpp"
#include "maxmin/instance.hpp"
#include "maxmin/koenig.hpp"
#include "maxmin/maxt.hpp"
#include "maxmin/oracle.hpp"
#include "maxmin/random.hpp"
#include "maxmin/semispace.hpp"
#include "maxmin/separation.hpp"
#include "maxmin/svg.hpp"

namespace maxmin::cli {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// JSON encoding

json jv(const Value& v) { return v.str(); }

json jp(const Point& p) {
  json a = json::array();
  for (const auto& v : p) a.push_back(jv(v));
  return a;
}

json jpoints(const std::vector<Point>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(jp(p));
  return a;
}

json jindices(const std::vector<std::size_t>& idx, std::size_t offset = 0) {
  json a = json::array();
  for (auto i : idx) a.push_back(i + offset);
  return a;
}

json jvalues(const std::vector<Value>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(jv(v));
  return a;
}

json jbox(const Box& b) { return {{"lower", jp(b.lower)}, {"upper", jp(b.upper)}}; }

json jsemispace(const SemispaceId& s, const SemiringBounds& bounds) {
  return {{"index", s.index},
          {"anchor", jp(s.anchor)},
          {"below", jindices(s.below, 1)},
          {"sector", jbox(sector_box(s, bounds))}};
}

json jhyperplane(const Hyperplane& h) { return {{"a", jvalues(h.a)}, {"b", jvalues(h.b)}}; }

const char* row_type_name(RowType t) {
  switch (t) {
    case RowType::A: return "A";
    case RowType::B: return "B";
    case RowType::C: return "C";
    case RowType::D: return "D";
    case RowType::Free: return "free";
  }
  return "?";
}

const char* improvement_name(ImprovementKind k) {
  switch (k) {
    case ImprovementKind::SinkingTight: return "sinking-tight";
    case ImprovementKind::LiftingBlock: return "lifting-block";
    case ImprovementKind::Cycle: return "cycle";
    case ImprovementKind::FreeRow: return "free-row";
  }
  return "?";
}

json jdiagram(const KoenigDiagram& g) {
  json m1 = json::array(), n1 = json::array(), pi = json::array(), types = json::array();
  for (std::size_t i = 0; i < g.a.rows(); ++i) {
    if (g.row_in_m1[i]) m1.push_back(i);
    pi.push_back(g.pi[i] == KoenigDiagram::kFree ? json(nullptr) : json(g.pi[i]));
    types.push_back(row_type_name(g.row_type(i)));
  }
  for (std::size_t j = 0; j < g.a.cols(); ++j) {
    if (g.col_in_n1[j]) n1.push_back(j);
  }
  return {{"t", jv(g.t)}, {"m1", m1},        {"n1", n1},          {"pi", pi},
          {"free_row", g.free_row}, {"row_types", types}, {"tightness", g.tightness()}};
}

// ---------------------------------------------------------------------------
// Verification block

class Verification {
 public:
  void check(const std::string& claim, bool passed) { checks_.push_back({claim, passed}); }
  bool all() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const auto& c) { return c.second; });
  }
  json to_json() const {
    json a = json::array();
    for (const auto& [claim, ok] : checks_) a.push_back({{"claim", claim}, {"passed", ok}});
    return {{"verified", all()}, {"checks", a}};
  }

 private:
  std::vector<std::pair<std::string, bool>> checks_;
};

// ---------------------------------------------------------------------------
// Command context

struct Names {
  std::string point = "p";
  std::string x = "x";
  std::string y = "y";
  std::string set;
  std::string box = "B";
  std::string family;
  std::string matrix = "A";
  std::string meeting;
  std::string figure;
  std::optional<std::size_t> index;
  std::optional<std::size_t> r;
};

struct Context {
  Instance inst;
  std::string path;
  SemiringBounds bounds;
  TNorm tnorm;
  SearchOptions search;
  Names names;
  std::string svg_path;
  std::vector<std::string> used;

  void use(const std::string& key) {
    if (std::find(used.begin(), used.end(), key) == used.end()) used.push_back(key);
  }
  const Point& point(const std::string& n) {
    use("points." + n);
    return inst.point(n);
  }
  const std::vector<Point>& list(const std::string& n) {
    use("polytopes." + n);
    return inst.polytope(n);
  }
  Polytope polytope(const std::string& n) { return Polytope(list(n)); }
  const Box& box(const std::string& n) {
    use("boxes." + n);
    return inst.box(n);
  }
  std::vector<Polytope> family(const std::string& n) {
    use("families." + n);
    std::vector<Polytope> out;
    for (const auto& l : inst.family(n)) out.emplace_back(l);
    return out;
  }
  const Matrix& matrix(const std::string& n) {
    use("matrices." + n);
    return inst.matrix(n);
  }
  bool has_points(const std::string& n) const { return inst.points.count(n) > 0; }
  bool has_list(const std::string& n) const { return inst.polytopes.count(n) > 0; }
};

struct Outcome {
  bool negative = false;
  json result = json::object();
  Verification verification;
  std::optional<std::string> raw;  // printed instead of the document
};

void require_min(const Context& c, const std::string& what) {
  if (!c.tnorm.is_min()) throw PreconditionError(what + " is defined for the min T-norm only");
}

bool maxt_member(const Context& c, const Point& p, const std::vector<Point>& gens) {
  return hull_member_maxt(p, Polytope(gens), c.tnorm).member;
}

bool maxt_member(const Context& c, const Point& p, const Polytope& gens) {
  return hull_member_maxt(p, gens, c.tnorm).member;
}

Point midpoint(const Point& a, const Point& b) {
  std::vector<Value> m(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) m[k] = (a[k] + b[k]) / Value(2);
  return Point(std::move(m));
}

// ---------------------------------------------------------------------------
// Commands

Outcome cmd_segment(Context& c) {
  require_min(c, "segment");
  const Point x = c.point(c.names.x);
  const Point y = c.point(c.names.y);
  const auto seg = segment_decompose(x, y, c.bounds);
  Outcome o;
  o.result["x"] = jp(x);
  o.result["y"] = jp(y);
  o.result["mode"] = seg.mode == SegmentMode::Comparable ? "comparable" : "concatenated";
  if (seg.junction) o.result["junction"] = jp(*seg.junction);
  json pieces = json::array();
  for (const auto& p : seg.pieces) {
    pieces.push_back({{"from", jp(p.from)}, {"to", jp(p.to)}, {"moving", jindices(p.moving, 1)}, {"rise", jv(p.rise())}});
  }
  o.result["pieces"] = pieces;
  o.result["corners"] = jpoints(seg.corners());

  auto& v = o.verification;
  v.check("pieces run from x to y", seg.pieces.front().from == x && seg.pieces.back().to == y);
  bool chained = true;
  for (std::size_t i = 1; i < seg.pieces.size(); ++i) chained = chained && seg.pieces[i - 1].to == seg.pieces[i].from;
  v.check("consecutive pieces share endpoints", chained);
  const std::vector<Point> ends{x, y};
  bool inside = true;
  bool shape = true;
  for (const auto& p : seg.pieces) {
    inside = inside && maxt_member(c, p.from, ends) && maxt_member(c, p.to, ends) &&
             maxt_member(c, midpoint(p.from, p.to), ends);
    const Value rise = p.rise();
    const Value step = p.degenerate() ? Value(0) : p.to[p.moving.front()] - p.from[p.moving.front()];
    shape = shape && (step == rise || step == -rise);
    for (std::size_t k = 0; k < x.dim(); ++k) {
      const bool moves = std::find(p.moving.begin(), p.moving.end(), k) != p.moving.end();
      shape = shape && (moves ? p.to[k] - p.from[k] == step && step != Value(0) : p.to[k] == p.from[k]);
    }
  }
  v.check("piece endpoints and midpoints lie in the segment by direct combination", inside);
  v.check("each piece moves its moving coordinates by one common nonzero step", shape);
  bool bounded = true;
  for (const auto& leg : seg.legs) {
    const auto n = std::count_if(leg.pieces.begin(), leg.pieces.end(), [](const auto& p) { return !p.degenerate(); });
    bounded = bounded && static_cast<std::size_t>(n) <= 2 * x.dim() - 1;
  }
  v.check("at most 2d-1 pieces per comparable leg", bounded);
  return o;
}

Outcome cmd_distance(Context& c) {
  require_min(c, "distance");
  const Point x = c.point(c.names.x);
  const Point y = c.point(c.names.y);
  const auto dist = geodesic_distance(x, y, c.bounds);
  Outcome o;
  json terms = json::array();
  for (const auto& [radicand, coef] : dist.terms()) terms.push_back({{"coefficient", jv(coef)}, {"radicand", radicand}});
  const auto [lo, hi] = dist.enclosure();
  o.result = {{"x", jp(x)},
              {"y", jp(y)},
              {"exact", dist.str()},
              {"terms", terms},
              {"approx", static_cast<double>(dist.to_long_double())},
              {"enclosure", {jv(lo), jv(hi)}}};

  SurdSum again;
  for (const auto& p : segment_decompose(x, y, c.bounds).pieces) {
    if (!p.degenerate()) again.add(p.rise(), static_cast<std::int64_t>(p.moving.size()));
  }
  auto& v = o.verification;
  v.check("length equals the sum over elementary pieces", again == dist);
  v.check("symmetric in the endpoints", geodesic_distance(y, x, c.bounds) == dist);
  v.check("zero exactly when the endpoints coincide", dist.is_zero() == (x == y));
  return o;
}

Outcome cmd_semispaces(Context& c) {
  require_min(c, "semispaces");
  const Point p = c.point(c.names.point);
  const auto fam = semispace_family(p, c.bounds);
  Outcome o;
  json blocks = {{"k", fam.blocks.k}, {"l", fam.blocks.l}, {"K", fam.blocks.K}, {"L", fam.blocks.L}};
  json members = json::array();
  bool anchor_ok = true;
  bool boxes_ok = true;
  for (const auto& s : fam.members) {
    members.push_back(jsemispace(s, c.bounds));
    anchor_ok = anchor_ok && sector_contains(s, p) && !semispace_contains(s, p);
    boxes_ok = boxes_ok && sector_contains(s, sector_box(s, c.bounds));
  }
  o.result = {{"anchor", jp(p)},
              {"index_set", index_set(p, c.bounds)},
              {"sort_permutation", jindices(fam.sort_perm, 1)},
              {"blocks", blocks},
              {"semispaces", members}};
  auto& v = o.verification;
  v.check("the anchor lies in every sector and in no semispace", anchor_ok);
  v.check("every listed sector box lies in its sector", boxes_ok);
  v.check("at most d+1 semispaces", fam.size() <= p.dim() + 1);
  return o;
}

// Checks a claimed membership by recomputing the principal combination.
void check_principal(Verification& v, const Context& c, const Point& p, const Polytope& x,
                     const std::vector<Value>& lambda, bool claim_member) {
  std::vector<Value> z(p.dim(), c.tnorm.bounds().lo);
  bool below = true;
  Value top = c.tnorm.bounds().lo;
  for (std::size_t i = 0; i < x.size(); ++i) {
    top = max(top, lambda[i]);
    for (std::size_t k = 0; k < p.dim(); ++k) {
      const Value term = c.tnorm.apply(lambda[i], x[i][k]);
      below = below && term <= p[k];
      z[k] = max(z[k], term);
    }
  }
  const bool member = Point(z) == p && top == c.tnorm.bounds().hi;
  v.check("coefficients stay below p", below);
  v.check(claim_member ? "combination with the listed coefficients equals p with max coefficient hi"
                       : "principal combination misses p or has max coefficient below hi",
          member == claim_member);
}

void check_separating(Verification& v, const SemispaceId& s, const Point& p, const Polytope& x) {
  v.check("every generator lies in the separating semispace",
          std::all_of(x.begin(), x.end(), [&](const Point& g) { return semispace_contains(s, g); }));
  v.check("p lies in the complementary sector", sector_contains(s, p) && !semispace_contains(s, p));
}

Outcome cmd_hull_member(Context& c) {
  const Point p = c.point(c.names.point);
  const Polytope x = c.polytope(c.names.set);
  const auto mt = hull_member_maxt(p, x, c.tnorm);
  Outcome o;
  o.result["point"] = jp(p);
  o.result["tnorm"] = c.tnorm.name();
  o.result["member"] = mt.member;
  o.result["lambda"] = jvalues(mt.lambda);
  check_principal(o.verification, c, p, x, mt.lambda, mt.member);
  if (c.tnorm.is_min()) {
    const auto m = hull_member(p, x, c.bounds);
    json w = json::array();
    for (const auto& s : m.witnesses) w.push_back({{"sector", s.sector}, {"generator", s.generator}});
    o.result["witnesses"] = w;
    o.verification.check("sector test agrees with the principal combination", m.member == mt.member);
    if (m.member) {
      bool ok = true;
      for (const auto& s : m.witnesses) ok = ok && sector_contains(make_semispace(p, s.sector, c.bounds), x[s.generator]);
      o.verification.check("each witness generator lies in its sector", ok);
    } else if (m.separating_index) {
      const auto s = make_semispace(p, *m.separating_index, c.bounds);
      o.result["separating_semispace"] = jsemispace(s, c.bounds);
      check_separating(o.verification, s, p, x);
    }
  }
  return o;
}

Outcome cmd_caratheodory(Context& c) {
  require_min(c, "caratheodory");
  const Point p = c.point(c.names.point);
  const Polytope x = c.polytope(c.names.set);
  const auto m = hull_member(p, x, c.bounds);
  Outcome o;
  o.result["point"] = jp(p);
  o.result["member"] = m.member;
  if (!m.member) {
    o.negative = true;
    const auto s = make_semispace(p, *m.separating_index, c.bounds);
    o.result["separating_semispace"] = jsemispace(s, c.bounds);
    check_separating(o.verification, s, p, x);
    return o;
  }
  const auto reduced = caratheodory_reduce(p, x, c.bounds);
  std::vector<std::size_t> idx;
  for (const auto& g : reduced) {
    idx.push_back(static_cast<std::size_t>(std::find(x.begin(), x.end(), g) - x.begin()));
  }
  o.result["generators"] = jpoints(reduced.generators());
  o.result["indices"] = jindices(idx);
  auto& v = o.verification;
  v.check("at most d+1 generators", reduced.size() <= p.dim() + 1);
  v.check("every kept generator belongs to the input", std::all_of(idx.begin(), idx.end(), [&](auto i) { return i < x.size(); }));
  v.check("p lies in the hull of the kept generators by direct combination", maxt_member(c, p, reduced));
  return o;
}

json jpicks(const std::vector<ColorPick>& picks) {
  json a = json::array();
  for (const auto& pk : picks) {
    a.push_back({{"color", pk.color}, {"sector", pk.sector}, {"generator", pk.generator}, {"point", jp(pk.point)}});
  }
  return a;
}

bool picks_from_colors(const std::vector<ColorPick>& picks, const std::vector<Polytope>& colors) {
  std::set<std::size_t> seen;
  for (const auto& pk : picks) {
    if (pk.color >= colors.size() || !seen.insert(pk.color).second) return false;
    if (pk.generator >= colors[pk.color].size() || colors[pk.color][pk.generator] != pk.point) return false;
  }
  return true;
}

Outcome cmd_colorful_weak(Context& c) {
  require_min(c, "colorful-weak");
  const Point p = c.point(c.names.point);
  const auto colors = c.family(c.names.family);
  const auto r = colorful_weak(p, colors, c.bounds);
  Outcome o;
  o.result = {{"point", jp(p)}, {"picks", jpicks(r.picks)}, {"transversal", jpoints(r.transversal().generators())}};
  auto& v = o.verification;
  v.check("picks use distinct colors and are generators of those colors", picks_from_colors(r.picks, colors));
  bool sectors = true;
  for (const auto& pk : r.picks) sectors = sectors && sector_contains(make_semispace(p, pk.sector, c.bounds), pk.point);
  v.check("each pick lies in its sector at p", sectors);
  v.check("p lies in the hull of the picks by direct combination", maxt_member(c, p, r.transversal()));
  return o;
}

Outcome cmd_colorful_strong(Context& c) {
  require_min(c, "colorful-strong");
  const Polytope cs = c.polytope(c.names.set);
  const auto colors = c.family(c.names.family);
  std::vector<Point> meeting;
  if (!c.names.meeting.empty()) meeting = c.list(c.names.meeting);
  const auto r = colorful_strong(cs, colors, meeting, c.bounds, c.search.execution);
  Outcome o;
  o.result = {{"q", jp(r.q)},
              {"picks", jpicks(r.picks)},
              {"transversal", jpoints(r.transversal().generators())},
              {"meeting_points", jpoints(r.meeting_points)},
              {"separation", {{"point", jp(r.separation.point)}, {"sector", r.separation.sector}}},
              {"working_bounds", {jv(r.working_bounds.lo), jv(r.working_bounds.hi)}}};
  auto& v = o.verification;
  v.check("one pick from each of the d+1 colors", r.picks.size() == colors.size() && picks_from_colors(r.picks, colors));
  bool meets = r.meeting_points.size() == colors.size();
  for (std::size_t i = 0; meets && i < colors.size(); ++i) {
    meets = maxt_member(c, r.meeting_points[i], cs) && maxt_member(c, r.meeting_points[i], colors[i]);
  }
  v.check("each meeting point lies in C and in its color's hull", meets);
  v.check("q lies in C by direct combination", maxt_member(c, r.q, cs));
  v.check("q lies in the hull of the picks by direct combination", maxt_member(c, r.q, r.transversal()));
  return o;
}

Outcome cmd_separate_point(Context& c) {
  require_min(c, "separate-point");
  const Point p = c.point(c.names.point);
  const Polytope x = c.polytope(c.names.set);
  const auto r = separate_point(p, x, c.bounds);
  Outcome o;
  o.result["point"] = jp(p);
  o.result["in_hull"] = r.in_hull;
  if (r.in_hull) {
    o.negative = true;
    const auto mt = hull_member_maxt(p, x, c.tnorm);
    o.result["lambda"] = jvalues(mt.lambda);
    check_principal(o.verification, c, p, x, mt.lambda, true);
    return o;
  }
  o.result["semispace"] = jsemispace(*r.semispace, c.bounds);
  check_separating(o.verification, *r.semispace, p, x);
  return o;
}

void check_violation(Verification& v, const Context& c, const Box& b, const Polytope& x,
                     const SepConditionReport& rep) {
  const Point& y = *rep.violation;
  v.check("the violating point lies in the hull by direct combination", maxt_member(c, y, x));
  v.check("the violating point dominates the lower corner", leq(b.lower, y));
  bool exceeds = false;
  for (std::size_t pos = 0; pos < rep.t_b && pos < rep.order.size(); ++pos) {
    exceeds = exceeds || b.upper[rep.order[pos]] < y[rep.order[pos]];
  }
  v.check("the violating point exceeds the upper corner within the first t(B) sorted coordinates", exceeds);
}

json jcondition(const SepConditionReport& rep) {
  json j = {{"holds", rep.holds}, {"order", jindices(rep.order, 1)}, {"t_b", rep.t_b}};
  if (rep.violation) j["violation"] = jp(*rep.violation);
  return j;
}

Outcome cmd_sep_condition(Context& c) {
  require_min(c, "sep-condition");
  const Box b = c.box(c.names.box);
  const Polytope x = c.polytope(c.names.set);
  const auto rep = sep_condition(b, x, c.bounds, c.search.execution);
  Outcome o;
  o.result = jcondition(rep);
  if (rep.violation) {
    check_violation(o.verification, c, b, x, rep);
  } else {
    o.verification.check("serial recomputation agrees",
                         sep_condition(b, x, c.bounds, Execution::Serial).holds == rep.holds);
  }
  return o;
}

Outcome cmd_separate_box(Context& c) {
  require_min(c, "separate-box");
  const Box b = c.box(c.names.box);
  const Polytope x = c.polytope(c.names.set);
  const auto r = separate_box(b, x, c.bounds, c.search.execution);
  Outcome o;
  o.result["separable"] = r.separable;
  o.result["condition"] = jcondition(r.condition);
  if (!r.separable) {
    o.negative = true;
    check_violation(o.verification, c, b, x, r.condition);
    return o;
  }
  const auto& s = *r.semispace;
  o.result["semispace"] = jsemispace(s, c.bounds);
  auto& v = o.verification;
  v.check("every generator lies in the semispace",
          std::all_of(x.begin(), x.end(), [&](const Point& g) { return semispace_contains(s, g); }));
  const auto corners = b.corners();
  v.check("every box corner lies in the sector",
          std::all_of(corners.begin(), corners.end(), [&](const Point& q) { return sector_contains(s, q); }));
  return o;
}

Outcome cmd_separate_hyperplane(Context& c) {
  require_min(c, "separate-hyperplane");
  const Point p = c.point(c.names.point);
  const Polytope x = c.polytope(c.names.set);
  const auto r = separate_by_hyperplane(p, x, c.bounds);
  Outcome o;
  o.result["point"] = jp(p);
  auto& v = o.verification;
  switch (r.status) {
    case HyperplaneSeparation::Status::NotOnDiagonal:
      o.negative = true;
      o.result["status"] = "not-on-diagonal";
      v.check("p has two different coordinates", !p.on_diagonal());
      return o;
    case HyperplaneSeparation::Status::InHull: {
      o.negative = true;
      o.result["status"] = "in-hull";
      const auto mt = hull_member_maxt(p, x, c.tnorm);
      o.result["lambda"] = jvalues(mt.lambda);
      check_principal(v, c, p, x, mt.lambda, true);
      return o;
    }
    case HyperplaneSeparation::Status::Separated: break;
  }
  const auto& h = *r.hyperplane;
  o.result["status"] = "separated";
  o.result["hyperplane"] = jhyperplane(h);
  o.result["anchor"] = jp(*r.anchor);
  o.result["index"] = *r.index;
  v.check("every generator lies on the hyperplane",
          std::all_of(x.begin(), x.end(), [&](const Point& g) { return hyperplane_contains(h, g); }));
  v.check("p lies off the hyperplane", !hyperplane_contains(h, p));
  const auto s = make_semispace(*r.anchor, *r.index, c.bounds);
  bool same = semispace_closure_contains(s, p) == hyperplane_contains(h, p);
  for (const auto& g : x) same = same && semispace_closure_contains(s, g);
  v.check("the hyperplane agrees with the semispace closure at p and at every generator", same);
  return o;
}

Outcome cmd_intsep(Context& c) {
  require_min(c, "intsep");
  const auto& y = c.list(c.names.set);
  const auto r = internal_separation(y, c.bounds);
  Outcome o;
  o.result = {{"point", jp(r.point)}, {"sector", r.sector}};
  auto& v = o.verification;
  v.check("rows lie in distinct sectors covering 0..d", verifies_internal_separation(y, r, c.bounds));
  v.check("the point lies in the hull of the rows by direct combination", maxt_member(c, r.point, y));
  const bool sorted = std::all_of(y.begin(), y.end(), [](const Point& q) {
    return std::is_sorted(q.begin(), q.end(), std::greater<>());
  });
  if (sorted) {
    const auto rs = intsep_sorted(y, c.bounds);
    o.result["sorted_construction"] = {{"point", jp(rs.point)}, {"sector", rs.sector}};
    v.check("the sorted construction also separates", verifies_internal_separation(y, rs, c.bounds));
  }
  return o;
}

Outcome cmd_tight_diagram(Context& c) {
  const Matrix& a = c.matrix(c.names.matrix);
  auto g = koenig_diagram(a);
  Outcome o;
  auto& v = o.verification;
  o.result["bottleneck"] = jv(g.t);
  o.result["initial"] = jdiagram(g);
  bool invariants = diagram_violations(g).empty();
  bool increasing = true;
  json steps = json::array();
  const std::size_t budget = (a.rows() + 1) * (a.rows() + 1);
  while (!g.tight() && steps.size() < budget) {
    ImprovementTrace tr;
    auto next = improve_diagram(g, &tr);
    increasing = increasing && next.tightness() > g.tightness();
    invariants = invariants && diagram_violations(next).empty();
    steps.push_back({{"kind", improvement_name(tr.kind)},
                     {"rows", jindices(tr.rows)},
                     {"full_turns", tr.full_turns},
                     {"tightness_before", tr.tightness_before},
                     {"tightness_after", tr.tightness_after},
                     {"diagram", jdiagram(next)}});
    g = std::move(next);
  }
  o.result["steps"] = steps;
  o.result["final"] = jdiagram(g);
  v.check("every diagram satisfies the diagram invariants", invariants);
  v.check("each improvement strictly increases tightness", increasing);
  v.check("the final diagram is tight", g.tight());
  if (a.cols() <= oracle::kMaxDimension) {
    std::vector<std::vector<Value>> rows(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const Point r = a.row(i);
      rows[i].assign(r.begin(), r.end());
    }
    v.check("the bottleneck threshold matches exhaustive enumeration", oracle::brute_bottleneck(rows) == g.t);
  }
  return o;
}

Outcome cmd_radon(Context& c) {
  const auto& x = c.list(c.names.set);
  const auto r = radon_partition(x, c.tnorm, c.search);
  Outcome o;
  o.result = {{"first", jindices(r.first)}, {"second", jindices(r.second)}, {"witness", jp(r.witness)}, {"exact", r.exact}};
  std::vector<Point> a, b;
  for (auto i : r.first) a.push_back(x[i]);
  for (auto i : r.second) b.push_back(x[i]);
  std::vector<std::size_t> all = r.first;
  all.insert(all.end(), r.second.begin(), r.second.end());
  std::sort(all.begin(), all.end());
  bool partition = all.size() == x.size() && !r.first.empty() && !r.second.empty();
  for (std::size_t i = 0; partition && i < all.size(); ++i) partition = all[i] == i;
  auto& v = o.verification;
  v.check("the two parts partition the points", partition);
  v.check("the witness lies in both hulls by direct combination",
          maxt_member(c, r.witness, a) && maxt_member(c, r.witness, b));
  return o;
}

Outcome cmd_helly(Context& c) {
  const auto fam = c.family(c.names.family);
  const auto r = helly_check(fam, c.tnorm, c.search);
  Outcome o;
  auto& v = o.verification;
  if (r.common) {
    o.result = {{"common", jp(*r.common)}};
    v.check("the common point lies in every member by direct combination",
            std::all_of(fam.begin(), fam.end(), [&](const Polytope& m) { return maxt_member(c, *r.common, m); }));
    return o;
  }
  o.negative = true;
  o.result = {{"counterexample", jindices(*r.counterexample)}, {"exact", c.tnorm.is_min()}};
  std::vector<Polytope> sub;
  for (auto i : *r.counterexample) sub.push_back(fam[i]);
  SearchOptions serial = c.search;
  serial.execution = Execution::Serial;
  v.check("a serial search over the subfamily finds no common point", !helly_check(sub, c.tnorm, serial).common);
  v.check("the subfamily has at most d+1 members", sub.size() <= fam.front().dim() + 1);
  return o;
}

Outcome cmd_centerpoint(Context& c) {
  const auto& p = c.list(c.names.set);
  const auto cp = centerpoint(p, c.tnorm, c.search);
  Outcome o;
  const auto m0 = centerpoint_subset_size(p.size(), p.front().dim());
  o.result = {{"point", jp(cp)}, {"subset_size", m0}};
  o.verification.check("the point lies in the hull of every subset of size " + std::to_string(m0),
                       verifies_centerpoint(cp, p, c.tnorm));
  return o;
}

Outcome cmd_tverberg(Context& c) {
  const auto& x = c.list(c.names.set);
  std::size_t r = 3;
  if (c.names.r) {
    r = *c.names.r;
  } else if (const auto pr = c.inst.param("r")) {
    if (pr->den() != 1 || *pr < Value(2)) throw PreconditionError("params.r must be an integer >= 2");
    c.use("params.r");
    r = static_cast<std::size_t>(pr->num());
  }
  const auto res = tverberg_search(x, r, c.tnorm, c.search);
  if (res.soundness_alarm) {
    throw SoundnessViolation("no Tverberg partition found at exact resolution although r is a prime power");
  }
  Outcome o;
  o.result["r"] = r;
  o.result["found"] = res.found;
  if (!res.found) {
    o.negative = true;
    o.verification.check("the search reported no partition", !res.witness);
    return o;
  }
  json blocks = json::array();
  for (const auto& b : res.blocks) blocks.push_back(jindices(b));
  o.result["blocks"] = blocks;
  o.result["witness"] = jp(*res.witness);
  std::vector<std::size_t> all;
  bool in_all = true;
  for (const auto& b : res.blocks) {
    all.insert(all.end(), b.begin(), b.end());
    std::vector<Point> pts;
    for (auto i : b) pts.push_back(x[i]);
    in_all = in_all && !pts.empty() && maxt_member(c, *res.witness, pts);
  }
  std::sort(all.begin(), all.end());
  bool partition = all.size() == x.size() && res.blocks.size() == r;
  for (std::size_t i = 0; partition && i < all.size(); ++i) partition = all[i] == i;
  o.verification.check("the blocks partition the points into r parts", partition);
  o.verification.check("the witness lies in every block's hull by direct combination", in_all);
  return o;
}

Outcome cmd_render(Context& c) {
  require_min(c, "render");
  std::string figure = c.names.figure;
  if (figure.empty()) figure = c.has_points(c.names.x) && c.has_points(c.names.y) ? "segment" : "semispaces";
  Outcome o;
  std::string svg;
  auto& v = o.verification;
  if (figure == "segment") {
    const auto seg = segment_decompose(c.point(c.names.x), c.point(c.names.y), c.bounds);
    svg = render_segment_svg(seg);
    o.result["pieces"] = seg.pieces.size();
  } else if (figure == "semispaces") {
    const auto fam = semispace_family(c.point(c.names.point), c.bounds);
    svg = render_semispaces_svg(fam);
    o.result["sectors"] = fam.size();
  } else if (figure == "hyperplane") {
    const Point p = c.point(c.names.point);
    const std::size_t index = c.names.index.value_or(0);
    Hyperplane h;
    try {
      h = diagonal_closure_hyperplane(p, index, c.bounds);
    } catch (const NotOnDiagonal&) {
      o.negative = true;
      o.result = {{"figure", figure}, {"status", "not-on-diagonal"}};
      v.check("the anchor has two different coordinates", !p.on_diagonal());
      return o;
    }
    std::vector<Point> gens;
    if (c.has_list(c.names.set)) gens = c.list(c.names.set);
    svg = render_hyperplane_svg(make_semispace(p, index, c.bounds), c.bounds, gens);
    o.result["hyperplane"] = jhyperplane(h);
    v.check("the anchor lies on the hyperplane", hyperplane_contains(h, p));
  } else {
    throw PreconditionError("unknown figure '" + figure + "' (segment, semispaces or hyperplane)");
  }
  std::size_t polylines = 0;
  for (auto pos = svg.find("<polyline"); pos != std::string::npos; pos = svg.find("<polyline", pos + 1)) ++polylines;
  if (figure == "segment") v.check("one polyline per elementary piece", polylines == o.result["pieces"].get<std::size_t>());
  v.check("document is a complete svg element", svg.rfind("<svg", 0) == 0 && svg.find("</svg>") != std::string::npos);
  o.result["figure"] = figure;
  o.result["polylines"] = polylines;
  if (c.svg_path.empty()) {
    o.raw = svg;
  } else {
    std::ofstream f(c.svg_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + c.svg_path);
    f << svg;
    o.result["svg"] = c.svg_path;
    o.result["bytes"] = svg.size();
  }
  return o;
}

Outcome cmd_oracle_check(Context& c) {
  const Point p = c.point(c.names.point);
  const auto& xs = c.list(c.names.set);
  const Polytope x(xs);
  std::vector<Point> pts = x.generators();
  pts.push_back(p);
  auto grid = oracle::GridSpec::from_points(pts, c.tnorm.bounds());
  if (!c.tnorm.is_min()) grid.step = c.search.step;
  const bool fast = c.tnorm.is_min() ? hull_member(p, x, c.bounds).member : hull_member_maxt(p, x, c.tnorm).member;
  const bool brute = oracle::brute_hull_member(p, x.generators(), c.tnorm, grid);
  Outcome o;
  auto& v = o.verification;
  o.result["hull_member"] = {{"fast", fast}, {"oracle", brute}, {"grid_values", grid.values().size()}};
  if (c.tnorm.is_min()) {
    v.check("hull membership agrees with the brute-force oracle", fast == brute);
  } else {
    v.check("every oracle witness is confirmed by the fast test", !brute || fast);
  }
  if (c.tnorm.is_min() && c.has_points(c.names.x) && c.has_points(c.names.y)) {
    const Point a = c.point(c.names.x);
    const Point b = c.point(c.names.y);
    const auto sgrid = oracle::GridSpec::from_points({a, b}, c.bounds);
    const auto brute_pts = oracle::brute_segment(a, b, sgrid);
    const CandidateGrid cand(a.dim(), sgrid.values());
    std::vector<Point> fast_pts;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      const Point q = cand.at(i);
      if (segment_contains(a, b, q, c.bounds)) fast_pts.push_back(q);
    }
    std::sort(fast_pts.begin(), fast_pts.end());
    o.result["segment"] = {{"grid_points", fast_pts.size()}, {"oracle_points", brute_pts.size()}};
    v.check("segment grid points agree with the brute-force oracle", fast_pts == brute_pts);
  }
  return o;
}

// ---------------------------------------------------------------------------
// Instance generation

struct GenerateOptions {
  std::size_t dimension = 2;
  std::size_t extra = 1;
  std::int64_t denominator = 10;
  std::string output;
};

Instance generate_instance(std::uint64_t seed, const GenerateOptions& g, const SemiringBounds& bounds) {
  if (g.dimension < 1 || g.dimension > 5) throw PreconditionError("generate supports dimensions 1 to 5");
  if (g.denominator < 2) throw PreconditionError("generate needs a denominator >= 2");
  Rng rng(seed);
  const std::size_t d = g.dimension;
  const auto den = g.denominator;
  Instance in;
  in.dimension = d;
  in.bounds = bounds;
  const Point p = random_finite_point(rng, d, den, bounds);
  in.points["p"] = p;
  in.points["x"] = random_point(rng, d, den, bounds);
  in.points["y"] = random_point(rng, d, den, bounds);
  in.polytopes["X"] = random_generators_around(rng, p, g.extra, den, bounds);
  in.polytopes["C"] = random_generators_around(rng, p, g.extra, den, bounds);
  std::vector<std::vector<Point>> colors;
  for (std::size_t i = 0; i <= d; ++i) colors.push_back(random_generators_around(rng, p, 0, den, bounds));
  in.families["colors"] = colors;
  colors.push_back(random_generators_around(rng, p, 0, den, bounds));
  in.families["F"] = colors;
  const Polytope cpoly(in.polytopes["C"]);
  for (int attempt = 0; attempt < 100; ++attempt) {
    const Point lower = random_point(rng, d, den, bounds);
    std::vector<Value> up(lower.begin(), lower.end());
    for (auto& u : up) u = min(u + (bounds.hi - bounds.lo) * Value(1, den), bounds.hi);
    Box b(lower, Point(up));
    if (!box_hull_intersection(b, cpoly, bounds)) {
      in.boxes["B"] = b;
      break;
    }
  }
  in.matrices["A"] = random_matrix(rng, d + 1, d, den, bounds);
  std::vector<Point> ys;
  for (std::size_t i = 0; i <= d; ++i) ys.push_back(random_finite_point(rng, d, den, bounds));
  in.polytopes["Y"] = ys;
  in.polytopes["R"] = random_points(rng, d + 2, d, den, bounds);
  in.polytopes["P"] = random_points(rng, d + 3, d, den, bounds);
  if (d <= 2) {
    in.polytopes["T"] = random_points(rng, 2 * (d + 1) + 1, d, den, bounds);
    in.params["r"] = Value(3);
  }
  in.validate();
  return in;
}

// ---------------------------------------------------------------------------
// Driver

struct CommandSpec {
  const char* name;
  const char* description;
  std::function<Outcome(Context&)> run;
  std::string default_set;
  std::string default_family;
  unsigned inputs;  // bitmask of the option groups below
};

enum : unsigned {
  kPoint = 1,
  kEnds = 2,
  kSet = 4,
  kBox = 8,
  kFamily = 16,
  kMatrix = 32,
  kMeeting = 64,
  kR = 128,
  kFigure = 256,
};

const std::vector<CommandSpec>& commands() {
  static const std::vector<CommandSpec> specs = {
      {"segment", "decompose the segment [x, y] into elementary pieces", cmd_segment, "", "", kEnds},
      {"distance", "Euclidean length of the segment [x, y]", cmd_distance, "", "", kEnds},
      {"semispaces", "semispaces and sectors at p", cmd_semispaces, "", "", kPoint},
      {"hull-member", "is p in the hull of X", cmd_hull_member, "X", "", kPoint | kSet},
      {"caratheodory", "at most d+1 generators of X whose hull holds p", cmd_caratheodory, "X", "", kPoint | kSet},
      {"colorful-weak", "colorful transversal whose hull holds p", cmd_colorful_weak, "", "colors", kPoint | kFamily},
      {"colorful-strong", "colorful transversal meeting C", cmd_colorful_strong, "C", "colors",
       kSet | kFamily | kMeeting},
      {"separate-point", "semispace at p holding the hull of C", cmd_separate_point, "C", "", kPoint | kSet},
      {"separate-box", "semispace holding the hull of C whose sector holds B", cmd_separate_box, "C", "", kBox | kSet},
      {"sep-condition", "box separation condition for B and C", cmd_sep_condition, "C", "", kBox | kSet},
      {"separate-hyperplane", "hyperplane through C avoiding a diagonal point p", cmd_separate_hyperplane, "C", "",
       kPoint | kSet},
      {"intsep", "internally separating point of d+1 points", cmd_intsep, "Y", "", kSet},
      {"tight-diagram", "Koenig diagram of A improved until tight", cmd_tight_diagram, "", "", kMatrix},
      {"radon", "Radon partition of d+2 points", cmd_radon, "R", "", kSet},
      {"helly", "common point of a family or a small subfamily without one", cmd_helly, "", "F", kFamily},
      {"centerpoint", "point in the hull of every large subset", cmd_centerpoint, "P", "", kSet},
      {"tverberg", "partition into r parts with intersecting hulls", cmd_tverberg, "T", "", kSet | kR},
      {"render", "SVG figure for dimension 2", cmd_render, "C", "", kPoint | kEnds | kSet | kFigure},
      {"oracle-check", "compare fast predicates with the brute-force oracle", cmd_oracle_check, "X", "",
       kPoint | kEnds | kSet},
  };
  return specs;
}

json error_document(const std::string& command, const std::string& kind, const std::string& message,
                    const std::string& source, SourceMark mark, const Context* ctx) {
  json e = {{"kind", kind}, {"message", message}};
  if (!source.empty()) e["source"] = source;
  if (mark.line > 0) {
    e["line"] = mark.line;
    e["column"] = mark.column;
  }
  if (ctx && !ctx->used.empty()) {
    json inputs = json::array();
    for (const auto& k : ctx->used) {
      const auto m = ctx->inst.mark_of(k);
      json in = {{"name", k}};
      if (m.line > 0) {
        in["line"] = m.line;
        in["column"] = m.column;
      }
      inputs.push_back(in);
    }
    e["inputs"] = inputs;
  }
  return {{"schema", 1}, {"command", command}, {"status", "error"}, {"error", e}};
}

std::string location_prefix(const std::string& source, SourceMark mark) {
  std::string s = source;
  if (mark.line > 0) s += ":" + std::to_string(mark.line) + ":" + std::to_string(mark.column);
  return s.empty() ? s : s + ": ";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact max-min convexity toolkit", "maxmin"};
  app.require_subcommand(1);

  std::string tnorm_flag;
  std::vector<std::string> bounds_flag;
  std::string step_flag;
  std::uint64_t seed = 1;
  std::string svg_path;
  bool serial = false;
  app.add_option("--tnorm", tnorm_flag, "T-norm: min, product or lukasiewicz")
      ->check(CLI::IsMember({"min", "product", "lukasiewicz"}));
  app.add_option("--bounds", bounds_flag, "semiring bounds LO HI")->expected(2);
  app.add_option("--grid-step", step_flag, "refinement step P/Q for non-min searches");
  app.add_option("--seed", seed, "seed for generate");
  app.add_option("--svg", svg_path, "write render output to this file");
  app.add_flag("--serial", serial, "use the serial search kernels");

  Names names;
  std::string instance_path;
  std::size_t r_value = 0;
  std::size_t index_value = 0;
  std::map<std::string, CLI::Option*> r_opts;
  std::map<std::string, CLI::Option*> index_opts;
  for (const auto& spec : commands()) {
    auto* sub = app.add_subcommand(spec.name, spec.description);
    sub->fallthrough();
    sub->add_option("instance", instance_path, "instance file (YAML, schema 1)")->required();
    if (spec.inputs & kPoint) sub->add_option("--point", names.point, "name of the point p");
    if (spec.inputs & kEnds) {
      sub->add_option("--x", names.x, "name of the first endpoint");
      sub->add_option("--y", names.y, "name of the second endpoint");
    }
    if (spec.inputs & kSet) sub->add_option("--set", names.set, "name of the point list");
    if (spec.inputs & kBox) sub->add_option("--box", names.box, "name of the box");
    if (spec.inputs & kFamily) sub->add_option("--family", names.family, "name of the family");
    if (spec.inputs & kMatrix) sub->add_option("--matrix", names.matrix, "name of the matrix");
    if (spec.inputs & kMeeting) sub->add_option("--meeting", names.meeting, "name of the meeting point list");
    if (spec.inputs & kR) r_opts[spec.name] = sub->add_option("-r", r_value, "number of parts")->check(CLI::Range(2, 64));
    if (spec.inputs & kFigure) {
      sub->add_option("--figure", names.figure, "segment, semispaces or hyperplane");
      index_opts[spec.name] = sub->add_option("--index", index_value, "semispace index for the hyperplane figure");
    }
  }
  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "write a random instance usable by every subcommand");
  generate->fallthrough();
  generate->add_option("--dimension", gen.dimension, "dimension d")->check(CLI::Range(1, 5));
  generate->add_option("--extra", gen.extra, "extra generators beyond one per sector");
  generate->add_option("--denominator", gen.denominator, "coordinate grid denominator");
  generate->add_option("-o,--output", gen.output, "output file instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kVerified : kError;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();

  SemiringBounds bounds;
  SearchOptions search;
  try {
    if (!bounds_flag.empty()) bounds = SemiringBounds(Value::parse(bounds_flag[0]), Value::parse(bounds_flag[1]));
    if (!step_flag.empty()) {
      search.step = Value::parse(step_flag);
      if (!(Value(0) < search.step)) throw PreconditionError("--grid-step must be positive");
    }
  } catch (const std::exception& e) {
    out << error_document(command, "usage", e.what(), "", {}, nullptr).dump(2) << '\n';
    err << "maxmin: " << e.what() << '\n';
    return kError;
  }
  search.execution = serial ? Execution::Serial : Execution::Parallel;

  if (command == "generate") {
    try {
      const auto text = serialize_instance(generate_instance(seed, gen, bounds));
      if (gen.output.empty()) {
        out << text;
      } else {
        std::ofstream f(gen.output);
        if (!f) throw std::runtime_error("cannot write " + gen.output);
        f << text;
      }
      return kVerified;
    } catch (const std::exception& e) {
      out << error_document(command, "precondition", e.what(), "", {}, nullptr).dump(2) << '\n';
      err << "maxmin: " << e.what() << '\n';
      return kError;
    }
  }

  const auto spec = std::find_if(commands().begin(), commands().end(),
                                 [&](const CommandSpec& s) { return command == s.name; });
  if (names.set.empty()) names.set = spec->default_set;
  if (names.family.empty()) names.family = spec->default_family;
  if (r_opts.count(command) && r_opts[command]->count() > 0) names.r = r_value;
  if (index_opts.count(command) && index_opts[command]->count() > 0) names.index = index_value;

  Context ctx;
  ctx.path = instance_path;
  ctx.names = names;
  ctx.search = search;
  ctx.svg_path = svg_path;

  auto fail = [&](const std::string& kind, const std::string& message, SourceMark mark, bool with_inputs) {
    if (mark.line == 0 && with_inputs && !ctx.used.empty()) mark = ctx.inst.mark_of(ctx.used.front());
    out << error_document(command, kind, message, ctx.path, mark, with_inputs ? &ctx : nullptr).dump(2) << '\n';
    err << "maxmin: " << location_prefix(ctx.path, mark) << message << '\n';
    return kError;
  };

  try {
    ctx.inst = load_instance(instance_path);
    if (!tnorm_flag.empty()) ctx.inst.tnorm = tnorm_flag;
    if (!bounds_flag.empty()) ctx.inst.bounds = bounds;
    ctx.inst.validate();
  } catch (const InstanceError& e) {
    return fail("schema", e.detail(), e.mark(), false);
  }
  ctx.bounds = ctx.inst.bounds;

  Outcome outcome;
  try {
    ctx.tnorm = TNorm::parse(ctx.inst.tnorm, ctx.bounds);
    outcome = spec->run(ctx);
  } catch (const InstanceError& e) {
    return fail("schema", e.detail(), e.mark(), true);
  } catch (const ResolutionExhausted& e) {
    json doc = {{"schema", 1},
                {"command", command},
                {"status", "negative"},
                {"result", {{"exhausted", true}, {"message", e.what()}, {"grid_step", jv(ctx.search.step)}}},
                {"verification", Verification().to_json()}};
    out << doc.dump(2) << '\n';
    return kNegative;
  } catch (const DimensionMismatch& e) {
    return fail("dimension-mismatch", e.what(), {}, true);
  } catch (const PreconditionError& e) {
    return fail("precondition", e.what(), {}, true);
  } catch (const DomainError& e) {
    return fail("domain", e.what(), {}, true);
  } catch (const SizeGuardExceeded& e) {
    return fail("size-guard", e.what(), {}, true);
  } catch (const SoundnessViolation& e) {
    return fail("soundness", e.what(), {}, true);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), {}, true);
  }

  if (!outcome.verification.all()) {
    json doc = error_document(command, "verification", "result failed re-verification and was withheld", ctx.path, {},
                              &ctx);
    doc["verification"] = outcome.verification.to_json();
    out << doc.dump(2) << '\n';
    err << "maxmin: " << command << ": result failed re-verification and was withheld\n";
    return kError;
  }
  if (outcome.raw) {
    out << *outcome.raw;
    return outcome.negative ? kNegative : kVerified;
  }
  json doc = {{"schema", 1},
              {"command", command},
              {"status", outcome.negative ? "negative" : "verified"},
              {"instance", ctx.path},
              {"tnorm", ctx.tnorm.name()},
              {"bounds", {jv(ctx.bounds.lo), jv(ctx.bounds.hi)}},
              {"result", outcome.result},
              {"verification", outcome.verification.to_json()}};
  out << doc.dump(2) << '\n';
  return outcome.negative ? kNegative : kVerified;
}

}  // namespace maxmin::cli
