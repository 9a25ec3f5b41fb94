#include "maxmin/instance.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "maxmin/tnorm.hpp"

namespace maxmin {

namespace {

std::string located(const std::string& message, const SourceMark& mark, const std::string& source) {
  std::ostringstream os;
  if (!source.empty()) os << source << ':';
  if (mark.line > 0) os << mark.line << ':' << mark.column << ':';
  if (!source.empty() || mark.line > 0) os << ' ';
  os << message;
  return os.str();
}

SourceMark mark_of(const YAML::Node& node) {
  const auto m = node.Mark();
  if (m.is_null()) return {};
  return {m.line + 1, m.column + 1};
}

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const YAML::Node& node, const std::string& message) const {
    throw InstanceError(message, mark_of(node), source_);
  }

  Value value(const YAML::Node& node, const std::string& what) const {
    if (!node.IsScalar()) fail(node, what + ": expected a number");
    try {
      return Value::parse(node.Scalar());
    } catch (const std::exception& e) {
      fail(node, what + ": cannot read '" + node.Scalar() + "' as an exact rational (" + e.what() + ")");
    }
  }

  Point point(const YAML::Node& node, const std::string& what) const {
    if (!node.IsSequence()) fail(node, what + ": expected a list of coordinates");
    std::vector<Value> c;
    for (std::size_t i = 0; i < node.size(); ++i) c.push_back(value(node[i], what + "[" + std::to_string(i) + "]"));
    return Point(std::move(c));
  }

  std::vector<Point> points(const YAML::Node& node, const std::string& what) const {
    if (!node.IsSequence()) fail(node, what + ": expected a list of points");
    std::vector<Point> out;
    for (std::size_t i = 0; i < node.size(); ++i) out.push_back(point(node[i], what + "[" + std::to_string(i) + "]"));
    return out;
  }

  std::string key(const YAML::Node& node) const {
    if (!node.IsScalar() || node.Scalar().empty()) fail(node, "expected a non-empty name");
    return node.Scalar();
  }

  const std::string& source() const { return source_; }

 private:
  std::string source_;
};

void check_point(const Instance& in, const Point& p, const std::string& key, const SourceMark& mark,
                 const std::string& source) {
  if (p.dim() != in.dimension) {
    throw InstanceError(key + ": has " + std::to_string(p.dim()) + " coordinates, dimension is " +
                            std::to_string(in.dimension),
                        mark, source);
  }
  for (const auto& v : p) {
    if (!in.bounds.contains(v)) {
      throw InstanceError(key + ": coordinate " + v.str() + " outside the bounds [" + in.bounds.lo.str() + ", " +
                              in.bounds.hi.str() + "]",
                          mark, source);
    }
  }
}

const std::set<std::string> kTopLevel = {"schema", "dimension", "tnorm", "bounds", "points", "polytopes",
                                         "boxes",  "families",  "matrices", "params"};

}  // namespace

InstanceError::InstanceError(const std::string& message, SourceMark mark, std::string source)
    : std::runtime_error(located(message, mark, source)), mark_(mark), detail_(message) {}

void Instance::validate() const {
  if (schema != 1) throw InstanceError("unsupported schema " + std::to_string(schema) + " (expected 1)");
  if (dimension == 0) throw InstanceError("dimension must be positive");
  if (!(bounds.lo < bounds.hi)) throw InstanceError("bounds must satisfy lo < hi");
  try {
    TNorm::parse(tnorm, bounds);
  } catch (const std::exception& e) {
    throw InstanceError(std::string("tnorm: ") + e.what(), mark_of("tnorm"));
  }
  for (const auto& [name, p] : points) check_point(*this, p, "points." + name, mark_of("points." + name), {});
  for (const auto& [name, list] : polytopes) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      check_point(*this, list[i], "polytopes." + name + "[" + std::to_string(i) + "]", mark_of("polytopes." + name), {});
    }
  }
  for (const auto& [name, b] : boxes) {
    const auto key = "boxes." + name;
    check_point(*this, b.lower, key + ".lower", mark_of(key), {});
    check_point(*this, b.upper, key + ".upper", mark_of(key), {});
  }
  for (const auto& [name, fam] : families) {
    for (std::size_t j = 0; j < fam.size(); ++j) {
      for (std::size_t i = 0; i < fam[j].size(); ++i) {
        check_point(*this, fam[j][i], "families." + name + "[" + std::to_string(j) + "][" + std::to_string(i) + "]",
                    mark_of("families." + name), {});
      }
    }
  }
  for (const auto& [name, m] : matrices) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!bounds.contains(m(i, j))) {
          throw InstanceError("matrices." + name + ": entry " + m(i, j).str() + " outside the bounds",
                              mark_of("matrices." + name));
        }
      }
    }
  }
}

namespace {

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& section, const std::string& name) {
  const auto it = m.find(name);
  if (it == m.end()) throw InstanceError("missing " + section + "." + name);
  return it->second;
}

}  // namespace

const Point& Instance::point(const std::string& name) const { return lookup(points, "points", name); }
const std::vector<Point>& Instance::polytope(const std::string& name) const {
  return lookup(polytopes, "polytopes", name);
}
const Box& Instance::box(const std::string& name) const { return lookup(boxes, "boxes", name); }
const std::vector<std::vector<Point>>& Instance::family(const std::string& name) const {
  return lookup(families, "families", name);
}
const Matrix& Instance::matrix(const std::string& name) const { return lookup(matrices, "matrices", name); }

std::optional<Value> Instance::param(const std::string& name) const {
  const auto it = params.find(name);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

SourceMark Instance::mark_of(const std::string& key) const {
  const auto it = marks.find(key);
  return it == marks.end() ? SourceMark{} : it->second;
}

bool operator==(const Instance& a, const Instance& b) {
  return a.schema == b.schema && a.dimension == b.dimension && a.tnorm == b.tnorm && a.bounds == b.bounds &&
         a.points == b.points && a.polytopes == b.polytopes && a.boxes == b.boxes && a.families == b.families &&
         a.matrices == b.matrices && a.params == b.params;
}

Instance parse_instance(const std::string& text, const std::string& source) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw InstanceError(e.msg, {e.mark.line + 1, e.mark.column + 1}, source);
  }
  const Reader rd(source);
  if (!root.IsMap()) rd.fail(root, "instance must be a mapping");

  Instance in;
  for (const auto& kv : root) {
    const auto k = rd.key(kv.first);
    if (!kTopLevel.count(k)) rd.fail(kv.first, "unknown field '" + k + "'");
  }
  if (!root["schema"]) rd.fail(root, "missing field 'schema'");
  if (!root["dimension"]) rd.fail(root, "missing field 'dimension'");

  const auto schema = root["schema"];
  if (!schema.IsScalar() || schema.Scalar() != "1") rd.fail(schema, "unsupported schema (expected 1)");
  const auto dim = rd.value(root["dimension"], "dimension");
  if (dim.den() != 1 || dim < Value(1)) rd.fail(root["dimension"], "dimension must be a positive integer");
  in.dimension = static_cast<std::size_t>(dim.num());

  if (const auto t = root["tnorm"]) {
    if (!t.IsScalar()) rd.fail(t, "tnorm: expected min, product or lukasiewicz");
    in.tnorm = t.Scalar();
    in.marks["tnorm"] = mark_of(t);
  }
  if (const auto b = root["bounds"]) {
    if (!b.IsSequence() || b.size() != 2) rd.fail(b, "bounds: expected [lo, hi]");
    const auto lo = rd.value(b[0], "bounds[0]");
    const auto hi = rd.value(b[1], "bounds[1]");
    if (!(lo < hi)) rd.fail(b, "bounds: need lo < hi");
    in.bounds = SemiringBounds(lo, hi);
  }

  auto section = [&](const char* name, auto&& read_one) {
    const auto node = root[name];
    if (!node) return;
    if (!node.IsMap()) rd.fail(node, std::string(name) + ": expected a mapping of names");
    for (const auto& kv : node) {
      const auto key = rd.key(kv.first);
      const auto full = std::string(name) + "." + key;
      in.marks[full] = mark_of(kv.second);
      read_one(key, full, kv.second);
    }
  };

  section("points", [&](const std::string& k, const std::string& full, const YAML::Node& n) {
    in.points[k] = rd.point(n, full);
  });
  section("polytopes", [&](const std::string& k, const std::string& full, const YAML::Node& n) {
    auto list = rd.points(n, full);
    if (list.empty()) rd.fail(n, full + ": needs at least one point");
    in.polytopes[k] = std::move(list);
  });
  section("boxes", [&](const std::string& k, const std::string& full, const YAML::Node& n) {
    if (!n.IsMap() || !n["lower"] || !n["upper"]) rd.fail(n, full + ": expected {lower: [...], upper: [...]}");
    auto lower = rd.point(n["lower"], full + ".lower");
    auto upper = rd.point(n["upper"], full + ".upper");
    if (lower.dim() != upper.dim() || !leq(lower, upper)) rd.fail(n, full + ": need lower <= upper componentwise");
    in.boxes[k] = Box(std::move(lower), std::move(upper));
  });
  section("families", [&](const std::string& k, const std::string& full, const YAML::Node& n) {
    if (!n.IsSequence() || n.size() == 0) rd.fail(n, full + ": expected a non-empty list of point lists");
    std::vector<std::vector<Point>> fam;
    for (std::size_t j = 0; j < n.size(); ++j) {
      auto list = rd.points(n[j], full + "[" + std::to_string(j) + "]");
      if (list.empty()) rd.fail(n[j], full + "[" + std::to_string(j) + "]: needs at least one point");
      fam.push_back(std::move(list));
    }
    in.families[k] = std::move(fam);
  });
  section("matrices", [&](const std::string& k, const std::string& full, const YAML::Node& n) {
    auto rows = rd.points(n, full);
    if (rows.empty() || rows.front().dim() == 0) rd.fail(n, full + ": expected a non-empty list of rows");
    for (const auto& r : rows) {
      if (r.dim() != rows.front().dim()) rd.fail(n, full + ": rows of different lengths");
    }
    in.matrices[k] = Matrix::from_rows(rows);
  });
  section("params", [&](const std::string& k, const std::string& full, const YAML::Node& n) {
    in.params[k] = rd.value(n, full);
  });

  try {
    in.validate();
  } catch (const InstanceError& e) {
    throw InstanceError(e.detail(), e.mark(), source);
  }
  return in;
}

Instance load_instance(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InstanceError("cannot open instance file", {}, path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_instance(ss.str(), path);
}

namespace {

void emit_point(YAML::Emitter& out, const Point& p) {
  out << YAML::Flow << YAML::BeginSeq;
  for (const auto& v : p) out << v.str();
  out << YAML::EndSeq;
}

void emit_points(YAML::Emitter& out, const std::vector<Point>& list) {
  out << YAML::BeginSeq;
  for (const auto& p : list) emit_point(out, p);
  out << YAML::EndSeq;
}

}  // namespace

std::string serialize_instance(const Instance& in) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "schema" << YAML::Value << in.schema;
  out << YAML::Key << "dimension" << YAML::Value << in.dimension;
  out << YAML::Key << "tnorm" << YAML::Value << in.tnorm;
  out << YAML::Key << "bounds" << YAML::Value << YAML::Flow << YAML::BeginSeq << in.bounds.lo.str()
      << in.bounds.hi.str() << YAML::EndSeq;
  if (!in.points.empty()) {
    out << YAML::Key << "points" << YAML::Value << YAML::BeginMap;
    for (const auto& [k, p] : in.points) {
      out << YAML::Key << k << YAML::Value;
      emit_point(out, p);
    }
    out << YAML::EndMap;
  }
  if (!in.polytopes.empty()) {
    out << YAML::Key << "polytopes" << YAML::Value << YAML::BeginMap;
    for (const auto& [k, list] : in.polytopes) {
      out << YAML::Key << k << YAML::Value;
      emit_points(out, list);
    }
    out << YAML::EndMap;
  }
  if (!in.boxes.empty()) {
    out << YAML::Key << "boxes" << YAML::Value << YAML::BeginMap;
    for (const auto& [k, b] : in.boxes) {
      out << YAML::Key << k << YAML::Value << YAML::BeginMap;
      out << YAML::Key << "lower" << YAML::Value;
      emit_point(out, b.lower);
      out << YAML::Key << "upper" << YAML::Value;
      emit_point(out, b.upper);
      out << YAML::EndMap;
    }
    out << YAML::EndMap;
  }
  if (!in.families.empty()) {
    out << YAML::Key << "families" << YAML::Value << YAML::BeginMap;
    for (const auto& [k, fam] : in.families) {
      out << YAML::Key << k << YAML::Value << YAML::BeginSeq;
      for (const auto& list : fam) emit_points(out, list);
      out << YAML::EndSeq;
    }
    out << YAML::EndMap;
  }
  if (!in.matrices.empty()) {
    out << YAML::Key << "matrices" << YAML::Value << YAML::BeginMap;
    for (const auto& [k, m] : in.matrices) {
      out << YAML::Key << k << YAML::Value << YAML::BeginSeq;
      for (std::size_t i = 0; i < m.rows(); ++i) emit_point(out, m.row(i));
      out << YAML::EndSeq;
    }
    out << YAML::EndMap;
  }
  if (!in.params.empty()) {
    out << YAML::Key << "params" << YAML::Value << YAML::BeginMap;
    for (const auto& [k, v] : in.params) out << YAML::Key << k << YAML::Value << v.str();
    out << YAML::EndMap;
  }
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace maxmin
