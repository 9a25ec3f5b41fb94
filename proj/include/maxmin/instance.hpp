#pragma once

// Problem instance files (YAML, `schema: 1`).
//
//   schema: 1
//   dimension: 2
//   tnorm: min              # min | product | lukasiewicz
//   bounds: [0, 1]
//   points:    {p: [0.5, "1/3"]}
//   polytopes: {X: [[0.2, 0.8], [0.9, 0.1]]}
//   boxes:     {B: {lower: [0.4, 0.4], upper: [0.6, 0.6]}}
//   families:  {colors: [[[...], ...], ...]}
//   matrices:  {A: [[0.9, 0.1], [0.8, 0.3], [0.5, 0.4]]}
//   params:    {r: 3}
//
// Numerals are decimals or p/q and are read exactly.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxmin/koenig.hpp"
#include "maxmin/point.hpp"

namespace maxmin {

struct SourceMark {
  int line = 0;    // 1-based, 0 when unknown
  int column = 0;  // 1-based
};

/// Schema violation or bad value, with the position of the offending node.
class InstanceError : public std::runtime_error {
 public:
  InstanceError(const std::string& message, SourceMark mark = {}, std::string source = {});
  const SourceMark& mark() const noexcept { return mark_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  SourceMark mark_;
  std::string detail_;
};

struct Instance {
  int schema = 1;
  std::size_t dimension = 0;
  std::string tnorm = "min";
  SemiringBounds bounds;
  std::map<std::string, Point> points;
  /// Ordered point lists; duplicates are kept (commands that need a polytope dedupe).
  std::map<std::string, std::vector<Point>> polytopes;
  std::map<std::string, Box> boxes;
  std::map<std::string, std::vector<std::vector<Point>>> families;
  std::map<std::string, Matrix> matrices;
  std::map<std::string, Value> params;

  /// Source position of each named object, keyed "section.name".
  std::map<std::string, SourceMark> marks;

  /// Checks dimensions and that every coordinate lies within the bounds.
  void validate() const;

  const Point& point(const std::string& name) const;
  const std::vector<Point>& polytope(const std::string& name) const;
  const Box& box(const std::string& name) const;
  const std::vector<std::vector<Point>>& family(const std::string& name) const;
  const Matrix& matrix(const std::string& name) const;
  std::optional<Value> param(const std::string& name) const;
  SourceMark mark_of(const std::string& key) const;

  /// Equality of content; marks are ignored.
  friend bool operator==(const Instance& a, const Instance& b);
};

/// Parses and validates. `source` names the file in diagnostics.
Instance parse_instance(const std::string& text, const std::string& source = "<instance>");
Instance load_instance(const std::string& path);

/// YAML text that parses back to an equal instance. Values are written as p/q.
std::string serialize_instance(const Instance& instance);

}  // namespace maxmin
