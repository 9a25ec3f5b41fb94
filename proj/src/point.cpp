#include "maxmin/point.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "maxmin/errors.hpp"

namespace maxmin {

Point Point::parse(std::initializer_list<std::string_view> coords) {
  std::vector<Value> v;
  v.reserve(coords.size());
  for (auto c : coords) v.push_back(Value::parse(c));
  return Point(std::move(v));
}

bool Point::on_diagonal() const noexcept {
  return std::adjacent_find(coords_.begin(), coords_.end(), std::not_equal_to<>{}) == coords_.end();
}

bool Point::within(const SemiringBounds& b) const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [&](const Value& v) { return b.contains(v); });
}

std::string Point::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) os << ", ";
    os << p[i];
  }
  return os << ')';
}

bool leq(const Point& x, const Point& y) {
  require_same_dimension(x.dim(), y.dim(), "leq");
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (y[i] < x[i]) return false;
  }
  return true;
}

bool comparable(const Point& x, const Point& y) { return leq(x, y) || leq(y, x); }

Point join(const Point& x, const Point& y) {
  require_same_dimension(x.dim(), y.dim(), "join");
  std::vector<Value> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = max(x[i], y[i]);
  return Point(std::move(out));
}

Point scale_min(const Value& lambda, const Point& x) {
  std::vector<Value> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = min(lambda, x[i]);
  return Point(std::move(out));
}

Box::Box(Point lower_, Point upper_) : lower(std::move(lower_)), upper(std::move(upper_)) {
  require_same_dimension(lower.dim(), upper.dim(), "Box");
  for (std::size_t i = 0; i < lower.dim(); ++i) {
    if (upper[i] < lower[i]) {
      throw PreconditionError("box interval " + std::to_string(i) + " is empty: [" + lower[i].str() + ", " +
                              upper[i].str() + "]");
    }
  }
}

bool Box::contains(const Point& q) const {
  require_same_dimension(dim(), q.dim(), "Box::contains");
  for (std::size_t i = 0; i < q.dim(); ++i) {
    if (q[i] < lower[i] || upper[i] < q[i]) return false;
  }
  return true;
}

bool Box::contains(const Box& inner) const {
  require_same_dimension(dim(), inner.dim(), "Box::contains");
  for (std::size_t i = 0; i < dim(); ++i) {
    if (inner.lower[i] < lower[i] || upper[i] < inner.upper[i]) return false;
  }
  return true;
}

std::vector<Point> Box::corners() const {
  const std::size_t d = dim();
  std::vector<Point> out;
  out.reserve(std::size_t{1} << d);
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    std::vector<Value> c(d);
    for (std::size_t i = 0; i < d; ++i) {
      const bool take_upper = (mask >> (d - 1 - i)) & 1u;
      c[i] = take_upper ? upper[i] : lower[i];
    }
    out.emplace_back(std::move(c));
  }
  return out;
}

Polytope::Polytope(std::vector<Point> generators) {
  for (auto& g : generators) {
    if (!generators_.empty()) require_same_dimension(generators_.front().dim(), g.dim(), "Polytope");
    if (std::find(generators_.begin(), generators_.end(), g) == generators_.end()) {
      generators_.push_back(std::move(g));
    }
  }
}

Polytope Polytope::select(std::span<const std::size_t> indices) const {
  std::vector<Point> out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(generators_.at(i));
  return Polytope(std::move(out));
}

}  // namespace maxmin
