#include "maxmin/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxmin {

namespace {

void sort_unique(std::vector<Value>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<Value> coordinate_values(std::span<const Point> points, const SemiringBounds& bounds) {
  std::vector<Value> out{bounds.lo, bounds.hi};
  for (const auto& p : points) out.insert(out.end(), p.begin(), p.end());
  sort_unique(out);
  return out;
}

std::vector<Value> coordinate_values(std::span<const Polytope> polytopes, const SemiringBounds& bounds) {
  std::vector<Value> out{bounds.lo, bounds.hi};
  for (const auto& poly : polytopes) {
    for (const auto& p : poly) out.insert(out.end(), p.begin(), p.end());
  }
  sort_unique(out);
  return out;
}

std::vector<Value> with_midpoints(std::span<const Value> sorted_values) {
  std::vector<Value> out(sorted_values.begin(), sorted_values.end());
  for (std::size_t i = 0; i + 1 < sorted_values.size(); ++i) {
    out.push_back((sorted_values[i] + sorted_values[i + 1]) / Value(2));
  }
  sort_unique(out);
  return out;
}

std::vector<Value> with_uniform_step(std::span<const Value> sorted_values, const Value& step,
                                     const SemiringBounds& bounds) {
  if (!(Value(0) < step)) throw std::invalid_argument("grid step must be positive");
  std::vector<Value> out(sorted_values.begin(), sorted_values.end());
  for (Value v = bounds.lo; v <= bounds.hi; v += step) out.push_back(v);
  out.push_back(bounds.hi);
  sort_unique(out);
  return out;
}

CandidateGrid::CandidateGrid(std::vector<std::vector<Value>> axes) : axes_(std::move(axes)) {
  size_ = axes_.empty() ? 0 : 1;
  for (const auto& a : axes_) size_ *= a.size();
}

CandidateGrid::CandidateGrid(std::size_t d, std::vector<Value> values)
    : CandidateGrid(std::vector<std::vector<Value>>(d, std::move(values))) {}

Point CandidateGrid::at(std::size_t index) const {
  std::vector<Value> c(axes_.size());
  for (std::size_t k = axes_.size(); k-- > 0;) {
    const auto n = axes_[k].size();
    c[k] = axes_[k][index % n];
    index /= n;
  }
  return Point(std::move(c));
}

}  // namespace maxmin
