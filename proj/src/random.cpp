#include "maxmin/random.hpp"

#include <algorithm>
#include <functional>

#include "maxmin/semispace.hpp"

namespace maxmin {

Value random_grid_value(Rng& rng, std::int64_t den, std::int64_t k_min, std::int64_t k_max,
                        const SemiringBounds& bounds) {
  std::uniform_int_distribution<std::int64_t> dist(k_min, k_max);
  return bounds.lo + (bounds.hi - bounds.lo) * Value(dist(rng), den);
}

Point random_point(Rng& rng, std::size_t d, std::int64_t den, const SemiringBounds& bounds) {
  std::vector<Value> c(d);
  for (auto& v : c) v = random_grid_value(rng, den, 0, den, bounds);
  return Point(std::move(c));
}

Point random_finite_point(Rng& rng, std::size_t d, std::int64_t den, const SemiringBounds& bounds) {
  std::vector<Value> c(d);
  for (auto& v : c) v = random_grid_value(rng, den, 1, den - 1, bounds);
  return Point(std::move(c));
}

Point random_sorted_point(Rng& rng, std::size_t d, std::int64_t den, const SemiringBounds& bounds) {
  Point p = random_finite_point(rng, d, den, bounds);
  std::vector<Value> c(p.begin(), p.end());
  std::sort(c.begin(), c.end(), std::greater<>());
  return Point(std::move(c));
}

std::vector<Point> random_points(Rng& rng, std::size_t n, std::size_t d, std::int64_t den,
                                 const SemiringBounds& bounds) {
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_point(rng, d, den, bounds));
  return out;
}

Point random_hull_point(Rng& rng, const Polytope& x, const TNorm& t, std::int64_t den) {
  const auto& b = t.bounds();
  std::vector<Value> lambda(x.size());
  for (auto& l : lambda) l = random_grid_value(rng, den, 0, den, b);
  std::uniform_int_distribution<std::size_t> pick(0, x.size() - 1);
  lambda[pick(rng)] = b.hi;
  std::vector<Value> z(x.dim(), b.lo);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t k = 0; k < x.dim(); ++k) z[k] = max(z[k], t.apply(lambda[i], x[i][k]));
  }
  return Point(std::move(z));
}

Point random_point_in_box(Rng& rng, const Box& box, std::int64_t den, const SemiringBounds& bounds) {
  const Value width = bounds.hi - bounds.lo;
  std::vector<Value> c(box.dim());
  for (std::size_t k = 0; k < box.dim(); ++k) {
    // Grid indices j with lower <= lo + j*width/den <= upper.
    const Value a = (box.lower[k] - bounds.lo) * Value(den) / width;
    const Value b = (box.upper[k] - bounds.lo) * Value(den) / width;
    const std::int64_t first = a.num() / a.den() + ((a.num() % a.den()) > 0 ? 1 : 0);
    const std::int64_t last = b.num() / b.den();
    c[k] = first <= last ? random_grid_value(rng, den, first, last, bounds) : box.lower[k];
  }
  return Point(std::move(c));
}

std::vector<Point> random_generators_around(Rng& rng, const Point& p, std::size_t extra, std::int64_t den,
                                            const SemiringBounds& bounds) {
  std::vector<Point> out;
  for (const auto& s : semispace_family(p, bounds).members) {
    out.push_back(random_point_in_box(rng, sector_box(s, bounds), den, bounds));
  }
  for (std::size_t i = 0; i < extra; ++i) out.push_back(random_point(rng, p.dim(), den, bounds));
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t den, const SemiringBounds& bounds) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_grid_value(rng, den, 1, den - 1, bounds);
  }
  return m;
}

}  // namespace maxmin
