#include "maxmin/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "maxmin/errors.hpp"

namespace maxmin {

namespace {

void check_point(const Point& p, const SemiringBounds& bounds, const char* what) {
  if (p.dim() == 0) throw PreconditionError(std::string(what) + ": points need at least one coordinate");
  if (!p.within(bounds)) throw DomainError(std::string(what) + ": point " + p.str() + " outside the bounds");
}

// x (+) (b (x) y), componentwise max(x_i, min(b, y_i)).
Point lift(const Point& x, const Point& y, const Value& beta) {
  std::vector<Value> z(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) z[i] = max(x[i], min(beta, y[i]));
  return Point(std::move(z));
}

ComparableChain decompose_comparable(const Point& lower, const Point& upper) {
  const std::size_t d = lower.dim();
  ComparableChain chain{lower, upper, {}, {}, {}};
  chain.breakpoints.reserve(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    chain.breakpoints.push_back(lower[i]);
    chain.breakpoints.push_back(upper[i]);
  }
  std::sort(chain.breakpoints.begin(), chain.breakpoints.end());

  for (std::size_t l = 0; l + 1 < chain.breakpoints.size(); ++l) {
    ParameterInterval sigma;
    sigma.from = chain.breakpoints[l];
    sigma.to = chain.breakpoints[l + 1];
    sigma.degenerate = sigma.from == sigma.to;
    const Value probe = sigma.degenerate ? sigma.from : (sigma.from + sigma.to) / Value(2);
    sigma.classes = classify(lower, upper, probe);
    chain.intervals.push_back(sigma);

    if (sigma.degenerate || sigma.classes.middle.empty()) continue;
    ElementaryPiece piece{lift(lower, upper, sigma.from), lift(lower, upper, sigma.to), sigma.classes.middle};
    // Consecutive intervals can share a direction when some x_i == y_i sits
    // between them; those form one straight piece.
    if (!chain.pieces.empty() && chain.pieces.back().moving == piece.moving && chain.pieces.back().to == piece.from) {
      chain.pieces.back().to = piece.to;
    } else {
      chain.pieces.push_back(std::move(piece));
    }
  }
  return chain;
}

std::vector<ElementaryPiece> reversed(std::vector<ElementaryPiece> pieces) {
  std::reverse(pieces.begin(), pieces.end());
  for (auto& p : pieces) std::swap(p.from, p.to);
  return pieces;
}

}  // namespace

IndexClasses classify(const Point& x, const Point& y, const Value& beta) {
  require_same_dimension(x.dim(), y.dim(), "classify");
  IndexClasses out;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i] <= beta && beta <= y[i]) out.middle.push_back(i);
    if (beta <= x[i]) out.low.push_back(i);
    if (beta >= y[i]) out.high.push_back(i);
  }
  return out;
}

bool ElementaryPiece::contains(const Point& z) const {
  require_same_dimension(from.dim(), z.dim(), "ElementaryPiece::contains");
  std::vector<bool> is_moving(z.dim(), false);
  for (auto i : moving) is_moving[i] = true;
  std::optional<Value> common;
  for (std::size_t i = 0; i < z.dim(); ++i) {
    if (!is_moving[i]) {
      if (z[i] != from[i]) return false;
      continue;
    }
    if (common && *common != z[i]) return false;
    common = z[i];
    if (z[i] < min(from[i], to[i]) || max(from[i], to[i]) < z[i]) return false;
  }
  return true;
}

Value ElementaryPiece::rise() const {
  if (moving.empty()) return Value(0);
  const auto i = moving.front();
  return to[i] < from[i] ? from[i] - to[i] : to[i] - from[i];
}

Point segment_point(const Point& x, const Point& y, const Value& beta, const SemiringBounds& bounds) {
  require_same_dimension(x.dim(), y.dim(), "segment_point");
  if (!leq(x, y)) throw PreconditionError("segment_point needs x <= y componentwise, got " + x.str() + " and " + y.str());
  if (!bounds.contains(beta)) throw DomainError("segment_point: parameter " + beta.str() + " outside the bounds");
  return lift(x, y, beta);
}

SegmentDecomposition segment_decompose(const Point& x, const Point& y, const SemiringBounds& bounds) {
  require_same_dimension(x.dim(), y.dim(), "segment_decompose");
  check_point(x, bounds, "segment_decompose");
  check_point(y, bounds, "segment_decompose");

  SegmentDecomposition out;
  out.x = x;
  out.y = y;
  out.bounds = bounds;
  if (leq(x, y)) {
    out.legs.push_back(decompose_comparable(x, y));
    out.pieces = out.legs.front().pieces;
  } else if (leq(y, x)) {
    out.legs.push_back(decompose_comparable(y, x));
    out.pieces = reversed(out.legs.front().pieces);
  } else {
    out.mode = SegmentMode::Concatenated;
    out.junction = join(x, y);
    out.legs.push_back(decompose_comparable(x, *out.junction));
    out.legs.push_back(decompose_comparable(y, *out.junction));
    out.pieces = out.legs[0].pieces;
    for (auto& p : reversed(out.legs[1].pieces)) out.pieces.push_back(std::move(p));
  }
  if (out.pieces.empty()) out.pieces.push_back(ElementaryPiece{x, x, {}});
  return out;
}

std::vector<Point> SegmentDecomposition::corners() const {
  std::vector<Point> out{x};
  for (const auto& p : pieces) {
    if (p.to != out.back()) out.push_back(p.to);
  }
  return out;
}

Point SegmentDecomposition::point_at(const Value& tau) const {
  if (tau < Value(0) || Value(1) < tau) throw DomainError("traversal parameter must lie in [0, 1]");
  const Value span = bounds.hi - bounds.lo;
  if (mode == SegmentMode::Comparable) {
    if (leq(x, y)) return lift(x, y, bounds.lo + tau * span);
    return lift(y, x, bounds.hi - tau * span);
  }
  const Value half(1, 2);
  if (tau <= half) return lift(x, *junction, bounds.lo + Value(2) * tau * span);
  return lift(y, *junction, bounds.hi - (Value(2) * tau - Value(1)) * span);
}

bool segment_contains(const Point& x, const Point& y, const Point& z, const SemiringBounds& bounds) {
  require_same_dimension(x.dim(), z.dim(), "segment_contains");
  const auto decomposition = segment_decompose(x, y, bounds);
  return std::any_of(decomposition.pieces.begin(), decomposition.pieces.end(),
                     [&](const ElementaryPiece& p) { return p.contains(z); });
}

void SurdSum::add(const Value& coefficient, std::int64_t radicand) {
  if (radicand <= 0) throw DomainError("SurdSum radicand must be positive");
  std::int64_t outside = 1;
  for (std::int64_t f = 2; f * f <= radicand; ++f) {
    while (radicand % (f * f) == 0) {
      radicand /= f * f;
      outside *= f;
    }
  }
  const Value c = coefficient * Value(outside);
  auto [it, inserted] = terms_.try_emplace(radicand, c);
  if (!inserted) it->second += c;
  if (it->second == Value(0)) terms_.erase(it);
}

bool SurdSum::is_rational() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

long double SurdSum::to_long_double() const noexcept {
  long double s = 0;
  for (const auto& [m, c] : terms_) {
    s += static_cast<long double>(c.num()) / static_cast<long double>(c.den()) * std::sqrt(static_cast<long double>(m));
  }
  return s;
}

std::pair<Value, Value> SurdSum::enclosure(std::int64_t scale) const {
  Value lower(0);
  Value upper(0);
  for (const auto& [m, c] : terms_) {
    // floor(sqrt(m) * scale) via integer square root of m * scale^2.
    const auto target = static_cast<__int128>(m) * scale * scale;
    auto root = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(target)));
    while (static_cast<__int128>(root) * root > target) --root;
    while (static_cast<__int128>(root + 1) * (root + 1) <= target) ++root;
    const bool exact = static_cast<__int128>(root) * root == target;
    const Value lo_root(root, scale);
    const Value hi_root(exact ? root : root + 1, scale);
    if (Value(0) <= c) {
      lower += c * lo_root;
      upper += c * hi_root;
    } else {
      lower += c * hi_root;
      upper += c * lo_root;
    }
  }
  return {lower, upper};
}

std::string SurdSum::str() const {
  if (terms_.empty()) return "0/1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    if (m != 1) os << "*sqrt(" << m << ")";
  }
  return os.str();
}

SurdSum geodesic_distance(const Point& x, const Point& y, const SemiringBounds& bounds) {
  const auto decomposition = segment_decompose(x, y, bounds);
  SurdSum total;
  for (const auto& piece : decomposition.pieces) {
    if (piece.degenerate()) continue;
    total.add(piece.rise(), static_cast<std::int64_t>(piece.moving.size()));
  }
  return total;
}

}  // namespace maxmin
