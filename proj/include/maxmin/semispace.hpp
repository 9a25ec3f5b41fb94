#pragma once

// Semispaces at a point p: the maximal max-min convex sets avoiding p.
//
// After sorting p non-increasingly, S_0(p) = {x : x_k > p_k for some k} and,
// for a coordinate m, S_m(p) = {x : x_m < p_m, or x_k > p_k for some k with
// p_k < p_m}. Which of them exist depends on coordinates sitting at the
// semiring zero or unity. Sectors (the complements) are boxes.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "maxmin/point.hpp"

namespace maxmin {

/// p is not on the diagonal, so no hyperplane closure of a semispace exists there.
class NotOnDiagonal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Runs of the sorted anchor: block j has k_j equal leading coordinates
/// followed by l_j strictly decreasing ones. K_j = L_{j-1} + k_j, L_j = K_j + l_j.
struct BlockStructure {
  std::vector<std::size_t> k;
  std::vector<std::size_t> l;
  std::vector<std::size_t> K;
  std::vector<std::size_t> L;

  std::size_t blocks() const noexcept { return k.size(); }
};

/// Stable non-increasing order of the coordinates (original 0-based indices).
std::vector<std::size_t> sort_permutation(const Point& p);
BlockStructure block_structure(const Point& p, const std::vector<std::size_t>& sort_perm);

/// S_i(p). index 0 is S_0; index m >= 1 refers to original coordinate m (1-based).
struct SemispaceId {
  Point anchor;
  std::vector<std::size_t> sort_perm;
  std::size_t index = 0;
  /// 0-based coordinates k with p_k < p_m (empty for index 0).
  std::vector<std::size_t> below;

  std::size_t dim() const noexcept { return anchor.dim(); }

  friend bool operator==(const SemispaceId& a, const SemispaceId& b) {
    return a.anchor == b.anchor && a.index == b.index;
  }
};

/// The index set I(p): coordinates (1-based) with p_m > lo, plus 0 unless some p_m = hi.
std::vector<std::size_t> index_set(const Point& p, const SemiringBounds& bounds = {});

/// All semispaces at p, ordered by index.
struct SemispaceFamily {
  Point anchor;
  SemiringBounds bounds;
  std::vector<std::size_t> sort_perm;
  BlockStructure blocks;
  std::vector<SemispaceId> members;

  std::size_t size() const noexcept { return members.size(); }
  const SemispaceId* find(std::size_t index) const;
};

SemispaceFamily semispace_family(const Point& p, const SemiringBounds& bounds = {});

/// S_i(p) for a single index; throws PreconditionError unless i is in I(p).
SemispaceId make_semispace(const Point& p, std::size_t index, const SemiringBounds& bounds = {});

bool semispace_contains(const SemispaceId& s, const Point& q);
bool sector_contains(const SemispaceId& s, const Point& q);
/// The whole box lies in the sector. Sectors are boxes, so corners suffice.
bool sector_contains(const SemispaceId& s, const Box& b);
/// Strict inequalities of the semispace relaxed to non-strict ones.
bool semispace_closure_contains(const SemispaceId& s, const Point& q);

/// The sector as an explicit box within the bounds.
Box sector_box(const SemispaceId& s, const SemiringBounds& bounds = {});

/// { x : max(min(a_1,x_1),...,min(a_d,x_d),a_{d+1}) = max(min(b_1,x_1),...,b_{d+1}) }.
struct Hyperplane {
  std::vector<Value> a;
  std::vector<Value> b;

  std::size_t dim() const noexcept { return a.empty() ? 0 : a.size() - 1; }

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

struct HyperplaneSides {
  Value lhs;
  Value rhs;
};

HyperplaneSides hyperplane_eval(const Hyperplane& h, const Point& x);
bool hyperplane_contains(const Hyperplane& h, const Point& x);

/// The hyperplane whose solution set is the closure of S_i(p), p = (c,...,c).
/// Throws NotOnDiagonal for other anchors.
Hyperplane diagonal_closure_hyperplane(const Point& p, std::size_t index, const SemiringBounds& bounds = {});

}  // namespace maxmin
