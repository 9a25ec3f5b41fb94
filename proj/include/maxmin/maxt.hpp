#pragma once

// Max-T convexity: combinations max_i T(lambda_i, x^i) with max_i lambda_i = 1.
//
// Searches here are witness searches. For Min every hull is closed under
// rounding down to the coordinate grid, so grid searches are exact. Product and
// Lukasiewicz generate values off that grid; their searches use the grid
// refined by a uniform step and report exhaustion instead of absence.

#include <cstddef>
#include <optional>
#include <vector>

#include "maxmin/parallel.hpp"
#include "maxmin/point.hpp"
#include "maxmin/tnorm.hpp"

namespace maxmin {

struct MaxTMembership {
  bool member = false;
  /// Principal coefficients: the largest lambda_i with T(lambda_i, x^i) <= p.
  std::vector<Value> lambda;
};

MaxTMembership hull_member_maxt(const Point& p, const Polytope& x, const TNorm& t);

struct SearchOptions {
  /// Uniform refinement step for non-Min T-norms.
  Value step{1, 100};
  Execution execution = Execution::Parallel;
};

/// Candidate coordinate values for a witness search over the given points.
std::vector<Value> witness_values(const std::vector<Point>& points, const TNorm& t, const SearchOptions& opt);

struct RadonPartition {
  std::vector<std::size_t> first;   // indices into X
  std::vector<std::size_t> second;
  Point witness;
  /// false when the witness came from the refined grid of a non-Min T-norm.
  bool exact = true;
};

/// Disjoint index sets of X (|X| = d+2) whose hulls share the witness.
/// Throws ResolutionExhausted when the search finds nothing.
RadonPartition radon_partition(const std::vector<Point>& x, const TNorm& t, const SearchOptions& opt = {});

struct HellyResult {
  /// Common point of the whole family, when the hypothesis holds.
  std::optional<Point> common;
  /// A subfamily of at most d+1 members with empty (grid) intersection.
  std::optional<std::vector<std::size_t>> counterexample;
};

HellyResult helly_check(const std::vector<Polytope>& family, const TNorm& t, const SearchOptions& opt = {});

/// Size of the subsets whose hulls must all hold a centerpoint: floor(dn/(d+1)) + 1.
std::size_t centerpoint_subset_size(std::size_t n, std::size_t d);

/// A point in the hull of every subset of the given size. Throws ResolutionExhausted
/// for non-Min T-norms when the grid has no such point.
Point centerpoint(const std::vector<Point>& p, const TNorm& t, const SearchOptions& opt = {});

/// p lies in the hull of every subset of size centerpoint_subset_size.
bool verifies_centerpoint(const Point& c, const std::vector<Point>& p, const TNorm& t);

struct TverbergResult {
  bool found = false;
  std::vector<std::vector<std::size_t>> blocks;
  std::optional<Point> witness;
  /// Nothing found at full Min resolution although r is a prime power.
  bool soundness_alarm = false;
};

TverbergResult tverberg_search(const std::vector<Point>& x, std::size_t r, const TNorm& t,
                               const SearchOptions& opt = {});

bool is_prime_power(std::size_t r);

}  // namespace maxmin
