#pragma once

// Threshold matrices, bottleneck thresholds and Koenig diagrams for an
// (n+1) x n matrix whose rows are points, plus the recursive construction of
// an internally separating point.

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "maxmin/point.hpp"

namespace maxmin {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Value fill = Value(0));
  /// Rows are the given points; all must share a dimension.
  static Matrix from_rows(const std::vector<Point>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Value& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Value& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Point row(std::size_t i) const;
  /// Submatrix on the given rows and columns, in the given orders.
  Matrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Value> data_;
};

/// Entry (i, j) is true iff a_ij >= h.
std::vector<std::vector<bool>> threshold_matrix(const Matrix& a, const Value& h);

/// Greatest h such that the level-h threshold matrix has a d x d submatrix
/// with nonzero permanent. Requires rows == cols + 1 and cols >= 1.
Value bottleneck_threshold(const Matrix& a);

enum class RowType { A, B, C, D, Free };  // A: M1xN1, B: M2xN1, C: M2xN2, D: M1xN2

struct KoenigDiagram {
  static constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

  Matrix a;
  Value t;
  /// Row i in M1 (else M2); column j in N1 (else N2). B^{<=t} = A_{M1 N1}.
  std::vector<bool> row_in_m1;
  std::vector<bool> col_in_n1;
  /// pi[i] is the column matched to row i, kFree for the free row.
  std::vector<std::size_t> pi;
  std::size_t free_row = 0;

  std::size_t d() const noexcept { return a.cols(); }
  std::size_t m1() const;
  std::size_t n1() const;
  /// Intersections of pi with A_{M1 N1}.
  std::size_t r() const;
  /// Intersections of pi with A_{M2 N2}.
  std::size_t s() const;
  /// m1 + n1 - d - 1 - r, never positive.
  long tightness() const;
  bool tight() const { return tightness() == 0; }
  RowType row_type(std::size_t i) const;
};

/// Empty when every diagram invariant holds, otherwise one message per violation.
std::vector<std::string> diagram_violations(const KoenigDiagram& diagram);
/// Throws SoundnessViolation listing the violations.
void check_diagram(const KoenigDiagram& diagram);

/// Initial diagram from a maximum matching and Koenig cover of the graph of
/// entries above the bottleneck threshold.
KoenigDiagram koenig_diagram(const Matrix& a);

enum class ImprovementKind {
  SinkingTight,  // sinking met a block of entries <= t; the enlarged block is tight
  LiftingBlock,  // lifting met a block of entries <= t; the block grows by one
  Cycle,         // the trajectory revisited a row; pi rotated along the cycle
  FreeRow,       // the trajectory reached the free row; pi shifted along it
};

struct ImprovementTrace {
  ImprovementKind kind;
  /// Trajectory rows in visiting order (the cycle or the path to the free row).
  std::vector<std::size_t> rows;
  /// Number of rows leaving A_{M1 N1}; the drop in r.
  std::size_t full_turns = 0;
  long tightness_before = 0;
  long tightness_after = 0;
};

/// A strictly tighter diagram. Throws PreconditionError when already tight.
KoenigDiagram improve_diagram(const KoenigDiagram& diagram, ImprovementTrace* trace = nullptr);

/// Repeated improvement from koenig_diagram until tight.
KoenigDiagram tight_diagram(const Matrix& a, std::vector<ImprovementTrace>* trace = nullptr);

struct InternalSeparation {
  Point point;
  /// sector[i] is the semispace index (0, or a 1-based coordinate) whose sector holds row i.
  std::vector<std::size_t> sector;
};

/// p in conv(X) with each x^i in the sector of a distinct semispace at p.
/// X must hold d+1 points of dimension d with every coordinate strictly inside the bounds.
InternalSeparation internal_separation(const std::vector<Point>& x, const SemiringBounds& bounds = {});

/// Direct construction for non-increasing rows.
InternalSeparation intsep_sorted(const std::vector<Point>& x, const SemiringBounds& bounds = {});

/// True iff sector assignment is a bijection onto {0..d} and each row lies in its sector at p.
bool verifies_internal_separation(const std::vector<Point>& x, const InternalSeparation& sep,
                                  const SemiringBounds& bounds = {});

}  // namespace maxmin
