#include "maxmin/koenig.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

#include "maxmin/errors.hpp"
#include "maxmin/semispace.hpp"

namespace maxmin {

Matrix::Matrix(std::size_t rows, std::size_t cols, Value fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::from_rows(const std::vector<Point>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().dim());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_same_dimension(rows.front().dim(), rows[i].dim(), "Matrix::from_rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Point Matrix::row(std::size_t i) const {
  return Point(std::vector<Value>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
}

Matrix Matrix::select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  Matrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
  }
  return m;
}

std::vector<std::vector<bool>> threshold_matrix(const Matrix& a, const Value& h) {
  std::vector<std::vector<bool>> out(a.rows(), std::vector<bool>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = h <= a(i, j);
  }
  return out;
}

namespace {

constexpr std::size_t kNone = KoenigDiagram::kFree;

// Maximum bipartite matching by augmenting paths, rows tried in index order.
// match_col[j] is the row matched to column j. Rows with skip[i] are ignored.
struct Matching {
  std::vector<std::size_t> match_row;
  std::vector<std::size_t> match_col;
  std::size_t size = 0;
};

Matching max_matching(std::size_t rows, std::size_t cols, const std::function<bool(std::size_t, std::size_t)>& edge,
                      std::size_t skip_row = kNone) {
  Matching m{std::vector<std::size_t>(rows, kNone), std::vector<std::size_t>(cols, kNone), 0};
  std::vector<bool> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!edge(i, j) || seen[j]) continue;
      seen[j] = true;
      if (m.match_col[j] == kNone || augment(m.match_col[j])) {
        m.match_col[j] = i;
        m.match_row[i] = j;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < rows; ++i) {
    if (i == skip_row) continue;
    seen.assign(cols, false);
    if (augment(i)) ++m.size;
  }
  return m;
}

void require_shape(const Matrix& a, const char* what) {
  if (a.cols() == 0 || a.rows() != a.cols() + 1) {
    throw PreconditionError(std::string(what) + " needs an (n+1) x n matrix with n >= 1, got " +
                            std::to_string(a.rows()) + " x " + std::to_string(a.cols()));
  }
}

}  // namespace

Value bottleneck_threshold(const Matrix& a) {
  require_shape(a, "bottleneck_threshold");
  std::vector<Value> entries;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) entries.push_back(a(i, j));
  }
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  const std::size_t d = a.cols();
  auto feasible = [&](const Value& h) {
    return max_matching(a.rows(), d, [&](std::size_t i, std::size_t j) { return h <= a(i, j); }).size == d;
  };
  // entries.front() is always feasible; find the last feasible entry.
  std::size_t lo = 0;
  std::size_t hi = entries.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    if (feasible(entries[mid])) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return entries[lo];
}

std::size_t KoenigDiagram::m1() const { return static_cast<std::size_t>(std::count(row_in_m1.begin(), row_in_m1.end(), true)); }
std::size_t KoenigDiagram::n1() const { return static_cast<std::size_t>(std::count(col_in_n1.begin(), col_in_n1.end(), true)); }

std::size_t KoenigDiagram::r() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < pi.size(); ++i) c += row_type(i) == RowType::A ? 1 : 0;
  return c;
}

std::size_t KoenigDiagram::s() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < pi.size(); ++i) c += row_type(i) == RowType::C ? 1 : 0;
  return c;
}

long KoenigDiagram::tightness() const {
  return static_cast<long>(m1() + n1()) - static_cast<long>(d()) - 1 - static_cast<long>(r());
}

RowType KoenigDiagram::row_type(std::size_t i) const {
  if (pi[i] == kFree) return RowType::Free;
  const bool m1_row = row_in_m1[i];
  const bool n1_col = col_in_n1[pi[i]];
  if (m1_row) return n1_col ? RowType::A : RowType::D;
  return n1_col ? RowType::B : RowType::C;
}

std::vector<std::string> diagram_violations(const KoenigDiagram& g) {
  std::vector<std::string> out;
  const std::size_t d = g.d();
  const std::size_t n = g.a.rows();
  if (n != d + 1 || g.row_in_m1.size() != n || g.col_in_n1.size() != d || g.pi.size() != n) {
    out.emplace_back("shape mismatch");
    return out;
  }
  std::vector<bool> used(d, false);
  std::size_t frees = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.pi[i] == KoenigDiagram::kFree) {
      ++frees;
      if (i != g.free_row) out.emplace_back("row " + std::to_string(i) + " unmatched but not the free row");
      continue;
    }
    if (g.pi[i] >= d || used[g.pi[i]]) {
      out.emplace_back("pi is not injective into the columns at row " + std::to_string(i));
      continue;
    }
    used[g.pi[i]] = true;
    if (g.a(i, g.pi[i]) < g.t) out.emplace_back("pi entry below t at row " + std::to_string(i));
  }
  if (frees != 1) out.emplace_back("expected exactly one free row, found " + std::to_string(frees));
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.row_in_m1[i]) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (g.col_in_n1[j] && g.t < g.a(i, j)) {
        out.emplace_back("entry (" + std::to_string(i) + "," + std::to_string(j) + ") of B exceeds t");
      }
    }
  }
  const std::size_t m1 = g.m1();
  const std::size_t n1 = g.n1();
  if (m1 + n1 <= d + 1) out.emplace_back("m1 + n1 <= d + 1");
  const long tight = g.tightness();
  if (tight > 0) out.emplace_back("positive tightness");
  // Row/column count identity: d = r + |D| + |B| + s, with |D| = m1 - r - [f in M1] and |B| = n1 - r.
  std::size_t counts[4] = {0, 0, 0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    const auto type = g.row_type(i);
    if (type != RowType::Free) ++counts[static_cast<int>(type)];
  }
  const std::size_t r = counts[0];
  const std::size_t f_in_m1 = g.free_row < n && g.row_in_m1[g.free_row] ? 1 : 0;
  if (counts[0] + counts[1] + counts[2] + counts[3] != d) out.emplace_back("pi does not cover d rows");
  if (counts[3] + r + f_in_m1 != m1) out.emplace_back("row count identity fails for M1");
  if (counts[1] + r != n1) out.emplace_back("column count identity fails for N1");
  const long expected = f_in_m1 ? -static_cast<long>(counts[2]) : -static_cast<long>(counts[2]) - 1;
  if (tight != expected) out.emplace_back("tightness disagrees with the free row and s");
  return out;
}

void check_diagram(const KoenigDiagram& diagram) {
  const auto v = diagram_violations(diagram);
  if (v.empty()) return;
  std::ostringstream os;
  os << "invalid Koenig diagram:";
  for (const auto& s : v) os << ' ' << s << ';';
  throw SoundnessViolation(os.str());
}

KoenigDiagram koenig_diagram(const Matrix& a) {
  require_shape(a, "koenig_diagram");
  const std::size_t d = a.cols();
  const std::size_t n = a.rows();
  KoenigDiagram g;
  g.a = a;
  g.t = bottleneck_threshold(a);

  // pi at level t with the smallest row index that admits a perfect matching of the rest.
  auto at_t = [&](std::size_t i, std::size_t j) { return g.t <= a(i, j); };
  for (std::size_t f = 0; f < n; ++f) {
    const auto m = max_matching(n, d, at_t, f);
    if (m.size != d) continue;
    g.free_row = f;
    g.pi = m.match_row;
    break;
  }
  if (g.pi.empty()) throw SoundnessViolation("no level-t matching of size d");

  // Koenig cover of the graph of entries above t. Rows reachable from
  // unmatched rows by alternating paths form M1; reachable columns form N2.
  auto above = [&](std::size_t i, std::size_t j) { return g.t < a(i, j); };
  const auto m = max_matching(n, d, above);
  std::vector<bool> row_reached(n, false);
  std::vector<bool> col_reached(d, false);
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i) {
    if (m.match_row[i] == kNone) {
      row_reached[i] = true;
      queue.push_back(i);
    }
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const std::size_t i = queue[q];
    for (std::size_t j = 0; j < d; ++j) {
      if (!above(i, j) || col_reached[j]) continue;
      col_reached[j] = true;
      const std::size_t next = m.match_col[j];
      if (next != kNone && !row_reached[next]) {
        row_reached[next] = true;
        queue.push_back(next);
      }
    }
  }
  g.row_in_m1 = row_reached;
  g.col_in_n1.assign(d, false);
  for (std::size_t j = 0; j < d; ++j) g.col_in_n1[j] = !col_reached[j];
  check_diagram(g);
  return g;
}

namespace {

// Parent-linked search tree of one sinking or lifting phase.
struct Phase {
  std::vector<std::size_t> order;           // rows in insertion order, order[0] is the start
  std::vector<std::size_t> parent;          // parent[row] or kNone
  std::optional<std::size_t> end;           // row that ended the phase
  std::optional<KoenigDiagram> improved;    // set when the phase produced a new block

  std::vector<std::size_t> path_to_end() const {
    std::vector<std::size_t> path;
    for (std::size_t v = *end; v != kNone; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
  }
};

// Sinking from a row of type A: grows through rows of type B until a row of
// type C or the free row, or finds an all-<=t block on the visited columns.
// Lifting from a row of type C: grows through rows of type D until a row of
// type A or the free row, or finds an all-<=t block to extend B.
Phase run_phase(const KoenigDiagram& g, std::size_t start, bool sinking) {
  const std::size_t n = g.a.rows();
  Phase ph;
  ph.parent.assign(n, kNone);
  ph.order.push_back(start);
  std::vector<bool> in_tree(n, false);
  in_tree[start] = true;
  const RowType stop = sinking ? RowType::C : RowType::A;

  while (true) {
    const std::size_t last = ph.order.back();
    if (ph.order.size() > 1) {
      const auto type = g.row_type(last);
      if (type == RowType::Free || type == stop) {
        ph.end = last;
        return ph;
      }
    }
    // Candidate rows: outside the tree; sinking may take any row, lifting only rows of M1.
    std::optional<std::size_t> next;
    std::size_t via = kNone;
    for (std::size_t row = 0; row < n && !next; ++row) {
      if (in_tree[row]) continue;
      if (!sinking && !g.row_in_m1[row]) continue;
      for (std::size_t k : ph.order) {
        if (g.t < g.a(row, g.pi[k])) {
          next = row;
          via = k;
          break;
        }
      }
    }
    if (!next) {
      KoenigDiagram out = g;
      std::vector<bool> cols(g.d(), false);
      for (std::size_t k : ph.order) cols[g.pi[k]] = true;
      if (sinking) {
        // Block: all rows except the visited ones after the start, on the visited columns.
        for (std::size_t i = 0; i < n; ++i) out.row_in_m1[i] = !in_tree[i] || i == start;
        out.col_in_n1 = cols;
      } else {
        // Block: M1 minus the visited rows, on N1 plus the visited columns.
        for (std::size_t i = 0; i < n; ++i) out.row_in_m1[i] = g.row_in_m1[i] && !in_tree[i];
        for (std::size_t j = 0; j < g.d(); ++j) out.col_in_n1[j] = g.col_in_n1[j] || cols[j];
      }
      ph.improved = std::move(out);
      return ph;
    }
    ph.parent[*next] = via;
    in_tree[*next] = true;
    ph.order.push_back(*next);
  }
}

}  // namespace

KoenigDiagram improve_diagram(const KoenigDiagram& g, ImprovementTrace* trace) {
  check_diagram(g);
  if (g.tight()) throw PreconditionError("improve_diagram called on a tight diagram");
  const std::size_t n = g.a.rows();
  const long before = g.tightness();

  std::optional<std::size_t> k0;
  for (std::size_t i = 0; i < n && !k0; ++i) {
    if (g.row_type(i) == RowType::A) k0 = i;
  }
  if (!k0) throw SoundnessViolation("non-tight diagram without a row in A_{M1 N1}");

  auto finish = [&](KoenigDiagram out, ImprovementTrace t) {
    check_diagram(out);
    t.tightness_before = before;
    t.tightness_after = out.tightness();
    if (t.tightness_after <= before) throw SoundnessViolation("diagram improvement did not increase tightness");
    if (trace) *trace = std::move(t);
    return out;
  };

  std::vector<std::size_t> trajectory{*k0};
  std::vector<std::size_t> position(n, kNone);
  position[*k0] = 0;
  bool sinking = true;

  while (true) {
    const Phase ph = run_phase(g, trajectory.back(), sinking);
    if (ph.improved) {
      return finish(*ph.improved, {sinking ? ImprovementKind::SinkingTight : ImprovementKind::LiftingBlock,
                                   ph.order, 0, 0, 0});
    }
    const auto path = ph.path_to_end();
    for (std::size_t s = 1; s < path.size(); ++s) {
      const std::size_t v = path[s];
      if (position[v] != kNone) {
        // Cycle trajectory[position[v]..] closing back at v: each row takes the
        // column of its predecessor.
        std::vector<std::size_t> cycle(trajectory.begin() + static_cast<std::ptrdiff_t>(position[v]),
                                       trajectory.end());
        KoenigDiagram out = g;
        std::size_t turns = 0;
        for (std::size_t c = 0; c < cycle.size(); ++c) {
          const std::size_t prev = cycle[(c + cycle.size() - 1) % cycle.size()];
          out.pi[cycle[c]] = g.pi[prev];
          if (g.row_type(cycle[c]) == RowType::A) ++turns;
        }
        return finish(std::move(out), {ImprovementKind::Cycle, cycle, turns, 0, 0});
      }
      position[v] = trajectory.size();
      trajectory.push_back(v);
      if (g.row_type(v) == RowType::Free) {
        KoenigDiagram out = g;
        std::size_t turns = 0;
        for (std::size_t c = 1; c < trajectory.size(); ++c) {
          out.pi[trajectory[c]] = g.pi[trajectory[c - 1]];
          if (g.row_type(trajectory[c - 1]) == RowType::A) ++turns;
        }
        out.pi[trajectory.front()] = KoenigDiagram::kFree;
        out.free_row = trajectory.front();
        return finish(std::move(out), {ImprovementKind::FreeRow, trajectory, turns, 0, 0});
      }
    }
    sinking = !sinking;
  }
}

KoenigDiagram tight_diagram(const Matrix& a, std::vector<ImprovementTrace>* trace) {
  KoenigDiagram g = koenig_diagram(a);
  const long budget = -g.tightness();
  for (long round = 0; !g.tight(); ++round) {
    if (round >= budget) throw SoundnessViolation("tight_diagram exceeded its improvement budget");
    ImprovementTrace t;
    g = improve_diagram(g, &t);
    if (trace) trace->push_back(std::move(t));
  }
  return g;
}

namespace {

void require_finite_rows(const std::vector<Point>& x, const SemiringBounds& bounds, const char* what) {
  if (x.empty()) throw PreconditionError(std::string(what) + " needs d+1 points");
  const std::size_t d = x.front().dim();
  if (x.size() != d + 1) {
    throw PreconditionError(std::string(what) + " needs d+1 = " + std::to_string(d + 1) + " points, got " +
                            std::to_string(x.size()));
  }
  for (const auto& p : x) {
    require_same_dimension(d, p.dim(), what);
    for (const auto& v : p) {
      if (!bounds.finite(v)) {
        throw PreconditionError(std::string(what) + ": point " + p.str() +
                                " has a coordinate at or beyond the bounds; extend the bounds first");
      }
    }
  }
}

InternalSeparation separate_rows(const Matrix& a) {
  const std::size_t d = a.cols();
  if (d == 0) return {Point(), std::vector<std::size_t>(a.rows(), 0)};

  const KoenigDiagram g = tight_diagram(a);
  const std::size_t n = a.rows();
  std::vector<std::size_t> sub_rows;
  std::vector<std::size_t> sub_cols;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == g.free_row || (g.row_in_m1[i] && !g.col_in_n1[g.pi[i]])) sub_rows.push_back(i);
  }
  for (std::size_t j = 0; j < d; ++j) {
    if (!g.col_in_n1[j]) sub_cols.push_back(j);
  }
  if (sub_rows.size() != sub_cols.size() + 1) throw SoundnessViolation("tight diagram with unbalanced sub-instance");

  const InternalSeparation sub = separate_rows(a.select(sub_rows, sub_cols));

  std::vector<Value> p(d, g.t);
  for (std::size_t c = 0; c < sub_cols.size(); ++c) p[sub_cols[c]] = sub.point[c];
  InternalSeparation out{Point(std::move(p)), std::vector<std::size_t>(n, 0)};
  std::vector<bool> in_sub(n, false);
  for (std::size_t k = 0; k < sub_rows.size(); ++k) {
    in_sub[sub_rows[k]] = true;
    const std::size_t s = sub.sector[k];
    out.sector[sub_rows[k]] = s == 0 ? 0 : sub_cols[s - 1] + 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_sub[i]) out.sector[i] = g.pi[i] + 1;
  }
  return out;
}

}  // namespace

InternalSeparation internal_separation(const std::vector<Point>& x, const SemiringBounds& bounds) {
  require_finite_rows(x, bounds, "internal_separation");
  InternalSeparation out = separate_rows(Matrix::from_rows(x));
  if (!verifies_internal_separation(x, out, bounds)) {
    throw SoundnessViolation("internal_separation produced a point that does not separate the rows");
  }
  return out;
}

InternalSeparation intsep_sorted(const std::vector<Point>& x, const SemiringBounds& bounds) {
  require_finite_rows(x, bounds, "intsep_sorted");
  const std::size_t d = x.front().dim();
  for (const auto& p : x) {
    for (std::size_t k = 1; k < d; ++k) {
      if (p[k - 1] < p[k]) throw PreconditionError("intsep_sorted needs non-increasing rows, got " + p.str());
    }
  }
  // order[l] is the row placed at position l; position t (1-based coordinate) holds the row attaining y_t.
  std::vector<std::size_t> order(d + 1);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<Value> y(d);
  for (std::size_t t = d; t >= 1; --t) {
    std::size_t best = 0;
    for (std::size_t l = 1; l <= t; ++l) {
      const auto& cand = x[order[l]][t - 1];
      const auto& cur = x[order[best]][t - 1];
      if (cur < cand || (cand == cur && order[l] < order[best])) best = l;
    }
    std::swap(order[best], order[t]);
    y[t - 1] = x[order[t]][t - 1];
  }
  std::vector<Value> p(d);
  for (std::size_t t = 0; t < d; ++t) p[t] = t == 0 ? y[0] : min(p[t - 1], y[t]);
  InternalSeparation out{Point(std::move(p)), std::vector<std::size_t>(d + 1, 0)};
  for (std::size_t l = 0; l <= d; ++l) out.sector[order[l]] = l;
  if (!verifies_internal_separation(x, out, bounds)) {
    throw SoundnessViolation("intsep_sorted produced a point that does not separate the rows");
  }
  return out;
}

bool verifies_internal_separation(const std::vector<Point>& x, const InternalSeparation& sep,
                                  const SemiringBounds& bounds) {
  if (x.empty() || sep.sector.size() != x.size()) return false;
  const std::size_t d = x.front().dim();
  if (sep.point.dim() != d || x.size() != d + 1 || !sep.point.within(bounds)) return false;
  std::vector<bool> used(d + 1, false);
  const auto family = semispace_family(sep.point, bounds);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::size_t s = sep.sector[i];
    if (s > d || used[s]) return false;
    used[s] = true;
    const SemispaceId* id = family.find(s);
    if (id == nullptr || !sector_contains(*id, x[i])) return false;
  }
  return true;
}

}  // namespace maxmin
