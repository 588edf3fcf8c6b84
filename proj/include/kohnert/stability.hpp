#pragma once

// Stability of slide expansions: the t_{i,j} injections between
// quasi-Yamanouchi families, spring-loaded pushes and their connectivity
// graph, count profiles along zero-padding, and the stable expansion.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "kohnert/composition.hpp"
#include "kohnert/expand.hpp"
#include "kohnert/kohnert_tableau.hpp"
#include "kohnert/polynomial.hpp"

namespace kohnert {

namespace detail {

inline void check_t_preconditions(const WeakComposition& a, int i, int j) {
  const int n = a.length();
  if (i < 2 || j <= i || j > n) throw std::invalid_argument("t_{i,j} needs 2 <= i < j <= n");
  if (!(a.part(i - 1) < a.part(j) && a.part(j) < a.part(i)))
    throw std::invalid_argument("t_{i,j} needs a_{i-1} < a_j < a_i");
  for (int p = i; p + 1 <= j - 1; ++p)
    if (a.part(p) > a.part(p + 1))
      throw std::invalid_argument("t_{i,j} needs a_i <= a_{i+1} <= ... <= a_{j-1}");
  bool zero_before = false;
  for (int p = 1; p < i; ++p)
    if (a.part(p) == 0) zero_before = true;
  if (!zero_before) throw std::invalid_argument("t_{i,j} needs a zero before position i");
}

}  // namespace detail

// The target content of t_{i,j}: slide the maximal run of nonzero entries
// immediately left of a_i one slot left, then swap positions i-1 and j.
inline WeakComposition t_target(const WeakComposition& a, int i, int j) {
  detail::check_t_preconditions(a, i, j);
  std::vector<int> parts = a.parts();
  if (a.part(i - 1) != 0) {
    int k = i - 1;
    while (k - 1 >= 1 && a.part(k - 1) > 0) --k;
    for (int p = k; p <= i - 1; ++p) parts[static_cast<std::size_t>(p) - 2] = a.part(p);
    parts[static_cast<std::size_t>(i) - 2] = 0;
  }
  std::swap(parts[static_cast<std::size_t>(i) - 2], parts[static_cast<std::size_t>(j) - 1]);
  return WeakComposition(std::move(parts));
}

// t_{i,j} on a quasi-Yamanouchi Kohnert tableau: decrement the entries of the
// slid run, erase entries i..j from columns 1..a_j, refill those cells bottom
// to top with i-1..j-1, and drop row j (with any rows in the way below it)
// when j-1 lands in it.  The result is checked against the canonical labeling
// of its own shape under the target content; a mismatch is surfaced.
inline KohnertTableau t_move(const KohnertTableau& t, int i, int j) {
  const WeakComposition& a = t.content();
  const WeakComposition b = t_target(a, i, j);
  if (!validate_kt(t) || !is_quasi_yamanouchi(t))
    throw std::invalid_argument("t_move requires a quasi-Yamanouchi Kohnert tableau");

  std::vector<LabeledCell> cells = t.cells();
  if (a.part(i - 1) != 0) {
    int k = i - 1;
    while (k - 1 >= 1 && a.part(k - 1) > 0) --k;
    for (LabeledCell& c : cells)
      if (c.label >= k && c.label <= i - 1) c.label -= 1;
  }
  const int aj = a.part(j);
  for (int col = 1; col <= aj; ++col) {
    std::vector<LabeledCell*> erased;
    for (LabeledCell& c : cells)
      if (c.col == col && c.label >= i && c.label <= j) erased.push_back(&c);
    if (static_cast<int>(erased.size()) != j - i + 1)
      throw std::logic_error("t_move: unexpected label census in column");
    std::sort(erased.begin(), erased.end(),
              [](const LabeledCell* x, const LabeledCell* y) { return x->row < y->row; });
    int label = i - 1;
    for (LabeledCell* c : erased) c->label = label++;
  }

  bool drop = false;
  for (const LabeledCell& c : cells)
    if (c.row == j && c.label == j - 1) drop = true;
  if (drop) {
    // Row j moves down one together with the maximal run of nonempty rows
    // immediately below it; the run ends above an empty row.
    auto row_empty = [&cells](int row) {
      for (const LabeledCell& c : cells)
        if (c.row == row) return false;
      return true;
    };
    std::set<int> moving{j};
    for (int r = j - 1; r >= 1 && !row_empty(r); --r) moving.insert(r);
    for (LabeledCell& c : cells)
      if (moving.count(c.row)) {
        // The image exists only virtually (a cell below row 1).  This
        // implementation stays in the positive quadrant; padding the content
        // with zeros moves the whole family up and back into range.
        if (c.row == 1)
          throw std::invalid_argument("t_move image leaves the positive quadrant for " +
                                      a.str() + "; prepend zeros first");
        c.row -= 1;
      }
  }

  KohnertTableau result(b, std::move(cells));
  auto canonical = kohnert_label(result.diagram(), b);
  if (!canonical || *canonical != result)
    throw std::logic_error("t_move result differs from the canonical labeling under " + b.str());
  if (!is_quasi_yamanouchi(result))
    throw std::logic_error("t_move result is not quasi-Yamanouchi");
  return result;
}

// A spring-loaded push on the given row of a quasi-Yamanouchi tableau.  C is
// the rightmost cell of the row, j the highest nonempty row below, D the
// leftmost cell of row j.
//   (1) D strictly left of C and (columns nonadjacent or label D < label C):
//       every cell below row i except D drops one row and C drops to row j.
//   (2) C above D with a neighbor E right of D and label C exceeding both:
//       row j stays put, everything strictly below it drops one row, and C
//       drops to row j-1.
// Destandardization then restores the quasi-Yamanouchi condition.  Absent when
// neither case applies or when the result would leave the positive quadrant.
inline std::optional<KohnertTableau> spring_push(const KohnertTableau& t, int row) {
  if (!is_quasi_yamanouchi(t))
    throw std::invalid_argument("spring_push requires a quasi-Yamanouchi tableau");
  const std::vector<LabeledCell> row_cells = t.row_cells(row);
  if (row_cells.empty()) return std::nullopt;
  const LabeledCell c_cell = row_cells.back();
  int j = 0;
  for (const LabeledCell& c : t.cells())
    if (c.row < row) j = std::max(j, c.row);
  if (j == 0) return std::nullopt;
  const std::vector<LabeledCell> j_cells = t.row_cells(j);
  const LabeledCell d_cell = j_cells.front();

  std::vector<LabeledCell> cells = t.cells();
  auto find_cell = [&cells](int r, int c) -> LabeledCell* {
    for (LabeledCell& x : cells)
      if (x.row == r && x.col == c) return &x;
    return nullptr;
  };
  LabeledCell* c_ptr = find_cell(c_cell.row, c_cell.col);

  const bool case1 = d_cell.col < c_cell.col &&
                     (c_cell.col - d_cell.col >= 2 || d_cell.label < c_cell.label);
  if (case1) {
    for (LabeledCell& x : cells) {
      if (&x == c_ptr) continue;
      if (x.row < row && !(x.row == d_cell.row && x.col == d_cell.col)) x.row -= 1;
    }
    c_ptr->row = j;
  } else {
    const LabeledCell* e_cell = nullptr;
    for (const LabeledCell& x : j_cells)
      if (x.col == d_cell.col + 1) e_cell = &x;
    const bool case2 = d_cell.col == c_cell.col && e_cell != nullptr &&
                       c_cell.label > d_cell.label && c_cell.label > e_cell->label;
    if (!case2) return std::nullopt;
    for (LabeledCell& x : cells) {
      if (&x == c_ptr) continue;
      if (x.row < j) x.row -= 1;
    }
    c_ptr->row = j - 1;
  }

  std::vector<LabeledCell> settled = detail::destandardize_cells(std::move(cells));
  for (const LabeledCell& x : settled)
    if (x.row < 1) return std::nullopt;
  KohnertTableau result(t.content(), std::move(settled));
  if (!validate_kt(result) || !is_quasi_yamanouchi(result))
    throw std::logic_error("spring push left the quasi-Yamanouchi family");
  return result;
}

// The undirected graph on QKT(a) whose edges join tableaux related by a
// spring-loaded push.
struct SpringGraph {
  std::vector<KohnertTableau> vertices;
  std::vector<std::pair<int, int>> edges;  // indices into vertices, first < second
  bool connected = true;
};

inline SpringGraph spring_graph(const WeakComposition& a) {
  SpringGraph g;
  g.vertices = enumerate_qkt(a);
  std::map<KohnertTableau, int> index;
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    index[g.vertices[v]] = static_cast<int>(v);
  std::set<std::pair<int, int>> edges;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    for (int row = 1; row <= a.length(); ++row) {
      const auto pushed = spring_push(g.vertices[v], row);
      if (!pushed) continue;
      const auto it = index.find(*pushed);
      if (it == index.end()) throw std::logic_error("spring push escaped QKT(" + a.str() + ")");
      const int u = it->second;
      if (u != static_cast<int>(v)) edges.insert({std::min<int>(v, u), std::max<int>(v, u)});
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  if (!g.vertices.empty()) {
    std::vector<bool> seen(g.vertices.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& [x, y] : g.edges) {
        if (x == v && !seen[static_cast<std::size_t>(y)]) { seen[static_cast<std::size_t>(y)] = true; stack.push_back(y); }
        if (y == v && !seen[static_cast<std::size_t>(x)]) { seen[static_cast<std::size_t>(x)] = true; stack.push_back(x); }
      }
    }
    g.connected = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }
  return g;
}

// (#QKT(0^m x a)) for m = 0..m_max; strictly increasing up to eta(a) and
// constant beyond, with the constant equal to the number of standard Young
// tableaux of shape sort(a).
inline std::vector<long long> stability_profile(const WeakComposition& a, int m_max) {
  if (m_max < eta(a)) throw std::invalid_argument("stability_profile requires m_max >= eta(a)");
  std::vector<long long> counts;
  for (int m = 0; m <= m_max; ++m)
    counts.push_back(static_cast<long long>(enumerate_qkt(prepend_zeros(a, m)).size()));
  return counts;
}

inline Expansion shift_expansion(const Expansion& e, int m) {
  Expansion out(e.basis());
  for (const auto& [index, coeff] : e.terms()) {
    std::vector<int> shifted(static_cast<std::size_t>(m), 0);
    shifted.insert(shifted.end(), index.begin(), index.end());
    out.add(shifted, coeff);
  }
  return out;
}

// The slide expansion of kappa at the stability point: padding by eta(a)
// zeros (never a negative pad) makes every further padding a pure shift.
inline Expansion stable_slide_expansion(const WeakComposition& a) {
  const int m0 = std::max(eta(a), 0);
  return key_to_slides(prepend_zeros(a, m0));
}

}  // namespace kohnert
