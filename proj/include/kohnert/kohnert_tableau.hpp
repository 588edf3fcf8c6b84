#pragma once

// Kohnert tableaux: validation of the defining conditions, the canonical
// labeling of a Kohnert diagram, quasi-Yamanouchi filtering, destandardization
// and its fibers, the quasi-Kohnert conditions, thread decompositions, and the
// thread map.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "kohnert/composition.hpp"
#include "kohnert/diagram.hpp"

namespace kohnert {

struct LabeledCell {
  int row = 0;
  int col = 0;
  int label = 0;
  auto operator<=>(const LabeledCell&) const = default;
};

// A diagram whose cells carry labels from {1..n}, together with the content
// composition a recording how many of each label occur.
class KohnertTableau {
 public:
  KohnertTableau() = default;
  KohnertTableau(WeakComposition content, std::vector<LabeledCell> cells)
      : content_(std::move(content)), cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    for (std::size_t i = 1; i < cells_.size(); ++i)
      if (cells_[i - 1].row == cells_[i].row && cells_[i - 1].col == cells_[i].col)
        throw std::invalid_argument("tableau has duplicate cells");
  }

  const WeakComposition& content() const { return content_; }
  const std::vector<LabeledCell>& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }

  Diagram diagram() const {
    std::vector<Cell> cells;
    cells.reserve(cells_.size());
    for (const LabeledCell& c : cells_) cells.push_back(Cell{c.row, c.col});
    return Diagram(std::move(cells));
  }

  int label_at(int row, int col) const {  // 0 when the position is empty
    for (const LabeledCell& c : cells_)
      if (c.row == row && c.col == col) return c.label;
    return 0;
  }
  std::vector<LabeledCell> row_cells(int row) const {
    std::vector<LabeledCell> out;
    for (const LabeledCell& c : cells_)
      if (c.row == row) out.push_back(c);
    return out;  // sorted by column already
  }
  int max_row() const {
    int m = 0;
    for (const LabeledCell& c : cells_) m = std::max(m, c.row);
    return m;
  }
  int max_col() const {
    int m = 0;
    for (const LabeledCell& c : cells_) m = std::max(m, c.col);
    return m;
  }

  auto operator<=>(const KohnertTableau&) const = default;

 private:
  WeakComposition content_;
  std::vector<LabeledCell> cells_;
};

// wt(T): part i counts the cells in row i.  Lives at the content's length,
// which bounds every row index via Kohnert tableau condition (ii).
inline WeakComposition tableau_weight(const KohnertTableau& t) {
  const int n = t.content().length();
  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  for (const LabeledCell& c : t.cells()) {
    if (c.row < 1 || c.row > n) throw std::invalid_argument("tableau cell row outside 1..n");
    parts[static_cast<std::size_t>(c.row) - 1]++;
  }
  return WeakComposition(std::move(parts));
}

// Row i of the key diagram filled with i's.
inline KohnertTableau yamanouchi_tableau(const WeakComposition& a) {
  std::vector<LabeledCell> cells;
  for (int i = 1; i <= a.length(); ++i)
    for (int j = 1; j <= a.part(i); ++j) cells.push_back(LabeledCell{i, j, i});
  return KohnertTableau(a, std::move(cells));
}

// The four Kohnert tableau conditions against the declared content:
//   (i)  label i appears exactly once in each of columns 1..a_i and nowhere else;
//   (ii) every label is at least its row index;
//   (iii) cells sharing a label weakly descend from left to right;
//   (iv) labels i < j in one column with i above j force an i in the next
//        column strictly above j.
inline bool validate_kt(const KohnertTableau& t) {
  const WeakComposition& a = t.content();
  const int n = a.length();
  std::map<int, std::vector<LabeledCell>> by_label;
  for (const LabeledCell& c : t.cells()) {
    if (c.label < 1 || c.label > n) return false;
    if (c.row < 1 || c.col < 1) return false;
    by_label[c.label].push_back(c);
  }
  // (i)
  for (int i = 1; i <= n; ++i) {
    const auto it = by_label.find(i);
    const int count = it == by_label.end() ? 0 : static_cast<int>(it->second.size());
    if (count != a.part(i)) return false;
    if (it == by_label.end()) continue;
    std::set<int> cols;
    for (const LabeledCell& c : it->second) {
      if (c.col > a.part(i)) return false;
      if (!cols.insert(c.col).second) return false;
    }
  }
  // (ii)
  for (const LabeledCell& c : t.cells())
    if (c.label < c.row) return false;
  // (iii): by_label entries are sorted by (row, col); re-check by column order.
  for (auto& [label, cells] : by_label) {
    std::sort(cells.begin(), cells.end(),
              [](const LabeledCell& x, const LabeledCell& y) { return x.col < y.col; });
    for (std::size_t i = 1; i < cells.size(); ++i)
      if (cells[i].row > cells[i - 1].row) return false;
  }
  // (iv)
  const int cmax = t.max_col();
  for (int col = 1; col <= cmax; ++col) {
    std::vector<LabeledCell> column;
    for (const LabeledCell& c : t.cells())
      if (c.col == col) column.push_back(c);
    for (const LabeledCell& upper : column) {
      for (const LabeledCell& lower : column) {
        if (upper.label < lower.label && upper.row > lower.row) {
          bool witness = false;
          for (const LabeledCell& c : t.cells())
            if (c.col == col + 1 && c.label == upper.label && c.row > lower.row) witness = true;
          if (!witness) return false;
        }
      }
    }
  }
  return true;
}

// L_a(D): label columns right to left, each column bottom to top, choosing at
// every cell the smallest unused label i whose occurrence in the column to the
// right (if any) is weakly lower.  Requires column k of D to hold exactly
// #{i : a_i >= k} cells.  Absent when the result violates condition (ii),
// which happens exactly when D is not a Kohnert diagram for a.
inline std::optional<KohnertTableau> kohnert_label(const Diagram& d, const WeakComposition& a) {
  const int cmax = std::max(d.max_col(), a.max_part());
  for (int k = 1; k <= cmax; ++k) {
    int expected = 0;
    for (int i = 1; i <= a.length(); ++i)
      if (a.part(i) >= k) ++expected;
    if (static_cast<int>(d.column_rows(k).size()) != expected)
      throw std::invalid_argument("column cell counts of diagram do not match content " + a.str());
  }
  std::map<int, std::map<int, int>> label_row_by_col;  // col -> label -> row
  std::vector<LabeledCell> cells;
  for (int col = cmax; col >= 1; --col) {
    std::vector<int> needed;
    for (int i = 1; i <= a.length(); ++i)
      if (a.part(i) >= col) needed.push_back(i);
    std::vector<bool> used(needed.size(), false);
    for (int row : d.column_rows(col)) {
      bool placed = false;
      for (std::size_t t = 0; t < needed.size() && !placed; ++t) {
        if (used[t]) continue;
        const int label = needed[t];
        const auto right = label_row_by_col.find(col + 1);
        if (right != label_row_by_col.end()) {
          const auto it = right->second.find(label);
          if (it != right->second.end() && it->second > row) continue;
        }
        used[t] = true;
        label_row_by_col[col][label] = row;
        cells.push_back(LabeledCell{row, col, label});
        placed = true;
      }
      if (!placed) return std::nullopt;
    }
  }
  for (const LabeledCell& c : cells)
    if (c.label < c.row) return std::nullopt;
  return KohnertTableau(a, std::move(cells));
}

// KT(a) via labeling the closure; the labeling is total on KM(a).
inline std::vector<KohnertTableau> enumerate_kt(const WeakComposition& a) {
  std::vector<KohnertTableau> out;
  for (const Diagram& d : kohnert_closure(a)) {
    auto labeled = kohnert_label(d, a);
    if (!labeled)
      throw std::logic_error("labeling failed on a closure element of " + a.str());
    out.push_back(std::move(*labeled));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Quasi-Yamanouchi: every nonempty row i either holds a cell labeled i or is
// anchored by a cell of row i+1 lying weakly right of some cell of row i.
inline bool is_quasi_yamanouchi(const KohnertTableau& t) {
  std::map<int, std::vector<int>> cols_by_row;
  for (const LabeledCell& c : t.cells()) cols_by_row[c.row].push_back(c.col);
  for (const auto& [row, cols] : cols_by_row) {
    bool own_label = false;
    for (const LabeledCell& c : t.cells())
      if (c.row == row && c.label == row) own_label = true;
    if (own_label) continue;
    const auto above = cols_by_row.find(row + 1);
    if (above == cols_by_row.end()) return false;
    const int above_max = *std::max_element(above->second.begin(), above->second.end());
    const int here_min = *std::min_element(cols.begin(), cols.end());
    if (above_max < here_min) return false;
  }
  return true;
}

inline std::vector<KohnertTableau> enumerate_qkt(const WeakComposition& a) {
  std::vector<KohnertTableau> out;
  for (const KohnertTableau& t : enumerate_kt(a))
    if (is_quasi_yamanouchi(t)) out.push_back(t);
  return out;
}

// Quasi-Kohnert: the first column strictly increases bottom to top, and for
// labels i < j in consecutive columns with i left of and weakly above j the
// content satisfies a_i >= a_j.
inline bool is_quasi_kohnert(const KohnertTableau& t) {
  const WeakComposition& a = t.content();
  std::vector<LabeledCell> first;
  for (const LabeledCell& c : t.cells())
    if (c.col == 1) first.push_back(c);
  for (std::size_t i = 1; i < first.size(); ++i)
    if (first[i].label <= first[i - 1].label) return false;  // cells sorted by row
  for (const LabeledCell& left : t.cells()) {
    for (const LabeledCell& right : t.cells()) {
      if (right.col != left.col + 1) continue;
      if (left.row < right.row) continue;
      if (left.label < right.label && a.part(left.label) < a.part(right.label)) return false;
    }
  }
  return true;
}

inline std::vector<KohnertTableau> enumerate_quasi_kohnert(const WeakComposition& a) {
  std::vector<KohnertTableau> out;
  for (const KohnertTableau& t : enumerate_kt(a))
    if (is_quasi_kohnert(t)) out.push_back(t);
  return out;
}

inline std::vector<KohnertTableau> enumerate_qqkt(const WeakComposition& a) {
  std::vector<KohnertTableau> out;
  for (const KohnertTableau& t : enumerate_kt(a))
    if (is_quasi_kohnert(t) && is_quasi_yamanouchi(t)) out.push_back(t);
  return out;
}

namespace detail {

// Destandardization on a raw cell set.  Rows may be nonpositive (used while
// normalizing spring-loaded pushes); each lift raises a whole row by one, so
// the loop terminates once every row is anchored or carries its own label.
inline std::vector<LabeledCell> destandardize_cells(std::vector<LabeledCell> cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<int, std::vector<LabeledCell>> rows;
    for (const LabeledCell& c : cells) rows[c.row].push_back(c);
    for (auto& [row, row_cells] : rows) {
      std::sort(row_cells.begin(), row_cells.end(),
                [](const LabeledCell& x, const LabeledCell& y) { return x.col < y.col; });
      if (row_cells.front().label <= row) continue;
      const auto above = rows.find(row + 1);
      if (above != rows.end()) {
        int above_max = 0;
        for (const LabeledCell& c : above->second) above_max = std::max(above_max, c.col);
        if (row_cells.front().col <= above_max) continue;
      }
      for (LabeledCell& c : cells)
        if (c.row == row) c.row = row + 1;
      changed = true;
      break;
    }
  }
  return cells;
}

}  // namespace detail

// dst(T): repeatedly lift any row that sits strictly right of the row above it
// and whose leftmost label exceeds its index.  Identity exactly on
// quasi-Yamanouchi tableaux.
inline KohnertTableau destandardize(const KohnertTableau& t) {
  return KohnertTableau(t.content(), detail::destandardize_cells(t.cells()));
}

// The unique T with wt(T) = b and dst(T) = U: split each nonzero row of U,
// right to left, into blocks sized by the refinement of flat(b) against
// flat(wt(U)), dropping blocks to the rows given by b's nonzero positions.
inline KohnertTableau destandardization_fiber(const KohnertTableau& u, const WeakComposition& b) {
  if (!is_quasi_yamanouchi(u))
    throw std::invalid_argument("destandardization_fiber requires a quasi-Yamanouchi tableau");
  const WeakComposition wt = tableau_weight(u);
  if (b.length() != wt.length())
    throw std::invalid_argument("fiber weight length mismatch");
  if (!dominates(b, wt))
    throw std::invalid_argument("fiber weight must dominate the tableau weight");
  const StrongComposition flat_b = flatten(b);
  const StrongComposition flat_wt = flatten(wt);
  if (!refines(flat_b, flat_wt))
    throw std::invalid_argument("flattened fiber weight must refine the flattened tableau weight");
  const std::vector<int> blocks = refinement_blocks(flat_b, flat_wt);

  std::vector<int> positions;  // nonzero positions of b, ascending
  for (int i = 1; i <= b.length(); ++i)
    if (b.part(i) > 0) positions.push_back(i);

  std::vector<LabeledCell> cells = u.cells();
  int part_index = 0;  // walks flat_b
  int block_index = 0;
  for (int row = 1; row <= wt.length(); ++row) {
    if (wt.part(row) == 0) continue;
    ++block_index;
    std::vector<LabeledCell*> row_cells;
    for (LabeledCell& c : cells)
      if (c.row == row) row_cells.push_back(&c);
    std::sort(row_cells.begin(), row_cells.end(),
              [](const LabeledCell* x, const LabeledCell* y) { return x->col > y->col; });
    std::size_t next = 0;
    while (part_index < static_cast<int>(blocks.size()) && blocks[static_cast<std::size_t>(part_index)] == block_index) {
      const int target_row = positions[static_cast<std::size_t>(part_index)];
      const int count = flat_b.part(part_index + 1);
      for (int c = 0; c < count; ++c) row_cells[next++]->row = target_row;
      ++part_index;
    }
  }
  return KohnertTableau(u.content(), std::move(cells));
}

// An ordered partition of a diagram's cells into threads.  Each thread spans
// consecutive columns from its start down to column 1, at most one cell per
// column, rows weakly descending from left to right.
struct ThreadDecomposition {
  std::vector<std::vector<Cell>> threads;  // each thread ordered right to left
};

// Greedy threading: start each thread at the lowest unthreaded cell of the
// rightmost unfinished column, then extend leftward through the lowest
// unthreaded cell weakly above the previous one.
inline ThreadDecomposition thread_decompose(const Diagram& d) {
  if (!is_kohnert_diagram(d))
    throw std::invalid_argument("thread decomposition requires a Kohnert diagram");
  std::set<Cell> unthreaded(d.cells().begin(), d.cells().end());
  ThreadDecomposition out;
  while (!unthreaded.empty()) {
    int start_col = 0;
    for (const Cell& c : unthreaded) start_col = std::max(start_col, c.col);
    int row = 0;
    for (const Cell& c : unthreaded)
      if (c.col == start_col && (row == 0 || c.row < row)) row = c.row;
    std::vector<Cell> thread{Cell{row, start_col}};
    unthreaded.erase(Cell{row, start_col});
    for (int col = start_col - 1; col >= 1; --col) {
      int best = 0;
      for (const Cell& c : unthreaded)
        if (c.col == col && c.row >= thread.back().row && (best == 0 || c.row < best)) best = c.row;
      if (best == 0)
        throw std::logic_error("thread stopped before column 1 in a Kohnert diagram");
      thread.push_back(Cell{best, col});
      unthreaded.erase(Cell{best, col});
    }
    out.threads.push_back(std::move(thread));
  }
  return out;
}

// theta(T): relabel each thread with the positions of the nonzero parts of the
// Qlswap(a) representative whose flattening matches the thread lengths read in
// increasing order of the threads' column-1 rows.
inline KohnertTableau thread_map(const KohnertTableau& t) {
  const ThreadDecomposition dec = thread_decompose(t.diagram());
  std::vector<std::pair<int, const std::vector<Cell>*>> ordered;  // (col-1 row, thread)
  for (const auto& thread : dec.threads) ordered.emplace_back(thread.back().row, &thread);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<int> flat;
  for (const auto& [row, thread] : ordered) flat.push_back(static_cast<int>(thread->size()));

  std::optional<WeakComposition> target;
  for (const WeakComposition& b : qlswap_set(t.content()))
    if (flatten(b).parts() == flat) target = b;
  if (!target)
    throw std::logic_error("thread lengths of a tableau of content " + t.content().str() +
                           " match no Qlswap representative");
  std::vector<int> positions;
  for (int i = 1; i <= target->length(); ++i)
    if (target->part(i) > 0) positions.push_back(i);

  std::vector<LabeledCell> cells;
  for (std::size_t k = 0; k < ordered.size(); ++k)
    for (const Cell& c : *ordered[k].second)
      cells.push_back(LabeledCell{c.row, c.col, positions[k]});
  return KohnertTableau(*target, std::move(cells));
}

}  // namespace kohnert
