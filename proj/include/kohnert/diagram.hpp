#pragma once

// Cell diagrams in the positive quadrant (French indexing, row 1 at the
// bottom), Kohnert moves, the breadth-first closure KM(a), and the static
// column-count criterion characterizing Kohnert diagrams.

#include <algorithm>
#include <compare>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "kohnert/composition.hpp"

namespace kohnert {

struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

// A finite set of cells.  The canonical serialization is the sorted cell list;
// Diagram values compare by it, which makes ordered containers deterministic.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
      throw std::invalid_argument("diagram has duplicate cells");
    for (const Cell& c : cells_)
      if (c.row < 1 || c.col < 1) throw std::invalid_argument("diagram cells must have row, col >= 1");
  }

  const std::vector<Cell>& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }
  int size() const { return static_cast<int>(cells_.size()); }
  bool contains(int row, int col) const {
    return std::binary_search(cells_.begin(), cells_.end(), Cell{row, col});
  }
  int max_row() const {
    int m = 0;
    for (const Cell& c : cells_) m = std::max(m, c.row);
    return m;
  }
  int max_col() const {
    int m = 0;
    for (const Cell& c : cells_) m = std::max(m, c.col);
    return m;
  }
  // Rows of the cells in the given column, ascending.
  std::vector<int> column_rows(int col) const {
    std::vector<int> rows;
    for (const Cell& c : cells_)
      if (c.col == col) rows.push_back(c.row);
    std::sort(rows.begin(), rows.end());
    return rows;
  }
  std::vector<int> row_cols(int row) const {
    std::vector<int> cols;
    for (const Cell& c : cells_)
      if (c.row == row) cols.push_back(c.col);
    std::sort(cols.begin(), cols.end());
    return cols;
  }

  auto operator<=>(const Diagram&) const = default;

 private:
  std::vector<Cell> cells_;
};

// D_a: a_i left-justified cells in row i.
inline Diagram key_diagram(const WeakComposition& a) {
  std::vector<Cell> cells;
  for (int i = 1; i <= a.length(); ++i)
    for (int j = 1; j <= a.part(i); ++j) cells.push_back(Cell{i, j});
  return Diagram(std::move(cells));
}

// Kohnert move on the given row: the rightmost cell drops to the highest empty
// position strictly below it in its column, jumping occupied cells.  Absent
// when the row is empty or every position below is occupied.
inline std::optional<Diagram> kohnert_move(const Diagram& d, int row) {
  const std::vector<int> cols = d.row_cols(row);
  if (cols.empty()) return std::nullopt;
  const int col = cols.back();
  for (int target = row - 1; target >= 1; --target) {
    if (!d.contains(target, col)) {
      std::vector<Cell> cells = d.cells();
      cells.erase(std::find(cells.begin(), cells.end(), Cell{row, col}));
      cells.push_back(Cell{target, col});
      return Diagram(std::move(cells));
    }
  }
  return std::nullopt;
}

// KM(a): the closure of the key diagram of a under Kohnert moves, computed by
// BFS with canonical-serialization dedup.  Emitted in canonical diagram order.
inline std::vector<Diagram> kohnert_closure(const WeakComposition& a) {
  const Diagram start = key_diagram(a);
  std::set<Diagram> seen{start};
  std::deque<Diagram> frontier{start};
  while (!frontier.empty()) {
    const Diagram d = frontier.front();
    frontier.pop_front();
    for (int row = 1; row <= d.max_row(); ++row) {
      if (auto moved = kohnert_move(d, row)) {
        if (seen.insert(*moved).second) frontier.push_back(*moved);
      }
    }
  }
  return std::vector<Diagram>(seen.begin(), seen.end());
}

// The static criterion: D arises from some key diagram via Kohnert moves iff
// for every position (i,j) with j > 1 the number of cells weakly above (i,j)
// in column j is at most the number weakly above (i,j-1) in column j-1.
inline bool is_kohnert_diagram(const Diagram& d) {
  const int rmax = d.max_row();
  const int cmax = d.max_col();
  for (int j = 2; j <= cmax; ++j) {
    const std::vector<int> right = d.column_rows(j);
    const std::vector<int> left = d.column_rows(j - 1);
    for (int i = 1; i <= rmax; ++i) {
      const auto above = [i](const std::vector<int>& rows) {
        return static_cast<int>(std::count_if(rows.begin(), rows.end(), [i](int r) { return r >= i; }));
      };
      if (above(right) > above(left)) return false;
    }
  }
  return true;
}

// wt(D) at length n: part i counts the cells in row i.
inline WeakComposition diagram_weight(const Diagram& d, int n) {
  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  for (const Cell& c : d.cells()) {
    if (c.row > n)
      throw std::invalid_argument("diagram has a cell above the requested weight length");
    parts[static_cast<std::size_t>(c.row) - 1]++;
  }
  return WeakComposition(std::move(parts));
}

}  // namespace kohnert
