#pragma once

// The bijections connecting Kohnert-side objects to the quasisymmetric side:
// KT(a) <-> SSYT_k(rev(a)) for weakly increasing content, phi from
// quasi-Yamanouchi Kohnert tableaux to quasi-Yamanouchi SSYT, psi from
// quasi-Yamanouchi quasi-Kohnert tableaux to standard composition tableaux,
// and the fundamental expansions they index.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "kohnert/composition.hpp"
#include "kohnert/composition_tableau.hpp"
#include "kohnert/kohnert_tableau.hpp"
#include "kohnert/polynomial.hpp"
#include "kohnert/young.hpp"

namespace kohnert {

namespace detail {

inline void require_increasing_content(const WeakComposition& a, int k) {
  if (k < 0 || k > a.length()) throw std::invalid_argument("prefix bound outside 0..n");
  for (int i = k + 1; i <= a.length(); ++i)
    if (a.part(i) != 0) throw std::invalid_argument("content must vanish beyond the prefix bound");
  for (int i = 2; i <= k; ++i)
    if (a.part(i - 1) > a.part(i))
      throw std::invalid_argument("content prefix must weakly increase");
}

}  // namespace detail

// The weight-reversing bijection KT(a) -> SSYT_k(rev(a)) for a with weakly
// increasing prefix a_1 <= ... <= a_k and zeros beyond: replace label i by
// k+1-i, add the fall distance, and stack columns.  The entry at the j-th
// highest cell of a column is k+1-row, which lands at French row j.
inline YoungTableau kt_to_ssyt(const KohnertTableau& t, int k) {
  detail::require_increasing_content(t.content(), k);
  std::map<int, std::vector<int>> column_rows;  // col -> rows descending
  for (const LabeledCell& c : t.cells()) column_rows[c.col].push_back(c.row);
  for (auto& [col, rows] : column_rows) std::sort(rows.begin(), rows.end(), std::greater<int>());
  std::vector<std::vector<int>> rows;
  for (const auto& [col, cell_rows] : column_rows) {
    for (std::size_t j = 0; j < cell_rows.size(); ++j) {
      if (rows.size() <= j) rows.emplace_back();
      if (static_cast<int>(rows[j].size()) != col - 1)
        throw std::logic_error("column heights do not stack to a partition shape");
      rows[j].push_back(k + 1 - cell_rows[j]);
    }
  }
  return YoungTableau(std::move(rows));
}

// The inverse drop construction: the cell at French (j, c) with entry e falls
// to Kohnert row k+1-e in column c and receives label k+1-j.
inline KohnertTableau ssyt_to_kt(const YoungTableau& s, const WeakComposition& a) {
  const int k = a.last_nonzero();
  detail::require_increasing_content(a, k);
  std::vector<LabeledCell> cells;
  for (int j = 1; j <= s.row_count(); ++j) {
    const auto& row = s.row(j);
    for (std::size_t c = 0; c < row.size(); ++c)
      cells.push_back(LabeledCell{k + 1 - row[c], static_cast<int>(c) + 1, k + 1 - j});
  }
  return KohnertTableau(a, std::move(cells));
}

// phi: relabel the i-th nonempty row from the top with i, flip the diagram,
// and let cells fall within their columns.  The result is an SSYT of shape
// sort(a); flat(wt(T)) is the reverse of wt(phi(T)).
inline YoungTableau phi(const KohnertTableau& t) {
  if (!is_quasi_yamanouchi(t)) throw std::invalid_argument("phi requires a quasi-Yamanouchi tableau");
  if (t.empty()) return YoungTableau();
  std::set<int, std::greater<int>> occupied;
  for (const LabeledCell& c : t.cells()) occupied.insert(c.row);
  std::map<int, int> relabel;  // row -> index of that nonempty row from the top
  int index = 0;
  for (int row : occupied) relabel[row] = ++index;

  std::map<int, std::vector<int>> column_rows;  // col -> rows descending
  for (const LabeledCell& c : t.cells()) column_rows[c.col].push_back(c.row);
  for (auto& [col, rows] : column_rows) std::sort(rows.begin(), rows.end(), std::greater<int>());
  std::vector<std::vector<int>> rows;
  for (const auto& [col, cell_rows] : column_rows) {
    for (std::size_t j = 0; j < cell_rows.size(); ++j) {
      if (rows.size() <= j) rows.emplace_back();
      if (static_cast<int>(rows[j].size()) != col - 1)
        throw std::logic_error("column heights do not stack to a partition shape");
      rows[j].push_back(relabel[cell_rows[j]]);
    }
  }
  return YoungTableau(std::move(rows));
}

// psi: number the cells m..1 reading left to right, top to bottom, then lift
// every non-left-justified cell to the nearest empty space above it in its
// column (highest, then leftmost, first), and delete empty rows.  Lands in
// SCT(flat(a)) with Des(psi(T)) = flat(wt(T)).
inline CompositionTableau psi(const KohnertTableau& t) {
  if (!is_quasi_yamanouchi(t) || !is_quasi_kohnert(t))
    throw std::invalid_argument("psi requires a quasi-Yamanouchi quasi-Kohnert tableau");
  struct Numbered {
    int row, col, value;
  };
  std::vector<Numbered> cells;
  for (const LabeledCell& c : t.cells()) cells.push_back(Numbered{c.row, c.col, 0});
  std::sort(cells.begin(), cells.end(), [](const Numbered& x, const Numbered& y) {
    return x.row != y.row ? x.row > y.row : x.col < y.col;
  });
  int next = static_cast<int>(cells.size());
  for (Numbered& c : cells) c.value = next--;

  auto occupied = [&cells](int row, int col) {
    for (const Numbered& c : cells)
      if (c.row == row && c.col == col) return true;
    return false;
  };
  while (true) {
    Numbered* chosen = nullptr;
    for (Numbered& c : cells) {
      if (c.col == 1 || occupied(c.row, c.col - 1)) continue;
      if (!chosen || c.row > chosen->row || (c.row == chosen->row && c.col < chosen->col)) chosen = &c;
    }
    if (!chosen) break;
    int target = chosen->row + 1;
    while (occupied(target, chosen->col)) ++target;
    chosen->row = target;
  }

  std::map<int, std::vector<Numbered>> by_row;
  for (const Numbered& c : cells) by_row[c.row].push_back(c);
  std::vector<std::vector<int>> rows;
  for (auto& [row, row_cells] : by_row) {
    std::sort(row_cells.begin(), row_cells.end(),
              [](const Numbered& x, const Numbered& y) { return x.col < y.col; });
    std::vector<int> labels;
    for (std::size_t c = 0; c < row_cells.size(); ++c) {
      if (row_cells[c].col != static_cast<int>(c) + 1)
        throw std::logic_error("psi produced a row that is not left-justified");
      labels.push_back(row_cells[c].value);
    }
    rows.push_back(std::move(labels));
  }
  CompositionTableau result(std::move(rows));
  if (result.shape() != flatten(t.content()))
    throw std::logic_error("psi image shape differs from the flattened content");
  return result;
}

// s_lambda = sum over quasi-Yamanouchi SSYT of F_{wt}; complete only when the
// entry bound reaches |lambda| - lambda_1 + 1.
inline Expansion schur_to_fundamentals(const Partition& lambda, int n) {
  if (lambda.length() > 0 && n < lambda.weight() - lambda.part(1) + 1)
    throw std::invalid_argument("entry bound too small for a complete quasi-Yamanouchi set");
  if (n < 0) throw std::invalid_argument("entry bound must be >= 0");
  Expansion e(Basis::FundamentalQsym);
  for (const YoungTableau& t : enumerate_qyt(lambda, n)) {
    const WeakComposition wt = n > 0 ? tableau_content(t, n) : WeakComposition();
    e.add(flatten(wt).parts(), 1);
  }
  return e;
}

// QS_alpha = sum over standard composition tableaux of F_{Des(T)}.
inline Expansion quasischur_to_fundamentals(const StrongComposition& alpha) {
  Expansion e(Basis::FundamentalQsym);
  for (const CompositionTableau& t : enumerate_sct(alpha)) e.add(descent_composition(t).parts(), 1);
  return e;
}

}  // namespace kohnert
