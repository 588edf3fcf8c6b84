#pragma once

// Semistandard Young tableaux (French convention: row 1 at the bottom is the
// longest, columns strictly increase upward) and the quasi-Yamanouchi filter.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "kohnert/composition.hpp"

namespace kohnert {

class YoungTableau {
 public:
  YoungTableau() = default;
  // rows[0] is French row 1; row lengths must weakly decrease.
  explicit YoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].empty()) throw std::invalid_argument("Young tableau rows must be nonempty");
      if (r > 0 && rows_[r - 1].size() < rows_[r].size())
        throw std::invalid_argument("Young tableau row lengths must weakly decrease");
    }
  }

  int row_count() const { return static_cast<int>(rows_.size()); }
  const std::vector<int>& row(int r) const { return rows_.at(static_cast<std::size_t>(r) - 1); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int entry(int r, int c) const { return row(r).at(static_cast<std::size_t>(c) - 1); }
  int max_entry() const {
    int m = 0;
    for (const auto& row : rows_)
      for (int e : row) m = std::max(m, e);
    return m;
  }
  Partition shape() const {
    std::vector<int> parts;
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
  }

  auto operator<=>(const YoungTableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

inline bool is_valid_ssyt(const YoungTableau& t, int n) {
  for (int r = 1; r <= t.row_count(); ++r) {
    const auto& row = t.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1 || row[c] > n) return false;
      if (c > 0 && row[c - 1] > row[c]) return false;
    }
  }
  for (int r = 2; r <= t.row_count(); ++r)
    for (std::size_t c = 0; c < t.row(r).size(); ++c)
      if (t.row(r)[c] <= t.row(r - 1)[c]) return false;
  return true;
}

// wt(T) at length n: part i counts the entries equal to i.
inline WeakComposition tableau_content(const YoungTableau& t, int n) {
  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  for (const auto& row : t.rows())
    for (int e : row) {
      if (e < 1 || e > n) throw std::invalid_argument("tableau entry outside 1..n");
      parts[static_cast<std::size_t>(e) - 1]++;
    }
  return WeakComposition(std::move(parts));
}

// All SSYT of the given shape with entries at most n.
inline std::vector<YoungTableau> enumerate_ssyt(const Partition& lambda, int n) {
  if (n < 0) throw std::invalid_argument("entry bound must be >= 0");
  std::vector<YoungTableau> out;
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= lambda.length(); ++r)
    rows.emplace_back(static_cast<std::size_t>(lambda.part(r)), 0);
  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r > lambda.length()) {
      out.emplace_back(rows);
      return;
    }
    const int next_r = c == lambda.part(r) ? r + 1 : r;
    const int next_c = c == lambda.part(r) ? 1 : c + 1;
    int low = 1;
    if (c > 1) low = std::max(low, rows[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 2]);
    if (r > 1) low = std::max(low, rows[static_cast<std::size_t>(r) - 2][static_cast<std::size_t>(c) - 1] + 1);
    for (int v = low; v <= n; ++v) {
      rows[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1] = v;
      self(self, next_r, next_c);
    }
    rows[static_cast<std::size_t>(r) - 1][static_cast<std::size_t>(c) - 1] = 0;
  };
  if (lambda.length() == 0) {
    out.emplace_back(rows);
  } else {
    rec(rec, 1, 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Quasi-Yamanouchi: for every entry i > 1 appearing in T, the leftmost i lies
// weakly left of some i-1.
inline bool is_qyt(const YoungTableau& t) {
  const int m = t.max_entry();
  for (int i = 2; i <= m; ++i) {
    int leftmost_i = 0, rightmost_below = 0;
    for (int r = 1; r <= t.row_count(); ++r) {
      const auto& row = t.row(r);
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c] == i && (leftmost_i == 0 || static_cast<int>(c) + 1 < leftmost_i))
          leftmost_i = static_cast<int>(c) + 1;
        if (row[c] == i - 1) rightmost_below = std::max(rightmost_below, static_cast<int>(c) + 1);
      }
    }
    if (leftmost_i == 0) continue;  // i absent
    if (rightmost_below < leftmost_i) return false;
  }
  return true;
}

inline std::vector<YoungTableau> enumerate_qyt(const Partition& lambda, int n) {
  std::vector<YoungTableau> out;
  for (const YoungTableau& t : enumerate_ssyt(lambda, n))
    if (is_qyt(t)) out.push_back(t);
  return out;
}

}  // namespace kohnert
