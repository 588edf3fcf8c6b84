#pragma once

// Standard composition tableaux: saturated chains in the composition cover
// order, enumerated by downward DFS from the target shape, plus descent
// compositions.  Row 1 (with alpha_1 cells) sits at the bottom, matching the
// French convention used for Kohnert diagrams.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "kohnert/composition.hpp"

namespace kohnert {

// A bijective filling of the diagram of a strong composition encoding a
// saturated chain (1) = alpha^(1) < ... < alpha^(n) = alpha; entry i marks the
// cell of alpha^(n-i+1) \ alpha^(n-i).
class CompositionTableau {
 public:
  CompositionTableau() = default;
  explicit CompositionTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (const auto& row : rows_)
      if (row.empty()) throw std::invalid_argument("composition tableau rows must be nonempty");
  }

  int row_count() const { return static_cast<int>(rows_.size()); }
  const std::vector<int>& row(int r) const { return rows_.at(static_cast<std::size_t>(r) - 1); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const {
    int total = 0;
    for (const auto& row : rows_) total += static_cast<int>(row.size());
    return total;
  }
  StrongComposition shape() const {
    std::vector<int> parts;
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return StrongComposition(std::move(parts));
  }
  // (row, col) of the given entry; throws when absent.
  std::pair<int, int> position(int entry) const {
    for (int r = 1; r <= row_count(); ++r) {
      const auto& row = rows_[static_cast<std::size_t>(r) - 1];
      for (std::size_t c = 0; c < row.size(); ++c)
        if (row[c] == entry) return {r, static_cast<int>(c) + 1};
    }
    throw std::invalid_argument("entry not present in composition tableau");
  }

  auto operator<=>(const CompositionTableau&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

namespace detail {

// Covers downward: alpha' < beta when beta inserts a leading 1 or adds 1 to
// the leftmost occurrence of some value.  Inverting the second move at
// position p requires p to be the leftmost occurrence of beta_p - 1 after the
// decrement.
struct SctSearcher {
  std::vector<CompositionTableau>* out = nullptr;
  std::map<std::vector<int>, long long>* chain_counts = nullptr;

  // Cells leave each row right to left, so the per-row label lists build up in
  // column-descending order and are reversed on emission.
  void walk(std::vector<int>& beta, std::vector<int>& rowid, int next_label,
            std::vector<std::vector<int>>& rows) {
    if (beta.size() == 1 && beta[0] == 1) {
      rows[static_cast<std::size_t>(rowid[0]) - 1].push_back(next_label);
      std::vector<std::vector<int>> emitted = rows;
      for (auto& row : emitted) std::reverse(row.begin(), row.end());
      out->emplace_back(std::move(emitted));
      rows[static_cast<std::size_t>(rowid[0]) - 1].pop_back();
      return;
    }
    if (beta[0] == 1 && beta.size() >= 2) {
      const int row = rowid[0];
      rows[static_cast<std::size_t>(row) - 1].push_back(next_label);
      std::vector<int> sub_beta(beta.begin() + 1, beta.end());
      std::vector<int> sub_rowid(rowid.begin() + 1, rowid.end());
      walk(sub_beta, sub_rowid, next_label + 1, rows);
      rows[static_cast<std::size_t>(row) - 1].pop_back();
    }
    for (std::size_t p = 0; p < beta.size(); ++p) {
      if (beta[p] < 2) continue;
      const int new_value = beta[p] - 1;
      bool leftmost = true;
      for (std::size_t q = 0; q < p; ++q)
        if (beta[q] == new_value) leftmost = false;
      if (!leftmost) continue;
      rows[static_cast<std::size_t>(rowid[p]) - 1].push_back(next_label);
      beta[p] -= 1;
      walk(beta, rowid, next_label + 1, rows);
      beta[p] += 1;
      rows[static_cast<std::size_t>(rowid[p]) - 1].pop_back();
    }
  }

  long long count(std::vector<int>& beta) {
    if (beta.size() == 1 && beta[0] == 1) return 1;
    const auto memo = chain_counts->find(beta);
    if (memo != chain_counts->end()) return memo->second;
    long long total = 0;
    if (beta[0] == 1 && beta.size() >= 2) {
      std::vector<int> sub(beta.begin() + 1, beta.end());
      total = checked_add_ll(total, count(sub));
    }
    for (std::size_t p = 0; p < beta.size(); ++p) {
      if (beta[p] < 2) continue;
      const int new_value = beta[p] - 1;
      bool leftmost = true;
      for (std::size_t q = 0; q < p; ++q)
        if (beta[q] == new_value) leftmost = false;
      if (!leftmost) continue;
      beta[p] -= 1;
      total = checked_add_ll(total, count(beta));
      beta[p] += 1;
    }
    (*chain_counts)[beta] = total;
    return total;
  }

  static long long checked_add_ll(long long a, long long b) {
    long long r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("chain count overflow");
    return r;
  }
};

}  // namespace detail

// SCT(alpha).  Cells are filled during the downward walk; inserting a leading
// part shifts existing rows up by one index, so rows are tracked by their
// final indices at shape alpha.
inline std::vector<CompositionTableau> enumerate_sct(const StrongComposition& alpha) {
  std::vector<CompositionTableau> out;
  if (alpha.length() == 0) {
    out.emplace_back(std::vector<std::vector<int>>{});
    return out;
  }
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(alpha.length()));
  std::vector<int> beta = alpha.parts();
  std::vector<int> rowid;
  for (int r = 1; r <= alpha.length(); ++r) rowid.push_back(r);
  detail::SctSearcher searcher;
  searcher.out = &out;
  searcher.walk(beta, rowid, 1, rows);
  std::sort(out.begin(), out.end());
  return out;
}

// Number of saturated chains from (1) to alpha, memoized.
inline long long sct_count(const StrongComposition& alpha) {
  if (alpha.length() == 0) return 1;
  std::map<std::vector<int>, long long> memo;
  detail::SctSearcher searcher;
  searcher.chain_counts = &memo;
  std::vector<int> beta = alpha.parts();
  return searcher.count(beta);
}

// Des(T): i is a descent when i+1 lies weakly right of i; the descent set of
// {1..n-1} is folded into a strong composition of n.
inline StrongComposition descent_composition(const CompositionTableau& t) {
  const int n = t.size();
  std::vector<int> parts;
  if (n == 0) return StrongComposition(parts);
  int previous = 0;
  for (int i = 1; i < n; ++i) {
    if (t.position(i + 1).second >= t.position(i).second) {
      parts.push_back(i - previous);
      previous = i;
    }
  }
  parts.push_back(n - previous);
  return StrongComposition(std::move(parts));
}

}  // namespace kohnert
