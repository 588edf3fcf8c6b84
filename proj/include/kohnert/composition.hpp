#pragma once

// Weak compositions, strong compositions, partitions, and the orderings and
// rearrangement operators built on them (dominance, refinement, left swaps,
// lsort, and the stability statistics sigma and eta).
//
// All values are immutable and every function is pure, so everything here is
// safe for unrestricted concurrent use.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kohnert {

// Canonical output order for exponent vectors and index compositions:
// x precedes y when reverse(x) is lexicographically greater than reverse(y).
// The index of a key or quasi-key polynomial is its dominance-minimal
// monomial, and under this order that monomial always sorts first.
struct RevLexTermOrder {
  bool operator()(const std::vector<int>& x, const std::vector<int>& y) const {
    const std::size_t nx = x.size(), ny = y.size();
    const std::size_t m = std::min(nx, ny);
    for (std::size_t t = 0; t < m; ++t) {
      const int xv = x[nx - 1 - t];
      const int yv = y[ny - 1 - t];
      if (xv != yv) return xv > yv;
    }
    return nx < ny;
  }
};

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string token(text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.erase(token.begin());
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.pop_back();
    if (token.empty()) throw std::invalid_argument("empty part in composition text");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid part '" + token + "' in composition text");
    }
    if (used != token.size()) throw std::invalid_argument("invalid part '" + token + "' in composition text");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline std::string join_int_list(const std::vector<int>& parts) {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i];
  }
  return os.str();
}

}  // namespace detail

// A finite sequence of nonnegative integers.  Length is significant: (0,3,2)
// and (0,3,2,0) index different polynomials.
class WeakComposition {
 public:
  WeakComposition() = default;
  explicit WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 0) throw std::invalid_argument("weak composition parts must be >= 0");
  }

  // Parses the textual form "0,3,2"; the empty string is the empty composition.
  static WeakComposition parse(std::string_view text) {
    return WeakComposition(detail::parse_int_list(text));
  }

  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_.at(static_cast<std::size_t>(i) - 1); }  // 1-based
  const std::vector<int>& parts() const { return parts_; }

  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int max_part() const { return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end()); }
  int nonzero_count() const {
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 0; }));
  }
  // Index of the last nonzero part, or 0 when every part vanishes.
  int last_nonzero() const {
    for (int i = length(); i >= 1; --i)
      if (part(i) > 0) return i;
    return 0;
  }
  bool all_zero() const { return nonzero_count() == 0; }
  bool weakly_increasing() const {
    for (int i = 1; i < length(); ++i)
      if (parts_[i - 1] > parts_[i]) return false;
    return true;
  }

  std::string str() const { return detail::join_int_list(parts_); }
  auto operator<=>(const WeakComposition&) const = default;

 private:
  std::vector<int> parts_;
};

// A composition with strictly positive parts.
class StrongComposition {
 public:
  StrongComposition() = default;
  explicit StrongComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 1) throw std::invalid_argument("strong composition parts must be >= 1");
  }
  static StrongComposition parse(std::string_view text) {
    return StrongComposition(detail::parse_int_list(text));
  }

  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_.at(static_cast<std::size_t>(i) - 1); }
  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  std::string str() const { return detail::join_int_list(parts_); }
  auto operator<=>(const StrongComposition&) const = default;

 private:
  std::vector<int> parts_;
};

// A weakly decreasing strong composition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw std::invalid_argument("partition parts must be >= 1");
      if (i > 0 && parts_[i - 1] < parts_[i])
        throw std::invalid_argument("partition parts must weakly decrease");
    }
  }
  static Partition parse(std::string_view text) { return Partition(detail::parse_int_list(text)); }

  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_.at(static_cast<std::size_t>(i) - 1); }
  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  std::string str() const { return detail::join_int_list(parts_); }
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// flat(a): the subsequence of nonzero parts, order preserved.
inline StrongComposition flatten(const WeakComposition& a) {
  std::vector<int> parts;
  for (int p : a.parts())
    if (p > 0) parts.push_back(p);
  return StrongComposition(std::move(parts));
}

// sort(a): the nonzero parts rearranged into weakly decreasing order.
inline Partition sort_decreasing(const WeakComposition& a) {
  std::vector<int> parts = flatten(a).parts();
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

// rev(a): flat(a) reversed.  Requires a weakly increasing, so that the result
// is a partition.
inline Partition rev_increasing(const WeakComposition& a) {
  if (!a.weakly_increasing())
    throw std::invalid_argument("rev_increasing requires a weakly increasing composition");
  std::vector<int> parts = flatten(a).parts();
  std::reverse(parts.begin(), parts.end());
  return Partition(std::move(parts));
}

// Dominance order: b >= a when every prefix sum of b weakly exceeds the
// corresponding prefix sum of a.  Lengths must agree.
inline bool dominates(const WeakComposition& b, const WeakComposition& a) {
  if (b.length() != a.length())
    throw std::invalid_argument("dominance compares compositions of equal length");
  int pb = 0, pa = 0;
  for (int i = 1; i <= a.length(); ++i) {
    pb += b.part(i);
    pa += a.part(i);
    if (pb < pa) return false;
  }
  return true;
}

// True when c splits into consecutive blocks whose sums are alpha_1, alpha_2,
// ... in order.  Since all parts are positive the split, if any, is unique.
inline bool refines(const StrongComposition& c, const StrongComposition& alpha) {
  int pos = 1;
  for (int i = 1; i <= alpha.length(); ++i) {
    int acc = 0;
    while (acc < alpha.part(i)) {
      if (pos > c.length()) return false;
      acc += c.part(pos++);
    }
    if (acc != alpha.part(i)) return false;
  }
  return pos == c.length() + 1;
}

// For a strong composition refining alpha, the block index (1-based part of
// alpha) that each part of c belongs to.  Throws when c does not refine alpha.
inline std::vector<int> refinement_blocks(const StrongComposition& c, const StrongComposition& alpha) {
  std::vector<int> block(static_cast<std::size_t>(c.length()), 0);
  int pos = 1;
  for (int i = 1; i <= alpha.length(); ++i) {
    int acc = 0;
    while (acc < alpha.part(i)) {
      if (pos > c.length()) throw std::invalid_argument("composition does not refine target");
      block[static_cast<std::size_t>(pos) - 1] = i;
      acc += c.part(pos++);
    }
    if (acc != alpha.part(i)) throw std::invalid_argument("composition does not refine target");
  }
  if (pos != c.length() + 1) throw std::invalid_argument("composition does not refine target");
  return block;
}

// 0^m x a.
inline WeakComposition prepend_zeros(const WeakComposition& a, int m) {
  if (m < 0) throw std::invalid_argument("prepend_zeros requires m >= 0");
  std::vector<int> parts(static_cast<std::size_t>(m), 0);
  parts.insert(parts.end(), a.parts().begin(), a.parts().end());
  return WeakComposition(std::move(parts));
}

inline void canonical_sort(std::vector<WeakComposition>& items) {
  std::sort(items.begin(), items.end(), [](const WeakComposition& x, const WeakComposition& y) {
    return RevLexTermOrder{}(x.parts(), y.parts());
  });
}

// Closure of {a} under left swaps (exchanging parts a_i < a_j with i < j).
// Emitted in canonical (reverse-lexicographic) order.
inline std::vector<WeakComposition> lswap_set(const WeakComposition& a) {
  std::set<std::vector<int>> seen{a.parts()};
  std::vector<std::vector<int>> frontier{a.parts()};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& cur : frontier) {
      for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        for (std::size_t j = i + 1; j < cur.size(); ++j) {
          if (cur[i] < cur[j]) {
            std::vector<int> swapped = cur;
            std::swap(swapped[i], swapped[j]);
            if (seen.insert(swapped).second) next.push_back(std::move(swapped));
          }
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<WeakComposition> out;
  out.reserve(seen.size());
  for (const auto& parts : seen) out.emplace_back(parts);
  canonical_sort(out);
  return out;
}

// Qlswap(a): one representative per flattening class of lswap(a), namely the
// element dominated by every other member of its class.  The existence of such
// a minimum is a structural fact; its absence is surfaced as an error.
inline std::vector<WeakComposition> qlswap_set(const WeakComposition& a) {
  std::vector<WeakComposition> closure = lswap_set(a);
  std::vector<WeakComposition> reps;
  std::set<std::vector<int>> used_flats;
  for (const auto& b : closure) {
    const auto key = flatten(b).parts();
    if (!used_flats.insert(key).second) continue;
    std::optional<WeakComposition> min;
    for (const auto& c : closure) {
      if (flatten(c).parts() != key) continue;
      bool minimal = true;
      for (const auto& d : closure) {
        if (flatten(d).parts() != key) continue;
        if (!dominates(d, c)) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        min = c;
        break;
      }
    }
    if (!min)
      throw std::logic_error("lswap class of " + a.str() + " has no dominance-minimal element");
    reps.push_back(*min);
  }
  canonical_sort(reps);
  return reps;
}

// lsort(a): the dominance-minimal b with flat(b) the weakly increasing
// rearrangement of flat(a) and b obtained from a by moving nonzero entries
// weakly left; absent when no such b exists.  Computed by exhaustive search
// over supports, which is ample at the weights this library targets.
inline std::optional<WeakComposition> lsort(const WeakComposition& a) {
  const int n = a.length();
  std::vector<int> values;                 // nonzero values, sorted increasing
  std::vector<std::vector<int>> origins;   // per distinct value, original positions ascending
  {
    std::vector<std::pair<int, int>> entries;  // (value, position)
    for (int i = 1; i <= n; ++i)
      if (a.part(i) > 0) entries.emplace_back(a.part(i), i);
    std::sort(entries.begin(), entries.end());
    for (const auto& [v, p] : entries) {
      if (values.empty() || values.back() != v) {
        values.push_back(v);
        origins.emplace_back();
      }
      origins.back().push_back(p);
    }
  }
  std::vector<int> sorted_values;
  for (std::size_t t = 0; t < values.size(); ++t)
    sorted_values.insert(sorted_values.end(), origins[t].size(), values[t]);
  const int ell = static_cast<int>(sorted_values.size());
  if (ell == 0) return a;

  std::vector<WeakComposition> valid;
  std::vector<int> support(static_cast<std::size_t>(ell));
  // Enumerate increasing supports q_1 < ... < q_ell in 1..n.
  auto feasible = [&](const std::vector<int>& q) {
    std::size_t t = 0;
    for (std::size_t v = 0; v < values.size(); ++v) {
      for (std::size_t u = 0; u < origins[v].size(); ++u, ++t)
        if (q[t] > origins[v][u]) return false;
    }
    return true;
  };
  std::vector<int> q(static_cast<std::size_t>(ell));
  auto rec = [&](auto&& self, int idx, int start) -> void {
    if (idx == ell) {
      if (!feasible(q)) return;
      std::vector<int> parts(static_cast<std::size_t>(n), 0);
      for (int t = 0; t < ell; ++t) parts[static_cast<std::size_t>(q[t]) - 1] = sorted_values[t];
      valid.emplace_back(std::move(parts));
      return;
    }
    for (int pos = start; pos <= n - (ell - 1 - idx); ++pos) {
      q[static_cast<std::size_t>(idx)] = pos;
      self(self, idx + 1, pos + 1);
    }
  };
  rec(rec, 0, 1);
  if (valid.empty()) return std::nullopt;

  for (const auto& b : valid) {
    bool minimal = true;
    for (const auto& c : valid) {
      if (!dominates(c, b)) {
        minimal = false;
        break;
      }
    }
    if (minimal) return b;
  }
  throw std::logic_error("lsort candidates of " + a.str() + " have no dominance minimum");
}

// sigma(a): the number of leading zeros needed (lsort absent) or in excess
// (lsort present) for computing lsort(a).
inline int sigma(const WeakComposition& a) {
  if (auto b = lsort(a)) {
    int leading = 0;
    while (leading < b->length() && b->part(leading + 1) == 0) ++leading;
    return -leading;
  }
  for (int m = 1; m <= a.nonzero_count() + 1; ++m)
    if (lsort(prepend_zeros(a, m))) return m;
  throw std::logic_error("sigma search failed to terminate for " + a.str());
}

// eta(a) = |a| - max(a) + 1 - l(a) + sigma(a): the depth of the lowest
// quasi-Yamanouchi Kohnert tableau, i.e. the stability point of the
// fundamental slide expansion of kappa_a.
inline int eta(const WeakComposition& a) {
  return a.weight() - a.max_part() + 1 - a.nonzero_count() + sigma(a);
}

}  // namespace kohnert
