#pragma once

// Verification suites behind `verify` and the acceptance harness:
//   golden     - replays a corpus of worked examples (small families and their
//                expansions) exactly;
//   identities - polynomial identities over a bounded corpus of weak
//                compositions, including the symmetry criteria;
//   bijections - the structural maps (labeling, dst, theta, phi, psi) over
//                the same corpus;
//   stability  - count profiles, plateau onset, shift invariance, and spring
//                connectivity.
// The standard-Young-tableau count used to pin plateau values is computed by
// the hook length formula, a route independent of all tableau enumeration.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kohnert/composition.hpp"
#include "kohnert/composition_tableau.hpp"
#include "kohnert/diagram.hpp"
#include "kohnert/expand.hpp"
#include "kohnert/kohnert_tableau.hpp"
#include "kohnert/maps.hpp"
#include "kohnert/polynomial.hpp"
#include "kohnert/stability.hpp"
#include "kohnert/young.hpp"

namespace kohnert {

struct VerifyResult {
  std::string check;
  std::string instance;
  bool ok = false;
  std::string detail;
};

// Number of standard Young tableaux of shape lambda by the hook length
// formula: n! divided by the product of hook lengths.
inline long long hook_length_syt_count(const Partition& lambda) {
  const int n = lambda.weight();
  std::vector<int> conjugate(static_cast<std::size_t>(lambda.length() ? lambda.part(1) : 0), 0);
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.part(r); ++c) conjugate[static_cast<std::size_t>(c) - 1]++;
  long long hooks = 1;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.part(r); ++c) {
      const int hook = (lambda.part(r) - c) + (conjugate[static_cast<std::size_t>(c) - 1] - r) + 1;
      hooks = checked_mul(hooks, hook);
    }
  long long factorial = 1;
  for (int v = 2; v <= n; ++v) factorial = checked_mul(factorial, v);
  if (hooks == 0 || factorial % hooks != 0)
    throw std::logic_error("hook product does not divide n!");
  return factorial / hooks;
}

namespace detail {

class Checker {
 public:
  void expect(bool ok, const std::string& check, const std::string& instance,
              const std::string& detail = "") {
    results_.push_back(VerifyResult{check, instance, ok, ok ? std::string() : detail});
  }
  template <typename T>
  void expect_eq(const T& got, const T& want, const std::string& check, const std::string& instance) {
    expect(got == want, check, instance, "got a value different from the expected one");
  }
  std::vector<VerifyResult> take() { return std::move(results_); }

 private:
  std::vector<VerifyResult> results_;
};

inline WeakComposition wc(std::vector<int> parts) { return WeakComposition(std::move(parts)); }

inline KohnertTableau kt(std::vector<int> content, std::vector<std::array<int, 3>> cells) {
  std::vector<LabeledCell> lc;
  lc.reserve(cells.size());
  for (const auto& c : cells) lc.push_back(LabeledCell{c[0], c[1], c[2]});
  return KohnertTableau(WeakComposition(std::move(content)), std::move(lc));
}

inline Diagram dg(std::vector<std::array<int, 2>> cells) {
  std::vector<Cell> out;
  out.reserve(cells.size());
  for (const auto& c : cells) out.push_back(Cell{c[0], c[1]});
  return Diagram(std::move(out));
}

inline Expansion expansion_of(Basis basis, std::vector<std::pair<std::vector<int>, long long>> terms) {
  Expansion e(basis);
  for (auto& [idx, c] : terms) e.add(idx, c);
  return e;
}

inline SparseIntegerPolynomial poly_of(int nvars,
                                       std::vector<std::pair<std::vector<int>, long long>> terms) {
  SparseIntegerPolynomial p(nvars);
  for (auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

template <typename T>
inline bool same_set(std::vector<T> got, std::vector<T> want) {
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  return got == want;
}

inline std::multiset<std::vector<int>> weight_multiset(const std::vector<KohnertTableau>& ts) {
  std::multiset<std::vector<int>> out;
  for (const auto& t : ts) out.insert(tableau_weight(t).parts());
  return out;
}

// Enumerates the verification corpus in canonical order: weights 0..max_weight
// by lengths 0..max_length, reverse-lexicographic within.
inline std::vector<WeakComposition> corpus(int max_weight, int max_length) {
  std::vector<WeakComposition> out;
  for (int length = 0; length <= max_length; ++length)
    for (int weight = 0; weight <= max_weight; ++weight)
      for (const WeakComposition& a : all_weak_compositions(weight, length)) out.push_back(a);
  return out;
}

inline bool symmetric_in_prefix(const SparseIntegerPolynomial& p, int k) {
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<long long>> classes;
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> prefix(e.begin(), e.begin() + k);
    std::vector<int> suffix(e.begin() + k, e.end());
    std::vector<int> key = prefix;
    std::sort(key.begin(), key.end());
    classes[{key, suffix}].push_back(c);
  }
  for (const auto& [key, coeffs] : classes) {
    std::vector<int> perm = key.first;
    long long orbit = 0;
    do {
      ++orbit;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (static_cast<long long>(coeffs.size()) != orbit) return false;
    for (long long c : coeffs)
      if (c != coeffs.front()) return false;
  }
  return true;
}

inline bool quasisymmetric_in_prefix(const SparseIntegerPolynomial& p, int k) {
  std::map<std::vector<int>, std::vector<long long>> classes;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = static_cast<std::size_t>(k); i < e.size(); ++i)
      if (e[i] != 0) return false;
    std::vector<int> flat;
    for (int i = 0; i < k; ++i)
      if (e[static_cast<std::size_t>(i)] > 0) flat.push_back(e[static_cast<std::size_t>(i)]);
    classes[flat].push_back(c);
  }
  for (const auto& [flat, coeffs] : classes) {
    long long placements = 1;  // C(k, len(flat))
    for (std::size_t i = 0; i < flat.size(); ++i)
      placements = placements * (k - static_cast<long long>(i)) / (static_cast<long long>(i) + 1);
    if (static_cast<long long>(coeffs.size()) != placements) return false;
    for (long long c : coeffs)
      if (c != coeffs.front()) return false;
  }
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Golden suite: exact replay of the worked examples.
// ---------------------------------------------------------------------------

inline std::vector<VerifyResult> verify_golden() {
  using detail::dg;
  using detail::expansion_of;
  using detail::kt;
  using detail::poly_of;
  using detail::same_set;
  using detail::wc;
  detail::Checker ck;

  // Kohnert tableaux of content (0,3,2); the first eight are quasi-Kohnert
  // and {T1,T5,T8,T9} are quasi-Yamanouchi.
  const std::vector<KohnertTableau> kt032 = {
      kt({0, 3, 2}, {{3, 1, 3}, {3, 2, 3}, {2, 1, 2}, {2, 2, 2}, {2, 3, 2}}),
      kt({0, 3, 2}, {{3, 1, 3}, {3, 2, 3}, {2, 1, 2}, {2, 2, 2}, {1, 3, 2}}),
      kt({0, 3, 2}, {{3, 1, 3}, {3, 2, 3}, {2, 1, 2}, {1, 2, 2}, {1, 3, 2}}),
      kt({0, 3, 2}, {{3, 1, 3}, {3, 2, 3}, {1, 1, 2}, {1, 2, 2}, {1, 3, 2}}),
      kt({0, 3, 2}, {{3, 1, 3}, {2, 1, 2}, {2, 2, 3}, {1, 2, 2}, {1, 3, 2}}),
      kt({0, 3, 2}, {{3, 1, 3}, {2, 2, 3}, {1, 1, 2}, {1, 2, 2}, {1, 3, 2}}),
      kt({0, 3, 2}, {{2, 1, 3}, {2, 2, 3}, {1, 1, 2}, {1, 2, 2}, {1, 3, 2}}),
      kt({0, 3, 2}, {{3, 1, 3}, {2, 1, 2}, {2, 2, 2}, {2, 3, 2}, {1, 2, 3}}),
      kt({0, 3, 2}, {{2, 1, 2}, {2, 2, 2}, {2, 3, 2}, {1, 1, 3}, {1, 2, 3}})};

  {
    std::vector<Diagram> km_expected;
    for (const auto& t : kt032) km_expected.push_back(t.diagram());
    ck.expect(same_set(kohnert_closure(wc({0, 3, 2})), km_expected), "golden/km-032", "0,3,2",
              "KM(0,3,2) differs from the nine expected diagrams");
    ck.expect_eq(key_polynomial(wc({0, 3, 2})),
                 poly_of(3, {{{0, 3, 2}, 1},
                             {{1, 2, 2}, 1},
                             {{2, 1, 2}, 1},
                             {{3, 0, 2}, 1},
                             {{2, 2, 1}, 1},
                             {{3, 1, 1}, 1},
                             {{3, 2, 0}, 1},
                             {{1, 3, 1}, 1},
                             {{2, 3, 0}, 1}}),
                 "golden/key-032-monomials", "0,3,2");
    ck.expect(same_set(enumerate_kt(wc({0, 3, 2})), kt032), "golden/kt-032", "0,3,2",
              "KT(0,3,2) differs from the nine expected tableaux");
    ck.expect(same_set(enumerate_qkt(wc({0, 3, 2})),
                       {kt032[0], kt032[4], kt032[7], kt032[8]}),
              "golden/qkt-032", "0,3,2", "QKT(0,3,2) differs from the four expected tableaux");
    ck.expect(same_set(enumerate_quasi_kohnert(wc({0, 3, 2})),
                       std::vector<KohnertTableau>(kt032.begin(), kt032.begin() + 8)),
              "golden/qkohnert-032", "0,3,2", "qKT(0,3,2) differs from the first eight tableaux");
    ck.expect_eq(key_to_slides(wc({0, 3, 2})),
                 expansion_of(Basis::FundamentalSlide,
                              {{{0, 3, 2}, 1}, {{2, 2, 1}, 1}, {{1, 3, 1}, 1}, {{2, 3, 0}, 1}}),
                 "golden/key-slides-032", "0,3,2");
    ck.expect_eq(fundamental_slide(wc({0, 3, 2})),
                 poly_of(3, {{{0, 3, 2}, 1},
                             {{1, 2, 2}, 1},
                             {{2, 1, 2}, 1},
                             {{3, 0, 2}, 1},
                             {{3, 1, 1}, 1},
                             {{3, 2, 0}, 1}}),
                 "golden/slide-032-monomials", "0,3,2");
    ck.expect_eq(quasi_key_polynomial(wc({0, 3, 2})),
                 poly_of(3, {{{0, 3, 2}, 1},
                             {{1, 2, 2}, 1},
                             {{2, 1, 2}, 1},
                             {{3, 0, 2}, 1},
                             {{2, 2, 1}, 1},
                             {{3, 1, 1}, 1},
                             {{3, 2, 0}, 1},
                             {{1, 3, 1}, 1}}),
                 "golden/qkey-032-monomials", "0,3,2");
    // Destandardization fibers over KT(0,3,2): sizes 6,1,1,1.
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u})
      ck.expect_eq(destandardize(kt032[i]), kt032[0], "golden/dst-032", "0,3,2");
    for (std::size_t i : {4u, 7u, 8u})
      ck.expect_eq(destandardize(kt032[i]), kt032[i], "golden/dst-032-fixed", "0,3,2");
    ck.expect_eq(destandardization_fiber(kt032[0], wc({1, 2, 2})), kt032[1],
                 "golden/dst-fiber-032", "0,3,2");
  }

  // Kohnert move examples on the key diagram of (0,3,2).
  {
    const Diagram d = key_diagram(wc({0, 3, 2}));
    ck.expect_eq(kohnert_move(d, 2), std::optional<Diagram>(kt032[1].diagram()),
                 "golden/kohnert-move-row2", "0,3,2");
    ck.expect_eq(kohnert_move(d, 3), std::optional<Diagram>(kt032[7].diagram()),
                 "golden/kohnert-move-row3", "0,3,2");
    ck.expect_eq(kohnert_move(d, 1), std::optional<Diagram>(), "golden/kohnert-move-empty-row",
                 "0,3,2");
  }

  // The labeling algorithm on a worked example with a = (0,4,0,2,4,1).
  {
    const Diagram d = dg({{5, 1}, {4, 2}, {3, 1}, {3, 3}, {2, 1}, {2, 2}, {2, 3}, {2, 4},
                          {1, 1}, {1, 2}, {1, 4}});
    const KohnertTableau expected =
        kt({0, 4, 0, 2, 4, 1}, {{5, 1, 5}, {4, 2, 5}, {3, 1, 6}, {3, 3, 5}, {2, 1, 2}, {2, 2, 2},
                                 {2, 3, 2}, {2, 4, 5}, {1, 1, 4}, {1, 2, 4}, {1, 4, 2}});
    ck.expect_eq(kohnert_label(d, wc({0, 4, 0, 2, 4, 1})), std::optional<KohnertTableau>(expected),
                 "golden/labeling-example", "0,4,0,2,4,1");
  }

  // Labeling a staircase diagram: fails condition (ii) for (0,2,1), succeeds
  // for (0,0,2,1).
  {
    const Diagram d = dg({{3, 1}, {2, 2}, {1, 1}});
    ck.expect_eq(kohnert_label(d, wc({0, 2, 1})), std::optional<KohnertTableau>(),
                 "golden/labeling-fails-021", "0,2,1");
    ck.expect_eq(kohnert_label(d, wc({0, 0, 2, 1})),
                 std::optional<KohnertTableau>(
                     kt({0, 0, 2, 1}, {{3, 1, 3}, {2, 2, 3}, {1, 1, 4}})),
                 "golden/labeling-works-0021", "0,0,2,1");
  }

  // A worked destandardization example.
  {
    const KohnertTableau before =
        kt({0, 0, 1, 4, 2, 1, 0, 3}, {{7, 1, 8}, {6, 2, 8}, {6, 3, 8}, {5, 1, 6}, {4, 1, 4},
                                       {4, 2, 4}, {3, 1, 5}, {3, 3, 4}, {2, 1, 3}, {2, 2, 5},
                                       {1, 4, 4}});
    const KohnertTableau after =
        kt({0, 0, 1, 4, 2, 1, 0, 3}, {{8, 1, 8}, {8, 2, 8}, {8, 3, 8}, {6, 1, 6}, {4, 1, 4},
                                       {4, 2, 4}, {3, 1, 5}, {3, 3, 4}, {2, 1, 3}, {2, 2, 5},
                                       {2, 4, 4}});
    ck.expect(validate_kt(before), "golden/dst-example-input-valid", "0,0,1,4,2,1,0,3");
    ck.expect_eq(destandardize(before), after, "golden/dst-example", "0,0,1,4,2,1,0,3");
    ck.expect(is_quasi_yamanouchi(after), "golden/dst-example-output-qy", "0,0,1,4,2,1,0,3");
  }

  // QKT(0,0,3,2), the t_{3,4} images in QKT(0,2,3,0), and the spring graph.
  const std::vector<KohnertTableau> qkt0032 = {
      kt({0, 0, 3, 2}, {{4, 1, 4}, {4, 2, 4}, {3, 1, 3}, {3, 2, 3}, {3, 3, 3}}),
      kt({0, 0, 3, 2}, {{4, 1, 4}, {3, 1, 3}, {3, 2, 4}, {2, 2, 3}, {2, 3, 3}}),
      kt({0, 0, 3, 2}, {{4, 1, 4}, {3, 1, 3}, {3, 2, 3}, {3, 3, 3}, {2, 2, 4}}),
      kt({0, 0, 3, 2}, {{3, 1, 3}, {3, 2, 3}, {3, 3, 3}, {2, 1, 4}, {2, 2, 4}}),
      kt({0, 0, 3, 2}, {{3, 1, 3}, {3, 2, 3}, {2, 1, 4}, {2, 3, 3}, {1, 2, 4}})};
  {
    ck.expect(same_set(enumerate_qkt(wc({0, 0, 3, 2})), qkt0032), "golden/qkt-0032", "0,0,3,2",
              "QKT(0,0,3,2) differs from the five expected tableaux");
    ck.expect_eq(key_to_slides(wc({0, 0, 3, 2})),
                 expansion_of(Basis::FundamentalSlide, {{{0, 0, 3, 2}, 1},
                                                        {{0, 2, 2, 1}, 1},
                                                        {{0, 1, 3, 1}, 1},
                                                        {{0, 2, 3, 0}, 1},
                                                        {{1, 2, 2, 0}, 1}}),
                 "golden/key-slides-0032", "0,0,3,2");
    ck.expect_eq(t_target(wc({0, 0, 3, 2}), 3, 4), wc({0, 2, 3, 0}), "golden/t-target-0032",
                 "0,0,3,2");
    ck.expect_eq(t_target(wc({0, 2, 0, 1, 3, 4, 2, 1}), 5, 7), wc({0, 2, 1, 2, 3, 4, 0, 1}),
                 "golden/t-target-long", "0,2,0,1,3,4,2,1");
    const std::vector<KohnertTableau> images = {
        kt({0, 2, 3, 0}, {{3, 1, 3}, {3, 2, 3}, {2, 1, 2}, {2, 2, 2}, {2, 3, 3}}),
        kt({0, 2, 3, 0}, {{3, 1, 3}, {2, 1, 2}, {2, 2, 3}, {1, 2, 2}, {1, 3, 3}}),
        kt({0, 2, 3, 0}, {{3, 1, 3}, {2, 1, 2}, {2, 2, 3}, {2, 3, 3}, {1, 2, 2}}),
        kt({0, 2, 3, 0}, {{3, 1, 3}, {3, 2, 3}, {3, 3, 3}, {2, 1, 2}, {2, 2, 2}}),
        kt({0, 2, 3, 0}, {{3, 1, 3}, {3, 2, 3}, {2, 1, 2}, {2, 3, 3}, {1, 2, 2}})};
    for (std::size_t i = 0; i < qkt0032.size(); ++i)
      ck.expect_eq(t_move(qkt0032[i], 3, 4), images[i], "golden/t-move-0032",
                   "0,0,3,2 #" + std::to_string(i + 1));

    const SpringGraph g = spring_graph(wc({0, 0, 3, 2}));
    ck.expect(g.connected && g.vertices.size() == 5 && g.edges.size() == 4,
              "golden/spring-graph-shape", "0,0,3,2",
              "expected a connected graph on five vertices with four edges");
    // The displayed path: Yamanouchi - N2 - N3 - N4 - N5 via pushes on rows
    // 4, 3, 4, 3 respectively.
    ck.expect_eq(spring_push(qkt0032[0], 4), std::optional<KohnertTableau>(qkt0032[1]),
                 "golden/spring-path-1", "0,0,3,2");
    ck.expect_eq(spring_push(qkt0032[1], 3), std::optional<KohnertTableau>(qkt0032[2]),
                 "golden/spring-path-2", "0,0,3,2");
    ck.expect_eq(spring_push(qkt0032[2], 4), std::optional<KohnertTableau>(qkt0032[3]),
                 "golden/spring-path-3", "0,0,3,2");
    ck.expect_eq(spring_push(qkt0032[3], 3), std::optional<KohnertTableau>(qkt0032[4]),
                 "golden/spring-path-4", "0,0,3,2");
    for (int row = 1; row <= 4; ++row) {
      const auto pushed = spring_push(qkt0032[4], row);
      ck.expect(!pushed || *pushed == qkt0032[4], "golden/spring-path-end", "0,0,3,2",
                "the lowest tableau should admit no further push");
    }
  }

  // The two displayed spring-loaded pushes (both act on the same tableau).
  {
    const KohnertTableau big =
        kt({0, 2, 0, 0, 3, 3, 0, 2, 3}, {{9, 1, 9}, {9, 2, 9}, {8, 1, 8}, {8, 3, 9}, {6, 1, 6},
                                          {6, 2, 6}, {6, 3, 6}, {5, 1, 5}, {5, 2, 8}, {4, 2, 5},
                                          {4, 3, 5}, {2, 1, 2}, {2, 2, 2}});
    const KohnertTableau push1 =
        kt({0, 2, 0, 0, 3, 3, 0, 2, 3}, {{9, 1, 9}, {9, 2, 9}, {8, 1, 8}, {6, 1, 6}, {6, 3, 9},
                                          {5, 2, 6}, {5, 3, 6}, {4, 1, 5}, {4, 2, 8}, {3, 2, 5},
                                          {3, 3, 5}, {2, 1, 2}, {2, 2, 2}});
    const KohnertTableau push2 =
        kt({0, 2, 0, 0, 3, 3, 0, 2, 3}, {{9, 1, 9}, {9, 2, 9}, {8, 1, 8}, {8, 3, 9}, {6, 1, 6},
                                          {6, 2, 6}, {6, 3, 6}, {5, 1, 5}, {5, 2, 5}, {5, 3, 5},
                                          {4, 2, 8}, {2, 1, 2}, {2, 2, 2}});
    ck.expect_eq(spring_push(big, 8), std::optional<KohnertTableau>(push1),
                 "golden/spring-push-case1", "0,2,0,0,3,3,0,2,3");
    ck.expect_eq(spring_push(big, 5), std::optional<KohnertTableau>(push2),
                 "golden/spring-push-case2", "0,2,0,0,3,3,0,2,3");
  }

  // Quasi-Yamanouchi quasi-Kohnert tableaux of contents (0,0,3,2) and
  // (0,2,3,0), with their slide expansions, and the kappa = sum of Q checks.
  {
    ck.expect(same_set(enumerate_qqkt(wc({0, 0, 3, 2})),
                       {qkt0032[0], qkt0032[1], qkt0032[2]}),
              "golden/qqkt-0032", "0,0,3,2", "QqKT(0,0,3,2) differs from the three expected tableaux");
    const std::vector<KohnertTableau> qqkt0230 = {
        kt({0, 2, 3, 0}, {{3, 1, 3}, {3, 2, 3}, {3, 3, 3}, {2, 1, 2}, {2, 2, 2}}),
        kt({0, 2, 3, 0}, {{3, 1, 3}, {3, 2, 3}, {2, 1, 2}, {2, 3, 3}, {1, 2, 2}})};
    ck.expect(same_set(enumerate_qqkt(wc({0, 2, 3, 0})), qqkt0230), "golden/qqkt-0230", "0,2,3,0",
              "QqKT(0,2,3,0) differs from the two expected tableaux");
    ck.expect_eq(quasikey_to_slides(wc({0, 0, 3, 2})),
                 expansion_of(Basis::FundamentalSlide,
                              {{{0, 0, 3, 2}, 1}, {{0, 2, 2, 1}, 1}, {{0, 1, 3, 1}, 1}}),
                 "golden/qkey-slides-0032", "0,0,3,2");
    ck.expect_eq(quasikey_to_slides(wc({0, 2, 3, 0})),
                 expansion_of(Basis::FundamentalSlide, {{{0, 2, 3, 0}, 1}, {{1, 2, 2, 0}, 1}}),
                 "golden/qkey-slides-0230", "0,2,3,0");
    ck.expect_eq(key_to_quasikeys(wc({0, 0, 3, 2})),
                 expansion_of(Basis::QuasiKey, {{{0, 0, 3, 2}, 1}, {{0, 2, 3, 0}, 1}}),
                 "golden/key-qkeys-0032", "0,0,3,2");
    ck.expect_eq(evaluate_expansion(key_to_quasikeys(wc({0, 0, 3, 2})), 4),
                 key_polynomial(wc({0, 0, 3, 2})), "golden/key-qkeys-0032-eval", "0,0,3,2");
  }

  // lswap/Qlswap of (0,2,3,2) and the quasi-key decomposition of kappa_{0232}.
  {
    std::vector<WeakComposition> lswap_expected = {
        wc({0, 2, 3, 2}), wc({2, 0, 3, 2}), wc({2, 3, 0, 2}), wc({2, 3, 2, 0}), wc({0, 3, 2, 2}),
        wc({3, 0, 2, 2}), wc({3, 2, 0, 2}), wc({3, 2, 2, 0}), wc({2, 2, 3, 0})};
    ck.expect(same_set(lswap_set(wc({0, 2, 3, 2})), lswap_expected), "golden/lswap-0232",
              "0,2,3,2", "lswap(0,2,3,2) differs from the nine listed compositions");
    std::vector<WeakComposition> qlswap_expected = {wc({0, 2, 3, 2}), wc({0, 3, 2, 2}),
                                                    wc({2, 2, 3, 0})};
    ck.expect(same_set(qlswap_set(wc({0, 2, 3, 2})), qlswap_expected), "golden/qlswap-0232",
              "0,2,3,2", "Qlswap(0,2,3,2) differs from the three listed compositions");
    ck.expect(same_set(qlswap_set(wc({0, 3, 2})), {wc({0, 3, 2}), wc({2, 3, 0})}),
              "golden/qlswap-032", "0,3,2", "Qlswap(0,3,2) differs from the two expected members");
    ck.expect_eq(key_to_quasikeys(wc({0, 2, 3, 2})),
                 expansion_of(Basis::QuasiKey,
                              {{{0, 2, 3, 2}, 1}, {{0, 3, 2, 2}, 1}, {{2, 2, 3, 0}, 1}}),
                 "golden/key-qkeys-0232", "0,2,3,2");
    ck.expect_eq(evaluate_expansion(key_to_quasikeys(wc({0, 2, 3, 2})), 4),
                 key_polynomial(wc({0, 2, 3, 2})), "golden/key-qkeys-0232-eval", "0,2,3,2");
  }

  // Thread decompositions and the thread map on QKT(0,2,3,2).
  {
    const std::vector<KohnertTableau> qkt0232 = {
        kt({0, 2, 3, 2}, {{4, 1, 4}, {4, 2, 4}, {3, 1, 3}, {3, 2, 3}, {2, 1, 2}, {2, 2, 2}, {2, 3, 3}}),
        kt({0, 2, 3, 2}, {{4, 1, 4}, {3, 1, 3}, {3, 2, 4}, {2, 1, 2}, {2, 2, 3}, {1, 2, 2}, {1, 3, 3}}),
        kt({0, 2, 3, 2}, {{4, 1, 4}, {3, 1, 3}, {3, 2, 4}, {2, 2, 3}, {1, 1, 2}, {1, 2, 2}, {1, 3, 3}}),
        kt({0, 2, 3, 2}, {{4, 1, 4}, {4, 2, 4}, {3, 1, 3}, {2, 1, 2}, {2, 2, 3}, {2, 3, 3}, {1, 2, 2}}),
        kt({0, 2, 3, 2}, {{4, 1, 4}, {4, 2, 4}, {3, 1, 3}, {2, 1, 2}, {2, 2, 3}, {1, 2, 2}, {1, 3, 3}}),
        kt({0, 2, 3, 2}, {{4, 1, 4}, {3, 1, 3}, {3, 2, 4}, {2, 1, 2}, {2, 2, 3}, {2, 3, 3}, {1, 2, 2}}),
        kt({0, 2, 3, 2}, {{4, 1, 4}, {4, 2, 4}, {3, 1, 3}, {3, 2, 3}, {3, 3, 3}, {2, 1, 2}, {2, 2, 2}}),
        kt({0, 2, 3, 2}, {{4, 1, 4}, {3, 1, 3}, {3, 2, 4}, {2, 2, 3}, {2, 3, 3}, {1, 1, 2}, {1, 2, 2}}),
        kt({0, 2, 3, 2}, {{4, 1, 4}, {4, 2, 4}, {3, 1, 3}, {3, 2, 3}, {2, 1, 2}, {2, 3, 3}, {1, 2, 2}}),
        kt({0, 2, 3, 2}, {{4, 1, 4}, {3, 1, 3}, {3, 2, 3}, {3, 3, 3}, {2, 2, 4}, {1, 1, 2}, {1, 2, 2}}),
        kt({0, 2, 3, 2}, {{4, 1, 4}, {3, 1, 3}, {3, 2, 3}, {3, 3, 3}, {2, 1, 2}, {2, 2, 4}, {1, 2, 2}}),
        kt({0, 2, 3, 2}, {{3, 1, 3}, {3, 2, 3}, {3, 3, 3}, {2, 1, 4}, {2, 2, 4}, {1, 1, 2}, {1, 2, 2}})};
    ck.expect(same_set(enumerate_qkt(wc({0, 2, 3, 2})), qkt0232), "golden/qkt-0232", "0,2,3,2",
              "QKT(0,2,3,2) differs from the twelve expected tableaux");

    using Part = std::set<std::set<Cell>>;
    auto threads_of = [](const KohnertTableau& t) {
      Part out;
      for (const auto& thread : thread_decompose(t.diagram()).threads)
        out.insert(std::set<Cell>(thread.begin(), thread.end()));
      return out;
    };
    auto cellset = [](std::vector<std::array<int, 2>> cells) {
      std::set<Cell> out;
      for (const auto& c : cells) out.insert(Cell{c[0], c[1]});
      return out;
    };
    const std::vector<Part> expected_threads = {
        {cellset({{2, 1}, {2, 2}, {2, 3}}), cellset({{3, 1}, {3, 2}}), cellset({{4, 1}, {4, 2}})},
        {cellset({{2, 1}, {1, 2}, {1, 3}}), cellset({{3, 1}, {2, 2}}), cellset({{4, 1}, {3, 2}})},
        {cellset({{1, 1}, {1, 2}, {1, 3}}), cellset({{3, 1}, {2, 2}}), cellset({{4, 1}, {3, 2}})},
        {cellset({{2, 1}, {2, 2}, {2, 3}}), cellset({{3, 1}, {1, 2}}), cellset({{4, 1}, {4, 2}})},
        {cellset({{2, 1}, {1, 2}, {1, 3}}), cellset({{3, 1}, {2, 2}}), cellset({{4, 1}, {4, 2}})},
        {cellset({{2, 1}, {2, 2}, {2, 3}}), cellset({{3, 1}, {1, 2}}), cellset({{4, 1}, {3, 2}})},
        {cellset({{3, 1}, {3, 2}, {3, 3}}), cellset({{2, 1}, {2, 2}}), cellset({{4, 1}, {4, 2}})},
        {cellset({{3, 1}, {2, 2}, {2, 3}}), cellset({{1, 1}, {1, 2}}), cellset({{4, 1}, {3, 2}})},
        {cellset({{3, 1}, {3, 2}, {2, 3}}), cellset({{2, 1}, {1, 2}}), cellset({{4, 1}, {4, 2}})},
        {cellset({{3, 1}, {3, 2}, {3, 3}}), cellset({{1, 1}, {1, 2}}), cellset({{4, 1}, {2, 2}})},
        {cellset({{3, 1}, {3, 2}, {3, 3}}), cellset({{2, 1}, {1, 2}}), cellset({{4, 1}, {2, 2}})},
        {cellset({{3, 1}, {3, 2}, {3, 3}}), cellset({{2, 1}, {2, 2}}), cellset({{1, 1}, {1, 2}})}};
    const std::vector<KohnertTableau> theta_images = {
        kt({0, 3, 2, 2}, {{4, 1, 4}, {4, 2, 4}, {3, 1, 3}, {3, 2, 3}, {2, 1, 2}, {2, 2, 2}, {2, 3, 2}}),
        kt({0, 3, 2, 2}, {{4, 1, 4}, {3, 1, 3}, {3, 2, 4}, {2, 1, 2}, {2, 2, 3}, {1, 2, 2}, {1, 3, 2}}),
        kt({0, 3, 2, 2}, {{4, 1, 4}, {3, 1, 3}, {3, 2, 4}, {2, 2, 3}, {1, 1, 2}, {1, 2, 2}, {1, 3, 2}}),
        kt({0, 3, 2, 2}, {{4, 1, 4}, {4, 2, 4}, {3, 1, 3}, {2, 1, 2}, {2, 2, 2}, {2, 3, 2}, {1, 2, 3}}),
        kt({0, 3, 2, 2}, {{4, 1, 4}, {4, 2, 4}, {3, 1, 3}, {2, 1, 2}, {2, 2, 3}, {1, 2, 2}, {1, 3, 2}}),
        kt({0, 3, 2, 2}, {{4, 1, 4}, {3, 1, 3}, {3, 2, 4}, {2, 1, 2}, {2, 2, 2}, {2, 3, 2}, {1, 2, 3}}),
        kt({0, 2, 3, 2}, {{4, 1, 4}, {4, 2, 4}, {3, 1, 3}, {3, 2, 3}, {3, 3, 3}, {2, 1, 2}, {2, 2, 2}}),
        kt({0, 2, 3, 2}, {{4, 1, 4}, {3, 1, 3}, {3, 2, 4}, {2, 2, 3}, {2, 3, 3}, {1, 1, 2}, {1, 2, 2}}),
        kt({0, 2, 3, 2}, {{4, 1, 4}, {4, 2, 4}, {3, 1, 3}, {3, 2, 3}, {2, 1, 2}, {2, 3, 3}, {1, 2, 2}}),
        kt({0, 2, 3, 2}, {{4, 1, 4}, {3, 1, 3}, {3, 2, 3}, {3, 3, 3}, {2, 2, 4}, {1, 1, 2}, {1, 2, 2}}),
        kt({0, 2, 3, 2}, {{4, 1, 4}, {3, 1, 3}, {3, 2, 3}, {3, 3, 3}, {2, 1, 2}, {2, 2, 4}, {1, 2, 2}}),
        kt({2, 2, 3, 0}, {{3, 1, 3}, {3, 2, 3}, {3, 3, 3}, {2, 1, 2}, {2, 2, 2}, {1, 1, 1}, {1, 2, 1}})};
    for (std::size_t i = 0; i < qkt0232.size(); ++i) {
      ck.expect(threads_of(qkt0232[i]) == expected_threads[i], "golden/threads-0232",
                "0,2,3,2 #" + std::to_string(i + 1), "thread partition differs from the expected partition");
      ck.expect_eq(thread_map(qkt0232[i]), theta_images[i], "golden/theta-0232",
                   "0,2,3,2 #" + std::to_string(i + 1));
    }
  }

  // SSYT_3(3,2), QYT(3,2), the Schur polynomial display, and its fundamental
  // expansion.
  const std::vector<YoungTableau> ssyt32 = {
      YoungTableau({{1, 1, 2}, {2, 2}}), YoungTableau({{1, 1, 3}, {2, 2}}),
      YoungTableau({{1, 1, 3}, {2, 3}}), YoungTableau({{1, 1, 3}, {3, 3}}),
      YoungTableau({{1, 2, 3}, {2, 3}}), YoungTableau({{1, 2, 3}, {3, 3}}),
      YoungTableau({{2, 2, 3}, {3, 3}}), YoungTableau({{1, 2, 2}, {2, 3}}),
      YoungTableau({{2, 2, 2}, {3, 3}}), YoungTableau({{1, 1, 1}, {3, 3}}),
      YoungTableau({{1, 1, 2}, {2, 3}}), YoungTableau({{1, 1, 2}, {3, 3}}),
      YoungTableau({{1, 2, 2}, {3, 3}}), YoungTableau({{1, 1, 1}, {2, 2}}),
      YoungTableau({{1, 1, 1}, {2, 3}})};
  {
    ck.expect(same_set(enumerate_ssyt(Partition({3, 2}), 3), ssyt32), "golden/ssyt-32", "3,2",
              "SSYT_3(3,2) differs from the fifteen expected tableaux");
    ck.expect(same_set(enumerate_qyt(Partition({3, 2}), 3),
                       {ssyt32[0], ssyt32[4], ssyt32[7], ssyt32[13], ssyt32[10]}),
              "golden/qyt-32", "3,2", "QYT(3,2) differs from the five expected tableaux");
    ck.expect_eq(schur_polynomial(Partition({3, 2}), 3),
                 poly_of(3, {{{2, 3, 0}, 1}, {{2, 2, 1}, 2}, {{2, 1, 2}, 2}, {{2, 0, 3}, 1},
                             {{1, 2, 2}, 2}, {{1, 1, 3}, 1}, {{0, 2, 3}, 1}, {{1, 3, 1}, 1},
                             {{0, 3, 2}, 1}, {{3, 2, 0}, 1}, {{3, 1, 1}, 1}, {{3, 0, 2}, 1}}),
                 "golden/schur-32", "3,2");
    ck.expect_eq(schur_to_fundamentals(Partition({3, 2}), 3),
                 expansion_of(Basis::FundamentalQsym, {{{2, 3}, 1},
                                                       {{1, 2, 2}, 1},
                                                       {{1, 3, 1}, 1},
                                                       {{3, 2}, 1},
                                                       {{2, 2, 1}, 1}}),
                 "golden/schur-fund-32", "3,2");
    ck.expect_eq(schur_polynomial(Partition({3, 2}), 3), key_polynomial(wc({0, 2, 3})),
                 "golden/schur-is-key-023", "0,2,3");
    ck.expect_eq(hook_length_syt_count(Partition({3, 2})), 5LL, "golden/hook-32", "3,2");
  }

  // KT(0,2,3) and the entrywise correspondence with SSYT_3(3,2).
  {
    const std::vector<KohnertTableau> kt023 = {
        kt({0, 2, 3}, {{3, 1, 3}, {3, 2, 3}, {2, 1, 2}, {2, 2, 2}, {2, 3, 3}}),
        kt({0, 2, 3}, {{3, 1, 3}, {3, 2, 3}, {2, 1, 2}, {2, 2, 2}, {1, 3, 3}}),
        kt({0, 2, 3}, {{3, 1, 3}, {3, 2, 3}, {2, 1, 2}, {1, 2, 2}, {1, 3, 3}}),
        kt({0, 2, 3}, {{3, 1, 3}, {3, 2, 3}, {1, 1, 2}, {1, 2, 2}, {1, 3, 3}}),
        kt({0, 2, 3}, {{3, 1, 3}, {2, 1, 2}, {2, 2, 3}, {1, 2, 2}, {1, 3, 3}}),
        kt({0, 2, 3}, {{3, 1, 3}, {2, 2, 3}, {1, 1, 2}, {1, 2, 2}, {1, 3, 3}}),
        kt({0, 2, 3}, {{2, 1, 3}, {2, 2, 3}, {1, 1, 2}, {1, 2, 2}, {1, 3, 3}}),
        kt({0, 2, 3}, {{3, 1, 3}, {2, 1, 2}, {2, 2, 3}, {2, 3, 3}, {1, 2, 2}}),
        kt({0, 2, 3}, {{2, 1, 3}, {2, 2, 3}, {2, 3, 3}, {1, 1, 2}, {1, 2, 2}}),
        kt({0, 2, 3}, {{3, 1, 3}, {3, 2, 3}, {3, 3, 3}, {1, 1, 2}, {1, 2, 2}}),
        kt({0, 2, 3}, {{3, 1, 3}, {3, 2, 3}, {2, 1, 2}, {2, 3, 3}, {1, 2, 2}}),
        kt({0, 2, 3}, {{3, 1, 3}, {3, 2, 3}, {2, 3, 3}, {1, 1, 2}, {1, 2, 2}}),
        kt({0, 2, 3}, {{3, 1, 3}, {2, 2, 3}, {2, 3, 3}, {1, 1, 2}, {1, 2, 2}}),
        kt({0, 2, 3}, {{3, 1, 3}, {3, 2, 3}, {3, 3, 3}, {2, 1, 2}, {2, 2, 2}}),
        kt({0, 2, 3}, {{3, 1, 3}, {3, 2, 3}, {3, 3, 3}, {2, 1, 2}, {1, 2, 2}})};
    ck.expect(same_set(enumerate_kt(wc({0, 2, 3})), kt023), "golden/kt-023", "0,2,3",
              "KT(0,2,3) differs from the fifteen expected tableaux");
    for (std::size_t i = 0; i < kt023.size(); ++i) {
      ck.expect_eq(kt_to_ssyt(kt023[i], 3), ssyt32[i], "golden/kt-to-ssyt",
                   "0,2,3 #" + std::to_string(i + 1));
      ck.expect_eq(ssyt_to_kt(ssyt32[i], wc({0, 2, 3})), kt023[i], "golden/ssyt-to-kt",
                   "0,2,3 #" + std::to_string(i + 1));
      // The correspondence reverses weights.
      std::vector<int> reversed = tableau_weight(kt023[i]).parts();
      std::reverse(reversed.begin(), reversed.end());
      ck.expect(tableau_content(ssyt32[i], 3).parts() == reversed, "golden/kt-ssyt-weights",
                "0,2,3 #" + std::to_string(i + 1), "weights are not reversed");
    }
  }

  // phi: a worked example and the images of QKT(0,3,2) and QKT(0,0,3,2).
  {
    const KohnertTableau input =
        kt({1, 3, 1, 0, 4, 0, 2}, {{7, 1, 7}, {5, 1, 5}, {5, 2, 5}, {5, 3, 5}, {4, 2, 7},
                                    {3, 1, 3}, {3, 4, 5}, {2, 1, 2}, {1, 1, 1}, {1, 2, 2},
                                    {1, 3, 2}});
    const YoungTableau expected({{1, 2, 2, 4}, {2, 3, 6}, {4, 6}, {5}, {6}});
    ck.expect_eq(phi(input), expected, "golden/phi-example", "1,3,1,0,4,0,2");

    std::vector<YoungTableau> images032;
    for (const KohnertTableau& t : enumerate_qkt(wc({0, 3, 2}))) images032.push_back(phi(t));
    ck.expect(same_set(images032, {ssyt32[0], ssyt32[4], ssyt32[7], ssyt32[13]}),
              "golden/phi-qkt-032", "0,3,2",
              "phi(QKT(0,3,2)) differs from the first four quasi-Yamanouchi tableaux");
    std::vector<YoungTableau> images0032;
    for (const KohnertTableau& t : enumerate_qkt(wc({0, 0, 3, 2}))) images0032.push_back(phi(t));
    ck.expect(same_set(images0032, {ssyt32[0], ssyt32[4], ssyt32[7], ssyt32[13], ssyt32[10]}),
              "golden/phi-qkt-0032", "0,0,3,2",
              "phi(QKT(0,0,3,2)) differs from QYT(3,2)");
  }

  // SCT(2,3,2) with descent compositions, the quasi-Schur expansion, and psi.
  {
    const std::vector<CompositionTableau> sct232 = {
        CompositionTableau({{2, 1}, {5, 4, 3}, {7, 6}}),
        CompositionTableau({{3, 1}, {5, 4, 2}, {7, 6}}),
        CompositionTableau({{2, 1}, {6, 5, 3}, {7, 4}}),
        CompositionTableau({{3, 2}, {6, 5, 4}, {7, 1}}),
        CompositionTableau({{2, 1}, {6, 5, 4}, {7, 3}}),
        CompositionTableau({{3, 1}, {6, 5, 2}, {7, 4}}),
        CompositionTableau({{4, 2}, {6, 5, 3}, {7, 1}})};
    const std::vector<StrongComposition> descents = {
        StrongComposition({2, 3, 2}),       StrongComposition({1, 2, 2, 2}),
        StrongComposition({2, 2, 2, 1}),    StrongComposition({1, 2, 3, 1}),
        StrongComposition({2, 1, 3, 1}),    StrongComposition({1, 2, 1, 2, 1}),
        StrongComposition({1, 1, 2, 2, 1})};
    ck.expect(same_set(enumerate_sct(StrongComposition({2, 3, 2})), sct232), "golden/sct-232",
              "2,3,2", "SCT(2,3,2) differs from the seven expected tableaux");
    for (std::size_t i = 0; i < sct232.size(); ++i)
      ck.expect_eq(descent_composition(sct232[i]), descents[i], "golden/sct-descents",
                   "2,3,2 #" + std::to_string(i + 1));
    Expansion qs(Basis::FundamentalQsym);
    for (const auto& d : descents) qs.add(d.parts(), 1);
    ck.expect_eq(quasischur_to_fundamentals(StrongComposition({2, 3, 2})), qs,
                 "golden/qschur-fund-232", "2,3,2");

    const std::vector<KohnertTableau> qqkt00232 = {
        kt({0, 0, 2, 3, 2}, {{5, 1, 5}, {5, 2, 5}, {4, 1, 4}, {4, 2, 4}, {4, 3, 4}, {3, 1, 3}, {3, 2, 3}}),
        kt({0, 0, 2, 3, 2}, {{5, 1, 5}, {5, 2, 5}, {4, 1, 4}, {4, 2, 4}, {3, 1, 3}, {3, 3, 4}, {2, 2, 3}}),
        kt({0, 0, 2, 3, 2}, {{5, 1, 5}, {4, 1, 4}, {4, 2, 5}, {3, 2, 4}, {3, 3, 4}, {2, 1, 3}, {2, 2, 3}}),
        kt({0, 0, 2, 3, 2}, {{5, 1, 5}, {4, 1, 4}, {4, 2, 4}, {4, 3, 4}, {3, 1, 3}, {3, 2, 5}, {2, 2, 3}}),
        kt({0, 0, 2, 3, 2}, {{5, 1, 5}, {4, 1, 4}, {4, 2, 4}, {4, 3, 4}, {3, 2, 5}, {2, 1, 3}, {2, 2, 3}}),
        kt({0, 0, 2, 3, 2}, {{5, 1, 5}, {4, 1, 4}, {4, 2, 5}, {3, 2, 4}, {2, 1, 3}, {2, 3, 4}, {1, 2, 3}}),
        kt({0, 0, 2, 3, 2}, {{5, 1, 5}, {4, 1, 4}, {4, 2, 4}, {3, 1, 3}, {3, 3, 4}, {2, 2, 5}, {1, 2, 3}})};
    ck.expect(same_set(enumerate_qqkt(wc({0, 0, 2, 3, 2})), qqkt00232), "golden/qqkt-00232",
              "0,0,2,3,2", "QqKT(0,0,2,3,2) differs from the seven expected tableaux");
    for (std::size_t i = 0; i < qqkt00232.size(); ++i)
      ck.expect_eq(psi(qqkt00232[i]), sct232[i], "golden/psi-00232",
                   "0,0,2,3,2 #" + std::to_string(i + 1));
    ck.expect_eq(quasikey_to_slides(wc({0, 0, 2, 3, 2})),
                 expansion_of(Basis::FundamentalSlide,
                              {{{0, 0, 2, 3, 2}, 1},
                               {{0, 1, 2, 2, 2}, 1},
                               {{0, 2, 2, 2, 1}, 1},
                               {{0, 1, 2, 3, 1}, 1},
                               {{0, 2, 1, 3, 1}, 1},
                               {{1, 2, 1, 2, 1}, 1},
                               {{1, 1, 2, 2, 1}, 1}}),
                 "golden/qkey-slides-00232", "0,0,2,3,2");
    ck.expect_eq(quasikey_to_slides(wc({2, 3, 2})),
                 expansion_of(Basis::FundamentalSlide, {{{2, 3, 2}, 1}}),
                 "golden/qkey-slides-232", "2,3,2");
    ck.expect_eq(quasikey_to_slides(wc({0, 2, 3, 2})),
                 expansion_of(Basis::FundamentalSlide, {{{0, 2, 3, 2}, 1},
                                                        {{1, 2, 2, 2}, 1},
                                                        {{2, 2, 2, 1}, 1},
                                                        {{1, 2, 3, 1}, 1},
                                                        {{2, 1, 3, 1}, 1}}),
                 "golden/qkey-slides-0232", "0,2,3,2");
  }

  // lsort, sigma, eta, and the stability profile of (3,2).
  {
    ck.expect_eq(lsort(wc({0, 0, 2, 0, 0, 0, 4, 1, 0, 3, 2})),
                 std::optional<WeakComposition>(wc({0, 1, 2, 0, 2, 3, 4, 0, 0, 0, 0})),
                 "golden/lsort-long", "0,0,2,0,0,0,4,1,0,3,2");
    ck.expect_eq(lsort(wc({0, 3, 0, 2, 2})), std::optional<WeakComposition>(),
                 "golden/lsort-absent", "0,3,0,2,2");
    ck.expect_eq(sigma(wc({0, 0, 2, 0, 0, 0, 4, 1, 0, 3, 2})), -1, "golden/sigma-long",
                 "0,0,2,0,0,0,4,1,0,3,2");
    ck.expect_eq(sigma(wc({0, 3, 0, 2, 2})), 1, "golden/sigma-03022", "0,3,0,2,2");
    ck.expect_eq(eta(wc({0, 0, 2, 0, 0, 0, 4, 1, 0, 3, 2})), 3, "golden/eta-long",
                 "0,0,2,0,0,0,4,1,0,3,2");
    ck.expect_eq(eta(wc({0, 3, 0, 2, 2})), 3, "golden/eta-03022", "0,3,0,2,2");
    ck.expect_eq(eta(wc({3, 2})), 2, "golden/eta-32", "3,2");
    ck.expect_eq(stability_profile(wc({3, 2}), 3), std::vector<long long>{1, 4, 5, 5},
                 "golden/profile-32", "3,2");
    ck.expect_eq(key_to_slides(wc({3, 2})),
                 expansion_of(Basis::FundamentalSlide, {{{3, 2}, 1}}), "golden/key-slides-32",
                 "3,2");
    ck.expect_eq(stable_slide_expansion(wc({3, 2})), key_to_slides(wc({0, 0, 3, 2})),
                 "golden/stable-expansion-32", "3,2");
  }

  // Small displayed slide/fundamental facts.
  {
    ck.expect_eq(fundamental_slide(wc({0, 1, 1})),
                 poly_of(3, {{{0, 1, 1}, 1}, {{1, 0, 1}, 1}, {{1, 1, 0}, 1}}),
                 "golden/slide-011", "0,1,1");
    ck.expect_eq(fundamental_qsym_polynomial(StrongComposition({2}), 2),
                 poly_of(2, {{{2, 0}, 1}, {{0, 2}, 1}, {{1, 1}, 1}}), "golden/fund-qsym-2",
                 "2");
    ck.expect_eq(key_polynomial(WeakComposition()), SparseIntegerPolynomial::one(0),
                 "golden/key-empty", "");
    ck.expect(kohnert_closure(wc({0, 0})).size() == 1 && kohnert_closure(wc({0, 0}))[0].empty(),
              "golden/closure-zero", "0,0", "closure of the empty diagram should be itself");
    ck.expect_eq(static_cast<int>(kohnert_closure(wc({1, 1})).size()), 1, "golden/closure-11",
                 "1,1");
  }

  return ck.take();
}

// ---------------------------------------------------------------------------
// Identity suite (includes the symmetry and quasisymmetry criteria).
// ---------------------------------------------------------------------------

inline std::vector<VerifyResult> verify_identities(int max_weight, int max_length) {
  detail::Checker ck;
  for (const WeakComposition& a : detail::corpus(max_weight, max_length)) {
    const std::string id = a.str();
    const int n = a.length();
    const SparseIntegerPolynomial key = key_polynomial(a);
    ck.expect_eq(key_polynomial_from_tableaux(a), key, "identities/km-vs-kt", id);
    ck.expect_eq(evaluate_expansion(key_to_slides(a), n), key, "identities/key-slide", id);
    const SparseIntegerPolynomial qkey = quasi_key_polynomial(a);
    ck.expect_eq(evaluate_expansion(quasikey_to_slides(a), n), qkey, "identities/qkey-slide", id);
    ck.expect_eq(evaluate_expansion(key_to_quasikeys(a), n), key, "identities/key-qkey", id);

    for (const auto& [poly, name] :
         {std::pair<const SparseIntegerPolynomial&, const char*>{key, "identities/key-unitriangular"},
          std::pair<const SparseIntegerPolynomial&, const char*>{qkey, "identities/qkey-unitriangular"}}) {
      bool ok = poly.coefficient(a.parts()) == 1;
      for (const auto& [e, c] : poly.terms())
        if (!dominates(WeakComposition(e), a)) ok = false;
      ck.expect(ok, name, id, "x^a is not the dominance-minimal monomial with coefficient 1");
    }

    const int k = a.last_nonzero();
    const bool prefix_increasing = [&] {
      for (int i = 2; i <= k; ++i)
        if (a.part(i - 1) > a.part(i)) return false;
      return true;
    }();
    const bool symmetric = detail::symmetric_in_prefix(key, k);
    ck.expect(symmetric == prefix_increasing, "identities/symmetric-iff", id,
              "symmetry in the support prefix disagrees with the weakly increasing criterion");
    if (symmetric) {
      std::vector<int> prefix(a.parts().begin(), a.parts().begin() + k);
      SparseIntegerPolynomial truncated(k);
      for (const auto& [e, c] : key.terms())
        truncated.add_term(std::vector<int>(e.begin(), e.begin() + k), c);
      ck.expect_eq(truncated, schur_polynomial(rev_increasing(WeakComposition(prefix)), k),
                   "identities/symmetric-schur", id);
    }

    // The nonzero parts form an interval ending at position k exactly when no
    // zero inside the support prefix is followed by a nonzero part.
    const bool interval = [&] {
      bool seen_nonzero = false;
      for (int i = 1; i <= k; ++i) {
        if (a.part(i) > 0) seen_nonzero = true;
        else if (seen_nonzero) return false;
      }
      return true;
    }();
    const bool quasisymmetric = detail::quasisymmetric_in_prefix(qkey, k);
    ck.expect(quasisymmetric == interval, "identities/quasisymmetric-iff", id,
              "quasisymmetry disagrees with the terminal-interval criterion");
    if (quasisymmetric) {
      SparseIntegerPolynomial truncated(k);
      for (const auto& [e, c] : qkey.terms())
        truncated.add_term(std::vector<int>(e.begin(), e.begin() + k), c);
      ck.expect_eq(truncated, quasi_schur_polynomial(flatten(a), k),
                   "identities/quasisymmetric-qschur", id);
    }
  }
  return ck.take();
}

// ---------------------------------------------------------------------------
// Bijection suite.
// ---------------------------------------------------------------------------

inline std::vector<VerifyResult> verify_bijections(int max_weight, int max_length) {
  detail::Checker ck;
  for (const WeakComposition& a : detail::corpus(max_weight, max_length)) {
    const std::string id = a.str();
    const int n = a.length();
    const std::vector<KohnertTableau> tableaux = enumerate_kt(a);
    const std::vector<KohnertTableau> quasi_yam = enumerate_qkt(a);

    {
      bool ok = true;
      for (const KohnertTableau& t : tableaux) {
        const auto relabeled = kohnert_label(t.diagram(), a);
        if (!relabeled || *relabeled != t) ok = false;
        if (!validate_kt(t)) ok = false;
      }
      ck.expect(ok, "bijections/label-strip-identity", id,
                "relabeling a stripped tableau did not reproduce it");
    }

    {
      std::map<KohnertTableau, std::vector<KohnertTableau>> fibers;
      for (const KohnertTableau& t : tableaux) fibers[destandardize(t)].push_back(t);
      bool ok = fibers.size() == quasi_yam.size();
      for (const auto& [u, fiber] : fibers) {
        if (!is_quasi_yamanouchi(u)) ok = false;
        SparseIntegerPolynomial sum(n);
        for (const KohnertTableau& t : fiber) sum.add_term(tableau_weight(t).parts(), 1);
        const SparseIntegerPolynomial slide = fundamental_slide(tableau_weight(u));
        if (sum != slide) ok = false;
        std::vector<KohnertTableau> rebuilt;
        for (const auto& [b, c] : slide.terms())
          rebuilt.push_back(destandardization_fiber(u, WeakComposition(b)));
        if (!detail::same_set(rebuilt, fiber)) ok = false;
      }
      ck.expect(ok, "bijections/dst-fibers", id,
                "a destandardization fiber does not realize a single slide polynomial");

      bool no_gap = true;
      for (int i = 1; i <= n; ++i)
        if (a.part(i) == 0)
          for (int j = i + 1; j <= n; ++j)
            if (a.part(j) != 0) no_gap = false;
      ck.expect((tableaux.size() == quasi_yam.size()) == no_gap, "bijections/dst-injective-iff",
                id, "dst injectivity disagrees with the trailing-zero criterion");
    }

    {
      std::vector<KohnertTableau> images;
      bool ok = true;
      for (const KohnertTableau& t : quasi_yam) {
        const KohnertTableau image = thread_map(t);
        if (tableau_weight(image).parts() != tableau_weight(t).parts()) ok = false;
        if (image.diagram() != t.diagram()) ok = false;
        const auto canonical = kohnert_label(image.diagram(), image.content());
        if (!canonical || *canonical != image) ok = false;
        images.push_back(image);
      }
      std::vector<KohnertTableau> expected;
      for (const WeakComposition& b : qlswap_set(a))
        for (const KohnertTableau& t : enumerate_qqkt(b)) expected.push_back(t);
      ck.expect(ok && detail::same_set(images, expected), "bijections/theta", id,
                "theta is not a weight-preserving bijection onto the Qlswap families");
    }

    {
      std::vector<YoungTableau> images;
      bool ok = true;
      const Partition shape = sort_decreasing(a);
      for (const KohnertTableau& t : quasi_yam) {
        const YoungTableau image = phi(t);
        if (!is_valid_ssyt(image, n) || !is_qyt(image)) ok = false;
        if (image.shape() != shape) ok = false;
        std::vector<int> reversed = n > 0 ? tableau_content(image, n).parts() : std::vector<int>{};
        std::vector<int> flat;
        for (int v : reversed)
          if (v > 0) flat.push_back(v);
        std::reverse(flat.begin(), flat.end());
        if (flat != flatten(tableau_weight(t)).parts()) ok = false;
        images.push_back(image);
      }
      std::sort(images.begin(), images.end());
      ck.expect(ok && std::adjacent_find(images.begin(), images.end()) == images.end(),
                "bijections/phi", id, "phi is not a weight-reversing injection into QYT(sort(a))");
    }

    {
      std::vector<CompositionTableau> images;
      bool ok = true;
      const StrongComposition flat_a = flatten(a);
      const std::vector<CompositionTableau> codomain = enumerate_sct(flat_a);
      for (const KohnertTableau& t : enumerate_qqkt(a)) {
        const CompositionTableau image = psi(t);
        if (std::find(codomain.begin(), codomain.end(), image) == codomain.end()) ok = false;
        if (descent_composition(image) != flatten(tableau_weight(t))) ok = false;
        images.push_back(image);
      }
      std::sort(images.begin(), images.end());
      ck.expect(ok && std::adjacent_find(images.begin(), images.end()) == images.end(),
                "bijections/psi", id, "psi is not a descent-preserving injection into SCT(flat(a))");
    }

    {
      const int k = a.last_nonzero();
      bool applicable = true;
      for (int i = 2; i <= k; ++i)
        if (a.part(i - 1) > a.part(i)) applicable = false;
      if (applicable) {
        std::vector<YoungTableau> images;
        bool ok = true;
        for (const KohnertTableau& t : tableaux) {
          const YoungTableau image = kt_to_ssyt(t, k);
          if (ssyt_to_kt(image, a) != t) ok = false;
          images.push_back(image);
        }
        std::vector<int> prefix(a.parts().begin(), a.parts().begin() + k);
        ck.expect(ok && detail::same_set(images,
                                         enumerate_ssyt(rev_increasing(WeakComposition(prefix)), k)),
                  "bijections/kt-ssyt", id,
                  "the KT <-> SSYT correspondence is not a round-trip bijection");
      }
    }
  }
  return ck.take();
}

// ---------------------------------------------------------------------------
// Stability suite.
// ---------------------------------------------------------------------------

struct StabilityRecord {
  WeakComposition a;
  int eta_value = 0;
  std::vector<long long> profile;
  bool plateau_ok = false;
  bool syt_ok = false;
  bool shift_ok = false;
  bool sct_ok = false;
  bool schur_ok = false;
  bool lowest_ok = false;
  bool connected_ok = false;
  bool ok() const {
    return plateau_ok && syt_ok && shift_ok && sct_ok && schur_ok && lowest_ok && connected_ok;
  }
};

inline StabilityRecord stability_record(const WeakComposition& a) {
  StabilityRecord rec;
  rec.a = a;
  rec.eta_value = eta(a);
  const int stable_m = std::max(rec.eta_value, 0);
  rec.profile = stability_profile(a, stable_m + 2);

  rec.plateau_ok = true;
  if (a.nonzero_count() > 0) {
    for (int m = 0; m < rec.eta_value; ++m)
      if (rec.profile[static_cast<std::size_t>(m)] >= rec.profile[static_cast<std::size_t>(m) + 1])
        rec.plateau_ok = false;
  }
  for (std::size_t m = static_cast<std::size_t>(stable_m); m + 1 < rec.profile.size(); ++m)
    if (rec.profile[m] != rec.profile[m + 1]) rec.plateau_ok = false;

  rec.syt_ok = rec.profile.back() == hook_length_syt_count(sort_decreasing(a));

  const Expansion stable = stable_slide_expansion(a);
  rec.shift_ok = true;
  for (int d = 1; d <= 2; ++d)
    if (key_to_slides(prepend_zeros(a, stable_m + d)) != shift_expansion(stable, d))
      rec.shift_ok = false;

  {
    std::multiset<std::vector<int>> descents;
    for (const CompositionTableau& t : enumerate_sct(flatten(a)))
      descents.insert(descent_composition(t).parts());
    rec.sct_ok = true;
    for (int d = 0; d <= 1; ++d) {
      std::multiset<std::vector<int>> flats;
      for (const KohnertTableau& t : enumerate_qqkt(prepend_zeros(a, stable_m + d)))
        flats.insert(flatten(tableau_weight(t)).parts());
      if (flats != descents) rec.sct_ok = false;
    }
  }

  {
    const Partition lambda = sort_decreasing(a);
    const int bound = std::max(1, lambda.weight() - (lambda.length() ? lambda.part(1) : 0) + 1);
    std::multiset<std::vector<int>> qyt_weights;
    for (const YoungTableau& t : enumerate_qyt(lambda, bound))
      qyt_weights.insert(flatten(tableau_content(t, bound)).parts());
    std::multiset<std::vector<int>> reversed_flats;
    for (const KohnertTableau& t : enumerate_qkt(prepend_zeros(a, stable_m))) {
      std::vector<int> flat = flatten(tableau_weight(t)).parts();
      std::reverse(flat.begin(), flat.end());
      reversed_flats.insert(flat);
    }
    rec.schur_ok = qyt_weights == reversed_flats;
  }

  rec.lowest_ok = true;
  if (a.nonzero_count() > 0) {
    for (int m = stable_m; m <= stable_m + 2; ++m) {
      int lowest = 0;
      for (const KohnertTableau& t : enumerate_qkt(prepend_zeros(a, m)))
        for (const LabeledCell& c : t.cells())
          if (lowest == 0 || c.row < lowest) lowest = c.row;
      if (lowest != m - rec.eta_value + 1) rec.lowest_ok = false;
    }
  }

  // Connectivity of the push graph is a statement about the virtual family,
  // so it is tested after zero-padding to the stability point, where the
  // positive quadrant holds every virtual tableau.
  rec.connected_ok = true;
  for (int m = stable_m; m <= stable_m + 1; ++m)
    if (!spring_graph(prepend_zeros(a, m)).connected) rec.connected_ok = false;

  return rec;
}

inline std::vector<StabilityRecord> verify_stability(int max_weight, int max_length) {
  std::vector<StabilityRecord> out;
  for (const WeakComposition& a : detail::corpus(max_weight, max_length))
    out.push_back(stability_record(a));
  return out;
}

}  // namespace kohnert
