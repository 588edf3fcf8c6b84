#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "kohnert/expand.hpp"
#include "kohnert/kohnert_tableau.hpp"
#include "oracles.hpp"

using namespace kohnert;

namespace {
WeakComposition wc(std::vector<int> parts) { return WeakComposition(std::move(parts)); }

KohnertTableau kt(std::vector<int> content, std::vector<std::array<int, 3>> cells) {
  std::vector<LabeledCell> lc;
  for (const auto& c : cells) lc.push_back(LabeledCell{c[0], c[1], c[2]});
  return KohnertTableau(WeakComposition(std::move(content)), std::move(lc));
}
}  // namespace

TEST_CASE("validation") {
  CHECK(validate_kt(yamanouchi_tableau(wc({0, 3, 2}))));
  // Relabeling one 2 as a 3 breaks the content multiset.
  CHECK_FALSE(validate_kt(
      kt({0, 3, 2}, {{3, 1, 3}, {3, 2, 3}, {2, 1, 2}, {2, 2, 2}, {2, 3, 3}})));
  // A label below its row index violates condition (ii): the staircase
  // labeled with content (0,2,1) forces a 2 into row 3.
  CHECK_FALSE(validate_kt(kt({0, 2, 1}, {{3, 1, 2}, {2, 2, 2}, {1, 1, 3}})));
}

TEST_CASE("labeling requires matching column counts") {
  CHECK_THROWS_AS(kohnert_label(key_diagram(wc({2, 1})), wc({1, 1})), std::invalid_argument);
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_kt(wc({0, 3, 2})).size() == 9);
  CHECK(enumerate_kt(wc({0, 2, 3})).size() == 15);
  const auto empty = enumerate_kt(wc({0, 0}));
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].empty());
  CHECK(enumerate_qkt(wc({0, 3, 2})).size() == 4);
  CHECK(enumerate_qkt(wc({0, 0, 3, 2})).size() == 5);
  CHECK(enumerate_quasi_kohnert(wc({0, 3, 2})).size() == 8);
  CHECK(enumerate_qqkt(wc({0, 0, 3, 2})).size() == 3);
  CHECK(enumerate_qqkt(wc({0, 2, 3, 0})).size() == 2);
}

TEST_CASE("labeling is a bijection from the closure") {
  for (int w = 0; w <= 5; ++w)
    for (const auto& a : all_weak_compositions(w, 3)) {
      const auto tableaux = enumerate_kt(a);
      CHECK(tableaux.size() == kohnert_closure(a).size());
      for (const auto& t : tableaux) {
        CHECK(validate_kt(t));
        CHECK(kohnert_label(t.diagram(), a) == std::optional<KohnertTableau>(t));
      }
    }
}

TEST_CASE("no other filling satisfies the tableau conditions") {
  for (const auto& a : {wc({0, 3, 2}), wc({2, 1}), wc({1, 0, 2}), wc({0, 2, 2})})
    for (const Diagram& d : kohnert_closure(a))
      CHECK(oracles::valid_fillings_by_exhaustion(d, a) == 1);
}

TEST_CASE("quasi-Yamanouchi filter") {
  CHECK(is_quasi_yamanouchi(yamanouchi_tableau(wc({2, 0, 2}))));
  for (int w = 0; w <= 5; ++w)
    for (const auto& a : all_weak_compositions(w, 3))
      CHECK(is_quasi_yamanouchi(yamanouchi_tableau(a)));
}

TEST_CASE("destandardization") {
  for (int w = 0; w <= 5; ++w)
    for (const auto& a : all_weak_compositions(w, 3)) {
      const auto quasi = enumerate_qkt(a);
      for (const auto& t : enumerate_kt(a)) {
        const KohnertTableau u = destandardize(t);
        CHECK(validate_kt(u));
        CHECK(destandardize(u) == u);
        CHECK(u.content() == t.content());
        CHECK(std::find(quasi.begin(), quasi.end(), u) != quasi.end());
        CHECK(dominates(tableau_weight(t), tableau_weight(u)));
        CHECK(refines(flatten(tableau_weight(t)), flatten(tableau_weight(u))));
        CHECK((destandardize(t) == t) == is_quasi_yamanouchi(t));
      }
    }
}

TEST_CASE("row-adjacent entries weakly increase (derived, not axiomatic)") {
  for (int w = 0; w <= 5; ++w)
    for (const auto& a : all_weak_compositions(w, 3))
      for (const auto& t : enumerate_kt(a))
        for (const auto& c : t.cells()) {
          const int right = t.label_at(c.row, c.col + 1);
          if (right != 0) CHECK(c.label <= right);
        }
}

TEST_CASE("destandardization fibers") {
  const KohnertTableau yam = yamanouchi_tableau(wc({0, 3, 2}));
  CHECK(destandardization_fiber(yam, wc({0, 3, 2})) == yam);
  CHECK_THROWS_AS(destandardization_fiber(yam, wc({0, 2, 3})), std::invalid_argument);
  CHECK_THROWS_AS(destandardization_fiber(yam, wc({3, 2})), std::invalid_argument);
  // The nine tableaux of content (0,3,2) split into fibers of sizes 6,1,1,1.
  std::map<KohnertTableau, int> sizes;
  for (const auto& t : enumerate_kt(wc({0, 3, 2}))) sizes[destandardize(t)]++;
  std::multiset<int> got;
  for (const auto& [u, s] : sizes) got.insert(s);
  CHECK(got == std::multiset<int>{1, 1, 1, 6});
}

TEST_CASE("quasi-Kohnert conditions") {
  CHECK(is_quasi_kohnert(yamanouchi_tableau(wc({0, 3, 2}))));
  // The tableau of weight (2,3,0) has 3 below 2 in column one.
  CHECK_FALSE(is_quasi_kohnert(
      kt({0, 3, 2}, {{2, 1, 2}, {2, 2, 2}, {2, 3, 2}, {1, 1, 3}, {1, 2, 3}})));
}

TEST_CASE("thread decomposition") {
  // The key diagram threads into its rows.
  const Diagram d = key_diagram(wc({0, 3, 2}));
  const ThreadDecomposition dec = thread_decompose(d);
  REQUIRE(dec.threads.size() == 2);
  CHECK(dec.threads[0] == std::vector<Cell>{{2, 3}, {2, 2}, {2, 1}});
  CHECK(dec.threads[1] == std::vector<Cell>{{3, 2}, {3, 1}});
  // A single column threads into singletons.
  const auto single = thread_decompose(Diagram({{1, 1}, {2, 1}, {3, 1}}));
  CHECK(single.threads.size() == 3);
  CHECK_THROWS_AS(thread_decompose(Diagram({{1, 2}})), std::invalid_argument);

  for (int w = 0; w <= 5; ++w)
    for (const auto& a : all_weak_compositions(w, 3))
      for (const Diagram& diag : kohnert_closure(a)) {
        const auto threads = thread_decompose(diag).threads;
        std::set<Cell> seen;
        for (const auto& thread : threads) {
          CHECK(thread.back().col == 1);
          for (std::size_t i = 0; i < thread.size(); ++i) {
            CHECK(seen.insert(thread[i]).second);
            if (i > 0) {
              CHECK(thread[i].col == thread[i - 1].col - 1);
              CHECK(thread[i].row >= thread[i - 1].row);
            }
          }
        }
        CHECK(seen.size() == static_cast<std::size_t>(diag.size()));
      }
}

TEST_CASE("thread map") {
  const KohnertTableau yam = yamanouchi_tableau(wc({0, 3, 2}));
  CHECK(thread_map(yam) == yam);
  for (int w = 0; w <= 5; ++w)
    for (const auto& a : all_weak_compositions(w, 3)) {
      const auto reps = qlswap_set(a);
      std::set<std::vector<int>> image_contents;
      for (const auto& t : enumerate_qkt(a)) {
        const KohnertTableau image = thread_map(t);
        CHECK(is_quasi_kohnert(image));
        CHECK(is_quasi_yamanouchi(image));
        image_contents.insert(image.content().parts());
      }
      std::set<std::vector<int>> expected;
      for (const auto& b : reps)
        if (!enumerate_qqkt(b).empty()) expected.insert(b.parts());
      CHECK(image_contents == expected);
    }
}
