#include <catch2/catch_amalgamated.hpp>

#include "kohnert/diagram.hpp"
#include "kohnert/expand.hpp"

using namespace kohnert;

namespace {
WeakComposition wc(std::vector<int> parts) { return WeakComposition(std::move(parts)); }
Diagram dg(std::vector<Cell> cells) { return Diagram(std::move(cells)); }
}  // namespace

TEST_CASE("key diagrams") {
  CHECK(key_diagram(wc({0, 3, 2})) ==
        dg({{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}));
  CHECK(key_diagram(wc({0, 0})).empty());
  CHECK(key_diagram(wc({2, 1})) == dg({{1, 1}, {1, 2}, {2, 1}}));
}

TEST_CASE("diagram invariants") {
  CHECK_THROWS_AS(dg({{1, 1}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(dg({{0, 1}}), std::invalid_argument);
}

TEST_CASE("kohnert moves") {
  const Diagram d = key_diagram(wc({0, 3, 2}));
  CHECK(kohnert_move(d, 2) == std::optional<Diagram>(dg({{3, 1}, {3, 2}, {2, 1}, {2, 2}, {1, 3}})));
  // The rightmost cell of row 3 jumps over the occupied (2,2) and lands at (1,2).
  CHECK(kohnert_move(d, 3) == std::optional<Diagram>(dg({{3, 1}, {2, 1}, {2, 2}, {2, 3}, {1, 2}})));
  CHECK(kohnert_move(d, 1) == std::optional<Diagram>());
  // A cell in row 1 has nowhere to fall; column 1 of (1,1) blocks the row-2 move.
  CHECK(kohnert_move(key_diagram(wc({1, 1})), 2) == std::optional<Diagram>());
}

TEST_CASE("kohnert closure") {
  CHECK(kohnert_closure(wc({0, 3, 2})).size() == 9);
  const auto zeros = kohnert_closure(wc({0, 0, 0}));
  REQUIRE(zeros.size() == 1);
  CHECK(zeros[0].empty());
  CHECK(kohnert_closure(wc({1, 1})).size() == 1);
}

TEST_CASE("kohnert diagram criterion") {
  CHECK(is_kohnert_diagram(Diagram()));
  CHECK_FALSE(is_kohnert_diagram(dg({{1, 2}})));
  for (int w = 0; w <= 5; ++w)
    for (const auto& a : all_weak_compositions(w, 3))
      for (const Diagram& d : kohnert_closure(a)) CHECK(is_kohnert_diagram(d));
}

TEST_CASE("column conservation and weight dominance") {
  for (int w = 0; w <= 5; ++w)
    for (const auto& a : all_weak_compositions(w, 3)) {
      const Diagram start = key_diagram(a);
      for (const Diagram& d : kohnert_closure(a)) {
        for (int k = 1; k <= a.max_part(); ++k)
          CHECK(d.column_rows(k).size() == start.column_rows(k).size());
        const WeakComposition weight = diagram_weight(d, a.length());
        CHECK(dominates(weight, a));
        if (weight == a) CHECK(d == start);
      }
    }
}

TEST_CASE("diagram weights") {
  CHECK(diagram_weight(key_diagram(wc({0, 3, 2})), 3) == wc({0, 3, 2}));
  CHECK(diagram_weight(Diagram(), 2) == wc({0, 0}));
  CHECK_THROWS_AS(diagram_weight(dg({{3, 1}}), 2), std::invalid_argument);
}
