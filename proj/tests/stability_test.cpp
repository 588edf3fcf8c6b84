#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "kohnert/stability.hpp"
#include "kohnert/verify.hpp"

using namespace kohnert;

namespace {
WeakComposition wc(std::vector<int> parts) { return WeakComposition(std::move(parts)); }

int lowest_row(const std::vector<KohnertTableau>& family) {
  int lowest = 0;
  for (const auto& t : family)
    for (const auto& c : t.cells())
      if (lowest == 0 || c.row < lowest) lowest = c.row;
  return lowest;
}
}  // namespace

TEST_CASE("t_target") {
  CHECK(t_target(wc({0, 0, 3, 2}), 3, 4) == wc({0, 2, 3, 0}));
  CHECK(t_target(wc({0, 2, 0, 1, 3, 4, 2, 1}), 5, 7) == wc({0, 2, 1, 2, 3, 4, 0, 1}));
  // No zero before position i.
  CHECK_THROWS_AS(t_target(wc({1, 3, 2}), 2, 3), std::invalid_argument);
  // The run between i and j-1 must weakly increase.
  CHECK_THROWS_AS(t_target(wc({0, 4, 3, 2}), 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(t_target(wc({0, 0, 3, 2}), 1, 4), std::invalid_argument);
}

TEST_CASE("t_move is injective and changes shapes only by the final drop") {
  const WeakComposition a = wc({0, 0, 3, 2});
  const auto family = enumerate_qkt(a);
  std::set<KohnertTableau> images;
  for (const auto& t : family) {
    const KohnertTableau image = t_move(t, 3, 4);
    CHECK(images.insert(image).second);
    CHECK(is_quasi_yamanouchi(image));
    CHECK(validate_kt(image));
    // Cells match the source either exactly or shifted down one row.
    const Diagram before_diagram = t.diagram();
    const Diagram after_diagram = image.diagram();
    REQUIRE(before_diagram.size() == after_diagram.size());
    std::set<Cell> after_set(after_diagram.cells().begin(), after_diagram.cells().end());
    for (const Cell& c : before_diagram.cells())
      CHECK((after_set.count(c) || after_set.count(Cell{c.row - 1, c.col})));
  }
  // The images all live in QKT(t_target(a, 3, 4)).
  const auto codomain = enumerate_qkt(t_target(a, 3, 4));
  for (const auto& image : images)
    CHECK(std::find(codomain.begin(), codomain.end(), image) != codomain.end());
}

TEST_CASE("t_move preserves the lowest occupied row of the family") {
  const WeakComposition a = wc({0, 0, 3, 2});
  CHECK(lowest_row(enumerate_qkt(a)) == lowest_row(enumerate_qkt(t_target(a, 3, 4))));
  const WeakComposition b = wc({0, 0, 2, 1});
  CHECK(lowest_row(enumerate_qkt(b)) == lowest_row(enumerate_qkt(t_target(b, 3, 4))));
}

TEST_CASE("t_move over every admissible index pair in a corpus") {
  // Injective wherever the image stays in the positive quadrant; cells below
  // row 1 (possible only before the stability point) are rejected.  The row
  // drop must carry the whole run of nonempty rows below row j: (0,2,1,3)
  // with i=2, j=3 once produced a two-tableau collision under a narrower
  // reading of the rule.
  for (int w = 0; w <= 6; ++w)
    for (const auto& a : all_weak_compositions(w, 4))
      for (int i = 2; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) {
          WeakComposition target(std::vector<int>{});
          try {
            target = t_target(a, i, j);
          } catch (const std::invalid_argument&) {
            continue;
          }
          const auto codomain = enumerate_qkt(target);
          std::set<KohnertTableau> images;
          for (const auto& t : enumerate_qkt(a)) {
            try {
              const KohnertTableau image = t_move(t, i, j);
              CHECK(images.insert(image).second);
              CHECK(std::find(codomain.begin(), codomain.end(), image) != codomain.end());
            } catch (const std::invalid_argument&) {
              CHECK(eta(a) > 0);
            }
          }
        }
}

TEST_CASE("spring pushes") {
  const auto family = enumerate_qkt(wc({0, 0, 3, 2}));
  // Pushing a row with no nonempty row below it yields nothing.
  for (const auto& t : family) CHECK(spring_push(t, 1) == std::optional<KohnertTableau>());
  // A push changes the lowest occupied row by at most one.
  for (const auto& t : family)
    for (int row = 1; row <= 4; ++row)
      if (const auto pushed = spring_push(t, row)) {
        const int before = lowest_row({t});
        const int after = lowest_row({*pushed});
        CHECK(std::abs(before - after) <= 1);
      }
}

TEST_CASE("spring graph connectivity at the stability point") {
  for (int w = 0; w <= 5; ++w)
    for (const auto& a : all_weak_compositions(w, 2)) {
      const int pad = std::max(eta(a), 0);
      CHECK(spring_graph(prepend_zeros(a, pad)).connected);
    }
  // A weakly decreasing composition has a one-vertex graph.
  const SpringGraph g = spring_graph(wc({3, 2}));
  CHECK(g.vertices.size() == 1);
  CHECK(g.edges.empty());
  CHECK(g.connected);
}

TEST_CASE("stability profiles") {
  CHECK(stability_profile(wc({3, 2}), 3) == std::vector<long long>{1, 4, 5, 5});
  CHECK_THROWS_AS(stability_profile(wc({3, 2}), 1), std::invalid_argument);
  // First-stable-is-stable: once two consecutive counts agree the sequence
  // stays constant and the plateau value is the standard-tableau count.
  for (int w = 0; w <= 5; ++w)
    for (const auto& a : all_weak_compositions(w, 2)) {
      const int e = eta(a);
      const auto profile = stability_profile(a, std::max(e, 0) + 3);
      for (std::size_t m = 0; m + 1 < profile.size(); ++m)
        if (profile[m] == profile[m + 1]) {
          if (a.nonzero_count() > 0) CHECK(static_cast<int>(m) >= e);
          for (std::size_t r = m; r + 1 < profile.size(); ++r)
            CHECK(profile[r] == profile[r + 1]);
          break;
        }
      CHECK(profile.back() == hook_length_syt_count(sort_decreasing(a)));
    }
}

TEST_CASE("stable slide expansions shift") {
  const Expansion stable = stable_slide_expansion(wc({3, 2}));
  CHECK(stable == key_to_slides(wc({0, 0, 3, 2})));
  CHECK(key_to_slides(wc({0, 0, 0, 3, 2})) == shift_expansion(stable, 1));
  // eta < 0: the unpadded expansion is already stable.
  const WeakComposition early = wc({0, 1});
  REQUIRE(eta(early) < 0);
  CHECK(stable_slide_expansion(early) == key_to_slides(early));
}

TEST_CASE("stability records over the acceptance corpus") {
  for (const auto& rec : verify_stability(4, 2)) {
    INFO("a = " << rec.a.str());
    CHECK(rec.ok());
  }
}
