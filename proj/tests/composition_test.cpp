#include <catch2/catch_amalgamated.hpp>

#include "kohnert/composition.hpp"
#include "kohnert/expand.hpp"
#include "oracles.hpp"

using namespace kohnert;

namespace {
WeakComposition wc(std::vector<int> parts) { return WeakComposition(std::move(parts)); }
}  // namespace

TEST_CASE("parsing and printing") {
  CHECK(WeakComposition::parse("0,3,2").parts() == std::vector<int>{0, 3, 2});
  CHECK(WeakComposition::parse("").length() == 0);
  CHECK(wc({0, 3, 2}).str() == "0,3,2");
  CHECK_THROWS_AS(WeakComposition::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(WeakComposition::parse("1,-2"), std::invalid_argument);
  CHECK_THROWS_AS(StrongComposition::parse("1,0"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,3"), std::invalid_argument);
}

TEST_CASE("length is significant") {
  CHECK(wc({0, 3, 2}) != wc({0, 3, 2, 0}));
}

TEST_CASE("flatten") {
  CHECK(flatten(wc({0, 3, 2})) == StrongComposition({3, 2}));
  CHECK(flatten(wc({0, 0, 0})) == StrongComposition());
  CHECK(flatten(wc({0, 2, 0, 1, 3})) == StrongComposition({2, 1, 3}));
}

TEST_CASE("sort_decreasing") {
  CHECK(sort_decreasing(wc({0, 3, 2})) == Partition({3, 2}));
  CHECK(sort_decreasing(wc({2, 3, 2})) == Partition({3, 2, 2}));
  CHECK(sort_decreasing(WeakComposition()) == Partition());
}

TEST_CASE("rev_increasing") {
  CHECK(rev_increasing(wc({0, 2, 3})) == Partition({3, 2}));
  CHECK(rev_increasing(wc({1, 1, 1})) == Partition({1, 1, 1}));
  CHECK(rev_increasing(wc({0, 0, 5})) == Partition({5}));
  CHECK_THROWS_AS(rev_increasing(wc({0, 3, 2})), std::invalid_argument);
}

TEST_CASE("dominance") {
  CHECK(dominates(wc({1, 2, 2}), wc({0, 3, 2})));
  CHECK(dominates(wc({0, 3, 2}), wc({0, 3, 2})));
  CHECK_FALSE(dominates(wc({0, 3, 2}), wc({1, 2, 2})));
  CHECK_THROWS_AS(dominates(wc({1, 2}), wc({1, 2, 0})), std::invalid_argument);
}

TEST_CASE("dominance is a partial order on a small corpus") {
  std::vector<WeakComposition> all;
  for (int w = 0; w <= 5; ++w)
    for (const auto& a : all_weak_compositions(w, 4)) all.push_back(a);
  for (const auto& a : all) CHECK(dominates(a, a));
  for (const auto& a : all)
    for (const auto& b : all) {
      if (a.weight() != b.weight()) continue;
      if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
      for (const auto& c : all) {
        if (c.weight() != a.weight()) continue;
        if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
      }
    }
}

TEST_CASE("refinement") {
  CHECK(refines(StrongComposition({1, 2, 2}), StrongComposition({3, 2})));
  CHECK(refines(StrongComposition({2, 1, 2}), StrongComposition({2, 3})));
  CHECK_FALSE(refines(StrongComposition({1, 2, 2}), StrongComposition({2, 3})));
  CHECK(refines(StrongComposition({2, 3}), StrongComposition({2, 3})));
  CHECK(refines(StrongComposition(), StrongComposition()));
  CHECK_FALSE(refines(StrongComposition({2}), StrongComposition()));
}

TEST_CASE("refinement agrees with brute force and preserves sums") {
  std::vector<std::vector<int>> strongs;
  for (int w = 0; w <= 6; ++w)
    for (const auto& a : all_weak_compositions(w, 4)) {
      const auto flat = flatten(a).parts();
      if (static_cast<int>(flat.size()) == a.nonzero_count()) strongs.push_back(flat);
    }
  std::sort(strongs.begin(), strongs.end());
  strongs.erase(std::unique(strongs.begin(), strongs.end()), strongs.end());
  for (const auto& c : strongs)
    for (const auto& alpha : strongs) {
      const bool got = refines(StrongComposition(c), StrongComposition(alpha));
      CHECK(got == oracles::refines_brute_force(c, alpha));
      if (got) {
        int sc = 0, sa = 0;
        for (int v : c) sc += v;
        for (int v : alpha) sa += v;
        CHECK(sc == sa);
      }
    }
}

TEST_CASE("prepend_zeros") {
  CHECK(prepend_zeros(wc({3, 2}), 2) == wc({0, 0, 3, 2}));
  CHECK(prepend_zeros(wc({1, 0}), 0) == wc({1, 0}));
  CHECK(prepend_zeros(WeakComposition(), 3) == wc({0, 0, 0}));
}

TEST_CASE("lswap closure") {
  const auto set = lswap_set(wc({0, 2, 3, 2}));
  CHECK(set.size() == 9);
  const auto has = [&set](std::vector<int> parts) {
    return std::find(set.begin(), set.end(), WeakComposition(parts)) != set.end();
  };
  CHECK(has({2, 3, 2, 0}));
  CHECK(has({0, 3, 2, 2}));
  CHECK(has({2, 2, 3, 0}));
  CHECK(lswap_set(wc({3, 2, 1})) == std::vector<WeakComposition>{wc({3, 2, 1})});
  CHECK(lswap_set(wc({1, 2})).size() == 2);
}

TEST_CASE("qlswap representatives") {
  const auto reps = qlswap_set(wc({0, 2, 3, 2}));
  REQUIRE(reps.size() == 3);
  for (const auto& a : {wc({0, 2, 3, 2}), wc({2, 2, 1, 0}), wc({1, 0, 2, 1})}) {
    const auto closure = lswap_set(a);
    const auto representatives = qlswap_set(a);
    std::set<std::vector<int>> flats;
    for (const auto& b : representatives) CHECK(flats.insert(flatten(b).parts()).second);
    for (const auto& c : closure) {
      bool found = false;
      for (const auto& b : representatives)
        if (flatten(b) == flatten(c)) {
          CHECK(dominates(c, b));
          found = true;
        }
      CHECK(found);
    }
  }
}

TEST_CASE("lsort") {
  CHECK(lsort(wc({0, 0, 2, 0, 0, 0, 4, 1, 0, 3, 2})) ==
        std::optional<WeakComposition>(wc({0, 1, 2, 0, 2, 3, 4, 0, 0, 0, 0})));
  CHECK(lsort(wc({0, 3, 0, 2, 2})) == std::optional<WeakComposition>());
  CHECK(lsort(wc({0, 1, 2})) == std::optional<WeakComposition>(wc({0, 1, 2})));
  CHECK(lsort(wc({1, 1, 2})) == std::optional<WeakComposition>(wc({1, 1, 2})));

  // flat(lsort(a)) weakly increases whenever lsort(a) is present.
  for (int w = 0; w <= 5; ++w)
    for (const auto& a : all_weak_compositions(w, 4))
      if (const auto b = lsort(a)) {
        const auto flat = flatten(*b).parts();
        CHECK(std::is_sorted(flat.begin(), flat.end()));
        CHECK(flat == [&] {
          auto f = flatten(a).parts();
          std::sort(f.begin(), f.end());
          return f;
        }());
      }
}

TEST_CASE("sigma and eta") {
  CHECK(sigma(wc({0, 0, 2, 0, 0, 0, 4, 1, 0, 3, 2})) == -1);
  CHECK(sigma(wc({0, 3, 0, 2, 2})) == 1);
  CHECK(eta(wc({0, 0, 2, 0, 0, 0, 4, 1, 0, 3, 2})) == 3);
  CHECK(eta(wc({0, 3, 0, 2, 2})) == 3);
  CHECK(eta(wc({3, 2})) == 2);

  // sigma(0^m x a) = sigma(a) - m and eta(0^m x a) = eta(a) - m.
  for (int w = 0; w <= 5; ++w)
    for (const auto& a : all_weak_compositions(w, 3))
      for (int m = 1; m <= 3; ++m) {
        CHECK(sigma(prepend_zeros(a, m)) == sigma(a) - m);
        CHECK(eta(prepend_zeros(a, m)) == eta(a) - m);
      }
}

TEST_CASE("canonical term order puts the index first") {
  for (int w = 0; w <= 5; ++w)
    for (const auto& a : all_weak_compositions(w, 3)) {
      const auto poly = fundamental_slide(a);
      REQUIRE_FALSE(poly.is_zero());
      CHECK(poly.terms().begin()->first == a.parts());
    }
}
