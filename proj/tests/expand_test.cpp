#include <catch2/catch_amalgamated.hpp>

#include "kohnert/expand.hpp"

using namespace kohnert;

namespace {
WeakComposition wc(std::vector<int> parts) { return WeakComposition(std::move(parts)); }

SparseIntegerPolynomial poly(int nvars, std::vector<std::pair<std::vector<int>, long long>> terms) {
  SparseIntegerPolynomial p(nvars);
  for (auto& [e, c] : terms) p.add_term(e, c);
  return p;
}
}  // namespace

TEST_CASE("checked arithmetic") {
  CHECK_THROWS_AS(checked_add(0x7fffffffffffffffLL, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(0x4000000000000000LL, 2), std::overflow_error);
  CHECK(checked_add(2, 3) == 5);
}

TEST_CASE("polynomial bookkeeping") {
  SparseIntegerPolynomial p(2);
  p.add_term({1, 0}, 2);
  p.add_term({1, 0}, -2);
  CHECK(p.is_zero());
  CHECK_THROWS_AS(p.add_term({1}, 1), std::invalid_argument);
  CHECK(SparseIntegerPolynomial::one(0).term_count() == 1);
}

TEST_CASE("key polynomial of the empty and all-zero compositions") {
  CHECK(key_polynomial(WeakComposition()) == SparseIntegerPolynomial::one(0));
  CHECK(key_polynomial(wc({0, 0, 0})) == SparseIntegerPolynomial::one(3));
}

TEST_CASE("two routes to the key polynomial agree") {
  for (int w = 0; w <= 6; ++w)
    for (const auto& a : all_weak_compositions(w, 3))
      CHECK(key_polynomial(a) == key_polynomial_from_tableaux(a));
}

TEST_CASE("fundamental slide polynomials") {
  CHECK(fundamental_slide(wc({4, 0, 0})) == poly(3, {{{4, 0, 0}, 1}}));
  CHECK(fundamental_slide(wc({0, 1, 1})) ==
        poly(3, {{{0, 1, 1}, 1}, {{1, 0, 1}, 1}, {{1, 1, 0}, 1}}));
  CHECK(fundamental_slide(WeakComposition()) == SparseIntegerPolynomial::one(0));
}

TEST_CASE("slide expansions evaluate back to their polynomials") {
  for (int w = 0; w <= 5; ++w)
    for (const auto& a : all_weak_compositions(w, 3)) {
      CHECK(evaluate_expansion(key_to_slides(a), a.length()) == key_polynomial(a));
      CHECK(evaluate_expansion(quasikey_to_slides(a), a.length()) == quasi_key_polynomial(a));
      CHECK(evaluate_expansion(key_to_quasikeys(a), a.length()) == key_polynomial(a));
    }
}

TEST_CASE("weakly decreasing indices give single slide terms") {
  for (const auto& a : {wc({3, 2}), wc({2, 2, 1}), wc({5})}) {
    const Expansion e = key_to_slides(a);
    CHECK(e.term_count() == 1);
    CHECK(e.coefficient(a.parts()) == 1);
    CHECK(key_to_quasikeys(a).term_count() == 1);
  }
}

TEST_CASE("unitriangularity") {
  for (int w = 0; w <= 5; ++w)
    for (const auto& a : all_weak_compositions(w, 3)) {
      for (const auto& p : {key_polynomial(a), quasi_key_polynomial(a)}) {
        CHECK(p.coefficient(a.parts()) == 1);
        for (const auto& [e, c] : p.terms()) CHECK(dominates(WeakComposition(e), a));
      }
    }
}

TEST_CASE("Schur polynomials") {
  CHECK(schur_polynomial(Partition({3, 2}), 1).is_zero());
  CHECK(schur_polynomial(Partition({3, 2}), 3) == key_polynomial(wc({0, 2, 3})));
  CHECK(schur_polynomial(Partition(), 2) == SparseIntegerPolynomial::one(2));
  CHECK(schur_polynomial(Partition({1}), 3).term_count() == 3);
}

TEST_CASE("fundamental quasisymmetric polynomials") {
  CHECK(fundamental_qsym_polynomial(StrongComposition({2}), 2) ==
        poly(2, {{{2, 0}, 1}, {{0, 2}, 1}, {{1, 1}, 1}}));
  CHECK(fundamental_qsym_polynomial(StrongComposition({1, 2}), 1).is_zero());
  CHECK(fundamental_qsym_polynomial(StrongComposition(), 2) == SparseIntegerPolynomial::one(2));
}

TEST_CASE("quasi-Schur polynomials") {
  // QS for a single part is the full homogeneous-like sum of one chain.
  CHECK(quasi_schur_polynomial(StrongComposition({3}), 2) ==
        fundamental_qsym_polynomial(StrongComposition({3}), 2));
  // Truncating the quasi-Schur function below its length kills it.
  CHECK(quasi_schur_polynomial(StrongComposition({2, 3, 2}), 2).is_zero());
}

TEST_CASE("expansion term order starts at the index") {
  const Expansion e = key_to_slides(wc({0, 3, 2}));
  CHECK(e.terms().begin()->first == std::vector<int>{0, 3, 2});
}
