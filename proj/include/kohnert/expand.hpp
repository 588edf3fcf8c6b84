#pragma once

// Key, quasi-key, fundamental slide, Schur, fundamental quasisymmetric, and
// quasi-Schur polynomials, plus every basis expansion between them.

#include <stdexcept>
#include <vector>

#include "kohnert/composition.hpp"
#include "kohnert/composition_tableau.hpp"
#include "kohnert/diagram.hpp"
#include "kohnert/kohnert_tableau.hpp"
#include "kohnert/polynomial.hpp"
#include "kohnert/young.hpp"

namespace kohnert {

// All weak compositions of the given weight and length, canonically ordered.
inline std::vector<WeakComposition> all_weak_compositions(int weight, int length) {
  if (weight < 0 || length < 0) throw std::invalid_argument("weight and length must be >= 0");
  std::vector<WeakComposition> out;
  std::vector<int> parts(static_cast<std::size_t>(length), 0);
  auto rec = [&](auto&& self, int idx, int remaining) -> void {
    if (idx == length) {
      if (remaining == 0) out.emplace_back(parts);
      return;
    }
    if (idx == length - 1) {
      parts[static_cast<std::size_t>(idx)] = remaining;
      out.emplace_back(parts);
      parts[static_cast<std::size_t>(idx)] = 0;
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      parts[static_cast<std::size_t>(idx)] = v;
      self(self, idx + 1, remaining - v);
    }
    parts[static_cast<std::size_t>(idx)] = 0;
  };
  if (length == 0) {
    if (weight == 0) out.emplace_back(parts);
  } else {
    rec(rec, 0, weight);
  }
  canonical_sort(out);
  return out;
}

// kappa_a as a sum of x^{wt(D)} over the Kohnert closure.
inline SparseIntegerPolynomial key_polynomial(const WeakComposition& a) {
  SparseIntegerPolynomial p(a.length());
  for (const Diagram& d : kohnert_closure(a)) p.add_term(diagram_weight(d, a.length()).parts(), 1);
  return p;
}

// The same polynomial summed over labeled tableaux; with key_polynomial this
// forms the dual-route check of the weight-preserving bijection KM(a) = KT(a).
inline SparseIntegerPolynomial key_polynomial_from_tableaux(const WeakComposition& a) {
  SparseIntegerPolynomial p(a.length());
  for (const KohnertTableau& t : enumerate_kt(a)) p.add_term(tableau_weight(t).parts(), 1);
  return p;
}

// F_a: the sum of x^b over b of the same length with b >= a in dominance and
// flat(b) refining flat(a).  Direct enumeration; weights stay small here.
inline SparseIntegerPolynomial fundamental_slide(const WeakComposition& a) {
  SparseIntegerPolynomial p(a.length());
  const StrongComposition flat_a = flatten(a);
  for (const WeakComposition& b : all_weak_compositions(a.weight(), a.length()))
    if (dominates(b, a) && refines(flatten(b), flat_a)) p.add_term(b.parts(), 1);
  return p;
}

// kappa_a = sum over quasi-Yamanouchi Kohnert tableaux of F_{wt(T)}.
inline Expansion key_to_slides(const WeakComposition& a) {
  Expansion e(Basis::FundamentalSlide);
  for (const KohnertTableau& t : enumerate_qkt(a)) e.add(tableau_weight(t).parts(), 1);
  return e;
}

// Q_a as a sum of x^{wt(T)} over quasi-Kohnert tableaux.
inline SparseIntegerPolynomial quasi_key_polynomial(const WeakComposition& a) {
  SparseIntegerPolynomial p(a.length());
  for (const KohnertTableau& t : enumerate_quasi_kohnert(a)) p.add_term(tableau_weight(t).parts(), 1);
  return p;
}

// Q_a = sum over quasi-Yamanouchi quasi-Kohnert tableaux of F_{wt(T)}.
inline Expansion quasikey_to_slides(const WeakComposition& a) {
  Expansion e(Basis::FundamentalSlide);
  for (const KohnertTableau& t : enumerate_qqkt(a)) e.add(tableau_weight(t).parts(), 1);
  return e;
}

// kappa_a = sum of Q_b over b in Qlswap(a), all coefficients 1.
inline Expansion key_to_quasikeys(const WeakComposition& a) {
  Expansion e(Basis::QuasiKey);
  for (const WeakComposition& b : qlswap_set(a)) e.add(b.parts(), 1);
  return e;
}

// s_lambda(x_1..x_n) over semistandard Young tableaux.
inline SparseIntegerPolynomial schur_polynomial(const Partition& lambda, int n) {
  if (n < 0) throw std::invalid_argument("variable count must be >= 0");
  SparseIntegerPolynomial p(n);
  for (const YoungTableau& t : enumerate_ssyt(lambda, n)) p.add_term(tableau_content(t, n).parts(), 1);
  return p;
}

// F_alpha(x_1..x_n): the sum of x^b over length-n weak compositions whose
// flattening refines alpha.  No dominance condition, unlike the slide basis.
inline SparseIntegerPolynomial fundamental_qsym_polynomial(const StrongComposition& alpha, int n) {
  if (n < 0) throw std::invalid_argument("variable count must be >= 0");
  SparseIntegerPolynomial p(n);
  for (const WeakComposition& b : all_weak_compositions(alpha.weight(), n))
    if (refines(flatten(b), alpha)) p.add_term(b.parts(), 1);
  return p;
}

// QS_alpha(x_1..x_n) = sum over standard composition tableaux of
// F_{Des(T)}(x_1..x_n).
inline SparseIntegerPolynomial quasi_schur_polynomial(const StrongComposition& alpha, int n) {
  if (n < 0) throw std::invalid_argument("variable count must be >= 0");
  SparseIntegerPolynomial p(n);
  for (const CompositionTableau& t : enumerate_sct(alpha))
    p += fundamental_qsym_polynomial(descent_composition(t), n);
  return p;
}

// Evaluates an expansion into an honest polynomial in n variables.
inline SparseIntegerPolynomial evaluate_expansion(const Expansion& e, int n) {
  SparseIntegerPolynomial p(n);
  for (const auto& [index, coeff] : e.terms()) {
    SparseIntegerPolynomial basis_element(n);
    switch (e.basis()) {
      case Basis::Monomial:
        basis_element = SparseIntegerPolynomial::monomial(WeakComposition(index));
        break;
      case Basis::FundamentalSlide:
        basis_element = fundamental_slide(WeakComposition(index));
        break;
      case Basis::QuasiKey:
        basis_element = quasi_key_polynomial(WeakComposition(index));
        break;
      case Basis::FundamentalQsym:
        basis_element = fundamental_qsym_polynomial(StrongComposition(index), n);
        break;
      case Basis::QuasiSchur:
        basis_element = quasi_schur_polynomial(StrongComposition(index), n);
        break;
    }
    if (basis_element.nvars() != n) throw std::invalid_argument("expansion index length mismatch");
    for (const auto& [exps, c] : basis_element.terms()) p.add_term(exps, checked_mul(c, coeff));
  }
  return p;
}

}  // namespace kohnert
