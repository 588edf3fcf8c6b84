#pragma once

// Exact sparse integer polynomials (map from exponent vector to coefficient)
// and basis expansions (map from index composition to coefficient).  Integer
// arithmetic is overflow-checked; overflow throws instead of wrapping.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kohnert/composition.hpp"

namespace kohnert {

inline long long checked_add(long long a, long long b) {
  long long r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

// Polynomial in Z[x_1..x_n] stored sparsely; no zero coefficients are kept and
// all exponent vectors share length n.  Terms iterate in canonical order.
class SparseIntegerPolynomial {
 public:
  using TermMap = std::map<std::vector<int>, long long, RevLexTermOrder>;

  explicit SparseIntegerPolynomial(int nvars = 0) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("variable count must be >= 0");
  }

  static SparseIntegerPolynomial monomial(const WeakComposition& exponents, long long coeff = 1) {
    SparseIntegerPolynomial p(exponents.length());
    p.add_term(exponents.parts(), coeff);
    return p;
  }
  static SparseIntegerPolynomial one(int nvars) {
    SparseIntegerPolynomial p(nvars);
    p.add_term(std::vector<int>(static_cast<std::size_t>(nvars), 0), 1);
    return p;
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  long long coefficient(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(const std::vector<int>& exponents, long long coeff) {
    if (static_cast<int>(exponents.size()) != nvars_)
      throw std::invalid_argument("exponent vector length mismatch");
    for (int e : exponents)
      if (e < 0) throw std::invalid_argument("exponents must be >= 0");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exponents, coeff);
    if (!inserted) {
      it->second = checked_add(it->second, coeff);
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparseIntegerPolynomial& operator+=(const SparseIntegerPolynomial& other) {
    if (other.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }
  friend SparseIntegerPolynomial operator+(SparseIntegerPolynomial a, const SparseIntegerPolynomial& b) {
    a += b;
    return a;
  }
  bool operator==(const SparseIntegerPolynomial& other) const = default;

  // One term per line in canonical order: "+ c x^{e1,e2,...}".
  std::string str() const {
    if (terms_.empty()) return "0\n";
    std::ostringstream os;
    for (const auto& [e, c] : terms_) os << "+ " << c << " x^{" << detail::join_int_list(e) << "}\n";
    return os.str();
  }

 private:
  int nvars_;
  TermMap terms_;
};

enum class Basis { Monomial, FundamentalSlide, QuasiKey, FundamentalQsym, QuasiSchur };

inline std::string basis_tag(Basis b) {
  switch (b) {
    case Basis::Monomial: return "m";
    case Basis::FundamentalSlide: return "F";
    case Basis::QuasiKey: return "Q";
    case Basis::FundamentalQsym: return "Ffun";
    case Basis::QuasiSchur: return "QS";
  }
  return "?";
}

// A nonnegative integer combination of basis elements, indexed by weak or
// strong compositions depending on the basis.
class Expansion {
 public:
  using TermMap = std::map<std::vector<int>, long long, RevLexTermOrder>;

  explicit Expansion(Basis basis) : basis_(basis) {}

  Basis basis() const { return basis_; }
  const TermMap& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }
  long long total_multiplicity() const {
    long long total = 0;
    for (const auto& [idx, c] : terms_) total = checked_add(total, c);
    return total;
  }
  long long coefficient(const std::vector<int>& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const std::vector<int>& index, long long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(index, coeff);
    if (!inserted) {
      it->second = checked_add(it->second, coeff);
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool operator==(const Expansion& other) const = default;

  // One term per line in canonical order: "+ c F_{i1,i2,...}".
  std::string str() const {
    if (terms_.empty()) return "0\n";
    std::ostringstream os;
    for (const auto& [idx, c] : terms_)
      os << "+ " << c << ' ' << basis_tag(basis_) << "_{" << detail::join_int_list(idx) << "}\n";
    return os.str();
  }

 private:
  Basis basis_;
  TermMap terms_;
};

}  // namespace kohnert
