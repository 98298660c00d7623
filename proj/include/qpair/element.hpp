#pragma once

#include <compare>
#include <map>
#include <vector>

#include "qpair/cartan.hpp"
#include "qpair/scalar.hpp"

namespace qpair {

// Monomial in triangular order: f-word, then a torus factor k_gamma,
// then an e-word.  Words hold generator indices and read left to right
// as algebra products.
struct TriMono {
  std::vector<int> f;
  RootVector k;
  std::vector<int> e;

  TriMono() = default;
  explicit TriMono(size_t rank) : k(rank) {}
  TriMono(std::vector<int> fw, RootVector kk, std::vector<int> ew)
      : f(std::move(fw)), k(std::move(kk)), e(std::move(ew)) {}

  size_t rank() const { return k.rank(); }
  bool is_torus_only() const { return f.empty() && e.empty(); }
  bool is_unit() const { return is_torus_only() && k.is_zero(); }

  RootVector e_weight() const;  // sum of alpha over the e-word
  RootVector f_weight() const;  // sum of alpha over the f-word
  RootVector weight() const { return e_weight() - f_weight(); }

  auto operator<=>(const TriMono& o) const = default;
};

// Finite Q(q)-linear combination of triangular monomials.  This is a
// representative-level container: operator== compares stored terms, not
// the underlying algebra elements (pairing oracles decide the latter).
class Element {
public:
  Element() = default;

  static Element unit(size_t rank) {
    Element x;
    x.t_.emplace(TriMono(rank), Scalar(1));
    return x;
  }

  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  const std::map<TriMono, Scalar>& terms() const { return t_; }

  void add_term(const TriMono& m, const Scalar& c);

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element scaled(const Scalar& c) const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);

  bool operator==(const Element& o) const { return t_ == o.t_; }
  bool operator!=(const Element& o) const { return !(*this == o); }

  // True when every monomial has empty words.
  bool is_torus_only() const;
  // True when every monomial is a pure e-word (no f, no torus) /
  // pure f-word (no e, no torus).
  bool is_plus_part() const;
  bool is_minus_part() const;

private:
  std::map<TriMono, Scalar> t_;
};

// Element of a tensor power, with a fixed number of slots.
class Tensor {
public:
  explicit Tensor(size_t slots) : slots_(slots) {}

  static Tensor unit(size_t slots, size_t rank);

  size_t slots() const { return slots_; }
  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  const std::map<std::vector<TriMono>, Scalar>& terms() const { return t_; }

  void add_term(const std::vector<TriMono>& key, const Scalar& c);

  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  Tensor operator-() const;
  Tensor scaled(const Scalar& c) const;
  Tensor& operator+=(const Tensor& o);

  bool operator==(const Tensor& o) const {
    return slots_ == o.slots_ && t_ == o.t_;
  }
  bool operator!=(const Tensor& o) const { return !(*this == o); }

  Tensor swap01() const;  // exchange the first two slots

private:
  size_t slots_;
  std::map<std::vector<TriMono>, Scalar> t_;
};

// Weight of a word of generator indices: sum of the named simple roots.
RootVector word_weight(const CartanDatum& datum, const std::vector<int>& word);

// All words in the generator alphabet whose weight is gamma, i.e. all
// distinct arrangements of the multiset {i with multiplicity gamma_i},
// in lexicographic order.  gamma must lie in Q+.
std::vector<std::vector<int>> words_of_weight(const CartanDatum& datum,
                                              const RootVector& gamma);

}  // namespace qpair
