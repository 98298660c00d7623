#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "qpair/element.hpp"

namespace qpair {

// One generator letter of the presented algebra.
struct GenLetter {
  enum class Kind { E, F, K };
  Kind kind = Kind::K;
  size_t idx = 0;    // E/F only
  RootVector gamma;  // K only

  static GenLetter E(size_t i) { return {Kind::E, i, RootVector()}; }
  static GenLetter F(size_t i) { return {Kind::F, i, RootVector()}; }
  static GenLetter K(RootVector g) { return {Kind::K, 0, std::move(g)}; }
};

using GenWord = std::vector<GenLetter>;

// The quantized enveloping algebra attached to a Cartan datum, working
// exclusively with normal forms (f-word, torus, e-word).  All operations
// are exact over Q(q).  Instances are safe to share across threads; the
// internal rewrite cache is mutex-protected.
class Algebra {
public:
  explicit Algebra(const CartanDatum& datum)
      : datum_(std::make_shared<CartanDatum>(datum)) {}
  explicit Algebra(std::shared_ptr<const CartanDatum> datum)
      : datum_(std::move(datum)) {}

  const CartanDatum& datum() const { return *datum_; }
  std::shared_ptr<const CartanDatum> datum_ptr() const { return datum_; }
  size_t rank() const { return datum_->rank(); }
  long d(size_t i) const { return datum_->sym(i); }

  Element unit() const { return Element::unit(rank()); }
  Element gen_e(size_t i) const;
  Element gen_f(size_t i) const;
  Element gen_k(const RootVector& g) const;
  Element gen_k_i(size_t i, long power = 1) const;  // k_i^{power}
  Element mono(const TriMono& m, const Scalar& c = Scalar(1)) const;

  // Normal form of a product of generator letters.
  Element normal_form(const GenWord& word) const;
  Element mul_letter(const Element& x, const GenLetter& l) const;
  Element multiply(const Element& x, const Element& y) const;
  Element power(const Element& x, long n) const;

  // e_i^r / [r]!_{q_i} and f_i^r / [r]!_{q_i}.
  Element divided_power_e(size_t i, long r) const;
  Element divided_power_f(size_t i, long r) const;

  // Quantum Serre sums sum_{r+s=1-a_ij} (-1)^r x_i^{(r)} x_j x_i^{(s)};
  // these vanish in the algebra and generate the radical of the pairing.
  Element serre_e(size_t i, size_t j) const;
  Element serre_f(size_t i, size_t j) const;

  // Coproduct on e_i, f_i, k_gamma extended multiplicatively; the
  // iterated version produces `slots` tensor factors (slots >= 1).
  Tensor coproduct(const Element& x) const { return iterated_coproduct(x, 2); }
  Tensor iterated_coproduct(const Element& x, size_t slots) const;
  // Apply the two-slot coproduct to one slot of a tensor.
  Tensor coproduct_slot(const Tensor& t, size_t slot) const;

  Element antipode(const Element& x) const;
  Scalar counit(const Element& x) const;

  // The twist u (x) u' -> q^{-(wt u, wt u')} u k_{-wt u'} (x) u' k_{-wt u}
  // on two-slot tensors of weight vectors, and its inverse.
  Tensor phi_twist(const Tensor& t) const;
  Tensor phi_twist_inv(const Tensor& t) const;

  // Lusztig's braid-group symmetries and their inverses.
  Element braid_T(size_t i, const Element& x) const;
  Element braid_T_inv(size_t i, const Element& x) const;
  // Composite along a word: T_{w_1} T_{w_2} ... applied left to right
  // (dir = +1) or the matching inverse composite (dir = -1).
  Element braid_T_word(const std::vector<size_t>& word, const Element& x,
                       int dir = +1) const;

  // Projection to the torus part along the triangular decomposition.
  Element projection_p(const Element& x) const;

  // Product form of the torus-valued Gaussian binomial with parameters
  // (k_i; m): prod_{r=1}^m (q_i^{-(r-1)} k_i - q_i^{r-1} k_i^{-1}) / (q_i^r - q_i^{-r}).
  Element gaussian_binomial_k(size_t i, long m) const;

  // Evaluate a torus-only element against a weight:
  // k_gamma -> q^{<lambda, t_gamma>}.
  Scalar ev_weight(const Element& torus_only, const Weight& lambda) const;

  // q^{(e-weight basis helpers)}
  Scalar q_power(long e) const { return Scalar::q_power(e); }
  Scalar q_i(size_t i, long e = 1) const {
    return Scalar::q_power(d(i) * e);
  }

private:
  Element eword_times_f(const std::vector<int>& eword, size_t j) const;
  Element mul_mono(const TriMono& a, const TriMono& b) const;
  const Element& braid_image(size_t i, int dir, GenLetter::Kind kind,
                             size_t j) const;
  const Element& braid_word_image(size_t i, int dir, bool is_e,
                                  const std::vector<int>& word) const;

  std::shared_ptr<const CartanDatum> datum_;

  mutable std::mutex mu_;
  mutable std::map<std::pair<std::vector<int>, size_t>, Element> ef_cache_;
  // braid images keyed by (i, dir>0, is_e, j); word images memoize whole
  // e-/f-words so repeated monomials braid in two lookups
  mutable std::map<std::tuple<size_t, bool, bool, size_t>, Element>
      braid_cache_;
  mutable std::map<std::tuple<size_t, bool, bool, std::vector<int>>, Element>
      braid_word_cache_;
};

}  // namespace qpair
