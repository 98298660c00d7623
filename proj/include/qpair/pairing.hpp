#pragma once

#include <mutex>
#include <optional>

#include "qpair/algebra.hpp"
#include "qpair/matrix.hpp"

namespace qpair {

// Pairing data of one weight space: the matrix of tau on all words of
// weight gamma (rows are e-words, columns are f-words, both in lex
// order), its rank, and greedy row/column bases.
struct GramBlock {
  RootVector gamma;
  std::vector<std::vector<int>> words;
  ScalarMatrix matrix;
  size_t rank = 0;
  std::vector<size_t> pivot_ewords;  // row indices, first independent first
  std::vector<size_t> pivot_fwords;  // column indices likewise
};

// Basis of U^{side}_{sgn gamma} intersected with T_i^{dir}(U^{side}),
// expressed in the pivot-word basis of the ambient weight space.
struct GradedSubspace {
  RootVector gamma;
  char side = '+';  // '+' or '-'
  int dir = +1;     // +1 for T_i, -1 for T_i^{-1}
  size_t i = 0;
  std::vector<std::vector<int>> basis_words;
  std::vector<std::vector<Scalar>> vectors;
  size_t dim() const { return vectors.size(); }
};

// sum_j x_j (x) y_j in U+_gamma (x) U-_{-gamma} with tau(x_j, y_k) = delta_jk.
struct CanonicalTensor {
  RootVector gamma;
  Tensor tensor{2};
};

// The Drinfeld pairing between the non-negative and non-positive halves,
// with the word-level functionals derived from it.  Thread-safe; the
// word cache is shared and mutex-protected.
class Pairing {
public:
  explicit Pairing(const Algebra& algebra)
      : algebra_(&algebra), datum_(algebra.datum_ptr()) {}

  const Algebra& algebra() const { return *algebra_; }
  const CartanDatum& datum() const { return *datum_; }

  // tau on pure words: first argument read as an e-word, second as an
  // f-word.  Words of different weights pair to zero.
  Scalar tau_words(const std::vector<int>& eword,
                   const std::vector<int>& fword) const;

  // tau on elements: x must lie in the span of monomials k_gamma E
  // (no f-letters), y in the span of F k_delta (no e-letters).
  Scalar tau(const Element& x, const Element& y) const;

  // Closed form for tau(e_i^m, f_i^n).
  Scalar tau_power_closed(size_t i, long m, long n) const;

  const GramBlock& gram_block(const RootVector& gamma) const;

  // Word-level functional used by the zero/membership tests:
  //   sum over monomials (F,k,E) of z of
  //   coeff * tau_words(eword, F) * tau_words(E, fword).
  Scalar dp_functional(const Element& z, const std::vector<int>& eword,
                       const std::vector<int>& fword) const;

  // Exact semantic tests, sound via the triangular decomposition and
  // the nondegeneracy of tau on each weight space of the algebra.
  bool is_zero(const Element& z) const;
  bool equal(const Element& a, const Element& b) const;
  bool tensor_is_zero(const Tensor& t) const;
  bool tensor_equal(const Tensor& a, const Tensor& b) const;

  // If z represents an element of U+_{nu} (resp. U-_{-nu}), return its
  // coordinates in the pivot-word basis of that weight space.
  std::optional<std::vector<Scalar>> membership_plus(
      const Element& z, const RootVector& nu) const;
  std::optional<std::vector<Scalar>> membership_minus(
      const Element& z, const RootVector& nu) const;

  // Monomial of the a-th pivot word of weight nu, as an element.
  Element plus_basis_element(const RootVector& nu, size_t a) const;
  Element minus_basis_element(const RootVector& nu, size_t a) const;
  // Combination of pivot words with the given coordinates.
  Element plus_element(const RootVector& nu,
                       const std::vector<Scalar>& coords) const;
  Element minus_element(const RootVector& nu,
                        const std::vector<Scalar>& coords) const;

  // Basis of U^{+/-} cap T_i^{dir}(U^{+/-}) in weight +-gamma, cut out
  // by the pairing conditions
  //   side '+', dir +1: tau(x, U^- f_i) = 0,
  //   side '+', dir -1: tau(x, f_i U^-) = 0,
  //   side '-', dir +1: tau(U^+ e_i, y) = 0,
  //   side '-', dir -1: tau(e_i U^+, y) = 0.
  GradedSubspace intersection_subspace(const RootVector& gamma, size_t i,
                                       char side, int dir) const;
  Element subspace_element(const GradedSubspace& s, size_t j) const;

  // Canonical elements of tau restricted to weight gamma, to the
  // T_i-intersections (prime), and to the T_i^{-1}-intersections
  // (double prime).
  CanonicalTensor theta(const RootVector& gamma) const;
  CanonicalTensor theta_prime(const RootVector& gamma, size_t i) const;
  CanonicalTensor theta_dprime(const RootVector& gamma, size_t i) const;

private:
  Scalar tau_words_uncached(const std::vector<int>& eword,
                            const std::vector<int>& fword) const;
  CanonicalTensor theta_from_bases(const RootVector& gamma,
                                   const std::vector<Element>& xs,
                                   const std::vector<Element>& ys) const;

  const Algebra* algebra_;
  std::shared_ptr<const CartanDatum> datum_;

  mutable std::mutex mu_;
  mutable std::map<std::pair<std::vector<int>, std::vector<int>>, Scalar>
      tau_cache_;
  mutable std::map<RootVector, GramBlock> gram_cache_;
};

}  // namespace qpair
