#pragma once

#include <string>

#include "qpair/matrix.hpp"
#include "qpair/pairing.hpp"

namespace qpair {

// Finite-dimensional integrable module with an explicit weight-graded
// basis and exact action matrices for the generators.
struct WeightModule {
  std::shared_ptr<const CartanDatum> datum;
  std::string name;
  std::vector<Weight> weights;       // weight of each basis vector
  std::vector<std::string> labels;   // word labels, "v" for the start vector
  std::vector<ScalarMatrix> e_act;   // one matrix per generator
  std::vector<ScalarMatrix> f_act;

  size_t dim() const { return weights.size(); }
  ScalarMatrix k_act(const RootVector& g) const;  // diagonal q^{<mu, t_g>}
  std::string dump() const;
};

// Simple module generated by a highest weight vector (lambda dominant),
// built from words modulo the radical of the contravariant form.
WeightModule build_highest(const Algebra& algebra, const Weight& lambda);
// The lowest-weight counterpart generated by a vector of weight -lambda.
WeightModule build_lowest(const Algebra& algebra, const Weight& lambda);
// Tensor product, acting through the coproduct; index (a,b) -> a*dimB+b.
WeightModule tensor_module(const WeightModule& a, const WeightModule& b);

// Action of a normal-form element / of a two-slot tensor on V (x) V'.
ScalarMatrix act(const WeightModule& v, const Element& x);
ScalarMatrix act_tensor(const WeightModule& v, const WeightModule& w,
                        const Tensor& t);

// exp series with parameter q^d (d may be negative) of a nilpotent matrix.
ScalarMatrix exp_q(const ScalarMatrix& arg, long d);

// The operator exp_{q_i}(t q_i^{-1} k_i e_i) exp_{q_i}(-t^{-1} f_i)
// exp_{q_i}(t q_i k_i^{-1} e_i) and its inverse.
ScalarMatrix sigma_op(const WeightModule& v, size_t i, const Scalar& t);
ScalarMatrix sigma_op_inv(const WeightModule& v, size_t i, const Scalar& t);
// The generalized factorizations of the same operator, shifted by n:
//   first kind:  exp(t q_i^{-n-1} k_i^{n+1} e_i) exp(-t^{-1} q_i^{-n} k_i^{-n} f_i)
//                exp(t q_i^{-n+1} k_i^{n-1} e_i)
//   second kind: exp(-t^{-1} q_i^{-n-1} k_i^{-n-1} f_i) exp(t q_i^{-n} k_i^{n} e_i)
//                exp(-t^{-1} q_i^{-n+1} k_i^{-n+1} f_i)
ScalarMatrix sigma_op_shifted(const WeightModule& v, size_t i, const Scalar& t,
                              long n, int kind);

// The braid operator sigma_i(-1)^{-1} q_i^{h_i(h_i+1)/2} and its inverse.
ScalarMatrix lusztig_T_op(const WeightModule& v, size_t i);
ScalarMatrix lusztig_T_op_inv(const WeightModule& v, size_t i);

// Operators on V (x) V':
//   Z_i  = exp_{q_i}((q_i - q_i^{-1}) f_i (x) e_i)
//   R_i  = exp_{q_i^{-1}}(-(q_i - q_i^{-1}) e_i (x) f_i)
// together with R_i^{-1}, the slot swap P(R_i), and Phi^{-1}(R_i^{+-1}).
ScalarMatrix Z_op(const WeightModule& v, const WeightModule& w, size_t i);
ScalarMatrix R_op(const WeightModule& v, const WeightModule& w, size_t i);
ScalarMatrix R_op_inv(const WeightModule& v, const WeightModule& w, size_t i);
ScalarMatrix P_of_R_op(const WeightModule& v, const WeightModule& w, size_t i);
ScalarMatrix phi_inv_R_op(const WeightModule& v, const WeightModule& w,
                          size_t i, int sign);

// Action of the canonical elements summed over all weights that can act
// between the two modules (a finite set).
ScalarMatrix theta_op(const Pairing& pairing, const WeightModule& v,
                      const WeightModule& w);

}  // namespace qpair
