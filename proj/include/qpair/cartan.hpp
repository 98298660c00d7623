#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qpair/error.hpp"

namespace qpair {

// Element of the root lattice Q, written in the basis of simple roots.
struct RootVector {
  std::vector<long> n;

  RootVector() = default;
  explicit RootVector(size_t rank) : n(rank, 0) {}
  explicit RootVector(std::vector<long> coords) : n(std::move(coords)) {}

  size_t rank() const { return n.size(); }
  long height() const;
  bool is_zero() const;
  bool is_nonneg() const;  // lies in Q+ (zero allowed)

  RootVector operator+(const RootVector& o) const;
  RootVector operator-(const RootVector& o) const;
  RootVector operator-() const;
  RootVector scaled(long c) const;

  auto operator<=>(const RootVector& o) const = default;
  std::string str() const;  // "2a1+a2" style, "0" for zero
};

// Integral weight in fundamental-weight coordinates c_i = <lambda, h_i>.
struct Weight {
  std::vector<long> c;

  Weight() = default;
  explicit Weight(size_t rank) : c(rank, 0) {}
  explicit Weight(std::vector<long> coords) : c(std::move(coords)) {}

  size_t rank() const { return c.size(); }
  bool is_dominant() const;
  bool is_zero() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;

  auto operator<=>(const Weight& o) const = default;
  std::string str() const;  // "(2,0)" style
};

// Symmetrizable generalized Cartan matrix with a fixed symmetrizer.
// Conventions: a[i][j] = <alpha_j, h_i>, (alpha_i, alpha_j) = d_i a[i][j],
// q_i = q^{d_i}.
class CartanDatum {
public:
  CartanDatum(std::vector<std::vector<long>> gcm, std::vector<long> d,
              std::string name = "custom");

  // GCM alone: the minimal positive symmetrizer is computed.
  static CartanDatum from_gcm(std::vector<std::vector<long>> gcm,
                              std::string name = "custom");
  // Known names: A1, A2, B2, G2, A1xA1.
  static CartanDatum preset(const std::string& name);
  static CartanDatum from_file(const std::string& path);
  static CartanDatum from_stream(std::istream& in, const std::string& name);

  size_t rank() const { return a_.size(); }
  const std::string& name() const { return name_; }
  long cartan(size_t i, size_t j) const { return a_[i][j]; }
  long sym(size_t i) const { return d_[i]; }  // d_i, so q_i = q^{d_i}
  const std::vector<std::vector<long>>& gcm() const { return a_; }
  const std::vector<long>& symmetrizer() const { return d_; }

  RootVector alpha(size_t i) const;
  Weight fundamental(size_t i) const;
  Weight rho() const;  // all fundamental coordinates 1

  // (gamma, delta) = sum_{i,j} d_i a[i][j] gamma_i delta_j.
  long bilinear(const RootVector& g, const RootVector& h) const;
  // <gamma, h_i> = sum_j a[i][j] gamma_j.
  long pairing_h(const RootVector& g, size_t i) const;
  // <lambda, t_gamma> = sum_i d_i gamma_i <lambda, h_i>.
  long t_pairing(const Weight& lambda, const RootVector& g) const;

  RootVector reflect(size_t i, const RootVector& g) const;
  Weight reflect(size_t i, const Weight& w) const;

  // Weight coordinates of a lattice vector, and the partial inverse.
  Weight weight_of(const RootVector& g) const;
  std::optional<RootVector> root_coords_of(const Weight& w) const;

  bool is_finite_type() const;
  // The following require finite type and throw otherwise.
  std::vector<RootVector> positive_roots() const;
  std::vector<size_t> reduced_word_w0() const;
  Weight lowest_in_orbit(const Weight& dominant) const;  // w_0 lambda
  long weyl_dim(const Weight& dominant) const;
  // Kostant partition count: dim U+_gamma for gamma in Q+.
  unsigned long long pbw_count(const RootVector& g) const;

  // Order of s_i s_j in the Weyl group (2, 3, 4, 6); i != j.
  long braid_order(size_t i, size_t j) const;

  // Roots beta_k = s_{w_1}...s_{w_{k-1}}(alpha_{w_k}) for a reduced word;
  // for a reduced word of w_0 this enumerates all positive roots once.
  std::vector<RootVector> pbw_roots(const std::vector<size_t>& word) const;

  std::string describe() const;

private:
  void check_rank(size_t k, const char* op) const;

  std::vector<std::vector<long>> a_;
  std::vector<long> d_;
  std::string name_;
};

}  // namespace qpair
