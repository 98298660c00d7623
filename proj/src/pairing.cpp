#include "qpair/pairing.hpp"

#include <algorithm>
#include <tuple>

namespace qpair {

namespace {

// Canonical grading of a monomial: (f-word weight, torus vector, e-word
// weight).  The summands U^-_{-phi} k_kappa U^+_{eta} of the triangular
// decomposition are linearly independent, so an element is zero iff
// each of these blocks is zero.
struct BlockKey {
  RootVector fwt, torus, ewt;
  auto operator<=>(const BlockKey& o) const = default;
};

BlockKey block_key(const TriMono& m) {
  return {m.f_weight(), m.k, m.e_weight()};
}

}  // namespace

Scalar Pairing::tau_words_uncached(const std::vector<int>& eword,
                                   const std::vector<int>& fword) const {
  if (eword.size() != fword.size()) return Scalar(0);
  if (eword.empty()) return Scalar(1);
  if (word_weight(*datum_, eword) != word_weight(*datum_, fword))
    return Scalar(0);
  // Peel the first f-letter j: pair it against each e_j in the e-word,
  // with the torus passage factor q^{(alpha_j, prefix weight)}.
  const size_t j = static_cast<size_t>(fword[0]);
  const std::vector<int> frest(fword.begin() + 1, fword.end());
  const Scalar tau_ef =
      (Scalar::q_power(-datum_->sym(j)) - Scalar::q_power(datum_->sym(j)))
          .inverse();
  Scalar total(0);
  RootVector prefix(datum_->rank());
  for (size_t p = 0; p < eword.size(); ++p) {
    const size_t ip = static_cast<size_t>(eword[p]);
    if (ip == j) {
      std::vector<int> erest = eword;
      erest.erase(erest.begin() + p);
      const long pw = datum_->bilinear(datum_->alpha(j), prefix);
      total += Scalar::q_power(pw) * tau_words(erest, frest);
    }
    prefix.n[ip] += 1;
  }
  return tau_ef * total;
}

Scalar Pairing::tau_words(const std::vector<int>& eword,
                          const std::vector<int>& fword) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = tau_cache_.find({eword, fword});
    if (it != tau_cache_.end()) return it->second;
  }
  Scalar v = tau_words_uncached(eword, fword);
  std::lock_guard<std::mutex> lock(mu_);
  return tau_cache_.emplace(std::make_pair(eword, fword), std::move(v))
      .first->second;
}

Scalar Pairing::tau(const Element& x, const Element& y) const {
  Scalar total(0);
  for (const auto& [mx, cx] : x.terms()) {
    require(mx.f.empty(), "tau: left argument has f-letters");
    const RootVector wx = mx.e_weight();
    for (const auto& [my, cy] : y.terms()) {
      require(my.e.empty(), "tau: right argument has e-letters");
      const long shift =
          datum_->bilinear(wx, mx.k) - datum_->bilinear(mx.k, my.k);
      total += cx * cy * Scalar::q_power(shift) * tau_words(mx.e, my.f);
    }
  }
  return total;
}

Scalar Pairing::tau_power_closed(size_t i, long m, long n) const {
  require(i < datum_->rank(), "generator index out of range");
  require(m >= 0 && n >= 0, "tau_power_closed needs nonnegative powers");
  if (m != n) return Scalar(0);
  const long di = datum_->sym(i);
  const Scalar denom =
      Scalar::q_power(-di) - Scalar::q_power(di);  // q_i^{-1} - q_i
  return Scalar::q_power(di * (n * (n - 1) / 2)) * q_factorial(n, di) /
         denom.pow(n);
}

const GramBlock& Pairing::gram_block(const RootVector& gamma) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = gram_cache_.find(gamma);
    if (it != gram_cache_.end()) return it->second;
  }
  GramBlock b;
  b.gamma = gamma;
  b.words = words_of_weight(*datum_, gamma);
  const size_t n = b.words.size();
  b.matrix = ScalarMatrix(n, n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c)
      b.matrix.at(r, c) = tau_words(b.words[r], b.words[c]);
  b.pivot_ewords = b.matrix.independent_rows();
  b.pivot_fwords = b.matrix.transpose().independent_rows();
  b.rank = b.pivot_ewords.size();
  require(b.rank == b.pivot_fwords.size(), "rank mismatch in gram block");
  std::lock_guard<std::mutex> lock(mu_);
  return gram_cache_.emplace(gamma, std::move(b)).first->second;
}

Scalar Pairing::dp_functional(const Element& z, const std::vector<int>& eword,
                              const std::vector<int>& fword) const {
  Scalar total(0);
  for (const auto& [m, c] : z.terms())
    total += c * tau_words(eword, m.f) * tau_words(m.e, fword);
  return total;
}

bool Pairing::is_zero(const Element& z) const {
  if (z.is_zero()) return true;
  std::map<BlockKey, Element> blocks;
  for (const auto& [m, c] : z.terms()) blocks[block_key(m)].add_term(m, c);
  for (const auto& [key, part] : blocks) {
    const auto wf = words_of_weight(*datum_, key.fwt);
    const auto we = words_of_weight(*datum_, key.ewt);
    // The word functionals z -> tau(E', .) tau(., F') separate the
    // block's image in U^-_{-phi} (x) U^+_{eta}.
    for (const auto& ew : wf)
      for (const auto& fw : we)
        if (!dp_functional(part, ew, fw).is_zero()) return false;
  }
  return true;
}

bool Pairing::equal(const Element& a, const Element& b) const {
  return is_zero(a - b);
}

bool Pairing::tensor_is_zero(const Tensor& t) const {
  if (t.is_zero()) return true;
  const size_t slots = t.slots();
  using Key = std::vector<BlockKey>;
  std::map<Key, std::vector<std::pair<const std::vector<TriMono>*, Scalar>>>
      blocks;
  for (const auto& [key, c] : t.terms()) {
    Key bk;
    bk.reserve(slots);
    for (const auto& m : key) bk.push_back(block_key(m));
    blocks[bk].emplace_back(&key, c);
  }
  for (const auto& [bk, terms] : blocks) {
    // Per slot: all (eword, fword) test pairs and, per term, the value
    // of each functional on that slot's monomial.
    std::vector<std::vector<std::pair<std::vector<int>, std::vector<int>>>>
        funcs(slots);
    for (size_t s = 0; s < slots; ++s) {
      const auto wf = words_of_weight(*datum_, bk[s].fwt);
      const auto we = words_of_weight(*datum_, bk[s].ewt);
      for (const auto& ew : wf)
        for (const auto& fw : we) funcs[s].emplace_back(ew, fw);
    }
    std::vector<std::vector<std::vector<Scalar>>> val(slots);
    for (size_t s = 0; s < slots; ++s) {
      val[s].resize(terms.size());
      for (size_t tidx = 0; tidx < terms.size(); ++tidx) {
        const TriMono& m = (*terms[tidx].first)[s];
        for (const auto& [ew, fw] : funcs[s])
          val[s][tidx].push_back(tau_words(ew, m.f) * tau_words(m.e, fw));
      }
    }
    std::vector<size_t> idx(slots, 0);
    while (true) {
      Scalar sum(0);
      for (size_t tidx = 0; tidx < terms.size(); ++tidx) {
        Scalar prod = terms[tidx].second;
        for (size_t s = 0; s < slots && !prod.is_zero(); ++s)
          prod *= val[s][tidx][idx[s]];
        sum += prod;
      }
      if (!sum.is_zero()) return false;
      size_t s = 0;
      while (s < slots && ++idx[s] == funcs[s].size()) {
        idx[s] = 0;
        ++s;
      }
      if (s == slots) break;
    }
  }
  return true;
}

bool Pairing::tensor_equal(const Tensor& a, const Tensor& b) const {
  require(a.slots() == b.slots(), "tensor slot count mismatch");
  return tensor_is_zero(a - b);
}

std::optional<std::vector<Scalar>> Pairing::membership_plus(
    const Element& z, const RootVector& nu) const {
  require(nu.rank() == datum_->rank(), "rank mismatch in membership_plus");
  if (!nu.is_nonneg())
    return is_zero(z) ? std::optional<std::vector<Scalar>>(
                            std::vector<Scalar>{})
                      : std::nullopt;
  Element target, rest;
  for (const auto& [m, c] : z.terms()) {
    if (m.f.empty() && m.k.is_zero() && m.e_weight() == nu)
      target.add_term(m, c);
    else
      rest.add_term(m, c);
  }
  if (!is_zero(rest)) return std::nullopt;
  const GramBlock& b = gram_block(nu);
  const size_t r = b.rank;
  ScalarMatrix a(r, r);
  std::vector<Scalar> rhs(r);
  for (size_t ci = 0; ci < r; ++ci) {
    const auto& fword = b.words[b.pivot_fwords[ci]];
    for (size_t ai = 0; ai < r; ++ai)
      a.at(ci, ai) = b.matrix.at(b.pivot_ewords[ai], b.pivot_fwords[ci]);
    rhs[ci] = dp_functional(target, {}, fword);
  }
  return a.solve(rhs);
}

std::optional<std::vector<Scalar>> Pairing::membership_minus(
    const Element& z, const RootVector& nu) const {
  require(nu.rank() == datum_->rank(), "rank mismatch in membership_minus");
  if (!nu.is_nonneg())
    return is_zero(z) ? std::optional<std::vector<Scalar>>(
                            std::vector<Scalar>{})
                      : std::nullopt;
  Element target, rest;
  for (const auto& [m, c] : z.terms()) {
    if (m.e.empty() && m.k.is_zero() && m.f_weight() == nu)
      target.add_term(m, c);
    else
      rest.add_term(m, c);
  }
  if (!is_zero(rest)) return std::nullopt;
  const GramBlock& b = gram_block(nu);
  const size_t r = b.rank;
  ScalarMatrix a(r, r);
  std::vector<Scalar> rhs(r);
  for (size_t ri = 0; ri < r; ++ri) {
    const auto& eword = b.words[b.pivot_ewords[ri]];
    for (size_t bi = 0; bi < r; ++bi)
      a.at(ri, bi) = b.matrix.at(b.pivot_ewords[ri], b.pivot_fwords[bi]);
    rhs[ri] = dp_functional(target, eword, {});
  }
  return a.solve(rhs);
}

Element Pairing::plus_basis_element(const RootVector& nu, size_t a) const {
  const GramBlock& b = gram_block(nu);
  require(a < b.rank, "basis index out of range");
  TriMono m(datum_->rank());
  m.e = b.words[b.pivot_ewords[a]];
  return algebra_->mono(m);
}

Element Pairing::minus_basis_element(const RootVector& nu, size_t a) const {
  const GramBlock& b = gram_block(nu);
  require(a < b.rank, "basis index out of range");
  TriMono m(datum_->rank());
  m.f = b.words[b.pivot_fwords[a]];
  return algebra_->mono(m);
}

Element Pairing::plus_element(const RootVector& nu,
                              const std::vector<Scalar>& coords) const {
  const GramBlock& b = gram_block(nu);
  require(coords.size() == b.rank, "coordinate size mismatch");
  Element x;
  for (size_t a = 0; a < coords.size(); ++a)
    x += plus_basis_element(nu, a).scaled(coords[a]);
  return x;
}

Element Pairing::minus_element(const RootVector& nu,
                               const std::vector<Scalar>& coords) const {
  const GramBlock& b = gram_block(nu);
  require(coords.size() == b.rank, "coordinate size mismatch");
  Element x;
  for (size_t a = 0; a < coords.size(); ++a)
    x += minus_basis_element(nu, a).scaled(coords[a]);
  return x;
}

GradedSubspace Pairing::intersection_subspace(const RootVector& gamma,
                                              size_t i, char side,
                                              int dir) const {
  require(side == '+' || side == '-', "side must be '+' or '-'");
  require(dir == 1 || dir == -1, "dir must be +1 or -1");
  require(i < datum_->rank(), "generator index out of range");
  require(gamma.is_nonneg(), "intersection_subspace needs gamma in Q+");
  const GramBlock& b = gram_block(gamma);
  const auto& piv = side == '+' ? b.pivot_ewords : b.pivot_fwords;
  GradedSubspace s;
  s.gamma = gamma;
  s.side = side;
  s.dir = dir;
  s.i = i;
  for (size_t p : piv) s.basis_words.push_back(b.words[p]);
  const RootVector mu = gamma - datum_->alpha(i);
  if (!mu.is_nonneg()) {
    // No constraints in this weight: the intersection is everything.
    for (size_t a = 0; a < piv.size(); ++a) {
      std::vector<Scalar> v(piv.size());
      v[a] = Scalar(1);
      s.vectors.push_back(std::move(v));
    }
    return s;
  }
  const auto cwords = words_of_weight(*datum_, mu);
  ScalarMatrix a(cwords.size(), piv.size());
  for (size_t r = 0; r < cwords.size(); ++r) {
    std::vector<int> test = cwords[r];
    if (dir > 0)
      test.push_back(static_cast<int>(i));  // U^- f_i / U^+ e_i
    else
      test.insert(test.begin(), static_cast<int>(i));  // f_i U^- / e_i U^+
    for (size_t c = 0; c < piv.size(); ++c) {
      const auto& w = b.words[piv[c]];
      a.at(r, c) = side == '+' ? tau_words(w, test) : tau_words(test, w);
    }
  }
  s.vectors = a.null_space();
  return s;
}

Element Pairing::subspace_element(const GradedSubspace& s, size_t j) const {
  require(j < s.vectors.size(), "subspace index out of range");
  Element x;
  for (size_t w = 0; w < s.basis_words.size(); ++w) {
    if (s.vectors[j][w].is_zero()) continue;
    TriMono m(datum_->rank());
    if (s.side == '+')
      m.e = s.basis_words[w];
    else
      m.f = s.basis_words[w];
    x.add_term(m, s.vectors[j][w]);
  }
  return x;
}

CanonicalTensor Pairing::theta_from_bases(const RootVector& gamma,
                                          const std::vector<Element>& xs,
                                          const std::vector<Element>& ys) const {
  require(xs.size() == ys.size(), "canonical element needs matching bases");
  CanonicalTensor th;
  th.gamma = gamma;
  th.tensor = Tensor(2);
  const size_t n = xs.size();
  if (n == 0) return th;
  ScalarMatrix g(n, n);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) g.at(a, b) = tau(xs[a], ys[b]);
  const ScalarMatrix gi = g.inverse();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      const Scalar& c = gi.at(b, a);
      if (c.is_zero()) continue;
      for (const auto& [mx, cx] : xs[a].terms())
        for (const auto& [my, cy] : ys[b].terms())
          th.tensor.add_term({mx, my}, c * cx * cy);
    }
  return th;
}

CanonicalTensor Pairing::theta(const RootVector& gamma) const {
  const GramBlock& b = gram_block(gamma);
  std::vector<Element> xs, ys;
  for (size_t a = 0; a < b.rank; ++a) {
    xs.push_back(plus_basis_element(gamma, a));
    ys.push_back(minus_basis_element(gamma, a));
  }
  return theta_from_bases(gamma, xs, ys);
}

CanonicalTensor Pairing::theta_prime(const RootVector& gamma, size_t i) const {
  const GradedSubspace sp = intersection_subspace(gamma, i, '+', +1);
  const GradedSubspace sm = intersection_subspace(gamma, i, '-', +1);
  std::vector<Element> xs, ys;
  for (size_t a = 0; a < sp.dim(); ++a) xs.push_back(subspace_element(sp, a));
  for (size_t a = 0; a < sm.dim(); ++a) ys.push_back(subspace_element(sm, a));
  CanonicalTensor th = theta_from_bases(gamma, xs, ys);
  return th;
}

CanonicalTensor Pairing::theta_dprime(const RootVector& gamma,
                                      size_t i) const {
  const GradedSubspace sp = intersection_subspace(gamma, i, '+', -1);
  const GradedSubspace sm = intersection_subspace(gamma, i, '-', -1);
  std::vector<Element> xs, ys;
  for (size_t a = 0; a < sp.dim(); ++a) xs.push_back(subspace_element(sp, a));
  for (size_t a = 0; a < sm.dim(); ++a) ys.push_back(subspace_element(sm, a));
  CanonicalTensor th = theta_from_bases(gamma, xs, ys);
  return th;
}

}  // namespace qpair
