#include "qpair/element.hpp"

#include <algorithm>

namespace qpair {

RootVector TriMono::e_weight() const {
  RootVector w(rank());
  for (int i : e) w.n[static_cast<size_t>(i)] += 1;
  return w;
}

RootVector TriMono::f_weight() const {
  RootVector w(rank());
  for (int i : f) w.n[static_cast<size_t>(i)] += 1;
  return w;
}

void Element::add_term(const TriMono& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  r += o;
  return r;
}

Element Element::operator-(const Element& o) const {
  Element r = *this;
  r -= o;
  return r;
}

Element Element::operator-() const {
  Element r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

Element Element::scaled(const Scalar& c) const {
  Element r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : t_) r.t_.emplace(m, c * v);
  return r;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

bool Element::is_torus_only() const {
  return std::all_of(t_.begin(), t_.end(),
                     [](const auto& p) { return p.first.is_torus_only(); });
}

bool Element::is_plus_part() const {
  return std::all_of(t_.begin(), t_.end(), [](const auto& p) {
    return p.first.f.empty() && p.first.k.is_zero();
  });
}

bool Element::is_minus_part() const {
  return std::all_of(t_.begin(), t_.end(), [](const auto& p) {
    return p.first.e.empty() && p.first.k.is_zero();
  });
}

Tensor Tensor::unit(size_t slots, size_t rank) {
  Tensor t(slots);
  t.t_.emplace(std::vector<TriMono>(slots, TriMono(rank)), Scalar(1));
  return t;
}

void Tensor::add_term(const std::vector<TriMono>& key, const Scalar& c) {
  require(key.size() == slots_, "tensor slot count mismatch");
  if (c.is_zero()) return;
  auto it = t_.find(key);
  if (it == t_.end()) {
    t_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

Tensor Tensor::operator+(const Tensor& o) const {
  Tensor r = *this;
  r += o;
  return r;
}

Tensor Tensor::operator-(const Tensor& o) const {
  Tensor r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, -c);
  return r;
}

Tensor Tensor::operator-() const {
  Tensor r(slots_);
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

Tensor Tensor::scaled(const Scalar& c) const {
  Tensor r(slots_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : t_) r.t_.emplace(m, c * v);
  return r;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  require(slots_ == o.slots_, "tensor slot count mismatch");
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Tensor Tensor::swap01() const {
  require(slots_ >= 2, "swap01 needs at least two slots");
  Tensor r(slots_);
  for (const auto& [m, c] : t_) {
    std::vector<TriMono> key = m;
    std::swap(key[0], key[1]);
    r.add_term(key, c);
  }
  return r;
}

RootVector word_weight(const CartanDatum& datum, const std::vector<int>& word) {
  RootVector w(datum.rank());
  for (int i : word) {
    require(i >= 0 && static_cast<size_t>(i) < datum.rank(),
            "generator index out of range");
    w.n[static_cast<size_t>(i)] += 1;
  }
  return w;
}

std::vector<std::vector<int>> words_of_weight(const CartanDatum& datum,
                                              const RootVector& gamma) {
  require(gamma.rank() == datum.rank(), "rank mismatch in words_of_weight");
  require(gamma.is_nonneg(), "words_of_weight requires gamma in Q+");
  std::vector<int> base;
  for (size_t i = 0; i < gamma.rank(); ++i)
    base.insert(base.end(), static_cast<size_t>(gamma.n[i]),
                static_cast<int>(i));
  std::vector<std::vector<int>> words;
  if (base.empty()) {
    words.push_back({});
    return words;
  }
  std::sort(base.begin(), base.end());
  do {
    words.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return words;
}

}  // namespace qpair
