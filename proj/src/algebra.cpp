#include "qpair/algebra.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace qpair {

Element Algebra::gen_e(size_t i) const {
  require(i < rank(), "generator index out of range");
  return mono(TriMono({}, RootVector(rank()), {static_cast<int>(i)}));
}

Element Algebra::gen_f(size_t i) const {
  require(i < rank(), "generator index out of range");
  return mono(TriMono({static_cast<int>(i)}, RootVector(rank()), {}));
}

Element Algebra::gen_k(const RootVector& g) const {
  require(g.rank() == rank(), "rank mismatch in gen_k");
  return mono(TriMono({}, g, {}));
}

Element Algebra::gen_k_i(size_t i, long power) const {
  require(i < rank(), "generator index out of range");
  RootVector g(rank());
  g.n[i] = power;
  return gen_k(g);
}

Element Algebra::mono(const TriMono& m, const Scalar& c) const {
  require(m.rank() == rank(), "rank mismatch in mono");
  Element x;
  x.add_term(m, c);
  return x;
}

// Normal form of (e-word) * f_j as a sum of triangular monomials.
// Recursion peels the last e-letter: e_i f_j = f_j e_i for i != j and
// e_i f_i = f_i e_i + (k_i - k_i^{-1})/(q_i - q_i^{-1}).
Element Algebra::eword_times_f(const std::vector<int>& eword, size_t j) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ef_cache_.find({eword, j});
    if (it != ef_cache_.end()) return it->second;
  }
  Element result;
  if (eword.empty()) {
    result = gen_f(j);
  } else {
    std::vector<int> head(eword.begin(), eword.end() - 1);
    const size_t i = static_cast<size_t>(eword.back());
    const Element sub = eword_times_f(head, j);
    for (const auto& [m, c] : sub.terms()) {
      TriMono m2 = m;
      m2.e.push_back(static_cast<int>(i));
      result.add_term(m2, c);
    }
    if (i == j) {
      const Scalar denom =
          Scalar::q_power(d(i)) - Scalar::q_power(-d(i));
      const RootVector wt = word_weight(*datum_, head);
      const long pair = datum_->bilinear(wt, datum_->alpha(i));
      RootVector plus(rank()), minus(rank());
      plus.n[i] = 1;
      minus.n[i] = -1;
      result.add_term(TriMono({}, plus, head),
                      Scalar::q_power(-pair) / denom);
      result.add_term(TriMono({}, minus, head),
                      -(Scalar::q_power(pair) / denom));
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  return ef_cache_.emplace(std::make_pair(eword, j), std::move(result))
      .first->second;
}

Element Algebra::mul_letter(const Element& x, const GenLetter& l) const {
  Element out;
  switch (l.kind) {
    case GenLetter::Kind::E: {
      require(l.idx < rank(), "generator index out of range");
      for (const auto& [m, c] : x.terms()) {
        TriMono m2 = m;
        m2.e.push_back(static_cast<int>(l.idx));
        out.add_term(m2, c);
      }
      return out;
    }
    case GenLetter::Kind::K: {
      require(l.gamma.rank() == rank(), "rank mismatch in torus letter");
      for (const auto& [m, c] : x.terms()) {
        TriMono m2 = m;
        m2.k = m2.k + l.gamma;
        const long pair = datum_->bilinear(m.e_weight(), l.gamma);
        out.add_term(m2, c * Scalar::q_power(-pair));
      }
      return out;
    }
    case GenLetter::Kind::F: {
      require(l.idx < rank(), "generator index out of range");
      for (const auto& [m, c] : x.terms()) {
        const Element ef = eword_times_f(m.e, l.idx);
        for (const auto& [mx, cx] : ef.terms()) {
          const long pair = datum_->bilinear(mx.f_weight(), m.k);
          TriMono m2;
          m2.f = m.f;
          m2.f.insert(m2.f.end(), mx.f.begin(), mx.f.end());
          m2.k = m.k + mx.k;
          m2.e = mx.e;
          out.add_term(m2, c * cx * Scalar::q_power(-pair));
        }
      }
      return out;
    }
  }
  fail("unreachable letter kind");
}

Element Algebra::normal_form(const GenWord& word) const {
  Element acc = unit();
  for (const auto& l : word) acc = mul_letter(acc, l);
  return acc;
}

Element Algebra::mul_mono(const TriMono& a, const TriMono& b) const {
  // Normalize Ea * Fb * kb * Eb, then graft Fa and ka on the left.
  Element x = mono(TriMono({}, RootVector(rank()), a.e));
  for (int j : b.f) x = mul_letter(x, GenLetter::F(static_cast<size_t>(j)));
  x = mul_letter(x, GenLetter::K(b.k));
  for (int i : b.e) x = mul_letter(x, GenLetter::E(static_cast<size_t>(i)));
  Element out;
  for (const auto& [m, c] : x.terms()) {
    const long pair = datum_->bilinear(m.f_weight(), a.k);
    TriMono m2;
    m2.f = a.f;
    m2.f.insert(m2.f.end(), m.f.begin(), m.f.end());
    m2.k = a.k + m.k;
    m2.e = m.e;
    out.add_term(m2, c * Scalar::q_power(-pair));
  }
  return out;
}

Element Algebra::multiply(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [ma, ca] : x.terms())
    for (const auto& [mb, cb] : y.terms())
      out += mul_mono(ma, mb).scaled(ca * cb);
  return out;
}

Element Algebra::power(const Element& x, long n) const {
  require(n >= 0, "power needs n >= 0");
  Element acc = unit();
  for (long k = 0; k < n; ++k) acc = multiply(acc, x);
  return acc;
}

Element Algebra::divided_power_e(size_t i, long r) const {
  require(i < rank() && r >= 0, "bad divided power");
  TriMono m(rank());
  m.e.assign(static_cast<size_t>(r), static_cast<int>(i));
  return mono(m, q_factorial(r, d(i)).inverse());
}

Element Algebra::divided_power_f(size_t i, long r) const {
  require(i < rank() && r >= 0, "bad divided power");
  TriMono m(rank());
  m.f.assign(static_cast<size_t>(r), static_cast<int>(i));
  return mono(m, q_factorial(r, d(i)).inverse());
}

Element Algebra::serre_e(size_t i, size_t j) const {
  require(i < rank() && j < rank() && i != j, "serre needs i != j");
  const long n = 1 - datum_->cartan(i, j);
  Element out;
  for (long r = 0; r <= n; ++r) {
    const long s = n - r;
    TriMono m(rank());
    m.e.assign(static_cast<size_t>(r), static_cast<int>(i));
    m.e.push_back(static_cast<int>(j));
    m.e.insert(m.e.end(), static_cast<size_t>(s), static_cast<int>(i));
    Scalar c = (q_factorial(r, d(i)) * q_factorial(s, d(i))).inverse();
    if (r % 2) c = -c;
    out.add_term(m, c);
  }
  return out;
}

Element Algebra::serre_f(size_t i, size_t j) const {
  require(i < rank() && j < rank() && i != j, "serre needs i != j");
  const long n = 1 - datum_->cartan(i, j);
  Element out;
  for (long r = 0; r <= n; ++r) {
    const long s = n - r;
    TriMono m(rank());
    m.f.assign(static_cast<size_t>(r), static_cast<int>(i));
    m.f.push_back(static_cast<int>(j));
    m.f.insert(m.f.end(), static_cast<size_t>(s), static_cast<int>(i));
    Scalar c = (q_factorial(r, d(i)) * q_factorial(s, d(i))).inverse();
    if (r % 2) c = -c;
    out.add_term(m, c);
  }
  return out;
}

namespace {
// One comultiplication option: an optional letter per slot.
using SlotOption = std::vector<std::optional<GenLetter>>;
}  // namespace

Tensor Algebra::iterated_coproduct(const Element& x, size_t slots) const {
  require(slots >= 1, "iterated_coproduct needs at least one slot");
  Tensor out(slots);
  for (const auto& [m, c] : x.terms()) {
    // Options per letter of the monomial, in word order.
    std::vector<std::vector<SlotOption>> letter_options;
    auto letter_word = [&](const TriMono& mm) {
      GenWord w;
      for (int j : mm.f) w.push_back(GenLetter::F(static_cast<size_t>(j)));
      if (!mm.k.is_zero()) w.push_back(GenLetter::K(mm.k));
      for (int i : mm.e) w.push_back(GenLetter::E(static_cast<size_t>(i)));
      return w;
    };
    for (const auto& l : letter_word(m)) {
      std::vector<SlotOption> opts;
      switch (l.kind) {
        case GenLetter::Kind::K: {
          SlotOption o(slots);
          for (size_t s = 0; s < slots; ++s) o[s] = GenLetter::K(l.gamma);
          opts.push_back(std::move(o));
          break;
        }
        case GenLetter::Kind::E: {
          for (size_t p = 0; p < slots; ++p) {
            SlotOption o(slots);
            for (size_t s = 0; s < p; ++s)
              o[s] = GenLetter::K(datum_->alpha(l.idx));
            o[p] = GenLetter::E(l.idx);
            opts.push_back(std::move(o));
          }
          break;
        }
        case GenLetter::Kind::F: {
          for (size_t p = 0; p < slots; ++p) {
            SlotOption o(slots);
            o[p] = GenLetter::F(l.idx);
            for (size_t s = p + 1; s < slots; ++s)
              o[s] = GenLetter::K(-datum_->alpha(l.idx));
            opts.push_back(std::move(o));
          }
          break;
        }
      }
      letter_options.push_back(std::move(opts));
    }
    Tensor acc = Tensor::unit(slots, rank()).scaled(c);
    for (const auto& opts : letter_options) {
      Tensor next(slots);
      for (const auto& [key, kc] : acc.terms()) {
        for (const auto& o : opts) {
          // Expand slot products; slots without a letter stay put.
          std::vector<std::vector<std::pair<TriMono, Scalar>>> slot_terms(
              slots);
          for (size_t s = 0; s < slots; ++s) {
            if (!o[s]) {
              slot_terms[s] = {{key[s], Scalar(1)}};
            } else {
              const Element prod = mul_letter(mono(key[s]), *o[s]);
              for (const auto& [mm, cc] : prod.terms())
                slot_terms[s].emplace_back(mm, cc);
            }
          }
          std::vector<TriMono> newkey(slots, TriMono(rank()));
          std::function<void(size_t, const Scalar&)> emit =
              [&](size_t s, const Scalar& acc_c) {
                if (s == slots) {
                  next.add_term(newkey, acc_c);
                  return;
                }
                for (const auto& [mm, cc] : slot_terms[s]) {
                  newkey[s] = mm;
                  emit(s + 1, acc_c * cc);
                }
              };
          emit(0, kc);
        }
      }
      acc = std::move(next);
    }
    out += acc;
  }
  return out;
}

Tensor Algebra::coproduct_slot(const Tensor& t, size_t slot) const {
  require(slot < t.slots(), "slot out of range");
  Tensor out(t.slots() + 1);
  for (const auto& [key, c] : t.terms()) {
    Tensor two = iterated_coproduct(mono(key[slot]), 2);
    for (const auto& [k2, c2] : two.terms()) {
      std::vector<TriMono> nk;
      nk.reserve(key.size() + 1);
      nk.insert(nk.end(), key.begin(), key.begin() + slot);
      nk.push_back(k2[0]);
      nk.push_back(k2[1]);
      nk.insert(nk.end(), key.begin() + slot + 1, key.end());
      out.add_term(nk, c * c2);
    }
  }
  return out;
}

Element Algebra::antipode(const Element& x) const {
  Element out;
  for (const auto& [m, c] : x.terms()) {
    // S reverses products; letter images are
    // e_i -> -k_i^{-1} e_i, f_j -> -f_j k_j, k -> k^{-1}.
    Element acc = unit();
    auto mul_image = [&](const GenLetter& l) {
      switch (l.kind) {
        case GenLetter::Kind::E: {
          RootVector g(rank());
          g.n[l.idx] = -1;
          acc = multiply(acc, mono(TriMono({}, g, {static_cast<int>(l.idx)}),
                                   Scalar(-1)));
          break;
        }
        case GenLetter::Kind::F: {
          RootVector g(rank());
          g.n[l.idx] = 1;
          acc = multiply(acc, mono(TriMono({static_cast<int>(l.idx)}, g, {}),
                                   Scalar(-1)));
          break;
        }
        case GenLetter::Kind::K:
          acc = mul_letter(acc, GenLetter::K(-l.gamma));
          break;
      }
    };
    for (auto it = m.e.rbegin(); it != m.e.rend(); ++it)
      mul_image(GenLetter::E(static_cast<size_t>(*it)));
    if (!m.k.is_zero()) mul_image(GenLetter::K(m.k));
    for (auto it = m.f.rbegin(); it != m.f.rend(); ++it)
      mul_image(GenLetter::F(static_cast<size_t>(*it)));
    out += acc.scaled(c);
  }
  return out;
}

Scalar Algebra::counit(const Element& x) const {
  Scalar s(0);
  for (const auto& [m, c] : x.terms())
    if (m.f.empty() && m.e.empty()) s += c;
  return s;
}

Tensor Algebra::phi_twist(const Tensor& t) const {
  require(t.slots() == 2, "phi_twist needs two slots");
  Tensor out(2);
  for (const auto& [key, c] : t.terms()) {
    const RootVector g = key[0].weight();
    const RootVector h = key[1].weight();
    Element a = mul_letter(mono(key[0]), GenLetter::K(-h));
    Element b = mul_letter(mono(key[1]), GenLetter::K(-g));
    const Scalar factor = Scalar::q_power(-datum_->bilinear(g, h)) * c;
    for (const auto& [ma, ca] : a.terms())
      for (const auto& [mb, cb] : b.terms())
        out.add_term({ma, mb}, factor * ca * cb);
  }
  return out;
}

Tensor Algebra::phi_twist_inv(const Tensor& t) const {
  require(t.slots() == 2, "phi_twist_inv needs two slots");
  Tensor out(2);
  for (const auto& [key, c] : t.terms()) {
    const RootVector g = key[0].weight();
    const RootVector h = key[1].weight();
    Element a = mul_letter(mono(key[0]), GenLetter::K(h));
    Element b = mul_letter(mono(key[1]), GenLetter::K(g));
    const Scalar factor = Scalar::q_power(datum_->bilinear(g, h)) * c;
    for (const auto& [ma, ca] : a.terms())
      for (const auto& [mb, cb] : b.terms())
        out.add_term({ma, mb}, factor * ca * cb);
  }
  return out;
}

const Element& Algebra::braid_image(size_t i, int dir, GenLetter::Kind kind,
                                    size_t j) const {
  const bool fwd = dir > 0;
  const bool is_e = kind == GenLetter::Kind::E;
  const auto key = std::make_tuple(i, fwd, is_e, j);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = braid_cache_.find(key);
    if (it != braid_cache_.end()) return it->second;
  }
  Element img;
  const long di = d(i);
  if (i == j) {
    RootVector plus(rank()), minus(rank());
    plus.n[i] = 1;
    minus.n[i] = -1;
    const int ii = static_cast<int>(i);
    if (fwd) {
      img = is_e ? mono(TriMono({ii}, plus, {}), Scalar(-1))
                 : mono(TriMono({}, minus, {ii}), Scalar(-1));
    } else {
      img = is_e ? mono(TriMono({ii}, minus, {}),
                        -Scalar::q_power(2 * di))
                 : mono(TriMono({}, plus, {ii}),
                        -Scalar::q_power(-2 * di));
    }
  } else {
    const long n = -datum_->cartan(i, j);
    for (long r = 0; r <= n; ++r) {
      const long s = n - r;
      // Word shapes, by direction:
      //   T  (e): e_i^{(s)} e_j e_i^{(r)}    T  (f): f_i^{(r)} f_j f_i^{(s)}
      //   T' (e): e_i^{(r)} e_j e_i^{(s)}    T' (f): f_i^{(s)} f_j f_i^{(r)}
      const long left = is_e == fwd ? s : r;
      const long right = n - left;
      TriMono m(rank());
      auto& word = is_e ? m.e : m.f;
      word.assign(static_cast<size_t>(left), static_cast<int>(i));
      word.push_back(static_cast<int>(j));
      word.insert(word.end(), static_cast<size_t>(right),
                  static_cast<int>(i));
      Scalar c = (q_factorial(r, di) * q_factorial(s, di)).inverse() *
                 Scalar::q_power(is_e ? -di * r : di * r);
      if (r % 2) c = -c;
      img.add_term(m, c);
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  return braid_cache_.emplace(key, std::move(img)).first->second;
}

const Element& Algebra::braid_word_image(size_t i, int dir, bool is_e,
                                         const std::vector<int>& word) const {
  const auto key = std::make_tuple(i, dir > 0, is_e, word);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = braid_word_cache_.find(key);
    if (it != braid_word_cache_.end()) return it->second;
  }
  Element img;
  if (word.empty()) {
    img = unit();
  } else {
    const std::vector<int> head(word.begin(), word.end() - 1);
    const auto kind = is_e ? GenLetter::Kind::E : GenLetter::Kind::F;
    img = multiply(braid_word_image(i, dir, is_e, head),
                   braid_image(i, dir, kind, static_cast<size_t>(word.back())));
  }
  std::lock_guard<std::mutex> lock(mu_);
  return braid_word_cache_.emplace(key, std::move(img)).first->second;
}

Element Algebra::braid_T(size_t i, const Element& x) const {
  require(i < rank(), "generator index out of range");
  Element out;
  for (const auto& [m, c] : x.terms()) {
    Element acc = braid_word_image(i, +1, false, m.f);
    if (!m.k.is_zero())
      acc = mul_letter(acc, GenLetter::K(datum_->reflect(i, m.k)));
    if (!m.e.empty()) acc = multiply(acc, braid_word_image(i, +1, true, m.e));
    out += acc.scaled(c);
  }
  return out;
}

Element Algebra::braid_T_inv(size_t i, const Element& x) const {
  require(i < rank(), "generator index out of range");
  Element out;
  for (const auto& [m, c] : x.terms()) {
    Element acc = braid_word_image(i, -1, false, m.f);
    if (!m.k.is_zero())
      acc = mul_letter(acc, GenLetter::K(datum_->reflect(i, m.k)));
    if (!m.e.empty()) acc = multiply(acc, braid_word_image(i, -1, true, m.e));
    out += acc.scaled(c);
  }
  return out;
}

Element Algebra::braid_T_word(const std::vector<size_t>& word,
                              const Element& x, int dir) const {
  Element acc = x;
  for (size_t k = word.size(); k-- > 0;)
    acc = dir > 0 ? braid_T(word[k], acc) : braid_T_inv(word[k], acc);
  return acc;
}

Element Algebra::projection_p(const Element& x) const {
  Element out;
  for (const auto& [m, c] : x.terms())
    if (m.is_torus_only()) out.add_term(m, c);
  return out;
}

Element Algebra::gaussian_binomial_k(size_t i, long m) const {
  require(i < rank(), "generator index out of range");
  require(m >= 0, "gaussian_binomial_k needs m >= 0");
  Element acc = unit();
  RootVector plus(rank()), minus(rank());
  plus.n[i] = 1;
  minus.n[i] = -1;
  const long di = d(i);
  for (long r = 1; r <= m; ++r) {
    const Scalar denom =
        Scalar::q_power(di * r) - Scalar::q_power(-di * r);
    Element factor;
    factor.add_term(TriMono({}, plus, {}),
                    Scalar::q_power(-di * (r - 1)) / denom);
    factor.add_term(TriMono({}, minus, {}),
                    -(Scalar::q_power(di * (r - 1)) / denom));
    acc = multiply(acc, factor);
  }
  return acc;
}

Scalar Algebra::ev_weight(const Element& torus_only,
                          const Weight& lambda) const {
  require(torus_only.is_torus_only(), "ev_weight needs a torus element");
  Scalar s(0);
  for (const auto& [m, c] : torus_only.terms())
    s += c * Scalar::q_power(datum_->t_pairing(lambda, m.k));
  return s;
}

}  // namespace qpair
