#include "qpair/repr.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qpair/error.hpp"

namespace qpair {

namespace {

bool same_datum(const CartanDatum& a, const CartanDatum& b) {
  return a.gcm() == b.gcm() && a.symmetrizer() == b.symmetrizer();
}

// One weight slice of a module under construction: all words of a fixed
// weight, the matrix of the contravariant form on them, and pivot data
// used to express arbitrary words in the surviving basis.
struct Slice {
  RootVector nu;
  std::vector<std::vector<int>> words;
  ScalarMatrix form;               // full word-by-word form matrix
  std::vector<size_t> rpiv, cpiv;  // greedy row / column profiles
  ScalarMatrix solve_inv;          // inverse of form[rpiv, cpiv]
  size_t offset = 0;               // global index of the first basis vector
  size_t dim() const { return cpiv.size(); }
};

// Contravariant form value on two words: transpose the first word
// (reversing it and flipping raising <-> lowering), multiply, project to
// the torus and evaluate against the start weight.
Scalar form_value(const Algebra& alg, const Weight& ev,
                  const std::vector<int>& w1, const std::vector<int>& w2,
                  bool highest) {
  GenWord word;
  word.reserve(w1.size() + w2.size());
  for (auto it = w1.rbegin(); it != w1.rend(); ++it)
    word.push_back(highest ? GenLetter::E(size_t(*it))
                           : GenLetter::F(size_t(*it)));
  for (int j : w2)
    word.push_back(highest ? GenLetter::F(size_t(j))
                           : GenLetter::E(size_t(j)));
  return alg.ev_weight(alg.projection_p(alg.normal_form(word)), ev);
}

// All lattice points 0 <= nu <= hi, ordered by height then lexicographically.
std::vector<RootVector> box_points(const RootVector& hi) {
  std::vector<RootVector> out;
  RootVector cur(hi.rank());
  for (;;) {
    out.push_back(cur);
    size_t k = 0;
    while (k < cur.rank() && cur.n[k] == hi.n[k]) cur.n[k++] = 0;
    if (k == cur.rank()) break;
    ++cur.n[k];
  }
  std::sort(out.begin(), out.end(), [](const RootVector& a, const RootVector& b) {
    return std::pair(a.height(), a.n) < std::pair(b.height(), b.n);
  });
  return out;
}

size_t word_index(const Slice& s, const std::vector<int>& w) {
  auto it = std::lower_bound(s.words.begin(), s.words.end(), w);
  require(it != s.words.end() && *it == w, "word missing from its weight slice");
  return size_t(it - s.words.begin());
}

// Coordinates in the slice basis of the vector sum_w dense[w] * (word_w
// applied to the start vector).  Solving against the pivot rows is enough:
// they span the row space of the form, so agreement there extends to all
// word functionals.
std::vector<Scalar> slice_coords(const Slice& s,
                                 const std::vector<Scalar>& dense) {
  const size_t rk = s.dim();
  std::vector<Scalar> rhs(rk);
  for (size_t b = 0; b < rk; ++b) {
    Scalar acc;
    for (size_t w = 0; w < dense.size(); ++w)
      if (!dense[w].is_zero()) acc += s.form.at(s.rpiv[b], w) * dense[w];
    rhs[b] = acc;
  }
  std::vector<Scalar> out(rk);
  for (size_t a = 0; a < rk; ++a) {
    Scalar acc;
    for (size_t b = 0; b < rk; ++b) acc += s.solve_inv.at(a, b) * rhs[b];
    out[a] = acc;
  }
  return out;
}

WeightModule build_extreme(const Algebra& alg, const Weight& lambda,
                           bool highest) {
  const CartanDatum& datum = alg.datum();
  require(lambda.rank() == datum.rank(), "weight rank mismatch");
  require(lambda.is_dominant(), "module construction needs a dominant weight");
  require(datum.is_finite_type(), "module construction needs finite type");
  const Weight ev = highest ? lambda : -lambda;
  auto span = datum.root_coords_of(lambda - datum.lowest_in_orbit(lambda));
  require(span.has_value() && span->is_nonneg(),
          "weight orbit does not span a lattice box");

  std::vector<Slice> slices;
  std::map<RootVector, size_t> slice_of;
  size_t dim = 0;
  for (const RootVector& nu : box_points(*span)) {
    Slice s;
    s.nu = nu;
    s.words = words_of_weight(datum, nu);
    const size_t n = s.words.size();
    ScalarMatrix form(n, n);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c)
        form.at(r, c) = form_value(alg, ev, s.words[r], s.words[c], highest);
    s.rpiv = form.independent_rows();
    s.cpiv = form.transpose().independent_rows();
    require(s.rpiv.size() == s.cpiv.size(), "form rank mismatch");
    const size_t rk = s.rpiv.size();
    if (rk > 0) {
      ScalarMatrix g(rk, rk);
      for (size_t a = 0; a < rk; ++a)
        for (size_t b = 0; b < rk; ++b)
          g.at(a, b) = form.at(s.rpiv[a], s.cpiv[b]);
      s.solve_inv = g.inverse();
    }
    s.form = std::move(form);
    s.offset = dim;
    dim += rk;
    slice_of.emplace(nu, slices.size());
    slices.push_back(std::move(s));
  }

  WeightModule v;
  v.datum = alg.datum_ptr();
  v.name = (highest ? "V+" : "V-") + lambda.str();
  v.weights.resize(dim);
  v.labels.resize(dim);
  for (const Slice& s : slices) {
    const Weight mu = highest ? lambda - datum.weight_of(s.nu)
                              : ev + datum.weight_of(s.nu);
    for (size_t a = 0; a < s.dim(); ++a) {
      v.weights[s.offset + a] = mu;
      const std::vector<int>& w = s.words[s.cpiv[a]];
      std::ostringstream lab;
      if (w.empty()) lab << 'v';
      for (size_t p = 0; p < w.size(); ++p) {
        if (p) lab << ' ';
        lab << (highest ? 'f' : 'e') << (w[p] + 1);
      }
      v.labels[s.offset + a] = lab.str();
    }
  }

  const size_t rank = datum.rank();
  // "prepend" multiplies by the generator on the word-building side
  // (f for highest modules, e for lowest); "cross" is the other side,
  // straightened through the normal form before it reaches the start
  // vector.
  std::vector<ScalarMatrix> prepend(rank, ScalarMatrix(dim, dim));
  std::vector<ScalarMatrix> cross(rank, ScalarMatrix(dim, dim));
  for (const Slice& s : slices) {
    for (size_t a = 0; a < s.dim(); ++a) {
      const std::vector<int>& w = s.words[s.cpiv[a]];

      for (size_t i = 0; i < rank; ++i) {
        auto it = slice_of.find(s.nu + datum.alpha(i));
        if (it == slice_of.end()) continue;  // weight leaves the module box
        const Slice& t = slices[it->second];
        if (t.dim() == 0) continue;
        std::vector<int> w2;
        w2.reserve(w.size() + 1);
        w2.push_back(int(i));
        w2.insert(w2.end(), w.begin(), w.end());
        std::vector<Scalar> rhs(t.dim());
        const size_t idx = word_index(t, w2);
        for (size_t b = 0; b < t.dim(); ++b) rhs[b] = t.form.at(t.rpiv[b], idx);
        std::vector<Scalar> x(t.dim());
        for (size_t c = 0; c < t.dim(); ++c) {
          Scalar acc;
          for (size_t b = 0; b < t.dim(); ++b)
            acc += t.solve_inv.at(c, b) * rhs[b];
          x[c] = acc;
        }
        for (size_t c = 0; c < t.dim(); ++c)
          prepend[i].at(t.offset + c, s.offset + a) = x[c];
      }

      for (size_t i = 0; i < rank; ++i) {
        auto it = slice_of.find(s.nu - datum.alpha(i));
        if (it == slice_of.end()) continue;
        const Slice& t = slices[it->second];
        if (t.dim() == 0) continue;
        GenWord gw;
        gw.push_back(highest ? GenLetter::E(i) : GenLetter::F(i));
        for (int j : w)
          gw.push_back(highest ? GenLetter::F(size_t(j))
                               : GenLetter::E(size_t(j)));
        const Element z = alg.normal_form(gw);
        std::vector<Scalar> dense(t.words.size());
        for (const auto& [m, coeff] : z.terms()) {
          if (highest) {
            if (!m.e.empty()) continue;
            dense[word_index(t, m.f)] +=
                coeff * Scalar::q_power(datum.t_pairing(lambda, m.k));
          } else {
            if (!m.f.empty()) continue;
            // the torus factor acts after the e-word has raised the weight
            const Weight below = ev + datum.weight_of(m.e_weight());
            dense[word_index(t, m.e)] +=
                coeff * Scalar::q_power(datum.t_pairing(below, m.k));
          }
        }
        const std::vector<Scalar> x = slice_coords(t, dense);
        for (size_t c = 0; c < t.dim(); ++c)
          cross[i].at(t.offset + c, s.offset + a) = x[c];
      }
    }
  }
  if (highest) {
    v.f_act = std::move(prepend);
    v.e_act = std::move(cross);
  } else {
    v.e_act = std::move(prepend);
    v.f_act = std::move(cross);
  }
  return v;
}

ScalarMatrix act_mono(const WeightModule& v, const TriMono& m) {
  ScalarMatrix me = ScalarMatrix::identity(v.dim());
  for (int j : m.e) me = me * v.e_act[size_t(j)];
  ScalarMatrix mf = ScalarMatrix::identity(v.dim());
  for (int j : m.f) mf = mf * v.f_act[size_t(j)];
  return mf * v.k_act(m.k) * me;
}

// Weight differences mu - mu' in Q+ between pairs of module weights;
// only these can support a raising operator of that weight.
std::set<RootVector> up_diffs(const WeightModule& v) {
  std::set<RootVector> out;
  for (size_t b1 = 0; b1 < v.dim(); ++b1)
    for (size_t b2 = 0; b2 < v.dim(); ++b2) {
      auto rc = v.datum->root_coords_of(v.weights[b1] - v.weights[b2]);
      if (rc.has_value() && rc->is_nonneg()) out.insert(*rc);
    }
  return out;
}

ScalarMatrix ef_ladder_series(const WeightModule& v, const WeightModule& w,
                              size_t i, bool e_first, const Scalar& coeff,
                              long d) {
  // exp series with parameter q^d of coeff * (x_i (x) y_i) where the
  // first slot takes e (e_first) or f, the second the other kind.
  const ScalarMatrix& a = e_first ? v.e_act[i] : v.f_act[i];
  const ScalarMatrix& b = e_first ? w.f_act[i] : w.e_act[i];
  return exp_q(a.kron(b).scaled(coeff), d);
}

}  // namespace

ScalarMatrix WeightModule::k_act(const RootVector& g) const {
  ScalarMatrix m(dim(), dim());
  for (size_t b = 0; b < dim(); ++b)
    m.at(b, b) = Scalar::q_power(datum->t_pairing(weights[b], g));
  return m;
}

std::string WeightModule::dump() const {
  std::ostringstream os;
  os << "module " << name << "\n";
  os << "datum " << datum->name() << "\n";
  os << "dim " << dim() << "\n";
  for (size_t b = 0; b < dim(); ++b)
    os << "basis " << b << " weight " << weights[b].str() << " label "
       << labels[b] << "\n";
  auto emit = [&](char g, size_t i, const ScalarMatrix& m) {
    for (size_t r = 0; r < m.rows(); ++r)
      for (size_t c = 0; c < m.cols(); ++c)
        if (!m.at(r, c).is_zero())
          os << "act " << g << (i + 1) << ' ' << r << ' ' << c << ' '
             << m.at(r, c).str() << "\n";
  };
  for (size_t i = 0; i < e_act.size(); ++i) emit('e', i, e_act[i]);
  for (size_t i = 0; i < f_act.size(); ++i) emit('f', i, f_act[i]);
  return os.str();
}

WeightModule build_highest(const Algebra& algebra, const Weight& lambda) {
  return build_extreme(algebra, lambda, true);
}

WeightModule build_lowest(const Algebra& algebra, const Weight& lambda) {
  return build_extreme(algebra, lambda, false);
}

WeightModule tensor_module(const WeightModule& a, const WeightModule& b) {
  require(same_datum(*a.datum, *b.datum), "tensor factors over different data");
  WeightModule v;
  v.datum = a.datum;
  v.name = a.name + " (x) " + b.name;
  const size_t da = a.dim(), db = b.dim();
  v.weights.reserve(da * db);
  v.labels.reserve(da * db);
  for (size_t x = 0; x < da; ++x)
    for (size_t y = 0; y < db; ++y) {
      v.weights.push_back(a.weights[x] + b.weights[y]);
      v.labels.push_back(a.labels[x] + " (x) " + b.labels[y]);
    }
  const ScalarMatrix ia = ScalarMatrix::identity(da);
  const ScalarMatrix ib = ScalarMatrix::identity(db);
  for (size_t i = 0; i < a.datum->rank(); ++i) {
    const RootVector al = a.datum->alpha(i);
    v.e_act.push_back(a.e_act[i].kron(ib) + a.k_act(al).kron(b.e_act[i]));
    v.f_act.push_back(a.f_act[i].kron(b.k_act(-al)) + ia.kron(b.f_act[i]));
  }
  return v;
}

ScalarMatrix act(const WeightModule& v, const Element& x) {
  ScalarMatrix out(v.dim(), v.dim());
  for (const auto& [m, c] : x.terms()) out = out + act_mono(v, m).scaled(c);
  return out;
}

ScalarMatrix act_tensor(const WeightModule& v, const WeightModule& w,
                        const Tensor& t) {
  require(t.slots() == 2, "tensor action needs exactly two slots");
  ScalarMatrix out(v.dim() * w.dim(), v.dim() * w.dim());
  for (const auto& [key, c] : t.terms())
    out = out + act_mono(v, key[0]).kron(act_mono(w, key[1])).scaled(c);
  return out;
}

ScalarMatrix exp_q(const ScalarMatrix& arg, long d) {
  require(arg.rows() == arg.cols(), "exp series needs a square matrix");
  ScalarMatrix sum = ScalarMatrix::identity(arg.rows());
  ScalarMatrix pw = sum;
  for (long n = 1;; ++n) {
    pw = pw * arg;
    if (pw.is_zero()) break;
    require(size_t(n) <= arg.rows(), "exp series argument is not nilpotent");
    sum = sum + pw.scaled(expq_coeff(n, d));
  }
  return sum;
}

ScalarMatrix sigma_op(const WeightModule& v, size_t i, const Scalar& t) {
  return sigma_op_shifted(v, i, t, 0, 1);
}

ScalarMatrix sigma_op_inv(const WeightModule& v, size_t i, const Scalar& t) {
  const CartanDatum& datum = *v.datum;
  const long di = datum.sym(i);
  const RootVector al = datum.alpha(i);
  const Scalar ti = t.inverse();
  const ScalarMatrix a =
      (v.k_act(al) * v.e_act[i]).scaled(t * Scalar::q_power(-di));
  const ScalarMatrix b = v.f_act[i].scaled(-ti);
  const ScalarMatrix c =
      (v.k_act(-al) * v.e_act[i]).scaled(t * Scalar::q_power(di));
  const Scalar neg(-1);
  return exp_q(c.scaled(neg), -di) * exp_q(b.scaled(neg), -di) *
         exp_q(a.scaled(neg), -di);
}

ScalarMatrix sigma_op_shifted(const WeightModule& v, size_t i, const Scalar& t,
                              long n, int kind) {
  const CartanDatum& datum = *v.datum;
  const long di = datum.sym(i);
  const RootVector al = datum.alpha(i);
  const Scalar ti = t.inverse();
  auto ke = [&](long m) { return v.k_act(al.scaled(m)) * v.e_act[i]; };
  auto kf = [&](long m) { return v.k_act(al.scaled(m)) * v.f_act[i]; };
  auto qi = [&](long e) { return Scalar::q_power(di * e); };
  if (kind == 1) {
    const ScalarMatrix a = ke(n + 1).scaled(t * qi(-n - 1));
    const ScalarMatrix b = kf(-n).scaled(-(ti * qi(-n)));
    const ScalarMatrix c = ke(n - 1).scaled(t * qi(-n + 1));
    return exp_q(a, di) * exp_q(b, di) * exp_q(c, di);
  }
  require(kind == 2, "factorization kind must be 1 or 2");
  const ScalarMatrix a = kf(-n - 1).scaled(-(ti * qi(-n - 1)));
  const ScalarMatrix b = ke(n).scaled(t * qi(-n));
  const ScalarMatrix c = kf(-n + 1).scaled(-(ti * qi(-n + 1)));
  return exp_q(a, di) * exp_q(b, di) * exp_q(c, di);
}

ScalarMatrix lusztig_T_op(const WeightModule& v, size_t i) {
  const long di = v.datum->sym(i);
  ScalarMatrix d(v.dim(), v.dim());
  for (size_t b = 0; b < v.dim(); ++b) {
    const long c = v.weights[b].c[i];
    d.at(b, b) = Scalar::q_power(di * c * (c + 1) / 2);
  }
  return sigma_op_inv(v, i, Scalar(-1)) * d;
}

ScalarMatrix lusztig_T_op_inv(const WeightModule& v, size_t i) {
  const long di = v.datum->sym(i);
  ScalarMatrix d(v.dim(), v.dim());
  for (size_t b = 0; b < v.dim(); ++b) {
    const long c = v.weights[b].c[i];
    d.at(b, b) = Scalar::q_power(-di * c * (c + 1) / 2);
  }
  return d * sigma_op(v, i, Scalar(-1));
}

ScalarMatrix Z_op(const WeightModule& v, const WeightModule& w, size_t i) {
  const long di = v.datum->sym(i);
  const Scalar c = Scalar::q_power(di) - Scalar::q_power(-di);
  return ef_ladder_series(v, w, i, false, c, di);
}

ScalarMatrix R_op(const WeightModule& v, const WeightModule& w, size_t i) {
  const long di = v.datum->sym(i);
  const Scalar c = Scalar::q_power(di) - Scalar::q_power(-di);
  return ef_ladder_series(v, w, i, true, -c, -di);
}

ScalarMatrix R_op_inv(const WeightModule& v, const WeightModule& w, size_t i) {
  const long di = v.datum->sym(i);
  const Scalar c = Scalar::q_power(di) - Scalar::q_power(-di);
  return ef_ladder_series(v, w, i, true, c, di);
}

ScalarMatrix P_of_R_op(const WeightModule& v, const WeightModule& w, size_t i) {
  const long di = v.datum->sym(i);
  const Scalar c = Scalar::q_power(di) - Scalar::q_power(-di);
  return ef_ladder_series(v, w, i, false, -c, -di);
}

ScalarMatrix phi_inv_R_op(const WeightModule& v, const WeightModule& w,
                          size_t i, int sign) {
  require(sign == 1 || sign == -1, "sign must be +-1");
  const long di = v.datum->sym(i);
  const RootVector al = v.datum->alpha(i);
  const Scalar qdiff = Scalar::q_power(di) - Scalar::q_power(-di);
  const size_t nv = v.dim(), nw = w.dim();
  ScalarMatrix out(nv * nw, nv * nw);
  ScalarMatrix ev = ScalarMatrix::identity(nv);
  ScalarMatrix fw = ScalarMatrix::identity(nw);
  for (long n = 0;; ++n) {
    if (n > 0) {
      ev = ev * v.e_act[i];
      fw = fw * w.f_act[i];
      if (ev.is_zero() || fw.is_zero()) break;
      require(size_t(n) <= nv && size_t(n) <= nw,
              "series argument is not nilpotent");
    }
    Scalar cn = sign > 0 ? expq_coeff(n, -di) * (-qdiff).pow(n)
                         : expq_coeff(n, di) * qdiff.pow(n);
    cn *= Scalar::q_power(-2 * di * n * n);
    out = out + (ev * v.k_act(al.scaled(-n)))
                    .kron(fw * w.k_act(al.scaled(n)))
                    .scaled(cn);
  }
  return out;
}

ScalarMatrix theta_op(const Pairing& pairing, const WeightModule& v,
                      const WeightModule& w) {
  const std::set<RootVector> g1 = up_diffs(v), g2 = up_diffs(w);
  ScalarMatrix out(v.dim() * w.dim(), v.dim() * w.dim());
  for (const RootVector& g : g1) {
    if (!g2.count(g)) continue;
    out = out + act_tensor(v, w, pairing.theta(g).tensor);
  }
  return out;
}

}  // namespace qpair
