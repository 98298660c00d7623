#include "qpair/cartan.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace qpair {

long RootVector::height() const {
  return std::accumulate(n.begin(), n.end(), 0L);
}

bool RootVector::is_zero() const {
  return std::all_of(n.begin(), n.end(), [](long x) { return x == 0; });
}

bool RootVector::is_nonneg() const {
  return std::all_of(n.begin(), n.end(), [](long x) { return x >= 0; });
}

RootVector RootVector::operator+(const RootVector& o) const {
  require(n.size() == o.n.size(), "rank mismatch in root lattice sum");
  RootVector r(*this);
  for (size_t i = 0; i < n.size(); ++i) r.n[i] += o.n[i];
  return r;
}

RootVector RootVector::operator-(const RootVector& o) const {
  require(n.size() == o.n.size(), "rank mismatch in root lattice difference");
  RootVector r(*this);
  for (size_t i = 0; i < n.size(); ++i) r.n[i] -= o.n[i];
  return r;
}

RootVector RootVector::operator-() const {
  RootVector r(*this);
  for (auto& x : r.n) x = -x;
  return r;
}

RootVector RootVector::scaled(long c) const {
  RootVector r(*this);
  for (auto& x : r.n) x *= c;
  return r;
}

std::string RootVector::str() const {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < n.size(); ++i) {
    if (n[i] == 0) continue;
    long v = n[i];
    if (first) {
      if (v < 0) out << "-";
      first = false;
    } else {
      out << (v < 0 ? "-" : "+");
    }
    if (v < 0) v = -v;
    if (v != 1) out << v;
    out << "a" << (i + 1);
  }
  if (first) out << "0";
  return out.str();
}

bool Weight::is_dominant() const {
  return std::all_of(c.begin(), c.end(), [](long x) { return x >= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](long x) { return x == 0; });
}

Weight Weight::operator+(const Weight& o) const {
  require(c.size() == o.c.size(), "rank mismatch in weight sum");
  Weight r(*this);
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  require(c.size() == o.c.size(), "rank mismatch in weight difference");
  Weight r(*this);
  for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
  return r;
}

Weight Weight::operator-() const {
  Weight r(*this);
  for (auto& x : r.c) x = -x;
  return r;
}

std::string Weight::str() const {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out << ",";
    out << c[i];
  }
  out << ")";
  return out.str();
}

CartanDatum::CartanDatum(std::vector<std::vector<long>> gcm,
                         std::vector<long> d, std::string name)
    : a_(std::move(gcm)), d_(std::move(d)), name_(std::move(name)) {
  const size_t n = a_.size();
  require(n > 0, "empty Cartan matrix");
  require(d_.size() == n, "symmetrizer size mismatch");
  for (size_t i = 0; i < n; ++i) {
    require(a_[i].size() == n, "Cartan matrix is not square");
    require(a_[i][i] == 2, "Cartan matrix diagonal must be 2");
    require(d_[i] > 0, "symmetrizer entries must be positive");
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      require(a_[i][j] <= 0, "off-diagonal Cartan entries must be <= 0");
      require((a_[i][j] == 0) == (a_[j][i] == 0),
              "Cartan matrix zero pattern must be symmetric");
      require(d_[i] * a_[i][j] == d_[j] * a_[j][i],
              "symmetrizer does not symmetrize the Cartan matrix");
    }
  }
}

CartanDatum CartanDatum::from_gcm(std::vector<std::vector<long>> gcm,
                                  std::string name) {
  const size_t n = gcm.size();
  require(n > 0, "empty Cartan matrix");
  // Spread ratios d_i/d_j = a[j][i]/a[i][j] through each connected
  // component, then clear denominators minimally.
  std::vector<mpq_class> r(n, 0);
  std::vector<long> comp(n, -1);
  long ncomp = 0;
  for (size_t s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = ncomp;
    r[s] = 1;
    std::vector<size_t> stack = {s};
    while (!stack.empty()) {
      size_t i = stack.back();
      stack.pop_back();
      for (size_t j = 0; j < n; ++j) {
        require(gcm[i].size() == n, "Cartan matrix is not square");
        if (i == j || gcm[i][j] == 0) continue;
        require(gcm[j][i] != 0, "Cartan matrix zero pattern must be symmetric");
        mpq_class want = r[i] * gcm[i][j] / gcm[j][i];
        if (comp[j] == -1) {
          comp[j] = ncomp;
          r[j] = want;
          stack.push_back(j);
        } else {
          require(r[j] == want, "Cartan matrix is not symmetrizable");
        }
      }
    }
    ++ncomp;
  }
  // Per component: scale to integers with gcd 1.
  std::vector<long> d(n, 1);
  for (long cidx = 0; cidx < ncomp; ++cidx) {
    mpz_class lcm_den = 1;
    for (size_t i = 0; i < n; ++i)
      if (comp[i] == cidx) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                                   r[i].get_den().get_mpz_t());
    mpz_class gcd_num = 0;
    std::vector<mpz_class> scaled(n);
    for (size_t i = 0; i < n; ++i)
      if (comp[i] == cidx) {
        scaled[i] = r[i].get_num() * (lcm_den / r[i].get_den());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(),
                scaled[i].get_mpz_t());
      }
    for (size_t i = 0; i < n; ++i)
      if (comp[i] == cidx) {
        mpz_class v = scaled[i] / gcd_num;
        require(v.fits_slong_p(), "symmetrizer overflow");
        d[i] = v.get_si();
      }
  }
  return CartanDatum(std::move(gcm), std::move(d), std::move(name));
}

CartanDatum CartanDatum::preset(const std::string& name) {
  if (name == "A1") return CartanDatum({{2}}, {1}, "A1");
  if (name == "A2") return CartanDatum({{2, -1}, {-1, 2}}, {1, 1}, "A2");
  if (name == "B2") return CartanDatum({{2, -1}, {-2, 2}}, {2, 1}, "B2");
  if (name == "G2") return CartanDatum({{2, -1}, {-3, 2}}, {3, 1}, "G2");
  if (name == "A1xA1")
    return CartanDatum({{2, 0}, {0, 2}}, {1, 1}, "A1xA1");
  fail("unknown Cartan preset: " + name);
}

CartanDatum CartanDatum::from_stream(std::istream& in,
                                     const std::string& name) {
  // Format: whitespace-separated integers, '#' starts a comment.
  //   rank, then rank*rank GCM entries row-major, then optionally
  //   rank symmetrizer entries.
  std::vector<long> nums;
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    try {
      size_t pos = 0;
      long v = std::stol(tok, &pos);
      require(pos == tok.size(), "trailing junk");
      nums.push_back(v);
    } catch (const std::exception&) {
      fail("bad token in Cartan matrix file: " + tok);
    }
  }
  require(!nums.empty(), "empty Cartan matrix file");
  long n = nums[0];
  require(n >= 1 && n <= 16, "unreasonable rank in Cartan matrix file");
  const size_t nn = static_cast<size_t>(n);
  const size_t need_gcm = 1 + nn * nn;
  require(nums.size() == need_gcm || nums.size() == need_gcm + nn,
          "Cartan matrix file has the wrong number of entries");
  std::vector<std::vector<long>> gcm(nn, std::vector<long>(nn));
  for (size_t i = 0; i < nn; ++i)
    for (size_t j = 0; j < nn; ++j) gcm[i][j] = nums[1 + i * nn + j];
  if (nums.size() == need_gcm + nn) {
    std::vector<long> d(nums.begin() + need_gcm, nums.end());
    return CartanDatum(std::move(gcm), std::move(d), name);
  }
  return from_gcm(std::move(gcm), name);
}

CartanDatum CartanDatum::from_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open Cartan matrix file: " + path);
  return from_stream(in, path);
}

void CartanDatum::check_rank(size_t k, const char* op) const {
  require(k == rank(), std::string("rank mismatch in ") + op);
}

RootVector CartanDatum::alpha(size_t i) const {
  require(i < rank(), "generator index out of range");
  RootVector g(rank());
  g.n[i] = 1;
  return g;
}

Weight CartanDatum::fundamental(size_t i) const {
  require(i < rank(), "generator index out of range");
  Weight w(rank());
  w.c[i] = 1;
  return w;
}

Weight CartanDatum::rho() const {
  Weight w(rank());
  for (auto& x : w.c) x = 1;
  return w;
}

long CartanDatum::bilinear(const RootVector& g, const RootVector& h) const {
  check_rank(g.rank(), "bilinear");
  check_rank(h.rank(), "bilinear");
  long s = 0;
  for (size_t i = 0; i < rank(); ++i) {
    if (g.n[i] == 0) continue;
    for (size_t j = 0; j < rank(); ++j)
      s += d_[i] * a_[i][j] * g.n[i] * h.n[j];
  }
  return s;
}

long CartanDatum::pairing_h(const RootVector& g, size_t i) const {
  check_rank(g.rank(), "pairing_h");
  require(i < rank(), "generator index out of range");
  long s = 0;
  for (size_t j = 0; j < rank(); ++j) s += a_[i][j] * g.n[j];
  return s;
}

long CartanDatum::t_pairing(const Weight& lambda, const RootVector& g) const {
  check_rank(lambda.rank(), "t_pairing");
  check_rank(g.rank(), "t_pairing");
  long s = 0;
  for (size_t i = 0; i < rank(); ++i) s += d_[i] * g.n[i] * lambda.c[i];
  return s;
}

RootVector CartanDatum::reflect(size_t i, const RootVector& g) const {
  check_rank(g.rank(), "reflect");
  require(i < rank(), "generator index out of range");
  RootVector r(g);
  r.n[i] -= pairing_h(g, i);
  return r;
}

Weight CartanDatum::reflect(size_t i, const Weight& w) const {
  check_rank(w.rank(), "reflect");
  require(i < rank(), "generator index out of range");
  Weight r(w);
  const long ci = w.c[i];
  for (size_t j = 0; j < rank(); ++j) r.c[j] -= ci * a_[j][i];
  return r;
}

Weight CartanDatum::weight_of(const RootVector& g) const {
  check_rank(g.rank(), "weight_of");
  Weight w(rank());
  for (size_t i = 0; i < rank(); ++i) w.c[i] = pairing_h(g, i);
  return w;
}

std::optional<RootVector> CartanDatum::root_coords_of(const Weight& w) const {
  check_rank(w.rank(), "root_coords_of");
  // Solve A^T n = c exactly: n_j are the coordinates with
  // c_i = sum_j a[i][j] n_j.
  const size_t n = rank();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = a_[i][j];
    m[i][n] = w.c[i];
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;  // GCM singular: cannot invert
    std::swap(m[piv], m[col]);
    const mpq_class p = m[col][col];
    for (size_t j = col; j <= n; ++j) m[col][j] /= p;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      const mpq_class f = m[i][col];
      for (size_t j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  RootVector r(n);
  for (size_t j = 0; j < n; ++j) {
    if (m[j][n].get_den() != 1) return std::nullopt;
    mpz_class v = m[j][n].get_num();
    if (!v.fits_slong_p()) return std::nullopt;
    r.n[j] = v.get_si();
  }
  return r;
}

bool CartanDatum::is_finite_type() const {
  // Finite type iff the symmetrized matrix d_i a[i][j] is positive
  // definite, i.e. all leading principal minors are positive.
  const size_t n = rank();
  for (size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<mpq_class>> m(k, std::vector<mpq_class>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) m[i][j] = d_[i] * a_[i][j];
    // Fraction-free enough at these sizes: plain Gaussian determinant.
    mpq_class det = 1;
    for (size_t col = 0; col < k; ++col) {
      size_t piv = col;
      while (piv < k && m[piv][col] == 0) ++piv;
      if (piv == k) return false;
      if (piv != col) {
        std::swap(m[piv], m[col]);
        det = -det;
      }
      det *= m[col][col];
      for (size_t i = col + 1; i < k; ++i) {
        const mpq_class f = m[i][col] / m[col][col];
        for (size_t j = col; j < k; ++j) m[i][j] -= f * m[col][j];
      }
    }
    if (det <= 0) return false;
  }
  return true;
}

std::vector<RootVector> CartanDatum::positive_roots() const {
  require(is_finite_type(), "positive_roots requires finite type");
  std::set<RootVector> all;
  std::vector<RootVector> frontier;
  for (size_t i = 0; i < rank(); ++i) {
    all.insert(alpha(i));
    frontier.push_back(alpha(i));
  }
  while (!frontier.empty()) {
    std::vector<RootVector> next;
    for (const auto& b : frontier)
      for (size_t i = 0; i < rank(); ++i) {
        RootVector r = reflect(i, b);
        if (all.insert(r).second) next.push_back(r);
      }
    frontier = std::move(next);
    require(all.size() < 4096, "root system unexpectedly large");
  }
  std::vector<RootVector> pos;
  for (const auto& b : all)
    if (b.is_nonneg()) pos.push_back(b);
  std::sort(pos.begin(), pos.end(), [](const RootVector& x, const RootVector& y) {
    if (x.height() != y.height()) return x.height() < y.height();
    return x < y;
  });
  return pos;
}

std::vector<size_t> CartanDatum::reduced_word_w0() const {
  require(is_finite_type(), "reduced_word_w0 requires finite type");
  Weight mu = rho();
  std::vector<size_t> picks;
  const size_t npos = positive_roots().size();
  while (true) {
    size_t i = 0;
    for (; i < rank(); ++i)
      if (mu.c[i] > 0) break;
    if (i == rank()) break;
    mu = reflect(i, mu);
    picks.push_back(i);
    require(picks.size() <= npos, "antidominant descent did not terminate");
  }
  require(picks.size() == npos, "reduced word has unexpected length");
  // picks applied left-to-right to vectors compose to w_0 read
  // right-to-left; reverse to get the conventional product order.
  std::reverse(picks.begin(), picks.end());
  return picks;
}

Weight CartanDatum::lowest_in_orbit(const Weight& lambda) const {
  check_rank(lambda.rank(), "lowest_in_orbit");
  require(lambda.is_dominant(), "lowest_in_orbit requires a dominant weight");
  require(is_finite_type(), "lowest_in_orbit requires finite type");
  Weight mu = lambda;
  bool moved = true;
  size_t guard = 0;
  while (moved) {
    moved = false;
    for (size_t i = 0; i < rank(); ++i)
      if (mu.c[i] > 0) {
        mu = reflect(i, mu);
        moved = true;
      }
    require(++guard < 100000, "orbit descent did not terminate");
  }
  return mu;
}

long CartanDatum::weyl_dim(const Weight& lambda) const {
  check_rank(lambda.rank(), "weyl_dim");
  require(lambda.is_dominant(), "weyl_dim requires a dominant weight");
  mpq_class prod(1);
  for (const auto& beta : positive_roots()) {
    // (mu, beta) = sum_j d_j mu_j beta_j for mu in fundamental coords.
    long num = 0, den = 0;
    for (size_t j = 0; j < rank(); ++j) {
      num += d_[j] * (lambda.c[j] + 1) * beta.n[j];
      den += d_[j] * beta.n[j];
    }
    prod *= mpq_class(num, den);
  }
  prod.canonicalize();
  require(prod.get_den() == 1, "Weyl dimension is not an integer");
  require(prod.get_num().fits_slong_p(), "Weyl dimension overflow");
  return prod.get_num().get_si();
}

unsigned long long CartanDatum::pbw_count(const RootVector& g) const {
  check_rank(g.rank(), "pbw_count");
  require(g.is_nonneg(), "pbw_count requires gamma in Q+");
  const auto roots = positive_roots();
  // Count multisets of positive roots summing to g by DP over roots.
  std::map<RootVector, unsigned long long> ways;
  ways[RootVector(rank())] = 1;
  for (const auto& beta : roots) {
    std::map<RootVector, unsigned long long> next;
    for (const auto& [v, w] : ways) {
      RootVector cur = v;
      while (true) {
        bool inside = true;
        for (size_t j = 0; j < rank(); ++j)
          if (cur.n[j] > g.n[j]) {
            inside = false;
            break;
          }
        if (!inside) break;
        next[cur] += w;
        cur = cur + beta;
      }
    }
    ways = std::move(next);
  }
  auto it = ways.find(g);
  return it == ways.end() ? 0ULL : it->second;
}

long CartanDatum::braid_order(size_t i, size_t j) const {
  require(i < rank() && j < rank() && i != j, "braid_order needs i != j");
  switch (a_[i][j] * a_[j][i]) {
    case 0:
      return 2;
    case 1:
      return 3;
    case 2:
      return 4;
    case 3:
      return 6;
    default:
      fail("braid order is infinite");
  }
}

std::vector<RootVector> CartanDatum::pbw_roots(
    const std::vector<size_t>& word) const {
  std::vector<RootVector> betas;
  for (size_t k = 0; k < word.size(); ++k) {
    require(word[k] < rank(), "generator index out of range");
    RootVector b = alpha(word[k]);
    for (size_t m = k; m-- > 0;) b = reflect(word[m], b);
    betas.push_back(b);
  }
  return betas;
}

std::string CartanDatum::describe() const {
  std::ostringstream out;
  out << name_ << ": rank " << rank() << ", d = (";
  for (size_t i = 0; i < rank(); ++i) {
    if (i) out << ",";
    out << d_[i];
  }
  out << ")";
  return out.str();
}

}  // namespace qpair
