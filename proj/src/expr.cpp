#include "qpair/expr.hpp"

#include <cctype>
#include <sstream>

namespace qpair {

namespace {

class Parser {
public:
  Parser(const Algebra& algebra, const std::string& text)
      : a_(algebra), s_(text) {}

  Element run() {
    Element x = expr();
    skip_ws();
    require(pos_ == s_.size(), err("unexpected trailing input"));
    return x;
  }

private:
  std::string err(const std::string& what) const {
    std::ostringstream out;
    out << "parse error at offset " << pos_ << ": " << what;
    return out.str();
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    require(eat(c), err(std::string("expected '") + c + "'"));
  }

  long integer() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    require(pos_ > digits, err("expected an integer"));
    return std::stol(s_.substr(start, pos_ - start));
  }

  unsigned long uinteger() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    require(pos_ > start, err("expected a number"));
    return std::stoul(s_.substr(start, pos_ - start));
  }

  size_t gen_index() {
    unsigned long v = uinteger();
    require(v >= 1 && v <= a_.rank(), err("generator index out of range"));
    return static_cast<size_t>(v - 1);
  }

  bool at_atom_start() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == 'e' || c == 'f' || c == 'k' || c == 'q' || c == '(' ||
           std::isdigit(static_cast<unsigned char>(c));
  }

  // atom, remembering whether it was a bare e/f letter (for divided powers)
  struct Atom {
    Element value;
    int letter = 0;  // 0 none, +1 e, -1 f
    size_t idx = 0;
  };

  Atom atom() {
    skip_ws();
    require(pos_ < s_.size(), err("unexpected end of input"));
    const char c = s_[pos_];
    if (c == 'e') {
      ++pos_;
      size_t i = gen_index();
      return {a_.gen_e(i), +1, i};
    }
    if (c == 'f') {
      ++pos_;
      size_t i = gen_index();
      return {a_.gen_f(i), -1, i};
    }
    if (c == 'k') {
      ++pos_;
      expect('[');
      RootVector g(a_.rank());
      for (size_t i = 0; i < a_.rank(); ++i) {
        if (i) expect(',');
        g.n[i] = integer();
      }
      expect(']');
      return {a_.gen_k(g), 0, 0};
    }
    if (c == 'q') {
      ++pos_;
      expect('[');
      long e = integer();
      expect(']');
      return {a_.unit().scaled(Scalar::q_power(e)), 0, 0};
    }
    if (c == '(') {
      ++pos_;
      Element x = expr();
      expect(')');
      return {x, 0, 0};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      unsigned long v = uinteger();
      return {a_.unit().scaled(Scalar(static_cast<long>(v))), 0, 0};
    }
    fail(err("expected an atom"));
  }

  Element factor() {
    Atom at = atom();
    if (!eat('^')) return at.value;
    if (eat('(')) {
      long r = integer();
      expect(')');
      require(r >= 0, err("divided power needs a nonnegative exponent"));
      require(at.letter != 0, err("divided power applies to e<i> or f<i>"));
      return at.letter > 0 ? a_.divided_power_e(at.idx, r)
                           : a_.divided_power_f(at.idx, r);
    }
    long n = integer();
    require(n >= 0, err("power needs a nonnegative exponent"));
    return a_.power(at.value, n);
  }

  Element term() {
    Element x = factor();
    while (true) {
      if (eat('/')) {
        Element d = factor();
        // Division only by invertible scalars (multiples of the unit).
        Scalar c(0);
        bool scalar_only = true;
        for (const auto& [m, v] : d.terms()) {
          if (!m.is_unit()) {
            scalar_only = false;
            break;
          }
          c = v;
        }
        require(scalar_only && !c.is_zero(),
                err("division is only defined by nonzero scalars"));
        x = x.scaled(c.inverse());
      } else if (at_atom_start()) {
        x = a_.multiply(x, factor());
      } else {
        break;
      }
    }
    return x;
  }

  Element expr() {
    bool neg = false;
    skip_ws();
    if (eat('-')) neg = true;
    Element x = term();
    if (neg) x = -x;
    while (true) {
      if (eat('+'))
        x += term();
      else if (eat('-'))
        x -= term();
      else
        break;
    }
    return x;
  }

  const Algebra& a_;
  const std::string& s_;
  size_t pos_ = 0;
};

void render_mono_word(std::ostream& out, const TriMono& m) {
  for (int j : m.f) out << " f" << (j + 1);
  if (!m.k.is_zero()) {
    out << " k[";
    for (size_t i = 0; i < m.k.rank(); ++i) {
      if (i) out << ",";
      out << m.k.n[i];
    }
    out << "]";
  }
  for (int i : m.e) out << " e" << (i + 1);
}

}  // namespace

Element parse_element(const Algebra& algebra, const std::string& text) {
  return Parser(algebra, text).run();
}

std::string render_scalar(const Scalar& s) { return s.str(); }

std::string render_element(const Element& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    if (!first) out << " + ";
    first = false;
    out << c.str();
    render_mono_word(out, m);
  }
  return out.str();
}

std::string render_tensor(const Tensor& t) {
  if (t.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : t.terms()) {
    if (!first) out << " + ";
    first = false;
    out << c.str();
    for (size_t s = 0; s < key.size(); ++s) {
      if (s) out << " (x)";
      std::ostringstream slot;
      render_mono_word(slot, key[s]);
      out << (slot.str().empty() ? " 1" : slot.str());
    }
  }
  return out.str();
}

}  // namespace qpair
