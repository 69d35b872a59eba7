#pragma once

// Sparse multivariate polynomials in x1..xn under the lexicographic order
// x1 > x2 > ... > xn, with exact coefficients (Rational or Cyclotomic).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qscov/scalar.hpp"

namespace qscov {

/// Exponents (nu_1, ..., nu_n) of the monomial x1^nu_1 ... xn^nu_n.
class ExponentVector {
 public:
  using value_type = unsigned;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  ExponentVector(std::initializer_list<unsigned> init) : e_(init) {}
  explicit ExponentVector(std::vector<unsigned> e) : e_(std::move(e)) {}

  std::size_t size() const { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned& operator[](std::size_t i) { return e_[i]; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  const std::vector<unsigned>& entries() const { return e_; }

  unsigned degree() const { return std::accumulate(e_.begin(), e_.end(), 0u); }

  /// X^this divides X^other.
  bool divides(const ExponentVector& other) const {
    check_len(other);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) {
    a.check_len(b);
    for (std::size_t i = 0; i < a.e_.size(); ++i) a.e_[i] += b.e_[i];
    return a;
  }

  /// Exponent of the quotient X^a / X^b; requires b | a.
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) {
    if (!b.divides(a)) throw std::domain_error("ExponentVector: subtraction of a non-divisor");
    for (std::size_t i = 0; i < a.e_.size(); ++i) a.e_[i] -= b.e_[i];
    return a;
  }

  friend ExponentVector lcm(ExponentVector a, const ExponentVector& b) {
    a.check_len(b);
    for (std::size_t i = 0; i < a.e_.size(); ++i) a.e_[i] = std::max(a.e_[i], b.e_[i]);
    return a;
  }

  friend ExponentVector operator*(unsigned k, ExponentVector a) {
    for (auto& x : a.e_) x *= k;
    return a;
  }

  bool coprime_with(const ExponentVector& other) const {
    check_len(other);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] && other.e_[i]) return false;
    return true;
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

  void check_len(const ExponentVector& other) const {
    if (e_.size() != other.e_.size()) throw std::domain_error("ExponentVector: length mismatch");
  }

 private:
  std::vector<unsigned> e_;
};

/// Lexicographic comparison: greater iff the first nonzero entry of a - b is positive.
inline std::strong_ordering lex_compare(const ExponentVector& a, const ExponentVector& b) {
  a.check_len(b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

struct LexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const { return lex_compare(a, b) > 0; }
};

/// Ascending degree, then ascending lex within a degree.
struct GradedLexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return lex_compare(a, b) < 0;
  }
};

/// "(2,1,0,3,0,1)"
inline std::string to_string(const ExponentVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

/// All exponent vectors of length n and total degree d, ascending lex.
inline std::vector<ExponentVector> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<ExponentVector> out;
  if (n == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  ExponentVector cur(n);
  // Fill positions left to right; iterating the first entry upward yields ascending lex.
  auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos + 1 == n) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      cur[pos] = k;
      self(self, pos + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

template <class Coeff>
class Polynomial {
 public:
  using coeff_type = Coeff;
  using TermMap = std::map<ExponentVector, Coeff, LexGreater>;

  explicit Polynomial(std::size_t nvars, Coeff zero = Coeff{}) : nvars_(nvars), zero_(std::move(zero)) {}

  static Polynomial constant(std::size_t nvars, const Coeff& c) {
    Polynomial p(nvars, zero_like(c));
    p.add_term(ExponentVector(nvars), c);
    return p;
  }

  static Polynomial monomial(const ExponentVector& e, const Coeff& c) {
    Polynomial p(e.size(), zero_like(c));
    p.add_term(e, c);
    return p;
  }

  /// The variable x_{i+1} (0-based index i).
  static Polynomial variable(std::size_t nvars, std::size_t i, const Coeff& one) {
    ExponentVector e(nvars);
    e[i] = 1;
    return monomial(e, one);
  }

  std::size_t nvars() const { return nvars_; }
  const Coeff& zero_coeff() const { return zero_; }
  Coeff one_coeff() const { return one_like(zero_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const ExponentVector& e, const Coeff& c) {
    if (e.size() != nvars_) throw std::domain_error("Polynomial: exponent length mismatch");
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  /// [X^e] P
  Coeff coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? zero_ : it->second;
  }

  std::pair<const ExponentVector&, const Coeff&> leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    const auto& [e, c] = *terms_.begin();
    return {e, c};
  }
  const ExponentVector& leading_monomial() const { return leading_term().first; }
  const Coeff& leading_coefficient() const { return leading_term().second; }

  unsigned total_degree() const {
    if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_compat(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_compat(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  /// this -= c * X^shift * o
  void sub_mul_term(const Coeff& c, const ExponentVector& shift, const Polynomial& o) {
    check_compat(o);
    for (const auto& [e, oc] : o.terms_) add_term(e + shift, -(c * oc));
  }

  Polynomial& operator*=(const Coeff& c) {
    if (is_zero_coeff(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& [e, v] : a.terms_) v = -v;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compat(b);
    Polynomial r(a.nvars_, a.zero_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend Polynomial operator*(Polynomial a, const Coeff& c) { return a *= c; }

  /// Multiply by the monomial c * X^shift.
  Polynomial mul_term(const ExponentVector& shift, const Coeff& c) const {
    Polynomial r(nvars_, zero_);
    if (is_zero_coeff(c)) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + shift, v * c);
    return r;
  }

  /// Scales so the leading coefficient is 1; the zero polynomial is returned unchanged.
  Polynomial monic() const {
    if (is_zero()) return *this;
    Polynomial r = *this;
    r *= inverse(leading_coefficient());
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  void check_compat(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::domain_error("Polynomial: variable count mismatch");
  }

 private:
  static bool is_zero_coeff(const Coeff& c) { return qscov::is_zero(c); }

  std::size_t nvars_;
  Coeff zero_;
  TermMap terms_;
};

using RationalPolynomial = Polynomial<Rational>;
using CyclotomicPolynomial = Polynomial<Cyclotomic>;

/// P(X^m): every exponent vector scaled by m.
template <class Coeff>
Polynomial<Coeff> substitute_power(const Polynomial<Coeff>& p, unsigned m) {
  if (m == 0) throw std::domain_error("substitute_power: m must be positive");
  Polynomial<Coeff> r(p.nvars(), p.zero_coeff());
  for (const auto& [e, c] : p.terms()) r.add_term(m * e, c);
  return r;
}

/// Embeds a rational polynomial into Q(zeta_m)[X].
inline CyclotomicPolynomial promote(const RationalPolynomial& p, unsigned m) {
  CyclotomicPolynomial r(p.nvars(), Cyclotomic::zero(m));
  for (const auto& [e, c] : p.terms()) r.add_term(e, Cyclotomic::from_rational(m, c));
  return r;
}

/// P(d/dx1, ..., d/dxn) applied to Q.
template <class Coeff>
Polynomial<Coeff> apply_diff(const Polynomial<Coeff>& p, const Polynomial<Coeff>& q) {
  p.check_compat(q);
  Polynomial<Coeff> r(q.nvars(), q.zero_coeff());
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) {
      if (!ep.divides(eq)) continue;
      Integer factor = 1;
      for (std::size_t i = 0; i < ep.size(); ++i)
        for (unsigned k = 0; k < ep[i]; ++k) factor *= eq[i] - k;
      Coeff c = cp * cq;
      c *= Rational(factor);
      r.add_term(eq - ep, c);
    }
  }
  return r;
}

/// <P, Q> = P(d/dX) Q evaluated at X = 0.
template <class Coeff>
Coeff scalar_product(const Polynomial<Coeff>& p, const Polynomial<Coeff>& q) {
  return apply_diff(p, q).coefficient(ExponentVector(q.nvars()));
}

namespace detail {

inline std::string monomial_text(const ExponentVector& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

// Appends one term; `first` selects leading-sign formatting.
inline void append_rational_term(std::string& out, const Rational& c, const std::string& mono, bool first) {
  Rational mag = abs(c);
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (mono.empty()) {
    out += mag.get_str();
  } else {
    if (mag != 1) out += mag.get_str() + "*";
    out += mono;
  }
}

inline void append_term(std::string& out, const Rational& c, const std::string& mono, bool first) {
  append_rational_term(out, c, mono, first);
}

inline void append_term(std::string& out, const Cyclotomic& c, const std::string& mono, bool first) {
  if (c.is_rational()) {
    append_rational_term(out, c.coeffs()[0], mono, first);
    return;
  }
  if (!first) out += " + ";
  out += to_string(c);
  if (!mono.empty()) out += "*" + mono;
}

inline Rational parse_coefficient(const Rational&, std::string_view text) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  return parse_rational(text);
}

inline Cyclotomic parse_coefficient(const Cyclotomic& zero, std::string_view text) {
  return parse_cyclotomic(zero.order(), text);
}

}  // namespace detail

/// Terms in descending lex order, e.g. "x1^2*x2 + x1^2*x3 - 1/2*x2^2*x3".
template <class Coeff>
std::string to_string(const Polynomial<Coeff>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    detail::append_term(out, c, detail::monomial_text(e), first);
    first = false;
  }
  return out;
}

/// Parses the rendering grammar of to_string; whitespace is ignored.
template <class Coeff>
Polynomial<Coeff> parse_polynomial(std::size_t nvars, std::string_view text, const Coeff& zero = Coeff{}) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto fail = [&](const std::string& why) {
    return std::invalid_argument("malformed polynomial '" + std::string(text) + "': " + why);
  };
  if (s.empty()) throw fail("empty input");
  Polynomial<Coeff> result(nvars, zero);
  const Coeff one = one_like(zero);

  // Split at top-level signs.
  std::vector<std::pair<bool, std::string>> terms;
  int depth = 0;
  std::size_t start = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    start = 1;
  }
  for (std::size_t i = start; i <= s.size(); ++i) {
    if (i < s.size()) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth < 0) throw fail("unbalanced parentheses");
    }
    bool split = i == s.size() || (depth == 0 && (s[i] == '+' || s[i] == '-') && i > start && s[i - 1] != '/' &&
                                   s[i - 1] != '^' && s[i - 1] != '*');
    if (!split) continue;
    if (i == start) throw fail("empty term");
    terms.emplace_back(neg, s.substr(start, i - start));
    if (i < s.size()) {
      neg = s[i] == '-';
      start = i + 1;
    }
  }
  if (depth != 0) throw fail("unbalanced parentheses");

  for (const auto& [negative, term] : terms) {
    Coeff c = one;
    ExponentVector e(nvars);
    // Split the term into '*'-separated factors, ignoring '*' inside parentheses.
    std::vector<std::string> factors;
    int d = 0;
    std::size_t fstart = 0;
    for (std::size_t i = 0; i <= term.size(); ++i) {
      if (i < term.size()) {
        if (term[i] == '(') ++d;
        if (term[i] == ')') --d;
      }
      if (i == term.size() || (d == 0 && term[i] == '*')) {
        if (i == fstart) throw fail("empty factor");
        factors.push_back(term.substr(fstart, i - fstart));
        fstart = i + 1;
      }
    }
    for (const auto& f : factors) {
      if (f[0] == 'x') {
        auto caret = f.find('^');
        std::string idx = f.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        std::string pow = caret == std::string::npos ? "1" : f.substr(caret + 1);
        auto all_digits = [](const std::string& t) {
          return !t.empty() && std::all_of(t.begin(), t.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
        };
        if (!all_digits(idx) || !all_digits(pow)) throw fail("bad variable factor '" + f + "'");
        unsigned long i = std::stoul(idx);
        if (i < 1 || i > nvars) throw fail("variable index out of range in '" + f + "'");
        e[i - 1] += static_cast<unsigned>(std::stoul(pow));
      } else {
        try {
          c *= detail::parse_coefficient(zero, f);
        } catch (const std::invalid_argument&) {
          throw fail("bad coefficient '" + f + "'");
        }
      }
    }
    result.add_term(e, negative ? -c : c);
  }
  return result;
}

}  // namespace qscov
