#pragma once

// Exact scalars: rationals (GMP-backed) and the cyclotomic field Q(zeta_m)
// represented modulo the m-th cyclotomic polynomial.

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qscov {

/// Raised when enumeration or matrix sizes exceed a configured cap.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Accepts "p" or "p/q" with an optional leading sign.
inline Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto valid_int = [](std::string_view t, bool allow_sign) {
    if (!t.empty() && allow_sign && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  return make_rational(Integer(num), Integer(den));
}

namespace detail {

// Dense univariate polynomials over Q, ascending powers, no trailing zeros.
using UPoly = std::vector<Rational>;

inline void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Returns {quotient, remainder}; divisor must be nonzero.
inline std::pair<UPoly, UPoly> upoly_divmod(UPoly a, const UPoly& b) {
  trim(a);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() < b.size()) return {{}, std::move(a)};
  UPoly q(a.size() - b.size() + 1);
  const Rational& lead = b.back();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (a[k] == 0) continue;
    Rational c = a[k] / lead;
    std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {std::move(q), std::move(a)};
}

inline unsigned euler_phi(unsigned m) {
  unsigned result = m;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace detail

/// Integer coefficients of the m-th cyclotomic polynomial, ascending powers.
inline std::vector<Integer> cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw std::domain_error("cyclotomic_polynomial: order must be positive");
  detail::UPoly num(m + 1);
  num[0] = -1;
  num[m] = 1;
  detail::UPoly den{Rational(1)};
  for (unsigned d = 1; d < m; ++d) {
    if (m % d) continue;
    auto phi_d = cyclotomic_polynomial(d);
    detail::UPoly as_q(phi_d.begin(), phi_d.end());
    den = detail::upoly_mul(den, as_q);
  }
  auto [q, r] = detail::upoly_divmod(num, den);
  if (!r.empty()) throw std::logic_error("cyclotomic_polynomial: inexact division");
  std::vector<Integer> out;
  out.reserve(q.size());
  for (const auto& c : q) {
    if (c.get_den() != 1) throw std::logic_error("cyclotomic_polynomial: non-integral coefficient");
    out.push_back(c.get_num());
  }
  return out;
}

/// Element of Q(zeta_m) in the power basis 1, z, ..., z^{phi(m)-1}.
class Cyclotomic {
 public:
  static Cyclotomic zero(unsigned m) { return Cyclotomic(make_modulus(m)); }

  static Cyclotomic from_rational(unsigned m, const Rational& r) {
    Cyclotomic c = zero(m);
    c.coeffs_[0] = r;
    return c;
  }

  /// Class of z^k, exponent taken mod m.
  static Cyclotomic root_of_unity_power(unsigned m, long long k) {
    Cyclotomic c = zero(m);
    long long e = k % static_cast<long long>(m);
    if (e < 0) e += m;
    return c.monomial(static_cast<unsigned>(e));
  }

  /// Builds from arbitrary-length coefficients (ascending powers of z), reducing mod Phi_m.
  static Cyclotomic from_coefficients(unsigned m, std::vector<Rational> coeffs) {
    Cyclotomic c = zero(m);
    c.assign_reduced(std::move(coeffs));
    return c;
  }

  unsigned order() const { return mod_->order; }
  std::size_t degree() const { return mod_->phi.size() - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  /// True when the element lies in Q (only the constant coordinate is nonzero).
  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  Cyclotomic zero_like() const { return Cyclotomic(mod_); }
  Cyclotomic one_like() const {
    Cyclotomic c(mod_);
    c.coeffs_[0] = 1;
    return c;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  Cyclotomic& operator*=(const Cyclotomic& o) {
    check_same(o);
    assign_reduced(detail::upoly_mul(trimmed(coeffs_), trimmed(o.coeffs_)));
    return *this;
  }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend Cyclotomic operator-(Cyclotomic a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  Cyclotomic& operator*=(const Rational& r) {
    for (auto& c : coeffs_) c *= r;
    return *this;
  }

  /// Multiplicative inverse via the extended Euclidean algorithm against Phi_m.
  Cyclotomic inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
    // Invariant: r0 = s0 * a (mod Phi), r1 = s1 * a (mod Phi).
    detail::UPoly r0 = mod_->phi, r1 = trimmed(coeffs_);
    detail::UPoly s0, s1{Rational(1)};
    while (!r1.empty()) {
      auto [q, r] = detail::upoly_divmod(r0, r1);
      detail::UPoly s = detail::upoly_mul(q, s1);
      s.resize(std::max(s.size(), s0.size()));
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = (i < s0.size() ? s0[i] : Rational(0)) - s[i];
      detail::trim(s);
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    // r0 is a nonzero constant because Phi_m is irreducible.
    if (r0.size() != 1) throw std::logic_error("Cyclotomic: gcd with modulus is not constant");
    Rational scale = 1 / r0[0];
    for (auto& c : s0) c *= scale;
    Cyclotomic out(mod_);
    out.assign_reduced(std::move(s0));
    return out;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.order() == b.order() && a.coeffs_ == b.coeffs_;
  }

  bool operator==(const Rational& r) const { return is_rational() && coeffs_[0] == r; }
  bool operator==(int r) const { return *this == Rational(r); }

 private:
  struct Modulus {
    unsigned order;
    detail::UPoly phi;  // monic, degree phi(order)
  };

  explicit Cyclotomic(std::shared_ptr<const Modulus> mod)
      : mod_(std::move(mod)), coeffs_(mod_->phi.size() - 1) {}

  static std::shared_ptr<const Modulus> make_modulus(unsigned m) {
    auto ints = cyclotomic_polynomial(m);
    return std::make_shared<const Modulus>(Modulus{m, detail::UPoly(ints.begin(), ints.end())});
  }

  static detail::UPoly trimmed(detail::UPoly p) {
    detail::trim(p);
    return p;
  }

  Cyclotomic monomial(unsigned e) const {
    detail::UPoly p(e + 1);
    p[e] = 1;
    Cyclotomic c(mod_);
    c.assign_reduced(std::move(p));
    return c;
  }

  void assign_reduced(detail::UPoly p) {
    auto rem = detail::upoly_divmod(std::move(p), mod_->phi).second;
    rem.resize(mod_->phi.size() - 1);
    coeffs_ = std::move(rem);
  }

  void check_same(const Cyclotomic& o) const {
    if (order() != o.order()) throw std::domain_error("Cyclotomic: order mismatch");
  }

  std::shared_ptr<const Modulus> mod_;
  std::vector<Rational> coeffs_;
};

inline Cyclotomic root_of_unity_power(unsigned m, long long k) {
  return Cyclotomic::root_of_unity_power(m, k);
}

/// Renders as a parenthesized polynomial in z, e.g. "(-1-z)", "(1/2*z^2)", "(0)".
inline std::string to_string(const Cyclotomic& c) {
  std::string out = "(";
  bool first = true;
  for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
    const Rational& a = c.coeffs()[i];
    if (a == 0) continue;
    Rational mag = abs(a);
    if (a < 0) out += "-";
    else if (!first) out += "+";
    if (i == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "z";
      if (i > 1) out += "^" + std::to_string(i);
    }
    first = false;
  }
  if (first) out += "0";
  return out + ")";
}

/// Parses the rendering grammar of to_string(Cyclotomic); parentheses are optional.
inline Cyclotomic parse_cyclotomic(unsigned m, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw std::invalid_argument("malformed cyclotomic: empty");
  auto fail = [&] { return std::invalid_argument("malformed cyclotomic: '" + std::string(text) + "'"); };
  std::vector<Rational> coeffs;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
      neg = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw fail();
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw fail();
    Rational coef = 1;
    unsigned power = 0;
    auto zpos = term.find('z');
    if (zpos == std::string::npos) {
      coef = parse_rational(term);
    } else {
      if (zpos > 0) {
        if (zpos < 2 || term[zpos - 1] != '*') throw fail();
        coef = parse_rational(term.substr(0, zpos - 1));
      }
      std::string rest = term.substr(zpos + 1);
      power = 1;
      if (!rest.empty()) {
        if (rest[0] != '^' || rest.size() < 2) throw fail();
        for (std::size_t i = 1; i < rest.size(); ++i)
          if (!std::isdigit(static_cast<unsigned char>(rest[i]))) throw fail();
        power = static_cast<unsigned>(std::stoul(rest.substr(1)));
      }
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += neg ? -coef : coef;
    pos = end;
  }
  return Cyclotomic::from_coefficients(m, std::move(coeffs));
}

// Uniform coefficient-domain helpers used by the polynomial templates.
inline bool is_zero(const Rational& r) { return r == 0; }
inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }
inline Rational inverse(const Rational& r) {
  if (r == 0) throw std::domain_error("Rational: inverse of zero");
  return 1 / r;
}
inline Cyclotomic inverse(const Cyclotomic& c) { return c.inverse(); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Cyclotomic one_like(const Cyclotomic& c) { return c.one_like(); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Cyclotomic zero_like(const Cyclotomic& c) { return c.zero_like(); }

}  // namespace qscov
