#pragma once

// Compositions and quasi-symmetric polynomials.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qscov/polynomial.hpp"

namespace qscov {

/// Ordered list of positive parts; the empty composition has size 0.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (unsigned p : parts_)
      if (p == 0) throw std::domain_error("Composition: parts must be positive");
  }
  Composition(std::initializer_list<unsigned> parts) : Composition(std::vector<unsigned>(parts)) {}

  const std::vector<unsigned>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  unsigned size() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }
  bool empty() const { return parts_.empty(); }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<unsigned> parts_;
};

inline std::string to_string(const Composition& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (i) s += ",";
    s += std::to_string(a.parts()[i]);
  }
  return s + ")";
}

inline Composition parse_composition(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw std::invalid_argument("malformed composition: '" + std::string(text) + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<unsigned> parts;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed composition: '" + std::string(text) + "'");
    parts.push_back(static_cast<unsigned>(std::stoul(tok)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
    if (pos == s.size()) throw std::invalid_argument("malformed composition: '" + std::string(text) + "'");
  }
  return Composition(std::move(parts));
}

/// Compositions of d with at most max_parts parts, in descending lex order.
inline std::vector<Composition> compositions_of(unsigned d, std::size_t max_parts) {
  std::vector<Composition> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned left) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    if (cur.size() == max_parts) return;
    for (unsigned first = left; first >= 1; --first) {
      cur.push_back(first);
      self(self, left - first);
      cur.pop_back();
    }
  };
  rec(rec, d);
  return out;
}

/// c(nu): the positive entries of nu, in order.
inline Composition vector_to_composition(const ExponentVector& v) {
  std::vector<unsigned> parts;
  for (unsigned x : v)
    if (x) parts.push_back(x);
  return Composition(std::move(parts));
}

/// M_alpha in n variables: sum over i1 < ... < ik of x_{i1}^{a1} ... x_{ik}^{ak}.
inline RationalPolynomial monomial_qsym(const Composition& alpha, std::size_t n) {
  if (alpha.length() > n) throw std::domain_error("monomial_qsym: composition longer than variable count");
  RationalPolynomial p(n);
  ExponentVector e(n);
  const auto& parts = alpha.parts();
  auto rec = [&](auto&& self, std::size_t part, std::size_t from) -> void {
    if (part == parts.size()) {
      p.add_term(e, Rational(1));
      return;
    }
    // Leave room for the remaining parts.
    for (std::size_t i = from; i + (parts.size() - part) <= n; ++i) {
      e[i] = parts[part];
      self(self, part + 1, i + 1);
      e[i] = 0;
    }
  };
  rec(rec, 0, 0);
  return p;
}

/// All compositions beta that refine alpha (alpha is obtained by merging adjacent parts of beta).
inline std::vector<Composition> refinements(const Composition& alpha) {
  std::vector<std::vector<unsigned>> acc{{}};
  for (unsigned part : alpha.parts()) {
    std::vector<std::vector<unsigned>> next;
    for (const auto& prefix : acc)
      for (const auto& piece : compositions_of(part, part)) {
        auto v = prefix;
        v.insert(v.end(), piece.parts().begin(), piece.parts().end());
        next.push_back(std::move(v));
      }
    acc = std::move(next);
  }
  std::vector<Composition> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.emplace_back(std::move(v));
  return out;
}

/// F_alpha = sum of M_beta over refinements beta of alpha with at most n parts.
inline RationalPolynomial fundamental_qsym(const Composition& alpha, std::size_t n) {
  if (alpha.length() > n) throw std::domain_error("fundamental_qsym: composition longer than variable count");
  RationalPolynomial p(n);
  for (const auto& beta : refinements(alpha))
    if (beta.length() <= n) p += monomial_qsym(beta, n);
  return p;
}

namespace detail {
inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}
}  // namespace detail

/// Coefficients are constant on each class of exponent vectors with equal c(nu).
template <class Coeff>
bool is_quasi_symmetric(const Polynomial<Coeff>& p) {
  struct ClassInfo {
    const Coeff* value;
    std::size_t count;
  };
  std::map<Composition, ClassInfo> classes;
  for (const auto& [e, c] : p.terms()) {
    auto comp = vector_to_composition(e);
    auto [it, inserted] = classes.try_emplace(comp, ClassInfo{&c, 0});
    if (!inserted && !(*it->second.value == c)) return false;
    ++it->second.count;
  }
  // Every vector with a present composition must carry a term.
  for (const auto& [comp, info] : classes)
    if (detail::binomial(p.nvars(), comp.length()) != info.count) return false;
  return true;
}

/// { M_alpha(X^m) : 1 <= m|alpha| <= max_deg, length(alpha) <= n }, ascending degree.
inline std::vector<RationalPolynomial> quasi_invariant_generators(std::size_t n, unsigned m, unsigned max_deg) {
  if (m == 0) throw std::domain_error("quasi_invariant_generators: m must be positive");
  std::vector<RationalPolynomial> out;
  for (unsigned d = 1; m * d <= max_deg; ++d)
    for (const auto& alpha : compositions_of(d, n)) out.push_back(substitute_power(monomial_qsym(alpha, n), m));
  return out;
}

/// e_k(x1^m, ..., xn^m)
inline RationalPolynomial elementary_symmetric_power(std::size_t k, std::size_t n, unsigned m) {
  if (k < 1 || k > n) throw std::domain_error("elementary_symmetric_power: k out of range");
  if (m == 0) throw std::domain_error("elementary_symmetric_power: m must be positive");
  return substitute_power(monomial_qsym(Composition(std::vector<unsigned>(k, 1)), n), m);
}

/// e_1(X^m), ..., e_n(X^m): generators of the classical invariant ideal.
inline std::vector<RationalPolynomial> classical_invariant_generators(std::size_t n, unsigned m) {
  std::vector<RationalPolynomial> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back(elementary_symmetric_power(k, n, m));
  return out;
}

}  // namespace qscov
