#pragma once

// The generalized symmetric group G(n,m) = C_m wr S_n acting on Q(zeta_m)[x1..xn],
// by the classical substitution action and by the quasi-symmetrizing action.
//
// Matrix convention: row i of g holds zeta^{a_i} in column tau(i). The
// classical action substitutes x_j <- zeta^{a_j} x_{tau(j)}, i.e. component j
// of X * transpose(g).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qscov/caps.hpp"
#include "qscov/linalg.hpp"
#include "qscov/polynomial.hpp"

namespace qscov {

enum class Action { classical, quasi };

class GroupElement {
 public:
  /// tau holds 0-based images; weights are exponents of zeta reduced mod m.
  GroupElement(unsigned m, std::vector<unsigned> tau, std::vector<unsigned> weights)
      : m_(m), tau_(std::move(tau)), weights_(std::move(weights)) {
    if (m_ == 0) throw std::domain_error("GroupElement: m must be positive");
    if (weights_.size() != tau_.size()) throw std::domain_error("GroupElement: tau/weights length mismatch");
    std::vector<bool> seen(tau_.size(), false);
    for (unsigned t : tau_) {
      if (t >= tau_.size() || seen[t]) throw std::domain_error("GroupElement: tau is not a permutation");
      seen[t] = true;
    }
    for (auto& a : weights_) a %= m_;
  }

  static GroupElement identity(std::size_t n, unsigned m) {
    std::vector<unsigned> tau(n);
    std::iota(tau.begin(), tau.end(), 0u);
    return GroupElement(m, std::move(tau), std::vector<unsigned>(n, 0));
  }

  /// Diagonal element with zeta in row j (0-based) and 1 elsewhere.
  static GroupElement diagonal_generator(std::size_t n, unsigned m, std::size_t j) {
    auto g = identity(n, m);
    if (j >= n) throw std::domain_error("diagonal_generator: index out of range");
    g.weights_[j] = 1 % m;
    return g;
  }

  /// Adjacent transposition swapping i and i+1 (0-based), zero weights.
  static GroupElement transposition(std::size_t n, unsigned m, std::size_t i) {
    auto g = identity(n, m);
    if (i + 1 >= n) throw std::domain_error("transposition: index out of range");
    std::swap(g.tau_[i], g.tau_[i + 1]);
    return g;
  }

  std::size_t n() const { return tau_.size(); }
  unsigned m() const { return m_; }
  const std::vector<unsigned>& tau() const { return tau_; }
  const std::vector<unsigned>& weights() const { return weights_; }

  /// Exponent of zeta in w(g), the product of all nonzero matrix entries.
  unsigned weight_exponent() const {
    std::uint64_t s = 0;
    for (auto a : weights_) s += a;
    return static_cast<unsigned>(s % m_);
  }
  Cyclotomic weight() const { return root_of_unity_power(m_, weight_exponent()); }

  /// Matrix entry (row, col) as an exponent of zeta, or -1 for a zero entry.
  int entry_exponent(std::size_t row, std::size_t col) const {
    return tau_.at(row) == col ? static_cast<int>(weights_[row]) : -1;
  }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  unsigned m_;
  std::vector<unsigned> tau_;
  std::vector<unsigned> weights_;
};

/// Product gh, defined so that (gh) acts as g after h for both actions.
/// In the matrix convention above this is the matrix product matrix(h) * matrix(g).
inline GroupElement group_mul(const GroupElement& g, const GroupElement& h) {
  if (g.n() != h.n() || g.m() != h.m()) throw std::domain_error("group_mul: parameter mismatch");
  std::vector<unsigned> tau(g.n()), weights(g.n());
  for (std::size_t j = 0; j < g.n(); ++j) {
    tau[j] = g.tau()[h.tau()[j]];
    weights[j] = (h.weights()[j] + g.weights()[h.tau()[j]]) % g.m();
  }
  return GroupElement(g.m(), std::move(tau), std::move(weights));
}

/// All m^n n! elements: permutations in lex order, then weight vectors in lex order.
inline std::vector<GroupElement> enumerate_group(std::size_t n, unsigned m, const Caps& caps = {}) {
  if (m == 0) throw std::domain_error("enumerate_group: m must be positive");
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (order > caps.max_group_order) break;
    order *= static_cast<std::uint64_t>(m) * (i + 1);
  }
  if (order > caps.max_group_order)
    throw resource_error("enumerate_group: order exceeds the cap of " + std::to_string(caps.max_group_order));
  std::vector<GroupElement> out;
  out.reserve(order);
  std::vector<unsigned> tau(n);
  std::iota(tau.begin(), tau.end(), 0u);
  do {
    std::vector<unsigned> w(n, 0);
    while (true) {
      out.emplace_back(m, tau, w);
      std::size_t i = n;
      while (i > 0 && w[i - 1] + 1 == m) w[--i] = 0;
      if (i == 0) break;
      ++w[i - 1];
    }
  } while (std::next_permutation(tau.begin(), tau.end()));
  return out;
}

/// Generators used for invariance tests: s_1..s_{n-1} and the diagonal element at row 1.
inline std::vector<GroupElement> group_generators(std::size_t n, unsigned m) {
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) gens.push_back(GroupElement::transposition(n, m, i));
  if (n > 0) gens.push_back(GroupElement::diagonal_generator(n, m, 0));
  return gens;
}

/// "tau=3,1,2;weights=1,0,1" (1-based images, zeta exponents)
inline std::string to_string(const GroupElement& g) {
  std::string s = "tau=";
  for (std::size_t i = 0; i < g.n(); ++i) s += (i ? "," : "") + std::to_string(g.tau()[i] + 1);
  s += ";weights=";
  for (std::size_t i = 0; i < g.n(); ++i) s += (i ? "," : "") + std::to_string(g.weights()[i]);
  return s;
}

inline GroupElement parse_group_element(std::string_view text, unsigned m) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto fail = [&] { return std::invalid_argument("malformed group element: '" + std::string(text) + "'"); };
  auto semi = s.find(';');
  if (semi == std::string::npos || s.rfind("tau=", 0) != 0 || s.compare(semi + 1, 8, "weights=") != 0) throw fail();
  auto list = [&](const std::string& body) {
    std::vector<unsigned> v;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) throw fail();
      v.push_back(static_cast<unsigned>(std::stoul(tok)));
    }
    if (!body.empty() && body.back() == ',') throw fail();
    return v;
  };
  auto tau = list(s.substr(4, semi - 4));
  auto weights = list(s.substr(semi + 9));
  for (auto& t : tau) {
    if (t == 0) throw fail();
    --t;
  }
  for (auto a : weights)
    if (a >= m) throw fail();
  return GroupElement(m, std::move(tau), std::move(weights));
}

namespace detail {
inline void check_action_dims(const GroupElement& g, std::size_t nvars, unsigned order) {
  if (g.n() != nvars) throw std::domain_error("group action: variable count differs from n");
  if (g.m() != order) throw std::domain_error("group action: cyclotomic order differs from m");
}
}  // namespace detail

/// Image of the monomial X^e under the classical action: (exponent, zeta exponent).
inline std::pair<ExponentVector, unsigned> classical_image(const GroupElement& g, const ExponentVector& e) {
  ExponentVector out(e.size());
  std::uint64_t zeta = 0;
  for (std::size_t j = 0; j < e.size(); ++j) {
    out[g.tau()[j]] += e[j];
    zeta += static_cast<std::uint64_t>(g.weights()[j]) * e[j];
  }
  return {out, static_cast<unsigned>(zeta % g.m())};
}

/// Image of X^e under the quasi-symmetrizing action: the support is moved by tau,
/// re-sorted, and the exponent list re-attached in variable order; the scalar is
/// w(g) unless every exponent is divisible by m.
inline std::pair<ExponentVector, unsigned> quasi_image(const GroupElement& g, const ExponentVector& e) {
  std::vector<unsigned> image_support;
  std::vector<unsigned> exponents;
  bool all_divisible = true;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (!e[j]) continue;
    image_support.push_back(g.tau()[j]);
    exponents.push_back(e[j]);
    if (e[j] % g.m()) all_divisible = false;
  }
  std::sort(image_support.begin(), image_support.end());
  ExponentVector out(e.size());
  for (std::size_t k = 0; k < exponents.size(); ++k) out[image_support[k]] = exponents[k];
  return {out, all_divisible ? 0u : g.weight_exponent()};
}

inline std::pair<ExponentVector, unsigned> act_on_monomial(Action action, const GroupElement& g,
                                                           const ExponentVector& e) {
  return action == Action::quasi ? quasi_image(g, e) : classical_image(g, e);
}

inline CyclotomicPolynomial act(Action action, const GroupElement& g, const CyclotomicPolynomial& p) {
  detail::check_action_dims(g, p.nvars(), p.zero_coeff().order());
  CyclotomicPolynomial r(p.nvars(), p.zero_coeff());
  for (const auto& [e, c] : p.terms()) {
    auto [img, z] = act_on_monomial(action, g, e);
    r.add_term(img, z ? c * root_of_unity_power(g.m(), z) : c);
  }
  return r;
}

inline CyclotomicPolynomial act(Action action, const GroupElement& g, const RationalPolynomial& p) {
  return act(action, g, promote(p, g.m()));
}

template <class P>
CyclotomicPolynomial classical_act(const GroupElement& g, const P& p) {
  return act(Action::classical, g, p);
}

template <class P>
CyclotomicPolynomial quasi_act(const GroupElement& g, const P& p) {
  return act(Action::quasi, g, p);
}

/// Fixed by every generator (hence by the whole group) under the given action.
inline bool is_invariant(Action action, const CyclotomicPolynomial& p, std::size_t n, unsigned m) {
  if (p.nvars() != n) throw std::domain_error("is_invariant: variable count differs from n");
  for (const auto& g : group_generators(n, m))
    if (!(act(action, g, p) == p)) return false;
  return true;
}

inline bool is_invariant(Action action, const RationalPolynomial& p, std::size_t n, unsigned m) {
  return is_invariant(action, promote(p, m), n, m);
}

template <class P>
bool is_quasi_invariant(const P& p, std::size_t n, unsigned m) {
  return is_invariant(Action::quasi, p, n, m);
}

/// Dimension of the invariants in degree d: n_monomials minus the rank of the
/// stacked systems (g - 1) over the generators, computed exactly over Q(zeta_m).
inline std::size_t fixed_space_dimension(std::size_t n, unsigned m, unsigned degree, Action action,
                                         const Caps& caps = {}) {
  auto basis = monomials_of_degree(n, degree);
  auto gens = group_generators(n, m);
  caps.check_matrix(static_cast<std::uint64_t>(basis.size()) * std::max<std::size_t>(gens.size(), 1), basis.size(),
                    "fixed_space_dimension");
  std::map<ExponentVector, std::size_t, LexGreater> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

  const Cyclotomic zero = Cyclotomic::zero(m);
  const Cyclotomic one = zero.one_like();
  RowEchelon<Cyclotomic> ech(basis.size(), zero);
  for (const auto& g : gens) {
    // Column j of (g - 1) is g(X^{basis_j}) - X^{basis_j}; collect by output row.
    std::vector<std::vector<Cyclotomic>> rows(basis.size(), ech.zero_row());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto [img, z] = act_on_monomial(action, g, basis[j]);
      rows[index.at(img)][j] += root_of_unity_power(m, z);
      rows[j][j] -= one;
    }
    for (auto& r : rows) ech.insert(std::move(r));
  }
  return basis.size() - ech.rank();
}

}  // namespace qscov
