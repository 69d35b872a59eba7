#pragma once

// Degree-truncated Buchberger algorithm for homogeneous ideals of Q[x1..xn]
// under lex order, with reduced monic bases and standard monomials.
//
// For a homogeneous ideal, processing every generator and S-pair of degree
// <= D yields a basis whose leading monomials generate the initial ideal in
// all degrees <= D. Everything here is "valid through degree_bound" in that
// sense.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "qscov/paths.hpp"
#include "qscov/polynomial.hpp"
#include "qscov/qsym.hpp"

namespace qscov {

struct GroebnerBasis {
  std::size_t nvars = 0;
  std::vector<RationalPolynomial> generators;
  unsigned degree_bound = 0;
  bool reduced = false;

  std::vector<ExponentVector> leading_monomials() const {
    std::vector<ExponentVector> out;
    out.reserve(generators.size());
    for (const auto& g : generators) out.push_back(g.leading_monomial());
    return out;
  }

  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;
};

struct StandardMonomialSet {
  std::vector<ExponentVector> monomials;  // ascending degree, then ascending lex
  unsigned degree_bound = 0;
  bool complete = false;

  friend bool operator==(const StandardMonomialSet&, const StandardMonomialSet&) = default;
};

struct BuchbergerOptions {
  /// Randomizes the order of S-pairs of equal degree; the reduced basis must not depend on it.
  std::optional<std::uint64_t> shuffle_seed;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t pairs_beyond_bound = 0;
};

namespace detail {

inline const RationalPolynomial* find_reducer(const std::vector<const RationalPolynomial*>& reducers,
                                              const ExponentVector& e) {
  for (const auto* g : reducers)
    if (g->leading_monomial().divides(e)) return g;
  return nullptr;
}

/// Full reduction of p by monic reducers.
inline RationalPolynomial reduce_full(RationalPolynomial p, const std::vector<const RationalPolynomial*>& reducers) {
  RationalPolynomial r(p.nvars());
  while (!p.is_zero()) {
    auto it = p.terms().begin();
    const ExponentVector e = it->first;
    const Rational c = it->second;
    if (const auto* g = find_reducer(reducers, e)) {
      p.sub_mul_term(c / g->leading_coefficient(), e - g->leading_monomial(), *g);
    } else {
      r.add_term(e, c);
      p.add_term(e, -c);
    }
  }
  return r;
}

}  // namespace detail

/// Remainder of multivariate division of p by the basis; requires deg(p) <= degree_bound.
inline RationalPolynomial normal_form(const RationalPolynomial& p, const GroebnerBasis& basis) {
  if (p.nvars() != basis.nvars) throw std::domain_error("normal_form: variable count mismatch");
  if (!p.is_zero() && p.total_degree() > basis.degree_bound)
    throw std::domain_error("normal_form: degree " + std::to_string(p.total_degree()) + " exceeds the basis bound " +
                            std::to_string(basis.degree_bound));
  std::vector<const RationalPolynomial*> reducers;
  for (const auto& g : basis.generators) reducers.push_back(&g);
  return detail::reduce_full(p, reducers);
}

/// lcm/LT(f) * f - lcm/LT(g) * g
inline RationalPolynomial s_polynomial(const RationalPolynomial& f, const RationalPolynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("s_polynomial: zero input");
  f.check_compat(g);
  const auto [ef, cf] = f.leading_term();
  const auto [eg, cg] = g.leading_term();
  ExponentVector l = lcm(ef, eg);
  RationalPolynomial s = f.mul_term(l - ef, inverse(cf));
  s.sub_mul_term(inverse(cg), l - eg, g);
  return s;
}

/// Inter-reduces a basis into the unique reduced monic form, sorted by descending leading monomial.
inline GroebnerBasis reduce_basis(const GroebnerBasis& basis) {
  std::vector<RationalPolynomial> polys;
  for (const auto& g : basis.generators)
    if (!g.is_zero()) polys.push_back(g.monic());
  std::stable_sort(polys.begin(), polys.end(), [](const auto& a, const auto& b) {
    return GradedLexLess{}(a.leading_monomial(), b.leading_monomial());
  });
  // Keep only elements whose leading monomial is not divisible by an earlier kept one.
  std::vector<RationalPolynomial> minimal;
  for (auto& p : polys) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const auto& q) {
      return q.leading_monomial().divides(p.leading_monomial());
    });
    if (!redundant) minimal.push_back(std::move(p));
  }
  GroebnerBasis out{basis.nvars, {}, basis.degree_bound, true};
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const RationalPolynomial*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(&minimal[j]);
    out.generators.push_back(detail::reduce_full(minimal[i], others).monic());
  }
  std::sort(out.generators.begin(), out.generators.end(), [](const auto& a, const auto& b) {
    return LexGreater{}(a.leading_monomial(), b.leading_monomial());
  });
  return out;
}

/// Buchberger's algorithm with the normal selection strategy, the Gebauer-Moeller
/// pair criteria, and truncation at degree_bound. The returned basis is reduced.
inline GroebnerBasis buchberger(const std::vector<RationalPolynomial>& generators, unsigned degree_bound,
                                const BuchbergerOptions& options = {}, BuchbergerStats* stats = nullptr) {
  if (generators.empty()) throw std::domain_error("buchberger: no generators");
  const std::size_t n = generators.front().nvars();
  std::vector<RationalPolynomial> inputs;
  for (const auto& g : generators) {
    if (g.nvars() != n) throw std::domain_error("buchberger: variable count mismatch");
    if (!g.is_homogeneous()) throw std::domain_error("buchberger: non-homogeneous generator " + to_string(g));
    if (g.is_zero()) continue;
    if (g.total_degree() > degree_bound) throw std::domain_error("buchberger: generator degree exceeds the bound");
    inputs.push_back(g);
  }
  std::stable_sort(inputs.begin(), inputs.end(),
                   [](const auto& a, const auto& b) { return a.total_degree() < b.total_degree(); });

  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;

  struct Pair {
    std::size_t i, j;
    ExponentVector lcm;
    unsigned degree;
    std::uint64_t tie;
  };
  std::vector<RationalPolynomial> polys;  // every basis element ever added
  std::vector<bool> active;
  std::vector<Pair> pairs;
  std::mt19937_64 rng(options.shuffle_seed.value_or(0));

  auto lm = [&](std::size_t k) -> const ExponentVector& { return polys[k].leading_monomial(); };

  auto add = [&](RationalPolynomial h) {
    const std::size_t hi = polys.size();
    polys.push_back(std::move(h));
    active.push_back(true);
    const ExponentVector& lh = lm(hi);
    // Gebauer-Moeller: new pairs (h, g) surviving the chain criterion among themselves.
    std::vector<Pair> cand;
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g]) {
        ExponentVector l = lcm(lh, lm(g));
        unsigned d = l.degree();
        cand.push_back(Pair{g, hi, std::move(l), d, 0});
      }
    std::vector<bool> keep(cand.size(), true);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (lh.coprime_with(lm(cand[a].i))) continue;
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (cand[b].lcm.divides(cand[a].lcm) && (cand[b].lcm != cand[a].lcm || b < a)) {
          keep[a] = false;
          break;
        }
      }
    }
    std::vector<Pair> fresh;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!keep[a]) continue;
      if (lh.coprime_with(lm(cand[a].i))) continue;  // product criterion
      fresh.push_back(std::move(cand[a]));
    }
    // Old pairs made redundant by h.
    std::erase_if(pairs, [&](const Pair& p) {
      return lh.divides(p.lcm) && lcm(lm(p.i), lh) != p.lcm && lcm(lm(p.j), lh) != p.lcm;
    });
    for (auto& p : fresh) {
      p.tie = options.shuffle_seed ? rng() : 0;
      pairs.push_back(std::move(p));
    }
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g] && lh.divides(lm(g))) active[g] = false;
  };

  auto reducers = [&] {
    std::vector<const RationalPolynomial*> r;
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k]) r.push_back(&polys[k]);
    return r;
  };

  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (options.shuffle_seed) return std::tie(a.tie, a.i, a.j) < std::tie(b.tie, b.i, b.j);
    auto c = lex_compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };

  std::size_t next_input = 0;
  while (true) {
    auto best = std::min_element(pairs.begin(), pairs.end(), pair_less);
    const bool have_pair = best != pairs.end() && best->degree <= degree_bound;
    const bool have_input = next_input < inputs.size();
    if (!have_pair && !have_input) break;
    RationalPolynomial h(n);
    if (have_input && (!have_pair || inputs[next_input].total_degree() <= best->degree)) {
      h = detail::reduce_full(inputs[next_input++], reducers());
    } else {
      Pair p = *best;
      pairs.erase(best);
      ++st.pairs_considered;
      ++st.pairs_reduced;
      h = detail::reduce_full(s_polynomial(polys[p.i], polys[p.j]), reducers());
    }
    if (h.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    add(h.monic());
  }
  st.pairs_beyond_bound = pairs.size();

  GroebnerBasis basis{n, {}, degree_bound, false};
  for (std::size_t k = 0; k < polys.size(); ++k)
    if (active[k]) basis.generators.push_back(polys[k]);
  return reduce_basis(basis);
}

/// Self-test: every S-polynomial with lcm degree <= the bound reduces to zero.
inline bool satisfies_buchberger_criterion(const GroebnerBasis& basis) {
  for (std::size_t i = 0; i < basis.generators.size(); ++i)
    for (std::size_t j = i + 1; j < basis.generators.size(); ++j) {
      const auto& f = basis.generators[i];
      const auto& g = basis.generators[j];
      if (lcm(f.leading_monomial(), g.leading_monomial()).degree() > basis.degree_bound) continue;
      if (!normal_form(s_polynomial(f, g), basis).is_zero()) return false;
    }
  return true;
}

/// Monomials of degree <= through_degree divisible by no leading monomial of the basis.
inline StandardMonomialSet standard_monomials(const GroebnerBasis& basis, unsigned through_degree) {
  if (through_degree > basis.degree_bound)
    throw std::domain_error("standard_monomials: degree " + std::to_string(through_degree) +
                            " exceeds the basis bound " + std::to_string(basis.degree_bound));
  const auto lms = basis.leading_monomials();
  StandardMonomialSet out{{}, through_degree, false};
  bool top_empty = true;
  for (unsigned d = 0; d <= through_degree; ++d) {
    for (const auto& v : monomials_of_degree(basis.nvars, d)) {
      bool reducible = std::any_of(lms.begin(), lms.end(), [&](const auto& l) { return l.divides(v); });
      if (reducible) continue;
      out.monomials.push_back(v);
      if (d == through_degree) top_empty = false;
    }
  }
  out.complete = top_empty;
  return out;
}

/// G(S)^m: every element passed through X -> X^m; the bound scales by m.
inline GroebnerBasis substitute_basis_power(const GroebnerBasis& basis, unsigned m) {
  if (!basis.reduced) throw std::domain_error("substitute_basis_power: basis must be reduced");
  GroebnerBasis out{basis.nvars, {}, basis.degree_bound * m, true};
  for (const auto& g : basis.generators) out.generators.push_back(substitute_power(g, m));
  return out;
}

/// One above the top degree m(n-1) + (m-1)n of the expected quotient basis.
inline unsigned default_degree_bound(std::size_t n, unsigned m) {
  if (n == 0 || m == 0) throw std::domain_error("default_degree_bound: n and m must be positive");
  return static_cast<unsigned>(2 * m * n - m - n + 1);
}

/// Reduced basis of the ideal generated by quasi-invariants without constant term,
/// using every generator M_alpha(X^m) of degree <= degree_bound.
inline GroebnerBasis quasi_invariant_ideal_basis(std::size_t n, unsigned m, unsigned degree_bound,
                                                 const BuchbergerOptions& options = {}) {
  auto gens = quasi_invariant_generators(n, m, degree_bound);
  if (gens.empty()) return GroebnerBasis{n, {}, degree_bound, true};
  return buchberger(gens, degree_bound, options);
}

inline GroebnerBasis quasi_invariant_ideal_basis(std::size_t n, unsigned m) {
  return quasi_invariant_ideal_basis(n, m, default_degree_bound(n, m));
}

/// One above the top degree sum_k (mk - 1) of the classical coinvariant quotient.
inline unsigned classical_degree_bound(std::size_t n, unsigned m) {
  return static_cast<unsigned>(m * n * (n + 1) / 2 - n + 1);
}

inline GroebnerBasis classical_invariant_ideal_basis(std::size_t n, unsigned m) {
  return buchberger(classical_invariant_generators(n, m), classical_degree_bound(n, m));
}

}  // namespace qscov
