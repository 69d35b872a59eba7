#pragma once

// Hilbert series of the super-coinvariant quotient: from standard monomials,
// from closed formulas, and from an independent differential-kernel oracle.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qscov/caps.hpp"
#include "qscov/groebner.hpp"
#include "qscov/linalg.hpp"
#include "qscov/paths.hpp"
#include "qscov/qsym.hpp"

namespace qscov {

enum class IdealKind { quasi, classical };

/// Coefficient of t^k at index k; trailing zeros trimmed.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  explicit HilbertSeries(std::vector<std::uint64_t> coefficients) : c_(std::move(coefficients)) { trim(); }

  const std::vector<std::uint64_t>& coefficients() const { return c_; }
  std::uint64_t coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
  std::uint64_t at_one() const {
    std::uint64_t s = 0;
    for (auto x : c_) s += x;
    return s;
  }

  friend HilbertSeries operator*(const HilbertSeries& a, const HilbertSeries& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return HilbertSeries(std::move(r));
  }

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<std::uint64_t> c_;
};

/// "1 + 2t + 2t^2 + 2t^3 + t^4"
inline std::string to_string(const HilbertSeries& h) {
  std::string s;
  for (std::size_t k = 0; k < h.coefficients().size(); ++k) {
    std::uint64_t c = h.coefficients()[k];
    if (!c) continue;
    if (!s.empty()) s += " + ";
    if (k == 0) {
      s += std::to_string(c);
      continue;
    }
    if (c != 1) s += std::to_string(c);
    s += "t";
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

/// Degree histogram of a list of exponent vectors.
inline HilbertSeries series_from_vectors(const std::vector<ExponentVector>& vs) {
  std::vector<std::uint64_t> c;
  for (const auto& v : vs) {
    unsigned d = v.degree();
    if (c.size() <= d) c.resize(d + 1, 0);
    ++c[d];
  }
  return HilbertSeries(std::move(c));
}

inline HilbertSeries series_from_monomials(const StandardMonomialSet& s) {
  if (!s.complete) throw std::domain_error("series_from_monomials: standard monomial set is not complete");
  return series_from_vectors(s.monomials);
}

/// sum_{k<n} (n-k)/(n+k) binom(n+k, k) t^k
inline HilbertSeries F_n_closed(unsigned n) {
  if (n == 0) throw std::domain_error("F_n_closed: n must be positive");
  std::vector<std::uint64_t> c(n);
  for (unsigned k = 0; k < n; ++k) {
    Integer v = detail::binomial(n + k, k) * (n - k);
    if (!mpz_divisible_ui_p(v.get_mpz_t(), n + k)) throw std::logic_error("F_n_closed: inexact coefficient");
    v /= n + k;
    if (!v.fits_ulong_p()) throw std::overflow_error("F_n_closed: coefficient exceeds 64 bits");
    c[k] = v.get_ui();
  }
  return HilbertSeries(std::move(c));
}

namespace detail {
// 1 + t + ... + t^{m-1} = (1 - t^m)/(1 - t)
inline HilbertSeries geometric_block(unsigned m) { return HilbertSeries(std::vector<std::uint64_t>(m, 1)); }

inline HilbertSeries substitute_t_power(const HilbertSeries& h, unsigned m) {
  std::vector<std::uint64_t> c(h.coefficients().empty() ? 0 : (h.coefficients().size() - 1) * m + 1, 0);
  for (std::size_t k = 0; k < h.coefficients().size(); ++k) c[k * m] = h.coefficients()[k];
  return HilbertSeries(std::move(c));
}
}  // namespace detail

/// ((1 - t^m)/(1 - t))^n * F_n(t^m): the series forced by the monomial basis m*eta + alpha.
inline HilbertSeries F_nm_closed(unsigned n, unsigned m) {
  if (n == 0 || m == 0) throw std::domain_error("F_nm_closed: n and m must be positive");
  HilbertSeries h = detail::substitute_t_power(F_n_closed(n), m);
  for (unsigned i = 0; i < n; ++i) h = h * detail::geometric_block(m);
  return h;
}

/// (1 - t^m)/(1 - t) * F_n(t^m), the prefactor taken to the first power only.
/// Kept for comparison; its value at t = 1 is m * C_n.
inline HilbertSeries F_nm_single_prefactor(unsigned n, unsigned m) {
  if (n == 0 || m == 0) throw std::domain_error("F_nm_single_prefactor: n and m must be positive");
  return detail::substitute_t_power(F_n_closed(n), m) * detail::geometric_block(m);
}

/// Generators of the ideal used by the kernel oracle, restricted to degree <= k.
inline std::vector<RationalPolynomial> ideal_generators(std::size_t n, unsigned m, unsigned k, IdealKind kind) {
  if (kind == IdealKind::quasi) return quasi_invariant_generators(n, m, k);
  std::vector<RationalPolynomial> out;
  for (std::size_t j = 1; j <= n && m * j <= k; ++j) out.push_back(elementary_symmetric_power(j, n, m));
  return out;
}

/// Dimension of { P homogeneous of degree k : (X^mu g)(d/dX) P = 0 for all generators g
/// and monomials X^mu with deg(X^mu g) = k }, by exact rank over Q. On degree-k
/// polynomials the functional P -> (X^mu g)(d/dX) P has coefficient [X^nu](X^mu g) * nu!
/// at column X^nu.
inline std::size_t coinvariant_kernel_dim(std::size_t n, unsigned m, unsigned k, IdealKind kind,
                                          const Caps& caps = {}) {
  if (m == 0) throw std::domain_error("coinvariant_kernel_dim: m must be positive");
  const auto columns = monomials_of_degree(n, k);
  const auto gens = ideal_generators(n, m, k, kind);

  std::uint64_t row_count = 0;
  for (const auto& g : gens) row_count += monomials_of_degree(n, k - g.total_degree()).size();
  caps.check_matrix(row_count, columns.size(), "coinvariant_kernel_dim");

  std::map<ExponentVector, std::size_t, LexGreater> index;
  std::vector<Integer> factorial(columns.size(), 1);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    index.emplace(columns[j], j);
    for (unsigned x : columns[j])
      for (unsigned t = 2; t <= x; ++t) factorial[j] *= t;
  }

  RowEchelon<Rational> ech(columns.size(), Rational(0));
  for (const auto& g : gens) {
    for (const auto& mu : monomials_of_degree(n, k - g.total_degree())) {
      if (ech.full()) break;
      std::vector<Rational> row(columns.size(), Rational(0));
      for (const auto& [e, c] : g.terms()) {
        std::size_t j = index.at(e + mu);
        row[j] = c * factorial[j];
      }
      ech.insert(std::move(row));
    }
  }
  return columns.size() - ech.rank();
}

/// Graded dimensions from the kernel oracle, degree by degree, up to the first
/// empty degree (after which every degree is empty since the ideal is homogeneous).
inline HilbertSeries coinvariant_kernel_series(std::size_t n, unsigned m, IdealKind kind, const Caps& caps = {},
                                               unsigned max_degree = 64) {
  std::vector<std::uint64_t> c;
  for (unsigned k = 0; k <= max_degree; ++k) {
    std::size_t d = coinvariant_kernel_dim(n, m, k, kind, caps);
    if (d == 0) return HilbertSeries(std::move(c));
    c.push_back(d);
  }
  throw resource_error("coinvariant_kernel_series: no empty degree found up to " + std::to_string(max_degree));
}

}  // namespace qscov
