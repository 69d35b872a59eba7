#pragma once

// North/east lattice paths attached to exponent vectors, Dyck classification,
// and the monomial basis of the super-coinvariant quotient.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qscov/polynomial.hpp"
#include "qscov/qsym.hpp"

namespace qscov {

enum class Step : char { east = 'E', north = 'N' };

struct LatticePath {
  std::vector<Step> steps;

  std::size_t north_steps() const { return std::count(steps.begin(), steps.end(), Step::north); }
  std::size_t east_steps() const { return std::count(steps.begin(), steps.end(), Step::east); }

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

enum class PathClass { dyck, transdiagonal };

inline std::string to_string(const LatticePath& p) {
  std::string s;
  s.reserve(p.steps.size());
  for (Step st : p.steps) s.push_back(static_cast<char>(st));
  return s;
}

inline std::string to_string(PathClass c) { return c == PathClass::dyck ? "Dyck" : "Transdiagonal"; }

/// E^{nu_1} N E^{nu_2} N ... E^{nu_n} N
inline LatticePath vector_to_path(const ExponentVector& v) {
  LatticePath p;
  for (unsigned x : v) {
    p.steps.insert(p.steps.end(), x, Step::east);
    p.steps.push_back(Step::north);
  }
  return p;
}

/// Dyck iff nu_1 + ... + nu_i <= i - 1 for every i (the path may touch the diagonal).
inline bool is_dyck(const ExponentVector& v) {
  std::uint64_t partial = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    partial += v[i];
    if (partial > i) return false;
  }
  return true;
}

inline PathClass classify(const ExponentVector& v) { return is_dyck(v) ? PathClass::dyck : PathClass::transdiagonal; }

/// All Dyck vectors of length n, ascending degree then ascending lex.
inline std::vector<ExponentVector> enumerate_dyck(std::size_t n) {
  std::vector<ExponentVector> out;
  ExponentVector cur(n);
  auto rec = [&](auto&& self, std::size_t pos, unsigned partial) -> void {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (unsigned x = 0; partial + x <= pos; ++x) {
      cur[pos] = x;
      self(self, pos + 1, partial + x);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

/// C_n = binom(2n, n) / (n + 1)
inline std::uint64_t catalan(unsigned n) {
  Integer c = detail::binomial(2ul * n, n) / (n + 1);
  if (!c.fits_ulong_p()) throw std::overflow_error("catalan: value exceeds 64 bits");
  return c.get_ui();
}

/// { m*eta + alpha : eta Dyck, 0 <= alpha_i < m }, ascending degree then ascending lex.
inline std::vector<ExponentVector> basis_Bnm(std::size_t n, unsigned m) {
  if (m == 0) throw std::domain_error("basis_Bnm: m must be positive");
  std::vector<ExponentVector> out;
  for (const auto& eta : enumerate_dyck(n)) {
    ExponentVector v = m * eta;
    std::vector<unsigned> alpha(n, 0);
    while (true) {
      ExponentVector w = v;
      for (std::size_t i = 0; i < n; ++i) w[i] += alpha[i];
      out.push_back(std::move(w));
      std::size_t i = n;
      while (i > 0 && alpha[i - 1] + 1 == m) alpha[--i] = 0;
      if (i == 0) break;
      ++alpha[i - 1];
    }
  }
  std::sort(out.begin(), out.end(), GradedLexLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Transdiagonal vectors of degree <= max_deg none of whose proper divisors is
/// transdiagonal. Such a vector vanishes after its first violating prefix i and
/// has prefix sum exactly i there, so its degree never exceeds n.
inline std::vector<ExponentVector> minimal_transdiagonal(std::size_t n, unsigned max_deg) {
  std::vector<ExponentVector> out;
  unsigned top = static_cast<unsigned>(std::min<std::size_t>(max_deg, n));
  for (unsigned d = 1; d <= top; ++d) {
    for (const auto& v : monomials_of_degree(n, d)) {
      if (is_dyck(v)) continue;
      bool minimal = true;
      for (std::size_t i = 0; i < n && minimal; ++i) {
        if (!v[i]) continue;
        ExponentVector w = v;
        --w[i];
        if (!is_dyck(w)) minimal = false;
      }
      if (minimal) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end(), LexGreater{});
  return out;
}

}  // namespace qscov
