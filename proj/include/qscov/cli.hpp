#pragma once

// Command layer behind the qscov executable. Each command returns a Report
// that renders to text or to a JSON document of the form
//   {"n", "m", "command", "result", "checks": [{"name", "expected", "actual", "pass"}]}.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qscov/caps.hpp"
#include "qscov/group.hpp"
#include "qscov/groebner.hpp"
#include "qscov/hilbert.hpp"
#include "qscov/io.hpp"

namespace qscov::cli {

/// Bad flags or unparseable input; the executable exits with status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> v{"basis", "groebner", "dim", "act", "verify"};
  return v;
}
inline const std::vector<std::string>& methods() {
  static const std::vector<std::string> v{"groebner", "basis", "harmonic"};
  return v;
}
inline const std::vector<std::string>& suites() {
  static const std::vector<std::string> v{"propu", "ppp", "main", "hilbert", "chevalley", "action-axioms"};
  return v;
}

struct RunConfig {
  std::string command;
  std::size_t n = 0;
  unsigned m = 1;
  std::optional<unsigned> degree_bound;  // groebner, dim --method groebner, verify main/hilbert
  std::string method = "groebner";
  std::string action = "quasi";
  std::string element;
  std::string poly;
  std::string suite;
  bool json = false;
  Caps caps;
};

struct Check {
  std::string name;
  Json expected;
  Json actual;
  bool pass = false;
};

struct Report {
  std::string command;
  std::size_t n = 0;
  unsigned m = 1;
  Json result = Json::object();
  std::vector<Check> checks;
  std::vector<std::string> lines;  // text-mode body

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
  void expect(std::string name, Json expected, Json actual) {
    bool pass = expected == actual;
    checks.push_back({std::move(name), std::move(expected), std::move(actual), pass});
  }
};

namespace detail {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw resource_error("dimension exceeds 64 bits");
  return r;
}

/// m^n * C_n
inline std::uint64_t expected_scov_dim(std::size_t n, unsigned m) {
  std::uint64_t r = catalan(static_cast<unsigned>(n));
  for (std::size_t i = 0; i < n; ++i) r = checked_mul(r, m);
  return r;
}

/// m^n * n!
inline std::uint64_t expected_cov_dim(std::size_t n, unsigned m) {
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= n; ++i) r = checked_mul(r, checked_mul(m, i));
  return r;
}

// Listing B_{n,m} or its Groebner counterpart is refused beyond the matrix-entry cap.
inline void check_listing(std::size_t n, unsigned m, const Caps& caps) {
  std::uint64_t size = expected_scov_dim(n, m);
  if (size > caps.max_matrix_entries)
    throw resource_error("monomial listing of " + std::to_string(size) + " entries exceeds the cap of " +
                         std::to_string(caps.max_matrix_entries));
}

inline unsigned bound_for(const RunConfig& c) { return c.degree_bound.value_or(default_degree_bound(c.n, c.m)); }

inline std::vector<std::string> texts(const GroebnerBasis& b) {
  std::vector<std::string> out;
  for (const auto& g : b.generators) out.push_back(to_string(g));
  return out;
}

inline Report cmd_basis(const RunConfig& c) {
  Report r;
  check_listing(c.n, c.m, c.caps);
  auto b = basis_Bnm(c.n, c.m);
  auto h = series_from_vectors(b);
  r.result = Json{{"count", b.size()}, {"histogram", series_to_json(h)}, {"monomials", vectors_to_json(b)}};
  r.expect("count", expected_scov_dim(c.n, c.m), b.size());
  r.lines.push_back("count: " + std::to_string(b.size()));
  r.lines.push_back("hilbert series: " + to_string(h));
  for (const auto& v : b) r.lines.push_back("  " + to_string(v));
  return r;
}

inline Report cmd_groebner(const RunConfig& c) {
  Report r;
  check_listing(c.n, c.m, c.caps);
  unsigned bound = bound_for(c);
  auto gb = quasi_invariant_ideal_basis(c.n, c.m, bound);
  auto s = standard_monomials(gb, bound);
  Json series = s.complete ? series_to_json(series_from_monomials(s)) : Json(nullptr);
  r.result = Json{{"basis", basis_to_json(gb, c.m)},
                  {"leading_monomials", vectors_to_json(gb.leading_monomials())},
                  {"standard_monomials",
                   {{"count", s.monomials.size()}, {"complete", s.complete}, {"monomials", vectors_to_json(s.monomials)}}},
                  {"hilbert_series", series}};
  r.expect("buchberger_criterion", true, satisfies_buchberger_criterion(gb));
  r.expect("standard_monomials_complete", true, s.complete);
  r.expect("standard_monomial_count", expected_scov_dim(c.n, c.m), s.monomials.size());
  r.lines.push_back("degree bound: " + std::to_string(bound));
  r.lines.push_back("reduced basis (" + std::to_string(gb.generators.size()) + " elements):");
  for (const auto& g : gb.generators) r.lines.push_back("  " + to_string(g));
  r.lines.push_back("standard monomials: " + std::to_string(s.monomials.size()) + (s.complete ? "" : " (incomplete)"));
  if (s.complete) r.lines.push_back("hilbert series: " + to_string(series_from_monomials(s)));
  return r;
}

inline Report cmd_dim(const RunConfig& c) {
  Report r;
  std::uint64_t dim = 0;
  if (c.method == "groebner") {
    check_listing(c.n, c.m, c.caps);
    unsigned bound = bound_for(c);
    auto s = standard_monomials(quasi_invariant_ideal_basis(c.n, c.m, bound), bound);
    r.expect("standard_monomials_complete", true, s.complete);
    dim = s.monomials.size();
  } else if (c.method == "basis") {
    check_listing(c.n, c.m, c.caps);
    dim = basis_Bnm(c.n, c.m).size();
  } else if (c.method == "harmonic") {
    dim = coinvariant_kernel_series(c.n, c.m, IdealKind::quasi, c.caps).at_one();
  } else {
    throw UsageError("unknown method '" + c.method + "'");
  }
  r.result = Json{{"method", c.method}, {"dimension", dim}};
  r.expect("dimension", expected_scov_dim(c.n, c.m), dim);
  r.lines.push_back("dimension (" + c.method + "): " + std::to_string(dim));
  return r;
}

inline Action parse_action(const std::string& s) {
  if (s == "quasi") return Action::quasi;
  if (s == "classical") return Action::classical;
  throw UsageError("unknown action '" + s + "'");
}

inline Report cmd_act(const RunConfig& c) {
  Report r;
  Action action = parse_action(c.action);
  if (c.element.empty() || c.poly.empty()) throw UsageError("act needs --element and --poly");
  std::optional<GroupElement> g;
  CyclotomicPolynomial p(c.n, Cyclotomic::zero(c.m));
  try {
    g = parse_group_element(c.element, c.m);
    p = parse_polynomial<Cyclotomic>(c.n, c.poly, Cyclotomic::zero(c.m));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  if (g->n() != c.n) throw UsageError("element has " + std::to_string(g->n()) + " rows but --n is " + std::to_string(c.n));
  auto image = to_string(act(action, *g, p));
  r.result = Json{{"element", to_string(*g)}, {"action", c.action}, {"input", to_string(p)}, {"image", image}};
  r.lines.push_back(image);
  return r;
}

inline void verify_propu(const RunConfig& c, Report& r) {
  Json dims = Json::array();
  for (unsigned d = 0; d <= 6; ++d) {
    std::size_t expect = d % c.m == 0 ? compositions_of(d / c.m, c.n).size() : 0;
    std::size_t got = fixed_space_dimension(c.n, c.m, d, Action::quasi, c.caps);
    dims.push_back(got);
    r.expect("fixed_space_dimension[d=" + std::to_string(d) + "]", expect, got);
  }
  r.result["fixed_space_dimensions"] = dims;
}

inline void verify_ppp(const RunConfig& c, Report& r) {
  check_listing(c.n, c.m, c.caps);
  auto substituted = substitute_basis_power(quasi_invariant_ideal_basis(c.n, 1), c.m);
  auto direct = quasi_invariant_ideal_basis(c.n, c.m);
  r.result["substituted"] = texts(substituted);
  r.result["direct"] = texts(direct);
  r.expect("substituted_equals_direct", texts(direct), texts(substituted));
}

inline void verify_main(const RunConfig& c, Report& r) {
  check_listing(c.n, c.m, c.caps);
  std::uint64_t expect = expected_scov_dim(c.n, c.m);
  unsigned bound = bound_for(c);
  auto s = standard_monomials(quasi_invariant_ideal_basis(c.n, c.m, bound), bound);
  std::uint64_t basis = basis_Bnm(c.n, c.m).size();
  std::uint64_t kernel = coinvariant_kernel_series(c.n, c.m, IdealKind::quasi, c.caps).at_one();
  r.result = Json{{"expected", expect}, {"groebner", s.monomials.size()}, {"basis", basis}, {"harmonic", kernel}};
  r.expect("standard_monomials_complete", true, s.complete);
  r.expect("groebner_dimension", expect, s.monomials.size());
  r.expect("basis_dimension", expect, basis);
  r.expect("harmonic_dimension", expect, kernel);
}

inline void verify_hilbert(const RunConfig& c, Report& r) {
  check_listing(c.n, c.m, c.caps);
  unsigned n = static_cast<unsigned>(c.n);
  unsigned bound = bound_for(c);
  auto s = standard_monomials(quasi_invariant_ideal_basis(c.n, c.m, bound), bound);
  auto closed = F_nm_closed(n, c.m);
  auto from_gb = series_from_monomials(s);
  auto kernel = coinvariant_kernel_series(c.n, c.m, IdealKind::quasi, c.caps);
  auto literal = F_nm_single_prefactor(n, c.m);
  std::string status = literal == closed ? "MATCH" : "MISMATCH";
  r.result = Json{{"closed", series_to_json(closed)},
                  {"standard_monomials", series_to_json(from_gb)},
                  {"harmonic", series_to_json(kernel)},
                  {"literal_single_prefactor", series_to_json(literal)},
                  {"literal_status", status}};
  r.expect("standard_monomials_vs_closed", series_to_json(closed), series_to_json(from_gb));
  r.expect("harmonic_vs_closed", series_to_json(closed), series_to_json(kernel));
  r.expect("closed_at_one", expected_scov_dim(c.n, c.m), closed.at_one());
  // The single-prefactor formula only agrees when one of the factors is trivial.
  r.expect("literal_single_prefactor_status", (n >= 2 && c.m >= 2) ? "MISMATCH" : "MATCH", status);
  r.lines.push_back("closed form:        " + to_string(closed));
  r.lines.push_back("standard monomials: " + to_string(from_gb));
  r.lines.push_back("harmonic kernel:    " + to_string(kernel));
  r.lines.push_back("single prefactor:   " + to_string(literal) + "  [" + status + "]");
}

inline void verify_chevalley(const RunConfig& c, Report& r) {
  std::uint64_t expect = expected_cov_dim(c.n, c.m);
  if (expect > c.caps.max_matrix_entries) throw resource_error("classical quotient dimension exceeds the cap");
  auto b = classical_invariant_ideal_basis(c.n, c.m);
  auto s = standard_monomials(b, b.degree_bound);
  auto kernel = coinvariant_kernel_series(c.n, c.m, IdealKind::classical, c.caps);
  r.result = Json{{"expected", expect},
                  {"groebner", s.monomials.size()},
                  {"harmonic", kernel.at_one()},
                  {"hilbert_series", series_to_json(kernel)}};
  r.expect("standard_monomials_complete", true, s.complete);
  r.expect("groebner_dimension", expect, s.monomials.size());
  r.expect("harmonic_dimension", expect, kernel.at_one());
}

inline void verify_action_axioms(const RunConfig& c, Report& r) {
  constexpr int samples_per_pair = 100;
  constexpr std::uint64_t max_pairs = 100'000;
  auto group = enumerate_group(c.n, c.m, c.caps);
  std::mt19937_64 rng(0x5eed);
  std::vector<ExponentVector> samples;
  for (int i = 0; i < samples_per_pair; ++i) {
    ExponentVector v(c.n);
    for (std::size_t k = 0; k < c.n; ++k) v[k] = static_cast<unsigned>(rng() % 5);
    samples.push_back(std::move(v));
  }
  const std::uint64_t order = group.size();
  const bool exhaustive = order * order <= max_pairs;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (exhaustive) {
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j) pairs.emplace_back(i, j);
  } else {
    for (std::uint64_t k = 0; k < max_pairs; ++k) pairs.emplace_back(rng() % order, rng() % order);
  }

  std::uint64_t weight_failures = 0, quasi_failures = 0, classical_failures = 0;
  for (auto [i, j] : pairs) {
    const auto& g = group[i];
    const auto& h = group[j];
    auto gh = group_mul(g, h);
    if (gh.weight_exponent() != (g.weight_exponent() + h.weight_exponent()) % c.m) ++weight_failures;
    for (Action action : {Action::quasi, Action::classical}) {
      for (const auto& v : samples) {
        auto [hv, zh] = act_on_monomial(action, h, v);
        auto [ghv, zg] = act_on_monomial(action, g, hv);
        auto [direct, z] = act_on_monomial(action, gh, v);
        if (direct != ghv || z != (zg + zh) % c.m) ++(action == Action::quasi ? quasi_failures : classical_failures);
      }
    }
  }
  r.result = Json{{"group_order", order},
                  {"pairs", pairs.size()},
                  {"exhaustive", exhaustive},
                  {"monomials_per_pair", samples_per_pair}};
  r.expect("weight_multiplicative_failures", 0, weight_failures);
  r.expect("quasi_composition_failures", 0, quasi_failures);
  r.expect("classical_composition_failures", 0, classical_failures);
}

inline Report cmd_verify(const RunConfig& c) {
  Report r;
  if (c.suite == "propu") verify_propu(c, r);
  else if (c.suite == "ppp") verify_ppp(c, r);
  else if (c.suite == "main") verify_main(c, r);
  else if (c.suite == "hilbert") verify_hilbert(c, r);
  else if (c.suite == "chevalley") verify_chevalley(c, r);
  else if (c.suite == "action-axioms") verify_action_axioms(c, r);
  else throw UsageError("unknown suite '" + c.suite + "'");
  r.result["suite"] = c.suite;
  return r;
}

}  // namespace detail

inline Report run(const RunConfig& c) {
  if (c.n == 0) throw UsageError("--n must be at least 1");
  if (c.m == 0) throw UsageError("--m must be at least 1");
  Report r;
  if (c.command == "basis") r = detail::cmd_basis(c);
  else if (c.command == "groebner") r = detail::cmd_groebner(c);
  else if (c.command == "dim") r = detail::cmd_dim(c);
  else if (c.command == "act") r = detail::cmd_act(c);
  else if (c.command == "verify") r = detail::cmd_verify(c);
  else throw UsageError("unknown command '" + c.command + "'");
  r.command = c.command;
  r.n = c.n;
  r.m = c.m;
  return r;
}

inline Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  return Json{{"n", r.n}, {"m", r.m}, {"command", r.command}, {"result", r.result}, {"checks", checks}};
}

inline std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

inline std::string render_text(const Report& r) {
  std::string s = r.command + " n=" + std::to_string(r.n) + " m=" + std::to_string(r.m) + "\n";
  for (const auto& line : r.lines) s += line + "\n";
  if (r.lines.empty() && !r.result.empty()) s += r.result.dump() + "\n";
  for (const auto& c : r.checks) {
    s += (c.pass ? "PASS " : "FAIL ") + c.name + ": ";
    s += c.pass ? c.actual.dump() : "expected " + c.expected.dump() + ", actual " + c.actual.dump();
    s += "\n";
  }
  return s;
}

inline std::string render(const Report& r, bool json) { return json ? render_json(r) : render_text(r); }

}  // namespace qscov::cli
