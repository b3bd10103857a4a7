// Shared fixtures and independent oracles for the test binaries.
#pragma once

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "citaylor/homotopy.hpp"
#include "citaylor/matrix.hpp"
#include "citaylor/poly.hpp"
#include "citaylor/shamash.hpp"
#include "citaylor/taylor.hpp"

namespace testing_support {

using namespace citaylor;

using Grid = std::vector<std::vector<std::string>>;
using NaiveMatrix = std::vector<std::vector<Polynomial>>;

inline std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

inline PolyRing ring_of(const std::string& vars, std::uint32_t characteristic = 0) {
  return PolyRing(split(vars), Field(characteristic));
}

inline Polynomial P(const PolyRing& ring, const std::string& s) { return parse_polynomial(s, ring); }

/// Compares entries against a grid of polynomial strings; on mismatch fills `why`.
inline bool matches(const LabeledGradedMatrix& m, const PolyRing& ring, const Grid& expected,
                    std::string* why = nullptr) {
  std::ostringstream msg;
  bool ok = m.rows() == expected.size();
  if (!ok) msg << "row count " << m.rows() << " != " << expected.size();
  for (std::size_t i = 0; ok && i < expected.size(); ++i) {
    if (expected[i].size() != m.cols()) {
      msg << "col count " << m.cols() << " != " << expected[i].size();
      ok = false;
      break;
    }
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!(m.at(i, j) == P(ring, expected[i][j]))) {
        msg << "entry (" << i << "," << j << ") is " << to_string(m.at(i, j), ring)
            << ", expected " << expected[i][j];
        ok = false;
        break;
      }
  }
  if (why) *why = msg.str();
  return ok;
}

inline std::vector<std::string> subset_names(const std::vector<BasisLabel>& labels, std::size_t r) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(subset_name(l.subset.indices, r));
  return out;
}

inline std::vector<std::vector<int>> u_list(const std::vector<BasisLabel>& labels) {
  std::vector<std::vector<int>> out;
  for (const auto& l : labels) out.push_back(l.u.exponents);
  return out;
}

inline std::vector<int> twists(const std::vector<BasisLabel>& labels) {
  std::vector<int> out;
  for (const auto& l : labels) out.push_back(l.twist);
  return out;
}

struct Instance {
  PolyRing ring;
  std::vector<std::string> ideal;
  std::vector<std::string> ci;
  LiftStrategy strategy = LiftStrategy::First;
  std::vector<TermAssignment> assignments;

  std::string describe() const {
    std::string s = "vars=";
    for (std::size_t i = 0; i < ring.nvars(); ++i) s += (i ? "," : "") + ring.variables()[i];
    s += " ideal=";
    for (std::size_t i = 0; i < ideal.size(); ++i) s += (i ? "," : "") + ideal[i];
    s += " ci=";
    for (std::size_t i = 0; i < ci.size(); ++i) s += (i ? "," : "") + ci[i];
    s += strategy == LiftStrategy::First ? " lift=first"
         : strategy == LiftStrategy::Average ? " lift=average"
                                             : " lift=fixed";
    return s;
  }

  CompleteIntersectionData data() const {
    std::vector<Polynomial> seq;
    for (const auto& a : ci) seq.push_back(parse_polynomial(a, ring));
    return CompleteIntersectionData(ring, parse_monomial_ideal(ideal, ring), std::move(seq));
  }

  HomotopySystem system() const {
    auto d = data();
    auto lift = compute_lift_matrix(d, strategy, assignments);
    return HomotopySystem(std::move(d), std::move(lift));
  }
};

inline Instance instance(const std::string& vars, const std::string& ideal, const std::string& ci) {
  return Instance{ring_of(vars), split(ideal), split(ci)};
}

// The worked examples.
inline Instance ex_cubic() { return instance("x,y,z", "x^2,y^2,z^2", "x^2*z+x*y^2"); }
inline Instance ex_triangle() { return instance("x,y,z", "x*y,x*z,y*z", "x*y*z"); }
inline Instance ex_plane() { return instance("x,y", "x^2,y^2", "x^2*y+x*y^2"); }
inline Instance ex_hypersurface() { return instance("x1,x2", "x1^2,x2^2", "x1^5"); }
inline Instance ex_codim2() {
  return instance("x,y,z,w", "x^2,y^2,z^2,w^2", "x^3+y^3,z^3+w^3");
}

/// Lift of xyz through a single chosen generator of <xy,xz,yz>.
inline Instance ex_triangle_through(int generator) {
  Instance inst = ex_triangle();
  inst.strategy = LiftStrategy::FixedAssignment;
  inst.assignments.push_back({std::nullopt, parse_monomial("x*y*z", inst.ring), generator});
  return inst;
}

/// Seeded from CITAYLOR_SEED so failures can be replayed.
inline std::uint64_t seed() {
  static const std::uint64_t value = [] {
    const char* env = std::getenv("CITAYLOR_SEED");
    std::uint64_t s = env ? std::strtoull(env, nullptr, 10) : 20240611u;
    std::cerr << "CITAYLOR_SEED=" << s << '\n';
    return s;
  }();
  return value;
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars, int degree) {
  std::vector<int> e(nvars, 0);
  for (int i = 0; i < degree; ++i) ++e[rng() % nvars];
  return Monomial(e);
}

/// Random instance with n <= max_vars, r <= max_gens, c <= max_c and
/// homogeneous a_j built from multiples of the generators. Regularity of the
/// sequence is not guaranteed for c = 2.
inline Instance random_instance(std::mt19937_64& rng, std::size_t max_vars = 4,
                                std::size_t max_gens = 5, std::size_t max_c = 2) {
  static const char* names[] = {"x", "y", "z", "w"};
  const std::size_t n = 1 + rng() % max_vars;
  std::vector<std::string> vars(names, names + n);
  PolyRing ring(vars);
  const std::size_t r = 1 + rng() % max_gens;
  std::vector<Monomial> gens;
  std::vector<std::string> ideal;
  for (std::size_t i = 0; i < r; ++i) {
    gens.push_back(random_monomial(rng, n, 1 + static_cast<int>(rng() % 3)));
    ideal.push_back(to_string(gens.back(), ring));
  }
  int top = 0;
  for (const auto& g : gens) top = std::max(top, g.degree());
  const std::size_t c = 1 + rng() % max_c;
  std::vector<std::string> ci;
  for (std::size_t j = 0; j < c; ++j) {
    const int d = top + static_cast<int>(rng() % 3);
    Polynomial a = ring.zero();
    while (a.is_zero()) {
      const std::size_t terms = 1 + rng() % 3;
      for (std::size_t t = 0; t < terms; ++t) {
        const Monomial& g = gens[rng() % r];
        const Monomial m = g * random_monomial(rng, n, d - g.degree());
        a.add_term(m, static_cast<long>(rng() % 7) - 3);
      }
    }
    ci.push_back(to_string(a, ring));
  }
  Instance inst{ring, ideal, ci};
  switch (rng() % 3) {
    case 0: inst.strategy = LiftStrategy::First; break;
    case 1: inst.strategy = LiftStrategy::Average; break;
    default: {
      inst.strategy = LiftStrategy::FixedAssignment;
      for (std::size_t j = 0; j < c; ++j) {
        const Polynomial a = parse_polynomial(ci[j], ring);
        for (const auto& [m, coeff] : a.terms()) {
          std::vector<int> divisors;
          for (std::size_t i = 0; i < r; ++i)
            if (gens[i].divides(m)) divisors.push_back(static_cast<int>(i + 1));
          inst.assignments.push_back(
              {static_cast<int>(j + 1), m, divisors[rng() % divisors.size()]});
        }
      }
    }
  }
  return inst;
}

// ------------------------------------------------------------------ oracles
// Written from the defining formulas with bitmask subsets, sharing no code
// with the library beyond polynomial arithmetic.

inline std::vector<unsigned> subsets_of_size(std::size_t r, int k) {
  std::vector<unsigned> out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == k) {
      unsigned mask = 0;
      for (int v : pick) mask |= 1u << v;
      out.push_back(mask);
      return;
    }
    for (int v = start; v < static_cast<int>(r); ++v) {
      pick[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, v + 1);
    }
  };
  if (k >= 0 && static_cast<std::size_t>(k) <= r) rec(rec, 0, 0);
  return out;
}

inline Monomial mask_lcm(const std::vector<Monomial>& gens, unsigned mask, std::size_t nvars) {
  std::vector<int> e(nvars, 0);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (mask >> i & 1u)
      for (std::size_t v = 0; v < nvars; ++v) e[v] = std::max(e[v], gens[i][v]);
  return Monomial(e);
}

inline Monomial quotient(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.nvars());
  for (std::size_t v = 0; v < a.nvars(); ++v) e[v] = a[v] - b[v];
  return Monomial(e);
}

/// tau_k: T_k -> T_{k-1}, rows and columns in lexicographic subset order.
inline NaiveMatrix oracle_tau(const std::vector<Monomial>& gens, std::size_t nvars, int k) {
  const auto cols = subsets_of_size(gens.size(), k);
  const auto rows = subsets_of_size(gens.size(), k - 1);
  NaiveMatrix m(rows.size(), std::vector<Polynomial>(cols.size(), Polynomial(nvars, Field())));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    int position = 0;
    for (std::size_t s = 0; s < gens.size(); ++s) {
      if (!(cols[c] >> s & 1u)) continue;
      ++position;
      const unsigned smaller = cols[c] & ~(1u << s);
      const std::size_t row = static_cast<std::size_t>(
          std::find(rows.begin(), rows.end(), smaller) - rows.begin());
      const int sign = (k - position) % 2 == 0 ? 1 : -1;
      m[row][c] = Polynomial::term(
          quotient(mask_lcm(gens, cols[c], nvars), mask_lcm(gens, smaller, nvars)), Field(), sign);
    }
  }
  return m;
}

/// sigma_{e_i}: T_k -> T_{k+1} for one lift row.
inline NaiveMatrix oracle_sigma(const std::vector<Monomial>& gens, std::size_t nvars,
                                const std::vector<Polynomial>& f, int k) {
  const auto cols = subsets_of_size(gens.size(), k);
  const auto rows = subsets_of_size(gens.size(), k + 1);
  NaiveMatrix m(rows.size(), std::vector<Polynomial>(cols.size(), Polynomial(nvars, Field())));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t t = 0; t < gens.size(); ++t) {
      if (cols[c] >> t & 1u) continue;
      const unsigned bigger = cols[c] | 1u << t;
      int position = 0;
      for (std::size_t s = 0; s <= t; ++s) position += static_cast<int>(bigger >> s & 1u);
      const std::size_t row = static_cast<std::size_t>(
          std::find(rows.begin(), rows.end(), bigger) - rows.begin());
      const int sign = (k - position - 1) % 2 == 0 ? 1 : -1;
      const Monomial coeff =
          quotient(gens[t] * mask_lcm(gens, cols[c], nvars), mask_lcm(gens, bigger, nvars));
      m[row][c] += f[t].times_monomial(coeff, sign);
    }
  }
  return m;
}

inline NaiveMatrix naive_multiply(const NaiveMatrix& a, const NaiveMatrix& b, std::size_t nvars,
                                  std::size_t inner) {
  const std::size_t rows = a.size(), cols = b.empty() ? 0 : b[0].size();
  NaiveMatrix out(rows, std::vector<Polynomial>(cols, Polynomial(nvars, Field())));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t l = 0; l < inner; ++l) out[i][j] += a[i][l] * b[l][j];
  return out;
}

inline bool same(const LabeledGradedMatrix& m, const NaiveMatrix& n) {
  if (m.rows() != n.size()) return false;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i].size() != m.cols()) return false;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!(m.at(i, j) == n[i][j])) return false;
  }
  return true;
}

inline std::uint64_t binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Counts pairs (u, S) with |S| + 2|u| = n by direct enumeration.
inline std::uint64_t enumerate_rank(int r, int c, int n) {
  std::uint64_t total = 0;
  for (int w = 0; 2 * w <= n; ++w) {
    const int s = n - 2 * w;
    if (s > r) continue;
    // Number of u in N^c with |u| = w, counted by recursion over coordinates.
    std::uint64_t us = 0;
    auto count = [&](auto&& self, int coord, int left) -> void {
      if (coord == c - 1) {
        ++us;
        return;
      }
      for (int v = 0; v <= left; ++v) self(self, coord + 1, left - v);
    };
    count(count, 0, w);
    total += us * static_cast<std::uint64_t>(subsets_of_size(static_cast<std::size_t>(r), s).size());
  }
  return total;
}

}  // namespace testing_support
