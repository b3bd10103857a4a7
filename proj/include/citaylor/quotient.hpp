#pragma once

#include <cstdint>
#include <vector>

#include "citaylor/poly.hpp"
#include "citaylor/report.hpp"
#include "citaylor/shamash.hpp"

namespace citaylor {

struct GroebnerCaps {
  std::size_t max_pairs = 10000;
  int max_degree = 40;
};

struct GroebnerBasis {
  std::vector<Polynomial> generators;
  MonomialOrder order = MonomialOrder::GradedRevLex;
  bool reduced = false;
};

/// Buchberger's algorithm with normal pair selection (smallest lcm degree
/// first) and the coprime-leading-term criterion. Returns the reduced, monic
/// basis. Throws CapExceeded when either cap is hit.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         MonomialOrder order = MonomialOrder::GradedRevLex,
                         GroebnerCaps caps = {});

/// Remainder of full multivariate division by the basis.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

/// Monomials of degree d divisible by no leading monomial of gb; they form a
/// basis of (Q/<gb>)_d.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, std::size_t nvars, int degree);

/// Rank of a dense matrix over GF(p); entries must already lie in [0, p).
std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p);

struct ExactnessOptions {
  int max_internal_degree = 10;
  std::uint32_t prime = 32003;
  GroebnerCaps caps = {};
};

/// Checks H_n(F)_d = 0 for every internal degree d <= max_internal_degree by
/// linear algebra over GF(p) on the graded pieces of F_{n+1} -> F_n -> F_{n-1}.
/// Requires 1 <= n <= N - 1. Throws CharacteristicError when p divides a
/// denominator of the input.
Report check_exactness(const ShamashResolution& res, int n, const ExactnessOptions& options = {});

}  // namespace citaylor
