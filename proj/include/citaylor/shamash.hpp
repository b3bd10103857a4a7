#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "citaylor/errors.hpp"
#include "citaylor/homotopy.hpp"
#include "citaylor/matrix.hpp"
#include "citaylor/report.hpp"

namespace citaylor {

class NoStableTail : public Error {
 public:
  using Error::Error;
};

/// All (u, S) with 2|u| + |S| = n, ordered by |S|, then S lexicographically,
/// then u in descending lex order (y_1^(2) before y_1 y_2 before y_2^(2)).
/// Twist is v_S + sum_j u_j d_j.
std::vector<BasisLabel> shamash_basis(const HomotopySystem& system, int n);

/// phi_n : F_n -> F_{n-1}. Column (u, S) carries (u, tau(eps_S)) plus
/// (u - e_j, sigma_{e_j}(eps_S)) for every j with u_j >= 1.
LabeledGradedMatrix shamash_differential(const HomotopySystem& system, int n);

/// F_0..F_N with phi_1..phi_N. Entries are Q-representatives of classes in R.
class ShamashResolution {
 public:
  ShamashResolution(HomotopySystem system, int max_step);

  const HomotopySystem& system() const noexcept { return system_; }
  int max_step() const noexcept { return max_step_; }
  const std::vector<BasisLabel>& basis(int n) const { return bases_.at(n); }
  /// phi_n for 1 <= n <= N.
  const LabeledGradedMatrix& phi(int n) const;

 private:
  HomotopySystem system_;
  int max_step_;
  std::vector<std::vector<BasisLabel>> bases_;
  std::vector<LabeledGradedMatrix> differentials_;
};

/// L_j : F_{n+1} -> F_{n-1}, (u, S) -> (u - e_j, S) when u_j >= 1, else 0.
LabeledGradedMatrix lowering_operator(const HomotopySystem& system, int n, int j);

/// phi_n phi_{n+1} = sum_j a_j L_j for 1 <= n <= N-1.
Report phi_squared_check(const ShamashResolution& res);

/// Every nonzero entry at (row, col) has degree twist(col) - twist(row).
Report homogeneity_check(const ShamashResolution& res);

/// rank F_n = sum_j C(r, n - 2j) C(c + j - 1, c - 1). Throws on overflow.
std::uint64_t rank_formula(int r, int c, int n);
/// Upper bound for beta_{2m} (parity 0) or beta_{2m+1} (parity 1).
std::uint64_t betti_bound(int r, int c, int m, int parity);

struct MinimalityWitness {
  std::string source;  // "taylor" or "lift"
  std::string where;   // e.g. "tau_3 row 12 col 123" or "f_{1,3}"
  std::string entry;
};

struct MinimalityVerdict {
  bool minimal = true;
  std::vector<MinimalityWitness> witnesses;
};

/// Minimal iff every Taylor entry m_S/m_{S-s} is a nonunit and every f_{i,t}
/// has zero constant term.
MinimalityVerdict minimality_check(const HomotopySystem& system);

struct Periodicity {
  bool applicable = false;       // false when c >= 2
  std::optional<int> start;      // smallest n0 with phi_{n+2} = phi_n for n0 <= n <= N-2
};

Periodicity tail_periodicity(const ShamashResolution& res);

struct MatrixFactorization {
  int start = 0;                 // A = phi_start, B = phi_{start+1}
  LabeledGradedMatrix a_map;
  LabeledGradedMatrix b_map;
};

/// Stable pair of the 2-periodic tail (c = 1). Asserts AB = BA = a I under
/// the shift identification; throws NoStableTail otherwise.
MatrixFactorization matrix_factorization(const ShamashResolution& res);

}  // namespace citaylor
