#include "citaylor/shamash.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

namespace citaylor {
namespace {

/// All u in N^c with |u| = weight, in descending lex order.
std::vector<DPIndex> divided_power_indices(int c, int weight) {
  std::vector<DPIndex> out;
  std::vector<int> u(c, 0);
  std::function<void(int, int)> fill = [&](int pos, int remaining) {
    if (pos == c - 1) {
      u[pos] = remaining;
      out.push_back(DPIndex{u});
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      u[pos] = v;
      fill(pos + 1, remaining - v);
    }
  };
  if (c > 0) fill(0, weight);
  return out;
}

using BasisKey = std::pair<std::vector<int>, std::vector<int>>;

BasisKey key_of(const DPIndex& u, const SubsetLabel& s) { return {u.exponents, s.indices}; }

std::map<BasisKey, std::size_t> index_basis(const std::vector<BasisLabel>& basis) {
  std::map<BasisKey, std::size_t> out;
  for (std::size_t i = 0; i < basis.size(); ++i) out.emplace(key_of(basis[i].u, basis[i].subset), i);
  return out;
}

std::string label_name(const BasisLabel& b, std::size_t r) {
  std::string u;
  for (std::size_t i = 0; i < b.u.length(); ++i)
    u += (i ? "," : "") + std::to_string(b.u.exponents[i]);
  return "(u=" + u + ", S=" + subset_name(b.subset.indices, r) + ")";
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::uint64_t to_u64(const mpz_class& v) {
  if (v > mpz_class(std::to_string(std::numeric_limits<std::uint64_t>::max())))
    throw InputError("rank exceeds 64 bits");
  return std::stoull(v.get_str());
}

}  // namespace

std::vector<BasisLabel> shamash_basis(const HomotopySystem& system, int n) {
  if (n < 0) throw InputError("homological degree must be nonnegative");
  const int r = static_cast<int>(system.rank());
  const int c = static_cast<int>(system.codimension());
  const auto& degrees = system.ci().degrees();
  std::vector<BasisLabel> out;
  for (int k = n % 2; k <= std::min(n, r); k += 2) {
    const auto us = divided_power_indices(c, (n - k) / 2);
    for (const auto& s : taylor_basis(system.ci().ideal(), k))
      for (const auto& u : us) {
        int twist = s.degree;
        for (int j = 0; j < c; ++j) twist += u.exponents[j] * degrees[j];
        out.push_back(BasisLabel{u, s, twist});
      }
  }
  return out;
}

LabeledGradedMatrix shamash_differential(const HomotopySystem& system, int n) {
  if (n < 1) throw InputError("differential index must be at least 1");
  const auto source = shamash_basis(system, n);
  const auto target = shamash_basis(system, n - 1);
  const auto row_of = index_basis(target);
  const auto& ideal = system.ci().ideal();
  const int r = static_cast<int>(system.rank());
  const int c = static_cast<int>(system.codimension());

  // Column index of each subset inside T_k.
  std::vector<std::map<std::vector<int>, std::size_t>> taylor_index(r + 1);
  for (int k = 0; k <= r; ++k) {
    const auto& module = system.taylor().modules[k];
    for (std::size_t i = 0; i < module.size(); ++i) taylor_index[k].emplace(module[i].subset.indices, i);
  }

  LabeledGradedMatrix phi(target, source, ideal.nvars(), ideal.field());
  for (std::size_t col = 0; col < source.size(); ++col) {
    const BasisLabel& b = source[col];
    const int k = static_cast<int>(b.subset.size());
    const std::size_t tcol = taylor_index[k].at(b.subset.indices);
    if (k >= 1) {
      const auto& tau = system.taylor().tau(k);
      for (std::size_t trow = 0; trow < tau.rows(); ++trow) {
        const Polynomial& e = tau.at(trow, tcol);
        if (e.is_zero()) continue;
        phi.at(row_of.at(key_of(b.u, tau.row_labels()[trow].subset)), col) += e;
      }
    }
    if (k >= r) continue;
    for (int j = 1; j <= c; ++j) {
      if (b.u.exponents[j - 1] == 0) continue;
      DPIndex lowered = b.u;
      --lowered.exponents[j - 1];
      const auto& sigma = system.sigma_e(j, k);
      for (std::size_t trow = 0; trow < sigma.rows(); ++trow) {
        const Polynomial& e = sigma.at(trow, tcol);
        if (e.is_zero()) continue;
        phi.at(row_of.at(key_of(lowered, sigma.row_labels()[trow].subset)), col) += e;
      }
    }
  }
  return phi;
}

ShamashResolution::ShamashResolution(HomotopySystem system, int max_step)
    : system_(std::move(system)), max_step_(max_step) {
  if (max_step < 0) throw InputError("max step must be nonnegative");
  for (int n = 0; n <= max_step; ++n) bases_.push_back(shamash_basis(system_, n));
  differentials_.emplace_back();
  for (int n = 1; n <= max_step; ++n) differentials_.push_back(shamash_differential(system_, n));
}

const LabeledGradedMatrix& ShamashResolution::phi(int n) const {
  if (n < 1 || n > max_step_)
    throw InputError("phi_" + std::to_string(n) + " is outside 1.." + std::to_string(max_step_));
  return differentials_[n];
}

LabeledGradedMatrix lowering_operator(const HomotopySystem& system, int n, int j) {
  const auto source = shamash_basis(system, n + 1);
  const auto target = shamash_basis(system, n - 1);
  const auto row_of = index_basis(target);
  const auto& ideal = system.ci().ideal();
  LabeledGradedMatrix out(target, source, ideal.nvars(), ideal.field());
  for (std::size_t col = 0; col < source.size(); ++col) {
    DPIndex u = source[col].u;
    if (u.exponents[j - 1] == 0) continue;
    --u.exponents[j - 1];
    out.at(row_of.at(key_of(u, source[col].subset)), col) =
        Polynomial::constant(ideal.nvars(), ideal.field(), 1);
  }
  return out;
}

Report phi_squared_check(const ShamashResolution& res) {
  Report report{"shamash: phi_n phi_(n+1) = sum_j a_j L_j"};
  const auto& sys = res.system();
  const std::size_t r = sys.rank();
  for (int n = 1; n + 1 <= res.max_step(); ++n) {
    ++report.checks;
    LabeledGradedMatrix expected = lowering_operator(sys, n, 1).scaled(sys.ci().sequence()[0]);
    for (int j = 2; j <= static_cast<int>(sys.codimension()); ++j)
      expected = expected + lowering_operator(sys, n, j).scaled(sys.ci().sequence()[j - 1]);
    const auto diff = res.phi(n) * res.phi(n + 1) - expected;
    if (auto nz = diff.first_nonzero()) {
      report.fail({"phi^2", n + 1, label_name(diff.col_labels()[nz->second], r),
                   "mismatch in row " + label_name(diff.row_labels()[nz->first], r)});
      break;
    }
  }
  if (res.max_step() < 2) report.notes.push_back("N < 2: no composable pair");
  return report;
}

Report homogeneity_check(const ShamashResolution& res) {
  Report report{"shamash: differentials are homogeneous of degree 0"};
  const std::size_t r = res.system().rank();
  for (int n = 1; n <= res.max_step(); ++n) {
    const auto& phi = res.phi(n);
    for (std::size_t col = 0; col < phi.cols(); ++col)
      for (std::size_t row = 0; row < phi.rows(); ++row) {
        const Polynomial& e = phi.at(row, col);
        if (e.is_zero()) continue;
        ++report.checks;
        const int want = phi.col_labels()[col].twist - phi.row_labels()[row].twist;
        if (!e.is_homogeneous() || *e.total_degree() != want) {
          report.fail({"homogeneity", n, label_name(phi.col_labels()[col], r),
                       "entry in row " + label_name(phi.row_labels()[row], r) +
                           " should have degree " + std::to_string(want)});
          return report;
        }
      }
  }
  return report;
}

std::uint64_t rank_formula(int r, int c, int n) {
  if (r < 1 || c < 1 || n < 0) throw InputError("rank_formula needs r >= 1, c >= 1, n >= 0");
  mpz_class total = 0;
  for (int m = 0; 2 * m <= n; ++m) total += binomial(r, n - 2 * m) * binomial(c + m - 1, c - 1);
  return to_u64(total);
}

std::uint64_t betti_bound(int r, int c, int m, int parity) {
  if (r < 1 || c < 1 || m < 0 || (parity != 0 && parity != 1))
    throw InputError("betti_bound needs r >= 1, c >= 1, m >= 0, parity 0 or 1");
  mpz_class total = 0;
  for (int j = 0; j <= m; ++j)
    total += binomial(r, 2 * j + parity) * binomial(c + m - j - 1, c - 1);
  return to_u64(total);
}

MinimalityVerdict minimality_check(const HomotopySystem& system) {
  MinimalityVerdict verdict;
  const auto& ideal = system.ci().ideal();
  const std::size_t r = ideal.rank();
  const auto& ring = system.ci().ring();
  for (int k = 1; k <= static_cast<int>(r); ++k) {
    const auto& tau = system.taylor().tau(k);
    for (std::size_t col = 0; col < tau.cols(); ++col)
      for (std::size_t row = 0; row < tau.rows(); ++row) {
        const Polynomial& e = tau.at(row, col);
        if (e.is_zero() || e.constant_term() == 0) continue;
        verdict.minimal = false;
        verdict.witnesses.push_back(
            {"taylor",
             "tau_" + std::to_string(k) + " row " + subset_name(tau.row_labels()[row].subset.indices, r) +
                 " col " + subset_name(tau.col_labels()[col].subset.indices, r),
             to_string(e, ring)});
      }
  }
  const auto& lift = system.lift();
  for (std::size_t i = 0; i < lift.codimension(); ++i)
    for (std::size_t t = 0; t < r; ++t) {
      const Polynomial& f = lift.rows[i][t];
      if (f.constant_term() == 0) continue;
      verdict.minimal = false;
      verdict.witnesses.push_back(
          {"lift", "f_{" + std::to_string(i + 1) + "," + std::to_string(t + 1) + "}",
           to_string(f, ring)});
    }
  return verdict;
}

namespace {

/// basis(n + 2) is basis(n) with u raised by one, element by element.
bool shifts_onto(const std::vector<BasisLabel>& lower, const std::vector<BasisLabel>& upper) {
  if (lower.size() != upper.size()) return false;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (lower[i].subset.indices != upper[i].subset.indices) return false;
    if (lower[i].u.exponents[0] + 1 != upper[i].u.exponents[0]) return false;
  }
  return true;
}

bool period_two_at(const ShamashResolution& res, int n) {
  return shifts_onto(res.basis(n), res.basis(n + 2)) &&
         shifts_onto(res.basis(n - 1), res.basis(n + 1)) &&
         res.phi(n + 2).same_entries(res.phi(n));
}

}  // namespace

Periodicity tail_periodicity(const ShamashResolution& res) {
  Periodicity p;
  if (res.system().codimension() != 1) return p;
  p.applicable = true;
  const int last = res.max_step() - 2;
  for (int start = 1; start <= last; ++start) {
    bool stable = true;
    for (int n = start; n <= last && stable; ++n) stable = period_two_at(res, n);
    if (stable) {
      p.start = start;
      break;
    }
  }
  return p;
}

MatrixFactorization matrix_factorization(const ShamashResolution& res) {
  const Periodicity p = tail_periodicity(res);
  if (!p.applicable) throw NoStableTail("matrix factorizations need a single sequence element");
  if (!p.start)
    throw NoStableTail("no 2-periodic tail within N = " + std::to_string(res.max_step()));
  const int n0 = *p.start;
  MatrixFactorization mf{n0, res.phi(n0), res.phi(n0 + 1)};
  const auto& sys = res.system();
  const auto& a = sys.ci().sequence()[0];
  const auto expected = LabeledGradedMatrix::identity(res.basis(n0 + 1), sys.ci().ring().nvars(),
                                                      sys.ci().ring().field())
                            .scaled(a);
  if (!(mf.a_map * mf.b_map).same_entries(expected) ||
      !(mf.b_map * mf.a_map).same_entries(expected))
    throw NoStableTail("stable pair does not satisfy AB = BA = a I");
  return mf;
}

}  // namespace citaylor
