#pragma once

#include <string>
#include <vector>

#include "citaylor/matrix.hpp"
#include "citaylor/poly.hpp"
#include "citaylor/report.hpp"

namespace citaylor {

/// I = <m_1, ..., m_r>. Generator order is significant: indices appear in
/// every subset label.
class MonomialIdeal {
 public:
  MonomialIdeal(std::vector<Monomial> generators, Field field = {});

  std::size_t rank() const noexcept { return generators_.size(); }
  std::size_t nvars() const noexcept { return nvars_; }
  const Field& field() const noexcept { return field_; }
  const std::vector<Monomial>& generators() const noexcept { return generators_; }
  /// 1-based.
  const Monomial& generator(int index) const { return generators_.at(index - 1); }

  /// Non-fatal diagnostics, e.g. repeated generators (non-minimal Taylor complex).
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  SubsetLabel label(std::vector<int> indices) const;

 private:
  std::vector<Monomial> generators_;
  std::size_t nvars_;
  Field field_;
  std::vector<std::string> warnings_;
};

/// Parses comma separated monomials, e.g. "x*y,x*z,y*z".
MonomialIdeal parse_monomial_ideal(const std::vector<std::string>& generators,
                                   const PolyRing& ring);

/// Basis of T_k: all k-subsets of [r] in lexicographic order.
std::vector<SubsetLabel> taylor_basis(const MonomialIdeal& ideal, int k);
std::vector<BasisLabel> taylor_module(const MonomialIdeal& ideal, int k);

/// tau_k : T_k -> T_{k-1}, 1 <= k <= r.
LabeledGradedMatrix taylor_differential(const MonomialIdeal& ideal, int k);

struct TaylorComplex {
  MonomialIdeal ideal;
  std::vector<std::vector<BasisLabel>> modules;       // T_0 .. T_r
  std::vector<LabeledGradedMatrix> differentials;     // index k holds tau_k; [0] is empty

  const LabeledGradedMatrix& tau(int k) const { return differentials.at(k); }
};

TaylorComplex build_taylor_complex(const MonomialIdeal& ideal);

/// Checks tau_k tau_{k+1} = 0 for 1 <= k < r.
Report verify_taylor(const MonomialIdeal& ideal);

}  // namespace citaylor
