#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "citaylor/matrix.hpp"
#include "citaylor/poly.hpp"
#include "citaylor/report.hpp"
#include "citaylor/taylor.hpp"

namespace citaylor {

/// Ring, monomial ideal I and a sequence a_1..a_c inside I.
///
/// Every a_j must be nonzero and homogeneous; d_j is its total degree. The
/// sequence is assumed regular and this is not checked: a non-regular sequence
/// still yields maps satisfying the homotopy identities, but the assembled
/// complex need not be acyclic.
class CompleteIntersectionData {
 public:
  CompleteIntersectionData(PolyRing ring, MonomialIdeal ideal, std::vector<Polynomial> sequence);

  const PolyRing& ring() const noexcept { return ring_; }
  const MonomialIdeal& ideal() const noexcept { return ideal_; }
  const std::vector<Polynomial>& sequence() const noexcept { return sequence_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  std::size_t codimension() const noexcept { return sequence_.size(); }

 private:
  PolyRing ring_;
  MonomialIdeal ideal_;
  std::vector<Polynomial> sequence_;
  std::vector<int> degrees_;
};

/// f_{i,j}: a_i = sum_j f_{i,j} m_j. Row i (0-based) belongs to a_{i+1}.
struct LiftMatrix {
  std::vector<std::vector<Polynomial>> rows;

  std::size_t codimension() const noexcept { return rows.size(); }
  /// f_{i,j} with 1-based indices as in the formulas.
  const Polynomial& f(int i, int j) const { return rows.at(i - 1).at(j - 1); }
  bool operator==(const LiftMatrix&) const = default;
};

enum class LiftStrategy { First, FixedAssignment, Average };

/// One user-chosen generator for one term. `sequence_index` (1-based)
/// restricts the assignment to a single a_i; unset means every a_i.
struct TermAssignment {
  std::optional<int> sequence_index;
  Monomial term;
  int generator = 0;
};

/// Reads `{"assignments":[{"term":"x^2*z","gen":1}, ...]}`. An optional
/// integer field "ci" selects the sequence element.
std::vector<TermAssignment> parse_lift_assignments(const std::string& json_text,
                                                   const PolyRing& ring);

/// Splits each term c*x^alpha of `a` over generators dividing x^alpha.
/// Throws NotInIdeal when some term is divisible by no generator.
std::vector<Polynomial> compute_lift(const Polynomial& a, const MonomialIdeal& ideal,
                                     LiftStrategy strategy,
                                     std::span<const TermAssignment> assignments = {},
                                     MonomialOrder order = MonomialOrder::GradedLex,
                                     int sequence_index = 1);

LiftMatrix compute_lift_matrix(const CompleteIntersectionData& ci, LiftStrategy strategy,
                               std::span<const TermAssignment> assignments = {});

/// a_i - sum_j f_{i,j} m_j for each i; all zero for a valid lift.
std::vector<Polynomial> lift_residuals(const CompleteIntersectionData& ci, const LiftMatrix& lift);

/// Entrywise convex combination. Weights must be nonnegative, sum to 1 and
/// be representable in the coefficient field.
LiftMatrix average_lifts(std::span<const LiftMatrix> lifts, std::span<const mpq_class> weights,
                         const Field& field = {});

/// sigma_{e_i} restricted to T_k -> T_{k+1} for one lift row f_{i,*}.
LabeledGradedMatrix homotopy_matrix(const MonomialIdeal& ideal,
                                    std::span<const Polynomial> lift_row, int k);

/// sigma_0 = tau together with sigma_{e_i} for every i; sigma_u = 0 for
/// |u| >= 2.
class HomotopySystem {
 public:
  /// The lift is not validated here so that corrupted lifts can be fed to
  /// verify_homotopy_system; use lift_residuals to validate.
  HomotopySystem(CompleteIntersectionData ci, LiftMatrix lift);

  const CompleteIntersectionData& ci() const noexcept { return ci_; }
  const LiftMatrix& lift() const noexcept { return lift_; }
  const TaylorComplex& taylor() const noexcept { return taylor_; }
  std::size_t rank() const noexcept { return ci_.ideal().rank(); }
  std::size_t codimension() const noexcept { return ci_.codimension(); }

  /// sigma_{e_i} : T_k -> T_{k+1}, i 1-based, 0 <= k < r.
  const LabeledGradedMatrix& sigma_e(int i, int k) const;

 private:
  CompleteIntersectionData ci_;
  LiftMatrix lift_;
  TaylorComplex taylor_;
  std::vector<std::vector<LabeledGradedMatrix>> sigma_;
};

/// Checks on every T_k, exactly: (a) tau tau = 0, (b) tau sigma_j + sigma_j
/// tau = a_j id, (c) sigma_i sigma_j + sigma_j sigma_i = 0 for i <= j.
Report verify_homotopy_system(const HomotopySystem& system);

}  // namespace citaylor
