#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "citaylor/poly.hpp"

namespace citaylor {

/// A subset S of [r] naming the Taylor basis element eps_S, with the cached
/// lcm m_S of its generators and v_S = deg m_S. Indices are 1-based and
/// strictly increasing.
struct SubsetLabel {
  std::vector<int> indices;
  Monomial lcm;
  int degree = 0;

  std::size_t size() const noexcept { return indices.size(); }
  bool contains(int index) const;

  bool operator==(const SubsetLabel& other) const { return indices == other.indices; }
};

/// "12" style name for r <= 9, "1,10" otherwise, "∅" for the empty set.
std::string subset_name(const std::vector<int>& indices, std::size_t r);

/// Divided-power exponent vector u of y_1^(u_1)...y_c^(u_c).
struct DPIndex {
  std::vector<int> exponents;

  std::size_t length() const noexcept { return exponents.size(); }
  int weight() const;
  bool operator==(const DPIndex&) const = default;
};

/// Basis element of a graded free module: (u, S) with internal twist.
/// Taylor modules use an empty u.
struct BasisLabel {
  DPIndex u;
  SubsetLabel subset;
  int twist = 0;

  int homological_degree() const { return static_cast<int>(subset.size()) + 2 * u.weight(); }
  bool operator==(const BasisLabel& other) const {
    return u == other.u && subset == other.subset && twist == other.twist;
  }
};

/// Polynomial matrix whose columns are labelled by the source basis and rows
/// by the target basis. Entries are dense; zero polynomials are cheap.
class LabeledGradedMatrix {
 public:
  LabeledGradedMatrix() = default;
  LabeledGradedMatrix(std::vector<BasisLabel> rows, std::vector<BasisLabel> cols,
                      std::size_t nvars, Field field);

  std::size_t rows() const noexcept { return row_labels_.size(); }
  std::size_t cols() const noexcept { return col_labels_.size(); }
  const std::vector<BasisLabel>& row_labels() const noexcept { return row_labels_; }
  const std::vector<BasisLabel>& col_labels() const noexcept { return col_labels_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const Field& field() const noexcept { return field_; }

  const Polynomial& at(std::size_t row, std::size_t col) const;
  Polynomial& at(std::size_t row, std::size_t col);

  bool is_zero() const;
  std::size_t nonzero_count() const;
  /// First nonzero entry in column-major order.
  std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;

  /// this * rhs; requires cols() == rhs.rows().
  LabeledGradedMatrix operator*(const LabeledGradedMatrix& rhs) const;
  LabeledGradedMatrix operator+(const LabeledGradedMatrix& rhs) const;
  LabeledGradedMatrix operator-(const LabeledGradedMatrix& rhs) const;
  LabeledGradedMatrix scaled(const Polynomial& p) const;
  LabeledGradedMatrix scaled(const mpq_class& c) const;

  /// Entrywise equality; labels are not compared.
  bool same_entries(const LabeledGradedMatrix& other) const;

  static LabeledGradedMatrix identity(const std::vector<BasisLabel>& basis, std::size_t nvars,
                                      Field field);

 private:
  std::vector<BasisLabel> row_labels_;
  std::vector<BasisLabel> col_labels_;
  std::size_t nvars_ = 0;
  Field field_;
  std::vector<Polynomial> entries_;
};

}  // namespace citaylor
