#include "citaylor/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "citaylor/errors.hpp"

namespace citaylor {

bool SubsetLabel::contains(int index) const {
  return std::binary_search(indices.begin(), indices.end(), index);
}

std::string subset_name(const std::vector<int>& indices, std::size_t r) {
  if (indices.empty()) return "∅";
  std::string out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0 && r > 9) out += ',';
    out += std::to_string(indices[i]);
  }
  return out;
}

int DPIndex::weight() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

LabeledGradedMatrix::LabeledGradedMatrix(std::vector<BasisLabel> rows,
                                         std::vector<BasisLabel> cols, std::size_t nvars,
                                         Field field)
    : row_labels_(std::move(rows)),
      col_labels_(std::move(cols)),
      nvars_(nvars),
      field_(field),
      entries_(row_labels_.size() * col_labels_.size(), Polynomial(nvars, field)) {}

const Polynomial& LabeledGradedMatrix::at(std::size_t row, std::size_t col) const {
  return entries_.at(row * cols() + col);
}

Polynomial& LabeledGradedMatrix::at(std::size_t row, std::size_t col) {
  return entries_.at(row * cols() + col);
}

bool LabeledGradedMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

std::size_t LabeledGradedMatrix::nonzero_count() const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [](const Polynomial& p) { return !p.is_zero(); }));
}

std::optional<std::pair<std::size_t, std::size_t>> LabeledGradedMatrix::first_nonzero() const {
  for (std::size_t c = 0; c < cols(); ++c)
    for (std::size_t r = 0; r < rows(); ++r)
      if (!at(r, c).is_zero()) return std::make_pair(r, c);
  return std::nullopt;
}

LabeledGradedMatrix LabeledGradedMatrix::operator*(const LabeledGradedMatrix& rhs) const {
  if (cols() != rhs.rows()) throw Error("matrix dimension mismatch in product");
  LabeledGradedMatrix out(row_labels_, rhs.col_labels_, nvars_, field_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t k = 0; k < cols(); ++k) {
      const Polynomial& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        const Polynomial& b = rhs.at(k, j);
        if (!b.is_zero()) out.at(i, j) += a * b;
      }
    }
  return out;
}

LabeledGradedMatrix LabeledGradedMatrix::operator+(const LabeledGradedMatrix& rhs) const {
  if (rows() != rhs.rows() || cols() != rhs.cols())
    throw Error("matrix dimension mismatch in sum");
  LabeledGradedMatrix out(*this);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
  return out;
}

LabeledGradedMatrix LabeledGradedMatrix::operator-(const LabeledGradedMatrix& rhs) const {
  return *this + rhs.scaled(mpq_class(-1));
}

LabeledGradedMatrix LabeledGradedMatrix::scaled(const Polynomial& p) const {
  LabeledGradedMatrix out(*this);
  for (auto& e : out.entries_)
    if (!e.is_zero()) e = e * p;
  return out;
}

LabeledGradedMatrix LabeledGradedMatrix::scaled(const mpq_class& c) const {
  LabeledGradedMatrix out(*this);
  for (auto& e : out.entries_) e = e.scaled(c);
  return out;
}

bool LabeledGradedMatrix::same_entries(const LabeledGradedMatrix& other) const {
  return rows() == other.rows() && cols() == other.cols() && entries_ == other.entries_;
}

LabeledGradedMatrix LabeledGradedMatrix::identity(const std::vector<BasisLabel>& basis,
                                                  std::size_t nvars, Field field) {
  LabeledGradedMatrix out(basis, basis, nvars, field);
  for (std::size_t i = 0; i < basis.size(); ++i)
    out.at(i, i) = Polynomial::constant(nvars, field, 1);
  return out;
}

}  // namespace citaylor
