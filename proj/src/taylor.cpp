#include "citaylor/taylor.hpp"

#include <algorithm>

#include "citaylor/errors.hpp"

namespace citaylor {

MonomialIdeal::MonomialIdeal(std::vector<Monomial> generators, Field field)
    : generators_(std::move(generators)), field_(field) {
  if (generators_.empty()) throw InputError("a monomial ideal needs at least one generator");
  nvars_ = generators_.front().nvars();
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].nvars() != nvars_)
      throw InputError("ideal generators live in different rings");
    for (std::size_t j = 0; j < i; ++j)
      if (generators_[j] == generators_[i])
        warnings_.push_back("generator " + std::to_string(i + 1) + " repeats generator " +
                            std::to_string(j + 1) + "; the Taylor complex is not minimal");
  }
}

SubsetLabel MonomialIdeal::label(std::vector<int> indices) const {
  SubsetLabel s;
  s.lcm = Monomial(nvars_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1 || indices[i] > static_cast<int>(rank()))
      throw InputError("subset index out of range");
    if (i > 0 && indices[i] <= indices[i - 1])
      throw InputError("subset indices must be strictly increasing");
    s.lcm = lcm(s.lcm, generator(indices[i]));
  }
  s.indices = std::move(indices);
  s.degree = s.lcm.degree();
  return s;
}

MonomialIdeal parse_monomial_ideal(const std::vector<std::string>& generators,
                                   const PolyRing& ring) {
  std::vector<Monomial> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) {
    Polynomial p = parse_polynomial(g, ring);
    if (p.size() != 1)
      throw InputError("ideal generator '" + g + "' is not a monomial");
    gens.push_back(p.terms().begin()->first);
  }
  return MonomialIdeal(std::move(gens), ring.field());
}

std::vector<SubsetLabel> taylor_basis(const MonomialIdeal& ideal, int k) {
  const int r = static_cast<int>(ideal.rank());
  if (k < 0 || k > r)
    throw InputError("Taylor degree " + std::to_string(k) + " outside [0, " +
                     std::to_string(r) + "]");
  std::vector<SubsetLabel> out;
  // Lexicographic enumeration of increasing k-sequences.
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  for (;;) {
    out.push_back(ideal.label(idx));
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == r - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

std::vector<BasisLabel> taylor_module(const MonomialIdeal& ideal, int k) {
  std::vector<BasisLabel> out;
  for (auto& s : taylor_basis(ideal, k)) {
    int twist = s.degree;
    out.push_back(BasisLabel{DPIndex{}, std::move(s), twist});
  }
  return out;
}

LabeledGradedMatrix taylor_differential(const MonomialIdeal& ideal, int k) {
  const int r = static_cast<int>(ideal.rank());
  if (k < 1 || k > r)
    throw InputError("Taylor differential index " + std::to_string(k) + " outside [1, " +
                     std::to_string(r) + "]");
  auto source = taylor_module(ideal, k);
  auto target = taylor_module(ideal, k - 1);
  LabeledGradedMatrix tau(target, source, ideal.nvars(), ideal.field());
  for (std::size_t col = 0; col < source.size(); ++col) {
    const SubsetLabel& s = source[col].subset;
    for (int i = 1; i <= k; ++i) {
      std::vector<int> face = s.indices;
      face.erase(face.begin() + (i - 1));
      auto row_it = std::find_if(target.begin(), target.end(),
                                 [&](const BasisLabel& b) { return b.subset.indices == face; });
      const auto row = static_cast<std::size_t>(row_it - target.begin());
      const int sign = ((k - i) % 2 == 0) ? 1 : -1;
      tau.at(row, col) = Polynomial::term(divide(s.lcm, row_it->subset.lcm), ideal.field(), sign);
    }
  }
  return tau;
}

TaylorComplex build_taylor_complex(const MonomialIdeal& ideal) {
  TaylorComplex t{ideal, {}, {}};
  const int r = static_cast<int>(ideal.rank());
  for (int k = 0; k <= r; ++k) t.modules.push_back(taylor_module(ideal, k));
  t.differentials.emplace_back();
  for (int k = 1; k <= r; ++k) t.differentials.push_back(taylor_differential(ideal, k));
  return t;
}

Report verify_taylor(const MonomialIdeal& ideal) {
  Report report{"taylor: tau_k tau_(k+1) = 0"};
  const int r = static_cast<int>(ideal.rank());
  const TaylorComplex t = build_taylor_complex(ideal);
  for (int k = 1; k < r; ++k) {
    ++report.checks;
    const LabeledGradedMatrix composite = t.tau(k) * t.tau(k + 1);
    if (auto nz = composite.first_nonzero()) {
      report.fail({"d^2 = 0", k + 1,
                   subset_name(composite.col_labels()[nz->second].subset.indices, ideal.rank()),
                   "nonzero entry in row " +
                       subset_name(composite.row_labels()[nz->first].subset.indices,
                                   ideal.rank())});
      break;
    }
  }
  if (r == 1) report.notes.push_back("r = 1: no composable pair, passes vacuously");
  return report;
}

}  // namespace citaylor
