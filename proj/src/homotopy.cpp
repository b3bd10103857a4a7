#include "citaylor/homotopy.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

#include "citaylor/errors.hpp"

namespace citaylor {

CompleteIntersectionData::CompleteIntersectionData(PolyRing ring, MonomialIdeal ideal,
                                                   std::vector<Polynomial> sequence)
    : ring_(std::move(ring)), ideal_(std::move(ideal)), sequence_(std::move(sequence)) {
  if (sequence_.empty()) throw InputError("the sequence a_1..a_c must be nonempty");
  if (ideal_.nvars() != ring_.nvars())
    throw InputError("ideal and ring have different numbers of variables");
  for (std::size_t j = 0; j < sequence_.size(); ++j) {
    const Polynomial& a = sequence_[j];
    const std::string name = "sequence element " + std::to_string(j + 1);
    if (a.nvars() != ring_.nvars()) throw InputError(name + " lives in a different ring");
    if (a.is_zero()) throw InputError(name + " is zero");
    if (!a.is_homogeneous()) throw InputError(name + " is not homogeneous");
    degrees_.push_back(*a.total_degree());
  }
}

std::vector<TermAssignment> parse_lift_assignments(const std::string& json_text,
                                                   const PolyRing& ring) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("lift assignment file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("assignments") || !doc["assignments"].is_array())
    throw InputError("lift assignment file needs an \"assignments\" array");
  std::vector<TermAssignment> out;
  for (const auto& item : doc["assignments"]) {
    if (!item.is_object() || !item.contains("term") || !item["term"].is_string() ||
        !item.contains("gen") || !item["gen"].is_number_integer())
      throw InputError("each assignment needs a string \"term\" and an integer \"gen\"");
    TermAssignment a;
    a.term = parse_monomial(item["term"].get<std::string>(), ring);
    a.generator = item["gen"].get<int>();
    if (item.contains("ci")) {
      if (!item["ci"].is_number_integer()) throw InputError("\"ci\" must be an integer");
      a.sequence_index = item["ci"].get<int>();
    }
    out.push_back(std::move(a));
  }
  return out;
}

namespace {

std::string exponent_string(const Monomial& m) {
  std::string out = "(";
  for (std::size_t i = 0; i < m.nvars(); ++i) out += (i ? "," : "") + std::to_string(m[i]);
  return out + ")";
}

}  // namespace

std::vector<Polynomial> compute_lift(const Polynomial& a, const MonomialIdeal& ideal,
                                     LiftStrategy strategy,
                                     std::span<const TermAssignment> assignments,
                                     MonomialOrder order, int sequence_index) {
  if (a.is_zero()) throw InputError("cannot lift the zero polynomial");
  const int r = static_cast<int>(ideal.rank());
  std::vector<Polynomial> f(r, Polynomial(a.nvars(), a.field()));
  for (const auto& [mono, coeff] : a.sorted_terms(order)) {
    std::vector<int> divisors;
    for (int j = 1; j <= r; ++j)
      if (ideal.generator(j).divides(mono)) divisors.push_back(j);
    if (divisors.empty())
      throw NotInIdeal("term with exponent vector " + exponent_string(mono) +
                       " of sequence element " + std::to_string(sequence_index) +
                       " is divisible by no generator of I");
    switch (strategy) {
      case LiftStrategy::First: {
        const int j = divisors.front();
        f[j - 1].add_term(divide(mono, ideal.generator(j)), coeff);
        break;
      }
      case LiftStrategy::FixedAssignment: {
        auto it = std::find_if(assignments.begin(), assignments.end(), [&](const auto& as) {
          return as.term == mono &&
                 (!as.sequence_index || *as.sequence_index == sequence_index);
        });
        if (it == assignments.end())
          throw InputError("no generator assigned to a term of sequence element " +
                           std::to_string(sequence_index));
        if (it->generator < 1 || it->generator > r)
          throw InputError("assigned generator " + std::to_string(it->generator) +
                           " out of range");
        if (!ideal.generator(it->generator).divides(mono))
          throw InputError("assigned generator " + std::to_string(it->generator) +
                           " does not divide its term");
        f[it->generator - 1].add_term(divide(mono, ideal.generator(it->generator)), coeff);
        break;
      }
      case LiftStrategy::Average: {
        const mpq_class share = coeff / static_cast<long>(divisors.size());
        for (int j : divisors) f[j - 1].add_term(divide(mono, ideal.generator(j)), share);
        break;
      }
    }
  }
  return f;
}

LiftMatrix compute_lift_matrix(const CompleteIntersectionData& ci, LiftStrategy strategy,
                               std::span<const TermAssignment> assignments) {
  LiftMatrix lift;
  for (std::size_t i = 0; i < ci.codimension(); ++i)
    lift.rows.push_back(compute_lift(ci.sequence()[i], ci.ideal(), strategy, assignments,
                                     ci.ring().order(), static_cast<int>(i + 1)));
  return lift;
}

std::vector<Polynomial> lift_residuals(const CompleteIntersectionData& ci,
                                       const LiftMatrix& lift) {
  if (lift.codimension() != ci.codimension())
    throw InputError("lift matrix has the wrong number of rows");
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < ci.codimension(); ++i) {
    if (lift.rows[i].size() != ci.ideal().rank())
      throw InputError("lift matrix has the wrong number of columns");
    Polynomial residual = ci.sequence()[i];
    for (std::size_t j = 0; j < ci.ideal().rank(); ++j)
      residual -= lift.rows[i][j].times_monomial(ci.ideal().generators()[j]);
    out.push_back(std::move(residual));
  }
  return out;
}

LiftMatrix average_lifts(std::span<const LiftMatrix> lifts, std::span<const mpq_class> weights,
                         const Field& field) {
  if (lifts.empty()) throw InputError("nothing to average");
  if (lifts.size() != weights.size()) throw InputError("one weight per lift is required");
  mpq_class total = 0;
  for (const auto& w : weights) {
    if (w < 0) throw InputError("averaging weights must be nonnegative");
    if (field.is_prime_field() && w.get_den() % field.characteristic() == 0)
      throw CharacteristicError("weight " + w.get_str() + " is undefined in characteristic " +
                                std::to_string(field.characteristic()));
    total += w;
  }
  if (total != 1) throw InputError("averaging weights sum to " + total.get_str() + ", not 1");
  LiftMatrix out = lifts.front();
  for (std::size_t i = 0; i < out.rows.size(); ++i)
    for (std::size_t j = 0; j < out.rows[i].size(); ++j) {
      Polynomial acc(out.rows[i][j].nvars(), out.rows[i][j].field());
      for (std::size_t l = 0; l < lifts.size(); ++l) {
        if (lifts[l].rows.size() != out.rows.size() ||
            lifts[l].rows[i].size() != out.rows[i].size())
          throw InputError("lifts to average have different shapes");
        acc += lifts[l].rows[i][j].scaled(weights[l]);
      }
      out.rows[i][j] = std::move(acc);
    }
  return out;
}

LabeledGradedMatrix homotopy_matrix(const MonomialIdeal& ideal,
                                    std::span<const Polynomial> lift_row, int k) {
  const int r = static_cast<int>(ideal.rank());
  if (k < 0 || k >= r)
    throw InputError("homotopy degree " + std::to_string(k) + " outside [0, " +
                     std::to_string(r - 1) + "]");
  const auto source = taylor_module(ideal, k);
  const auto target = taylor_module(ideal, k + 1);
  std::map<std::vector<int>, std::size_t> row_of;
  for (std::size_t i = 0; i < target.size(); ++i) row_of.emplace(target[i].subset.indices, i);

  LabeledGradedMatrix sigma(target, source, ideal.nvars(), ideal.field());
  for (std::size_t col = 0; col < source.size(); ++col) {
    const SubsetLabel& s = source[col].subset;
    for (int t = 1; t <= r; ++t) {
      if (s.contains(t)) continue;
      const Polynomial& f = lift_row[t - 1];
      if (f.is_zero()) continue;
      std::vector<int> joined = s.indices;
      auto pos_it = std::lower_bound(joined.begin(), joined.end(), t);
      // 1-based position of t inside S u {t}.
      const int position = static_cast<int>(pos_it - joined.begin()) + 1;
      joined.insert(pos_it, t);
      const std::size_t row = row_of.at(joined);
      const Monomial& m_joined = target[row].subset.lcm;
      const int exponent = k - position - 1;
      const int sign = (exponent % 2 == 0) ? 1 : -1;
      sigma.at(row, col) = f.times_monomial(divide(ideal.generator(t) * s.lcm, m_joined), sign);
    }
  }
  return sigma;
}

HomotopySystem::HomotopySystem(CompleteIntersectionData ci, LiftMatrix lift)
    : ci_(std::move(ci)), lift_(std::move(lift)), taylor_(build_taylor_complex(ci_.ideal())) {
  if (lift_.codimension() != ci_.codimension())
    throw InputError("lift matrix has the wrong number of rows");
  const int r = static_cast<int>(rank());
  for (const auto& row : lift_.rows) {
    if (row.size() != rank()) throw InputError("lift matrix has the wrong number of columns");
    std::vector<LabeledGradedMatrix> per_degree;
    for (int k = 0; k < r; ++k) per_degree.push_back(homotopy_matrix(ci_.ideal(), row, k));
    sigma_.push_back(std::move(per_degree));
  }
}

const LabeledGradedMatrix& HomotopySystem::sigma_e(int i, int k) const {
  return sigma_.at(i - 1).at(k);
}

namespace {

std::string describe_column(const LabeledGradedMatrix& m, std::size_t col, std::size_t r) {
  return "eps_" + subset_name(m.col_labels()[col].subset.indices, r);
}

}  // namespace

Report verify_homotopy_system(const HomotopySystem& system) {
  Report report{"homotopy: conditions (a) (b) (c)"};
  const int r = static_cast<int>(system.rank());
  const int c = static_cast<int>(system.codimension());
  const auto& ideal = system.ci().ideal();
  const auto& T = system.taylor();
  const std::size_t nvars = ideal.nvars();
  const Field field = ideal.field();

  auto check_zero = [&](const LabeledGradedMatrix& m, const std::string& condition, int k) {
    ++report.checks;
    if (auto nz = m.first_nonzero()) {
      report.fail({condition, k, describe_column(m, nz->second, ideal.rank()),
                   "unexpected nonzero coefficient on eps_" +
                       subset_name(m.row_labels()[nz->first].subset.indices, ideal.rank())});
      return false;
    }
    return true;
  };

  // (a) sigma_0 sigma_0 = 0 on T_k for 2 <= k <= r.
  for (int k = 2; k <= r; ++k)
    if (!check_zero(T.tau(k - 1) * T.tau(k), "(a) sigma_0^2 = 0", k)) return report;

  // (b) on T_k: tau_{k+1} sigma_k + sigma_{k-1} tau_k = a_j id.
  for (int j = 1; j <= c; ++j) {
    const Polynomial& a = system.ci().sequence()[j - 1];
    for (int k = 0; k <= r; ++k) {
      const auto& basis = T.modules[k];
      LabeledGradedMatrix lhs(basis, basis, nvars, field);
      if (k < r) lhs = lhs + T.tau(k + 1) * system.sigma_e(j, k);
      if (k > 0) lhs = lhs + system.sigma_e(j, k - 1) * T.tau(k);
      const auto diff = lhs - LabeledGradedMatrix::identity(basis, nvars, field).scaled(a);
      if (!check_zero(diff, "(b) sigma_0 sigma_e" + std::to_string(j) + " + sigma_e" +
                                std::to_string(j) + " sigma_0 = a_" + std::to_string(j),
                      k))
        return report;
    }
  }

  // (c) on T_k: sigma_i sigma_j + sigma_j sigma_i = 0, i <= j, 0 <= k <= r-2.
  for (int i = 1; i <= c; ++i)
    for (int j = i; j <= c; ++j)
      for (int k = 0; k + 2 <= r; ++k) {
        auto sum = system.sigma_e(i, k + 1) * system.sigma_e(j, k) +
                   system.sigma_e(j, k + 1) * system.sigma_e(i, k);
        if (!check_zero(sum, "(c) sigma_e" + std::to_string(i) + " sigma_e" + std::to_string(j) +
                                 " anticommute",
                        k))
          return report;
      }
  return report;
}

}  // namespace citaylor
