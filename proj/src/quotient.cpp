#include "citaylor/quotient.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "citaylor/errors.hpp"

namespace citaylor {
namespace {

Polynomial monic(const Polynomial& p, MonomialOrder order) {
  return p.scaled(1 / p.leading_term(order).second);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  const auto [mf, cf] = f.leading_term(order);
  const auto [mg, cg] = g.leading_term(order);
  const Monomial l = lcm(mf, mg);
  return f.times_monomial(divide(l, mf), 1 / cf) - g.times_monomial(divide(l, mg), 1 / cg);
}

Polynomial reduce_by(const Polynomial& p, const std::vector<Polynomial>& basis,
                     MonomialOrder order) {
  std::vector<Polynomial::Term> leads;
  leads.reserve(basis.size());
  for (const auto& g : basis) leads.push_back(g.leading_term(order));
  Polynomial remainder(p.nvars(), p.field());
  Polynomial h = p;
  while (!h.is_zero()) {
    const auto [m, c] = h.leading_term(order);
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!leads[i].first.divides(m)) continue;
      h -= basis[i].times_monomial(divide(m, leads[i].first), c / leads[i].second);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(m, c);
      h.add_term(m, -c);
    }
  }
  return remainder;
}

void all_monomials(std::size_t nvars, int degree, std::vector<Monomial>& out) {
  std::vector<int> e(nvars, 0);
  std::function<void(std::size_t, int)> fill = [&](std::size_t pos, int remaining) {
    if (pos + 1 == nvars) {
      e[pos] = remaining;
      out.emplace_back(e);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      e[pos] = v;
      fill(pos + 1, remaining - v);
    }
  };
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(e);
    return;
  }
  fill(0, degree);
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, MonomialOrder order,
                         GroebnerCaps caps) {
  if (caps.max_pairs == 0 || caps.max_degree <= 0) throw InputError("Groebner caps must be positive");
  std::vector<Polynomial> g;
  for (const auto& p : generators) {
    if (p.is_zero()) throw InputError("Groebner basis input contains the zero polynomial");
    g.push_back(monic(p, order));
  }
  if (g.empty()) throw InputError("Groebner basis of an empty generator list");

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  auto pair_degree = [&](const std::pair<std::size_t, std::size_t>& pr) {
    return lcm(g[pr.first].leading_monomial(order), g[pr.second].leading_monomial(order)).degree();
  };

  std::size_t processed = 0;
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      const int da = pair_degree(a), db = pair_degree(b);
      if (da != db) return da < db;
      return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    const auto [i, j] = *best;
    pairs.erase(best);
    if (++processed > caps.max_pairs)
      throw CapExceeded("Buchberger exceeded " + std::to_string(caps.max_pairs) + " pairs");
    const Monomial& li = g[i].leading_monomial(order);
    const Monomial& lj = g[j].leading_monomial(order);
    if (gcd(li, lj).is_one()) continue;
    if (lcm(li, lj).degree() > caps.max_degree)
      throw CapExceeded("Buchberger reached degree " + std::to_string(lcm(li, lj).degree()) +
                        " > " + std::to_string(caps.max_degree));
    Polynomial h = reduce_by(s_polynomial(g[i], g[j], order), g, order);
    if (h.is_zero()) continue;
    g.push_back(monic(h, order));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // Minimalize, then interreduce.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Monomial& li = g[i].leading_monomial(order);
    bool redundant = false;
    for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
      if (k == i) continue;
      const Monomial& lk = g[k].leading_monomial(order);
      redundant = lk.divides(li) && (lk != li || k < i);
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  GroebnerBasis gb{{}, order, true};
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    const auto lead = minimal[i].leading_term(order);
    Polynomial tail = minimal[i];
    tail.add_term(lead.first, -lead.second);
    Polynomial reduced = reduce_by(tail, others, order);
    reduced.add_term(lead.first, lead.second);
    gb.generators.push_back(std::move(reduced));
  }
  std::sort(gb.generators.begin(), gb.generators.end(), [order](const auto& a, const auto& b) {
    return monomial_greater(order, b.leading_monomial(order), a.leading_monomial(order));
  });
  return gb;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  return reduce_by(p, gb.generators, gb.order);
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  std::vector<Monomial> all;
  all_monomials(nvars, degree, all);
  std::vector<Monomial> leads;
  for (const auto& g : gb.generators) leads.push_back(g.leading_monomial(gb.order));
  for (auto& m : all)
    if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); }))
      out.push_back(std::move(m));
  return out;
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  std::size_t rank = 0;
  auto inverse = [p](std::uint64_t a) {
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const std::uint64_t inv = inverse(rows[rank][col]);
    for (auto& v : rows[rank]) v = static_cast<std::uint32_t>(v * inv % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const std::uint64_t factor = rows[r][col];
      for (std::size_t k = col; k < ncols; ++k)
        rows[r][k] = static_cast<std::uint32_t>(
            (rows[r][k] + (p - factor) * rows[rank][k]) % p);
    }
    ++rank;
  }
  return rank;
}

namespace {

class GradedPieces {
 public:
  GradedPieces(const GroebnerBasis& gb, std::size_t nvars) : gb_(gb), nvars_(nvars) {}

  const std::vector<Monomial>& basis(int degree) {
    if (degree < 0) return empty_;
    auto it = cache_.find(degree);
    if (it == cache_.end()) it = cache_.emplace(degree, standard_monomials(gb_, nvars_, degree)).first;
    return it->second;
  }

 private:
  const GroebnerBasis& gb_;
  std::size_t nvars_;
  std::map<int, std::vector<Monomial>> cache_;
  std::vector<Monomial> empty_;
};

std::size_t piece_dimension(const std::vector<BasisLabel>& module, int d, GradedPieces& pieces) {
  std::size_t dim = 0;
  for (const auto& b : module) dim += pieces.basis(d - b.twist).size();
  return dim;
}

/// Rank of phi restricted to internal degree d, over GF(p).
std::size_t graded_rank(const LabeledGradedMatrix& phi, int d, const Field& field,
                        const GroebnerBasis& gb, GradedPieces& pieces) {
  // Row offsets: target summand rho contributes basis(d - twist(rho)).
  std::vector<std::size_t> row_offset;
  std::size_t nrows = 0;
  for (const auto& rho : phi.row_labels()) {
    row_offset.push_back(nrows);
    nrows += pieces.basis(d - rho.twist).size();
  }
  std::vector<std::vector<std::uint32_t>> columns;
  for (std::size_t col = 0; col < phi.cols(); ++col) {
    const auto& mus = pieces.basis(d - phi.col_labels()[col].twist);
    for (const auto& mu : mus) {
      std::vector<std::uint32_t> column(nrows, 0);
      for (std::size_t row = 0; row < phi.rows(); ++row) {
        const Polynomial& e = phi.at(row, col);
        if (e.is_zero()) continue;
        const Polynomial image = normal_form(e.with_field(field).times_monomial(mu), gb);
        const auto& nus = pieces.basis(d - phi.row_labels()[row].twist);
        for (const auto& [m, c] : image.terms()) {
          auto it = std::find(nus.begin(), nus.end(), m);
          if (it == nus.end())
            throw Error("normal form left the graded piece; the differential is not homogeneous");
          column[row_offset[row] + static_cast<std::size_t>(it - nus.begin())] =
              static_cast<std::uint32_t>(c.get_num().get_ui());
        }
      }
      columns.push_back(std::move(column));
    }
  }
  // Rank of the transpose equals the rank.
  return rank_mod_p(std::move(columns), field.characteristic());
}

}  // namespace

Report check_exactness(const ShamashResolution& res, int n, const ExactnessOptions& options) {
  if (n < 1 || n + 1 > res.max_step())
    throw InputError("exactness at F_" + std::to_string(n) + " needs 1 <= n <= N-1 (N = " +
                     std::to_string(res.max_step()) + ")");
  if (options.max_internal_degree < 0) throw InputError("max internal degree must be nonnegative");
  const Field field(options.prime);
  if (!field.is_prime_field()) throw InputError("exactness checks need a prime field");
  const auto& ci = res.system().ci();

  std::vector<Polynomial> sequence;
  for (const auto& a : ci.sequence()) sequence.push_back(a.with_field(field));
  const GroebnerBasis gb = buchberger(sequence, MonomialOrder::GradedRevLex, options.caps);
  GradedPieces pieces(gb, ci.ring().nvars());

  Report report{"quotient: H_" + std::to_string(n) + " vanishes in degrees <= " +
                std::to_string(options.max_internal_degree) + " over GF(" +
                std::to_string(options.prime) + ")"};
  for (int d = 0; d <= options.max_internal_degree; ++d) {
    ++report.checks;
    const std::size_t dim = piece_dimension(res.basis(n), d, pieces);
    const std::size_t out_rank = dim == 0 ? 0 : graded_rank(res.phi(n), d, field, gb, pieces);
    const std::size_t in_rank = dim == 0 ? 0 : graded_rank(res.phi(n + 1), d, field, gb, pieces);
    const std::size_t kernel = dim - out_rank;
    if (kernel != in_rank) {
      report.fail({"homology", n, "internal degree " + std::to_string(d),
                   "dim ker = " + std::to_string(kernel) + ", dim im = " + std::to_string(in_rank)});
      return report;
    }
    report.notes.push_back("d=" + std::to_string(d) + ": dim " + std::to_string(dim) +
                           ", rank out " + std::to_string(out_rank) + ", rank in " +
                           std::to_string(in_rank));
  }
  return report;
}

}  // namespace citaylor
