#include "citaylor/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "citaylor/errors.hpp"

namespace citaylor {
namespace {

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char ch) { return (ch & 0xC0) != 0x80; }));
}

std::string pad_left(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return w >= width ? s : std::string(width - w, ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

std::string u_name(const DPIndex& u) {
  std::string out;
  for (std::size_t i = 0; i < u.length(); ++i)
    out += (i ? "," : "") + std::to_string(u.exponents[i]);
  return out;
}

std::string node_id(const std::vector<int>& indices) {
  std::string out = "S";
  for (int i : indices) out += "_" + std::to_string(i);
  return out;
}

}  // namespace

std::string module_summary(const std::vector<BasisLabel>& basis, const std::string& ring_name) {
  if (basis.empty()) return "0";
  std::map<int, int> counts;
  for (const auto& b : basis) ++counts[b.twist];
  std::string out;
  for (const auto& [twist, count] : counts) {
    if (!out.empty()) out += " + ";
    out += ring_name;
    if (twist != 0) out += "(" + std::to_string(-twist) + ")";
    if (count > 1) out += "^" + std::to_string(count);
  }
  return out;
}

std::string render_text_matrix(const std::string& title, const LabeledGradedMatrix& m,
                               const PolyRing& ring, std::size_t r, bool show_u) {
  std::ostringstream out;
  out << title << '\n';
  if (m.rows() == 0 || m.cols() == 0) {
    out << "  (zero module)\n";
    return out.str();
  }
  const auto& cols = m.col_labels();
  const auto& rows = m.row_labels();
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    width[j] = display_width(subset_name(cols[j].subset.indices, r));
    if (show_u) width[j] = std::max(width[j], display_width(u_name(cols[j].u)));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      cells[i][j] = to_string(m.at(i, j), ring);
      width[j] = std::max(width[j], display_width(cells[i][j]));
    }
  }
  auto separator = [&](std::size_t j, bool bar) -> std::string {
    if (j == 0) return "";
    if (!(cols[j].u == cols[j - 1].u)) return bar ? " | " : "   ";
    return "  ";
  };
  auto line = [&](auto&& cell_of, bool bar) {
    std::string s;
    for (std::size_t j = 0; j < m.cols(); ++j) s += separator(j, bar) + pad_left(cell_of(j), width[j]);
    return s;
  };
  std::size_t row_label_width = 0;
  for (const auto& b : rows)
    row_label_width = std::max(row_label_width, display_width(subset_name(b.subset.indices, r)));

  out << "  " << line([&](std::size_t j) { return subset_name(cols[j].subset.indices, r); }, false)
      << '\n';
  if (show_u)
    out << "  " << line([&](std::size_t j) { return u_name(cols[j].u); }, false) << "  (u)\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const std::string body = line([&](std::size_t j) { return cells[i][j]; }, true);
    if (i > 0 && !(rows[i].u == rows[i - 1].u))
      out << "  " << std::string(display_width(body), '-') << '\n';
    out << "[ " << body << " ]  ";
    const std::string label = subset_name(rows[i].subset.indices, r);
    if (show_u)
      out << pad_right(label, row_label_width) << "  (u=" << u_name(rows[i].u) << ")";
    else
      out << label;
    out << '\n';
  }
  return out.str();
}

std::string tex_polynomial(const Polynomial& p, const PolyRing& ring) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.sorted_terms(ring.order())) {
    const mpq_class mag = abs(c);
    if (c < 0)
      out += "-";
    else if (!first)
      out += "+";
    first = false;
    std::string coeff;
    if (mag.get_den() != 1)
      coeff = "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
    else if (mag != 1 || m.is_one())
      coeff = mag.get_str();
    out += coeff;
    std::string mono;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty() || !coeff.empty()) mono += ' ';
      mono += ring.variables()[i];
      if (m[i] > 9)
        mono += "^{" + std::to_string(m[i]) + "}";
      else if (m[i] > 1)
        mono += "^" + std::to_string(m[i]);
    }
    out += mono;
  }
  return out;
}

std::string render_tex_matrix(const std::string& name, const LabeledGradedMatrix& m,
                              const PolyRing& ring, std::size_t r) {
  auto tex_subset = [r](const SubsetLabel& s) {
    return s.indices.empty() ? std::string("\\emptyset") : subset_name(s.indices, r);
  };
  std::ostringstream out;
  out << name << " =\n";
  if (m.rows() == 0 || m.cols() == 0) {
    out << "0\n";
    return out.str();
  }
  const auto& cols = m.col_labels();
  const auto& rows = m.row_labels();
  std::string column_format;
  for (std::size_t j = 0; j < m.cols();) {
    std::size_t run = 1;
    while (j + run < m.cols() && cols[j + run].u == cols[j].u) ++run;
    if (!column_format.empty()) column_format += "|";
    column_format += run == 1 ? "r" : "*{" + std::to_string(run) + "}r";
    j += run;
  }
  out << "\\begin{blockarray}{*{" << m.cols() + 1 << "}{>{\\scriptstyle}c}<{}}\n";
  for (std::size_t j = 0; j < m.cols(); ++j) out << tex_subset(cols[j].subset) << " & ";
  out << "\\\\\n";
  out << "\\begin{block}{[" << column_format << "]>{\\scriptstyle}c<{}}\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i > 0 && !(rows[i].u == rows[i - 1].u))
      out << "\\BAhhline{" << std::string(m.cols(), '-') << "}\n";
    for (std::size_t j = 0; j < m.cols(); ++j) out << tex_polynomial(m.at(i, j), ring) << " & ";
    out << tex_subset(rows[i].subset) << " \\\\\n";
  }
  out << "\\end{block}\n\\end{blockarray}\n";
  return out.str();
}

namespace {

void dot_vertices(std::ostringstream& out, const TaylorComplex& t) {
  const std::size_t r = t.ideal.rank();
  for (const auto& module : t.modules)
    for (const auto& b : module)
      out << "  " << node_id(b.subset.indices) << " [label=\"" << subset_name(b.subset.indices, r)
          << "\"];\n";
  for (int parity = 0; parity < 2; ++parity) {
    out << "  { rank=same;";
    for (std::size_t k = parity; k < t.modules.size(); k += 2)
      for (const auto& b : t.modules[k]) out << ' ' << node_id(b.subset.indices) << ';';
    out << " }\n";
  }
}

void dot_taylor_edges(std::ostringstream& out, const TaylorComplex& t) {
  for (std::size_t k = 1; k < t.differentials.size(); ++k) {
    const auto& tau = t.differentials[k];
    for (std::size_t col = 0; col < tau.cols(); ++col)
      for (std::size_t row = 0; row < tau.rows(); ++row)
        if (!tau.at(row, col).is_zero())
          out << "  " << node_id(tau.col_labels()[col].subset.indices) << " -> "
              << node_id(tau.row_labels()[row].subset.indices) << " [color=blue];\n";
  }
}

}  // namespace

std::string render_dot(const TaylorComplex& taylor) {
  std::ostringstream out;
  out << "digraph taylor {\n  node [shape=circle];\n";
  dot_vertices(out, taylor);
  dot_taylor_edges(out, taylor);
  out << "}\n";
  return out.str();
}

std::string render_dot(const HomotopySystem& system) {
  std::ostringstream out;
  const auto& t = system.taylor();
  const int r = static_cast<int>(system.rank());
  const int c = static_cast<int>(system.codimension());
  out << "digraph matrix_factorization {\n  node [shape=circle];\n";
  dot_vertices(out, t);
  dot_taylor_edges(out, t);
  for (int i = 1; i <= c; ++i)
    for (int k = 0; k < r; ++k) {
      const auto& sigma = system.sigma_e(i, k);
      for (std::size_t col = 0; col < sigma.cols(); ++col)
        for (std::size_t row = 0; row < sigma.rows(); ++row) {
          if (sigma.at(row, col).is_zero()) continue;
          out << "  " << node_id(sigma.col_labels()[col].subset.indices) << " -> "
              << node_id(sigma.row_labels()[row].subset.indices) << " [color=red";
          if (c > 1) out << ", label=\"e" << i << "\"";
          out << "];\n";
        }
    }
  out << "}\n";
  return out.str();
}

// ------------------------------------------------------------------ JSON

PolyRing ResolutionDocument::ring() const { return PolyRing(vars, Field(characteristic)); }

ResolutionDocument make_document(const TaylorComplex& taylor, const PolyRing& ring) {
  ResolutionDocument doc;
  doc.vars = ring.variables();
  doc.characteristic = ring.field().characteristic();
  for (const auto& g : taylor.ideal.generators()) doc.ideal.push_back(to_string(g, ring));
  doc.modules = taylor.modules;
  for (std::size_t k = 1; k < taylor.differentials.size(); ++k)
    doc.differentials.push_back(taylor.differentials[k]);
  return doc;
}

ResolutionDocument make_document(const ShamashResolution& res) {
  const auto& ci = res.system().ci();
  ResolutionDocument doc;
  doc.vars = ci.ring().variables();
  doc.characteristic = ci.ring().field().characteristic();
  for (const auto& g : ci.ideal().generators()) doc.ideal.push_back(to_string(g, ci.ring()));
  for (const auto& a : ci.sequence()) doc.ci.push_back(to_string(a, ci.ring()));
  for (int n = 0; n <= res.max_step(); ++n) doc.modules.push_back(res.basis(n));
  for (int n = 1; n <= res.max_step(); ++n) doc.differentials.push_back(res.phi(n));
  return doc;
}

nlohmann::ordered_json to_json(const ResolutionDocument& doc) {
  using json = nlohmann::ordered_json;
  const PolyRing ring = doc.ring();
  json j;
  j["ring"] = {{"vars", doc.vars}, {"char", doc.characteristic}};
  j["ideal"] = doc.ideal;
  j["ci"] = doc.ci;
  json modules = json::array();
  for (const auto& module : doc.modules) {
    json m = json::array();
    for (const auto& b : module)
      m.push_back({{"u", b.u.exponents}, {"S", b.subset.indices}, {"twist", b.twist}});
    modules.push_back(std::move(m));
  }
  j["modules"] = std::move(modules);
  json diffs = json::array();
  for (std::size_t i = 0; i < doc.differentials.size(); ++i) {
    const auto& m = doc.differentials[i];
    json entries = json::array();
    for (std::size_t row = 0; row < m.rows(); ++row)
      for (std::size_t col = 0; col < m.cols(); ++col)
        if (!m.at(row, col).is_zero())
          entries.push_back({{"row", row}, {"col", col}, {"poly", to_string(m.at(row, col), ring)}});
    diffs.push_back({{"from", i + 1}, {"to", i}, {"entries", std::move(entries)}});
  }
  j["differentials"] = std::move(diffs);
  j["reports"] = doc.reports;
  return j;
}

ResolutionDocument document_from_json(const nlohmann::ordered_json& j) {
  try {
    ResolutionDocument doc;
    doc.vars = j.at("ring").at("vars").get<std::vector<std::string>>();
    doc.characteristic = j.at("ring").at("char").get<std::uint32_t>();
    doc.ideal = j.at("ideal").get<std::vector<std::string>>();
    doc.ci = j.at("ci").get<std::vector<std::string>>();
    const PolyRing ring = doc.ring();
    const MonomialIdeal ideal = parse_monomial_ideal(doc.ideal, ring);
    for (const auto& module : j.at("modules")) {
      std::vector<BasisLabel> basis;
      for (const auto& b : module)
        basis.push_back(BasisLabel{DPIndex{b.at("u").get<std::vector<int>>()},
                                   ideal.label(b.at("S").get<std::vector<int>>()),
                                   b.at("twist").get<int>()});
      doc.modules.push_back(std::move(basis));
    }
    for (const auto& d : j.at("differentials")) {
      const auto from = d.at("from").get<std::size_t>();
      const auto to = d.at("to").get<std::size_t>();
      if (from != to + 1 || from >= doc.modules.size())
        throw InputError("differential " + std::to_string(from) + " -> " + std::to_string(to) +
                         " does not match the module list");
      LabeledGradedMatrix m(doc.modules[to], doc.modules[from], ring.nvars(), ring.field());
      for (const auto& e : d.at("entries"))
        m.at(e.at("row").get<std::size_t>(), e.at("col").get<std::size_t>()) =
            parse_polynomial(e.at("poly").get<std::string>(), ring);
      doc.differentials.push_back(std::move(m));
    }
    if (j.contains("reports")) doc.reports = j.at("reports");
    return doc;
  } catch (const nlohmann::ordered_json::exception& e) {
    throw InputError(std::string("malformed resolution document: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw InputError(std::string("malformed resolution document: ") + e.what());
  }
}

}  // namespace citaylor
