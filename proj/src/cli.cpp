#include "citaylor/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "citaylor/errors.hpp"
#include "citaylor/homotopy.hpp"
#include "citaylor/quotient.hpp"
#include "citaylor/render.hpp"
#include "citaylor/shamash.hpp"
#include "citaylor/taylor.hpp"

namespace citaylor {
namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    out.push_back(item);
  }
  return out;
}

/// Flags shared by all subcommands, validated before any computation.
struct JobSpec {
  std::string vars;
  std::uint32_t characteristic = 0;
  std::string order = "grlex";
  std::string ideal;
  std::string ci;
  std::string lift = "first";
  std::optional<int> max_step;
  std::optional<int> max_degree;
  std::uint32_t prime = 32003;
  std::string format = "text";
  std::string out_path;
  std::optional<int> betti_r;
  std::optional<int> betti_c;
  int max_m = 4;

  PolyRing ring() const {
    if (vars.empty()) throw InputError("--vars is required");
    return PolyRing(split_list(vars), Field(characteristic), parse_monomial_order(order));
  }

  MonomialIdeal monomial_ideal(const PolyRing& ring) const {
    if (ideal.empty()) throw InputError("--ideal is required");
    return parse_monomial_ideal(split_list(ideal), ring);
  }

  int required_max_step() const {
    if (!max_step) throw InputError("--max-step is required");
    if (*max_step < 0) throw InputError("--max-step must be nonnegative");
    return *max_step;
  }

  void require_format(std::initializer_list<std::string_view> allowed) const {
    if (std::find(allowed.begin(), allowed.end(), format) == allowed.end())
      throw InputError("--format " + format + " is not supported by this subcommand");
  }
};

struct LiftChoice {
  LiftStrategy strategy = LiftStrategy::First;
  std::vector<TermAssignment> assignments;
  std::string name;
};

LiftChoice parse_lift_flag(const std::string& flag, const PolyRing& ring) {
  LiftChoice choice;
  choice.name = flag;
  if (flag == "first") return choice;
  if (flag == "average") {
    choice.strategy = LiftStrategy::Average;
    return choice;
  }
  if (flag.rfind("file:", 0) == 0) {
    const std::string path = flag.substr(5);
    std::ifstream in(path);
    if (!in) throw InputError("--lift: cannot read " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    choice.strategy = LiftStrategy::FixedAssignment;
    choice.name = "fixed, " + std::filesystem::path(path).filename().string();
    choice.assignments = parse_lift_assignments(buffer.str(), ring);
    return choice;
  }
  throw InputError("--lift must be first, average or file:PATH");
}

HomotopySystem build_system(const JobSpec& job, LiftChoice* used = nullptr) {
  const PolyRing ring = job.ring();
  MonomialIdeal ideal = job.monomial_ideal(ring);
  if (job.ci.empty()) throw InputError("--ci is required");
  std::vector<Polynomial> sequence;
  for (const auto& s : split_list(job.ci)) sequence.push_back(parse_polynomial(s, ring));
  CompleteIntersectionData ci(ring, std::move(ideal), std::move(sequence));
  LiftChoice lift = parse_lift_flag(job.lift, ring);
  LiftMatrix f = compute_lift_matrix(ci, lift.strategy, lift.assignments);
  if (used) *used = std::move(lift);
  return HomotopySystem(std::move(ci), std::move(f));
}

json report_json(const Report& r) {
  json j{{"name", r.name}, {"passed", r.passed}, {"checks", r.checks}};
  if (r.failure)
    j["failure"] = {{"condition", r.failure->condition},
                    {"degree", r.failure->degree},
                    {"basis_element", r.failure->basis_element},
                    {"detail", r.failure->detail}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

std::string report_line(const Report& r) {
  std::string s = (r.passed ? "PASS " : "FAIL ") + r.name + " [" + std::to_string(r.checks) +
                  " checks]";
  if (r.failure)
    s += "\n  first failure: " + r.failure->condition + " at degree " +
         std::to_string(r.failure->degree) + ", " + r.failure->basis_element + ": " +
         r.failure->detail;
  for (const auto& note : r.notes)
    if (r.notes.size() <= 3) s += "\n  note: " + note;
  return s;
}

Report lift_report(const HomotopySystem& system) {
  Report report{"lift: a_i = sum_j f_ij m_j"};
  const auto residuals = lift_residuals(system.ci(), system.lift());
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    ++report.checks;
    if (!residuals[i].is_zero())
      report.fail({"lift", 0, "a_" + std::to_string(i + 1),
                   "residual " + to_string(residuals[i], system.ci().ring())});
  }
  return report;
}

json lift_json(const HomotopySystem& system, const std::string& strategy) {
  json rows = json::array();
  for (const auto& row : system.lift().rows) {
    json r = json::array();
    for (const auto& f : row) r.push_back(to_string(f, system.ci().ring()));
    rows.push_back(std::move(r));
  }
  return {{"strategy", strategy}, {"rows", std::move(rows)}};
}

json minimality_json(const MinimalityVerdict& v) {
  json w = json::array();
  for (const auto& x : v.witnesses) w.push_back({{"source", x.source}, {"where", x.where}, {"entry", x.entry}});
  return {{"minimal", v.minimal}, {"witnesses", std::move(w)}};
}

json periodicity_json(const Periodicity& p) {
  if (!p.applicable) return {{"applicable", false}};
  json j{{"applicable", true}};
  j["start"] = p.start ? json(*p.start) : json(nullptr);
  return j;
}

std::string ring_header(const PolyRing& ring) {
  std::string s = ring.field().is_prime_field()
                      ? "GF(" + std::to_string(ring.field().characteristic()) + ")"
                      : "QQ";
  s += "[";
  for (std::size_t i = 0; i < ring.nvars(); ++i) s += (i ? "," : "") + ring.variables()[i];
  return s + "]";
}

void emit(const JobSpec& job, const std::string& text, std::ostream& out) {
  if (job.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(job.out_path);
  if (!file) throw InputError("--out: cannot write " + job.out_path);
  file << text;
}

// ---------------------------------------------------------------- commands

int cmd_taylor(const JobSpec& job, std::ostream& out) {
  job.require_format({"text", "json", "tex", "dot"});
  const PolyRing ring = job.ring();
  const MonomialIdeal ideal = job.monomial_ideal(ring);
  const TaylorComplex t = build_taylor_complex(ideal);
  const Report check = verify_taylor(ideal);
  const std::size_t r = ideal.rank();
  std::ostringstream s;
  if (job.format == "json") {
    ResolutionDocument doc = make_document(t, ring);
    doc.reports["taylor"] = report_json(check);
    doc.reports["warnings"] = ideal.warnings();
    s << to_json(doc).dump(2) << '\n';
  } else if (job.format == "dot") {
    s << render_dot(t);
  } else if (job.format == "tex") {
    for (std::size_t k = 1; k <= r; ++k)
      s << render_tex_matrix("\\tau_{" + std::to_string(k) + "}", t.tau(static_cast<int>(k)), ring, r)
        << '\n';
  } else {
    s << "ring: " << ring_header(ring) << '\n';
    for (const auto& w : ideal.warnings()) s << "warning: " << w << '\n';
    for (std::size_t k = 0; k <= r; ++k)
      s << "T_" << k << " = " << module_summary(t.modules[k], "Q") << '\n';
    for (std::size_t k = 1; k <= r; ++k)
      s << '\n'
        << render_text_matrix("tau_" + std::to_string(k) + ": T_" + std::to_string(k) + " -> T_" +
                                  std::to_string(k - 1),
                              t.tau(static_cast<int>(k)), ring, r, false);
    s << '\n' << report_line(check) << '\n';
  }
  emit(job, s.str(), out);
  return check.passed ? kExitPass : kExitVerificationFailure;
}

int cmd_resolve(const JobSpec& job, std::ostream& out) {
  job.require_format({"text", "json", "tex", "dot"});
  const int n_max = job.required_max_step();
  LiftChoice lift;
  HomotopySystem system = build_system(job, &lift);
  const Report lift_check = lift_report(system);
  const ShamashResolution res(std::move(system), n_max);
  const auto& sys = res.system();
  const auto& ring = sys.ci().ring();
  const std::size_t r = sys.rank();
  const Report phi2 = phi_squared_check(res);
  const MinimalityVerdict minimal = minimality_check(sys);
  const Periodicity period = tail_periodicity(res);
  std::optional<MatrixFactorization> mf;
  if (period.start) mf = matrix_factorization(res);
  const bool passed = phi2.passed && lift_check.passed;

  std::ostringstream s;
  if (job.format == "json") {
    ResolutionDocument doc = make_document(res);
    doc.reports["lift"] = lift_json(sys, lift.name);
    doc.reports["lift_check"] = report_json(lift_check);
    doc.reports["phi_squared"] = report_json(phi2);
    doc.reports["minimality"] = minimality_json(minimal);
    doc.reports["periodicity"] = periodicity_json(period);
    s << to_json(doc).dump(2) << '\n';
  } else if (job.format == "dot") {
    s << render_dot(sys);
  } else if (job.format == "tex") {
    for (int n = 1; n <= n_max; ++n)
      s << render_tex_matrix("\\varphi_{" + std::to_string(n) + "}", res.phi(n), ring, r) << '\n';
  } else {
    s << "ring: " << ring_header(ring) << '\n';
    s << "ideal: ";
    for (std::size_t j = 0; j < r; ++j)
      s << (j ? ", " : "") << to_string(sys.ci().ideal().generators()[j], ring);
    s << '\n';
    for (const auto& w : sys.ci().ideal().warnings()) s << "warning: " << w << '\n';
    for (std::size_t i = 0; i < sys.codimension(); ++i)
      s << "a_" << i + 1 << " = " << to_string(sys.ci().sequence()[i], ring) << "  (degree "
        << sys.ci().degrees()[i] << ")\n";
    s << "lift (" << lift.name << "):\n";
    for (std::size_t i = 0; i < sys.codimension(); ++i) {
      s << "  f_" << i + 1 << " = (";
      for (std::size_t j = 0; j < r; ++j) s << (j ? ", " : "") << to_string(sys.lift().rows[i][j], ring);
      s << ")\n";
    }
    for (int n = 0; n <= n_max; ++n) s << "F_" << n << " = " << module_summary(res.basis(n), "R") << '\n';
    for (int n = 1; n <= n_max; ++n)
      s << '\n'
        << render_text_matrix("phi_" + std::to_string(n) + ": F_" + std::to_string(n) + " -> F_" +
                                  std::to_string(n - 1),
                              res.phi(n), ring, r, true);
    s << '\n';
    s << "minimality: " << (minimal.minimal ? "minimal" : "nonminimal") << '\n';
    for (const auto& w : minimal.witnesses)
      s << "  " << w.source << " " << w.where << ": " << w.entry << '\n';
    if (!period.applicable)
      s << "periodicity: not applicable (c = " << sys.codimension() << ")\n";
    else if (!period.start)
      s << "periodicity: no 2-periodic tail within N = " << n_max << '\n';
    else
      s << "periodicity: 2-periodic from n = " << *period.start << '\n'
        << "matrix factorization: A = phi_" << mf->start << ", B = phi_" << mf->start + 1
        << ", AB = BA = (" << to_string(sys.ci().sequence()[0], ring) << ") I_"
        << mf->a_map.cols() << '\n';
    s << report_line(lift_check) << '\n' << report_line(phi2) << '\n';
  }
  emit(job, s.str(), out);
  return passed ? kExitPass : kExitVerificationFailure;
}

int cmd_verify(const JobSpec& job, std::ostream& out) {
  job.require_format({"text", "json"});
  const int n_max = job.required_max_step();
  HomotopySystem system = build_system(job);
  std::vector<Report> reports;
  reports.push_back(verify_taylor(system.ci().ideal()));
  reports.push_back(lift_report(system));
  reports.push_back(verify_homotopy_system(system));
  const ShamashResolution res(std::move(system), n_max);
  reports.push_back(phi_squared_check(res));
  reports.push_back(homogeneity_check(res));
  if (job.max_degree) {
    ExactnessOptions options;
    options.max_internal_degree = *job.max_degree;
    options.prime = job.prime;
    for (int n = 1; n + 1 <= n_max; ++n) reports.push_back(check_exactness(res, n, options));
  }
  const bool passed =
      std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed; });
  std::ostringstream s;
  if (job.format == "json") {
    json j = json::array();
    for (const auto& r : reports) j.push_back(report_json(r));
    s << json{{"passed", passed}, {"reports", j}}.dump(2) << '\n';
  } else {
    for (const auto& r : reports) s << report_line(r) << '\n';
    s << (passed ? "all checks passed" : "verification FAILED") << '\n';
  }
  emit(job, s.str(), out);
  return passed ? kExitPass : kExitVerificationFailure;
}

int cmd_betti(const JobSpec& job, std::ostream& out) {
  job.require_format({"text", "json"});
  int r = 0, c = 0;
  if (job.betti_r && job.betti_c) {
    r = *job.betti_r;
    c = *job.betti_c;
  } else {
    const PolyRing ring = job.ring();
    r = static_cast<int>(job.monomial_ideal(ring).rank());
    if (job.ci.empty()) throw InputError("betti needs --r and --c, or --ideal and --ci");
    c = static_cast<int>(split_list(job.ci).size());
  }
  if (job.max_m < 0) throw InputError("--max-m must be nonnegative");
  std::ostringstream s;
  if (job.format == "json") {
    json rows = json::array();
    for (int m = 0; m <= job.max_m; ++m)
      rows.push_back({{"m", m}, {"even", betti_bound(r, c, m, 0)}, {"odd", betti_bound(r, c, m, 1)}});
    s << json{{"r", r}, {"c", c}, {"bounds", rows}}.dump(2) << '\n';
  } else {
    s << "total Betti number bounds for r = " << r << ", c = " << c << '\n';
    for (int m = 0; m <= job.max_m; ++m) {
      s << "beta_" << 2 * m << " <= " << betti_bound(r, c, m, 0) << '\n';
      s << "beta_" << 2 * m + 1 << " <= " << betti_bound(r, c, m, 1) << '\n';
    }
  }
  emit(job, s.str(), out);
  return kExitPass;
}

int cmd_export_dot(const JobSpec& job, std::ostream& out) {
  job.require_format({"text", "dot"});
  if (job.ci.empty()) {
    const PolyRing ring = job.ring();
    emit(job, render_dot(build_taylor_complex(job.monomial_ideal(ring))), out);
  } else {
    emit(job, render_dot(build_system(job)), out);
  }
  return kExitPass;
}

int cmd_check_exactness(const JobSpec& job, std::ostream& out) {
  job.require_format({"text", "json"});
  const int n_max = job.required_max_step();
  if (n_max < 2) throw InputError("check-exactness needs --max-step >= 2");
  const ShamashResolution res(build_system(job), n_max);
  ExactnessOptions options;
  options.max_internal_degree = job.max_degree.value_or(10);
  options.prime = job.prime;
  std::vector<Report> reports;
  for (int n = 1; n + 1 <= n_max; ++n) reports.push_back(check_exactness(res, n, options));
  const bool passed =
      std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed; });
  std::ostringstream s;
  if (job.format == "json") {
    json j = json::array();
    for (const auto& r : reports) j.push_back(report_json(r));
    s << json{{"passed", passed}, {"reports", j}}.dump(2) << '\n';
  } else {
    for (const auto& r : reports) s << report_line(r) << '\n';
  }
  emit(job, s.str(), out);
  return passed ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Taylor resolutions over complete intersections", "citaylor"};
  app.require_subcommand(1);
  JobSpec job;

  auto add_ring = [&](CLI::App* sub) {
    sub->add_option("--vars", job.vars, "comma separated variable names");
    sub->add_option("--char", job.characteristic, "coefficient characteristic (0 or a prime)");
    sub->add_option("--order", job.order, "monomial order: grlex, grevlex or lex");
    sub->add_option("--ideal", job.ideal, "comma separated monomial generators");
    sub->add_option("--format", job.format, "text, json, tex or dot");
    sub->add_option("--out", job.out_path, "write output to this file");
  };
  auto add_ci = [&](CLI::App* sub) {
    sub->add_option("--ci", job.ci, "comma separated regular sequence");
    sub->add_option("--lift", job.lift, "first, average or file:PATH");
  };

  auto* taylor = app.add_subcommand("taylor", "Taylor complex of a monomial ideal");
  add_ring(taylor);
  auto* resolve = app.add_subcommand("resolve", "resolution over the complete intersection");
  add_ring(resolve);
  add_ci(resolve);
  resolve->add_option("--max-step", job.max_step, "last homological degree N");
  auto* verify = app.add_subcommand("verify", "check every defining identity");
  add_ring(verify);
  add_ci(verify);
  verify->add_option("--max-step", job.max_step, "last homological degree N");
  verify->add_option("--max-degree", job.max_degree, "also check exactness up to this degree");
  verify->add_option("--prime", job.prime, "prime for the exactness window");
  auto* betti = app.add_subcommand("betti", "total Betti number bounds");
  add_ring(betti);
  add_ci(betti);
  betti->add_option("--r", job.betti_r, "number of monomial generators");
  betti->add_option("--c", job.betti_c, "length of the regular sequence");
  betti->add_option("--max-m", job.max_m, "largest m for beta_2m, beta_2m+1");
  auto* dot = app.add_subcommand("export-dot", "graph of the matrix factorization");
  add_ring(dot);
  add_ci(dot);
  auto* exact = app.add_subcommand("check-exactness", "homology spot check over GF(p)");
  add_ring(exact);
  add_ci(exact);
  exact->add_option("--max-step", job.max_step, "last homological degree N");
  exact->add_option("--max-degree", job.max_degree, "largest internal degree (default 10)");
  exact->add_option("--prime", job.prime, "prime field characteristic (default 32003)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    if (job.format == "dot" && !dot->parsed() && !taylor->parsed() && !resolve->parsed())
      throw InputError("--format dot is only available for taylor, resolve and export-dot");
    if (taylor->parsed()) return cmd_taylor(job, out);
    if (resolve->parsed()) return cmd_resolve(job, out);
    if (verify->parsed()) return cmd_verify(job, out);
    if (betti->parsed()) return cmd_betti(job, out);
    if (dot->parsed()) return cmd_export_dot(job, out);
    if (exact->parsed()) return cmd_check_exactness(job, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailure;
  }
  return kExitInputError;
}

}  // namespace citaylor
