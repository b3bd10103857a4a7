#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "citaylor/homotopy.hpp"
#include "citaylor/matrix.hpp"
#include "citaylor/poly.hpp"
#include "citaylor/shamash.hpp"

namespace citaylor {

/// Summand list such as "R(-3) + R(-4)^3", grouped by ascending twist.
std::string module_summary(const std::vector<BasisLabel>& basis, const std::string& ring_name);

/// Block-array text: column headers on top, row labels on the right, '|'
/// and dashed dividers wherever the divided-power index u changes.
/// `show_u` adds a header line and row suffix with u.
std::string render_text_matrix(const std::string& title, const LabeledGradedMatrix& m,
                               const PolyRing& ring, std::size_t r, bool show_u);

std::string tex_polynomial(const Polynomial& p, const PolyRing& ring);
std::string render_tex_matrix(const std::string& name, const LabeledGradedMatrix& m,
                              const PolyRing& ring, std::size_t r);

/// Directed graph of the differential: one vertex per subset of [r], blue edges S -> S - s
/// for Taylor entries, red edges S -> S u t for homotopy entries.
std::string render_dot(const HomotopySystem& system);
/// Taylor-only graph (blue edges).
std::string render_dot(const TaylorComplex& taylor);

/// The interchange document written by `--format json`.
struct ResolutionDocument {
  std::vector<std::string> vars;
  std::uint32_t characteristic = 0;
  std::vector<std::string> ideal;
  std::vector<std::string> ci;
  std::vector<std::vector<BasisLabel>> modules;
  /// differentials[i] maps modules[i + 1] -> modules[i].
  std::vector<LabeledGradedMatrix> differentials;
  nlohmann::ordered_json reports = nlohmann::ordered_json::object();

  PolyRing ring() const;
};

ResolutionDocument make_document(const TaylorComplex& taylor, const PolyRing& ring);
ResolutionDocument make_document(const ShamashResolution& res);

nlohmann::ordered_json to_json(const ResolutionDocument& doc);
/// Inverse of to_json; recomputes subset lcms from the ideal.
ResolutionDocument document_from_json(const nlohmann::ordered_json& j);

}  // namespace citaylor
