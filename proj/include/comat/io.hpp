#pragma once

#include "comat/paper_examples.hpp"
#include "comat/splitting.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace comat {
namespace io {

using json = nlohmann::ordered_json;

/// Parse/schema error carrying the JSON path of the offending node.
struct io_error : std::runtime_error {
  std::string path;
  io_error(const std::string& what, std::string path_)
      : std::runtime_error(what + " (at " + (path_.empty() ? "$" : path_) + ")"), path(std::move(path_)) {}
};

/// Tagged union of the document kinds the tool reads and writes.
struct Document {
  std::string type;
  std::optional<FiniteCoalgebra> coalgebra;
  std::optional<MonomialSpec> spec;
  std::optional<MoritaTakeuchiContext> context;
  std::optional<TriangularData> triangular;
  std::optional<FgPresentation> presentation;
  std::optional<TriangularModule> tri_module;
  std::optional<ArtinianQuery> artinian;
  /// functional: named coefficients of an element of C*
  std::optional<std::vector<std::pair<std::string, Scalar>>> functional;
  std::optional<Field> functional_field;
  /// split: X / Y basis-name lists for decompose --triangular
  std::optional<std::pair<std::vector<std::string>, std::vector<std::string>>> split;

  friend bool operator==(const Document&, const Document&) = default;
};

Document parse_document(const std::string& text);
json print_document(const Document& doc);

json field_to_json(const Field& f);
Field field_from_json(const json& j, const std::string& path);
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, Field f, const std::string& path);

json coalgebra_to_json(const FiniteCoalgebra& c);
FiniteCoalgebra coalgebra_from_json(const json& j, const std::string& path);
json spec_to_json(const MonomialSpec& s);
MonomialSpec spec_from_json(const json& j, const std::string& path);
json presentation_to_json(const FgPresentation& p);
FgPresentation presentation_from_json(const json& j, const std::string& path);

std::string dump_report(const json& report);

}  // namespace io
}  // namespace comat
