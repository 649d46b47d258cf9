#pragma once

#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "cliffilt/bifiltration.hpp"
#include "cliffilt/certificate.hpp"
#include "cliffilt/deformation.hpp"
#include "cliffilt/graph.hpp"
#include "cliffilt/invariants.hpp"
#include "cliffilt/supermodule.hpp"

namespace cliffilt::io {

/// Value of the top-level "schema" field of every document.
inline constexpr const char* kSchema = "cliffilt/1";

using nlohmann::json;

// Scalars are strings "p/q" (or "p"); matrices are {"rows", "cols", "entries"}.
[[nodiscard]] json to_json(const Rational& r);
[[nodiscard]] json to_json(const Matrix& m);
[[nodiscard]] json to_json(const CliffordAlgebra& a);
[[nodiscard]] json to_json(const CliffordSupermodule& m);
[[nodiscard]] json to_json(const SuperFiltration& f);
[[nodiscard]] json to_json(const OffShellRep& r);
[[nodiscard]] json to_json(const BiSupermodule& m);
[[nodiscard]] json to_json(const Bifiltration& f);
[[nodiscard]] json to_json(const BiGradedRep& r);
[[nodiscard]] json to_json(const AdinkraGraph& g);
[[nodiscard]] json to_json(const InvariantReport& r);
[[nodiscard]] json to_json(const Certificate& c);

// All parsers throw ParseError on malformed input. Structural validation
// (shapes) happens here; algebraic validation is left to the check functions.
[[nodiscard]] Rational rational_from_json(const json& j);
[[nodiscard]] Matrix matrix_from_json(const json& j);
[[nodiscard]] std::shared_ptr<const CliffordAlgebra> algebra_from_json(const json& j);
[[nodiscard]] ModulePtr module_from_json(const json& j);
[[nodiscard]] SuperFiltration filtration_from_json(const json& j);
[[nodiscard]] OffShellRep offshell_from_json(const json& j);
[[nodiscard]] BiModulePtr bimodule_from_json(const json& j);
[[nodiscard]] Bifiltration bifiltration_from_json(const json& j);
[[nodiscard]] BiGradedRep bigraded_from_json(const json& j);
[[nodiscard]] AdinkraGraph graph_from_json(const json& j);

/// Adds "schema" and "type" to an object.
[[nodiscard]] json document(const std::string& type, json body);
/// The "type" of a document after checking its schema; throws ParseError.
[[nodiscard]] std::string document_type(const json& doc);
/// Parses text; syntax errors become ParseError.
[[nodiscard]] json parse(const std::string& text);

}  // namespace cliffilt::io
