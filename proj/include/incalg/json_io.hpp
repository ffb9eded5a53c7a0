#pragma once

#include <string>

#include <json.hpp>

#include "incalg/operators.hpp"
#include "incalg/proper.hpp"
#include "incalg/solver.hpp"

namespace incalg::json_io {

/// ordered_json keeps insertion order, so serialized documents are
/// byte-stable for identical inputs.
using json = nlohmann::ordered_json;

/// {"elements": ["1", ...], "relations": [["1","2"], ...]}.  The relation
/// list is read as generators: the reflexive-transitive closure is applied.
std::shared_ptr<const preorder> preorder_from_json(const json& doc);
std::shared_ptr<const preorder> preorder_from_string(const std::string& text);

/// Emits the closed relation list (every comparable pair), so the document
/// round-trips through validation.
json preorder_to_json(const preorder& p);

/// Empty result: the document is valid AND its stated relation list already
/// equals its own closure.  Otherwise a diagnostic naming the first problem.
std::string validate_preorder_document(const std::string& text);

/// {"entries": [{"from": "1", "to": "2", "value": "3/4"}, ...]}.
incidence_function element_from_json(std::shared_ptr<const preorder> order, ring r,
                                     const json& doc);
json element_to_json(const incidence_function& f);

/// {"columns": [{"i": "1", "j": "2", "image": <element>}, ...]};
/// omitted columns are zero.
linear_operator operator_from_json(std::shared_ptr<const preorder> order, ring r,
                                   const json& doc);
json operator_to_json(const linear_operator& op);

json basis_to_json(const operator_basis& basis);
json span_comparison_to_json(const span_comparison& cmp);
json decomposition_to_json(const decomposition& dec, const std::string& method,
                           const ring& r);

json parse_document(const std::string& text); // json::parse with error mapping

} // namespace incalg::json_io
