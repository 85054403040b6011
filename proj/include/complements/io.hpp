#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "complements/boundary.hpp"
#include "complements/coefficients.hpp"
#include "complements/dualgraph.hpp"
#include "complements/errors.hpp"
#include "complements/lct.hpp"

namespace complements::io {

using json = nlohmann::json;

/// Malformed input document (bad JSON, wrong field types, bad rationals
/// inside a file). Distinct from argument errors.
class InputFormatError : public ParseError {
public:
    using ParseError::ParseError;
};

/// Parses UTF-8 JSON; errors name the 0-based byte offset of the failure.
json parse_document(std::string_view text);
json read_document(const std::string& path);

/// "p/q", or "p" for integers.
json to_json(const Rational& q);
/// Accepts a "p/q" string or a JSON integer.
Rational rational_from_json(const json& value);

/// [{"label": s, "coeff": "p/q"}, ...] in canonical order.
json to_json(const Boundary& boundary);
Boundary boundary_from_json(const json& value);

/// {"vertices": [{"id": s, "weight": w}], "edges": [[s, t]], "center": optional}
struct GraphDocument {
    dualgraph::DualGraph graph;
    std::optional<std::string> center;
};
GraphDocument graph_from_json(const json& value);
json to_json(const dualgraph::DualGraph& graph);

/// {"rows": [{"label", "disD", "multDelta", "multF"}], "S": label}
lct::ThresholdProblem problem_from_json(const json& value);
json to_json(const lct::ThresholdProblem& problem);
json to_json(const lct::PiecewiseLinear& f);

/// {"entries": [{"dim": d, "N": n, "set": [..]}]} layered over the defaults.
ComplementRegistry registry_from_json(const json& value,
                                      ComplementRegistry base = ComplementRegistry::defaults());

}  // namespace complements::io
