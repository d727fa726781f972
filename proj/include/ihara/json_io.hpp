#ifndef IHARA_JSON_IO_HPP
#define IHARA_JSON_IO_HPP

#include "ihara/graph.hpp"
#include "ihara/joinform.hpp"
#include "ihara/poly.hpp"
#include "ihara/zeta.hpp"

#include <json.hpp>

#include <string>

namespace ihara {

using Json = nlohmann::ordered_json;

/// {"n": N, "edges": [[u,v], ...]}. Malformed text or schema raises
/// ParseError; graph validation errors propagate unchanged.
Graph parse_graph(const std::string& text);

/// Edges sorted with u < v.
Json graph_to_json(const Graph& g);

/// Low-to-high coefficients as decimal strings.
Json poly_to_json(const IntPoly& p);

Json zeta_report_to_json(const ZetaReport& r);
Json join_params_to_json(const JoinParams& p);
Json join_verification_to_json(const JoinVerification& v, bool with_timing);

} // namespace ihara

#endif // IHARA_JSON_IO_HPP
