#include "ihara/json_io.hpp"

namespace ihara {
namespace {

std::size_t as_index(const Json& v, const char* what)
{
    if (!v.is_number_integer())
        throw Error(ErrorCode::ParseError, std::string(what) + " must be an integer");
    if (v.is_number_unsigned())
        return v.get<std::size_t>();
    long long x = v.get<long long>();
    if (x < 0)
        throw Error(ErrorCode::OutOfRange, std::string(what) + " is negative");
    return static_cast<std::size_t>(x);
}

} // namespace

Graph parse_graph(const std::string& text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw Error(ErrorCode::ParseError, "expected an object with \"n\" and \"edges\"");
    const std::size_t n = as_index(doc["n"], "n");
    const Json& edges = doc["edges"];
    if (!edges.is_array())
        throw Error(ErrorCode::ParseError, "\"edges\" must be an array");
    std::vector<std::pair<Vertex, Vertex>> list;
    list.reserve(edges.size());
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2)
            throw Error(ErrorCode::ParseError, "each edge must be a pair [u, v]");
        list.emplace_back(as_index(e[0], "edge endpoint"), as_index(e[1], "edge endpoint"));
    }
    return build_graph(n, list);
}

Json graph_to_json(const Graph& g)
{
    Json edges = Json::array();
    for (const auto& e : g.edges())
        edges.push_back({e.u, e.v});
    return Json{{"n", g.vertex_count()}, {"edges", edges}};
}

Json poly_to_json(const IntPoly& p)
{
    Json a = Json::array();
    for (const auto& s : p.to_strings())
        a.push_back(s);
    return a;
}

Json zeta_report_to_json(const ZetaReport& r)
{
    Json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["f"] = poly_to_json(r.zeta.f);
    j["zeta_reciprocal"] = r.zeta.polynomial ? poly_to_json(*r.zeta.polynomial) : Json(nullptr);
    j["exponent"] = r.zeta.exponent;
    j["rational_form"] = !r.zeta.is_polynomial();
    j["tau"] = to_decimal(r.tau);
    j["checks"] = {{"hashimoto_match", r.hashimoto_match},
                   {"series_match", r.series_match},
                   {"northshield_match", r.northshield_match}};
    j["series_order"] = r.series_order;
    j["warnings"] = r.zeta.warnings;
    return j;
}

Json join_params_to_json(const JoinParams& p)
{
    return Json{{"n1", p.n1},   {"n2", p.n2},   {"n3", p.n3},     {"n4", p.n4},     {"q1", p.q1},
                {"q2", p.q2},   {"q3", p.q3},   {"q4", p.q4},     {"nu1", p.nu1},   {"nu2", p.nu2},
                {"eps1", p.eps1}, {"eps2", p.eps2}, {"k1", p.k1}, {"k2", p.k2}};
}

Json join_verification_to_json(const JoinVerification& v, bool with_timing)
{
    Json j;
    j["params"] = join_params_to_json(v.params);
    j["quartic"] = poly_to_json(v.quartic);
    j["quartic_shape"] = v.quartic_shape;
    j["spectrum"] = {{"identity", v.spectrum_identity},
                     {"numeric_match", v.spectrum_numeric},
                     {"max_error", v.spectrum_max_error},
                     {"eigenvalues", v.eigenvalues}};
    j["zeta"] = {{"identity", v.zeta_identity},
                 {"matches_bass", v.zeta_matches_bass},
                 {"exponent", v.zeta_exponent}};
    j["tau"] = {{"closed_form", to_decimal(v.tau_closed)},
                {"matrix_tree", to_decimal(v.tau_matrix_tree)},
                {"northshield", v.tau_northshield ? Json(to_decimal(*v.tau_northshield)) : Json(nullptr)},
                {"agree", v.tau_agree}};
    j["no_symmetric_roots"] = v.no_symmetric_roots;
    j["errors"] = v.errors;
    j["pass"] = v.all_pass();
    if (with_timing)
        j["seconds"] = v.seconds;
    return j;
}

} // namespace ihara
