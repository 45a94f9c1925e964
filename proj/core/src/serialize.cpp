#include "triquad/serialize.hpp"

#include <stdexcept>
#include <string>

#include "json.hpp"

namespace triquad {

namespace {

using json = nlohmann::ordered_json;

std::string pair_key(VertexPair p) {
    return std::to_string(p.u) + "," + std::to_string(p.v);
}

json report_json(const PropertyReport& report) {
    json j;
    j["property"] = std::string(property_name(report.property));
    j["holds"] = report.holds;
    j["vacuous"] = report.vacuous;
    json violations = json::array();
    for (const Violation& v : report.violations)
        violations.push_back({{"pair", {v.pair.u, v.pair.v}}, {"count", v.observed}});
    j["violations"] = std::move(violations);
    json witnesses = json::object();
    for (const auto& [pair, verts] : report.witnesses)
        witnesses[pair_key(pair)] = verts;
    j["witnesses"] = std::move(witnesses);
    return j;
}

json certificate_json(const Certificate& cert) {
    json j;
    j["canon_g6"] = cert.canon_g6;
    j["n"] = cert.n;
    j["trivial"] = cert.trivial;
    j["p2_report"] = report_json(cert.p2_report);
    j["p3_report"] = report_json(cert.p3_report);
    return j;
}

}  // namespace

std::string to_json(const PropertyReport& report) {
    return report_json(report).dump();
}

std::string to_json(const SrgResult& result) {
    json j;
    j["status"] = std::string(srg_status_name(result.status));
    if (result.params) {
        j["params"] = {{"v", result.params->v},
                       {"k", result.params->k},
                       {"lambda", result.params->lambda},
                       {"mu", result.params->mu}};
    }
    if (!result.reason.empty()) j["reason"] = result.reason;
    return j.dump();
}

std::string to_json(const BoundsReport& report) {
    json j;
    j["n"] = report.n;
    j["total_pairs"] = report.total_pairs;
    j["red_bound"] = {{"num", report.red_bound.num}, {"den", report.red_bound.den}};
    j["blue_bound_approx"] = report.blue_bound_approx;
    j["inequality_holds"] = report.inequality_holds;
    return j.dump();
}

std::string to_json(const Certificate& cert) {
    return certificate_json(cert).dump();
}

std::string to_json(std::span<const Certificate> certs) {
    json arr = json::array();
    for (const Certificate& c : certs) arr.push_back(certificate_json(c));
    return arr.dump();
}

std::string to_adjlist_json(const Graph& g) {
    json adj = json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        json row = json::array();
        for (int u = 0; u < g.vertex_count(); ++u)
            if (u != v && g.has_edge(v, u)) row.push_back(u);
        adj.push_back(std::move(row));
    }
    json j;
    j["n"] = g.vertex_count();
    j["adj"] = std::move(adj);
    return j.dump();
}

Graph parse_adjlist_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("adjlist-json parse error: ") +
                                    e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("adj") ||
        !j["n"].is_number_integer() || !j["adj"].is_array())
        throw std::invalid_argument(
            "adjlist-json must be {\"n\": int, \"adj\": [[...], ...]}");
    const long long n = j["n"].get<long long>();
    if (n < 0 || n > Graph::max_vertices)
        throw std::invalid_argument("adjlist-json n outside [0, 64]");
    if (j["adj"].size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("adjlist-json adj must have n rows");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (std::size_t v = 0; v < rows.size(); ++v) {
        if (!j["adj"][v].is_array())
            throw std::invalid_argument("adjlist-json rows must be arrays");
        for (const auto& entry : j["adj"][v]) {
            if (!entry.is_number_integer())
                throw std::invalid_argument("adjlist-json neighbors must be integers");
            const long long u = entry.get<long long>();
            if (u < 0 || u >= n)
                throw std::invalid_argument("adjlist-json neighbor out of range");
            rows[v] |= std::uint64_t{1} << u;
        }
    }
    // from_rows rejects loops and asymmetric rows
    return Graph::from_rows(static_cast<int>(n), rows);
}

}  // namespace triquad
