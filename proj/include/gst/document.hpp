#pragma once

// JSON documents emitted by the CLI. Counts and profile entries are decimal
// strings so arbitrary precision survives any JSON consumer; every document
// carries schema_version and the subcommand that produced it.

#include "gst/corridor.hpp"
#include "gst/counting.hpp"
#include "gst/farey.hpp"
#include "gst/stats.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace gst {

inline constexpr const char* kSchemaVersion = "1";

inline nlohmann::json matrix_to_json(const Matrix2& m) {
    return nlohmann::json::array(
        {nlohmann::json::array({m.a.str(), m.b.str()}), nlohmann::json::array({m.c.str(), m.d.str()})});
}

inline nlohmann::json corridor_to_document(const Corridor& c) {
    nlohmann::json doc;
    doc["steps"] = c.steps.letters;
    doc["disposition"] = to_string(c.disposition);
    doc["tau"] = c.tau;
    auto vertices = nlohmann::json::array();
    for (const CorridorVertex& v : c.vertices) {
        nlohmann::json jv;
        jv["id"] = v.id;
        jv["name"] = c.vertex_name(v.id);
        jv["depth"] = v.depth ? nlohmann::json(*v.depth) : nlohmann::json(nullptr);
        jv["side"] = v.side ? nlohmann::json(to_string(*v.side)) : nlohmann::json(nullptr);
        vertices.push_back(jv);
    }
    doc["vertices"] = vertices;
    auto triangles = nlohmann::json::array();
    for (const Triangle& t : c.triangles) triangles.push_back({t.left, t.right, t.apex});
    doc["triangles"] = triangles;
    auto crosses = nlohmann::json::array();
    for (const auto& [l, r] : c.cross_edges) crosses.push_back({l, r});
    doc["cross_edges"] = crosses;
    auto nablas = nlohmann::json::array();
    for (const NablaEdge& e : c.nablas) {
        nablas.push_back({{"depth", e.depth}, {"left", e.left}, {"right", e.right}});
    }
    doc["nabla_edges"] = nablas;
    return doc;
}

/// Inverse of corridor_to_document; round-trips losslessly.
inline Corridor corridor_from_document(const nlohmann::json& doc) {
    Corridor c;
    c.steps = StepSequence{doc.at("steps").get<std::string>()};
    const std::string disp = doc.at("disposition").get<std::string>();
    c.disposition = disp == "left_endpoint"    ? Disposition::LeftEndpoint
                    : disp == "right_endpoint" ? Disposition::RightEndpoint
                                               : Disposition::SpansBelow;
    c.tau = doc.at("tau").get<int>();
    for (const auto& jv : doc.at("vertices")) {
        CorridorVertex v;
        v.id = jv.at("id").get<int>();
        if (!jv.at("depth").is_null()) v.depth = jv.at("depth").get<int>();
        if (!jv.at("side").is_null())
            v.side = jv.at("side").get<std::string>() == "left" ? Side::Left : Side::Right;
        c.vertices.push_back(v);
    }
    for (const auto& jt : doc.at("triangles"))
        c.triangles.push_back(Triangle{jt.at(0).get<int>(), jt.at(1).get<int>(), jt.at(2).get<int>()});
    for (const auto& je : doc.at("cross_edges"))
        c.cross_edges.emplace_back(je.at(0).get<int>(), je.at(1).get<int>());
    for (const auto& je : doc.at("nabla_edges"))
        c.nablas.push_back(NablaEdge{je.at("depth").get<int>(), je.at("left").get<int>(),
                                     je.at("right").get<int>()});
    return c;
}

inline nlohmann::json count_result_document(const CountResult& r, std::string_view input,
                                            const Corridor* corridor = nullptr) {
    nlohmann::json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "gst";
    doc["input"] = std::string(input);
    doc["binary"] = r.binary.str();
    doc["steps"] = r.steps.letters;
    doc["turns"] = r.disposition == CountDisposition::SimpleTunnel
                       ? std::string()
                       : binary_to_turns(r.binary).turns;
    auto configs = nlohmann::json::array();
    for (const Config c : r.configs) configs.push_back(to_string(c));
    doc["configs"] = configs;
    auto matrices = nlohmann::json::array();
    for (const Matrix2& m : r.matrices) matrices.push_back(matrix_to_json(m));
    doc["matrices"] = matrices;
    doc["product"] = matrix_to_json(r.product);
    auto lambdas = nlohmann::json::array();
    auto rhos = nlohmann::json::array();
    for (const auto& [lambda, rho] : r.profile) {
        lambdas.push_back(lambda.str());
        rhos.push_back(rho.str());
    }
    doc["lambda_profile"] = lambdas;
    doc["rho_profile"] = rhos;
    doc["disposition"] = to_string(r.disposition);
    doc["depth"] = r.depth;
    doc["count"] = r.count.str();
    if (corridor != nullptr) doc["corridor"] = corridor_to_document(*corridor);
    return doc;
}

inline nlohmann::json corridor_command_document(const Corridor& c, std::string_view input) {
    nlohmann::json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "corridor";
    doc["input"] = std::string(input);
    doc["steps"] = c.steps.letters;
    doc["corridor"] = corridor_to_document(c);
    return doc;
}

inline nlohmann::json farey_document(const Fraction& u, const Fraction& v, const FareyGeodesics& g) {
    nlohmann::json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "farey";
    doc["u"] = u.str();
    doc["v"] = v.str();
    doc["distance"] = g.distance;
    doc["count"] = g.count.str();
    return doc;
}

inline nlohmann::json stats_document(const std::vector<LengthSummary>& summaries,
                                     const std::vector<GenericityRow>& rows) {
    nlohmann::json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "stats";
    auto lengths = nlohmann::json::array();
    for (std::size_t i = 0; i < summaries.size(); ++i) {
        const LengthSummary& s = summaries[i];
        nlohmann::json js;
        js["length"] = s.length;
        js["total"] = std::uint64_t{1} << s.length;
        nlohmann::json hist = nlohmann::json::object();
        for (const auto& [count, freq] : s.histogram) hist[count.str()] = freq;
        js["histogram"] = hist;
        nlohmann::json dhist = nlohmann::json::object();
        for (const auto& [d, freq] : s.depth_histogram) dhist[std::to_string(d)] = freq;
        js["depth_histogram"] = dhist;
        js["unique_fraction"] = s.unique_numerator.str() + "/" + s.unique_denominator.str();
        if (i < rows.size()) {
            js["block_fraction"] =
                format_fraction(BigInt(rows[i].block_count), BigInt(rows[i].total));
        }
        lengths.push_back(js);
    }
    doc["lengths"] = lengths;
    return doc;
}

}  // namespace gst
