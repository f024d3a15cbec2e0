/**
 * JSON and CSV serialization for the machine-facing interfaces: homology
 * reports, chain-complex dumps, face-complex dumps, shelling results, and
 * sweep outputs. Key order is fixed so identical inputs produce identical
 * bytes.
 */

#ifndef EMH_JSON_IO_HPP
#define EMH_JSON_IO_HPP

#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "emh/experiments.hpp"
#include "emh/integer_matrix.hpp"
#include "emh/shellability.hpp"
#include "emh/smith.hpp"
#include "emh/tuple_complex.hpp"

namespace emh {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

inline Json homology_group_json(const HomologyGroup& h) {
    Json j;
    j["degree"] = h.degree;
    j["free_rank"] = h.free_rank;
    Json torsion = Json::array();
    for (const Int& t : h.torsion) torsion.push_back(t.str());
    j["torsion"] = std::move(torsion);
    return j;
}

// Homology report: per degree {free_rank, torsion}, plus the Euler
// characteristic of the underlying complex.
inline Json homology_report_json(const IntegerChainComplex& c,
                                 const std::vector<HomologyGroup>& groups) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    Json degrees = Json::array();
    for (const auto& h : groups) degrees.push_back(homology_group_json(h));
    j["degrees"] = std::move(degrees);
    j["euler_characteristic"] = c.euler_characteristic();
    return j;
}

// Chain-complex dump: per-degree generator labels and sparse boundary
// triplets (row, col, value).
inline Json chain_complex_json(const IntegerChainComplex& c) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    Json degrees = Json::array();
    for (int d = 0; d <= c.top_degree(); ++d) {
        Json deg;
        deg["degree"] = d;
        deg["generators"] =
            d < static_cast<int>(c.labels.size()) ? c.labels[d] : std::vector<std::string>{};
        Json triplets = Json::array();
        for (const auto& [rc, v] : c.boundaries[d].entries())
            triplets.push_back(Json::array({rc.first, rc.second, v.str()}));
        deg["boundary"] = std::move(triplets);
        degrees.push_back(std::move(deg));
    }
    j["degrees"] = std::move(degrees);
    return j;
}

// Face-complex dump: every face as a vertex array, with facet markers.
inline Json tuple_complex_json(const TupleComplex& x) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    auto facets = x.facets();
    std::set<std::vector<int>> facet_set(facets.begin(), facets.end());
    Json faces = Json::array();
    for (const auto& f : x.faces()) {
        Json face;
        face["vertices"] = f;
        face["facet"] = facet_set.count(f) > 0;
        faces.push_back(std::move(face));
    }
    j["faces"] = std::move(faces);
    return j;
}

inline TupleComplex tuple_complex_from_json(const Json& j) {
    std::vector<std::vector<int>> faces;
    for (const auto& face : j.at("faces")) faces.push_back(face.at("vertices").get<std::vector<int>>());
    return TupleComplex::from_faces(faces);
}

inline Json shell_result_json(const ShellResult& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["status"] = to_string(r.status);
    if (r.order) {
        Json order = Json::array();
        for (const auto& f : r.order->facet_sequence) order.push_back(f);
        j["order"] = std::move(order);
    }
    j["steps"] = r.steps;
    return j;
}

inline Json pair_record_json(const PairRecord& p) {
    Json j;
    j["a"] = p.a;
    j["b"] = p.b;
    j["et_facet_dims"] = p.et_facet_dims;
    j["etsub_facet_dims"] = p.etsub_facet_dims;
    j["et_status"] = to_string(p.et_status);
    j["etsub_status"] = to_string(p.etsub_status);
    Json emh = Json::array();
    for (const auto& h : p.emh) emh.push_back(homology_group_json(h));
    j["emh"] = std::move(emh);
    j["has_torsion"] = p.has_torsion;
    return j;
}

inline Json trial_result_json(const TrialResult& t) {
    Json j;
    j["alpha"] = t.alpha;
    j["trial_index"] = t.trial_index;
    j["graph_seed"] = t.graph_seed;
    j["edge_count"] = t.edge_count;
    j["betti_ll"] = t.betti_ll;
    j["torsion_found"] = t.torsion_found;
    Json pairs = Json::array();
    for (const auto& p : t.pairs) pairs.push_back(pair_record_json(p));
    j["pairs"] = std::move(pairs);
    return j;
}

inline std::string format_rate(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

// summary.csv: one row per alpha grid point.
inline std::string sweep_summary_csv(const SweepSummary& s) {
    std::string out =
        "alpha,mean_betti,se_betti,torsion_rate,shellable_rate,unknown_rate,mean_ft_ratio\n";
    for (const auto& row : s.rows) {
        out += format_rate(row.alpha) + "," + format_rate(row.mean_betti) + "," +
               format_rate(row.se_betti) + "," + format_rate(row.torsion_rate) + "," +
               format_rate(row.shellable_rate) + "," + format_rate(row.unknown_rate) + "," +
               format_rate(row.mean_ft_ratio) + "\n";
    }
    return out;
}

// raw.jsonl: one trial per line, grid-major order.
inline std::string sweep_raw_jsonl(const SweepSummary& s) {
    std::string out;
    for (const auto& t : s.raw) out += trial_result_json(t).dump() + "\n";
    return out;
}

}  // namespace emh

#endif
