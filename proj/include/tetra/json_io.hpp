#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tetra/core.hpp"
#include "tetra/curves.hpp"
#include "tetra/relations.hpp"

namespace tetra {

using nlohmann::json;

// All rationals cross the wire as "p/q" strings ("p" when q = 1).

inline json config_to_json(const TetraConfig& c) {
    json p = json::object();
    for (int sid = 0; sid < kNumSubsets; ++sid) {
        json v = json::array();
        for (const auto& q : c.plueckers[static_cast<std::size_t>(sid)]) v.push_back(rat_to_string(q));
        p[subset_name(mask_of_sid(sid))] = std::move(v);
    }
    return json{{"plueckers", std::move(p)}};
}

inline TetraConfig config_from_json(const json& j) {
    TetraConfig c;
    const auto& p = j.at("plueckers");
    for (int sid = 0; sid < kNumSubsets; ++sid) {
        const auto& v = p.at(subset_name(mask_of_sid(sid)));
        QVec w;
        for (const auto& s : v) w.push_back(rat_from_string(s.get<std::string>()));
        c.plueckers[static_cast<std::size_t>(sid)] = std::move(w);
    }
    std::string why;
    if (!config_valid(c, &why)) throw std::invalid_argument("invalid configuration: " + why);
    return c;
}

inline json unipoly_to_json(const UniPoly& p) {
    json out = json::array();
    for (const auto& q : p.coeffs()) out.push_back(rat_to_string(q));
    return out;
}

inline json curve_to_json(const ConfigCurve& c) {
    json p = json::object();
    for (int sid = 0; sid < kNumSubsets; ++sid) {
        json v = json::array();
        for (const auto& f : c.plueckers_t[static_cast<std::size_t>(sid)])
            v.push_back(json{{"num", unipoly_to_json(f.num())}, {"den", unipoly_to_json(f.den())}});
        p[subset_name(mask_of_sid(sid))] = std::move(v);
    }
    return json{{"plueckers_t", std::move(p)}};
}

inline json relation_to_json(const Relation& r) {
    auto names = r.level == RelLevel::Chart ? chart_variable_names() : core_variable_names();
    json terms = json::array();
    for (const auto& [m, c] : r.poly.terms()) {
        json mono = json::object();
        for (const auto& [v, e] : m.factors) mono[names[static_cast<std::size_t>(v)]] = e;
        terms.push_back(json{{"coeff", rat_to_string(c)}, {"monomial", std::move(mono)}});
    }
    json prov{{"tuple", r.tuple}};
    if (!r.faces.empty()) {
        json fs = json::array();
        for (int f : r.faces) fs.push_back(face_at(f).name());
        prov["faces"] = std::move(fs);
        prov["maximal_hosts"] = r.maximal_hosts;
    }
    return json{{"family", family_name(r.family)},
                {"level", r.level == RelLevel::Chart ? "u" : "z"},
                {"terms", std::move(terms)},
                {"provenance", std::move(prov)}};
}

inline json core_point_to_json(const CorePoint& z) {
    json by_face = json::object();
    for (const auto& f : all_faces()) {
        json entries = json::object();
        for (int e : f.edges) entries[edge_at(e).name()] = rat_to_string(z.at(f.id, e));
        by_face[f.name()] = std::move(entries);
    }
    return json{{"y", std::move(by_face)}};
}

inline CorePoint core_point_from_json(const json& j) {
    std::array<Rat, kNumPairs> raw;
    const auto& by_face = j.at("y");
    for (const auto& f : all_faces())
        for (int e : f.edges)
            raw[static_cast<std::size_t>(pair_index(f.id, e))] =
                rat_from_string(by_face.at(f.name()).at(edge_at(e).name()).get<std::string>());
    auto z = CorePoint::normalized(raw);
    if (!z) throw std::invalid_argument("core point has an all-zero component");
    return *z;
}

inline json certificate_to_json(const SmoothnessCertificate& cert) {
    json chart = json::object();
    for (const auto& f : all_faces())
        chart[f.name()] = edge_at(cert.chart_edge[static_cast<std::size_t>(f.id)]).name();
    json j{{"on_variety", cert.on_variety},
           {"chart", std::move(chart)},
           {"jacobian_rank", cert.jacobian_rank},
           {"corank", cert.corank},
           {"verdict", cert.smooth ? "Smooth" : "Inconclusive"}};
    if (cert.propagation) j["propagation_bound"] = *cert.propagation;
    return j;
}

inline json split_to_json(const SplitPartition& s) {
    auto blk = [](const std::vector<Mask>& b) {
        json out = json::array();
        for (Mask m : b) out.push_back(subset_name(m));
        return out;
    };
    return json{{"rank", s.rank}, {"type", s.type()}, {"block_a", blk(s.block_a)}, {"block_b", blk(s.block_b)}};
}

inline json catalog_to_json(const Catalog& cat, const std::vector<std::vector<SmoothnessCertificate>>& certs) {
    json records = json::array();
    for (const auto& r : cat.records) {
        json reps = json::array();
        for (const auto& z : r.representatives) reps.push_back(core_point_to_json(z));
        json pattern = json::object();
        for (const auto& p : all_pairs())
            if (face_at(p.face).maximal &&
                r.maximal_zero_pattern[static_cast<std::size_t>(pair_index(p.face, p.edge))])
                pattern[face_at(p.face).name()].push_back(edge_at(p.edge).name());
        json rec{{"id", r.id},
                 {"type", special_type_name(r.type)},
                 {"dimension", r.dimension},
                 {"orbit", r.orbit_id},
                 {"orbit_size", r.orbit_size},
                 {"splits", json::array({split_to_json(r.splits[0]), split_to_json(r.splits[1]),
                                         split_to_json(r.splits[2])})},
                 {"pattern", std::move(pattern)},
                 {"representatives", std::move(reps)}};
        if (r.family) {
            rec["family_relation"] = r.family->relation;
            json pv = json::array();
            for (const auto& q : r.family->parameter_values) pv.push_back(rat_to_string(q));
            rec["family_parameters"] = std::move(pv);
        }
        if (!certs.empty()) {
            json cs = json::array();
            for (const auto& c : certs[static_cast<std::size_t>(r.id)]) cs.push_back(certificate_to_json(c));
            rec["certificates"] = std::move(cs);
        }
        records.push_back(std::move(rec));
    }
    return json{{"records", std::move(records)},
                {"isolated", cat.isolated_count()},
                {"families", cat.family_count()}};
}

inline void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open " + tmp + " for writing");
        os << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

}  // namespace tetra
