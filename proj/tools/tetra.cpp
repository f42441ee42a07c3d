// Command line surface: deterministic sampling, relation verification,
// special-locus certification, degenerations and exports. Exit codes:
// 0 success, 1 verification failure, 2 usage or I/O error.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "tetra/curves.hpp"
#include "tetra/json_io.hpp"
#include "tetra/qmatrix.hpp"

using namespace tetra;

namespace {

struct Report {
    json j;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool failed = false;

    explicit Report(const std::string& command) {
        j["command"] = command;
        j["counts"] = json::object();
        j["claims"] = json::array();
        j["failures"] = json::array();
        j["artifacts"] = json::array();
    }
    void count(const std::string& k, long v) { j["counts"][k] = v; }
    void claim(const std::string& name, const json& expected, const json& observed) {
        bool pass = expected == observed;
        j["claims"].push_back(
            {{"name", name}, {"expected", expected}, {"observed", observed}, {"pass", pass}});
        if (!pass) {
            failed = true;
            j["failures"].push_back("claim failed: " + name);
        }
    }
    void fail(const std::string& msg) {
        failed = true;
        j["failures"].push_back(msg);
    }
    void artifact(const std::string& path) { j["artifacts"].push_back(path); }
    int finish() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        j["timings"] = {{"total_ms", ms}};
        j["ok"] = !failed;
        std::cout << j.dump(2) << "\n";
        return failed ? 1 : 0;
    }
};

std::vector<QVec> chart_points(std::uint64_t seed, int n) {
    std::vector<QVec> pts;
    for (const auto& c : sample_configs(seed, n, {.require_nonzero_edges = true})) {
        NormalizedChart ch = normalize(c);
        pts.emplace_back(ch.x.begin(), ch.x.end());
    }
    return pts;
}

QVec lift_of(const QVec& x) {
    QVec y(kNumPairs);
    for (const auto& p : all_pairs())
        y[static_cast<std::size_t>(pair_index(p.face, p.edge))] = x[static_cast<std::size_t>(p.edge)];
    return y;
}

int chart_jacobian_rank(const QVec& x) {
    const auto& rels = chart_relations();
    QMatrix jac(static_cast<int>(rels.size()), 24);
    for (std::size_t r = 0; r < rels.size(); ++r)
        for (int v = 0; v < 24; ++v) {
            SparsePoly d = rels[r].poly.derivative(v);
            if (!d.zero()) jac.at(static_cast<int>(r), v) = d.evaluate(x);
        }
    return jac.rank();
}

std::vector<std::vector<SmoothnessCertificate>> certify_catalog(const Catalog& cat, Report& rep,
                                                                const std::string& only_type) {
    std::vector<std::vector<SmoothnessCertificate>> certs(cat.records.size());
    int smooth = 0, total = 0, prop_agree = 0;
    for (const auto& r : cat.records) {
        if (!only_type.empty() && special_type_name(r.type) != only_type) continue;
        for (const auto& z : r.representatives) {
            SmoothnessCertificate cert = jacobian_certificate(z);
            cert.propagation = propagation_bound(z, r.dimension == 1);
            certs[static_cast<std::size_t>(r.id)].push_back(cert);
            ++total;
            if (cert.smooth) ++smooth;
            else rep.fail("non-smooth verdict at record " + std::to_string(r.id));
            if (cert.propagation && *cert.propagation == cert.corank) ++prop_agree;
            else rep.fail("propagation bound disagrees at record " + std::to_string(r.id));
        }
    }
    rep.count("certified_points", total);
    rep.claim("all points smooth (corank 3)", total, smooth);
    rep.claim("propagation bound agrees", total, prop_agree);
    return certs;
}

json degeneration_to_json(const DegenerationResult& res, const std::optional<CatalogMatch>& m) {
    json j{{"curve", curve_to_json(res.curve)},
           {"limit", config_to_json(res.limit)},
           {"n_k", {res.profile[0], res.profile[1], res.profile[2]}},
           {"core_limit", core_point_to_json(res.core)}};
    j["match"] = m ? json{{"record", m->record_id}, {"type", special_type_name(m->type)}}
                   : json(nullptr);
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations on the space of complete tetrahedra"};
    app.require_subcommand(1);

    // ---- sample ----
    auto* sample = app.add_subcommand("sample", "draw general-position configurations");
    std::uint64_t seed = 1;
    int count = 1;
    std::string out_path;
    sample->add_option("--seed", seed);
    sample->add_option("--count", count)->check(CLI::PositiveNumber);
    sample->add_option("--out", out_path)->required();

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "verify the defining relations on samples");
    std::string level = "u";
    std::uint64_t vseed = 1;
    int samples = 100;
    bool symbolic = false, inject_fault = false;
    verify->add_option("--level", level)->check(CLI::IsMember({"u", "z"}));
    verify->add_option("--seed", vseed);
    verify->add_option("--samples", samples)->check(CLI::PositiveNumber);
    verify->add_flag("--symbolic", symbolic);
    verify->add_flag("--inject-fault", inject_fault)->group("");  // hidden test hook

    // ---- certify ----
    auto* certify = app.add_subcommand("certify", "enumerate and certify the special locus");
    std::string cat_out = "catalog.json", only_type;
    certify->add_option("--out", cat_out);
    certify->add_option("--only-type", only_type);

    // ---- check ----
    auto* check = app.add_subcommand("check", "re-verify a written catalog");
    std::string cat_in;
    check->add_option("--catalog", cat_in)->required();

    // ---- degenerate ----
    auto* degen = app.add_subcommand("degenerate", "collapse a configuration along a curve");
    std::uint64_t dseed = 1;
    std::string weights_str, target_str, degen_catalog, degen_out;
    degen->add_option("--seed", dseed);
    degen->add_option("--weights", weights_str, "a,b,c,d integer weights");
    degen->add_option("--target-split", target_str, "L,P,H block sizes, e.g. 22,51,22");
    degen->add_option("--catalog", degen_catalog, "catalog file for matching (else recomputed)");
    degen->add_option("--out", degen_out);

    // ---- export ----
    auto* exp = app.add_subcommand("export", "write the incidence graph or the relation lists");
    std::string gamma_fmt, rel_fmt, exp_out;
    exp->add_option("--gamma", gamma_fmt)->check(CLI::IsMember({"dot", "json"}));
    exp->add_option("--relations", rel_fmt)->check(CLI::IsMember({"txt", "json"}));
    exp->add_option("--out", exp_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*sample) {
            Report rep("sample");
            rep.j["seed"] = seed;
            SampleStats stats;
            auto configs = sample_configs(seed, count, {}, &stats);
            json arr = json::array();
            for (const auto& c : configs) arr.push_back(config_to_json(c));
            write_file_atomic(out_path, json{{"configs", arr}}.dump(2) + "\n");
            rep.artifact(out_path);
            rep.count("configs", count);
            rep.count("rejected_singular", stats.rejected_singular);
            rep.count("rejected_position", stats.rejected_position);
            return rep.finish();
        }

        if (*verify) {
            Report rep("verify");
            rep.j["seed"] = vseed;
            rep.j["level"] = level;
            auto pts = chart_points(vseed, samples);
            if (inject_fault && !pts.empty()) pts[0][0] += 1;
            int spot = std::min(10, samples);
            if (level == "u") {
                auto vr = verify_vanishing(chart_relations(), pts);
                rep.count("relations", static_cast<long>(vr.relations));
                rep.count("points", static_cast<long>(vr.points));
                rep.claim("vanishing failures", 0, static_cast<long>(vr.failures.size()));
                int rank18 = 0;
                for (int i = 0; i < spot; ++i)
                    if (chart_jacobian_rank(pts[static_cast<std::size_t>(i)]) == 18) ++rank18;
                rep.claim("edge-relation jacobian rank 18", spot, rank18);
                if (symbolic) {
                    int zero = 0;
                    for (const auto& r : chart_relations())
                        if (symbolic_identity_check(r).identical_zero) ++zero;
                    rep.claim("symbolic identities", static_cast<long>(chart_relations().size()),
                              zero);
                }
            } else {
                std::vector<QVec> lifts;
                for (const auto& x : pts) lifts.push_back(lift_of(x));
                auto vr = verify_vanishing(core_relations(), lifts);
                rep.count("relations", static_cast<long>(vr.relations));
                rep.count("points", static_cast<long>(vr.points));
                rep.claim("vanishing failures", 0, static_cast<long>(vr.failures.size()));
                int corank3 = 0;
                for (int i = 0; i < spot; ++i) {
                    std::array<Rat, kNumPairs> raw;
                    for (int v = 0; v < kNumPairs; ++v)
                        raw[static_cast<std::size_t>(v)] = lifts[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
                    auto z = CorePoint::normalized(raw);
                    if (z && jacobian_certificate(*z).corank == 3) ++corank3;
                }
                rep.claim("core jacobian corank 3 at lifts", spot, corank3);
            }
            return rep.finish();
        }

        if (*certify) {
            Report rep("certify");
            Catalog cat = enumerate_special();
            rep.count("partition_triples", cat.stats.partition_triples);
            if (only_type.empty()) {
                rep.claim("isolated points", 66, cat.isolated_count());
                rep.claim("families", 4, cat.family_count());
                json sizes_exp{{"CC*E", 24}, {"CC*_nopD", 12}, {"CC*_opD", 4}, {"CDE", 24}, {"DDE", 6}};
                json sizes_obs = json::object();
                for (const auto& [t, n] : cat.orbit_sizes()) sizes_obs[special_type_name(t)] = n;
                rep.claim("orbit sizes", sizes_exp, sizes_obs);
            } else {
                int n = 0;
                for (const auto& r : cat.records)
                    if (special_type_name(r.type) == only_type) ++n;
                rep.count("records_of_type", n);
            }
            auto certs = certify_catalog(cat, rep, only_type);
            write_file_atomic(cat_out, catalog_to_json(cat, certs).dump(2) + "\n");
            rep.artifact(cat_out);
            return rep.finish();
        }

        if (*check) {
            Report rep("check");
            std::ifstream is(cat_in);
            if (!is) throw std::runtime_error("cannot read " + cat_in);
            json j = json::parse(is);
            Catalog fresh = enumerate_special();
            rep.claim("record count", static_cast<long>(fresh.records.size()),
                      static_cast<long>(j["records"].size()));
            int recomputed = 0, ok = 0;
            for (const auto& rj : j["records"]) {
                for (const auto& zj : rj["representatives"]) {
                    CorePoint z = core_point_from_json(zj);
                    ++recomputed;
                    std::string why;
                    if (core_point_on_variety(z, &why) && jacobian_certificate(z).smooth &&
                        match_against_catalog(z, fresh))
                        ++ok;
                    else
                        rep.fail("record " + rj["id"].dump() + " fails re-verification");
                }
            }
            rep.claim("representatives re-verified", recomputed, ok);
            return rep.finish();
        }

        if (*degen) {
            Report rep("degenerate");
            rep.j["seed"] = dseed;
            if (weights_str.empty() == target_str.empty())
                throw CLI::ValidationError("degenerate", "need exactly one of --weights / --target-split");
            Catalog cat = enumerate_special();
            std::optional<DegenerationResult> res;
            if (!weights_str.empty()) {
                OneParamWeights w;
                if (std::sscanf(weights_str.c_str(), "%d,%d,%d,%d", &w.a[0], &w.a[1], &w.a[2],
                                &w.a[3]) != 4)
                    throw CLI::ValidationError("degenerate", "--weights wants a,b,c,d");
                rep.j["weights"] = w.a;
                auto cs = sample_configs(dseed, 1, {.require_nonzero_edges = true});
                try {
                    res = degenerate_and_limit(cs[0], w);
                } catch (const std::invalid_argument& e) {
                    rep.fail(e.what());
                    return rep.finish();
                }
            } else {
                TargetSplit t;
                auto c1 = target_str.find(','), c2 = target_str.rfind(',');
                if (c1 == std::string::npos || c2 == c1)
                    throw CLI::ValidationError("degenerate", "--target-split wants L,P,H");
                t.lines = target_str.substr(0, c1);
                t.planes = target_str.substr(c1 + 1, c2 - c1 - 1);
                t.hyperplanes = target_str.substr(c2 + 1);
                rep.j["target_split"] = target_str;
                res = build_split_degeneration(t, dseed);
                if (!res)
                    throw CLI::ValidationError(
                        "degenerate", "split type " + target_str +
                                          " is not realizable by a minimally split point");
            }
            auto m = match_against_catalog(res->core, cat);
            bool split = res->profile[0] >= 2 && res->profile[1] >= 2 && res->profile[2] >= 2;
            rep.j["n_k"] = {res->profile[0], res->profile[1], res->profile[2]};
            rep.j["split"] = split;
            rep.j["minimally_split"] = res->profile == std::array<int, 3>{2, 2, 2};
            rep.j["match"] = m ? json(special_type_name(m->type)) : json(nullptr);
            std::string why;
            if (!core_point_on_variety(res->core, &why)) rep.fail("core limit off the variety: " + why);
            if (!degen_out.empty()) {
                write_file_atomic(degen_out, degeneration_to_json(*res, m).dump(2) + "\n");
                rep.artifact(degen_out);
            }
            return rep.finish();
        }

        if (*exp) {
            Report rep("export");
            if (gamma_fmt.empty() == rel_fmt.empty())
                throw CLI::ValidationError("export", "need exactly one of --gamma / --relations");
            if (!gamma_fmt.empty()) {
                if (gamma_fmt == "dot") {
                    write_file_atomic(exp_out, gamma_to_dot());
                } else {
                    GammaGraph g = gamma_graph();
                    json nodes = json::array(), edges = json::array();
                    for (const auto& n : g.node_ids) nodes.push_back(n);
                    for (const auto& e : g.edge_rows)
                        edges.push_back({{"label", e[0]}, {"a", e[1]}, {"b", e[2]}});
                    write_file_atomic(exp_out, json{{"components", g.components},
                                                    {"edge_count", g.edge_count},
                                                    {"nodes", nodes},
                                                    {"edges", edges}}
                                                       .dump(2) +
                                                   "\n");
                }
                rep.count("components", gamma_graph().components);
                rep.count("edges", gamma_graph().edge_count);
            } else {
                if (rel_fmt == "txt") {
                    std::string txt;
                    txt += "# chart-level generators (variables x_I_J)\n";
                    for (const auto& r : chart_relations())
                        txt += r.render() + "  # " + r.describe() + "\n";
                    txt += "# core-level generators (variables y[{I,J}|face])\n";
                    for (const auto& r : core_relations())
                        txt += r.render() + "  # " + r.describe() + "\n";
                    write_file_atomic(exp_out, txt);
                } else {
                    json u = json::array(), z = json::array();
                    for (const auto& r : chart_relations()) u.push_back(relation_to_json(r));
                    for (const auto& r : core_relations()) z.push_back(relation_to_json(r));
                    write_file_atomic(exp_out, json{{"u", u}, {"z", z}}.dump(2) + "\n");
                }
                rep.count("chart_relations", static_cast<long>(chart_relations().size()));
                rep.count("core_relations", static_cast<long>(core_relations().size()));
            }
            rep.artifact(exp_out);
            return rep.finish();
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
