#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ppg/adversary.hpp"
#include "ppg/algorithm.hpp"
#include "ppg/analysis.hpp"
#include "ppg/atlas.hpp"
#include "ppg/conditions.hpp"
#include "ppg/dot_export.hpp"
#include "ppg/errors.hpp"
#include "ppg/json_io.hpp"
#include "ppg/layer_graph.hpp"
#include "ppg/solver.hpp"

namespace {

using nlohmann::ordered_json;

int cmd_run(const std::string& alg, long b, long n, const std::string& oracle_mode,
            std::uint64_t seed, bool verify, const std::string& emit_dot,
            const std::string& emit_json) {
    if (alg == "three-path") {
        if (b < 1) {
            throw ppg::ConfigError("three-path needs --b >= 1 (or --n >= 4664)");
        }
    } else if (n < 2) {
        throw ppg::ConfigError("--n is required for the baselines");
    }

    long total_points = n;
    if (alg == "three-path") {
        ppg::RoundOnePlan plan = ppg::build_round1_plan(b);
        if (total_points == 0) {
            total_points = plan.n;
        } else if (total_points < plan.n) {
            throw ppg::ConfigError("n must be at least " + std::to_string(plan.n) +
                                   " for b=" + std::to_string(b));
        }
    }

    std::unique_ptr<ppg::Oracle> oracle;
    ppg::AdversaryOracle* adversary = nullptr;
    if (oracle_mode == "honest") {
        oracle = std::make_unique<ppg::HonestOracle>(total_points, seed);
    } else if (oracle_mode == "adversary") {
        auto adv = std::make_unique<ppg::AdversaryOracle>(total_points);
        adversary = adv.get();
        oracle = std::move(adv);
    } else {
        throw ppg::ConfigError("oracle must be honest or adversary");
    }

    ppg::AlgorithmReport report;
    if (alg == "three-path") {
        report = ppg::run_two_round(*oracle, b, verify);
    } else if (alg == "triangle") {
        report = ppg::run_triangle_baseline(*oracle, total_points, verify);
    } else if (alg == "quad") {
        report = ppg::run_quadrilateral_baseline(*oracle, total_points, verify);
    } else {
        throw ppg::ConfigError("unknown algorithm: " + alg);
    }

    if (adversary && verify) {
        ppg::AdversaryVerdict verdict = adversary->verdict();
        report.verified = report.verified && !verdict.defeated;
    }

    std::string json = ppg::report_to_json(report);
    std::cout << json;
    if (!emit_json.empty()) {
        ppg::write_file(emit_json, json);
    }
    if (!emit_dot.empty()) {
        ppg::write_file(emit_dot, ppg::export_dot(oracle->transcript().to_ppg(),
                                                  report.placement));
    }
    return report.verified ? 0 : 1;
}

int cmd_verify_rigid(const std::string& path, int cap, bool witness) {
    ppg::Ppg g = ppg::instance_from_json(ppg::read_file(path));
    ppg::SolveOptions opt;
    opt.cap = cap;
    opt.limit = witness ? 2 : 2;
    ppg::PlacementSet sols = ppg::solve_all_placements(g, {}, opt);
    bool rigid = sols.size() == 1;
    std::cout << (rigid ? "rigid" : (sols.empty() ? "unrealizable" : "ambiguous")) << "\n";
    if (witness) {
        for (const auto& p : sols.placements) {
            std::cout << ppg::placement_to_json(p);
        }
    }
    return rigid ? 0 : 1;
}

int cmd_layer_check(const std::string& path, std::size_t limit) {
    ppg::Ppg g = ppg::instance_from_json(ppg::read_file(path));
    auto drawings = ppg::enumerate_layer_drawings(g, limit);
    std::cout << "drawings: " << drawings.size()
              << (limit > 0 && drawings.size() >= limit ? " (limit reached)" : "") << "\n";
    if (!drawings.empty()) {
        std::cout << ppg::export_drawing_dot(g, drawings.front());
    }
    return 0;
}

int cmd_conditions_list(int serial, int group) {
    if (serial > 0) {
        for (const auto& set : ppg::three_path_condition_sets()) {
            if (set.serial != serial) {
                continue;
            }
            for (const auto& expr : set.forbidden) {
                std::cout << "|" << ppg::comp_edge_name(set.target) << "| != " << expr.str()
                          << "\n";
            }
        }
        return 0;
    }
    for (const auto& cond : ppg::seven_cycle_conditions()) {
        if (group > 0 && cond.group != group) {
            continue;
        }
        std::cout << "group " << cond.group << ": " << cond.str() << "\n";
    }
    return 0;
}

int cmd_conditions_check(const std::string& path) {
    ppg::ThreePathLengths lengths = ppg::lengths_from_json(ppg::read_file(path));
    ppg::ThreePathCheck check = ppg::check_three_path(lengths);
    if (check.ok) {
        std::cout << "ok\n";
        return 0;
    }
    for (const auto& v : check.violations) {
        std::cout << "violated: serial " << v.serial << " " << v.expr.str() << " = "
                  << v.value.str() << "\n";
    }
    return 1;
}

int cmd_analyze(const std::string& path, bool lemma_paths, bool dens, bool attacks) {
    ordered_json out;
    if (!path.empty()) {
        ppg::Ppg g = ppg::instance_from_json(ppg::read_file(path));
        if (lemma_paths) {
            ppg::PathBoundReport rep = ppg::check_degree2_path_bound(g);
            out["degree2_path_bound"] = {{"ok", rep.ok}, {"max_length", rep.max_length},
                                         {"offending", rep.offending.size()}};
        }
        if (dens) {
            ppg::DensityReport rep = ppg::density(g);
            ordered_json groups = ordered_json::array();
            for (const auto& grp : rep.groups) {
                groups.push_back({{"kind", grp.kind},
                                  {"node_mass", grp.node_mass.str()},
                                  {"edge_mass", grp.edge_mass.str()},
                                  {"density", grp.density().str()}});
            }
            out["density"] = {{"nodes", rep.node_count},
                              {"edges", rep.edge_count},
                              {"value", rep.density.str()},
                              {"groups", groups}};
        }
    }
    if (attacks) {
        ordered_json list = ordered_json::array();
        for (const auto& p : ppg::attack_table()) {
            ordered_json lens = ordered_json::array();
            for (const auto& l : p.lengths) {
                lens.push_back(l.str());
            }
            ppg::SolveOptions opt;
            auto sols = ppg::solve_all_placements(p.cycle_graph(), {}, opt);
            list.push_back({{"rounds", p.path_rounds},
                            {"lengths", lens},
                            {"note", p.note},
                            {"placements", sols.size()}});
        }
        out["attacks"] = list;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_atlas(int max_n, int samples, std::uint64_t seed) {
    ppg::AtlasResult res = ppg::run_atlas(max_n, samples, seed);
    std::cout << "graphs: " << res.graphs_checked << "\nsamples per graph: "
              << res.samples_per_graph << "\ninconsistencies: " << res.inconsistencies << "\n";
    for (const auto& f : res.failures) {
        std::cout << "disagreement: " << f << "\n";
    }
    return res.inconsistencies == 0 ? 0 : 1;
}

int cmd_export_dot(const std::string& path, const std::string& out_path) {
    ppg::Ppg g = ppg::instance_from_json(ppg::read_file(path));
    std::string dot = ppg::export_dot(g);
    if (out_path.empty()) {
        std::cout << dot;
    } else {
        ppg::write_file(out_path, dot);
    }
    return 0;
}

int cmd_oracle(const std::string& mode, long n, std::uint64_t seed,
               const std::string& requests_path, const std::string& out_path) {
    nlohmann::json req = nlohmann::json::parse(ppg::read_file(requests_path));
    if (n == 0 && req.contains("n")) {
        n = req["n"].get<long>();
    }
    std::unique_ptr<ppg::Oracle> oracle;
    if (mode == "honest") {
        oracle = std::make_unique<ppg::HonestOracle>(n, seed);
    } else {
        oracle = std::make_unique<ppg::AdversaryOracle>(n);
    }
    for (const auto& round : req.at("rounds")) {
        std::vector<std::pair<ppg::PointId, ppg::PointId>> batch;
        for (const auto& q : round) {
            batch.push_back({q.at(0).get<int>(), q.at(1).get<int>()});
        }
        oracle->answer_round(batch);
    }
    std::string text = ppg::transcript_to_json(oracle->transcript());
    if (out_path.empty()) {
        std::cout << text;
    } else {
        ppg::write_file(out_path, text);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact point placement toolkit: two-round query planning, brute-force "
                 "line-rigidity checking, layer drawings, and the lower-bound adversary"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "run a placement algorithm against an oracle");
    std::string alg = "three-path", oracle_mode = "honest", emit_dot, emit_json;
    long b = 0, n = 0;
    std::uint64_t seed = 0;
    bool verify = false;
    run->add_option("--alg", alg, "three-path | triangle | quad");
    run->add_option("--b", b, "size parameter of the three-path construction");
    run->add_option("--n", n, "point count (baselines; optional padding for three-path)");
    run->add_option("--oracle", oracle_mode, "honest | adversary");
    run->add_option("--seed", seed, "seed for the honest instance");
    run->add_flag("--verify", verify, "check the recovered placement");
    run->add_option("--emit-dot", emit_dot, "write the final query graph as DOT");
    run->add_option("--emit-json", emit_json, "write the report JSON");

    // verify-rigid
    auto* vr = app.add_subcommand("verify-rigid", "decide line rigidity by brute force");
    std::string vr_path;
    int vr_cap = 0;
    bool vr_witness = false;
    vr->add_option("instance", vr_path, "instance JSON")->required();
    vr->add_option("--cap", vr_cap, "brute-force point cap");
    vr->add_flag("--witness", vr_witness, "print up to two canonical placements");

    // layer-check
    auto* lc = app.add_subcommand("layer-check", "enumerate layer drawings");
    std::string lc_path;
    std::size_t lc_limit = 1;
    lc->add_option("instance", lc_path, "instance JSON")->required();
    lc->add_option("--limit", lc_limit, "stop after this many drawings");

    // conditions
    auto* conds = app.add_subcommand("conditions", "inspect or evaluate the avoidance lists");
    auto* cl = conds->add_subcommand("list", "print conditions");
    int serial = 0, group = 0;
    cl->add_option("--serial", serial, "avoidance list 1..6");
    cl->add_option("--group", group, "7-cycle condition group 1..6");
    auto* cc = conds->add_subcommand("check", "evaluate component lengths");
    std::string cc_path;
    cc->add_option("lengths", cc_path, "lengths JSON")->required();

    // analyze
    auto* an = app.add_subcommand("analyze", "degree-2 paths, density, attack table");
    std::string an_path;
    bool an_lemma = false, an_density = false, an_attacks = false;
    an->add_option("instance", an_path, "instance JSON");
    an->add_flag("--lemma4", an_lemma, "check the degree-2 path bound");
    an->add_flag("--density", an_density, "density report");
    an->add_flag("--attacks", an_attacks, "verify the attack recipes");

    // atlas
    auto* at = app.add_subcommand("atlas", "rigidity vs layer drawings on all small graphs");
    int at_max_n = 5, at_samples = 50;
    std::uint64_t at_seed = 1;
    at->add_option("--max-n", at_max_n, "largest vertex count (<= 7)");
    at->add_option("--samples", at_samples, "length samples per graph");
    at->add_option("--seed", at_seed, "sampling seed");

    // export-dot
    auto* ed = app.add_subcommand("export-dot", "write an instance as DOT");
    std::string ed_path, ed_out;
    ed->add_option("instance", ed_path, "instance JSON")->required();
    ed->add_option("-o,--out", ed_out, "output path (stdout when omitted)");

    // oracle
    auto* orc = app.add_subcommand("oracle", "answer query batches from a requests file");
    std::string orc_mode = "honest", orc_requests, orc_out;
    long orc_n = 0;
    std::uint64_t orc_seed = 0;
    orc->add_option("--mode", orc_mode, "honest | adversary");
    orc->add_option("--n", orc_n, "point count (defaults to the requests file)");
    orc->add_option("--seed", orc_seed, "seed for the honest instance");
    orc->add_option("--requests", orc_requests, "requests JSON")->required();
    orc->add_option("-o,--out", orc_out, "transcript output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            return cmd_run(alg, b, n, oracle_mode, seed, verify, emit_dot, emit_json);
        }
        if (vr->parsed()) {
            return cmd_verify_rigid(vr_path, vr_cap, vr_witness);
        }
        if (lc->parsed()) {
            return cmd_layer_check(lc_path, lc_limit);
        }
        if (conds->parsed()) {
            if (cl->parsed()) {
                return cmd_conditions_list(serial, group);
            }
            if (cc->parsed()) {
                return cmd_conditions_check(cc_path);
            }
            std::cerr << "conditions needs a subcommand (list | check)\n";
            return 2;
        }
        if (an->parsed()) {
            return cmd_analyze(an_path, an_lemma, an_density, an_attacks);
        }
        if (at->parsed()) {
            return cmd_atlas(at_max_n, at_samples, at_seed);
        }
        if (ed->parsed()) {
            return cmd_export_dot(ed_path, ed_out);
        }
        if (orc->parsed()) {
            return cmd_oracle(orc_mode, orc_n, orc_seed, orc_requests, orc_out);
        }
    } catch (const ppg::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ppg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
