/**
 * Command-line front end. Subcommands:
 *
 *   emh        homology of the length-graded trail complex of a graph
 *   ai-verify  chain-level check of the endpoint pair construction
 *   shell      shellability check of a face-complex dump
 *   inj        injective-word complex verifications
 *   sweep      seeded Monte Carlo sweep over G(n, n^-alpha)
 *
 * Exit codes: 0 success/PASS, 1 verification FAIL, 2 usage or input error.
 */

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "emh/emh.hpp"

namespace {

emh::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return emh::parse_edge_list(in);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

int cmd_emh(const std::string& graph_file, int ell, std::optional<int> a, std::optional<int> b,
            std::optional<int> degree, const std::string& dump_chain, bool human) {
    emh::Graph g = load_graph(graph_file);
    std::optional<std::pair<int, int>> endpoints;
    if (a || b) {
        if (!a || !b) throw std::invalid_argument("--a and --b must be given together");
        endpoints = std::make_pair(*a, *b);
    }
    emh::IntegerChainComplex c = emh::build_emc(g, ell, endpoints);
    std::vector<emh::HomologyGroup> groups;
    if (degree)
        groups.push_back(emh::homology(c, *degree));
    else
        groups = emh::homology_all(c);
    if (!dump_chain.empty()) write_file(dump_chain, emh::chain_complex_json(c).dump(2) + "\n");
    if (human) {
        for (const auto& h : groups) {
            std::cout << "degree " << h.degree << ": free rank " << h.free_rank << ", torsion";
            if (h.torsion.empty()) std::cout << " none";
            for (const auto& t : h.torsion) std::cout << " " << t;
            std::cout << "\n";
        }
    } else {
        std::cout << emh::homology_report_json(c, groups).dump(2) << "\n";
    }
    return 0;
}

int cmd_ai_verify(const std::string& graph_file, int ell, std::optional<int> a,
                  std::optional<int> b) {
    if (ell < 3) throw std::invalid_argument("ai-verify requires --ell >= 3");
    emh::Graph g = load_graph(graph_file);
    const emh::DistanceMatrix dm = emh::path_metric(g);
    std::vector<std::pair<int, int>> pairs;
    if (a || b) {
        if (!a || !b) throw std::invalid_argument("--a and --b must be given together");
        if (*a == *b)
            throw std::invalid_argument("the correspondence needs distinct endpoints");
        pairs.emplace_back(*a, *b);
    } else {
        // A trail from a vertex to itself would repeat that vertex, so only
        // off-diagonal pairs carry the correspondence.
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = 0; v < g.vertex_count(); ++v)
                if (u != v) pairs.emplace_back(u, v);
    }
    emh::Json out;
    out["schema_version"] = emh::kSchemaVersion;
    out["ell"] = ell;
    bool all_ok = true;
    emh::Json reports = emh::Json::array();
    for (auto [u, v] : pairs) {
        emh::AiPair pair = emh::build_pair(g, u, v, ell);
        emh::IsoReport iso = emh::verify_chain_isomorphism(pair, g);
        bool homology_ok = true;
        emh::IntegerChainComplex emc = emh::build_emc(g, ell, std::make_pair(u, v));
        for (int k = 2; k <= emc.top_degree(); ++k) {
            emh::HomologyGroup direct = emh::homology(emc, k);
            emh::HomologyGroup via = emh::emh_via_ai(pair, dm, k);
            if (!(direct == via)) homology_ok = false;
        }
        emh::Json r;
        r["a"] = u;
        r["b"] = v;
        r["chain_isomorphism"] = iso.passed;
        r["sign"] = iso.sign;
        r["homology_match"] = homology_ok;
        if (!iso.mismatches.empty()) r["mismatches"] = iso.mismatches;
        reports.push_back(std::move(r));
        all_ok = all_ok && iso.passed && homology_ok;
    }
    out["pairs"] = std::move(reports);
    out["result"] = all_ok ? "PASS" : "FAIL";
    std::cout << out.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

int cmd_shell_check(const std::string& complex_file, long long budget) {
    std::ifstream in(complex_file);
    if (!in) throw std::invalid_argument("cannot open complex file: " + complex_file);
    emh::Json j = emh::Json::parse(in);
    emh::TupleComplex x = emh::tuple_complex_from_json(j);
    emh::ShellResult result = emh::find_shelling(x, budget);
    emh::Json out = emh::shell_result_json(result);
    if (result.status == emh::ShellStatus::NOT_SHELLABLE)
        out["witness"] = "restricted facet-order space exhausted without a shelling";
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_inj(std::optional<int> n, const std::string& graph_file, std::optional<int> ell) {
    emh::Json out;
    out["schema_version"] = emh::kSchemaVersion;
    bool passed = true;
    if (n) {
        emh::BjornerWachsReport r = emh::verify_bjorner_wachs(*n);
        out["mode"] = "derangement";
        out["n"] = r.n;
        out["derangements"] = r.derangements;
        emh::Json degrees = emh::Json::array();
        for (const auto& h : r.reduced) degrees.push_back(emh::homology_group_json(h));
        out["reduced_homology"] = std::move(degrees);
        if (!r.mismatches.empty()) out["mismatches"] = r.mismatches;
        passed = r.passed;
    } else if (!graph_file.empty() && ell) {
        emh::Graph g = load_graph(graph_file);
        emh::FiltrationReport r = emh::verify_filtration_quotient(g, *ell);
        out["mode"] = "filtration";
        out["ell"] = r.ell;
        emh::Json lhs = emh::Json::array(), rhs = emh::Json::array();
        for (const auto& h : r.filtration_side) lhs.push_back(emh::homology_group_json(h));
        for (const auto& h : r.emh_side) rhs.push_back(emh::homology_group_json(h));
        out["filtration_side"] = std::move(lhs);
        out["emh_side"] = std::move(rhs);
        if (!r.mismatches.empty()) out["mismatches"] = r.mismatches;
        passed = r.passed;
    } else {
        throw std::invalid_argument("inj verify needs --n, or --graph with --ell");
    }
    out["result"] = passed ? "PASS" : "FAIL";
    std::cout << out.dump(2) << "\n";
    return passed ? 0 : 1;
}

// Flat key=value config; CLI flags override file values.
void apply_config_file(const std::string& path, emh::SweepConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        auto trim = [](std::string& s) {
            s.erase(0, s.find_first_not_of(" \t"));
            s.erase(s.find_last_not_of(" \t\r") + 1);
        };
        trim(key);
        trim(value);
        if (key == "n") cfg.n = std::stoi(value);
        else if (key == "ell") cfg.ell = std::stoi(value);
        else if (key == "trials") cfg.trials = std::stoi(value);
        else if (key == "seed") cfg.seed = std::stoull(value);
        else if (key == "budget") cfg.shelling_budget = std::stoll(value);
        else if (key == "workers") cfg.workers = std::stoi(value);
        else if (key == "sampled_pairs") cfg.sampled_pairs = std::stoi(value);
        else if (key == "pairs") {
            if (value == "all") cfg.pair_policy = emh::PairPolicy::ALL_PAIRS;
            else if (value == "sampled") cfg.pair_policy = emh::PairPolicy::SAMPLED;
            else throw std::invalid_argument("pairs must be `all` or `sampled`");
        } else if (key == "alphas") {
            cfg.alpha_grid.clear();
            std::istringstream vs(value);
            std::string tok;
            while (std::getline(vs, tok, ',')) cfg.alpha_grid.push_back(std::stod(tok));
        } else {
            throw std::invalid_argument("unknown config key: " + key);
        }
    }
}

int cmd_sweep(const emh::SweepConfig& cfg, const std::string& out_dir) {
    cfg.validate();
    std::filesystem::create_directories(out_dir);
    emh::SweepSummary summary = emh::run_sweep(cfg);
    write_file(out_dir + "/summary.csv", emh::sweep_summary_csv(summary));
    write_file(out_dir + "/raw.jsonl", emh::sweep_raw_jsonl(summary));
    std::cout << "wrote " << out_dir << "/summary.csv and " << out_dir << "/raw.jsonl\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eulerian magnitude homology toolkit"};
    app.require_subcommand(1);

    std::string graph_file, complex_file, config_file, dump_chain, out_dir = ".";
    int ell = 3;
    std::optional<int> a, b, degree, inj_n, inj_ell;
    long long budget = 1'000'000;
    bool human = false;

    auto* emh_cmd = app.add_subcommand("emh", "homology of the trail chain complex");
    emh_cmd->add_option("--graph", graph_file, "edge-list file")->required();
    emh_cmd->add_option("--ell", ell, "length grading")->required();
    emh_cmd->add_option("--a", a, "starting endpoint");
    emh_cmd->add_option("--b", b, "ending endpoint");
    emh_cmd->add_option("--k", degree, "single degree to report");
    emh_cmd->add_option("--dump-chain", dump_chain, "write the chain-complex dump JSON here");
    emh_cmd->add_flag("--human", human, "table output instead of JSON");

    auto* ai_cmd = app.add_subcommand("ai-verify", "verify the endpoint pair construction");
    ai_cmd->add_option("--graph", graph_file, "edge-list file")->required();
    ai_cmd->add_option("--ell", ell, "length grading (>= 3)")->required();
    ai_cmd->add_option("--a", a, "starting endpoint");
    ai_cmd->add_option("--b", b, "ending endpoint");

    auto* shell_cmd = app.add_subcommand("shell", "shellability checks");
    auto* shell_check = shell_cmd->add_subcommand("check", "search for a shelling");
    shell_check->add_option("--complex", complex_file, "face-complex dump JSON")->required();
    shell_check->add_option("--budget", budget, "search step budget");

    auto* inj_cmd = app.add_subcommand("inj", "injective-word complex checks");
    auto* inj_verify = inj_cmd->add_subcommand("verify", "run a verification");
    inj_verify->add_option("--n", inj_n, "alphabet size for the derangement check");
    inj_verify->add_option("--graph", graph_file, "edge-list file for the filtration check");
    inj_verify->add_option("--ell", inj_ell, "filtration step (>= 3)");

    emh::SweepConfig cfg;
    auto* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo sweep over G(n, n^-alpha)");
    sweep_cmd->add_option("--config", config_file, "flat key=value config file");
    sweep_cmd->add_option("--n", cfg.n, "vertex count");
    sweep_cmd->add_option("--ell", cfg.ell, "length grading");
    sweep_cmd->add_option("--alphas", cfg.alpha_grid, "alpha grid points");
    sweep_cmd->add_option("--trials", cfg.trials, "trials per grid point");
    sweep_cmd->add_option("--seed", cfg.seed, "master seed");
    sweep_cmd->add_option("--workers", cfg.workers, "worker threads");
    sweep_cmd->add_option("--budget", cfg.shelling_budget, "shelling search budget");
    sweep_cmd->add_option("--out", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (emh_cmd->parsed()) return cmd_emh(graph_file, ell, a, b, degree, dump_chain, human);
        if (ai_cmd->parsed()) return cmd_ai_verify(graph_file, ell, a, b);
        if (shell_cmd->parsed()) {
            if (!shell_check->parsed()) throw std::invalid_argument("use `shell check`");
            return cmd_shell_check(complex_file, budget);
        }
        if (inj_cmd->parsed()) {
            if (!inj_verify->parsed()) throw std::invalid_argument("use `inj verify`");
            return cmd_inj(inj_n, graph_file, inj_ell);
        }
        if (sweep_cmd->parsed()) {
            if (!config_file.empty()) {
                emh::SweepConfig file_cfg;
                apply_config_file(config_file, file_cfg);
                // flags given on the command line win over the file
                if (sweep_cmd->count("--n") == 0) cfg.n = file_cfg.n;
                if (sweep_cmd->count("--ell") == 0) cfg.ell = file_cfg.ell;
                if (sweep_cmd->count("--alphas") == 0) cfg.alpha_grid = file_cfg.alpha_grid;
                if (sweep_cmd->count("--trials") == 0) cfg.trials = file_cfg.trials;
                if (sweep_cmd->count("--seed") == 0) cfg.seed = file_cfg.seed;
                if (sweep_cmd->count("--workers") == 0) cfg.workers = file_cfg.workers;
                if (sweep_cmd->count("--budget") == 0)
                    cfg.shelling_budget = file_cfg.shelling_budget;
                cfg.pair_policy = file_cfg.pair_policy;
                cfg.sampled_pairs = file_cfg.sampled_pairs;
            }
            return cmd_sweep(cfg, out_dir);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
