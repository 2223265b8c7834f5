// Command-line front end: verification suites, table emission, graph
// inspection and cache management for the Grassmann-graph Hecke module.
#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "ghv/errors.hpp"
#include "ghv/graph.hpp"
#include "ghv/qseries.hpp"
#include "ghv/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::string env_cache_dir() {
    const char* v = std::getenv("GHV_CACHE_DIR");
    return v ? v : "";
}

void split_suites(const std::string& csv, std::vector<std::string>& out) {
    out.clear();
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
}

int cmd_verify(const ghv::RunConfig& cfg) {
    ghv::Report report = ghv::run_suites(cfg);
    std::string rendered = report.render(cfg.format);
    if (!cfg.output.empty()) {
        std::ofstream out(cfg.output);
        if (!out) {
            std::cerr << "cannot write report to " << cfg.output << "\n";
            return kExitUsage;
        }
        out << rendered;
        std::cout << report.to_text();
    } else {
        std::cout << rendered;
    }
    return report.all_pass() ? kExitPass : kExitCheckFailure;
}

int cmd_tables(const ghv::RunConfig& cfg, const std::string& which, const std::string& out_dir,
               const std::string& table_format) {
    std::vector<std::string> files = ghv::emit_tables(cfg, which, out_dir, table_format);
    for (const auto& f : files) std::cout << "wrote " << f << "\n";
    return kExitPass;
}

int cmd_graph_info(const ghv::RunConfig& cfg) {
    ghv::GraphBudget budget;
    budget.max_vertices = cfg.max_vertices;
    ghv::GrassmannGraph g(cfg.q, static_cast<int>(cfg.N), static_cast<int>(cfg.D), budget);
    long x = 0;
    std::vector<long> clique = g.delsarte_clique(x, g.hyperplane(x, 0));
    ghv::CellPartition part;
    std::string cpath;
    if (!cfg.cache_dir.empty())
        cpath = cfg.cache_dir + "/ghv-partition-q" + std::to_string(cfg.q) + "-N" +
                std::to_string(cfg.N) + "-D" + std::to_string(cfg.D) + ".txt";
    bool cached = false;
    if (!cpath.empty()) {
        if (auto loaded = ghv::load_partition_cache(cpath, g, x, clique)) {
            part = std::move(*loaded);
            cached = true;
        }
    }
    if (!cached) {
        part = ghv::classify(g, x, clique);
        if (!cpath.empty()) ghv::save_partition_cache(cpath, g, part);
    }
    std::cout << "vertices: " << g.vertex_count() << "\n";
    std::cout << "valency: " << g.neighbors(0).size() << "\n";
    std::cout << "clique size: " << clique.size() << "\n";
    std::cout << "covering radius: " << part.covering_radius << "\n";
    for (long i = 0; i < cfg.D; ++i)
        std::cout << "|C" << i << "-| = " << part.cell_sizes[static_cast<size_t>(2 * i)] << "   |C"
                  << i << "+| = " << part.cell_sizes[static_cast<size_t>(2 * i + 1)] << "\n";
    std::cout << (cached ? "(partition loaded from cache)" : "(partition computed)") << "\n";
    return kExitPass;
}

int cmd_cache_clear(const std::string& dir) {
    if (dir.empty()) {
        std::cerr << "no cache directory configured\n";
        return kExitUsage;
    }
    namespace fs = std::filesystem;
    long removed = 0;
    if (fs::exists(dir))
        for (const auto& entry : fs::directory_iterator(dir)) {
            const std::string name = entry.path().filename().string();
            if (name.rfind("ghv-partition-", 0) == 0 && entry.path().extension() == ".txt") {
                fs::remove(entry.path());
                ++removed;
            }
        }
    std::cout << "removed " << removed << " cache file(s)\n";
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the Grassmann-graph Hecke module and its "
                 "nonsymmetric polynomial families"};
    app.require_subcommand(1);

    ghv::RunConfig cfg;
    cfg.cache_dir = env_cache_dir();
    std::string suites_csv = "all";
    std::string which = "all";
    std::string out_dir = "tables";
    std::string table_format = "csv";

    auto add_common = [&](CLI::App* sub, bool with_q) {
        sub->add_option("--N", cfg.N, "ambient dimension (N >= 2D)")->required();
        sub->add_option("--D", cfg.D, "subspace dimension (D >= 3)")->required();
        if (with_q) sub->add_option("--q", cfg.q, "prime power <= 16");
        sub->add_option("--cache-dir", cfg.cache_dir, "partition cache directory");
        sub->add_option("--max-vertices", cfg.max_vertices, "enumeration budget");
    };

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify, true);
    verify->add_option("--mode", cfg.mode, "symbolic | numeric")->required();
    verify->add_option("--suites", suites_csv, "comma list of graph,leonard,hv,nonsym or all");
    verify->add_option("--seed", cfg.seed, "seed for sampled checks");
    verify->add_option("--output", cfg.output, "write the report to this path");
    verify->add_option("--format", cfg.format, "json | csv | text");
    verify->add_flag("--timing", cfg.include_timing, "include wall times in the report");

    CLI::App* tables = app.add_subcommand("tables", "emit the scalar tables");
    add_common(tables, true);
    tables->add_option("--which", which,
                       "clique-intersection | cell-sizes | recurrence | weights | gram | all");
    tables->add_option("--out", out_dir, "output directory");
    tables->add_option("--mode", cfg.mode, "symbolic | numeric");
    tables->add_option("--table-format", table_format, "csv | json");

    CLI::App* info = app.add_subcommand("graph-info", "enumerate one instance and print counts");
    add_common(info, true);

    CLI::App* cache = app.add_subcommand("cache", "cache management");
    CLI::App* cache_clear = cache->add_subcommand("clear", "remove cached partitions");
    cache_clear->add_option("--cache-dir", cfg.cache_dir, "partition cache directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (verify->parsed()) {
            split_suites(suites_csv, cfg.suites);
            cfg.validate();
            return cmd_verify(cfg);
        }
        if (tables->parsed()) {
            if (tables->count("--q") && !tables->count("--mode")) cfg.mode = "numeric";
            cfg.suites = {"all"};
            cfg.validate();
            return cmd_tables(cfg, which, out_dir, table_format);
        }
        if (info->parsed()) {
            cfg.mode = "numeric";
            cfg.suites = {"graph"};
            cfg.validate();
            return cmd_graph_info(cfg);
        }
        if (cache->parsed() && cache_clear->parsed()) return cmd_cache_clear(cfg.cache_dir);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const ghv::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
}
