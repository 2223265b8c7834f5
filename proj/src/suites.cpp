#include "ghv/suites.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>

#include "ghv/errors.hpp"
#include "ghv/graph.hpp"
#include "ghv/hv.hpp"
#include "ghv/nonsym.hpp"
#include "ghv/qseries.hpp"

namespace ghv {

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

struct Recorder {
    Report& report;
    std::string prefix;

    void run(const std::string& id, const std::string& statement,
             const std::function<std::pair<bool, std::string>()>& body) {
        Timer t;
        CheckRecord rec;
        rec.id = prefix + "." + id;
        rec.statement = statement;
        try {
            auto [ok, witness] = body();
            rec.status = ok ? "pass" : "fail";
            rec.witness = witness;
        } catch (const std::exception& e) {
            rec.status = "fail";
            rec.witness = e.what();
        }
        rec.millis = t.ms();
        report.add(std::move(rec));
    }

    void run_list(const std::string& id, const std::string& statement,
                  const std::function<CheckList()>& body) {
        run(id, statement, [&]() -> std::pair<bool, std::string> {
            CheckList cl = body();
            for (const auto& item : cl.items)
                if (!item.pass) return {false, item.name + ": " + item.witness};
            return {true, ""};
        });
    }

    void skip(const std::string& id, const std::string& statement, const std::string& why) {
        report.add({prefix + "." + id, statement, "skipped", why, 0.0});
    }
};

std::string cache_path(const RunConfig& cfg) {
    if (cfg.cache_dir.empty()) return "";
    return cfg.cache_dir + "/ghv-partition-q" + std::to_string(cfg.q) + "-N" +
           std::to_string(cfg.N) + "-D" + std::to_string(cfg.D) + ".txt";
}

long spec_long(const ExactScalar& x, int q) {
    return static_cast<long>(x.specialize_q(mpq_class(q)).re().get_num().get_si());
}

} // namespace

void run_graph_suite(const RunConfig& cfg, Report& report) {
    Recorder rec{report, "graph"};
    if (cfg.mode != "numeric") {
        rec.skip("all", "brute-force instance checks", "symbolic mode builds no graph");
        return;
    }
    const int q = cfg.q;
    const int N = static_cast<int>(cfg.N), D = static_cast<int>(cfg.D);
    GraphBudget budget;
    budget.max_vertices = cfg.max_vertices;
    GrassmannGraph g(q, N, D, budget);
    GrassmannScalars gs = grassmann_scalars(N, D);

    rec.run("vertex-count", "enumeration count equals the Gaussian binomial",
            [&]() -> std::pair<bool, std::string> {
                mpz_class want = subspace_count(q, N, D);
                bool ok = mpz_class(g.vertex_count()) == want &&
                          gauss_binom(N, D).specialize_q(mpq_class(q)) ==
                              GaussianRational(mpq_class(want));
                return {ok, ok ? "" : "count " + std::to_string(g.vertex_count())};
            });

    long x = 0;
    std::vector<long> clique = g.delsarte_clique(x, g.hyperplane(x, 0));
    rec.run("clique-size", "maximal clique through a fixed hyperplane has the stated size",
            [&]() -> std::pair<bool, std::string> {
                long want = spec_long(gs.clique_size, q);
                bool ok = static_cast<long>(clique.size()) == want;
                return {ok, ok ? "" : std::to_string(clique.size()) + " != " + std::to_string(want)};
            });

    CellPartition part;
    std::string cpath = cache_path(cfg);
    bool from_cache = false;
    if (!cpath.empty()) {
        if (auto loaded = load_partition_cache(cpath, g, x, clique)) {
            part = std::move(*loaded);
            from_cache = true;
        }
    }
    if (!from_cache) {
        part = classify(g, x, clique);
        if (!cpath.empty()) save_partition_cache(cpath, g, part);
    }

    rec.run("cell-sizes", "cell cardinalities equal the closed forms",
            [&]() -> std::pair<bool, std::string> {
                for (long i = 0; i < D; ++i) {
                    long wm = spec_long(gs.cell_minus[static_cast<size_t>(i)], q);
                    long wp = spec_long(gs.cell_plus[static_cast<size_t>(i)], q);
                    if (part.cell_sizes[static_cast<size_t>(2 * i)] != wm ||
                        part.cell_sizes[static_cast<size_t>(2 * i + 1)] != wp)
                        return {false, "cell " + std::to_string(i)};
                }
                return {true, ""};
            });
    rec.run("covering-radius", "covering radius of the clique is D-1",
            [&]() -> std::pair<bool, std::string> {
                bool ok = part.covering_radius == D - 1;
                return {ok, ok ? "" : std::to_string(part.covering_radius)};
            });
    rec.run("intersection-numbers",
            "full-tally intersection numbers match the closed forms and are constant",
            [&]() -> std::pair<bool, std::string> {
                EmpiricalIntersection emp = empirical_intersection_numbers(g, part);
                if (!emp.constant) return {false, emp.witness};
                for (long i = 0; i <= D; ++i) {
                    if (emp.c[static_cast<size_t>(i)] != spec_long(gs.c[static_cast<size_t>(i)], q) ||
                        emp.a[static_cast<size_t>(i)] != spec_long(gs.a[static_cast<size_t>(i)], q) ||
                        emp.b[static_cast<size_t>(i)] != spec_long(gs.b[static_cast<size_t>(i)], q))
                        return {false, "distance class " + std::to_string(i)};
                }
                for (long i = 0; i < D; ++i) {
                    if (emp.clique_c[static_cast<size_t>(i)] != spec_long(gs.c_t[static_cast<size_t>(i)], q) ||
                        emp.clique_a[static_cast<size_t>(i)] != spec_long(gs.a_t[static_cast<size_t>(i)], q) ||
                        emp.clique_b[static_cast<size_t>(i)] != spec_long(gs.b_t[static_cast<size_t>(i)], q))
                        return {false, "clique distance class " + std::to_string(i)};
                }
                return {true, ""};
            });
    rec.run("quotient-matrix", "counted quotient equals the symbolic action table at this q",
            [&]() -> std::pair<bool, std::string> {
                QuotientMatrices qm = quotient_matrices(g, part);
                if (!qm.equitable) return {false, qm.witness};
                ModuleMatrices mm = module_matrices(N, D);
                for (int r = 0; r < 2 * D; ++r)
                    for (int c = 0; c < 2 * D; ++c)
                        if (mpq_class(qm.adjacency[static_cast<size_t>(r)][static_cast<size_t>(c)]) !=
                            mm.adjacency.at(r, c).specialize_q(mpq_class(q)).re())
                            return {false,
                                    "entry (" + std::to_string(r) + "," + std::to_string(c) + ")"};
                return {true, ""};
            });
    rec.run("spectral-multiplicity",
            "second-eigenvalue multiplicity from counted data equals the first dual eigenvalue",
            [&]() -> std::pair<bool, std::string> {
                EmpiricalIntersection emp = empirical_intersection_numbers(g, part);
                mpq_class theta1 = gs.theta[1].specialize_q(mpq_class(q)).re();
                mpq_class mult = eigenvalue_multiplicity(emp.a, emp.b, emp.c, theta1,
                                                         mpz_class(g.vertex_count()));
                mpq_class want = gs.theta_star[0].specialize_q(mpq_class(q)).re();
                bool ok = mult == want;
                return {ok, ok ? "" : mult.get_str() + " != " + want.get_str()};
            });
    if (g.vertex_count() <= 2000) {
        rec.run("bfs-oracle", "algebraic distance equals path distance for all pairs",
                [&]() -> std::pair<bool, std::string> {
                    std::string witness;
                    bool ok = bfs_distances_match(g, &witness);
                    return {ok, witness};
                });
    } else {
        rec.skip("bfs-oracle", "algebraic distance equals path distance for all pairs",
                 "instance above the all-pairs budget");
    }
}

void run_leonard_suite(const RunConfig& cfg, Report& report) {
    Recorder rec{report, "leonard"};
    const long N = cfg.N, D = cfg.D;
    rec.run("derivations", "all four parameter sequences derive consistently (two routes each)",
            [&]() -> std::pair<bool, std::string> {
                FourSystems fs = four_systems(N, D);
                derive(fs.phi);
                derive(fs.phi_perp);
                derive(fs.phi_tilde);
                derive(fs.phi_tilde_perp);
                return {true, ""};
            });
    rec.run("polynomial-ladders",
            "recurrence and closed-sum polynomial routes agree for all four systems",
            [&]() -> std::pair<bool, std::string> {
                FourSystems fs = four_systems(N, D);
                for (const ParameterSequence* ps :
                     {&fs.phi, &fs.phi_perp, &fs.phi_tilde, &fs.phi_tilde_perp})
                    polynomials(*ps, derive(*ps));
                return {true, ""};
            });
    rec.run("duality", "polynomial evaluation equals the terminating basic hypergeometric sum",
            [&]() -> std::pair<bool, std::string> {
                FourSystems fs = four_systems(N, D);
                for (const ParameterSequence* ps :
                     {&fs.phi, &fs.phi_perp, &fs.phi_tilde, &fs.phi_tilde_perp}) {
                    LeonardData ld = derive(*ps);
                    DualityReport dr = duality_check(*ps, ld, polynomials(*ps, ld));
                    if (!dr.pass) return {false, dr.witness};
                }
                return {true, ""};
            });
    rec.run("weights", "weights sum to one and the base weight is the reciprocal vertex count",
            [&]() -> std::pair<bool, std::string> {
                LeonardData ld = derive(four_systems(N, D).phi);
                ExactScalar sum;
                for (const auto& m : ld.m) sum += m;
                bool ok = sum == ExactScalar::one() && ld.m[0] == gauss_binom(N, D).inv();
                return {ok, ""};
            });
    rec.run("module-matrices", "closed action table equals the intersection-number route",
            [&]() -> std::pair<bool, std::string> {
                bool ok = module_matrices(N, D).adjacency == module_matrix_adjacency_generic(N, D);
                return {ok, ""};
            });
    rec.run("projections", "projection actions are idempotent with complementary ranks",
            [&]() -> std::pair<bool, std::string> {
                ProjectionPair pp = projections(N, D);
                bool ok = (pp.onto_mx * pp.onto_mx - pp.onto_mx).is_zero() &&
                          (pp.onto_mc * pp.onto_mc - pp.onto_mc).is_zero() &&
                          pp.onto_mx.rank() == D + 1 && pp.onto_mc.rank() == D;
                return {ok, ""};
            });
}

void run_hv_suite(const RunConfig& cfg, Report& report) {
    Recorder rec{report, "hv"};
    const long N = cfg.N, D = cfg.D;
    rec.run_list("relations", "the six defining relations hold as zero matrices",
                 [&] { return verify_hv_relations(build_generators(N, D)); });
    rec.run_list("t-action", "the module generators match the Hecke-side combinations",
                 [&] { return verify_t_action(N, D); });
    rec.run_list("projections", "projection identities from the quadratic generators",
                 [&] { return verify_projections(N, D); });
    rec.run_list("dual-basis", "stated block matrices in the dual basis",
                 [&] { return verify_dual_basis_matrices(N, D); });
    rec.run_list("nil-presentation", "nil presentation identities",
                 [&] { return verify_nildaha(build_generators(N, D)); });
    rec.run("irreducibility", "word span reaches the full matrix algebra",
            [&]() -> std::pair<bool, std::string> {
                IrreducibilityProbe p = irreducibility_probe(build_generators(N, D));
                if (!p.conclusive) return {false, "inconclusive at the word-length bound"};
                return {p.irreducible, "span dimension " + std::to_string(p.span_dimension)};
            });
}

void run_nonsym_suite(const RunConfig& cfg, Report& report) {
    Recorder rec{report, "nonsym"};
    const long N = cfg.N, D = cfg.D;
    rec.run("family", "vertex-side and clique-side constructions coincide",
            [&]() -> std::pair<bool, std::string> {
                build_family(N, D);
                return {true, ""};
            });
    rec.run_list("module-realization", "the family realizes the cell basis through X",
                 [&] { return verify_module_realization(N, D); });
    rec.run_list("recurrence-tables", "multiplication by zeta matches the stated tables",
                 [&] { return verify_recurrence_tables(N, D); });
    rec.run_list("minimal-polynomial", "the degree-2D annihilator is minimal",
                 [&] { return verify_minimal_polynomial(N, D); });
    rec.run("form", "closed weight formulas match the module inner products",
            [&]() -> std::pair<bool, std::string> {
                build_form(N, D);
                return {true, ""};
            });
    rec.run_list("orthogonality", "Gram diagonal equals the cell sizes; quadrature identity",
                 [&] { return verify_orthogonality(N, D, cfg.seed); });
}

Report run_suites(const RunConfig& cfg) {
    cfg.validate();
    Report report;
    report.config = cfg;
    if (cfg.wants("graph")) run_graph_suite(cfg, report);
    if (cfg.wants("leonard")) run_leonard_suite(cfg, report);
    if (cfg.wants("hv")) run_hv_suite(cfg, report);
    if (cfg.wants("nonsym")) run_nonsym_suite(cfg, report);
    return report;
}

namespace {

// numeric mode renders q-rational values as exact rationals and half-odd
// values as A + B*q^(1/2); symbolic mode uses the canonical expression
std::string render_value(const ExactScalar& x, const RunConfig& cfg) {
    if (cfg.mode != "numeric") return x.str();
    auto [A, B] = x.specialize_sqrt(mpq_class(cfg.q));
    if (B.is_zero()) return A.str();
    std::string btxt;
    if (B.is_one())
        btxt = "q^(1/2)";
    else if (B == GaussianRational(-1))
        btxt = "-q^(1/2)";
    else
        btxt = B.str() + "*q^(1/2)";
    if (A.is_zero()) return btxt;
    return A.str() + " + " + btxt;
}

} // namespace

namespace {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

void write_table(const std::string& path, const Table& t, const std::string& table_format) {
    std::ofstream out(path);
    if (table_format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& row : t.rows) {
            nlohmann::ordered_json obj;
            for (size_t c = 0; c < t.columns.size(); ++c) obj[t.columns[c]] = row[c];
            arr.push_back(std::move(obj));
        }
        out << arr.dump(2) << "\n";
        return;
    }
    for (size_t c = 0; c < t.columns.size(); ++c)
        out << t.columns[c] << (c + 1 < t.columns.size() ? "," : "\n");
    for (const auto& row : t.rows)
        for (size_t c = 0; c < row.size(); ++c) out << row[c] << (c + 1 < row.size() ? "," : "\n");
}

} // namespace

std::vector<std::string> emit_tables(const RunConfig& cfg, const std::string& which,
                                     const std::string& out_dir,
                                     const std::string& table_format) {
    cfg.validate();
    if (table_format != "csv" && table_format != "json")
        throw PreconditionError("table format must be csv or json");
    std::filesystem::create_directories(out_dir);
    std::vector<std::string> written;
    const long N = cfg.N, D = cfg.D;
    const std::string ext = "." + table_format;
    GrassmannScalars gs = grassmann_scalars(N, D);
    auto want = [&](const char* name) { return which == "all" || which == name; };
    auto emit = [&](const std::string& name, const Table& t) {
        std::string path = out_dir + "/" + name + ext;
        write_table(path, t, table_format);
        written.push_back(path);
    };
    auto rv = [&](const ExactScalar& x) { return render_value(x, cfg); };

    if (want("clique-intersection")) {
        Table t{{"i", "a", "b", "c"}, {}};
        for (long i = 0; i < D; ++i)
            t.rows.push_back({std::to_string(i), rv(gs.a_t[static_cast<size_t>(i)]),
                              rv(gs.b_t[static_cast<size_t>(i)]), rv(gs.c_t[static_cast<size_t>(i)])});
        emit("clique-intersection", t);
    }
    if (want("cell-sizes")) {
        Table t{{"cell", "size"}, {}};
        for (long i = 0; i < D; ++i) {
            t.rows.push_back({"C" + std::to_string(i) + "-", rv(gs.cell_minus[static_cast<size_t>(i)])});
            t.rows.push_back({"C" + std::to_string(i) + "+", rv(gs.cell_plus[static_cast<size_t>(i)])});
        }
        emit("cell-sizes", t);
    }
    if (want("recurrence")) {
        const char* names[4] = {"recurrence-zeta-minus", "recurrence-zetainv-minus",
                                "recurrence-zeta-plus", "recurrence-zetainv-plus"};
        int variant = 0;
        for (int sigma = 0; sigma <= 1; ++sigma)
            for (int inv = 0; inv <= 1; ++inv) {
                Table t{{"i", "target", "coefficient"}, {}};
                for (long i = 0; i < D; ++i)
                    for (const TermCoeff& tc : stated_action_terms(N, D, inv != 0, sigma, i))
                        t.rows.push_back({std::to_string(i),
                                          std::string("ell") + (tc.sign == 0 ? "-" : "+") + "_" +
                                              std::to_string(tc.index),
                                          rv(tc.coeff)});
                emit(names[variant++], t);
            }
    }
    if (want("systems")) {
        FourSystems fs = four_systems(N, D);
        const std::pair<const char*, const ParameterSequence*> systems[4] = {
            {"system-vertex", &fs.phi},
            {"system-vertex-complement", &fs.phi_perp},
            {"system-clique", &fs.phi_tilde},
            {"system-clique-complement", &fs.phi_tilde_perp}};
        for (const auto& [name, ps] : systems) {
            LeonardData ld = derive(*ps);
            Table t{{"i", "theta", "theta_star", "varphi", "varphi_down", "b", "c", "m"}, {}};
            for (long i = 0; i <= ps->d; ++i) {
                std::vector<std::string> row{std::to_string(i),
                                             rv(ld.theta[static_cast<size_t>(i)]),
                                             rv(ld.theta_star[static_cast<size_t>(i)])};
                row.push_back(i >= 1 ? rv(ld.phi[static_cast<size_t>(i - 1)]) : "");
                row.push_back(i >= 1 ? rv(ld.phi_down[static_cast<size_t>(i - 1)]) : "");
                row.push_back(rv(ld.b[static_cast<size_t>(i)]));
                row.push_back(rv(ld.c[static_cast<size_t>(i)]));
                row.push_back(rv(ld.m[static_cast<size_t>(i)]));
                t.rows.push_back(std::move(row));
            }
            emit(name, t);
        }
    }
    if (want("weights")) {
        Table t{{"index", "node", "weight"}, {}};
        HermitianFormL form = build_form(N, D);
        for (long i = -D; i <= D - 1; ++i)
            t.rows.push_back({std::to_string(i), rv(form.lambda[static_cast<size_t>(i + D)]),
                              rv(form.omega[static_cast<size_t>(i + D)])});
        for (long i = 1; i <= D - 1; ++i)
            t.rows.push_back({"pair-" + std::to_string(i), "",
                              rv(form.omega_vee[static_cast<size_t>(i - 1)])});
        emit("weights", t);
    }
    if (want("gram")) {
        HermitianFormL form = build_form(N, D);
        NonSymFamily fam = build_family(N, D);
        Table t;
        t.columns.push_back("row");
        for (long j = 0; j < D; ++j)
            for (int sj = 0; sj <= 1; ++sj)
                t.columns.push_back(std::string("ell") + (sj ? "+" : "-") + "_" + std::to_string(j));
        for (long i = 0; i < D; ++i)
            for (int si = 0; si <= 1; ++si) {
                std::vector<std::string> row{std::string("ell") + (si ? "+" : "-") + "_" +
                                             std::to_string(i)};
                for (long j = 0; j < D; ++j)
                    for (int sj = 0; sj <= 1; ++sj)
                        row.push_back(rv(form.eval(fam.at(si, i), fam.at(sj, j))));
                t.rows.push_back(std::move(row));
            }
        emit("gram", t);
    }
    return written;
}

} // namespace ghv
