// Acceptance suite: every criterion prints exactly one PASS/FAIL line.
// Exit status 0 iff all criteria pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ghv/graph.hpp"
#include "ghv/hv.hpp"
#include "ghv/nonsym.hpp"
#include "ghv/qseries.hpp"

using namespace ghv;

namespace {

int failures = 0;

void criterion(int number, const std::string& label,
               const std::function<std::pair<bool, std::string>()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        auto [pass, info] = body();
        ok = pass;
        detail = info;
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!ok) ++failures;
    std::printf("CRITERION %2d: %s  %s%s%s  (%.1f s)\n", number, ok ? "PASS" : "FAIL",
                label.c_str(), detail.empty() ? "" : " -- ", detail.c_str(), secs);
    std::fflush(stdout);
}

long spec_long(const ExactScalar& x, int q) {
    return static_cast<long>(x.specialize_q(mpq_class(q)).re().get_num().get_si());
}

std::pair<bool, std::string> graph_instance(int q, int N, int D, double budget_seconds) {
    auto start = std::chrono::steady_clock::now();
    GrassmannGraph g(q, N, D);
    GrassmannScalars gs = grassmann_scalars(N, D);
    mpz_class want_count = subspace_count(q, N, D);
    if (mpz_class(g.vertex_count()) != want_count)
        return {false, "vertex count " + std::to_string(g.vertex_count())};
    long x = 0;
    std::vector<long> clique = g.delsarte_clique(x, g.hyperplane(x, 0));
    if (static_cast<long>(clique.size()) != spec_long(gs.clique_size, q))
        return {false, "clique size " + std::to_string(clique.size())};
    CellPartition part = classify(g, x, clique);
    if (part.covering_radius != D - 1)
        return {false, "covering radius " + std::to_string(part.covering_radius)};
    for (long i = 0; i < D; ++i) {
        if (part.cell_sizes[static_cast<size_t>(2 * i)] !=
                spec_long(gs.cell_minus[static_cast<size_t>(i)], q) ||
            part.cell_sizes[static_cast<size_t>(2 * i + 1)] !=
                spec_long(gs.cell_plus[static_cast<size_t>(i)], q))
            return {false, "cell sizes at i = " + std::to_string(i)};
    }
    EmpiricalIntersection emp = empirical_intersection_numbers(g, part);
    if (!emp.constant) return {false, emp.witness};
    for (long i = 0; i <= D; ++i)
        if (emp.c[static_cast<size_t>(i)] != spec_long(gs.c[static_cast<size_t>(i)], q) ||
            emp.a[static_cast<size_t>(i)] != spec_long(gs.a[static_cast<size_t>(i)], q) ||
            emp.b[static_cast<size_t>(i)] != spec_long(gs.b[static_cast<size_t>(i)], q))
            return {false, "graph intersection numbers at distance " + std::to_string(i)};
    for (long i = 0; i < D; ++i)
        if (emp.clique_c[static_cast<size_t>(i)] != spec_long(gs.c_t[static_cast<size_t>(i)], q) ||
            emp.clique_a[static_cast<size_t>(i)] != spec_long(gs.a_t[static_cast<size_t>(i)], q) ||
            emp.clique_b[static_cast<size_t>(i)] != spec_long(gs.b_t[static_cast<size_t>(i)], q))
            return {false, "clique intersection numbers at distance " + std::to_string(i)};
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= budget_seconds)
        return {false, "runtime " + std::to_string(secs) + " s exceeds the budget"};
    char buf[128];
    std::snprintf(buf, sizeof buf, "%ld vertices, runtime %.1f s < %.0f s", g.vertex_count(),
                  secs, budget_seconds);
    return {true, buf};
}

std::pair<bool, std::string> all_pass(const CheckList& cl) {
    for (const auto& item : cl.items)
        if (!item.pass) return {false, item.name + ": " + item.witness};
    return {true, ""};
}

} // namespace

int main() {
    criterion(1, "graph ground truth at (q,N,D) = (2,6,3)", [] {
        // includes the spot values: |C0+| = 14, |C1-| = 84
        GrassmannGraph g(2, 6, 3);
        std::vector<long> clique = g.delsarte_clique(0, g.hyperplane(0, 0));
        CellPartition part = classify(g, 0, clique);
        if (g.vertex_count() != 1395) return std::pair{false, std::string("count")};
        if (part.cell_sizes[1] != 14 || part.cell_sizes[2] != 84)
            return std::pair{false, std::string("spot cell sizes")};
        return graph_instance(2, 6, 3, 30.0);
    });

    criterion(2, "second numeric instance (q,N,D) = (3,6,3)",
              [] { return graph_instance(3, 6, 3, 300.0); });

    criterion(3, "defining relations identically zero for D in {3,4,5}, q formal", [] {
        for (auto [N, D] : {std::pair<long, long>{6, 3}, {8, 4}, {10, 5}}) {
            auto [ok, w] = all_pass(verify_hv_relations(build_generators(N, D)));
            if (!ok) return std::pair{false, "(N,D)=(" + std::to_string(N) + "," +
                                                 std::to_string(D) + ") " + w};
        }
        return std::pair{true, std::string()};
    });

    criterion(4, "generator matching identities for (N,D) in {(6,3),(7,3),(8,4)}", [] {
        for (auto [N, D] : {std::pair<long, long>{6, 3}, {7, 3}, {8, 4}}) {
            auto [ok, w] = all_pass(verify_t_action(N, D));
            if (!ok) return std::pair{false, "(N,D)=(" + std::to_string(N) + "," +
                                                 std::to_string(D) + ") " + w};
        }
        return std::pair{true, std::string()};
    });

    criterion(5, "projection identities and dual-basis block matrices, D in {3,4}", [] {
        for (auto [N, D] : {std::pair<long, long>{6, 3}, {8, 4}}) {
            auto [ok, w] = all_pass(verify_projections(N, D));
            if (!ok) return std::pair{false, w};
            auto [ok2, w2] = all_pass(verify_dual_basis_matrices(N, D));
            if (!ok2) return std::pair{false, w2};
        }
        return std::pair{true, std::string()};
    });

    criterion(6, "module realization of the cell basis, D in {3,4,5}; two constructions agree",
              [] {
                  for (auto [N, D] : {std::pair<long, long>{6, 3}, {8, 4}, {10, 5}}) {
                      build_family(N, D);  // throws if the two constructions differ
                      auto [ok, w] = all_pass(verify_module_realization(N, D));
                      if (!ok) return std::pair{false, "(N,D)=(" + std::to_string(N) + "," +
                                                           std::to_string(D) + ") " + w};
                  }
                  return std::pair{true, std::string()};
              });

    criterion(7, "recurrence coefficient tables with boundary congruences, D in {3,4}", [] {
        for (auto [N, D] : {std::pair<long, long>{6, 3}, {8, 4}}) {
            auto [ok, w] = all_pass(verify_recurrence_tables(N, D));
            if (!ok) return std::pair{false, "(N,D)=(" + std::to_string(N) + "," +
                                                 std::to_string(D) + ") " + w};
        }
        return std::pair{true, std::string()};
    });

    criterion(8, "orthogonality: Gram = cell sizes (symbolic D=3, numeric q=2), quadrature", [] {
        auto [ok, w] = all_pass(verify_orthogonality(6, 3, 12345, 200));
        if (!ok) return std::pair{false, w};
        HermitianFormL form = build_form(6, 3);
        NonSymFamily fam = build_family(6, 3);
        if (form.eval(fam.minus[1], fam.minus[1]).specialize_q(mpq_class(2)) !=
            GaussianRational(84))
            return std::pair{false, std::string("<ell1-, ell1-> at q=2")};
        for (long i = 0; i < 3; ++i)
            for (int si = 0; si <= 1; ++si)
                for (long j = 0; j < 3; ++j)
                    for (int sj = 0; sj <= 1; ++sj) {
                        GaussianRational got = form.eval(fam.at(si, i), fam.at(sj, j))
                                                   .specialize_q(mpq_class(2));
                        GrassmannScalars gs = grassmann_scalars(6, 3);
                        GaussianRational want;
                        if (i == j && si == sj)
                            want = (si == 0 ? gs.cell_minus[static_cast<size_t>(i)]
                                            : gs.cell_plus[static_cast<size_t>(i)])
                                       .specialize_q(mpq_class(2));
                        if (got != want) return std::pair{false, std::string("numeric Gram")};
                    }
        return std::pair{true, std::string()};
    });

    criterion(9, "dual-system duality, weight normalization and base weight", [] {
        FourSystems fs = four_systems(6, 3);
        for (const ParameterSequence* ps :
             {&fs.phi, &fs.phi_perp, &fs.phi_tilde, &fs.phi_tilde_perp}) {
            LeonardData ld = derive(*ps);  // includes sum m_i = 1
            DualityReport dr = duality_check(*ps, ld, polynomials(*ps, ld));
            if (!dr.pass) return std::pair{false, dr.witness};
        }
        LeonardData ld = derive(fs.phi);
        if (ld.m[0] != gauss_binom(6, 3).inv())
            return std::pair{false, std::string("base weight")};
        return std::pair{true, std::string()};
    });

    criterion(10, "counted quotient matrix equals the symbolic action table at (2,6,3)", [] {
        GrassmannGraph g(2, 6, 3);
        std::vector<long> clique = g.delsarte_clique(0, g.hyperplane(0, 0));
        CellPartition part = classify(g, 0, clique);
        QuotientMatrices qm = quotient_matrices(g, part);
        if (!qm.equitable) return std::pair{false, qm.witness};
        ModuleMatrices mm = module_matrices(6, 3);
        int checked = 0;
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 6; ++c, ++checked)
                if (mpq_class(qm.adjacency[static_cast<size_t>(r)][static_cast<size_t>(c)]) !=
                    mm.adjacency.at(r, c).specialize_q(mpq_class(2)).re())
                    return std::pair{false, "entry (" + std::to_string(r) + "," +
                                                std::to_string(c) + ")"};
        return std::pair{true, std::to_string(checked) + " entries exact"};
    });

    criterion(11, "irreducibility probe reaches the full word-span dimension, D in {3,4}", [] {
        for (auto [N, D] : {std::pair<long, long>{6, 3}, {8, 4}}) {
            IrreducibilityProbe p = irreducibility_probe(build_generators(N, D));
            if (!p.irreducible)
                return std::pair{false, "span dimension " + std::to_string(p.span_dimension) +
                                            " at D = " + std::to_string(D)};
        }
        return std::pair{true, std::string("span dimensions 36 and 64")};
    });

    if (failures == 0) {
        std::printf("ACCEPTANCE: ALL %d CRITERIA PASSED\n", 11);
        return 0;
    }
    std::printf("ACCEPTANCE: %d CRITERIA FAILED\n", failures);
    return 1;
}
