#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ghv/subspace.hpp"

namespace ghv {

/// Exact count of D-dimensional subspaces of F_q^N.
mpz_class subspace_count(int q, int N, int D);

struct GraphBudget {
    long max_vertices = 1'000'000;
};

/// The Grassmann graph J_q(N, D) built explicitly over GF(q), q <= 16.
/// Vertices are enumerated in a fixed deterministic order (lexicographic by
/// pivot set, then by free entries).
class GrassmannGraph {
public:
    GrassmannGraph(int q, int N, int D, const GraphBudget& budget = {});

    const FiniteField& field() const { return ff_; }
    int n() const { return N_; }
    int d() const { return D_; }
    long vertex_count() const { return static_cast<long>(vertices_.size()); }
    const std::vector<Subspace>& vertices() const { return vertices_; }
    const Subspace& vertex(long v) const { return vertices_[static_cast<size_t>(v)]; }
    long index_of(const Subspace& s) const;  // -1 when absent

    /// Distance via intersection dimension (no path search).
    int distance(long a, long b) const;
    int distance(const Subspace& a, const Subspace& b) const;

    /// Neighbors generated constructively: extend each hyperplane of the
    /// vertex by one outside direction and re-canonicalize.
    std::vector<long> neighbors(long v) const;

    long hyperplane_count() const { return static_cast<long>(hyperplane_patterns_.size()); }
    /// The h-th hyperplane of vertex v, as a subspace of the ambient space.
    Subspace hyperplane(long v, long h) const;

    /// All D-subspaces containing the given (D-1)-subspace of vertex x.
    std::vector<long> delsarte_clique(long x, const Subspace& hyperplane) const;

private:
    FiniteField ff_;
    int N_, D_;
    std::vector<Subspace> vertices_;
    std::unordered_map<std::string, long> index_;
    std::vector<Subspace> hyperplane_patterns_;  // (D-1)-subspaces of F_q^D
};

/// Assignment of every vertex to a cell (2i + sign), with the distance
/// tables that induced it.
struct CellPartition {
    int D = 0;
    long base_vertex = -1;
    std::vector<long> clique;
    std::vector<std::uint8_t> cell;     // 2*dist_c + (dist_x != dist_c)
    std::vector<std::uint8_t> dist_x;
    std::vector<std::uint8_t> dist_c;
    std::vector<long> cell_sizes;       // 2D entries
    int covering_radius = 0;
};

/// Classifies every vertex. Throws if x is not in the clique or any vertex
/// violates the two-distance consistency pattern.
CellPartition classify(const GrassmannGraph& g, long x, const std::vector<long>& clique);

/// Neighbor tallies per distance class, verified constant across each class.
struct EmpiricalIntersection {
    std::vector<long> c, a, b;                            // per distance to x, 0..D
    std::vector<long> clique_c, clique_a, clique_b;       // per distance to C, 0..D-1
    bool constant = true;
    std::string witness;
    long vertices_checked = 0;
};

EmpiricalIntersection empirical_intersection_numbers(const GrassmannGraph& g,
                                                     const CellPartition& part,
                                                     long sample_size = 0, unsigned seed = 1);

/// Counted quotient matrices on the cell basis. adjacency[k][j] = number of
/// neighbors in cell j of any vertex of cell k (the coefficient of cell k's
/// characteristic vector in the image of cell j's), so rows sum to the
/// valency. The dual diagonals are the specialized eigenvalue families
/// placed by cell index.
struct QuotientMatrices {
    bool equitable = true;
    std::string witness;
    std::vector<std::vector<long>> adjacency;
    std::vector<mpq_class> dual_diag;
    std::vector<mpq_class> clique_dual_diag;
};

QuotientMatrices quotient_matrices(const GrassmannGraph& g, const CellPartition& part);

/// Full BFS from every vertex; compares against the algebraic distance.
bool bfs_distances_match(const GrassmannGraph& g, std::string* witness = nullptr);

/// Multiplicity of the eigenvalue theta from an intersection array, via the
/// standard m = |X| / sum_j v_j(theta)^2 / k_j formula (exact rationals).
mpq_class eigenvalue_multiplicity(const std::vector<long>& a, const std::vector<long>& b,
                                  const std::vector<long>& c, const mpq_class& theta,
                                  const mpz_class& vertex_count);

/// Text cache of a classified partition, keyed by (q, N, D, base vertex,
/// clique). Stale or mismatching caches are ignored.
bool save_partition_cache(const std::string& path, const GrassmannGraph& g,
                          const CellPartition& part);
std::optional<CellPartition> load_partition_cache(const std::string& path,
                                                  const GrassmannGraph& g, long x,
                                                  const std::vector<long>& clique);

} // namespace ghv
