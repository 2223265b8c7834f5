#include "ghv/graph.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "ghv/errors.hpp"
#include "ghv/grassmann_scalars.hpp"

namespace ghv {

namespace {

// all k-subspaces of F_q^n in canonical order
std::vector<Subspace> enumerate_all(const FiniteField& ff, int n, int k) {
    std::vector<Subspace> out;
    if (k == 0 || k > n) return out;
    std::vector<int> piv(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) piv[static_cast<size_t>(i)] = i;
    for (;;) {
        // free positions: (row r, col c) with c > piv[r], c not a pivot
        std::vector<std::pair<int, int>> free_pos;
        std::vector<bool> is_piv(static_cast<size_t>(n), false);
        for (int c : piv) is_piv[static_cast<size_t>(c)] = true;
        for (int r = 0; r < k; ++r)
            for (int c = piv[static_cast<size_t>(r)] + 1; c < n; ++c)
                if (!is_piv[static_cast<size_t>(c)]) free_pos.emplace_back(r, c);
        std::vector<std::uint8_t> digits(free_pos.size(), 0);
        for (;;) {
            Subspace s;
            s.n_cols = n;
            s.pivots = piv;
            s.rows.assign(static_cast<size_t>(k) * n, 0);
            for (int r = 0; r < k; ++r)
                s.rows[static_cast<size_t>(r) * n + piv[static_cast<size_t>(r)]] = 1;
            for (size_t t = 0; t < free_pos.size(); ++t)
                s.rows[static_cast<size_t>(free_pos[t].first) * n + free_pos[t].second] =
                    digits[t];
            out.push_back(std::move(s));
            // odometer, last position fastest
            size_t t = free_pos.size();
            bool wrapped = false;
            for (;;) {
                if (t == 0) {
                    wrapped = true;
                    break;
                }
                --t;
                if (++digits[t] < ff.q()) break;
                digits[t] = 0;
            }
            if (wrapped) break;
        }
        // next pivot combination in lexicographic order
        int i = k - 1;
        while (i >= 0 && piv[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++piv[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) piv[static_cast<size_t>(j)] = piv[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

std::uint64_t fnv1a(const std::string& data, std::uint64_t h = 1469598103934665603ULL) {
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint64_t partition_key(const GrassmannGraph& g, long x, const std::vector<long>& clique) {
    std::uint64_t h = fnv1a(g.vertex(x).key());
    std::vector<std::string> keys;
    keys.reserve(clique.size());
    for (long v : clique) keys.push_back(g.vertex(v).key());
    std::sort(keys.begin(), keys.end());
    for (const auto& k : keys) h = fnv1a(k, h);
    return h;
}

} // namespace

mpz_class subspace_count(int q, int N, int D) {
    if (D < 0 || D > N) return 0;
    mpz_class num = 1, den = 1, qz(q);
    auto qpow = [&](int e) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(e));
        return r;
    };
    for (int j = 0; j < D; ++j) {
        num *= qpow(N - j) - 1;
        den *= qpow(D - j) - 1;
    }
    return num / den;
}

GrassmannGraph::GrassmannGraph(int q, int N, int D, const GraphBudget& budget)
    : ff_(q), N_(N), D_(D) {
    if (D < 1 || N < D) throw PreconditionError("need 1 <= D <= N");
    mpz_class count = subspace_count(q, N, D);
    if (count > budget.max_vertices)
        throw PreconditionError("vertex budget exceeded: would enumerate " + count.get_str() +
                                " subspaces");
    vertices_ = enumerate_all(ff_, N, D);
    if (mpz_class(static_cast<long>(vertices_.size())) != count)
        throw Error("enumeration produced " + std::to_string(vertices_.size()) +
                    " subspaces, expected " + count.get_str());
    index_.reserve(vertices_.size() * 2);
    for (size_t i = 0; i < vertices_.size(); ++i) {
        auto [it, fresh] = index_.emplace(vertices_[i].key(), static_cast<long>(i));
        if (!fresh) throw Error("duplicate subspace in enumeration");
    }
    hyperplane_patterns_ = enumerate_all(ff_, D, D - 1);
}

long GrassmannGraph::index_of(const Subspace& s) const {
    auto it = index_.find(s.key());
    return it == index_.end() ? -1 : it->second;
}

int GrassmannGraph::distance(long a, long b) const {
    return stacked_rank(ff_, vertices_[static_cast<size_t>(a)],
                        vertices_[static_cast<size_t>(b)]) -
           D_;
}

int GrassmannGraph::distance(const Subspace& a, const Subspace& b) const {
    if (a.n_cols != N_ || b.n_cols != N_ || a.dim() != D_ || b.dim() != D_)
        throw PreconditionError("distance: ambient (q, N, D) mismatch");
    return stacked_rank(ff_, a, b) - D_;
}

Subspace GrassmannGraph::hyperplane(long v, long h) const {
    const Subspace& y = vertices_[static_cast<size_t>(v)];
    const Subspace& pat = hyperplane_patterns_[static_cast<size_t>(h)];
    // rows of the pattern are coordinates w.r.t. y's basis rows
    std::vector<std::uint8_t> rows(static_cast<size_t>(D_ - 1) * N_, 0);
    for (int r = 0; r < D_ - 1; ++r)
        for (int k = 0; k < D_; ++k) {
            std::uint8_t coef = pat.row(r)[k];
            if (coef == 0) continue;
            const std::uint8_t* yrow = y.row(k);
            for (int c = 0; c < N_; ++c)
                rows[static_cast<size_t>(r) * N_ + c] =
                    ff_.add(rows[static_cast<size_t>(r) * N_ + c], ff_.mul(coef, yrow[c]));
        }
    return rref_subspace(ff_, N_, rows.data(), D_ - 1);
}

std::vector<long> GrassmannGraph::neighbors(long v) const {
    std::vector<long> out;
    const Subspace& y = vertices_[static_cast<size_t>(v)];
    std::vector<std::uint8_t> stacked(static_cast<size_t>(D_) * N_);
    for (long h = 0; h < hyperplane_count(); ++h) {
        Subspace hp = hyperplane(v, h);
        std::vector<int> free_cols;
        {
            std::vector<bool> is_piv(static_cast<size_t>(N_), false);
            for (int c : hp.pivots) is_piv[static_cast<size_t>(c)] = true;
            for (int c = 0; c < N_; ++c)
                if (!is_piv[static_cast<size_t>(c)]) free_cols.push_back(c);
        }
        // projective representatives over the free coordinates (first
        // nonzero digit = 1): the lines of the quotient space
        const int nf = static_cast<int>(free_cols.size());
        std::vector<std::uint8_t> digits(static_cast<size_t>(nf), 0);
        for (int lead = 0; lead < nf; ++lead) {
            // digits[lead] = 1, positions after lead run over all of GF(q)
            std::fill(digits.begin(), digits.end(), 0);
            digits[static_cast<size_t>(lead)] = 1;
            for (;;) {
                std::vector<std::uint8_t> vec(static_cast<size_t>(N_), 0);
                for (int t = lead; t < nf; ++t)
                    vec[static_cast<size_t>(free_cols[static_cast<size_t>(t)])] =
                        digits[static_cast<size_t>(t)];
                if (!contains_vector(ff_, y, vec.data())) {
                    std::copy(hp.rows.begin(), hp.rows.end(), stacked.begin());
                    std::copy(vec.begin(), vec.end(),
                              stacked.begin() + static_cast<size_t>(D_ - 1) * N_);
                    Subspace z = rref_subspace(ff_, N_, stacked.data(), D_);
                    auto it = index_.find(z.key());
                    if (it == index_.end()) throw Error("neighbor not found in vertex index");
                    out.push_back(it->second);
                }
                int t = nf - 1;
                while (t > lead && ++digits[static_cast<size_t>(t)] == ff_.q()) {
                    digits[static_cast<size_t>(t)] = 0;
                    --t;
                }
                if (t == lead) break;
            }
        }
    }
    return out;
}

std::vector<long> GrassmannGraph::delsarte_clique(long x, const Subspace& hp) const {
    const Subspace& xv = vertices_[static_cast<size_t>(x)];
    if (hp.n_cols != N_ || hp.dim() != D_ - 1)
        throw PreconditionError("clique seed must be a (D-1)-subspace of the ambient space");
    if (!contains_subspace(ff_, xv, hp))
        throw PreconditionError("clique seed is not contained in the base vertex");
    std::vector<long> out;
    std::vector<int> free_cols;
    std::vector<bool> is_piv(static_cast<size_t>(N_), false);
    for (int c : hp.pivots) is_piv[static_cast<size_t>(c)] = true;
    for (int c = 0; c < N_; ++c)
        if (!is_piv[static_cast<size_t>(c)]) free_cols.push_back(c);
    const int nf = static_cast<int>(free_cols.size());
    std::vector<std::uint8_t> digits(static_cast<size_t>(nf), 0);
    std::vector<std::uint8_t> stacked(static_cast<size_t>(D_) * N_);
    for (int lead = 0; lead < nf; ++lead) {
        std::fill(digits.begin(), digits.end(), 0);
        digits[static_cast<size_t>(lead)] = 1;
        for (;;) {
            std::vector<std::uint8_t> vec(static_cast<size_t>(N_), 0);
            for (int t = lead; t < nf; ++t)
                vec[static_cast<size_t>(free_cols[static_cast<size_t>(t)])] =
                    digits[static_cast<size_t>(t)];
            std::copy(hp.rows.begin(), hp.rows.end(), stacked.begin());
            std::copy(vec.begin(), vec.end(), stacked.begin() + static_cast<size_t>(D_ - 1) * N_);
            Subspace z = rref_subspace(ff_, N_, stacked.data(), D_);
            auto it = index_.find(z.key());
            if (it == index_.end()) throw Error("clique member not found in vertex index");
            out.push_back(it->second);
            int t = nf - 1;
            while (t > lead && ++digits[static_cast<size_t>(t)] == ff_.q()) {
                digits[static_cast<size_t>(t)] = 0;
                --t;
            }
            if (t == lead) break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CellPartition classify(const GrassmannGraph& g, long x, const std::vector<long>& clique) {
    if (std::find(clique.begin(), clique.end(), x) == clique.end())
        throw PreconditionError("base vertex is not a member of the clique");
    const long n = g.vertex_count();
    const int D = g.d();
    CellPartition part;
    part.D = D;
    part.base_vertex = x;
    part.clique = clique;
    part.cell.resize(static_cast<size_t>(n));
    part.dist_x.resize(static_cast<size_t>(n));
    part.dist_c.resize(static_cast<size_t>(n));
    part.cell_sizes.assign(static_cast<size_t>(2 * D), 0);
    for (long v = 0; v < n; ++v) {
        int dx = g.distance(x, v);
        int dc = dx;
        for (long z : clique) {
            int dz = g.distance(z, v);
            if (dz < dc) dc = dz;
        }
        if (dx != dc && dx != dc + 1)
            throw Error("vertex " + std::to_string(v) +
                        " violates the cell pattern: d(x,.) = " + std::to_string(dx) +
                        ", d(C,.) = " + std::to_string(dc));
        part.dist_x[static_cast<size_t>(v)] = static_cast<std::uint8_t>(dx);
        part.dist_c[static_cast<size_t>(v)] = static_cast<std::uint8_t>(dc);
        int cell = 2 * dc + (dx != dc ? 1 : 0);
        part.cell[static_cast<size_t>(v)] = static_cast<std::uint8_t>(cell);
        ++part.cell_sizes[static_cast<size_t>(cell)];
        part.covering_radius = std::max(part.covering_radius, dc);
    }
    return part;
}

EmpiricalIntersection empirical_intersection_numbers(const GrassmannGraph& g,
                                                     const CellPartition& part, long sample_size,
                                                     unsigned seed) {
    const long n = g.vertex_count();
    const int D = g.d();
    EmpiricalIntersection emp;
    emp.c.assign(static_cast<size_t>(D + 1), -1);
    emp.a.assign(static_cast<size_t>(D + 1), -1);
    emp.b.assign(static_cast<size_t>(D + 1), -1);
    emp.clique_c.assign(static_cast<size_t>(D), -1);
    emp.clique_a.assign(static_cast<size_t>(D), -1);
    emp.clique_b.assign(static_cast<size_t>(D), -1);

    std::vector<long> sample;
    if (sample_size <= 0 || sample_size >= n) {
        sample.resize(static_cast<size_t>(n));
        for (long v = 0; v < n; ++v) sample[static_cast<size_t>(v)] = v;
    } else {
        std::mt19937_64 rng(seed);
        std::vector<long> all(static_cast<size_t>(n));
        for (long v = 0; v < n; ++v) all[static_cast<size_t>(v)] = v;
        std::shuffle(all.begin(), all.end(), rng);
        sample.assign(all.begin(), all.begin() + sample_size);
        std::sort(sample.begin(), sample.end());
    }

    auto record = [&](std::vector<long>& slot, size_t i, long value, const char* what, long v) {
        if (slot[i] < 0) {
            slot[i] = value;
        } else if (slot[i] != value && emp.constant) {
            emp.constant = false;
            emp.witness = std::string(what) + "[" + std::to_string(i) + "] differs at vertex " +
                          std::to_string(v) + ": " + std::to_string(value) + " vs " +
                          std::to_string(slot[i]);
        }
    };
    for (long v : sample) {
        int dx = part.dist_x[static_cast<size_t>(v)];
        int dc = part.dist_c[static_cast<size_t>(v)];
        long tx[3] = {0, 0, 0};  // toward x, same, away
        long tc[3] = {0, 0, 0};
        for (long nb : g.neighbors(v)) {
            int dn = part.dist_x[static_cast<size_t>(nb)];
            ++tx[dn - dx + 1];
            int dcn = part.dist_c[static_cast<size_t>(nb)];
            ++tc[dcn - dc + 1];
        }
        record(emp.c, static_cast<size_t>(dx), tx[0], "c", v);
        record(emp.a, static_cast<size_t>(dx), tx[1], "a", v);
        record(emp.b, static_cast<size_t>(dx), tx[2], "b", v);
        record(emp.clique_c, static_cast<size_t>(dc), tc[0], "clique c", v);
        record(emp.clique_a, static_cast<size_t>(dc), tc[1], "clique a", v);
        record(emp.clique_b, static_cast<size_t>(dc), tc[2], "clique b", v);
        ++emp.vertices_checked;
    }
    return emp;
}

QuotientMatrices quotient_matrices(const GrassmannGraph& g, const CellPartition& part) {
    const long n = g.vertex_count();
    const int D = g.d();
    const int cells = 2 * D;
    QuotientMatrices qm;
    qm.adjacency.assign(static_cast<size_t>(cells), std::vector<long>(static_cast<size_t>(cells), -1));
    for (long v = 0; v < n; ++v) {
        int k = part.cell[static_cast<size_t>(v)];
        std::vector<long> tally(static_cast<size_t>(cells), 0);
        for (long nb : g.neighbors(v)) ++tally[part.cell[static_cast<size_t>(nb)]];
        auto& row = qm.adjacency[static_cast<size_t>(k)];
        for (int j = 0; j < cells; ++j) {
            if (row[static_cast<size_t>(j)] < 0) {
                row[static_cast<size_t>(j)] = tally[static_cast<size_t>(j)];
            } else if (row[static_cast<size_t>(j)] != tally[static_cast<size_t>(j)] &&
                       qm.equitable) {
                qm.equitable = false;
                qm.witness = "vertex " + std::to_string(v) + " in cell " + std::to_string(k) +
                             " sees " + std::to_string(tally[static_cast<size_t>(j)]) +
                             " neighbors in cell " + std::to_string(j) + ", expected " +
                             std::to_string(row[static_cast<size_t>(j)]);
            }
        }
    }
    // dual diagonals from the closed eigenvalue families at this q
    GrassmannScalars gs = grassmann_scalars(g.n(), D);
    mpq_class qv(g.field().q());
    for (long i = 0; i < D; ++i) {
        qm.dual_diag.push_back(gs.theta_star[static_cast<size_t>(i)].specialize_q(qv).re());
        qm.dual_diag.push_back(gs.theta_star[static_cast<size_t>(i + 1)].specialize_q(qv).re());
        mpq_class tt = gs.theta_t_star[static_cast<size_t>(i)].specialize_q(qv).re();
        qm.clique_dual_diag.push_back(tt);
        qm.clique_dual_diag.push_back(tt);
    }
    return qm;
}

bool bfs_distances_match(const GrassmannGraph& g, std::string* witness) {
    const long n = g.vertex_count();
    std::vector<std::vector<long>> adj(static_cast<size_t>(n));
    for (long v = 0; v < n; ++v) adj[static_cast<size_t>(v)] = g.neighbors(v);
    std::vector<int> dist(static_cast<size_t>(n));
    std::vector<long> queue(static_cast<size_t>(n));
    for (long src = 0; src < n; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        long head = 0, tail = 0;
        queue[tail++] = src;
        dist[static_cast<size_t>(src)] = 0;
        while (head < tail) {
            long v = queue[head++];
            for (long nb : adj[static_cast<size_t>(v)])
                if (dist[static_cast<size_t>(nb)] < 0) {
                    dist[static_cast<size_t>(nb)] = dist[static_cast<size_t>(v)] + 1;
                    queue[tail++] = nb;
                }
        }
        for (long v = 0; v < n; ++v)
            if (dist[static_cast<size_t>(v)] != g.distance(src, v)) {
                if (witness)
                    *witness = "pair (" + std::to_string(src) + ", " + std::to_string(v) +
                               "): path distance " + std::to_string(dist[static_cast<size_t>(v)]) +
                               ", algebraic " + std::to_string(g.distance(src, v));
                return false;
            }
    }
    return true;
}

mpq_class eigenvalue_multiplicity(const std::vector<long>& a, const std::vector<long>& b,
                                  const std::vector<long>& c, const mpq_class& theta,
                                  const mpz_class& vertex_count) {
    const size_t D = a.size() - 1;
    std::vector<mpq_class> v(D + 1), k(D + 1);
    v[0] = 1;
    k[0] = 1;
    for (size_t i = 0; i < D; ++i) {
        mpq_class prev = i >= 1 ? v[i - 1] : mpq_class(0);
        long bprev = i >= 1 ? b[i - 1] : 0;
        v[i + 1] = (theta * v[i] - bprev * prev - a[i] * v[i]) / c[i + 1];
        k[i + 1] = k[i] * b[i] / c[i + 1];
    }
    mpq_class denom = 0;
    for (size_t j = 0; j <= D; ++j) denom += v[j] * v[j] / k[j];
    return mpq_class(vertex_count) / denom;
}

bool save_partition_cache(const std::string& path, const GrassmannGraph& g,
                          const CellPartition& part) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(p.parent_path(), ec);
    }
    std::ofstream out(path);
    if (!out) return false;
    out << "ghv-partition-cache v1\n";
    out << g.field().q() << " " << g.n() << " " << g.d() << " "
        << partition_key(g, part.base_vertex, part.clique) << "\n";
    out << part.base_vertex << "\n";
    for (size_t i = 0; i < part.clique.size(); ++i)
        out << part.clique[i] << (i + 1 < part.clique.size() ? ' ' : '\n');
    auto hexline = [&](const std::vector<std::uint8_t>& v) {
        static const char* digits = "0123456789abcdef";
        std::string s;
        s.reserve(v.size());
        for (auto x : v) s += digits[x & 0xf];
        out << s << "\n";
    };
    hexline(part.cell);
    hexline(part.dist_x);
    hexline(part.dist_c);
    return static_cast<bool>(out);
}

std::optional<CellPartition> load_partition_cache(const std::string& path,
                                                  const GrassmannGraph& g, long x,
                                                  const std::vector<long>& clique) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string header;
    if (!std::getline(in, header) || header != "ghv-partition-cache v1") return std::nullopt;
    int q, N, D;
    std::uint64_t key;
    if (!(in >> q >> N >> D >> key)) return std::nullopt;
    if (q != g.field().q() || N != g.n() || D != g.d()) return std::nullopt;
    if (key != partition_key(g, x, clique)) return std::nullopt;
    long base;
    if (!(in >> base) || base != x) return std::nullopt;
    std::vector<long> cl(clique.size());
    for (auto& v : cl)
        if (!(in >> v)) return std::nullopt;
    if (cl != clique) return std::nullopt;
    std::string cells, dx, dc;
    if (!(in >> cells >> dx >> dc)) return std::nullopt;
    const size_t n = static_cast<size_t>(g.vertex_count());
    if (cells.size() != n || dx.size() != n || dc.size() != n) return std::nullopt;
    auto unhex = [](char ch) -> std::uint8_t {
        return static_cast<std::uint8_t>(ch <= '9' ? ch - '0' : ch - 'a' + 10);
    };
    CellPartition part;
    part.D = D;
    part.base_vertex = x;
    part.clique = clique;
    part.cell.resize(n);
    part.dist_x.resize(n);
    part.dist_c.resize(n);
    part.cell_sizes.assign(static_cast<size_t>(2 * D), 0);
    for (size_t i = 0; i < n; ++i) {
        part.cell[i] = unhex(cells[i]);
        part.dist_x[i] = unhex(dx[i]);
        part.dist_c[i] = unhex(dc[i]);
        if (part.cell[i] >= 2 * D) return std::nullopt;
        ++part.cell_sizes[part.cell[i]];
        part.covering_radius = std::max(part.covering_radius, static_cast<int>(part.dist_c[i]));
    }
    return part;
}

} // namespace ghv
