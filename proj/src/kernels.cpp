#include "ringtk/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ringtk/graph.hpp"

namespace ringtk::kernels {

namespace {

constexpr std::uint64_t kNoViolation = std::numeric_limits<std::uint64_t>::max();

std::uint64_t encode_triple(int n, int x, int y, int z) {
    return (std::uint64_t(x) * n + y) * n + z;
}

void push_triple(ValidationReport& rep, const char* axiom, int n, std::uint64_t key) {
    if (key == kNoViolation) return;
    const int z = int(key % n);
    const int y = int((key / n) % n);
    const int x = int(key / (std::uint64_t(n) * n));
    rep.ok = false;
    rep.violations.push_back({axiom, {x, y, z}});
}

// Range, commutativity, identity and inverse axioms; cheap O(n^2) scans
// shared by both validation variants. Returns false when an out-of-range
// entry makes the O(n^3) scans unsafe to run.
bool scan_binary_axioms(const CayleyTable& add, const CayleyTable& mul,
                        ValidationReport& rep) {
    const int n = add.order();
    std::uint64_t add_range = kNoViolation, mul_range = kNoViolation;
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            const int a = add.at(x, y);
            if ((a < 0 || a >= n) && add_range == kNoViolation)
                add_range = encode_triple(n, x, y, 0);
            const int m = mul.at(x, y);
            if ((m < 0 || m >= n) && mul_range == kNoViolation)
                mul_range = encode_triple(n, x, y, 0);
        }
    }
    push_triple(rep, "add-table-range", n, add_range);
    push_triple(rep, "mul-table-range", n, mul_range);
    if (!rep.ok) return false;

    std::uint64_t comm = kNoViolation;
    for (int x = 0; x < n && comm == kNoViolation; ++x)
        for (int y = x + 1; y < n; ++y)
            if (add.at(x, y) != add.at(y, x)) { comm = encode_triple(n, x, y, 0); break; }
    push_triple(rep, "add-commutative", n, comm);

    std::uint64_t ident = kNoViolation;
    for (int x = 0; x < n; ++x)
        if (add.at(0, x) != x || add.at(x, 0) != x) { ident = encode_triple(n, x, 0, 0); break; }
    push_triple(rep, "add-identity", n, ident);

    std::uint64_t inverse = kNoViolation;
    for (int x = 0; x < n && inverse == kNoViolation; ++x) {
        bool has = false;
        for (int y = 0; y < n && !has; ++y) has = add.at(x, y) == 0;
        if (!has) inverse = encode_triple(n, x, 0, 0);
    }
    push_triple(rep, "add-inverse", n, inverse);
    return true;
}

struct TripleMins {
    std::uint64_t add_assoc = kNoViolation;
    std::uint64_t mul_assoc = kNoViolation;
    std::uint64_t left_dist = kNoViolation;
    std::uint64_t right_dist = kNoViolation;

    void merge(const TripleMins& o) {
        if (o.add_assoc < add_assoc) add_assoc = o.add_assoc;
        if (o.mul_assoc < mul_assoc) mul_assoc = o.mul_assoc;
        if (o.left_dist < left_dist) left_dist = o.left_dist;
        if (o.right_dist < right_dist) right_dist = o.right_dist;
    }
};

// One (x,y,z) probe of the four O(n^3) axioms.
inline void probe_triple(const int* A, const int* M, int n, int x, int y, int z,
                         TripleMins& best) {
    const std::uint64_t key = encode_triple(n, x, y, z);
    if (key < best.add_assoc &&
        A[std::size_t(A[std::size_t(x) * n + y]) * n + z] !=
            A[std::size_t(x) * n + A[std::size_t(y) * n + z]])
        best.add_assoc = key;
    if (key < best.mul_assoc &&
        M[std::size_t(M[std::size_t(x) * n + y]) * n + z] !=
            M[std::size_t(x) * n + M[std::size_t(y) * n + z]])
        best.mul_assoc = key;
    if (key < best.left_dist &&
        M[std::size_t(x) * n + A[std::size_t(y) * n + z]] !=
            A[std::size_t(M[std::size_t(x) * n + y]) * n + M[std::size_t(x) * n + z]])
        best.left_dist = key;
    if (key < best.right_dist &&
        M[std::size_t(A[std::size_t(y) * n + z]) * n + x] !=
            A[std::size_t(M[std::size_t(y) * n + x]) * n + M[std::size_t(z) * n + x]])
        best.right_dist = key;
}

void push_triple_mins(ValidationReport& rep, int n, const TripleMins& best) {
    push_triple(rep, "add-associative", n, best.add_assoc);
    push_triple(rep, "mul-associative", n, best.mul_assoc);
    push_triple(rep, "left-distributive", n, best.left_dist);
    push_triple(rep, "right-distributive", n, best.right_dist);
}

} // namespace

ValidationReport validate_tables_serial(const CayleyTable& add, const CayleyTable& mul) {
    if (add.order() != mul.order())
        throw std::invalid_argument("validate_tables: table orders differ");
    ValidationReport rep;
    if (!scan_binary_axioms(add, mul, rep)) return rep;

    const int n = add.order();
    const int* A = add.flat().data();
    const int* M = mul.flat().data();
    TripleMins best;
    for (int x = 0; x < n; ++x) {
        // lex scan: once every axiom has a witness nothing can improve
        if (best.add_assoc != kNoViolation && best.mul_assoc != kNoViolation &&
            best.left_dist != kNoViolation && best.right_dist != kNoViolation)
            break;
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) probe_triple(A, M, n, x, y, z, best);
    }
    push_triple_mins(rep, n, best);
    return rep;
}

ValidationReport validate_tables_parallel(const CayleyTable& add, const CayleyTable& mul) {
    if (add.order() != mul.order())
        throw std::invalid_argument("validate_tables: table orders differ");
    ValidationReport rep;
    if (!scan_binary_axioms(add, mul, rep)) return rep;

    const int n = add.order();
    const int* A = add.flat().data();
    const int* M = mul.flat().data();
    TripleMins best;
#ifdef _OPENMP
#pragma omp parallel
    {
        TripleMins local;
#pragma omp for schedule(static) nowait
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) probe_triple(A, M, n, x, y, z, local);
#pragma omp critical(ringtk_validate_merge)
        best.merge(local);
    }
#else
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) probe_triple(A, M, n, x, y, z, best);
#endif
    push_triple_mins(rep, n, best);
    return rep;
}

namespace {

// Fills one adjacency row. Commutators are evaluated with the smaller index
// first so the matrix is symmetric even for deliberately broken tables.
inline void fill_adjacency_row(const FiniteRing& ring, int r, int neg_r, int x,
                               std::uint64_t* row) {
    const int n = ring.order();
    for (int y = 0; y < n; ++y) {
        if (y == x) continue;
        const int c = y < x ? ring.commutator(y, x) : ring.commutator(x, y);
        if (c != r && c != neg_r) row[y >> 6] |= std::uint64_t(1) << (y & 63);
    }
}

} // namespace

void graph_adjacency_serial(const FiniteRing& ring, int r, SimpleGraph& out) {
    const int n = ring.order();
    if (out.vertex_count() != n)
        throw std::invalid_argument("graph_adjacency: output graph size mismatch");
    const int neg_r = ring.neg(r);
    for (int x = 0; x < n; ++x) fill_adjacency_row(ring, r, neg_r, x, out.mutable_row(x));
}

void graph_adjacency_parallel(const FiniteRing& ring, int r, SimpleGraph& out) {
    const int n = ring.order();
    if (out.vertex_count() != n)
        throw std::invalid_argument("graph_adjacency: output graph size mismatch");
    const int neg_r = ring.neg(r);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int x = 0; x < n; ++x) fill_adjacency_row(ring, r, neg_r, x, out.mutable_row(x));
}

std::vector<bool> commutator_set_serial(const FiniteRing& ring) {
    const int n = ring.order();
    std::vector<bool> mask(n, false);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) mask[ring.commutator(x, y)] = true;
    return mask;
}

std::vector<bool> commutator_set_parallel(const FiniteRing& ring) {
    const int n = ring.order();
    std::vector<unsigned char> mask(n, 0);
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<unsigned char> local(n, 0);
#pragma omp for schedule(static) nowait
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) local[ring.commutator(x, y)] = 1;
#pragma omp critical(ringtk_commutator_merge)
        for (int i = 0; i < n; ++i) mask[i] |= local[i];
    }
#else
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) mask[ring.commutator(x, y)] = 1;
#endif
    return {mask.begin(), mask.end()};
}

namespace {

// Bitset BFS from one source; writes the dist row (-1 = unreachable).
void bfs_row(const SimpleGraph& g, int source, int* dist) {
    const int n = g.vertex_count();
    const int words = g.words_per_row();
    for (int i = 0; i < n; ++i) dist[i] = -1;
    std::vector<std::uint64_t> visited(words, 0), frontier(words, 0), next(words, 0);
    visited[source >> 6] |= std::uint64_t(1) << (source & 63);
    frontier = visited;
    dist[source] = 0;
    int level = 0;
    bool any = true;
    while (any) {
        ++level;
        std::fill(next.begin(), next.end(), 0);
        for (int w = 0; w < words; ++w) {
            std::uint64_t f = frontier[w];
            while (f) {
                const int v = (w << 6) + std::countr_zero(f);
                f &= f - 1;
                const std::uint64_t* row = g.row(v);
                for (int k = 0; k < words; ++k) next[k] |= row[k];
            }
        }
        any = false;
        for (int w = 0; w < words; ++w) {
            next[w] &= ~visited[w];
            if (next[w]) any = true;
            visited[w] |= next[w];
            std::uint64_t f = next[w];
            while (f) {
                dist[(w << 6) + std::countr_zero(f)] = level;
                f &= f - 1;
            }
        }
        frontier = next;
    }
}

} // namespace

std::vector<int> all_pairs_distances_serial(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> dist(std::size_t(n) * n, -1);
    for (int s = 0; s < n; ++s) bfs_row(g, s, dist.data() + std::size_t(s) * n);
    return dist;
}

std::vector<int> all_pairs_distances_parallel(const SimpleGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> dist(std::size_t(n) * n, -1);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int s = 0; s < n; ++s) bfs_row(g, s, dist.data() + std::size_t(s) * n);
    return dist;
}

} // namespace ringtk::kernels
