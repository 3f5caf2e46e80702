// Times the serial reference kernels against their OpenMP counterparts and
// checks that both produce identical results while at it.

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ringtk/graph.hpp"
#include "ringtk/kernels.hpp"
#include "ringtk/ring_factory.hpp"

namespace {

double now_seconds() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return double(clock()) / CLOCKS_PER_SEC;
#endif
}

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e100;
    for (int i = 0; i < reps; ++i) {
        const double t0 = now_seconds();
        f();
        const double t1 = now_seconds();
        if (t1 - t0 < best) best = t1 - t0;
    }
    return best;
}

void report(const char* kernel, int n, double serial, double parallel, bool match) {
    std::printf("%-22s n=%4d  serial %8.3f ms  parallel %8.3f ms  speedup %5.2fx  %s\n",
                kernel, n, serial * 1e3, parallel * 1e3,
                parallel > 0 ? serial / parallel : 0.0, match ? "match" : "MISMATCH");
}

ringtk::SimpleGraph random_graph(int n, double p, unsigned seed) {
    ringtk::SimpleGraph g(n, "random");
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

} // namespace

int main(int argc, char** argv) {
    int reps = 3;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--reps" && i + 1 < argc) reps = std::atoi(argv[++i]);
    }
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    bool all_match = true;

    for (int n : {64, 128, 256}) {
        const ringtk::FiniteRing ring = ringtk::zn_ring(n);
        ringtk::ValidationReport rs, rp;
        const double ts = time_best_of(
            reps, [&] { rs = ringtk::kernels::validate_tables_serial(ring.add_table(),
                                                                     ring.mul_table()); });
        const double tp = time_best_of(
            reps, [&] { rp = ringtk::kernels::validate_tables_parallel(ring.add_table(),
                                                                       ring.mul_table()); });
        const bool match = rs.ok == rp.ok && rs.violations.size() == rp.violations.size();
        all_match = all_match && match;
        report("validate-tables", n, ts, tp, match);
    }

    // a broken table: witness reduction must agree between the variants
    {
        ringtk::FiniteRing base = ringtk::zn_ring(128);
        ringtk::CayleyTable mul = base.mul_table();
        mul.at(77, 99) = (mul.at(77, 99) + 1) % 128;
        ringtk::ValidationReport rs, rp;
        const double ts = time_best_of(reps, [&] {
            rs = ringtk::kernels::validate_tables_serial(base.add_table(), mul);
        });
        const double tp = time_best_of(reps, [&] {
            rp = ringtk::kernels::validate_tables_parallel(base.add_table(), mul);
        });
        bool match = rs.ok == rp.ok && rs.violations.size() == rp.violations.size();
        if (match)
            for (std::size_t i = 0; i < rs.violations.size(); ++i)
                match = match && rs.violations[i].axiom == rp.violations[i].axiom &&
                        rs.violations[i].witness == rp.violations[i].witness;
        all_match = all_match && match;
        report("validate-broken", 128, ts, tp, match);
    }

    for (int n : {128, 256}) {
        const ringtk::FiniteRing ring = ringtk::zn_ring(n);
        ringtk::SimpleGraph gs(n), gp(n);
        const int r = 1;
        const double ts = time_best_of(
            reps, [&] { ringtk::kernels::graph_adjacency_serial(ring, r, gs); });
        const double tp = time_best_of(
            reps, [&] { ringtk::kernels::graph_adjacency_parallel(ring, r, gp); });
        const bool match = gs.same_adjacency(gp);
        all_match = all_match && match;
        report("graph-adjacency", n, ts, tp, match);
    }

    for (int n : {128, 256}) {
        const ringtk::FiniteRing ring = ringtk::zn_ring(n);
        std::vector<bool> ms, mp;
        const double ts =
            time_best_of(reps, [&] { ms = ringtk::kernels::commutator_set_serial(ring); });
        const double tp = time_best_of(
            reps, [&] { mp = ringtk::kernels::commutator_set_parallel(ring); });
        const bool match = ms == mp;
        all_match = all_match && match;
        report("commutator-set", n, ts, tp, match);
    }

    for (int n : {512, 1024, 2048}) {
        const ringtk::SimpleGraph g = random_graph(n, 4.0 / n, 12345);
        std::vector<int> ds, dp;
        const double ts = time_best_of(
            reps, [&] { ds = ringtk::kernels::all_pairs_distances_serial(g); });
        const double tp = time_best_of(
            reps, [&] { dp = ringtk::kernels::all_pairs_distances_parallel(g); });
        const bool match = ds == dp;
        all_match = all_match && match;
        report("all-pairs-bfs", n, ts, tp, match);
    }

    if (!all_match) {
        std::printf("kernel variants disagree\n");
        return 1;
    }
    return 0;
}
