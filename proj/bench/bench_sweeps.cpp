// Timing comparison of the serial reference sweeps against the OpenMP path.
#include "trizeta/arch_oracle.hpp"
#include "trizeta/nonarch_oracle.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#ifdef TRIZETA_HAVE_OPENMP
#include <omp.h>
#endif

using namespace trizeta;

namespace {

template <typename F>
double time_s(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int k_max = argc > 1 ? std::atoi(argv[1]) : 10;
#ifdef TRIZETA_HAVE_OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both paths run serially\n");
#endif

    auto triples = unbalanced_triples(k_max);
    ArchOracleConfig cfg;
    std::vector<UnbalancedSweepRow> serial_rows, parallel_rows;
    double ts = time_s([&] { serial_rows = unbalanced_sweep(triples, cfg, false); });
    double tp = time_s([&] { parallel_rows = unbalanced_sweep(triples, cfg, true); });
    bool identical = serial_rows.size() == parallel_rows.size();
    for (size_t i = 0; identical && i < serial_rows.size(); ++i)
        identical = serial_rows[i].istar_oracle == parallel_rows[i].istar_oracle;
    std::printf("arch sweep (k <= %d, %zu triples): serial %.3f s, parallel %.3f s, "
                "speedup %.2fx, bit-identical: %s\n",
                k_max, triples.size(), ts, tp, ts / tp, identical ? "yes" : "NO");

    std::vector<NonarchCase> cases;
    for (long q : {2L, 3L, 5L})
        for (const NonarchCase& c : enumerate_cases(q)) cases.push_back(c);
    NonarchOracleConfig ncfg;
    ncfg.n_max = 2000; // stress the lattice sums so the comparison is visible
    std::vector<NonarchSweepRow> ns, np;
    double ns_t = time_s([&] { ns = nonarch_sweep(cases, {}, ncfg, false); });
    double np_t = time_s([&] { np = nonarch_sweep(cases, {}, ncfg, true); });
    bool n_identical = ns.size() == np.size();
    for (size_t i = 0; n_identical && i < ns.size(); ++i)
        n_identical = ns[i].istar_oracle == np[i].istar_oracle;
    std::printf("nonarch sweep (%zu cases, n_max %d): serial %.3f s, parallel %.3f s, "
                "speedup %.2fx, bit-identical: %s\n",
                cases.size(), ncfg.n_max, ns_t, np_t, ns_t / np_t,
                n_identical ? "yes" : "NO");
    return 0;
}
