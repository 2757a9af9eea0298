// Batch ledger throughput: OpenMP kernel against the serial reference.
//   bench_ledgers [--count N] [--length L] [--reps R] [--seed S]

#include "fk/verify.hpp"
#include "helpers.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace fk;

namespace {

template <class F>
double best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ledger batch benchmark"};
    int count = 2000, length = 40, reps = 3;
    unsigned seed = 1;
    app.add_option("--count", count, "diagrams per batch");
    app.add_option("--length", length, "maximum word length");
    app.add_option("--reps", reps, "repetitions, best time kept");
    app.add_option("--seed", seed);
    CLI11_PARSE(app, argc, argv);

    std::mt19937 rng(seed);
    std::vector<SurgeryDiagram> sds;
    for (int i = 0; i < count; ++i) sds.push_back(th::random_surgery(rng, length));

    std::vector<Ledger> a, b;
    double tp = best_of(reps, [&] { a = ledgers(sds); });
    double ts = best_of(reps, [&] { b = ledgers_serial(sds); });
    bool same = a == b;

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("diagrams %d, max length %d, threads %d\n", count, length, threads);
    std::printf("serial   %8.3f s  %10.1f ledgers/s\n", ts, count / ts);
    std::printf("openmp   %8.3f s  %10.1f ledgers/s\n", tp, count / tp);
    std::printf("speedup  %8.2f x\n", ts / tp);
    std::printf("results  %s\n", same ? "identical" : "DIFFER");
    return same ? 0 : 1;
}
