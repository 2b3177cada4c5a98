// Timing harness comparing the serial reference kernels against the OpenMP
// ones on a few representative graphs. Results must agree exactly; the
// table reports wall times and speedup.
//
//   ./bouwer-bench [--repeat N]

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <tuple>
#include <vector>

#include "bouwer/cycles.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <typename Fn>
double time_best_of(int repeat, Fn&& fn) {
    double best = 1e30;
    for (int i = 0; i < repeat; ++i) {
        const auto t0 = Clock::now();
        fn();
        best = std::min(best, ms_since(t0));
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    int repeat = 3;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--repeat") == 0 && i + 1 < argc) repeat = std::atoi(argv[++i]);
    }

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel kernels fall back to serial\n");
#endif

    const std::vector<std::tuple<int, int, int>> graphs = {
        {2, 10, 11},   // 110 vertices
        {3, 6, 21},    // 2646 vertices
        {2, 10, 1023}, // 10230 vertices
        {3, 6, 63},    // 23814 vertices
    };

    std::printf("%-14s %10s | %12s %12s %7s | %14s %12s %12s %7s\n", "graph", "order",
                "girth ser", "girth par", "speedup", "6-cycles", "census ser", "census par",
                "speedup");
    for (const auto& [k, m, n] : graphs) {
        const bouwer::GraphParams p = bouwer::validate_params(k, m, n);
        const bouwer::BouwerGraph g = bouwer::BouwerGraph::build(p);

        int girth_s = 0, girth_p = 0;
        const double tg_s = time_best_of(repeat, [&] { girth_s = bouwer::girth_serial(g); });
        const double tg_p = time_best_of(repeat, [&] { girth_p = bouwer::girth_parallel(g); });
        std::uint64_t total_s = 0, total_p = 0;
        const double tc_s =
            time_best_of(repeat, [&] { total_s = bouwer::six_cycle_total_serial(g); });
        const double tc_p =
            time_best_of(repeat, [&] { total_p = bouwer::six_cycle_total_parallel(g); });

        if (girth_s != girth_p || total_s != total_p) {
            std::fprintf(stderr, "MISMATCH on B(%d,%d,%d): girth %d/%d, census %llu/%llu\n", k, m,
                         n, girth_s, girth_p, static_cast<unsigned long long>(total_s),
                         static_cast<unsigned long long>(total_p));
            return 1;
        }

        char name[32];
        std::snprintf(name, sizeof name, "B(%d,%d,%d)", k, m, n);
        std::printf("%-14s %10u | %9.2fms %9.2fms %6.2fx | %14llu %9.2fms %9.2fms %6.2fx\n", name,
                    g.order(), tg_s, tg_p, tg_s / tg_p,
                    static_cast<unsigned long long>(total_s), tc_s, tc_p, tc_s / tc_p);
    }
    return 0;
}
