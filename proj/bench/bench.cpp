// Serial reference vs OpenMP kernel timings.
//   kiso_bench [repetitions]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "kiso/cliques.hpp"
#include "kiso/generators.hpp"
#include "kiso/isolation.hpp"
#include "kiso/sweep.hpp"

using namespace kiso;

namespace {

double best_of(int reps, const std::function<std::uint64_t()>& body, std::uint64_t& check) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto start = std::chrono::steady_clock::now();
        check = body();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    return best;
}

void compare(const char* name, int reps, const std::function<std::uint64_t()>& serial,
             const std::function<std::uint64_t()>& parallel) {
    std::uint64_t a = 0, b = 0;
    const double ts = best_of(reps, serial, a);
    const double tp = best_of(reps, parallel, b);
    std::printf("%-28s serial %9.4fs  openmp %9.4fs  speedup %5.2fx  %s\n", name, ts, tp, ts / tp,
                a == b ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
    std::printf("threads: %d\n", omp_get_max_threads());

    const Graph dense = gen_random_connected(90, 0.45, 1);
    compare("enumerate 4-cliques n=90", reps,
            [&] { return std::uint64_t{enumerate_k_cliques_serial(dense, {4, std::nullopt}).size()}; },
            [&] { return std::uint64_t{enumerate_k_cliques(dense, {4, std::nullopt}).size()}; });

    const Graph cycle = build_cycle(20);
    compare("subset oracle C20 k=1", reps,
            [&] { return iota_oracle_serial(cycle, 1).nodes_expanded; },
            [&] { return iota_oracle(cycle, 1).nodes_expanded; });

    SweepOptions options;
    options.k_max = 3;
    compare("exhaustive sweep n<=6", reps,
            [&] { return check_exhaustive_serial(6, options).instances; },
            [&] { return check_exhaustive(6, options).instances; });

    RandomSweepConfig config{400, 8, 14, 7, std::nullopt};
    compare("random sweep 400 graphs", reps,
            [&] { return check_random_serial(config, options).instances; },
            [&] { return check_random(config, options).instances; });
    return 0;
}
