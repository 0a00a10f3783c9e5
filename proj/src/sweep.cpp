#include "kiso/sweep.hpp"

#include <algorithm>
#include <random>

#include "kiso/constructive.hpp"
#include "kiso/isolation.hpp"

namespace kiso {

namespace {

void check_options(const SweepOptions& options) {
    if (options.k_max < 1) throw InputError("k-max must be at least 1");
}

void sort_violations(std::vector<TheoremViolation>& v) {
    std::stable_sort(v.begin(), v.end(), [](const TheoremViolation& a, const TheoremViolation& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.index != b.index) return a.index < b.index;
        return a.k < b.k;
    });
}

void check_all_k(const Graph& g, const SweepOptions& options, std::uint64_t index, SweepSummary& into) {
    ++into.graphs;
    for (int k = 1; k <= options.k_max; ++k) {
        bool exceptional = false;
        check_instance(g, k, options, index, into.violations, exceptional);
        ++into.instances;
        if (exceptional) ++into.exceptional;
    }
}

void merge(SweepSummary& into, SweepSummary&& part) {
    into.graphs += part.graphs;
    into.instances += part.instances;
    into.exceptional += part.exceptional;
    for (auto& v : part.violations) into.violations.push_back(std::move(v));
}

void check_n_limit(int n_max, const SweepOptions& options) {
    if (n_max < 1) throw InputError("n-max must be at least 1");
    if (n_max > options.enumeration_cap)
        throw CapExceeded("exhaustive check refuses n-max = " + std::to_string(n_max) + ": exceeds cap " +
                              std::to_string(options.enumeration_cap),
                          options.enumeration_cap);
    if (options.enumeration_cap > 11) throw InputError("enumeration cap cannot exceed 11");
}

}  // namespace

void check_instance(const Graph& g, int k, const SweepOptions& options, std::uint64_t index,
                    std::vector<TheoremViolation>& out, bool& exceptional) {
    const int n = g.order();
    const int bound = n / (k + 1);
    auto violation = [&](std::string reason) { out.push_back({n, index, k, g, std::move(reason)}); };

    const int iota = n <= options.oracle_cap ? iota_oracle_serial(g, k, {options.oracle_cap}).iota
                                              : iota_solve(g, k).iota;
    const ExceptionKind kind = classify_exception(g, k);
    exceptional = kind != ExceptionKind::None;
    if (exceptional) {
        const int expected = kind == ExceptionKind::KClique ? 1 : 2;
        if (iota != expected || iota <= bound)
            violation(std::string("exceptional graph (") + to_string(kind) + ") has iota " + std::to_string(iota));
        return;
    }
    if (iota > bound) violation("iota " + std::to_string(iota) + " exceeds bound " + std::to_string(bound));
    if (!options.check_construction) return;
    try {
        const BoundResult r = theorem1_set(g, k, {options.verify_each_step});
        if (r.set.count() > bound)
            violation("constructed set of size " + std::to_string(r.set.count()) + " exceeds bound");
        else if (!verify_isolating(g, k, r.set).valid)
            violation("constructed set does not isolate");
    } catch (const std::logic_error& e) {
        violation(std::string("construction failed: ") + e.what());
    }
}

SweepSummary check_exhaustive_serial(int n_max, const SweepOptions& options) {
    check_options(options);
    check_n_limit(n_max, options);
    SweepSummary summary;
    for (int n = 1; n <= n_max; ++n) {
        const std::uint64_t end = std::uint64_t{1} << pair_count(n);
        for (std::uint64_t mask = 0; mask < end; ++mask) {
            if (!mask_is_connected(n, mask)) continue;
            check_all_k(graph_from_mask(n, mask), options, mask, summary);
        }
    }
    sort_violations(summary.violations);
    return summary;
}

SweepSummary check_exhaustive(int n_max, const SweepOptions& options) {
    check_options(options);
    check_n_limit(n_max, options);
    SweepSummary summary;
    for (int n = 1; n <= n_max; ++n) {
        const auto end = static_cast<std::int64_t>(std::uint64_t{1} << pair_count(n));
#pragma omp parallel
        {
            SweepSummary local;
#pragma omp for schedule(dynamic, 256) nowait
            for (std::int64_t m = 0; m < end; ++m) {
                const auto mask = static_cast<std::uint64_t>(m);
                if (!mask_is_connected(n, mask)) continue;
                check_all_k(graph_from_mask(n, mask), options, mask, local);
            }
#pragma omp critical(kiso_sweep_merge)
            merge(summary, std::move(local));
        }
    }
    sort_violations(summary.violations);
    return summary;
}

std::vector<RandomInstance> draw_random_instances(const RandomSweepConfig& config) {
    if (config.n_min < 1 || config.n_max < config.n_min) throw InputError("need 1 <= n-min <= n-max");
    if (config.p && !(*config.p > 0.0 && *config.p <= 1.0)) throw InputError("edge probability must lie in (0, 1]");
    std::mt19937_64 rng(config.seed);
    const auto span = static_cast<std::uint64_t>(config.n_max - config.n_min + 1);
    std::vector<RandomInstance> out;
    out.reserve(config.count);
    for (std::uint64_t i = 0; i < config.count; ++i) {
        RandomInstance inst;
        inst.n = config.n_min + static_cast<int>(rng() % span);
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        inst.p = config.p ? *config.p : 0.05 + 0.55 * u;
        inst.seed = rng();
        out.push_back(inst);
    }
    return out;
}

SweepSummary check_random_serial(const RandomSweepConfig& config, const SweepOptions& options) {
    check_options(options);
    SweepSummary summary;
    const auto instances = draw_random_instances(config);
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto& inst = instances[i];
        check_all_k(gen_random_connected(inst.n, inst.p, inst.seed), options, i, summary);
    }
    sort_violations(summary.violations);
    return summary;
}

SweepSummary check_random(const RandomSweepConfig& config, const SweepOptions& options) {
    check_options(options);
    SweepSummary summary;
    const auto instances = draw_random_instances(config);
    const auto count = static_cast<std::int64_t>(instances.size());
#pragma omp parallel
    {
        SweepSummary local;
#pragma omp for schedule(dynamic, 1) nowait
        for (std::int64_t i = 0; i < count; ++i) {
            const auto& inst = instances[static_cast<std::size_t>(i)];
            check_all_k(gen_random_connected(inst.n, inst.p, inst.seed), options, static_cast<std::uint64_t>(i), local);
        }
#pragma omp critical(kiso_sweep_merge)
        merge(summary, std::move(local));
    }
    sort_violations(summary.violations);
    return summary;
}

}  // namespace kiso
