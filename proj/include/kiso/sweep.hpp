#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kiso/generators.hpp"
#include "kiso/graph.hpp"

namespace kiso {

// Checks, for one connected graph and one k:
//  - exceptional graphs have iota 1 (K_k) or 2 (C_5 at k=2), above floor(n/(k+1));
//  - every other graph has iota <= floor(n/(k+1));
//  - theorem1_set returns a verified set within the same bound.
struct SweepOptions {
    int k_max = 3;
    int oracle_cap = 20;  // iota by subset oracle up to this order, branch and bound above
    bool check_construction = true;
    bool verify_each_step = false;
    int enumeration_cap = kDefaultEnumerationCap;
};

struct TheoremViolation {
    int n = 0;
    std::uint64_t index = 0;  // labeled mask (exhaustive) or instance number (random)
    int k = 0;
    Graph graph;
    std::string reason;
};

struct SweepSummary {
    std::uint64_t graphs = 0;
    std::uint64_t instances = 0;  // graph/k pairs
    std::uint64_t exceptional = 0;
    std::vector<TheoremViolation> violations;  // ordered by (n, index, k)
};

struct RandomSweepConfig {
    std::uint64_t count = 0;
    int n_min = 1;
    int n_max = 1;
    std::uint64_t seed = 0;
    std::optional<double> p;  // fixed edge probability; drawn per instance when absent
};

struct RandomInstance {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

// Instances are drawn up front from one mt19937_64 stream seeded by config.seed.
std::vector<RandomInstance> draw_random_instances(const RandomSweepConfig& config);

// Appends any violations for (g, k) to out.
void check_instance(const Graph& g, int k, const SweepOptions& options, std::uint64_t index,
                    std::vector<TheoremViolation>& out, bool& exceptional);

// All connected labeled graphs with 1 <= n <= n_max. The OpenMP version
// splits each n by mask range; both return identical summaries.
SweepSummary check_exhaustive(int n_max, const SweepOptions& options);
SweepSummary check_exhaustive_serial(int n_max, const SweepOptions& options);

SweepSummary check_random(const RandomSweepConfig& config, const SweepOptions& options);
SweepSummary check_random_serial(const RandomSweepConfig& config, const SweepOptions& options);

}  // namespace kiso
