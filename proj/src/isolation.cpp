#include "kiso/isolation.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <numeric>
#include <optional>

#include "kiso/cliques.hpp"

namespace kiso {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMaxOracleCap = 62;

void check_k(int k) {
    if (k < 1) throw InputError("k must be at least 1, got " + std::to_string(k));
}

bool isolates(const Graph& g, int k, const VertexSet& d) {
    const VertexSet residual = closed_neighborhood(g, d).complement();
    return residual.count() < k || !has_k_clique(g, k, residual);
}

const std::array<std::array<std::uint64_t, kMaxOracleCap + 1>, kMaxOracleCap + 1>& binomials() {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, kMaxOracleCap + 1>, kMaxOracleCap + 1> t{};
        for (int n = 0; n <= kMaxOracleCap; ++n) {
            t[n][0] = 1;
            for (int r = 1; r <= n; ++r) t[n][r] = t[n - 1][r - 1] + (r <= n - 1 ? t[n - 1][r] : 0);
        }
        return t;
    }();
    return table;
}

std::uint64_t choose(int n, int r) {
    if (r < 0 || n < 0 || r > n) return 0;
    return binomials()[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
}

// The rank-th size-s subset of {0..n-1} in lexicographic order.
void unrank_combination(int n, int s, std::uint64_t rank, std::vector<int>& out) {
    out.resize(static_cast<std::size_t>(s));
    int c = 0;
    for (int pos = 0; pos < s; ++pos) {
        while (true) {
            const std::uint64_t with_c = choose(n - c - 1, s - pos - 1);
            if (rank < with_c) break;
            rank -= with_c;
            ++c;
        }
        out[static_cast<std::size_t>(pos)] = c++;
    }
}

bool next_combination(std::vector<int>& comb, int n) {
    const int s = static_cast<int>(comb.size());
    int i = s - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - s + i) --i;
    if (i < 0) return false;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < s; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

void check_oracle_input(const Graph& g, int k, const OracleOptions& options) {
    check_k(k);
    if (options.cap < 0 || options.cap > kMaxOracleCap)
        throw InputError("oracle cap must lie in 0.." + std::to_string(kMaxOracleCap));
    if (g.order() > options.cap)
        throw CapExceeded("subset oracle refuses graph of order " + std::to_string(g.order()) +
                              ": exceeds oracle cap " + std::to_string(options.cap),
                          options.cap);
}

// Branch and bound for one connected piece.
class BranchAndBound {
public:
    BranchAndBound(const Graph& g, int k) : g_(g), k_(k) {
        auto all = enumerate_k_cliques_serial(g_, {k_, kMaxListedCliques + 1});
        if (all.size() <= kMaxListedCliques) {
            listed_ = true;
            for (VertexSet& c : all) {
                Listed entry{closed_neighborhood(g_, c), VertexSet(g_.order()), std::move(c)};
                entry.reach = closed_neighborhood(g_, entry.hitters);
                cliques_.push_back(std::move(entry));
            }
            // Cliques with few hitters first: they branch narrowly and pack well.
            std::stable_sort(cliques_.begin(), cliques_.end(),
                             [](const Listed& a, const Listed& b) { return a.hitters.count() < b.hitters.count(); });
        }
    }

    SolveReport run() {
        best_ = greedy_upper_bound(g_, k_);
        best_size_ = best_.count();
        VertexSet chosen(g_.order());
        VertexSet dominated(g_.order());
        VertexSet excluded(g_.order());
        search(chosen, 0, dominated, excluded);
        SolveReport report;
        report.iota = best_size_;
        report.optimal_set = best_;
        report.nodes_expanded = nodes_;
        return report;
    }

private:
    static constexpr std::size_t kMaxListedCliques = 20000;

    struct Listed {
        VertexSet hitters;  // N[C]: the vertices whose choice destroys C
        VertexSet reach;    // N[N[C]]
        VertexSet members;
    };

    // Greedy packing of k-cliques whose closed neighbourhoods are pairwise
    // disjoint; each one needs its own new vertex of D.
    int packing_bound(const VertexSet& residual, int cap) const {
        int packed = 0;
        if (listed_) {
            VertexSet pool = residual;
            for (const Listed& c : cliques_) {
                if (packed >= cap) break;
                if (!c.members.is_subset_of(pool)) continue;
                ++packed;
                pool -= c.reach;
            }
            return packed;
        }
        VertexSet pool = residual;
        while (packed < cap) {
            auto c = find_k_clique(g_, k_, pool);
            if (!c) break;
            ++packed;
            pool -= closed_neighborhood(g_, closed_neighborhood(g_, *c));
        }
        return packed;
    }

    // The live clique with the fewest candidate vertices left to branch on.
    std::optional<VertexSet> branch_set(const VertexSet& residual, const VertexSet& excluded) const {
        if (!listed_) {
            const auto clique = find_k_clique(g_, k_, residual);
            if (!clique) return std::nullopt;
            return closed_neighborhood(g_, *clique) - excluded;
        }
        std::optional<VertexSet> best;
        int best_count = 0;
        for (const Listed& c : cliques_) {
            if (!c.members.is_subset_of(residual)) continue;
            const int count = c.hitters.count() - c.hitters.intersection_count(excluded);
            if (!best || count < best_count) {
                best = c.hitters - excluded;
                best_count = count;
                if (count <= 1) break;
            }
        }
        return best;
    }

    void search(const VertexSet& chosen, int chosen_count, const VertexSet& dominated, VertexSet excluded) {
        ++nodes_;
        const VertexSet residual = dominated.complement();
        const auto candidates = branch_set(residual, excluded);
        if (!candidates) {
            if (chosen_count < best_size_) {
                best_ = chosen;
                best_size_ = chosen_count;
            }
            return;
        }
        if (chosen_count + 1 >= best_size_) return;
        if (chosen_count + packing_bound(residual, best_size_ - chosen_count) >= best_size_) return;

        // D must meet N[C] to destroy C.
        for (int u = candidates->first(); u >= 0; u = candidates->next(u + 1)) {
            VertexSet next_chosen = chosen;
            next_chosen.insert(u);
            search(next_chosen, chosen_count + 1, dominated | g_.closed_neighbors(u), excluded);
            // Sets containing u are exhausted; siblings may skip it.
            excluded.insert(u);
            if (chosen_count + 1 >= best_size_) return;
        }
    }

    const Graph& g_;
    int k_;
    bool listed_ = false;
    std::vector<Listed> cliques_;
    VertexSet best_;
    int best_size_ = 0;
    std::uint64_t nodes_ = 0;
};

}  // namespace

IsolationCertificate verify_isolating(const Graph& g, int k, const VertexSet& d) {
    check_k(k);
    g.check_subset(d);
    IsolationCertificate cert;
    cert.candidate = d;
    const VertexSet residual = closed_neighborhood(g, d).complement();
    cert.residual_size = residual.count();
    cert.witness = find_k_clique(g, k, residual);
    cert.valid = !cert.witness.has_value();
    return cert;
}

SolveReport iota_oracle_serial(const Graph& g, int k, OracleOptions options) {
    check_oracle_input(g, k, options);
    const auto start = Clock::now();
    SolveReport report;
    const int n = g.order();
    std::vector<int> comb;
    for (int s = 0; s <= n; ++s) {
        comb.resize(static_cast<std::size_t>(s));
        std::iota(comb.begin(), comb.end(), 0);
        do {
            ++report.nodes_expanded;
            const VertexSet d(n, comb);
            if (isolates(g, k, d)) {
                report.iota = s;
                report.optimal_set = d;
                report.elapsed = Clock::now() - start;
                return report;
            }
        } while (next_combination(comb, n));
    }
    // Unreachable: D = V(G) always isolates.
    throw std::logic_error("subset oracle found no isolating set");
}

SolveReport iota_oracle(const Graph& g, int k, OracleOptions options) {
    check_oracle_input(g, k, options);
    const auto start = Clock::now();
    SolveReport report;
    const int n = g.order();
    for (int s = 0; s <= n; ++s) {
        const std::uint64_t total = choose(n, s);
        std::atomic<std::uint64_t> first_pass{total};
#pragma omp parallel
        {
            std::vector<int> comb;
#pragma omp for schedule(dynamic, 64)
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
                const auto rank = static_cast<std::uint64_t>(i);
                if (rank >= first_pass.load(std::memory_order_relaxed)) continue;
                unrank_combination(n, s, rank, comb);
                if (!isolates(g, k, VertexSet(n, comb))) continue;
                std::uint64_t seen = first_pass.load(std::memory_order_relaxed);
                while (rank < seen && !first_pass.compare_exchange_weak(seen, rank)) {
                }
            }
        }
        const std::uint64_t hit = first_pass.load();
        if (hit < total) {
            std::vector<int> comb;
            unrank_combination(n, s, hit, comb);
            report.iota = s;
            report.optimal_set = VertexSet(n, comb);
            report.nodes_expanded += hit + 1;
            report.elapsed = Clock::now() - start;
            return report;
        }
        report.nodes_expanded += total;
    }
    throw std::logic_error("subset oracle found no isolating set");
}

VertexSet greedy_upper_bound(const Graph& g, int k) {
    check_k(k);
    VertexSet d(g.order());
    VertexSet residual = g.vertices();
    while (auto clique = find_k_clique(g, k, residual)) {
        int pick = -1;
        int pick_degree = -1;
        clique->for_each([&](int v) {
            const int deg = g.neighbors(v).intersection_count(residual);
            if (deg > pick_degree) {
                pick = v;
                pick_degree = deg;
            }
        });
        d.insert(pick);
        residual -= g.closed_neighbors(pick);
    }
    return d;
}

SolveReport iota_solve(const Graph& g, int k) {
    check_k(k);
    const auto start = Clock::now();
    SolveReport report;
    report.optimal_set = VertexSet(g.order());
    for (const VertexSet& comp : components(g)) {
        if (comp.count() < k) continue;
        const SubGraph piece = induced(g, comp);
        const SolveReport part = BranchAndBound(piece.graph, k).run();
        report.iota += part.iota;
        report.optimal_set |= piece.lift(part.optimal_set, g.order());
        report.nodes_expanded += part.nodes_expanded;
    }
    report.elapsed = Clock::now() - start;
    return report;
}

}  // namespace kiso
