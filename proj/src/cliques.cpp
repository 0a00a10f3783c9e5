#include "kiso/cliques.hpp"

#include <bit>

namespace kiso {

namespace {

using Word = VertexSet::Word;
using Words = std::vector<Word>;

void check_k(int k) {
    if (k < 1) throw InputError("k must be at least 1, got " + std::to_string(k));
}

int popcount(const Words& w) {
    int c = 0;
    for (Word x : w) c += std::popcount(x);
    return c;
}

int next_bit(const Words& w, int from) {
    std::size_t i = static_cast<std::size_t>(from) / VertexSet::kWordBits;
    if (i >= w.size()) return -1;
    Word bits = w[i] & (~Word{0} << (from % VertexSet::kWordBits));
    while (true) {
        if (bits) return static_cast<int>(i * VertexSet::kWordBits + std::countr_zero(bits));
        if (++i == w.size()) return -1;
        bits = w[i];
    }
}

// Depth-first clique extension over per-depth candidate bitsets.
class Searcher {
public:
    Searcher(const Graph& g, int k)
        : g_(g), k_(k), cand_(static_cast<std::size_t>(k) + 1, Words(VertexSet(g.order()).words().size(), 0)) {
        chosen_.reserve(static_cast<std::size_t>(k));
    }

    // Candidate pool at depth 0, pruned for cliques of size k.
    void load_pool(const VertexSet& pool) {
        cand_[0] = pool.words();
        prune(cand_[0], k_);
    }

    const Words& pool() const { return cand_[0]; }

    // Calls visit(chosen) for each clique; visit returns false to stop.
    template <typename Fn>
    bool run(Fn& visit) { return extend(0, visit); }

    template <typename Fn>
    bool run_from(int root, Fn& visit) {
        chosen_.assign(1, root);
        restrict_after(root, 1);
        const bool go_on = extend(1, visit);
        chosen_.clear();
        return go_on;
    }

    const std::vector<int>& chosen() const { return chosen_; }

private:
    // cand_[depth] = cand_[0] & N(root) restricted to vertices > root.
    void restrict_after(int root, std::size_t depth) {
        const Words& nb = g_.neighbors(root).words();
        Words& out = cand_[depth];
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = cand_[0][i] & nb[i];
        const std::size_t w = static_cast<std::size_t>(root) / VertexSet::kWordBits;
        for (std::size_t i = 0; i < w; ++i) out[i] = 0;
        const int bit = root % VertexSet::kWordBits;
        out[w] &= (bit == VertexSet::kWordBits - 1) ? Word{0} : (~Word{0} << (bit + 1));
    }

    // Drops vertices that cannot belong to a `need`-clique inside `cand`.
    void prune(Words& cand, int need) const {
        if (need <= 1) return;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int u = next_bit(cand, 0); u >= 0; u = next_bit(cand, u + 1)) {
                const Words& nb = g_.neighbors(u).words();
                int deg = 0;
                for (std::size_t i = 0; i < cand.size() && deg < need - 1; ++i) deg += std::popcount(cand[i] & nb[i]);
                if (deg < need - 1) {
                    cand[static_cast<std::size_t>(u) / VertexSet::kWordBits] &= ~(Word{1} << (u % VertexSet::kWordBits));
                    changed = true;
                }
            }
        }
    }

    template <typename Fn>
    bool extend(std::size_t depth, Fn& visit) {
        const int need = k_ - static_cast<int>(chosen_.size());
        if (need == 0) return visit(chosen_);
        Words& cand = cand_[depth];
        if (depth > 0) prune(cand, need);
        int available = popcount(cand);
        for (int u = next_bit(cand, 0); u >= 0 && available >= need; u = next_bit(cand, u + 1)) {
            chosen_.push_back(u);
            if (need > 1) {
                const Words& nb = g_.neighbors(u).words();
                Words& next = cand_[depth + 1];
                for (std::size_t i = 0; i < next.size(); ++i) next[i] = cand[i] & nb[i];
                // Later vertices only: members below u were already dropped from cand.
                const std::size_t w = static_cast<std::size_t>(u) / VertexSet::kWordBits;
                next[w] &= ~(Word{1} << (u % VertexSet::kWordBits));
            }
            const bool go_on = extend(depth + 1, visit);
            chosen_.pop_back();
            if (!go_on) return false;
            cand[static_cast<std::size_t>(u) / VertexSet::kWordBits] &= ~(Word{1} << (u % VertexSet::kWordBits));
            --available;
        }
        return true;
    }

    const Graph& g_;
    int k_;
    std::vector<Words> cand_;
    std::vector<int> chosen_;
};

std::optional<VertexSet> first_clique(const Graph& g, int k, const VertexSet& within) {
    check_k(k);
    g.check_subset(within);
    if (g.order() == 0 || k > within.count()) return std::nullopt;
    Searcher s(g, k);
    s.load_pool(within);
    std::optional<VertexSet> found;
    auto visit = [&](const std::vector<int>& c) {
        found = VertexSet(g.order(), c);
        return false;
    };
    s.run(visit);
    return found;
}

}  // namespace

bool has_k_clique(const Graph& g, int k, const VertexSet& within) {
    return first_clique(g, k, within).has_value();
}

bool has_k_clique(const Graph& g, int k) { return has_k_clique(g, k, g.vertices()); }

std::optional<VertexSet> find_k_clique(const Graph& g, int k, const VertexSet& within) {
    return first_clique(g, k, within);
}

std::optional<VertexSet> find_k_clique(const Graph& g, int k) { return first_clique(g, k, g.vertices()); }

std::vector<VertexSet> enumerate_k_cliques_serial(const Graph& g, const CliqueQuery& q) {
    check_k(q.k);
    std::vector<VertexSet> out;
    if (g.order() == 0 || q.k > g.order() || q.limit == std::size_t{0}) return out;
    Searcher s(g, q.k);
    s.load_pool(g.vertices());
    auto visit = [&](const std::vector<int>& c) {
        out.emplace_back(g.order(), c);
        return !q.limit || out.size() < *q.limit;
    };
    s.run(visit);
    return out;
}

std::vector<VertexSet> enumerate_k_cliques(const Graph& g, const CliqueQuery& q) {
    check_k(q.k);
    // An early stop needs the sequential order; the split gains nothing there.
    if (q.limit || q.k == 1 || g.order() == 0 || q.k > g.order()) return enumerate_k_cliques_serial(g, q);

    Searcher probe(g, q.k);
    probe.load_pool(g.vertices());
    const Words pool = probe.pool();
    std::vector<int> roots;
    for (int u = next_bit(pool, 0); u >= 0; u = next_bit(pool, u + 1)) roots.push_back(u);

    std::vector<std::vector<VertexSet>> per_root(roots.size());
    const long long root_count = static_cast<long long>(roots.size());
#pragma omp parallel
    {
        Searcher s(g, q.k);
        s.load_pool(g.vertices());
#pragma omp for schedule(dynamic, 1)
        for (long long i = 0; i < root_count; ++i) {
            auto& bucket = per_root[static_cast<std::size_t>(i)];
            auto visit = [&](const std::vector<int>& c) {
                bucket.emplace_back(g.order(), c);
                return true;
            };
            s.run_from(roots[static_cast<std::size_t>(i)], visit);
        }
    }

    std::vector<VertexSet> out;
    for (auto& bucket : per_root)
        for (auto& c : bucket) out.push_back(std::move(c));
    return out;
}

}  // namespace kiso
