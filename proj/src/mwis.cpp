#include "sigmak/mwis.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "sigmak/error.hpp"

namespace sigmak {

namespace {

using Clock = std::chrono::steady_clock;

class Bits {
public:
    explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

    void set(int i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(int i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(int i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // this \ o is empty
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    Bits minus(const Bits& o) const {
        Bits r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
        return r;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                const int b = __builtin_ctzll(w);
                f(static_cast<int>(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(words_[i]));
        return -1;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct SharedBudget {
    MwisBudget limits;
    Clock::time_point start = Clock::now();
    std::uint64_t nodes = 0;
    bool exhausted = false;

    bool tick() {
        ++nodes;
        if (limits.max_nodes && nodes > limits.max_nodes) exhausted = true;
        if (limits.max_ms && nodes % 256 == 0) {
            const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
            if (static_cast<std::uint64_t>(elapsed.count()) > limits.max_ms) exhausted = true;
        }
        return !exhausted;
    }
};

// Branch and bound on one connected component, vertices renumbered so that
// index order is branching order.
class ComponentSolver {
public:
    ComponentSolver(std::vector<std::int64_t> weights, std::vector<Bits> neighbours, SharedBudget& budget)
        : w_(std::move(weights)), nbr_(std::move(neighbours)), budget_(budget) {}

    std::vector<int> solve(bool& optimal) {
        const int m = static_cast<int>(w_.size());
        Bits all(m);
        for (int i = 0; i < m; ++i) all.set(i);
        // Greedy start so an early budget stop still returns something sensible.
        Bits free = all;
        for (int i = 0; i < m; ++i) {
            if (!free.test(i)) continue;
            best_.push_back(i);
            best_weight_ += w_[i];
            free = free.minus(nbr_[i]);
            free.reset(i);
        }
        expand(all, 0);
        optimal = !budget_.exhausted;
        return best_;
    }

private:
    void expand(Bits p, std::int64_t current) {
        if (budget_.exhausted || !budget_.tick()) return;
        const std::size_t depth = stack_.size();
        // Vertices with no neighbour left in P always belong to an optimum.
        p.for_each([&](int i) {
            if (!nbr_[i].intersects(p)) {
                stack_.push_back(i);
                current += w_[i];
                p.reset(i);
            }
        });
        const int v = p.first();
        if (v < 0) {
            if (current > best_weight_) {
                best_weight_ = current;
                best_ = stack_;
            }
        } else if (current + clique_cover_bound(p) > best_weight_) {
            Bits with = p.minus(nbr_[v]);
            with.reset(v);
            stack_.push_back(v);
            expand(with, current + w_[v]);
            stack_.pop_back();
            p.reset(v);
            expand(p, current);
        }
        stack_.resize(depth);
    }

    std::int64_t clique_cover_bound(const Bits& p) const {
        std::vector<Bits> cliques;
        std::int64_t bound = 0;
        p.for_each([&](int i) {
            for (Bits& c : cliques) {
                if (c.subset_of(nbr_[i])) {
                    c.set(i);
                    return;
                }
            }
            Bits c(w_.size());
            c.set(i);
            cliques.push_back(std::move(c));
            bound += w_[i]; // heaviest member: vertices arrive in decreasing weight
        });
        return bound;
    }

    std::vector<std::int64_t> w_;
    std::vector<Bits> nbr_;
    SharedBudget& budget_;
    std::vector<int> stack_;
    std::vector<int> best_;
    std::int64_t best_weight_ = 0;
};

} // namespace

MwisResult max_weight_independent_set(const std::vector<std::int64_t>& weights,
                                      const std::vector<std::vector<int>>& adjacency, const MwisBudget& budget) {
    const int n = static_cast<int>(weights.size());
    if (adjacency.size() != weights.size()) throw InvalidInput("weights and adjacency sizes differ");
    for (std::int64_t w : weights)
        if (w <= 0) throw InvalidInput("independent set weights must be positive");

    std::vector<int> component(n, -1);
    std::vector<std::vector<int>> members;
    for (int s = 0; s < n; ++s) {
        if (component[s] >= 0) continue;
        const int id = static_cast<int>(members.size());
        members.emplace_back();
        std::vector<int> stack{s};
        component[s] = id;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            members[id].push_back(v);
            for (int u : adjacency[v]) {
                if (u < 0 || u >= n || u == v) throw InvalidInput("bad adjacency entry");
                if (component[u] < 0) {
                    component[u] = id;
                    stack.push_back(u);
                }
            }
        }
    }

    SharedBudget shared;
    shared.limits = budget;
    MwisResult result;
    std::vector<int> local(n, -1);
    for (std::vector<int>& group : members) {
        std::sort(group.begin(), group.end(), [&](int a, int b) {
            if (weights[a] != weights[b]) return weights[a] > weights[b];
            if (adjacency[a].size() != adjacency[b].size()) return adjacency[a].size() > adjacency[b].size();
            return a < b;
        });
        const int m = static_cast<int>(group.size());
        for (int i = 0; i < m; ++i) local[group[i]] = i;
        std::vector<std::int64_t> w(m);
        std::vector<Bits> nbr(m, Bits(m));
        for (int i = 0; i < m; ++i) {
            w[i] = weights[group[i]];
            for (int u : adjacency[group[i]]) nbr[i].set(local[u]);
        }
        bool optimal = true;
        ComponentSolver solver(std::move(w), std::move(nbr), shared);
        for (int i : solver.solve(optimal)) {
            result.chosen.push_back(group[i]);
            result.weight += weights[group[i]];
        }
        result.optimal = result.optimal && optimal;
    }
    std::sort(result.chosen.begin(), result.chosen.end());
    result.nodes = shared.nodes;
    return result;
}

} // namespace sigmak
