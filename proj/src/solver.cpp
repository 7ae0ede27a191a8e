#include "sigmak/solver.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <optional>
#include <thread>

#include "sigmak/error.hpp"
#include "sigmak/mwis.hpp"

namespace sigmak {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Twice sigma_k of BG(tau, Ď) without building a census; reuses buffers
// across the many resolutions of the naive engine.
class FastScorer {
public:
    FastScorer(const AmbiguousBreakpointGraph& g, SigmaIndex k)
        : g_(g), k_(k), mate_(g.vertex_count(), -1), seen_(g.vertex_count(), 0) {}

    std::int64_t twice_sigma(const Resolution& tau) {
        for (std::size_t q = 0; q < tau.size(); ++q) {
            for (auto [x, y] : g_.square(static_cast<int>(q)).edges(tau[q])) {
                mate_[x] = y;
                mate_[y] = x;
            }
        }
        std::fill(seen_.begin(), seen_.end(), 0);
        const auto& d = g_.d_mates();
        const int n = static_cast<int>(mate_.size());
        std::int64_t twice = static_cast<std::int64_t>(g_.isolated_count());
        for (int s = 0; s < n; ++s) {
            if (seen_[s] || (mate_[s] >= 0 && d[s] >= 0)) continue;
            bool square_side = mate_[s] >= 0;
            std::size_t length = 0;
            for (int v = s;;) {
                seen_[v] = 1;
                const int next = square_side ? mate_[v] : d[v];
                if (next < 0) break;
                ++length;
                v = next;
                square_side = !square_side;
            }
            if (length % 2 == 0 && (k_.is_infinite() || length + 2 <= static_cast<std::size_t>(k_.k()))) twice += 1;
        }
        for (int s = 0; s < n; ++s) {
            if (seen_[s]) continue;
            std::size_t length = 0;
            bool square_side = true;
            int v = s;
            do {
                seen_[v] = 1;
                v = square_side ? mate_[v] : d[v];
                square_side = !square_side;
                ++length;
            } while (v != s);
            if (k_.is_infinite() || length <= static_cast<std::size_t>(k_.k())) twice += 2;
        }
        return twice;
    }

private:
    const AmbiguousBreakpointGraph& g_;
    SigmaIndex k_;
    std::vector<int> mate_;
    std::vector<char> seen_;
};

Resolution resolution_of(std::uint64_t pattern, std::size_t squares) {
    Resolution tau(squares);
    for (std::size_t q = 0; q < squares; ++q) tau[q] = (pattern >> (squares - 1 - q)) & 1U;
    return tau;
}

struct RangeBest {
    std::int64_t twice = -1;
    std::uint64_t pattern = 0;
    std::uint64_t evaluated = 0;
    bool timed_out = false;
};

RangeBest search_range(const AmbiguousBreakpointGraph& g, SigmaIndex k, std::uint64_t begin, std::uint64_t end,
                       std::uint64_t max_ms, Clock::time_point start) {
    FastScorer scorer(g, k);
    RangeBest best;
    for (std::uint64_t t = begin; t < end; ++t) {
        if (max_ms && (t - begin) % 1024 == 1023 && elapsed_ms(start) > static_cast<double>(max_ms)) {
            best.timed_out = true;
            break;
        }
        const std::int64_t twice = scorer.twice_sigma(resolution_of(t, g.square_count()));
        ++best.evaluated;
        if (twice > best.twice) {
            best.twice = twice;
            best.pattern = t;
        }
    }
    return best;
}

HalfInt twice_n_star(const AmbiguousBreakpointGraph& g) {
    // 4 n* vertices, so 2 n* = vertices / 2.
    return HalfInt::from_twice(static_cast<std::int64_t>(g.total_vertex_count()));
}

} // namespace

std::string to_string(Engine e) {
    switch (e) {
    case Engine::Naive: return "naive";
    case Engine::Mis: return "mis";
    case Engine::Greedy2: return "greedy2";
    case Engine::Oracle: return "oracle";
    }
    return "?";
}

Engine parse_engine(const std::string& text) {
    for (Engine e : {Engine::Naive, Engine::Mis, Engine::Greedy2, Engine::Oracle})
        if (to_string(e) == text) return e;
    throw InvalidInput("unknown engine '" + text + "' (expected naive, mis, greedy2 or oracle)");
}

SolveResult ss_naive(const AmbiguousBreakpointGraph& g, SigmaIndex k, const SolveBudget& budget) {
    const auto start = Clock::now();
    const std::size_t a = g.square_count();
    if (a > budget.max_squares || a >= 63)
        throw BudgetExceeded("naive engine: " + std::to_string(a) + " squares exceed the limit of " +
                             std::to_string(budget.max_squares));
    std::uint64_t total = std::uint64_t{1} << a;
    bool optimal = true;
    if (budget.max_nodes && total > budget.max_nodes) {
        total = budget.max_nodes;
        optimal = false;
    }
    const unsigned threads = std::max(1U, std::min<unsigned>(budget.threads, static_cast<unsigned>(total)));
    std::vector<RangeBest> parts(threads);
    if (threads == 1) {
        parts[0] = search_range(g, k, 0, total, budget.max_ms, start);
    } else {
        std::vector<std::thread> workers;
        for (unsigned i = 0; i < threads; ++i) {
            const std::uint64_t begin = total * i / threads;
            const std::uint64_t end = total * (i + 1) / threads;
            workers.emplace_back([&, i, begin, end] { parts[i] = search_range(g, k, begin, end, budget.max_ms, start); });
        }
        for (auto& w : workers) w.join();
    }
    // Parts cover increasing pattern ranges, so keeping the first maximum
    // reproduces the single-threaded tie-break.
    RangeBest best;
    SolveResult r;
    for (const RangeBest& p : parts) {
        r.stats.nodes += p.evaluated;
        if (p.timed_out) optimal = false;
        if (p.twice > best.twice) best = p;
    }
    r.engine = Engine::Naive;
    r.optimal = optimal;
    r.tau = resolution_of(best.pattern, a);
    r.score = score(g, r.tau, k);
    r.dd = twice_n_star(g) - r.score;
    r.stats.wall_ms = elapsed_ms(start);
    return r;
}

SolveResult ss_mis(const AmbiguousBreakpointGraph& g, int k, const SolveBudget& budget) {
    const auto start = Clock::now();
    const SigmaIndex index = SigmaIndex::finite(k);
    const std::vector<Candidate> candidates = enumerate_candidates(g, k);
    const int m = static_cast<int>(candidates.size());

    std::vector<std::vector<int>> adjacency(m);
    auto link_all = [&](const std::vector<int>& group) {
        for (std::size_t i = 0; i < group.size(); ++i)
            for (std::size_t j = i + 1; j < group.size(); ++j) {
                adjacency[group[i]].push_back(group[j]);
                adjacency[group[j]].push_back(group[i]);
            }
    };
    std::vector<std::vector<int>> by_vertex(g.vertex_count());
    std::vector<std::array<std::vector<int>, 2>> by_choice(g.square_count());
    for (int c = 0; c < m; ++c) {
        for (int v : candidates[c].vertices) by_vertex[v].push_back(c);
        for (auto [q, bit] : candidates[c].required) by_choice[q][bit].push_back(c);
    }
    for (const auto& group : by_vertex) link_all(group);
    for (const auto& sides : by_choice)
        for (int a : sides[0])
            for (int b : sides[1]) {
                adjacency[a].push_back(b);
                adjacency[b].push_back(a);
            }
    for (auto& list : adjacency) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    std::vector<std::int64_t> weights(m);
    for (int c = 0; c < m; ++c) weights[c] = candidates[c].weight().twice();

    const MwisResult mis = max_weight_independent_set(weights, adjacency, {budget.max_nodes, budget.max_ms});

    SolveResult r;
    r.engine = Engine::Mis;
    r.optimal = mis.optimal;
    r.tau.assign(g.square_count(), 0);
    for (int c : mis.chosen)
        for (auto [q, bit] : candidates[c].required) r.tau[q] = bit;
    r.score = score(g, r.tau, index);
    r.dd = twice_n_star(g) - r.score;
    r.stats.nodes = mis.nodes;
    r.stats.candidates = candidates.size();
    r.stats.wall_ms = elapsed_ms(start);
    return r;
}

SolveResult ss_greedy_2(const AmbiguousBreakpointGraph& g) {
    const auto start = Clock::now();
    SolveResult r;
    r.engine = Engine::Greedy2;
    r.tau.assign(g.square_count(), 0);
    for (std::size_t q = 0; q < g.square_count(); ++q) {
        int closed[2] = {0, 0};
        for (int bit = 0; bit < 2; ++bit)
            for (auto [x, y] : g.square(static_cast<int>(q)).edges(bit))
                if (g.d_mate(x) == y) ++closed[bit];
        r.tau[q] = closed[1] > closed[0];
    }
    r.score = score(g, r.tau, SigmaIndex::finite(2));
    r.dd = twice_n_star(g) - r.score;
    r.stats.wall_ms = elapsed_ms(start);
    return r;
}

SolveResult dd(const Genome& s, const Genome& d, SigmaIndex k, Engine engine, const SolveBudget& budget) {
    const PairClassification cls = classify_pair(s, d);
    if (cls.kind != PairClass::OneTwoCognate || !cls.first_is_singular)
        throw InvalidInput("double distance needs a singular genome S and a duplicated genome D on the same genes");
    if (engine == Engine::Oracle) {
        const auto start = Clock::now();
        SolveResult r;
        r.engine = Engine::Oracle;
        r.dd = dd_definition_oracle(s, d, k);
        r.score = HalfInt(2 * static_cast<std::int64_t>(s.n_star())) - r.dd;
        r.stats.wall_ms = elapsed_ms(start);
        return r;
    }
    const AmbiguousBreakpointGraph g = build_abg(s, singularize(d));
    switch (engine) {
    case Engine::Naive: return ss_naive(g, k, budget);
    case Engine::Mis:
        if (k.is_infinite()) throw InvalidInput("the mis engine needs a finite k");
        return ss_mis(g, k.k(), budget);
    case Engine::Greedy2:
        if (k.is_infinite() || k.k() != 2) throw InvalidInput("the greedy2 engine only computes k = 2");
        return ss_greedy_2(g);
    case Engine::Oracle: break;
    }
    throw InvalidInput("unknown engine");
}

HalfInt dd_definition_oracle(const Genome& s, const Genome& d, SigmaIndex k) {
    const PairClassification cls = classify_pair(s, d);
    if (cls.kind != PairClass::OneTwoCognate || !cls.first_is_singular)
        throw InvalidInput("double distance needs a singular genome S and a duplicated genome D on the same genes");
    if (s.n_star() > 8) throw BudgetExceeded("definition oracle is limited to n* <= 8");
    const Genome d_check = singularize(d);
    std::optional<HalfInt> best;
    for (const Genome& b : enumerate_resolved_doublings(s)) {
        const HalfInt value = distance(b, d_check, k);
        if (!best || value < *best) best = value;
    }
    return *best;
}

HalfInt dd_greedy_2(const Genome& s, const Genome& d) {
    const PairClassification cls = classify_pair(s, d);
    if (cls.kind != PairClass::OneTwoCognate || !cls.first_is_singular)
        throw InvalidInput("double distance needs a singular genome S and a duplicated genome D on the same genes");
    auto intersection = [](const auto& doubled_once, const auto& other) {
        std::map<std::decay_t<decltype(other.front())>, std::int64_t> count;
        for (const auto& x : doubled_once) count[x] += 2;
        std::int64_t common = 0;
        for (const auto& x : other) {
            auto it = count.find(x);
            if (it != count.end() && it->second > 0) {
                --it->second;
                ++common;
            }
        }
        return common;
    };
    const std::int64_t adj = intersection(s.adjacencies(), d.adjacencies());
    const std::int64_t tel = intersection(s.telomeres(), d.telomeres());
    return HalfInt::from_twice(4 * static_cast<std::int64_t>(s.n_star()) - 2 * adj - tel);
}

} // namespace sigmak
