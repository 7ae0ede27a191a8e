#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sigmak/error.hpp"
#include "sigmak/mwis.hpp"
#include "sigmak/reduction.hpp"
#include "sigmak/solver.hpp"

using namespace sigmak;

namespace {

const Genome kThreeGeneS = parse_genome("[1 2 3]");
const Genome kThreeGeneD = parse_genome("[1 2 -3 1]\n[-3 2]");

std::int64_t brute_mwis(const std::vector<std::int64_t>& w, const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(w.size());
    std::int64_t best = 0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        bool independent = true;
        std::int64_t total = 0;
        for (int v = 0; v < n && independent; ++v) {
            if (!((mask >> v) & 1U)) continue;
            total += w[v];
            for (int u : adj[v])
                if ((mask >> u) & 1U) independent = false;
        }
        if (independent) best = std::max(best, total);
    }
    return best;
}

// Least distance over the singularized doublings, scored on plain breakpoint
// graphs built by the reference walker.
HalfInt reference_dd(const Genome& s, const Genome& d, int k) {
    const Genome d_check = singularize(d);
    std::optional<HalfInt> best;
    for (const Genome& b : enumerate_resolved_doublings(s)) {
        const HalfInt value = HalfInt(2 * static_cast<std::int64_t>(s.n_star())) -
                              test_oracles::sigma(test_oracles::breakpoint_census(b, d_check), k);
        if (!best || value < *best) best = value;
    }
    return *best;
}

} // namespace

TEST_CASE("independent sets against exhaustive search") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 14);
        const double density = 0.1 + 0.1 * static_cast<double>(rng() % 7);
        std::vector<std::int64_t> w(n);
        std::vector<std::vector<int>> adj(n);
        for (int v = 0; v < n; ++v) w[v] = 1 + static_cast<std::int64_t>(rng() % 3);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (std::uniform_real_distribution<double>(0, 1)(rng) < density) {
                    adj[a].push_back(b);
                    adj[b].push_back(a);
                }
        const MwisResult r = max_weight_independent_set(w, adj);
        CHECK(r.optimal);
        CHECK(r.weight == brute_mwis(w, adj));
        std::int64_t total = 0;
        for (int v : r.chosen) {
            total += w[v];
            for (int u : adj[v]) CHECK_FALSE(std::binary_search(r.chosen.begin(), r.chosen.end(), u));
        }
        CHECK(total == r.weight);
    }
}

TEST_CASE("independent set edge cases") {
    CHECK(max_weight_independent_set({}, {}).weight == 0);
    CHECK(max_weight_independent_set({5}, {{}}).chosen == std::vector<int>{0});
    CHECK_THROWS_AS(max_weight_independent_set({0}, {{}}), InvalidInput);
    // A sparse random graph on 80 vertices is not closed in one node.
    std::mt19937_64 rng(3);
    std::vector<std::vector<int>> adj(80);
    for (int a = 0; a < 80; ++a)
        for (int b = a + 1; b < 80; ++b)
            if (rng() % 20 == 0) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
    const std::vector<std::int64_t> unit(80, 1);
    const MwisResult cut = max_weight_independent_set(unit, adj, {1, 0});
    CHECK_FALSE(cut.optimal);
    const MwisResult full = max_weight_independent_set(unit, adj);
    CHECK(full.optimal);
    CHECK(cut.weight <= full.weight);
}

TEST_CASE("double distance of the three-gene example") {
    for (Engine e : {Engine::Naive, Engine::Mis}) {
        const SolveResult r = dd(kThreeGeneS, kThreeGeneD, SigmaIndex::finite(8), e);
        CHECK(r.dd == HalfInt(3));
        CHECK(r.score == HalfInt(3));
        CHECK(format_resolution(r.tau) == "01");
        CHECK(r.optimal);
    }
    CHECK(dd(kThreeGeneS, kThreeGeneD, SigmaIndex::finite(8), Engine::Oracle).dd == HalfInt(3));
    CHECK(reference_dd(kThreeGeneS, kThreeGeneD, 8) == HalfInt(3));
    CHECK(dd(kThreeGeneS, kThreeGeneD, SigmaIndex::finite(2), Engine::Greedy2).dd == HalfInt(4));
    CHECK(dd_greedy_2(kThreeGeneS, kThreeGeneD) == HalfInt(4));
}

TEST_CASE("engines agree on random [1·2]-cognate pairs") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const int n = 2 + static_cast<int>(seed % 3);
        const GenomePair p = random_cognate_pair(n, true, static_cast<int>(seed % 4), seed);
        const AmbiguousBreakpointGraph g = build_abg(p.first, singularize(p.second));
        HalfInt previous = HalfInt(2 * n + 1);
        for (int k : {2, 4, 6, 8}) {
            const SigmaIndex index = SigmaIndex::finite(k);
            const SolveResult naive = ss_naive(g, index);
            const SolveResult mis = ss_mis(g, k);
            const HalfInt want = reference_dd(p.first, p.second, k);
            CHECK(naive.dd == want);
            CHECK(mis.dd == want);
            CHECK(mis.optimal);
            CHECK(score(g, mis.tau, index) == mis.score);
            CHECK(dd_definition_oracle(p.first, p.second, index) == want);
            CHECK(want <= previous);
            previous = want;
        }
        const HalfInt inf = ss_naive(g, SigmaIndex::infinity()).dd;
        CHECK(inf == reference_dd(p.first, p.second, 0));
        CHECK(inf <= previous);
        CHECK(ss_greedy_2(g).dd == reference_dd(p.first, p.second, 2));
        CHECK(dd_greedy_2(p.first, p.second) == reference_dd(p.first, p.second, 2));
    }
}

TEST_CASE("naive engine is deterministic across thread counts") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const GenomePair p = random_cognate_pair(5, true, 3, seed);
        const AmbiguousBreakpointGraph g = build_abg(p.first, singularize(p.second));
        const SolveResult one = ss_naive(g, SigmaIndex::finite(4));
        for (unsigned t : {2U, 3U, 8U}) {
            SolveBudget budget;
            budget.threads = t;
            const SolveResult many = ss_naive(g, SigmaIndex::finite(4), budget);
            CHECK(many.tau == one.tau);
            CHECK(many.score == one.score);
        }
    }
}

TEST_CASE("budgets and input checks") {
    const AmbiguousBreakpointGraph flower = build_closed_flower(6);
    SolveBudget small;
    small.max_squares = 4;
    CHECK_THROWS_AS(ss_naive(flower, SigmaIndex::finite(12), small), BudgetExceeded);
    SolveBudget nodes;
    nodes.max_nodes = 3;
    CHECK_FALSE(ss_naive(flower, SigmaIndex::finite(12), nodes).optimal);
    CHECK_THROWS_AS(dd(kThreeGeneS, kThreeGeneD, SigmaIndex::infinity(), Engine::Mis), InvalidInput);
    CHECK_THROWS_AS(dd(kThreeGeneS, kThreeGeneD, SigmaIndex::finite(4), Engine::Greedy2), InvalidInput);
    CHECK_THROWS_AS(dd(kThreeGeneS, kThreeGeneS, SigmaIndex::finite(4), Engine::Naive), InvalidInput);
    CHECK_THROWS_AS(parse_engine("fast"), InvalidInput);
    CHECK(parse_engine("greedy2") == Engine::Greedy2);
}

TEST_CASE("closed flowers score two cycles") {
    for (int p = 3; p <= 6; ++p) {
        const AmbiguousBreakpointGraph f = build_closed_flower(p);
        CHECK(ss_mis(f, 2 * p).score == HalfInt(2));
        CHECK(ss_mis(f, 2 * p - 2).score == HalfInt(0));
        CHECK(ss_naive(f, SigmaIndex::finite(4 * p)).score == HalfInt(2));
    }
}

TEST_CASE("two-gene circular pair") {
    const Genome s = parse_genome("(1 2)");
    const Genome d = parse_genome("(1 -2 1 2)");
    // Two layouts times four labellings, but swapping both labels gives the
    // same genome again, so only four are distinct.
    CHECK(enumerate_resolved_doublings(s).size() == 4);
    const HalfInt want = reference_dd(s, d, 0);
    CHECK(dd(s, d, SigmaIndex::infinity(), Engine::Naive).dd == want);
    CHECK(dd(s, d, SigmaIndex::infinity(), Engine::Oracle).dd == want);
    CHECK(dd(s, d, SigmaIndex::finite(2), Engine::Greedy2).dd ==
          dd(s, d, SigmaIndex::finite(2), Engine::Mis).dd);
    CHECK(want == HalfInt(1));
    CHECK(ss_naive(build_abg(kThreeGeneS, singularize(kThreeGeneD)), SigmaIndex::finite(2)).score == HalfInt(2));
}
