#pragma once

#include <cstdint>
#include <string>

#include "sigmak/abg.hpp"
#include "sigmak/bp_graph.hpp"
#include "sigmak/genome.hpp"
#include "sigmak/half_int.hpp"

namespace sigmak {

enum class Engine { Naive, Mis, Greedy2, Oracle };

std::string to_string(Engine e);
Engine parse_engine(const std::string& text);

struct SolveBudget {
    std::uint64_t max_nodes = 0; // 0 = unlimited
    std::uint64_t max_ms = 0;    // 0 = unlimited
    std::size_t max_squares = 25; // naive engine enumerates 2^squares resolutions
    unsigned threads = 1;         // naive engine only
};

struct SolveStats {
    std::uint64_t nodes = 0;
    std::size_t candidates = 0;
    double wall_ms = 0;
};

struct SolveResult {
    HalfInt score;  // ss_k
    HalfInt dd;     // 2 n* - ss_k
    Resolution tau; // witness; empty for the oracle engine
    bool optimal = true;
    Engine engine = Engine::Naive;
    SolveStats stats;
};

// Exhaustive maximum of score(g, tau, k) over all resolutions. Among equal
// scores the lexicographically least tau (square 0 first) wins, for any
// thread count.
SolveResult ss_naive(const AmbiguousBreakpointGraph& g, SigmaIndex k, const SolveBudget& budget = {});

// Candidate cycles and even paths, conflict graph, weighted independent set.
// Squares no chosen candidate constrains are resolved with bit 0.
SolveResult ss_mis(const AmbiguousBreakpointGraph& g, int k, const SolveBudget& budget = {});

// Per square, the resolution closing more 2-cycles (ties: bit 0). Exact for k = 2.
SolveResult ss_greedy_2(const AmbiguousBreakpointGraph& g);

// dd_k(S, D) with Ď = singularize(D).
SolveResult dd(const Genome& s, const Genome& d, SigmaIndex k, Engine engine, const SolveBudget& budget = {});

// min over B in the singularized doubling of S of d_k(B, Ď), computed from
// breakpoint graphs only.
HalfInt dd_definition_oracle(const Genome& s, const Genome& d, SigmaIndex k);

// 2 n* - |A(2S) ∩ A(D)| - |T(2S) ∩ T(D)| / 2 with multiset intersections.
HalfInt dd_greedy_2(const Genome& s, const Genome& d);

} // namespace sigmak
