#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sigmak/genome.hpp"
#include "sigmak/half_int.hpp"

namespace sigmak {

enum class ComponentKind { Cycle, Path };

struct Component {
    ComponentKind kind = ComponentKind::Path;
    std::size_t length = 0; // edge count
    // Vertices in traversal order; a cycle does not repeat its first vertex.
    std::vector<int> vertices;
    // Path endpoints lacking an edge of the first / second colour (a 0-path
    // counts once on each side).
    int first_telomeres = 0;
    int second_telomeres = 0;
};

// Per-length component counts: c_i and p_j.
struct ComponentCensus {
    std::map<std::size_t, std::size_t> cycles;
    std::map<std::size_t, std::size_t> paths;

    void add(const Component& c);
    std::size_t total_cycles() const;
    std::size_t even_paths() const;

    // "{c2:1, p0:1, p4:1}"
    std::string str() const;

    bool operator==(const ComponentCensus&) const = default;
};

// Decomposes the union of two partial matchings on vertices 0..n-1 into
// alternating components. Paths are reported first, each walked from its
// lowest endpoint in increasing vertex order, then cycles from their lowest
// vertex following the first matching.
std::vector<Component> alternating_components(const std::vector<int>& first, const std::vector<int>& second);

// Even k >= 2 or unbounded.
class SigmaIndex {
public:
    static SigmaIndex finite(int k);
    static SigmaIndex infinity() { return SigmaIndex(); }
    // "inf" or an even integer >= 2.
    static SigmaIndex parse(const std::string& text);

    bool is_infinite() const { return k_ == 0; }
    int k() const { return k_; }
    std::string str() const;

    bool operator==(const SigmaIndex&) const = default;

private:
    SigmaIndex() = default;
    int k_ = 0;
};

// c_2 + ... + c_k + (p_0 + ... + p_{k-2}) / 2, or c + p_E / 2 when unbounded.
HalfInt sigma(const ComponentCensus& census, SigmaIndex k);

class BreakpointGraph {
public:
    // Vertex 2*i is the tail of genes[i], 2*i+1 its head.
    std::vector<GeneKey> genes;
    std::vector<int> first_mate;  // adjacencies of the first genome
    std::vector<int> second_mate; // adjacencies of the second genome
    std::vector<Component> components;

    Extremity vertex(int v) const;
    ComponentCensus census() const;
    std::size_t n_star() const { return genes.size(); }
};

BreakpointGraph build_breakpoint_graph(const Genome& s1, const Genome& s2);

// d_k = n* - sigma_k.
HalfInt distance(const Genome& s1, const Genome& s2, SigmaIndex k);

// Shortest DCJ sequence length found by breadth-first search over genomes.
// Throws BudgetExceeded after visiting `max_states` genomes.
int dcj_distance_bfs_oracle(const Genome& s1, const Genome& s2, std::size_t max_states = 1'000'000);

// DCJ distance from `source` to every layout over the same genes.
std::map<ExtremityLayout, int> dcj_distances_from(const ExtremityLayout& source, std::size_t max_states = 1'000'000);

} // namespace sigmak
