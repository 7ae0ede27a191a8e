#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sigmak/bp_graph.hpp"
#include "sigmak/genome.hpp"
#include "sigmak/half_int.hpp"

namespace sigmak {

// One bit per square: 0 selects E = {u-v, û-v̂}, 1 selects Ẽ = {u-v̂, û-v}.
using Resolution = std::vector<std::uint8_t>;

std::string format_resolution(const Resolution& tau); // "0110"
Resolution parse_resolution(const std::string& text);

// Vertices in cycle order u, v, û, v̂. The side between slots i and i+1
// (mod 4) belongs to the pair selected by bit i % 2.
struct Square {
    std::array<int, 4> vertices{};
    std::optional<Adjacency> source;

    int u() const { return vertices[0]; }
    int v() const { return vertices[1]; }
    int u_hat() const { return vertices[2]; }
    int v_hat() const { return vertices[3]; }

    // The two edges selected by `bit`.
    std::array<std::pair<int, int>, 2> edges(int bit) const;
    // Neighbour of the vertex in `slot` under `bit`.
    int partner(int slot, int bit) const;
};

class AmbiguousBreakpointGraph {
public:
    int add_vertex(std::string label = {});
    int add_square(std::array<int, 4> vertices, std::optional<Adjacency> source = std::nullopt);
    void add_d_edge(int a, int b);
    void add_isolated(std::size_t count) { isolated_ += count; }

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t isolated_count() const { return isolated_; }
    // Explicit vertices plus isolated ones: 4 n* for graphs built from genomes.
    std::size_t total_vertex_count() const { return labels_.size() + isolated_; }
    std::size_t square_count() const { return squares_.size(); }
    std::size_t d_edge_count() const;

    const std::vector<Square>& squares() const { return squares_; }
    const Square& square(int q) const { return squares_[q]; }
    const std::string& label(int v) const { return labels_[v]; }
    void set_label(int v, std::string label) { labels_[v] = std::move(label); }

    int square_of(int v) const { return square_of_[v]; }
    int slot_of(int v) const { return slot_of_[v]; }
    int d_mate(int v) const { return d_mate_[v]; }
    const std::vector<int>& d_mates() const { return d_mate_; }

    bool is_s_telomere(int v) const { return square_of_[v] < 0; }
    bool is_d_telomere(int v) const { return d_mate_[v] < 0; }

    // Square-edge partner of every vertex under `tau` (-1 for S-telomeres).
    std::vector<int> resolved_mates(const Resolution& tau) const;

private:
    std::vector<std::string> labels_;
    std::vector<Square> squares_;
    std::vector<int> square_of_;
    std::vector<int> slot_of_;
    std::vector<int> d_mate_;
    std::size_t isolated_ = 0;
};

// ABG(S, Ď): one square per adjacency of `s`, Ď-edges from the adjacencies
// of `d_check` (copy-indexed), isolated vertices for extremities telomeric
// in both genomes. Vertices are labelled with their extremity ("2h.a").
AmbiguousBreakpointGraph build_abg(const Genome& s, const Genome& d_check);

// Census of BG(tau, Ď), isolated vertices counted as 0-paths.
ComponentCensus resolve(const AmbiguousBreakpointGraph& g, const Resolution& tau);
std::vector<Component> resolved_components(const AmbiguousBreakpointGraph& g, const Resolution& tau);

// s_k(tau) = sigma_k of the resolved census.
HalfInt score(const AmbiguousBreakpointGraph& g, const Resolution& tau, SigmaIndex k);

struct Candidate {
    ComponentKind kind = ComponentKind::Cycle;
    std::size_t length = 0;
    std::vector<int> vertices; // traversal order
    // (square, bit) for every square entered through one of its edges; sorted.
    std::vector<std::pair<int, std::uint8_t>> required;

    // 1 for cycles, 1/2 for even paths.
    HalfInt weight() const { return kind == ComponentKind::Cycle ? HalfInt(1) : HalfInt::from_twice(1); }
};

// All alternating cycles of length <= k and even paths of length <= k-2.
// Cycles are reported once, from their least vertex leaving through a
// square edge; paths once, from their S-telomere end. The walk branches
// only at square edges, so the work is O(V * 2^(k/2)).
std::vector<Candidate> enumerate_candidates(const AmbiguousBreakpointGraph& g, int k);

// Shared vertex or contradictory square choices.
bool conflict(const Candidate& a, const Candidate& b);

// Graphviz text. Square edges are orange (solid for E, dashed for Ẽ),
// Ď-edges black; with `tau` only the selected square edges are drawn.
std::string to_dot(const AmbiguousBreakpointGraph& g, const std::optional<Resolution>& tau = std::nullopt);
std::string to_dot(const BreakpointGraph& g);

} // namespace sigmak
