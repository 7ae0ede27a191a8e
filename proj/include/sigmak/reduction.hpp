#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sigmak/abg.hpp"
#include "sigmak/genome.hpp"
#include "sigmak/half_int.hpp"
#include "sigmak/sat.hpp"

namespace sigmak {

// Sorted (square, bit) list: the square choices one cycle depends on.
using SquarePattern = std::vector<std::pair<int, std::uint8_t>>;

// Square q resolved as in `pattern` for every entry of the pattern.
bool matches(const Resolution& tau, const SquarePattern& pattern);
void apply(Resolution& tau, const SquarePattern& pattern);

// Open p-flower hanging off two gadget vertices.
struct FlowerRecord {
    std::vector<int> squares;
    int p = 0;
    std::pair<int, int> anchor;
};

// Chain of squares spliced into a Ď-edge to lengthen the cycles using it.
struct ExtensionRecord {
    std::pair<int, int> edge; // outer endpoints of the original edge
    std::vector<int> squares;
};

struct VariableGadget {
    int variable = 0; // normalized index
    bool three_occurrences = false;
    std::array<int, 6> squares{};
    SquarePattern theta_true;
    SquarePattern theta_false;
    // Port paths: one per positive occurrence, then the negative one.
    std::vector<SquarePattern> true_ports;
    SquarePattern false_port;
};

struct ClauseGadget {
    int clause = 0; // 0-based
    std::array<int, 6> squares{};
    std::vector<SquarePattern> theta; // one per literal position
    std::vector<SquarePattern> ports; // port path per literal position
};

// Two squares sitting between one literal occurrence and its variable gadget
// (X side) or clause gadget (Y side).
struct ConnectorGadget {
    int clause = 0;
    int position = 0;
    int literal = 0;
    std::array<int, 2> squares{};
    SquarePattern x_side;
    SquarePattern y_side;
    SquarePattern x_cycle; // x_side plus the variable port path
    SquarePattern y_cycle; // y_side plus the clause port path
};

struct ExpectedCycle {
    std::string name; // "x2.true", "y1.theta3", "w4.2.x", ...
    SquarePattern pattern;
};

struct Reduction {
    SatInstance instance;
    SatStats stats;
    int k = 8;
    Shape shape = Shape::Circular;
    int p = 0;   // flower size, k/2 + 1
    int ell = 0; // squares per extension chain, (k - 8)/2
    AmbiguousBreakpointGraph graph;
    std::vector<VariableGadget> variables;
    std::vector<ClauseGadget> clauses;
    std::vector<ConnectorGadget> connectors;
    std::vector<FlowerRecord> flowers;
    std::vector<ExtensionRecord> extensions;
    HalfInt bound;

    // Every k-cycle the construction is meant to contain.
    std::vector<ExpectedCycle> expected_cycles() const;
};

// Vertex count of the unpadded graph predicted from the instance statistics.
std::size_t predicted_vertex_count(const SatStats& stats, int k);

// Extended Ď-edges: one per variable, connector and clause, plus one more
// per 3-clause.
std::size_t extended_edge_count(const SatStats& stats);

Reduction build_reduction(const SatInstance& normalized, int k, Shape shape);

enum class GadgetKind { VariableTtf, VariableTf, Connector, TwoClause, ThreeClause };

// One gadget with its flowers and extensions, ports left unconnected.
Reduction build_single_gadget(GadgetKind kind, int k);

// p squares joined in a ring: two 2p-cycles or one 4p-cycle.
AmbiguousBreakpointGraph build_closed_flower(int p);

// |X| + |Y| + ||Y||, plus half the padding in linear shape.
HalfInt score_bound(const SatInstance& normalized, Shape shape, int k);

struct ExtractedGenomes {
    Genome s;
    Genome d;
    Genome d_check;
    // Extremity label assigned to every explicit vertex of the graph.
    std::vector<std::string> labels;
};

// Circular: S = (1 2 ... n) with square i standing for the adjacency between
// genes i and i+1. Linear: S = [1 -2][3 -4]... with heads in squares and all
// tails telomeric on both sides (the isolated vertices).
ExtractedGenomes extract_genomes(const Reduction& r);

Resolution assignment_to_solution(const Reduction& r, const Assignment& a);
std::optional<Assignment> solution_to_assignment(const Reduction& r, const Resolution& tau);

struct StructureReport {
    std::size_t short_candidates = 0; // cycles/paths shorter than k
    std::size_t k_cycles = 0;
    std::size_t unexpected_k_cycles = 0;
    std::size_t missing_k_cycles = 0;
    std::size_t degree_violations = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

StructureReport verify_structure(const Reduction& r);

struct FlowerReport {
    int p = 0;
    std::size_t resolutions = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

FlowerReport verify_flower(int p);

} // namespace sigmak
