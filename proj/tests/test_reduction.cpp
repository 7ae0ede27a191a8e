#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "sigmak/bp_graph.hpp"
#include "sigmak/error.hpp"
#include "sigmak/reduction.hpp"
#include "sigmak/solver.hpp"

using namespace sigmak;

namespace {

SatInstance example_formula() {
    std::ifstream in(SIGMAK_TEST_DATA "/example_formula.cnf");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_cnf(ss.str());
}

// Counted from the gadget layout: six core squares per variable and clause
// gadget, two per connector, one open flower of k/2+1 squares at every
// flower anchor, and (k-8)/2 squares, each with its own flower, spliced into
// every extended edge.
std::size_t counted_vertices(const SatStats& st, int k) {
    const std::size_t p = static_cast<std::size_t>(k / 2 + 1);
    const std::size_t ell = static_cast<std::size_t>((k - 8) / 2);
    const std::size_t flower = 4 * p;
    const std::size_t anchors = 2 * st.ttf_variables + 3 * st.tf_variables + st.occurrences + 3 * st.two_clauses;
    const std::size_t core = 24 * (st.variables + st.clauses) + 8 * st.occurrences;
    const std::size_t extended = st.variables + st.occurrences + st.clauses + st.three_clauses;
    return core + anchors * flower + extended * ell * (4 + flower);
}

using LabelEdge = std::set<std::string>;

std::set<LabelEdge> d_edges(const AmbiguousBreakpointGraph& g, const std::vector<std::string>& names) {
    std::set<LabelEdge> out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.d_mate(static_cast<int>(v)) >= 0) out.insert({names[v], names[g.d_mate(static_cast<int>(v))]});
    return out;
}

std::set<LabelEdge> square_edges(const AmbiguousBreakpointGraph& g, int q, int bit, const std::vector<std::string>& names) {
    std::set<LabelEdge> out;
    for (auto [x, y] : g.square(q).edges(bit)) out.insert({names[x], names[y]});
    return out;
}

std::vector<std::string> own_labels(const AmbiguousBreakpointGraph& g) {
    std::vector<std::string> out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) out.push_back(g.label(static_cast<int>(v)));
    return out;
}

// Checks that `back`, rebuilt from the extracted genomes, is the reduction
// graph under the extraction labels, and carries `tau` over to it.
std::optional<Resolution> transport(const Reduction& r, const ExtractedGenomes& ex, const AmbiguousBreakpointGraph& back,
                                    const Resolution& tau) {
    const std::vector<std::string> back_names = own_labels(back);
    if (d_edges(r.graph, ex.labels) != d_edges(back, back_names)) return std::nullopt;
    std::map<std::set<LabelEdge>, std::pair<int, int>> by_edges;
    for (std::size_t q = 0; q < back.square_count(); ++q)
        for (int bit : {0, 1}) by_edges[square_edges(back, static_cast<int>(q), bit, back_names)] = {static_cast<int>(q), bit};
    Resolution out(back.square_count(), 0);
    for (std::size_t q = 0; q < r.graph.square_count(); ++q) {
        const auto it = by_edges.find(square_edges(r.graph, static_cast<int>(q), tau[q], ex.labels));
        if (it == by_edges.end()) return std::nullopt;
        out[it->second.first] = static_cast<std::uint8_t>(it->second.second);
    }
    return out;
}

Assignment values(std::initializer_list<bool> v, std::size_t clauses) {
    return {std::vector<bool>(v), std::vector<std::optional<int>>(clauses)};
}

} // namespace

TEST_CASE("vertex counts of the example formula") {
    const SatInstance inst = example_formula();
    const SatStats st = sat_stats(inst);
    CHECK(counted_vertices(st, 8) == 944);
    CHECK(extended_edge_count(st) == 21);
    for (int k : {8, 10, 12, 14}) {
        const Reduction r = build_reduction(inst, k, Shape::Circular);
        CHECK(r.graph.vertex_count() == counted_vertices(st, k));
        CHECK(predicted_vertex_count(st, k) == counted_vertices(st, k));
        CHECK(r.graph.square_count() * 4 == r.graph.vertex_count());
        CHECK(r.graph.isolated_count() == 0);
        CHECK(r.p == k / 2 + 1);
        CHECK(r.ell == (k - 8) / 2);
        CHECK(r.bound == HalfInt(20));
    }
}

TEST_CASE("structure of the example formula") {
    const SatInstance inst = example_formula();
    for (int k : {8, 10, 12}) {
        for (Shape shape : {Shape::Circular, Shape::Linear}) {
            const Reduction r = build_reduction(inst, k, shape);
            const StructureReport rep = verify_structure(r);
            CHECK(rep.ok());
            CHECK(rep.short_candidates == 0);
            // Two per variable, one per literal position in a clause, and an
            // X and a Y cycle per connector.
            CHECK(rep.k_cycles == 2 * 4 + 3 * 11);
            CHECK(r.expected_cycles().size() == 41);
            CHECK(rep.unexpected_k_cycles == 0);
            CHECK(rep.missing_k_cycles == 0);
        }
    }
}

TEST_CASE("assignments and solutions of the example formula") {
    const SatInstance inst = example_formula();
    const Reduction r = build_reduction(inst, 8, Shape::Circular);
    const SigmaIndex k = SigmaIndex::finite(8);

    Assignment a = values({true, true, false, true}, 5);
    CHECK(score(r.graph, assignment_to_solution(r, a), k) == HalfInt(20));
    for (int w : {0, 1}) {
        a.witness[0] = w;
        const Resolution tau = assignment_to_solution(r, a);
        CHECK(score(r.graph, tau, k) == HalfInt(20));
        const auto back = solution_to_assignment(r, tau);
        REQUIRE(back.has_value());
        CHECK(back->values == a.values);
        CHECK(back->witness[0] == std::optional<int>(w));
    }

    // x2 = F leaves clause 4 (x2 or x3) unsatisfied.
    const Resolution broken = assignment_to_solution(r, values({true, false, false, true}, 5));
    CHECK(score(r.graph, broken, k) == HalfInt(19));

    Assignment bad = values({true, true, false, true}, 5);
    bad.witness[1] = 1; // x3 is false
    CHECK_THROWS_AS(assignment_to_solution(r, bad), InvalidInput);
    CHECK_THROWS_AS(assignment_to_solution(r, values({true}, 5)), InvalidInput);
    CHECK_FALSE(solution_to_assignment(r, Resolution(r.graph.square_count(), 1)).has_value());

    const SolveResult mis = ss_mis(r.graph, 8);
    CHECK(mis.score == HalfInt(20));
    CHECK(mis.optimal);
    const auto decoded = solution_to_assignment(r, mis.tau);
    REQUIRE(decoded.has_value());
    CHECK(satisfies(inst, decoded->values));
}

TEST_CASE("every satisfying assignment reaches the bound") {
    const SatInstance inst = example_formula();
    const Reduction r = build_reduction(inst, 10, Shape::Circular);
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
        std::vector<bool> v(4);
        for (int i = 0; i < 4; ++i) v[i] = (mask >> i) & 1U;
        const HalfInt s = score(r.graph, assignment_to_solution(r, {v, std::vector<std::optional<int>>(5)}),
                                SigmaIndex::finite(10));
        if (satisfies(inst, v)) CHECK(s == r.bound);
        else CHECK(s < r.bound);
    }
}

TEST_CASE("single gadgets have no short cycles") {
    for (int k : {8, 10}) {
        for (GadgetKind kind : {GadgetKind::VariableTtf, GadgetKind::VariableTf, GadgetKind::Connector,
                                GadgetKind::TwoClause, GadgetKind::ThreeClause}) {
            const Reduction r = build_single_gadget(kind, k);
            CHECK(r.graph.square_count() > 0);
            CHECK(enumerate_candidates(r.graph, k - 2).empty());
        }
    }
}

TEST_CASE("flower parity law") {
    for (int p = 3; p <= 10; ++p) {
        const FlowerReport rep = verify_flower(p);
        CHECK(rep.ok());
        CHECK(rep.resolutions == (std::size_t{1} << p));
    }
    CHECK_THROWS_AS(verify_flower(2), InvalidInput);
}

TEST_CASE("linear shape padding and extraction") {
    const SatInstance inst = example_formula();
    for (int k : {8, 10}) {
        const Reduction circ = build_reduction(inst, k, Shape::Circular);
        const Reduction lin = build_reduction(inst, k, Shape::Linear);
        const std::size_t nu = lin.graph.isolated_count();
        CHECK(nu == circ.graph.vertex_count());
        CHECK(lin.bound == circ.bound + HalfInt::from_twice(static_cast<std::int64_t>(nu)));
        CHECK(score_bound(inst, Shape::Linear, k) == lin.bound);

        const ExtractedGenomes ex = extract_genomes(lin);
        CHECK(ex.s.circular_count() == 0);
        CHECK(ex.d.circular_count() == 0);
        const PairClassification cls = classify_pair(ex.s, ex.d);
        CHECK(cls.kind == PairClass::OneTwoCognate);
        CHECK(cls.first_is_singular);
        const AmbiguousBreakpointGraph back = build_abg(ex.s, ex.d_check);
        CHECK(back.square_count() == lin.graph.square_count());
        CHECK(back.d_edge_count() == lin.graph.d_edge_count());
        CHECK(back.isolated_count() == lin.graph.isolated_count());
        const Resolution tau = assignment_to_solution(lin, values({true, true, false, true}, 5));
        const auto moved = transport(lin, ex, back, tau);
        REQUIRE(moved.has_value());
        CHECK(score(back, *moved, SigmaIndex::finite(k)) == lin.bound);
        CHECK(score(lin.graph, tau, SigmaIndex::finite(k)) == lin.bound);
    }
}

TEST_CASE("circular extraction round trip") {
    const Reduction r = build_reduction(example_formula(), 8, Shape::Circular);
    const ExtractedGenomes ex = extract_genomes(r);
    CHECK(ex.s.chromosomes().size() == 1);
    CHECK(ex.s.circular_count() == 1);
    CHECK(ex.s.n_star() == r.graph.square_count());
    CHECK(ex.labels.size() == r.graph.vertex_count());
    CHECK(classify_pair(ex.s, ex.d).kind == PairClass::OneTwoCognate);
    const AmbiguousBreakpointGraph back = build_abg(ex.s, ex.d_check);
    CHECK(back.square_count() == r.graph.square_count());
    CHECK(back.d_edge_count() == r.graph.d_edge_count());
    CHECK(back.isolated_count() == 0);
    const Resolution tau = assignment_to_solution(r, values({true, true, false, true}, 5));
    const auto moved = transport(r, ex, back, tau);
    REQUIRE(moved.has_value());
    CHECK(score(back, *moved, SigmaIndex::finite(8)) == HalfInt(20));
}

TEST_CASE("reduction input checks") {
    const SatInstance inst = example_formula();
    CHECK_THROWS_AS(build_reduction(inst, 6, Shape::Circular), InvalidInput);
    CHECK_THROWS_AS(build_reduction(inst, 9, Shape::Circular), InvalidInput);
    CHECK_THROWS_AS(build_reduction(SatInstance{2, {{1, 2}, {1, 2}}}, 8, Shape::Circular), InvalidInput);
    CHECK_THROWS_AS(build_closed_flower(0), InvalidInput);
}
