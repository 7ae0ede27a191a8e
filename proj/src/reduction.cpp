#include "sigmak/reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "sigmak/error.hpp"

namespace sigmak {

namespace {

using Local = std::initializer_list<std::pair<int, int>>; // (Q index 1..6, bit)

class Builder {
public:
    explicit Builder(Reduction& r) : r_(r), g_(r.graph) {}

    std::vector<int> add_squares(int count, const std::string& prefix) {
        std::vector<int> out;
        for (int q = 1; q <= count; ++q) {
            std::array<int, 4> v{};
            for (int s = 0; s < 4; ++s)
                v[s] = g_.add_vertex(prefix + ":q" + std::to_string(q) + "v" + std::to_string(s + 1));
            out.push_back(g_.add_square(v));
        }
        return out;
    }

    // Vertex v<slot> of square Q<q>, both 1-based as in the gadget tables.
    int at(const std::vector<int>& squares, int q, int slot) const { return g_.square(squares[q - 1]).vertices[slot - 1]; }

    // Plain Ď-edge, or a chain of ell squares when `extended`; returns the chain.
    std::vector<int> edge(int a, int b, bool extended = false) {
        if (!extended || r_.ell == 0) {
            g_.add_d_edge(a, b);
            return {};
        }
        const std::string prefix = "e" + std::to_string(r_.extensions.size() + 1);
        const std::vector<int> chain = add_squares(r_.ell, prefix);
        int from = a;
        for (int q : chain) {
            g_.add_d_edge(from, g_.square(q).vertices[3]);
            from = g_.square(q).vertices[2];
        }
        g_.add_d_edge(from, b);
        for (int q : chain) flower(g_.square(q).vertices[0], g_.square(q).vertices[1]);
        r_.extensions.push_back({{a, b}, chain});
        return chain;
    }

    // Open p-flower: squares (a, b, â, b̂) chained b_i - a_{i+1} and
    // b̂_i - â_{i+1} around the ring, with b_{p-1} - a_0 replaced by the
    // anchors x - a_0 and y - b_{p-1}.
    void flower(int x, int y) {
        const int p = r_.p;
        const std::vector<int> ring = add_squares(p, "f" + std::to_string(r_.flowers.size() + 1));
        auto vtx = [&](int i, int slot) { return g_.square(ring[i]).vertices[slot]; };
        for (int i = 0; i + 1 < p; ++i) g_.add_d_edge(vtx(i, 1), vtx(i + 1, 0));
        for (int i = 0; i < p; ++i) g_.add_d_edge(vtx(i, 3), vtx((i + 1) % p, 2));
        g_.add_d_edge(x, vtx(0, 0));
        g_.add_d_edge(y, vtx(p - 1, 1));
        r_.flowers.push_back({ring, p, {x, y}});
    }

    static SquarePattern pattern(const std::vector<int>& squares, Local local, const std::vector<int>& chain = {}) {
        SquarePattern out;
        for (auto [q, bit] : local) out.emplace_back(squares[q - 1], static_cast<std::uint8_t>(bit));
        for (int q : chain) out.emplace_back(q, std::uint8_t{0});
        std::sort(out.begin(), out.end());
        return out;
    }

    static SquarePattern join(const SquarePattern& a, const SquarePattern& b) {
        SquarePattern out = a;
        out.insert(out.end(), b.begin(), b.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    // The seven Ď-edges shared by variable and clause gadgets; returns the
    // chain on the Q2v1 - Q5v3 edge that both Θ-cycles traverse.
    std::vector<int> core_edges(const std::vector<int>& sq) {
        edge(at(sq, 1, 2), at(sq, 2, 4));
        edge(at(sq, 1, 1), at(sq, 4, 3));
        edge(at(sq, 2, 2), at(sq, 3, 4));
        std::vector<int> chain = edge(at(sq, 2, 1), at(sq, 5, 3), true);
        edge(at(sq, 3, 1), at(sq, 6, 3));
        edge(at(sq, 4, 2), at(sq, 5, 4));
        edge(at(sq, 5, 2), at(sq, 6, 4));
        return chain;
    }

    struct Ports {
        std::vector<std::pair<int, int>> pairs;
    };

    // Returns the ports T1, (T2), F.
    Ports variable(int index, bool three) {
        VariableGadget v;
        v.variable = index;
        v.three_occurrences = three;
        const std::vector<int> sq = add_squares(6, "x" + std::to_string(index));
        std::copy(sq.begin(), sq.end(), v.squares.begin());
        const std::vector<int> chain = core_edges(sq);
        flower(at(sq, 1, 4), at(sq, 4, 4));
        flower(at(sq, 3, 3), at(sq, 6, 1));
        Ports ports;
        ports.pairs.push_back({at(sq, 1, 3), at(sq, 2, 3)});
        v.true_ports.push_back(pattern(sq, {{1, 1}, {2, 0}}));
        if (three) {
            ports.pairs.push_back({at(sq, 4, 1), at(sq, 5, 1)});
            v.true_ports.push_back(pattern(sq, {{4, 0}, {5, 1}}));
        } else {
            flower(at(sq, 4, 1), at(sq, 5, 1));
        }
        ports.pairs.push_back({at(sq, 3, 2), at(sq, 6, 2)});
        v.false_port = pattern(sq, {{3, 0}, {6, 1}});
        v.theta_true = pattern(sq, {{2, 0}, {3, 1}, {5, 1}, {6, 0}}, chain);
        v.theta_false = pattern(sq, {{1, 0}, {2, 1}, {4, 1}, {5, 0}}, chain);
        r_.variables.push_back(std::move(v));
        return ports;
    }

    // Returns the ports X and Y.
    Ports connector(int clause, int position, int literal) {
        ConnectorGadget w;
        w.clause = clause;
        w.position = position;
        w.literal = literal;
        const std::vector<int> sq = add_squares(2, "w" + std::to_string(clause + 1) + "." + std::to_string(position + 1));
        w.squares = {sq[0], sq[1]};
        const std::vector<int> chain = edge(at(sq, 1, 4), at(sq, 2, 1), true);
        flower(at(sq, 1, 2), at(sq, 2, 3));
        w.x_side = pattern(sq, {{1, 1}, {2, 1}}, chain);
        w.y_side = pattern(sq, {{1, 0}, {2, 0}}, chain);
        r_.connectors.push_back(std::move(w));
        return {{{at(sq, 1, 1), at(sq, 2, 4)}, {at(sq, 1, 3), at(sq, 2, 2)}}};
    }

    // Returns one port per literal position.
    Ports clause(int index, int size) {
        ClauseGadget c;
        c.clause = index;
        const std::vector<int> sq = add_squares(6, "y" + std::to_string(index + 1));
        std::copy(sq.begin(), sq.end(), c.squares.begin());
        const std::vector<int> chain = core_edges(sq);
        c.theta.push_back(pattern(sq, {{1, 0}, {2, 1}, {4, 1}, {5, 0}}, chain));
        c.theta.push_back(pattern(sq, {{2, 0}, {3, 1}, {5, 1}, {6, 0}}, chain));
        Ports ports;
        if (size == 2) {
            flower(at(sq, 1, 3), at(sq, 4, 1));
            flower(at(sq, 2, 3), at(sq, 3, 3));
            flower(at(sq, 3, 2), at(sq, 6, 2));
            ports.pairs = {{at(sq, 1, 4), at(sq, 4, 4)}, {at(sq, 5, 1), at(sq, 6, 1)}};
            c.ports = {pattern(sq, {{1, 1}, {4, 0}}), pattern(sq, {{5, 0}, {6, 1}})};
        } else {
            edge(at(sq, 3, 2), at(sq, 4, 4));
            const std::vector<int> chain3 = edge(at(sq, 1, 4), at(sq, 6, 2), true);
            c.theta.push_back(pattern(sq, {{1, 1}, {3, 0}, {4, 0}, {6, 1}}, chain3));
            ports.pairs = {{at(sq, 1, 3), at(sq, 2, 3)}, {at(sq, 5, 1), at(sq, 6, 1)}, {at(sq, 3, 3), at(sq, 4, 1)}};
            c.ports = {pattern(sq, {{1, 1}, {2, 0}}), pattern(sq, {{5, 0}, {6, 1}}), pattern(sq, {{3, 1}, {4, 1}})};
        }
        r_.clauses.push_back(std::move(c));
        return ports;
    }

    void connect(std::pair<int, int> a, std::pair<int, int> b) {
        g_.add_d_edge(a.first, b.first);
        g_.add_d_edge(a.second, b.second);
    }

private:
    Reduction& r_;
    AmbiguousBreakpointGraph& g_;
};

void check_k(int k) {
    if (k < 8 || k % 2 != 0) throw InvalidInput("reduction needs an even k >= 8, got " + std::to_string(k));
}

Reduction empty_reduction(int k, Shape shape) {
    check_k(k);
    Reduction r;
    r.k = k;
    r.shape = shape;
    r.p = k / 2 + 1;
    r.ell = (k - 8) / 2;
    return r;
}

} // namespace

bool matches(const Resolution& tau, const SquarePattern& pattern) {
    return std::all_of(pattern.begin(), pattern.end(), [&](const auto& e) { return tau.at(e.first) == e.second; });
}

void apply(Resolution& tau, const SquarePattern& pattern) {
    for (auto [q, bit] : pattern) tau.at(q) = bit;
}

std::vector<ExpectedCycle> Reduction::expected_cycles() const {
    std::vector<ExpectedCycle> out;
    for (const VariableGadget& v : variables) {
        const std::string name = "x" + std::to_string(v.variable);
        out.push_back({name + ".true", v.theta_true});
        out.push_back({name + ".false", v.theta_false});
    }
    for (const ClauseGadget& c : clauses)
        for (std::size_t i = 0; i < c.theta.size(); ++i)
            out.push_back({"y" + std::to_string(c.clause + 1) + ".theta" + std::to_string(i + 1), c.theta[i]});
    for (const ConnectorGadget& w : connectors) {
        const std::string name = "w" + std::to_string(w.clause + 1) + "." + std::to_string(w.position + 1);
        if (!w.x_cycle.empty()) out.push_back({name + ".x", w.x_cycle});
        if (!w.y_cycle.empty()) out.push_back({name + ".y", w.y_cycle});
    }
    return out;
}

std::size_t extended_edge_count(const SatStats& stats) {
    return static_cast<std::size_t>(stats.variables + stats.occurrences + stats.clauses + stats.three_clauses);
}

std::size_t predicted_vertex_count(const SatStats& stats, int k) {
    check_k(k);
    const std::size_t p = static_cast<std::size_t>(k / 2 + 1);
    const std::size_t ell = static_cast<std::size_t>((k - 8) / 2);
    const std::size_t flower = 4 * p;
    std::size_t total = 0;
    total += static_cast<std::size_t>(stats.ttf_variables) * (24 + 2 * flower);
    total += static_cast<std::size_t>(stats.tf_variables) * (24 + 3 * flower);
    total += static_cast<std::size_t>(stats.occurrences) * (8 + flower);
    total += static_cast<std::size_t>(stats.two_clauses) * (24 + 3 * flower);
    total += static_cast<std::size_t>(stats.three_clauses) * 24;
    total += ell * extended_edge_count(stats) * (4 + flower);
    return total;
}

Reduction build_reduction(const SatInstance& normalized, int k, Shape shape) {
    if (!is_normalized(normalized)) throw InvalidInput("reduction needs a normalized (2,3)-SAT instance");
    Reduction r = empty_reduction(k, shape);
    r.instance = normalized;
    r.stats = sat_stats(normalized);
    Builder b(r);

    // Port of each literal occurrence on its variable gadget.
    std::vector<Builder::Ports> variable_ports;
    for (int v = 1; v <= normalized.variable_count; ++v) {
        int count = 0;
        for (const auto& clause : normalized.clauses)
            count += static_cast<int>(std::count_if(clause.begin(), clause.end(), [&](int l) { return std::abs(l) == v; }));
        variable_ports.push_back(b.variable(v, count == 3));
    }
    std::vector<Builder::Ports> clause_ports;
    for (std::size_t c = 0; c < normalized.clauses.size(); ++c)
        clause_ports.push_back(b.clause(static_cast<int>(c), static_cast<int>(normalized.clauses[c].size())));

    std::vector<int> positive_seen(normalized.variable_count, 0);
    for (std::size_t c = 0; c < normalized.clauses.size(); ++c) {
        const auto& clause = normalized.clauses[c];
        for (std::size_t j = 0; j < clause.size(); ++j) {
            const int lit = clause[j];
            const int v = std::abs(lit);
            const Builder::Ports w = b.connector(static_cast<int>(c), static_cast<int>(j), lit);
            ConnectorGadget& record = r.connectors.back();
            const VariableGadget& var = r.variables[v - 1];
            const auto& ports = variable_ports[v - 1].pairs;
            if (lit > 0) {
                const int which = positive_seen[v - 1]++;
                b.connect(w.pairs[0], ports[which]);
                record.x_cycle = Builder::join(record.x_side, var.true_ports[which]);
            } else {
                b.connect(w.pairs[0], ports.back());
                record.x_cycle = Builder::join(record.x_side, var.false_port);
            }
            b.connect(w.pairs[1], clause_ports[c].pairs[j]);
            record.y_cycle = Builder::join(record.y_side, r.clauses[c].ports[j]);
        }
    }

    r.bound = HalfInt(r.stats.variables + r.stats.clauses + r.stats.occurrences);
    if (shape == Shape::Linear) {
        const std::size_t nu = r.graph.vertex_count();
        r.graph.add_isolated(nu);
        r.bound += HalfInt::from_twice(static_cast<std::int64_t>(nu));
    }
    return r;
}

Reduction build_single_gadget(GadgetKind kind, int k) {
    Reduction r = empty_reduction(k, Shape::Circular);
    Builder b(r);
    switch (kind) {
    case GadgetKind::VariableTtf: b.variable(1, true); break;
    case GadgetKind::VariableTf: b.variable(1, false); break;
    case GadgetKind::Connector: b.connector(0, 0, 1); break;
    case GadgetKind::TwoClause: b.clause(0, 2); break;
    case GadgetKind::ThreeClause: b.clause(0, 3); break;
    }
    return r;
}

AmbiguousBreakpointGraph build_closed_flower(int p) {
    if (p < 1) throw InvalidInput("flower needs at least one square");
    AmbiguousBreakpointGraph g;
    std::vector<int> ring;
    for (int i = 0; i < p; ++i) {
        std::array<int, 4> v{};
        static const char* names[] = {"a", "b", "a^", "b^"};
        for (int s = 0; s < 4; ++s) v[s] = g.add_vertex(names[s] + std::to_string(i));
        ring.push_back(g.add_square(v));
    }
    for (int i = 0; i < p; ++i) {
        g.add_d_edge(g.square(ring[i]).vertices[1], g.square(ring[(i + 1) % p]).vertices[0]);
        g.add_d_edge(g.square(ring[i]).vertices[3], g.square(ring[(i + 1) % p]).vertices[2]);
    }
    return g;
}

HalfInt score_bound(const SatInstance& normalized, Shape shape, int k) {
    if (!is_normalized(normalized)) throw InvalidInput("score bound needs a normalized (2,3)-SAT instance");
    const SatStats s = sat_stats(normalized);
    HalfInt bound(s.variables + s.clauses + s.occurrences);
    if (shape == Shape::Linear) bound += HalfInt::from_twice(static_cast<std::int64_t>(predicted_vertex_count(s, k)));
    return bound;
}

ExtractedGenomes extract_genomes(const Reduction& r) {
    const AmbiguousBreakpointGraph& g = r.graph;
    const int squares = static_cast<int>(g.square_count());
    if (squares == 0) throw InvalidInput("cannot extract genomes from a graph without squares");
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.square_of(static_cast<int>(v)) < 0)
            throw InvalidInput("cannot extract genomes: vertex " + g.label(static_cast<int>(v)) + " lies in no square");

    std::vector<Extremity> extremity(g.vertex_count());
    std::vector<Chromosome> s_chromosomes;
    int genes = 0;
    if (r.shape == Shape::Circular) {
        if (g.isolated_count() != 0) throw InvalidInput("circular extraction needs a graph without isolated vertices");
        genes = squares;
        Chromosome ring{Shape::Circular, {}};
        for (int i = 1; i <= genes; ++i) ring.genes.push_back({i, Orientation::Forward, Copy::None});
        s_chromosomes.push_back(std::move(ring));
        for (int q = 0; q < squares; ++q) {
            const auto& v = g.square(q).vertices;
            const int left = q + 1;
            const int right = q + 1 == genes ? 1 : q + 2;
            extremity[v[0]] = {left, End::Head, Copy::A};
            extremity[v[1]] = {right, End::Tail, Copy::A};
            extremity[v[2]] = {left, End::Head, Copy::B};
            extremity[v[3]] = {right, End::Tail, Copy::B};
        }
    } else {
        if (g.isolated_count() != g.vertex_count())
            throw InvalidInput("linear extraction needs as many isolated vertices as explicit ones (got " +
                               std::to_string(g.isolated_count()) + " and " + std::to_string(g.vertex_count()) + ")");
        genes = 2 * squares;
        for (int q = 0; q < squares; ++q) {
            const int first = 2 * q + 1;
            const int second = 2 * q + 2;
            s_chromosomes.push_back({Shape::Linear,
                                     {{first, Orientation::Forward, Copy::None}, {second, Orientation::Reverse, Copy::None}}});
            const auto& v = g.square(q).vertices;
            extremity[v[0]] = {first, End::Head, Copy::A};
            extremity[v[1]] = {second, End::Head, Copy::A};
            extremity[v[2]] = {first, End::Head, Copy::B};
            extremity[v[3]] = {second, End::Head, Copy::B};
        }
    }

    ExtremityLayout layout;
    for (int id = 1; id <= genes; ++id) {
        layout.genes.push_back({id, Copy::A});
        layout.genes.push_back({id, Copy::B});
    }
    layout.mate.assign(4 * static_cast<std::size_t>(genes), -1);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const int mate = g.d_mate(static_cast<int>(v));
        if (mate >= 0) layout.mate[layout.index_of(extremity[v])] = layout.index_of(extremity[mate]);
    }

    std::vector<std::string> labels;
    for (const Extremity& e : extremity) labels.push_back(to_string(e));
    Genome d_check = layout.to_genome();
    Genome d = d_check.erase_indices();
    return {Genome(std::move(s_chromosomes)), std::move(d), std::move(d_check), std::move(labels)};
}

namespace {

std::vector<int> witnesses(const Reduction& r, const Assignment& a) {
    const SatInstance& inst = r.instance;
    if (static_cast<int>(a.values.size()) != inst.variable_count)
        throw InvalidInput("assignment has " + std::to_string(a.values.size()) + " values for " +
                           std::to_string(inst.variable_count) + " variables");
    if (!a.witness.empty() && a.witness.size() != inst.clauses.size())
        throw InvalidInput("witness list must have one entry per clause");
    auto satisfied = [&](int lit) { return a.values[std::abs(lit) - 1] == (lit > 0); };
    std::vector<int> out;
    for (std::size_t c = 0; c < inst.clauses.size(); ++c) {
        const auto& clause = inst.clauses[c];
        if (!a.witness.empty() && a.witness[c]) {
            const int w = *a.witness[c];
            if (w < 0 || w >= static_cast<int>(clause.size()) || !satisfied(clause[w]))
                throw InvalidInput("witness of clause " + std::to_string(c + 1) + " is not a satisfied literal");
            out.push_back(w);
            continue;
        }
        int w = 0;
        for (std::size_t j = 0; j < clause.size(); ++j) {
            if (satisfied(clause[j])) {
                w = static_cast<int>(j);
                break;
            }
        }
        out.push_back(w);
    }
    return out;
}

} // namespace

Resolution assignment_to_solution(const Reduction& r, const Assignment& a) {
    const std::vector<int> witness = witnesses(r, a);
    Resolution tau(r.graph.square_count(), 0);
    for (const VariableGadget& v : r.variables) {
        if (a.values[v.variable - 1]) {
            apply(tau, v.theta_true);
            for (const SquarePattern& port : v.true_ports) apply(tau, port);
        } else {
            apply(tau, v.theta_false);
            apply(tau, v.false_port);
        }
    }
    for (const ClauseGadget& c : r.clauses) {
        const int w = witness[c.clause];
        apply(tau, c.theta[w]);
        for (std::size_t j = 0; j < c.ports.size(); ++j)
            if (static_cast<int>(j) != w) apply(tau, c.ports[j]);
    }
    for (const ConnectorGadget& w : r.connectors) apply(tau, w.position == witness[w.clause] ? w.x_side : w.y_side);
    return tau;
}

std::optional<Assignment> solution_to_assignment(const Reduction& r, const Resolution& tau) {
    if (tau.size() != r.graph.square_count()) return std::nullopt;
    Assignment a;
    a.values.assign(r.instance.variable_count, false);
    for (const VariableGadget& v : r.variables) {
        if (matches(tau, v.theta_true)) a.values[v.variable - 1] = true;
        else if (!matches(tau, v.theta_false)) return std::nullopt;
    }
    for (const ClauseGadget& c : r.clauses) {
        std::optional<int> found;
        for (std::size_t i = 0; i < c.theta.size() && !found; ++i)
            if (matches(tau, c.theta[i])) found = static_cast<int>(i);
        if (!found) return std::nullopt;
        a.witness.push_back(found);
    }
    for (const ConnectorGadget& w : r.connectors)
        if (!matches(tau, w.x_side) && !matches(tau, w.y_side)) return std::nullopt;
    return a;
}

StructureReport verify_structure(const Reduction& r) {
    const AmbiguousBreakpointGraph& g = r.graph;
    StructureReport report;

    report.short_candidates = enumerate_candidates(g, r.k - 2).size();
    if (report.short_candidates)
        report.violations.push_back(std::to_string(report.short_candidates) + " alternating cycles or paths shorter than " +
                                    std::to_string(r.k));

    std::map<SquarePattern, std::vector<std::string>> expected;
    for (ExpectedCycle& e : r.expected_cycles()) expected[e.pattern].push_back(e.name);
    std::map<SquarePattern, std::size_t> found;
    for (const Candidate& c : enumerate_candidates(g, r.k)) {
        if (c.kind != ComponentKind::Cycle || c.length != static_cast<std::size_t>(r.k)) continue;
        ++report.k_cycles;
        ++found[c.required];
        if (!expected.count(c.required)) {
            ++report.unexpected_k_cycles;
            report.violations.push_back("unexpected " + std::to_string(r.k) + "-cycle through " + g.label(c.vertices[0]));
        }
    }
    for (const auto& [pattern, names] : expected) {
        const std::size_t seen = found.count(pattern) ? found[pattern] : 0;
        if (seen != names.size()) {
            ++report.missing_k_cycles;
            report.violations.push_back("expected cycle " + names.front() + " found " + std::to_string(seen) + " times");
        }
    }

    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const int x = static_cast<int>(v);
        if (g.square_of(x) < 0 || g.d_mate(x) < 0) {
            ++report.degree_violations;
            report.violations.push_back("vertex " + g.label(x) + " does not have degree 3");
        }
    }

    const SatStats& s = r.stats;
    auto expect = [&](const std::string& what, std::size_t got, std::size_t want) {
        if (got != want)
            report.violations.push_back(what + ": " + std::to_string(got) + " instead of " + std::to_string(want));
    };
    expect("variable gadgets", r.variables.size(), static_cast<std::size_t>(s.variables));
    expect("clause gadgets", r.clauses.size(), static_cast<std::size_t>(s.clauses));
    expect("connector gadgets", r.connectors.size(), static_cast<std::size_t>(s.occurrences));
    const std::size_t m = r.ell > 0 ? extended_edge_count(s) : 0;
    expect("extension chains", r.extensions.size(), m);
    expect("flowers", r.flowers.size(),
           static_cast<std::size_t>(2 * s.ttf_variables + 3 * s.tf_variables + s.occurrences + 3 * s.two_clauses) +
               m * static_cast<std::size_t>(r.ell));
    for (const FlowerRecord& f : r.flowers) expect("flower size", static_cast<std::size_t>(f.p), static_cast<std::size_t>(r.p));
    for (const ExtensionRecord& e : r.extensions)
        expect("extension length", e.squares.size(), static_cast<std::size_t>(r.ell));
    expect("vertices", g.vertex_count(), predicted_vertex_count(s, r.k));
    expect("isolated vertices", g.isolated_count(), r.shape == Shape::Linear ? g.vertex_count() : 0);
    return report;
}

FlowerReport verify_flower(int p) {
    if (p < 3 || p > 10) throw InvalidInput("flower check supports 3 <= p <= 10");
    const AmbiguousBreakpointGraph g = build_closed_flower(p);
    FlowerReport report;
    report.p = p;
    for (std::uint32_t mask = 0; mask < (1U << p); ++mask) {
        Resolution tau(p);
        for (int i = 0; i < p; ++i) tau[i] = (mask >> i) & 1U;
        ++report.resolutions;
        std::vector<std::size_t> cycles;
        bool other = false;
        for (const Component& c : resolved_components(g, tau)) {
            if (c.kind == ComponentKind::Cycle) cycles.push_back(c.length);
            else other = true;
        }
        const bool even = __builtin_popcount(mask) % 2 == 0;
        const std::vector<std::size_t> want =
            even ? std::vector<std::size_t>{2 * static_cast<std::size_t>(p), 2 * static_cast<std::size_t>(p)}
                 : std::vector<std::size_t>{4 * static_cast<std::size_t>(p)};
        if (other || cycles != want) report.violations.push_back("resolution " + format_resolution(tau) + " breaks the parity law");
    }
    return report;
}

} // namespace sigmak
