#include "sigmak/abg.hpp"

#include <map>

#include "sigmak/error.hpp"

namespace sigmak {

std::string format_resolution(const Resolution& tau) {
    std::string out;
    out.reserve(tau.size());
    for (std::uint8_t bit : tau) out += bit ? '1' : '0';
    return out;
}

Resolution parse_resolution(const std::string& text) {
    Resolution tau;
    for (char c : text) {
        if (c != '0' && c != '1') throw InvalidInput("resolution must be a string of 0/1, got '" + text + "'");
        tau.push_back(c == '1');
    }
    return tau;
}

std::array<std::pair<int, int>, 2> Square::edges(int bit) const {
    const auto& x = vertices;
    if (bit == 0) return {{{x[0], x[1]}, {x[2], x[3]}}};
    return {{{x[1], x[2]}, {x[3], x[0]}}};
}

int Square::partner(int slot, int bit) const {
    return vertices[bit == slot % 2 ? (slot + 1) % 4 : (slot + 3) % 4];
}

int AmbiguousBreakpointGraph::add_vertex(std::string label) {
    const int id = static_cast<int>(labels_.size());
    if (label.empty()) label = "v" + std::to_string(id);
    labels_.push_back(std::move(label));
    square_of_.push_back(-1);
    slot_of_.push_back(-1);
    d_mate_.push_back(-1);
    return id;
}

int AmbiguousBreakpointGraph::add_square(std::array<int, 4> vertices, std::optional<Adjacency> source) {
    const int q = static_cast<int>(squares_.size());
    for (int i = 0; i < 4; ++i) {
        const int x = vertices[i];
        if (x < 0 || x >= static_cast<int>(labels_.size())) throw InvalidInput("square uses an unknown vertex");
        if (square_of_[x] >= 0) throw InvalidInput("vertex " + labels_[x] + " already belongs to a square");
        for (int j = 0; j < i; ++j)
            if (vertices[j] == x) throw InvalidInput("square vertices must be distinct");
    }
    for (int i = 0; i < 4; ++i) {
        square_of_[vertices[i]] = q;
        slot_of_[vertices[i]] = i;
    }
    squares_.push_back({vertices, source});
    return q;
}

void AmbiguousBreakpointGraph::add_d_edge(int a, int b) {
    const int n = static_cast<int>(labels_.size());
    if (a < 0 || b < 0 || a >= n || b >= n) throw InvalidInput("Ď-edge uses an unknown vertex");
    if (a == b) throw InvalidInput("Ď-edge must join two distinct vertices");
    if (d_mate_[a] >= 0 || d_mate_[b] >= 0)
        throw InvalidInput("vertex already has a Ď-edge: " + labels_[d_mate_[a] >= 0 ? a : b]);
    d_mate_[a] = b;
    d_mate_[b] = a;
}

std::size_t AmbiguousBreakpointGraph::d_edge_count() const {
    std::size_t count = 0;
    for (int m : d_mate_)
        if (m >= 0) ++count;
    return count / 2;
}

std::vector<int> AmbiguousBreakpointGraph::resolved_mates(const Resolution& tau) const {
    if (tau.size() != squares_.size())
        throw InvalidInput("resolution has " + std::to_string(tau.size()) + " bits for " +
                           std::to_string(squares_.size()) + " squares");
    std::vector<int> mate(labels_.size(), -1);
    for (std::size_t q = 0; q < squares_.size(); ++q) {
        for (auto [x, y] : squares_[q].edges(tau[q])) {
            mate[x] = y;
            mate[y] = x;
        }
    }
    return mate;
}

AmbiguousBreakpointGraph build_abg(const Genome& s, const Genome& d_check) {
    const PairClassification cls = classify_pair(s, d_check.erase_indices());
    if (cls.kind != PairClass::OneTwoCognate || !cls.first_is_singular)
        throw InvalidInput("ambiguous breakpoint graph needs a singular S and a duplicated D on the same genes");
    const std::set<int> ids = s.gene_ids();
    if (!d_check.is_singular() || d_check.gene_keys().size() != 2 * ids.size())
        throw InvalidInput("inconsistent copy indices: every gene needs exactly one copy a and one copy b");
    for (const GeneKey& key : d_check.gene_keys())
        if (key.copy == Copy::None) throw InvalidInput("inconsistent copy indices: unindexed gene in Ď");

    const std::set<Extremity> s_tel(s.telomeres().begin(), s.telomeres().end());
    const std::set<Extremity> d_tel(d_check.telomeres().begin(), d_check.telomeres().end());

    AmbiguousBreakpointGraph g;
    std::map<Extremity, int> vertex;
    for (int id : ids) {
        for (End end : {End::Tail, End::Head}) {
            for (Copy copy : {Copy::A, Copy::B}) {
                const Extremity e{id, end, copy};
                if (s_tel.count({id, end, Copy::None}) && d_tel.count(e)) {
                    g.add_isolated(1);
                    continue;
                }
                vertex[e] = g.add_vertex(to_string(e));
            }
        }
    }
    auto copy_of = [](Extremity e, Copy c) {
        e.copy = c;
        return e;
    };
    for (const Adjacency& a : s.adjacencies()) {
        g.add_square({vertex.at(copy_of(a.first, Copy::A)), vertex.at(copy_of(a.second, Copy::A)),
                      vertex.at(copy_of(a.first, Copy::B)), vertex.at(copy_of(a.second, Copy::B))},
                     a);
    }
    for (const Adjacency& a : d_check.adjacencies()) g.add_d_edge(vertex.at(a.first), vertex.at(a.second));
    return g;
}

std::vector<Component> resolved_components(const AmbiguousBreakpointGraph& g, const Resolution& tau) {
    return alternating_components(g.resolved_mates(tau), g.d_mates());
}

ComponentCensus resolve(const AmbiguousBreakpointGraph& g, const Resolution& tau) {
    ComponentCensus census;
    for (const Component& c : resolved_components(g, tau)) census.add(c);
    if (g.isolated_count() > 0) census.paths[0] += g.isolated_count();
    return census;
}

HalfInt score(const AmbiguousBreakpointGraph& g, const Resolution& tau, SigmaIndex k) {
    return sigma(resolve(g, tau), k);
}

} // namespace sigmak
