#include "sigmak/bp_graph.hpp"

#include <deque>

#include "sigmak/error.hpp"

namespace sigmak {

void ComponentCensus::add(const Component& c) {
    if (c.kind == ComponentKind::Cycle) ++cycles[c.length];
    else ++paths[c.length];
}

std::size_t ComponentCensus::total_cycles() const {
    std::size_t total = 0;
    for (const auto& [len, count] : cycles) total += count;
    return total;
}

std::size_t ComponentCensus::even_paths() const {
    std::size_t total = 0;
    for (const auto& [len, count] : paths)
        if (len % 2 == 0) total += count;
    return total;
}

std::string ComponentCensus::str() const {
    std::string out = "{";
    auto append = [&out](char tag, std::size_t len, std::size_t count) {
        if (out.size() > 1) out += ", ";
        out += tag + std::to_string(len) + ":" + std::to_string(count);
    };
    for (const auto& [len, count] : cycles) append('c', len, count);
    for (const auto& [len, count] : paths) append('p', len, count);
    return out + "}";
}

std::vector<Component> alternating_components(const std::vector<int>& first, const std::vector<int>& second) {
    const int n = static_cast<int>(first.size());
    std::vector<bool> visited(n, false);
    std::vector<Component> out;

    for (int start = 0; start < n; ++start) {
        if (visited[start] || (first[start] >= 0 && second[start] >= 0)) continue;
        Component c;
        c.kind = ComponentKind::Path;
        // Leave the endpoint through whichever edge it has.
        bool use_first = first[start] >= 0;
        int v = start;
        while (true) {
            visited[v] = true;
            c.vertices.push_back(v);
            const int next = use_first ? first[v] : second[v];
            if (next < 0) break;
            ++c.length;
            v = next;
            use_first = !use_first;
        }
        for (int end : {c.vertices.front(), c.vertices.back()}) {
            if (first[end] < 0) ++c.first_telomeres;
            if (second[end] < 0) ++c.second_telomeres;
        }
        if (c.length == 0) {
            c.first_telomeres = 1;
            c.second_telomeres = 1;
        }
        out.push_back(std::move(c));
    }
    for (int start = 0; start < n; ++start) {
        if (visited[start]) continue;
        Component c;
        c.kind = ComponentKind::Cycle;
        bool use_first = true;
        int v = start;
        do {
            visited[v] = true;
            c.vertices.push_back(v);
            v = use_first ? first[v] : second[v];
            use_first = !use_first;
            ++c.length;
        } while (v != start);
        out.push_back(std::move(c));
    }
    return out;
}

SigmaIndex SigmaIndex::finite(int k) {
    if (k < 2 || k % 2 != 0) throw InvalidInput("k must be an even integer >= 2, got " + std::to_string(k));
    SigmaIndex s;
    s.k_ = k;
    return s;
}

SigmaIndex SigmaIndex::parse(const std::string& text) {
    if (text == "inf" || text == "infinity") return infinity();
    std::size_t used = 0;
    int k = 0;
    try {
        k = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw InvalidInput("k must be an even integer or 'inf', got '" + text + "'");
    }
    if (used != text.size()) throw InvalidInput("k must be an even integer or 'inf', got '" + text + "'");
    return finite(k);
}

std::string SigmaIndex::str() const {
    return is_infinite() ? "inf" : std::to_string(k_);
}

HalfInt sigma(const ComponentCensus& census, SigmaIndex k) {
    std::int64_t twice = 0;
    for (const auto& [len, count] : census.cycles)
        if (k.is_infinite() || len <= static_cast<std::size_t>(k.k())) twice += 2 * static_cast<std::int64_t>(count);
    for (const auto& [len, count] : census.paths)
        if (len % 2 == 0 && (k.is_infinite() || len + 2 <= static_cast<std::size_t>(k.k())))
            twice += static_cast<std::int64_t>(count);
    return HalfInt::from_twice(twice);
}

Extremity BreakpointGraph::vertex(int v) const {
    const GeneKey& g = genes[v / 2];
    return {g.id, v % 2 == 0 ? End::Tail : End::Head, g.copy};
}

ComponentCensus BreakpointGraph::census() const {
    ComponentCensus c;
    for (const Component& comp : components) c.add(comp);
    return c;
}

BreakpointGraph build_breakpoint_graph(const Genome& s1, const Genome& s2) {
    if (classify_pair(s1, s2).kind != PairClass::Canonical)
        throw InvalidInput("breakpoint graph needs a canonical pair (two singular genomes on the same genes)");
    const ExtremityLayout l1 = ExtremityLayout::from_genome(s1);
    const ExtremityLayout l2 = ExtremityLayout::from_genome(s2);
    BreakpointGraph g;
    g.genes = l1.genes;
    g.first_mate = l1.mate;
    g.second_mate = l2.mate;
    g.components = alternating_components(g.first_mate, g.second_mate);
    return g;
}

HalfInt distance(const Genome& s1, const Genome& s2, SigmaIndex k) {
    const BreakpointGraph g = build_breakpoint_graph(s1, s2);
    return HalfInt(static_cast<std::int64_t>(g.n_star())) - sigma(g.census(), k);
}

std::map<ExtremityLayout, int> dcj_distances_from(const ExtremityLayout& source, std::size_t max_states) {
    std::map<ExtremityLayout, int> dist{{source, 0}};
    std::deque<const ExtremityLayout*> queue{&dist.begin()->first};
    while (!queue.empty()) {
        const ExtremityLayout& current = *queue.front();
        queue.pop_front();
        const int d = dist.at(current);
        for (ExtremityLayout& next : dcj_neighbours(current)) {
            auto [it, inserted] = dist.try_emplace(std::move(next), d + 1);
            if (!inserted) continue;
            if (dist.size() > max_states) throw BudgetExceeded("DCJ search visited more than the state budget");
            queue.push_back(&it->first);
        }
    }
    return dist;
}

int dcj_distance_bfs_oracle(const Genome& s1, const Genome& s2, std::size_t max_states) {
    if (classify_pair(s1, s2).kind != PairClass::Canonical)
        throw InvalidInput("DCJ oracle needs a canonical pair");
    if (s1.n_star() > 5) throw BudgetExceeded("DCJ oracle is limited to n* <= 5");
    const ExtremityLayout source = ExtremityLayout::from_genome(s1);
    const ExtremityLayout target = ExtremityLayout::from_genome(s2);
    if (source == target) return 0;
    std::map<ExtremityLayout, int> dist{{source, 0}};
    std::deque<const ExtremityLayout*> queue{&dist.begin()->first};
    while (!queue.empty()) {
        const ExtremityLayout& current = *queue.front();
        queue.pop_front();
        const int d = dist.at(current);
        for (ExtremityLayout& next : dcj_neighbours(current)) {
            if (next == target) return d + 1;
            auto [it, inserted] = dist.try_emplace(std::move(next), d + 1);
            if (!inserted) continue;
            if (dist.size() > max_states) throw BudgetExceeded("DCJ search visited more than the state budget");
            queue.push_back(&it->first);
        }
    }
    throw InvalidInput("DCJ oracle: target genome unreachable");
}

} // namespace sigmak
