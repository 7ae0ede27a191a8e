#include <algorithm>

#include "sigmak/error.hpp"
#include "sigmak/genome.hpp"

namespace sigmak {

ExtremityLayout ExtremityLayout::from_genome(const Genome& g) {
    if (!g.is_singular()) throw InvalidInput("extremity layout needs a genome with unique gene keys");
    ExtremityLayout layout;
    const std::set<GeneKey> keys = g.gene_keys();
    layout.genes.assign(keys.begin(), keys.end());
    layout.mate.assign(2 * layout.genes.size(), -1);
    for (const Adjacency& a : g.adjacencies()) {
        const int x = layout.index_of(a.first);
        const int y = layout.index_of(a.second);
        layout.mate[x] = y;
        layout.mate[y] = x;
    }
    return layout;
}

Extremity ExtremityLayout::extremity(int index) const {
    const GeneKey& k = genes[index / 2];
    return {k.id, index % 2 == 0 ? End::Tail : End::Head, k.copy};
}

int ExtremityLayout::index_of(const Extremity& e) const {
    const auto it = std::lower_bound(genes.begin(), genes.end(), e.key());
    if (it == genes.end() || *it != e.key()) return -1;
    return 2 * static_cast<int>(it - genes.begin()) + (e.end == End::Head ? 1 : 0);
}

Genome ExtremityLayout::to_genome() const {
    const int n = static_cast<int>(genes.size());
    std::vector<bool> visited(n, false);
    std::vector<Chromosome> out;

    // Follows the chromosome entered at extremity `entry`.
    auto walk = [&](int entry, Shape shape) {
        Chromosome c{shape, {}};
        int x = entry;
        while (x >= 0 && !visited[x / 2]) {
            const int gene = x / 2;
            visited[gene] = true;
            const bool forward = x % 2 == 0;
            c.genes.push_back({genes[gene].id, forward ? Orientation::Forward : Orientation::Reverse,
                               genes[gene].copy});
            x = mate[x ^ 1];
        }
        out.push_back(std::move(c));
    };
    for (int x = 0; x < 2 * n; ++x)
        if (mate[x] < 0 && !visited[x / 2]) walk(x, Shape::Linear);
    for (int gene = 0; gene < n; ++gene)
        if (!visited[gene]) walk(2 * gene, Shape::Circular);
    return Genome(std::move(out));
}

std::vector<ExtremityLayout> dcj_neighbours(const ExtremityLayout& layout) {
    // Each site is an adjacency (x, mate[x]) with x < mate[x], or a telomere (x, -1).
    std::vector<std::pair<int, int>> sites;
    for (int x = 0; x < static_cast<int>(layout.mate.size()); ++x) {
        if (layout.mate[x] < 0) sites.emplace_back(x, -1);
        else if (x < layout.mate[x]) sites.emplace_back(x, layout.mate[x]);
    }
    std::vector<ExtremityLayout> out;
    auto emit = [&](std::initializer_list<int> opened, std::initializer_list<std::pair<int, int>> joins) {
        ExtremityLayout next = layout;
        for (int x : opened) next.mate[x] = -1;
        for (auto [x, y] : joins) {
            next.mate[x] = y;
            next.mate[y] = x;
        }
        out.push_back(std::move(next));
    };
    for (std::size_t i = 0; i < sites.size(); ++i) {
        const auto [p, q] = sites[i];
        if (q >= 0) emit({p, q}, {}); // fission
        for (std::size_t j = i + 1; j < sites.size(); ++j) {
            const auto [r, s] = sites[j];
            if (q >= 0 && s >= 0) {
                emit({p, q, r, s}, {{p, r}, {q, s}});
                emit({p, q, r, s}, {{p, s}, {q, r}});
            } else if (q >= 0) {
                emit({p, q, r}, {{p, r}});
                emit({p, q, r}, {{q, r}});
            } else if (s >= 0) {
                emit({p, r, s}, {{r, p}});
                emit({p, r, s}, {{s, p}});
            } else {
                emit({p, r}, {{p, r}});
            }
        }
    }
    return out;
}

Genome apply_dcj(const Genome& g, const CutSite& cut1, const std::optional<CutSite>& cut2, const Rejoin& rejoin) {
    ExtremityLayout layout = ExtremityLayout::from_genome(g);
    std::vector<int> open;
    auto cut = [&](const CutSite& site) {
        const int x = layout.index_of(site.first);
        if (x < 0) throw InvalidInput("apply_dcj: extremity " + to_string(site.first) + " not in genome");
        if (site.second) {
            const int y = layout.index_of(*site.second);
            if (y < 0 || layout.mate[x] != y)
                throw InvalidInput("apply_dcj: adjacency " + to_string(Adjacency::make(site.first, *site.second)) +
                                   " not in genome");
            if (std::find(open.begin(), open.end(), x) != open.end())
                throw InvalidInput("apply_dcj: the two cut sites coincide");
            open.push_back(x);
            open.push_back(y);
        } else {
            if (layout.mate[x] >= 0)
                throw InvalidInput("apply_dcj: " + to_string(site.first) + " is not a telomere");
            if (std::find(open.begin(), open.end(), x) != open.end())
                throw InvalidInput("apply_dcj: the two cut sites coincide");
            open.push_back(x);
        }
    };
    cut(cut1);
    if (cut2) cut(*cut2);

    const std::size_t expected = open.size() / 2;
    if (cut2 ? rejoin.size() != expected : rejoin.size() > expected)
        throw InvalidInput("apply_dcj: rejoin must pair " + std::to_string(expected) + " open ends");
    for (int x : open) layout.mate[x] = -1;
    std::vector<int> used;
    for (const auto& [e1, e2] : rejoin) {
        const int x = layout.index_of(e1);
        const int y = layout.index_of(e2);
        for (int z : {x, y}) {
            if (z < 0 || std::find(open.begin(), open.end(), z) == open.end())
                throw InvalidInput("apply_dcj: rejoin uses an extremity that was not cut");
            if (std::find(used.begin(), used.end(), z) != used.end())
                throw InvalidInput("apply_dcj: rejoin uses an open end twice");
            used.push_back(z);
        }
        if (x == y) throw InvalidInput("apply_dcj: rejoin pairs an end with itself");
        layout.mate[x] = y;
        layout.mate[y] = x;
    }
    return layout.to_genome();
}

} // namespace sigmak
