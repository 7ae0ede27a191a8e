#include <map>

#include "sigmak/error.hpp"
#include "sigmak/genome.hpp"
#include "genome_internal.hpp"

namespace sigmak {

namespace {

void require_plain_singular(const Genome& s, const char* op) {
    if (s.has_copy_indices() || !s.is_singular())
        throw InvalidInput(std::string(op) + ": genome must be singular without copy indices");
}

} // namespace

Doubling double_genome(const Genome& s) {
    require_plain_singular(s, "double");
    Doubling d;
    for (const Adjacency& a : s.adjacencies()) {
        d.adjacencies.push_back(a);
        d.adjacencies.push_back(a);
    }
    for (const Extremity& t : s.telomeres()) {
        d.telomeres.push_back(t);
        d.telomeres.push_back(t);
    }
    if (s.circular_count() >= 64) throw BudgetExceeded("double: too many circular chromosomes");
    d.layout_count = std::uint64_t{1} << s.circular_count();
    return d;
}

namespace detail {

Genome resolved_doubling(const Genome& s, const std::vector<bool>& concatenate,
                         const std::map<int, bool>& swap_labels) {
    std::vector<Chromosome> out;
    std::size_t circular_index = 0;
    auto label = [&](std::vector<GeneOccurrence> genes, bool first_copy) {
        for (GeneOccurrence& g : genes) {
            const bool is_a = first_copy != swap_labels.at(g.id);
            g.copy = is_a ? Copy::A : Copy::B;
        }
        return genes;
    };
    for (const Chromosome& c : s.canonical_chromosomes()) {
        const bool join = c.shape == Shape::Circular && concatenate[circular_index++];
        auto first = label(c.genes, true);
        auto second = label(c.genes, false);
        if (join) {
            first.insert(first.end(), second.begin(), second.end());
            out.push_back({Shape::Circular, std::move(first)});
        } else {
            out.push_back({c.shape, std::move(first)});
            out.push_back({c.shape, std::move(second)});
        }
    }
    return Genome(std::move(out));
}

} // namespace detail

std::vector<Genome> enumerate_resolved_doublings(const Genome& s, std::size_t max_genomes) {
    require_plain_singular(s, "enumerate_resolved_doublings");
    const std::size_t o = s.circular_count();
    const std::size_t n = s.n_star();
    if (n > 12 || o + n >= 63 || (std::uint64_t{1} << (o + n)) > max_genomes)
        throw BudgetExceeded("enumerate_resolved_doublings: 2^(o+n*) = 2^" + std::to_string(o + n) +
                             " exceeds the budget");
    const std::set<int> id_set = s.gene_ids();
    const std::vector<int> ids(id_set.begin(), id_set.end());
    std::map<std::string, Genome> unique;
    for (std::uint64_t layout = 0; layout < (std::uint64_t{1} << o); ++layout) {
        std::vector<bool> concatenate(o);
        for (std::size_t i = 0; i < o; ++i) concatenate[i] = (layout >> i) & 1U;
        for (std::uint64_t labels = 0; labels < (std::uint64_t{1} << n); ++labels) {
            std::map<int, bool> swap;
            for (std::size_t i = 0; i < n; ++i) swap[ids[i]] = (labels >> i) & 1U;
            Genome b = detail::resolved_doubling(s, concatenate, swap);
            unique.try_emplace(format_genome(b), std::move(b));
        }
    }
    std::vector<Genome> out;
    out.reserve(unique.size());
    for (auto& [text, g] : unique) out.push_back(std::move(g));
    return out;
}

Genome singularize(const Genome& d) {
    if (!d.is_duplicated()) throw InvalidInput("singularize: genome must be duplicated");
    std::set<int> seen;
    std::vector<Chromosome> out = d.chromosomes();
    for (Chromosome& c : out)
        for (GeneOccurrence& g : c.genes) g.copy = seen.insert(g.id).second ? Copy::A : Copy::B;
    return Genome(std::move(out));
}

} // namespace sigmak
