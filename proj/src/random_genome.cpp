#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "genome_internal.hpp"
#include "sigmak/error.hpp"
#include "sigmak/genome.hpp"

namespace sigmak {

namespace {

ExtremityLayout scramble(ExtremityLayout layout, int ops, std::mt19937_64& rng) {
    for (int i = 0; i < ops; ++i) {
        std::vector<ExtremityLayout> next = dcj_neighbours(layout);
        if (next.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, next.size() - 1);
        layout = std::move(next[pick(rng)]);
    }
    return layout;
}

} // namespace

Genome random_genome(int n, int linear_count, int circular_count, std::uint64_t seed) {
    if (linear_count < 0 || circular_count < 0 || linear_count + circular_count < 1 ||
        n < linear_count + circular_count)
        throw InvalidInput("random_genome: need n >= linear + circular >= 1");
    std::mt19937_64 rng(seed);
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 1);
    std::shuffle(ids.begin(), ids.end(), rng);
    std::bernoulli_distribution flip(0.5);

    const int parts = linear_count + circular_count;
    std::vector<int> cuts(n - 1);
    std::iota(cuts.begin(), cuts.end(), 1);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(parts - 1);
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(n);

    std::vector<Chromosome> chromosomes;
    int begin = 0;
    for (int part = 0; part < parts; ++part) {
        Chromosome c{part < linear_count ? Shape::Linear : Shape::Circular, {}};
        for (int i = begin; i < cuts[part]; ++i)
            c.genes.push_back({ids[i], flip(rng) ? Orientation::Reverse : Orientation::Forward, Copy::None});
        begin = cuts[part];
        chromosomes.push_back(std::move(c));
    }
    return Genome(std::move(chromosomes));
}

GenomePair random_cognate_pair(int n, bool wgd, int ops, std::uint64_t seed) {
    if (n < 1 || ops < 0) throw InvalidInput("random_cognate_pair: need n >= 1 and ops >= 0");
    std::mt19937_64 rng(seed);
    const int chromosomes = std::uniform_int_distribution<int>(1, std::min(n, 3))(rng);
    const int linear = std::uniform_int_distribution<int>(0, chromosomes)(rng);
    Genome s = random_genome(n, linear, chromosomes - linear, rng());
    if (!wgd) {
        Genome d = scramble(ExtremityLayout::from_genome(s), ops, rng).to_genome();
        return {std::move(s), std::move(d)};
    }
    std::bernoulli_distribution coin(0.5);
    std::vector<bool> concatenate(s.circular_count());
    for (std::size_t i = 0; i < concatenate.size(); ++i) concatenate[i] = coin(rng);
    std::map<int, bool> swap;
    for (int id : s.gene_ids()) swap[id] = coin(rng);
    const Genome b = detail::resolved_doubling(s, concatenate, swap);
    Genome d = scramble(ExtremityLayout::from_genome(b), ops, rng).to_genome().erase_indices();
    return {std::move(s), std::move(d)};
}

} // namespace sigmak
