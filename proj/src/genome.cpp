#include "sigmak/genome.hpp"

#include <algorithm>
#include <map>

#include "sigmak/error.hpp"

namespace sigmak {

namespace {

Extremity left_extremity(const GeneOccurrence& g) {
    return {g.id, g.orientation == Orientation::Forward ? End::Tail : End::Head, g.copy};
}

Extremity right_extremity(const GeneOccurrence& g) {
    return {g.id, g.orientation == Orientation::Forward ? End::Head : End::Tail, g.copy};
}

std::vector<GeneOccurrence> reverse_complement(const std::vector<GeneOccurrence>& genes) {
    std::vector<GeneOccurrence> out;
    out.reserve(genes.size());
    for (auto it = genes.rbegin(); it != genes.rend(); ++it) out.push_back(it->reversed());
    return out;
}

} // namespace

GeneOccurrence GeneOccurrence::reversed() const {
    GeneOccurrence g = *this;
    g.orientation = orientation == Orientation::Forward ? Orientation::Reverse : Orientation::Forward;
    return g;
}

Adjacency Adjacency::make(Extremity x, Extremity y) {
    if (y < x) std::swap(x, y);
    return {x, y};
}

std::string to_string(Copy c) {
    switch (c) {
    case Copy::A: return ".a";
    case Copy::B: return ".b";
    case Copy::None: break;
    }
    return "";
}

std::string to_string(const GeneOccurrence& g) {
    std::string s = g.orientation == Orientation::Reverse ? "-" : "";
    return s + std::to_string(g.id) + to_string(g.copy);
}

std::string to_string(const Extremity& e) {
    return std::to_string(e.gene) + (e.end == End::Head ? "h" : "t") + to_string(e.copy);
}

std::string to_string(const Adjacency& a) {
    return to_string(a.first) + to_string(a.second);
}

Chromosome Chromosome::canonical() const {
    Chromosome best{shape, genes};
    auto consider = [&best](const std::vector<GeneOccurrence>& candidate) {
        if (candidate < best.genes) best.genes = candidate;
    };
    const std::vector<GeneOccurrence> rc = reverse_complement(genes);
    consider(rc);
    if (shape == Shape::Circular) {
        for (const auto* base : {&genes, &rc}) {
            std::vector<GeneOccurrence> rotated = *base;
            for (std::size_t r = 1; r < rotated.size(); ++r) {
                std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
                consider(rotated);
            }
        }
    }
    return best;
}

Genome::Genome(std::vector<Chromosome> chromosomes) : chromosomes_(std::move(chromosomes)) {
    if (chromosomes_.empty()) throw InvalidInput("genome has no chromosomes");
    std::map<int, std::pair<int, int>> counts; // id -> (unindexed, indexed)
    std::set<GeneKey> indexed;
    for (const Chromosome& c : chromosomes_) {
        if (c.genes.empty()) throw InvalidInput("empty chromosome");
        for (const GeneOccurrence& g : c.genes) {
            if (g.id <= 0) throw InvalidInput("gene ids must be positive, got " + std::to_string(g.id));
            auto& [plain, copies] = counts[g.id];
            if (g.copy == Copy::None) {
                ++plain;
            } else {
                ++copies;
                if (!indexed.insert(g.key()).second)
                    throw InvalidInput("gene " + to_string(g) + " occurs twice with the same copy index");
            }
            if (plain > 0 && copies > 0)
                throw InvalidInput("gene " + std::to_string(g.id) + " mixes indexed and unindexed copies");
            if (plain > 2) throw InvalidInput("gene " + std::to_string(g.id) + " occurs more than twice");
        }
        n_star_ += c.genes.size();
        if (c.shape == Shape::Linear) ++linear_;

        const auto& gs = c.genes;
        for (std::size_t i = 0; i + 1 < gs.size(); ++i)
            adjacencies_.push_back(Adjacency::make(right_extremity(gs[i]), left_extremity(gs[i + 1])));
        if (c.shape == Shape::Circular) {
            adjacencies_.push_back(Adjacency::make(right_extremity(gs.back()), left_extremity(gs.front())));
        } else {
            telomeres_.push_back(left_extremity(gs.front()));
            telomeres_.push_back(right_extremity(gs.back()));
        }
        canonical_.push_back(c.canonical());
    }
    std::sort(adjacencies_.begin(), adjacencies_.end());
    std::sort(telomeres_.begin(), telomeres_.end());
    std::sort(canonical_.begin(), canonical_.end());
}

std::set<int> Genome::gene_ids() const {
    std::set<int> ids;
    for (const Chromosome& c : chromosomes_)
        for (const GeneOccurrence& g : c.genes) ids.insert(g.id);
    return ids;
}

std::set<GeneKey> Genome::gene_keys() const {
    std::set<GeneKey> keys;
    for (const Chromosome& c : chromosomes_)
        for (const GeneOccurrence& g : c.genes) keys.insert(g.key());
    return keys;
}

bool Genome::has_copy_indices() const {
    for (const Chromosome& c : chromosomes_)
        for (const GeneOccurrence& g : c.genes)
            if (g.copy != Copy::None) return true;
    return false;
}

bool Genome::is_singular() const {
    return gene_keys().size() == n_star_;
}

bool Genome::is_duplicated() const {
    return !has_copy_indices() && 2 * gene_ids().size() == n_star_;
}

bool Genome::is_doubled() const {
    if (!is_duplicated()) return false;
    auto all_even = [](const auto& sorted) {
        for (std::size_t i = 0; i < sorted.size();) {
            std::size_t j = i;
            while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
            if ((j - i) % 2 != 0) return false;
            i = j;
        }
        return true;
    };
    return all_even(adjacencies_) && all_even(telomeres_);
}

Genome Genome::erase_indices() const {
    std::vector<Chromosome> out = chromosomes_;
    for (Chromosome& c : out)
        for (GeneOccurrence& g : c.genes) g.copy = Copy::None;
    return Genome(std::move(out));
}

PairClassification classify_pair(const Genome& g1, const Genome& g2) {
    const bool s1 = g1.is_singular();
    const bool s2 = g2.is_singular();
    if (s1 && s2 && g1.gene_keys() == g2.gene_keys()) return {PairClass::Canonical, false};
    if (g1.gene_ids() != g2.gene_ids()) return {};
    const bool plain_singular1 = s1 && !g1.has_copy_indices();
    const bool plain_singular2 = s2 && !g2.has_copy_indices();
    const bool dup1 = g1.is_duplicated();
    const bool dup2 = g2.is_duplicated();
    if (plain_singular1 && dup2) return {PairClass::OneTwoCognate, true};
    if (dup1 && plain_singular2) return {PairClass::OneTwoCognate, false};
    if (dup1 && dup2) return {PairClass::TwoTwoCognate, false};
    return {};
}

std::string to_string(PairClass c) {
    switch (c) {
    case PairClass::Canonical: return "canonical";
    case PairClass::OneTwoCognate: return "[1.2]-cognate";
    case PairClass::TwoTwoCognate: return "[2.2]-cognate";
    case PairClass::NotCognate: break;
    }
    return "not cognate";
}

} // namespace sigmak
