#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sigmak {

enum class Orientation : std::uint8_t { Forward, Reverse };
enum class Copy : std::uint8_t { None, A, B };
enum class End : std::uint8_t { Tail, Head };
enum class Shape : std::uint8_t { Linear, Circular };

// Identity of a gene inside one genome: its family id plus the
// singularization index (None outside singularized genomes).
struct GeneKey {
    int id = 0;
    Copy copy = Copy::None;

    auto operator<=>(const GeneKey&) const = default;
};

struct GeneOccurrence {
    int id = 0;
    Orientation orientation = Orientation::Forward;
    Copy copy = Copy::None;

    GeneKey key() const { return {id, copy}; }
    GeneOccurrence reversed() const;

    auto operator<=>(const GeneOccurrence&) const = default;
};

struct Extremity {
    int gene = 0;
    End end = End::Tail;
    Copy copy = Copy::None;

    GeneKey key() const { return {gene, copy}; }

    auto operator<=>(const Extremity&) const = default;
};

// Orientation-free pair of extremities; `first <= second` always holds.
struct Adjacency {
    Extremity first;
    Extremity second;

    static Adjacency make(Extremity x, Extremity y);

    auto operator<=>(const Adjacency&) const = default;
};

std::string to_string(Copy c);
std::string to_string(const GeneOccurrence& g);
std::string to_string(const Extremity& e);   // "3h", "1t.a"
std::string to_string(const Adjacency& a);   // "1h3h"

struct Chromosome {
    Shape shape = Shape::Linear;
    std::vector<GeneOccurrence> genes;

    // Lexicographically least representation among the reverse complement
    // and, for circular chromosomes, all rotations.
    Chromosome canonical() const;

    auto operator<=>(const Chromosome&) const = default;
};

// A multiset of chromosomes. Chromosomes are kept in the order they were
// given (singularize() depends on it); equality, hashing keys and
// formatting go through the canonical form.
class Genome {
public:
    explicit Genome(std::vector<Chromosome> chromosomes);

    const std::vector<Chromosome>& chromosomes() const { return chromosomes_; }
    const std::vector<Chromosome>& canonical_chromosomes() const { return canonical_; }

    // Sorted multisets A(G) and T(G).
    const std::vector<Adjacency>& adjacencies() const { return adjacencies_; }
    const std::vector<Extremity>& telomeres() const { return telomeres_; }

    std::set<int> gene_ids() const;
    std::set<GeneKey> gene_keys() const;

    std::size_t n_star() const { return n_star_; }
    std::size_t linear_count() const { return linear_; }
    std::size_t circular_count() const { return chromosomes_.size() - linear_; }

    bool has_copy_indices() const;
    // Every gene key occurs exactly once.
    bool is_singular() const;
    // No copy indices and every gene id occurs exactly twice.
    bool is_duplicated() const;
    // Duplicated and every adjacency and telomere has even multiplicity.
    bool is_doubled() const;

    Genome erase_indices() const;

    bool operator==(const Genome& other) const { return canonical_ == other.canonical_; }

private:
    std::vector<Chromosome> chromosomes_;
    std::vector<Chromosome> canonical_;
    std::vector<Adjacency> adjacencies_;
    std::vector<Extremity> telomeres_;
    std::size_t n_star_ = 0;
    std::size_t linear_ = 0;
};

Genome parse_genome(std::string_view text);
std::string format_genome(const Genome& g);

enum class PairClass { Canonical, OneTwoCognate, TwoTwoCognate, NotCognate };

struct PairClassification {
    PairClass kind = PairClass::NotCognate;
    // For OneTwoCognate: true when the first genome is the singular one.
    bool first_is_singular = false;
};

PairClassification classify_pair(const Genome& g1, const Genome& g2);
std::string to_string(PairClass c);

// ---- whole genome doubling -------------------------------------------------

struct Doubling {
    std::vector<Adjacency> adjacencies; // A(S) + A(S)
    std::vector<Extremity> telomeres;   // T(S) + T(S)
    std::uint64_t layout_count = 1;     // 2^o
};

Doubling double_genome(const Genome& s);

// Every member of the singularized doubling of `s`, deduplicated under
// canonical equality and sorted by their formatted text.
std::vector<Genome> enumerate_resolved_doublings(const Genome& s, std::size_t max_genomes = std::size_t{1} << 20);

// Labels the first occurrence of each gene id (chromosomes in stored order,
// genes left to right) with copy a and the other with copy b.
Genome singularize(const Genome& d);

// ---- extremity-level representation and DCJ ---------------------------------

// Genome whose gene keys are unique, viewed as a partial matching on its
// extremities. Extremity index 2*i is the tail of genes[i], 2*i+1 its head;
// mate[x] is the extremity adjacent to x or -1 for a telomere.
struct ExtremityLayout {
    std::vector<GeneKey> genes;
    std::vector<int> mate;

    static ExtremityLayout from_genome(const Genome& g);
    Genome to_genome() const;

    Extremity extremity(int index) const;
    int index_of(const Extremity& e) const; // -1 when absent

    auto operator<=>(const ExtremityLayout&) const = default;
};

// Every layout reachable by one non-identity DCJ: two adjacencies rejoined
// crosswise, an adjacency and a telomere exchanged, two telomeres fused, or
// one adjacency split (fission).
std::vector<ExtremityLayout> dcj_neighbours(const ExtremityLayout& layout);

// A cut site: an adjacency (`second` set) or a telomere.
struct CutSite {
    Extremity first;
    std::optional<Extremity> second;
};

// Pairs of open ends joined into new adjacencies; unpaired ends become
// telomeres. With two cut sites the pairing must be maximal; with a single
// adjacency cut it may be empty (fission).
using Rejoin = std::vector<std::pair<Extremity, Extremity>>;

Genome apply_dcj(const Genome& g, const CutSite& cut1, const std::optional<CutSite>& cut2, const Rejoin& rejoin);

// ---- random instances ------------------------------------------------------

Genome random_genome(int n, int linear_count, int circular_count, std::uint64_t seed);

struct GenomePair {
    Genome first;
    Genome second;
};

// With `wgd`, the second genome is a random singularized doubling of the
// first, scrambled by `ops` DCJs, with indices erased ([1·2]-cognate).
// Without it, both genomes are singular and differ by `ops` DCJs.
GenomePair random_cognate_pair(int n, bool wgd, int ops, std::uint64_t seed);

} // namespace sigmak
