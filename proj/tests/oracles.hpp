#pragma once

// Reference computations used by the tests. They work on labelled edge
// lists with std containers only and share no code with the library's
// graph walkers.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sigmak/genome.hpp"
#include "sigmak/half_int.hpp"

namespace test_oracles {

template <class T>
std::set<std::string> strings(const std::vector<T>& items) {
    std::set<std::string> out;
    for (const T& x : items) out.insert(sigmak::to_string(x));
    return out;
}

template <class T>
std::multiset<std::string> multiset(const std::vector<T>& items) {
    std::multiset<std::string> out;
    for (const T& x : items) out.insert(sigmak::to_string(x));
    return out;
}

inline sigmak::Chromosome least_representation(const sigmak::Chromosome& c) {
    std::vector<std::vector<sigmak::GeneOccurrence>> forms;
    std::vector<sigmak::GeneOccurrence> rev;
    for (auto it = c.genes.rbegin(); it != c.genes.rend(); ++it) rev.push_back(it->reversed());
    for (const auto& base : {c.genes, rev}) {
        if (c.shape == sigmak::Shape::Linear) {
            forms.push_back(base);
            continue;
        }
        for (std::size_t r = 0; r < base.size(); ++r) {
            std::vector<sigmak::GeneOccurrence> rotated(base.begin() + r, base.end());
            rotated.insert(rotated.end(), base.begin(), base.begin() + r);
            forms.push_back(rotated);
        }
    }
    return {c.shape, *std::min_element(forms.begin(), forms.end())};
}

// Component lengths of the two-coloured graph whose edges are `first` and
// `second` (pairs of vertex names). Vertices listed in `vertices` but
// touched by no edge are 0-paths.
struct Census {
    std::map<int, int> cycles;
    std::map<int, int> paths;

    std::string str() const {
        std::string s = "{";
        bool sep = false;
        for (auto [len, n] : cycles) s += (sep ? ", c" : "c") + std::to_string(len) + ":" + std::to_string(n), sep = true;
        for (auto [len, n] : paths) s += (sep ? ", p" : "p") + std::to_string(len) + ":" + std::to_string(n), sep = true;
        return s + "}";
    }
};

using Edge = std::pair<std::string, std::string>;

inline Census census(const std::set<std::string>& vertices, const std::vector<Edge>& first,
                     const std::vector<Edge>& second) {
    std::map<std::string, std::vector<std::string>> nbr;
    for (const std::string& v : vertices) nbr[v];
    for (const auto* list : {&first, &second})
        for (const auto& [a, b] : *list) {
            nbr[a].push_back(b);
            nbr[b].push_back(a);
        }
    std::set<std::string> seen;
    Census out;
    for (const auto& [start, unused] : nbr) {
        if (seen.count(start)) continue;
        // Flood fill, then classify by vertex and edge counts.
        std::vector<std::string> stack{start};
        seen.insert(start);
        int nodes = 0;
        int degree_sum = 0;
        while (!stack.empty()) {
            const std::string v = stack.back();
            stack.pop_back();
            ++nodes;
            degree_sum += static_cast<int>(nbr[v].size());
            for (const std::string& u : nbr[v])
                if (seen.insert(u).second) stack.push_back(u);
        }
        const int edges = degree_sum / 2;
        if (edges == nodes) ++out.cycles[edges];
        else ++out.paths[edges];
    }
    return out;
}

// sigma_k of a census; k <= 0 means unbounded.
inline sigmak::HalfInt sigma(const Census& c, int k) {
    std::int64_t twice = 0;
    for (auto [len, n] : c.cycles)
        if (k <= 0 || len <= k) twice += 2 * n;
    for (auto [len, n] : c.paths)
        if (len % 2 == 0 && (k <= 0 || len <= k - 2)) twice += n;
    return sigmak::HalfInt::from_twice(twice);
}

inline std::vector<Edge> adjacency_edges(const sigmak::Genome& g) {
    std::vector<Edge> out;
    for (const sigmak::Adjacency& a : g.adjacencies()) out.emplace_back(sigmak::to_string(a.first), sigmak::to_string(a.second));
    return out;
}

inline std::set<std::string> extremity_names(const sigmak::Genome& g) {
    std::set<std::string> out;
    for (const sigmak::GeneKey& k : g.gene_keys())
        for (sigmak::End e : {sigmak::End::Tail, sigmak::End::Head})
            out.insert(sigmak::to_string(sigmak::Extremity{k.id, e, k.copy}));
    return out;
}

// Census of the breakpoint graph of a canonical pair.
inline Census breakpoint_census(const sigmak::Genome& a, const sigmak::Genome& b) {
    return census(extremity_names(a), adjacency_edges(a), adjacency_edges(b));
}

} // namespace test_oracles
