#pragma once

#include <cstdint>
#include <vector>

namespace sigmak {

struct MwisBudget {
    std::uint64_t max_nodes = 0; // 0 = unlimited
    std::uint64_t max_ms = 0;    // 0 = unlimited
};

struct MwisResult {
    std::vector<int> chosen; // sorted vertex ids
    std::int64_t weight = 0;
    bool optimal = true;
    std::uint64_t nodes = 0;
};

// Maximum-weight independent set by branch and bound. Weights must be
// positive. Connected components are solved separately; inside one, vertices
// are branched in order of decreasing weight then degree, and nodes are
// pruned with a greedy clique-cover bound. When the budget runs out the best
// set found so far is returned with `optimal = false`.
MwisResult max_weight_independent_set(const std::vector<std::int64_t>& weights,
                                      const std::vector<std::vector<int>>& adjacency, const MwisBudget& budget = {});

} // namespace sigmak
