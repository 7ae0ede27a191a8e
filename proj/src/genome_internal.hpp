#pragma once

#include <map>
#include <vector>

#include "sigmak/genome.hpp"

namespace sigmak::detail {

// One element of the singularized doubling of `s`. `concatenate[i]` joins
// the two copies of the i-th circular chromosome (canonical order) into one
// chromosome; `swap_labels[id]` gives copy b to the first copy of gene id.
Genome resolved_doubling(const Genome& s, const std::vector<bool>& concatenate,
                         const std::map<int, bool>& swap_labels);

} // namespace sigmak::detail
