#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sigmak {

// CNF formula; literals are signed 1-based variable indices.
struct SatInstance {
    int variable_count = 0;
    std::vector<std::vector<int>> clauses;

    bool operator==(const SatInstance&) const = default;
};

struct SatStats {
    int variables = 0;       // |X|
    int ttf_variables = 0;   // |X_TTF|: three occurrences
    int tf_variables = 0;    // |X_TF|: two occurrences
    int clauses = 0;         // |Y|
    int two_clauses = 0;     // |Y_2|
    int three_clauses = 0;   // |Y_3|
    int occurrences = 0;     // ||Y||
};

// Truth values per variable (index v-1) and optional per-clause witness,
// given as the position of a satisfied literal inside the clause.
struct Assignment {
    std::vector<bool> values;
    std::vector<std::optional<int>> witness;

    bool operator==(const Assignment&) const = default;
};

// DIMACS subset: `c` comment lines, one `p cnf V C` header, clauses as
// zero-terminated integer lists (possibly spanning lines).
SatInstance parse_cnf(std::string_view text);
std::string format_cnf(const SatInstance& inst);

// Clause sizes in {2,3} with distinct variables; each variable occurs two or
// three times; twice-occurring variables once per polarity; three-times
// occurring variables positive twice and negative once.
bool is_normalized(const SatInstance& inst);
SatStats sat_stats(const SatInstance& inst);

struct Normalization {
    SatInstance instance;
    // Per original variable (index v-1): its normalized index, or 0 when
    // pure-literal elimination removed it.
    std::vector<int> renamed;
    // Per original variable: normalized literal is the negation of the original.
    std::vector<bool> flipped;
    // Per original variable removed as a pure literal: the value it was fixed to.
    std::vector<std::optional<bool>> fixed;

    // Maps an assignment of the normalized instance back to the original
    // variables (unused variables default to false).
    std::vector<bool> to_original(const std::vector<bool>& values) const;
};

// Rejects clauses of size outside {2,3} and clauses repeating a variable;
// eliminates pure literals until none remain; rejects variables left with
// one or four or more occurrences; flips variables occurring neg-neg-pos;
// renumbers the surviving variables in increasing original order.
Normalization normalize(const SatInstance& inst);

bool satisfies(const SatInstance& inst, const std::vector<bool>& values);

// Exhaustive search; the first satisfying assignment in counting order
// (variable 1 is the least significant bit, false before true).
std::optional<std::vector<bool>> sat_brute(const SatInstance& inst);

// Random normalized instance with `variables` variables.
SatInstance random_23sat(int variables, std::uint64_t seed);

} // namespace sigmak
