#include "sigmak/sat.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "sigmak/error.hpp"

namespace sigmak {

namespace {

std::vector<std::vector<int>> occurrences_by_variable(const SatInstance& inst) {
    std::vector<std::vector<int>> occ(inst.variable_count);
    for (const auto& clause : inst.clauses)
        for (int lit : clause) occ[std::abs(lit) - 1].push_back(lit);
    return occ;
}

} // namespace

SatInstance parse_cnf(std::string_view text) {
    SatInstance inst;
    bool header = false;
    int declared_clauses = 0;
    std::vector<int> current;
    int line_no = 0;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        ++line_no;
        std::istringstream in(line);
        std::string first;
        if (!(in >> first)) continue;
        if (first == "c" || first[0] == 'c') continue;
        if (first == "%") break; // trailer used by some benchmark files
        if (first == "p") {
            std::string format;
            if (header) throw ParseError("duplicate problem line", line_no, 1);
            if (!(in >> format >> inst.variable_count >> declared_clauses) || format != "cnf" ||
                inst.variable_count < 0 || declared_clauses < 0)
                throw ParseError("expected 'p cnf <variables> <clauses>'", line_no, 1);
            header = true;
            continue;
        }
        if (!header) throw ParseError("clause before the 'p cnf' header", line_no, 1);
        std::istringstream tokens(line);
        std::string token;
        while (tokens >> token) {
            std::size_t used = 0;
            long value = 0;
            try {
                value = std::stol(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size()) throw ParseError("expected an integer literal, got '" + token + "'", line_no, 1);
            if (value == 0) {
                inst.clauses.push_back(current);
                current.clear();
                continue;
            }
            if (std::labs(value) > inst.variable_count)
                throw ParseError("literal " + token + " exceeds the declared variable count", line_no, 1);
            current.push_back(static_cast<int>(value));
        }
    }
    if (!header) throw ParseError("missing 'p cnf' header", line_no, 1);
    if (!current.empty()) throw ParseError("last clause is not terminated by 0", line_no, 1);
    if (static_cast<int>(inst.clauses.size()) != declared_clauses)
        throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                             std::to_string(inst.clauses.size()),
                         line_no, 1);
    return inst;
}

std::string format_cnf(const SatInstance& inst) {
    std::ostringstream out;
    out << "p cnf " << inst.variable_count << ' ' << inst.clauses.size() << '\n';
    for (const auto& clause : inst.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

bool is_normalized(const SatInstance& inst) {
    for (const auto& clause : inst.clauses) {
        if (clause.size() != 2 && clause.size() != 3) return false;
        std::set<int> vars;
        for (int lit : clause) {
            if (lit == 0 || std::abs(lit) > inst.variable_count) return false;
            vars.insert(std::abs(lit));
        }
        if (vars.size() != clause.size()) return false;
    }
    for (const auto& occ : occurrences_by_variable(inst)) {
        const auto pos = std::count_if(occ.begin(), occ.end(), [](int l) { return l > 0; });
        const auto neg = static_cast<std::ptrdiff_t>(occ.size()) - pos;
        if (!((pos == 1 && neg == 1) || (pos == 2 && neg == 1))) return false;
    }
    return true;
}

SatStats sat_stats(const SatInstance& inst) {
    SatStats s;
    s.variables = inst.variable_count;
    for (const auto& occ : occurrences_by_variable(inst)) {
        if (occ.size() == 3) ++s.ttf_variables;
        else if (occ.size() == 2) ++s.tf_variables;
    }
    s.clauses = static_cast<int>(inst.clauses.size());
    for (const auto& clause : inst.clauses) {
        if (clause.size() == 2) ++s.two_clauses;
        else if (clause.size() == 3) ++s.three_clauses;
        s.occurrences += static_cast<int>(clause.size());
    }
    return s;
}

std::vector<bool> Normalization::to_original(const std::vector<bool>& values) const {
    std::vector<bool> out(renamed.size(), false);
    for (std::size_t v = 0; v < renamed.size(); ++v) {
        if (fixed[v]) out[v] = *fixed[v];
        else if (renamed[v] > 0) out[v] = values.at(renamed[v] - 1) != flipped[v];
    }
    return out;
}

Normalization normalize(const SatInstance& inst) {
    const int n = inst.variable_count;
    for (std::size_t c = 0; c < inst.clauses.size(); ++c) {
        const auto& clause = inst.clauses[c];
        if (clause.size() != 2 && clause.size() != 3)
            throw InvalidInput("instance outside (2,3)-SAT fragment: clause " + std::to_string(c + 1) + " has " +
                               std::to_string(clause.size()) + " literals");
        std::set<int> vars;
        for (int lit : clause) {
            if (lit == 0 || std::abs(lit) > n) throw InvalidInput("literal out of range in clause " + std::to_string(c + 1));
            if (!vars.insert(std::abs(lit)).second)
                throw InvalidInput("clause " + std::to_string(c + 1) + " repeats variable " +
                                   std::to_string(std::abs(lit)) + " (duplicate or contradictory literal)");
        }
    }

    Normalization norm;
    norm.renamed.assign(n, 0);
    norm.flipped.assign(n, false);
    norm.fixed.assign(n, std::nullopt);

    std::vector<bool> alive(inst.clauses.size(), true);
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<int> pos(n, 0), neg(n, 0);
        for (std::size_t c = 0; c < inst.clauses.size(); ++c) {
            if (!alive[c]) continue;
            for (int lit : inst.clauses[c]) ++(lit > 0 ? pos : neg)[std::abs(lit) - 1];
        }
        for (int v = 0; v < n; ++v) {
            if (norm.fixed[v] || pos[v] + neg[v] == 0 || (pos[v] > 0 && neg[v] > 0)) continue;
            norm.fixed[v] = pos[v] > 0;
            for (std::size_t c = 0; c < inst.clauses.size(); ++c) {
                if (!alive[c]) continue;
                for (int lit : inst.clauses[c])
                    if (std::abs(lit) == v + 1) alive[c] = false;
            }
            changed = true;
        }
    }

    std::vector<int> pos(n, 0), neg(n, 0);
    for (std::size_t c = 0; c < inst.clauses.size(); ++c) {
        if (!alive[c]) continue;
        for (int lit : inst.clauses[c]) ++(lit > 0 ? pos : neg)[std::abs(lit) - 1];
    }
    int next = 0;
    for (int v = 0; v < n; ++v) {
        const int total = pos[v] + neg[v];
        if (total == 0) continue;
        if (total == 1 || total >= 4)
            throw InvalidInput("instance outside (2,3)-SAT fragment: variable " + std::to_string(v + 1) + " occurs " +
                               std::to_string(total) + " times");
        norm.renamed[v] = ++next;
        norm.flipped[v] = neg[v] > pos[v];
    }
    norm.instance.variable_count = next;
    for (std::size_t c = 0; c < inst.clauses.size(); ++c) {
        if (!alive[c]) continue;
        std::vector<int> clause;
        for (int lit : inst.clauses[c]) {
            const int v = std::abs(lit) - 1;
            const bool positive = (lit > 0) != norm.flipped[v];
            clause.push_back(positive ? norm.renamed[v] : -norm.renamed[v]);
        }
        norm.instance.clauses.push_back(std::move(clause));
    }
    if (!is_normalized(norm.instance)) throw InvalidInput("instance outside (2,3)-SAT fragment after normalization");
    return norm;
}

bool satisfies(const SatInstance& inst, const std::vector<bool>& values) {
    for (const auto& clause : inst.clauses) {
        const bool ok = std::any_of(clause.begin(), clause.end(),
                                    [&](int lit) { return values.at(std::abs(lit) - 1) == (lit > 0); });
        if (!ok) return false;
    }
    return true;
}

std::optional<std::vector<bool>> sat_brute(const SatInstance& inst) {
    const int n = inst.variable_count;
    if (n > 24) throw BudgetExceeded("brute-force SAT is limited to 24 variables");
    std::vector<bool> values(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (int v = 0; v < n; ++v) values[v] = (mask >> v) & 1U;
        if (satisfies(inst, values)) return values;
    }
    return std::nullopt;
}

SatInstance random_23sat(int variables, std::uint64_t seed) {
    if (variables < 2) throw InvalidInput("random (2,3)-SAT needs at least 2 variables");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        // Some occurrence profiles cannot be split into clauses (two
        // variables with five occurrences), so redraw them on every attempt.
        std::vector<int> literals;
        for (int v = 1; v <= variables; ++v) {
            literals.push_back(v);
            literals.push_back(-v);
            if (std::bernoulli_distribution(0.5)(rng)) literals.push_back(v);
        }
        std::shuffle(literals.begin(), literals.end(), rng);
        SatInstance inst;
        inst.variable_count = variables;
        std::size_t at = 0;
        bool ok = true;
        while (ok && at < literals.size()) {
            const std::size_t left = literals.size() - at;
            std::size_t size = 2;
            if (left == 3) size = 3;
            else if (left >= 5) size = std::bernoulli_distribution(0.4)(rng) ? 3 : 2;
            std::vector<int> clause(literals.begin() + at, literals.begin() + at + size);
            std::set<int> vars;
            for (int lit : clause) vars.insert(std::abs(lit));
            ok = vars.size() == clause.size();
            inst.clauses.push_back(std::move(clause));
            at += size;
        }
        if (ok && is_normalized(inst)) return inst;
    }
    throw InvalidInput("could not generate a (2,3)-SAT instance; try another seed");
}

} // namespace sigmak
