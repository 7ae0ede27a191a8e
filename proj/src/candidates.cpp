#include <algorithm>

#include "sigmak/abg.hpp"
#include "sigmak/error.hpp"

namespace sigmak {

namespace {

class CandidateWalker {
public:
    CandidateWalker(const AmbiguousBreakpointGraph& g, int k, std::vector<Candidate>& out)
        : g_(g), k_(k), out_(out), on_walk_(g.vertex_count(), 0), bit_(g.square_count(), -1) {}

    void cycles_from(int start) {
        if (g_.is_s_telomere(start) || g_.is_d_telomere(start) || k_ < 2) return;
        start_ = start;
        cycle_ = true;
        push(start);
        step(start, 0);
        pop();
    }

    void paths_from(int telomere) {
        const int first = g_.d_mate(telomere);
        if (!g_.is_s_telomere(telomere) || first < 0 || g_.is_s_telomere(first) || 1 + 1 > k_ - 2) return;
        start_ = telomere;
        cycle_ = false;
        push(telomere);
        push(first);
        step(first, 1);
        pop();
        pop();
    }

private:
    // At `x`, about to leave through a square edge; `length` edges walked so far.
    void step(int x, std::size_t length) {
        const int q = g_.square_of(x);
        const Square& sq = g_.square(q);
        for (int bit = 0; bit < 2; ++bit) {
            if (bit_[q] >= 0 && bit_[q] != bit) continue;
            const int y = sq.partner(g_.slot_of(x), bit);
            if (on_walk_[y] || (cycle_ && y < start_)) continue;
            const bool fresh = bit_[q] < 0;
            if (fresh) {
                bit_[q] = static_cast<std::int8_t>(bit);
                fixed_.push_back(q);
            }
            push(y);
            const int z = g_.d_mate(y);
            if (cycle_) {
                if (z == start_) {
                    if (length + 2 <= static_cast<std::size_t>(k_)) record(ComponentKind::Cycle, length + 2);
                } else if (z > start_ && !on_walk_[z] && !g_.is_s_telomere(z) &&
                           length + 4 <= static_cast<std::size_t>(k_)) {
                    push(z);
                    step(z, length + 2);
                    pop();
                }
            } else if (z < 0) {
                if (length + 1 + 2 <= static_cast<std::size_t>(k_)) record(ComponentKind::Path, length + 1);
            } else if (!on_walk_[z] && !g_.is_s_telomere(z) && length + 3 + 2 <= static_cast<std::size_t>(k_)) {
                push(z);
                step(z, length + 2);
                pop();
            }
            pop();
            if (fresh) {
                bit_[q] = -1;
                fixed_.pop_back();
            }
        }
    }

    void record(ComponentKind kind, std::size_t length) {
        Candidate c;
        c.kind = kind;
        c.length = length;
        c.vertices = walk_;
        for (int q : fixed_) c.required.emplace_back(q, static_cast<std::uint8_t>(bit_[q]));
        std::sort(c.required.begin(), c.required.end());
        out_.push_back(std::move(c));
    }

    void push(int v) {
        walk_.push_back(v);
        on_walk_[v] = 1;
    }

    void pop() {
        on_walk_[walk_.back()] = 0;
        walk_.pop_back();
    }

    const AmbiguousBreakpointGraph& g_;
    int k_;
    std::vector<Candidate>& out_;
    std::vector<char> on_walk_;
    std::vector<std::int8_t> bit_;
    std::vector<int> fixed_;
    std::vector<int> walk_;
    int start_ = 0;
    bool cycle_ = true;
};

} // namespace

std::vector<Candidate> enumerate_candidates(const AmbiguousBreakpointGraph& g, int k) {
    if (k < 2 || k % 2 != 0) throw InvalidInput("candidate enumeration needs an even k >= 2");
    std::vector<Candidate> out;
    CandidateWalker walker(g, k, out);
    const int n = static_cast<int>(g.vertex_count());
    for (int v = 0; v < n; ++v) walker.cycles_from(v);
    for (int v = 0; v < n; ++v) walker.paths_from(v);
    return out;
}

bool conflict(const Candidate& a, const Candidate& b) {
    for (int x : a.vertices)
        if (std::find(b.vertices.begin(), b.vertices.end(), x) != b.vertices.end()) return true;
    auto i = a.required.begin();
    auto j = b.required.begin();
    while (i != a.required.end() && j != b.required.end()) {
        if (i->first < j->first) {
            ++i;
        } else if (j->first < i->first) {
            ++j;
        } else {
            if (i->second != j->second) return true;
            ++i;
            ++j;
        }
    }
    return false;
}

} // namespace sigmak
