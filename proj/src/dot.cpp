#include <sstream>

#include "sigmak/abg.hpp"

namespace sigmak {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + '"';
}

} // namespace

std::string to_dot(const AmbiguousBreakpointGraph& g, const std::optional<Resolution>& tau) {
    std::ostringstream out;
    out << "graph abg {\n";
    out << "  node [shape=circle, fontsize=10];\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const int x = static_cast<int>(v);
        out << "  v" << v << " [label=" << quoted(g.label(x));
        if (g.is_s_telomere(x) && g.is_d_telomere(x)) out << ", telomere=\"both\", style=filled, fillcolor=gray";
        else if (g.is_s_telomere(x)) out << ", telomere=\"S\", shape=square";
        else if (g.is_d_telomere(x)) out << ", telomere=\"D\", shape=doublecircle";
        out << "];\n";
    }
    for (std::size_t i = 0; i < g.isolated_count(); ++i)
        out << "  z" << i << " [label=\"\", telomere=\"both\", style=filled, fillcolor=gray];\n";
    for (std::size_t q = 0; q < g.square_count(); ++q) {
        for (int bit = 0; bit < 2; ++bit) {
            if (tau && (*tau)[q] != bit) continue;
            for (auto [x, y] : g.square(static_cast<int>(q)).edges(bit)) {
                out << "  v" << x << " -- v" << y << " [color=orange, square=" << q << ", pair=" << bit;
                if (bit == 1) out << ", style=dashed";
                out << "];\n";
            }
        }
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const int m = g.d_mate(static_cast<int>(v));
        if (m > static_cast<int>(v)) out << "  v" << v << " -- v" << m << " [color=black];\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const BreakpointGraph& g) {
    std::ostringstream out;
    out << "graph breakpoint {\n";
    out << "  node [shape=circle, fontsize=10];\n";
    const int n = static_cast<int>(g.first_mate.size());
    for (int v = 0; v < n; ++v) {
        const bool t1 = g.first_mate[v] < 0;
        const bool t2 = g.second_mate[v] < 0;
        out << "  v" << v << " [label=" << quoted(to_string(g.vertex(v)));
        if (t1 && t2) out << ", telomere=\"both\", style=filled, fillcolor=gray";
        else if (t1) out << ", telomere=\"first\", shape=square";
        else if (t2) out << ", telomere=\"second\", shape=doublecircle";
        out << "];\n";
    }
    for (int v = 0; v < n; ++v)
        if (g.first_mate[v] >= v) out << "  v" << v << " -- v" << g.first_mate[v] << " [color=orange];\n";
    for (int v = 0; v < n; ++v)
        if (g.second_mate[v] >= v) out << "  v" << v << " -- v" << g.second_mate[v] << " [color=black];\n";
    out << "}\n";
    return out.str();
}

} // namespace sigmak
