#include <cctype>
#include <map>

#include "sigmak/error.hpp"
#include "sigmak/genome.hpp"

namespace sigmak {

namespace {

class GenomeParser {
public:
    explicit GenomeParser(std::string_view text) : text_(text) {}

    Genome run() {
        std::vector<Chromosome> chromosomes;
        while (true) {
            skip_blank();
            if (at_end()) break;
            chromosomes.push_back(chromosome());
        }
        if (chromosomes.empty()) fail("genome has no chromosomes");
        return Genome(std::move(chromosomes));
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

    // Whitespace and comments; `#` runs to the end of the line.
    void skip_blank() {
        while (!at_end()) {
            if (peek() == '#') {
                while (!at_end() && peek() != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(peek()))) {
                advance();
            } else {
                break;
            }
        }
    }

    Chromosome chromosome() {
        Chromosome c;
        char close = 0;
        if (peek() == '[') {
            c.shape = Shape::Linear;
            close = ']';
        } else if (peek() == '(') {
            c.shape = Shape::Circular;
            close = ')';
        } else {
            fail(std::string("expected '[' or '(', found '") + peek() + "'");
        }
        advance();
        while (true) {
            skip_blank();
            if (at_end()) fail(std::string("unterminated chromosome, expected '") + close + "'");
            if (peek() == close) {
                if (c.genes.empty()) fail("empty chromosome");
                advance();
                return c;
            }
            c.genes.push_back(gene());
        }
    }

    GeneOccurrence gene() {
        const int line = line_;
        const int column = column_;
        GeneOccurrence g;
        if (peek() == '-') {
            g.orientation = Orientation::Reverse;
            advance();
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a gene id");
        long long id = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            id = id * 10 + (peek() - '0');
            if (id > 1'000'000'000) fail("gene id too large");
            advance();
        }
        if (id == 0) throw ParseError("gene ids must be positive", line, column);
        g.id = static_cast<int>(id);
        if (!at_end() && peek() == '.') {
            advance();
            if (at_end() || (peek() != 'a' && peek() != 'b')) fail("expected copy index 'a' or 'b'");
            g.copy = peek() == 'a' ? Copy::A : Copy::B;
            advance();
        }
        if (!at_end() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != ']' && peek() != ')' &&
            peek() != '#')
            fail(std::string("unexpected character '") + peek() + "'");
        check_usage(g, line, column);
        return g;
    }

    void check_usage(const GeneOccurrence& g, int line, int column) {
        auto& [plain, a, b] = usage_[g.id];
        switch (g.copy) {
        case Copy::None: ++plain; break;
        case Copy::A: ++a; break;
        case Copy::B: ++b; break;
        }
        if (a > 1 || b > 1)
            throw ParseError("duplicate extremity usage: gene " + to_string(g) + " repeated", line, column);
        if (plain > 0 && a + b > 0)
            throw ParseError("gene " + std::to_string(g.id) + " mixes indexed and unindexed copies", line, column);
        if (plain > 2)
            throw ParseError("duplicate extremity usage: gene " + std::to_string(g.id) + " occurs more than twice",
                             line, column);
    }

    struct Usage {
        int plain = 0;
        int a = 0;
        int b = 0;
    };

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    std::map<int, Usage> usage_;
};

} // namespace

Genome parse_genome(std::string_view text) {
    return GenomeParser(text).run();
}

std::string format_genome(const Genome& g) {
    std::string out;
    for (const Chromosome& c : g.canonical_chromosomes()) {
        if (!out.empty()) out += '\n';
        out += c.shape == Shape::Linear ? '[' : '(';
        for (std::size_t i = 0; i < c.genes.size(); ++i) {
            if (i > 0) out += ' ';
            out += to_string(c.genes[i]);
        }
        out += c.shape == Shape::Linear ? ']' : ')';
    }
    return out;
}

} // namespace sigmak
