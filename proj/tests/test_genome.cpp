#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "sigmak/bp_graph.hpp"
#include "sigmak/error.hpp"
#include "sigmak/genome.hpp"

using namespace sigmak;
using test_oracles::strings;

TEST_CASE("parse: singular genome with circular and linear chromosomes") {
    const Genome g = parse_genome("(1 -3 2)\n(4)\n[5 -6]");
    CHECK(strings(g.adjacencies()) == std::set<std::string>{"1h3h", "2t3t", "1t2h", "4t4h", "5h6h"});
    CHECK(strings(g.telomeres()) == std::set<std::string>{"5t", "6t"});
    CHECK(g.is_singular());
    CHECK(g.n_star() == 6);
    CHECK(g.linear_count() == 1);
    CHECK(g.circular_count() == 2);
}

TEST_CASE("parse: one-gene linear chromosome") {
    const Genome g = parse_genome("[1]");
    CHECK(g.adjacencies().empty());
    CHECK(strings(g.telomeres()) == std::set<std::string>{"1t", "1h"});
}

TEST_CASE("parse: duplicated genome") {
    const Genome g = parse_genome("(1 2 -3 1)\n[3 -2]");
    CHECK(g.is_duplicated());
    CHECK_FALSE(g.is_singular());
    CHECK(strings(g.adjacencies()) == std::set<std::string>{"1h2t", "2h3h", "1t3t", "1t1h", "2h3h"});
    CHECK(g.adjacencies().size() == 5);
    CHECK(strings(g.telomeres()) == std::set<std::string>{"3t", "2t"});
}

TEST_CASE("parse: comments and copy indices") {
    const Genome g = parse_genome("# header\n[1.a 2.a]  # trailing\n[-1.b 2.b]\n");
    CHECK(g.is_singular());
    CHECK(g.has_copy_indices());
    CHECK(g.erase_indices().is_duplicated());
}

TEST_CASE("parse errors carry line and column") {
    auto message = [](const char* text) {
        try {
            parse_genome(text);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message("[1 2]\n[3 x]").rfind("line 2, column 4", 0) == 0);
    CHECK(message("[]").find("empty chromosome") != std::string::npos);
    CHECK(message("[1 1 1]").find("duplicate extremity usage") != std::string::npos);
    CHECK(message("[1.a 1.a]").find("duplicate extremity usage") != std::string::npos);
    CHECK(message("[0]").find("positive") != std::string::npos);
    CHECK(message("").find("no chromosomes") != std::string::npos);
    CHECK(message("[1 2]]").find("line 1, column 6") != std::string::npos);
    CHECK(message("[1.a 1]").find("mixes") != std::string::npos);
}

TEST_CASE("format: canonical rotation and reflection") {
    CHECK(format_genome(parse_genome("[1 -3 2]")) == "[1 -3 2]");
    CHECK(format_genome(parse_genome("(2 1)")) == "(1 2)");
    CHECK(format_genome(parse_genome("[2 3 -1]")) == "[1 -3 -2]");
    CHECK(format_genome(parse_genome("(-2 -1)")) == "(1 2)");
    CHECK(parse_genome("(1 2 3)") == parse_genome("(-1 -3 -2)"));
    CHECK(parse_genome("(1 2 3)") == parse_genome("(3 1 2)"));
    CHECK_FALSE(parse_genome("(1 2 3)") == parse_genome("(1 3 2)"));
}

TEST_CASE("format: least representation agrees with a brute-force search") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const Genome g = random_genome(6, 1 + seed % 2, seed % 3, seed);
        for (const Chromosome& c : g.chromosomes())
            CHECK(c.canonical() == test_oracles::least_representation(c));
    }
}

TEST_CASE("format/parse round trip and size invariants on random genomes") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const int n = 1 + static_cast<int>(seed % 9);
        const int lin = static_cast<int>(seed % 3) % (n + 1);
        const int circ = lin == 0 ? 1 : static_cast<int>(seed % 2) * std::min(1, n - lin);
        const Genome g = random_genome(n, lin, circ, seed);
        CHECK(parse_genome(format_genome(g)) == g);
        CHECK(g.telomeres().size() == 2 * g.linear_count());
        CHECK(g.adjacencies().size() == g.n_star() - g.linear_count());
        CHECK(g.n_star() == static_cast<std::size_t>(n));
        CHECK(g.linear_count() == static_cast<std::size_t>(lin));
        CHECK(g.circular_count() == static_cast<std::size_t>(circ));
    }
}

TEST_CASE("random_genome is deterministic and honours its shape") {
    const Genome g = random_genome(3, 1, 0, 7);
    CHECK(g.n_star() == 3);
    CHECK(g.linear_count() == 1);
    CHECK(g.circular_count() == 0);
    CHECK(format_genome(g) == format_genome(random_genome(3, 1, 0, 7)));
    CHECK_THROWS_AS(random_genome(2, 2, 1, 1), InvalidInput);
    CHECK_THROWS_AS(random_genome(0, 0, 0, 1), InvalidInput);
}

TEST_CASE("classify_pair") {
    CHECK(classify_pair(parse_genome("(1 2)[3 -4]"), parse_genome("(1 -3 2)[4]")).kind == PairClass::Canonical);
    const auto cls = classify_pair(parse_genome("[1 2 3]"), parse_genome("[1 2 -3 1][-3 2]"));
    CHECK(cls.kind == PairClass::OneTwoCognate);
    CHECK(cls.first_is_singular);
    const auto swapped = classify_pair(parse_genome("[1 2 -3 1][-3 2]"), parse_genome("[1 2 3]"));
    CHECK(swapped.kind == PairClass::OneTwoCognate);
    CHECK_FALSE(swapped.first_is_singular);
    CHECK(classify_pair(parse_genome("[1]"), parse_genome("[2]")).kind == PairClass::NotCognate);
    CHECK(classify_pair(parse_genome("[1 1]"), parse_genome("(1)(1)")).kind == PairClass::TwoTwoCognate);
}

TEST_CASE("double_genome") {
    const Doubling d = double_genome(parse_genome("(1 2)[3 4]"));
    CHECK(d.layout_count == 2);
    CHECK(test_oracles::multiset(d.adjacencies) ==
          std::multiset<std::string>{"1h2t", "1h2t", "1t2h", "1t2h", "3h4t", "3h4t"});
    CHECK(test_oracles::multiset(d.telomeres) == std::multiset<std::string>{"3t", "3t", "4h", "4h"});

    const Doubling one = double_genome(parse_genome("[1]"));
    CHECK(one.layout_count == 1);
    CHECK(one.adjacencies.empty());
    CHECK(test_oracles::multiset(one.telomeres) == std::multiset<std::string>{"1t", "1t", "1h", "1h"});

    CHECK(double_genome(parse_genome("(1)(2)")).layout_count == 4);
    CHECK_THROWS_AS(double_genome(parse_genome("[1 1]")), InvalidInput);
}

TEST_CASE("enumerate_resolved_doublings: small cases") {
    // The two labellings of [3 4][3 4] differ: 3h4t joins copies a-a in one
    // and a-b in the other.
    const auto linear = enumerate_resolved_doublings(parse_genome("[3 4]"));
    CHECK(linear.size() == 2);
    std::set<std::string> texts;
    for (const Genome& b : linear) texts.insert(format_genome(b));
    CHECK(texts == std::set<std::string>{"[3.a 4.a]\n[3.b 4.b]", "[3.a 4.b]\n[3.b 4.a]"});

    std::set<std::string> circ;
    for (const Genome& b : enumerate_resolved_doublings(parse_genome("(1 2)"))) circ.insert(format_genome(b));
    CHECK(circ.count("(1.a 2.a)\n(1.b 2.b)"));
    CHECK(circ.count("(1.a 2.a 1.b 2.b)"));

    std::set<std::string> single;
    for (const Genome& b : enumerate_resolved_doublings(parse_genome("(1)"))) single.insert(format_genome(b));
    CHECK(single == std::set<std::string>{"(1.a)\n(1.b)", "(1.a 1.b)"});
}

TEST_CASE("enumerate_resolved_doublings: members are doublings of S") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const int n = 1 + static_cast<int>(seed % 5);
        const Genome s = random_genome(n, seed % 2 ? 1 : 0, seed % 2 ? 0 : 1, seed);
        const auto all = enumerate_resolved_doublings(s);
        CHECK(all.size() >= 1);
        CHECK(all.size() <= (std::size_t{1} << (s.circular_count() + s.n_star())));
        const Doubling d = double_genome(s);
        for (const Genome& b : all) {
            CHECK(b.is_singular());
            const Genome erased = b.erase_indices();
            CHECK(erased.is_doubled());
            CHECK(test_oracles::multiset(erased.adjacencies()) == test_oracles::multiset(d.adjacencies));
            CHECK(test_oracles::multiset(erased.telomeres()) == test_oracles::multiset(d.telomeres));
        }
    }
    CHECK_THROWS_AS(enumerate_resolved_doublings(random_genome(13, 1, 0, 1)), BudgetExceeded);
}

TEST_CASE("singularize") {
    CHECK(format_genome(singularize(parse_genome("(1 2 -3 1)\n[3 -2]"))) ==
          format_genome(parse_genome("(1.a 2.a -3.a 1.b)\n[3.b -2.b]")));
    CHECK(format_genome(singularize(parse_genome("[1 1]"))) == "[1.a 1.b]");
    CHECK(format_genome(singularize(parse_genome("[1 2][2 1]"))) == format_genome(parse_genome("[1.a 2.a][2.b 1.b]")));
    CHECK_THROWS_AS(singularize(parse_genome("[1 2]")), InvalidInput);
}

TEST_CASE("apply_dcj: inversion, fusion, identity") {
    const Genome ring = parse_genome("(1 2 3 4)");
    const Extremity h1{1, End::Head}, t2{2, End::Tail}, h3{3, End::Head}, t4{4, End::Tail};
    const Genome inverted = apply_dcj(ring, {h1, t2}, CutSite{h3, t4}, {{h1, h3}, {t2, t4}});
    CHECK(inverted == parse_genome("(1 -3 -2 4)"));

    const Genome two = parse_genome("[1 2][3]");
    const Extremity h2{2, End::Head}, t3{3, End::Tail};
    const Genome fused = apply_dcj(two, {h2, std::nullopt}, CutSite{t3, std::nullopt}, {{h2, t3}});
    CHECK(fused == parse_genome("[1 2 3]"));
    CHECK(fused.chromosomes().size() == two.chromosomes().size() - 1);

    const Genome pair = parse_genome("(1 2)");
    const Extremity t1{1, End::Tail};
    const Extremity h2b{2, End::Head};
    CHECK(apply_dcj(pair, {h1, t2}, CutSite{h2b, t1}, {{h1, t2}, {h2b, t1}}) == pair);

    CHECK_THROWS_AS(apply_dcj(ring, {h1, t4}, std::nullopt, {}), InvalidInput);
    CHECK_THROWS_AS(apply_dcj(ring, {h1, t2}, CutSite{h3, t4}, {{h1, h1}}), InvalidInput);
}

TEST_CASE("DCJ neighbours preserve extremities and move d_inf by at most one") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        const Genome g = random_genome(5, 1, 1, seed);
        const Genome target = random_genome(5, 2, 0, seed + 100);
        const HalfInt before = distance(g, target, SigmaIndex::infinity());
        const ExtremityLayout layout = ExtremityLayout::from_genome(g);
        CHECK(layout.to_genome() == g);
        for (const ExtremityLayout& next : dcj_neighbours(layout)) {
            const Genome h = next.to_genome();
            CHECK(h.gene_keys() == g.gene_keys());
            const HalfInt after = distance(h, target, SigmaIndex::infinity());
            CHECK(after - before <= HalfInt(1));
            CHECK(before - after <= HalfInt(1));
        }
    }
}

TEST_CASE("random_cognate_pair") {
    const GenomePair p = random_cognate_pair(4, true, 3, 5);
    const auto cls = classify_pair(p.first, p.second);
    CHECK(cls.kind == PairClass::OneTwoCognate);
    CHECK(cls.first_is_singular);
    const GenomePair q = random_cognate_pair(4, false, 2, 5);
    CHECK(classify_pair(q.first, q.second).kind == PairClass::Canonical);
    CHECK(format_genome(random_cognate_pair(4, true, 3, 5).second) == format_genome(p.second));
}
