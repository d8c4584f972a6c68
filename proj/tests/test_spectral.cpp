#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iso4d/spectral.hpp>

using namespace iso4d;

static RefiningSequence RS(std::vector<std::vector<int>> ps) {
    RefiningSequence r;
    for (auto& p : ps) r.partitions.push_back(Partition{p});
    return r;
}

TEST_CASE("parse_local") {
    CHECK(parse_local("((22)(2))((31))((1)(1))") ==
          RS({{6, 4, 2}, {4, 2, 4, 1, 1}, {2, 2, 2, 3, 1, 1, 1}}));
    CHECK(parse_local("111") == RS({{1, 1, 1}}));
    CHECK(parse_local("((11))((1))") == RS({{2, 1}, {2, 1}, {1, 1, 1}}));
    CHECK_THROWS_AS(parse_local("((1)1)"), parse_error);       // non-uniform depth
    CHECK_THROWS_AS(parse_local("((1)(1))((1)((1)))"), parse_error);
    CHECK_THROWS_AS(parse_local("(1"), parse_error);
    CHECK_THROWS_AS(parse_local(""), parse_error);
    // brace escape for multi-digit parts
    CHECK(parse_local("{10}2") == RS({{10, 2}}));
}

TEST_CASE("print_local round trips") {
    CHECK(print_local(RS({{1, 1, 1}})) == "111");
    CHECK(print_local(RS({{2, 1}, {2, 1}, {1, 1, 1}})) == "((11))((1))");
    CHECK(print_local(RS({{6, 4, 2}, {4, 2, 4, 1, 1}, {2, 2, 2, 3, 1, 1, 1}})) ==
          "((22)(2))((31))((1)(1))");
    CHECK(print_local(RS({{10, 2}})) == "{10}2");
}

TEST_CASE("parse_spectral") {
    SpectralType st = parse_spectral("21,21,111,111");
    CHECK(st.locals.size() == 4);
    CHECK(st.m() == 3);
    CHECK_THROWS_AS(parse_spectral("(11)(11),31,21"), parse_error);  // m = 4,4,3
    SpectralType st2 = parse_spectral("(2)(2),(2)(11)");
    CHECK(st2.locals.size() == 2);
    CHECK(st2.m() == 4);
}

TEST_CASE("poincare_rank") {
    CHECK(poincare_rank(parse_local("111")) == 0);
    CHECK(poincare_rank(parse_local("((11))((1))")) == 2);
    CHECK(poincare_rank(parse_local("(2)(1)")) == 1);
}

TEST_CASE("confluence_admissible") {
    CHECK(confluence_admissible(parse_local("21"), parse_local("111")));
    CHECK_FALSE(confluence_admissible(parse_local("22"), parse_local("31")));
    for (const char* s : {"21", "111", "(11)(1)", "((2))((11))"})
        CHECK(confluence_admissible(parse_local(s), parse_local(s)));
}

TEST_CASE("merge rule reproduces the worked confluences") {
    // 21 + 21 -> (2)(1);  21 + 111 -> (11)(1)
    CHECK(print_local(merge_locals(parse_local("21"), parse_local("21"))) == "(2)(1)");
    CHECK(print_local(merge_locals(parse_local("21"), parse_local("111"))) == "(11)(1)");
    CHECK(print_local(merge_locals(parse_local("(2)(1)"), parse_local("111"))) ==
          "((11))((1))");
}

TEST_CASE("degeneration graphs match the schemes") {
    DegenerationGraph gar = degeneration_graph(Family::Garnier);
    CHECK(gar.nodes.size() == 7);
    CHECK(gar.nodes.front().pattern == "1+1+1+1+1");
    CHECK(gar.nodes.back().hamiltonian == "Gar:5");
    CHECK(gar.edges.size() == 9);

    DegenerationGraph mat = degeneration_graph(Family::Matrix);
    CHECK(mat.nodes.back().spectral == "(((2)))(((11)))");
    CHECK(mat.nodes.back().hamiltonian == "Mat:II");

    DegenerationGraph ss = degeneration_graph(Family::Sasano);
    CHECK(ss.nodes.back().pattern == "4");
    CHECK(ss.nodes.back().spectral.empty());  // the empty box

    // acyclicity + level adjacency: every edge goes to the next pattern level
    for (Family f : {Family::Garnier, Family::FS, Family::Sasano, Family::Matrix}) {
        DegenerationGraph g = degeneration_graph(f);
        for (auto [a, b] : g.edges) {
            SingularityPattern pa = parse_pattern(g.nodes[a].pattern);
            SingularityPattern pb = parse_pattern(g.nodes[b].pattern);
            CHECK(pa.entries.size() == pb.entries.size() + 1);
        }
    }
}

TEST_CASE("every graph edge is realized by an admissible merge") {
    for (Family f : {Family::Garnier, Family::FS, Family::Sasano, Family::Matrix}) {
        DegenerationGraph g = degeneration_graph(f);
        for (auto [ai, bi] : g.edges) {
            if (g.nodes[bi].spectral.empty()) continue;  // Sasano empty box
            SpectralType A = parse_spectral(g.nodes[ai].spectral);
            SpectralType B = parse_spectral(g.nodes[bi].spectral);
            bool found = false;
            for (size_t i = 0; i < A.locals.size() && !found; ++i)
                for (size_t j = i + 1; j < A.locals.size() && !found; ++j) {
                    if (!confluence_admissible(A.locals[i], A.locals[j])) continue;
                    RefiningSequence merged;
                    try {
                        merged = merge_locals(A.locals[i], A.locals[j]);
                    } catch (const iso4d_error&) {
                        continue;
                    }
                    // candidate type: merged + the untouched locals
                    std::vector<RefiningSequence> cand{merged};
                    for (size_t k = 0; k < A.locals.size(); ++k)
                        if (k != i && k != j) cand.push_back(A.locals[k]);
                    if (cand.size() != B.locals.size()) continue;
                    // match as multisets of locals
                    std::vector<bool> used(cand.size(), false);
                    std::function<bool(size_t)> match = [&](size_t bidx) -> bool {
                        if (bidx == B.locals.size()) return true;
                        for (size_t c = 0; c < cand.size(); ++c) {
                            if (used[c] || !eq_multiset(cand[c], B.locals[bidx])) continue;
                            used[c] = true;
                            if (match(bidx + 1)) return true;
                            used[c] = false;
                        }
                        return false;
                    };
                    if (match(0)) found = true;
                }
            INFO(family_name(f) << " edge " << g.nodes[ai].spectral << " -> "
                                << g.nodes[bi].spectral);
            CHECK(found);
        }
    }
}

TEST_CASE("corpus round trip and validity") {
    for (const std::string& s : spectral_corpus()) {
        INFO("corpus string: " << s);
        SpectralType st = parse_spectral(s);
        for (const auto& loc : st.locals) CHECK(validate_sequence(loc));
        CHECK(print_spectral(st) == s);
    }
}

TEST_CASE("flagged strings are rejected by the validator") {
    for (const auto& f : flagged_strings()) {
        INFO("flagged: " << f.text);
        CHECK_THROWS_AS(parse_spectral(f.text), parse_error);
        if (!f.corrected.empty()) CHECK_NOTHROW(parse_spectral(f.corrected));
    }
}

TEST_CASE("pattern entries count partitions per local") {
    for (Family f : {Family::Garnier, Family::FS, Family::Sasano, Family::Matrix}) {
        DegenerationGraph g = degeneration_graph(f);
        for (const auto& n : g.nodes) {
            if (n.spectral.empty()) continue;
            SpectralType st = parse_spectral(n.spectral);
            SingularityPattern p = parse_pattern(n.pattern);
            REQUIRE(st.locals.size() == p.entries.size());
            // diagram convention: pattern entries descend, locals in same order
            for (size_t i = 0; i < st.locals.size(); ++i)
                CHECK(Rat(static_cast<long>(st.locals[i].partitions.size())) == p.entries[i]);
        }
    }
}

TEST_CASE("classical scheme labels") {
    auto nodes = classical_scheme();
    CHECK(nodes.size() == 10);
    int ramified = 0;
    for (const auto& n : nodes) ramified += n.ramified ? 1 : 0;
    CHECK(ramified == 5);
    for (auto [a, b] : classical_edges()) {
        CHECK(a >= 0);
        CHECK(b < static_cast<int>(nodes.size()));
    }
}

TEST_CASE("dot export") {
    std::string dot = to_dot(degeneration_graph(Family::FS));
    CHECK(dot.find("digraph FS") != std::string::npos);
    CHECK(dot.find("(((1)(1)))(((1)))") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
}
