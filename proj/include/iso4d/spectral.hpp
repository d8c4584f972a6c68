#pragma once
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "poly.hpp"

namespace iso4d {

// ---------------------------------------------------------------------------
// Partitions and refining sequences (written order is meaningful).
// ---------------------------------------------------------------------------

struct Partition {
    std::vector<int> parts;  // positive, order preserved
    int sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    friend bool operator==(const Partition&, const Partition&) = default;
};

inline bool eq_ordered(const Partition& a, const Partition& b) { return a.parts == b.parts; }
inline bool eq_multiset(const Partition& a, const Partition& b) {
    auto x = a.parts, y = b.parts;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

// Can `fine` be grouped (multiset sense) so the group sums give `coarse`?
inline bool refines_multiset(const Partition& fine, const Partition& coarse) {
    if (fine.sum() != coarse.sum()) return false;
    std::vector<int> f = fine.parts;
    std::sort(f.rbegin(), f.rend());
    std::vector<int> need = coarse.parts;
    // backtracking: place each fine part into some coarse bin
    std::vector<int> rem = need;
    std::function<bool(size_t)> place = [&](size_t i) -> bool {
        if (i == f.size()) {
            for (int r : rem)
                if (r != 0) return false;
            return true;
        }
        for (size_t b = 0; b < rem.size(); ++b) {
            if (rem[b] < f[i]) continue;
            // skip symmetric bins with identical remaining capacity
            bool dup = false;
            for (size_t c = 0; c < b; ++c)
                if (rem[c] == rem[b]) dup = true;
            if (dup) continue;
            rem[b] -= f[i];
            if (place(i + 1)) return true;
            rem[b] += f[i];
        }
        return false;
    };
    return place(0);
}

struct RefiningSequence {
    std::vector<Partition> partitions;  // p_0 (coarsest) ... p_r (finest)
    int m() const { return partitions.empty() ? 0 : partitions.front().sum(); }
    int poincare_rank() const { return static_cast<int>(partitions.size()) - 1; }
    friend bool operator==(const RefiningSequence&, const RefiningSequence&) = default;
};

inline bool eq_multiset(const RefiningSequence& a, const RefiningSequence& b) {
    if (a.partitions.size() != b.partitions.size()) return false;
    for (size_t i = 0; i < a.partitions.size(); ++i)
        if (!eq_multiset(a.partitions[i], b.partitions[i])) return false;
    return true;
}

// Consecutive-run refinement: each part of p_i is the sum of a consecutive
// run of parts of p_{i+1} (this is what the nested-parenthesis notation
// encodes).  Returns the run boundaries or nullopt on violation.
inline std::optional<std::vector<size_t>> refinement_runs(const Partition& coarse,
                                                          const Partition& fine) {
    std::vector<size_t> bounds{0};
    size_t j = 0;
    for (int part : coarse.parts) {
        int acc = 0;
        while (acc < part) {
            if (j >= fine.parts.size()) return std::nullopt;
            acc += fine.parts[j++];
        }
        if (acc != part) return std::nullopt;
        bounds.push_back(j);
    }
    if (j != fine.parts.size()) return std::nullopt;
    return bounds;
}

inline bool validate_sequence(const RefiningSequence& r) {
    if (r.partitions.empty()) return false;
    for (const auto& p : r.partitions) {
        if (p.parts.empty()) return false;
        for (int x : p.parts)
            if (x <= 0) return false;
        if (p.sum() != r.m()) return false;
    }
    for (size_t i = 0; i + 1 < r.partitions.size(); ++i)
        if (!refinement_runs(r.partitions[i], r.partitions[i + 1])) return false;
    return true;
}

struct SpectralType {
    std::vector<RefiningSequence> locals;
    int m() const { return locals.empty() ? 0 : locals.front().m(); }
    friend bool operator==(const SpectralType&, const SpectralType&) = default;
};

// ---------------------------------------------------------------------------
// Parser / printer for the nested-parenthesis notation.
// ---------------------------------------------------------------------------

namespace detail {
struct SpectralNode {
    int leaf = -1;  // >=0 for digit leaves
    std::vector<SpectralNode> kids;
};

inline SpectralNode parse_group(const std::string& s, size_t& pos);

inline std::vector<SpectralNode> parse_list(const std::string& s, size_t& pos) {
    std::vector<SpectralNode> nodes;
    while (pos < s.size() && s[pos] != ')') {
        if (s[pos] == '(') {
            ++pos;
            SpectralNode n;
            n.kids = parse_list(s, pos);
            if (pos >= s.size() || s[pos] != ')') throw parse_error("unbalanced '(' in spectral type");
            ++pos;
            if (n.kids.empty()) throw parse_error("empty group in spectral type");
            nodes.push_back(std::move(n));
        } else if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            SpectralNode n;
            n.leaf = s[pos] - '0';
            ++pos;
            nodes.push_back(n);
        } else if (s[pos] == '{') {  // multi-digit escape, e.g. {10}
            size_t close = s.find('}', pos);
            if (close == std::string::npos) throw parse_error("unterminated '{' escape");
            SpectralNode n;
            n.leaf = std::stoi(s.substr(pos + 1, close - pos - 1));
            pos = close + 1;
            nodes.push_back(n);
        } else {
            throw parse_error(std::string("unexpected character '") + s[pos] + "' in spectral type");
        }
    }
    return nodes;
}

inline int node_depth(const SpectralNode& n, bool& uniform) {
    if (n.leaf >= 0) return 0;
    int d = -1;
    for (const auto& k : n.kids) {
        int kd = node_depth(k, uniform);
        if (d >= 0 && kd != d) uniform = false;
        d = std::max(d, kd);
    }
    return d + 1;
}

inline int node_sum(const SpectralNode& n) {
    if (n.leaf >= 0) return n.leaf;
    int s = 0;
    for (const auto& k : n.kids) s += node_sum(k);
    return s;
}

inline void collect_level(const std::vector<SpectralNode>& nodes, int level, Partition& out) {
    for (const auto& n : nodes) {
        if (level == 0)
            out.parts.push_back(node_sum(n));
        else
            collect_level(n.kids, level - 1, out);
    }
}
}  // namespace detail

// Parse one local type, e.g. "((22)(2))((31))((1)(1))" or "111".
inline RefiningSequence parse_local(const std::string& s) {
    if (s.empty()) throw parse_error("empty local spectral type");
    size_t pos = 0;
    std::vector<detail::SpectralNode> nodes = detail::parse_list(s, pos);
    if (pos != s.size()) throw parse_error("unbalanced ')' in spectral type");
    if (nodes.empty()) throw parse_error("empty local spectral type");
    bool uniform = true;
    int depth = -1;
    for (const auto& n : nodes) {
        int d = detail::node_depth(n, uniform);
        if (depth >= 0 && d != depth) uniform = false;
        depth = std::max(depth, d);
    }
    if (!uniform) throw parse_error("non-uniform nesting depth in spectral type '" + s + "'");
    RefiningSequence r;
    for (int level = 0; level <= depth; ++level) {
        Partition p;
        detail::collect_level(nodes, level, p);
        r.partitions.push_back(std::move(p));
    }
    if (!validate_sequence(r))
        throw parse_error("refinement violation in spectral type '" + s + "'");
    return r;
}

inline std::string print_local(const RefiningSequence& r) {
    if (!validate_sequence(r)) throw iso4d_error("print_local: invalid refining sequence");
    const size_t levels = r.partitions.size();
    std::function<std::string(size_t, size_t, size_t)> render =
        [&](size_t level, size_t from, size_t to) -> std::string {
        std::ostringstream os;
        if (level + 1 == levels) {
            for (size_t i = from; i < to; ++i) {
                int part = r.partitions[level].parts[i];
                if (part >= 10)
                    os << "{" << part << "}";
                else
                    os << part;
            }
            return os.str();
        }
        auto runs = refinement_runs(r.partitions[level], r.partitions[level + 1]);
        // restrict to parts [from,to) of this level
        for (size_t i = from; i < to; ++i)
            os << "(" << render(level + 1, (*runs)[i], (*runs)[i + 1]) << ")";
        return os.str();
    };
    return render(0, 0, r.partitions[0].parts.size());
}

inline SpectralType parse_spectral(const std::string& s) {
    SpectralType st;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        std::string piece = s.substr(start, comma == std::string::npos ? std::string::npos
                                                                       : comma - start);
        st.locals.push_back(parse_local(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    for (const auto& loc : st.locals)
        if (loc.m() != st.m())
            throw parse_error("size-consistency error in spectral type '" + s +
                              "': locals have different m");
    return st;
}

inline std::string print_spectral(const SpectralType& st) {
    std::string out;
    for (size_t i = 0; i < st.locals.size(); ++i) {
        if (i) out += ",";
        out += print_local(st.locals[i]);
    }
    return out;
}

inline int poincare_rank(const RefiningSequence& r) { return r.poincare_rank(); }

// §4 admissibility: two singular points can merge iff the finest partition of
// one refines the finest partition of the other (multiset sense).
inline bool confluence_admissible(const RefiningSequence& a, const RefiningSequence& b) {
    if (a.m() != b.m()) throw iso4d_error("confluence_admissible: size mismatch");
    const Partition& pa = a.partitions.back();
    const Partition& pb = b.partitions.back();
    return refines_multiset(pa, pb) || refines_multiset(pb, pa);
}

// Merge two admissible locals: the confluent point's refining sequence is the
// union of both sequences ordered coarse-to-fine (each level of the result is
// refined by the next, which admissibility guarantees for the scheme data).
inline RefiningSequence merge_locals(const RefiningSequence& a, const RefiningSequence& b) {
    if (!confluence_admissible(a, b)) throw iso4d_error("merge_locals: inadmissible pair");
    // Merge the two refinement chains into one chain ordered coarse-to-fine
    // (like merging two sorted lists; refinement is the order relation).
    RefiningSequence r;
    size_t i = 0, j = 0;
    while (i < a.partitions.size() || j < b.partitions.size()) {
        if (i == a.partitions.size()) {
            r.partitions.push_back(b.partitions[j++]);
        } else if (j == b.partitions.size()) {
            r.partitions.push_back(a.partitions[i++]);
        } else if (refines_multiset(b.partitions[j], a.partitions[i])) {
            r.partitions.push_back(a.partitions[i++]);  // a's is coarser (or equal)
        } else if (refines_multiset(a.partitions[i], b.partitions[j])) {
            r.partitions.push_back(b.partitions[j++]);
        } else {
            throw iso4d_error("merge_locals: sequences are not chain-comparable");
        }
    }
    for (size_t k = 0; k + 1 < r.partitions.size(); ++k)
        if (!refines_multiset(r.partitions[k + 1], r.partitions[k]))
            throw iso4d_error("merge_locals: result is not a refinement chain");
    return r;
}

// ---------------------------------------------------------------------------
// Singularity patterns (exact rationals; half-integers only label the
// ramified boxes of the classical 2-dimensional scheme).
// ---------------------------------------------------------------------------

struct SingularityPattern {
    std::vector<Rat> entries;  // each = Poincare rank + 1
    friend bool operator==(const SingularityPattern&, const SingularityPattern&) = default;
};

inline SingularityPattern parse_pattern(const std::string& s) {
    SingularityPattern p;
    size_t start = 0;
    while (start <= s.size()) {
        size_t plus = s.find('+', start);
        std::string piece =
            s.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
        Rat r(piece);
        r.canonicalize();
        if (r <= 0) throw parse_error("nonpositive pattern entry in '" + s + "'");
        p.entries.push_back(r);
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return p;
}

inline std::string print_pattern(const SingularityPattern& p) {
    std::string out;
    for (size_t i = 0; i < p.entries.size(); ++i) {
        if (i) out += "+";
        out += p.entries[i].get_str();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Degeneration graphs of the four source families (§1 diagrams).
// ---------------------------------------------------------------------------

enum class Family { Garnier, FS, Sasano, Matrix };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::Garnier: return "Garnier";
        case Family::FS: return "FS";
        case Family::Sasano: return "Sasano";
        case Family::Matrix: return "Matrix";
    }
    return "?";
}

struct GraphNode {
    std::string pattern;       // singularity pattern, e.g. "2+1+1"
    std::string spectral;      // spectral type string; empty for the Sasano "4" box
    std::string hamiltonian;   // catalog id, e.g. "Gar:2+1+1+1"; empty for the empty box
};

struct DegenerationGraph {
    Family family;
    std::vector<GraphNode> nodes;
    std::vector<std::pair<int, int>> edges;  // indices into nodes
};

inline DegenerationGraph degeneration_graph(Family f) {
    DegenerationGraph g;
    g.family = f;
    switch (f) {
        case Family::Garnier:
            g.nodes = {
                {"1+1+1+1+1", "11,11,11,11,11", "Gar:1+1+1+1+1"},
                {"2+1+1+1", "(1)(1),11,11,11", "Gar:2+1+1+1"},
                {"3+1+1", "((1))((1)),11,11", "Gar:3+1+1"},
                {"2+2+1", "(1)(1),(1)(1),11", "Gar:2+2+1"},
                {"4+1", "(((1)))(((1))),11", "Gar:4+1"},
                {"3+2", "((1))((1)),(1)(1)", "Gar:3+2"},
                {"5", "((((1))))((((1))))", "Gar:5"},
            };
            g.edges = {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 6}, {5, 6}};
            break;
        case Family::FS:
            g.nodes = {
                {"1+1+1+1", "21,21,111,111", "FS:A5"},
                {"2+1+1", "(2)(1),111,111", "NY:A5"},
                {"2+1+1", "(11)(1),21,111", "FS:A4"},
                {"2+1+1", "(1)(1)(1),21,21", "Gar:2+1+1+1"},
                {"3+1", "((11))((1)),111", "NY:A4"},
                {"3+1", "((1)(1))((1)),21", "Gar:3+1+1"},
                {"2+2", "(11)(1),(11)(1)", "FS:A3"},
                {"2+2", "(2)(1),(1)(1)(1)", "Gar:3/2+1+1+1"},
                {"4", "(((1)(1)))(((1)))", "Gar:5/2+1+1"},
            };
            g.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 7}, {2, 4}, {2, 5},
                       {2, 6}, {3, 5}, {3, 7}, {4, 8}, {5, 8}, {6, 8}, {7, 8}};
            break;
        case Family::Sasano:
            g.nodes = {
                {"1+1+1+1", "31,22,22,1111", "Ss:D6"},
                {"2+1+1", "(11)(11),31,22", "NY:A5"},
                {"2+1+1", "(2)(2),31,1111", "Ss:D5"},
                {"2+1+1", "(111)(1),22,22", "Ss:D5"},
                {"3+1", "((11))((11)),31", "NY:A4"},
                {"2+2", "(2)(2),(111)(1)", "Ss:D4"},
                {"4", "", ""},  // ∅: no unramified continuation
            };
            g.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}};
            break;
        case Family::Matrix:
            g.nodes = {
                {"1+1+1+1", "22,22,22,211", "Mat:VI"},
                {"2+1+1", "(2)(2),22,211", "Mat:V"},
                {"2+1+1", "(2)(11),22,22", "Mat:V"},
                {"3+1", "((2))((2)),211", "Mat:IV"},
                {"3+1", "((2))((11)),22", "Mat:IV"},
                {"2+2", "(2)(2),(2)(11)", "Mat:III_D6"},
                {"4", "(((2)))(((11)))", "Mat:II"},
            };
            g.edges = {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5},
                       {3, 6}, {4, 6}, {5, 6}};
            break;
    }
    return g;
}

// Classical 2-dimensional scheme (with Jordan-degeneration boxes); the five
// half-integer patterns are labels only — no linear systems are instantiated
// for them here.
struct ClassicalNode {
    std::string pattern;
    std::string hamiltonian;
    bool ramified;
};

inline std::vector<ClassicalNode> classical_scheme() {
    return {
        {"1+1+1+1", "VI", false}, {"2+1+1", "V", false},    {"2+2", "III_D6", false},
        {"3/2+1+1", "III_D6", true}, {"3+1", "IV", false},  {"2+3/2", "III_D7", true},
        {"4", "II", false},       {"5/2+1", "II", true},    {"3/2+3/2", "III_D8", true},
        {"7/2", "I", true},
    };
}

inline std::vector<std::pair<int, int>> classical_edges() {
    return {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 5},
            {3, 7}, {4, 6}, {4, 7}, {5, 8}, {5, 9}, {6, 9}, {7, 9}};
}

// ---------------------------------------------------------------------------
// Corpus of all spectral strings printed in the paper (round-trip tested).
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& spectral_corpus() {
    static const std::vector<std::string> corpus = {
        // worked notation example
        "((22)(2))((31))((1)(1))",
        // four-family scheme entries
        "11,11,11,11,11", "(1)(1),11,11,11", "((1))((1)),11,11", "(1)(1),(1)(1),11",
        "(((1)))(((1))),11", "((1))((1)),(1)(1)", "((((1))))((((1))))",
        "21,21,111,111", "(2)(1),111,111", "(11)(1),21,111", "(1)(1)(1),21,21",
        "((11))((1)),111", "((1)(1))((1)),21", "(11)(1),(11)(1)", "(2)(1),(1)(1)(1)",
        "(((1)(1)))(((1)))",
        "31,22,22,1111", "(11)(11),31,22", "(2)(2),31,1111", "(111)(1),22,22",
        "((11))((11)),31", "(2)(2),(111)(1)",
        "22,22,22,211", "(2)(2),22,211", "(2)(11),22,22", "((2))((2)),211",
        "((2))((11)),22", "(2)(2),(2)(11)", "(((2)))(((11)))",
        // Laplace correspondence partners
        "(1)(1),11,11,11",
        // Oshima: three-point Fuchsian types with 4 accessory parameters
        "211,1111,1111", "221,221,11111", "32,11111,11111", "222,222,2211",
        "33,2211,111111", "44,2222,22211", "44,332,11111111", "55,3331,22222",
        "66,444,2222211",
        // Oshima: one-confluence types
        "(11)(1)(1),1111", "(1)(1)(1)(1),211", "(2)(2)(1),11111", "(11)(11)(1),221",
        "(111)(11),11111", "(1)(1)(1)(1)(1),32", "(2)(2)(2),2211", "(2)(2)(11),222",
        "(111)(111),2211", "(11)(11)(1)(1),33", "(22)(22),22211", "(22)(211),2222",
        "(2)(2)(2)(11),44", "(1111)(1111),332", "(111)(111)(11),44", "(222)(2211),444",
        "(22)(22)(211),66",
        // Oshima: Laplace partners of the deforming confluent types
        "(111),111,21,21",
        // Oshima: triple-confluence types (the well-formed four)
        "((11))((11))((1))", "((1)(1)(1))((1)(1))", "((2))((2))((11))", "((2)(2))((2)(11))",
    };
    return corpus;
}

// Strings printed in the paper that fail validation; stored verbatim with the
// reason, never silently corrected.
struct FlaggedString {
    std::string text;
    std::string reason;
    std::string corrected;  // the size-consistent reading, when forced
};

inline const std::vector<FlaggedString>& flagged_strings() {
    static const std::vector<FlaggedString> flagged = {
        {"(11)(11),31,21",
         "size-consistency violation: locals have m = 4,4,3; the companion scheme entry "
         "forces 22 as the last local",
         "(11)(11),31,22"},
        {"((1)(1))((1)((1)))",
         "non-uniform nesting depth; appears in the triple-confluence list",
         ""},
        {"21,21,11,11",
         "size-consistency violation: locals have m = 3,3,2,2; printed as the Laplace "
         "partner of (11)(11)(1)(1),33",
         ""},
    };
    return flagged;
}

// DOT rendering of a degeneration graph.
inline std::string to_dot(const DegenerationGraph& g) {
    std::ostringstream os;
    os << "digraph " << family_name(g.family) << " {\n";
    os << "  rankdir=LR;\n  node [shape=box];\n";
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        const auto& n = g.nodes[i];
        os << "  n" << i << " [label=\"" << n.pattern << "\\n"
           << (n.spectral.empty() ? "(empty)" : n.spectral) << "\\n"
           << (n.hamiltonian.empty() ? "-" : n.hamiltonian) << "\"];\n";
    }
    for (const auto& [a, b] : g.edges) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace iso4d
