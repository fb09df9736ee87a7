#include "linkchroma/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace linkchroma {

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }
    void expect_word(std::string_view w) {
        skip_ws();
        if (s.substr(pos, w.size()) != w)
            throw ParseError("expected \"" + std::string(w) + "\"", pos);
        pos += w.size();
    }
    int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected an integer", pos);
        int v = 0;
        for (std::size_t i = start; i < pos; ++i) {
            v = v * 10 + (s[i] - '0');
            if (v > 1'000'000) throw ParseError("edge label out of range", start);
        }
        if (v < 1) throw ParseError("edge labels start at 1", start);
        return v;
    }
    void end() {
        skip_ws();
        if (pos != s.size()) throw ParseError("trailing input", pos);
    }
};

void validate_labels(const PDCode& pd) {
    const int k = static_cast<int>(pd.crossings.size());
    std::map<int, int> count;
    for (const auto& t : pd.crossings)
        for (int e : t) ++count[e];
    for (const auto& [label, c] : count)
        if (c != 2)
            throw DiagramError("edge label " + std::to_string(label) + " appears " +
                               std::to_string(c) + " times, expected 2");
    for (int e = 1; e <= 2 * k; ++e)
        if (!count.count(e))
            throw DiagramError("edge labels are not contiguous 1..2k: missing " + std::to_string(e));
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

PDCode parse_pd(std::string_view text) {
    Parser p{text};
    PDCode pd;
    p.expect_word("PD");
    p.expect('[');
    if (p.peek(']')) {
        p.expect(']');
        p.end();
        throw DiagramError("empty diagram unsupported");
    }
    while (true) {
        p.expect_word("X");
        p.expect('[');
        std::array<int, 4> t{};
        for (int i = 0; i < 4; ++i) {
            t[i] = p.integer();
            if (i < 3) p.expect(',');
        }
        p.expect(']');
        pd.crossings.push_back(t);
        if (p.peek(',')) {
            p.expect(',');
            continue;
        }
        break;
    }
    p.expect(']');
    p.end();
    validate_labels(pd);
    return pd;
}

std::string to_text(const PDCode& pd) {
    std::ostringstream out;
    out << "PD[";
    for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
        const auto& t = pd.crossings[i];
        if (i) out << ",";
        out << "X[" << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << "]";
    }
    out << "]";
    return out.str();
}

bool LinkDiagram::has_kink() const {
    return std::any_of(crossings.begin(), crossings.end(), [](const Crossing& c) {
        return c.over == c.under_in || c.over == c.under_out;
    });
}

LinkDiagram build_diagram(const PDCode& pd) {
    validate_labels(pd);
    const int k = static_cast<int>(pd.crossings.size());

    // Fuse the two over-edges of each crossing into one arc.
    UnionFind arcs(2 * k + 1);
    for (const auto& t : pd.crossings) arcs.unite(t[1], t[3]);

    std::map<int, int> arc_id;  // UF root -> dense id, in order of smallest edge label
    for (int e = 1; e <= 2 * k; ++e) {
        int r = arcs.find(e);
        if (!arc_id.count(r)) arc_id[r] = static_cast<int>(arc_id.size());
    }

    LinkDiagram d;
    d.arc_count = static_cast<int>(arc_id.size());
    if (d.arc_count != k)
        throw DiagramError("diagram has a component that never passes under a crossing (" +
                           std::to_string(d.arc_count) + " arcs for " + std::to_string(k) +
                           " crossings)");

    for (const auto& t : pd.crossings)
        d.crossings.push_back({arc_id.at(arcs.find(t[1])), arc_id.at(arcs.find(t[0])),
                               arc_id.at(arcs.find(t[2]))});

    // Each arc must start and end at an undercrossing exactly once.
    std::vector<int> in_count(d.arc_count, 0), out_count(d.arc_count, 0);
    for (const auto& c : d.crossings) {
        ++in_count[c.under_in];
        ++out_count[c.under_out];
    }
    for (int a = 0; a < d.arc_count; ++a)
        if (in_count[a] != 1 || out_count[a] != 1)
            throw DiagramError("inconsistent strand closure at arc " + std::to_string(a));

    // Components: strands connect a--c and b--d.
    UnionFind comp(2 * k + 1);
    for (const auto& t : pd.crossings) {
        comp.unite(t[0], t[2]);
        comp.unite(t[1], t[3]);
    }
    std::map<int, bool> roots;
    for (int e = 1; e <= 2 * k; ++e) roots[comp.find(e)] = true;
    d.component_count = static_cast<int>(roots.size());
    return d;
}

}  // namespace linkchroma
