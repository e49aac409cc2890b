#include "liec/xi.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace liec {

namespace {

// One crossed-spoke tile on local vertices 0..5: outer path 0-1-2, inner
// path 3-4-5, spokes 0-4, 1-3 (the crossed pair) and 2-5 (straight).
// Half-edges leave at 0 and 3 on the left, 2 and 5 on the right; their
// order below matches the code order (left outer, left inner, right outer,
// right inner).
constexpr std::array<std::array<int, 2>, 7> kTileEdges = {
    {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 4}, {1, 3}, {2, 5}}};
constexpr std::array<int, 4> kHalfAt = {0, 3, 2, 5};

// The fixed public labeling c1..c16 of the retained codes.  The order is
// part of this module's output contract: every strong component occupies a
// contiguous block (c1-c4, c5-c8, four singletons, c13-c16), so component
// listings and exports stay stable.
constexpr const char* kLabelTable[16] = {
    "(a3,a3,a1,b3)", "(a2,b2,b1,b2)", "(a2,b2,a2,a1)", "(b3,b3,a3,b1)",
    "(a3,b2,a3,b2)", "(a2,b1,a2,b3)", "(a1,b2,a3,b2)", "(a2,b3,a2,b3)",
    "(a2,b1,b2,b3)", "(a3,b2,b2,b3)", "(a2,b3,a3,a2)", "(a1,b2,a3,a2)",
    "(b1,b1,a2,b2)", "(a3,b3,a3,a2)", "(a3,b3,b2,b3)", "(a1,a1,a2,b2)"};

// All codes realized by some internally valid tile coloring, without the
// ordered-code normalization.
std::set<XiCode> all_tile_codes() {
    std::set<XiCode> out;
    for (int bits = 0; bits < (1 << 11); ++bits) {
        // Bits 0..6 color the tile edges, bits 7..10 the half-edges;
        // 0 means color 'a'.
        std::array<std::array<int, 2>, 6> deg{};
        auto color_of = [&](int i) { return (bits >> i) & 1; };
        for (int i = 0; i < 7; ++i) {
            ++deg[kTileEdges[i][0]][color_of(i)];
            ++deg[kTileEdges[i][1]][color_of(i)];
        }
        for (int k = 0; k < 4; ++k) ++deg[kHalfAt[k]][color_of(7 + k)];
        bool ok = true;
        for (int i = 0; i < 7 && ok; ++i)
            ok = deg[kTileEdges[i][0]][color_of(i)] != deg[kTileEdges[i][1]][color_of(i)];
        if (!ok) continue;
        XiCode code;
        for (int k = 0; k < 4; ++k) {
            const int c = color_of(7 + k);
            code.part[k] = XiHalf{c ? 'b' : 'a', deg[kHalfAt[k]][c]};
        }
        out.insert(code);
    }
    return out;
}

// Matched half-edge pair across a junction: the two descriptors talk about
// the same edge, so its color must agree, and the endpoints are adjacent,
// so their degrees in that color must differ.
bool halves_connect(const XiHalf& x, const XiHalf& y) {
    return x.color == y.color && x.mult != y.mult;
}

bool codes_connect(const XiCode& left, const XiCode& right) {
    const XiHalf &r = left.part[2], &s = left.part[3];
    const XiHalf &p = right.part[0], &q = right.part[1];
    const bool straight = halves_connect(r, p) && halves_connect(s, q);
    const bool crossed = halves_connect(r, q) && halves_connect(s, p);
    return straight || crossed;
}

std::vector<std::vector<int>> strong_components(
    const std::vector<std::vector<int>>& arcs) {
    const int n = static_cast<int>(arcs.size());
    std::vector<std::vector<int>> rev(n);
    for (int i = 0; i < n; ++i)
        for (int j : arcs[i]) rev[j].push_back(i);

    // Kosaraju: forward DFS finish order, then sweep the reverse graph.
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::pair<int, size_t>> stack{{s, 0}};
        seen[s] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < arcs[v].size()) {
                const int w = arcs[v][next++];
                if (!seen[w]) seen[w] = 1, stack.push_back({w, 0});
            } else {
                order.push_back(v);
                stack.pop_back();
            }
        }
    }
    std::vector<std::vector<int>> comps;
    std::vector<char> done(n, 0);
    for (int k = n - 1; k >= 0; --k) {
        const int s = order[k];
        if (done[s]) continue;
        std::vector<int> comp, stack{s};
        done[s] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : rev[v])
                if (!done[w]) done[w] = 1, stack.push_back(w);
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(comp);
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

CodeDigraph build_code_digraph() {
    CodeDigraph d;
    for (const char* s : kLabelTable) d.codes.push_back(xi_code_from_string(s));

    // Cross-check the labeling table against the enumeration: the labeled
    // codes must be exactly the ordered codes minus the eight whose left
    // pair repeats a multiplicity-2 descriptor (those have no possible
    // predecessor, hence never occur in a closed chain).
    std::set<XiCode> expect;
    for (const XiCode& c : enumerate_xi_codes())
        if (!(c.part[0] == c.part[1] && c.part[0].mult == 2)) expect.insert(c);
    if (std::set<XiCode>(d.codes.begin(), d.codes.end()) != expect)
        throw std::logic_error("code_digraph: labeling table disagrees with enumeration");

    d.arcs.assign(16, {});
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j)
            if (codes_connect(d.codes[i], d.codes[j])) d.arcs[i].push_back(j);
    d.scc = strong_components(d.arcs);
    return d;
}

}  // namespace

int xi_half_rank(const XiHalf& h) {
    if (h.color != 'a' && h.color != 'b')
        throw std::invalid_argument("xi_half_rank: color must be 'a' or 'b'");
    if (h.mult < 1 || h.mult > 3)
        throw std::invalid_argument("xi_half_rank: multiplicity must be 1..3");
    return h.color == 'a' ? 3 - h.mult : 2 + h.mult;
}

bool operator<(const XiCode& x, const XiCode& y) {
    for (int k = 0; k < 4; ++k) {
        const int rx = xi_half_rank(x.part[k]), ry = xi_half_rank(y.part[k]);
        if (rx != ry) return rx < ry;
    }
    return false;
}

std::string xi_code_to_string(const XiCode& c) {
    std::string out = "(";
    for (int k = 0; k < 4; ++k) {
        if (k) out += ',';
        out += c.part[k].color;
        out += static_cast<char>('0' + c.part[k].mult);
    }
    out += ')';
    return out;
}

XiCode xi_code_from_string(const std::string& s) {
    XiCode c;
    if (s.size() != 13 || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("xi_code_from_string: want \"(c1,c2,c3,c4)\"");
    for (int k = 0; k < 4; ++k) {
        const size_t at = 1 + 3 * static_cast<size_t>(k);
        if (k && s[at - 1] != ',')
            throw std::invalid_argument("xi_code_from_string: missing comma");
        const char color = s[at], digit = s[at + 1];
        if ((color != 'a' && color != 'b') || digit < '1' || digit > '3')
            throw std::invalid_argument("xi_code_from_string: bad descriptor");
        c.part[k] = XiHalf{color, digit - '0'};
    }
    return c;
}

std::vector<XiCode> enumerate_xi_codes() {
    std::vector<XiCode> out;
    for (const XiCode& c : all_tile_codes())
        if (xi_half_rank(c.part[0]) <= xi_half_rank(c.part[1]) &&
            xi_half_rank(c.part[2]) <= xi_half_rank(c.part[3]))
            out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

const CodeDigraph& code_digraph() {
    static const CodeDigraph d = build_code_digraph();
    return d;
}

bool xi_two_liec_exists(int n) {
    if (n < 2) throw std::invalid_argument("xi_two_liec_exists: n must be >= 2");
    const CodeDigraph& d = code_digraph();

    // Row-bitmask boolean matrices; a closed walk of length n exists iff
    // some diagonal entry of A^n is set.
    using Mat = std::array<std::uint16_t, 16>;
    Mat a{};
    for (int i = 0; i < 16; ++i)
        for (int j : d.arcs[i]) a[i] |= static_cast<std::uint16_t>(1u << j);
    auto mul = [](const Mat& x, const Mat& y) {
        Mat z{};
        for (int i = 0; i < 16; ++i)
            for (int j = 0; j < 16; ++j)
                if (x[i] >> j & 1u) z[i] |= y[j];
        return z;
    };
    Mat pow{};
    for (int i = 0; i < 16; ++i) pow[i] = static_cast<std::uint16_t>(1u << i);
    for (int e = n; e > 0; e >>= 1) {
        if (e & 1) pow = mul(pow, a);
        a = mul(a, a);
    }
    for (int i = 0; i < 16; ++i)
        if (pow[i] >> i & 1u) return true;
    return false;
}

std::string code_digraph_dot(const CodeDigraph& d) {
    std::ostringstream out;
    out << "digraph code_digraph {\n";
    for (size_t i = 0; i < d.codes.size(); ++i)
        out << "  c" << i + 1 << " [label=\"c" << i + 1 << " "
            << xi_code_to_string(d.codes[i]) << "\"];\n";
    for (size_t i = 0; i < d.arcs.size(); ++i)
        for (int j : d.arcs[i]) out << "  c" << i + 1 << " -> c" << j + 1 << ";\n";
    out << "}\n";
    return out.str();
}

std::string code_digraph_json(const CodeDigraph& d) {
    nlohmann::json j;
    auto label = [](int i) { return "c" + std::to_string(i + 1); };
    j["codes"] = nlohmann::json::array();
    for (size_t i = 0; i < d.codes.size(); ++i)
        j["codes"].push_back({{"label", label(static_cast<int>(i))},
                              {"code", xi_code_to_string(d.codes[i])}});
    j["arcs"] = nlohmann::json::object();
    for (size_t i = 0; i < d.arcs.size(); ++i) {
        auto& row = j["arcs"][label(static_cast<int>(i))] = nlohmann::json::array();
        for (int t : d.arcs[i]) row.push_back(label(t));
    }
    j["components"] = nlohmann::json::array();
    for (const auto& comp : d.scc) {
        nlohmann::json c = nlohmann::json::array();
        for (int v : comp) c.push_back(label(v));
        j["components"].push_back(c);
    }
    return j.dump(2);
}

}  // namespace liec
