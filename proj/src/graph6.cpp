#include "liec/graph6.hpp"

#include <sstream>

namespace liec {

Graph parse_graph6(const std::string& text) {
    // Tolerate surrounding whitespace and the optional ">>graph6<<" header.
    std::string s = text;
    size_t base = 0;
    if (s.rfind(">>graph6<<", 0) == 0) {
        base = 10;
        s = s.substr(10);
    }
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.empty()) throw Graph6ParseError("empty graph6 string", base);

    const unsigned char first = static_cast<unsigned char>(s[0]);
    if (first < 63 || first > 126) throw Graph6ParseError("header byte out of range", base);
    if (first == 126)
        throw Graph6ParseError("long-form graph6 (n > 62) not supported", base);
    const int n = first - 63;

    const size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    const size_t nbytes = (nbits + 5) / 6;
    if (s.size() != 1 + nbytes)
        throw Graph6ParseError("bit vector has " + std::to_string(s.size() - 1) +
                                   " bytes, expected " + std::to_string(nbytes),
                               base + s.size());

    Graph g(n);
    size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            const size_t byte = 1 + bit / 6;
            const unsigned char c = static_cast<unsigned char>(s[byte]);
            if (c < 63 || c > 126)
                throw Graph6ParseError("data byte out of range", base + byte);
            if ((c - 63) >> (5 - bit % 6) & 1) g.add_edge(i, j);
        }
    // Padding bits beyond nbits must be zero per the format, but nauty-family
    // tools ignore them on input; we do too.
    return g;
}

std::string emit_graph6(const Graph& g) {
    if (g.n > 62) throw std::invalid_argument("emit_graph6: supports at most 62 vertices");
    std::string out(1 + (static_cast<size_t>(g.n) * (g.n - 1) / 2 + 5) / 6, 0);
    out[0] = static_cast<char>(g.n + 63);
    for (size_t i = 1; i < out.size(); ++i) out[i] = 63;
    size_t bit = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_edge(i, j)) out[1 + bit / 6] += 1 << (5 - bit % 6);
    return out;
}

Graph parse_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        long a, b;
        if (!(ls >> a >> b))
            throw std::invalid_argument("edge list: malformed line " + std::to_string(lineno));
        if (n < 0) {
            n = static_cast<int>(a);
            m = static_cast<int>(b);
            if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative header");
        } else {
            edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    }
    if (n < 0) throw std::invalid_argument("edge list: missing header line \"n m\"");
    if (static_cast<int>(edges.size()) != m)
        throw std::invalid_argument("edge list: header promises " + std::to_string(m) +
                                    " edges, found " + std::to_string(edges.size()));
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::string emit_edge_list_text(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.m() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace liec
