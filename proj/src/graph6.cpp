#include "eqlines/graph6.hpp"

namespace eqlines {

// Short-form graph6: one byte n+63, then the upper triangle x(0,1), x(0,2),
// x(1,2), x(0,3), ... packed big-endian into 6-bit groups, each +63.

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw Graph6ParseError("empty graph6 record", 0);
    unsigned char h = static_cast<unsigned char>(text[0]);
    if (h == 126)
        throw Graph6ParseError("long-form graph6 header unsupported (n > 62)", 0);
    if (h < 63 || h > 63 + 62)
        throw Graph6ParseError("invalid graph6 header byte", 0);
    int n = h - 63;
    Graph g(n);
    size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    size_t nbytes = (nbits + 5) / 6;
    if (text.size() < 1 + nbytes)
        throw Graph6ParseError("truncated graph6 record", text.size());
    if (text.size() > 1 + nbytes)
        throw Graph6ParseError("trailing bytes after graph6 record", 1 + nbytes);
    size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            size_t byte = 1 + bit / 6;
            unsigned char c = static_cast<unsigned char>(text[byte]);
            if (c < 63 || c > 126)
                throw Graph6ParseError("invalid graph6 data byte", byte);
            int val = c - 63;
            if ((val >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    // Padding bits must be zero.
    for (size_t b = nbits; b < nbytes * 6; ++b) {
        size_t byte = 1 + b / 6;
        int val = static_cast<unsigned char>(text[byte]) - 63;
        if ((val >> (5 - b % 6)) & 1)
            throw Graph6ParseError("nonzero padding bits", byte);
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62)
        throw std::invalid_argument("write_graph6: short form requires n <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return out;
}

}  // namespace eqlines
