#include "twowalk/graph6.hpp"

#include <istream>
#include <sstream>

namespace twowalk {

namespace {

constexpr int kBias = 63;

// Header for the vertex count: one byte below 63 vertices, '~' + 3 bytes
// (18-bit big-endian in 6-bit groups) up to 258047. Larger graphs are out of
// scope for this library.
void append_order(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    } else {
        throw graph6_error("graph too large for this encoder");
    }
}

int decode_char(char c) {
    int v = static_cast<unsigned char>(c) - kBias;
    if (v < 0 || v > 63) throw graph6_error("character out of graph6 range");
    return v;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    size_t pos = 0;
    if (text.empty()) throw graph6_error("empty graph6 string");

    long n;
    if (text[0] != '~') {
        n = decode_char(text[0]);
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~')
            throw graph6_error("8-byte order header not supported");
        if (text.size() < 4) throw graph6_error("truncated graph6 header");
        n = 0;
        for (size_t i = 1; i <= 3; ++i) n = (n << 6) | decode_char(text[i]);
        if (n <= 62) throw graph6_error("non-minimal graph6 header");
        pos = 4;
    }

    long bits = n * (n - 1) / 2;
    size_t need = static_cast<size_t>((bits + 5) / 6);
    if (text.size() - pos < need) throw graph6_error("truncated graph6 bit vector");
    if (text.size() - pos > need) throw graph6_error("trailing garbage after graph6 data");

    std::vector<Edge> edges;
    long bit = 0;
    for (size_t i = 0; i < need; ++i) {
        int word = decode_char(text[pos + i]);
        for (int k = 5; k >= 0; --k, ++bit) {
            bool set = (word >> k) & 1;
            if (bit >= bits) {
                if (set) throw graph6_error("nonzero padding bits");
                continue;
            }
            if (set) {
                // bit index -> column-major upper triangle position
                long b = bit;
                long j = 1;
                while (b >= j) b -= j++;
                edges.emplace_back(static_cast<int>(b), static_cast<int>(j));
            }
        }
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    append_order(out, n);
    int word = 0, fill = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            word = (word << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++fill == 6) {
                out.push_back(static_cast<char>(word + kBias));
                word = fill = 0;
            }
        }
    }
    if (fill > 0) out.push_back(static_cast<char>((word << (6 - fill)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view sv(line);
        if (sv.rfind(">>graph6<<", 0) == 0) sv.remove_prefix(10);
        if (sv.empty()) continue;
        out.push_back(parse_graph6(sv));
    }
    return out;
}

Graph parse_edge_list(std::istream& in) {
    long n, m;
    if (!(in >> n >> m)) throw graph6_error("edge list: expected \"n m\" header");
    if (n < 0 || m < 0) throw graph6_error("edge list: negative counts");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long i = 0; i < m; ++i) {
        long u, v;
        if (!(in >> u >> v)) throw graph6_error("edge list: truncated edge lines");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string rest;
    if (in >> rest) throw graph6_error("edge list: trailing tokens");
    try {
        return Graph::from_edge_list(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw graph6_error(std::string("edge list: ") + e.what());
    }
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

}  // namespace twowalk
