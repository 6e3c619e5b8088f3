#include "cyclemax/graph_io.hpp"
#include "cyclemax/errors.hpp"

#include <cctype>
#include <sstream>
#include <string>

namespace cyclemax {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

constexpr std::string_view graph6_header = ">>graph6<<";

}

Graph read_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    long long n = 0, m = 0;
    if (!(in >> n)) {
        if (trim(text).empty())
            return Graph(0);
        throw DomainError("edge list: expected header \"n m\"");
    }
    if (!(in >> m))
        throw DomainError("edge list: header is missing the edge count");
    if (n < 0 || m < 0 || m > n * (n - 1) / 2)
        throw DomainError("edge list: header counts out of range");
    Graph g(static_cast<int>(n));
    for (long long e = 0; e < m; ++e) {
        long long u, v;
        if (!(in >> u >> v))
            throw DomainError("edge list: expected " + std::to_string(m) + " edges, found " + std::to_string(e));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw DomainError("edge list: vertex out of range in edge " + std::to_string(e));
        if (u == v)
            throw DomainError("edge list: self-loop in edge " + std::to_string(e));
        if (!g.add_edge(static_cast<int>(u), static_cast<int>(v)))
            throw DomainError("edge list: repeated edge " + std::to_string(u) + " " + std::to_string(v));
    }
    std::string extra;
    if (in >> extra)
        throw DomainError("edge list: trailing data after the last edge");
    return g;
}

std::string write_edge_list(const Graph& g)
{
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph read_graph6(std::string_view text)
{
    text = trim(text);
    if (text.starts_with(graph6_header))
        text.remove_prefix(graph6_header.size());
    if (text.empty())
        throw DomainError("graph6: empty input");
    for (char c : text)
        if (c < 63 || c > 126)
            throw DomainError("graph6: byte outside the printable range 63..126");

    std::size_t pos = 0;
    auto take = [&](std::size_t count) {
        if (pos + count > text.size())
            throw DomainError("graph6: truncated vertex count");
        unsigned long long x = 0;
        for (std::size_t i = 0; i < count; ++i)
            x = (x << 6) | static_cast<unsigned>(text[pos++] - 63);
        return x;
    };
    unsigned long long n;
    if (text[0] != 126)
        n = take(1);
    else if (text.size() > 1 && text[1] != 126) {
        pos = 1;
        n = take(3);
    }
    else {
        pos = 2;
        n = take(6);
    }
    if (n > 100000)
        throw DomainError("graph6: vertex count too large for a dense graph");

    const unsigned long long bits = n * (n - (n > 0)) / 2;
    const unsigned long long bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw DomainError("graph6: expected " + std::to_string(bytes) + " adjacency bytes, found "
                          + std::to_string(text.size() - pos));
    Graph g(static_cast<int>(n));
    unsigned long long k = 0;
    for (unsigned long long v = 1; v < n; ++v)
        for (unsigned long long u = 0; u < v; ++u, ++k) {
            unsigned byte = static_cast<unsigned>(text[pos + k / 6] - 63);
            if (byte >> (5 - k % 6) & 1)
                g.add_edge(static_cast<int>(u), static_cast<int>(v));
        }
    // Padding bits must be zero for the encoding to be canonical.
    for (; k < bytes * 6; ++k) {
        unsigned byte = static_cast<unsigned>(text[pos + k / 6] - 63);
        if (byte >> (5 - k % 6) & 1)
            throw DomainError("graph6: nonzero padding bits");
    }
    return g;
}

std::string write_graph6(const Graph& g)
{
    const auto n = static_cast<unsigned long long>(g.order());
    std::string out;
    auto put = [&](unsigned long long x, int groups) {
        for (int i = groups - 1; i >= 0; --i)
            out += static_cast<char>(63 + ((x >> (6 * i)) & 63));
    };
    if (n <= 62)
        put(n, 1);
    else if (n <= 258047) {
        out += '~';
        put(n, 3);
    }
    else {
        out += "~~";
        put(n, 6);
    }
    unsigned acc = 0;
    int filled = 0;
    for (unsigned long long v = 1; v < n; ++v)
        for (unsigned long long u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(static_cast<int>(u), static_cast<int>(v)) ? 1u : 0u);
            if (++filled == 6) {
                out += static_cast<char>(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out += static_cast<char>(63 + (acc << (6 - filled)));
    return out;
}

GraphFormat detect_format(std::string_view text)
{
    text = trim(text);
    // Edge lists start with a digit; graph6 bytes are all >= '?'.
    if (text.empty() || std::isdigit(static_cast<unsigned char>(text.front())))
        return GraphFormat::edge_list;
    return GraphFormat::graph6;
}

Graph read_graph(std::string_view text, GraphFormat format)
{
    if (format == GraphFormat::automatic)
        format = detect_format(text);
    return format == GraphFormat::graph6 ? read_graph6(text) : read_edge_list(text);
}

}
