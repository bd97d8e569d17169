#include "spor/graph.hpp"

#include "spor/errors.hpp"
#include "spor/format.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace spor {

namespace {

std::uint64_t edge_key(VertexId u, VertexId v) {
    if (u > v)
        std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

[[noreturn]] void parse_fail(const std::string& name, std::size_t line, const std::string& msg) {
    std::ostringstream os;
    os << name << ":" << line << ": " << msg;
    throw ParseError(os.str());
}

// Strips '#' comments; returns whitespace tokens.
std::vector<std::string> tokenize(const std::string& raw) {
    std::string line = raw;
    if (auto pos = line.find('#'); pos != std::string::npos)
        line.erase(pos);
    std::istringstream is(line);
    std::vector<std::string> tokens;
    std::string t;
    while (is >> t)
        tokens.push_back(t);
    return tokens;
}

} // namespace

Graph::Graph(std::uint32_t n, bool weighted)
    : n_(n), weighted_(weighted), adj_(n) {}

void Graph::add_edge(VertexId u, VertexId v, double w) {
    if (u >= n_ || v >= n_)
        throw ContractError("edge endpoint out of range");
    if (u == v)
        throw ContractError("self-loops are not allowed");
    if (!(w > 0.0) || !std::isfinite(w))
        throw ContractError("edge weights must be positive and finite");
    if (!edge_keys_.insert(edge_key(u, v)).second)
        throw ContractError("parallel edges are not allowed");
    auto idx = static_cast<std::uint32_t>(edges_.size());
    edges_.push_back({u, v, w});
    adj_[u].push_back({v, w, idx});
    adj_[v].push_back({u, w, idx});
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    return edge_keys_.count(edge_key(u, v)) != 0;
}

Graph parse_graph(std::istream& in, const std::string& name) {
    std::string raw;
    std::size_t line_no = 0;

    // header
    std::vector<std::string> header;
    while (std::getline(in, raw)) {
        ++line_no;
        header = tokenize(raw);
        if (!header.empty())
            break;
    }
    if (header.empty())
        parse_fail(name, line_no, "missing header line \"n m flag\"");
    if (header.size() != 3)
        parse_fail(name, line_no, "header must be \"n m flag\"");
    std::uint32_t n = 0;
    std::uint64_t m = 0;
    if (!parse_u32(header[0], n))
        parse_fail(name, line_no, "bad vertex count '" + header[0] + "'");
    if (!parse_u64(header[1], m))
        parse_fail(name, line_no, "bad edge count '" + header[1] + "'");
    bool weighted;
    if (header[2] == "weighted")
        weighted = true;
    else if (header[2] == "unweighted")
        weighted = false;
    else
        parse_fail(name, line_no, "flag must be 'weighted' or 'unweighted', got '" + header[2] + "'");

    Graph g(n, weighted);
    std::uint64_t seen = 0;
    while (seen < m && std::getline(in, raw)) {
        ++line_no;
        auto tokens = tokenize(raw);
        if (tokens.empty())
            continue;
        std::size_t expect = weighted ? 3 : 2;
        if (tokens.size() != expect)
            parse_fail(name, line_no,
                       weighted ? "expected \"u v w\"" : "expected \"u v\"");
        VertexId u = 0, v = 0;
        if (!parse_u32(tokens[0], u) || !parse_u32(tokens[1], v))
            parse_fail(name, line_no, "bad vertex id");
        if (u >= n || v >= n)
            parse_fail(name, line_no, "vertex id out of range");
        double w = 1.0;
        if (weighted && (!parse_double(tokens[2], w) || !(w > 0.0) || !std::isfinite(w)))
            parse_fail(name, line_no, "bad edge weight '" + tokens[2] + "'");
        try {
            g.add_edge(u, v, w);
        } catch (const ContractError& e) {
            parse_fail(name, line_no, e.what());
        }
        ++seen;
    }
    if (seen < m)
        parse_fail(name, line_no, "expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(seen));
    while (std::getline(in, raw)) {
        ++line_no;
        if (!tokenize(raw).empty())
            parse_fail(name, line_no, "unexpected content after edge list");
    }
    return g;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(path + ": cannot open file");
    return parse_graph(in, path);
}

void write_graph(const Graph& g, std::ostream& out) {
    out << g.num_vertices() << ' ' << g.num_edges() << ' '
        << (g.weighted() ? "weighted" : "unweighted") << '\n';
    for (const Edge& e : g.edges()) {
        VertexId a = e.u, b = e.v;
        if (a > b)
            std::swap(a, b);
        out << a << ' ' << b;
        if (g.weighted())
            out << ' ' << format_double(e.w);
        out << '\n';
    }
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw ParseError(path + ": cannot open file for writing");
    write_graph(g, out);
    if (!out)
        throw ParseError(path + ": write failed");
}

} // namespace spor
