#include "defpart/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "defpart/errors.hpp"

namespace defpart {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

long long parse_int(const std::string& tok, int lineno) {
    size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": expected integer, got '" + tok +
                         "'");
    }
    if (pos != tok.size())
        throw ParseError("line " + std::to_string(lineno) + ": expected integer, got '" + tok +
                         "'");
    return value;
}

Graph load_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n >= 0) throw ParseError("line " + std::to_string(lineno) + ": duplicate p line");
            if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "edges" && toks[1] != "col"))
                throw ParseError("line " + std::to_string(lineno) + ": malformed p line");
            n = parse_int(toks[2], lineno);
            if (n < 0) throw ParseError("line " + std::to_string(lineno) + ": negative n");
            continue;
        }
        if (toks[0] == "e") {
            if (n < 0)
                throw ParseError("line " + std::to_string(lineno) + ": e line before p line");
            if (toks.size() != 3)
                throw ParseError("line " + std::to_string(lineno) + ": malformed e line");
            long long u = parse_int(toks[1], lineno);
            long long v = parse_int(toks[2], lineno);
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError("line " + std::to_string(lineno) + ": vertex id out of range");
            if (u == v) throw ParseError("line " + std::to_string(lineno) + ": loop edge");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        throw ParseError("line " + std::to_string(lineno) + ": unrecognized line '" + toks[0] +
                         "'");
    }
    if (n < 0) throw ParseError("missing p line");
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph load_edgelist(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long maxid = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> isolated;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() == 1) {
            long long u = parse_int(toks[0], lineno);
            if (u < 0) throw ParseError("line " + std::to_string(lineno) + ": negative vertex id");
            isolated.push_back(static_cast<int>(u));
            maxid = std::max(maxid, u);
            continue;
        }
        if (toks.size() != 2)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'u v'");
        long long u = parse_int(toks[0], lineno);
        long long v = parse_int(toks[1], lineno);
        if (u < 0 || v < 0)
            throw ParseError("line " + std::to_string(lineno) + ": negative vertex id");
        if (u == v) throw ParseError("line " + std::to_string(lineno) + ": loop edge");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        maxid = std::max({maxid, u, v});
    }
    return Graph::from_edges(static_cast<int>(maxid + 1), edges);
}

}  // namespace

Graph load_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::dimacs ? load_dimacs(text) : load_edgelist(text);
}

std::string emit_graph(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    if (format == GraphFormat::dimacs) {
        out << "p edge " << g.n() << " " << g.m() << "\n";
        for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    } else {
        for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
        for (int v = 0; v < g.n(); ++v)
            if (g.degree(v) == 0) out << v << "\n";
    }
    return out.str();
}

Graph load_graph_file(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_graph(buf.str(), format);
}

}  // namespace defpart
