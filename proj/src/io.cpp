#include "oddcol/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace oddcol
{

namespace
{

bool is_skippable(const std::string &line)
{
    const auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == 'c';
}

template <typename T>
T expect(std::istringstream &ss, int line, const char *what)
{
    T value;
    if (!(ss >> value))
        throw ParseError(line, std::string("expected ") + what);
    return value;
}

void expect_end(std::istringstream &ss, int line)
{
    std::string rest;
    if (ss >> rest)
        throw ParseError(line, "trailing token '" + rest + "'");
}

std::ifstream open_in(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return in;
}

std::ofstream open_out(const std::string &path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    return out;
}

} // namespace

Graph read_graph(std::istream &in)
{
    std::string line;
    int lineno = 0;
    int n = -1;
    long m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_skippable(line))
            continue;
        std::istringstream ss(line);
        const auto tag = expect<std::string>(ss, lineno, "record tag");
        if (tag == "p") {
            if (n >= 0)
                throw ParseError(lineno, "duplicate header");
            n = expect<int>(ss, lineno, "vertex count");
            m = expect<long>(ss, lineno, "edge count");
            if (n < 0 || m < 0)
                throw ParseError(lineno, "negative header value");
            expect_end(ss, lineno);
            edges.reserve(m);
        } else if (tag == "e") {
            if (n < 0)
                throw ParseError(lineno, "edge before header");
            const int u = expect<int>(ss, lineno, "endpoint");
            const int v = expect<int>(ss, lineno, "endpoint");
            expect_end(ss, lineno);
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw ParseError(lineno, "endpoint out of range");
            edges.emplace_back(u, v);
        } else {
            throw ParseError(lineno, "unknown record '" + tag + "'");
        }
    }
    if (n < 0)
        throw ParseError(lineno, "missing 'p' header");
    if (static_cast<long>(edges.size()) != m)
        throw ParseError(lineno, "header announces " + std::to_string(m) + " edges, found " +
                                     std::to_string(edges.size()));
    try {
        return Graph(n, edges);
    } catch (const std::invalid_argument &e) {
        throw ParseError(lineno, e.what());
    }
}

void write_graph(std::ostream &out, const Graph &g)
{
    out << "p " << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u << ' ' << v << '\n';
}

Hypergraph read_hypergraph(std::istream &in)
{
    std::string line;
    int lineno = 0;
    int n = -1;
    long m = -1;
    while (n < 0 && std::getline(in, line)) {
        ++lineno;
        if (is_skippable(line))
            continue;
        std::istringstream ss(line);
        if (expect<std::string>(ss, lineno, "record tag") != "h")
            throw ParseError(lineno, "expected 'h' header");
        n = expect<int>(ss, lineno, "vertex count");
        m = expect<long>(ss, lineno, "edge count");
        if (n < 0 || m < 0)
            throw ParseError(lineno, "negative header value");
        expect_end(ss, lineno);
    }
    if (n < 0)
        throw ParseError(lineno, "missing 'h' header");
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(m);
    while (static_cast<long>(edges.size()) < m) {
        if (!std::getline(in, line))
            throw ParseError(lineno, "expected " + std::to_string(m) + " edge lines");
        ++lineno;
        std::istringstream ss(line);
        std::vector<Vertex> e;
        std::string tok;
        while (ss >> tok) {
            try {
                std::size_t used = 0;
                const int v = std::stoi(tok, &used);
                if (used != tok.size())
                    throw std::invalid_argument(tok);
                if (v < 0 || v >= n)
                    throw ParseError(lineno, "vertex out of range");
                e.push_back(v);
            } catch (const std::logic_error &) {
                throw ParseError(lineno, "bad vertex id '" + tok + "'");
            }
        }
        edges.push_back(std::move(e));
    }
    try {
        return Hypergraph(n, std::move(edges));
    } catch (const std::invalid_argument &e) {
        throw ParseError(lineno, e.what());
    }
}

void write_hypergraph(std::ostream &out, const Hypergraph &h)
{
    out << "h " << h.order() << ' ' << h.size() << '\n';
    for (const auto &e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

Colouring read_colouring(std::istream &in, int n)
{
    Colouring c(n, 0);
    int declared = -1;
    int largest = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first))
            continue;
        if (first == "c") {
            std::string key;
            if (ss >> key && key == "k") {
                declared = expect<int>(ss, lineno, "palette size");
                if (declared < 0)
                    throw ParseError(lineno, "negative palette size");
            }
            continue;
        }
        int v = 0;
        try {
            v = std::stoi(first);
        } catch (const std::logic_error &) {
            throw ParseError(lineno, "bad vertex id '" + first + "'");
        }
        const int col = expect<int>(ss, lineno, "colour");
        expect_end(ss, lineno);
        if (v < 0 || v >= n)
            throw ParseError(lineno, "vertex out of range");
        if (col < 1)
            throw ParseError(lineno, "colours are 1-based");
        if (c.colour[v] != unassigned)
            throw ParseError(lineno, "vertex coloured twice");
        c.colour[v] = col;
        largest = std::max(largest, col);
    }
    c.k = declared >= 0 ? declared : largest;
    if (largest > c.k)
        throw ParseError(lineno, "colour exceeds declared palette");
    return c;
}

void write_colouring(std::ostream &out, const Colouring &c)
{
    out << "c k " << c.k << '\n';
    for (Vertex v = 0; v < c.order(); ++v)
        if (c.colour[v] != unassigned)
            out << v << ' ' << c.colour[v] << '\n';
}

Graph load_graph(const std::string &path)
{
    auto in = open_in(path);
    return read_graph(in);
}

Hypergraph load_hypergraph(const std::string &path)
{
    auto in = open_in(path);
    return read_hypergraph(in);
}

Colouring load_colouring(const std::string &path, int n)
{
    auto in = open_in(path);
    return read_colouring(in, n);
}

void save_graph(const std::string &path, const Graph &g)
{
    auto out = open_out(path);
    write_graph(out, g);
}

void save_hypergraph(const std::string &path, const Hypergraph &h)
{
    auto out = open_out(path);
    write_hypergraph(out, h);
}

void save_colouring(const std::string &path, const Colouring &c)
{
    auto out = open_out(path);
    write_colouring(out, c);
}

} // namespace oddcol
