#ifndef ODDCOL_IO_HPP
#define ODDCOL_IO_HPP

#include "oddcol/colouring.hpp"
#include "oddcol/graph.hpp"
#include "oddcol/hypergraph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace oddcol
{

class ParseError : public std::runtime_error
{
public:
    ParseError(int line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what)
        , line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

// Graph files:      "p <n> <m>" then m lines "e <u> <v>"; blank lines and
//                   lines starting with 'c' are ignored.
// Hypergraph files: "h <n> <m>" then exactly m edge lines of vertex ids;
//                   an empty line is an empty edge.
// Colouring files:  "<vertex> <colour>" per line, colours 1-based. An
//                   optional "c k <k>" line fixes the palette size.

Graph read_graph(std::istream &in);
void write_graph(std::ostream &out, const Graph &g);

Hypergraph read_hypergraph(std::istream &in);
void write_hypergraph(std::ostream &out, const Hypergraph &h);

/// Vertices absent from the file stay uncoloured. Without a "c k" line the
/// palette is the largest colour seen.
Colouring read_colouring(std::istream &in, int n);
void write_colouring(std::ostream &out, const Colouring &c);

Graph load_graph(const std::string &path);
Hypergraph load_hypergraph(const std::string &path);
Colouring load_colouring(const std::string &path, int n);
void save_graph(const std::string &path, const Graph &g);
void save_hypergraph(const std::string &path, const Hypergraph &h);
void save_colouring(const std::string &path, const Colouring &c);

} // namespace oddcol

#endif // ODDCOL_IO_HPP
