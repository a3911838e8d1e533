#ifndef GRAMSEY_IO_HPP
#define GRAMSEY_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "gramsey/coloring.hpp"
#include "gramsey/hypergraph.hpp"

namespace gramsey {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}

    int line;
};

// Coloring text format: header `n k` (vertex count, palette size), then one
// line `u v c` per colored pair. Hypergraph text format: header `n r m`
// (r = 3, 4 or 0 for mixed; m edge lines follow), then `mult v1 v2 [v3 [v4]]`
// per edge. Whitespace-delimited; `#` starts a comment.

EdgeColoring read_coloring(std::istream& in);
EdgeColoring read_coloring_file(const std::string& path);
void write_coloring(std::ostream& out, const EdgeColoring& coloring);
std::string coloring_to_string(const EdgeColoring& coloring);
void write_coloring_file(const std::string& path, const EdgeColoring& coloring);

MultiHypergraph read_hypergraph(std::istream& in);
MultiHypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph(std::ostream& out, const MultiHypergraph& hypergraph);
std::string hypergraph_to_string(const MultiHypergraph& hypergraph);
void write_hypergraph_file(const std::string& path, const MultiHypergraph& hypergraph);

enum class FileKind { Coloring, Hypergraph };

// Distinguishes the two formats by the token count of the first data line.
FileKind detect_file_kind(const std::string& path);

}  // namespace gramsey

#endif
