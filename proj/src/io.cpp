#include "gramsey/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace gramsey {
namespace {

// Strips comments and yields whitespace-split tokens per line, tracking line numbers.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next non-empty data line as tokens; false at EOF.
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
            tokens.clear();
            std::istringstream ss(line);
            std::string tok;
            while (ss >> tok) tokens.push_back(tok);
            if (!tokens.empty()) return true;
        }
        return false;
    }

    int line_no() const { return line_no_; }

private:
    std::istream& in_;
    int line_no_ = 0;
};

long long parse_int(const std::string& tok, const LineReader& r) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(r.line_no(), "expected an integer, got '" + tok + "'");
    }
}

}  // namespace

EdgeColoring read_coloring(std::istream& in) {
    LineReader r(in);
    std::vector<std::string> tok;
    if (!r.next(tok)) throw ParseError(1, "empty coloring file");
    if (tok.size() != 2) throw ParseError(r.line_no(), "coloring header must be 'n k'");
    long long n = parse_int(tok[0], r);
    long long k = parse_int(tok[1], r);
    if (n < 1 || n > 20000) throw ParseError(r.line_no(), "vertex count out of range");
    if (k < 0) throw ParseError(r.line_no(), "palette size must be non-negative");

    EdgeColoring coloring(static_cast<int>(n));
    while (r.next(tok)) {
        if (tok.size() != 3) throw ParseError(r.line_no(), "pair line must be 'u v c'");
        long long u = parse_int(tok[0], r);
        long long v = parse_int(tok[1], r);
        long long c = parse_int(tok[2], r);
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw ParseError(r.line_no(), "invalid pair {" + tok[0] + "," + tok[1] + "}");
        if (c < 0) throw ParseError(r.line_no(), "color ids must be non-negative");
        if (coloring.is_colored(static_cast<Vertex>(u), static_cast<Vertex>(v)))
            throw ParseError(r.line_no(), "duplicate pair {" + tok[0] + "," + tok[1] + "}");
        coloring.set_color(static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<int>(c));
    }
    if (coloring.palette_size() != k)
        throw ParseError(r.line_no(), "header palette size " + std::to_string(k) +
                                          " does not match the " +
                                          std::to_string(coloring.palette_size()) +
                                          " distinct colors in the file");
    return coloring;
}

void write_coloring(std::ostream& out, const EdgeColoring& coloring) {
    out << coloring.n() << ' ' << coloring.palette_size() << '\n';
    for (int i = 0; i < coloring.pair_count(); ++i) {
        int c = coloring.color_by_index(i);
        if (c == EdgeColoring::kUncolored) continue;
        VertexPair p = EdgeColoring::pair_at(coloring.n(), i);
        out << p.u << ' ' << p.v << ' ' << c << '\n';
    }
}

MultiHypergraph read_hypergraph(std::istream& in) {
    LineReader r(in);
    std::vector<std::string> tok;
    if (!r.next(tok)) throw ParseError(1, "empty hypergraph file");
    if (tok.size() != 3) throw ParseError(r.line_no(), "hypergraph header must be 'n r m'");
    long long n = parse_int(tok[0], r);
    long long rr = parse_int(tok[1], r);
    long long m = parse_int(tok[2], r);
    if (n < 1 || n > 64) throw ParseError(r.line_no(), "vertex count out of range (1..64)");
    if (rr != 0 && rr != 3 && rr != 4)
        throw ParseError(r.line_no(), "uniformity must be 3, 4, or 0 for mixed");
    if (m < 0) throw ParseError(r.line_no(), "edge count must be non-negative");

    MultiHypergraph h(static_cast<int>(n), static_cast<Uniformity>(rr));
    long long seen = 0;
    while (r.next(tok)) {
        if (tok.size() < 4 || tok.size() > 5)
            throw ParseError(r.line_no(), "edge line must be 'mult v1 v2 v3 [v4]'");
        long long mult = parse_int(tok[0], r);
        std::vector<Vertex> vs;
        for (std::size_t i = 1; i < tok.size(); ++i)
            vs.push_back(static_cast<Vertex>(parse_int(tok[i], r)));
        try {
            h.add_edge(std::move(vs), mult);
        } catch (const std::invalid_argument& e) {
            throw ParseError(r.line_no(), e.what());
        }
        ++seen;
    }
    if (seen != m)
        throw ParseError(r.line_no(), "header announced " + std::to_string(m) +
                                          " edge lines but file has " + std::to_string(seen));
    return h;
}

void write_hypergraph(std::ostream& out, const MultiHypergraph& h) {
    out << h.n() << ' ' << static_cast<int>(h.uniformity()) << ' ' << h.distinct_edge_count()
        << '\n';
    for (const HyperEdge& e : h.edges()) {
        out << e.multiplicity;
        for (Vertex v : e.vertices) out << ' ' << v;
        out << '\n';
    }
}

EdgeColoring read_coloring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return read_coloring(in);
}

MultiHypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return read_hypergraph(in);
}

std::string coloring_to_string(const EdgeColoring& coloring) {
    std::ostringstream ss;
    write_coloring(ss, coloring);
    return ss.str();
}

std::string hypergraph_to_string(const MultiHypergraph& h) {
    std::ostringstream ss;
    write_hypergraph(ss, h);
    return ss.str();
}

void write_coloring_file(const std::string& path, const EdgeColoring& coloring) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    write_coloring(out, coloring);
}

void write_hypergraph_file(const std::string& path, const MultiHypergraph& h) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    write_hypergraph(out, h);
}

FileKind detect_file_kind(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    LineReader r(in);
    std::vector<std::string> tok;
    if (!r.next(tok)) throw ParseError(1, "empty file");
    if (tok.size() == 2) return FileKind::Coloring;
    if (tok.size() == 3) return FileKind::Hypergraph;
    throw ParseError(r.line_no(), "unrecognized header (expected 'n k' or 'n r m')");
}

}  // namespace gramsey
