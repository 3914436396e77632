#include "signed_spectra/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace signed_spectra {

namespace {

// strip comment, CR, surrounding whitespace
std::string clean_line(std::string line) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    return start == std::string::npos ? std::string{} : line.substr(start);
}

}  // namespace

SignedGraph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<SignedEdge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = clean_line(line);
        if (body.empty()) continue;
        std::istringstream ss(body);
        if (n < 0) {
            if (!(ss >> n) || n < 1) throw ParseError(lineno, "expected vertex count");
            std::string rest;
            if (ss >> rest) throw ParseError(lineno, "unexpected token after vertex count");
            continue;
        }
        int u, v;
        std::string s;
        if (!(ss >> u >> v >> s)) throw ParseError(lineno, "expected `u v s`");
        std::string rest;
        if (ss >> rest) throw ParseError(lineno, "unexpected trailing token");
        if (s != "+" && s != "-") throw ParseError(lineno, "sign must be + or -");
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(lineno, "vertex out of range");
        if (u == v) throw ParseError(lineno, "self-loop");
        edges.push_back({u, v, s == "+" ? 1 : -1});
    }
    if (n < 0) throw ParseError(lineno, "empty input, expected vertex count");
    try {
        return SignedGraph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
    }
}

SignedGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

std::string write_edge_list(const SignedGraph& g) {
    std::ostringstream out;
    out << g.order() << "\n";
    for (const auto& e : g.edges())
        out << e.u << " " << e.v << " " << (e.sign > 0 ? "+" : "-") << "\n";
    return out.str();
}

std::string matrix_to_text(const IntMatrix& m) {
    std::ostringstream out;
    out << m.rows() << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
        out << "\n";
    }
    return out.str();
}

IntMatrix matrix_from_text(std::istream& in) {
    int n;
    if (!(in >> n) || n < 1) throw std::runtime_error("matrix_from_text: bad dimension");
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(in >> m(i, j))) throw std::runtime_error("matrix_from_text: truncated matrix");
    return m;
}

}  // namespace signed_spectra
