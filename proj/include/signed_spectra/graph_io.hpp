#ifndef SIGNED_SPECTRA_GRAPH_IO_HPP
#define SIGNED_SPECTRA_GRAPH_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "signed_spectra/matrices.hpp"
#include "signed_spectra/signed_graph.hpp"

namespace signed_spectra {

/// Parse failure; line is 1-based within the input.
struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

/// Edge-list text format: first non-comment line `n`, then `u v s` lines with
/// s in {+,-}. `#` starts a comment; blank lines and CRLF endings accepted.
SignedGraph read_edge_list(std::istream& in);
SignedGraph read_edge_list_file(const std::string& path);

std::string write_edge_list(const SignedGraph& g);

/// Plain text matrix dump: first line n, then n rows of integers.
std::string matrix_to_text(const IntMatrix& m);
IntMatrix matrix_from_text(std::istream& in);

}  // namespace signed_spectra

#endif
