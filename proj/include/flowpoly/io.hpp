#pragma once

#include "flowpoly/multigraph.hpp"

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace flowpoly {

/// Text multigraph format:
///
///   # comment
///   n m
///   u v k      (k parallel edges between u != v)
///   u u k      (k loops at u)
///
/// Vertices are 0-based and the k values must sum to m. Line breaks carry no
/// meaning, so a record may also sit on a single line; a stream may hold
/// several records back to back.
std::vector<Multigraph> read_text_graphs(std::istream& in);
Multigraph parse_text_graph(std::string_view text);
std::string to_text(const Multigraph& g);
/// The same record on one line: "n m u v k u v k ...".
std::string to_text_line(const Multigraph& g);

/// Standard graph6 encoding of a simple graph (no leading ">>graph6<<" header
/// required, but accepted).
Multigraph read_graph6(std::string_view line);
/// Throws InvalidOperation for graphs with loops or parallel edges.
std::string to_graph6(const Multigraph& g);

/// Reads either format: input whose first data character is a digit is the
/// text format, anything else is read as one graph6 string per line.
std::vector<Multigraph> read_graphs(std::istream& in);

}  // namespace flowpoly
