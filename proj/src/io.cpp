#include "flowpoly/io.hpp"

#include "flowpoly/errors.hpp"

#include <charconv>
#include <sstream>

namespace flowpoly {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  std::string s = hash == std::string::npos ? line : line.substr(0, hash);
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<long long> parse_ints(const std::string& line, std::size_t line_no) {
  std::vector<long long> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" + tok + "'");
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace

std::vector<Multigraph> read_text_graphs(std::istream& in) {
  // Token stream with line numbers: a record may span lines or sit on one.
  struct Token {
    long long value;
    std::size_t line;
  };
  std::vector<Token> tokens;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_comment(raw);
    if (line.empty()) continue;
    for (const long long v : parse_ints(line, line_no)) tokens.push_back({v, line_no});
  }

  std::vector<Multigraph> out;
  std::size_t pos = 0;
  auto where = [&](std::size_t i) {
    return "line " + std::to_string(i < tokens.size() ? tokens[i].line : line_no) + ": ";
  };
  while (pos < tokens.size()) {
    if (pos + 1 >= tokens.size()) throw ParseError(where(pos) + "expected header 'n m'");
    const long long n = tokens[pos].value;
    long long remaining = tokens[pos + 1].value;
    if (n < 0 || remaining < 0) throw ParseError(where(pos) + "negative header value");
    pos += 2;
    std::vector<Multigraph::Triple> triples;
    while (remaining > 0) {
      if (pos + 2 >= tokens.size()) {
        throw ParseError(where(pos) + "unexpected end of input: record has fewer edges than its header's m");
      }
      const long long u = tokens[pos].value, v = tokens[pos + 1].value, k = tokens[pos + 2].value;
      if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(where(pos) + "vertex out of range");
      if (k <= 0) throw ParseError(where(pos) + "multiplicity must be positive");
      if (k > remaining) throw ParseError(where(pos) + "more edges than the header's m");
      triples.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<std::uint32_t>(k)});
      remaining -= k;
      pos += 3;
    }
    out.emplace_back(static_cast<std::size_t>(n), triples);
  }
  return out;
}

Multigraph parse_text_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  auto graphs = read_text_graphs(in);
  if (graphs.size() != 1) throw ParseError("expected exactly one graph, found " + std::to_string(graphs.size()));
  return std::move(graphs.front());
}

std::string to_text(const Multigraph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& t : g.triples()) out << t.u << ' ' << t.v << ' ' << t.count << '\n';
  return out.str();
}

std::string to_text_line(const Multigraph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size();
  for (const auto& t : g.triples()) out << ' ' << t.u << ' ' << t.v << ' ' << t.count;
  return out.str();
}

Multigraph read_graph6(std::string_view line) {
  std::string_view s = line;
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
  if (s.empty()) throw ParseError("graph6: empty string");
  if (s.front() == ':' || s.front() == ';' || s.front() == '&') {
    throw ParseError("graph6: sparse6/digraph6 input is not supported");
  }
  for (char c : s) {
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
  }
  std::size_t pos = 0;
  std::size_t n = 0;
  if (s[0] != 126) {
    n = static_cast<std::size_t>(s[0] - 63);
    pos = 1;
  } else if (s.size() >= 4 && s[1] != 126) {
    n = (static_cast<std::size_t>(s[1] - 63) << 12) | (static_cast<std::size_t>(s[2] - 63) << 6) |
        static_cast<std::size_t>(s[3] - 63);
    pos = 4;
  } else if (s.size() >= 8) {
    n = 0;
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | static_cast<std::size_t>(s[i] - 63);
    pos = 8;
  } else {
    throw ParseError("graph6: truncated order field");
  }
  const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
  const std::size_t bytes_needed = (bits + 5) / 6;
  if (s.size() - pos != bytes_needed) {
    throw ParseError("graph6: expected " + std::to_string(bytes_needed) + " data bytes, got " +
                     std::to_string(s.size() - pos));
  }
  std::vector<Multigraph::Triple> triples;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int byte = s[pos + bit / 6] - 63;
      if (byte & (1 << (5 - bit % 6))) triples.push_back({i, j, 1});
    }
  }
  return Multigraph(n, triples);
}

std::string to_graph6(const Multigraph& g) {
  if (!is_simple(g)) throw InvalidOperation("graph6 cannot encode loops or parallel edges");
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 0x3f) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 0x3f) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.multiplicity(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::vector<Multigraph> read_graphs(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::istringstream lines(text);
  std::string raw;
  bool numeric = false;
  while (std::getline(lines, raw)) {
    const std::string line = strip_comment(raw);
    if (line.empty()) continue;
    // graph6 bytes start at '?', so a leading digit can only be the text format.
    numeric = line[0] >= '0' && line[0] <= '9';
    break;
  }
  std::istringstream again(text);
  if (numeric) return read_text_graphs(again);
  std::vector<Multigraph> out;
  while (std::getline(again, raw)) {
    const std::string line = strip_comment(raw);
    if (line.empty()) continue;
    out.push_back(read_graph6(line));
  }
  return out;
}

}  // namespace flowpoly
