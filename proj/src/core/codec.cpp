#include "core/codec.hpp"

#include <charconv>
#include <sstream>

namespace sclq {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
}

Error parse_error(const std::string& what) { return Error(ErrorCode::parse, what); }

int sextet(char c) {
  if (c < kBias || c > 126) {
    throw parse_error("invalid graph6 byte '" + std::string(1, c) + "'");
  }
  return c - kBias;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

GraphFormat parse_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  if (name == "edgelist" || name == "edge-list") return GraphFormat::edge_list;
  throw Error(ErrorCode::invalid_argument, "unknown format '" + std::string(name) + "'");
}

std::string format_name(GraphFormat format) {
  return format == GraphFormat::graph6 ? "graph6" : "edgelist";
}

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.vertex_count();
  std::string out;
  append_size(out, n);
  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph from_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(kHeader)) {
    line.remove_prefix(kHeader.size());
  } else if (line.starts_with(">>")) {
    throw parse_error("unsupported header");
  }
  if (line.empty()) throw parse_error("empty graph6 string");
  if (line.front() == ':') throw parse_error("sparse6 input is not supported");
  if (line.front() == '&') throw parse_error("digraph6 input is not supported");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (line[0] != 126) {
    n = static_cast<std::uint64_t>(sextet(line[0]));
    pos = 1;
  } else if (line.size() >= 2 && line[1] == 126) {
    if (line.size() < 8) throw parse_error("truncated graph6 size");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(line[i]));
    pos = 8;
  } else {
    if (line.size() < 4) throw parse_error("truncated graph6 size");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(line[i]));
    pos = 4;
  }
  if (n > (1u << 16)) throw Error(ErrorCode::too_large, "graph6 vertex count too large");

  const std::uint64_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t byte_count = (bit_count + 5) / 6;
  if (line.size() - pos != byte_count) {
    throw parse_error("graph6 body has " + std::to_string(line.size() - pos) + " bytes, expected " +
                      std::to_string(byte_count));
  }

  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = sextet(line[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) pairs.emplace_back(i, j);
    }
  }
  for (; k < byte_count * 6; ++k) {
    if ((sextet(line[pos + k / 6]) >> (5 - k % 6)) & 1) throw parse_error("nonzero graph6 padding");
  }
  return Graph::build(static_cast<std::size_t>(n), pairs);
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count());
  for (const Edge& e : g.edges()) {
    out += "\n" + std::to_string(e.u) + " " + std::to_string(e.v);
  }
  return out;
}

namespace {

std::vector<std::uint64_t> parse_numbers(std::string_view s, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t') {
      ++i;
      continue;
    }
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), value);
    if (ec != std::errc() || ptr == s.data() + i) {
      throw parse_error("line " + std::to_string(line_no) + ": expected non-negative integers");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - s.data());
  }
  return out;
}

}  // namespace

std::vector<Graph> read_graphs(std::istream& in, GraphFormat format) {
  std::vector<Graph> graphs;
  std::string raw;
  std::size_t line_no = 0;

  if (format == GraphFormat::graph6) {
    while (std::getline(in, raw)) {
      ++line_no;
      std::string_view line = trim(raw);
      if (line.empty() || line == kHeader || line.front() == '#') continue;
      try {
        graphs.push_back(from_graph6(line));
      } catch (const Error& e) {
        throw Error(e.code() == ErrorCode::too_large ? e.code() : ErrorCode::parse,
                    "line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    return graphs;
  }

  std::size_t expected_edges = 0;
  std::size_t n = 0;
  bool in_block = false;
  std::size_t block_line = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  auto finish = [&] {
    try {
      graphs.push_back(Graph::build(n, pairs));
    } catch (const Error& e) {
      throw parse_error("graph starting at line " + std::to_string(block_line) + ": " + e.what());
    }
    pairs.clear();
    in_block = false;
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto numbers = parse_numbers(line, line_no);
    if (numbers.size() != 2) {
      throw parse_error("line " + std::to_string(line_no) + ": expected two integers");
    }
    if (!in_block) {
      n = static_cast<std::size_t>(numbers[0]);
      expected_edges = static_cast<std::size_t>(numbers[1]);
      block_line = line_no;
      in_block = true;
      if (expected_edges == 0) finish();
      continue;
    }
    if (numbers[0] >= n || numbers[1] >= n) {
      throw parse_error("line " + std::to_string(line_no) + ": endpoint out of range");
    }
    pairs.emplace_back(static_cast<Vertex>(numbers[0]), static_cast<Vertex>(numbers[1]));
    if (pairs.size() == expected_edges) finish();
  }
  if (in_block) {
    throw parse_error("line " + std::to_string(line_no) + ": expected " +
                      std::to_string(expected_edges) + " edges, found " +
                      std::to_string(pairs.size()));
  }
  return graphs;
}

std::vector<Graph> read_graphs(std::string_view text, GraphFormat format) {
  std::istringstream in{std::string(text)};
  return read_graphs(in, format);
}

}  // namespace sclq
