#include "gaindex/graph_io.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "gaindex/errors.hpp"

namespace gaindex {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string& out, long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  std::string out;
  append_size(out, g.order());
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) base = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  std::string_view body = text.substr(std::min(base, text.size()));
  if (body.empty()) throw ParseError("graph6: empty input", base);
  auto value_at = [&](std::size_t i) {
    const int c = static_cast<unsigned char>(body[i]);
    if (c < kBias || c > 126) {
      throw ParseError("graph6: invalid character at offset " + std::to_string(base + i),
                       base + i);
    }
    return c - kBias;
  };
  long n = 0;
  std::size_t pos = 0;
  auto read_digits = [&](int count) {
    if (pos + static_cast<std::size_t>(count) > body.size()) {
      throw ParseError("graph6: truncated size field", base + body.size());
    }
    long value = 0;
    for (int k = 0; k < count; ++k) value = (value << 6) | value_at(pos++);
    return value;
  };
  if (body[0] == '~') {
    if (body.size() > 1 && body[1] == '~') {
      pos = 2;
      n = read_digits(6);
    } else {
      pos = 1;
      n = read_digits(3);
    }
  } else {
    n = read_digits(1);
  }
  if (n > (1L << 20)) throw ParseError("graph6: graph too large", base);
  const std::size_t bit_count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t expected = (bit_count + 5) / 6;
  if (body.size() - pos != expected) {
    throw ParseError("graph6: expected " + std::to_string(expected) +
                         " data bytes for n = " + std::to_string(n) + ", found " +
                         std::to_string(body.size() - pos),
                     base + std::min(body.size(), pos + expected));
  }
  std::vector<std::pair<int, int>> pairs;
  std::size_t index = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++index) {
      const int value = value_at(pos + index / 6);
      if ((value >> (5 - index % 6)) & 1) pairs.emplace_back(i, j);
    }
  }
  if (expected > 0 && bit_count % 6 != 0) {
    const int pad_bits = static_cast<int>(6 - bit_count % 6);
    if (value_at(pos + expected - 1) & ((1 << pad_bits) - 1)) {
      throw ParseError("graph6: nonzero padding bits", base + pos + expected - 1);
    }
  }
  return Graph::from_edge_list(static_cast<int>(n), pairs);
}

std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.what(), e.offset(), number);
    }
  }
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<long> parse_ints(const Line& line) {
  std::vector<long> out;
  std::size_t pos = 0;
  const std::string_view s = line.text;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    if (pos >= s.size()) break;
    long value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
    if (ec != std::errc() || (ptr != s.data() + s.size() && *ptr != ' ' && *ptr != '\t')) {
      throw ParseError("edge list: line " + std::to_string(line.number) +
                           ": expected an integer at column " + std::to_string(pos + 1),
                       pos, line.number);
    }
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - s.data());
  }
  return out;
}

}  // namespace

std::vector<Graph> parse_edge_lists(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    const auto end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const auto first = raw.find_first_not_of(" \t");
    if (first == std::string_view::npos || raw[first] == '#') continue;
    lines.push_back({number, raw});
  }
  std::vector<Graph> out;
  std::size_t i = 0;
  while (i < lines.size()) {
    const auto header = parse_ints(lines[i]);
    if (header.size() != 2 || header[0] < 0 || header[1] < 0) {
      throw ParseError("edge list: line " + std::to_string(lines[i].number) +
                           ": header must be \"n m\"",
                       0, lines[i].number);
    }
    const long n = header[0];
    const long m = header[1];
    std::vector<std::pair<int, int>> pairs;
    for (long k = 0; k < m; ++k) {
      ++i;
      if (i >= lines.size()) {
        throw ParseError("edge list: expected " + std::to_string(m) + " edges, found " +
                             std::to_string(k),
                         0, lines.empty() ? 0 : lines.back().number);
      }
      const auto values = parse_ints(lines[i]);
      if (values.size() != 2) {
        throw ParseError("edge list: line " + std::to_string(lines[i].number) +
                             ": expected \"u v\"",
                         0, lines[i].number);
      }
      pairs.emplace_back(static_cast<int>(values[0]), static_cast<int>(values[1]));
    }
    ++i;
    try {
      out.push_back(Graph::from_edge_list(static_cast<int>(n), pairs));
    } catch (const GraphError& e) {
      throw ParseError(std::string("edge list: ") + e.what(), 0,
                       lines[i - 1].number);
    }
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  auto graphs = parse_edge_lists(text);
  if (graphs.size() != 1) {
    throw ParseError("edge list: expected exactly one graph, found " +
                         std::to_string(graphs.size()),
                     0);
  }
  return std::move(graphs.front());
}

}  // namespace gaindex
