#include "mcds/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <sstream>

namespace mcds::io {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kBias = 63;
constexpr std::uint64_t kMaxShortOrder = 62;
constexpr std::uint64_t kMaxMediumOrder = 258047;
constexpr std::uint64_t kMaxLongOrder = 68719476735ULL;

std::string_view trim_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

class Graph6Cursor {
 public:
  Graph6Cursor(std::string_view body, std::size_t base) : body_(body), base_(base) {}

  int take() {
    if (pos_ >= body_.size()) throw ParseError("graph6: truncated input at offset " + std::to_string(offset()), offset());
    const auto c = static_cast<unsigned char>(body_[pos_]);
    if (c < 63 || c > 126) {
      throw ParseError("graph6: byte " + std::to_string(c) + " out of range at offset " + std::to_string(offset()),
                       offset());
    }
    ++pos_;
    return c - kBias;
  }

  [[nodiscard]] int peek_raw() const {
    return pos_ < body_.size() ? static_cast<unsigned char>(body_[pos_]) : -1;
  }
  [[nodiscard]] std::size_t offset() const { return base_ + pos_; }
  [[nodiscard]] bool at_end() const { return pos_ >= body_.size(); }

 private:
  std::string_view body_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

std::uint64_t read_order(Graph6Cursor& cur) {
  if (cur.peek_raw() != 126) return static_cast<std::uint64_t>(cur.take());
  (void)cur.take();
  int groups = 3;
  if (cur.peek_raw() == 126) {
    (void)cur.take();
    groups = 6;
  }
  std::uint64_t n = 0;
  for (int i = 0; i < groups; ++i) n = (n << 6) | static_cast<std::uint64_t>(cur.take());
  return n;
}

void write_order(std::string& out, std::uint64_t n) {
  auto put_groups = [&](int groups) {
    for (int i = groups - 1; i >= 0; --i) out.push_back(static_cast<char>(((n >> (6 * i)) & 0x3F) + kBias));
  };
  if (n <= kMaxShortOrder) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= kMaxMediumOrder) {
    out.push_back('~');
    put_groups(3);
  } else {
    out.append("~~");
    put_groups(6);
  }
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = trim_line_end(line);
  std::size_t base = 0;
  if (line.starts_with(kGraph6Header)) {
    line.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  if (line.empty()) throw ParseError("graph6: empty record", base);

  Graph6Cursor cur(line, base);
  const std::uint64_t n = read_order(cur);
  if (n > 10000) throw ParseError("graph6: order " + std::to_string(n) + " too large", base);

  std::vector<Edge> edges;
  int group = 0;
  int remaining = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      if (remaining == 0) {
        group = cur.take();
        remaining = 6;
      }
      --remaining;
      if ((group >> remaining) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (remaining > 0 && (group & ((1 << remaining) - 1)) != 0) {
    throw ParseError("graph6: nonzero padding bits at offset " + std::to_string(cur.offset() - 1), cur.offset() - 1);
  }
  if (!cur.at_end()) {
    throw ParseError("graph6: unexpected trailing data at offset " + std::to_string(cur.offset()), cur.offset());
  }
  return make_graph(static_cast<std::size_t>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  if (n > kMaxLongOrder) throw GraphError("graph6: order " + std::to_string(n) + " not representable");
  std::string out;
  write_order(out, n);
  int group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  return out;
}

std::optional<Graph6Record> Graph6Reader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_number_;
    const auto body = trim(line);
    if (body.empty() || body == kGraph6Header) continue;
    return Graph6Record{line_number_, std::string(body)};
  }
  return std::nullopt;
}

namespace {

struct LineTokens {
  std::size_t line_number;
  std::vector<std::string_view> tokens;
};

std::vector<LineTokens> tokenize_lines(std::string_view text) {
  std::vector<LineTokens> out;
  std::size_t line_number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_number;
    LineTokens lt{line_number, {}};
    std::size_t pos = 0;
    while (pos < line.size()) {
      pos = line.find_first_not_of(" \t\r", pos);
      if (pos == std::string_view::npos) break;
      const auto end = line.find_first_of(" \t\r", pos);
      lt.tokens.push_back(line.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
      pos = end;
    }
    if (!lt.tokens.empty()) out.push_back(std::move(lt));
  }
  return out;
}

std::uint64_t parse_number(std::string_view token, std::size_t line_number) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("edge list line " + std::to_string(line_number) + ": '" + std::string(token) +
                         "' is not a non-negative integer",
                     line_number);
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError("edge list: missing 'n m' header", 1);
  const auto& header = lines.front();
  if (header.tokens.size() != 2) {
    throw ParseError("edge list line " + std::to_string(header.line_number) + ": expected 'n m'", header.line_number);
  }
  const auto n = parse_number(header.tokens[0], header.line_number);
  const auto m = parse_number(header.tokens[1], header.line_number);
  if (lines.size() - 1 != m) {
    const std::size_t where = lines.size() - 1 < m ? lines.back().line_number + 1 : lines[m + 1].line_number;
    throw ParseError("edge list: header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(lines.size() - 1),
                     where);
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& lt = lines[i];
    if (lt.tokens.size() != 2) {
      throw ParseError("edge list line " + std::to_string(lt.line_number) + ": expected 'u v'", lt.line_number);
    }
    const auto u = parse_number(lt.tokens[0], lt.line_number);
    const auto v = parse_number(lt.tokens[1], lt.line_number);
    if (u >= n || v >= n) {
      throw ParseError("edge list line " + std::to_string(lt.line_number) + ": endpoint out of range [0," +
                           std::to_string(n) + ")",
                       lt.line_number);
    }
    if (u == v) {
      throw ParseError("edge list line " + std::to_string(lt.line_number) + ": self-loop", lt.line_number);
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return make_graph(static_cast<std::size_t>(n), edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string emit_dot(const Graph& g, std::optional<std::span<const std::string>> labels, std::string_view name) {
  if (labels && labels->size() != g.order()) throw GraphError("emit_dot: label count does not match graph order");
  auto node = [&](Vertex v) {
    return labels ? "\"" + (*labels)[v] + "\"" : std::to_string(v);
  };
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << node(v) << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << node(u) << " -- " << node(v) << ";\n";
  out << "}\n";
  return out.str();
}

Format detect_format(std::string_view text) {
  const auto lines = tokenize_lines(text);
  if (lines.empty()) throw ParseError("input is empty; cannot detect format", 1);
  const auto& first = lines.front();
  const auto is_number = [](std::string_view tok) {
    return !tok.empty() && std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (first.tokens.size() == 2 && is_number(first.tokens[0]) && is_number(first.tokens[1])) return Format::kEdgeList;
  if (first.tokens.size() == 1) {
    auto tok = first.tokens[0];
    if (tok.starts_with(kGraph6Header)) tok.remove_prefix(kGraph6Header.size());
    const bool printable = std::all_of(tok.begin(), tok.end(), [](char c) {
      const auto u = static_cast<unsigned char>(c);
      return u >= 63 && u <= 126;
    });
    if (printable) return Format::kGraph6;
  }
  throw ParseError("cannot detect input format from line " + std::to_string(first.line_number) +
                       "; pass --format explicitly",
                   first.line_number);
}

std::vector<Graph> read_graphs(std::string_view text, std::optional<Format> format) {
  const Format fmt = format ? *format : detect_format(text);
  if (fmt == Format::kEdgeList) return {parse_edge_list(text)};
  std::vector<Graph> out;
  std::istringstream in{std::string(text)};
  Graph6Reader reader(in);
  while (auto rec = reader.next()) out.push_back(parse_graph6(rec->text));
  return out;
}

}  // namespace mcds::io
