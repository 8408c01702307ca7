#include "spexlab/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>

namespace spexlab {
namespace {

constexpr int kBias = 63;
constexpr int kShortMax = 62;
constexpr int kMediumMax = 258047;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= kShortMax) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= kMediumMax) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
    out.push_back(static_cast<char>((n & 0x3f) + kBias));
  } else {
    throw FormatError("graph6: unsupported order " + std::to_string(n));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph decode_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw FormatError("graph6: empty string");
  for (char c : text)
    if (c < kBias || c > 126) throw FormatError("graph6: byte out of range");

  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = text[0] - kBias;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') throw FormatError("graph6: unsupported order (8-byte form)");
    if (text.size() < 4) throw FormatError("graph6: truncated order field");
    n = ((text[1] - kBias) << 12) | ((text[2] - kBias) << 6) | (text[3] - kBias);
    if (n <= kShortMax) throw FormatError("graph6: non-canonical order field");
    pos = 4;
  }
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos != nbytes)
    throw FormatError("graph6: expected " + std::to_string(nbytes) + " data bytes, found " +
                      std::to_string(text.size() - pos));

  GraphBuilder b(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  if (nbits % 6 != 0) {
    const int last = text.back() - kBias;
    if (last & ((1 << (6 - nbits % 6)) - 1)) throw FormatError("graph6: non-zero padding bits");
  }
  return std::move(b).build();
}

std::string encode_edgelist(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

namespace {

std::vector<long long> integers_of(std::string_view text) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || (ptr != text.data() + text.size() && !std::isspace(static_cast<unsigned char>(*ptr))))
      throw FormatError("edge list: expected an integer");
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return out;
}

}  // namespace

Graph decode_edgelist(std::string_view text) {
  const auto nums = integers_of(text);
  if (nums.size() < 2) throw FormatError("edge list: missing 'n m' header");
  const long long n = nums[0];
  const long long m = nums[1];
  if (n < 0 || m < 0) throw FormatError("edge list: negative header value");
  if (static_cast<long long>(nums.size()) != 2 + 2 * m)
    throw FormatError("edge list: header declares " + std::to_string(m) + " edges");
  GraphBuilder b(static_cast<int>(n));
  try {
    for (long long i = 0; i < m; ++i) b.add_edge(static_cast<Vertex>(nums[2 + 2 * i]), static_cast<Vertex>(nums[3 + 2 * i]));
  } catch (const GraphError& e) {
    throw FormatError(std::string("edge list: ") + e.what());
  }
  return std::move(b).build();
}

Graph read_graph(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto t = trim(line);
    if (t.empty()) continue;
    const bool numeric = std::all_of(t.begin(), t.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c)) || std::isspace(static_cast<unsigned char>(c)) || c == '-';
    });
    if (numeric && integers_of(t).size() == 2) return decode_edgelist(text);
    return decode_graph6(t);
  }
  throw FormatError("no graph found in input");
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto t = trim(line);
    if (!t.empty()) out.push_back(decode_graph6(t));
  }
  return out;
}

}  // namespace spexlab
