#include "vertexenergy/graph6.hpp"

#include <string>

#include "vertexenergy/errors.hpp"

namespace vertexenergy {

namespace {

constexpr int kOffset = 63;
constexpr char kExtendedMarker = '~';

std::size_t body_bytes_for_order(std::size_t n) {
  const std::size_t bits = n * (n - 1) / 2;
  return (bits + 5) / 6;
}

int decode_sextet(char c, const char* where) {
  const unsigned char u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126)
    throw BadHeaderError(std::string("graph6: byte out of range in ") + where);
  return u - kOffset;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw BadHeaderError("graph6: empty input");

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] == kExtendedMarker) {
    if (text.size() >= 2 && text[1] == kExtendedMarker)
      throw UnsupportedOrderError("graph6: 8-byte header (order > 258047) not supported");
    if (text.size() < 4) throw BadHeaderError("graph6: truncated extended header");
    n = static_cast<std::size_t>(decode_sextet(text[1], "header")) << 12 |
        static_cast<std::size_t>(decode_sextet(text[2], "header")) << 6 |
        static_cast<std::size_t>(decode_sextet(text[3], "header"));
    pos = 4;
  } else {
    n = static_cast<std::size_t>(decode_sextet(text[0], "header"));
    pos = 1;
  }
  if (n == 0) throw BadHeaderError("graph6: order 0 not representable");

  const std::size_t need = body_bytes_for_order(n);
  if (text.size() - pos < need) throw BadHeaderError("graph6: body shorter than the header implies");
  if (text.size() - pos > need) throw TrailingDataError("graph6: trailing data after the encoded body");

  std::vector<Edge> edges;
  std::size_t bit = 0;
  int current = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (bit % 6 == 0) current = decode_sextet(text[pos + bit / 6], "body");
      if (current & (1 << (5 - bit % 6))) edges.emplace_back(i, j);
      ++bit;
    }
  }
  return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxGraph6Order)
    throw UnsupportedOrderError("graph6: order " + std::to_string(n) + " exceeds 258047");

  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back(kExtendedMarker);
    out.push_back(static_cast<char>(((n >> 12) & 63) + kOffset));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kOffset));
    out.push_back(static_cast<char>((n & 63) + kOffset));
  }

  std::size_t bit = 0;
  int current = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (g.has_edge(i, j)) current |= 1 << (5 - bit % 6);
      ++bit;
      if (bit % 6 == 0) {
        out.push_back(static_cast<char>(current + kOffset));
        current = 0;
      }
    }
  }
  if (bit % 6 != 0) out.push_back(static_cast<char>(current + kOffset));
  return out;
}

}  // namespace vertexenergy
