#include <bit>
#include <charconv>
#include <stdexcept>

#include "cyclres/simplicial.hpp"

namespace cyclres {

VertexSet::VertexSet(int m, std::uint64_t bits) : m_(m), bits_(bits) {
  if (m < 0 || m > 64) throw std::invalid_argument("vertex count must be in [0, 64]");
  if (m < 64 && (bits >> m) != 0) throw std::invalid_argument("vertex outside {1..m}");
}

VertexSet VertexSet::from_list(int m, const std::vector<int>& vertices) {
  std::uint64_t bits = 0;
  for (int v : vertices) {
    if (v < 1 || v > m)
      throw std::invalid_argument("vertex " + std::to_string(v) + " outside {1.." + std::to_string(m) + "}");
    bits |= std::uint64_t{1} << (v - 1);
  }
  return VertexSet(m, bits);
}

VertexSet VertexSet::parse(int m, std::string_view text) {
  std::vector<int> vs;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw std::invalid_argument("bad vertex list '" + std::string(text) + "'");
    vs.push_back(v);
    pos = end + 1;
  }
  return from_list(m, vs);
}

VertexSet VertexSet::range(int m, int first, int last) {
  std::vector<int> vs;
  for (int v = first; v <= last; ++v) vs.push_back(v);
  return from_list(m, vs);
}

int VertexSet::size() const { return std::popcount(bits_); }

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (int v = 1; v <= m_; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int v : members()) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

}  // namespace cyclres
