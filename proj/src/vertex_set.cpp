#include "mac/vertex_set.hpp"

namespace mac {

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) insert(v);
}

VertexSet VertexSet::from_vertices(const std::vector<int>& vertices) {
  VertexSet s;
  for (int v : vertices) s.insert(v);
  return s;
}

std::vector<int> VertexSet::vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each_vertex(*this, [&](int v) { out.push_back(v); });
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each_vertex(*this, [&](int v) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  });
  out += '}';
  return out;
}

VertexSet compress(VertexSet s, VertexSet support) {
  VertexSet out;
  int rank = 0;
  for_each_vertex(support, [&](int v) {
    ++rank;
    if (s.contains(v)) out.insert(rank);
  });
  return out;
}

VertexSet expand(VertexSet s, VertexSet support) {
  VertexSet out;
  int rank = 0;
  for_each_vertex(support, [&](int v) {
    ++rank;
    if (s.contains(rank)) out.insert(v);
  });
  return out;
}

}  // namespace mac
