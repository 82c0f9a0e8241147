#include "toric/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace toric {

TorusLevel::TorusLevel(int level) {
  if (level < 1 || level > 13) {
    throw std::invalid_argument("torus level k must be in [1, 13], got " + std::to_string(level));
  }
  k = level;
  m = 1 << k;
  n = 2u * static_cast<std::uint32_t>(m) * m;
}

std::array<std::uint32_t, 2> TorusLevel::edge_endpoints(std::uint32_t e) const {
  const std::uint32_t m2 = vertex_count();
  if (e < m2) {
    // H(x,y): (x,y)-(x+1,y)
    const std::uint32_t row = e & ~static_cast<std::uint32_t>(m - 1);
    const std::uint32_t x1 = (e + 1) & (m - 1);
    return {e, row | x1};
  }
  // V(x,y): (x,y)-(x,y+1)
  const std::uint32_t v = e - m2;
  return {v, (v + m) & (m2 - 1)};
}

std::uint32_t edge_index(const TorusLevel& lv, const EdgeId& e) {
  return e.orientation == Orientation::H ? lv.h_edge(e.x, e.y) : lv.v_edge(e.x, e.y);
}

EdgeId edge_from_index(const TorusLevel& lv, std::uint32_t index) {
  const std::uint32_t m2 = lv.vertex_count();
  EdgeId out;
  if (index >= m2) {
    out.orientation = Orientation::V;
    index -= m2;
  }
  out.x = lv.vertex_x(index);
  out.y = lv.vertex_y(index);
  return out;
}

EdgeSet::EdgeSet(const TorusLevel& lv) : level_(lv), bits_((lv.n + 63) / 64, 0) {}

EdgeSet EdgeSet::from_edges(const TorusLevel& lv, std::span<const std::uint32_t> ids) {
  EdgeSet s(lv);
  for (auto e : ids) s.flip(e);
  return s;
}

std::uint64_t EdgeSet::weight() const {
  std::uint64_t w = 0;
  for (auto word : bits_) w += std::popcount(word);
  return w;
}

EdgeSet& EdgeSet::operator^=(const EdgeSet& other) {
  if (level_ != other.level_) throw std::invalid_argument("EdgeSet level mismatch in XOR");
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= other.bits_[i];
  return *this;
}

std::vector<std::uint32_t> EdgeSet::support() const {
  std::vector<std::uint32_t> out;
  out.reserve(64);
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    std::uint64_t word = bits_[w];
    while (word) {
      const int b = std::countr_zero(word);
      out.push_back(static_cast<std::uint32_t>(w * 64 + b));
      word &= word - 1;
    }
  }
  return out;
}

SyndromeSet SyndromeSet::from_ids(const TorusLevel& lv, std::vector<std::uint32_t> ids) {
  std::sort(ids.begin(), ids.end());
  // Duplicates cancel in pairs: a vertex toggled twice is not a defect.
  std::vector<std::uint32_t> kept;
  kept.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size();) {
    std::size_t j = i;
    while (j < ids.size() && ids[j] == ids[i]) ++j;
    if ((j - i) & 1) kept.push_back(ids[i]);
    i = j;
  }
  SyndromeSet s(lv);
  s.ids_ = std::move(kept);
  return s;
}

SyndromeSet SyndromeSet::from_vertices(const TorusLevel& lv, std::span<const VertexCoord> vs) {
  std::vector<std::uint32_t> ids;
  ids.reserve(vs.size());
  for (const auto& v : vs) ids.push_back(lv.vertex_id(v.x, v.y));
  return from_ids(lv, std::move(ids));
}

bool SyndromeSet::contains(std::uint32_t id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

std::vector<VertexCoord> SyndromeSet::vertices() const {
  std::vector<VertexCoord> out;
  out.reserve(ids_.size());
  for (auto id : ids_) out.push_back({level_.vertex_x(id), level_.vertex_y(id)});
  return out;
}

std::vector<std::uint32_t> syndrome_of_edges(const TorusLevel& lv,
                                             std::span<const std::uint32_t> edges) {
  std::vector<std::uint32_t> verts;
  verts.reserve(edges.size() * 2);
  for (auto e : edges) {
    const auto ends = lv.edge_endpoints(e);
    verts.push_back(ends[0]);
    verts.push_back(ends[1]);
  }
  std::sort(verts.begin(), verts.end());
  std::vector<std::uint32_t> odd;
  for (std::size_t i = 0; i < verts.size();) {
    std::size_t j = i;
    while (j < verts.size() && verts[j] == verts[i]) ++j;
    if ((j - i) & 1) odd.push_back(verts[i]);
    i = j;
  }
  return odd;
}

SyndromeSet syndrome(const EdgeSet& e) {
  const auto support = e.support();
  return SyndromeSet::from_ids(e.level(), syndrome_of_edges(e.level(), support));
}

HomologyClass homology_of_edges(const TorusLevel& lv, std::span<const std::uint32_t> edges) {
  if (!syndrome_of_edges(lv, edges).empty()) {
    throw NonCycleInput("homology class is defined only for edge sets with empty syndrome");
  }
  const std::uint32_t m2 = lv.vertex_count();
  int h = 0, v = 0;
  for (auto e : edges) {
    if (e < m2) {
      if (lv.vertex_x(e) == lv.m - 1) h ^= 1;  // H(m-1, y) crosses the vertical cut
    } else {
      if (lv.vertex_y(e - m2) == lv.m - 1) v ^= 1;  // V(x, m-1) crosses the horizontal cut
    }
  }
  return {h != 0, v != 0};
}

HomologyClass homology_class(const EdgeSet& c) {
  const auto support = c.support();
  return homology_of_edges(c.level(), support);
}

bool in_sublattice_id(const TorusLevel& lv, std::uint32_t id, int stage) {
  const int spacing = 1 << (lv.k - stage);
  const int mask = spacing - 1;
  return (lv.vertex_x(id) & mask) == 0 && (lv.vertex_y(id) & mask) == 0;
}

bool in_sublattice(const TorusLevel& lv, const VertexCoord& v, int stage) {
  if (stage < 0 || stage > lv.k) {
    throw std::invalid_argument("stage index out of range");
  }
  return in_sublattice_id(lv, lv.vertex_id(v.x, v.y), stage);
}

int torus_distance(const TorusLevel& lv, const VertexCoord& a, const VertexCoord& b, int stage) {
  if (!in_sublattice(lv, a, stage) || !in_sublattice(lv, b, stage)) {
    throw NotInSublattice("torus_distance: vertex not in V_i for stage " + std::to_string(stage));
  }
  const int dx = std::abs(lv.wrap(a.x) - lv.wrap(b.x));
  const int dy = std::abs(lv.wrap(a.y) - lv.wrap(b.y));
  const int wx = std::min(dx, lv.m - dx);
  const int wy = std::min(dy, lv.m - dy);
  return (wx + wy) >> (lv.k - stage);
}

std::vector<std::uint32_t> lift_cell_side(const TorusLevel& lv, const VertexCoord& anchor,
                                          CellSide side, int g) {
  std::vector<std::uint32_t> out;
  out.reserve(g);
  const int x0 = lv.wrap(anchor.x);
  const int y0 = lv.wrap(anchor.y);
  for (int j = 0; j < g; ++j) {
    switch (side) {
      case CellSide::Top: out.push_back(lv.h_edge(x0 + j, y0)); break;
      case CellSide::Bottom: out.push_back(lv.h_edge(x0 + j, y0 + g)); break;
      case CellSide::Left: out.push_back(lv.v_edge(x0, y0 + j)); break;
      case CellSide::Right: out.push_back(lv.v_edge(x0 + g, y0 + j)); break;
    }
  }
  return out;
}

std::array<std::uint32_t, 4> face_edges(const TorusLevel& lv, int x, int y) {
  return {lv.h_edge(x, y), lv.h_edge(x, y + 1), lv.v_edge(x, y), lv.v_edge(x + 1, y)};
}

std::vector<EdgeSet> faces(const TorusLevel& lv) {
  std::vector<EdgeSet> out;
  out.reserve(lv.vertex_count());
  for (int y = 0; y < lv.m; ++y) {
    for (int x = 0; x < lv.m; ++x) {
      const auto f = face_edges(lv, x, y);
      out.push_back(EdgeSet::from_edges(lv, f));
    }
  }
  return out;
}

std::string edge_to_string(const TorusLevel& lv, std::uint32_t e) {
  const EdgeId id = edge_from_index(lv, e);
  return std::string(id.orientation == Orientation::H ? "H " : "V ") + std::to_string(id.x) +
         " " + std::to_string(id.y);
}

}  // namespace toric
