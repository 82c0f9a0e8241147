#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

/// Geometry of the level-k torus tiling: side m = 2^k, n = 2m^2 edges.
///
/// Coordinates: x grows rightward, y grows downward, both mod m, so the
/// "top-left" corner of a cell is its anchor. Vertex id = y*m + x.
/// Edge ids: H(x,y) joins (x,y)-(x+1,y) and has id y*m + x;
///           V(x,y) joins (x,y)-(x,y+1) and has id m^2 + y*m + x.
/// The id maps are bijections; the H block comes first, row-major.
struct TorusLevel {
  int k = 1;
  int m = 2;
  std::uint32_t n = 8;

  TorusLevel() = default;
  explicit TorusLevel(int level);

  bool operator==(const TorusLevel&) const = default;

  int wrap(int c) const { return c & (m - 1); }

  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(m) * m; }

  std::uint32_t vertex_id(int x, int y) const {
    return static_cast<std::uint32_t>(wrap(y)) * m + wrap(x);
  }
  int vertex_x(std::uint32_t id) const { return static_cast<int>(id) & (m - 1); }
  int vertex_y(std::uint32_t id) const { return static_cast<int>(id >> k); }

  std::uint32_t h_edge(int x, int y) const { return vertex_id(x, y); }
  std::uint32_t v_edge(int x, int y) const { return vertex_count() + vertex_id(x, y); }
  bool is_vertical(std::uint32_t e) const { return e >= vertex_count(); }

  // Endpoint vertex ids of an edge, in lattice order (left/top first).
  std::array<std::uint32_t, 2> edge_endpoints(std::uint32_t e) const;
};

struct VertexCoord {
  int x = 0;
  int y = 0;
  bool operator==(const VertexCoord&) const = default;
};

enum class Orientation { H, V };

struct EdgeId {
  Orientation orientation = Orientation::H;
  int x = 0;
  int y = 0;
  bool operator==(const EdgeId&) const = default;
};

std::uint32_t edge_index(const TorusLevel& lv, const EdgeId& e);
EdgeId edge_from_index(const TorusLevel& lv, std::uint32_t index);

/// Dense bit vector over the n unit edges of a level; value semantics.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(const TorusLevel& lv);
  static EdgeSet from_edges(const TorusLevel& lv, std::span<const std::uint32_t> ids);

  const TorusLevel& level() const { return level_; }

  bool test(std::uint32_t e) const { return (bits_[e >> 6] >> (e & 63)) & 1; }
  void set(std::uint32_t e) { bits_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void flip(std::uint32_t e) { bits_[e >> 6] ^= std::uint64_t{1} << (e & 63); }
  bool test(const EdgeId& e) const { return test(edge_index(level_, e)); }
  void set(const EdgeId& e) { set(edge_index(level_, e)); }
  void flip(const EdgeId& e) { flip(edge_index(level_, e)); }

  std::uint64_t weight() const;
  bool empty() const { return weight() == 0; }

  EdgeSet& operator^=(const EdgeSet& other);
  friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) { return a ^= b; }
  bool operator==(const EdgeSet&) const = default;

  /// Set edge ids in increasing order.
  std::vector<std::uint32_t> support() const;

 private:
  TorusLevel level_;
  std::vector<std::uint64_t> bits_;
};

/// Set of lattice vertices, kept as sorted unique ids. Syndromes computed
/// from edge sets always have even cardinality.
class SyndromeSet {
 public:
  SyndromeSet() = default;
  explicit SyndromeSet(const TorusLevel& lv) : level_(lv) {}
  /// `ids` need not be sorted; duplicates cancel in pairs (mod-2 semantics).
  static SyndromeSet from_ids(const TorusLevel& lv, std::vector<std::uint32_t> ids);
  static SyndromeSet from_vertices(const TorusLevel& lv, std::span<const VertexCoord> vs);

  const TorusLevel& level() const { return level_; }
  const std::vector<std::uint32_t>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(std::uint32_t id) const;
  bool contains(const VertexCoord& v) const { return contains(level_.vertex_id(v.x, v.y)); }
  std::vector<VertexCoord> vertices() const;

  bool operator==(const SyndromeSet&) const = default;

 private:
  TorusLevel level_;
  std::vector<std::uint32_t> ids_;  // sorted, unique
};

struct HomologyClass {
  bool wind_h = false;  // parity of crossings of the vertical cut x = m-1 -> 0
  bool wind_v = false;  // parity of crossings of the horizontal cut y = m-1 -> 0
  bool operator==(const HomologyClass&) const = default;
  bool trivial() const { return !wind_h && !wind_v; }
};

/// Vertices incident to an odd number of edges of `e`.
SyndromeSet syndrome(const EdgeSet& e);
/// Sparse form: sorted vertex ids of odd degree in the given edge list.
std::vector<std::uint32_t> syndrome_of_edges(const TorusLevel& lv,
                                             std::span<const std::uint32_t> edges);

/// Homology class of a cycle; throws NonCycleInput if syndrome(c) is nonempty.
HomologyClass homology_class(const EdgeSet& c);
HomologyClass homology_of_edges(const TorusLevel& lv, std::span<const std::uint32_t> edges);

/// True iff both coordinates are multiples of 2^(k-i), i.e. v is a vertex of
/// the stage-i subtiling T_i.
bool in_sublattice(const TorusLevel& lv, const VertexCoord& v, int stage);
bool in_sublattice_id(const TorusLevel& lv, std::uint32_t id, int stage);

/// Graph distance between a and b in T_i: wrapped Manhattan distance divided
/// by the spacing 2^(k-i). Throws NotInSublattice if either vertex is not
/// in V_i.
int torus_distance(const TorusLevel& lv, const VertexCoord& a, const VertexCoord& b, int stage);

enum class CellSide { Top, Bottom, Left, Right };

/// The g unit edges making up one side of the g-by-g cell anchored at
/// `anchor` (its top-left corner), ordered along increasing coordinate.
std::vector<std::uint32_t> lift_cell_side(const TorusLevel& lv, const VertexCoord& anchor,
                                          CellSide side, int g);

/// The four unit edges of the face anchored at (x, y).
std::array<std::uint32_t, 4> face_edges(const TorusLevel& lv, int x, int y);
/// All m^2 faces as edge sets (test-scale convenience).
std::vector<EdgeSet> faces(const TorusLevel& lv);

/// Edge-list text format: one edge per line, `H x y` or `V x y`; `#`
/// comments and blank lines ignored.
std::string edge_to_string(const TorusLevel& lv, std::uint32_t e);

}  // namespace toric
