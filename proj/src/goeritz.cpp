#include "knotcalc/goeritz.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace knotcalc {

namespace {

// Integer Bareiss determinant, local to keep this code path disjoint from
// the polynomial machinery.
Int int_det(std::vector<std::vector<Int>> m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

Int knot_determinant(const KnotDiagram& d) {
  int n = d.crossing_count();
  if (n == 0) return 1;

  // Directed edge = (edge label, direction flag). Direction 0 runs tail to
  // head, direction 1 the reverse. Each directed edge ends at a slot.
  auto end_slot = [&](int edge, int dir) {
    return dir == 0 ? d.edge_heads()[static_cast<std::size_t>(edge)]
                    : d.edge_tails()[static_cast<std::size_t>(edge)];
  };
  // Face tracing in the rotation system: arriving at slot (x, k), the face
  // continues along the edge at slot (x, k+1), directed away from x.
  auto next_directed = [&](int edge, int dir) {
    KnotDiagram::Slot s = end_slot(edge, dir);
    int k2 = (s.position + 1) % 4;
    int e2 = d.crossings()[static_cast<std::size_t>(s.crossing)][static_cast<std::size_t>(k2)];
    const auto& tail = d.edge_tails()[static_cast<std::size_t>(e2)];
    int dir2 = (tail.crossing == s.crossing && tail.position == k2) ? 0 : 1;
    return std::pair<int, int>(e2, dir2);
  };

  int edges = 2 * n;
  // face id per directed edge, -1 = unassigned
  std::vector<std::array<int, 2>> face(static_cast<std::size_t>(edges + 1), {-1, -1});
  int face_count = 0;
  for (int e = 1; e <= edges; ++e) {
    for (int dir = 0; dir < 2; ++dir) {
      if (face[static_cast<std::size_t>(e)][static_cast<std::size_t>(dir)] != -1) continue;
      int fe = e, fd = dir;
      while (face[static_cast<std::size_t>(fe)][static_cast<std::size_t>(fd)] == -1) {
        face[static_cast<std::size_t>(fe)][static_cast<std::size_t>(fd)] = face_count;
        auto [ne, nd] = next_directed(fe, fd);
        fe = ne;
        fd = nd;
      }
      ++face_count;
    }
  }
  if (face_count != n + 2)
    throw std::logic_error("diagram rotation system is not planar");

  // The face covering the quadrant between slots k and k+1 of crossing x is
  // the face of the directed edge arriving at slot (x, k).
  auto quadrant_face = [&](int x, int k) {
    int e = d.crossings()[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)];
    const auto& head = d.edge_heads()[static_cast<std::size_t>(e)];
    int dir = (head.crossing == x && head.position == k) ? 0 : 1;
    return face[static_cast<std::size_t>(e)][static_cast<std::size_t>(dir)];
  };

  // Checkerboard coloring: faces across an edge get opposite colors.
  std::vector<int> color(static_cast<std::size_t>(face_count), -1);
  color[0] = 0;
  {
    std::vector<int> queue = {0};
    std::multimap<int, int> adjacent;
    for (int e = 1; e <= edges; ++e) {
      int f0 = face[static_cast<std::size_t>(e)][0];
      int f1 = face[static_cast<std::size_t>(e)][1];
      adjacent.emplace(f0, f1);
      adjacent.emplace(f1, f0);
    }
    while (!queue.empty()) {
      int f = queue.back();
      queue.pop_back();
      auto [lo, hi] = adjacent.equal_range(f);
      for (auto it = lo; it != hi; ++it) {
        int g = it->second;
        if (color[static_cast<std::size_t>(g)] == -1) {
          color[static_cast<std::size_t>(g)] = 1 - color[static_cast<std::size_t>(f)];
          queue.push_back(g);
        } else if (color[static_cast<std::size_t>(g)] == color[static_cast<std::size_t>(f)]) {
          throw std::logic_error("diagram faces are not checkerboard colorable");
        }
      }
    }
  }

  // Goeritz matrix over the white (color 0) faces. At each crossing the two
  // white quadrants are opposite; the crossing type is +1 when the white
  // pair sits clockwise of the incoming under-strand (quadrants 3-0 and
  // 1-2), else -1.
  std::vector<int> white_index(static_cast<std::size_t>(face_count), -1);
  int whites = 0;
  for (int f = 0; f < face_count; ++f)
    if (color[static_cast<std::size_t>(f)] == 0) white_index[static_cast<std::size_t>(f)] = whites++;
  if (whites < 1) throw std::logic_error("no white faces");

  std::vector<std::vector<Int>> g(static_cast<std::size_t>(whites),
                                  std::vector<Int>(static_cast<std::size_t>(whites), 0));
  for (int x = 0; x < n; ++x) {
    int f0 = quadrant_face(x, 0);  // quadrant between slots 0 and 1
    int f1 = quadrant_face(x, 1);
    int f2 = quadrant_face(x, 2);
    int f3 = quadrant_face(x, 3);
    if (color[static_cast<std::size_t>(f0)] != color[static_cast<std::size_t>(f2)] ||
        color[static_cast<std::size_t>(f1)] != color[static_cast<std::size_t>(f3)])
      throw std::logic_error("opposite quadrants disagree in color");
    int wa, wb, eta;
    if (color[static_cast<std::size_t>(f0)] == 0) {
      wa = white_index[static_cast<std::size_t>(f0)];
      wb = white_index[static_cast<std::size_t>(f2)];
      eta = +1;
    } else {
      wa = white_index[static_cast<std::size_t>(f1)];
      wb = white_index[static_cast<std::size_t>(f3)];
      eta = -1;
    }
    if (wa == wb) continue;  // both white corners in one region contribute nothing
    g[static_cast<std::size_t>(wa)][static_cast<std::size_t>(wb)] -= eta;
    g[static_cast<std::size_t>(wb)][static_cast<std::size_t>(wa)] -= eta;
    g[static_cast<std::size_t>(wa)][static_cast<std::size_t>(wa)] += eta;
    g[static_cast<std::size_t>(wb)][static_cast<std::size_t>(wb)] += eta;
  }

  // Delete the row and column of white region 0.
  std::vector<std::vector<Int>> reduced;
  for (int i = 1; i < whites; ++i) {
    std::vector<Int> row;
    for (int j = 1; j < whites; ++j) row.push_back(g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    reduced.push_back(std::move(row));
  }
  Int det = int_det(std::move(reduced));
  return det < 0 ? Int(-det) : det;
}

}  // namespace knotcalc
