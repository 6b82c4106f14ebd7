#pragma once

// Closed-surface, connectivity and orientability certification for
// 2-dimensional cell complexes given as polygon boundary walks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "rmac/common.hpp"
#include "rmac/complex_core.hpp"

namespace rmac {

struct DirectedEdge {
  int edge = 0;
  bool forward = true;

  DirectedEdge reversed() const { return {edge, !forward}; }
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

/// Vertices, edges with (tail, head) endpoints, and faces as closed walks of
/// directed edges. An edge may occur twice in one walk.
struct FaceComplex {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<DirectedEdge>> faces;

  // Optional vertex geometry/labels, carried through for export only.
  int ambient = 0;
  std::vector<Mask> vertex_points;
  std::vector<std::string> vertex_labels;

  int tail(DirectedEdge d) const {
    const auto& e = edges[static_cast<std::size_t>(d.edge)];
    return d.forward ? e.first : e.second;
  }
  int head(DirectedEdge d) const {
    const auto& e = edges[static_cast<std::size_t>(d.edge)];
    return d.forward ? e.second : e.first;
  }

  std::int64_t euler_characteristic() const {
    return static_cast<std::int64_t>(vertex_count) - static_cast<std::int64_t>(edges.size()) +
           static_cast<std::int64_t>(faces.size());
  }

  /// Endpoints in range and every walk vertex-continuous.
  void validate() const {
    if (vertex_count < 0) throw DomainError("negative vertex count");
    for (const auto& [u, v] : edges)
      if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) throw DomainError("edge endpoint out of range");
    for (std::size_t f = 0; f < faces.size(); ++f) {
      const auto& walk = faces[f];
      if (walk.empty()) throw DomainError("face " + std::to_string(f) + " has an empty walk");
      for (const auto& d : walk)
        if (d.edge < 0 || static_cast<std::size_t>(d.edge) >= edges.size())
          throw DomainError("face " + std::to_string(f) + " references a missing edge");
      for (std::size_t k = 0; k < walk.size(); ++k) {
        const auto& next = walk[(k + 1) % walk.size()];
        if (head(walk[k]) != tail(next))
          throw DomainError("face " + std::to_string(f) + " walk is not vertex-continuous");
      }
    }
  }
};

/// Each square (sigma = {i < j}, eps) becomes the walk
/// (0,0) -> (1,0) -> (1,1) -> (0,1) on coordinates (i, j).
inline FaceComplex as_face_complex(const CubicalComplex& c) {
  if (c.max_dim() > 2) throw UnsupportedError("as_face_complex: cells of dimension >= 3 are not supported");
  FaceComplex f;
  f.ambient = c.ambient();
  const auto verts = c.cells_of_dim(0);
  f.vertex_count = static_cast<int>(verts.size());
  for (const auto& v : verts) {
    f.vertex_points.push_back(v.eps);
    f.vertex_labels.push_back(vertex_string(v.eps, c.ambient()));
  }
  if (c.max_dim() >= 1) {
    const int e0 = c.dim_offset(1);
    for (int i = 0; i < static_cast<int>(c.count(1)); ++i) {
      const auto b = c.boundary(e0 + i);
      f.edges.emplace_back(b[0], b[1]);
    }
  }
  if (c.max_dim() == 2) {
    const int e0 = c.dim_offset(1);
    const int s0 = c.dim_offset(2);
    for (int i = 0; i < static_cast<int>(c.count(2)); ++i) {
      // boundary order: (x_i=0, x_i=1) edges along j, then (x_j=0, x_j=1) edges along i
      const auto b = c.boundary(s0 + i);
      f.faces.push_back({{b[2] - e0, true}, {b[1] - e0, true}, {b[3] - e0, false}, {b[0] - e0, false}});
    }
  }
  return f;
}

// ---------------------------------------------------------------------------

struct Violation {
  enum class Kind { EdgeDegree, VertexLink, Disconnected, OddCycle };
  Kind kind;
  int edge = -1;
  int vertex = -1;
  int count = 0;            // edge slots, or link components
  std::vector<int> faces;   // odd cycle: closed face sequence
  std::vector<int> edges;   // odd cycle: edge crossed between consecutive faces
  std::string message;
};

inline const char* to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::EdgeDegree: return "edge_degree";
    case Violation::Kind::VertexLink: return "vertex_link";
    case Violation::Kind::Disconnected: return "disconnected";
    case Violation::Kind::OddCycle: return "odd_cycle";
  }
  return "unknown";
}

/// Verdict on a face complex. `orientation` is the witness when orientable:
/// +1 keeps a face's walk direction, -1 reverses it.
struct SurfaceCertificate {
  bool closed = false;
  bool connected = false;
  bool orientability_checked = false;
  bool orientable = false;
  std::int64_t euler_characteristic = 0;
  std::optional<std::int64_t> genus;
  std::vector<int> orientation;
  std::vector<Violation> violations;
  std::vector<std::size_t> link_lengths;  // corners around each vertex, when closed
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// Edge-end ids: 2*edge is the tail end, 2*edge+1 the head end.
inline std::size_t arriving_end(DirectedEdge d) { return 2 * static_cast<std::size_t>(d.edge) + (d.forward ? 1 : 0); }
inline std::size_t departing_end(DirectedEdge d) { return 2 * static_cast<std::size_t>(d.edge) + (d.forward ? 0 : 1); }

struct Slot {
  int face;
  bool forward;
};

inline std::vector<std::vector<Slot>> edge_slots(const FaceComplex& f) {
  std::vector<std::vector<Slot>> slots(f.edges.size());
  for (std::size_t i = 0; i < f.faces.size(); ++i)
    for (const auto& d : f.faces[i]) slots[static_cast<std::size_t>(d.edge)].push_back({static_cast<int>(i), d.forward});
  return slots;
}

}  // namespace detail

/// Fills closed, connected and euler_characteristic. Closed means every edge
/// has exactly two face slots and every vertex link is one cycle.
inline SurfaceCertificate check_closed_surface(const FaceComplex& f) {
  f.validate();
  SurfaceCertificate cert;
  cert.euler_characteristic = f.euler_characteristic();

  bool degrees_ok = true;
  const auto slots = detail::edge_slots(f);
  for (std::size_t e = 0; e < slots.size(); ++e) {
    if (slots[e].size() != 2) {
      degrees_ok = false;
      cert.violations.push_back({Violation::Kind::EdgeDegree, static_cast<int>(e), -1, static_cast<int>(slots[e].size()),
                                 {}, {}, "edge " + std::to_string(e) + " has " + std::to_string(slots[e].size()) + " face slots"});
    }
  }

  // Link graph: nodes are edge-ends, each corner of a walk joins the arriving
  // end of one directed edge to the departing end of the next.
  const std::size_t ends = 2 * f.edges.size();
  detail::UnionFind link(ends);
  std::vector<std::size_t> corners(static_cast<std::size_t>(f.vertex_count), 0);
  for (const auto& walk : f.faces) {
    for (std::size_t k = 0; k < walk.size(); ++k) {
      const auto& prev = walk[(k + walk.size() - 1) % walk.size()];
      link.unite(detail::arriving_end(prev), detail::departing_end(walk[k]));
      ++corners[static_cast<std::size_t>(f.tail(walk[k]))];
    }
  }
  bool links_ok = true;
  {
    std::vector<std::vector<std::size_t>> ends_at(static_cast<std::size_t>(f.vertex_count));
    for (std::size_t e = 0; e < f.edges.size(); ++e) {
      ends_at[static_cast<std::size_t>(f.edges[e].first)].push_back(2 * e);
      ends_at[static_cast<std::size_t>(f.edges[e].second)].push_back(2 * e + 1);
    }
    for (int v = 0; v < f.vertex_count; ++v) {
      const auto& es = ends_at[static_cast<std::size_t>(v)];
      std::vector<std::size_t> roots;
      for (auto end : es) roots.push_back(link.find(end));
      std::sort(roots.begin(), roots.end());
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      if (es.empty() || roots.size() != 1 || corners[static_cast<std::size_t>(v)] == 0) {
        links_ok = false;
        cert.violations.push_back({Violation::Kind::VertexLink, -1, v, static_cast<int>(roots.size()), {}, {},
                                   "link of vertex " + std::to_string(v) + " is not a single cycle"});
      }
    }
  }
  cert.closed = degrees_ok && links_ok;
  if (cert.closed) cert.link_lengths = std::move(corners);

  detail::UnionFind comp(static_cast<std::size_t>(f.vertex_count));
  for (const auto& [u, v] : f.edges) comp.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  std::size_t components = 0;
  for (int v = 0; v < f.vertex_count; ++v)
    if (comp.find(static_cast<std::size_t>(v)) == static_cast<std::size_t>(v)) ++components;
  cert.connected = components == 1;
  if (!cert.connected)
    cert.violations.push_back({Violation::Kind::Disconnected, -1, -1, static_cast<int>(components), {}, {},
                               std::to_string(components) + " connected components"});
  return cert;
}

/// Propagates face orientations across shared edges breadth first. Requires a
/// closed complex; the result carries the closed-surface fields too.
inline SurfaceCertificate check_orientable(const FaceComplex& f) {
  SurfaceCertificate cert = check_closed_surface(f);
  if (!cert.closed) throw PreconditionError("check_orientable: complex is not a closed surface");
  cert.orientability_checked = true;

  const auto slots = detail::edge_slots(f);
  // adjacency: (neighbour face, crossing edge, required relative sign)
  struct Link {
    int face;
    int edge;
    int sign;
  };
  std::vector<std::vector<Link>> adj(f.faces.size());
  std::optional<std::pair<int, int>> self_conflict;  // (face, edge)
  for (std::size_t e = 0; e < slots.size(); ++e) {
    const auto& a = slots[e][0];
    const auto& b = slots[e][1];
    // o[a]*s_a == -o[b]*s_b  <=>  o[b] == -s_a*s_b*o[a]
    const int sign = (a.forward == b.forward) ? -1 : 1;
    if (a.face == b.face) {
      if (sign != 1 && !self_conflict) self_conflict = {a.face, static_cast<int>(e)};
      continue;
    }
    adj[static_cast<std::size_t>(a.face)].push_back({b.face, static_cast<int>(e), sign});
    adj[static_cast<std::size_t>(b.face)].push_back({a.face, static_cast<int>(e), sign});
  }
  if (self_conflict) {
    cert.orientable = false;
    cert.violations.push_back({Violation::Kind::OddCycle, self_conflict->second, -1, 1, {self_conflict->first, self_conflict->first},
                               {self_conflict->second}, "edge traversed twice in the same direction by one face"});
    return cert;
  }

  std::vector<int> orient(f.faces.size(), 0);
  std::vector<int> parent(f.faces.size(), -1), parent_edge(f.faces.size(), -1);
  for (std::size_t root = 0; root < f.faces.size(); ++root) {
    if (orient[root] != 0) continue;
    orient[root] = 1;
    std::queue<int> q;
    q.push(static_cast<int>(root));
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (const auto& l : adj[static_cast<std::size_t>(u)]) {
        const int want = l.sign * orient[static_cast<std::size_t>(u)];
        int& have = orient[static_cast<std::size_t>(l.face)];
        if (have == 0) {
          have = want;
          parent[static_cast<std::size_t>(l.face)] = u;
          parent_edge[static_cast<std::size_t>(l.face)] = l.edge;
          q.push(l.face);
        } else if (have != want) {
          // Odd cycle: tree path u -> lca, then lca -> l.face, closed by l.edge.
          std::vector<int> up_u{u}, up_v{l.face};
          for (int x = u; parent[static_cast<std::size_t>(x)] >= 0;) up_u.push_back(x = parent[static_cast<std::size_t>(x)]);
          for (int x = l.face; parent[static_cast<std::size_t>(x)] >= 0;) up_v.push_back(x = parent[static_cast<std::size_t>(x)]);
          while (up_u.size() > 1 && up_v.size() > 1 && up_u[up_u.size() - 2] == up_v[up_v.size() - 2]) {
            up_u.pop_back();
            up_v.pop_back();
          }
          Violation viol{Violation::Kind::OddCycle, l.edge, -1, 0, {}, {}, "orientation propagation contradiction"};
          for (std::size_t i = 0; i < up_u.size(); ++i) {
            viol.faces.push_back(up_u[i]);
            if (i + 1 < up_u.size()) viol.edges.push_back(parent_edge[static_cast<std::size_t>(up_u[i])]);
          }
          for (std::size_t i = up_v.size() - 1; i-- > 0;) {
            viol.edges.push_back(parent_edge[static_cast<std::size_t>(up_v[i])]);
            viol.faces.push_back(up_v[i]);
          }
          viol.edges.push_back(l.edge);
          viol.faces.push_back(u);
          viol.count = static_cast<int>(viol.edges.size());
          cert.orientable = false;
          cert.violations.push_back(std::move(viol));
          return cert;
        }
      }
    }
  }
  cert.orientable = true;
  cert.orientation = std::move(orient);
  return cert;
}

/// Full certificate; genus is filled when the complex is a closed connected
/// orientable surface.
inline SurfaceCertificate certify_surface(const FaceComplex& f) {
  SurfaceCertificate cert = check_closed_surface(f);
  if (!cert.closed) return cert;
  cert = check_orientable(f);
  if (cert.connected && cert.orientable) {
    if (cert.euler_characteristic % 2 != 0) throw InternalError("closed orientable surface with odd Euler characteristic");
    const std::int64_t g = (2 - cert.euler_characteristic) / 2;
    if (g < 0) throw InternalError("negative genus");
    cert.genus = g;
  }
  return cert;
}

/// Every edge's two slots run in opposite directions once each face is
/// flipped by its witness sign.
inline bool orientation_is_valid(const FaceComplex& f, const std::vector<int>& orientation) {
  if (orientation.size() != f.faces.size()) return false;
  const auto slots = detail::edge_slots(f);
  for (const auto& s : slots) {
    if (s.size() != 2) return false;
    const int a = orientation[static_cast<std::size_t>(s[0].face)] * (s[0].forward ? 1 : -1);
    const int b = orientation[static_cast<std::size_t>(s[1].face)] * (s[1].forward ? 1 : -1);
    if (a != -b) return false;
  }
  return true;
}

/// Genus from Euler's formula after certifying the surface.
inline std::int64_t genus(const FaceComplex& f) {
  const auto cert = certify_surface(f);
  if (!cert.closed || !cert.connected || !cert.orientable)
    throw PreconditionError("genus: complex is not a closed connected orientable surface");
  return *cert.genus;
}

/// Splits each quadrilateral c0 c1 c2 c3 along the diagonal c0-c2.
inline FaceComplex triangulate(const FaceComplex& f) {
  FaceComplex out;
  out.vertex_count = f.vertex_count;
  out.edges = f.edges;
  out.ambient = f.ambient;
  out.vertex_points = f.vertex_points;
  out.vertex_labels = f.vertex_labels;
  out.faces.reserve(2 * f.faces.size());
  for (const auto& walk : f.faces) {
    if (walk.size() != 4) throw UnsupportedError("triangulate: face is not a quadrilateral");
    const int diag = static_cast<int>(out.edges.size());
    out.edges.emplace_back(f.tail(walk[0]), f.tail(walk[2]));
    out.faces.push_back({walk[0], walk[1], {diag, false}});
    out.faces.push_back({{diag, true}, walk[2], walk[3]});
  }
  return out;
}

}  // namespace rmac
