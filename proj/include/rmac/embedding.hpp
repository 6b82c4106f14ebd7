#pragma once

// Hypercube graphs, rotation systems and face tracing for the 2-cell
// embedding of Q_n in Z over the n-gon boundary, plus the girth bound.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rmac/common.hpp"
#include "rmac/complex_core.hpp"
#include "rmac/surface.hpp"

namespace rmac {

/// Multigraph; loops and parallel edges allowed. Dart 2e sits at
/// edges[e].first, dart 2e+1 at edges[e].second.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;

  int dart_vertex(int dart) const {
    const auto& e = edges[static_cast<std::size_t>(dart / 2)];
    return dart % 2 == 0 ? e.first : e.second;
  }
  std::size_t dart_count() const { return 2 * edges.size(); }

  void validate() const {
    if (vertex_count < 0) throw DomainError("graph: negative vertex count");
    for (const auto& [u, v] : edges)
      if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) throw DomainError("graph: endpoint out of range");
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(vertex_count))
      throw DomainError("graph: label count does not match vertex count");
  }

  bool connected() const {
    if (vertex_count == 0) return false;
    detail::UnionFind uf(static_cast<std::size_t>(vertex_count));
    for (const auto& [u, v] : edges) uf.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    const auto root = uf.find(0);
    for (int v = 1; v < vertex_count; ++v)
      if (uf.find(static_cast<std::size_t>(v)) != root) return false;
    return true;
  }
};

/// Cyclic order of darts around each vertex.
struct RotationSystem {
  std::vector<std::vector<int>> order;

  /// Every dart appears exactly once, at its own vertex.
  void validate(const Graph& g) const {
    if (order.size() != static_cast<std::size_t>(g.vertex_count))
      throw DomainError("rotation system: vertex count mismatch");
    std::vector<char> seen(g.dart_count(), 0);
    for (std::size_t v = 0; v < order.size(); ++v) {
      for (int d : order[v]) {
        if (d < 0 || static_cast<std::size_t>(d) >= seen.size()) throw DomainError("rotation system: dart out of range");
        if (seen[static_cast<std::size_t>(d)]++) throw DomainError("rotation system: dart listed twice");
        if (g.dart_vertex(d) != static_cast<int>(v)) throw DomainError("rotation system: dart listed at the wrong vertex");
      }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw DomainError("rotation system: dart missing");
  }

  RotationSystem reversed() const {
    RotationSystem r = *this;
    for (auto& o : r.order) std::reverse(o.begin(), o.end());
    return r;
  }
};

/// Q_n with vertex index = coordinate mask (coordinate i at bit i-1).
inline Graph hypercube_graph(int n) {
  if (n < 1) throw DomainError("hypercube_graph: n must be at least 1");
  if (n > kMaxAmbient) throw DomainError("hypercube_graph: n too large");
  Graph g;
  g.vertex_count = 1 << n;
  g.edges.reserve(static_cast<std::size_t>(n) << (n - 1));
  g.labels.reserve(static_cast<std::size_t>(g.vertex_count));
  for (Mask v = 0; v < (Mask{1} << n); ++v) {
    g.labels.push_back(vertex_string(v, n));
    for (int i = 0; i < n; ++i)
      if (!(v & bit(i))) g.edges.emplace_back(static_cast<int>(v), static_cast<int>(v | bit(i)));
  }
  return g;
}

/// 1-skeleton of a cubical complex in its cell order; each edge runs from its
/// eps_i = 0 end to its eps_i = 1 end.
inline Graph one_skeleton(const CubicalComplex& c) {
  Graph g;
  g.vertex_count = static_cast<int>(c.count(0));
  for (const auto& v : c.cells_of_dim(0)) g.labels.push_back(vertex_string(v.eps, c.ambient()));
  if (c.max_dim() >= 1) {
    const int e0 = c.dim_offset(1);
    for (int i = 0; i < static_cast<int>(c.count(1)); ++i) {
      const auto b = c.boundary(e0 + i);
      g.edges.emplace_back(b[0], b[1]);
    }
  }
  return g;
}

/// Rotation on one_skeleton(c) whose faces are the squares of c: darts in
/// coordinate order 1..n at even-weight vertices, n..1 at odd-weight ones.
inline RotationSystem rotation_from_complex(const CubicalComplex& c) {
  if (!is_polygon_complex(c)) throw DomainError("rotation_from_complex: complex is not Z over a polygon boundary");
  const int n = c.ambient();
  const int e0 = c.dim_offset(1);
  RotationSystem r;
  r.order.resize(c.count(0));
  const auto verts = c.cells_of_dim(0);
  for (std::size_t vi = 0; vi < verts.size(); ++vi) {
    const Mask v = verts[vi].eps;
    auto& o = r.order[vi];
    for (int i = 0; i < n; ++i) {
      const int e = c.find(CubicalCell{bit(i), v & ~bit(i)}) - e0;
      o.push_back(2 * e + ((v & bit(i)) ? 1 : 0));
    }
    if (popcount(v) % 2 == 1) std::reverse(o.begin(), o.end());
  }
  return r;
}

struct FaceTrace {
  std::vector<std::vector<int>> walks;  // darts; each dart leaves the walk's current vertex
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t faces = 0;
  std::int64_t genus = 0;
};

/// Face tracing: after dart d the walk continues with the rotation successor
/// of d's reverse.
inline FaceTrace trace_faces(const Graph& g, const RotationSystem& r) {
  g.validate();
  r.validate(g);
  if (!g.connected()) throw DomainError("trace_faces: graph is not connected");
  std::vector<int> succ(g.dart_count());
  for (const auto& o : r.order)
    for (std::size_t k = 0; k < o.size(); ++k) succ[static_cast<std::size_t>(o[k])] = o[(k + 1) % o.size()];

  FaceTrace t;
  std::vector<char> used(g.dart_count(), 0);
  for (std::size_t start = 0; start < g.dart_count(); ++start) {
    if (used[start]) continue;
    std::vector<int> walk;
    int d = static_cast<int>(start);
    while (!used[static_cast<std::size_t>(d)]) {
      used[static_cast<std::size_t>(d)] = 1;
      walk.push_back(d);
      d = succ[static_cast<std::size_t>(d ^ 1)];
    }
    t.walks.push_back(std::move(walk));
  }
  t.vertices = g.vertex_count;
  t.edges = static_cast<std::int64_t>(g.edges.size());
  t.faces = static_cast<std::int64_t>(t.walks.size());
  const std::int64_t twice = 2 - t.vertices + t.edges - t.faces;
  if (twice < 0 || twice % 2 != 0) throw InternalError("trace_faces: Euler formula gives a non-integral or negative genus");
  t.genus = twice / 2;
  return t;
}

/// Traced faces of `r` are exactly the squares of c, each a 4-walk.
inline bool verify_two_cell(const CubicalComplex& c, const RotationSystem& r) {
  if (c.max_dim() != 2) return false;
  const Graph g = one_skeleton(c);
  const FaceTrace t = trace_faces(g, r);
  if (static_cast<std::size_t>(t.faces) != c.count(2)) return false;
  const auto verts = c.cells_of_dim(0);
  std::vector<char> hit(c.count(2), 0);
  const int s0 = c.dim_offset(2);
  for (const auto& walk : t.walks) {
    if (walk.size() != 4) return false;
    Mask all = ~Mask{0}, any = 0;
    std::set<Mask> distinct;
    for (int d : walk) {
      const Mask v = verts[static_cast<std::size_t>(g.dart_vertex(d))].eps;
      all &= v;
      any |= v;
      distinct.insert(v);
    }
    const Mask sigma = all ^ any;
    if (distinct.size() != 4 || popcount(sigma) != 2) return false;
    const int idx = c.find(CubicalCell{sigma, all});
    if (idx < s0) return false;
    if (hit[static_cast<std::size_t>(idx - s0)]++) return false;
  }
  return true;
}

inline bool verify_two_cell(const CubicalComplex& c) { return verify_two_cell(c, rotation_from_complex(c)); }

/// Shortest cycle length, or nullopt for a forest. Loops count 1, parallel edges 2.
inline std::optional<int> girth(const Graph& g) {
  g.validate();
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(g.vertex_count));
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [u, v] = g.edges[e];
    if (u == v) return 1;
    adj[static_cast<std::size_t>(u)].emplace_back(v, static_cast<int>(e));
    adj[static_cast<std::size_t>(v)].emplace_back(u, static_cast<int>(e));
  }
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count), -1), via(static_cast<std::size_t>(g.vertex_count), -1);
  std::vector<int> touched;
  for (int root = 0; root < g.vertex_count; ++root) {
    for (int x : touched) dist[static_cast<std::size_t>(x)] = -1;
    touched.clear();
    std::queue<int> q;
    dist[static_cast<std::size_t>(root)] = 0;
    via[static_cast<std::size_t>(root)] = -1;
    touched.push_back(root);
    q.push(root);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      if (2 * dist[static_cast<std::size_t>(u)] >= best) break;
      for (const auto& [w, e] : adj[static_cast<std::size_t>(u)]) {
        if (e == via[static_cast<std::size_t>(u)]) continue;
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          via[static_cast<std::size_t>(w)] = e;
          touched.push_back(w);
          q.push(w);
        } else {
          best = std::min(best, dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

/// Euler-formula lower bound 1 - V/2 + E(g0-2)/(2 g0) for a graph of girth g0.
struct GirthBound {
  bool acyclic = false;
  int girth = 0;
  std::int64_t numerator = 0;  // exact value numerator / denominator, reduced
  std::int64_t denominator = 1;
  std::int64_t bound = 0;      // max(0, ceil(value))
};

inline GirthBound girth_lower_bound(const Graph& g) {
  if (!g.connected()) throw DomainError("girth_lower_bound: graph is not connected");
  GirthBound out;
  const auto g0 = girth(g);
  if (!g0) {
    out.acyclic = true;
    return out;
  }
  out.girth = *g0;
  const std::int64_t gg = *g0;
  const std::int64_t v = g.vertex_count;
  const std::int64_t e = static_cast<std::int64_t>(g.edges.size());
  std::int64_t num = 2 * gg - gg * v + e * (gg - 2);
  std::int64_t den = 2 * gg;
  const std::int64_t common = std::gcd(num, den);
  if (common != 0) {
    num /= common;
    den /= common;
  }
  out.numerator = num;
  out.denominator = den;
  std::int64_t ceil = num / den;
  if (num % den != 0 && num > 0) ++ceil;
  out.bound = std::max<std::int64_t>(0, ceil);
  return out;
}

/// 1 + (n-4) 2^{n-3}.
inline std::int64_t genus_closed_form(int n) {
  if (n < 3) throw DomainError("genus_closed_form: n must be at least 3");
  return 1 + static_cast<std::int64_t>(n - 4) * pow2(n - 3);
}

/// Genus of Z over polygon_boundary(n), certified directly on its squares.
inline std::int64_t polygon_surface_genus(int n, int ambient_cap = kDefaultAmbientCap) {
  return genus(as_face_complex(build_real_mac(polygon_boundary(n), ambient_cap)));
}

/// g(n+1) = 2 g(n) + 2^{n-2} - 1 with both genera computed from built complexes.
inline bool surgery_recurrence_check(int n, int ambient_cap = kDefaultAmbientCap) {
  if (n < 3) throw DomainError("surgery_recurrence_check: n must be at least 3");
  const std::int64_t lower = polygon_surface_genus(n, ambient_cap);
  const std::int64_t upper = polygon_surface_genus(n + 1, ambient_cap);
  return upper == 2 * lower + pow2(n - 2) - 1;
}

}  // namespace rmac
