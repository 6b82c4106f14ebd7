#pragma once

// The C_n action on Z over the n-gon boundary that rotates coordinates, the
// orbit cell complex it induces, Riemann-Hurwitz bookkeeping, and the
// quotient graph Q_n / C_n.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "rmac/common.hpp"
#include "rmac/complex_core.hpp"
#include "rmac/embedding.hpp"
#include "rmac/necklace.hpp"
#include "rmac/surface.hpp"

namespace rmac {

/// Generator sends coordinate i to i+1 (mod n), on sigma and eps together.
struct CyclicAction {
  int n = 0;

  explicit CyclicAction(int order) : n(order) {
    if (order < 1 || order > kMaxAmbient) throw DomainError("CyclicAction: order out of range");
  }

  CubicalCell rotate(const CubicalCell& c, int k = 1) const {
    return CubicalCell{rotate_word(c.sigma, n, k), rotate_word(c.eps, n, k)};
  }

  /// Minimal rotation under cell_less.
  CubicalCell canonical(const CubicalCell& c) const {
    CubicalCell best = c;
    for (int k = 1; k < n; ++k) {
      const CubicalCell r = rotate(c, k);
      if (cell_less(r, best)) best = r;
    }
    return best;
  }

  /// Number of distinct images of c.
  int orbit_size(const CubicalCell& c) const {
    for (int k = 1; k < n; ++k)
      if (rotate(c, k) == c) return k;
    return n;
  }
};

inline CubicalCell act_on_cell(const CyclicAction& a, const CubicalCell& c, int k) { return a.rotate(c, k); }

struct VertexOrbit {
  CubicalCell rep;
  int size = 0;
  int isotropy = 0;   // n / size
  std::string label;  // canonical necklace string
};

struct EdgeOrbit {
  CubicalCell rep;
  int size = 0;
  int tail = 0;  // vertex orbit of the eps_i = 0 end
  int head = 0;
};

struct SquareOrbit {
  CubicalCell rep;
  int size = 0;
  std::vector<DirectedEdge> walk;  // over edge orbits, multiplicity kept
};

struct QuotientComplex {
  int n = 0;
  std::vector<VertexOrbit> vertices;
  std::vector<EdgeOrbit> edges;
  std::vector<SquareOrbit> squares;

  std::int64_t euler_characteristic() const {
    return static_cast<std::int64_t>(vertices.size()) - static_cast<std::int64_t>(edges.size()) +
           static_cast<std::int64_t>(squares.size());
  }

  FaceComplex face_complex() const {
    FaceComplex f;
    f.vertex_count = static_cast<int>(vertices.size());
    f.ambient = n;
    for (const auto& v : vertices) {
      f.vertex_points.push_back(v.rep.eps);
      f.vertex_labels.push_back(v.label);
    }
    for (const auto& e : edges) f.edges.emplace_back(e.tail, e.head);
    for (const auto& s : squares) f.faces.push_back(s.walk);
    return f;
  }

  /// Edge orbits whose endpoints coincide.
  std::size_t loop_count() const {
    return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [](const EdgeOrbit& e) { return e.tail == e.head; }));
  }
};

/// Orbit complex of Z over polygon_boundary(n) under C_n. Representatives are
/// minimal under cell_less and listed in that order.
inline QuotientComplex quotient_complex(const CubicalComplex& c, const CyclicAction& a) {
  if (a.n != c.ambient()) throw DomainError("quotient_complex: action order does not match the ambient dimension");
  if (!is_polygon_complex(c)) throw DomainError("quotient_complex: complex is not Z over a polygon boundary");
  const int n = c.ambient();
  QuotientComplex q;
  q.n = n;
  std::unordered_map<std::uint64_t, int> vertex_index, edge_index;

  for (const auto& cell : c.cells()) {
    if (!(a.canonical(cell) == cell)) continue;
    const int size = a.orbit_size(cell);
    switch (cell.dim()) {
      case 0:
        vertex_index.emplace(cell.key(), static_cast<int>(q.vertices.size()));
        q.vertices.push_back({cell, size, n / size, vertex_string(cell.eps, n)});
        break;
      case 1: {
        const int i = std::countr_zero(cell.sigma);
        const int t = vertex_index.at(a.canonical(CubicalCell{0, cell.eps}).key());
        const int h = vertex_index.at(a.canonical(CubicalCell{0, cell.eps | bit(i)}).key());
        edge_index.emplace(cell.key(), static_cast<int>(q.edges.size()));
        q.edges.push_back({cell, size, t, h});
        break;
      }
      case 2: {
        const int idx = c.find(cell);
        const auto b = c.boundary(idx);
        auto orbit_of = [&](int edge_cell) { return edge_index.at(a.canonical(c.cell(edge_cell)).key()); };
        // same corner order as as_face_complex; rotation keeps each edge's direction
        q.squares.push_back({cell, size,
                             {{orbit_of(b[2]), true}, {orbit_of(b[1]), true}, {orbit_of(b[3]), false}, {orbit_of(b[0]), false}}});
        break;
      }
      default:
        throw UnsupportedError("quotient_complex: unexpected cell dimension");
    }
  }
  return q;
}

// ---------------------------------------------------------------------------

struct BranchPoint {
  std::string label;  // canonical necklace string of the vertex orbit
  int period = 0;
  int isotropy = 0;   // stabilizer order n / period
};

/// Vertex orbits with a nontrivial stabilizer, found by counting the
/// rotations that fix each canonical binary word.
inline std::vector<BranchPoint> branch_points(int n) {
  if (n < 3) throw DomainError("branch_points: n must be at least 3");
  if (n > kMaxBruteLength) throw ResourceLimitError("branch_points: n too large for enumeration");
  std::vector<BranchPoint> out;
  for (Mask w = 0; w < (Mask{1} << n); ++w) {
    int stabilizer = 0;
    bool canonical = true;
    for (int k = 0; k < n; ++k) {
      const Mask r = rotate_word(w, n, k);
      if (r == w) ++stabilizer;
      else if (eps_less(r, w)) canonical = false;
    }
    if (canonical && stabilizer > 1) out.push_back({vertex_string(w, n), n / stabilizer, stabilizer});
  }
  std::sort(out.begin(), out.end(), [](const BranchPoint& a, const BranchPoint& b) { return a.label < b.label; });
  return out;
}

struct RiemannHurwitzReport {
  int n = 0;
  std::int64_t chi_total = 0;     // chi(Z) from cell counts
  std::int64_t chi_quotient = 0;  // chi(Z / C_n) from orbit counts
  std::int64_t branch_sum = 0;    // sum over branch orbits of (n - n / n_x)
  std::int64_t rhs = 0;           // n * chi_quotient - branch_sum
  std::vector<BranchPoint> branches;
  bool holds = false;
};

/// chi(Z) = n chi(Z/C_n) - sum_x (n - n/n_x) for an already built complex and
/// quotient; branch data is enumerated separately.
inline RiemannHurwitzReport riemann_hurwitz_check(const CubicalComplex& z, const QuotientComplex& q) {
  if (q.n != z.ambient()) throw DomainError("riemann_hurwitz_check: quotient and complex disagree on n");
  RiemannHurwitzReport r;
  r.n = q.n;
  r.chi_total = euler_characteristic(z);
  r.chi_quotient = q.euler_characteristic();
  r.branches = branch_points(q.n);
  for (const auto& b : r.branches) r.branch_sum += q.n - q.n / b.isotropy;
  r.rhs = static_cast<std::int64_t>(q.n) * r.chi_quotient - r.branch_sum;
  r.holds = r.rhs == r.chi_total;
  return r;
}

inline RiemannHurwitzReport riemann_hurwitz_check(int n, int ambient_cap = kDefaultAmbientCap) {
  if (n < 3) throw DomainError("riemann_hurwitz_check: n must be at least 3");
  const CubicalComplex z = build_real_mac(polygon_boundary(n), ambient_cap);
  return riemann_hurwitz_check(z, quotient_complex(z, CyclicAction(n)));
}

/// 1 + 2^{n-3} - necklace_total(2, n) / 2.
inline std::int64_t quotient_genus_closed_form(int n) {
  if (n < 3) throw DomainError("quotient_genus_closed_form: n must be at least 3");
  const std::int64_t total = necklace_total(2, n);
  if (total % 2 != 0) throw InternalError("quotient_genus_closed_form: odd necklace total");
  return 1 + pow2(n - 3) - total / 2;
}

struct QuotientGraph {
  Graph graph;                         // labels are canonical necklace strings
  std::vector<CubicalCell> edge_reps;  // orbit key of each graph edge
  bool matches_complex = false;        // same orbit keys and endpoints as the quotient complex 1-skeleton
  std::size_t loops = 0;
  std::size_t parallel_edges = 0;      // edges sharing an endpoint pair with an earlier edge
};

/// Q_n / C_n built from the edges of hypercube_graph(n), then matched
/// against the 1-skeleton of the quotient complex.
inline QuotientGraph quotient_graph(int n, int ambient_cap = kDefaultAmbientCap) {
  if (n < 3) throw DomainError("quotient_graph: n must be at least 3");
  const CyclicAction a(n);
  const Graph cube = hypercube_graph(n);
  QuotientGraph out;

  std::vector<Mask> vertex_reps;
  for (int v = 0; v < cube.vertex_count; ++v) {
    const auto rep = a.canonical(CubicalCell{0, static_cast<Mask>(v)});
    if (rep.eps == static_cast<Mask>(v)) vertex_reps.push_back(rep.eps);
  }
  std::sort(vertex_reps.begin(), vertex_reps.end(), eps_less);
  std::unordered_map<Mask, int> vertex_index;
  for (std::size_t i = 0; i < vertex_reps.size(); ++i) vertex_index.emplace(vertex_reps[i], static_cast<int>(i));

  std::vector<CubicalCell> edge_reps;
  for (const auto& [u, v] : cube.edges) {
    const Mask diff = static_cast<Mask>(u ^ v);
    const CubicalCell e{diff, static_cast<Mask>(u) & ~diff};
    if (a.canonical(e) == e) edge_reps.push_back(e);
  }
  std::sort(edge_reps.begin(), edge_reps.end(), cell_less);

  out.graph.vertex_count = static_cast<int>(vertex_reps.size());
  for (Mask v : vertex_reps) out.graph.labels.push_back(vertex_string(v, n));
  std::vector<std::pair<int, int>> seen_pairs;
  for (const auto& e : edge_reps) {
    const int t = vertex_index.at(a.canonical(CubicalCell{0, e.eps}).eps);
    const int h = vertex_index.at(a.canonical(CubicalCell{0, e.eps | e.sigma}).eps);
    out.graph.edges.emplace_back(t, h);
    if (t == h) ++out.loops;
    seen_pairs.emplace_back(std::min(t, h), std::max(t, h));
  }
  std::sort(seen_pairs.begin(), seen_pairs.end());
  for (std::size_t i = 1; i < seen_pairs.size(); ++i)
    if (seen_pairs[i] == seen_pairs[i - 1]) ++out.parallel_edges;
  out.edge_reps = edge_reps;

  const QuotientComplex q = quotient_complex(build_real_mac(polygon_boundary(n), ambient_cap), a);
  bool match = q.vertices.size() == vertex_reps.size() && q.edges.size() == edge_reps.size();
  for (std::size_t i = 0; match && i < vertex_reps.size(); ++i) match = q.vertices[i].rep.eps == vertex_reps[i];
  for (std::size_t i = 0; match && i < edge_reps.size(); ++i) {
    match = q.edges[i].rep == edge_reps[i] && q.edges[i].tail == out.graph.edges[i].first &&
            q.edges[i].head == out.graph.edges[i].second;
  }
  out.matches_complex = match;
  return out;
}

/// Certified genus of Z/C_n, which bounds the genus of Q_n / C_n from above.
/// Must equal the closed form.
inline std::int64_t quotient_genus_upper_bound(int n, int ambient_cap = kDefaultAmbientCap) {
  if (n < 3) throw DomainError("quotient_genus_upper_bound: n must be at least 3");
  const QuotientComplex q = quotient_complex(build_real_mac(polygon_boundary(n), ambient_cap), CyclicAction(n));
  const auto cert = certify_surface(q.face_complex());
  if (!cert.genus) throw InternalError("quotient_genus_upper_bound: quotient failed surface certification");
  const std::int64_t closed = quotient_genus_closed_form(n);
  if (*cert.genus != closed)
    throw InternalError("quotient_genus_upper_bound: direct genus " + std::to_string(*cert.genus) +
                        " != closed form " + std::to_string(closed));
  return *cert.genus;
}

}  // namespace rmac
