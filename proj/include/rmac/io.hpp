#pragma once

// Serialization: cubical and quotient complexes as JSON, face complexes as
// JSON fixtures, graphs as "V E" edge lists, rotation systems as JSON, and
// triangulated surfaces as OFF meshes.

#include <array>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rmac/complex_core.hpp"
#include "rmac/cyclic_quotient.hpp"
#include "rmac/embedding.hpp"
#include "rmac/surface.hpp"

namespace rmac::io {

using json = nlohmann::ordered_json;

// --- cubical complexes -----------------------------------------------------

inline json cell_json(const CubicalCell& c, int n) {
  json j;
  j["dim"] = c.dim();
  j["sigma"] = c.sigma_list();
  j["eps"] = c.eps_string(n);
  return j;
}

inline CubicalCell cell_from_json(const json& j, int n) {
  const auto sigma = j.at("sigma").get<std::vector<int>>();
  const auto cell = make_cell(sigma, j.at("eps").get<std::string>(), n);
  if (static_cast<std::size_t>(popcount(cell.sigma)) != sigma.size()) throw DomainError("sigma lists a coordinate twice");
  if (j.contains("dim") && j.at("dim").get<int>() != cell.dim()) throw DomainError("cell dim does not match |sigma|");
  return cell;
}

inline json to_json(const CubicalComplex& c) {
  json j;
  j["n"] = c.ambient();
  json cells = json::array();
  for (const auto& cell : c.cells()) cells.push_back(cell_json(cell, c.ambient()));
  j["cells"] = std::move(cells);
  return j;
}

inline CubicalComplex cubical_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  if (n < 1 || n > kMaxAmbient) throw DomainError("cubical complex JSON: n out of range");
  std::vector<CubicalCell> cells;
  for (const auto& c : j.at("cells")) cells.push_back(cell_from_json(c, n));
  return CubicalComplex(n, std::move(cells));
}

// --- quotient complexes ----------------------------------------------------

inline json to_json(const QuotientComplex& q) {
  json j;
  j["n"] = q.n;
  j["group_order"] = q.n;
  json cells = json::array();
  for (const auto& v : q.vertices) {
    json c = cell_json(v.rep, q.n);
    c["orbit_size"] = v.size;
    c["label"] = v.label;
    c["isotropy"] = v.isotropy;
    cells.push_back(std::move(c));
  }
  for (const auto& e : q.edges) {
    json c = cell_json(e.rep, q.n);
    c["orbit_size"] = e.size;
    c["endpoints"] = {e.tail, e.head};
    cells.push_back(std::move(c));
  }
  for (const auto& s : q.squares) {
    json c = cell_json(s.rep, q.n);
    c["orbit_size"] = s.size;
    json walk = json::array();
    for (const auto& d : s.walk) walk.push_back(d.forward ? d.edge + 1 : -(d.edge + 1));
    c["boundary"] = std::move(walk);
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);
  return j;
}

// --- face complexes (fixtures) ---------------------------------------------
// {"vertices": V, "edges": [[tail, head], ...], "faces": [[+-edge, ...], ...]}
// Face entries are 1-based edge numbers, negative for reversed traversal.

inline json to_json(const FaceComplex& f) {
  json j;
  j["vertices"] = f.vertex_count;
  json edges = json::array();
  for (const auto& [u, v] : f.edges) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  json faces = json::array();
  for (const auto& walk : f.faces) {
    json w = json::array();
    for (const auto& d : walk) w.push_back(d.forward ? d.edge + 1 : -(d.edge + 1));
    faces.push_back(std::move(w));
  }
  j["faces"] = std::move(faces);
  return j;
}

inline FaceComplex face_complex_from_json(const json& j) {
  FaceComplex f;
  f.vertex_count = j.at("vertices").get<int>();
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw DomainError("face complex JSON: each edge must be [tail, head]");
    f.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  for (const auto& w : j.at("faces")) {
    std::vector<DirectedEdge> walk;
    for (const auto& s : w) {
      const int signed_edge = s.get<int>();
      if (signed_edge == 0) throw DomainError("face complex JSON: edge references are 1-based");
      walk.push_back({std::abs(signed_edge) - 1, signed_edge > 0});
    }
    f.faces.push_back(std::move(walk));
  }
  f.validate();
  return f;
}

// --- certificates ----------------------------------------------------------

inline json to_json(const SurfaceCertificate& c) {
  json j;
  j["closed"] = c.closed;
  j["connected"] = c.connected;
  j["orientability_checked"] = c.orientability_checked;
  j["orientable"] = c.orientable;
  j["euler_characteristic"] = c.euler_characteristic;
  j["genus"] = c.genus ? json(*c.genus) : json(nullptr);
  json witness;
  if (c.orientable) {
    witness["orientation"] = c.orientation;
  } else {
    json v = json::array();
    for (const auto& viol : c.violations) {
      json x;
      x["kind"] = to_string(viol.kind);
      if (viol.edge >= 0) x["edge"] = viol.edge;
      if (viol.vertex >= 0) x["vertex"] = viol.vertex;
      x["count"] = viol.count;
      if (!viol.faces.empty()) x["faces"] = viol.faces;
      if (!viol.edges.empty()) x["edges"] = viol.edges;
      x["message"] = viol.message;
      v.push_back(std::move(x));
    }
    witness["violations"] = std::move(v);
  }
  j["witness"] = std::move(witness);
  return j;
}

// --- graphs: "V E" then E lines "u v", 0-indexed ---------------------------

inline void write_edge_list(std::ostream& os, const Graph& g) {
  os << g.vertex_count << ' ' << g.edges.size() << '\n';
  for (const auto& [u, v] : g.edges) os << u << ' ' << v << '\n';
}

inline Graph read_edge_list(std::istream& is) {
  Graph g;
  std::size_t e = 0;
  if (!(is >> g.vertex_count >> e)) throw DomainError("edge list: missing 'V E' header");
  g.edges.reserve(e);
  for (std::size_t i = 0; i < e; ++i) {
    int u = 0, v = 0;
    if (!(is >> u >> v)) throw DomainError("edge list: expected " + std::to_string(e) + " edges");
    g.edges.emplace_back(u, v);
  }
  g.validate();
  return g;
}

// --- rotation systems: {"<vertex>": [dart, ...], ...} ----------------------

inline json to_json(const RotationSystem& r) {
  json j = json::object();
  for (std::size_t v = 0; v < r.order.size(); ++v) j[std::to_string(v)] = r.order[v];
  return j;
}

inline RotationSystem rotation_from_json(const json& j, int vertex_count) {
  RotationSystem r;
  r.order.resize(static_cast<std::size_t>(vertex_count));
  for (const auto& [key, value] : j.items()) {
    std::size_t pos = 0;
    const int v = std::stoi(key, &pos);
    if (pos != key.size() || v < 0 || v >= vertex_count) throw DomainError("rotation JSON: bad vertex key '" + key + "'");
    r.order[static_cast<std::size_t>(v)] = value.get<std::vector<int>>();
  }
  return r;
}

// --- OFF meshes ------------------------------------------------------------

/// Rows map R^n to R^3.
using Projection = std::array<std::vector<double>, 3>;

/// Coordinates spread around the unit circle in the plane, weight on the z axis.
inline Projection default_projection(int n) {
  Projection p;
  for (auto& row : p) row.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    const double angle = 2.0 * std::numbers::pi * i / n;
    p[0][static_cast<std::size_t>(i)] = std::cos(angle);
    p[1][static_cast<std::size_t>(i)] = std::sin(angle);
    p[2][static_cast<std::size_t>(i)] = 1.0;
  }
  return p;
}

inline Projection projection_from_json(const json& j, int n) {
  if (!j.is_array() || j.size() != 3) throw DomainError("projection: expected 3 rows");
  Projection p;
  for (std::size_t r = 0; r < 3; ++r) {
    p[r] = j[r].get<std::vector<double>>();
    if (p[r].size() != static_cast<std::size_t>(n))
      throw DomainError("projection: each row needs " + std::to_string(n) + " entries");
  }
  return p;
}

/// Writes a triangulated complex; vertex positions come from its binary
/// points pushed through the projection.
inline void write_off(std::ostream& os, const FaceComplex& tri, const Projection& proj) {
  if (tri.vertex_points.size() != static_cast<std::size_t>(tri.vertex_count))
    throw DomainError("write_off: complex carries no vertex points");
  for (const auto& walk : tri.faces)
    if (walk.size() != 3) throw UnsupportedError("write_off: faces must be triangles");
  os << "OFF\n" << tri.vertex_count << ' ' << tri.faces.size() << " 0\n";
  char buf[96];
  for (Mask point : tri.vertex_points) {
    double xyz[3] = {0, 0, 0};
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t i = 0; i < proj[r].size(); ++i)
        if (point & bit(static_cast<int>(i))) xyz[r] += proj[r][i];
    // avoid "-0.000000"
    for (double& x : xyz)
      if (std::fabs(x) < 5e-7) x = 0.0;
    std::snprintf(buf, sizeof buf, "%.6f %.6f %.6f\n", xyz[0], xyz[1], xyz[2]);
    os << buf;
  }
  for (const auto& walk : tri.faces)
    os << "3 " << tri.tail(walk[0]) << ' ' << tri.tail(walk[1]) << ' ' << tri.tail(walk[2]) << '\n';
}

}  // namespace rmac::io
