#pragma once

// Simplicial complexes on [m] and the cubical cell structure of the real
// moment-angle complex Z_K(D^1, S^0).
//
// Coordinates are 1-based in every public list or string; internally
// coordinate i lives at bit i-1 of a Mask.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "rmac/common.hpp"

namespace rmac {

/// Lexicographic order on sorted index lists, for masks of equal popcount.
inline bool sigma_less(Mask a, Mask b) {
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

/// Lexicographic order on the eps strings ("0" < "1", lowest coordinate first).
inline bool eps_less(Mask a, Mask b) {
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) == 0;
}

inline std::vector<int> mask_to_list(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  while (m != 0) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

inline Mask list_to_mask(std::span<const int> coords, int n) {
  Mask m = 0;
  for (int c : coords) {
    if (c < 1 || c > n) throw DomainError("coordinate " + std::to_string(c) + " outside 1.." + std::to_string(n));
    m |= bit(c - 1);
  }
  return m;
}

/// Binary string x1 x2 ... xn of a vertex mask.
inline std::string vertex_string(Mask v, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if (v & bit(i)) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

inline Mask parse_vertex_string(const std::string& s) {
  if (s.size() > static_cast<std::size_t>(kMaxAmbient)) throw DomainError("binary string too long");
  Mask m = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') m |= bit(static_cast<int>(i));
    else if (s[i] != '0') throw DomainError("binary string may only contain 0 and 1: '" + s + "'");
  }
  return m;
}

// ---------------------------------------------------------------------------

/// Abstract simplicial complex on vertex set {1..m}; faces kept as masks in
/// (size, lexicographic) order, empty face first.
class SimplicialComplex {
 public:
  /// Validates downward closure and that every singleton is present.
  SimplicialComplex(int m, std::vector<Mask> faces) : m_(m), faces_(std::move(faces)) {
    if (m < 1 || m > kMaxAmbient) throw DomainError("simplicial complex needs 1 <= m <= 30");
    std::sort(faces_.begin(), faces_.end(), face_less);
    faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
    for (Mask f : faces_) {
      if ((f & ~low_mask(m)) != 0) throw DomainError("face uses a vertex outside 1..m");
      for (Mask rest = f; rest != 0; rest &= rest - 1) {
        const Mask sub = f & ~(rest & (~rest + 1));
        if (!contains(sub)) throw DomainError("face set is not downward closed");
      }
    }
    if (faces_.empty() || faces_.front() != 0) throw DomainError("empty face missing");
    for (int i = 0; i < m; ++i)
      if (!contains(bit(i))) throw DomainError("vertex " + std::to_string(i + 1) + " is not a face");
  }

  int vertex_count() const { return m_; }
  std::span<const Mask> face_masks() const { return faces_; }
  std::size_t face_count() const { return faces_.size(); }

  bool contains(Mask face) const {
    return std::binary_search(faces_.begin(), faces_.end(), face, face_less);
  }

  std::vector<std::vector<int>> faces() const {
    std::vector<std::vector<int>> out;
    out.reserve(faces_.size());
    for (Mask f : faces_) out.push_back(mask_to_list(f));
    return out;
  }

  int dimension() const { return popcount(faces_.back()) - 1; }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  static bool face_less(Mask a, Mask b) {
    const int da = popcount(a), db = popcount(b);
    if (da != db) return da < db;
    return sigma_less(a, b);
  }

  int m_;
  std::vector<Mask> faces_;
};

/// Boundary of the n-gon: vertices 1..n and edges {i, i+1}, {n, 1}.
inline SimplicialComplex polygon_boundary(int n) {
  if (n < 3) throw DomainError("polygon_boundary: n must be at least 3");
  if (n > kMaxAmbient) throw DomainError("polygon_boundary: n too large");
  std::vector<Mask> faces{0};
  for (int i = 0; i < n; ++i) {
    faces.push_back(bit(i));
    faces.push_back(bit(i) | bit((i + 1) % n));
  }
  return SimplicialComplex(n, std::move(faces));
}

inline SimplicialComplex discrete_points(int n) {
  if (n < 1) throw DomainError("discrete_points: n must be at least 1");
  if (n > kMaxAmbient) throw DomainError("discrete_points: n too large");
  std::vector<Mask> faces{0};
  for (int i = 0; i < n; ++i) faces.push_back(bit(i));
  return SimplicialComplex(n, std::move(faces));
}

// ---------------------------------------------------------------------------

/// Cell (sigma, eps) of Z_K(D^1, S^0): the D^1 factors sit at sigma, and eps
/// fixes the S^0 value of every other coordinate. Bits of eps inside sigma are zero.
struct CubicalCell {
  Mask sigma = 0;
  Mask eps = 0;

  int dim() const { return popcount(sigma); }
  std::vector<int> sigma_list() const { return mask_to_list(sigma); }

  /// eps listed over the complement of sigma in increasing coordinate order.
  std::string eps_string(int n) const {
    std::string s;
    for (int i = 0; i < n; ++i)
      if (!(sigma & bit(i))) s.push_back((eps & bit(i)) ? '1' : '0');
    return s;
  }

  std::uint64_t key() const { return (std::uint64_t{sigma} << 32) | eps; }

  friend bool operator==(const CubicalCell&, const CubicalCell&) = default;
};

/// Order by (dim, sigma, eps); used for cell lists and orbit representatives.
inline bool cell_less(const CubicalCell& a, const CubicalCell& b) {
  const int da = a.dim(), db = b.dim();
  if (da != db) return da < db;
  if (a.sigma != b.sigma) return sigma_less(a.sigma, b.sigma);
  return eps_less(a.eps, b.eps);
}

inline CubicalCell make_cell(Mask sigma, Mask eps) { return CubicalCell{sigma, eps & ~sigma}; }

inline CubicalCell make_cell(std::span<const int> sigma, const std::string& eps, int n) {
  const Mask s = list_to_mask(sigma, n);
  const std::size_t want = static_cast<std::size_t>(n - popcount(s));
  if (eps.size() != want)
    throw DomainError("eps string has length " + std::to_string(eps.size()) + ", expected " + std::to_string(want));
  Mask e = 0;
  std::size_t pos = 0;
  for (int i = 0; i < n; ++i) {
    if (s & bit(i)) continue;
    const char c = eps[pos++];
    if (c == '1') e |= bit(i);
    else if (c != '0') throw DomainError("eps string may only contain 0 and 1");
  }
  return CubicalCell{s, e};
}

/// Immutable cubical complex with codimension-1 incidence.
class CubicalComplex {
 public:
  /// Builds incidence and checks the invariants: unique cells, every face of
  /// every cell present.
  CubicalComplex(int n, std::vector<CubicalCell> cells) : n_(n), cells_(std::move(cells)) {
    if (n < 1 || n > kMaxAmbient) throw DomainError("cubical complex needs 1 <= n <= 30");
    for (const auto& c : cells_) {
      if (((c.sigma | c.eps) & ~low_mask(n)) != 0) throw DomainError("cell uses a coordinate outside 1..n");
      if ((c.sigma & c.eps) != 0) throw DomainError("eps assigns a value inside sigma");
    }
    std::sort(cells_.begin(), cells_.end(), cell_less);
    index_.reserve(cells_.size());
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (!index_.emplace(cells_[i].key(), static_cast<int>(i)).second)
        throw DomainError("duplicate cell in cubical complex");
    }
    max_dim_ = cells_.empty() ? -1 : cells_.back().dim();
    dim_begin_.assign(static_cast<std::size_t>(max_dim_ + 2), 0);
    {
      std::size_t i = 0;
      for (int d = 0; d <= max_dim_; ++d) {
        dim_begin_[static_cast<std::size_t>(d)] = i;
        while (i < cells_.size() && cells_[i].dim() == d) ++i;
      }
      dim_begin_[static_cast<std::size_t>(max_dim_ + 1)] = cells_.size();
    }
    boundary_begin_.reserve(cells_.size() + 1);
    for (const auto& c : cells_) {
      boundary_begin_.push_back(boundary_.size());
      for (Mask rest = c.sigma; rest != 0; rest &= rest - 1) {
        const Mask b = rest & (~rest + 1);
        for (Mask side : {Mask{0}, b}) {
          const int idx = find(CubicalCell{c.sigma & ~b, c.eps | side});
          if (idx < 0) throw DomainError("cubical complex is missing a boundary cell");
          boundary_.push_back(idx);
        }
      }
    }
    boundary_begin_.push_back(boundary_.size());
  }

  int ambient() const { return n_; }
  int max_dim() const { return max_dim_; }
  std::span<const CubicalCell> cells() const { return cells_; }
  const CubicalCell& cell(int idx) const { return cells_[static_cast<std::size_t>(idx)]; }

  std::span<const CubicalCell> cells_of_dim(int d) const {
    if (d < 0 || d > max_dim_) return {};
    const auto b = dim_begin_[static_cast<std::size_t>(d)], e = dim_begin_[static_cast<std::size_t>(d) + 1];
    return std::span<const CubicalCell>(cells_).subspan(b, e - b);
  }
  /// Global index of the first cell of dimension d.
  int dim_offset(int d) const { return static_cast<int>(dim_begin_[static_cast<std::size_t>(d)]); }
  std::size_t count(int d) const { return cells_of_dim(d).size(); }

  /// Index of a cell, or -1.
  int find(const CubicalCell& c) const {
    auto it = index_.find(c.key());
    return it == index_.end() ? -1 : it->second;
  }
  bool contains(const CubicalCell& c) const { return find(c) >= 0; }

  /// Codimension-1 faces: for each i in sigma ascending, eps_i = 0 then eps_i = 1.
  std::span<const int> boundary(int idx) const {
    const auto b = boundary_begin_[static_cast<std::size_t>(idx)];
    const auto e = boundary_begin_[static_cast<std::size_t>(idx) + 1];
    return std::span<const int>(boundary_).subspan(b, e - b);
  }

 private:
  int n_;
  int max_dim_ = -1;
  std::vector<CubicalCell> cells_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<std::size_t> dim_begin_;
  std::vector<std::size_t> boundary_begin_;
  std::vector<int> boundary_;
};

/// Cells (sigma, eps) for every face sigma of K and every eps on the complement.
inline CubicalComplex build_real_mac(const SimplicialComplex& k, int ambient_cap = kDefaultAmbientCap) {
  const int n = k.vertex_count();
  if (n > ambient_cap)
    throw ResourceLimitError("ambient dimension " + std::to_string(n) + " exceeds cap " + std::to_string(ambient_cap));
  std::vector<CubicalCell> cells;
  std::size_t total = 0;
  for (Mask f : k.face_masks()) total += std::size_t{1} << (n - popcount(f));
  cells.reserve(total);
  for (Mask f : k.face_masks()) {
    const Mask comp = low_mask(n) & ~f;
    Mask sub = comp;
    while (true) {
      cells.push_back(CubicalCell{f, sub});
      if (sub == 0) break;
      sub = (sub - 1) & comp;
    }
  }
  return CubicalComplex(n, std::move(cells));
}

inline std::int64_t euler_characteristic(const CubicalComplex& c) {
  std::int64_t chi = 0;
  for (int d = 0; d <= c.max_dim(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(c.count(d));
  return chi;
}

/// L is a subcomplex of K on the same vertex set. A true answer is confirmed
/// cell by cell on the two moment-angle complexes.
inline bool verify_inclusion(const SimplicialComplex& l, const SimplicialComplex& k,
                             int ambient_cap = kDefaultAmbientCap) {
  if (l.vertex_count() != k.vertex_count())
    throw DomainError("verify_inclusion: complexes have different vertex counts");
  for (Mask f : l.face_masks())
    if (!k.contains(f)) return false;
  const CubicalComplex zl = build_real_mac(l, ambient_cap);
  const CubicalComplex zk = build_real_mac(k, ambient_cap);
  for (const auto& c : zl.cells())
    if (!zk.contains(c)) throw InternalError("face inclusion holds but a cell of Z_L is missing from Z_K");
  return true;
}

/// True iff sigma = {i, i+1 mod n} for some i.
inline bool is_cyclic_edge(Mask sigma, int n) {
  if (popcount(sigma) != 2) return false;
  for (int i = 0; i < n; ++i)
    if (sigma == (bit(i) | bit((i + 1) % n))) return true;
  return false;
}

/// Whether c is exactly Z over polygon_boundary(n).
inline bool is_polygon_complex(const CubicalComplex& c) {
  const int n = c.ambient();
  if (n < 3 || c.max_dim() != 2) return false;
  if (c.count(0) != (std::size_t{1} << n)) return false;
  if (c.count(1) != static_cast<std::size_t>(n) << (n - 1)) return false;
  if (c.count(2) != static_cast<std::size_t>(n) << (n - 2)) return false;
  for (const auto& sq : c.cells_of_dim(2))
    if (!is_cyclic_edge(sq.sigma, n)) return false;
  return true;
}

}  // namespace rmac
