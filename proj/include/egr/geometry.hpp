#pragma once

/// Point-line incidence structures over GF(q): the desarguesian plane
/// PG(2,q), the point-hyperplane geometry of PG(n,q), the two biaffine
/// planes, and the t-good deletion sets carved out of them.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "egr/error.hpp"
#include "egr/field.hpp"
#include "egr/graph.hpp"

namespace egr {

using Coordinates = std::vector<Field::Code>;

/// Homogeneous coordinates scaled so the first nonzero entry is 1.
class ProjPoint {
 public:
  ProjPoint(const Field& field, Coordinates coords) : coords_(std::move(coords)) {
    const auto it = std::find_if(coords_.begin(), coords_.end(), [](auto c) { return c != 0; });
    if (it == coords_.end()) throw precondition_error("the zero vector is not a projective point");
    const Field::Code scale = field.inv(*it);
    for (auto& c : coords_) c = field.mul(c, scale);
  }

  const Coordinates& coordinates() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }

  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;

 private:
  Coordinates coords_;
};

enum class StructureKind { projective_plane, pg_hyperplanes, biaffine_type1, biaffine_type2 };

inline const char* to_string(StructureKind k) {
  switch (k) {
    case StructureKind::projective_plane: return "projective plane";
    case StructureKind::pg_hyperplanes: return "point-hyperplane geometry";
    case StructureKind::biaffine_type1: return "biaffine plane (type 1)";
    case StructureKind::biaffine_type2: return "biaffine plane (type 2)";
  }
  return "?";
}

/// Points and lines (blocks) with incidence stored both ways.  Point and
/// line coordinates are kept sorted lexicographically, so an element's index
/// is its rank in that order.
class IncidenceStructure {
 public:
  IncidenceStructure(StructureKind kind, std::uint32_t field_order, std::uint32_t dimension,
                     std::vector<Coordinates> points, std::vector<Coordinates> lines,
                     std::vector<std::vector<std::uint32_t>> line_points)
      : kind_(kind),
        field_order_(field_order),
        dimension_(dimension),
        points_(std::move(points)),
        lines_(std::move(lines)),
        line_points_(std::move(line_points)),
        point_lines_(points_.size()) {
    for (std::uint32_t l = 0; l < line_points_.size(); ++l) {
      auto& row = line_points_[l];
      std::sort(row.begin(), row.end());
      for (auto pt : row) point_lines_.at(pt).push_back(l);
    }
  }

  StructureKind kind() const noexcept { return kind_; }
  std::uint32_t field_order() const noexcept { return field_order_; }
  std::uint32_t dimension() const noexcept { return dimension_; }
  std::size_t num_points() const noexcept { return points_.size(); }
  std::size_t num_lines() const noexcept { return lines_.size(); }
  const Coordinates& point(std::uint32_t i) const { return points_.at(i); }
  const Coordinates& line(std::uint32_t i) const { return lines_.at(i); }
  std::span<const std::uint32_t> points_on(std::uint32_t line) const { return line_points_.at(line); }
  std::span<const std::uint32_t> lines_through(std::uint32_t point) const { return point_lines_.at(point); }

  bool incident(std::uint32_t pt, std::uint32_t ln) const {
    const auto row = points_on(ln);
    return std::binary_search(row.begin(), row.end(), pt);
  }

  std::optional<std::uint32_t> find_point(const Coordinates& c) const { return find(points_, c); }
  std::optional<std::uint32_t> find_line(const Coordinates& c) const { return find(lines_, c); }

  /// The common number of points per line; throws if lines differ in size.
  std::size_t line_size() const {
    if (line_points_.empty()) throw precondition_error("structure has no lines");
    const auto s = line_points_.front().size();
    for (const auto& row : line_points_)
      if (row.size() != s) throw precondition_error("lines have different sizes");
    return s;
  }

  /// The unique line through two distinct points of a plane.
  std::optional<std::uint32_t> joining_line(std::uint32_t a, std::uint32_t b) const {
    const auto la = lines_through(a), lb = lines_through(b);
    std::vector<std::uint32_t> common;
    std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(common));
    if (common.size() != 1) return std::nullopt;
    return common.front();
  }

 private:
  static std::optional<std::uint32_t> find(const std::vector<Coordinates>& list, const Coordinates& c) {
    const auto it = std::lower_bound(list.begin(), list.end(), c);
    if (it == list.end() || *it != c) return std::nullopt;
    return static_cast<std::uint32_t>(it - list.begin());
  }

  StructureKind kind_;
  std::uint32_t field_order_;
  std::uint32_t dimension_;
  std::vector<Coordinates> points_;
  std::vector<Coordinates> lines_;
  std::vector<std::vector<std::uint32_t>> line_points_;
  std::vector<std::vector<std::uint32_t>> point_lines_;
};

/// Point set P0 and line set L0, both sorted, with the declared t.
struct DeletionSet {
  std::vector<std::uint32_t> points;
  std::vector<std::uint32_t> lines;
  std::uint32_t t = 0;
};

namespace detail {

/// All normalized nonzero vectors of length len, lexicographically ordered.
inline std::vector<Coordinates> projective_points(const Field& f, std::uint32_t len) {
  std::vector<Coordinates> out;
  const std::uint32_t q = f.order();
  // Vectors of the form (0,..,0,1,*,..,*) with the leading 1 at position lead.
  for (std::uint32_t lead = len; lead-- > 0;) {
    const std::uint32_t free = len - lead - 1;
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < free; ++i) count *= q;
    for (std::uint64_t t = 0; t < count; ++t) {
      Coordinates c(len, 0);
      c[lead] = 1;
      std::uint64_t x = t;
      for (std::uint32_t i = len; i-- > lead + 1;) {
        c[i] = static_cast<Field::Code>(x % q);
        x /= q;
      }
      out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Field::Code dot(const Field& f, const Coordinates& a, const Coordinates& b) {
  Field::Code acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

inline IncidenceStructure projective_incidence(const Field& f, std::uint32_t n, StructureKind kind) {
  auto points = projective_points(f, n + 1);
  auto lines = points;  // hyperplanes carry the same normalized dual vectors
  std::vector<std::vector<std::uint32_t>> line_points(lines.size());
  for (std::uint32_t l = 0; l < lines.size(); ++l)
    for (std::uint32_t p = 0; p < points.size(); ++p)
      if (dot(f, points[p], lines[l]) == 0) line_points[l].push_back(p);
  return IncidenceStructure(kind, f.order(), n, std::move(points), std::move(lines), std::move(line_points));
}

inline void require_plane(const IncidenceStructure& s, const Field& f) {
  if (s.kind() != StructureKind::projective_plane)
    throw precondition_error("a projective plane is required");
  if (s.field_order() != f.order()) throw precondition_error("plane and field orders differ");
}

inline std::uint32_t point_index(const IncidenceStructure& s, const Field& f, Coordinates c) {
  const auto idx = s.find_point(ProjPoint(f, std::move(c)).coordinates());
  if (!idx) throw std::logic_error("point not found");
  return *idx;
}

inline std::uint32_t line_index(const IncidenceStructure& s, const Field& f, Coordinates c) {
  const auto idx = s.find_line(ProjPoint(f, std::move(c)).coordinates());
  if (!idx) throw std::logic_error("line not found");
  return *idx;
}

inline std::vector<std::uint32_t> sorted_unique(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace detail

/// PG(2,q): points and lines are normalized triples, incident when their dot
/// product vanishes.
inline IncidenceStructure build_pg2(const Field& f) {
  return detail::projective_incidence(f, 2, StructureKind::projective_plane);
}

/// Points and hyperplanes of PG(n,q).  For n = 2 this is build_pg2.
inline IncidenceStructure build_pg_hyperplanes(const Field& f, std::uint32_t n) {
  if (n < 2) throw precondition_error("dimension must be at least 2");
  return detail::projective_incidence(f, n, n == 2 ? StructureKind::projective_plane : StructureKind::pg_hyperplanes);
}

/// Biaffine planes in Cartesian coordinates.
///  type 1: points (x,y) of AG(2,q); lines Y = mX + b stored as (m,b).
///  type 2: points (x,y) != (0,0); lines AX + BY + 1 = 0 stored as (A,B,1).
inline IncidenceStructure build_biaffine(const Field& f, int type) {
  const std::uint32_t q = f.order();
  std::vector<Coordinates> points, lines;
  std::vector<std::vector<std::uint32_t>> line_points;
  if (type == 1) {
    for (Field::Code x = 0; x < q; ++x)
      for (Field::Code y = 0; y < q; ++y) points.push_back({x, y});
    for (Field::Code m = 0; m < q; ++m)
      for (Field::Code b = 0; b < q; ++b) {
        lines.push_back({m, b});
        std::vector<std::uint32_t> row;
        for (Field::Code x = 0; x < q; ++x) row.push_back(x * q + f.add(f.mul(m, x), b));
        line_points.push_back(std::move(row));
      }
    return IncidenceStructure(StructureKind::biaffine_type1, q, 2, std::move(points), std::move(lines),
                              std::move(line_points));
  }
  if (type == 2) {
    // Index of (x,y) is x*q + y - 1 since the origin (code 0) is absent.
    for (Field::Code x = 0; x < q; ++x)
      for (Field::Code y = 0; y < q; ++y)
        if (x != 0 || y != 0) points.push_back({x, y});
    for (Field::Code a = 0; a < q; ++a)
      for (Field::Code b = 0; b < q; ++b) {
        if (a == 0 && b == 0) continue;
        lines.push_back({a, b, 1});
        std::vector<std::uint32_t> row;
        const Field::Code minus_one = f.neg(1);
        if (b != 0) {
          for (Field::Code x = 0; x < q; ++x) {
            const Field::Code y = f.div(f.sub(minus_one, f.mul(a, x)), b);
            row.push_back(x * q + y - 1);
          }
        } else {
          const Field::Code x = f.div(minus_one, a);
          for (Field::Code y = 0; y < q; ++y) row.push_back(x * q + y - 1);
        }
        line_points.push_back(std::move(row));
      }
    return IncidenceStructure(StructureKind::biaffine_type2, q, 2, std::move(points), std::move(lines),
                              std::move(line_points));
  }
  throw precondition_error("biaffine plane type must be 1 or 2");
}

/// True iff every point outside P0 lies on exactly t lines of L0 and every
/// line outside L0 carries exactly t points of P0.
inline bool verify_t_good(const IncidenceStructure& s, const DeletionSet& d) {
  std::vector<bool> del_pt(s.num_points(), false), del_ln(s.num_lines(), false);
  for (auto p : d.points) del_pt.at(p) = true;
  for (auto l : d.lines) del_ln.at(l) = true;
  for (std::uint32_t p = 0; p < s.num_points(); ++p) {
    if (del_pt[p]) continue;
    std::uint32_t c = 0;
    for (auto l : s.lines_through(p)) c += del_ln[l];
    if (c != d.t) return false;
  }
  for (std::uint32_t l = 0; l < s.num_lines(); ++l) {
    if (del_ln[l]) continue;
    std::uint32_t c = 0;
    for (auto p : s.points_on(l)) c += del_pt[p];
    if (c != d.t) return false;
  }
  return true;
}

/// Points and lines of the Baer subplane PG(2, sqrt(Q)) inside PG(2,Q):
/// elements whose normalized coordinates all lie in the subfield.  t = 1.
inline DeletionSet baer_deletion_set(const IncidenceStructure& s, const Field& f) {
  detail::require_plane(s, f);
  const auto emb = subfield_embedding(f);
  auto in_sub = [&](const Coordinates& c) {
    return std::all_of(c.begin(), c.end(), [&](auto x) { return emb.contains(x); });
  };
  DeletionSet d;
  d.t = 1;
  for (std::uint32_t p = 0; p < s.num_points(); ++p)
    if (in_sub(s.point(p))) d.points.push_back(p);
  for (std::uint32_t l = 0; l < s.num_lines(); ++l)
    if (in_sub(s.line(l))) d.lines.push_back(l);
  return d;
}

/// L0 = lines through P1 or P2, P0 = points on e1 = P1P2 or on e2, where e2
/// is another line through P1.  t = 2.
inline DeletionSet flag_deletion_set(const IncidenceStructure& s, std::uint32_t p1, std::uint32_t p2,
                                     std::uint32_t e2) {
  if (s.kind() != StructureKind::projective_plane) throw precondition_error("a projective plane is required");
  if (p1 == p2) throw precondition_error("P1 and P2 must be distinct");
  const auto e1 = s.joining_line(p1, p2);
  if (!e1) throw precondition_error("P1 and P2 have no unique joining line");
  if (!s.incident(p1, e2)) throw precondition_error("e2 must pass through P1");
  if (e2 == *e1) throw precondition_error("e2 must differ from the line P1P2");
  DeletionSet d;
  d.t = 2;
  for (auto p : {p1, p2})
    for (auto l : s.lines_through(p)) d.lines.push_back(l);
  for (auto l : {*e1, e2})
    for (auto p : s.points_on(l)) d.points.push_back(p);
  d.points = detail::sorted_unique(std::move(d.points));
  d.lines = detail::sorted_unique(std::move(d.lines));
  return d;
}

/// Flag deletion set at P1 = (1:0:0), P2 = (0:1:0), e2 : X1 = 0.
inline DeletionSet flag_deletion_set(const IncidenceStructure& s, const Field& f) {
  detail::require_plane(s, f);
  return flag_deletion_set(s, detail::point_index(s, f, {1, 0, 0}), detail::point_index(s, f, {0, 1, 0}),
                           detail::line_index(s, f, {0, 1, 0}));
}

/// L0 = lines through any vertex of the triangle P1P2P3, P0 = points on any
/// side.  t = 3.
inline DeletionSet triangle_deletion_set(const IncidenceStructure& s, std::uint32_t p1, std::uint32_t p2,
                                         std::uint32_t p3) {
  if (s.kind() != StructureKind::projective_plane) throw precondition_error("a projective plane is required");
  if (p1 == p2 || p2 == p3 || p1 == p3) throw precondition_error("triangle vertices must be distinct");
  const auto e3 = s.joining_line(p1, p2), e1 = s.joining_line(p2, p3), e2 = s.joining_line(p1, p3);
  if (!e1 || !e2 || !e3) throw precondition_error("triangle vertices have no unique joining lines");
  if (s.incident(p3, *e3)) throw precondition_error("triangle vertices are collinear");
  DeletionSet d;
  d.t = 3;
  for (auto p : {p1, p2, p3})
    for (auto l : s.lines_through(p)) d.lines.push_back(l);
  for (auto l : {*e1, *e2, *e3})
    for (auto p : s.points_on(l)) d.points.push_back(p);
  d.points = detail::sorted_unique(std::move(d.points));
  d.lines = detail::sorted_unique(std::move(d.lines));
  return d;
}

/// Triangle deletion set on the fundamental triangle.
inline DeletionSet triangle_deletion_set(const IncidenceStructure& s, const Field& f) {
  detail::require_plane(s, f);
  return triangle_deletion_set(s, detail::point_index(s, f, {1, 0, 0}), detail::point_index(s, f, {0, 1, 0}),
                               detail::point_index(s, f, {0, 0, 1}));
}

/// Points of the Hermitian curve X0^(q+1) + X1^(q+1) + X2^(q+1) = 0 in
/// PG(2,q^2) and its tangents.  The tangent at x has dual coordinates
/// (x0^q, x1^q, x2^q).  t = q + 1.
inline DeletionSet hermitian_deletion_set(const IncidenceStructure& s, const Field& f) {
  detail::require_plane(s, f);
  if (f.degree() % 2 != 0) throw precondition_error("plane order " + std::to_string(f.order()) + " is not a square");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < f.degree() / 2; ++i) q *= f.characteristic();
  DeletionSet d;
  d.t = static_cast<std::uint32_t>(q + 1);
  for (std::uint32_t p = 0; p < s.num_points(); ++p) {
    const auto& x = s.point(p);
    Field::Code acc = 0;
    for (auto c : x) acc = f.add(acc, f.pow(c, q + 1));
    if (acc != 0) continue;
    d.points.push_back(p);
    Coordinates tangent;
    for (auto c : x) tangent.push_back(f.pow(c, q));
    d.lines.push_back(detail::line_index(s, f, std::move(tangent)));
  }
  d.lines = detail::sorted_unique(std::move(d.lines));
  return d;
}

/// Bipartite incidence graph of the structure with a deletion set removed:
/// surviving points in index order, then surviving lines.
inline Graph delete_and_graph(const IncidenceStructure& s, const DeletionSet& d) {
  if (!verify_t_good(s, d))
    throw precondition_error("deletion set is not " + std::to_string(d.t) + "-good");
  std::vector<bool> del_pt(s.num_points(), false), del_ln(s.num_lines(), false);
  for (auto p : d.points) del_pt[p] = true;
  for (auto l : d.lines) del_ln[l] = true;
  std::vector<Vertex> pt_vertex(s.num_points(), 0), ln_vertex(s.num_lines(), 0);
  std::vector<VertexKind> kinds;
  Vertex next = 0;
  for (std::uint32_t p = 0; p < s.num_points(); ++p)
    if (!del_pt[p]) {
      pt_vertex[p] = next++;
      kinds.push_back(VertexKind::point);
    }
  for (std::uint32_t l = 0; l < s.num_lines(); ++l)
    if (!del_ln[l]) {
      ln_vertex[l] = next++;
      kinds.push_back(VertexKind::line);
    }
  std::vector<Edge> edges;
  for (std::uint32_t l = 0; l < s.num_lines(); ++l) {
    if (del_ln[l]) continue;
    for (auto p : s.points_on(l))
      if (!del_pt[p]) edges.push_back({pt_vertex[p], ln_vertex[l]});
  }
  return Graph(next, std::move(edges), std::move(kinds));
}

/// Full incidence graph: points first, then lines.
inline Graph incidence_graph(const IncidenceStructure& s) { return delete_and_graph(s, DeletionSet{}); }

}  // namespace egr
