#pragma once

#include <optional>
#include <span>
#include <vector>

#include "polyval/linear.hpp"

namespace polyval {

/// Facet of a full-dimensional polytope. The normal is the primitive integer
/// outer normal; support = max over the polytope of <x, normal>.
struct Facet {
  Vec normal;
  Rat support;
  std::vector<int> vertex_ids;  // sorted, into Polytope::vertices()

  friend bool operator==(const Facet&, const Facet&) = default;
};

/// {x : <x, normal> = offset}. H+ is the side <x, normal> >= offset.
class Hyperplane {
 public:
  Hyperplane(Vec normal, Rat offset);

  const Vec& normal() const { return normal_; }
  const Rat& offset() const { return offset_; }
  /// Sign of <x, normal> - offset.
  int side(const Vec& x) const;

 private:
  Vec normal_;
  Rat offset_;
};

/// Affinely independent vertex list.
struct Simplex {
  std::vector<Vec> vertices;

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

namespace detail {

// A facet of a polytope relative to its own affine hull, expressed in the
// coordinates selected by Polytope::chart(). For a full-dimensional polytope
// the chart is the identity.
struct ChartFacet {
  Vec normal;  // primitive integer, outward
  Rat offset;
  std::vector<int> vertex_ids;
};

}  // namespace detail

/// Convex hull of finitely many points, stored canonically: extreme points
/// only, deduplicated, lexicographically sorted. Two polytopes are equal
/// exactly when their vertex lists are equal. Immutable; all derived data is
/// computed at construction.
class Polytope {
 public:
  /// Throws std::invalid_argument("empty point set") on empty input and on
  /// points of mixed dimension.
  static Polytope hull(std::span<const Vec> points);
  static Polytope hull(std::initializer_list<Vec> points) {
    return hull(std::span<const Vec>(points.begin(), points.size()));
  }

  int ambient_dim() const { return ambient_dim_; }
  int aff_dim() const { return aff_dim_; }
  bool full_dimensional() const { return aff_dim_ == ambient_dim_; }
  const std::vector<Vec>& vertices() const { return vertices_; }

  /// Facets with primitive outer normals, sorted by normal. Throws
  /// std::invalid_argument("not full-dimensional") when aff_dim < n.
  const std::vector<Facet>& facets() const;

  /// Coordinate indices onto which the affine hull projects injectively.
  const std::vector<int>& chart() const { return chart_; }
  /// Facets relative to the affine hull, in chart coordinates.
  const std::vector<detail::ChartFacet>& chart_facets() const { return chart_facets_; }

  bool contains(const Vec& x) const;
  /// Vertex pairs (i < j) spanning an edge.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Polytope& a, const Polytope& b) { return a.vertices_ == b.vertices_; }

 private:
  Polytope() = default;

  int ambient_dim_ = 0;
  int aff_dim_ = 0;
  std::vector<Vec> vertices_;
  std::vector<int> chart_;
  std::vector<Vec> affine_basis_;  // directions spanning aff - v0
  std::vector<detail::ChartFacet> chart_facets_;
  std::vector<Facet> facets_;
};

std::string to_string(const Polytope& p);
inline std::ostream& operator<<(std::ostream& os, const Polytope& x) { return os << to_string(x); }

Polytope convex_hull(std::span<const Vec> points);
int affine_dim(const Polytope& p);
const std::vector<Facet>& facets(const Polytope& p);

/// max over P of <x, m>. Throws on a zero direction.
Rat support(const Polytope& p, const Vec& m);

/// Volume of conv(o, F) for the facet F.
Rat cone_volume(const Polytope& p, const Facet& f);

/// The facet's (n-1)-volume times its outer unit normal. Rational even when
/// the area alone is not.
Vec vector_area(const Polytope& p, const Facet& f);

/// n-volume; 0 when the polytope is lower dimensional.
Rat volume(const Polytope& p);

/// Integral of x over P; the zero vector when P is lower dimensional.
Vec moment(const Polytope& p);

/// Pulling triangulation of P into aff_dim(P)-simplices: the lexicographically
/// smallest vertex is coned over the recursively triangulated facets that
/// miss it.
std::vector<Simplex> triangulate(const Polytope& p);

struct CutResult {
  std::optional<Polytope> plus;     // P ∩ H+
  std::optional<Polytope> minus;    // P ∩ H-
  std::optional<Polytope> section;  // P ∩ H
};

CutResult cut(const Polytope& p, const Hyperplane& h);

/// conv(P ∪ {o}).
Polytope conv_with_origin(const Polytope& p);

/// Image of P under a linear map.
Polytope transform(const Mat& m, const Polytope& p);

/// Planar only. Vertices v with P ∩ relint[o, v] empty, as a contiguous
/// counter-clockwise boundary chain. Empty when o ∈ P.
std::vector<Vec> visible_vertices_ccw(const Polytope& p);

/// Vertices of a planar polytope in counter-clockwise boundary order,
/// starting from the lexicographically smallest one.
std::vector<Vec> ccw_vertices(const Polytope& p);

/// conv(o, e1, ..., ek) in R^n.
Polytope standard_simplex(int k, int n);
/// conv(e1, ..., ek) in R^n; k >= 1.
Polytope standard_facet_simplex(int k, int n);
/// conv(o, e1, e3, ..., ek) in R^n; 2 <= k <= n.
Polytope hat_simplex(int k, int n);

Polytope scaled(const Polytope& p, const Rat& s);

}  // namespace polyval
