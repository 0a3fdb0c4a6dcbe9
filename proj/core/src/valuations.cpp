#include "polyval/valuations.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyval {

namespace {

void require_planar(const Polytope& p, const char* what) {
  if (p.ambient_dim() != 2) throw std::invalid_argument(std::string(what) + " requires a planar polytope");
}

Rat det2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

// zeta(d) / d for consecutive vertices seen counter-clockwise from o (d > 0).
Vec wedge_term(const Zeta& z, const Vec& prev, const Vec& next) {
  const Rat d = det2(prev, next);
  if (d == 0) return Vec::zero(2);
  return (prev - next) * (z(d) / d);
}

}  // namespace

Rat Zeta::operator()(const Rat& q) const {
  if (q < 0) throw std::domain_error("zeta is defined on [0, inf)");
  return c * q;
}

Rat zeta_eval(const Zeta& z, const Rat& q) { return z(q); }

Vec facet_vector(const Polytope& p, const Zeta& z, SupportConvention convention) {
  Vec total = Vec::zero(p.ambient_dim());
  if (!p.full_dimensional()) return total;
  for (const auto& f : p.facets()) {
    if (f.support == 0) continue;
    const Rat h = convention == SupportConvention::Absolute ? abs(f.support) : f.support;
    total += f.normal * (z(cone_volume(p, f)) / h);
  }
  return total;
}

Vec edge_vector(const Polytope& p) {
  require_planar(p, "edge_vector");
  const Vec o = Vec::zero(2);
  if (p.aff_dim() == 1) {
    if (!p.contains(o)) return o;
    return (p.vertices()[0] + p.vertices()[1]) * Rat(2);
  }
  if (p.aff_dim() != 2) return o;
  const auto ring = ccw_vertices(p);
  const std::size_t m = ring.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Vec& prev = ring[(i + m - 1) % m];
    const Vec& next = ring[(i + 1) % m];
    if (ring[i].is_zero()) return prev + next;
    // o strictly inside the edge [ring[i], next]
    const Vec& a = ring[i];
    if (det2(a, next) == 0 && dot(a, next) < 0) return a + next;
  }
  return o;
}

Vec vo_zeta(const Polytope& p, const Zeta& z) {
  require_planar(p, "vo_zeta");
  const Vec o = Vec::zero(2);
  if (!p.contains(o)) throw std::invalid_argument("origin not contained");
  Vec total = Vec::zero(2);
  if (p.aff_dim() < 2) return total;

  const auto ring = ccw_vertices(p);
  const std::size_t m = ring.size();
  // Find where o sits on the boundary, if it does: either a vertex or the
  // relative interior of the edge [ring[i], ring[i+1]].
  std::optional<std::size_t> after;
  for (std::size_t i = 0; i < m && !after; ++i) {
    const Vec& a = ring[i];
    const Vec& b = ring[(i + 1) % m];
    if (a.is_zero()) after = i;
    else if (det2(a, b) == 0 && dot(a, b) < 0) after = i;
  }

  if (!after) {
    for (std::size_t i = 0; i < m; ++i) total += wedge_term(z, ring[i], ring[(i + 1) % m]);
    return total;
  }
  // Boundary case: walk the vertices counter-clockwise starting right after
  // o, without closing the loop back through o.
  std::vector<Vec> chain;
  for (std::size_t k = 1; k <= m; ++k) {
    const Vec& v = ring[(*after + k) % m];
    if (!v.is_zero()) chain.push_back(v);
  }
  for (std::size_t i = 1; i < chain.size(); ++i) total += wedge_term(z, chain[i - 1], chain[i]);
  return total;
}

Vec z_contra_2d_origin(const Polytope& p, const Zeta& z, const Rat& c1, const Rat& c2) {
  require_planar(p, "z_contra_2d_origin");
  if (!p.contains(Vec::zero(2))) throw std::invalid_argument("origin not contained");
  return facet_vector(p, z) + rotate90(moment(p)) * c1 + rotate90(edge_vector(p)) * c2;
}

Vec z_contra_nd(const Polytope& p, const Zeta& z1, const Zeta& z2) {
  return facet_vector(p, z1) + facet_vector(conv_with_origin(p), z2);
}

Vec z_contra_2d_general(const Polytope& p, const Params2D& params) {
  require_planar(p, "z_contra_2d_general");
  const Polytope with_origin = conv_with_origin(p);
  std::vector<Vec> visible = visible_vertices_ccw(p);
  visible.push_back(Vec::zero(2));
  const Polytope visible_hull = Polytope::hull(visible);

  Vec total = facet_vector(p, params.zeta1) + facet_vector(with_origin, params.zeta2);
  total += rotate90(moment(p)) * params.c1;
  total += rotate90(moment(with_origin)) * params.c1_tilde;
  total += rotate90(edge_vector(with_origin)) * params.c2;
  total += rotate90(edge_vector(visible_hull)) * params.c2_tilde;
  return total;
}

}  // namespace polyval
