#pragma once

#include "polyval/polytope.hpp"

namespace polyval {

/// Additive map [0, inf) -> R. Restricted to the rationals every such map is
/// q -> c*q, so the value at 1 determines it completely.
struct Zeta {
  Rat c = 1;

  /// Throws std::domain_error for q < 0.
  Rat operator()(const Rat& q) const;

  friend Zeta operator+(const Zeta& a, const Zeta& b) { return {a.c + b.c}; }
};

Rat zeta_eval(const Zeta& z, const Rat& q);

/// Which support value divides the facet terms of the facet vector.
enum class SupportConvention {
  Absolute,  // |h_P(u)|, the defining form
  Signed,    // h_P(u); agrees with Absolute whenever o ∈ P
};

/// Sum over facets whose affine hull misses the origin of
/// zeta(cone volume) / |support| * normal. Zero for lower-dimensional P.
/// The quotient normal/support does not depend on the normal's scale, so the
/// primitive integer normal gives the same value as the unit normal.
Vec facet_vector(const Polytope& p, const Zeta& z,
                 SupportConvention convention = SupportConvention::Absolute);

/// Planar edge vector: v + w when o is a vertex with neighbours v, w, or when
/// o lies inside the edge [v, w]; 2(v + w) for a segment [v, w] containing o;
/// 0 otherwise.
Vec edge_vector(const Polytope& p);

/// Planar covariant valuation built from consecutive counter-clockwise
/// vertex pairs. Requires o ∈ P; throws std::invalid_argument("origin not
/// contained") otherwise.
Vec vo_zeta(const Polytope& p, const Zeta& z);

/// fv_z(P) + c1 rot(mv(P)) + c2 rot(ve(P)) on planar P containing o.
Vec z_contra_2d_origin(const Polytope& p, const Zeta& z, const Rat& c1, const Rat& c2);

/// fv_z1(P) + fv_z2(conv(o, P)).
Vec z_contra_nd(const Polytope& p, const Zeta& z1, const Zeta& z2);

struct Params2D {
  Zeta zeta1{0};
  Zeta zeta2{0};
  Rat c1 = 0;
  Rat c2 = 0;
  Rat c1_tilde = 0;
  Rat c2_tilde = 0;
};

/// The general planar contravariant valuation:
///   fv_z1(P) + fv_z2([o,P]) + c1 rot mv(P) + c1~ rot mv([o,P])
///   + c2 rot ve([o,P]) + c2~ rot ve(conv(o, visible vertices of P)).
Vec z_contra_2d_general(const Polytope& p, const Params2D& params);

}  // namespace polyval
