#include <gtest/gtest.h>

#include "polyval/harness.hpp"
#include "polyval/valuations.hpp"

namespace polyval {
namespace {

const Vec o2{0, 0};

Polytope square(const Rat& lo, const Rat& hi) {
  return Polytope::hull({Vec{lo, lo}, Vec{hi, lo}, Vec{lo, hi}, Vec{hi, hi}});
}

TEST(Zeta, Evaluation) {
  EXPECT_EQ(zeta_eval(Zeta{1}, Rat(1, 2)), Rat(1, 2));
  EXPECT_EQ(zeta_eval(Zeta{0}, Rat(17, 3)), 0);
  const Zeta z{Rat(-2, 3)};
  EXPECT_EQ(z(Rat(1, 3)) + z(Rat(1, 6)), z(Rat(1, 2)));
  EXPECT_EQ(z(Rat(1, 2)), Rat(1, 2) * z.c);
  EXPECT_THROW(z(Rat(-1)), std::domain_error);
}

TEST(FacetVector, Examples) {
  EXPECT_EQ(facet_vector(standard_simplex(2, 2), Zeta{1}), (Vec{Rat(1, 2), Rat(1, 2)}));
  EXPECT_EQ(facet_vector(standard_facet_simplex(2, 2), Zeta{1}), o2);
  EXPECT_EQ(facet_vector(square(0, 1), Zeta{1}), (Vec{Rat(1, 2), Rat(1, 2)}));
  for (const Rat s : {Rat(1), Rat(2), Rat(3, 2), Rat(1, 5)}) {
    const Rat c = s * s / 6;
    EXPECT_EQ(facet_vector(scaled(standard_simplex(3, 3), s), Zeta{1}), (Vec{c, c, c}));
  }
}

TEST(FacetVector, ScalingLawOnStandardSimplices) {
  Rat fact = 1;
  for (int n = 2; n <= 5; ++n) {
    fact *= n;
    for (const Rat s : {Rat(1, 3), Rat(1), Rat(5, 2)}) {
      for (const Zeta z : {Zeta{1}, Zeta{Rat(-7, 4)}}) {
        Rat sn = 1;
        for (int i = 0; i < n; ++i) sn *= s;
        const Vec expected = Vec::ones(n) * (z(sn / fact) / s);
        EXPECT_EQ(facet_vector(scaled(standard_simplex(n, n), s), z), expected);
      }
    }
  }
}

TEST(FacetVector, AdditiveInZeta) {
  const Zeta a{Rat(3, 5)};
  const Zeta b{Rat(-1, 2)};
  for (int n = 2; n <= 3; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Polytope p = random_polytope(n, seed);
      EXPECT_EQ(facet_vector(p, a + b), facet_vector(p, a) + facet_vector(p, b));
    }
  }
}

TEST(FacetVector, SupportConventionsAgreeWhenOriginInside) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Polytope p = random_polytope(3, seed, {.contains_origin = true});
    EXPECT_EQ(facet_vector(p, Zeta{1}, SupportConvention::Signed), facet_vector(p, Zeta{1}));
  }
  // Facet x = -1 of [-2,-1]^2 has negative support, so the conventions differ.
  const Polytope away = square(-2, -1);
  EXPECT_NE(facet_vector(away, Zeta{1}, SupportConvention::Signed), facet_vector(away, Zeta{1}));
}

TEST(EdgeVector, Examples) {
  EXPECT_EQ(edge_vector(standard_simplex(2, 2)), (Vec{1, 1}));
  EXPECT_EQ(edge_vector(Polytope::hull({Vec{-1, 0}, Vec{1, 0}})), o2);
  EXPECT_EQ(edge_vector(Polytope::hull({Vec{-1, -1}, Vec{2, -1}, Vec{-1, 2}})), o2);
  EXPECT_EQ(edge_vector(Polytope::hull({Vec{-1, 0}, Vec{1, 0}, Vec{0, 1}})), o2);
  EXPECT_THROW(edge_vector(standard_simplex(2, 3)), std::invalid_argument);
}

TEST(EdgeVector, CaseTable) {
  // o on an edge between (-2,0) and (1,0): v + w.
  EXPECT_EQ(edge_vector(Polytope::hull({Vec{-2, 0}, Vec{1, 0}, Vec{0, 3}})), (Vec{-1, 0}));
  // Segment with o as an endpoint: 2(o + w).
  EXPECT_EQ(edge_vector(Polytope::hull({o2, Vec{3, 1}})), (Vec{6, 2}));
  // Segment missing o, point, and polygon missing o: 0.
  EXPECT_EQ(edge_vector(Polytope::hull({Vec{1, 0}, Vec{1, 1}})), o2);
  EXPECT_EQ(edge_vector(Polytope::hull({o2})), o2);
  EXPECT_EQ(edge_vector(square(1, 2)), o2);
  // o a vertex of a quadrilateral: sum of its two neighbours.
  EXPECT_EQ(edge_vector(Polytope::hull({o2, Vec{2, 0}, Vec{3, 3}, Vec{0, 1}})), (Vec{2, 1}));
}

TEST(VoZeta, Examples) {
  EXPECT_EQ(vo_zeta(standard_simplex(2, 2), Zeta{1}), (Vec{1, -1}));
  EXPECT_EQ(vo_zeta(Polytope::hull({Vec{-1, 1}, Vec{2, -2}}), Zeta{1}), o2);
  EXPECT_EQ(vo_zeta(square(-1, 1), Zeta{1}), o2);
  EXPECT_EQ(vo_zeta(Polytope::hull({o2}), Zeta{3}), o2);
  EXPECT_THROW(vo_zeta(square(1, 2), Zeta{1}), std::invalid_argument);
}

TEST(VoZeta, OriginInsideAnEdge) {
  // Counter-clockwise from o: (1,0), (0,1), (-1,0); both wedges have det 1.
  const Polytope p = Polytope::hull({Vec{-1, 0}, Vec{1, 0}, Vec{0, 1}});
  EXPECT_EQ(vo_zeta(p, Zeta{1}), (Vec{2, 0}));
  EXPECT_EQ(rotate90(vo_zeta(p, Zeta{1})) * Rat(1, 2), facet_vector(p, Zeta{1}));
  EXPECT_EQ(facet_vector(p, Zeta{1}), (Vec{0, 1}));
}

TEST(VoZeta, HalfRotationEqualsFacetVector) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Polytope p = random_polytope(2, seed, {.contains_origin = true});
    const Zeta z{ratio(static_cast<long>(seed % 5) - 2, 3)};
    EXPECT_EQ(facet_vector(p, z), rotate90(vo_zeta(p, z)) * Rat(1, 2)) << to_string(p);
  }
}

TEST(Composite2dOrigin, Examples) {
  const Polytope t2 = standard_simplex(2, 2);
  EXPECT_EQ(z_contra_2d_origin(t2, Zeta{1}, 0, 0), (Vec{Rat(1, 2), Rat(1, 2)}));
  EXPECT_EQ(z_contra_2d_origin(t2, Zeta{0}, 0, 1), (Vec{-1, 1}));
  EXPECT_EQ(z_contra_2d_origin(Polytope::hull({o2}), Zeta{5}, 3, 7), o2);
  // mv(T2) = (1/6, 1/6) rotates to (-1/6, 1/6).
  EXPECT_EQ(z_contra_2d_origin(t2, Zeta{0}, 6, 0), (Vec{-1, 1}));
  EXPECT_THROW(z_contra_2d_origin(square(1, 2), Zeta{1}, 0, 0), std::invalid_argument);
}

TEST(CompositeNd, Examples) {
  const Zeta z1{Rat(2, 3)};
  const Zeta z2{Rat(-5, 4)};
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Polytope p = random_polytope(3, seed, {.contains_origin = true});
    EXPECT_EQ(z_contra_nd(p, z1, z2), facet_vector(p, z1 + z2));
  }
  const Polytope face = standard_facet_simplex(3, 3);
  const Rat c = z2(Rat(1, 6));
  EXPECT_EQ(z_contra_nd(face, z1, z2), (Vec{c, c, c}));
  EXPECT_TRUE(z_contra_nd(random_polytope(3, 9), Zeta{0}, Zeta{0}).is_zero());
}

TEST(Composite2dGeneral, Examples) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Polytope p = random_polytope(2, seed);
    std::vector<Vec> pts = p.vertices();
    for (const auto& v : {Vec{5, 0}, Vec{-5, 0}, Vec{0, 5}, Vec{0, -5}}) pts.push_back(v);
    p = Polytope::hull(pts);
    const Zeta z1{Rat(3, 2)};
    EXPECT_EQ(z_contra_2d_general(p, Params2D{z1, Zeta{0}, 0, 0, 0, 0}), facet_vector(p, z1));
  }
  Params2D only_visible;
  only_visible.c2_tilde = 1;
  EXPECT_EQ(z_contra_2d_general(Polytope::hull({Vec{1, 0}}), only_visible), (Vec{0, 2}));
  // Visible chain (1,2),(1,1),(2,1); conv with o is the triangle o,(2,1),(1,2),
  // so ve = (3,3) and the rotation gives (-3,3).
  EXPECT_EQ(z_contra_2d_general(square(1, 2), only_visible), (Vec{-3, 3}));
}

TEST(Composite2dGeneral, ReducesToOriginFormulaOnOriginPolytopes) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Polytope p = random_polytope(2, seed, {.contains_origin = true});
    const Params2D params{Zeta{Rat(1, 3)}, Zeta{Rat(2, 3)}, Rat(1, 2), Rat(-3), Rat(1, 4), Rat(7)};
    const Vec expected =
        z_contra_2d_origin(p, params.zeta1 + params.zeta2, params.c1 + params.c1_tilde, params.c2);
    EXPECT_EQ(z_contra_2d_general(p, params), expected);
  }
}

}  // namespace
}  // namespace polyval
