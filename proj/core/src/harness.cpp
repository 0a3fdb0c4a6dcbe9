#include "polyval/harness.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace polyval {

void CheckReport::check(bool ok, const std::function<Witness()>& witness) {
  if (ok) return;
  ++failures;
  witnesses.push_back(witness());
}

bool CheckReport::passed() const {
  if (informational) return true;
  return expected_fail ? failures > 0 : failures == 0;
}

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finaliser over the pair
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

constexpr int kMaxAttempts = 64;
constexpr int kShearSteps = 6;

Vec random_point(int n, int max_coord, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> half_units(-2 * max_coord, 2 * max_coord);
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = ratio(half_units(rng), 2);
  return v;
}

Vec random_direction(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  Vec v(n);
  while (v.is_zero()) {
    for (int i = 0; i < n; ++i) v[i] = d(rng);
  }
  return v;
}

Rat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 4);
  const int p = num(rng);
  return ratio(p, den(rng));
}

Vec vertex_centroid(const Polytope& p) {
  Vec c = Vec::zero(p.ambient_dim());
  for (const auto& v : p.vertices()) c += v;
  return c * (Rat(1) / Rat(static_cast<long>(p.vertices().size())));
}

// Hyperplane meeting the interior of the full-dimensional P. In the origin
// domain it also passes through o.
Hyperplane random_cut(const Polytope& p, Domain domain, std::mt19937_64& rng) {
  const Vec c = vertex_centroid(p);
  Vec a = random_direction(p.ambient_dim(), rng);
  if (domain == Domain::General) return Hyperplane(a, dot(a, c));
  // Project a onto c's orthogonal complement so H contains both o and c.
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Vec b = a;
    if (!c.is_zero()) b -= c * (dot(a, c) / dot(c, c));
    if (!b.is_zero()) return Hyperplane(b, 0);
    a = random_direction(p.ambient_dim(), rng);
  }
  throw std::runtime_error("no hyperplane through the origin found");
}

std::string describe(const Polytope& p) { return to_string(p); }

}  // namespace

Polytope random_polytope(int n, std::uint64_t seed, const RandomPolytopeOptions& opts) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  if (opts.max_pts < n + 1) throw std::invalid_argument("max_pts must be at least n+1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> count(n + 1, opts.max_pts);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const int m = count(rng);
    std::vector<Vec> pts;
    for (int i = 0; i < m; ++i) pts.push_back(random_point(n, opts.max_coord, rng));
    if (opts.contains_origin) pts.push_back(Vec::zero(n));
    Polytope p = Polytope::hull(pts);
    if (p.full_dimensional()) return p;
  }
  throw std::runtime_error("could not generate a full-dimensional polytope");
}

CheckReport check_valuation_cut(const NamedValuation& z, int n, std::uint64_t seed, int cases, Domain domain) {
  CheckReport r;
  r.suite = "valuation:" + z.name + ":n" + std::to_string(n);
  r.seed = seed;
  for (int i = 0; i < cases; ++i) {
    const std::uint64_t s = case_seed(seed, static_cast<std::uint64_t>(i));
    std::mt19937_64 rng(s);
    const Polytope p = random_polytope(n, s, {.contains_origin = domain == Domain::OriginContaining});
    const Hyperplane h = random_cut(p, domain, rng);
    const CutResult pieces = cut(p, h);
    ++r.cases_run;
    if (!pieces.plus || !pieces.minus || !pieces.section) {
      r.check(false, [&] { return Witness{describe(p), "cut meeting the interior", "missing piece"}; });
      continue;
    }
    const Vec lhs = z.eval(p) + z.eval(*pieces.section);
    const Vec rhs = z.eval(*pieces.plus) + z.eval(*pieces.minus);
    r.check(lhs == rhs, [&] {
      return Witness{describe(p) + " cut by " + to_string(h.normal()) + "=" + to_string(h.offset()),
                     to_string(lhs), to_string(rhs)};
    });
  }
  return r;
}

CheckReport check_contravariance(const NamedValuation& z, int n, std::uint64_t seed, int cases, Domain domain,
                                 Intertwining kind) {
  CheckReport r;
  r.suite = std::string(kind == Intertwining::Contravariant ? "contravariance:" : "covariance:") + z.name + ":n" +
            std::to_string(n);
  r.seed = seed;
  const std::vector<Mat> library = sigma_library(n);
  for (int i = 0; i < cases; ++i) {
    const std::uint64_t s = case_seed(seed, static_cast<std::uint64_t>(i));
    const Polytope p = random_polytope(n, s, {.contains_origin = domain == Domain::OriginContaining});
    const Vec base = z.eval(p);
    std::vector<Mat> transforms{random_unimodular(n, s ^ 0x5bd1e995ULL, kShearSteps)};
    transforms.insert(transforms.end(), library.begin(), library.end());
    ++r.cases_run;
    for (const auto& phi : transforms) {
      const Mat action = kind == Intertwining::Contravariant ? inverse_transpose(phi) : phi;
      const Vec expected = action * base;
      const Vec actual = z.eval(transform(phi, p));
      r.check(expected == actual, [&] {
        return Witness{describe(p) + " under " + to_string(phi), to_string(expected), to_string(actual)};
      });
    }
  }
  return r;
}

CheckReport check_simplicity(int n, std::uint64_t seed, int cases, const Zeta& z) {
  CheckReport r;
  r.suite = "simplicity:n" + std::to_string(n) + ":zeta=" + to_string(z.c);
  r.seed = seed;
  for (int i = 0; i < cases; ++i) {
    const std::uint64_t s = case_seed(seed, static_cast<std::uint64_t>(i));
    std::mt19937_64 rng(s);
    std::vector<Vec> pts;
    std::string kind;
    switch (i % 3) {
      case 0:
        kind = "point";
        pts.push_back(random_point(n, 3, rng));
        break;
      case 1:
        kind = "segment";
        pts.push_back(random_point(n, 3, rng));
        do {
          pts.resize(1);
          pts.push_back(random_point(n, 3, rng));
        } while (pts[0] == pts[1]);
        break;
      default: {
        kind = "hyperplanar";
        // Points on the affine hyperplane x_n = c, redrawn until they span it.
        const Rat level = ratio(std::uniform_int_distribution<int>(-4, 4)(rng), 2);
        for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
          pts.clear();
          const int m = std::uniform_int_distribution<int>(n, n + 4)(rng);
          for (int j = 0; j < m; ++j) {
            Vec v = random_point(n, 3, rng);
            v[n - 1] = level;
            pts.push_back(std::move(v));
          }
          if (Polytope::hull(pts).aff_dim() == n - 1) break;
        }
        break;
      }
    }
    const Mat phi = random_unimodular(n, s ^ 0x27d4eb2fULL, kShearSteps);
    const Polytope p = transform(phi, Polytope::hull(pts));
    ++r.tallies[kind];
    ++r.cases_run;
    const Vec fv = facet_vector(p, z);
    r.check(p.aff_dim() < n && fv.is_zero(),
            [&] { return Witness{kind + " " + describe(p), "zero vector", to_string(fv)}; });
  }
  return r;
}

CheckReport check_minkowski(int n, std::uint64_t seed, int cases) {
  CheckReport r;
  r.suite = "minkowski:n" + std::to_string(n);
  r.seed = seed;
  for (int i = 0; i < cases; ++i) {
    const Polytope p = random_polytope(n, case_seed(seed, static_cast<std::uint64_t>(i)));
    Vec sum = Vec::zero(n);
    for (const auto& f : p.facets()) sum += vector_area(p, f);
    ++r.cases_run;
    r.check(sum.is_zero(), [&] { return Witness{describe(p), "zero vector", to_string(sum)}; });
  }
  return r;
}

CheckReport check_hfv(std::uint64_t seed, int cases, const Zeta& z) {
  CheckReport r;
  r.suite = "hfv";
  r.seed = seed;
  const Vec o = Vec::zero(2);
  for (int i = 0; i < cases; ++i) {
    const std::uint64_t s = case_seed(seed, static_cast<std::uint64_t>(i));
    std::mt19937_64 rng(s);
    std::vector<Vec> pts;
    switch (i % 4) {
      case 0:  // o among the generators: usually a vertex
        pts = random_polytope(2, s).vertices();
        pts.push_back(o);
        break;
      case 1: {  // antipodal pair: o on a chord, often on an edge
        const Polytope q = random_polytope(2, s);
        pts = q.vertices();
        const Vec a = pts.front();
        if (!a.is_zero()) pts.push_back(-a);
        pts.push_back(o);
        break;
      }
      case 2: {  // axis cross: o interior
        pts = random_polytope(2, s).vertices();
        const Rat m = ratio(std::uniform_int_distribution<int>(1, 4)(rng), 2);
        pts.push_back(Vec{m, 0});
        pts.push_back(Vec{-m, 0});
        pts.push_back(Vec{0, m});
        pts.push_back(Vec{0, -m});
        break;
      }
      default: {  // half-plane polygon with o inside a boundary edge
        const Vec a = random_direction(2, rng);
        pts = {a, -a};
        const Vec up = rotate90(a);
        const int m = std::uniform_int_distribution<int>(1, 4)(rng);
        for (int j = 0; j < m; ++j) {
          Vec v = random_point(2, 3, rng);
          if (dot(v, up) < 0) v = -v;
          pts.push_back(v);
        }
        break;
      }
    }
    const Polytope p = Polytope::hull(pts);
    std::string category;
    if (p.aff_dim() < 2) category = "degenerate";
    else {
      const auto& fs = p.facets();
      const bool on_boundary = std::any_of(fs.begin(), fs.end(), [](const Facet& f) { return f.support == 0; });
      if (!on_boundary) category = "interior";
      else if (std::find(p.vertices().begin(), p.vertices().end(), o) != p.vertices().end()) category = "vertex";
      else category = "edge";
    }
    ++r.tallies[category];
    ++r.cases_run;
    const Vec lhs = facet_vector(p, z);
    const Vec rhs = rotate90(vo_zeta(p, z)) * Rat(1, 2);
    r.check(lhs == rhs, [&] { return Witness{category + " " + describe(p), to_string(lhs), to_string(rhs)}; });
  }
  return r;
}

CheckReport check_cocontra(std::uint64_t seed, int cases) {
  CheckReport r;
  r.suite = "cocontra";
  r.seed = seed;
  const Mat rho = rotation90();
  const Zeta id{1};
  for (int i = 0; i < cases; ++i) {
    const std::uint64_t s = case_seed(seed, static_cast<std::uint64_t>(i));
    const Polytope p = random_polytope(2, s);
    const Mat phi = random_unimodular(2, s ^ 0x68e31da4ULL, kShearSteps);
    const Mat phi_it = inverse_transpose(phi);
    const Polytope image = transform(phi, p);
    ++r.cases_run;

    r.check(rho * phi == phi_it * rho,
            [&] { return Witness{"rotation identity for " + to_string(phi), to_string(phi_it * rho), to_string(rho * phi)}; });

    const Vec rot_mv = rotate90(moment(image));
    const Vec rot_mv_expected = phi_it * rotate90(moment(p));
    ++r.tallies["rot-mv-contravariant"];
    r.check(rot_mv == rot_mv_expected, [&] {
      return Witness{"rot mv " + describe(p) + " under " + to_string(phi), to_string(rot_mv_expected), to_string(rot_mv)};
    });

    const Vec unrot_fv = rotate90_inverse(facet_vector(image, id));
    const Vec unrot_fv_expected = phi * rotate90_inverse(facet_vector(p, id));
    ++r.tallies["unrot-fv-covariant"];
    r.check(unrot_fv == unrot_fv_expected, [&] {
      return Witness{"rot^-1 fv " + describe(p) + " under " + to_string(phi), to_string(unrot_fv_expected),
                     to_string(unrot_fv)};
    });
  }
  return r;
}

CheckReport check_extk(const NamedValuation& z, int n, const std::vector<Rat>& lambdas) {
  CheckReport r;
  r.suite = "extk:" + z.name + ":n" + std::to_string(n);
  const Mat id = Mat::identity(n);
  for (const auto& lambda : lambdas) {
    const Mat phi1 = make_phi1(lambda, n);
    const Mat psi1 = make_psi1(lambda, n);
    const Mat phi1_it = inverse_transpose(phi1);
    const Mat psi1_it = inverse_transpose(psi1);
    Vec normal = Vec::zero(n);
    normal[0] = 1 - lambda;
    normal[1] = -lambda;
    const Hyperplane h(normal, 0);
    for (int i = 2; i < n; ++i) {
      const std::string tag = "i=" + std::to_string(i) + " lambda=" + to_string(lambda);
      const Polytope t = standard_simplex(i, n);
      const Polytope hat = hat_simplex(i, n);
      const CutResult pieces = cut(t, h);
      ++r.cases_run;

      const bool pieces_ok = pieces.plus && pieces.minus && pieces.section && *pieces.plus == transform(psi1, t) &&
                             *pieces.minus == transform(phi1, t) && *pieces.section == transform(phi1, hat);
      r.check(pieces_ok, [&] { return Witness{tag + " pieces", "psi1 T, phi1 T, phi1 hatT", "different pieces"}; });
      if (!pieces_ok) continue;

      const Vec lhs = z.eval(t) + z.eval(*pieces.section);
      const Vec rhs = z.eval(*pieces.plus) + z.eval(*pieces.minus);
      r.check(lhs == rhs, [&] { return Witness{tag + " inclusion-exclusion", to_string(lhs), to_string(rhs)}; });

      Mat combined(n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) combined(a, b) = phi1_it(a, b) + psi1_it(a, b) - id(a, b);
      const Vec mat_lhs = combined * z.eval(t);
      const Vec mat_rhs = phi1_it * z.eval(hat);
      r.check(mat_lhs == mat_rhs, [&] { return Witness{tag + " matrix form", to_string(mat_lhs), to_string(mat_rhs)}; });
    }
  }
  return r;
}

CheckReport check_extn(const NamedValuation& z, int n, const std::vector<Rat>& lambdas, const std::vector<Rat>& scales) {
  CheckReport r;
  r.suite = "extn:" + z.name + ":n" + std::to_string(n);
  for (const auto& lambda : lambdas) {
    const Mat phi2 = make_phi2(lambda, n);
    const Mat psi2 = make_psi2(lambda, n);
    Vec normal = Vec::zero(n);
    normal[0] = 1 - lambda;
    normal[1] = -lambda;
    const Hyperplane h(normal, 0);
    for (const auto& s : scales) {
      const std::string tag = "s=" + to_string(s) + " lambda=" + to_string(lambda);
      const Polytope t = scaled(standard_simplex(n, n), s);
      const Polytope hat = scaled(hat_simplex(n, n), s);
      const Polytope minus_image = transform(phi2, t);
      const Polytope plus_image = transform(psi2, t);
      const Polytope section_image = transform(phi2, hat);
      const CutResult pieces = cut(t, h);
      ++r.cases_run;

      const bool pieces_ok = pieces.plus && pieces.minus && pieces.section && *pieces.plus == plus_image &&
                             *pieces.minus == minus_image && *pieces.section == section_image;
      r.check(pieces_ok, [&] { return Witness{tag + " pieces", "psi2 sT, phi2 sT, phi2 s hatT", "different pieces"}; });
      if (!pieces_ok) continue;

      const Vec lhs = z.eval(t) + z.eval(*pieces.section);
      const Vec rhs = z.eval(*pieces.plus) + z.eval(*pieces.minus);
      r.check(lhs == rhs, [&] { return Witness{tag + " inclusion-exclusion", to_string(lhs), to_string(rhs)}; });

      const Vec img_lhs = z.eval(t) + z.eval(section_image);
      const Vec img_rhs = z.eval(minus_image) + z.eval(plus_image);
      r.check(img_lhs == img_rhs,
              [&] { return Witness{tag + " transformed simplices", to_string(img_lhs), to_string(img_rhs)}; });
    }
  }
  return r;
}

namespace {

void absorb(CheckReport& into, const CheckReport& part) {
  into.cases_run += part.cases_run;
  into.failures += part.failures;
  into.tallies[part.suite] += part.cases_run;
  for (const auto& w : part.witnesses) {
    into.witnesses.push_back({part.suite + ": " + w.input, w.expected, w.actual});
  }
}

}  // namespace

CheckReport check_composites(std::uint64_t seed, int cases) {
  CheckReport r;
  r.suite = "composites";
  r.seed = seed;
  std::mt19937_64 rng(seed);
  // A handful of random parameter sets; each runs both suites.
  constexpr int kParameterSets = 3;
  const int per_set = std::max(1, cases / kParameterSets);
  for (int k = 0; k < kParameterSets; ++k) {
    const std::uint64_t s = case_seed(seed, static_cast<std::uint64_t>(k));
    const Zeta z1{random_rat(rng)};
    const Zeta z2{random_rat(rng)};
    const Rat c1 = random_rat(rng);
    Rat c2 = random_rat(rng);
    if (c2 == 0) c2 = 1;
    Params2D params{z1, z2, c1, c2, random_rat(rng), random_rat(rng)};
    if (params.c2_tilde == 0) params.c2_tilde = -1;

    const std::string tag = "[" + std::to_string(k) + "]";
    const NamedValuation fv{"fv" + tag, [z1](const Polytope& p) { return facet_vector(p, z1); }};
    const NamedValuation thm12{"thm12" + tag,
                               [z1, c1, c2](const Polytope& p) { return z_contra_2d_origin(p, z1, c1, c2); }};
    const NamedValuation thm13{"thm13" + tag, [z1, z2](const Polytope& p) { return z_contra_nd(p, z1, z2); }};
    const NamedValuation thm14{"thm14" + tag, [params](const Polytope& p) { return z_contra_2d_general(p, params); }};

    for (int n : {3, 4}) {
      absorb(r, check_valuation_cut(fv, n, s, per_set, Domain::OriginContaining));
      absorb(r, check_contravariance(fv, n, s, per_set, Domain::OriginContaining));
    }
    absorb(r, check_valuation_cut(thm12, 2, s, per_set, Domain::OriginContaining));
    absorb(r, check_contravariance(thm12, 2, s, per_set, Domain::OriginContaining));
    for (int n : {3, 4}) {
      absorb(r, check_valuation_cut(thm13, n, s, per_set));
      absorb(r, check_contravariance(thm13, n, s, per_set));
    }
    absorb(r, check_valuation_cut(thm14, 2, s, per_set));
    absorb(r, check_contravariance(thm14, 2, s, per_set));
  }
  return r;
}

NamedValuation vertex_count_valuation() {
  return {"vertex-count", [](const Polytope& p) {
            return Vec::ones(p.ambient_dim()) * Rat(static_cast<long>(p.vertices().size()));
          }};
}

std::vector<CheckReport> negative_controls(std::uint64_t seed, int cases) {
  std::vector<CheckReport> out;
  for (int n : {2, 3}) {
    CheckReport r = check_valuation_cut(vertex_count_valuation(), n, seed, cases);
    r.expected_fail = true;
    out.push_back(std::move(r));
  }
  const NamedValuation mv{"mv", [](const Polytope& p) { return moment(p); }};
  for (int n : {2, 3}) {
    CheckReport r = check_contravariance(mv, n, seed, cases);
    r.expected_fail = true;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckReport> probe_support_convention(int n, std::uint64_t seed, int cases) {
  std::vector<CheckReport> out;
  for (auto convention : {SupportConvention::Absolute, SupportConvention::Signed}) {
    const bool absolute = convention == SupportConvention::Absolute;
    const NamedValuation fv{absolute ? "fv|h|" : "fv-signed-h",
                            [convention](const Polytope& p) { return facet_vector(p, Zeta{1}, convention); }};
    CheckReport r = check_valuation_cut(fv, n, seed, cases);
    r.informational = true;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace polyval
