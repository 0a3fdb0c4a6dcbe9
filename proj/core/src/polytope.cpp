#include "polyval/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace polyval {

namespace {

// Reduced row echelon basis of aff(points) - points[0]. The pivot columns
// form a chart: projecting onto them is injective on the affine hull.
struct AffineFrame {
  Vec origin;
  std::vector<Vec> basis;
  std::vector<int> chart;
};

AffineFrame affine_frame(std::span<const Vec> pts) {
  AffineFrame f;
  f.origin = pts.front();
  const int n = f.origin.dim();
  std::vector<Vec> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) rows.push_back(pts[i] - f.origin);

  std::size_t r = 0;
  for (int c = 0; c < n && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    rows[r] *= Rat(1) / rows[r][c];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      rows[i] -= rows[r] * rows[i][c];
    }
    f.chart.push_back(c);
    ++r;
  }
  rows.resize(r);
  f.basis = std::move(rows);
  return f;
}

Vec project(const Vec& x, const std::vector<int>& chart) {
  Vec y(static_cast<int>(chart.size()));
  for (std::size_t i = 0; i < chart.size(); ++i) y[static_cast<int>(i)] = x[chart[i]];
  return y;
}

// Integer vector parallel to v with coprime entries, same orientation.
Vec primitive(const Vec& v) {
  mpz_class l = 1;
  for (const auto& c : v.coords()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  mpz_class g = 0;
  std::vector<mpz_class> ints;
  for (const auto& c : v.coords()) {
    mpz_class x = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    ints.push_back(std::move(x));
  }
  Vec out(v.dim());
  for (int i = 0; i < v.dim(); ++i) out[i] = Rat(ints[static_cast<std::size_t>(i)] / g);
  return out;
}

Rat small_det(std::vector<Vec> rows) {
  if (rows.empty()) return 1;
  const Mat m = Mat::from_columns(rows);
  return det(m);
}

// Vector orthogonal to all k-1 rows (each of length k); its norm is the
// (k-1)-volume of the parallelotope they span.
Vec cross(const std::vector<Vec>& rows, int k) {
  Vec out(k);
  for (int j = 0; j < k; ++j) {
    std::vector<Vec> minor;
    for (const auto& r : rows) {
      Vec m(k - 1);
      for (int c = 0, t = 0; c < k; ++c) {
        if (c != j) m[t++] = r[c];
      }
      minor.push_back(std::move(m));
    }
    const Rat d = small_det(std::move(minor));
    out[j] = (j % 2 == 0) ? d : Rat(-d);
  }
  return out;
}

bool next_combination(std::vector<int>& idx, int m) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
  if (i < 0) return false;
  ++idx[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

// Facets of the full-dimensional hull of `pts` in R^k, by scanning every
// hyperplane spanned by k of the points.
std::vector<detail::ChartFacet> enumerate_facets(const std::vector<Vec>& pts, int k) {
  const int m = static_cast<int>(pts.size());
  std::vector<detail::ChartFacet> out;
  if (m < k) return out;
  std::set<std::pair<Vec, Rat>> seen;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  do {
    const Vec& base = pts[static_cast<std::size_t>(idx[0])];
    std::vector<Vec> diffs;
    for (int j = 1; j < k; ++j) diffs.push_back(pts[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])] - base);
    Vec normal = cross(diffs, k);
    if (normal.is_zero()) continue;
    normal = primitive(normal);
    for (int j = 0; j < k; ++j) {
      if (normal[j] != 0) {
        if (normal[j] < 0) normal = -normal;
        break;
      }
    }
    const Rat offset = dot(base, normal);
    if (!seen.emplace(normal, offset).second) continue;

    bool above = false;
    bool below = false;
    std::vector<int> on;
    for (int i = 0; i < m; ++i) {
      const int s = sgn(dot(pts[static_cast<std::size_t>(i)], normal) - offset);
      if (s > 0) above = true;
      if (s < 0) below = true;
      if (s == 0) on.push_back(i);
    }
    if (above && below) continue;
    if (above) out.push_back({-normal, Rat(-offset), std::move(on)});
    else out.push_back({normal, offset, std::move(on)});
  } while (next_combination(idx, m));
  return out;
}

Rat factorial(int n) {
  Rat f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Rat simplex_volume(const std::vector<Vec>& v) {
  const int n = static_cast<int>(v.size()) - 1;
  std::vector<Vec> cols;
  for (int i = 1; i <= n; ++i) cols.push_back(v[static_cast<std::size_t>(i)] - v[0]);
  return abs(det(Mat::from_columns(cols))) / factorial(n);
}

std::vector<Vec> facet_points(const Polytope& p, const std::vector<int>& ids) {
  std::vector<Vec> pts;
  for (int id : ids) pts.push_back(p.vertices()[static_cast<std::size_t>(id)]);
  return pts;
}

int chart_rank(const Polytope& p, const std::vector<std::size_t>& facet_ids) {
  std::vector<Vec> normals;
  for (auto f : facet_ids) normals.push_back(p.chart_facets()[f].normal);
  return rank(normals);
}

}  // namespace

Hyperplane::Hyperplane(Vec normal, Rat offset) : normal_(std::move(normal)), offset_(std::move(offset)) {
  if (normal_.is_zero()) throw std::invalid_argument("hyperplane normal must be nonzero");
}

int Hyperplane::side(const Vec& x) const { return sgn(dot(x, normal_) - offset_); }

Polytope Polytope::hull(std::span<const Vec> points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  const int n = points.front().dim();
  for (const auto& pt : points) {
    if (pt.dim() != n) throw std::invalid_argument("points of mixed dimension");
  }
  std::vector<Vec> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Polytope p;
  p.ambient_dim_ = n;
  AffineFrame frame = affine_frame(pts);
  p.aff_dim_ = static_cast<int>(frame.chart.size());
  p.chart_ = frame.chart;
  p.affine_basis_ = std::move(frame.basis);
  const int k = p.aff_dim_;

  if (k == 0) {
    p.vertices_ = {pts.front()};
    return p;
  }

  std::vector<Vec> projected;
  for (const auto& pt : pts) projected.push_back(project(pt, p.chart_));
  auto chart_facets = enumerate_facets(projected, k);

  // A point is a vertex iff the normals of the facets through it span R^k.
  std::vector<std::vector<std::size_t>> incident(pts.size());
  for (std::size_t f = 0; f < chart_facets.size(); ++f) {
    for (int id : chart_facets[f].vertex_ids) incident[static_cast<std::size_t>(id)].push_back(f);
  }
  std::vector<int> remap(pts.size(), -1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<Vec> normals;
    for (auto f : incident[i]) normals.push_back(chart_facets[f].normal);
    if (rank(normals) == k) {
      remap[i] = static_cast<int>(p.vertices_.size());
      p.vertices_.push_back(pts[i]);
    }
  }
  // pts is sorted, so vertices_ is sorted as well.
  for (auto& f : chart_facets) {
    std::vector<int> ids;
    for (int id : f.vertex_ids) {
      if (remap[static_cast<std::size_t>(id)] >= 0) ids.push_back(remap[static_cast<std::size_t>(id)]);
    }
    f.vertex_ids = std::move(ids);
  }
  std::sort(chart_facets.begin(), chart_facets.end(),
            [](const auto& a, const auto& b) { return a.normal < b.normal; });
  p.chart_facets_ = std::move(chart_facets);

  if (k == n) {
    for (const auto& f : p.chart_facets_) p.facets_.push_back({f.normal, f.offset, f.vertex_ids});
  }
  return p;
}

const std::vector<Facet>& Polytope::facets() const {
  if (!full_dimensional()) throw std::invalid_argument("not full-dimensional");
  return facets_;
}

bool Polytope::contains(const Vec& x) const {
  if (x.dim() != ambient_dim_) throw std::invalid_argument("dimension mismatch");
  Vec rest = x - vertices_.front();
  for (std::size_t i = 0; i < chart_.size(); ++i) {
    const Rat c = rest[chart_[i]];
    if (c != 0) rest -= affine_basis_[i] * c;
  }
  if (!rest.is_zero()) return false;
  const Vec y = project(x, chart_);
  for (const auto& f : chart_facets_) {
    if (dot(y, f.normal) > f.offset) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> Polytope::edges() const {
  std::vector<std::pair<int, int>> out;
  const int v = static_cast<int>(vertices_.size());
  if (aff_dim_ == 0) return out;
  if (aff_dim_ == 1) return {{0, 1}};
  std::vector<std::vector<std::size_t>> incident(vertices_.size());
  for (std::size_t f = 0; f < chart_facets_.size(); ++f) {
    for (int id : chart_facets_[f].vertex_ids) incident[static_cast<std::size_t>(id)].push_back(f);
  }
  for (int i = 0; i < v; ++i) {
    for (int j = i + 1; j < v; ++j) {
      std::vector<std::size_t> common;
      std::set_intersection(incident[static_cast<std::size_t>(i)].begin(), incident[static_cast<std::size_t>(i)].end(),
                            incident[static_cast<std::size_t>(j)].begin(), incident[static_cast<std::size_t>(j)].end(),
                            std::back_inserter(common));
      if (chart_rank(*this, common) == aff_dim_ - 1) out.emplace_back(i, j);
    }
  }
  return out;
}

std::string to_string(const Polytope& p) {
  std::ostringstream os;
  os << "conv{";
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (i) os << ", ";
    os << to_string(p.vertices()[i]);
  }
  os << '}';
  return os.str();
}

Polytope convex_hull(std::span<const Vec> points) { return Polytope::hull(points); }

int affine_dim(const Polytope& p) { return p.aff_dim(); }

const std::vector<Facet>& facets(const Polytope& p) { return p.facets(); }

Rat support(const Polytope& p, const Vec& m) {
  if (m.is_zero()) throw std::invalid_argument("support direction must be nonzero");
  Rat best = dot(p.vertices().front(), m);
  for (const auto& v : p.vertices()) best = std::max(best, dot(v, m));
  return best;
}

Rat cone_volume(const Polytope& p, const Facet& f) {
  const Polytope face = Polytope::hull(facet_points(p, f.vertex_ids));
  const Vec o = Vec::zero(p.ambient_dim());
  Rat total = 0;
  for (auto& s : triangulate(face)) {
    s.vertices.insert(s.vertices.begin(), o);
    total += simplex_volume(s.vertices);
  }
  return total;
}

Vec vector_area(const Polytope& p, const Facet& f) {
  const int n = p.ambient_dim();
  const Polytope face = Polytope::hull(facet_points(p, f.vertex_ids));
  Vec total = Vec::zero(n);
  for (const auto& s : triangulate(face)) {
    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < s.vertices.size(); ++i) diffs.push_back(s.vertices[i] - s.vertices[0]);
    Vec c = cross(diffs, n);
    if (dot(c, f.normal) < 0) c = -c;
    total += c;
  }
  return total * (Rat(1) / factorial(n - 1));
}

Rat volume(const Polytope& p) {
  if (!p.full_dimensional()) return 0;
  Rat total = 0;
  for (const auto& s : triangulate(p)) total += simplex_volume(s.vertices);
  return total;
}

Vec moment(const Polytope& p) {
  const int n = p.ambient_dim();
  Vec total = Vec::zero(n);
  if (!p.full_dimensional()) return total;
  for (const auto& s : triangulate(p)) {
    Vec centroid = Vec::zero(n);
    for (const auto& v : s.vertices) centroid += v;
    total += centroid * (simplex_volume(s.vertices) / (n + 1));
  }
  return total;
}

std::vector<Simplex> triangulate(const Polytope& p) {
  const int k = p.aff_dim();
  if (static_cast<int>(p.vertices().size()) == k + 1) return {Simplex{p.vertices()}};
  const Vec& apex = p.vertices().front();
  std::vector<Simplex> out;
  for (const auto& f : p.chart_facets()) {
    if (f.vertex_ids.front() == 0) continue;  // ids are sorted; 0 is the apex
    const Polytope face = Polytope::hull(facet_points(p, f.vertex_ids));
    for (auto& s : triangulate(face)) {
      s.vertices.insert(s.vertices.begin(), apex);
      out.push_back(std::move(s));
    }
  }
  return out;
}

CutResult cut(const Polytope& p, const Hyperplane& h) {
  const auto& verts = p.vertices();
  std::vector<int> side;
  for (const auto& v : verts) side.push_back(h.side(v));

  std::vector<Vec> plus, minus, section;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (side[i] >= 0) plus.push_back(verts[i]);
    if (side[i] <= 0) minus.push_back(verts[i]);
    if (side[i] == 0) section.push_back(verts[i]);
  }
  for (auto [i, j] : p.edges()) {
    const auto a = static_cast<std::size_t>(i);
    const auto b = static_cast<std::size_t>(j);
    if (side[a] * side[b] >= 0) continue;
    const Vec d = verts[b] - verts[a];
    const Rat t = (h.offset() - dot(verts[a], h.normal())) / dot(d, h.normal());
    const Vec x = verts[a] + d * t;
    plus.push_back(x);
    minus.push_back(x);
    section.push_back(x);
  }
  CutResult r;
  if (!plus.empty()) r.plus = Polytope::hull(plus);
  if (!minus.empty()) r.minus = Polytope::hull(minus);
  if (!section.empty()) r.section = Polytope::hull(section);
  return r;
}

Polytope conv_with_origin(const Polytope& p) {
  std::vector<Vec> pts = p.vertices();
  pts.push_back(Vec::zero(p.ambient_dim()));
  return Polytope::hull(pts);
}

Polytope transform(const Mat& m, const Polytope& p) {
  std::vector<Vec> pts;
  for (const auto& v : p.vertices()) pts.push_back(m * v);
  return Polytope::hull(pts);
}

std::vector<Vec> ccw_vertices(const Polytope& p) {
  if (p.ambient_dim() != 2) throw std::invalid_argument("ccw_vertices requires a planar polytope");
  std::vector<Vec> verts = p.vertices();
  if (!p.full_dimensional()) return verts;
  Vec c = Vec::zero(2);
  for (const auto& v : verts) c += v;
  c *= Rat(1, static_cast<unsigned long>(verts.size()));
  auto half = [](const Vec& d) { return (d[1] > 0 || (d[1] == 0 && d[0] > 0)) ? 0 : 1; };
  auto before = [&](const Vec& a, const Vec& b) {
    const Vec da = a - c;
    const Vec db = b - c;
    if (half(da) != half(db)) return half(da) < half(db);
    return da[0] * db[1] - da[1] * db[0] > 0;
  };
  std::sort(verts.begin(), verts.end(), before);
  const auto first = std::min_element(verts.begin(), verts.end());
  std::rotate(verts.begin(), first, verts.end());
  return verts;
}

std::vector<Vec> visible_vertices_ccw(const Polytope& p) {
  if (p.ambient_dim() != 2) throw std::invalid_argument("visible_vertices_ccw requires a planar polytope");
  const Vec o = Vec::zero(2);
  if (p.contains(o)) return {};
  const auto& verts = p.vertices();
  auto det2 = [](const Vec& a, const Vec& b) { return Rat(a[0] * b[1] - a[1] * b[0]); };

  if (p.aff_dim() == 0) return {verts.front()};
  if (p.aff_dim() == 1) {
    const Vec& a = verts[0];
    const Vec& b = verts[1];
    const Rat d = det2(a, b);
    if (d > 0) return {a, b};
    if (d < 0) return {b, a};
    // o on the supporting line but outside the segment: only the near end.
    return {dot(a, a) < dot(b, b) ? a : b};
  }

  // Edge i = [L[i], L[i+1]] faces the origin iff its support value is
  // negative, i.e. det(L[i], L[i+1]) < 0. The visible vertices are the
  // endpoints of the facing edges, which form one contiguous run.
  const std::vector<Vec> ring = ccw_vertices(p);
  const std::size_t m = ring.size();
  std::vector<bool> facing(m);
  for (std::size_t i = 0; i < m; ++i) facing[i] = det2(ring[i], ring[(i + 1) % m]) < 0;
  std::size_t start = m;
  for (std::size_t i = 0; i < m; ++i) {
    if (facing[i] && !facing[(i + m - 1) % m]) {
      start = i;
      break;
    }
  }
  if (start == m) throw std::logic_error("no visible chain for a polygon missing the origin");
  std::vector<Vec> chain{ring[start]};
  for (std::size_t i = start; facing[i % m]; ++i) chain.push_back(ring[(i + 1) % m]);
  return chain;
}

Polytope standard_simplex(int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("simplex index out of range");
  std::vector<Vec> pts{Vec::zero(n)};
  for (int i = 0; i < k; ++i) pts.push_back(Vec::unit(n, i));
  return Polytope::hull(pts);
}

Polytope standard_facet_simplex(int k, int n) {
  if (k < 1 || k > n) throw std::invalid_argument("simplex index out of range");
  std::vector<Vec> pts;
  for (int i = 0; i < k; ++i) pts.push_back(Vec::unit(n, i));
  return Polytope::hull(pts);
}

Polytope hat_simplex(int k, int n) {
  if (k < 2 || k > n) throw std::invalid_argument("simplex index out of range");
  std::vector<Vec> pts{Vec::zero(n), Vec::unit(n, 0)};
  for (int i = 2; i < k; ++i) pts.push_back(Vec::unit(n, i));
  return Polytope::hull(pts);
}

Polytope scaled(const Polytope& p, const Rat& s) {
  std::vector<Vec> pts;
  for (const auto& v : p.vertices()) pts.push_back(v * s);
  return Polytope::hull(pts);
}

}  // namespace polyval
