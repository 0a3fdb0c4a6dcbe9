// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "polyval/harness.hpp"

using namespace polyval;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) detail = what;
    ok = false;
  }
  void require(const CheckReport& r) {
    std::ostringstream s;
    s << r.suite << ": " << r.failures << "/" << r.cases_run << " failed";
    if (!r.witnesses.empty()) s << " (" << r.witnesses.front().input << ")";
    require(r.passed() && !r.expected_fail && r.cases_run > 0, s.str());
  }
  void require_caught(const CheckReport& r) {
    require(r.failures >= 1, r.suite + ": negative control produced no failure");
  }
};

int failed_criteria = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.require(secs < limit_s, "over time budget");
  if (!out.ok) ++failed_criteria;
  std::printf("%s criterion %d: %s [%.2fs < %.0fs]%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs, limit_s,
              out.ok ? "" : " -- ", out.detail.c_str());
  std::fflush(stdout);
}

Rat factorial(int n) {
  Rat f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Rat random_param(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  return ratio(num(rng), den(rng));
}

const NamedValuation kFvId{"fv", [](const Polytope& p) { return facet_vector(p, Zeta{1}); }};

}  // namespace

int main() {
  constexpr std::uint64_t kSeed = 20240917;

  criterion(1, "fv_id(sT^n) = s^(n-1)/n! * ones", 1, [](Outcome& o) {
    for (int n = 2; n <= 4; ++n)
      for (const Rat s : {Rat(1), Rat(2), Rat(3, 2)}) {
        Rat sn1 = 1;
        for (int i = 1; i < n; ++i) sn1 *= s;
        const Vec got = facet_vector(scaled(standard_simplex(n, n), s), Zeta{1});
        o.require(got == Vec::ones(n) * (sn1 / factorial(n)), "n=" + std::to_string(n) + " s=" + to_string(s) +
                                                                 " got " + to_string(got));
      }
  });

  criterion(2, "simplicity: fv vanishes on lower-dimensional polytopes", 10, [&](Outcome& o) {
    for (int n = 2; n <= 4; ++n)
      for (const Rat c : {Rat(1), Rat(-2, 3)}) o.require(check_simplicity(n, kSeed, 100, Zeta{c}));
  });

  criterion(3, "SL(n) contravariance of fv", 60, [&](Outcome& o) {
    for (int n = 2; n <= 4; ++n) {
      o.require(check_contravariance(kFvId, n, kSeed, 100));
      const NamedValuation fvz{"fv(-2/3)", [](const Polytope& p) { return facet_vector(p, Zeta{Rat(-2, 3)}); }};
      o.require(check_contravariance(fvz, n, kSeed + 1, 100));
    }
  });

  criterion(4, "inclusion-exclusion for fv, mv and the composites", 60, [&](Outcome& o) {
    std::mt19937_64 rng(kSeed);
    const Zeta z1{random_param(rng)}, z2{random_param(rng)};
    const NamedValuation fvz{"fv", [z1](const Polytope& p) { return facet_vector(p, z1); }};
    const NamedValuation mv{"mv", [](const Polytope& p) { return moment(p); }};
    const NamedValuation nd{"zeta-nd", [z1, z2](const Polytope& p) { return z_contra_nd(p, z1, z2); }};
    for (int n = 2; n <= 3; ++n) {
      o.require(check_valuation_cut(fvz, n, kSeed, 200));
      o.require(check_valuation_cut(mv, n, kSeed, 200));
      o.require(check_valuation_cut(nd, n, kSeed, 200));
    }
    Params2D q;
    q.zeta1 = z1;
    q.zeta2 = z2;
    q.c1 = random_param(rng);
    q.c2 = random_param(rng);
    q.c1_tilde = random_param(rng);
    q.c2_tilde = random_param(rng);
    const NamedValuation general{"zeta-2d", [q](const Polytope& p) { return z_contra_2d_general(p, q); }};
    o.require(check_valuation_cut(general, 2, kSeed, 200));
    const Rat c1 = q.c1, c2 = q.c2;
    const NamedValuation origin{"zeta-2d-origin",
                                [z1, c1, c2](const Polytope& p) { return z_contra_2d_origin(p, z1, c1, c2); }};
    o.require(check_valuation_cut(origin, 2, kSeed, 200, Domain::OriginContaining));
    for (int n = 2; n <= 3; ++n) o.require_caught(check_valuation_cut(vertex_count_valuation(), n, kSeed, 200));
  });

  criterion(5, "Minkowski relation", 10, [&](Outcome& o) {
    for (int n = 2; n <= 4; ++n) o.require(check_minkowski(n, kSeed, 50));
  });

  criterion(6, "fv = (1/2) rot vo on origin-containing polygons", 10, [&](Outcome& o) {
    const CheckReport r = check_hfv(kSeed, 100, Zeta{Rat(5, 3)});
    o.require(r);
    const auto count = [&r](const char* k) { return r.tallies.count(k) ? r.tallies.at(k) : 0; };
    o.require(count("interior") > 0, "no interior-origin case");
    o.require(count("vertex") + count("edge") > 0, "no boundary-origin case");
  });

  criterion(7, "triangulation identities", 10, [](Outcome& o) {
    const std::vector<Rat> lambdas{Rat(1, 3), Rat(1, 2), Rat(2, 3)};
    const NamedValuation nd{"zeta-nd", [](const Polytope& p) { return z_contra_nd(p, Zeta{1}, Zeta{Rat(-1, 2)}); }};
    for (const auto& z : {kFvId, nd}) {
      for (int n = 3; n <= 4; ++n) o.require(check_extk(z, n, lambdas));
      for (int n = 2; n <= 3; ++n) o.require(check_extn(z, n, lambdas, {Rat(1), Rat(2)}));
    }
  });

  criterion(8, "rot mv contravariant, rot^-1 fv covariant, mv not contravariant", 30, [&](Outcome& o) {
    o.require(check_cocontra(kSeed, 100));
    const NamedValuation mv{"mv", [](const Polytope& p) { return moment(p); }};
    o.require_caught(check_contravariance(mv, 2, kSeed, 100));
  });

  criterion(9, "facets, volume and moment against independent oracles", 60, [&](Outcome& o) {
    std::mt19937_64 rng(kSeed);
    for (int n = 2; n <= 4; ++n) {
      std::uniform_int_distribution<int> coord(-6, 6), count(n + 1, n + 6);
      int done = 0;
      while (done < 50) {
        std::vector<Vec> pts(static_cast<std::size_t>(count(rng)), Vec::zero(n));
        for (auto& v : pts)
          for (int i = 0; i < n; ++i) v[i] = ratio(coord(rng), 2);
        const Polytope p = Polytope::hull(pts);
        if (!p.full_dimensional()) continue;
        ++done;
        std::vector<oracle::FacetRow> rows;
        for (const auto& f : p.facets()) rows.push_back({f.normal, f.support});
        std::sort(rows.begin(), rows.end());
        o.require(rows == oracle::brute_force_facets(pts), "facet mismatch on " + to_string(p));
        o.require(volume(p) == oracle::volume_second_apex(p), "volume mismatch on " + to_string(p));
        o.require(p.vertices() == oracle::extreme_points(pts), "vertex mismatch on " + to_string(p));
      }
    }
    o.require(moment(standard_simplex(2, 2)) == Vec{Rat(1, 6), Rat(1, 6)}, "moment of T^2");
  });

  return failed_criteria;
}
