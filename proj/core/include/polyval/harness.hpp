#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "polyval/valuations.hpp"

namespace polyval {

struct Witness {
  std::string input;
  std::string expected;
  std::string actual;
};

/// Outcome of one property suite. Deterministic in (suite, seed, cases, n).
struct CheckReport {
  std::string suite;
  std::uint64_t seed = 0;
  int cases_run = 0;
  int failures = 0;
  std::vector<Witness> witnesses;
  /// Negative controls pass when they fail.
  bool expected_fail = false;
  /// Probes report but never gate.
  bool informational = false;
  /// Per-category case counts (e.g. which origin position a polygon had).
  std::map<std::string, int> tallies;

  void check(bool ok, const std::function<Witness()>& witness);
  bool passed() const;
};

using Valuation = std::function<Vec(const Polytope&)>;

struct NamedValuation {
  std::string name;
  Valuation eval;
};

/// Which polytope class a suite draws from. OriginContaining also forces cut
/// hyperplanes through o so every piece keeps the origin.
enum class Domain { General, OriginContaining };

enum class Intertwining { Contravariant, Covariant };

struct RandomPolytopeOptions {
  bool contains_origin = false;
  int max_coord = 3;
  int max_pts = 8;
};

/// Hull of seeded random integer or half-integer points in [-c, c]^n, redrawn
/// until full-dimensional. Throws std::runtime_error if that never happens.
Polytope random_polytope(int n, std::uint64_t seed, const RandomPolytopeOptions& opts = {});

/// Independent stream for case `index` of a suite seeded with `seed`.
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

CheckReport check_valuation_cut(const NamedValuation& z, int n, std::uint64_t seed, int cases,
                                Domain domain = Domain::General);

/// Shear-product transforms plus every sigma_library matrix on each case.
CheckReport check_contravariance(const NamedValuation& z, int n, std::uint64_t seed, int cases,
                                 Domain domain = Domain::General,
                                 Intertwining kind = Intertwining::Contravariant);

/// Points, segments and (n-1)-dimensional hulls moved by unimodular maps.
CheckReport check_simplicity(int n, std::uint64_t seed, int cases, const Zeta& z);

CheckReport check_minkowski(int n, std::uint64_t seed, int cases);

/// fv = (1/2) rot vo on planar polygons containing o; tallies record the
/// boundary / interior / degenerate split.
CheckReport check_hfv(std::uint64_t seed, int cases, const Zeta& z = {});

/// rot . mv contravariant and rot^-1 . fv covariant in the plane.
CheckReport check_cocontra(std::uint64_t seed, int cases);

/// Cut of T^i (2 <= i < n) by the hyperplane with normal (1-l)e1 - l e2:
/// piece identification, inclusion-exclusion through cut(), and the matrix
/// form (phi1^-t + psi1^-t - I) Z(T^i) = phi1^-t Z(hat T^{i-1}).
CheckReport check_extk(const NamedValuation& z, int n, const std::vector<Rat>& lambdas);

/// Same cut applied to sT^n, with the phi2 / psi2 images evaluated directly.
CheckReport check_extn(const NamedValuation& z, int n, const std::vector<Rat>& lambdas,
                       const std::vector<Rat>& scales);

/// Every composite valuation with random parameters through the cut and
/// intertwining suites on its natural domain.
CheckReport check_composites(std::uint64_t seed, int cases);

/// Vertex count times the all-ones vector. Not a valuation.
NamedValuation vertex_count_valuation();

/// Expected-to-fail suites guarding against vacuous checks.
std::vector<CheckReport> negative_controls(std::uint64_t seed, int cases);

/// Valuation suite for the facet vector with |h| and with signed h on
/// polytopes that may miss the origin. Informational only.
std::vector<CheckReport> probe_support_convention(int n, std::uint64_t seed, int cases);

}  // namespace polyval
