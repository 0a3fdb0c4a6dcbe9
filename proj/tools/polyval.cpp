#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyval/harness.hpp"
#include "polyval/json_io.hpp"

using namespace polyval;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Usage problems (bad file, bad flag value, unknown suite) exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Polytope load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return polytope_from_json_text(buf.str());
}

Rat rat_arg(const std::string& name, const std::string& text) {
  try {
    return parse_rat(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(name + ": not a rational: '" + text + "'");
  }
}

Json info(const Polytope& p) {
  Json out;
  out["dim"] = p.ambient_dim();
  out["aff_dim"] = p.aff_dim();
  out["vertices"] = to_json(p).at("vertices");
  Json rows = Json::array();
  if (p.full_dimensional()) {
    std::vector<Facet> fs = p.facets();
    std::sort(fs.begin(), fs.end(), [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
    for (const auto& f : fs) {
      Json row;
      row["normal"] = to_json(f.normal);
      row["support"] = to_json(f.support);
      row["cone_volume"] = to_json(cone_volume(p, f));
      row["vector_area"] = to_json(vector_area(p, f));
      rows.push_back(row);
    }
  }
  out["facets"] = rows;
  out["volume"] = to_json(volume(p));
  out["moment"] = to_json(moment(p));
  return out;
}

void require_plane(const Polytope& p, const std::string& what) {
  if (p.ambient_dim() != 2) throw std::invalid_argument(what + " is defined only for n = 2");
}

Json compute(const Polytope& p, const std::string& valuation, const std::string& zeta_text,
             const std::vector<std::string>& raw_params) {
  static const std::map<std::string, std::set<std::string>> allowed{
      {"fv", {}},
      {"mv", {}},
      {"ve", {}},
      {"vo", {}},
      {"thm12", {"c1", "c2"}},
      {"thm13", {"zeta1", "zeta2"}},
      {"thm14", {"zeta1", "zeta2", "c1", "c2", "c1_tilde", "c2_tilde"}},
  };
  static const std::set<std::string> uses_zeta{"fv", "vo", "thm12"};
  const auto entry = allowed.find(valuation);
  if (entry == allowed.end()) throw UsageError("unknown valuation '" + valuation + "'");
  if (!zeta_text.empty() && !uses_zeta.count(valuation))
    throw UsageError("--zeta does not apply to " + valuation);

  std::map<std::string, Rat> params;
  for (const auto& kv : raw_params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("--param expects name=value, got '" + kv + "'");
    const std::string name = kv.substr(0, eq);
    if (!entry->second.count(name)) throw UsageError("unknown parameter '" + name + "' for " + valuation);
    if (params.count(name)) throw UsageError("parameter '" + name + "' given twice");
    params[name] = rat_arg(name, kv.substr(eq + 1));
  }
  // unset constants are 0, unset zeta scalings are 1
  for (const auto& name : entry->second)
    if (!params.count(name)) params[name] = name.rfind("zeta", 0) == 0 ? Rat(1) : Rat(0);
  const Zeta z{zeta_text.empty() ? Rat(1) : rat_arg("--zeta", zeta_text)};

  Vec value;
  if (valuation == "fv") {
    value = facet_vector(p, z);
  } else if (valuation == "mv") {
    value = moment(p);
  } else if (valuation == "ve") {
    require_plane(p, "ve");
    value = edge_vector(p);
  } else if (valuation == "vo") {
    require_plane(p, "vo");
    value = vo_zeta(p, z);
  } else if (valuation == "thm12") {
    require_plane(p, "thm12");
    value = z_contra_2d_origin(p, z, params["c1"], params["c2"]);
  } else if (valuation == "thm13") {
    value = z_contra_nd(p, Zeta{params["zeta1"]}, Zeta{params["zeta2"]});
  } else {
    require_plane(p, "thm14");
    Params2D q;
    q.zeta1 = Zeta{params["zeta1"]};
    q.zeta2 = Zeta{params["zeta2"]};
    q.c1 = params["c1"];
    q.c2 = params["c2"];
    q.c1_tilde = params["c1_tilde"];
    q.c2_tilde = params["c2_tilde"];
    value = z_contra_2d_general(p, q);
  }

  Json out;
  out["valuation"] = valuation;
  Json echo = Json::object();
  if (uses_zeta.count(valuation)) echo["zeta"] = to_json(z.c);
  for (const auto& [k, v] : params) echo[k] = to_json(v);
  out["params"] = echo;
  out["value"] = to_json(value);
  return out;
}

const std::vector<std::string> kSuites{"valuation", "contravariance", "simplicity", "minkowski",
                                        "hfv", "cocontra", "extk", "extn", "composites",
                                        "negative-controls", "support-convention"};

std::vector<CheckReport> run_suite(const std::string& suite, std::uint64_t seed, int cases, int n) {
  const NamedValuation fv{"fv", [](const Polytope& p) { return facet_vector(p, Zeta{1}); }};
  const NamedValuation mv{"mv", [](const Polytope& p) { return moment(p); }};
  const NamedValuation thm13{"thm13", [](const Polytope& p) { return z_contra_nd(p, Zeta{1}, Zeta{2}); }};
  const std::vector<Rat> lambdas{Rat(1, 3), Rat(1, 2), Rat(2, 3)};

  std::vector<CheckReport> out;
  if (suite == "valuation") {
    out.push_back(check_valuation_cut(fv, n, seed, cases));
    out.push_back(check_valuation_cut(mv, n, seed, cases));
    out.push_back(check_valuation_cut(thm13, n, seed, cases));
  } else if (suite == "contravariance") {
    out.push_back(check_contravariance(fv, n, seed, cases));
    out.push_back(check_contravariance(thm13, n, seed, cases));
    out.push_back(check_contravariance(mv, n, seed, cases, Domain::General, Intertwining::Covariant));
  } else if (suite == "simplicity") {
    out.push_back(check_simplicity(n, seed, cases, Zeta{1}));
  } else if (suite == "minkowski") {
    out.push_back(check_minkowski(n, seed, cases));
  } else if (suite == "hfv") {
    out.push_back(check_hfv(seed, cases));
  } else if (suite == "cocontra") {
    out.push_back(check_cocontra(seed, cases));
  } else if (suite == "extk") {
    if (n >= 3) {
      out.push_back(check_extk(fv, n, lambdas));
      out.push_back(check_extk(thm13, n, lambdas));
    }
  } else if (suite == "extn") {
    out.push_back(check_extn(fv, n, lambdas, {Rat(1), Rat(2)}));
    out.push_back(check_extn(thm13, n, lambdas, {Rat(1), Rat(2)}));
  } else if (suite == "composites") {
    out.push_back(check_composites(seed, cases));
  } else if (suite == "negative-controls") {
    out = negative_controls(seed, cases);
  } else if (suite == "support-convention") {
    out = probe_support_convention(n, seed, cases);
  } else {
    throw UsageError("unknown suite '" + suite + "'");
  }
  return out;
}

void fail_json(const std::string& message) {
  Json err;
  err["error"] = message;
  std::cerr << err.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact vector valuations on convex polytopes"};
  app.require_subcommand(1);

  std::string file;
  auto* info_cmd = app.add_subcommand("info", "Vertices, facet table, volume and moment of a polytope");
  info_cmd->add_option("file", file, "Polytope JSON file")->required();

  std::string valuation, zeta_text;
  std::vector<std::string> params;
  auto* compute_cmd = app.add_subcommand("compute", "Evaluate one valuation on a polytope");
  compute_cmd->add_option("valuation", valuation, "fv | mv | ve | vo | thm12 | thm13 | thm14")->required();
  compute_cmd->add_option("--file", file, "Polytope JSON file")->required();
  compute_cmd->add_option("--zeta", zeta_text, "zeta(1) as p/q (fv, vo, thm12)");
  compute_cmd->add_option("--param", params, "name=value, repeatable");

  std::string suite;
  std::uint64_t seed = 1;
  int cases = 100;
  int dim = 3;
  auto* verify_cmd = app.add_subcommand("verify", "Run property suites and print their reports");
  verify_cmd->add_option("suite", suite, "suite name or 'all'")->required();
  verify_cmd->add_option("--seed", seed, "base seed");
  verify_cmd->add_option("--cases", cases, "cases per suite")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--dim", dim, "ambient dimension")->check(CLI::Range(2, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Json out;
    int code = 0;
    if (*info_cmd) {
      out = info(load(file));
    } else if (*compute_cmd) {
      out = compute(load(file), valuation, zeta_text, params);
    } else {
      std::vector<std::string> names;
      if (suite == "all") {
        names = kSuites;
      } else if (std::find(kSuites.begin(), kSuites.end(), suite) != kSuites.end()) {
        names = {suite};
      } else {
        throw UsageError("unknown suite '" + suite + "'");
      }
      out = Json::array();
      for (const auto& name : names)
        for (const auto& r : run_suite(name, seed, cases, dim)) {
          if (!r.passed()) code = kExitFailure;
          out.push_back(to_json(r));
        }
    }
    std::cout << out.dump(2) << '\n';
    return code;
  } catch (const ParseError& e) {
    fail_json(e.what());
    return kExitUsage;
  } catch (const UsageError& e) {
    fail_json(e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    fail_json(e.what());
    return kExitFailure;
  }
}
