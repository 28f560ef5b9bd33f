#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "symcurv/geodesic.hpp"
#include "symcurv/io.hpp"
#include "symcurv/kahler.hpp"
#include "symcurv/reference.hpp"
#include "symcurv/rng.hpp"

namespace {

using namespace symcurv;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitBlowup = 4;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SYMCURV_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      return 0;
    }
  }
  return 0;
}

int cmd_analyze(const std::string& path, std::uint64_t seed, int samples) {
  SymplecticLieAlgebra alg = load_algebra_file(path);
  std::cout << analyze_report(alg, seed, samples).dump(2) << "\n";
  return kExitOk;
}

int cmd_examples(const std::string& name, bool perturb) {
  std::vector<std::string> names;
  if (name == "all")
    names = {"aff1c", "r40"};
  else
    names = {name};
  bool all_ok = true;
  for (const auto& nm : names) {
    std::vector<RefCheck> checks;
    try {
      checks = builtin_reference_checks(nm, perturb);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitParse;
    }
    for (const auto& c : checks) {
      std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
      if (!c.pass) std::cout << "  expected: " << c.expected << "  computed: " << c.computed;
      std::cout << "\n";
      all_ok = all_ok && c.pass;
    }
  }
  std::cout << (all_ok ? "examples: all checks passed" : "examples: MISMATCH") << "\n";
  return all_ok ? kExitOk : kExitCheckFailed;
}

struct VerifySample {
  std::string label;
  LeftInvariantConnection conn;
};

std::vector<SymplecticLieAlgebra> base_algebras(int dim) {
  switch (dim) {
    case 2:
      return {abelian_algebra(2), aff1r_algebra()};
    case 4:
      return {builtin_algebra("aff1c"), builtin_algebra("r40"), heisenberg4_algebra(),
              abelian_algebra(4)};
    case 6:
      return {abelian_algebra(6), direct_sum(builtin_algebra("aff1c"), abelian_algebra(2)),
              direct_sum(builtin_algebra("r40"), abelian_algebra(2)),
              direct_sum(heisenberg4_algebra(), abelian_algebra(2))};
    default:
      throw std::invalid_argument("verify: supported dims are 2, 4, 6");
  }
}

Mat random_shear(int d, Rng& rng) {
  Mat p = Mat::identity(d);
  for (int step = 0; step < d; ++step) {
    int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(d)));
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(d)));
    if (i == j) continue;
    Rational c = rng.small_rational();
    for (int k = 0; k < d; ++k) p.at(i, k) += c * p.at(j, k);
  }
  return p;
}

int cmd_verify(const std::string& dims_arg, int trials, std::uint64_t seed) {
  std::vector<int> dims;
  {
    std::stringstream ss(dims_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      int v;
      try {
        v = std::stoi(tok);
      } catch (...) {
        std::cerr << "error: bad --dims value '" << tok << "'\n";
        return kExitParse;
      }
      if (v <= 0 || v % 2 != 0 || v > 6) {
        std::cerr << "error: dims must be even and in {2, 4, 6}, got " << v << "\n";
        return kExitParse;
      }
      dims.push_back(v);
    }
    if (dims.empty()) {
      std::cerr << "error: empty --dims\n";
      return kExitParse;
    }
  }

  bool all_ok = true;
  int samples = 0, identities = 0;
  for (int dim : dims) {
    std::vector<VerifySample> list;
    auto bases = base_algebras(dim);
    list.push_back({"flat", canonical_connection(abelian_algebra(dim))});
    if (dim == 4) {
      list.push_back({"builtin:aff1c", canonical_connection(builtin_algebra("aff1c"))});
      list.push_back({"builtin:r40", canonical_connection(builtin_algebra("r40"))});
    }
    for (int t = 0; t < trials; ++t) {
      const SymplecticLieAlgebra& base = bases[static_cast<std::size_t>(t) % bases.size()];
      Rng rng(Rng::mix(seed, (static_cast<std::uint64_t>(dim) << 32) | static_cast<std::uint64_t>(t)));
      SymplecticLieAlgebra alg = transform_basis(base, random_shear(dim, rng));
      std::uint64_t cseed = Rng::mix(seed ^ 0xabcdefull, (static_cast<std::uint64_t>(dim) << 20) + static_cast<std::uint64_t>(t));
      list.push_back({"random:" + std::to_string(t), random_symplectic_connection(alg, cseed)});
    }
    for (const auto& sample : list) {
      IdentityReport rep = verify_identity_suite(sample.conn);
      ++samples;
      for (const auto& item : rep.items) {
        ++identities;
        std::cout << "dim=" << dim << " sample=" << sample.label << " identity=" << item.name
                  << " status=" << (item.pass ? (item.vacuous ? "ok(vacuous)" : "ok") : "FAIL");
        if (!item.pass) {
          std::cout << " residual=" << item.max_discrepancy;
          all_ok = false;
        }
        std::cout << "\n";
      }
    }
  }
  std::cout << "verify: " << samples << " connections, " << identities << " identity checks, "
            << (all_ok ? "all exact" : "FAILURES (see above)") << "\n";
  return all_ok ? kExitOk : kExitCheckFailed;
}

Json gauss_report_json(const GaussReport& rep, int k) {
  Json j;
  j["ind_zero"] = rep.ind_zero;
  j["torsion_free"] = rep.torsion_free;
  j["preserves_omega_through_order1"] = rep.preserves_omega;
  j["gauss_residual_zero"] = rep.gauss_exact;
  j["gauss_term_matches_quadratic_form"] = rep.gauss_term_matches_pi4;
  j["induced_ricci_is_minus_smc"] = rep.ricci_is_minus_smc;
  j["smc_symmetries"] = rep.smc.symmetries_ok;
  j["smc_traces"] = rep.smc.traces_ok;
  j["smc4_zero"] = rep.smc.smc4.is_zero();
  if (k == 1) j["smc4_forced_zero"] = rep.smc.smc4.is_zero();
  j["hereditary_exact"] = rep.hereditary_exact;
  Json ricci = Json::array();
  for (int i = 0; i < rep.rbar_ricci.dim(); ++i) {
    Json row = Json::array();
    for (int jj = 0; jj < rep.rbar_ricci.dim(); ++jj)
      row.push_back(rational_json(rep.rbar_ricci.at({i, jj})));
    ricci.push_back(row);
  }
  j["induced_ricci"] = ricci;
  Json smc2 = Json::array();
  for (int i = 0; i < rep.smc.smc2.dim(); ++i) {
    Json row = Json::array();
    for (int jj = 0; jj < rep.smc.smc2.dim(); ++jj)
      row.push_back(rational_json(rep.smc.smc2.at({i, jj})));
    smc2.push_back(row);
  }
  j["smc2"] = smc2;
  return j;
}

bool gauss_ok(const GaussReport& rep) {
  return rep.ind_zero && rep.torsion_free && rep.preserves_omega && rep.gauss_exact &&
         rep.gauss_term_matches_pi4 && rep.ricci_is_minus_smc && rep.smc.symmetries_ok &&
         rep.smc.traces_ok && rep.hereditary_exact;
}

int cmd_submanifold(const std::string& path, bool random_mode, int rk, int rn, int rseeds,
                    std::uint64_t seed) {
  Json out;
  out["schema"] = 1;
  bool all_ok = true;
  if (random_mode) {
    if (rk < 1 || rn < rk || rseeds < 1) {
      std::cerr << "error: --random needs k >= 1, n >= k, seeds >= 1\n";
      return kExitParse;
    }
    Json cases = Json::array();
    for (int s = 0; s < rseeds; ++s) {
      PolyEmbedding phi = random_cubic_embedding(rk, rn, Rng::mix(seed, static_cast<std::uint64_t>(s)));
      GaussReport rep = gauss_check(phi, 10, Rng::mix(seed ^ 0x77ull, static_cast<std::uint64_t>(s)));
      Json cj = gauss_report_json(rep, rk);
      cj["seed_index"] = s;
      cases.push_back(cj);
      all_ok = all_ok && gauss_ok(rep);
    }
    out["random"] = {{"k", rk}, {"n", rn}, {"count", rseeds}};
    out["cases"] = cases;
  } else {
    PolyEmbedding phi = load_embedding_file(path);
    GaussReport rep = gauss_check(phi, 10, seed);
    out["case"] = gauss_report_json(rep, phi.k);
    all_ok = gauss_ok(rep);
  }
  out["pass"] = all_ok;
  std::cout << out.dump(2) << "\n";
  return all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_jacobi(const std::string& path, const std::string& v0s, const std::string& j0s,
               const std::string& jdot0s, double duration, double h, std::uint64_t seed) {
  if (!(h > 0) || !(duration >= h)) {
    std::cerr << "error: need 0 < h <= T\n";
    return kExitParse;
  }
  SymplecticLieAlgebra alg = load_algebra_file(path);
  const int d = alg.dim();
  auto parse_vec = [&](const std::string& s, std::vector<double> fallback) {
    if (s.empty()) return fallback;
    std::vector<double> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(std::stod(tok));
    if (static_cast<int>(v.size()) != d)
      throw ParseError("vector needs " + std::to_string(d) + " components");
    return v;
  };
  std::vector<double> ones(static_cast<std::size_t>(d), 1.0);
  std::vector<double> alt(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) alt[static_cast<std::size_t>(i)] = (i % 2 == 0) ? 1.0 : -1.0;
  State init{parse_vec(v0s, ones), parse_vec(j0s, ones), parse_vec(jdot0s, alt)};

  LeftInvariantConnection conn = canonical_connection(alg);
  GeodesicSystem sys = geodesic_system(conn);
  Trajectory traj = integrate(sys, init, duration, h);
  if (traj.blew_up) {
    std::cerr << "error: numerical blow-up at t = " << traj.blowup_time << "\n";
    return kExitBlowup;
  }
  NpcCensus census = npc_sample(curvature_data(conn), 200, seed);
  ConvexityReport rep = convexity_check(sys, traj, census.nonpositive);

  Json out;
  out["schema"] = 1;
  out["steps"] = static_cast<int>(traj.samples.size()) - 1;
  out["max_resid_first_derivative"] = rep.max_resid_first_derivative;
  out["max_resid_second_derivative"] = rep.max_resid_second_derivative;
  out["zero_count"] = rep.zero_count;
  out["phi_identically_zero"] = rep.phi_identically_zero;
  out["npc_sampled_nonpositive"] = census.nonpositive;
  out["npc_census"] = {{"negative", census.negative}, {"zero", census.zero},
                       {"positive", census.positive}};
  if (rep.convexity_asserted) {
    out["convexity_holds"] = rep.convexity_holds;
    out["zero_count_ok"] = rep.zero_count_ok;
  } else {
    out["convexity_holds"] = nullptr;
  }
  out["rk4_convergence_order"] = convergence_order(sys, init, duration, h * 8);
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact curvature analysis of symplectic connections"};
  app.require_subcommand(1);

  std::uint64_t seed = default_seed();

  auto* analyze = app.add_subcommand("analyze", "full curvature report for an algebra file");
  std::string analyze_path;
  int analyze_samples = 6;
  analyze->add_option("path", analyze_path, "algebra JSON file")->required();
  analyze->add_option("--seed", seed, "seed for sampled sectional planes");
  analyze->add_option("--samples", analyze_samples, "number of sectional-form samples");

  auto* examples = app.add_subcommand("examples", "recompute the built-in reference values");
  std::string examples_name;
  bool examples_perturb = false;
  examples->add_option("name", examples_name, "aff1c, r40, or all")->required();
  examples->add_flag("--perturb", examples_perturb,
                     "perturb reference constants to exercise the mismatch path");

  auto* verify = app.add_subcommand("verify", "run the identity suite on seeded connections");
  std::string verify_dims = "2,4,6";
  int verify_trials = 10;
  verify->add_option("--dims", verify_dims, "comma-separated even dimensions (2, 4, 6)");
  verify->add_option("--trials", verify_trials, "random connections per dimension");
  verify->add_option("--seed", seed, "seed");

  auto* subm = app.add_subcommand("submanifold", "Gauss relation and smc tensors at the origin");
  std::string subm_path;
  std::vector<int> subm_random;
  subm->add_option("path", subm_path, "embedding JSON file");
  subm->add_option("--random", subm_random, "k n seeds: random cubic embeddings")->expected(3);
  subm->add_option("--seed", seed, "seed");

  auto* jacobi = app.add_subcommand("jacobi", "integrate a Jacobi field and check convexity");
  jacobi->set_help_flag("--help", "print help");  // frees -h for the step size
  std::string jacobi_path, v0s, j0s, jdot0s;
  double jac_T = 2.0, jac_h = 1e-3;
  jacobi->add_option("path", jacobi_path, "algebra JSON file")->required();
  jacobi->add_option("--v0", v0s, "initial velocity, comma-separated");
  jacobi->add_option("--j0", j0s, "initial Jacobi field");
  jacobi->add_option("--jdot0", jdot0s, "initial covariant derivative of J");
  jacobi->add_option("--T", jac_T, "duration");
  jacobi->add_option("--h", jac_h, "step size");
  jacobi->add_option("--seed", seed, "seed for the curvature-sign census");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(analyze_path, seed, analyze_samples);
    if (app.got_subcommand(examples)) return cmd_examples(examples_name, examples_perturb);
    if (app.got_subcommand(verify)) return cmd_verify(verify_dims, verify_trials, seed);
    if (app.got_subcommand(subm)) {
      bool random_mode = !subm_random.empty();
      if (!random_mode && subm_path.empty()) {
        std::cerr << "error: submanifold needs a file or --random k n seeds\n";
        return kExitParse;
      }
      return cmd_submanifold(subm_path, random_mode, random_mode ? subm_random[0] : 0,
                             random_mode ? subm_random[1] : 0, random_mode ? subm_random[2] : 0,
                             seed);
    }
    if (app.got_subcommand(jacobi))
      return cmd_jacobi(jacobi_path, v0s, j0s, jdot0s, jac_T, jac_h, seed);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitParse;
}
