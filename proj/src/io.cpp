#include "symcurv/io.hpp"

#include <fstream>

#include "symcurv/rng.hpp"

namespace symcurv {

std::string rational_json(const Rational& r) { return to_string(r); }

namespace {

Rational json_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    auto r = try_parse_rational(j.get<std::string>());
    if (r) return *r;
  }
  throw ParseError("expected a rational string at " + where);
}

}  // namespace

SymplecticLieAlgebra parse_algebra_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("omega"))
    throw ParseError("algebra file needs fields 'dim', 'omega' (and optionally 'brackets')");
  if (!j["dim"].is_number_integer()) throw ParseError("'dim' must be an integer");
  const int d = j["dim"].get<int>();
  if (d <= 0 || d % 2 != 0) throw ParseError("'dim' must be a positive even integer");

  Tensor c(d, {Var::down, Var::down, Var::up});
  std::vector<bool> given(static_cast<std::size_t>(d) * d * d, false);
  if (j.contains("brackets")) {
    if (!j["brackets"].is_array()) throw ParseError("'brackets' must be an array");
    for (const auto& e : j["brackets"]) {
      if (!e.is_array() || e.size() != 4) throw ParseError("bracket entries are [i, j, k, value]");
      int bi = e[0].get<int>(), bj = e[1].get<int>(), bk = e[2].get<int>();
      if (bi < 0 || bi >= d || bj < 0 || bj >= d || bk < 0 || bk >= d)
        throw ParseError("bracket index out of range");
      Rational v = json_rational(e[3], "brackets");
      c.at({bi, bj, bk}) = v;
      given[static_cast<std::size_t>((bi * d + bj) * d + bk)] = true;
    }
    // Fill antisymmetric mirrors that were not given explicitly.
    for (int i = 0; i < d; ++i)
      for (int jj = 0; jj < d; ++jj)
        for (int k = 0; k < d; ++k) {
          if (given[static_cast<std::size_t>((i * d + jj) * d + k)] &&
              !given[static_cast<std::size_t>((jj * d + i) * d + k)])
            c.at({jj, i, k}) = -c.at({i, jj, k});
        }
  }

  if (!j["omega"].is_array() || static_cast<int>(j["omega"].size()) != d)
    throw ParseError("'omega' must be a dim x dim matrix of rational strings");
  Tensor om(d, {Var::down, Var::down});
  for (int i = 0; i < d; ++i) {
    const auto& row = j["omega"][static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != d)
      throw ParseError("'omega' must be a dim x dim matrix of rational strings");
    for (int k = 0; k < d; ++k) om.at({i, k}) = json_rational(row[static_cast<std::size_t>(k)], "omega");
  }

  SymplecticLieAlgebra alg{std::move(c), [&] {
                             try {
                               return SymplecticForm::from_matrix(om);
                             } catch (const std::invalid_argument& e) {
                               throw ValidationError(e.what());
                             }
                           }()};
  ValidationReport rep = validate(alg);
  if (!rep.ok()) {
    std::string msg = "algebra validation failed:";
    for (const auto& e : rep.errors) msg += " " + e + ";";
    throw ValidationError(msg);
  }
  return alg;
}

SymplecticLieAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_algebra_json(j);
}

Json algebra_to_json(const SymplecticLieAlgebra& alg) {
  const int d = alg.dim();
  Json out;
  out["dim"] = d;
  Json brackets = Json::array();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (alg.c.at({i, j, k}) != 0)
          brackets.push_back(Json::array({i, j, k, rational_json(alg.c.at({i, j, k}))}));
  out["brackets"] = brackets;
  Json om = Json::array();
  for (int i = 0; i < d; ++i) {
    Json row = Json::array();
    for (int j = 0; j < d; ++j) row.push_back(rational_json(alg.omega.matrix().at({i, j})));
    om.push_back(row);
  }
  out["omega"] = om;
  return out;
}

PolyEmbedding parse_embedding_json(const Json& j) {
  if (!j.is_object() || !j.contains("domain_dim") || !j.contains("ambient_dim") ||
      !j.contains("components"))
    throw ParseError("embedding file needs 'domain_dim', 'ambient_dim', 'components'");
  const int dk = j["domain_dim"].get<int>(), dn = j["ambient_dim"].get<int>();
  if (dk <= 0 || dk % 2 != 0 || dn < dk || dn % 2 != 0)
    throw ParseError("embedding dims must be even with domain_dim <= ambient_dim");
  if (!j["components"].is_array() || static_cast<int>(j["components"].size()) != dn)
    throw ParseError("'components' must list one polynomial per ambient coordinate");
  std::vector<JetPoly> comps;
  for (const auto& pj : j["components"]) {
    JetPoly p(dk, 6);
    if (!pj.is_array()) throw ParseError("each component is a list of [[exponents], coef] pairs");
    for (const auto& term : pj) {
      if (!term.is_array() || term.size() != 2 || !term[0].is_array() ||
          static_cast<int>(term[0].size()) != dk)
        throw ParseError("each term is [[e_1..e_dk], \"coef\"]");
      std::vector<int> exps;
      int deg = 0;
      for (const auto& e : term[0]) {
        int v = e.get<int>();
        if (v < 0) throw ParseError("negative exponent");
        deg += v;
        exps.push_back(v);
      }
      if (deg == 0) throw ParseError("embedding components must have no constant term");
      if (deg > 3) throw ParseError("embedding degree bound is 3");
      p.set_coef(exps, p.coef(exps) + json_rational(term[1], "components"));
    }
    comps.push_back(std::move(p));
  }
  try {
    return make_embedding(dk / 2, dn / 2, std::move(comps));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

PolyEmbedding load_embedding_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_embedding_json(j);
}

namespace {

Json tensor_sparse_json(const Tensor& t) {
  Json out = Json::array();
  for_each_index(t.dim(), t.rank(), [&](std::span<const int> idx) {
    const Rational& v = t.at(idx);
    if (v == 0) return;
    Json entry = Json::array();
    for (int i : idx) entry.push_back(i);
    entry.push_back(rational_json(v));
    out.push_back(entry);
  });
  return out;
}

Json matrix_json(const Tensor& t) {
  Json out = Json::array();
  for (int i = 0; i < t.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < t.dim(); ++j) row.push_back(rational_json(t.at({i, j})));
    out.push_back(row);
  }
  return out;
}

Json vector_json(const Tensor& t) {
  Json out = Json::array();
  for (int i = 0; i < t.dim(); ++i) out.push_back(rational_json(t.at({i})));
  return out;
}

Json mat2_json(const Mat& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rational_json(m.at(i, j)));
    out.push_back(row);
  }
  return out;
}

}  // namespace

Json analyze_report(const SymplecticLieAlgebra& alg, std::uint64_t seed, int samples) {
  const int d = alg.dim();
  LeftInvariantConnection conn = canonical_connection(alg);
  CurvatureData data = curvature_data(conn);
  Tensor w = weyl(data.r_low, data.ric, data.omega);
  Tensor rho = curvature_one_form(conn);
  CurvatureFlags fl = curvature_flags(conn);
  ConstantCurvatureAnalysis cca = constant_curvature_analysis(data);
  ValidationReport val = validate(alg);
  SpecialElements se = special_elements(alg);

  Json out;
  out["schema"] = 1;
  out["dim"] = d;
  out["curvature"] = tensor_sparse_json(data.r_low);
  out["ricci"] = matrix_json(data.ric);
  Json wj;
  wj["nonzero"] = !w.is_zero();
  wj["components"] = tensor_sparse_json(w);
  out["weyl"] = wj;
  out["rho"] = vector_json(rho);
  Json fj;
  fj["preferred"] = fl.preferred;
  fj["weyl_flat"] = fl.weyl_flat;
  fj["weyl_flat_vacuous"] = fl.weyl_vacuous;
  fj["symplectically_flat"] = fl.symplectically_flat;
  fj["locally_symmetric"] = fl.locally_symmetric;
  out["flags"] = fj;
  out["r"] = rational_json(cca.r);
  out["trichotomy"] = to_string(cca.trichotomy);
  if (cca.is_constant) out["constant_A"] = matrix_json(cca.a);

  Json sam = Json::array();
  int made = 0;
  auto add_sample = [&](const Tensor& x, const Tensor& y) {
    if (made >= samples) return;
    if (alg.omega.pair(x, y) == 0) return;
    SectionalForm sf = sectional_form(data.r_low, alg.omega, x, y);
    Json s;
    s["x"] = vector_json(x);
    s["y"] = vector_json(y);
    s["restricted"] = mat2_json(sf.restricted);
    s["class"] = to_string(sf.cls);
    sam.push_back(s);
    ++made;
  };
  for (int i = 0; i < d && made < samples; ++i)
    for (int j = i + 1; j < d && made < samples; ++j)
      add_sample(basis_vector(d, i), basis_vector(d, j));
  Rng rng(Rng::mix(seed, 0x53414d50ull));
  int guard = 0;
  while (made < samples && ++guard < samples * 50) {
    std::vector<Rational> xc(static_cast<std::size_t>(d)), yc(static_cast<std::size_t>(d));
    for (auto& v : xc) v = rng.small_rational();
    for (auto& v : yc) v = rng.small_rational();
    add_sample(vector_tensor(d, xc), vector_tensor(d, yc));
  }
  out["sectional_samples"] = sam;
  out["ell"] = vector_json(se.ell);
  out["unimodular"] = se.unimodular;
  out["nilpotent"] = val.nilpotent;
  out["solvable"] = val.solvable;
  out["omega_closed"] = val.cocycle;
  out["omega_exact"] = val.exact;
  return out;
}

Json identity_report_json(const IdentityReport& rep) {
  Json out = Json::array();
  for (const auto& item : rep.items) {
    Json j;
    j["name"] = item.name;
    j["pass"] = item.pass;
    if (item.vacuous) j["vacuous"] = true;
    j["max_discrepancy"] = item.max_discrepancy;
    out.push_back(j);
  }
  return out;
}

}  // namespace symcurv
