#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "symcurv/curvature.hpp"
#include "symcurv/jets.hpp"

namespace symcurv {

using Json = nlohmann::ordered_json;

// Exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Exit code 3.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"dim": 2n, "brackets": [[i, j, k, "value"], ...], "omega": [["0", ...], ...]}
// Indices are 0-based; basis label e_m of the usual notation is index m-1.
// A bracket entry sets c_{ij}^k (and its antisymmetric mirror when absent).
SymplecticLieAlgebra parse_algebra_json(const Json& j);
SymplecticLieAlgebra load_algebra_file(const std::string& path);
Json algebra_to_json(const SymplecticLieAlgebra& alg);

// {"domain_dim": 2k, "ambient_dim": 2n,
//  "components": [ [ [[e0, e1, ...], "coef"], ... ], ... ]}
// Ambient symplectic form: e^1^e^2 + e^3^e^4 + ... (pairwise standard).
PolyEmbedding parse_embedding_json(const Json& j);
PolyEmbedding load_embedding_file(const std::string& path);

// Full canonical-connection report for a validated algebra.
Json analyze_report(const SymplecticLieAlgebra& alg, std::uint64_t seed, int samples);

Json identity_report_json(const IdentityReport& rep);

std::string rational_json(const Rational& r);

}  // namespace symcurv
