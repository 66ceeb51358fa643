#pragma once

#include <json.hpp>

#include "locfac/archimedean.hpp"
#include "locfac/cluster.hpp"
#include "locfac/euler_product.hpp"
#include "locfac/finite_field.hpp"
#include "locfac/local_zeta.hpp"
#include "locfac/operator_k.hpp"

namespace locfac {

using Json = nlohmann::json;

// Arbitrary-precision integers travel as decimal strings so no JSON
// consumer silently rounds them; machine-range counters and ranks stay
// plain numbers.
Json int_json(const Int& v);
Int int_from_json(const Json& j);

Json matrix_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const Json& j);

Json poly_json(const IntPolynomial& p, const std::string& var = "u");
IntPolynomial poly_from_json(const Json& j);

Json complex_json(Cx z);

Json curve_json(const CurveSpec& c);
CurveSpec curve_from_json(const Json& j);

Json point_count_json(const PointCountRecord& rec, const std::string& method);
Json local_zeta_json(const LocalZetaFunction& z);
Json snf_json(const SNFResult& snf);
Json k_theory_json(const KTheoryResult& k);
Json conjugacy_json(const ConjugacyReport& rep);
Json truncation_json(const TruncationReport& rep);
Json row_finiteness_json(const RowFinitenessReport& rep);
Json markov_json(const MarkovCompanion& mc);
Json seed_json(const Seed& seed);
Json mutation_report_json(const MutationReport& rep);
Json euler_product_json(const EulerProductResult& res);
Json identity_check_json(const IdentityCheckResult& res);

// Banded operator description:
//   {"kind": "diagonal", "value": v}
//   {"kind": "tridiagonal", "lo": v, "mid": v, "hi": v}
//   {"kind": "sparse", "entries": [[i, j, v], ...]}
BandedOperatorSpec banded_from_json(const Json& j);

HodgeNumbers hodge_from_json(const Json& j);

} // namespace locfac
