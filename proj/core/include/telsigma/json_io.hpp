#pragma once

#include <json.hpp>

#include "telsigma/bilinear.hpp"
#include "telsigma/expansion.hpp"
#include "telsigma/integrality.hpp"
#include "telsigma/sigma.hpp"

namespace telsigma {

using Json = nlohmann::ordered_json;

// Canonical renderings: key order and array order are fixed so files are
// byte-identical across runs.
Json lambda_poly_json(const LambdaPolynomial& p, const TelescopicData& td);
Json semigroup_json(const TelescopicData& td);
Json d_matrix_json(const DMatrix& d);
Json sigma_json(const SigmaExpansion& se, const TelescopicData& td);
Json tau_json(const USeries& tau, const TelescopicData& td);
Json q_table_json(const QTable& q, const TelescopicData& td);
Json coeff_table_json(const CoeffTable& t, const TelescopicData& td);
Json omega_json(const ExpansionSet& es, const TelescopicData& td);
Json report_json(const IntegralityReport& r, const TelescopicData& td);

std::string dump_canonical(const Json& j);

}  // namespace telsigma
