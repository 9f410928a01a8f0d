#pragma once

#include <string>

#include "json.hpp"

#include "hardyapprox/interp.hpp"

namespace hardy {

using ojson = nlohmann::ordered_json;

// Complex numbers serialize as [re, im]; coefficient maps use string
// frequency keys.
ojson complex_to_json(const cplx& z);
cplx complex_from_json(const nlohmann::json& j);

ojson to_json(const TrigPolynomial& t);
ojson to_json(const AnalyticPolynomial& p);
ojson to_json(const FiniteBlaschke& b);
ojson to_json(const SampledCircleFunction& s);
ojson to_json(const ApproxResult& r);
ojson to_json(const StructuralCertificate& c);
ojson to_json(const DualCertificate& d);
ojson to_json(const RootPairing& p);
ojson to_json(const InterpolationResult& r);

TrigPolynomial trig_from_json(const nlohmann::json& j);
AnalyticPolynomial analytic_from_json(const nlohmann::json& j);
FiniteBlaschke blaschke_from_json(const nlohmann::json& j);

// Fixed field order (ordered_json) and floats at 17 significant digits, so
// identical inputs dump byte-identically.
std::string dump_deterministic(const ojson& j, int indent = 2);

}  // namespace hardy
