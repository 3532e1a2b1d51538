#pragma once

#include <json.hpp>

#include "seshadri/certificate.hpp"
#include "seshadri/curves.hpp"
#include "seshadri/lattice.hpp"
#include "seshadri/nbs.hpp"
#include "seshadri/positivity.hpp"
#include "seshadri/quadratic.hpp"

namespace seshadri {

// Insertion-ordered documents so identical inputs print identical bytes.
using Json = nlohmann::ordered_json;

// Integers in JSON payloads are JSON numbers; coefficients outside the
// int64 range are refused rather than rounded.  Rationals travel as
// canonical "num/den" strings and never lose precision.
long long to_json_int(const BigInt& v);

Json to_json(const Rational& v);          // "num/den"
Json to_json(const QuadraticValue& v);    // {"p": .., "q": .., "d": ..}
Json to_json(const SurfaceParams& s);
Json to_json(const DivisorClass& d);
Json to_json(const ExtendedDivisorClass& d);
Json to_json(const CurveClassification& c);
Json to_json(const GoodFormReport& r);
Json to_json(const ThresholdReport& r);
Json to_json(const NonnegReport& r);
Json to_json(const NbsSweepReport& r);
Json to_json(const WindowInterval& w);
Json to_json(const ConstructResult& c);
Json to_json(const SeshadriCertificate& c);

Rational rational_from_json(const Json& j);
QuadraticValue quadratic_from_json(const Json& j);
SurfaceParams surface_from_json(const Json& j);
DivisorClass divisor_from_json(const Json& j);
ExtendedDivisorClass extended_divisor_from_json(const Json& j);
EnumerationBounds bounds_from_json(const Json& j);

} // namespace seshadri
