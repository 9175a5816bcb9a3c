#pragma once

// JSON forms of the library values. Polynomials are ascending coefficient
// arrays (numbers when they fit in 64 bits, decimal strings otherwise),
// rationals are "p/q" strings and algebraic reals are {defpoly, lo, hi}.

#include "threshcert/certify.hpp"
#include "threshcert/compare.hpp"
#include "threshcert/exactpoly.hpp"
#include "threshcert/oracle.hpp"

#include <json.hpp>

namespace threshcert {

using Json = nlohmann::ordered_json;

Json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j);
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json interval_to_json(const RationalInterval& iv);
RationalInterval interval_from_json(const Json& j);
Json algebraic_to_json(const AlgebraicReal& a);
AlgebraicReal algebraic_from_json(const Json& j);
Json steps_to_json(const StepSequence& s);
StepSequence steps_from_json(const Json& j);

Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json brute_to_json(const BruteResult& r);

}  // namespace threshcert
