#pragma once

// JSON renderings of the library types for the CLI. Every rational value is
// an exact "p/q" string (or "p" when the denominator is 1), so documents
// round-trip without loss. Integer structure (shifts, powers, indices) uses
// JSON numbers.

#include "eulerop/diff_op.hpp"
#include "eulerop/euler_poly.hpp"
#include "eulerop/graded_op.hpp"
#include "eulerop/identities.hpp"
#include "eulerop/ladder.hpp"
#include "eulerop/laurent.hpp"
#include "eulerop/rational.hpp"
#include "eulerop/solver.hpp"
#include "eulerop/tseries.hpp"
#include "eulerop/xseries.hpp"

#include "json.hpp"

namespace eulerop {

nlohmann::json to_json(const Rational& r);      // "p/q"
nlohmann::json to_json(const LaurentPoly& p);   // {"coefficients": {"exp": "p/q"}}
nlohmann::json to_json(const EulerPoly& p);     // ["c0", "c1", ...]
nlohmann::json to_json(const XSeries& s);
nlohmann::json to_json(const TSeries& s);       // [LaurentPoly per t-power]
nlohmann::json to_json(const DiffOp& op);       // [{"coeff","x_power","d_order"}]
nlohmann::json to_json(const GradedOp& op);     // [{"num","den","shift"}]
nlohmann::json to_json(const IndicialResult& r);
nlohmann::json to_json(const SolveReport& r);
nlohmann::json to_json(const LadderCheck& c);   // {"n","expected","measured","ok"}
nlohmann::json to_json(const GfReport& r);

Rational rational_from_json(const nlohmann::json& j);
LaurentPoly laurent_from_json(const nlohmann::json& j);
XSeries xseries_from_json(const nlohmann::json& j);

}  // namespace eulerop
