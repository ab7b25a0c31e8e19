#include "eulerop/json_io.hpp"

#include "eulerop/errors.hpp"

#include <string>

namespace eulerop {

using nlohmann::json;

json to_json(const Rational& r) { return r.str(); }

json to_json(const LaurentPoly& p) {
    json coeffs = json::object();
    for (const auto& [e, c] : p.coefficients()) coeffs[std::to_string(e)] = c.str();
    return json{{"coefficients", coeffs}};
}

json to_json(const EulerPoly& p) {
    json arr = json::array();
    for (long k = 0; k <= p.degree(); ++k) arr.push_back(p.coeff(k).str());
    if (arr.empty()) arr.push_back("0");
    return arr;
}

json to_json(const XSeries& s) {
    json coeffs = json::object();
    for (const auto& [k, c] : s.coefficients()) coeffs[std::to_string(k)] = c.str();
    return json{{"base_exponent", s.base().str()},
                {"direction", s.direction() == Direction::Ascending ? "ascending" : "descending"},
                {"truncation", s.terminated() ? json("terminated") : json(*s.truncation())},
                {"coefficients", coeffs}};
}

json to_json(const TSeries& s) {
    json arr = json::array();
    for (long m = 0; m <= s.order(); ++m) arr.push_back(to_json(s.coeff(m)));
    return arr;
}

json to_json(const DiffOp& op) {
    json arr = json::array();
    for (const auto& t : op.terms())
        arr.push_back(json{{"coeff", t.coeff.str()},
                           {"x_power", t.x_power},
                           {"d_order", t.d_order}});
    return arr;
}

json to_json(const GradedOp& op) {
    json arr = json::array();
    for (const auto& t : op.terms())
        arr.push_back(json{{"num", to_json(t.factor.num())},
                           {"den", to_json(t.factor.den())},
                           {"shift", t.shift}});
    return arr;
}

json to_json(const IndicialResult& r) {
    json roots = json::array();
    json mults = json::array();
    for (const auto& root : r.roots) {
        roots.push_back(root.root.str());
        mults.push_back(root.multiplicity);
    }
    return json{{"roots", roots},
                {"multiplicities", mults},
                {"degenerate", r.degenerate()},
                {"unresolved_degree", r.unresolved_degree}};
}

json to_json(const SolveReport& r) {
    json resonances = json::array();
    for (const auto& x : r.resonances) resonances.push_back(x.str());
    return json{{"solution", to_json(r.solution)},
                {"mode", r.mode == SolveMode::Ascending ? "ascending" : "descending"},
                {"terminated", r.terminated},
                {"iterations", r.iterations},
                {"resonances", resonances}};
}

json to_json(const LadderCheck& c) {
    return json{{"n", c.n},
                {"expected", c.expected.str()},
                {"measured", c.measured.str()},
                {"ok", c.ok}};
}

json to_json(const GfReport& r) {
    return json{{"equal", r.equal},
                {"first_mismatch", r.first_mismatch},
                {"lhs", to_json(r.lhs)},
                {"rhs", to_json(r.rhs)}};
}

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw ShapeError("json: rational values must be \"p/q\" strings");
    return Rational::parse(j.get<std::string>());
}

LaurentPoly laurent_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coefficients") || !j["coefficients"].is_object())
        throw ShapeError("json: polynomial must be {\"coefficients\": {...}}");
    LaurentPoly p;
    for (const auto& [key, value] : j["coefficients"].items())
        p.set(std::stol(key), rational_from_json(value));
    return p;
}

XSeries xseries_from_json(const json& j) {
    if (!j.is_object() || !j.contains("base_exponent") || !j.contains("direction") ||
        !j.contains("truncation") || !j.contains("coefficients"))
        throw ShapeError("json: series needs base_exponent, direction, truncation, coefficients");
    std::string dir_text = j["direction"].get<std::string>();
    if (dir_text != "ascending" && dir_text != "descending")
        throw ShapeError("json: direction must be \"ascending\" or \"descending\"");
    Direction dir = dir_text == "ascending" ? Direction::Ascending : Direction::Descending;
    std::optional<long> trunc;
    if (j["truncation"].is_number_integer())
        trunc = j["truncation"].get<long>();
    else if (!(j["truncation"].is_string() && j["truncation"] == "terminated"))
        throw ShapeError("json: truncation must be an integer or \"terminated\"");
    XSeries s(rational_from_json(j["base_exponent"]), dir, trunc);
    for (const auto& [key, value] : j["coefficients"].items())
        s.set(std::stol(key), rational_from_json(value));
    return s;
}

}  // namespace eulerop
