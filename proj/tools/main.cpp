// Command-line front end: parse operator expressions, run the Euler
// separation and series solver, build family solutions, and verify ladder,
// Rodriguez, and generating-function identities. Output is human-readable by
// default; --json switches to the documented schemas. Exit codes: 0 success
// or verified, 1 verification mismatch, 2 usage or parse error, 3 resonance
// or degenerate input.

#include "CLI11.hpp"
#include "json.hpp"

#include "eulerop/diff_op.hpp"
#include "eulerop/errors.hpp"
#include "eulerop/families.hpp"
#include "eulerop/graded_op.hpp"
#include "eulerop/identities.hpp"
#include "eulerop/json_io.hpp"
#include "eulerop/ladder.hpp"
#include "eulerop/parser.hpp"
#include "eulerop/solver.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace eulerop;
using nlohmann::json;

namespace {

// Invalid flag combinations discovered after CLI parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    json doc;
    std::string human;
    int code = 0;
};

Bindings parse_bindings(const std::vector<std::string>& kvs) {
    Bindings b;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError("--param expects name=p/q, got '" + kv + "'");
        try {
            b[kv.substr(0, eq)] = Rational::parse(kv.substr(eq + 1));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    return b;
}

Rational required_rational(const std::optional<std::string>& text, const std::string& flag) {
    if (!text) throw UsageError("missing required option " + flag);
    try {
        return Rational::parse(*text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Rational rational_or(const std::optional<std::string>& text, const Rational& fallback) {
    if (!text) return fallback;
    try {
        return Rational::parse(*text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::vector<Rational> rational_list(const std::vector<std::string>& texts) {
    std::vector<Rational> out;
    for (const auto& t : texts) {
        try {
            out.push_back(Rational::parse(t));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    return out;
}

DiffOp lowered(const std::string& text, const Bindings& b) {
    return lower(*parse_operator(text), b);
}

// Left-multiply by the power of x that lifts the most negative graded shift
// to zero, so the separation has a genuine diagonal part.
DiffOp principalized(const DiffOp& op) {
    GradedOp g = to_graded(op);
    if (g.is_zero()) throw ShapeError("operator is zero");
    long mn = 0;
    for (long s : g.shifts()) mn = std::min(mn, s);
    if (mn >= 0) return op;
    return DiffOp::monomial(1, -mn, 0) * op;
}

// ---------------------------------------------------------------- indicial

struct IndicialOpts {
    std::string op_text;
    std::vector<std::string> params;
};

Output run_indicial(const IndicialOpts& o) {
    auto [f, p] = separate(principalized(lowered(o.op_text, parse_bindings(o.params))));
    (void)p;
    IndicialResult r = indicial_roots(f);
    std::ostringstream h;
    for (const auto& root : r.roots)
        h << "root " << root.root.str() << " (multiplicity " << root.multiplicity << ")\n";
    if (r.unresolved_degree > 0)
        h << "unresolved non-rational factor of degree " << r.unresolved_degree << "\n";
    return {to_json(r), h.str(), 0};
}

// ------------------------------------------------------------------- solve

struct SolveOpts {
    std::string op_text;
    std::string family;
    std::vector<std::string> params;
    std::optional<std::string> root;
    std::optional<std::string> alpha, beta, gamma, coupling;
    std::vector<std::string> nums, dens;
    long n = -1;
    std::size_t root_index = 0;
    std::string variant = "euler";
    long order = 10;
};

Family family_by_name(const std::string& name) {
    if (name == "2f1") return Family::HG2F1;
    if (name == "1f1") return Family::CHG;
    if (name == "pfq") return Family::PFQ;
    if (name == "laguerre") return Family::LAGUERRE;
    if (name == "hermite") return Family::HERMITE;
    if (name == "chebyshev_u") return Family::CHEBYSHEV_U;
    if (name == "periodic") return Family::PERIODIC_COS;
    throw UsageError("unknown family '" + name + "'");
}

FamilySpec family_spec(const SolveOpts& o) {
    FamilySpec spec;
    spec.family = family_by_name(o.family);
    if (o.variant == "euler")
        spec.variant = SeparationVariant::EulerSeeded;
    else if (o.variant == "derivative")
        spec.variant = SeparationVariant::DerivativeSeeded;
    else
        throw UsageError("--variant must be 'euler' or 'derivative'");
    if (o.alpha) spec.params["alpha"] = required_rational(o.alpha, "--alpha");
    if (o.beta) spec.params["beta"] = required_rational(o.beta, "--beta");
    if (o.gamma) spec.params["gamma"] = required_rational(o.gamma, "--gamma");
    if (o.coupling) spec.params["a"] = required_rational(o.coupling, "--coupling");
    if (o.n >= 0) spec.params["n"] = Rational(o.n);
    spec.num_params = rational_list(o.nums);
    spec.den_params = rational_list(o.dens);
    return spec;
}

Output solve_output(const SolveReport& rep) {
    std::ostringstream h;
    h << rep.solution.str() << "\n"
      << (rep.mode == SolveMode::Ascending ? "ascending" : "descending")
      << (rep.terminated ? ", terminated" : "") << ", iterations " << rep.iterations << "\n";
    return {to_json(rep), h.str(), 0};
}

Output run_solve(const SolveOpts& o) {
    if (!o.op_text.empty() && !o.family.empty())
        throw UsageError("--op and --family are mutually exclusive");

    if (!o.family.empty()) {
        FamilyEquation eq = build_equation(family_spec(o), o.order);
        if (o.root_index >= eq.seeds.size())
            throw UsageError("--root-index out of range (have " +
                             std::to_string(eq.seeds.size()) + " seeds)");
        return solve_output(
            solve_series(eq.diagonal, eq.off_diagonal, eq.seeds[o.root_index], o.order));
    }
    if (o.op_text.empty()) throw UsageError("need --op or --family");

    auto [f, p] = separate(principalized(lowered(o.op_text, parse_bindings(o.params))));
    Rational lambda;
    if (o.root) {
        lambda = required_rational(o.root, "--root");
        if (!f.eval(lambda).is_zero())
            throw UsageError("--root " + lambda.str() + " is not an indicial root");
    } else {
        IndicialResult roots = indicial_roots(f);
        if (roots.roots.empty()) throw ShapeError("no rational indicial roots");
        for (const auto& r : roots.roots)
            if (r.multiplicity > 1) throw DegenerateIndicialError(r.root);
        std::vector<long> shifts = p.shifts();
        bool descending = !shifts.empty() && shifts.front() < 0;
        lambda = descending ? roots.roots.front().root : roots.roots.back().root;
    }
    return solve_output(solve_series(f, p, lambda, o.order));
}

// ---------------------------------------------------------------- residual

struct ResidualOpts {
    std::string op_text;
    std::vector<std::string> params;
    std::string solution_path;
    long order = 10;
};

Output run_residual(const ResidualOpts& o) {
    std::ifstream in(o.solution_path);
    if (!in) throw UsageError("cannot open solution file '" + o.solution_path + "'");
    json doc = json::parse(in);
    XSeries y = xseries_from_json(doc);
    XSeries r = check_residual(lowered(o.op_text, parse_bindings(o.params)), y, o.order);
    bool zero = r.is_zero();
    std::ostringstream h;
    h << r.str() << "\n" << (zero ? "residual is zero" : "residual is NONZERO") << "\n";
    return {json{{"residual", to_json(r)}, {"zero", zero}}, h.str(), zero ? 0 : 1};
}

// ------------------------------------------------------------------ family

struct FamilyOpts {
    std::string name;
    std::optional<std::string> alpha, beta, gamma, coupling;
    std::vector<std::string> nums, dens;
    long n = -1;
    long lambda = 0;
    long order = 10;
    std::string root = "first";
    std::size_t root_index = 0;
    bool descending = false;
    bool direct = false;
};

Output poly_output(const LaurentPoly& p) { return {to_json(p), p.str() + "\n", 0}; }
Output series_output(const XSeries& s) { return {to_json(s), s.str() + "\n", 0}; }

Output run_family(const FamilyOpts& o) {
    auto need_n = [&] {
        if (o.n < 0) throw UsageError("family " + o.name + " requires --n >= 0");
        return o.n;
    };
    if (o.name == "laguerre") return poly_output(laguerre(need_n(), rational_or(o.alpha, 0)));
    if (o.name == "hermite") return poly_output(hermite(need_n()));
    if (o.name == "chebyshev_u") return poly_output(chebyshev_u(need_n()));
    if (o.name == "2f1") {
        RootChoice root = RootChoice::First;
        if (o.root == "second")
            root = RootChoice::Second;
        else if (o.root != "first")
            throw UsageError("--root must be 'first' or 'second'");
        return series_output(hypergeometric_2f1(required_rational(o.alpha, "--alpha"),
                                                required_rational(o.beta, "--beta"),
                                                required_rational(o.gamma, "--gamma"), o.order,
                                                root));
    }
    if (o.name == "1f1")
        return series_output(confluent_1f1(required_rational(o.alpha, "--alpha"),
                                           required_rational(o.gamma, "--gamma"), o.order));
    if (o.name == "pfq") {
        std::vector<Rational> nums = rational_list(o.nums), dens = rational_list(o.dens);
        if (o.descending)
            return series_output(pfq_descending(nums, dens, o.order, o.root_index));
        return series_output(pfq(nums, dens, o.order, o.root_index));
    }
    if (o.name == "periodic") {
        Rational a = rational_or(o.coupling, 1);
        if (o.lambda != 0 && o.lambda != 1) throw UsageError("--lambda must be 0 or 1");
        return series_output(o.direct ? periodic_cos_direct(a, o.lambda, o.order)
                                      : periodic_cos(a, o.lambda, o.order));
    }
    throw UsageError("unknown family '" + o.name + "'");
}

// ------------------------------------------------------------------ ladder

struct LadderOpts {
    std::string relation;
    std::optional<std::string> alpha, beta, gamma;
    long from = 0;
    long to = 10;
    long order = 10;
};

Output run_ladder(const LadderOpts& o) {
    auto alpha = [&] { return required_rational(o.alpha, "--alpha"); };
    auto gamma = [&] { return required_rational(o.gamma, "--gamma"); };

    LadderRelation rel;
    if (o.relation == "ch_lowering")
        rel = ch_lowering(gamma());
    else if (o.relation == "ch_raising")
        rel = ch_raising(gamma());
    else if (o.relation == "hg_lowering")
        rel = hg_lowering(alpha(), gamma());
    else if (o.relation == "hg_raising")
        rel = hg_raising(alpha(), gamma());
    else if (o.relation == "hg_raising_bar")
        rel = hg_raising_bar(alpha(), gamma());
    else if (o.relation == "hermite_raising")
        rel = hermite_ladder().raising;
    else if (o.relation == "hermite_lowering")
        rel = hermite_ladder().lowering;
    else if (o.relation == "laguerre_raising")
        rel = laguerre_ladder(rational_or(o.alpha, 0)).raising;
    else if (o.relation == "laguerre_lowering")
        rel = laguerre_ladder(rational_or(o.alpha, 0)).lowering;
    else if (o.relation == "shift_laguerre")
        rel = parameter_shift_laguerre(rational_or(o.alpha, 0));
    else if (o.relation == "shift_hg")
        rel = parameter_shift_hg(alpha(), required_rational(o.beta, "--beta"), gamma(),
                                 o.order);
    else
        throw UsageError("unknown ladder relation '" + o.relation + "'");

    if (o.from < 0 || o.to < o.from) throw UsageError("need 0 <= --from <= --to");
    std::vector<LadderCheck> checks = rel.verify_range(o.from, o.to);
    json arr = json::array();
    bool all_ok = true;
    std::ostringstream h;
    for (const auto& c : checks) {
        arr.push_back(to_json(c));
        all_ok = all_ok && c.ok;
        h << "n=" << c.n << " expected=" << c.expected.str() << " measured=" << c.measured.str()
          << (c.ok ? " ok" : " MISMATCH") << "\n";
    }
    return {arr, h.str(), all_ok ? 0 : 1};
}

// --------------------------------------------------------------- rodriguez

struct RodriguezOpts {
    std::string family;
    long n = -1;
};

Output run_rodriguez(const RodriguezOpts& o) {
    if (o.n < 0) throw UsageError("rodriguez requires --n >= 0");
    LaurentPoly lhs, rhs;
    if (o.family == "laguerre") {
        lhs = rodriguez_laguerre(o.n);
        rhs = laguerre(o.n, 0);
    } else if (o.family == "hermite") {
        lhs = rodriguez_hermite(o.n);
        rhs = hermite(o.n);
    } else if (o.family == "hermite_reverse") {
        lhs = expform_from_rodriguez(o.n);
        rhs = hermite(o.n);
    } else {
        throw UsageError("rodriguez family must be laguerre, hermite, or hermite_reverse");
    }
    bool equal = lhs == rhs;
    std::ostringstream h;
    h << "rodriguez: " << lhs.str() << "\nfamily:    " << rhs.str() << "\n"
      << (equal ? "equal" : "NOT EQUAL") << "\n";
    return {json{{"n", o.n}, {"rodriguez", to_json(lhs)}, {"family", to_json(rhs)},
                 {"equal", equal}},
            h.str(), equal ? 0 : 1};
}

// ----------------------------------------------------------------- genfunc

struct GenfuncOpts {
    std::string family;
    long order = 10;
    long x_order = -1;
};

Output gf_output(const GfReport& r) {
    std::ostringstream h;
    h << (r.equal ? "equal through order " + std::to_string(r.lhs.order())
                  : "FIRST MISMATCH at t^" + std::to_string(r.first_mismatch))
      << "\n";
    return {to_json(r), h.str(), r.equal ? 0 : 1};
}

Output run_genfunc(const GenfuncOpts& o) {
    if (o.family == "laguerre") return gf_output(gf_laguerre(o.order));
    if (o.family == "chebyshev") return gf_output(gf_chebyshev(o.order));
    if (o.family == "laguerre_operator") {
        long x_order = o.x_order >= 0 ? o.x_order : o.order;
        TSeries lhs = gf_laguerre_operator(o.order, x_order);
        GfReport closed = gf_laguerre(o.order);
        TSeries rhs(o.order);
        for (long m = 0; m <= o.order; ++m)
            rhs.set(m, closed.rhs.coeff(m).truncated_above(x_order));
        long mismatch = -1;
        for (long m = 0; m <= o.order && mismatch < 0; ++m)
            if (!(lhs.coeff(m) == rhs.coeff(m))) mismatch = m;
        return gf_output({std::move(lhs), std::move(rhs), mismatch < 0, mismatch});
    }
    throw UsageError("genfunc family must be laguerre, chebyshev, or laguerre_operator");
}

// -------------------------------------------------------------- commutator

struct CommutatorOpts {
    std::string op_a, op_b;
    std::vector<std::string> params;
};

Output run_commutator(const CommutatorOpts& o) {
    Bindings b = parse_bindings(o.params);
    DiffOp c = commutator(lowered(o.op_a, b), lowered(o.op_b, b));
    return {to_json(c), c.str() + "\n", 0};
}

// -------------------------------------------------------------------- main

struct Failure {
    std::string kind;
    int code;
};

Failure classify(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return {"parse", 2};
    if (dynamic_cast<const UnboundParameterError*>(&e)) return {"usage", 2};
    if (dynamic_cast<const UsageError*>(&e)) return {"usage", 2};
    if (dynamic_cast<const ResonanceError*>(&e)) return {"resonance", 3};
    if (dynamic_cast<const DegenerateIndicialError*>(&e)) return {"degenerate_indicial", 3};
    if (dynamic_cast<const MixedDegreeError*>(&e)) return {"mixed_degree", 3};
    if (dynamic_cast<const InconsistentConjugateError*>(&e)) return {"inconsistent_conjugate", 3};
    if (dynamic_cast<const ShapeError*>(&e)) return {"shape", 3};
    if (dynamic_cast<const nlohmann::json::exception*>(&e)) return {"parse", 2};
    if (dynamic_cast<const std::invalid_argument*>(&e)) return {"usage", 2};
    if (dynamic_cast<const std::domain_error*>(&e)) return {"usage", 2};
    return {"internal", 2};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Euler-operator separation, series solver, and identity checks"};
    app.require_subcommand(1);
    bool json_mode = false;

    IndicialOpts ind;
    auto* c_ind = app.add_subcommand("indicial", "Indicial roots of an operator");
    c_ind->add_option("--op", ind.op_text, "operator expression")->required();
    c_ind->add_option("--param", ind.params, "binding name=p/q (repeatable)");
    c_ind->add_flag("--json", json_mode, "JSON output");

    SolveOpts sol;
    auto* c_sol = app.add_subcommand("solve", "Series solution from an indicial root");
    c_sol->add_option("--op", sol.op_text, "operator expression");
    c_sol->add_option("--family", sol.family, "family name instead of --op");
    c_sol->add_option("--param", sol.params, "binding name=p/q (repeatable)");
    c_sol->add_option("--root", sol.root, "indicial root to seed (p/q)");
    c_sol->add_option("--alpha", sol.alpha, "family parameter");
    c_sol->add_option("--beta", sol.beta, "family parameter");
    c_sol->add_option("--gamma", sol.gamma, "family parameter");
    c_sol->add_option("--coupling", sol.coupling, "periodic coupling a");
    c_sol->add_option("--num", sol.nums, "pFq numerator parameter (repeatable)");
    c_sol->add_option("--den", sol.dens, "pFq denominator parameter (repeatable)");
    c_sol->add_option("--n", sol.n, "family degree n");
    c_sol->add_option("--root-index", sol.root_index, "seed index for --family");
    c_sol->add_option("--variant", sol.variant, "separation variant: euler|derivative");
    c_sol->add_option("--order", sol.order, "truncation order");
    c_sol->add_flag("--json", json_mode, "JSON output");

    ResidualOpts res;
    auto* c_res = app.add_subcommand("residual", "Apply an operator to a stored solution");
    c_res->add_option("--op", res.op_text, "operator expression")->required();
    c_res->add_option("--param", res.params, "binding name=p/q (repeatable)");
    c_res->add_option("--solution", res.solution_path, "JSON series file")->required();
    c_res->add_option("--order", res.order, "check order");
    c_res->add_flag("--json", json_mode, "JSON output");

    FamilyOpts fam;
    auto* c_fam = app.add_subcommand("family", "Family polynomial or series");
    c_fam->add_option("name", fam.name, "2f1|1f1|pfq|laguerre|hermite|chebyshev_u|periodic")
        ->required();
    c_fam->add_option("--alpha", fam.alpha, "family parameter");
    c_fam->add_option("--beta", fam.beta, "family parameter");
    c_fam->add_option("--gamma", fam.gamma, "family parameter");
    c_fam->add_option("--coupling", fam.coupling, "periodic coupling a");
    c_fam->add_option("--num", fam.nums, "pFq numerator parameter (repeatable)");
    c_fam->add_option("--den", fam.dens, "pFq denominator parameter (repeatable)");
    c_fam->add_option("--n", fam.n, "degree");
    c_fam->add_option("--lambda", fam.lambda, "periodic indicial root (0 or 1)");
    c_fam->add_option("--order", fam.order, "truncation order");
    c_fam->add_option("--root", fam.root, "2f1 branch: first|second");
    c_fam->add_option("--root-index", fam.root_index, "pFq indicial root index");
    c_fam->add_flag("--descending", fam.descending, "pFq descending branch");
    c_fam->add_flag("--direct", fam.direct, "periodic closed-sum route");
    c_fam->add_flag("--json", json_mode, "JSON output");

    LadderOpts lad;
    auto* c_lad = app.add_subcommand("ladder", "Verify a ladder relation over an n-range");
    c_lad->add_option("--relation", lad.relation, "relation name")->required();
    c_lad->add_option("--alpha", lad.alpha, "family parameter");
    c_lad->add_option("--beta", lad.beta, "family parameter");
    c_lad->add_option("--gamma", lad.gamma, "family parameter");
    c_lad->add_option("--from", lad.from, "first n");
    c_lad->add_option("--to", lad.to, "last n");
    c_lad->add_option("--order", lad.order, "series order for shift_hg");
    c_lad->add_flag("--json", json_mode, "JSON output");

    RodriguezOpts rod;
    auto* c_rod = app.add_subcommand("rodriguez", "Rodriguez formula vs family polynomial");
    c_rod->add_option("--family", rod.family, "laguerre|hermite|hermite_reverse")->required();
    c_rod->add_option("--n", rod.n, "degree")->required();
    c_rod->add_flag("--json", json_mode, "JSON output");

    GenfuncOpts gen;
    auto* c_gen = app.add_subcommand("genfunc", "Generating function equality report");
    c_gen->add_option("--family", gen.family, "laguerre|chebyshev|laguerre_operator")
        ->required();
    c_gen->add_option("--order", gen.order, "t-order");
    c_gen->add_option("--x-order", gen.x_order, "x-window for laguerre_operator");
    c_gen->add_flag("--json", json_mode, "JSON output");

    CommutatorOpts com;
    auto* c_com = app.add_subcommand("commutator", "Commutator of two operators");
    c_com->add_option("--op-a", com.op_a, "left operator")->required();
    c_com->add_option("--op-b", com.op_b, "right operator")->required();
    c_com->add_option("--param", com.params, "binding name=p/q (repeatable)");
    c_com->add_flag("--json", json_mode, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        Output out;
        if (*c_ind)
            out = run_indicial(ind);
        else if (*c_sol)
            out = run_solve(sol);
        else if (*c_res)
            out = run_residual(res);
        else if (*c_fam)
            out = run_family(fam);
        else if (*c_lad)
            out = run_ladder(lad);
        else if (*c_rod)
            out = run_rodriguez(rod);
        else if (*c_gen)
            out = run_genfunc(gen);
        else
            out = run_commutator(com);

        if (json_mode)
            std::cout << out.doc.dump(2) << "\n";
        else
            std::cout << out.human;
        return out.code;
    } catch (const std::exception& e) {
        Failure f = classify(e);
        if (json_mode)
            std::cout << json{{"error", {{"kind", f.kind}, {"detail", e.what()}}}}.dump(2)
                      << "\n";
        else
            std::cerr << "error (" << f.kind << "): " << e.what() << "\n";
        return f.code;
    }
}
