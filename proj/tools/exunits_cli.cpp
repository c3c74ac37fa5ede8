/*
   Copyright 2026 The exunits Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <algorithm>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "exunits/expr.hpp"
#include "exunits/families.hpp"
#include "exunits/galois4.hpp"
#include "exunits/monodisc.hpp"
#include "exunits/numberfield.hpp"
#include "exunits/quadsub.hpp"
#include "exunits/realroots.hpp"
#include "exunits/report.hpp"

namespace {

using namespace exunits;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

FamilyId family_or_usage(const std::string& name) {
    try {
        return parse_family_id(name);
    } catch (const std::invalid_argument&) {
        std::string known;
        for (auto id : all_families()) known += (known.empty() ? "" : ", ") + std::string(to_string(id));
        throw UsageError("unknown family '" + name + "' (known: " + known + ")");
    }
}

Integer integer_or_usage(const std::string& text, const char* flag) {
    try {
        const auto v = parse_integer_list(text);
        if (v.size() != 1) throw ParseError("expected one integer");
        return v.front();
    } catch (const ParseError&) {
        throw UsageError(std::string("--") + flag + " expects an integer, got '" + text + "'");
    }
}

// Everything the user passed, echoed back verbatim.
Json invocation_of(const CLI::App& sub) {
    Json inv = Json::object();
    inv["command"] = sub.get_name();
    for (const CLI::Option* opt : sub.get_options()) {
        if (opt->count() == 0 || opt->get_single_name() == "help") continue;
        const auto& res = opt->results();
        inv[opt->get_single_name()] = res.size() == 1 ? Json(res.front()) : Json(res);
    }
    return inv;
}

void emit(const CLI::App& sub, Json payload, Json results = Json::array()) {
    ReportDocument doc;
    doc.invocation = invocation_of(sub);
    doc.payload = std::move(payload);
    doc.results = std::move(results);
    std::cout << to_json(doc).dump(2) << '\n';
}

IntPoly poly_from_flags(const std::string& coeffs, const std::string& poly) {
    if (!coeffs.empty() && !poly.empty()) throw UsageError("give either --coeffs or --poly, not both");
    if (!coeffs.empty()) return IntPoly::from_descending(parse_integer_list(coeffs));
    if (!poly.empty()) return parse_int_poly(poly);
    throw UsageError("one of --coeffs or --poly is required");
}

struct FamilyFlags {
    std::string family;
    std::string t;
    std::string n;
    std::string params;

    void attach(CLI::App* sub, bool family_required = true) {
        auto* opt = sub->add_option("--family", family, "family id: f, h, g, F, nagell_nonGalois, nagell_Galois, niklasch_smart");
        if (family_required) opt->required();
        sub->add_option("--t,--k,--a", t, "free parameter, a value or a range lo:hi");
        sub->add_option("--n", n, "degree for family g");
        sub->add_option("--params", params, "full comma-separated parameter list, e.g. 2,3 for F");
    }

    // Fixed parameters preceding the swept one.
    std::vector<Integer> fixed(FamilyId id) const {
        if (id == FamilyId::F) return params.empty() ? std::vector<Integer>{} : parse_integer_list(params);
        if (id == FamilyId::g) {
            if (n.empty()) throw UsageError("family g needs --n");
            return {integer_or_usage(n, "n")};
        }
        if (!n.empty()) throw UsageError("--n only applies to family g");
        return {};
    }

    std::vector<FamilySpec> specs() const {
        const FamilyId id = family_or_usage(family);
        if (!params.empty()) {
            if (!t.empty() || !n.empty()) throw UsageError("--params cannot be combined with --t or --n");
            FamilySpec spec{id, parse_integer_list(params)};
            check_arity(spec);
            return {spec};
        }
        if (id == FamilyId::F) throw UsageError("family F takes its parameters through --params");
        if (t.empty()) throw UsageError("missing --t (or --k / --a)");
        const auto [lo, hi] = parse_range(t);
        const auto head = fixed(id);
        std::vector<FamilySpec> out;
        for (Integer v = lo; v <= hi; ++v) {
            FamilySpec spec{id, head};
            spec.params.push_back(v);
            out.push_back(spec);
        }
        for (const auto& s : out) check_arity(s);
        return out;
    }
};

int run_verify(CLI::App* sub, const FamilyFlags& ff, const std::string& checks, const std::string& format,
               unsigned workers) {
    const auto specs = ff.specs();
    std::vector<std::string> only;
    if (!checks.empty()) {
        std::set<std::string> known;
        for (const auto& s : specs)
            for (auto& c : claim_names(s)) known.insert(c);
        std::string item;
        std::istringstream in(checks);
        while (std::getline(in, item, ',')) {
            if (!known.count(item)) throw UsageError("unknown check '" + item + "' for this family");
            only.push_back(item);
        }
    }

    std::vector<VerificationReport> reports;
    if (specs.size() == 1) {
        reports.push_back(verify(specs.front()));
    } else {
        const FamilyId id = specs.front().id;
        reports = verify_sweep(id, ff.fixed(id), specs.front().params.back(), specs.back().params.back(), workers);
    }
    if (!only.empty()) {
        for (auto& r : reports) {
            std::erase_if(r.checks, [&](const CheckResult& c) {
                return std::find(only.begin(), only.end(), c.name) == only.end();
            });
        }
    }

    bool ok = true;
    for (const auto& r : reports) {
        if (r.all_passed()) continue;
        ok = false;
        for (const auto& c : r.checks) {
            if (c.status == CheckStatus::fail) {
                std::cerr << to_string(r.spec.id) << ' ' << r.polynomial.to_string() << ": " << c.name << " failed ("
                          << c.witness << ")\n";
            }
        }
    }

    if (format == "csv") {
        std::cout << reports_to_csv(reports, only);
    } else {
        Json results = Json::array();
        for (const auto& r : reports) results.push_back(to_json(r));
        std::size_t passed = 0;
        for (const auto& r : reports) passed += r.all_passed() ? 1 : 0;
        emit(*sub, Json{{"instances", std::to_string(reports.size())}, {"all_passed_count", std::to_string(passed)}},
             std::move(results));
    }
    return ok ? kExitOk : kExitFailure;
}

int run_embed(CLI::App* sub, const std::string& d_text) {
    const Integer d = integer_or_usage(d_text, "d");
    const Pell4Solution sol = pell4_solve(d);
    const FamilySpec spec = embed_quadratic(d);
    const IntPoly f = make_family(spec);
    if (squarefree_part(sol.t * sol.t - 4) != d) throw ContradictionError("embedding does not reproduce d");
    Json payload = to_json(sol);
    payload["polynomial"] = to_json(f);
    emit(*sub, payload);
    return kExitOk;
}

int run_tower(CLI::App* sub, const std::string& t_text, int steps) {
    if (steps < 0) throw UsageError("--steps must be nonnegative");
    Integer t = integer_or_usage(t_text, "t");
    if (t < 3) throw std::invalid_argument("tower needs t >= 3");
    const Integer d = squarefree_part(t * t - 4);
    Json chain = Json::array();
    bool consistent = true;
    for (int i = 0; i <= steps; ++i) {
        const Integer di = squarefree_part(t * t - 4);
        consistent = consistent && di == d;
        chain.push_back(Json{{"t", to_string(t)}, {"d", to_string(di)}});
        if (i < steps) t = tower_step(t);
    }
    emit(*sub, Json{{"d", to_string(d)}, {"chain", chain}, {"consistent", consistent}});
    return consistent ? kExitOk : kExitFailure;
}

int run_scan(CLI::App* sub, const std::string& bound_text) {
    const Integer bound = integer_or_usage(bound_text, "bound");
    if (bound < 3 || !bound.fits_ulong_p()) throw UsageError("--bound must be in [3, 2^64)");
    const AppendixScan scan = appendix_scan(bound.get_ui());
    Json payload = to_json(scan);
    Json witnesses = Json::array();
    for (const auto& t : scan.hits) {
        const Integer v = (t * t - 4) * (4 * t * t + 9);
        witnesses.push_back(Json{{"t", to_string(t)}, {"value", to_string(v)}, {"root", to_string(isqrt(v))}});
    }
    payload["witnesses"] = witnesses;
    emit(*sub, payload);
    return kExitOk;
}

int run_galois(CLI::App* sub, const std::string& coeffs, const std::string& poly, unsigned prime_bound) {
    const IntPoly p = poly_from_flags(coeffs, poly);
    const QuarticGaloisData data = classify_quartic_detailed(p);
    const CycleTypeProfile profile = frobenius_profile(p, prime_bound);
    const bool consistent = profile_consistent_with(profile, data.group);
    Json payload = to_json(data);
    payload["polynomial"] = to_json(p);
    payload["frobenius"] = to_json(profile);
    payload["frobenius_consistent"] = consistent;
    const auto fc = classify_by_frobenius(profile);
    payload["frobenius_class"] = fc ? Json(std::string(to_string(*fc))) : Json(nullptr);
    if (!consistent) std::cerr << "frobenius profile contradicts " << to_string(data.group) << '\n';
    emit(*sub, payload);
    return consistent ? kExitOk : kExitFailure;
}

int run_minpoly(CLI::App* sub, const FamilyFlags& ff, const std::string& poly, const std::string& element) {
    IntPoly modulus;
    if (!poly.empty()) {
        if (!ff.family.empty()) throw UsageError("give either --family or --poly, not both");
        modulus = parse_int_poly(poly);
    } else {
        if (ff.family.empty()) throw UsageError("one of --family or --poly is required");
        const auto specs = ff.specs();
        if (specs.size() != 1) throw UsageError("minpoly takes a single parameter value");
        modulus = make_family(specs.front());
    }
    const NumberField field(modulus);
    const NFElement x = field.from_poly(parse_int_poly(element));
    const MinPoly mp = minpoly(x);
    Json payload{{"field", to_json(field.modulus())},
                 {"element", element},
                 {"minpoly", mp.integral ? mp.integral->to_string() : mp.poly.to_string()},
                 {"charpoly", charpoly(x).to_string()},
                 {"algebraic_integer", mp.integral.has_value()},
                 {"norm", to_string(norm(x))}};
    if (mp.integral) payload["minpoly_coefficients"] = to_json(*mp.integral)["coefficients"];
    const bool zero_or_one = x.is_zero() || x == field.from_rational(1);
    payload["unit"] = is_unit(x);
    payload["exceptional"] = !zero_or_one && is_exceptional(x);
    emit(*sub, payload);
    return kExitOk;
}

int run_sturm(CLI::App* sub, const std::string& coeffs, const std::string& poly) {
    const IntPoly p = poly_from_flags(coeffs, poly);
    if (p.degree() < 1) throw std::invalid_argument("need a nonconstant polynomial");
    const Signature sig = signature(p);
    Json payload{{"polynomial", to_json(p)},
                 {"real_roots", std::to_string(sturm_real_root_count(p))},
                 {"r1", std::to_string(sig.r1)},
                 {"r2", std::to_string(sig.r2)}};
    const IntPoly sqf = squarefree_part_poly(p);
    payload["squarefree"] = sqf.degree() == p.degree();
    if (sqf.degree() == p.degree() && p.degree() >= 2) payload["unit_rank"] = std::to_string(unit_rank(sig));
    if (p.degree() == 4 && p.is_monic()) {
        const auto inv = quartic_invariants(p[3], p[2], p[1]);
        if (p[0] == 1) {
            payload["invariants"] = Json{{"delta", to_string(inv.delta)}, {"D", to_string(inv.dval)}, {"P", to_string(inv.pval)}};
            payload["all_real_sufficient"] = all_real_sufficient(inv);
        }
    }
    emit(*sub, payload);
    return kExitOk;
}

int run_family_gen(CLI::App* sub, const FamilyFlags& ff) {
    Json results = Json::array();
    for (const auto& spec : ff.specs()) {
        Json r = to_json(spec);
        r["polynomial"] = to_json(make_family(spec));
        r["in_paper_range"] = in_paper_range(spec);
        results.push_back(r);
    }
    emit(*sub, Json{{"paper_range", std::string(paper_range(family_or_usage(ff.family)))}}, results);
    return kExitOk;
}

int run_disc(CLI::App* sub, const FamilyFlags& ff) {
    const FamilyId id = family_or_usage(ff.family);
    const DiscInT dt = disc_in_t(id, ff.fixed(id));
    const IntPoly red = reduced_disc(dt);
    Json payload = to_json(dt);
    payload["reduced"] = to_json(red);
    payload["reduced_text"] = red.to_string("t");
    emit(*sub, payload);
    return kExitOk;
}

int run_konig(CLI::App* sub, const FamilyFlags& ff, const std::string& factors, int range) {
    const FamilyId id = family_or_usage(ff.family);
    const IntPoly red = reduced_disc(disc_in_t(id, ff.fixed(id)));
    std::vector<IntPoly> candidates;
    std::string item;
    std::istringstream in(factors);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) candidates.push_back(parse_int_poly(item, 't'));
    }
    const KonigReport rep = konig_check(red, candidates, range);
    Json payload = to_json(rep);
    payload["reduced"] = red.to_string("t");
    emit(*sub, payload);
    return rep.passed() ? kExitOk : kExitFailure;
}

int run_evertse(CLI::App* sub, long n, long r) {
    emit(*sub, Json{{"n", std::to_string(n)}, {"r", std::to_string(r)}, {"bound", to_string(evertse_bound(n, r))}});
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of exceptional-unit number field families"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "expand all help");

    FamilyFlags verify_ff, minpoly_ff, gen_ff, disc_ff, konig_ff;
    std::string checks, format = "json", d_text, t_text, bound_text, coeffs, poly, element, factors;
    unsigned workers = 0;
    unsigned prime_bound = kDefaultFrobeniusBound;
    int steps = 5;
    int range = 50;
    long ev_n = 0, ev_r = 0;

    auto* verify_cmd = app.add_subcommand("verify", "run the claim checklist over a family and parameter range");
    verify_ff.attach(verify_cmd);
    verify_cmd->add_option("--checks", checks, "comma-separated subset of checks");
    verify_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    verify_cmd->add_option("--workers", workers, "worker threads, 0 = hardware concurrency");

    auto* embed_cmd = app.add_subcommand("embed", "find t with squarefree_part(t^2-4) = d");
    embed_cmd->add_option("--d", d_text, "squarefree d > 1")->required();

    auto* tower_cmd = app.add_subcommand("tower", "iterate t -> t^2-2 and track the quadratic subfield");
    tower_cmd->add_option("--t", t_text, "starting t >= 3")->required();
    tower_cmd->add_option("--steps", steps, "number of iterations");

    auto* scan_cmd = app.add_subcommand("scan", "search t with (t^2-4)(4t^2+9) a square");
    scan_cmd->add_option("--bound", bound_text, "largest t")->required();

    auto* galois_cmd = app.add_subcommand("galois", "classify the Galois group of a monic quartic");
    galois_cmd->add_option("--coeffs", coeffs, "descending coefficients, e.g. 1,-4,-1,4,1");
    galois_cmd->add_option("--poly", poly, "polynomial expression in x");
    galois_cmd->add_option("--bound", prime_bound, "largest prime for the Frobenius profile");

    auto* minpoly_cmd = app.add_subcommand("minpoly", "minimal polynomial of an element of Q[x]/(f)");
    minpoly_ff.attach(minpoly_cmd, false);
    minpoly_cmd->add_option("--poly", poly, "defining polynomial instead of a family");
    minpoly_cmd->add_option("--element", element, "element as a polynomial in x")->required();

    auto* sturm_cmd = app.add_subcommand("sturm", "count distinct real roots");
    sturm_cmd->add_option("--coeffs", coeffs, "descending coefficients");
    sturm_cmd->add_option("--poly", poly, "polynomial expression in x");

    auto* gen_cmd = app.add_subcommand("family-gen", "print family members");
    gen_ff.attach(gen_cmd);

    auto* disc_cmd = app.add_subcommand("disc", "discriminant as a polynomial in the family parameter");
    disc_cmd->add_option("--family", disc_ff.family, "family id")->required();
    disc_cmd->add_option("--n", disc_ff.n, "degree for family g");
    disc_cmd->add_option("--params", disc_ff.params, "leading parameters of F; the last one is free");

    auto* konig_cmd = app.add_subcommand("konig", "check the two reduced-discriminant conditions");
    konig_cmd->add_option("--family", konig_ff.family, "family id")->required();
    konig_cmd->add_option("--n", konig_ff.n, "degree for family g");
    konig_cmd->add_option("--params", konig_ff.params, "leading parameters of F; the last one is free");
    konig_cmd->add_option("--factors", factors, "comma-separated factors in t, e.g. 4t^2+25,t^2+4");
    konig_cmd->add_option("--range", range, "sample t in [0, max(range, 50)]");

    auto* evertse_cmd = app.add_subcommand("evertse-bound", "3*7^(n+2r+2)");
    evertse_cmd->add_option("--n", ev_n, "field degree")->required();
    evertse_cmd->add_option("--r", ev_r, "rank")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    const std::vector<std::pair<CLI::App*, std::function<int()>>> handlers = {
        {verify_cmd, [&] { return run_verify(verify_cmd, verify_ff, checks, format, workers); }},
        {embed_cmd, [&] { return run_embed(embed_cmd, d_text); }},
        {tower_cmd, [&] { return run_tower(tower_cmd, t_text, steps); }},
        {scan_cmd, [&] { return run_scan(scan_cmd, bound_text); }},
        {galois_cmd, [&] { return run_galois(galois_cmd, coeffs, poly, prime_bound); }},
        {minpoly_cmd, [&] { return run_minpoly(minpoly_cmd, minpoly_ff, poly, element); }},
        {sturm_cmd, [&] { return run_sturm(sturm_cmd, coeffs, poly); }},
        {gen_cmd, [&] { return run_family_gen(gen_cmd, gen_ff); }},
        {disc_cmd, [&] { return run_disc(disc_cmd, disc_ff); }},
        {konig_cmd, [&] { return run_konig(konig_cmd, konig_ff, factors, range); }},
        {evertse_cmd, [&] { return run_evertse(evertse_cmd, ev_n, ev_r); }},
    };

    try {
        for (const auto& [cmd, run] : handlers) {
            if (cmd->parsed()) return run();
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
