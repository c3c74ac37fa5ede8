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

#include "exunits/families.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "exunits/numberfield.hpp"
#include "exunits/realroots.hpp"

namespace exunits {

std::string_view to_string(FamilyId id) {
    switch (id) {
        case FamilyId::f: return "f";
        case FamilyId::h: return "h";
        case FamilyId::g: return "g";
        case FamilyId::F: return "F";
        case FamilyId::nagell_nonGalois: return "nagell_nonGalois";
        case FamilyId::nagell_Galois: return "nagell_Galois";
        case FamilyId::niklasch_smart: return "niklasch_smart";
    }
    return "?";
}

const std::vector<FamilyId>& all_families() {
    static const std::vector<FamilyId> ids{FamilyId::f, FamilyId::h, FamilyId::g, FamilyId::F,
                                           FamilyId::nagell_nonGalois, FamilyId::nagell_Galois,
                                           FamilyId::niklasch_smart};
    return ids;
}

FamilyId parse_family_id(std::string_view name) {
    for (auto id : all_families()) {
        if (to_string(id) == name) return id;
    }
    throw std::invalid_argument("unknown family id '" + std::string(name) + "'");
}

std::string_view to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::not_applicable: return "not_applicable";
    }
    return "?";
}

CheckStatus parse_check_status(std::string_view s) {
    for (auto v : {CheckStatus::pass, CheckStatus::fail, CheckStatus::not_applicable}) {
        if (to_string(v) == s) return v;
    }
    throw std::invalid_argument("unknown check status '" + std::string(s) + "'");
}

void check_arity(const FamilySpec& spec) {
    const std::size_t n = spec.params.size();
    bool ok = false;
    switch (spec.id) {
        case FamilyId::g: ok = n == 2; break;
        case FamilyId::F: ok = n >= 1; break;
        default: ok = n == 1; break;
    }
    if (!ok) {
        throw std::invalid_argument("family " + std::string(to_string(spec.id)) + ": wrong number of parameters (" +
                                    std::to_string(n) + ")");
    }
}

namespace {

constexpr long kMaxDegree = 64;

IntPoly from_terms(std::size_t degree, const std::vector<std::pair<std::size_t, Integer>>& terms) {
    std::vector<Integer> c(degree + 1, Integer(0));
    for (const auto& [k, v] : terms) c[k] += v;
    return IntPoly(std::move(c));
}

}  // namespace

IntPoly make_family(const FamilySpec& spec) {
    check_arity(spec);
    const auto& p = spec.params;
    switch (spec.id) {
        case FamilyId::f: return IntPoly{Integer(1), p[0], Integer(-1), Integer(-p[0]), Integer(1)};
        case FamilyId::h: return IntPoly{Integer(1), p[0], Integer(-3), Integer(-p[0]), Integer(1)};
        case FamilyId::g: {
            if (p[0] < 2 || p[0] > kMaxDegree) throw std::invalid_argument("family g: degree n must lie in [2, 64]");
            const auto n = p[0].get_ui();
            return from_terms(n, {{n, Integer(1)}, {n - 1, Integer(-(p[1] + 3))}, {1, p[1]}, {0, Integer(1)}});
        }
        case FamilyId::F: {
            const std::size_t n = p.size() + 2;
            if (static_cast<long>(n) > kMaxDegree) throw std::invalid_argument("family F: too many parameters");
            Integer sum = 3;
            for (const auto& v : p) sum += v;
            std::vector<std::pair<std::size_t, Integer>> terms{{n, Integer(1)}, {n - 1, Integer(-sum)}, {0, Integer(1)}};
            for (std::size_t i = 0; i < p.size(); ++i) terms.emplace_back(n - 2 - i, p[i]);
            return from_terms(n, terms);
        }
        case FamilyId::nagell_nonGalois:
            return IntPoly{Integer(-1), Integer(-p[0]), Integer(p[0] - 1), Integer(1)};
        case FamilyId::nagell_Galois:
            return IntPoly{Integer(1), Integer(-(p[0] + 3)), p[0], Integer(1)};
        case FamilyId::niklasch_smart:
            return IntPoly{Integer(-1), p[0], Integer(1), p[0], Integer(1)};
    }
    throw std::logic_error("make_family: bad family id");
}

std::string_view paper_range(FamilyId id) {
    switch (id) {
        case FamilyId::f: return "t >= 4";
        case FamilyId::h: return "t >= 7";
        case FamilyId::g: return "n >= 4, t >= 4";
        case FamilyId::F: return "all t_i >= 1";
        case FamilyId::nagell_nonGalois: return "k >= 3";
        case FamilyId::nagell_Galois: return "k >= -1";
        case FamilyId::niklasch_smart: return "a >= 1";
    }
    return "?";
}

bool in_paper_range(const FamilySpec& spec) {
    check_arity(spec);
    const auto& p = spec.params;
    switch (spec.id) {
        case FamilyId::f: return p[0] >= 4;
        case FamilyId::h: return p[0] >= 7;
        case FamilyId::g: return p[0] >= 4 && p[1] >= 4;
        case FamilyId::F:
            return std::all_of(p.begin(), p.end(), [](const Integer& v) { return v >= 1; });
        case FamilyId::nagell_nonGalois: return p[0] >= 3;
        case FamilyId::nagell_Galois: return p[0] >= -1;
        case FamilyId::niklasch_smart: return p[0] >= 1;
    }
    return false;
}

bool VerificationReport::all_passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

const CheckResult* VerificationReport::find(std::string_view name) const {
    auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.name == name; });
    return it == checks.end() ? nullptr : &*it;
}

namespace {

bool is_quadratic_family(FamilyId id) { return id == FamilyId::f || id == FamilyId::h; }

bool is_g4(const FamilySpec& spec) { return spec.id == FamilyId::g && spec.params[0] == 4; }

bool quartic_family(const FamilySpec& spec) {
    switch (spec.id) {
        case FamilyId::f:
        case FamilyId::h:
        case FamilyId::niklasch_smart: return true;
        case FamilyId::g: return spec.params[0] == 4;
        case FamilyId::F: return spec.params.size() == 2;
        default: return false;
    }
}

struct Expectations {
    std::optional<int> real_roots;
    std::optional<int> unit_rank;
    std::optional<GaloisClass> galois;
};

Expectations expectations(const FamilySpec& spec) {
    switch (spec.id) {
        case FamilyId::f:
        case FamilyId::h: return {4, 3, GaloisClass::D4};
        case FamilyId::g:
            if (is_g4(spec)) return {4, 3, GaloisClass::S4};
            return {};
        case FamilyId::nagell_nonGalois:
        case FamilyId::nagell_Galois: return {3, 2, std::nullopt};
        case FamilyId::niklasch_smart: return {2, 2, std::nullopt};
        case FamilyId::F: return {};
    }
    return {};
}

std::string join_factors(const std::vector<IntPoly>& factors) {
    std::string s;
    for (const auto& f : factors) {
        if (!s.empty()) s += '*';
        s += '(' + f.to_string() + ')';
    }
    return s;
}

CheckStatus status_of(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

class Checklist {
  public:
    void add(std::string name, CheckStatus status, std::string witness = {}) {
        checks_.push_back(CheckResult{std::move(name), status, std::move(witness)});
    }
    // Runs `body`; a thrown exception becomes a failed check carrying its message.
    template <class Fn>
    void run(const std::string& name, Fn&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            checks_.erase(std::remove_if(checks_.begin(), checks_.end(),
                                         [&](const CheckResult& c) { return c.name == name; }),
                          checks_.end());
            add(name, CheckStatus::fail, std::string("error: ") + e.what());
        }
    }
    std::vector<CheckResult> take() { return std::move(checks_); }

  private:
    std::vector<CheckResult> checks_;
};

}  // namespace

std::vector<std::string> claim_names(const FamilySpec& spec) {
    check_arity(spec);
    std::vector<std::string> names{"irreducible", "nagell_test", "real_roots", "unit_rank"};
    names.emplace_back(spec.id == FamilyId::niklasch_smart ? "minus_alpha_squared_exceptional" : "alpha_exceptional");
    if (quartic_family(spec)) {
        names.emplace_back("galois");
        names.emplace_back("frobenius_consistent");
    }
    if (is_quadratic_family(spec.id) || is_g4(spec)) names.emplace_back("invariants_all_real");
    if (is_quadratic_family(spec.id)) {
        for (const char* n : {"alpha_squared_exceptional", "one_plus_alpha_unit", "eighteen_units",
                              "quadratic_subfield", "graeffe_agreement"}) {
            names.emplace_back(n);
        }
    }
    if (spec.id == FamilyId::g || spec.id == FamilyId::F) names.emplace_back("perron");
    if (is_g4(spec)) {
        names.emplace_back("mod2_irreducible");
        names.emplace_back("discriminant_positive");
        names.emplace_back("no_quadratic_subfield");
    }
    return names;
}

VerificationReport verify(const FamilySpec& spec) {
    VerificationReport report;
    report.spec = spec;
    report.polynomial = make_family(spec);
    report.in_range = in_paper_range(spec);
    const IntPoly& p = report.polynomial;
    const Expectations expect = expectations(spec);
    Checklist list;
    const std::string needs_field = "requires an irreducible polynomial";

    // irreducibility
    report.irreducibility = irreducibility_evidence(p);
    {
        const auto& v = report.irreducibility;
        std::string w = v.status == IrreducibilityStatus::reducible_with_witness ? join_factors(v.factors) : v.criterion;
        list.add("irreducible", status_of(v.proven()), std::move(w));
    }
    std::optional<NumberField> field;
    if (report.irreducibility.proven()) field.emplace(p);

    // Nagell's test on the minimal polynomial of the family's exceptional unit.
    // For niklasch_smart, p(1) = 2a+1, so the test runs on -alpha^2 instead:
    // alpha(alpha+a)(alpha^2+1) = 1 makes both -alpha^2 and 1+alpha^2 units.
    const bool use_square = spec.id == FamilyId::niklasch_smart;
    list.run("nagell_test", [&] {
        IntPoly g = p;
        std::string prefix;
        if (use_square) {
            if (!field) return list.add("nagell_test", CheckStatus::fail, needs_field);
            const NFElement a = field->generator();
            const MinPoly mp = minpoly(-(a * a));
            if (!mp.integral || mp.integral->degree() != p.degree()) {
                return list.add("nagell_test", CheckStatus::fail, "-alpha^2 does not generate the field");
            }
            g = *mp.integral;
            prefix = "minpoly(-alpha^2)=" + g.to_string() + ", ";
        }
        const Integer at0 = evaluate(g, Integer(0));
        const Integer at1 = evaluate(g, Integer(1));
        list.add("nagell_test", status_of(abs(at0) == 1 && abs(at1) == 1),
                 prefix + "p(0)=" + to_string(at0) + ", p(1)=" + to_string(at1));
    });

    Signature sig = signature(p);
    report.real_roots = sig.r1;
    if (expect.real_roots) {
        list.add("real_roots", status_of(sig.r1 == *expect.real_roots), std::to_string(sig.r1));
    } else {
        list.add("real_roots", CheckStatus::not_applicable, std::to_string(sig.r1));
    }

    if (field) {
        report.unit_rank = unit_rank(sig);
        const std::string w = std::to_string(*report.unit_rank);
        list.add("unit_rank", expect.unit_rank ? status_of(*report.unit_rank == *expect.unit_rank)
                                               : CheckStatus::not_applicable,
                 w);
    } else {
        list.add("unit_rank", expect.unit_rank ? CheckStatus::fail : CheckStatus::not_applicable, needs_field);
    }

    const std::string unit_check = use_square ? "minus_alpha_squared_exceptional" : "alpha_exceptional";
    list.run(unit_check, [&] {
        if (!field) return list.add(unit_check, CheckStatus::fail, needs_field);
        const NFElement a = field->generator();
        list.add(unit_check, status_of(is_exceptional(use_square ? -(a * a) : a)));
    });

    if (quartic_family(spec)) {
        list.run("galois", [&] {
            if (!field) return list.add("galois", expect.galois ? CheckStatus::fail : CheckStatus::not_applicable, needs_field);
            report.galois = classify_quartic(p);
            const std::string w(to_string(*report.galois));
            list.add("galois", expect.galois ? status_of(*report.galois == *expect.galois) : CheckStatus::not_applicable, w);
        });
        list.run("frobenius_consistent", [&] {
            if (!report.galois) return list.add("frobenius_consistent", CheckStatus::not_applicable, "no classification");
            const auto profile = frobenius_profile(p);
            std::string w;
            for (const auto& [type, count] : profile.observed) {
                if (!w.empty()) w += ',';
                w += type + ':' + std::to_string(count);
            }
            list.add("frobenius_consistent", status_of(profile_consistent_with(profile, *report.galois)), w);
        });
    }

    if (is_quadratic_family(spec.id) || is_g4(spec)) {
        const auto inv = quartic_invariants(p[3], p[2], p[1]);
        list.add("invariants_all_real", status_of(all_real_sufficient(inv)),
                 "delta=" + to_string(inv.delta) + ", D=" + to_string(inv.dval) + ", P=" + to_string(inv.pval));
    }

    if (is_quadratic_family(spec.id)) {
        const Integer& t = spec.params[0];
        const auto family = spec.id == FamilyId::f ? QuadraticFamily::f : QuadraticFamily::h;
        list.run("alpha_squared_exceptional", [&] {
            if (!field) return list.add("alpha_squared_exceptional", CheckStatus::fail, needs_field);
            const NFElement a = field->generator();
            list.add("alpha_squared_exceptional", status_of(is_exceptional(a * a)));
        });
        list.run("one_plus_alpha_unit", [&] {
            if (!field) return list.add("one_plus_alpha_unit", CheckStatus::fail, needs_field);
            const NFElement one_plus = field->from_rational(Rational(1)) + field->generator();
            const Integer shifted_constant = shift_by(p, Integer(1))[0];
            list.add("one_plus_alpha_unit", status_of(is_unit(one_plus) && abs(shifted_constant) == 1),
                     "p(x-1) constant term " + to_string(shifted_constant));
        });
        list.run("eighteen_units", [&] {
            if (!field) return list.add("eighteen_units", CheckStatus::fail, needs_field);
            const auto units = eighteen_units(*field);
            report.exceptional_units = units.count_distinct;
            list.add("eighteen_units", status_of(units.count_distinct == 18 && units.all_exceptional),
                     std::to_string(units.count_distinct) + (units.all_exceptional ? " exceptional" : " (not all exceptional)"));
        });
        list.run("quadratic_subfield", [&] {
            if (!field) return list.add("quadratic_subfield", CheckStatus::fail, needs_field);
            const auto w = subfield_witness(*field, t, family);
            report.subfield_d = w.d;
            const Integer expected = squarefree_part(family == QuadraticFamily::f ? Integer(t * t - 4) : Integer(t * t + 4));
            list.add("quadratic_subfield", status_of(w.d == expected && w.d > 1),
                     "d=" + to_string(w.d) + ", beta minpoly " + w.beta_minpoly.to_string());
        });
        list.run("graeffe_agreement", [&] {
            if (!field) return list.add("graeffe_agreement", CheckStatus::fail, needs_field);
            const NFElement a = field->generator();
            const MinPoly mp = minpoly(a * a);
            const IntPoly g = graeffe_square_minpoly(p);
            list.add("graeffe_agreement", status_of(mp.integral && *mp.integral == g), g.to_string());
        });
    }

    if (spec.id == FamilyId::g || spec.id == FamilyId::F) {
        list.run("perron", [&] {
            const PerronCase c = perron_check(p);
            const std::string w(to_string(c));
            if (spec.id == FamilyId::g) {
                list.add("perron", status_of(c == PerronCase::case_i), w);
            } else {
                list.add("perron", c == PerronCase::not_applicable ? CheckStatus::not_applicable : CheckStatus::pass, w);
            }
        });
    }

    if (is_g4(spec)) {
        list.run("mod2_irreducible", [&] { list.add("mod2_irreducible", status_of(irreducible_mod_p(p, 2))); });
        const Integer disc = discriminant(p);
        list.add("discriminant_positive", status_of(sgn(disc) > 0), to_string(disc));
        if (report.galois) {
            list.add("no_quadratic_subfield", status_of(*report.galois == GaloisClass::S4),
                     "galois " + std::string(to_string(*report.galois)));
        } else {
            list.add("no_quadratic_subfield", CheckStatus::fail, "no classification");
        }
    }

    report.checks = list.take();
    return report;
}

std::vector<VerificationReport> verify_sweep(FamilyId id, const std::vector<Integer>& fixed, const Integer& first,
                                             const Integer& last, unsigned workers) {
    if (last < first) return {};
    const Integer span = last - first + 1;
    if (!span.fits_ulong_p() || span > 10'000'000) throw std::invalid_argument("verify_sweep: range too large");
    const std::size_t count = span.get_ui();
    std::vector<FamilySpec> specs;
    specs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        FamilySpec s{id, fixed};
        s.params.push_back(first + Integer(static_cast<unsigned long>(i)));
        check_arity(s);
        specs.push_back(std::move(s));
    }

    std::vector<VerificationReport> out(count);
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                out[i] = verify(specs[i]);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

Integer evertse_bound(long n, long r) {
    if (n < 1 || r < 0) throw std::invalid_argument("evertse_bound: need n >= 1 and r >= 0");
    return 3 * ipow(Integer(7), static_cast<unsigned long>(n + 2 * r + 2));
}

}  // namespace exunits
