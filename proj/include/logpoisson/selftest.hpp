// Randomized identity checks over the worked examples, grouped in families:
// d∘d = 0, Jacobi, Leibniz, anchor homomorphism, chain-map square, closed
// forms, and agreement of the two log de Rham routes.

#ifndef LOGPOISSON_SELFTEST_HPP
#define LOGPOISSON_SELFTEST_HPP

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "logpoisson/random.hpp"
#include "logpoisson/reference_formulas.hpp"
#include "logpoisson/worked_examples.hpp"

namespace logp {

struct SuiteResult {
    std::string family;
    std::string name;
    std::size_t cases = 0;
    bool pass = true;
    std::string detail;
};

struct SelftestReport {
    std::vector<SuiteResult> suites;

    bool pass() const {
        for (const auto& s : suites)
            if (!s.pass) return false;
        return true;
    }
    std::size_t family_count() const {
        std::set<std::string> f;
        for (const auto& s : suites) f.insert(s.family);
        return f.size();
    }
    bool family_passes(const std::string& family) const {
        for (const auto& s : suites)
            if (s.family == family && !s.pass) return false;
        return true;
    }
};

struct SelftestOptions {
    std::size_t samples = 50;
    std::uint64_t seed = 20240521;
    /// Negates one structure constant of the example-2 log algebroid; the
    /// Jacobi family must then fail.
    bool mutate_structure_constant = false;
};

namespace detail {

/// Runs `sample` `count` times; records the first failing case.
inline SuiteResult run_suite(std::string family, std::string name, std::size_t count,
                             const std::function<std::string(std::size_t)>& sample) {
    SuiteResult r{std::move(family), std::move(name), count, true, {}};
    for (std::size_t i = 0; i < count; ++i) {
        std::string failure = sample(i);
        if (!failure.empty()) {
            r.pass = false;
            r.detail = "case " + std::to_string(i) + ": " + failure;
            break;
        }
    }
    return r;
}

inline std::string nonzero(const Poly& p, const std::vector<std::string>& names) {
    return p.is_zero() ? std::string() : "residual " + to_string(p, names);
}

inline std::string nonzero(const OneForm& a, const std::vector<std::string>& names) {
    for (const auto& c : a.coeffs)
        if (!c.is_zero()) return "residual component " + to_string(c, names);
    return {};
}

inline std::string nonzero(const Cochain& c, const std::vector<std::string>& names) {
    if (c.is_zero()) return {};
    const auto& [t, p] = *c.components().begin();
    std::string idx;
    for (auto i : t) idx += std::to_string(i);
    return "residual at (" + idx + "): " + to_string(p, names);
}

}  // namespace detail

/// Compares a closed-form differential with the engine on random inputs.
inline SuiteResult check_closed_form(const LieRinehartData& L, const reference::ClosedForm& form, RandomPolys& rnd,
                                     std::size_t samples, const std::vector<std::string>& names) {
    return detail::run_suite("closed forms", form.name, samples, [&](std::size_t) -> std::string {
        reference::Tuple in;
        for (std::size_t i = 0; i < reference::tuple_size(form.nvars, form.degree); ++i)
            in.push_back(rnd.poly(form.nvars, 5, 3));
        Cochain c = reference::from_tuple(in, form.degree, form.nvars);
        reference::Tuple got = reference::to_tuple(differential(L, c), form.nvars, false);
        reference::Tuple want = form.formula(in);
        for (std::size_t i = 0; i < want.size(); ++i)
            if (!(got[i] == want[i]))
                return "component " + std::to_string(i + 1) + ": engine " + to_string(got[i], names) +
                       " vs closed form " + to_string(want[i], names);
        return {};
    });
}

inline SelftestReport run_selftest(const SelftestOptions& opt = {}) {
    SelftestReport rep;
    RandomPolys rnd(opt.seed);
    const std::size_t N = opt.samples;

    for (const WorkedExample& ex : worked_examples()) {
        const auto& P = ex.P;
        const auto& names = P.names();
        const std::size_t n = P.nvars();
        const LogBasis B = ex.basis();

        LieRinehartData log_lr = ex.log_poisson();
        if (opt.mutate_structure_constant && ex.name == "example 2") {
            auto sc = log_lr.bracket_coeffs(0, 1);
            for (auto& p : sc) p = -p;
            log_lr.set_bracket(0, 1, sc);
        }
        const LieRinehartData pois = ex.poisson();
        const LieRinehartData derham = ex.log_derham();

        // d∘d = 0
        const std::pair<const char*, const LieRinehartData*> complexes[] = {
            {"log poisson", &log_lr}, {"poisson", &pois}, {"log de Rham", &derham}};
        for (const auto& [cname, L] : complexes)
            for (std::size_t k = 0; k + 1 < L->rank(); ++k)
                rep.suites.push_back(detail::run_suite(
                    "d o d = 0", ex.name + " " + cname + " k=" + std::to_string(k), N, [&](std::size_t) {
                        Cochain c = rnd.cochain(n, L->rank(), k, 5);
                        return detail::nonzero(differential(*L, differential(*L, c)), names);
                    }));

        // Jacobi
        rep.suites.push_back(detail::run_suite("jacobi", ex.name + " poisson bracket", N, [&](std::size_t) {
            Poly f = rnd.poly(n, 4), g = rnd.poly(n, 4), h = rnd.poly(n, 4);
            Poly j = bracket(P, f, bracket(P, g, h)) + bracket(P, g, bracket(P, h, f)) +
                     bracket(P, h, bracket(P, f, g));
            return detail::nonzero(j, names);
        }));
        rep.suites.push_back(detail::run_suite("jacobi", ex.name + " log form bracket", N, [&](std::size_t) {
            OneForm a = rnd.form(n, 2), b = rnd.form(n, 2), c = rnd.form(n, 2);
            OneForm j = bracket_s(P, B, a, bracket_s(P, B, b, c)) + bracket_s(P, B, b, bracket_s(P, B, c, a)) +
                        bracket_s(P, B, c, bracket_s(P, B, a, b));
            return detail::nonzero(j, names);
        }));
        rep.suites.push_back(detail::run_suite("jacobi", ex.name + " algebroid data", N, [&](std::size_t) {
            OneForm a = rnd.form(n, 2), b = rnd.form(n, 2), c = rnd.form(n, 2);
            OneForm j = lr_bracket(log_lr, a, lr_bracket(log_lr, b, c)) +
                        lr_bracket(log_lr, b, lr_bracket(log_lr, c, a)) +
                        lr_bracket(log_lr, c, lr_bracket(log_lr, a, b));
            return detail::nonzero(j, names);
        }));

        // Leibniz: [alpha, a beta] = H~(alpha)(a) beta + a [alpha, beta]
        rep.suites.push_back(detail::run_suite("leibniz", ex.name + " log form bracket", N, [&](std::size_t) {
            OneForm a = rnd.form(n, 3), b = rnd.form(n, 3);
            Poly f = rnd.poly(n, 3);
            OneForm lhs = bracket_s(P, B, a, f * b);
            OneForm rhs = htilde(P, B, a)(f) * b + f * bracket_s(P, B, a, b);
            return detail::nonzero(lhs - rhs, names);
        }));

        // Anchor homomorphism: H~[alpha, beta] = [H~ alpha, H~ beta]
        rep.suites.push_back(detail::run_suite("anchor homomorphism", ex.name + " H~", N, [&](std::size_t) {
            OneForm a = rnd.form(n, 3), b = rnd.form(n, 3);
            Derivation lhs = htilde(P, B, bracket_s(P, B, a, b));
            Derivation rhs = commutator(htilde(P, B, a), htilde(P, B, b));
            Poly g = rnd.poly(n, 4);
            return detail::nonzero(lhs(g) - rhs(g), names) + detail::nonzero(OneForm((lhs - rhs).coeffs), names);
        }));
        rep.suites.push_back(detail::run_suite("anchor homomorphism", ex.name + " algebroid data", N, [&](std::size_t) {
            OneForm a = rnd.form(n, 3), b = rnd.form(n, 3);
            Derivation lhs = lr_anchor(log_lr, lr_bracket(log_lr, a, b));
            Derivation rhs = commutator(lr_anchor(log_lr, a), lr_anchor(log_lr, b));
            return detail::nonzero(OneForm((lhs - rhs).coeffs), names);
        }));

        // d_H~ ∘ H~ + H~ ∘ d = 0
        const LieRinehartData log_clean = ex.log_poisson();
        for (std::size_t p = 0; p <= n; ++p)
            rep.suites.push_back(detail::run_suite(
                "chain map", ex.name + " p=" + std::to_string(p), N, [&](std::size_t) {
                    Cochain w = rnd.cochain(n, n, p, 4);
                    Cochain lhs = differential(log_clean, chain_map_htilde(P, B, w)) +
                                  chain_map_htilde(P, B, log_derham_differential(B, w));
                    return detail::nonzero(lhs, names);
                }));

        // the two log de Rham routes agree
        for (std::size_t p = 0; p <= n; ++p)
            rep.suites.push_back(detail::run_suite(
                "log de Rham routes", ex.name + " p=" + std::to_string(p), N, [&](std::size_t) {
                    Cochain w = rnd.cochain(n, n, p, 5);
                    return detail::nonzero(differential(derham, w) - log_derham_differential(B, w), names);
                }));
    }

    // closed forms
    const WorkedExample e1 = example1(), e2 = example2(), e3 = example3();
    auto add_forms = [&](const LieRinehartData& L, const std::vector<reference::ClosedForm>& forms,
                         const std::vector<std::string>& names) {
        for (const auto& f : forms) rep.suites.push_back(check_closed_form(L, f, rnd, N, names));
    };
    add_forms(e1.log_poisson(), reference::example1_log(), e1.P.names());
    add_forms(e1.poisson(), reference::example1_poisson(), e1.P.names());
    add_forms(e1.log_derham(), reference::example1_derham(), e1.P.names());
    add_forms(e2.log_poisson(), reference::example2_log(), e2.P.names());
    add_forms(e2.poisson(), reference::example2_poisson(), e2.P.names());
    add_forms(e3.log_poisson(), reference::example3_log(), e3.P.names());
    add_forms(e3.poisson(), reference::example3_poisson(true), e3.P.names());
    return rep;
}

}  // namespace logp

#endif  // LOGPOISSON_SELFTEST_HPP
