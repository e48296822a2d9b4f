// Seeded random polynomials, forms and cochains for property checks.

#ifndef LOGPOISSON_RANDOM_HPP
#define LOGPOISSON_RANDOM_HPP

#include <random>

#include "logpoisson/complex.hpp"

namespace logp {

class RandomPolys {
public:
    explicit RandomPolys(std::uint64_t seed = 0x5eed) : rng_(seed) {}

    /// Up to max_terms terms of degree <= max_degree with small integer coefficients.
    Poly poly(std::size_t nvars, unsigned max_degree, unsigned max_terms = 4) {
        Poly p(nvars);
        std::uniform_int_distribution<unsigned> nterms(0, max_terms);
        std::uniform_int_distribution<int> coef(-3, 3);
        std::uniform_int_distribution<unsigned> deg(0, max_degree);
        unsigned t = nterms(rng_);
        for (unsigned i = 0; i < t; ++i) {
            std::vector<unsigned> exps(nvars, 0);
            unsigned d = deg(rng_);
            std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
            for (unsigned e = 0; e < d; ++e) ++exps[var(rng_)];
            p.add_term(Monomial(std::move(exps)), coef(rng_));
        }
        return p;
    }

    /// Like poly() but never zero.
    Poly nonzero_poly(std::size_t nvars, unsigned max_degree, unsigned max_terms = 4) {
        for (;;) {
            Poly p = poly(nvars, max_degree, max_terms);
            if (!p.is_zero()) return p;
        }
    }

    OneForm form(std::size_t nvars, unsigned max_degree) {
        OneForm a(nvars);
        for (auto& c : a.coeffs) c = poly(nvars, max_degree, 3);
        return a;
    }

    Cochain cochain(std::size_t nvars, std::size_t rank, std::size_t k, unsigned max_degree) {
        Cochain c(k, nvars);
        for (const auto& t : increasing_tuples(rank, k)) c.add(t, poly(nvars, max_degree, 3));
        return c;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace logp

#endif  // LOGPOISSON_RANDOM_HPP
