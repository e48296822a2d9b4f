// Sparse multivariate polynomials over the rationals.
//
// Terms are kept in a map ordered by graded lexicographic order on exponent
// vectors (total degree first, then lexicographic with x_0 > x_1 > ...), so
// the leading term is always the last entry of the map.

#ifndef LOGPOISSON_POLY_HPP
#define LOGPOISSON_POLY_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace logp {

using Rational = mpq_class;

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class VariableMismatch : public Error {
public:
    VariableMismatch(std::size_t a, std::size_t b)
        : Error("variable count mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

/// Raised when a coefficient that must be divisible by a divisor variable is not.
class DivisionObstruction : public Error {
public:
    using Error::Error;
};

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t nvars, std::size_t j) {
        Monomial m(nvars);
        m.exps_.at(j) = 1;
        return m;
    }

    std::size_t nvars() const { return exps_.size(); }
    unsigned operator[](std::size_t j) const { return exps_[j]; }
    const std::vector<unsigned>& exponents() const { return exps_; }

    unsigned degree() const {
        unsigned d = 0;
        for (unsigned e : exps_) d += e;
        return d;
    }

    bool divides(const Monomial& other) const {
        for (std::size_t j = 0; j < exps_.size(); ++j)
            if (exps_[j] > other.exps_[j]) return false;
        return true;
    }

    /// this / other; requires other.divides(*this).
    Monomial quotient(const Monomial& other) const {
        Monomial q(*this);
        for (std::size_t j = 0; j < exps_.size(); ++j) q.exps_[j] -= other.exps_[j];
        return q;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        if (a.nvars() != b.nvars()) throw VariableMismatch(a.nvars(), b.nvars());
        Monomial m(a);
        for (std::size_t j = 0; j < m.exps_.size(); ++j) m.exps_[j] += b.exps_[j];
        return m;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    // graded lexicographic
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        return a.exps_ <=> b.exps_;
    }

private:
    std::vector<unsigned> exps_;
};

class Poly {
public:
    using TermMap = std::map<Monomial, Rational>;

    Poly() = default;
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const Rational& c) {
        Poly p(nvars);
        if (c != 0) p.terms_.emplace(Monomial(nvars), c);
        return p;
    }
    static Poly variable(std::size_t nvars, std::size_t j) {
        if (j >= nvars) throw std::out_of_range("variable index out of range");
        Poly p(nvars);
        p.terms_.emplace(Monomial::variable(nvars, j), Rational(1));
        return p;
    }
    static Poly term(const Monomial& m, const Rational& c) {
        Poly p(m.nvars());
        if (c != 0) p.terms_.emplace(m, c);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
    }
    Rational constant_term() const {
        auto it = terms_.find(Monomial(nvars_));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Total degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree()); }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Leading (monomial, coefficient) under grlex; requires nonzero.
    const std::pair<const Monomial, Rational>& leading() const { return *terms_.rbegin(); }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& g) {
        check(g);
        for (const auto& [m, c] : g.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& g) {
        check(g);
        for (const auto& [m, c] : g.terms_) add_term(m, -c);
        return *this;
    }
    Poly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [m, c] : terms_) c *= s;
        }
        return *this;
    }

    friend Poly operator+(Poly f, const Poly& g) { return f += g; }
    friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
    friend Poly operator-(Poly f) {
        for (auto& [m, c] : f.terms_) c = -c;
        return f;
    }
    friend Poly operator*(Poly f, const Rational& s) { return f *= s; }
    friend Poly operator*(const Rational& s, Poly f) { return f *= s; }

    friend Poly operator*(const Poly& f, const Poly& g) {
        f.check(g);
        Poly out(f.nvars_);
        for (const auto& [mf, cf] : f.terms_)
            for (const auto& [mg, cg] : g.terms_) out.add_term(mf * mg, cf * cg);
        return out;
    }
    Poly& operator*=(const Poly& g) { return *this = *this * g; }

    /// Multiply by a single monomial.
    Poly shifted(const Monomial& m) const {
        Poly out(nvars_);
        for (const auto& [mf, cf] : terms_) out.terms_.emplace_hint(out.terms_.end(), mf * m, cf);
        return out;
    }

    friend bool operator==(const Poly& f, const Poly& g) {
        return f.nvars_ == g.nvars_ && f.terms_ == g.terms_;
    }

private:
    void check(const Poly& g) const {
        if (nvars_ != g.nvars_) throw VariableMismatch(nvars_, g.nvars_);
    }

    std::size_t nvars_ = 0;
    TermMap terms_;
};

inline Poly add(const Poly& f, const Poly& g) { return f + g; }
inline Poly mul(const Poly& f, const Poly& g) { return f * g; }

/// Formal partial derivative with respect to variable j.
inline Poly partial(const Poly& f, std::size_t j) {
    if (j >= f.nvars()) throw std::out_of_range("partial: variable index out of range");
    Poly out(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        unsigned e = m[j];
        if (e == 0) continue;
        auto exps = m.exponents();
        --exps[j];
        out.add_term(Monomial(std::move(exps)), c * e);
    }
    return out;
}

/// Returns q with f = q*g, or nullopt when g does not divide f.
///
/// Plain grlex division by a single polynomial; since {g} is a Groebner basis
/// of gA, a zero remainder is equivalent to divisibility.
inline std::optional<Poly> exact_divide(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::invalid_argument("exact_divide: division by zero polynomial");
    if (f.nvars() != g.nvars()) throw VariableMismatch(f.nvars(), g.nvars());
    const auto& [lm, lc] = g.leading();
    Poly rem = f;
    Poly quot(f.nvars());
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        if (!lm.divides(rm)) return std::nullopt;
        Monomial qm = rm.quotient(lm);
        Rational qc = rc / lc;
        quot.add_term(qm, qc);
        Poly sub = g.shifted(qm);
        sub *= qc;
        rem -= sub;
    }
    return quot;
}

/// All monomials in n variables of total degree exactly d, ordered
/// lexicographically descending (x^d first, last variable^d last).
/// The count is C(d+n-1, n-1).
inline std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
    if (n == 0) throw std::invalid_argument("monomials_of_degree: need at least one variable");
    std::vector<Monomial> out;
    std::vector<unsigned> exps(n, 0);
    // recursive fill: first variable takes the largest share first
    auto rec = [&](auto&& self, std::size_t j, unsigned left) -> void {
        if (j + 1 == n) {
            exps[j] = left;
            out.emplace_back(exps);
            return;
        }
        for (unsigned e = left + 1; e-- > 0;) {
            exps[j] = e;
            self(self, j + 1, left - e);
        }
    };
    rec(rec, 0, d);
    return out;
}

}  // namespace logp

#endif  // LOGPOISSON_POLY_HPP
