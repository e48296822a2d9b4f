// Poisson brackets on polynomial algebras, Hamiltonian derivations and the
// principal logarithmic test along a divisor given by single variables.

#ifndef LOGPOISSON_POISSON_HPP
#define LOGPOISSON_POISSON_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logpoisson/poly.hpp"
#include "logpoisson/poly_io.hpp"

namespace logp {

/// A derivation sum_j coeffs[j] * d/dx_j of the polynomial ring.
struct Derivation {
    std::vector<Poly> coeffs;

    Derivation() = default;
    explicit Derivation(std::size_t n) : coeffs(n, Poly(n)) {}
    explicit Derivation(std::vector<Poly> c) : coeffs(std::move(c)) {}

    std::size_t nvars() const { return coeffs.size(); }

    Poly operator()(const Poly& f) const {
        if (f.nvars() != coeffs.size()) throw VariableMismatch(f.nvars(), coeffs.size());
        Poly out(f.nvars());
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (coeffs[j].is_zero()) continue;
            out += coeffs[j] * partial(f, j);
        }
        return out;
    }

    bool is_zero() const {
        return std::all_of(coeffs.begin(), coeffs.end(), [](const Poly& p) { return p.is_zero(); });
    }

    Derivation& operator+=(const Derivation& o) {
        for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] += o.coeffs[j];
        return *this;
    }
    Derivation& operator-=(const Derivation& o) {
        for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] -= o.coeffs[j];
        return *this;
    }
    friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
    friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
    friend Derivation operator*(const Poly& f, Derivation d) {
        for (auto& c : d.coeffs) c = f * c;
        return d;
    }
    friend bool operator==(const Derivation&, const Derivation&) = default;
};

/// Commutator [a, b] of two derivations.
inline Derivation commutator(const Derivation& a, const Derivation& b) {
    Derivation out(a.nvars());
    for (std::size_t j = 0; j < a.nvars(); ++j) out.coeffs[j] = a(b.coeffs[j]) - b(a.coeffs[j]);
    return out;
}

/// Skew bracket table on generators. Only {x_i, x_j} with i < j is stored.
class PoissonStructure {
public:
    PoissonStructure() = default;

    explicit PoissonStructure(std::vector<std::string> names)
        : names_(std::move(names)), table_(names_.size() * names_.size(), Poly(names_.size())) {}

    explicit PoissonStructure(std::size_t n) : PoissonStructure(default_names(n)) {}

    std::size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }

    /// Sets {x_i, x_j} = value; i > j stores the negated value at (j, i).
    void set(std::size_t i, std::size_t j, Poly value) {
        if (i == j) throw std::invalid_argument("bracket of a variable with itself is zero");
        if (i >= nvars() || j >= nvars()) throw std::out_of_range("bracket index out of range");
        if (value.nvars() != nvars()) throw VariableMismatch(value.nvars(), nvars());
        if (i > j) {
            std::swap(i, j);
            value = -value;
        }
        table_[i * nvars() + j] = std::move(value);
    }

    /// {x_i, x_j} for any i, j.
    Poly get(std::size_t i, std::size_t j) const {
        if (i == j) return Poly(nvars());
        if (i < j) return table_[i * nvars() + j];
        return -table_[j * nvars() + i];
    }

    bool is_zero() const {
        for (std::size_t i = 0; i < nvars(); ++i)
            for (std::size_t j = i + 1; j < nvars(); ++j)
                if (!get(i, j).is_zero()) return false;
        return true;
    }

    Poly var(std::size_t j) const { return Poly::variable(nvars(), j); }

private:
    std::vector<std::string> names_;
    std::vector<Poly> table_;
};

/// {f, g} = sum_{i<j} p_ij (d_i f d_j g - d_j f d_i g).
inline Poly bracket(const PoissonStructure& P, const Poly& f, const Poly& g) {
    const std::size_t n = P.nvars();
    if (f.nvars() != n) throw VariableMismatch(f.nvars(), n);
    if (g.nvars() != n) throw VariableMismatch(g.nvars(), n);
    std::vector<Poly> df, dg;
    for (std::size_t j = 0; j < n; ++j) {
        df.push_back(partial(f, j));
        dg.push_back(partial(g, j));
    }
    Poly out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Poly pij = P.get(i, j);
            if (pij.is_zero()) continue;
            out += pij * (df[i] * dg[j] - df[j] * dg[i]);
        }
    return out;
}

/// {x_i,{x_j,x_k}} + {x_j,{x_k,x_i}} + {x_k,{x_i,x_j}}.
inline Poly jacobiator(const PoissonStructure& P, std::size_t i, std::size_t j, std::size_t k) {
    auto x = [&](std::size_t a) { return P.var(a); };
    return bracket(P, x(i), P.get(j, k)) + bracket(P, x(j), P.get(k, i)) + bracket(P, x(k), P.get(i, j));
}

struct JacobiReport {
    bool pass = true;
    bool vacuous = false;  // fewer than three variables
    std::vector<std::pair<std::vector<std::size_t>, Poly>> failures;
};

/// Checks all coordinate triples; sufficient because the bracket is a biderivation.
inline JacobiReport check_jacobi(const PoissonStructure& P) {
    JacobiReport r;
    const std::size_t n = P.nvars();
    r.vacuous = n < 3;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Poly jac = jacobiator(P, i, j, k);
                if (!jac.is_zero()) {
                    r.pass = false;
                    r.failures.push_back({{i, j, k}, std::move(jac)});
                }
            }
    return r;
}

/// H(df) = {f, -} as the derivation with coefficients {f, x_j}.
inline Derivation hamiltonian(const PoissonStructure& P, const Poly& f) {
    Derivation d(P.nvars());
    for (std::size_t j = 0; j < P.nvars(); ++j) d.coeffs[j] = bracket(P, f, P.var(j));
    return d;
}

class Unsupported : public Error {
public:
    using Error::Error;
};

/// Result of reducing a divisor generator u = c * x_j^m to the variable x_j.
struct Normalization {
    std::size_t variable = 0;
    unsigned multiplicity = 1;  // du/u = multiplicity * dx_j/x_j
    Rational scale = 1;
};

/// Reduces a generator c*x_j^m (m >= 1) to its variable index; throws
/// Unsupported for anything else.
inline Normalization normalize_squarefree(const Poly& u) {
    if (u.is_zero()) throw std::invalid_argument("normalize_squarefree: zero generator");
    if (u.size() != 1) throw Unsupported("divisor generator is not a single-variable monomial");
    const auto& [m, c] = *u.terms().begin();
    std::optional<std::size_t> var;
    for (std::size_t j = 0; j < m.nvars(); ++j) {
        if (m[j] == 0) continue;
        if (var) throw Unsupported("divisor generator involves more than one variable");
        var = j;
    }
    if (!var) throw Unsupported("divisor generator is a constant");
    return Normalization{*var, m[*var], c};
}

/// The set S of divisor generators together with their normalized variables.
struct LogDivisorSpec {
    std::vector<Poly> generators;
    std::vector<Normalization> normalized;

    std::vector<std::size_t> variables() const {
        std::vector<std::size_t> out;
        for (const auto& n : normalized) out.push_back(n.variable);
        return out;
    }
    bool contains(std::size_t j) const {
        return std::any_of(normalized.begin(), normalized.end(),
                           [j](const Normalization& n) { return n.variable == j; });
    }
};

/// Normalizes every generator; distinct generators must live on distinct variables.
inline LogDivisorSpec make_divisor(std::vector<Poly> generators) {
    LogDivisorSpec S;
    for (const auto& u : generators) {
        Normalization n = normalize_squarefree(u);
        if (S.contains(n.variable))
            throw Unsupported("two divisor generators share variable index " + std::to_string(n.variable));
        S.normalized.push_back(n);
    }
    S.generators = std::move(generators);
    return S;
}

struct LogPrincipalReport {
    bool pass = true;
    // first offending pair (k, j): {x_k, x_j} not divisible by x_j
    std::optional<std::pair<std::size_t, std::size_t>> witness;
    Poly offending;
};

/// Checks x_j | {x_k, x_j} for every divisor variable x_j and every generator x_k.
/// Generator-level checks suffice by the Leibniz rule.
inline LogPrincipalReport is_log_principal(const PoissonStructure& P, const LogDivisorSpec& S) {
    LogPrincipalReport r;
    for (std::size_t j : S.variables()) {
        for (std::size_t k = 0; k < P.nvars(); ++k) {
            Poly b = P.get(k, j);
            if (!exact_divide(b, P.var(j))) {
                r.pass = false;
                r.witness = {k, j};
                r.offending = b;
                return r;
            }
        }
    }
    return r;
}

}  // namespace logp

#endif  // LOGPOISSON_POISSON_HPP
