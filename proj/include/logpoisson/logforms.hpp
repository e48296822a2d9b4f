// The free module of logarithmic 1-forms with basis {dx_j/x_j (divisor
// variables), dx_l (others)}, the logarithmic Hamiltonian map, the induced
// bracket on log forms and the extension bracket on A + log forms.

#ifndef LOGPOISSON_LOGFORMS_HPP
#define LOGPOISSON_LOGFORMS_HPP

#include <utility>
#include <vector>

#include "logpoisson/poisson.hpp"

namespace logp {

struct BasisForm {
    enum class Kind { LogVar, Exact };
    Kind kind = Kind::Exact;
    std::size_t var = 0;

    bool is_log() const { return kind == Kind::LogVar; }
    friend bool operator==(const BasisForm&, const BasisForm&) = default;
};

class LogBasis {
public:
    LogBasis() = default;

    /// One form per variable in declared order: LogVar on divisor variables.
    LogBasis(std::size_t nvars, const LogDivisorSpec& S) {
        for (std::size_t j = 0; j < nvars; ++j)
            forms_.push_back({S.contains(j) ? BasisForm::Kind::LogVar : BasisForm::Kind::Exact, j});
    }

    /// Basis of ordinary Kahler differentials dx_1..dx_n.
    static LogBasis exact(std::size_t nvars) { return LogBasis(nvars, LogDivisorSpec{}); }

    std::size_t size() const { return forms_.size(); }
    const BasisForm& operator[](std::size_t i) const { return forms_[i]; }
    const std::vector<BasisForm>& forms() const { return forms_; }

    /// The variable x_j for LogVar(j), 1 for Exact: the denominator of the form.
    Poly denominator(std::size_t i) const {
        return forms_[i].is_log() ? Poly::variable(size(), forms_[i].var) : Poly::constant(size(), 1);
    }

    std::string label(std::size_t i, const std::vector<std::string>& names) const {
        const auto& v = names.at(forms_[i].var);
        return forms_[i].is_log() ? "d" + v + "/" + v : "d" + v;
    }

private:
    std::vector<BasisForm> forms_;
};

/// Element sum_i coeffs[i] * forms[i] of the log form module.
struct OneForm {
    std::vector<Poly> coeffs;

    OneForm() = default;
    explicit OneForm(std::size_t n) : coeffs(n, Poly(n)) {}
    explicit OneForm(std::vector<Poly> c) : coeffs(std::move(c)) {}

    std::size_t size() const { return coeffs.size(); }
    bool is_zero() const {
        for (const auto& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }

    OneForm& operator+=(const OneForm& o) {
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
        return *this;
    }
    OneForm& operator-=(const OneForm& o) {
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
        return *this;
    }
    friend OneForm operator+(OneForm a, const OneForm& b) { return a += b; }
    friend OneForm operator-(OneForm a, const OneForm& b) { return a -= b; }
    friend OneForm operator*(const Poly& f, OneForm a) {
        for (auto& c : a.coeffs) c = f * c;
        return a;
    }
    friend bool operator==(const OneForm&, const OneForm&) = default;
};

inline Poly divide_or_throw(const Poly& f, std::size_t var, const char* context) {
    auto q = exact_divide(f, Poly::variable(f.nvars(), var));
    if (!q) throw DivisionObstruction(std::string(context) + ": coefficient not divisible by divisor variable");
    return *q;
}

/// H~(e) for a basis form: H(dx_j), divided by x_j when e = dx_j/x_j.
inline Derivation htilde_basis(const PoissonStructure& P, const BasisForm& e) {
    Derivation h = hamiltonian(P, P.var(e.var));
    if (e.is_log())
        for (auto& c : h.coeffs) c = divide_or_throw(c, e.var, "htilde_basis");
    return h;
}

/// H~(alpha) for a general log form.
inline Derivation htilde(const PoissonStructure& P, const LogBasis& B, const OneForm& alpha) {
    Derivation out(P.nvars());
    for (std::size_t i = 0; i < B.size(); ++i) {
        if (alpha.coeffs[i].is_zero()) continue;
        out += alpha.coeffs[i] * htilde_basis(P, B[i]);
    }
    return out;
}

/// df in the basis B: x_j d_j f on dx_j/x_j, d_l f on dx_l.
inline OneForm express_d(const LogBasis& B, const Poly& f) {
    OneForm out(B.size());
    for (std::size_t i = 0; i < B.size(); ++i) {
        const auto& e = B[i];
        Poly d = partial(f, e.var);
        out.coeffs[i] = e.is_log() ? Poly::variable(f.nvars(), e.var) * d : std::move(d);
    }
    return out;
}

/// The function s_ij = {x_a, x_b} / (denominators of e_i and e_j); skew in (i, j).
inline Poly structure_scalar(const PoissonStructure& P, const LogBasis& B, std::size_t i, std::size_t j) {
    if (i == j) return Poly(P.nvars());
    Poly s = P.get(B[i].var, B[j].var);
    if (B[i].is_log()) s = divide_or_throw(s, B[i].var, "structure_constants");
    if (B[j].is_log()) s = divide_or_throw(s, B[j].var, "structure_constants");
    return s;
}

/// [e_i, e_j]_s = d(s_ij) expanded in B.
inline OneForm structure_constants(const PoissonStructure& P, const LogBasis& B, std::size_t i, std::size_t j) {
    return express_d(B, structure_scalar(P, B, i, j));
}

/// Bilinear extension: sum a_i b_j [e_i,e_j] + sum H~(alpha)(b_j) e_j - sum H~(beta)(a_i) e_i.
inline OneForm bracket_s(const PoissonStructure& P, const LogBasis& B, const OneForm& alpha, const OneForm& beta) {
    const std::size_t r = B.size();
    OneForm out(r);
    for (std::size_t i = 0; i < r; ++i) {
        if (alpha.coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < r; ++j) {
            if (i == j || beta.coeffs[j].is_zero()) continue;
            OneForm sc = structure_constants(P, B, i, j);
            if (sc.is_zero()) continue;
            out += (alpha.coeffs[i] * beta.coeffs[j]) * sc;
        }
    }
    Derivation ha = htilde(P, B, alpha);
    Derivation hb = htilde(P, B, beta);
    for (std::size_t j = 0; j < r; ++j) {
        out.coeffs[j] += ha(beta.coeffs[j]);
        out.coeffs[j] -= hb(alpha.coeffs[j]);
    }
    return out;
}

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Column i holds H~(e_i) in the log vector-field frame dual to B: the
/// coefficient of x_j d_j on LogVar(j) rows and of d_l on Exact(l) rows.
inline PolyMatrix htilde_matrix(const PoissonStructure& P, const LogBasis& B) {
    const std::size_t r = B.size();
    PolyMatrix M(r, std::vector<Poly>(r, Poly(P.nvars())));
    for (std::size_t i = 0; i < r; ++i) {
        Derivation h = htilde_basis(P, B[i]);
        for (std::size_t row = 0; row < r; ++row) {
            const Poly& c = h.coeffs[B[row].var];
            M[row][i] = B[row].is_log() ? divide_or_throw(c, B[row].var, "htilde_matrix") : c;
        }
    }
    return M;
}

/// Fraction-free (Bareiss) determinant; every division is exact.
inline Poly determinant(PolyMatrix M, std::size_t nvars) {
    const std::size_t n = M.size();
    if (n == 0) return Poly::constant(nvars, 1);
    Poly prev = Poly::constant(nvars, 1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && M[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Poly(nvars);
            std::swap(M[k], M[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                auto q = exact_divide(num, prev);
                if (!q) throw Error("determinant: inexact Bareiss step");
                M[i][j] = std::move(*q);
            }
        prev = M[k][k];
    }
    Poly det = M[n - 1][n - 1];
    return negate ? -det : det;
}

struct LogSymplecticVerdict {
    bool logsymplectic = false;
    Poly determinant;
};

/// H~ is an isomorphism iff the determinant of its matrix is a nonzero constant.
inline LogSymplecticVerdict is_logsymplectic(const PoissonStructure& P, const LogBasis& B) {
    Poly det = determinant(htilde_matrix(P, B), P.nvars());
    bool unit = det.is_constant() && !det.is_zero();
    return {unit, std::move(det)};
}

/// pi(alpha, beta) = sum a_i b_j s_ij.
inline Poly pi_form(const PoissonStructure& P, const LogBasis& B, const OneForm& alpha, const OneForm& beta) {
    Poly out(P.nvars());
    for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = 0; j < B.size(); ++j) {
            if (i == j || alpha.coeffs[i].is_zero() || beta.coeffs[j].is_zero()) continue;
            out += alpha.coeffs[i] * beta.coeffs[j] * structure_scalar(P, B, i, j);
        }
    return out;
}

/// An element a + alpha of A + log forms.
struct ExtensionElement {
    Poly scalar;
    OneForm form;
    friend bool operator==(const ExtensionElement&, const ExtensionElement&) = default;
};

/// [a+alpha, b+beta] = {a,b} + pi(alpha,beta) + H~(alpha)b - H~(beta)a + [alpha,beta]_s.
inline ExtensionElement extension_bracket(const PoissonStructure& P, const LogBasis& B,
                                          const ExtensionElement& u, const ExtensionElement& v) {
    Poly s = bracket(P, u.scalar, v.scalar) + pi_form(P, B, u.form, v.form) +
             htilde(P, B, u.form)(v.scalar) - htilde(P, B, v.form)(u.scalar);
    return {std::move(s), bracket_s(P, B, u.form, v.form)};
}

}  // namespace logp

#endif  // LOGPOISSON_LOGFORMS_HPP
