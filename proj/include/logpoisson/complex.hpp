// Cochain complexes of Lie-Rinehart algebras that are free on a finite basis
// e_0..e_{r-1}. The algebra is described by its anchors rho(e_i) and the
// structure constants [e_i, e_j] = sum_m sc_ij[m] e_m; the Poisson, log
// Poisson and log de Rham complexes are all instances of one engine.

#ifndef LOGPOISSON_COMPLEX_HPP
#define LOGPOISSON_COMPLEX_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "logpoisson/logforms.hpp"

namespace logp {

using IndexTuple = std::vector<std::size_t>;

/// All strictly increasing k-tuples drawn from {0..r-1}, lexicographic.
inline std::vector<IndexTuple> increasing_tuples(std::size_t r, std::size_t k) {
    std::vector<IndexTuple> out;
    if (k > r) return out;
    IndexTuple t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = i;
    for (;;) {
        out.push_back(t);
        std::size_t i = k;
        while (i > 0 && t[i - 1] == r - k + (i - 1)) --i;
        if (i == 0) break;
        ++t[i - 1];
        for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
    }
    return out;
}

/// Sorts t in place; returns the permutation sign, or 0 on a repeated index.
inline int sort_with_sign(IndexTuple& t) {
    int sign = 1;
    for (std::size_t i = 1; i < t.size(); ++i)
        for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
            if (t[j - 1] == t[j]) return 0;
            std::swap(t[j - 1], t[j]);
            sign = -sign;
        }
    return sign;
}

struct LieRinehartData {
    std::size_t nvars = 0;
    std::vector<Derivation> anchors;            // rho(e_i)
    std::vector<std::vector<Poly>> structure;   // [i*r + j] for i < j, length r
    std::vector<std::string> basis_labels;

    std::size_t rank() const { return anchors.size(); }

    /// Coefficients of [e_i, e_j] for any i, j.
    std::vector<Poly> bracket_coeffs(std::size_t i, std::size_t j) const {
        const std::size_t r = rank();
        if (i == j) return std::vector<Poly>(r, Poly(nvars));
        if (i < j) return structure[i * r + j];
        std::vector<Poly> out = structure[j * r + i];
        for (auto& p : out) p = -p;
        return out;
    }

    void set_bracket(std::size_t i, std::size_t j, std::vector<Poly> coeffs) {
        if (i > j) {
            std::swap(i, j);
            for (auto& p : coeffs) p = -p;
        }
        structure[i * rank() + j] = std::move(coeffs);
    }
};

inline LieRinehartData make_lie_rinehart(std::size_t nvars, std::vector<Derivation> anchors) {
    LieRinehartData L;
    L.nvars = nvars;
    const std::size_t r = anchors.size();
    L.anchors = std::move(anchors);
    L.structure.assign(r * r, std::vector<Poly>(r, Poly(nvars)));
    for (std::size_t i = 0; i < r; ++i) L.basis_labels.push_back("e" + std::to_string(i));
    return L;
}

/// Alternating k-form on the basis with polynomial values; only increasing
/// tuples are stored and absent tuples are zero.
class Cochain {
public:
    Cochain() = default;
    Cochain(std::size_t degree, std::size_t nvars) : k_(degree), nvars_(nvars) {}

    std::size_t degree() const { return k_; }
    std::size_t nvars() const { return nvars_; }
    const std::map<IndexTuple, Poly>& components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    /// Value on an arbitrary tuple, using alternation.
    Poly operator()(IndexTuple t) const {
        int s = sort_with_sign(t);
        if (s == 0) return Poly(nvars_);
        auto it = comps_.find(t);
        if (it == comps_.end()) return Poly(nvars_);
        return s > 0 ? it->second : -it->second;
    }

    /// Adds value on an arbitrary tuple.
    void add(IndexTuple t, const Poly& value) {
        if (t.size() != k_) throw std::invalid_argument("cochain: tuple length does not match degree");
        int s = sort_with_sign(t);
        if (s == 0 || value.is_zero()) return;
        auto [it, inserted] = comps_.try_emplace(t, nvars_);
        if (s > 0) {
            it->second += value;
        } else {
            it->second -= value;
        }
        if (it->second.is_zero()) comps_.erase(it);
    }

    void set(IndexTuple t, const Poly& value) {
        int s = sort_with_sign(t);
        if (s == 0) return;
        comps_.erase(t);
        add(t, s > 0 ? value : -value);
    }

    Cochain& operator+=(const Cochain& o) {
        for (const auto& [t, p] : o.comps_) add(t, p);
        return *this;
    }
    Cochain& operator-=(const Cochain& o) {
        for (const auto& [t, p] : o.comps_) add(t, -p);
        return *this;
    }
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator-(Cochain a) {
        for (auto& [t, p] : a.comps_) p = -p;
        return a;
    }
    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.k_ == b.k_ && a.comps_ == b.comps_;
    }

    static Cochain scalar(const Poly& f) {
        Cochain c(0, f.nvars());
        c.add({}, f);
        return c;
    }
    static Cochain from_form(const OneForm& a) {
        Cochain c(1, a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c.add({i}, a.coeffs[i]);
        return c;
    }

private:
    std::size_t k_ = 0;
    std::size_t nvars_ = 0;
    std::map<IndexTuple, Poly> comps_;
};

/// (dc)(e_t0..e_tk) = sum_i (-1)^i rho(e_ti) c(..^i..)
///                  + sum_{i<j} (-1)^{i+j} c([e_ti,e_tj], ..^i..^j..).
/// For c.degree() == rank the zero (rank+1)-cochain is returned.
inline Cochain differential(const LieRinehartData& L, const Cochain& c) {
    const std::size_t r = L.rank();
    const std::size_t k = c.degree();
    Cochain out(k + 1, L.nvars);
    if (k >= r || c.is_zero()) return out;
    for (const IndexTuple& T : increasing_tuples(r, k + 1)) {
        Poly acc(L.nvars);
        for (std::size_t i = 0; i <= k; ++i) {
            IndexTuple rest;
            for (std::size_t m = 0; m <= k; ++m)
                if (m != i) rest.push_back(T[m]);
            Poly v = c(rest);
            if (v.is_zero()) continue;
            Poly term = L.anchors[T[i]](v);
            if (i % 2 == 0) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t j = i + 1; j <= k; ++j) {
                std::vector<Poly> br = L.bracket_coeffs(T[i], T[j]);
                IndexTuple rest{0};
                for (std::size_t m = 0; m <= k; ++m)
                    if (m != i && m != j) rest.push_back(T[m]);
                Poly sum(L.nvars);
                for (std::size_t e = 0; e < r; ++e) {
                    if (br[e].is_zero()) continue;
                    rest[0] = e;
                    Poly v = c(rest);
                    if (!v.is_zero()) sum += br[e] * v;
                }
                if ((i + j) % 2 == 0) {
                    acc += sum;
                } else {
                    acc -= sum;
                }
            }
        out.add(T, acc);
    }
    return out;
}

/// Lie-Rinehart structure on the log forms of B with anchor H~ and the
/// structure constants of the log bracket. With an all-Exact basis this is
/// the Poisson (Koszul) algebroid on Kahler differentials.
inline LieRinehartData lie_rinehart_from_poisson(const PoissonStructure& P, const LogBasis& B) {
    std::vector<Derivation> anchors;
    for (const auto& e : B.forms()) anchors.push_back(htilde_basis(P, e));
    LieRinehartData L = make_lie_rinehart(P.nvars(), std::move(anchors));
    for (std::size_t i = 0; i < B.size(); ++i) {
        L.basis_labels[i] = B.label(i, P.names());
        for (std::size_t j = i + 1; j < B.size(); ++j) L.set_bracket(i, j, structure_constants(P, B, i, j).coeffs);
    }
    return L;
}

/// Poisson complex on dx_1..dx_n: anchors H(dx_j), [dx_i, dx_j] = d{x_i, x_j}.
inline LieRinehartData poisson_complex(const PoissonStructure& P) {
    return lie_rinehart_from_poisson(P, LogBasis::exact(P.nvars()));
}

/// Logarithmic Poisson complex on the log forms along S.
inline LieRinehartData log_poisson_complex(const PoissonStructure& P, const LogDivisorSpec& S) {
    LogPrincipalReport rep = is_log_principal(P, S);
    if (!rep.pass) throw DivisionObstruction("bracket is not logarithmic principal along the divisor");
    return lie_rinehart_from_poisson(P, LogBasis(P.nvars(), S));
}

/// The log vector field dual to e_i: x_j d_j for LogVar(j), d_l for Exact(l).
inline Derivation dual_frame(const LogBasis& B, std::size_t i) {
    const std::size_t n = B.size();
    Derivation d(n);
    d.coeffs[B[i].var] = B.denominator(i);
    return d;
}

/// The log de Rham complex as the abelian algebroid of log vector fields;
/// its differential agrees with log_derham_differential.
inline LieRinehartData log_derham_complex(const LogBasis& B, const std::vector<std::string>& names) {
    std::vector<Derivation> anchors;
    for (std::size_t i = 0; i < B.size(); ++i) anchors.push_back(dual_frame(B, i));
    LieRinehartData L = make_lie_rinehart(B.size(), std::move(anchors));
    for (std::size_t i = 0; i < B.size(); ++i) L.basis_labels[i] = B.label(i, names);
    return L;
}

/// Exterior derivative on log forms: d(f e_T) = express_d(f) wedge e_T.
inline Cochain log_derham_differential(const LogBasis& B, const Cochain& c) {
    Cochain out(c.degree() + 1, c.nvars());
    for (const auto& [T, f] : c.components()) {
        OneForm df = express_d(B, f);
        for (std::size_t i = 0; i < B.size(); ++i) {
            if (df.coeffs[i].is_zero()) continue;
            IndexTuple U{i};
            U.insert(U.end(), T.begin(), T.end());
            out.add(U, df.coeffs[i]);
        }
    }
    return out;
}

/// Determinant of the square submatrix M[rows][cols].
inline Poly minor(const PolyMatrix& M, const IndexTuple& rows, const IndexTuple& cols, std::size_t nvars) {
    PolyMatrix sub(rows.size(), std::vector<Poly>(cols.size(), Poly(nvars)));
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b) sub[a][b] = M[rows[a]][cols[b]];
    return determinant(std::move(sub), nvars);
}

/// H~(w)(alpha_1..alpha_p) = (-1)^p w(H~ alpha_1, .., H~ alpha_p) for a log p-form w.
/// Anticommutes with the differentials: d_H~ o H~ + H~ o d = 0.
inline Cochain chain_map_htilde(const PoissonStructure& P, const LogBasis& B, const Cochain& w) {
    const std::size_t p = w.degree();
    Cochain out(p, P.nvars());
    if (p == 0) {
        out += w;
        return out;
    }
    PolyMatrix M = htilde_matrix(P, B);
    for (const IndexTuple& I : increasing_tuples(B.size(), p)) {
        Poly acc(P.nvars());
        for (const auto& [T, f] : w.components()) acc += f * minor(M, T, I, P.nvars());
        out.add(I, p % 2 == 0 ? acc : -acc);
    }
    return out;
}

/// The algebroid bracket of two sections, computed from anchors and structure constants.
inline OneForm lr_bracket(const LieRinehartData& L, const OneForm& a, const OneForm& b) {
    const std::size_t r = L.rank();
    OneForm out(std::vector<Poly>(r, Poly(L.nvars)));
    Derivation ra(L.nvars), rb(L.nvars);
    for (std::size_t i = 0; i < r; ++i) {
        if (!a.coeffs[i].is_zero()) ra += a.coeffs[i] * L.anchors[i];
        if (!b.coeffs[i].is_zero()) rb += b.coeffs[i] * L.anchors[i];
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (i == j || a.coeffs[i].is_zero() || b.coeffs[j].is_zero()) continue;
            auto br = L.bracket_coeffs(i, j);
            Poly ab = a.coeffs[i] * b.coeffs[j];
            for (std::size_t m = 0; m < r; ++m)
                if (!br[m].is_zero()) out.coeffs[m] += ab * br[m];
        }
    for (std::size_t j = 0; j < r; ++j) {
        out.coeffs[j] += ra(b.coeffs[j]);
        out.coeffs[j] -= rb(a.coeffs[j]);
    }
    return out;
}

inline Derivation lr_anchor(const LieRinehartData& L, const OneForm& a) {
    Derivation out(L.nvars);
    for (std::size_t i = 0; i < L.rank(); ++i)
        if (!a.coeffs[i].is_zero()) out += a.coeffs[i] * L.anchors[i];
    return out;
}

/// Largest increase of total degree caused by the degree-k differential.
inline int degree_shift(const LieRinehartData& L, std::size_t k) {
    int shift = 0;
    for (const auto& a : L.anchors)
        for (const auto& c : a.coeffs)
            if (!c.is_zero()) shift = std::max(shift, c.degree() - 1);
    if (k >= 1)
        for (const auto& v : L.structure)
            for (const auto& c : v)
                if (!c.is_zero()) shift = std::max(shift, c.degree());
    return shift;
}

inline int degree_shift(const LieRinehartData& L) { return degree_shift(L, 1); }

}  // namespace logp

#endif  // LOGPOISSON_COMPLEX_HPP
