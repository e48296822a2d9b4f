// Exact sparse linear algebra over Q using fraction-free integer elimination.

#ifndef LOGPOISSON_LINALG_HPP
#define LOGPOISSON_LINALG_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "logpoisson/poly.hpp"

namespace logp {

/// Sorted (index, value) pairs with no zero values.
using SparseRatVec = std::vector<std::pair<std::size_t, Rational>>;
using SparseIntVec = std::vector<std::pair<std::size_t, mpz_class>>;

/// Scales a rational vector to a primitive integer vector with the same span.
inline SparseIntVec to_primitive(const SparseRatVec& v) {
    mpz_class lcm = 1;
    for (const auto& [i, q] : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    SparseIntVec out;
    out.reserve(v.size());
    mpz_class g = 0;
    for (const auto& [i, q] : v) {
        mpz_class z = q.get_num() * (lcm / q.get_den());
        if (z != 0) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
            out.emplace_back(i, std::move(z));
        }
    }
    if (g > 1)
        for (auto& [i, z] : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
    return out;
}

namespace detail {

/// a*u - b*w, both sorted by index.
inline SparseIntVec combine(const mpz_class& a, const SparseIntVec& u, const mpz_class& b, const SparseIntVec& w) {
    SparseIntVec out;
    out.reserve(u.size() + w.size());
    std::size_t p = 0, q = 0;
    while (p < u.size() || q < w.size()) {
        if (q == w.size() || (p < u.size() && u[p].first < w[q].first)) {
            out.emplace_back(u[p].first, a * u[p].second);
            ++p;
        } else if (p == u.size() || w[q].first < u[p].first) {
            out.emplace_back(w[q].first, -b * w[q].second);
            ++q;
        } else {
            mpz_class z = a * u[p].second - b * w[q].second;
            if (z != 0) out.emplace_back(u[p].first, std::move(z));
            ++p;
            ++q;
        }
    }
    return out;
}

inline void make_primitive(SparseIntVec& v) {
    if (v.empty()) return;
    mpz_class g = 0;
    for (const auto& [i, z] : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        if (g == 1) return;
    }
    for (auto& [i, z] : v) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
}

}  // namespace detail

/// Incrementally built row-echelon basis of a subspace of Q^N. Each stored
/// vector has a distinct leading (smallest) index.
class EchelonBasis {
public:
    /// Reduces v against the basis; returns true if it was independent (and keeps it).
    bool insert(const SparseRatVec& v) { return insert(to_primitive(v)); }

    bool insert(SparseIntVec v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        std::size_t lead = v.front().first;
        rows_.emplace(lead, std::move(v));
        return true;
    }

    bool contains(const SparseRatVec& v) const { return reduce(to_primitive(v)).empty(); }

    std::size_t rank() const { return rows_.size(); }

private:
    SparseIntVec reduce(SparseIntVec v) const {
        std::size_t pos = 0;
        while (pos < v.size()) {
            auto it = rows_.find(v[pos].first);
            if (it == rows_.end()) {
                ++pos;
                continue;
            }
            const SparseIntVec& w = it->second;
            mpz_class a = w.front().second, b = v[pos].second;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            a /= g;
            b /= g;
            v = detail::combine(a, v, b, w);
            detail::make_primitive(v);
            // entries before pos are untouched since w starts at v[pos].first
        }
        return v;
    }

    std::map<std::size_t, SparseIntVec> rows_;
};

/// Sparse matrix stored by columns.
struct SparseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<SparseRatVec> columns;

    std::vector<SparseRatVec> row_vectors() const {
        std::vector<SparseRatVec> out(rows);
        for (std::size_t c = 0; c < columns.size(); ++c)
            for (const auto& [r, q] : columns[c]) out[r].emplace_back(c, q);
        return out;
    }
};

inline std::size_t rank(const SparseMatrix& M) {
    EchelonBasis B;
    for (const auto& col : M.columns) B.insert(col);
    return B.rank();
}

/// Solves M x = b exactly; free variables are set to zero. nullopt when inconsistent.
inline std::optional<std::vector<Rational>> solve(const SparseMatrix& M, const SparseRatVec& b) {
    const std::size_t n = M.cols;
    // Augmented rows with the right-hand side at index n.
    std::vector<SparseRatVec> rows = M.row_vectors();
    for (const auto& [r, q] : b) rows.at(r).emplace_back(n, q);

    std::map<std::size_t, SparseIntVec> pivots;
    for (const auto& row : rows) {
        SparseIntVec v = to_primitive(row);
        std::size_t pos = 0;
        while (pos < v.size()) {
            auto it = pivots.find(v[pos].first);
            if (it == pivots.end() || v[pos].first == n) {
                ++pos;
                continue;
            }
            const SparseIntVec& w = it->second;
            mpz_class a = w.front().second, c = v[pos].second, g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
            a /= g;
            c /= g;
            v = detail::combine(a, v, c, w);
            detail::make_primitive(v);
        }
        if (v.empty()) continue;
        if (v.front().first == n) return std::nullopt;
        pivots.emplace(v.front().first, std::move(v));
    }

    std::vector<Rational> x(n, Rational(0));
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const SparseIntVec& v = it->second;
        Rational acc = 0;
        for (std::size_t t = 1; t < v.size(); ++t) {
            if (v[t].first == n) {
                acc += Rational(v[t].second);
            } else {
                acc -= Rational(v[t].second) * x[v[t].first];
            }
        }
        x[it->first] = acc / Rational(v.front().second);
    }
    return x;
}

}  // namespace logp

#endif  // LOGPOISSON_LINALG_HPP
