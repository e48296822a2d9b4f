// Degree-filtered cohomology of polynomial cochain complexes.
//
// The differentials are not graded (e.g. -x^2 d/dx raises degree), so we use
// the filtration F_d = {cochains with all coefficients of total degree <= d}:
//
//   dim H^k_{<=d} = dim(ker d^k on F_d) - dim(im d^{k-1} ∩ F_d),
//
// where the image is generated by sources in F_{D+buffer}. The per-degree
// dimension is the increment H_{<=d} - H_{<=d-1}; an entry is flagged
// stabilized when recomputing with buffer+1 leaves it unchanged.

#ifndef LOGPOISSON_COHOMOLOGY_HPP
#define LOGPOISSON_COHOMOLOGY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "logpoisson/complex.hpp"
#include "logpoisson/linalg.hpp"

namespace logp {

/// Deterministic basis of k-cochains with monomial coefficients of degree <= D:
/// ordered by degree, then monomial (lex descending), then tuple.
class SliceBasis {
public:
    using Element = std::pair<IndexTuple, Monomial>;

    SliceBasis() = default;
    SliceBasis(std::size_t nvars, std::size_t rank, std::size_t k, unsigned max_degree) : max_degree_(max_degree) {
        auto tuples = increasing_tuples(rank, k);
        if (tuples.empty()) return;
        for (unsigned d = 0; d <= max_degree; ++d)
            for (const Monomial& m : monomials_of_degree(nvars, d))
                for (const IndexTuple& t : tuples) {
                    index_.emplace(Element{t, m}, elems_.size());
                    elems_.emplace_back(t, m);
                }
    }

    std::size_t size() const { return elems_.size(); }
    const Element& operator[](std::size_t i) const { return elems_[i]; }
    unsigned degree(std::size_t i) const { return elems_[i].second.degree(); }
    unsigned max_degree() const { return max_degree_; }

    std::optional<std::size_t> find(const IndexTuple& t, const Monomial& m) const {
        auto it = index_.find(Element{t, m});
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Number of elements of degree <= d.
    std::size_t count_up_to(unsigned d) const {
        return static_cast<std::size_t>(std::upper_bound(elems_.begin(), elems_.end(), d,
                                                         [](unsigned deg, const Element& e) {
                                                             return deg < e.second.degree();
                                                         }) -
                                        elems_.begin());
    }

    /// Coordinates of a cochain; throws if a term falls outside the slice.
    SparseRatVec coordinates(const Cochain& c) const {
        SparseRatVec out;
        for (const auto& [t, p] : c.components())
            for (const auto& [m, q] : p.terms()) {
                auto idx = find(t, m);
                if (!idx) throw Error("cochain term outside the degree slice");
                out.emplace_back(*idx, q);
            }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

    Cochain to_cochain(std::size_t k, std::size_t nvars, const std::vector<Rational>& x) const {
        Cochain c(k, nvars);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0) c.add(elems_[i].first, Poly::term(elems_[i].second, x[i]));
        return c;
    }

private:
    unsigned max_degree_ = 0;
    std::vector<Element> elems_;
    std::map<Element, std::size_t> index_;
};

struct SliceMatrix {
    SliceBasis source;
    SliceBasis target;
    SparseMatrix matrix;
};

/// Matrix of d^k from k-cochains of degree <= source_degree into
/// (k+1)-cochains of degree <= target_degree.
inline SliceMatrix slice_matrix(const LieRinehartData& L, std::size_t k, unsigned source_degree,
                                unsigned target_degree) {
    SliceMatrix S{SliceBasis(L.nvars, L.rank(), k, source_degree),
                  SliceBasis(L.nvars, L.rank(), k + 1, target_degree),
                  {}};
    S.matrix.rows = S.target.size();
    S.matrix.cols = S.source.size();
    S.matrix.columns.reserve(S.source.size());
    for (std::size_t i = 0; i < S.source.size(); ++i) {
        const auto& [t, m] = S.source[i];
        Cochain c(k, L.nvars);
        c.add(t, Poly::term(m, 1));
        S.matrix.columns.push_back(S.target.coordinates(differential(L, c)));
    }
    return S;
}

/// d^k on F_{source_degree}, with targets up to source_degree + shift.
inline SliceMatrix slice_matrix(const LieRinehartData& L, std::size_t k, unsigned source_degree) {
    return slice_matrix(L, k, source_degree, source_degree + static_cast<unsigned>(degree_shift(L, k)));
}

struct SliceWindow {
    unsigned max_degree = 0;
    unsigned buffer = 0;

    /// Default buffer: max degree shift of the complex + 2.
    static SliceWindow for_complex(const LieRinehartData& L, unsigned max_degree) {
        return {max_degree, static_cast<unsigned>(degree_shift(L)) + 2};
    }
};

/// dim(ker d^k ∩ F_d) for d = 0..D.
inline std::vector<long> filtered_kernel_dims(const LieRinehartData& L, std::size_t k, unsigned D) {
    std::vector<long> out(D + 1, 0);
    if (k > L.rank()) return out;
    if (k == L.rank()) {
        SliceBasis src(L.nvars, L.rank(), k, D);
        for (unsigned d = 0; d <= D; ++d) out[d] = static_cast<long>(src.count_up_to(d));
        return out;
    }
    SliceMatrix S = slice_matrix(L, k, D);
    EchelonBasis E;
    std::size_t col = 0;
    for (unsigned d = 0; d <= D; ++d) {
        std::size_t end = S.source.count_up_to(d);
        for (; col < end; ++col) E.insert(S.matrix.columns[col]);
        out[d] = static_cast<long>(end) - static_cast<long>(E.rank());
    }
    return out;
}

/// dim(d^{k-1}(F_{D+buffer}) ∩ F_d) for d = 0..D.
inline std::vector<long> filtered_image_dims(const LieRinehartData& L, std::size_t k, unsigned D, unsigned buffer) {
    std::vector<long> out(D + 1, 0);
    if (k == 0 || k > L.rank()) return out;
    SliceMatrix S = slice_matrix(L, k - 1, D + buffer);
    auto rows = S.matrix.row_vectors();
    // Insert target rows from the highest degree down; the rank of the rows of
    // degree > d is the codimension of (image ∩ F_d) inside the image.
    unsigned top = S.target.max_degree();
    std::vector<std::size_t> rank_above(top + 2, 0);  // rank of rows with degree >= index
    EchelonBasis E;
    std::size_t r = rows.size();
    for (unsigned d = top + 1; d-- > 0;) {
        std::size_t begin = d == 0 ? 0 : S.target.count_up_to(d - 1);
        while (r > begin) E.insert(rows[--r]);
        rank_above[d] = E.rank();
    }
    const long total = static_cast<long>(E.rank());
    for (unsigned d = 0; d <= D; ++d) out[d] = total - static_cast<long>(rank_above[d + 1]);
    return out;
}

struct CohomologyEntry {
    long dim = 0;
    long cumulative = 0;
    bool stabilized = false;
    friend bool operator==(const CohomologyEntry&, const CohomologyEntry&) = default;
};

/// Cumulative dims dim H^k_{<=d} for d = 0..D.
inline std::vector<long> cumulative_cohomology(const LieRinehartData& L, std::size_t k, unsigned D,
                                               unsigned buffer) {
    auto Z = filtered_kernel_dims(L, k, D);
    auto B = filtered_image_dims(L, k, D, buffer);
    std::vector<long> out(D + 1);
    for (unsigned d = 0; d <= D; ++d) out[d] = Z[d] - B[d];
    return out;
}

inline std::vector<CohomologyEntry> cohomology_dims(const LieRinehartData& L, std::size_t k, const SliceWindow& W) {
    auto Z = filtered_kernel_dims(L, k, W.max_degree);
    auto B0 = filtered_image_dims(L, k, W.max_degree, W.buffer);
    auto B1 = filtered_image_dims(L, k, W.max_degree, W.buffer + 1);
    std::vector<CohomologyEntry> row(W.max_degree + 1);
    for (unsigned d = 0; d <= W.max_degree; ++d) {
        long c0 = Z[d] - B0[d], c1 = Z[d] - B1[d];
        long p0 = d == 0 ? 0 : Z[d - 1] - B0[d - 1];
        long p1 = d == 0 ? 0 : Z[d - 1] - B1[d - 1];
        row[d] = {c0 - p0, c0, c0 == c1 && p0 == p1};
    }
    return row;
}

struct CohomologyTable {
    std::string complex_kind;
    SliceWindow window;
    std::map<std::size_t, std::vector<CohomologyEntry>> rows;

    std::vector<long> dims(std::size_t k) const {
        std::vector<long> out;
        for (const auto& e : rows.at(k)) out.push_back(e.dim);
        return out;
    }
    long total(std::size_t k) const { return rows.at(k).back().cumulative; }
};

inline CohomologyTable cohomology_table(const LieRinehartData& L, std::string kind, std::size_t k_min,
                                        std::size_t k_max, const SliceWindow& W) {
    CohomologyTable t{std::move(kind), W, {}};
    for (std::size_t k = k_min; k <= k_max; ++k) t.rows[k] = cohomology_dims(L, k, W);
    return t;
}

struct TableDifference {
    std::size_t k = 0;
    unsigned degree = 0;
    long first = 0;
    long second = 0;
};

struct TableComparison {
    bool equal = true;
    std::vector<TableDifference> differences;

    /// Smallest degree at which the tables differ for row k.
    std::optional<unsigned> first_difference(std::size_t k) const {
        std::optional<unsigned> out;
        for (const auto& d : differences)
            if (d.k == k && (!out || d.degree < *out)) out = d.degree;
        return out;
    }
};

inline TableComparison compare_tables(const CohomologyTable& a, const CohomologyTable& b) {
    if (a.window.max_degree != b.window.max_degree) throw std::invalid_argument("compare_tables: window mismatch");
    TableComparison cmp;
    for (const auto& [k, row] : a.rows) {
        auto it = b.rows.find(k);
        if (it == b.rows.end()) throw std::invalid_argument("compare_tables: degree ranges differ");
        for (unsigned d = 0; d < row.size(); ++d)
            if (row[d].dim != it->second[d].dim) {
                cmp.equal = false;
                cmp.differences.push_back({k, d, row[d].dim, it->second[d].dim});
            }
    }
    if (a.rows.size() != b.rows.size()) throw std::invalid_argument("compare_tables: degree ranges differ");
    return cmp;
}

class NotClosed : public Error {
public:
    using Error::Error;
};

struct PrimitiveResult {
    bool found = false;
    Cochain witness;
    unsigned source_degree = 0;    // degree window in which the witness was found
    unsigned searched_degree = 0;  // largest source degree searched
};

/// Solves d^{k-1}(v) = c over sources of degree <= D + buffer, smallest window
/// first. A negative result only means no primitive exists inside the window.
inline PrimitiveResult find_primitive(const LieRinehartData& L, const Cochain& c, const SliceWindow& W) {
    if (!differential(L, c).is_zero()) throw NotClosed("find_primitive: cochain is not closed");
    const std::size_t k = c.degree();
    PrimitiveResult res;
    const unsigned limit = W.max_degree + W.buffer;
    res.searched_degree = limit;
    if (c.is_zero()) {
        res.found = true;
        res.witness = Cochain(k == 0 ? 0 : k - 1, L.nvars);
        return res;
    }
    if (k == 0) return res;
    int cdeg = 0;
    for (const auto& [t, p] : c.components()) cdeg = std::max(cdeg, p.degree());
    const unsigned shift = static_cast<unsigned>(degree_shift(L, k - 1));
    for (unsigned e = 0; e <= limit; ++e) {
        unsigned tdeg = std::max(e + shift, static_cast<unsigned>(cdeg));
        SliceMatrix S = slice_matrix(L, k - 1, e, tdeg);
        auto x = solve(S.matrix, S.target.coordinates(c));
        if (!x) continue;
        Cochain v = S.source.to_cochain(k - 1, L.nvars, *x);
        if (!(differential(L, v) == c)) throw Error("find_primitive: witness verification failed");
        res.found = true;
        res.witness = std::move(v);
        res.source_degree = e;
        return res;
    }
    return res;
}

}  // namespace logp

#endif  // LOGPOISSON_COHOMOLOGY_HPP
