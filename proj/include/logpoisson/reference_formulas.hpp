// Hand-written closed forms of the differentials of the three worked
// examples, in the variables x, y (, z). They use only partial derivatives
// and products, never the generic complex engine, so they serve as an
// independent oracle for it.
//
// Tuple conventions (how an engine cochain is read as a tuple):
//   0-cochains            f = c()
//   1-cochains            (f1, .., fn) = (c(e0), .., c(e_{n-1}))
//   2-cochains, n = 2     f = c(e0, e1)
//   n = 3, output of d^1  (f1, f2, f3) = (c(e1,e2), c(e2,e0), c(e0,e1))
//   n = 3, input of d^2   (f1, f2, f3) = (c(e1,e2), c(e0,e2), c(e0,e1)),
//                         with the resulting 3-cochain read as -c(e0,e1,e2)

#ifndef LOGPOISSON_REFERENCE_FORMULAS_HPP
#define LOGPOISSON_REFERENCE_FORMULAS_HPP

#include <functional>
#include <string>
#include <vector>

#include "logpoisson/complex.hpp"

namespace logp::reference {

using Tuple = std::vector<Poly>;
using Formula = std::function<Tuple(const Tuple&)>;

namespace detail {
inline Poly v(std::size_t n, std::size_t j) { return Poly::variable(n, j); }
inline Poly c(std::size_t n, long value) { return Poly::constant(n, value); }
inline Poly dx(const Poly& f) { return partial(f, 0); }
inline Poly dy(const Poly& f) { return partial(f, 1); }
inline Poly dz(const Poly& f) { return partial(f, 2); }
}  // namespace detail

/// Reads a k-cochain of an n-variable complex as a tuple in the convention
/// used for the input (as_input) or output of a differential.
inline Tuple to_tuple(const Cochain& c, std::size_t n, bool as_input) {
    const std::size_t k = c.degree();
    if (k == 0) return {c({})};
    if (k == 1) {
        Tuple t;
        for (std::size_t i = 0; i < n; ++i) t.push_back(c({i}));
        return t;
    }
    if (n == 2 && k == 2) return {c({0, 1})};
    if (n == 3 && k == 2) {
        if (as_input) return {c({1, 2}), c({0, 2}), c({0, 1})};
        return {c({1, 2}), c({2, 0}), c({0, 1})};
    }
    if (n == 3 && k == 3) return {-c({0, 1, 2})};
    throw std::invalid_argument("to_tuple: unsupported degree");
}

inline Cochain from_tuple(const Tuple& t, std::size_t k, std::size_t n) {
    Cochain c(k, n);
    if (k == 0) {
        c.add({}, t.at(0));
    } else if (k == 1) {
        for (std::size_t i = 0; i < n; ++i) c.add({i}, t.at(i));
    } else if (n == 2 && k == 2) {
        c.add({0, 1}, t.at(0));
    } else if (n == 3 && k == 2) {
        // inputs of d^2
        c.add({1, 2}, t.at(0));
        c.add({0, 2}, t.at(1));
        c.add({0, 1}, t.at(2));
    } else {
        throw std::invalid_argument("from_tuple: unsupported degree");
    }
    return c;
}

/// Arity of the tuple for k-cochains in n variables.
inline std::size_t tuple_size(std::size_t n, std::size_t k) {
    if (k == 0) return 1;
    if (k == 1) return n;
    if (n == 3 && k == 2) return 3;
    return 1;
}

struct ClosedForm {
    std::string name;
    std::size_t nvars;
    std::size_t degree;  // the formula is d^degree
    Formula formula;
};

// {x,y} = x, log along x: d0 f = (d_y f, -x d_x f), d1 = d_y f2 + x d_x f1.
inline std::vector<ClosedForm> example1_log() {
    using namespace detail;
    const Poly x = v(2, 0);
    return {
        {"ex1 log d0", 2, 0, [x](const Tuple& f) { return Tuple{dy(f[0]), -(x * dx(f[0]))}; }},
        {"ex1 log d1", 2, 1, [x](const Tuple& f) { return Tuple{dy(f[1]) + x * dx(f[0])}; }},
    };
}

inline std::vector<ClosedForm> example1_poisson() {
    using namespace detail;
    const Poly x = v(2, 0);
    return {
        {"ex1 poisson d0", 2, 0, [x](const Tuple& f) { return Tuple{x * dy(f[0]), -(x * dx(f[0]))}; }},
        {"ex1 poisson d1", 2, 1, [x](const Tuple& f) { return Tuple{x * dy(f[1]) + x * dx(f[0]) - f[0]}; }},
    };
}

// Log de Rham along x: d0 a = (x d_x a, d_y a), d1(a, b) = x d_x b - d_y a.
inline std::vector<ClosedForm> example1_derham() {
    using namespace detail;
    const Poly x = v(2, 0);
    return {
        {"ex1 log de Rham d0", 2, 0, [x](const Tuple& f) { return Tuple{x * dx(f[0]), dy(f[0])}; }},
        {"ex1 log de Rham d1", 2, 1, [x](const Tuple& f) { return Tuple{x * dx(f[1]) - dy(f[0])}; }},
    };
}

inline std::vector<ClosedForm> example2_log() {
    using namespace detail;
    const Poly x = v(2, 0);
    const Poly x2 = x * x;
    return {
        {"ex2 log d0", 2, 0, [x, x2](const Tuple& f) { return Tuple{x * dy(f[0]), -(x2 * dx(f[0]))}; }},
        {"ex2 log d1", 2, 1,
         [x, x2](const Tuple& f) { return Tuple{x * dy(f[1]) + x2 * dx(f[0]) - x * f[0]}; }},
    };
}

inline std::vector<ClosedForm> example2_poisson() {
    using namespace detail;
    const Poly x = v(2, 0);
    const Poly x2 = x * x;
    return {
        {"ex2 poisson d0", 2, 0, [x2](const Tuple& f) { return Tuple{x2 * dy(f[0]), -(x2 * dx(f[0]))}; }},
        {"ex2 poisson d1", 2, 1,
         [x, x2](const Tuple& f) { return Tuple{x2 * dx(f[0]) + x2 * dy(f[1]) - c(2, 2) * x * f[0]}; }},
    };
}

inline std::vector<ClosedForm> example3_log() {
    using namespace detail;
    const Poly x = v(3, 0), y = v(3, 1), z = v(3, 2);
    const Poly xy = x * y, xz = x * z;
    return {
        {"ex3 log d0", 3, 0,
         [xy, xz](const Tuple& f) { return Tuple{Poly(3), xz * dz(f[0]), -(xy * dy(f[0]))}; }},
        {"ex3 log d1", 3, 1,
         [x, xy, xz](const Tuple& f) {
             return Tuple{xz * dz(f[2]) + xy * dy(f[1]) - x * f[0], -(xy * dy(f[0])), -(xz * dz(f[0]))};
         }},
        {"ex3 log d2", 3, 2, [xy, xz](const Tuple& f) { return Tuple{xz * dz(f[1]) + xy * dy(f[2])}; }},
    };
}

/// Example 3 Poisson differentials; with corrected = false the degree-2
/// operator is the commonly quoted xyz(d_z f2 + d_y f3), which drops the terms
/// -xy f2 - xz f3 produced by [dy, dz] = d(xyz).
inline std::vector<ClosedForm> example3_poisson(bool corrected) {
    using namespace detail;
    const Poly x = v(3, 0), y = v(3, 1), z = v(3, 2);
    const Poly xy = x * y, xz = x * z, yz = y * z, xyz = x * y * z;
    std::vector<ClosedForm> out{
        {"ex3 poisson d0", 3, 0,
         [xyz](const Tuple& f) { return Tuple{Poly(3), xyz * dz(f[0]), -(xyz * dy(f[0]))}; }},
        {"ex3 poisson d1", 3, 1,
         [xy, xz, yz, xyz](const Tuple& f) {
             return Tuple{xyz * dz(f[2]) + xyz * dy(f[1]) - yz * f[0] - xz * f[1] - xy * f[2],
                          -(xyz * dy(f[0])), -(xyz * dz(f[0]))};
         }},
    };
    if (corrected) {
        out.push_back({"ex3 poisson d2 (corrected)", 3, 2, [xy, xz, xyz](const Tuple& f) {
                           return Tuple{xyz * (dz(f[1]) + dy(f[2])) - xy * f[1] - xz * f[2]};
                       }});
    } else {
        out.push_back({"ex3 poisson d2 (short form)", 3, 2,
                       [xyz](const Tuple& f) { return Tuple{xyz * (dz(f[1]) + dy(f[2]))}; }});
    }
    return out;
}

}  // namespace logp::reference

#endif  // LOGPOISSON_REFERENCE_FORMULAS_HPP
