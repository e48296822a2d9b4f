// The three Poisson algebras used throughout the tests and the selftest:
//   1. C[x,y],   {x,y} = x,            divisor x
//   2. C[x,y],   {x,y} = x^2,          divisor x^2 (normalized to x)
//   3. C[x,y,z], {y,z} = xyz, others 0, divisor {x, y, z}

#ifndef LOGPOISSON_WORKED_EXAMPLES_HPP
#define LOGPOISSON_WORKED_EXAMPLES_HPP

#include <string>
#include <vector>

#include "logpoisson/complex.hpp"
#include "logpoisson/reference_formulas.hpp"

namespace logp {

struct WorkedExample {
    std::string name;
    PoissonStructure P;
    LogDivisorSpec S;

    LogBasis basis() const { return LogBasis(P.nvars(), S); }
    LieRinehartData log_poisson() const { return log_poisson_complex(P, S); }
    LieRinehartData poisson() const { return poisson_complex(P); }
    LieRinehartData log_derham() const { return log_derham_complex(basis(), P.names()); }
};

inline WorkedExample example1() {
    PoissonStructure P({"x", "y"});
    P.set(0, 1, parse_poly("x", P.names()));
    return {"example 1", P, make_divisor({parse_poly("x", P.names())})};
}

inline WorkedExample example2() {
    PoissonStructure P({"x", "y"});
    P.set(0, 1, parse_poly("x^2", P.names()));
    return {"example 2", P, make_divisor({parse_poly("x^2", P.names())})};
}

inline WorkedExample example3() {
    PoissonStructure P({"x", "y", "z"});
    P.set(1, 2, parse_poly("x*y*z", P.names()));
    const auto& v = P.names();
    return {"example 3", P, make_divisor({parse_poly("x", v), parse_poly("y", v), parse_poly("z", v)})};
}

inline std::vector<WorkedExample> worked_examples() { return {example1(), example2(), example3()}; }

}  // namespace logp

#endif  // LOGPOISSON_WORKED_EXAMPLES_HPP
