// Umbrella header.

#ifndef LOGPOISSON_LOGPOISSON_HPP
#define LOGPOISSON_LOGPOISSON_HPP

#include "logpoisson/poly.hpp"
#include "logpoisson/poly_io.hpp"
#include "logpoisson/poisson.hpp"
#include "logpoisson/logforms.hpp"
#include "logpoisson/complex.hpp"
#include "logpoisson/linalg.hpp"
#include "logpoisson/cohomology.hpp"
#include "logpoisson/problem.hpp"
#include "logpoisson/selftest.hpp"

#endif  // LOGPOISSON_LOGPOISSON_HPP
