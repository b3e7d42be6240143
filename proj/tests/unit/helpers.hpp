#pragma once

#include <cmath>
#include <complex>

#include <doctest.h>

inline double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

inline double rel_err(std::complex<double> got, std::complex<double> want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

#define CHECK_REL(got, want, tol) CHECK_MESSAGE(rel_err((got), (want)) <= (tol), "got ", (got), " want ", (want))
