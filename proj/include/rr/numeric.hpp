#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rr {

// Exact integers of arbitrary size; all code cardinalities and indices use this type.
using BigInt = boost::multiprecision::cpp_int;

using Matrix = std::vector<std::vector<double>>;

// floor(log2(x)) for x >= 1.
unsigned floor_log2(const BigInt& x);

// Dominant eigenvalue of a nonnegative square matrix, by power iteration with a
// fixed all-ones start vector. Deterministic; throws ConvergenceError if the
// residual fails to reach `tol` (relative) within `max_iterations`.
double spectral_radius(const Matrix& a, double tol = 1e-12, int max_iterations = 200000);

// Right Perron vector (same iteration as spectral_radius), normalized to sum 1.
std::vector<double> dominant_right_vector(const Matrix& a, double tol = 1e-12,
                                          int max_iterations = 200000);

// Evaluates a monic-first polynomial sum coeffs[k] * x^(n-k) for coeffs of length n+1.
double eval_polynomial(const std::vector<double>& coeffs, double x);

// Fixed-point decimal rendering with ties rounded half up (away from zero),
// e.g. format_fixed(2.6875, 3) == "2.688".
std::string format_fixed(double value, int places);

// Parses the decimal string produced by format_fixed back to a double.
double parse_fixed(const std::string& text);

} // namespace rr
