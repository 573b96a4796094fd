#pragma once
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Exact integer/rational linear algebra for the signature and lattice work.
// Everything here is exact: no floating point, no overflow (arbitrary
// precision), deterministic.
namespace floer::exact {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Matrix = std::vector<std::vector<Int>>; // row-major, square where noted

// Fraction-free Bareiss elimination; exact for any square integer matrix.
// Throws std::invalid_argument if the matrix is not square.
Int determinant(Matrix m);

// Signature (positive minus negative eigenvalue count) of a symmetric integer
// matrix, via exact rational LDL^T-style reduction with symmetric pivoting.
// When every diagonal entry of the remaining block vanishes, a nonzero
// off-diagonal entry s gives a hyperbolic 2x2 block [[0,s],[s,0]], which
// contributes +1 and -1 (net zero) and is split off by a Schur complement.
// Throws std::invalid_argument if the matrix is not symmetric.
int signature(const Matrix& m);

// "p/q", or just "p" when q = 1
std::string to_string(const Rational& r);

} // namespace floer::exact
