#ifndef THETA_MATRIX_HPP
#define THETA_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "theta/rational.hpp"

namespace theta {

// Dense rational matrix helpers used by the exact linear algebra below.
using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix identity_matrix(std::size_t n);
RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix mat_transpose(const RationalMatrix& a);
Rational mat_det(RationalMatrix a);
RationalMatrix mat_inverse(const RationalMatrix& a);  // throws on singular
Rational mat_trace(const RationalMatrix& a);

// Rank of the row span, exact Gaussian elimination.
std::size_t mat_rank(RationalMatrix a);

}  // namespace theta

#endif
