#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "prym/numerics.hpp"

namespace prym {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RVec = std::vector<Rational>;
using RMat = std::vector<RVec>;
using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;

bool is_integer(const Rational& x);
Int to_integer(const Rational& x);  // requires is_integer

RMat rmat_identity(std::size_t n);
RMat rmat_mul(const RMat& a, const RMat& b);
RMat rmat_transpose(const RMat& a);

/// Gauss-Jordan inverse; throws DegenerateForm when singular.
RMat rmat_inverse(const RMat& a);

std::size_t rmat_rank(RMat a);

/// Solves c * A = b for the row vector c (A full row rank, b in the row
/// span); throws DegenerateForm when the system is inconsistent.
RVec solve_left(const RMat& a, const RVec& b);

/// Least common multiple of all denominators.
Int common_denominator(const RMat& a);

/// Canonical row-style Hermite normal form: pivots positive, entries above a
/// pivot reduced into [0, pivot), zero rows dropped. The result is the unique
/// canonical basis of the row lattice.
IMat hnf_rows(IMat m);

/// Smith normal form divisors (nonnegative, divisibility chain, padded with
/// zeros up to min(rows, cols)). When vinv is non-null it receives the
/// inverse of the right transform V, so that rows of (*vinv) * B express the
/// adapted basis whenever the input was a coordinate matrix w.r.t. basis B.
IVec smith_divisors(IMat m, IMat* vinv = nullptr);

Int bareiss_determinant(IMat m);

}  // namespace prym
