#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "skewspec/common.hpp"

namespace skewspec::linalg {

// Pfaffian of an even-dimensional skew-symmetric matrix by skew elimination
// (congruence transforms) with partial pivoting; each row/column swap flips
// the sign. Sign convention: Pf of [[0,1],[-1,0]] (x) 1_N is +1.
//
// The input is validated against |A + A^T| <= skew_tol * max|entry| and then
// symmetrized A <- (A - A^T)/2. Throws ValidationError on odd dimension or
// non-skew input.
Complex pfaffian(Eigen::MatrixXcd a, double skew_tol = 1e-13);
double pfaffian(const Eigen::MatrixXd& a, double skew_tol = 1e-13);

// All eigenvalues of a real square matrix, post-processed so the multiset is
// exactly closed under complex conjugation. Throws NumericError (with a
// condition estimate in the message) if the QR iteration fails.
std::vector<Complex> eigenvalues_real_matrix(const Eigen::MatrixXd& m);

// prod_{k>l} (z_k - z_l)
Complex vandermonde(std::span<const Complex> pts);

// Determinant with power rows 0..N-2, N (the N-1 row replaced by N); equals
// (sum z_i) * vandermonde. Evaluated as a literal determinant so it can serve
// as the independent side of that identity.
Complex modified_vandermonde(std::span<const Complex> pts);

}  // namespace skewspec::linalg
