#pragma once

#include "dlra/types.hpp"

namespace dlra {

/// Rank-r factorization u = X * S * W^T.
/// X (n_x x r) and W (n_w x r) carry orthonormal columns, S (r x r) the
/// coefficients, so that the Frobenius norm of the represented matrix equals
/// the Frobenius norm of S.
struct LowRankState {
  Matrix X;
  Matrix S;
  Matrix W;

  Index rank() const { return S.rows(); }
  double frobenius_norm() const { return S.norm(); }
};

struct QrFactors {
  Matrix Q;
  Matrix R;
};

/// Thin QR factorization M = Q * R with the sign convention that the diagonal
/// of R is non-negative, which makes the factors deterministic.  Rank-deficient
/// input is allowed: the deficient columns of Q come out as an orthonormal
/// completion and the matching rows of R are (numerically) zero.
/// Throws std::invalid_argument on non-finite input or fewer rows than columns.
QrFactors orthonormalize(const Matrix& m);

/// Best rank-r factorization of a dense matrix via SVD.  If the matrix has
/// rank below r the factors are padded with orthonormal completions and zero
/// singular values.  Throws std::invalid_argument for invalid r or non-finite
/// input.
LowRankState truncated_init(const Matrix& u0, Index r);

/// Dense matrix represented by the factorization (X * S * W^T).
Matrix reconstruct(const LowRankState& state);

/// max |Q^T Q - I|, a measure of how orthonormal the columns of Q are.
double orthonormality_defect(const Matrix& q);

/// Validates factor shapes and orthonormality; throws std::invalid_argument
/// with a description of the violated property.
void validate(const LowRankState& state);

} // namespace dlra
