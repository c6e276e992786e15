#include "dlra/lowrank.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <stdexcept>
#include <string>

namespace dlra {

QrFactors orthonormalize(const Matrix& m) {
  if (!m.allFinite()) {
    throw std::invalid_argument("orthonormalize: input has non-finite entries");
  }
  if (m.rows() < m.cols()) {
    throw std::invalid_argument("orthonormalize: need rows >= cols, got " +
                                std::to_string(m.rows()) + " x " +
                                std::to_string(m.cols()));
  }
  Eigen::HouseholderQR<Matrix> qr(m);
  Matrix q = qr.householderQ() * Matrix::Identity(m.rows(), m.cols());
  Matrix r = qr.matrixQR().topRows(m.cols()).triangularView<Eigen::Upper>();
  // Fix signs so diag(R) >= 0; keeps the factorization deterministic.
  for (Index j = 0; j < r.rows(); ++j) {
    if (r(j, j) < 0.0) {
      r.row(j) = -r.row(j);
      q.col(j) = -q.col(j);
    }
  }
  return {std::move(q), std::move(r)};
}

LowRankState truncated_init(const Matrix& u0, Index r) {
  if (!u0.allFinite()) {
    throw std::invalid_argument("truncated_init: input has non-finite entries");
  }
  if (r < 1 || r > std::min(u0.rows(), u0.cols())) {
    throw std::invalid_argument("truncated_init: rank " + std::to_string(r) +
                                " outside [1, min(" + std::to_string(u0.rows()) +
                                ", " + std::to_string(u0.cols()) + ")]");
  }
  Eigen::BDCSVD<Matrix> svd(u0, Eigen::ComputeThinU | Eigen::ComputeThinV);
  LowRankState state;
  state.X = svd.matrixU().leftCols(r);
  state.W = svd.matrixV().leftCols(r);
  state.S = svd.singularValues().head(r).asDiagonal();
  return state;
}

Matrix reconstruct(const LowRankState& state) {
  return state.X * state.S * state.W.transpose();
}

double orthonormality_defect(const Matrix& q) {
  const Matrix gram = q.transpose() * q;
  return (gram - Matrix::Identity(q.cols(), q.cols())).cwiseAbs().maxCoeff();
}

void validate(const LowRankState& state) {
  const Index r = state.rank();
  if (state.S.cols() != r) {
    throw std::invalid_argument("low-rank state: S must be square");
  }
  if (state.X.cols() != r || state.W.cols() != r) {
    throw std::invalid_argument("low-rank state: factor column counts disagree");
  }
  if (r > std::min(state.X.rows(), state.W.rows())) {
    throw std::invalid_argument("low-rank state: rank exceeds matrix dimensions");
  }
  if (!state.X.allFinite() || !state.S.allFinite() || !state.W.allFinite()) {
    throw std::invalid_argument("low-rank state: non-finite entries");
  }
  if (orthonormality_defect(state.X) > 1e-10) {
    throw std::invalid_argument("low-rank state: X columns not orthonormal");
  }
  if (orthonormality_defect(state.W) > 1e-10) {
    throw std::invalid_argument("low-rank state: W columns not orthonormal");
  }
}

} // namespace dlra
