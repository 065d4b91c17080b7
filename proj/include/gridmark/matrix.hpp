#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <Eigen/Eigenvalues>
#include <stdexcept>

namespace gridmark {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

inline Mat symmetrize(const Mat& m) { return 0.5 * (m + m.transpose()); }

inline double frobenius(const Mat& m) { return m.norm(); }

/// Relative Frobenius distance, guarded against a zero reference.
inline double rel_frobenius(const Mat& value, const Mat& reference) {
  const double ref = reference.norm();
  return ref > 0.0 ? (value - reference).norm() / ref : (value - reference).norm();
}

inline bool is_symmetric(const Mat& m, double tol = 1e-10) {
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= tol * std::max(1.0, m.cwiseAbs().maxCoeff());
}

inline double min_eigenvalue_sym(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(symmetrize(m), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

inline bool is_psd(const Mat& m, double tol = 1e-10) {
  if (!is_symmetric(m, tol)) return false;
  return min_eigenvalue_sym(m) >= -tol * std::max(1.0, m.cwiseAbs().maxCoeff());
}

inline bool is_pd(const Mat& m) {
  if (!is_symmetric(m)) return false;
  Eigen::LLT<Mat> llt(symmetrize(m));
  return llt.info() == Eigen::Success;
}

/// Square root factor S of a PSD matrix, m = S * S^T. Tiny negative
/// eigenvalues from roundoff are clipped to zero. Columns spanning only
/// numerically-zero directions are kept; callers can drop them if needed.
inline Mat psd_sqrt(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(symmetrize(m));
  if (es.info() != Eigen::Success) throw std::runtime_error("psd_sqrt: eigensolver failed");
  Vec d = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * d.cwiseSqrt().asDiagonal();
}

inline double spectral_radius_of(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("spectral_radius: matrix not square");
  if (a.rows() == 0) return 0.0;
  Eigen::EigenSolver<Mat> es(a, /*computeEigenvectors=*/false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace gridmark
