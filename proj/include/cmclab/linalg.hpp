#pragma once

#include <Eigen/Dense>
#include <span>
#include <stdexcept>
#include <vector>

namespace cmclab {

// Parameter domains go up to dimension 3 (hypersurfaces in balls up to B^4),
// so every small matrix fits on the stack.
inline constexpr int kMaxParamDim = 3;
inline constexpr int kMaxAmbientDim = kMaxParamDim + 1;

using ParamVec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxParamDim, 1>;
using AmbientVec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxAmbientDim, 1>;
using ParamMat =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxParamDim, kMaxParamDim>;
// Columns are the coordinate tangents dX/du_i, rows ambient components.
using TangentMat =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxAmbientDim, kMaxParamDim>;

/// Mismatch between a requested computation and the hypotheses it needs.
/// Suites turn this into a SKIP entry rather than a failure.
class hypothesis_error : public std::runtime_error {
 public:
  explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

/// Deterministic pairwise summation (bit-stable regardless of chunking).
double pairwise_sum(std::span<const double> xs);

/// Normal direction spanned by the orthogonal complement of the n tangent
/// columns of `t` ((n+1) x n). Oriented so that det([N | t]) = |N|^2 >= 0.
AmbientVec hodge_normal(const TangentMat& t);

/// Eigenvalues of the metric-self-adjoint operator G^{-1} h, computed from the
/// symmetrization G^{-1/2} h G^{-1/2} so the spectrum is real in floating
/// point. Returned ascending.
ParamVec self_adjoint_eigenvalues(const ParamMat& gram, const ParamMat& h);

}  // namespace cmclab
