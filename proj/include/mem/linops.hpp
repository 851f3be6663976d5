#pragma once

#include <memory>
#include <vector>

#include "mem/expfam.hpp"

namespace mem {

enum class OpStructure { dense, conv1d, conv2d, finite_diff_2d, identity, stacked };
enum class Boundary { zero_pad, reflect };

// Immutable linear operator with an adjoint. Value-semantic handle over a
// shared implementation; apply/adjoint are re-entrant.
class LinearOperator {
 public:
  struct Impl;

  Vec apply(const Vec& x) const;
  Vec adjoint(const Vec& y) const;
  Eigen::Index rows() const;
  Eigen::Index cols() const;
  OpStructure structure() const;
  // entrywise nonnegative (needed by the Poisson/Gamma model classes)
  bool nonnegative() const;
  // dense coefficient access; nullptr for matrix-free structures
  const Mat* dense_matrix() const;

  static LinearOperator dense(Mat a);
  static LinearOperator identity(Eigen::Index n);
  // Normalized truncated Gaussian stencil, half-width ceil(3 sigma).
  static LinearOperator gaussian_blur_1d(Eigen::Index n, double sigma,
                                         Boundary boundary);
  static LinearOperator gaussian_blur_2d(Eigen::Index height,
                                         Eigen::Index width, double sigma,
                                         Boundary boundary);
  // Forward differences (down, right) per pixel with Neumann boundary;
  // maps R^{h w} to R^{2 h w}, pixel blocks contiguous.
  static LinearOperator finite_difference_2d(Eigen::Index height,
                                             Eigen::Index width);
  // Vertical concatenation [A1; A2; ...].
  static LinearOperator vstack(std::vector<LinearOperator> blocks);

 private:
  explicit LinearOperator(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

// Spectral norm via power iteration on A'A to relative tolerance tol.
double op_norm_2(const LinearOperator& a, double tol = 1e-9);

// max_j sum_i |A_ij|. Exact; Unsupported for matrix-free structures without
// column access.
double norm_1_columns(const LinearOperator& a);

}  // namespace mem
