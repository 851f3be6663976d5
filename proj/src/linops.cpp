#include "mem/linops.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <utility>

#include "mem/errors.hpp"

namespace mem {

struct LinearOperator::Impl {
  std::function<Vec(const Vec&)> fwd;
  std::function<Vec(const Vec&)> adj;
  Eigen::Index m = 0, n = 0;
  OpStructure structure = OpStructure::dense;
  bool nonneg = false;
  std::shared_ptr<const Mat> dense;        // only for dense structure
  std::shared_ptr<const Vec> taps;         // conv structures
  Boundary boundary = Boundary::reflect;   // conv structures
};

LinearOperator::LinearOperator(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

Vec LinearOperator::apply(const Vec& x) const {
  if (x.size() != impl_->n) throw DomainError("linops: apply size mismatch");
  return impl_->fwd(x);
}

Vec LinearOperator::adjoint(const Vec& y) const {
  if (y.size() != impl_->m) throw DomainError("linops: adjoint size mismatch");
  return impl_->adj(y);
}

Eigen::Index LinearOperator::rows() const { return impl_->m; }
Eigen::Index LinearOperator::cols() const { return impl_->n; }
OpStructure LinearOperator::structure() const { return impl_->structure; }
bool LinearOperator::nonnegative() const { return impl_->nonneg; }
const Mat* LinearOperator::dense_matrix() const { return impl_->dense.get(); }

LinearOperator LinearOperator::dense(Mat a) {
  auto impl = std::make_shared<Impl>();
  auto held = std::make_shared<const Mat>(std::move(a));
  impl->m = held->rows();
  impl->n = held->cols();
  impl->structure = OpStructure::dense;
  impl->nonneg = (held->array() >= 0.0).all();
  impl->dense = held;
  impl->fwd = [held](const Vec& x) { return Vec(*held * x); };
  impl->adj = [held](const Vec& y) { return Vec(held->transpose() * y); };
  return LinearOperator(std::move(impl));
}

LinearOperator LinearOperator::identity(Eigen::Index n) {
  auto impl = std::make_shared<Impl>();
  impl->m = impl->n = n;
  impl->structure = OpStructure::identity;
  impl->nonneg = true;
  impl->fwd = [](const Vec& x) { return x; };
  impl->adj = [](const Vec& y) { return y; };
  return LinearOperator(std::move(impl));
}

namespace {

Vec gaussian_taps(double sigma) {
  if (!(sigma > 0.0)) throw DomainError("linops: blur requires sigma > 0");
  const auto r = static_cast<Eigen::Index>(std::ceil(3.0 * sigma));
  Vec taps(2 * r + 1);
  for (Eigen::Index i = -r; i <= r; ++i) {
    taps(i + r) = std::exp(-0.5 * double(i * i) / (sigma * sigma));
  }
  taps /= taps.sum();
  return taps;
}

// index resolution for 1-d correlation with the chosen boundary;
// returns -1 when the sample falls outside under zero padding
inline Eigen::Index resolve(Eigen::Index idx, Eigen::Index n,
                            Boundary boundary) {
  if (idx >= 0 && idx < n) return idx;
  if (boundary == Boundary::zero_pad) return -1;
  // symmetric reflection (-1 -> 0, n -> n-1), repeated until inside
  while (idx < 0 || idx >= n) {
    if (idx < 0) idx = -idx - 1;
    if (idx >= n) idx = 2 * n - idx - 1;
  }
  return idx;
}

void conv_line_fwd(const Vec& taps, Boundary boundary, const double* in,
                   Eigen::Index n, Eigen::Index stride, double* out) {
  const Eigen::Index r = (taps.size() - 1) / 2;
  for (Eigen::Index i = 0; i < n; ++i) {
    double acc = 0.0;
    for (Eigen::Index k = -r; k <= r; ++k) {
      Eigen::Index j = resolve(i + k, n, boundary);
      if (j >= 0) acc += taps(k + r) * in[j * stride];
    }
    out[i * stride] = acc;
  }
}

void conv_line_adj(const Vec& taps, Boundary boundary, const double* in,
                   Eigen::Index n, Eigen::Index stride, double* out) {
  const Eigen::Index r = (taps.size() - 1) / 2;
  for (Eigen::Index i = 0; i < n; ++i) out[i * stride] = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double v = in[i * stride];
    for (Eigen::Index k = -r; k <= r; ++k) {
      Eigen::Index j = resolve(i + k, n, boundary);
      if (j >= 0) out[j * stride] += taps(k + r) * v;
    }
  }
}

}  // namespace

LinearOperator LinearOperator::gaussian_blur_1d(Eigen::Index n, double sigma,
                                                Boundary boundary) {
  if (n < 1) throw DomainError("linops: blur requires n >= 1");
  auto taps = std::make_shared<const Vec>(gaussian_taps(sigma));
  auto impl = std::make_shared<Impl>();
  impl->m = impl->n = n;
  impl->structure = OpStructure::conv1d;
  impl->nonneg = true;
  impl->taps = taps;
  impl->boundary = boundary;
  impl->fwd = [taps, boundary, n](const Vec& x) {
    Vec out(n);
    conv_line_fwd(*taps, boundary, x.data(), n, 1, out.data());
    return out;
  };
  impl->adj = [taps, boundary, n](const Vec& y) {
    Vec out(n);
    conv_line_adj(*taps, boundary, y.data(), n, 1, out.data());
    return out;
  };
  return LinearOperator(std::move(impl));
}

LinearOperator LinearOperator::gaussian_blur_2d(Eigen::Index height,
                                                Eigen::Index width,
                                                double sigma,
                                                Boundary boundary) {
  if (height < 1 || width < 1)
    throw DomainError("linops: blur requires a nonempty image");
  auto taps = std::make_shared<const Vec>(gaussian_taps(sigma));
  auto impl = std::make_shared<Impl>();
  impl->m = impl->n = height * width;
  impl->structure = OpStructure::conv2d;
  impl->nonneg = true;
  impl->taps = taps;
  impl->boundary = boundary;
  // separable: rows then columns (row-major pixel layout)
  auto pass = [taps, boundary, height, width](const Vec& x, bool adjoint) {
    Vec tmp(x.size());
    Vec out(x.size());
    auto line = adjoint ? conv_line_adj : conv_line_fwd;
    for (Eigen::Index row = 0; row < height; ++row) {
      line(*taps, boundary, x.data() + row * width, width, 1,
           tmp.data() + row * width);
    }
    for (Eigen::Index col = 0; col < width; ++col) {
      line(*taps, boundary, tmp.data() + col, height, width, out.data() + col);
    }
    return out;
  };
  impl->fwd = [pass](const Vec& x) { return pass(x, false); };
  impl->adj = [pass](const Vec& y) { return pass(y, true); };
  return LinearOperator(std::move(impl));
}

LinearOperator LinearOperator::finite_difference_2d(Eigen::Index height,
                                                    Eigen::Index width) {
  if (height < 1 || width < 1)
    throw DomainError("linops: finite differences require a nonempty image");
  auto impl = std::make_shared<Impl>();
  const Eigen::Index d = height * width;
  impl->n = d;
  impl->m = 2 * d;
  impl->structure = OpStructure::finite_diff_2d;
  impl->nonneg = false;
  impl->fwd = [height, width, d](const Vec& x) {
    Vec out = Vec::Zero(2 * d);
    for (Eigen::Index r = 0; r < height; ++r) {
      for (Eigen::Index c = 0; c < width; ++c) {
        Eigen::Index i = r * width + c;
        if (r + 1 < height) out(2 * i) = x(i + width) - x(i);
        if (c + 1 < width) out(2 * i + 1) = x(i + 1) - x(i);
      }
    }
    return out;
  };
  impl->adj = [height, width, d](const Vec& y) {
    Vec out = Vec::Zero(d);
    for (Eigen::Index r = 0; r < height; ++r) {
      for (Eigen::Index c = 0; c < width; ++c) {
        Eigen::Index i = r * width + c;
        if (r + 1 < height) {
          out(i + width) += y(2 * i);
          out(i) -= y(2 * i);
        }
        if (c + 1 < width) {
          out(i + 1) += y(2 * i + 1);
          out(i) -= y(2 * i + 1);
        }
      }
    }
    return out;
  };
  return LinearOperator(std::move(impl));
}

LinearOperator LinearOperator::vstack(std::vector<LinearOperator> blocks) {
  if (blocks.empty()) throw DomainError("linops: vstack of zero blocks");
  const Eigen::Index n = blocks.front().cols();
  Eigen::Index m = 0;
  bool nonneg = true;
  for (const auto& b : blocks) {
    if (b.cols() != n) throw DomainError("linops: vstack width mismatch");
    m += b.rows();
    nonneg = nonneg && b.nonnegative();
  }
  auto held = std::make_shared<const std::vector<LinearOperator>>(
      std::move(blocks));
  auto impl = std::make_shared<Impl>();
  impl->m = m;
  impl->n = n;
  impl->structure = OpStructure::stacked;
  impl->nonneg = nonneg;
  impl->fwd = [held, m](const Vec& x) {
    Vec out(m);
    Eigen::Index at = 0;
    for (const auto& b : *held) {
      out.segment(at, b.rows()) = b.apply(x);
      at += b.rows();
    }
    return out;
  };
  impl->adj = [held, n](const Vec& y) {
    Vec out = Vec::Zero(n);
    Eigen::Index at = 0;
    for (const auto& b : *held) {
      out += b.adjoint(y.segment(at, b.rows()));
      at += b.rows();
    }
    return out;
  };
  return LinearOperator(std::move(impl));
}

double op_norm_2(const LinearOperator& a, double tol) {
  // power iteration on A'A with a fixed-seed start
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Vec v(a.cols());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = unif(rng);
  double nv = v.norm();
  if (nv == 0.0) v(0) = 1.0, nv = 1.0;
  v /= nv;
  double prev = 0.0;
  for (int it = 0; it < 10000; ++it) {
    Vec w = a.adjoint(a.apply(v));
    double lam = w.norm();  // Rayleigh estimate of lambda_max(A'A)
    if (lam == 0.0) return 0.0;
    v = w / lam;
    if (it > 0 && std::abs(lam - prev) <= tol * std::max(1.0, lam)) {
      return std::sqrt(lam);
    }
    prev = lam;
  }
  throw NonConvergence("linops: power iteration did not converge");
}

double norm_1_columns(const LinearOperator& a) {
  if (const Mat* m = a.dense_matrix()) {
    return m->cwiseAbs().colwise().sum().maxCoeff();
  }
  switch (a.structure()) {
    case OpStructure::identity:
      return 1.0;
    case OpStructure::conv1d:
    case OpStructure::conv2d: {
      // nonnegative stencils: column sums are A' 1
      Vec ones = Vec::Ones(a.rows());
      return a.adjoint(ones).maxCoeff();
    }
    default:
      break;
  }
  if (a.nonnegative()) {
    Vec ones = Vec::Ones(a.rows());
    return a.adjoint(ones).maxCoeff();
  }
  throw Unsupported(
      "linops: norm_1_columns needs dense or entrywise-nonnegative structure");
}

}  // namespace mem
