#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace shotnoise {

using Matrix = std::vector<std::vector<double>>;

// Mergeable sufficient statistics (count, sum vector, cross-product matrix)
// for mean and covariance estimation. merge() is plain addition, so any
// fixed merge tree reproduces the same floating-point result.
class MomentAccumulator {
 public:
  explicit MomentAccumulator(std::size_t dim)
      : dim_(dim), sum_(dim, 0.0), cross_(dim * dim, 0.0) {
    if (dim == 0) throw std::invalid_argument("accumulator dimension is zero");
  }

  void add(std::span<const double> x) {
    if (x.size() != dim_)
      throw std::invalid_argument("sample dimension mismatch");
    ++count_;
    for (std::size_t i = 0; i < dim_; ++i) {
      sum_[i] += x[i];
      for (std::size_t j = i; j < dim_; ++j)
        cross_[i * dim_ + j] += x[i] * x[j];
    }
  }

  void merge(const MomentAccumulator& other) {
    if (other.dim_ != dim_)
      throw std::invalid_argument("accumulator dimension mismatch");
    count_ += other.count_;
    for (std::size_t i = 0; i < dim_; ++i) sum_[i] += other.sum_[i];
    for (std::size_t i = 0; i < cross_.size(); ++i) cross_[i] += other.cross_[i];
  }

  std::uint64_t count() const { return count_; }
  std::size_t dim() const { return dim_; }

  std::vector<double> mean() const {
    std::vector<double> m(dim_, 0.0);
    if (count_ == 0) return m;
    for (std::size_t i = 0; i < dim_; ++i)
      m[i] = sum_[i] / static_cast<double>(count_);
    return m;
  }

  // Sample covariance (n - 1 in the denominator); symmetric by construction.
  Matrix covariance() const {
    Matrix c(dim_, std::vector<double>(dim_, 0.0));
    if (count_ < 2) return c;
    const double n = static_cast<double>(count_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j) {
        const double v =
            (cross_[i * dim_ + j] - sum_[i] * sum_[j] / n) / (n - 1.0);
        c[i][j] = v;
        c[j][i] = v;
      }
    return c;
  }

  // Delta-method standard errors of the covariance entries under a Gaussian
  // sampling model: se_ij = sqrt((c_ii c_jj + c_ij^2) / n).
  Matrix covariance_se() const {
    const Matrix c = covariance();
    Matrix se(dim_, std::vector<double>(dim_, 0.0));
    if (count_ < 2) return se;
    const double n = static_cast<double>(count_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        se[i][j] = std::sqrt((c[i][i] * c[j][j] + c[i][j] * c[i][j]) / n);
    return se;
  }

  std::vector<double> mean_se() const {
    const Matrix c = covariance();
    std::vector<double> se(dim_, 0.0);
    if (count_ < 2) return se;
    for (std::size_t i = 0; i < dim_; ++i)
      se[i] = std::sqrt(c[i][i] / static_cast<double>(count_));
    return se;
  }

 private:
  std::size_t dim_;
  std::uint64_t count_ = 0;
  std::vector<double> sum_;
  std::vector<double> cross_;
};

}  // namespace shotnoise
