#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace anpvs {

// Dense n-dimensional array of doubles with a matching gradient buffer.
// Shapes are row-major; the last dimension is contiguous.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape)
      : shape_(std::move(shape)),
        values_(numel_of(shape_), 0.0),
        grad_(numel_of(shape_), 0.0) {}
  Tensor(std::vector<int> shape, std::vector<double> values)
      : shape_(std::move(shape)), values_(std::move(values)) {
    if (static_cast<std::size_t>(numel_of(shape_)) != values_.size())
      throw std::invalid_argument("tensor: shape/value size mismatch");
    grad_.assign(values_.size(), 0.0);
  }

  static Tensor scalar(double v) { return Tensor({1}, {v}); }
  static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }
  static Tensor full(std::vector<int> shape, double v) {
    Tensor t(std::move(shape));
    std::fill(t.values_.begin(), t.values_.end(), v);
    return t;
  }

  const std::vector<int>& shape() const { return shape_; }
  int dim(int i) const { return shape_.at(i); }
  int rank() const { return static_cast<int>(shape_.size()); }
  std::int64_t numel() const { return static_cast<std::int64_t>(values_.size()); }

  double* data() { return values_.data(); }
  const double* data() const { return values_.data(); }
  double* grad() { return grad_.data(); }
  const double* grad() const { return grad_.data(); }
  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& grad_values() { return grad_; }
  const std::vector<double>& grad_values() const { return grad_; }

  double& at(std::int64_t i) { return values_[i]; }
  double at(std::int64_t i) const { return values_[i]; }

  void zero_grad() { std::fill(grad_.begin(), grad_.end(), 0.0); }

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
  bool all_finite() const;

  static std::int64_t numel_of(const std::vector<int>& shape) {
    std::int64_t n = 1;
    for (int d : shape) {
      if (d <= 0) throw std::invalid_argument("tensor: nonpositive dimension");
      n *= d;
    }
    return n;
  }

 private:
  std::vector<int> shape_;
  std::vector<double> values_;
  std::vector<double> grad_;
};

std::string shape_str(const std::vector<int>& shape);

}  // namespace anpvs
