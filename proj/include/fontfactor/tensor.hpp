#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace fontfactor {

// Dense row-major tensor with a dynamic shape. Kept deliberately small;
// layers index into the flat buffer with explicit dimensions.
template <typename S>
struct Tensor {
  std::vector<int> shape;
  std::vector<S> data;

  Tensor() = default;
  explicit Tensor(std::vector<int> dims, S fill_value = S(0))
      : shape(std::move(dims)), data(count(shape), fill_value) {}

  static std::size_t count(const std::vector<int>& dims) {
    std::size_t n = 1;
    for (int d : dims) n *= static_cast<std::size_t>(d);
    return n;
  }

  std::size_t numel() const { return data.size(); }
  int dim(std::size_t i) const { return shape[i]; }
  int rank() const { return static_cast<int>(shape.size()); }

  S* ptr() { return data.data(); }
  const S* ptr() const { return data.data(); }

  S& operator[](std::size_t i) { return data[i]; }
  const S& operator[](std::size_t i) const { return data[i]; }

  S& at2(int i, int j) {
    return data[static_cast<std::size_t>(i) * shape[1] + j];
  }
  const S& at2(int i, int j) const {
    return data[static_cast<std::size_t>(i) * shape[1] + j];
  }

  void fill(S v) { std::fill(data.begin(), data.end(), v); }

  bool operator==(const Tensor&) const = default;
};

template <typename S>
Tensor<S> zeros_like(const Tensor<S>& t) {
  return Tensor<S>(t.shape);
}

}  // namespace fontfactor
