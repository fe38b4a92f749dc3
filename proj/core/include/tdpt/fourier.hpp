#pragma once

#include <cstddef>
#include <memory>
#include <span>

#include "tdpt/grid.hpp"

namespace tdpt {

/// In-place 1-D complex DFT of fixed length. Thread-safe for concurrent execution.
class FourierTransform {
 public:
  explicit FourierTransform(std::size_t n);
  ~FourierTransform();
  FourierTransform(const FourierTransform&) = delete;
  FourierTransform& operator=(const FourierTransform&) = delete;
  FourierTransform(FourierTransform&&) noexcept;
  FourierTransform& operator=(FourierTransform&&) noexcept;

  std::size_t size() const noexcept { return n_; }

  /// X_k = sum_j x_j exp(-2 pi i j k / n), unnormalized.
  void forward(std::span<Complex> data) const;
  /// Inverse of forward, including the 1/n factor.
  void backward(std::span<Complex> data) const;

 private:
  struct Plans;
  std::size_t n_;
  std::unique_ptr<Plans> plans_;
};

}  // namespace tdpt
