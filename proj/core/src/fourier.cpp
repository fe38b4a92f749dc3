#include "tdpt/fourier.hpp"

#include <fftw3.h>

#include <mutex>

#include "tdpt/errors.hpp"

namespace tdpt {

namespace {
// FFTW's planner is not thread-safe; execution of existing plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

struct FourierTransform::Plans {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;

  ~Plans() {
    std::lock_guard lock(planner_mutex());
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
  }
};

FourierTransform::FourierTransform(std::size_t n) : n_(n), plans_(std::make_unique<Plans>()) {
  if (n == 0) throw UsageError("Fourier transform length must be positive");
  auto* buffer = fftw_alloc_complex(n);
  {
    std::lock_guard lock(planner_mutex());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    const int len = static_cast<int>(n);
    plans_->forward = fftw_plan_dft_1d(len, buffer, buffer, FFTW_FORWARD, flags);
    plans_->backward = fftw_plan_dft_1d(len, buffer, buffer, FFTW_BACKWARD, flags);
  }
  fftw_free(buffer);
  if (!plans_->forward || !plans_->backward) throw Error("FFTW plan creation failed");
}

FourierTransform::~FourierTransform() = default;
FourierTransform::FourierTransform(FourierTransform&&) noexcept = default;
FourierTransform& FourierTransform::operator=(FourierTransform&&) noexcept = default;

void FourierTransform::forward(std::span<Complex> data) const {
  if (data.size() != n_) throw UsageError("Fourier transform length mismatch");
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plans_->forward, p, p);
}

void FourierTransform::backward(std::span<Complex> data) const {
  if (data.size() != n_) throw UsageError("Fourier transform length mismatch");
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plans_->backward, p, p);
  const double scale = 1.0 / static_cast<double>(n_);
  for (auto& z : data) z *= scale;
}

}  // namespace tdpt
