#pragma once

#include <complex>
#include <memory>

namespace spincat {

// In-place complex FFT of fixed size backed by FFTW. Unnormalized: a
// forward+backward round trip multiplies by n; callers fold 1/n into their
// own phase factors. Plan creation/destruction is serialized internally
// (FFTW requirement); execution is on a per-instance buffer, so distinct
// instances are safe to use from distinct threads.
class Fft {
 public:
  explicit Fft(int n);
  ~Fft();
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  int size() const { return n_; }

  // Work buffer of size() complex doubles; transforms operate in place on it.
  std::complex<double>* buffer() { return buf_; }

  void forward();   // buffer <- FFT(buffer)
  void backward();  // buffer <- IFFT(buffer), unnormalized

  // Convenience: copies data through the buffer.
  void forward(std::complex<double>* data);
  void backward(std::complex<double>* data);

  // Thread-local plan cache keyed by size.
  static std::shared_ptr<Fft> shared(int n);

 private:
  int n_;
  std::complex<double>* buf_;
  void* plan_fwd_;
  void* plan_bwd_;
};

}  // namespace spincat
