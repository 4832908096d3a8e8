#include "spincat/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>

namespace spincat {

namespace {
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Fft::Fft(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("Fft: size must be >= 2");
  std::lock_guard<std::mutex> lock(plan_mutex());
  buf_ = reinterpret_cast<std::complex<double>*>(fftw_malloc(sizeof(fftw_complex) * n));
  auto* b = reinterpret_cast<fftw_complex*>(buf_);
  plan_fwd_ = fftw_plan_dft_1d(n, b, b, FFTW_FORWARD, FFTW_ESTIMATE);
  plan_bwd_ = fftw_plan_dft_1d(n, b, b, FFTW_BACKWARD, FFTW_ESTIMATE);
  if (!plan_fwd_ || !plan_bwd_) throw std::runtime_error("Fft: planning failed");
}

Fft::~Fft() {
  std::lock_guard<std::mutex> lock(plan_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
  fftw_free(buf_);
}

void Fft::forward() { fftw_execute(static_cast<fftw_plan>(plan_fwd_)); }
void Fft::backward() { fftw_execute(static_cast<fftw_plan>(plan_bwd_)); }

void Fft::forward(std::complex<double>* data) {
  std::memcpy(buf_, data, sizeof(std::complex<double>) * n_);
  forward();
  std::memcpy(data, buf_, sizeof(std::complex<double>) * n_);
}

void Fft::backward(std::complex<double>* data) {
  std::memcpy(buf_, data, sizeof(std::complex<double>) * n_);
  backward();
  std::memcpy(data, buf_, sizeof(std::complex<double>) * n_);
}

std::shared_ptr<Fft> Fft::shared(int n) {
  thread_local std::map<int, std::shared_ptr<Fft>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::make_shared<Fft>(n)).first;
  return it->second;
}

}  // namespace spincat
