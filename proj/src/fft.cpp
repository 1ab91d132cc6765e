#include "fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <numbers>

#include "radwig/error.hpp"

namespace radwig::detail {

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// Owns one FFTW plan; created and destroyed under the planner mutex.
class Plan {
 public:
  Plan(std::span<std::complex<double>> data, FftDirection dir) {
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft_1d(static_cast<int>(data.size()), buf, buf,
                             dir == FftDirection::Forward ? FFTW_FORWARD : FFTW_BACKWARD,
                             FFTW_ESTIMATE);
    if (plan_ == nullptr) throw Error("FFTW planning failed");
  }
  ~Plan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;

  void execute() { fftw_execute(plan_); }

 private:
  fftw_plan plan_ = nullptr;
};

}  // namespace

void fft_inplace(std::span<std::complex<double>> data, FftDirection dir) {
  if (data.size() <= 1) return;
  Plan plan(data, dir);
  plan.execute();
}

std::vector<double> fft_wavenumbers(std::size_t n, double spacing) {
  std::vector<double> k(n);
  const double base = 2.0 * std::numbers::pi / (static_cast<double>(n) * spacing);
  for (std::size_t j = 0; j < n; ++j) {
    const long long signed_j =
        (j <= n / 2) ? static_cast<long long>(j) : static_cast<long long>(j) - static_cast<long long>(n);
    k[j] = base * static_cast<double>(signed_j);
  }
  return k;
}

}  // namespace radwig::detail
