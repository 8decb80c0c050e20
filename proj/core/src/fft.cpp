#include "kgu/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <unordered_map>
#include <vector>

#include "kgu/error.hpp"

namespace kgu::fft {
namespace {

// The FFTW planner is not thread-safe; execution of an existing plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

class PlanCache {
 public:
  PlanCache() = default;
  PlanCache(const PlanCache&) = delete;
  PlanCache& operator=(const PlanCache&) = delete;

  ~PlanCache() {
    std::lock_guard lock(planner_mutex());
    for (auto& [n, p] : plans_) {
      fftw_destroy_plan(p.forward);
      fftw_destroy_plan(p.backward);
    }
  }

  const PlanPair& get(std::size_t n) {
    if (auto it = plans_.find(n); it != plans_.end()) return it->second;
    std::vector<fftw_complex> a(n), b(n);
    const int size = static_cast<int>(n);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    PlanPair p;
    {
      std::lock_guard lock(planner_mutex());
      p.forward = fftw_plan_dft_1d(size, a.data(), b.data(), FFTW_FORWARD, flags);
      p.backward = fftw_plan_dft_1d(size, a.data(), b.data(), FFTW_BACKWARD, flags);
    }
    if (p.forward == nullptr || p.backward == nullptr)
      throw Error(Errc::invalid_size, "cannot plan transform of size " + std::to_string(n));
    return plans_.emplace(n, p).first->second;
  }

 private:
  std::unordered_map<std::size_t, PlanPair> plans_;
};

PlanCache& cache() {
  thread_local PlanCache c;
  return c;
}

fftw_complex* raw(std::span<Complex> s) { return reinterpret_cast<fftw_complex*>(s.data()); }
fftw_complex* raw(std::span<const Complex> s) {
  return reinterpret_cast<fftw_complex*>(const_cast<Complex*>(s.data()));
}

void check(std::span<const Complex> in, std::span<Complex> out) {
  if (in.size() != out.size() || in.empty())
    throw Error(Errc::shape_mismatch, "transform input and output sizes differ");
}

}  // namespace

void forward(std::span<const Complex> in, std::span<Complex> out) {
  check(in, out);
  fftw_execute_dft(cache().get(in.size()).forward, raw(in), raw(out));
  const double scale = 1.0 / static_cast<double>(out.size());
  for (auto& x : out) x *= scale;
}

void backward(std::span<const Complex> in, std::span<Complex> out) {
  check(in, out);
  fftw_execute_dft(cache().get(in.size()).backward, raw(in), raw(out));
}

}  // namespace kgu::fft
