#include "wwlab/spectral/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace wwlab::fft {
namespace {

// Plans are created once per (n, sign) and executed through the new-array
// interface, which FFTW documents as thread-safe.
class PlanCache {
public:
    ~PlanCache() {
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }

    fftw_plan get(int n, int sign) {
        std::lock_guard lock(mutex_);
        const auto key = std::make_pair(n, sign);
        if (auto it = plans_.find(key); it != plans_.end()) return it->second;
        std::vector<std::complex<double>> a(static_cast<std::size_t>(n) * n), b(a.size());
        fftw_plan p = fftw_plan_dft_2d(n, n, reinterpret_cast<fftw_complex*>(a.data()),
                                       reinterpret_cast<fftw_complex*>(b.data()), sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (p == nullptr) throw std::runtime_error("FFTW plan creation failed");
        plans_.emplace(key, p);
        return p;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

void run(int n, int sign, std::span<const std::complex<double>> in, std::span<std::complex<double>> out) {
    const std::size_t total = static_cast<std::size_t>(n) * n;
    if (in.size() != total || out.size() != total) throw std::invalid_argument("fft: size mismatch");
    fftw_plan p = cache().get(n, sign);
    // Out-of-place complex transforms preserve their input.
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data())),
                     reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace

void forward(int n, std::span<const std::complex<double>> in, std::span<std::complex<double>> out) {
    run(n, FFTW_FORWARD, in, out);
}

void inverse(int n, std::span<const std::complex<double>> in, std::span<std::complex<double>> out) {
    run(n, FFTW_BACKWARD, in, out);
}

}  // namespace wwlab::fft
