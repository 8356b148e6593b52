#include "wwlab/spectral/grid.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "wwlab/errors.hpp"

namespace wwlab {

FourierGrid::FourierGrid(int n, double length) : n_(n), length_(length) {
    if (n < 8 || !std::has_single_bit(static_cast<unsigned>(n)))
        throw ConfigError("grid size must be a power of two >= 8, got " + std::to_string(n));
    if (!(length > 0.0) || !std::isfinite(length))
        throw ConfigError("box length must be positive and finite");

    auto t = std::make_shared<Tables>();
    const std::size_t total = size();
    t->kx.resize(total);
    t->ky.resize(total);
    t->kabs.resize(total);
    t->nyquist.resize(total);
    const double d = dk();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::size_t idx = flat(i, j);
            const int k1 = wavenumber(i), k2 = wavenumber(j);
            t->kx[idx] = d * k1;
            t->ky[idx] = d * k2;
            t->kabs[idx] = d * std::hypot(double(k1), double(k2));
            t->nyquist[idx] = (k1 == -n / 2 || k2 == -n / 2) ? 1 : 0;
        }
    }
    tables_ = std::move(t);
}

double FourierGrid::dk() const noexcept { return 2.0 * std::numbers::pi / length_; }

double FourierGrid::max_abs_xi() const noexcept {
    const double kmax = n_ / 2 - 1;
    return dk() * std::sqrt(2.0) * kmax;
}

FourierGrid make_grid(int n, double length) { return FourierGrid(n, length); }

void require_same_grid(const FourierGrid& a, const FourierGrid& b) {
    if (!(a == b)) throw GridMismatch("fields live on different grids");
}

}  // namespace wwlab
