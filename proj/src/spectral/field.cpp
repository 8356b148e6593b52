#include "wwlab/spectral/field.hpp"

#include <algorithm>
#include <cmath>

#include "wwlab/errors.hpp"
#include "wwlab/spectral/fft.hpp"

namespace wwlab {
namespace {

// Centered coordinates shift every coefficient by (-1)^(k1+k2).
inline double centering_sign(const FourierGrid& g, std::size_t idx) {
    const std::size_t n = static_cast<std::size_t>(g.n());
    return ((idx / n + idx % n) & 1U) ? -1.0 : 1.0;
}

void require_size(const FourierGrid& g, std::size_t s) {
    if (s != g.size()) throw GridMismatch("array size does not match grid");
}

}  // namespace

std::vector<cplx> to_coefficients(const FourierGrid& grid, std::span<const cplx> values) {
    require_size(grid, values.size());
    std::vector<cplx> c(grid.size());
    fft::forward(grid.n(), values, c);
    const double scale = 1.0 / static_cast<double>(grid.size());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = grid.nyquist(k) ? cplx{} : c[k] * (scale * centering_sign(grid, k));
    return c;
}

std::vector<cplx> to_values(const FourierGrid& grid, std::span<const cplx> coefficients) {
    require_size(grid, coefficients.size());
    std::vector<cplx> tmp(coefficients.begin(), coefficients.end());
    for (std::size_t k = 0; k < tmp.size(); ++k) tmp[k] *= centering_sign(grid, k);
    std::vector<cplx> v(grid.size());
    fft::inverse(grid.n(), tmp, v);
    return v;
}

SpectralField::SpectralField(FourierGrid grid)
    : grid_(std::move(grid)), coeffs_(grid_.size()), values_(grid_.size()) {}

SpectralField::SpectralField(FourierGrid grid, std::vector<cplx> coeffs, std::vector<cplx> values)
    : grid_(std::move(grid)), coeffs_(std::move(coeffs)), values_(std::move(values)) {}

SpectralField SpectralField::from_values(FourierGrid grid, std::vector<cplx> values) {
    auto c = to_coefficients(grid, values);
    return from_coefficients(std::move(grid), std::move(c));
}

SpectralField SpectralField::from_real_values(FourierGrid grid, std::span<const double> values) {
    std::vector<cplx> v(values.begin(), values.end());
    return from_values(std::move(grid), std::move(v));
}

SpectralField SpectralField::from_coefficients(FourierGrid grid, std::vector<cplx> coefficients) {
    require_size(grid, coefficients.size());
    for (std::size_t k = 0; k < coefficients.size(); ++k)
        if (grid.nyquist(k)) coefficients[k] = 0.0;
    auto v = to_values(grid, coefficients);
    return SpectralField(std::move(grid), std::move(coefficients), std::move(v));
}

SpectralField SpectralField::plane_wave(FourierGrid grid, int k1, int k2, cplx amplitude) {
    const int h = grid.n() / 2;
    if (k1 <= -h || k1 >= h || k2 <= -h || k2 >= h) throw DomainError("plane wave outside the resolved lattice");
    std::vector<cplx> c(grid.size());
    c[grid.flat_mode(k1, k2)] = amplitude;
    return from_coefficients(std::move(grid), std::move(c));
}

cplx SpectralField::coefficient(int k1, int k2) const {
    const int h = grid_.n() / 2;
    if (k1 < -h || k1 >= h || k2 < -h || k2 >= h) return 0.0;
    return coeffs_[grid_.flat_mode(k1, k2)];
}

std::vector<double> SpectralField::real_values() const {
    std::vector<double> r(values_.size());
    std::transform(values_.begin(), values_.end(), r.begin(), [](cplx z) { return z.real(); });
    return r;
}

double SpectralField::max_abs_imag() const noexcept {
    double m = 0.0;
    for (auto z : values_) m = std::max(m, std::abs(z.imag()));
    return m;
}

double SpectralField::hermitian_defect() const noexcept {
    const int n = grid_.n();
    double m = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int mi = (n - i) % n, mj = (n - j) % n;
            m = std::max(m, std::abs(coeffs_[grid_.flat(i, j)] - std::conj(coeffs_[grid_.flat(mi, mj)])));
        }
    return m;
}

SpectralField SpectralField::conj() const {
    std::vector<cplx> v(values_.size());
    std::transform(values_.begin(), values_.end(), v.begin(), [](cplx z) { return std::conj(z); });
    return from_values(grid_, std::move(v));
}

SpectralField SpectralField::real_part() const {
    std::vector<cplx> v(values_.size());
    std::transform(values_.begin(), values_.end(), v.begin(), [](cplx z) { return cplx(z.real()); });
    return from_values(grid_, std::move(v));
}

SpectralField SpectralField::imag_part() const {
    std::vector<cplx> v(values_.size());
    std::transform(values_.begin(), values_.end(), v.begin(), [](cplx z) { return cplx(z.imag()); });
    return from_values(grid_, std::move(v));
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    require_same_grid(grid_, o.grid_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] += o.coeffs_[k];
        values_[k] += o.values_[k];
    }
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
    require_same_grid(grid_, o.grid_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        coeffs_[k] -= o.coeffs_[k];
        values_[k] -= o.values_[k];
    }
    return *this;
}

SpectralField& SpectralField::operator*=(cplx s) {
    for (auto& c : coeffs_) c *= s;
    for (auto& v : values_) v *= s;
    return *this;
}

}  // namespace wwlab
