#pragma once

#include <concepts>
#include <span>
#include <vector>

#include "wwlab/spectral/grid.hpp"

namespace wwlab {

/// Complex field on a FourierGrid holding physical samples and Fourier
/// coefficients c_k with f(x) = sum_k c_k exp(i xi_k . x).
///
/// The Nyquist row and column of the coefficient array are always zero; a
/// field built from samples is projected accordingly.
class SpectralField {
public:
    explicit SpectralField(FourierGrid grid);

    static SpectralField from_values(FourierGrid grid, std::vector<cplx> values);
    static SpectralField from_real_values(FourierGrid grid, std::span<const double> values);
    static SpectralField from_coefficients(FourierGrid grid, std::vector<cplx> coefficients);
    /// e^{i xi_k . x} times amplitude, for integer wavenumber (k1, k2).
    static SpectralField plane_wave(FourierGrid grid, int k1, int k2, cplx amplitude = 1.0);

    template <class F>
        requires std::invocable<F, double, double>
    static SpectralField sample(FourierGrid grid, F&& f) {
        std::vector<cplx> v(grid.size());
        for (int i = 0; i < grid.n(); ++i)
            for (int j = 0; j < grid.n(); ++j) v[grid.flat(i, j)] = cplx(f(grid.x(i), grid.x(j)));
        return from_values(std::move(grid), std::move(v));
    }

    const FourierGrid& grid() const noexcept { return grid_; }
    std::span<const cplx> coefficients() const noexcept { return coeffs_; }
    std::span<const cplx> values() const noexcept { return values_; }
    cplx coefficient(int k1, int k2) const;
    cplx mean() const noexcept { return coeffs_[0]; }

    std::vector<double> real_values() const;
    double max_abs_imag() const noexcept;
    /// max_k |c_k - conj(c_{-k})|, zero for real fields.
    double hermitian_defect() const noexcept;

    SpectralField conj() const;
    SpectralField real_part() const;
    SpectralField imag_part() const;

    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(cplx s);
    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(cplx s, SpectralField a) { return a *= s; }
    friend SpectralField operator*(SpectralField a, cplx s) { return a *= s; }
    friend SpectralField operator-(SpectralField a) { return a *= -1.0; }

private:
    SpectralField(FourierGrid grid, std::vector<cplx> coeffs, std::vector<cplx> values);

    FourierGrid grid_;
    std::vector<cplx> coeffs_;
    std::vector<cplx> values_;
};

/// Coefficient/sample conversions following the SpectralField convention.
std::vector<cplx> to_coefficients(const FourierGrid& grid, std::span<const cplx> values);
std::vector<cplx> to_values(const FourierGrid& grid, std::span<const cplx> coefficients);

}  // namespace wwlab
