#pragma once

#include <concepts>

#include "wwlab/spectral/field.hpp"

namespace wwlab {

/// Fourier multiplier m(D); Nyquist modes are zeroed afterwards.
template <class M>
    requires std::invocable<M, const Vec2&>
SpectralField apply_multiplier(const SpectralField& f, M&& m) {
    const auto& g = f.grid();
    std::vector<cplx> c(f.coefficients().begin(), f.coefficients().end());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = g.nyquist(k) ? cplx{} : c[k] * cplx(m(g.xi(k)));
    return SpectralField::from_coefficients(g, std::move(c));
}

/// |D|^alpha; the zero mode is sent to 0 whenever alpha != 0.
SpectralField radial_power(const SpectralField& f, double alpha);
/// e^{i t |D|^{1/2}}.
SpectralField half_wave(const SpectralField& f, double t);
/// d/dx_axis, axis in {0, 1}.
SpectralField partial(const SpectralField& f, int axis);
/// Mixed derivative d^a1/dx1^a1 d^a2/dx2^a2.
SpectralField partial(const SpectralField& f, int a1, int a2);

enum class Dealias { none, two_thirds, half };

/// Largest admissible |k_i| (integer wavenumber) under a truncation rule.
int band_limit(int n, Dealias rule) noexcept;
bool in_band(int n, int k1, int k2, Dealias rule) noexcept;
/// Zero every coefficient outside the band.
SpectralField truncate(const SpectralField& f, Dealias rule);

/// Pointwise product of samples (aliased).
SpectralField multiply(const SpectralField& a, const SpectralField& b);
/// Band-truncated inputs, pointwise product, band-truncated output.
SpectralField multiply(const SpectralField& a, const SpectralField& b, Dealias rule);
/// Exact product projected onto the grid's lattice (computed on a 2x padded grid).
SpectralField multiply_exact(const SpectralField& a, const SpectralField& b);

/// Coefficients zero-padded (or truncated) onto an m x m lattice with the
/// same box; modes that do not exist on the target are dropped.
std::vector<cplx> resample_coefficients(const FourierGrid& from, std::span<const cplx> c, const FourierGrid& to);
SpectralField resample(const SpectralField& f, const FourierGrid& to);

/// Integral of a * conj(b) over the box, via Parseval.
cplx inner_product(const SpectralField& a, const SpectralField& b);

}  // namespace wwlab
