#include "wwlab/spectral/operators.hpp"

#include <cmath>

#include "wwlab/errors.hpp"

namespace wwlab {

SpectralField radial_power(const SpectralField& f, double alpha) {
    if (alpha == 0.0) return f;
    const auto& g = f.grid();
    const auto r = g.abs_xi();
    std::vector<cplx> c(f.coefficients().begin(), f.coefficients().end());
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (r[k] == 0.0 || g.nyquist(k)) {
            c[k] = 0.0;
            continue;
        }
        const double w = alpha == 1.0 ? r[k] : alpha == 2.0 ? r[k] * r[k] : alpha == 0.5 ? std::sqrt(r[k]) : std::pow(r[k], alpha);
        c[k] *= w;
    }
    return SpectralField::from_coefficients(g, std::move(c));
}

SpectralField half_wave(const SpectralField& f, double t) {
    if (t == 0.0) return f;
    return apply_multiplier(f, [t](const Vec2& xi) { return std::polar(1.0, t * std::sqrt(norm(xi))); });
}

SpectralField partial(const SpectralField& f, int axis) {
    if (axis != 0 && axis != 1) throw ConfigError("axis must be 0 or 1");
    return partial(f, axis == 0 ? 1 : 0, axis == 1 ? 1 : 0);
}

SpectralField partial(const SpectralField& f, int a1, int a2) {
    if (a1 < 0 || a2 < 0) throw ConfigError("derivative orders must be nonnegative");
    return apply_multiplier(f, [a1, a2](const Vec2& xi) {
        return std::pow(cplx(0.0, xi.x), a1) * std::pow(cplx(0.0, xi.y), a2);
    });
}

int band_limit(int n, Dealias rule) noexcept {
    switch (rule) {
        case Dealias::two_thirds: return (n - 1) / 3;  // |k| < n/3
        case Dealias::half: return (n - 1) / 4;        // |k| < n/4
        case Dealias::none: break;
    }
    return n / 2 - 1;
}

bool in_band(int n, int k1, int k2, Dealias rule) noexcept {
    const int b = band_limit(n, rule);
    return std::abs(k1) <= b && std::abs(k2) <= b;
}

namespace {

// Zeroes out-of-band coefficients in place; returns true if any was nonzero.
bool clip_band(const FourierGrid& g, std::vector<cplx>& c, Dealias rule) {
    const int n = g.n();
    bool changed = false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto& v = c[g.flat(i, j)];
            if (v != 0.0 && !in_band(n, g.wavenumber(i), g.wavenumber(j), rule)) {
                v = 0.0;
                changed = true;
            }
        }
    return changed;
}

}  // namespace

SpectralField truncate(const SpectralField& f, Dealias rule) {
    const auto& g = f.grid();
    const int n = g.n();
    bool inside = true;
    for (int i = 0; i < n && inside; ++i)
        for (int j = 0; j < n; ++j)
            if (f.coefficients()[g.flat(i, j)] != 0.0 && !in_band(n, g.wavenumber(i), g.wavenumber(j), rule)) {
                inside = false;
                break;
            }
    if (inside) return f;
    std::vector<cplx> c(f.coefficients().begin(), f.coefficients().end());
    clip_band(g, c, rule);
    return SpectralField::from_coefficients(g, std::move(c));
}

SpectralField multiply(const SpectralField& a, const SpectralField& b) {
    require_same_grid(a.grid(), b.grid());
    std::vector<cplx> v(a.values().size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.values()[k] * b.values()[k];
    return SpectralField::from_values(a.grid(), std::move(v));
}

SpectralField multiply(const SpectralField& a, const SpectralField& b, Dealias rule) {
    if (rule == Dealias::none) return multiply(a, b);
    const auto ta = truncate(a, rule);
    const auto tb = truncate(b, rule);
    const auto& g = a.grid();
    std::vector<cplx> v(g.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = ta.values()[k] * tb.values()[k];
    auto c = to_coefficients(g, v);
    clip_band(g, c, rule);
    return SpectralField::from_coefficients(g, std::move(c));
}

std::vector<cplx> resample_coefficients(const FourierGrid& from, std::span<const cplx> c, const FourierGrid& to) {
    if (from.length() != to.length()) throw GridMismatch("resampling needs equal box lengths");
    std::vector<cplx> out(to.size());
    const int h = std::min(from.n(), to.n()) / 2;
    for (int k1 = -h + 1; k1 < h; ++k1)
        for (int k2 = -h + 1; k2 < h; ++k2) out[to.flat_mode(k1, k2)] = c[from.flat_mode(k1, k2)];
    return out;
}

SpectralField resample(const SpectralField& f, const FourierGrid& to) {
    return SpectralField::from_coefficients(to, resample_coefficients(f.grid(), f.coefficients(), to));
}

SpectralField multiply_exact(const SpectralField& a, const SpectralField& b) {
    require_same_grid(a.grid(), b.grid());
    const FourierGrid big(a.grid().n() * 2, a.grid().length());
    auto pa = resample(a, big);
    auto pb = resample(b, big);
    return resample(multiply(pa, pb), a.grid());
}

cplx inner_product(const SpectralField& a, const SpectralField& b) {
    require_same_grid(a.grid(), b.grid());
    cplx s = 0.0;
    for (std::size_t k = 0; k < a.coefficients().size(); ++k) s += a.coefficients()[k] * std::conj(b.coefficients()[k]);
    return s * a.grid().length() * a.grid().length();
}

}  // namespace wwlab
