#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "wwlab/vec2.hpp"

namespace wwlab {

using cplx = std::complex<double>;

/// Periodic n x n grid of period L with centered coordinates x_i = (i - n/2) L/n.
///
/// Storage is row-major, flat index = i * n + j, where i runs along x1. In
/// Fourier space the same index addresses the integer wavenumber
/// (k1, k2) = (wavenumber(i), wavenumber(j)) in [-n/2, n/2).
class FourierGrid {
public:
    FourierGrid(int n, double length);

    int n() const noexcept { return n_; }
    double length() const noexcept { return length_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(n_) * n_; }
    double dx() const noexcept { return length_ / n_; }
    double dk() const noexcept;
    double cell_area() const noexcept { return dx() * dx(); }

    int wavenumber(int i) const noexcept { return i < n_ / 2 ? i : i - n_; }
    int index_of(int k) const noexcept { return k >= 0 ? k : k + n_; }
    std::size_t flat(int i, int j) const noexcept { return static_cast<std::size_t>(i) * n_ + j; }
    std::size_t flat_mode(int k1, int k2) const noexcept { return flat(index_of(k1), index_of(k2)); }
    double x(int i) const noexcept { return (i - n_ / 2) * dx(); }

    Vec2 xi(std::size_t idx) const noexcept { return {tables_->kx[idx], tables_->ky[idx]}; }
    double abs_xi(std::size_t idx) const noexcept { return tables_->kabs[idx]; }
    bool nyquist(std::size_t idx) const noexcept { return tables_->nyquist[idx] != 0; }
    std::span<const double> abs_xi() const noexcept { return tables_->kabs; }

    /// Smallest nonzero lattice |xi|.
    double min_abs_xi() const noexcept { return dk(); }
    /// Largest |xi| over non-Nyquist modes.
    double max_abs_xi() const noexcept;

    friend bool operator==(const FourierGrid& a, const FourierGrid& b) noexcept {
        return a.n_ == b.n_ && a.length_ == b.length_;
    }

private:
    struct Tables {
        std::vector<double> kx, ky, kabs;
        std::vector<unsigned char> nyquist;
    };
    int n_;
    double length_;
    std::shared_ptr<const Tables> tables_;
};

FourierGrid make_grid(int n, double length);

/// Throws GridMismatch unless both grids are equal.
void require_same_grid(const FourierGrid& a, const FourierGrid& b);

}  // namespace wwlab
