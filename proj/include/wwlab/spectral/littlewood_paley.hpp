#pragma once

#include "wwlab/spectral/field.hpp"

namespace wwlab {

/// C-infinity step: 1 on [0, 3/4], 0 on [4/3, inf).
double lp_low_pass(double r) noexcept;
/// Annulus bump theta(r) = Theta(r/2) - Theta(r), supported in (3/4, 8/3).
double lp_bump(double r) noexcept;

struct LpSelector {
    enum class Kind { exactly, below, above, at_least };
    Kind kind;
    int j;

    static LpSelector P(int j) { return {Kind::exactly, j}; }
    static LpSelector below(int j) { return {Kind::below, j}; }
    static LpSelector above(int j) { return {Kind::above, j}; }
    static LpSelector at_least(int j) { return {Kind::at_least, j}; }
};

/// Dyadic decomposition restricted to the scales a grid resolves.
///
/// Active scales jmin..jmax are exactly those j for which theta(|xi|/2^j) is
/// nonzero on some lattice mode, so that sum_j P_j = 1 - (mean projector).
class LittlewoodPaleyBank {
public:
    explicit LittlewoodPaleyBank(const FourierGrid& grid);

    int jmin() const noexcept { return jmin_; }
    int jmax() const noexcept { return jmax_; }
    const FourierGrid& grid() const noexcept { return grid_; }

    double weight(const LpSelector& s, double abs_xi) const noexcept;
    SpectralField project(const SpectralField& f, const LpSelector& s) const;
    /// P_j for active j, and the mean projector for j == jmin - 1.
    SpectralField bucket(const SpectralField& f, int j) const;

private:
    FourierGrid grid_;
    int jmin_;
    int jmax_;
};

}  // namespace wwlab
