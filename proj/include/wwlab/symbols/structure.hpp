#pragma once

#include <functional>
#include <vector>

#include "wwlab/spectral/fit.hpp"
#include "wwlab/symbols/descriptor.hpp"

namespace wwlab {

/// Family of points p(d) approaching a locus; d is the distance to it.
struct ApproachPath {
    std::function<Point(double)> at;
    int kmin = 4;
    int kmax = 20;

    /// (xi, d u): eta -> 0 with xi fixed.
    static ApproachPath eta_to_zero(const Vec2& xi, const Vec2& u);
    /// (eta + d u, eta): xi - eta -> 0.
    static ApproachPath xi_minus_eta_to_zero(const Vec2& eta, const Vec2& u);
    /// (d u, eta): xi -> 0 with eta fixed.
    static ApproachPath xi_to_zero(const Vec2& eta, const Vec2& u);
};

struct VanishingFit {
    std::vector<std::pair<double, double>> samples;  // (d, |value|)
    PowerFit fit;
};

/// Log-log slope of |symbol| against d = 2^{-k}, k = kmin..kmax.
VanishingFit vanishing_exponent(const SymbolDescriptor& symbol, const ApproachPath& path);

struct CatResidual {
    double residual = 0.0;        // RMS misfit after the least-squares fit
    double gradient_scale = 0.0;  // RMS of the xi-gradient over the cloud
    double distance = 0.0;        // |eta - xi| + |sigma - xi|
    bool in_regime = true;        // distance well below |xi|
};

/// Fits a constant 2x4 matrix A with d_xi phi = A (d_eta phi, d_sigma phi)
/// for phi_{--+} over the symmetric cloud (xi, xi + R a, xi + R' b), where
/// a = eta - xi, b = sigma - xi and R, R' run over quarter turns.
CatResidual cat_residual(const Vec2& xi, const Vec2& eta, const Vec2& sigma);

}  // namespace wwlab
