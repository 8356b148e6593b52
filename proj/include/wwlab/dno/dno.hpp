#pragma once

#include <ostream>
#include <vector>

#include "wwlab/spectral/field.hpp"
#include "wwlab/spectral/fit.hpp"
#include "wwlab/spectral/operators.hpp"

namespace wwlab {

/// Free surface elevation h and trace potential psi, both real.
struct SurfaceState {
    SpectralField h;
    SpectralField psi;
    double t = 2.0;
};

/// Throws ConfigError when h or psi carry an imaginary part above 1e-10.
void require_real_state(const SurfaceState& s);

enum class ProductRule { exact, two_thirds };

/// Truncated expansion of G(h)psi in powers of h; order in {1, 2, 3}.
SpectralField dno_series(const SurfaceState& s, int order, ProductRule rule = ProductRule::exact);

struct BieOptions {
    double tolerance = 1e-13;
    int max_iterations = 100;
    /// Highest n kept in sum_n K_n.
    int kernel_terms = 3;
    /// Highest m kept in the expansion of the normal-derivative kernel.
    int normal_terms = 3;
    /// Oversampling of the product grid.
    int padding = 2;
    /// Ceiling on the relative size of the last kept term of either expansion;
    /// NumericalAbort when exceeded.
    double quadrature_tolerance = 1e-6;
};

struct LayerDensity {
    SpectralField rho;
    int iterations = 0;
    double residual = 0.0;
    std::vector<double> history;
};

/// K_n(rho) = alpha_n Lambda int rho(y) (h(x) - h(y))^{2n} / |x - y|^{2n+1} dy, periodized.
SpectralField kn_apply(int n, const SpectralField& rho, const SpectralField& h);

/// Solves Lambda psi = rho + sum_n K_n(rho) by fixed-point iteration on the padded grid.
/// Throws ContractionFailure when the residual grows and NumericalAbort when the last
/// kept K_n exceeds the quadrature tolerance.
LayerDensity layer_density_solve(const SurfaceState& s, const BieOptions& opt = {});

struct EvalPoint {
    double x1, x2, z;
};

/// Single-layer potential (1/2pi) int rho(y) (|x-y|^2 + (z - h(y))^2)^{-1/2} dy.
/// Points within 1e-12 of the surface use the on-surface formula; points above throw DomainError.
std::vector<double> single_layer_eval(const LayerDensity& density, const SpectralField& h,
                                      const std::vector<EvalPoint>& points, const BieOptions& opt = {});
/// On-surface trace of the potential on the grid.
SpectralField single_layer_trace(const LayerDensity& density, const SpectralField& h, const BieOptions& opt = {});

/// G(h)psi from the layer density and the normal-derivative kernel.
SpectralField dno_bie(const SurfaceState& s, const BieOptions& opt = {});

struct DnoCompareRow {
    double epsilon;
    int order;
    double l2_err;
    double linf_err;
};

struct DnoCompareReport {
    std::vector<DnoCompareRow> rows;
    /// Fit of l2_err against epsilon.
    PowerFit fit;
};

/// Series of the given order against the layer oracle on the state eps * (h_shape, psi_shape).
DnoCompareReport dno_compare(const SpectralField& h_shape, const SpectralField& psi_shape, int order,
                             const std::vector<double>& epsilons, const BieOptions& opt = {});

void write_csv(std::ostream& os, const DnoCompareReport& report);

}  // namespace wwlab
