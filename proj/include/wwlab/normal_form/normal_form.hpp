#pragma once

#include <utility>

#include "wwlab/dno/dno.hpp"
#include "wwlab/pseudo_product/pseudo_product.hpp"
#include "wwlab/symbols/sign_pattern.hpp"

namespace wwlab {

/// Smooth step on [0, 1] with step(1 - s) = 1 - step(s).
double symmetric_step(double s) noexcept;

/// Degree-0 cutoff in the angle a = arctan(|eta| / |xi - eta|): 0 for a <= pi/8, 1 for a >= 3pi/8.
/// chi(xi, xi - eta) = 1 - chi(xi, eta).
double chi(const Vec2& xi, const Vec2& eta) noexcept;

/// (chi m, (1 - chi) m).
std::pair<BilinearSymbol, BilinearSymbol> chi_split(const BilinearSymbol& m);

enum class CutoffPiece { full, chi, complement };

/// sum_eta m(xi, eta) piece(xi, eta) f^(eta) f^(xi - eta) with the 2/3 rule.
SpectralField boundary_term(const SpectralField& f, const BilinearSymbol& m, CutoffPiece piece = CutoffPiece::full);

/// e^{i t phi(xi, eta)} m_l(xi, eta) / (i phi(xi, eta)).
BilinearSymbol boundary_symbol(int l, const SignPattern& pattern, double t);

/// g1 built from the profile of the state.
SpectralField quadratic_boundary_term(const SurfaceState& s, int l, const SignPattern& pattern,
                                      CutoffPiece piece = CutoffPiece::full);

struct WeakCubicChoice {
    /// mu = m_k / (i phi_quadratic) in (xi, eta).
    int k = 1;
    SignPattern quadratic{-1, -1};
    /// m_j evaluated at (xi - eta, sigma).
    int j = 1;
    SignPattern cubic{1, 1, 1};
};

/// e^{i s phi_cubic(xi, eta, sigma)} mu(xi, eta) m_j(xi - eta, sigma).
TrilinearSymbol weak_cubic_symbol(const WeakCubicChoice& c, double s);

struct WeakCubicSlice {
    SpectralField field;
    double l2;
    double linf;
    double h2;
};

/// One time slice of the weakly resonant cubic integrand. ConfigError for strongly resonant phases.
WeakCubicSlice weak_cubic_integrand(const SurfaceState& state, double s, const WeakCubicChoice& c,
                                    bool allow_large = false);

/// |1/phi| / (1 + sum_v |v|^{-1/2}) over v in {xi, eta, sigma, xi - eta - sigma}.
double inverse_phase_ratio(const SignPattern& pattern, const Point& p);

}  // namespace wwlab
