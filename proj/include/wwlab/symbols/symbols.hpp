#pragma once

#include <complex>

#include "wwlab/symbols/sign_pattern.hpp"
#include "wwlab/vec2.hpp"

namespace wwlab {

/// Fourier-space point. sigma is ignored by bilinear objects.
struct Point {
    Vec2 xi, eta, sigma;
};

enum class QuadraticSymbol { m1, m2 };
enum class CubicSymbol { m3, m4 };
enum class Variable { xi, eta, sigma };

/// Relative tolerance for singular-locus membership.
inline constexpr double kLocusTolerance = 1e-10;

/// |xi| + |eta| (+ |sigma| when cubic).
double point_scale(const Point& p, bool cubic);
/// True when |v| < kLocusTolerance * scale.
bool on_locus(const Vec2& v, double scale);

/// Throws DomainError on eta = 0 (both) and xi - eta = 0 (m2).
double eval_quadratic_symbol(QuadraticSymbol which, const Vec2& xi, const Vec2& eta);
double eval_cubic_symbol(CubicSymbol which, const Vec2& xi, const Vec2& eta, const Vec2& sigma);

/// |xi|^{1/2} + s1 |eta|^{1/2} + s2 |xi-eta|^{1/2}, or the four-term cubic phase with zeta = xi-eta-sigma.
double eval_phase(const SignPattern& pattern, const Point& p);
/// Analytic gradient in one variable; DomainError where it is singular.
Vec2 phase_gradient(const SignPattern& pattern, Variable v, const Point& p);

/// m_l / (i phi); DomainError on the symbol locus or where phi vanishes.
std::complex<double> normal_form_multiplier(int l, const SignPattern& pattern, const Vec2& xi, const Vec2& eta);

}  // namespace wwlab
