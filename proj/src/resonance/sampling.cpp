#include "wwlab/resonance/resonance.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "wwlab/errors.hpp"

namespace wwlab {
namespace {

using Vec = Eigen::VectorXd;

double radical_inverse(std::size_t i, unsigned base) {
    double inv = 1.0 / base, f = inv, r = 0.0;
    while (i > 0) {
        r += f * static_cast<double>(i % base);
        i /= base;
        f *= inv;
    }
    return r;
}

// Halton points pushed through Box-Muller give a deterministic, evenly
// spread set of directions.
Vec sphere_seed(std::size_t index, int dim) {
    static constexpr unsigned primes[] = {2, 3, 5, 7, 11, 13};
    Vec g(dim);
    for (int k = 0; k < dim; k += 2) {
        const double u1 = radical_inverse(index + 1, primes[k]);
        const double u2 = radical_inverse(index + 1, primes[k + 1]);
        const double r = std::sqrt(-2.0 * std::log(u1));
        g[k] = r * std::cos(2.0 * std::numbers::pi * u2);
        g[k + 1] = r * std::sin(2.0 * std::numbers::pi * u2);
    }
    return g / g.norm();
}

Point to_point(const Vec& x) {
    Point p{{x[0], x[1]}, {x[2], x[3]}, {}};
    if (x.size() == 6) p.sigma = {x[4], x[5]};
    return p;
}

struct Problem {
    SignPattern pattern;
    ResonanceKind kind;
    double radius;
    double tol_phi;
    double tol_grad;

    int dim() const { return pattern.size() == 3 ? 6 : 4; }

    double phi(const Vec& x) const { return eval_phase(pattern, to_point(x)); }

    Vec spatial_gradient(const Vec& x) const {
        const Point p = to_point(x);
        const Vec2 ge = phase_gradient(pattern, Variable::eta, p);
        if (pattern.size() == 2) return Vec{{ge.x, ge.y}};
        const Vec2 gs = phase_gradient(pattern, Variable::sigma, p);
        return Vec{{ge.x, ge.y, gs.x, gs.y}};
    }

    Vec full_gradient(const Vec& x) const {
        const Point p = to_point(x);
        Vec g(dim());
        const Vec2 gx = phase_gradient(pattern, Variable::xi, p);
        const Vec2 ge = phase_gradient(pattern, Variable::eta, p);
        g << gx.x, gx.y, ge.x, ge.y, Vec::Zero(dim() - 4);
        if (dim() == 6) {
            const Vec2 gs = phase_gradient(pattern, Variable::sigma, p);
            g[4] = gs.x;
            g[5] = gs.y;
        }
        return g;
    }

    // Scaled residual whose zero set is the requested resonant set; entries
    // are divided by their thresholds so one norm serves every kind.
    Vec residual(const Vec& x) const {
        switch (kind) {
            case ResonanceKind::time: return Vec::Constant(1, phi(x) / tol_phi);
            case ResonanceKind::space: return spatial_gradient(x) / tol_grad;
            case ResonanceKind::spacetime: {
                const Vec g = spatial_gradient(x) / tol_grad;
                Vec r(g.size() + 1);
                r << phi(x) / tol_phi, g;
                return r;
            }
        }
        return {};
    }

    Eigen::MatrixXd jacobian(const Vec& x, const Vec& r0) const {
        if (kind == ResonanceKind::time) return full_gradient(x).transpose() / tol_phi;
        Eigen::MatrixXd J(r0.size(), dim());
        const double h = 1e-7 * radius;
        for (int c = 0; c < dim(); ++c) {
            Vec xp = x, xm = x;
            xp[c] += h;
            xm[c] -= h;
            J.col(c) = (residual(xp) - residual(xm)) / (2.0 * h);
        }
        return J;
    }

    bool accepted(const Vec& x) const {
        const bool t = std::abs(phi(x)) < tol_phi;
        if (kind == ResonanceKind::time) return t;
        if (kind == ResonanceKind::spacetime && !t) return false;
        return spatial_gradient(x).norm() < tol_grad;
    }
};

// Damped minimum-norm Gauss-Newton on the sphere of the problem radius.
bool project(const Problem& pb, Vec& x, int max_iterations) {
    auto renormalize = [&](Vec& v) { v *= pb.radius / v.norm(); };
    try {
        Vec r = pb.residual(x);
        double rn = r.norm();
        for (int it = 0; it < max_iterations && rn > 1e-2; ++it) {
            const Eigen::MatrixXd J = pb.jacobian(x, r);
            const Eigen::MatrixXd JJt = J * J.transpose();
            const Vec step = -J.transpose() * JJt.ldlt().solve(r);
            if (!step.allFinite()) return false;
            double lambda = 1.0;
            bool improved = false;
            for (int k = 0; k < 30; ++k, lambda *= 0.5) {
                Vec trial = x + lambda * step;
                renormalize(trial);
                const Vec rt = pb.residual(trial);
                if (rt.allFinite() && rt.norm() < rn) {
                    x = trial;
                    r = rt;
                    rn = rt.norm();
                    improved = true;
                    break;
                }
            }
            if (!improved) break;
        }
        return pb.accepted(x);
    } catch (const DomainError&) {
        // Landed exactly on a coordinate locus; keep the point only if it qualifies there.
        try {
            return pb.accepted(x);
        } catch (const DomainError&) {
            return false;
        }
    }
}

double safe_quadratic(QuadraticSymbol s, const Point& p) {
    try {
        return eval_quadratic_symbol(s, p.xi, p.eta);
    } catch (const DomainError&) {
        return std::nan("");
    }
}

double safe_grad_norm(const Problem& pb, const Vec& x) {
    try {
        return pb.spatial_gradient(x).norm();
    } catch (const DomainError&) {
        return std::numeric_limits<double>::infinity();
    }
}

}  // namespace

ResonanceKind parse_resonance_kind(std::string_view text) {
    if (text == "time") return ResonanceKind::time;
    if (text == "space") return ResonanceKind::space;
    if (text == "spacetime") return ResonanceKind::spacetime;
    throw ConfigError("unknown resonance kind: " + std::string(text));
}

std::string to_string(ResonanceKind k) {
    switch (k) {
        case ResonanceKind::time: return "time";
        case ResonanceKind::space: return "space";
        case ResonanceKind::spacetime: return "spacetime";
    }
    return "?";
}

Point ResonancePoint::point() const {
    Point p{{coords.at(0), coords.at(1)}, {coords.at(2), coords.at(3)}, {}};
    if (coords.size() == 6) p.sigma = {coords[4], coords[5]};
    return p;
}

ResonanceMap sample_resonant_set(const SignPattern& pattern, ResonanceKind kind, int resolution, double tol,
                                 const SamplingOptions& options) {
    if (resolution < 16) throw ConfigError("resolution must be at least 16");
    if (!(tol > 0.0)) throw ConfigError("tolerance must be positive");
    if (!(options.radius > 0.0)) throw ConfigError("sampling radius must be positive");

    // phi has degree 1/2 and its gradient degree -1/2.
    const Problem pb{pattern, kind, options.radius, tol * std::sqrt(options.radius), tol / std::sqrt(options.radius)};
    ResonanceMap map{pattern, kind, tol, {}};
    const std::size_t seeds = static_cast<std::size_t>(resolution) * resolution * resolution;
    for (std::size_t i = 0; i < seeds; ++i) {
        Vec x = sphere_seed(i, pb.dim()) * options.radius;
        if (!project(pb, x, options.max_iterations)) continue;
        const double grad = safe_grad_norm(pb, x);
        x /= options.radius;
        ResonancePoint rp;
        rp.coords.assign(x.data(), x.data() + x.size());
        const Point p = rp.point();
        rp.abs_phi = std::abs(eval_phase(pattern, p));
        rp.abs_grad_phi = grad * std::sqrt(options.radius);
        rp.m1 = safe_quadratic(QuadraticSymbol::m1, p);
        rp.m2 = safe_quadratic(QuadraticSymbol::m2, p);
        if (map.cubic()) {
            rp.m3 = eval_cubic_symbol(CubicSymbol::m3, p.xi, p.eta, p.sigma);
            rp.m4 = eval_cubic_symbol(CubicSymbol::m4, p.xi, p.eta, p.sigma);
        } else {
            rp.m3 = rp.m4 = std::nan("");
        }
        map.points.push_back(std::move(rp));
    }
    return map;
}

}  // namespace wwlab
