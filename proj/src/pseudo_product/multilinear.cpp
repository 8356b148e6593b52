#include <algorithm>
#include <cmath>

#include "wwlab/errors.hpp"
#include "wwlab/pseudo_product/pseudo_product.hpp"

namespace wwlab {
namespace {

struct IntVec {
    int a, b;
    bool zero() const { return a == 0 && b == 0; }
};

bool on_lattice_locus(const std::vector<Locus>& loci, IntVec xi, IntVec eta, IntVec sigma) {
    for (Locus l : loci) {
        switch (l) {
            case Locus::xi: if (xi.zero()) return true; break;
            case Locus::eta: if (eta.zero()) return true; break;
            case Locus::sigma: if (sigma.zero()) return true; break;
            case Locus::xi_minus_eta: if (xi.a == eta.a && xi.b == eta.b) return true; break;
            case Locus::zeta:
                if (xi.a - eta.a - sigma.a == 0 && xi.b - eta.b - sigma.b == 0) return true;
                break;
        }
    }
    return false;
}

int effective_band(int n, Dealias rule) { return band_limit(n, rule); }

cplx safe_eval(const BilinearSymbol& m, const Vec2& xi, const Vec2& eta) {
    try {
        return m(xi, eta);
    } catch (const DomainError&) {
        return 0.0;
    }
}

cplx safe_eval(const TrilinearSymbol& m, const Vec2& xi, const Vec2& eta, const Vec2& sigma) {
    try {
        return m(xi, eta, sigma);
    } catch (const DomainError&) {
        return 0.0;
    }
}

SpectralField factor(const SpectralField& f, const RadialFactor& a) {
    return apply_multiplier(f, [&](const Vec2& xi) { return a(xi); });
}

}  // namespace

BilinearOperator BilinearOperator::from(const SymbolDescriptor& d, Dealias rule) {
    if (d.arity() != 2) throw ConfigError("bilinear operator needs a bilinear symbol");
    return {[d](const Vec2& xi, const Vec2& eta) { return d(Point{xi, eta, {}}); }, d.singular_locus(), rule, kInf};
}

TrilinearOperator TrilinearOperator::from(const SymbolDescriptor& d, Dealias rule) {
    if (d.arity() != 3) throw ConfigError("trilinear operator needs a trilinear symbol");
    TrilinearOperator op;
    op.symbol = [d](const Vec2& xi, const Vec2& eta, const Vec2& sigma) { return d(Point{xi, eta, sigma}); };
    op.singular = d.singular_locus();
    op.rule = rule;
    return op;
}

SpectralField bilinear_apply(const BilinearOperator& op, const SpectralField& f, const SpectralField& g) {
    require_same_grid(f.grid(), g.grid());
    const auto& grid = f.grid();
    const int b = effective_band(grid.n(), op.rule);
    const double dk = grid.dk();
    const auto cf = f.coefficients();
    const auto cg = g.coefficients();
    std::vector<cplx> out(grid.size());
    for (int x1 = -b; x1 <= b; ++x1)
        for (int x2 = -b; x2 <= b; ++x2) {
            const Vec2 xi{dk * x1, dk * x2};
            cplx acc = 0.0;
            for (int e1 = std::max(-b, x1 - b); e1 <= std::min(b, x1 + b); ++e1)
                for (int e2 = std::max(-b, x2 - b); e2 <= std::min(b, x2 + b); ++e2) {
                    const cplx fe = cf[grid.flat_mode(e1, e2)];
                    if (fe == 0.0) continue;
                    const cplx gz = cg[grid.flat_mode(x1 - e1, x2 - e2)];
                    if (gz == 0.0) continue;
                    const Vec2 eta{dk * e1, dk * e2};
                    if (norm(eta) > op.truncation) continue;
                    if (on_lattice_locus(op.singular, {x1, x2}, {e1, e2}, {0, 0})) continue;
                    acc += safe_eval(op.symbol, xi, eta) * fe * gz;
                }
            out[grid.flat_mode(x1, x2)] = acc;
        }
    return SpectralField::from_coefficients(grid, std::move(out));
}

LatticeSymbol::LatticeSymbol(const BilinearOperator& op, const FourierGrid& grid)
    : grid_(grid), rule_(op.rule), band_(effective_band(grid.n(), op.rule)) {
    const int w = 2 * band_ + 1;
    const std::size_t modes = static_cast<std::size_t>(w) * w;
    table_.assign(modes * modes, 0.0);
    const double dk = grid.dk();
    for (int x1 = -band_; x1 <= band_; ++x1)
        for (int x2 = -band_; x2 <= band_; ++x2) {
            const std::size_t row = static_cast<std::size_t>((x1 + band_) * w + (x2 + band_)) * modes;
            for (int e1 = std::max(-band_, x1 - band_); e1 <= std::min(band_, x1 + band_); ++e1)
                for (int e2 = std::max(-band_, x2 - band_); e2 <= std::min(band_, x2 + band_); ++e2) {
                    const Vec2 eta{dk * e1, dk * e2};
                    if (norm(eta) > op.truncation) continue;
                    if (on_lattice_locus(op.singular, {x1, x2}, {e1, e2}, {0, 0})) continue;
                    table_[row + (e1 + band_) * w + (e2 + band_)] = safe_eval(op.symbol, {dk * x1, dk * x2}, eta);
                }
        }
}

cplx LatticeSymbol::at(int xi1, int xi2, int eta1, int eta2) const {
    const int b = band_, w = 2 * b + 1;
    if (std::abs(xi1) > b || std::abs(xi2) > b || std::abs(eta1) > b || std::abs(eta2) > b) return 0.0;
    const std::size_t modes = static_cast<std::size_t>(w) * w;
    return table_[static_cast<std::size_t>((xi1 + b) * w + (xi2 + b)) * modes + (eta1 + b) * w + (eta2 + b)];
}

SpectralField LatticeSymbol::apply(const SpectralField& f, const SpectralField& g) const {
    require_same_grid(f.grid(), grid_);
    require_same_grid(g.grid(), grid_);
    const int b = band_, w = 2 * b + 1;
    const std::size_t modes = static_cast<std::size_t>(w) * w;
    const auto cf = f.coefficients();
    const auto cg = g.coefficients();
    std::vector<cplx> out(grid_.size());
    for (int x1 = -b; x1 <= b; ++x1)
        for (int x2 = -b; x2 <= b; ++x2) {
            const cplx* row = table_.data() + static_cast<std::size_t>((x1 + b) * w + (x2 + b)) * modes;
            cplx acc = 0.0;
            for (int e1 = std::max(-b, x1 - b); e1 <= std::min(b, x1 + b); ++e1)
                for (int e2 = std::max(-b, x2 - b); e2 <= std::min(b, x2 + b); ++e2)
                    acc += row[(e1 + b) * w + (e2 + b)] * cf[grid_.flat_mode(e1, e2)] *
                           cg[grid_.flat_mode(x1 - e1, x2 - e2)];
            out[grid_.flat_mode(x1, x2)] = acc;
        }
    return SpectralField::from_coefficients(grid_, std::move(out));
}

SpectralField trilinear_apply(const TrilinearOperator& op, const SpectralField& f1, const SpectralField& f2,
                              const SpectralField& f3) {
    require_same_grid(f1.grid(), f2.grid());
    require_same_grid(f1.grid(), f3.grid());
    const auto& grid = f1.grid();

    if (op.separable) {
        const auto& s = *op.separable;
        const auto a = truncate(factor(f1, s.first), op.rule);
        const auto b = truncate(factor(f2, s.second), op.rule);
        const auto c = truncate(factor(f3, s.third), op.rule);
        return truncate(factor(multiply(multiply(a, b), c), s.out), op.rule);
    }
    if (grid.n() > kTrilinearSizeCap && !op.allow_large)
        throw CostGuardError("trilinear quadrature on n > 64 needs an explicit override");

    const int b = effective_band(grid.n(), op.rule);
    const double dk = grid.dk();
    const auto c1 = f1.coefficients();
    const auto c2 = f2.coefficients();
    const auto c3 = f3.coefficients();
    std::vector<cplx> out(grid.size());
    for (int x1 = -b; x1 <= b; ++x1)
        for (int x2 = -b; x2 <= b; ++x2) {
            const Vec2 xi{dk * x1, dk * x2};
            cplx acc = 0.0;
            for (int s1 = -b; s1 <= b; ++s1)
                for (int s2 = -b; s2 <= b; ++s2) {
                    const cplx a = c1[grid.flat_mode(s1, s2)];
                    if (a == 0.0) continue;
                    const Vec2 sigma{dk * s1, dk * s2};
                    if (norm(sigma) > op.truncation) continue;
                    // zeta = xi - eta - sigma must stay inside the band.
                    const int r1 = x1 - s1, r2 = x2 - s2;
                    for (int e1 = std::max(-b, r1 - b); e1 <= std::min(b, r1 + b); ++e1)
                        for (int e2 = std::max(-b, r2 - b); e2 <= std::min(b, r2 + b); ++e2) {
                            const cplx bb = c2[grid.flat_mode(e1, e2)];
                            if (bb == 0.0) continue;
                            const cplx cc = c3[grid.flat_mode(r1 - e1, r2 - e2)];
                            if (cc == 0.0) continue;
                            const Vec2 eta{dk * e1, dk * e2};
                            if (norm(eta) > op.truncation) continue;
                            if (on_lattice_locus(op.singular, {x1, x2}, {e1, e2}, {s1, s2})) continue;
                            acc += safe_eval(op.symbol, xi, eta, sigma) * a * bb * cc;
                        }
                }
            out[grid.flat_mode(x1, x2)] = acc;
        }
    return SpectralField::from_coefficients(grid, std::move(out));
}

}  // namespace wwlab
