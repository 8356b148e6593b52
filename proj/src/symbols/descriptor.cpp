#include "wwlab/symbols/descriptor.hpp"

#include "wwlab/errors.hpp"

namespace wwlab {

Vec2 locus_vector(Locus l, const Point& p) {
    switch (l) {
        case Locus::xi: return p.xi;
        case Locus::eta: return p.eta;
        case Locus::sigma: return p.sigma;
        case Locus::xi_minus_eta: return p.xi - p.eta;
        case Locus::zeta: return p.xi - p.eta - p.sigma;
    }
    return {};
}

std::string locus_name(Locus l) {
    switch (l) {
        case Locus::xi: return "xi";
        case Locus::eta: return "eta";
        case Locus::sigma: return "sigma";
        case Locus::xi_minus_eta: return "xi-eta";
        case Locus::zeta: return "xi-eta-sigma";
    }
    return "?";
}

SymbolDescriptor::SymbolDescriptor(std::string name, int arity, double degree, std::vector<Locus> loci, Evaluator eval)
    : name_(std::move(name)), arity_(arity), degree_(degree), loci_(std::move(loci)), eval_(std::move(eval)) {
    if (arity_ != 2 && arity_ != 3) throw ConfigError("symbol arity must be 2 or 3");
}

bool SymbolDescriptor::on_singular_locus(const Point& p) const {
    const double scale = point_scale(p, arity_ == 3);
    for (Locus l : loci_)
        if (on_locus(locus_vector(l, p), scale)) return true;
    return false;
}

SymbolDescriptor SymbolDescriptor::m1() {
    return {"m1", 2, 1.5, {Locus::eta},
            [](const Point& p) { return std::complex<double>(eval_quadratic_symbol(QuadraticSymbol::m1, p.xi, p.eta)); }};
}

SymbolDescriptor SymbolDescriptor::m2() {
    return {"m2", 2, 1.5, {Locus::eta, Locus::xi_minus_eta},
            [](const Point& p) { return std::complex<double>(eval_quadratic_symbol(QuadraticSymbol::m2, p.xi, p.eta)); }};
}

SymbolDescriptor SymbolDescriptor::m3() {
    return {"m3", 3, 2.5, {},
            [](const Point& p) { return std::complex<double>(eval_cubic_symbol(CubicSymbol::m3, p.xi, p.eta, p.sigma)); }};
}

SymbolDescriptor SymbolDescriptor::m4() {
    return {"m4", 3, 2.5, {},
            [](const Point& p) { return std::complex<double>(eval_cubic_symbol(CubicSymbol::m4, p.xi, p.eta, p.sigma)); }};
}

SymbolDescriptor SymbolDescriptor::phase(const SignPattern& pattern) {
    const int arity = static_cast<int>(pattern.size());
    std::vector<Locus> loci = arity == 2 ? std::vector<Locus>{Locus::xi, Locus::eta, Locus::xi_minus_eta}
                                         : std::vector<Locus>{Locus::xi, Locus::eta, Locus::sigma, Locus::zeta};
    return {"phi" + pattern.str(), arity, 0.5, std::move(loci),
            [pattern](const Point& p) { return std::complex<double>(eval_phase(pattern, p)); }};
}

SymbolDescriptor SymbolDescriptor::nf_multiplier(int l, const SignPattern& pattern) {
    if (pattern.size() != 2) throw ConfigError("normal form multipliers take a quadratic pattern");
    if (l != 1 && l != 2) throw ConfigError("normal form multiplier index must be 1 or 2");
    std::vector<Locus> loci{Locus::eta};
    if (l == 2) loci.push_back(Locus::xi_minus_eta);
    return {"mu" + std::to_string(l) + pattern.str(), 2, 1.0, std::move(loci),
            [l, pattern](const Point& p) { return normal_form_multiplier(l, pattern, p.xi, p.eta); }};
}

}  // namespace wwlab
